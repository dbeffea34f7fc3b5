//! Dynamically typed values.
//!
//! Every carrier the library manipulates generically (leaves, binding
//! contexts, applicative payloads, syntax trees) is represented as a
//! [`Value`]. Typed views such as [`crate::lambda::Term`] convert to and from
//! this representation at module boundaries.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};
use std::sync::Arc;

use crate::lambda::Term;

/// A name drawn from a countable set with decidable equality.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Atom(Arc<str>);

impl Atom {
    pub fn new(name: impl AsRef<str>) -> Self {
        Atom(Arc::from(name.as_ref()))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for Atom {
    fn from(s: &str) -> Self {
        Atom::new(s)
    }
}

static NEXT_FUNC_ID: AtomicU64 = AtomicU64::new(0);

/// A first-class unary function on values.
///
/// Functions only live inside applicative payloads while an idiomatic
/// application is being evaluated. Equality is identity: two `Func`s are equal
/// when they are clones of the same allocation.
#[derive(Clone)]
pub struct Func {
    id: u64,
    name: Arc<str>,
    body: Arc<dyn Fn(Value) -> Value + Send + Sync>,
}

impl Func {
    pub fn new(name: impl AsRef<str>, body: impl Fn(Value) -> Value + Send + Sync + 'static) -> Self {
        Func {
            id: NEXT_FUNC_ID.fetch_add(1, AtomicOrdering::Relaxed),
            name: Arc::from(name.as_ref()),
            body: Arc::new(body),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn call(&self, arg: Value) -> Value {
        (self.body)(arg)
    }
}

impl PartialEq for Func {
    fn eq(&self, other: &Self) -> bool {
        self.id == other.id
    }
}

impl Eq for Func {}

impl PartialOrd for Func {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Func {
    fn cmp(&self, other: &Self) -> Ordering {
        self.id.cmp(&other.id)
    }
}

impl Hash for Func {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.id.hash(state);
    }
}

impl fmt::Debug for Func {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<fn {}>", self.name)
    }
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Value {
    Unit,
    Bool(bool),
    Nat(u64),
    Atom(Atom),
    /// Free variable of the locally nameless encoding.
    Fvar(Atom),
    /// Bound variable (de Bruijn index) of the locally nameless encoding.
    Bvar(u64),
    /// A context paired with a payload: an element of `W × A`.
    Pair(Arc<Value>, Arc<Value>),
    List(Arc<Vec<Value>>),
    Set(Arc<BTreeSet<Value>>),
    Maybe(Option<Arc<Value>>),
    Term(Arc<Term<Value, Value>>),
    Func(Func),
}

impl Value {
    pub fn pair(ctx: Value, payload: Value) -> Value {
        Value::Pair(Arc::new(ctx), Arc::new(payload))
    }

    pub fn list(items: Vec<Value>) -> Value {
        Value::List(Arc::new(items))
    }

    pub fn set(items: impl IntoIterator<Item = Value>) -> Value {
        Value::Set(Arc::new(items.into_iter().collect()))
    }

    pub fn some(v: Value) -> Value {
        Value::Maybe(Some(Arc::new(v)))
    }

    pub fn none() -> Value {
        Value::Maybe(None)
    }

    pub fn term(t: Term<Value, Value>) -> Value {
        Value::Term(Arc::new(t))
    }

    pub fn fvar(name: &str) -> Value {
        Value::Fvar(Atom::new(name))
    }

    pub fn func(name: impl AsRef<str>, body: impl Fn(Value) -> Value + Send + Sync + 'static) -> Value {
        Value::Func(Func::new(name, body))
    }

    pub fn as_pair(&self) -> Option<(&Value, &Value)> {
        match self {
            Value::Pair(a, b) => Some((a, b)),
            _ => None,
        }
    }

    pub fn as_nat(&self) -> Option<u64> {
        match self {
            Value::Nat(n) => Some(*n),
            _ => None,
        }
    }

    pub fn as_bool(&self) -> Option<bool> {
        match self {
            Value::Bool(b) => Some(*b),
            _ => None,
        }
    }

    pub fn as_list(&self) -> Option<&[Value]> {
        match self {
            Value::List(xs) => Some(xs),
            _ => None,
        }
    }

    pub fn as_set(&self) -> Option<&BTreeSet<Value>> {
        match self {
            Value::Set(xs) => Some(xs),
            _ => None,
        }
    }

    pub fn as_term(&self) -> Option<&Term<Value, Value>> {
        match self {
            Value::Term(t) => Some(t),
            _ => None,
        }
    }

    /// Applies a function-valued payload.
    ///
    /// Panics when `self` is not a [`Value::Func`]; carriers are checked at the
    /// public boundary so reaching this with anything else is an internal bug.
    pub fn apply(&self, arg: Value) -> Value {
        match self {
            Value::Func(f) => f.call(arg),
            other => panic!("attempted to apply non-function value {other}"),
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Unit => f.write_str("*"),
            Value::Bool(b) => write!(f, "{b}"),
            Value::Nat(n) => write!(f, "{n}"),
            Value::Atom(a) => write!(f, "{a}"),
            Value::Fvar(a) => write!(f, "{a}"),
            Value::Bvar(n) => write!(f, "#{n}"),
            Value::Pair(w, a) => write!(f, "({w}, {a})"),
            Value::List(xs) => {
                f.write_str("[")?;
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str("]")
            }
            Value::Set(xs) => {
                f.write_str("{")?;
                for (i, x) in xs.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{x}")?;
                }
                f.write_str("}")
            }
            Value::Maybe(None) => f.write_str("none"),
            Value::Maybe(Some(v)) => write!(f, "some({v})"),
            Value::Term(t) => write!(f, "{{{t}}}"),
            Value::Func(func) => write!(f, "<fn {}>", func.name()),
        }
    }
}

/// Stable 64-bit fingerprint of a value, independent of the Rust toolchain.
///
/// Used to turn sampled inputs into deterministic table lookups.
pub fn fingerprint(seed: u64, parts: &[&Value]) -> u64 {
    const OFFSET: u64 = 0xcbf2_9ce4_8422_2325;
    const PRIME: u64 = 0x0000_0100_0000_01b3;
    let mut h = OFFSET ^ seed.wrapping_mul(PRIME);
    for part in parts {
        for b in part.to_string().bytes() {
            h ^= u64::from(b);
            h = h.wrapping_mul(PRIME);
        }
        h ^= 0xff;
        h = h.wrapping_mul(PRIME);
    }
    h
}
