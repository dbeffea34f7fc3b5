use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

use crate::monoid::Decorated;
use crate::value::{Atom, Value};

/// Raw lambda syntax with binder annotations `B` and leaves `V`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Term<B, V> {
    Var(V),
    App(Arc<Term<B, V>>, Arc<Term<B, V>>),
    Lam(B, Arc<Term<B, V>>),
}

/// A locally nameless leaf: a free atom or a de Bruijn index.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum LnVar {
    Fvar(Atom),
    Bvar(u64),
}

/// Locally nameless terms; binders carry no information.
pub type LnTerm = Term<(), LnVar>;
/// Named terms; each `Lam` records the atom it binds.
pub type NamedTerm = Term<Atom, Atom>;
/// The dynamically typed form consumed by the DTM interface.
pub type DynTerm = Term<Value, Value>;

impl<B, V> Term<B, V> {
    pub fn var(v: V) -> Self {
        Term::Var(v)
    }

    pub fn app(t1: Self, t2: Self) -> Self {
        Term::App(Arc::new(t1), Arc::new(t2))
    }

    pub fn lam(b: B, body: Self) -> Self {
        Term::Lam(b, Arc::new(body))
    }

    /// Height of the tree; a lone `Var` has depth 1.
    pub fn depth(&self) -> usize {
        match self {
            Term::Var(_) => 1,
            Term::App(a, b) => 1 + a.depth().max(b.depth()),
            Term::Lam(_, body) => 1 + body.depth(),
        }
    }

    pub fn size(&self) -> usize {
        match self {
            Term::Var(_) => 1,
            Term::App(a, b) => 1 + a.size() + b.size(),
            Term::Lam(_, body) => 1 + body.size(),
        }
    }

    /// Leaves in left-to-right order.
    pub fn leaves(&self) -> Vec<&V> {
        fn go<'a, B, V>(t: &'a Term<B, V>, out: &mut Vec<&'a V>) {
            match t {
                Term::Var(v) => out.push(v),
                Term::App(a, b) => {
                    go(a, out);
                    go(b, out);
                }
                Term::Lam(_, body) => go(body, out),
            }
        }
        let mut out = Vec::new();
        go(self, &mut out);
        out
    }
}

impl<B: Clone, V> Term<B, V> {
    pub fn map_leaves<W>(&self, f: &mut impl FnMut(&V) -> W) -> Term<B, W> {
        match self {
            Term::Var(v) => Term::Var(f(v)),
            Term::App(a, b) => {
                let a = a.map_leaves(f);
                Term::app(a, b.map_leaves(f))
            }
            Term::Lam(x, body) => Term::lam(x.clone(), body.map_leaves(f)),
        }
    }
}

impl<B, V> Term<B, V> {
    /// Relabels binders and leaves at once.
    pub fn relabel<C, W>(&self, binder: &mut impl FnMut(&B) -> C, leaf: &mut impl FnMut(&V) -> W) -> Term<C, W> {
        match self {
            Term::Var(v) => Term::Var(leaf(v)),
            Term::App(a, b) => {
                let a = a.relabel(binder, leaf);
                Term::app(a, b.relabel(binder, leaf))
            }
            Term::Lam(x, body) => Term::lam(binder(x), body.relabel(binder, leaf)),
        }
    }
}

impl LnTerm {
    pub fn fvar(name: &str) -> Self {
        Term::Var(LnVar::Fvar(Atom::new(name)))
    }

    pub fn bvar(n: u64) -> Self {
        Term::Var(LnVar::Bvar(n))
    }

    pub fn abs(body: Self) -> Self {
        Term::lam((), body)
    }

    pub fn free_atoms(&self) -> BTreeSet<Atom> {
        self.leaves()
            .into_iter()
            .filter_map(|v| match v {
                LnVar::Fvar(a) => Some(a.clone()),
                LnVar::Bvar(_) => None,
            })
            .collect()
    }
}

/// Conversion between typed leaves/binders and dynamic [`Value`]s.
pub trait Leaf: Sized {
    fn to_value(&self) -> Value;
    fn from_value(v: &Value) -> Option<Self>;
}

impl Leaf for () {
    fn to_value(&self) -> Value {
        Value::Unit
    }
    fn from_value(v: &Value) -> Option<Self> {
        matches!(v, Value::Unit).then_some(())
    }
}

impl Leaf for Atom {
    fn to_value(&self) -> Value {
        Value::Atom(self.clone())
    }
    fn from_value(v: &Value) -> Option<Self> {
        match v {
            Value::Atom(a) => Some(a.clone()),
            _ => None,
        }
    }
}

impl Leaf for u64 {
    fn to_value(&self) -> Value {
        Value::Nat(*self)
    }
    fn from_value(v: &Value) -> Option<Self> {
        v.as_nat()
    }
}

impl Leaf for bool {
    fn to_value(&self) -> Value {
        Value::Bool(*self)
    }
    fn from_value(v: &Value) -> Option<Self> {
        v.as_bool()
    }
}

impl Leaf for LnVar {
    fn to_value(&self) -> Value {
        match self {
            LnVar::Fvar(a) => Value::Fvar(a.clone()),
            LnVar::Bvar(n) => Value::Bvar(*n),
        }
    }
    fn from_value(v: &Value) -> Option<Self> {
        match v {
            Value::Fvar(a) => Some(LnVar::Fvar(a.clone())),
            Value::Bvar(n) => Some(LnVar::Bvar(*n)),
            _ => None,
        }
    }
}

impl Leaf for Value {
    fn to_value(&self) -> Value {
        self.clone()
    }
    fn from_value(v: &Value) -> Option<Self> {
        Some(v.clone())
    }
}

impl<A: Leaf> Leaf for Decorated<A> {
    fn to_value(&self) -> Value {
        Value::pair(self.ctx.clone(), self.payload.to_value())
    }
    fn from_value(v: &Value) -> Option<Self> {
        let (w, a) = v.as_pair()?;
        Some(Decorated::new(w.clone(), A::from_value(a)?))
    }
}

impl<B: Leaf, V: Leaf> Leaf for Term<B, V> {
    fn to_value(&self) -> Value {
        Value::term(self.to_dyn())
    }
    fn from_value(v: &Value) -> Option<Self> {
        Self::from_dyn(v.as_term()?)
    }
}

impl<B: Leaf, V: Leaf> Term<B, V> {
    pub fn to_dyn(&self) -> DynTerm {
        self.relabel(&mut |b| b.to_value(), &mut |v| v.to_value())
    }

    pub fn from_dyn(t: &DynTerm) -> Option<Self> {
        Some(match t {
            Term::Var(v) => Term::Var(V::from_value(v)?),
            Term::App(a, b) => Term::app(Self::from_dyn(a)?, Self::from_dyn(b)?),
            Term::Lam(x, body) => Term::lam(B::from_value(x)?, Self::from_dyn(body)?),
        })
    }
}

/// How a binder is written: `\ . ` when unlabeled, `\x. ` otherwise.
pub trait BinderLabel {
    fn label(&self) -> Option<String>;
}

impl BinderLabel for () {
    fn label(&self) -> Option<String> {
        None
    }
}

impl BinderLabel for Atom {
    fn label(&self) -> Option<String> {
        Some(self.to_string())
    }
}

impl BinderLabel for Value {
    fn label(&self) -> Option<String> {
        match self {
            Value::Unit => None,
            other => Some(other.to_string()),
        }
    }
}

impl fmt::Display for LnVar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LnVar::Fvar(a) => write!(f, "{a}"),
            LnVar::Bvar(n) => write!(f, "#{n}"),
        }
    }
}

// Canonical form: application is left-associative and a lambda body extends
// as far right as possible, so only non-final lambda arguments, lambda heads
// and application arguments need parentheses.
impl<B: BinderLabel, V: fmt::Display> fmt::Display for Term<B, V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => write!(f, "{v}"),
            Term::Lam(b, body) => {
                match b.label() {
                    Some(x) => write!(f, "\\{x}. ")?,
                    None => f.write_str("\\ . ")?,
                }
                write!(f, "{body}")
            }
            Term::App(..) => {
                let mut spine = Vec::new();
                let mut head = self;
                while let Term::App(a, b) = head {
                    spine.push(&**b);
                    head = a;
                }
                spine.reverse();
                match head {
                    Term::Lam(..) => write!(f, "({head})")?,
                    _ => write!(f, "{head}")?,
                }
                let last = spine.len() - 1;
                for (i, arg) in spine.into_iter().enumerate() {
                    match arg {
                        Term::App(..) => write!(f, " ({arg})")?,
                        Term::Lam(..) if i != last => write!(f, " ({arg})")?,
                        _ => write!(f, " {arg}")?,
                    }
                }
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn named(x: &str) -> NamedTerm {
        Term::var(Atom::new(x))
    }

    #[test]
    fn printing_conventions() {
        let abc = Term::app(Term::app(named("a"), named("b")), named("c"));
        assert_eq!(abc.to_string(), "a b c");
        let right = Term::app(named("a"), Term::app(named("b"), named("c")));
        assert_eq!(right.to_string(), "a (b c)");
        let lam = LnTerm::abs(Term::app(LnTerm::bvar(0), LnTerm::bvar(0)));
        assert_eq!(lam.to_string(), "\\ . #0 #0");
        let head = Term::app(lam.clone(), LnTerm::fvar("x"));
        assert_eq!(head.to_string(), "(\\ . #0 #0) x");
        let tail = Term::app(LnTerm::fvar("x"), lam.clone());
        assert_eq!(tail.to_string(), "x \\ . #0 #0");
        let mid = Term::app(tail, LnTerm::fvar("y"));
        assert_eq!(mid.to_string(), "x (\\ . #0 #0) y");
        let yx = Term::lam(Atom::new("x"), Term::lam(Atom::new("y"), Term::app(named("y"), named("x"))));
        assert_eq!(yx.to_string(), "\\x. \\y. y x");
    }

    #[test]
    fn dyn_roundtrip() {
        let t = LnTerm::abs(Term::app(LnTerm::bvar(0), LnTerm::fvar("a")));
        let d = t.to_dyn();
        assert_eq!(LnTerm::from_dyn(&d), Some(t.clone()));
        assert_eq!(NamedTerm::from_dyn(&d), None);
        assert_eq!(LnTerm::from_value(&t.to_value()), Some(t));
    }

    #[test]
    fn measures() {
        let t = LnTerm::abs(Term::app(LnTerm::bvar(0), LnTerm::fvar("a")));
        assert_eq!(t.depth(), 3);
        assert_eq!(t.size(), 4);
        assert_eq!(t.leaves().len(), 2);
        assert_eq!(t.free_atoms().into_iter().collect::<Vec<_>>(), vec![Atom::new("a")]);
        assert_eq!(LnTerm::bvar(2).depth(), 1);
    }
}
