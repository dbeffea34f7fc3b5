//! Binding-context monoids and the writer/environment structure on `W × A`.

use std::fmt;
use std::sync::Arc;

use crate::value::Value;

/// The registered monoids.
///
/// Each is a carrier tag together with its unit and multiplication; values of
/// the carrier are [`Value`]s of a fixed shape (see [`Monoid::contains`]).
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Monoid {
    /// Lists under concatenation, the free monoid on binder annotations.
    FreeList,
    /// Naturals under addition. Identifies `list 1` with `ℕ`.
    NatSum,
    /// Booleans under conjunction with unit `true`.
    All,
    /// Booleans under disjunction with unit `false`.
    Any,
    /// Finite sets of atoms under union.
    AtomSet,
}

impl Monoid {
    pub const ALL: [Monoid; 5] = [Monoid::FreeList, Monoid::NatSum, Monoid::All, Monoid::Any, Monoid::AtomSet];

    pub fn name(self) -> &'static str {
        match self {
            Monoid::FreeList => "list",
            Monoid::NatSum => "nat+",
            Monoid::All => "bool-and",
            Monoid::Any => "bool-or",
            Monoid::AtomSet => "atom-set",
        }
    }

    pub fn unit(self) -> Value {
        match self {
            Monoid::FreeList => Value::list(Vec::new()),
            Monoid::NatSum => Value::Nat(0),
            Monoid::All => Value::Bool(true),
            Monoid::Any => Value::Bool(false),
            Monoid::AtomSet => Value::set(std::iter::empty()),
        }
    }

    /// Monoid multiplication. Panics if either operand is outside the carrier.
    pub fn combine(self, a: &Value, b: &Value) -> Value {
        match (self, a, b) {
            (Monoid::FreeList, Value::List(x), Value::List(y)) => {
                if x.is_empty() {
                    return b.clone();
                }
                if y.is_empty() {
                    return a.clone();
                }
                let mut out = Vec::with_capacity(x.len() + y.len());
                out.extend(x.iter().cloned());
                out.extend(y.iter().cloned());
                Value::list(out)
            }
            (Monoid::NatSum, Value::Nat(x), Value::Nat(y)) => Value::Nat(x + y),
            (Monoid::All, Value::Bool(x), Value::Bool(y)) => Value::Bool(*x && *y),
            (Monoid::Any, Value::Bool(x), Value::Bool(y)) => Value::Bool(*x || *y),
            (Monoid::AtomSet, Value::Set(x), Value::Set(y)) => {
                if x.is_empty() {
                    return b.clone();
                }
                if y.is_empty() {
                    return a.clone();
                }
                Value::set(x.union(y).cloned())
            }
            _ => panic!("{a} or {b} is not in the carrier of monoid {}", self.name()),
        }
    }

    pub fn contains(self, v: &Value) -> bool {
        match (self, v) {
            (Monoid::FreeList, Value::List(_)) => true,
            (Monoid::NatSum, Value::Nat(_)) => true,
            (Monoid::All | Monoid::Any, Value::Bool(_)) => true,
            (Monoid::AtomSet, Value::Set(xs)) => xs.iter().all(|x| matches!(x, Value::Atom(_))),
            _ => false,
        }
    }

    pub fn concat<'a>(self, items: impl IntoIterator<Item = &'a Value>) -> Value {
        items.into_iter().fold(self.unit(), |acc, x| self.combine(&acc, x))
    }
}

impl fmt::Display for Monoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A map between monoid carriers that should preserve unit and multiplication.
///
/// Construction does not check the homomorphism laws; use [`MonoidHom::check`].
#[derive(Clone)]
pub struct MonoidHom {
    pub name: String,
    pub source: Monoid,
    pub target: Monoid,
    map: Arc<dyn Fn(&Value) -> Value + Send + Sync>,
}

impl fmt::Debug for MonoidHom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MonoidHom({}: {} -> {})", self.name, self.source, self.target)
    }
}

impl MonoidHom {
    pub fn new(
        name: impl Into<String>,
        source: Monoid,
        target: Monoid,
        map: impl Fn(&Value) -> Value + Send + Sync + 'static,
    ) -> Self {
        MonoidHom { name: name.into(), source, target, map: Arc::new(map) }
    }

    pub fn apply(&self, v: &Value) -> Value {
        (self.map)(v)
    }

    /// `length : list ⇒ (ℕ, +)`.
    pub fn length() -> Self {
        MonoidHom::new("length", Monoid::FreeList, Monoid::NatSum, |v| {
            Value::Nat(v.as_list().map_or(0, |xs| xs.len() as u64))
        })
    }

    /// `elements : list atom ⇒ (set atom, ∪)`.
    pub fn elements() -> Self {
        MonoidHom::new("elements", Monoid::FreeList, Monoid::AtomSet, |v| {
            Value::set(v.as_list().unwrap_or(&[]).iter().cloned())
        })
    }

    /// Checks unit preservation and, for each pair drawn from `samples`,
    /// multiplication preservation. Returns the first failing input.
    pub fn check(&self, samples: &[Value]) -> Result<(), String> {
        let u = self.apply(&self.source.unit());
        if u != self.target.unit() {
            return Err(format!("{} maps the unit to {u}", self.name));
        }
        for a in samples {
            for b in samples {
                let lhs = self.apply(&self.source.combine(a, b));
                let rhs = self.target.combine(&self.apply(a), &self.apply(b));
                if lhs != rhs {
                    return Err(format!("{}({a} . {b}) = {lhs} but {rhs} expected", self.name));
                }
            }
        }
        Ok(())
    }
}

/// An element of `W × A`: a payload together with its binding context.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Decorated<A> {
    pub ctx: Value,
    pub payload: A,
}

impl<A> Decorated<A> {
    pub fn new(ctx: Value, payload: A) -> Self {
        Decorated { ctx, payload }
    }
}

impl<A: fmt::Display> fmt::Display for Decorated<A> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.ctx, self.payload)
    }
}

/// Counit of the environment comonad: `extr (e, a) = a`.
pub fn env_extract<A>(p: Decorated<A>) -> A {
    p.payload
}

/// Comultiplication of the environment comonad: `dup (e, a) = (e, (e, a))`.
pub fn env_duplicate<A>(p: Decorated<A>) -> Decorated<Decorated<A>> {
    Decorated { ctx: p.ctx.clone(), payload: p }
}

/// Unit of the writer monad: `a ↦ (1_W, a)`.
pub fn writer_ret<A>(a: A, m: Monoid) -> Decorated<A> {
    Decorated { ctx: m.unit(), payload: a }
}

/// Multiplication of the writer monad: `(w1, (w2, a)) ↦ (w1 · w2, a)`.
pub fn writer_join<A>(p: Decorated<Decorated<A>>, m: Monoid) -> Decorated<A> {
    Decorated { ctx: m.combine(&p.ctx, &p.payload.ctx), payload: p.payload.payload }
}

/// `(g ⊙ w)(w2, b) = g(w · w2, b)`: shifts a context-reading function under `w`.
pub fn ctx_prepend<R>(g: impl Fn(&Value, &Value) -> R, w: Value, m: Monoid) -> impl Fn(&Value, &Value) -> R {
    move |w2, b| g(&m.combine(&w, w2), b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::value::Atom;
    use proptest::prelude::*;

    fn atom_list(names: &[&str]) -> Value {
        Value::list(names.iter().map(|n| Value::Atom(Atom::new(n))).collect())
    }

    fn sample(m: Monoid) -> impl Strategy<Value = Value> {
        match m {
            Monoid::FreeList => proptest::collection::vec(0..4u8, 0..4)
                .prop_map(|xs| Value::list(xs.into_iter().map(|i| Value::Atom(Atom::new(format!("a{i}")))).collect()))
                .boxed(),
            Monoid::NatSum => (0..50u64).prop_map(Value::Nat).boxed(),
            Monoid::All | Monoid::Any => any::<bool>().prop_map(Value::Bool).boxed(),
            Monoid::AtomSet => proptest::collection::btree_set(0..5u8, 0..4)
                .prop_map(|xs| Value::set(xs.into_iter().map(|i| Value::Atom(Atom::new(format!("a{i}"))))))
                .boxed(),
        }
    }

    fn any_triple() -> impl Strategy<Value = (Monoid, Value, Value, Value)> {
        proptest::strategy::Union::new(Monoid::ALL.map(|m| (Just(m), sample(m), sample(m), sample(m)).boxed()))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn monoid_laws((m, a, b, c) in any_triple()) {
            prop_assert!(m.contains(&a));
            prop_assert_eq!(m.combine(&m.unit(), &a), a.clone());
            prop_assert_eq!(m.combine(&a, &m.unit()), a.clone());
            prop_assert_eq!(
                m.combine(&m.combine(&a, &b), &c),
                m.combine(&a, &m.combine(&b, &c))
            );
        }

        #[test]
        fn writer_and_environment_laws(w1 in 0..20u64, w2 in 0..20u64, w3 in 0..20u64, a in any::<i32>()) {
            let m = Monoid::NatSum;
            let p = Decorated::new(Value::Nat(w1), a);
            // writer unit laws
            prop_assert_eq!(writer_join(writer_ret(p.clone(), m), m), p.clone());
            let mapped = Decorated::new(p.ctx.clone(), writer_ret(p.payload, m));
            prop_assert_eq!(writer_join(mapped, m), p.clone());
            // writer associativity on a triple nesting
            let nested = Decorated::new(Value::Nat(w1), Decorated::new(Value::Nat(w2), Decorated::new(Value::Nat(w3), a)));
            let inner_first = Decorated::new(nested.ctx.clone(), writer_join(nested.payload.clone(), m));
            prop_assert_eq!(writer_join(writer_join(nested.clone(), m), m), writer_join(inner_first, m));
            // environment comonad laws
            prop_assert_eq!(env_extract(env_duplicate(p.clone())), p.clone());
            let d = env_duplicate(p.clone());
            prop_assert_eq!(Decorated::new(d.ctx.clone(), env_extract(d.payload.clone())), p.clone());
            let dd = env_duplicate(env_duplicate(p.clone()));
            let d2 = env_duplicate(p.clone());
            let mapped_dup = Decorated::new(d2.ctx.clone(), env_duplicate(d2.payload));
            prop_assert_eq!(dd, mapped_dup);
        }

        #[test]
        fn ctx_prepend_composes(w1 in 0..10u64, w2 in 0..10u64, w in 0..10u64, leaf in 0..10u64) {
            let m = Monoid::NatSum;
            let g = |c: &Value, b: &Value| Value::pair(c.clone(), b.clone());
            let twice = ctx_prepend(ctx_prepend(g, Value::Nat(w1), m), Value::Nat(w2), m);
            let once = ctx_prepend(g, m.combine(&Value::Nat(w1), &Value::Nat(w2)), m);
            prop_assert_eq!(twice(&Value::Nat(w), &Value::Nat(leaf)), once(&Value::Nat(w), &Value::Nat(leaf)));
            let unit_shift = ctx_prepend(g, m.unit(), m);
            prop_assert_eq!(unit_shift(&Value::Nat(w), &Value::Nat(leaf)), g(&Value::Nat(w), &Value::Nat(leaf)));
        }
    }

    #[test]
    fn ctx_prepend_nesting_order_over_lists() {
        let m = Monoid::FreeList;
        let g = |c: &Value, _: &Value| c.clone();
        let w1 = atom_list(&["x"]);
        let w2 = atom_list(&["y"]);
        let nested = ctx_prepend(ctx_prepend(g, w1.clone(), m), w2.clone(), m);
        // the outer shift is applied first, so the inner prefix lands leftmost
        let expected = ctx_prepend(g, m.combine(&w1, &w2), m);
        let input = atom_list(&["z"]);
        assert_eq!(nested(&input, &Value::Unit), expected(&input, &Value::Unit));
        assert_eq!(nested(&input, &Value::Unit), atom_list(&["x", "y", "z"]));
    }

    #[test]
    fn operation_vectors() {
        let xy = atom_list(&["x", "y"]);
        assert_eq!(env_extract(Decorated::new(xy.clone(), "v")), "v");
        assert_eq!(env_extract(Decorated::new(Monoid::NatSum.unit(), 7)), 7);
        assert_eq!(env_extract(Decorated::new(Value::Nat(3), Value::fvar("a"))), Value::fvar("a"));

        let e = Value::Nat(4);
        let d = env_duplicate(Decorated::new(e.clone(), 'a'));
        assert_eq!(d, Decorated::new(e.clone(), Decorated::new(e, 'a')));

        assert_eq!(writer_ret('a', Monoid::FreeList), Decorated::new(Value::list(vec![]), 'a'));
        assert_eq!(writer_ret('a', Monoid::NatSum), Decorated::new(Value::Nat(0), 'a'));

        let b = atom_list(&["b"]);
        let p = Decorated::new(Value::list(vec![]), Decorated::new(b.clone(), 'a'));
        assert_eq!(writer_join(p, Monoid::FreeList), Decorated::new(b.clone(), 'a'));
        let p = Decorated::new(Value::Nat(2), Decorated::new(Value::Nat(3), 'a'));
        assert_eq!(writer_join(p, Monoid::NatSum), Decorated::new(Value::Nat(5), 'a'));

        let extract = |_: &Value, v: &Value| v.clone();
        let shifted = ctx_prepend(extract, b, Monoid::FreeList);
        assert_eq!(shifted(&atom_list(&["c"]), &Value::fvar("v")), Value::fvar("v"));
    }

    #[test]
    fn homomorphisms() {
        let lists: Vec<Value> =
            [&[][..], &["a"], &["a", "b"], &["b", "a", "a"]].iter().map(|xs| atom_list(xs)).collect();
        assert!(MonoidHom::length().check(&lists).is_ok());
        assert!(MonoidHom::elements().check(&lists).is_ok());
        assert_eq!(MonoidHom::length().apply(&atom_list(&["b1", "b2"])), Value::Nat(2));
        let off_by_one = MonoidHom::new("length+1", Monoid::FreeList, Monoid::NatSum, |v| {
            Value::Nat(v.as_list().unwrap().len() as u64 + 1)
        });
        assert!(off_by_one.check(&lists).is_err());
    }

    #[test]
    fn carrier_membership() {
        assert!(Monoid::AtomSet.contains(&Value::set([Value::Atom(Atom::new("x"))])));
        assert!(!Monoid::AtomSet.contains(&Value::set([Value::Nat(1)])));
        assert!(!Monoid::NatSum.contains(&Value::Bool(true)));
        assert_eq!(Monoid::NatSum.concat(&[Value::Nat(1), Value::Nat(2)]), Value::Nat(3));
    }
}
