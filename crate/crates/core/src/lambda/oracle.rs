//! Direct structural recursions, used as independent oracles for the generic
//! operations.

use std::collections::BTreeSet;

use super::term::{LnTerm, LnVar, NamedTerm, Term};
use crate::monoid::{Decorated, Monoid};
use crate::value::{Atom, Value};

/// Naive substitution: every leaf `v` replaced by `f(v)`.
pub fn bind_oracle<B: Clone, V, W>(f: &dyn Fn(&V) -> Term<B, W>, t: &Term<B, V>) -> Term<B, W> {
    match t {
        Term::Var(v) => f(v),
        Term::App(a, b) => Term::app(bind_oracle(f, a), bind_oracle(f, b)),
        Term::Lam(x, body) => Term::lam(x.clone(), bind_oracle(f, body)),
    }
}

/// Pairs each leaf with the product of the binder contributions above it.
pub fn dec_oracle<B: Clone, V: Clone>(
    t: &Term<B, V>,
    m: Monoid,
    binder: &dyn Fn(&B) -> Value,
) -> Term<B, Decorated<V>> {
    fn go<B: Clone, V: Clone>(
        t: &Term<B, V>,
        w: &Value,
        m: Monoid,
        binder: &dyn Fn(&B) -> Value,
    ) -> Term<B, Decorated<V>> {
        match t {
            Term::Var(v) => Term::Var(Decorated::new(w.clone(), v.clone())),
            Term::App(a, b) => Term::app(go(a, w, m, binder), go(b, w, m, binder)),
            Term::Lam(x, body) => Term::lam(x.clone(), go(body, &m.combine(w, &binder(x)), m, binder)),
        }
    }
    go(t, &m.unit(), m, binder)
}

/// Decoration by binder depth.
pub fn dec_ln(t: &LnTerm) -> Term<(), Decorated<LnVar>> {
    dec_oracle(t, Monoid::NatSum, &|_| Value::Nat(1))
}

/// Decoration by the list of binders in scope, outermost first.
pub fn dec_named(t: &NamedTerm) -> Term<Atom, Decorated<Atom>> {
    dec_oracle(t, Monoid::FreeList, &|b| Value::list(vec![Value::Atom(b.clone())]))
}

pub fn subst_oracle(x: &Atom, u: &LnTerm, t: &LnTerm) -> LnTerm {
    match t {
        Term::Var(LnVar::Fvar(y)) if y == x => u.clone(),
        Term::Var(_) => t.clone(),
        Term::App(a, b) => Term::app(subst_oracle(x, u, a), subst_oracle(x, u, b)),
        Term::Lam((), body) => LnTerm::abs(subst_oracle(x, u, body)),
    }
}

/// `open_n u t`: indices equal to the current depth `n` become `u`.
pub fn open_oracle(u: &LnTerm, t: &LnTerm) -> LnTerm {
    fn go(n: u64, u: &LnTerm, t: &LnTerm) -> LnTerm {
        match t {
            Term::Var(LnVar::Bvar(m)) if *m == n => u.clone(),
            Term::Var(_) => t.clone(),
            Term::App(a, b) => Term::app(go(n, u, a), go(n, u, b)),
            Term::Lam((), body) => LnTerm::abs(go(n + 1, u, body)),
        }
    }
    go(0, u, t)
}

/// `LC_n t`: every index points at an enclosing binder.
pub fn lc_oracle(t: &LnTerm) -> bool {
    fn go(n: u64, t: &LnTerm) -> bool {
        match t {
            Term::Var(LnVar::Fvar(_)) => true,
            Term::Var(LnVar::Bvar(m)) => *m < n,
            Term::App(a, b) => go(n, a) && go(n, b),
            Term::Lam((), body) => go(n + 1, body),
        }
    }
    go(0, t)
}

pub fn fv_oracle(t: &LnTerm) -> BTreeSet<Atom> {
    t.free_atoms()
}

pub fn leaf_count<B, V>(t: &Term<B, V>) -> u64 {
    t.leaves().len() as u64
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lambda::parse::{parse_ln, parse_named};

    fn d<V>(w: u64, v: V) -> Decorated<V> {
        Decorated::new(Value::Nat(w), v)
    }

    #[test]
    fn ln_decoration_vectors() {
        // λλ01 ↦ λλ(2,0)(2,1)
        let t = parse_ln("\\ . \\ . #0 #1").unwrap();
        let expected = LnTerm::abs(LnTerm::abs(Term::app(Term::Var(LnVar::Bvar(0)), Term::Var(LnVar::Bvar(1)))))
            .relabel(&mut |_| (), &mut |v: &LnVar| d(2, v.clone()));
        assert_eq!(dec_ln(&t), expected);

        // (λ0)(λλ1) ↦ (λ(1,0))(λλ(2,1))
        let t = parse_ln("(\\ . #0) (\\ . \\ . #1)").unwrap();
        let expected = Term::app(
            Term::lam((), Term::Var(d(1, LnVar::Bvar(0)))),
            Term::lam((), Term::lam((), Term::Var(d(2, LnVar::Bvar(1))))),
        );
        assert_eq!(dec_ln(&t), expected);
    }

    #[test]
    fn named_decoration_vectors() {
        let ctx = |names: &[&str]| Value::list(names.iter().map(|n| Value::Atom(Atom::new(n))).collect());
        let leaf = |names: &[&str], v: &str| Term::Var(Decorated::new(ctx(names), Atom::new(v)));

        // λx.λy.yx ↦ λx.λy.([x,y],y)([x,y],x)
        let t = parse_named("\\x. \\y. y x").unwrap();
        let expected = Term::lam(
            Atom::new("x"),
            Term::lam(Atom::new("y"), Term::app(leaf(&["x", "y"], "y"), leaf(&["x", "y"], "x"))),
        );
        assert_eq!(dec_named(&t), expected);

        // (λx. y λy. z) ↦ (λx.([x],y) λy.([x,y],z))
        let t = parse_named("\\x. y \\y. z").unwrap();
        let expected =
            Term::lam(Atom::new("x"), Term::app(leaf(&["x"], "y"), Term::lam(Atom::new("y"), leaf(&["x", "y"], "z"))));
        assert_eq!(dec_named(&t), expected);
    }

    #[test]
    fn bind_clauses() {
        let t = parse_ln("\\ . a #0").unwrap();
        let f = |v: &LnVar| match v {
            LnVar::Fvar(_) => parse_ln("b c").unwrap(),
            LnVar::Bvar(_) => Term::Var(v.clone()),
        };
        assert_eq!(bind_oracle(&f, &t), parse_ln("\\ . (b c) #0").unwrap());
        assert_eq!(bind_oracle(&f, &LnTerm::fvar("a")), parse_ln("b c").unwrap());
    }

    #[test]
    fn ln_operation_vectors() {
        let a = LnTerm::fvar("a");
        assert_eq!(open_oracle(&a, &LnTerm::bvar(0)), a);
        let t = parse_ln("\\ . #1 #0").unwrap();
        assert_eq!(open_oracle(&a, &t), parse_ln("\\ . a #0").unwrap());
        assert!(!lc_oracle(&parse_ln("\\ . #0 #1").unwrap()));
        assert!(lc_oracle(&parse_ln("\\ . \\ . #1 #0 z").unwrap()));
        assert!(lc_oracle(&a));
        assert_eq!(fv_oracle(&parse_ln("\\ . \\ . #1 #0 z").unwrap()), [Atom::new("z")].into());
        let x = Atom::new("x");
        assert_eq!(subst_oracle(&x, &a, &LnTerm::fvar("x")), a);
        assert_eq!(subst_oracle(&x, &a, &parse_ln("\\ . x y").unwrap()), parse_ln("\\ . a y").unwrap());
        assert_eq!(leaf_count(&parse_ln("\\ . #0 #1").unwrap()), 2);
    }
}
