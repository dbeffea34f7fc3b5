//! Locally nameless operations, written once against any [`Dtm`] whose leaves
//! are free atoms or indices and whose contexts are binder depths.

use std::collections::{BTreeMap, BTreeSet};

use crate::applicative::Applicative;
use crate::dtm::{derived_bind, Dtm};
use crate::lambda::{LambdaDtm, Leaf, LnTerm};
use crate::monoid::Monoid;
use crate::report::LawOutcome;
use crate::report::LawReport;
use crate::sample::{self, pool_atom, SampleConfig, TermSampler};
use crate::value::{Atom, Value};

fn depth(w: &Value) -> u64 {
    w.as_nat().unwrap_or_else(|| panic!("expected a binder depth, got {w}"))
}

/// `u` if `v` is `fvar x`, otherwise `ret v`.
pub fn subst_loc(dtm: &dyn Dtm, x: &Atom, u: &Value, v: &Value) -> Value {
    match v {
        Value::Fvar(y) if y == x => u.clone(),
        _ => dtm.ret(v.clone()),
    }
}

/// `t[x ↦ u]`.
pub fn subst(dtm: &dyn Dtm, x: &Atom, u: &Value, t: &Value) -> Value {
    derived_bind(dtm, &|v| subst_loc(dtm, x, u, v), t)
}

/// A finite substitution; atoms outside the domain map to themselves.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SubstMap(BTreeMap<Atom, Value>);

impl SubstMap {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, x: Atom, u: Value) -> &mut Self {
        self.0.insert(x, u);
        self
    }

    pub fn get(&self, x: &Atom) -> Option<&Value> {
        self.0.get(x)
    }
}

impl FromIterator<(Atom, Value)> for SubstMap {
    fn from_iter<I: IntoIterator<Item = (Atom, Value)>>(iter: I) -> Self {
        SubstMap(iter.into_iter().collect())
    }
}

/// Parallel substitution in one pass.
pub fn msubst(dtm: &dyn Dtm, sigma: &SubstMap, t: &Value) -> Value {
    derived_bind(
        dtm,
        &|v| match v {
            Value::Fvar(a) => sigma.get(a).cloned().unwrap_or_else(|| dtm.ret(v.clone())),
            _ => dtm.ret(v.clone()),
        },
        t,
    )
}

/// `u` at an index pointing at the removed outermost binder, `ret v` otherwise.
pub fn open_loc(dtm: &dyn Dtm, u: &Value, w: &Value, v: &Value) -> Value {
    match v {
        Value::Bvar(m) if *m == depth(w) => u.clone(),
        _ => dtm.ret(v.clone()),
    }
}

/// Replaces the indices bound by the removed outermost binder with `u`.
/// `u` is inserted as is; indices inside it are not shifted.
pub fn open(dtm: &dyn Dtm, u: &Value, t: &Value) -> Value {
    dtm.binddt(&Applicative::Identity, &|w, v| open_loc(dtm, u, w, v), t)
}

/// False exactly for an index at or beyond the binder depth.
pub fn lc_loc(w: &Value, v: &Value) -> bool {
    match v {
        Value::Bvar(m) => *m < depth(w),
        _ => true,
    }
}

/// Local closure: a traversal into `Const(bool, ∧)`.
pub fn lc(dtm: &dyn Dtm, t: &Value) -> bool {
    let verdict = dtm.binddt(&Applicative::Const(Monoid::All), &|w, v| Value::Bool(lc_loc(w, v)), t);
    verdict.as_bool().expect("Const(bool-and) yields a boolean")
}

/// Free atoms: a traversal into `Const(set of atoms, ∪)`.
pub fn fv(dtm: &dyn Dtm, t: &Value) -> BTreeSet<Atom> {
    let found = dtm.binddt(
        &Applicative::Const(Monoid::AtomSet),
        &|_, v| match v {
            Value::Fvar(a) => Value::set([Value::Atom(a.clone())]),
            _ => Value::set([]),
        },
        t,
    );
    found
        .as_set()
        .expect("Const(atom-set) yields a set")
        .iter()
        .map(|a| match a {
            Value::Atom(a) => a.clone(),
            other => panic!("non-atom {other} in free variable set"),
        })
        .collect()
}

/// The first of `a, b, …, z, a1, …, z1, a2, …` not in `avoid`.
pub fn fresh(avoid: &BTreeSet<Atom>) -> Atom {
    (0u64..)
        .flat_map(|round| ('a'..='z').map(move |c| if round == 0 { c.to_string() } else { format!("{c}{round}") }))
        .map(Atom::new)
        .find(|a| !avoid.contains(a))
        .expect("the name supply is infinite")
}

fn typed(v: Value) -> LnTerm {
    LnTerm::from_value(&v).expect("locally nameless term")
}

/// [`subst`] on the lambda instance.
pub fn subst_term(x: &Atom, u: &LnTerm, t: &LnTerm) -> LnTerm {
    typed(subst(&LambdaDtm::ln(), x, &u.to_value(), &t.to_value()))
}

/// [`open`] on the lambda instance.
pub fn open_term(u: &LnTerm, t: &LnTerm) -> LnTerm {
    typed(open(&LambdaDtm::ln(), &u.to_value(), &t.to_value()))
}

/// [`lc`] on the lambda instance.
pub fn lc_term(t: &LnTerm) -> bool {
    lc(&LambdaDtm::ln(), &t.to_value())
}

/// [`fv`] on the lambda instance.
pub fn fv_term(t: &LnTerm) -> BTreeSet<Atom> {
    fv(&LambdaDtm::ln(), &t.to_value())
}

fn distinct_atoms(rng: &mut rand_chacha::ChaCha8Rng) -> (Atom, Atom) {
    let x = pool_atom(rng);
    loop {
        let y = pool_atom(rng);
        if y != x {
            return (x, y);
        }
    }
}

/// Checks the substitution lemmas on sampled terms:
/// `x[x↦t] = t`, `t[x↦x] = t`, the sequential-versus-parallel equation for
/// `x ≠ y`, and `t[x↦u] = t` when `x` is not free in `t`.
pub fn check_subst_lemmas(dtm: &dyn Dtm, sampler: &dyn TermSampler, cfg: &SampleConfig) -> LawReport {
    let mut rng = sample::rng(cfg.seed, 0x5B);
    let mut self_law = LawOutcome::new("subst-var");
    let mut identity = LawOutcome::new("subst-id");
    let mut compose = LawOutcome::new("subst-compose");
    let mut fresh_law = LawOutcome::new("subst-fresh");
    let small = 3.min(cfg.depth);

    for _ in 0..cfg.samples {
        let t = sampler.term(&mut rng, cfg.depth);
        let (x, y) = distinct_atoms(&mut rng);
        let vx = dtm.ret(Value::Fvar(x.clone()));

        self_law.compare(|| format!("x = {x}, t = {t}"), &subst(dtm, &x, &t, &vx), &t);
        identity.compare(|| format!("x = {x}, t = {t}"), &subst(dtm, &x, &vx, &t), &t);

        let u1 = sampler.term(&mut rng, small);
        let u2 = sampler.term(&mut rng, small);
        let lhs = subst(dtm, &y, &u2, &subst(dtm, &x, &u1, &t));
        let sigma: SubstMap = [(x.clone(), subst(dtm, &y, &u2, &u1)), (y.clone(), u2.clone())].into_iter().collect();
        let rhs = msubst(dtm, &sigma, &t);
        compose.compare(|| format!("x = {x}, y = {y}, u1 = {u1}, u2 = {u2}, t = {t}"), &lhs, &rhs);

        let free = fv(dtm, &t);
        let z = fresh(&free);
        fresh_law.compare(|| format!("x = {z}, u = {u1}, t = {t}"), &subst(dtm, &z, &u1, &t), &t);
        if !free.contains(&x) {
            fresh_law.compare(|| format!("x = {x}, u = {u1}, t = {t}"), &subst(dtm, &x, &u1, &t), &t);
        }
    }

    let mut report = LawReport::new(format!("subst {}", dtm.name()));
    for law in [self_law, identity, compose, fresh_law] {
        report.push(law);
    }
    report
}
