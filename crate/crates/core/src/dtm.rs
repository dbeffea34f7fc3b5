//! Kleisli-presented decorated traversable monads.
//!
//! A [`Dtm`] is `ret` plus `binddt`; everything else is derived from these two.

use crate::applicative::{base_registry, morphism_registry, registry, Applicative, Morphism};
use crate::monoid::{ctx_prepend, Monoid};
use crate::report::{Counterexample, LawOutcome, LawReport};
use crate::sample::{self, Arrow, ArrowKind, SampleConfig, TermSampler};
use crate::value::{fingerprint, Value};

pub trait Dtm: Send + Sync {
    fn name(&self) -> String;

    /// The monoid `W` binding contexts live in.
    fn ctx_monoid(&self) -> Monoid;

    fn ret(&self, a: Value) -> Value;

    /// `binddt_F f t`, with `f : W × A → F (T B)` given curried on context and
    /// leaf. Effects are sequenced left to right.
    fn binddt(&self, app: &Applicative, f: &dyn Fn(&Value, &Value) -> Value, t: &Value) -> Value;
}

/// `map f = binddt_1 (ret ∘ f ∘ extr)`.
pub fn derived_map(dtm: &dyn Dtm, f: &dyn Fn(&Value) -> Value, t: &Value) -> Value {
    dtm.binddt(&Applicative::Identity, &|_, a| dtm.ret(f(a)), t)
}

/// `bind f = binddt_1 (f ∘ extr)`.
pub fn derived_bind(dtm: &dyn Dtm, f: &dyn Fn(&Value) -> Value, t: &Value) -> Value {
    dtm.binddt(&Applicative::Identity, &|_, a| f(a), t)
}

/// `dec = binddt_1 ret`: leaves become `(w, a)` pairs.
pub fn derived_dec(dtm: &dyn Dtm, t: &Value) -> Value {
    dtm.binddt(&Applicative::Identity, &|w, a| dtm.ret(Value::pair(w.clone(), a.clone())), t)
}

/// `join = binddt_1 extr`.
pub fn derived_join(dtm: &dyn Dtm, tt: &Value) -> Value {
    dtm.binddt(&Applicative::Identity, &|_, t| t.clone(), tt)
}

/// `dist_F = binddt_F (map_F ret ∘ extr)`.
pub fn derived_dist(dtm: &dyn Dtm, app: &Applicative, t: &Value) -> Value {
    dtm.binddt(app, &|_, fa| app.map(&|a| dtm.ret(a.clone()), fa), t)
}

/// Effectful map: `binddt_F (map_F ret ∘ f ∘ extr)`.
pub fn derived_traverse(dtm: &dyn Dtm, app: &Applicative, f: &dyn Fn(&Value) -> Value, t: &Value) -> Value {
    dtm.binddt(app, &|_, a| app.map(&|b| dtm.ret(b.clone()), &f(a)), t)
}

/// Context-aware map: `binddt_1 (ret ∘ f)`.
pub fn derived_fmapd(dtm: &dyn Dtm, f: &dyn Fn(&Value, &Value) -> Value, t: &Value) -> Value {
    dtm.binddt(&Applicative::Identity, &|w, a| dtm.ret(f(w, a)), t)
}

/// What the law suites quantify over.
#[derive(Clone)]
pub struct Registry {
    pub applicatives: Vec<Applicative>,
    /// `(F, G)` pairs for the composition laws.
    pub pairs: Vec<(Applicative, Applicative)>,
    pub morphisms: Vec<Morphism>,
}

impl Registry {
    pub fn standard() -> Self {
        let bases = base_registry();
        let pairs = bases.iter().flat_map(|f| bases.iter().map(move |g| (f.clone(), g.clone()))).collect();
        Registry { applicatives: registry(), pairs, morphisms: morphism_registry() }
    }
}

impl Default for Registry {
    fn default() -> Self {
        Registry::standard()
    }
}

/// Output trees of sampled arrows stay small.
pub(crate) const ARROW_DEPTH: usize = 3;

/// Term and arrow-output depth for checks involving a branching applicative,
/// whose result count is exponential in the number of leaves.
pub(crate) const BRANCHING_DEPTH: usize = 4;
pub(crate) const BRANCHING_ARROW_DEPTH: usize = 2;

/// Terms sampled at two sizes: the configured one and the branching cap.
pub(crate) struct SampledTerms {
    pub full: Value,
    pub small: Value,
}

impl SampledTerms {
    pub fn draw(sampler: &dyn TermSampler, rng: &mut rand_chacha::ChaCha8Rng, depth: usize) -> Self {
        let full = sampler.term(rng, depth);
        let small = sampler.term(rng, depth.min(BRANCHING_DEPTH));
        SampledTerms { full, small }
    }

    pub fn pick(&self, branches: bool) -> &Value {
        if branches {
            &self.small
        } else {
            &self.full
        }
    }
}

pub(crate) fn term_depth(branches: bool, depth: usize) -> usize {
    if branches {
        depth.min(BRANCHING_DEPTH)
    } else {
        depth
    }
}

pub(crate) fn arrow_depth(branches: bool) -> usize {
    if branches {
        BRANCHING_ARROW_DEPTH
    } else {
        ARROW_DEPTH
    }
}

pub(crate) fn arrow_seed(cfg: &SampleConfig, law: u64, i: usize, j: usize) -> u64 {
    fingerprint(cfg.seed ^ law, &[&Value::Nat(i as u64), &Value::Nat(j as u64)])
}

/// Checks `binddt-1` through `binddt-4` on sampled terms and arrows.
pub fn check_kleisli_dtm_laws(
    dtm: &dyn Dtm,
    sampler: &dyn TermSampler,
    registry: &Registry,
    cfg: &SampleConfig,
) -> LawReport {
    let mut rng = sample::rng(cfg.seed, 0xD7);
    let mut identity = LawOutcome::new("binddt-1");
    let mut unit = LawOutcome::new("binddt-2");
    let mut composition = LawOutcome::new("binddt-3");
    let mut naturality = LawOutcome::new("binddt-4");
    let m = dtm.ctx_monoid();

    for i in 0..cfg.samples {
        let terms = SampledTerms::draw(sampler, &mut rng, cfg.depth);
        let t = &terms.full;
        let kind = ArrowKind::nth(i);

        let lhs = dtm.binddt(&Applicative::Identity, &|_, a| dtm.ret(a.clone()), t);
        identity.compare(|| format!("t = {t}"), &lhs, t);

        let a = sampler.leaf(&mut rng);
        for (j, app) in registry.applicatives.iter().enumerate() {
            let f = Arrow::sample(dtm, sampler, app, kind, arrow_seed(cfg, 2, i, j), arrow_depth(app.branches()));
            let lhs = dtm.binddt(app, &|w, b| f.call(w, b), &dtm.ret(a.clone()));
            let rhs = f.call(&m.unit(), &a);
            unit.compare(|| format!("F = {app}, f = {}, a = {a}", f.name), &lhs, &rhs);
        }

        for (j, (outer, inner)) in registry.pairs.iter().enumerate() {
            let seed = arrow_seed(cfg, 3, i, j);
            let branches = outer.branches() || inner.branches();
            let t = terms.pick(branches);
            let f = Arrow::sample(dtm, sampler, outer, kind, seed, arrow_depth(branches));
            let g = Arrow::sample(
                dtm,
                sampler,
                inner,
                ArrowKind::nth(i / ArrowKind::ALL.len() + j),
                seed ^ 1,
                arrow_depth(branches),
            );
            let lhs = outer
                .map(&|tb| dtm.binddt(inner, &|w, b| g.call(w, b), tb), &dtm.binddt(outer, &|w, a| f.call(w, a), t));
            let fg = Applicative::compose(outer.clone(), inner.clone());
            let rhs = dtm.binddt(
                &fg,
                &|w, a| {
                    let shifted = ctx_prepend(|w2: &Value, b: &Value| g.call(w2, b), w.clone(), m);
                    outer.map(&|tb| dtm.binddt(inner, &shifted, tb), &f.call(w, a))
                },
                t,
            );
            composition.compare(
                || format!("F = {outer}, G = {inner}, f = {}, g = {}, t = {t}", f.name, g.name),
                &lhs,
                &rhs,
            );
        }

        for (j, phi) in registry.morphisms.iter().enumerate() {
            let branches = phi.source.branches() || phi.target.branches();
            let t = terms.pick(branches);
            let f = Arrow::sample(dtm, sampler, &phi.source, kind, arrow_seed(cfg, 4, i, j), arrow_depth(branches));
            let lhs = phi.apply(&dtm.binddt(&phi.source, &|w, a| f.call(w, a), t));
            let rhs = dtm.binddt(&phi.target, &|w, a| phi.apply(&f.call(w, a)), t);
            naturality.compare(|| format!("phi = {}, f = {}, t = {t}", phi.name, f.name), &lhs, &rhs);
        }
    }

    let mut report = LawReport::new(format!("kleisli {}", dtm.name()));
    for law in [identity, unit, composition, naturality] {
        report.push(law);
    }
    report
}

/// Checks the monad laws of `ret` and [`derived_bind`].
pub fn check_bind_laws(dtm: &dyn Dtm, sampler: &dyn TermSampler, cfg: &SampleConfig) -> LawReport {
    let mut rng = sample::rng(cfg.seed, 0xB1);
    let mut laws = [LawOutcome::new("bind-1"), LawOutcome::new("bind-2"), LawOutcome::new("bind-3")];
    let id = Applicative::Identity;
    for i in 0..cfg.samples {
        let t = sampler.term(&mut rng, cfg.depth);
        let a = sampler.leaf(&mut rng);
        let f = Arrow::sample(dtm, sampler, &id, ArrowKind::Table, arrow_seed(cfg, 5, i, 0), ARROW_DEPTH);
        let g = Arrow::sample(dtm, sampler, &id, ArrowKind::Table, arrow_seed(cfg, 5, i, 1), ARROW_DEPTH);
        let f = |v: &Value| f.call(&Value::Unit, v);
        let g = |v: &Value| g.call(&Value::Unit, v);

        let lhs = derived_bind(dtm, &|v| dtm.ret(v.clone()), &t);
        laws[0].compare(|| format!("t = {t}"), &lhs, &t);

        let lhs = derived_bind(dtm, &f, &dtm.ret(a.clone()));
        laws[1].compare(|| format!("a = {a}"), &lhs, &f(&a));

        let lhs = derived_bind(dtm, &g, &derived_bind(dtm, &f, &t));
        let rhs = derived_bind(dtm, &|v| derived_bind(dtm, &g, &f(v)), &t);
        laws[2].record(lhs == rhs, || Counterexample {
            inputs: format!("t = {t}"),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        });
    }
    let mut report = LawReport::new(format!("bind {}", dtm.name()));
    for law in laws {
        report.push(law);
    }
    report
}
