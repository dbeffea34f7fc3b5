//! The categorical presentation (`map`, `join`, `dec`, `dist`) and its
//! translations to and from `binddt`.

use crate::applicative::{check_applicative_laws, check_morphism_laws, dist_compose_bases, Applicative};
use crate::dtm::{arrow_depth, arrow_seed, term_depth, Dtm, Registry, SampledTerms};

/// Depth of `dist` inputs over a branching applicative. An instance that
/// repeats effects multiplies branches per visit, so these stay shallow.
const BRANCHING_DIST_DEPTH: usize = 3;

fn dist_depth(branches: bool, depth: usize) -> usize {
    if branches {
        depth.min(BRANCHING_DIST_DEPTH)
    } else {
        depth
    }
}
use crate::monoid::Monoid;
use crate::report::{LawOutcome, LawReport};
use crate::sample::{self, Arrow, ArrowKind, SampleConfig, TermSampler};
use crate::value::{fingerprint, Value};

pub trait CategoricalDtm: Send + Sync {
    fn name(&self) -> String;
    fn ctx_monoid(&self) -> Monoid;
    fn ret(&self, a: Value) -> Value;
    fn map(&self, f: &dyn Fn(&Value) -> Value, t: &Value) -> Value;
    /// `T (T A) → T A`.
    fn join(&self, tt: &Value) -> Value;
    /// `T A → T (W × A)`.
    fn dec(&self, t: &Value) -> Value;
    /// `T (F A) → F (T A)`.
    fn dist(&self, app: &Applicative, t: &Value) -> Value;
}

/// The categorical operations defined from `ret` and `binddt`.
pub struct FromKleisli<'a> {
    inner: &'a dyn Dtm,
}

pub fn categorical_from_binddt(dtm: &dyn Dtm) -> FromKleisli<'_> {
    FromKleisli { inner: dtm }
}

impl CategoricalDtm for FromKleisli<'_> {
    fn name(&self) -> String {
        format!("categorical({})", self.inner.name())
    }

    fn ctx_monoid(&self) -> Monoid {
        self.inner.ctx_monoid()
    }

    fn ret(&self, a: Value) -> Value {
        self.inner.ret(a)
    }

    fn map(&self, f: &dyn Fn(&Value) -> Value, t: &Value) -> Value {
        crate::dtm::derived_map(self.inner, f, t)
    }

    fn join(&self, tt: &Value) -> Value {
        crate::dtm::derived_join(self.inner, tt)
    }

    fn dec(&self, t: &Value) -> Value {
        crate::dtm::derived_dec(self.inner, t)
    }

    fn dist(&self, app: &Applicative, t: &Value) -> Value {
        crate::dtm::derived_dist(self.inner, app, t)
    }
}

fn unpair(p: &Value) -> (&Value, &Value) {
    p.as_pair().unwrap_or_else(|| panic!("expected a decorated leaf, got {p}"))
}

/// `binddt_F f = map_F join ∘ dist_F ∘ map f ∘ dec`.
pub fn binddt_from_categorical(
    c: &dyn CategoricalDtm,
    app: &Applicative,
    f: &dyn Fn(&Value, &Value) -> Value,
    t: &Value,
) -> Value {
    let decorated = c.dec(t);
    let mapped = c.map(
        &|p| {
            let (w, a) = unpair(p);
            f(w, a)
        },
        &decorated,
    );
    let distributed = c.dist(app, &mapped);
    app.map(&|tt| c.join(tt), &distributed)
}

/// A Kleisli DTM whose `binddt` is derived from categorical operations.
pub struct KleisliFromCategorical<'a> {
    inner: &'a dyn CategoricalDtm,
}

impl<'a> KleisliFromCategorical<'a> {
    pub fn new(inner: &'a dyn CategoricalDtm) -> Self {
        KleisliFromCategorical { inner }
    }
}

impl Dtm for KleisliFromCategorical<'_> {
    fn name(&self) -> String {
        format!("kleisli({})", self.inner.name())
    }

    fn ctx_monoid(&self) -> Monoid {
        self.inner.ctx_monoid()
    }

    fn ret(&self, a: Value) -> Value {
        self.inner.ret(a)
    }

    fn binddt(&self, app: &Applicative, f: &dyn Fn(&Value, &Value) -> Value, t: &Value) -> Value {
        binddt_from_categorical(self.inner, app, f, t)
    }
}

fn extract(p: &Value) -> Value {
    unpair(p).1.clone()
}

/// `join_{T·W}`: pushes each outer context into its inner tree with the
/// strength `(w, t) ↦ map (a ↦ (w, a)) t`, multiplies contexts, then joins.
fn join_decorated(c: &dyn CategoricalDtm, x: &Value) -> Value {
    let m = c.ctx_monoid();
    let strengthened = c.map(
        &|p| {
            let (w, inner) = unpair(p);
            c.map(&|q| Value::pair(w.clone(), q.clone()), inner)
        },
        x,
    );
    let multiplied = c.map(
        &|inner| {
            c.map(
                &|p| {
                    let (w1, q) = unpair(p);
                    let (w2, a) = unpair(q);
                    Value::pair(m.combine(w1, w2), a.clone())
                },
                inner,
            )
        },
        &strengthened,
    );
    c.join(&multiplied)
}

fn leaf_sampler<'a>(
    sampler: &'a dyn TermSampler,
    app: &'a Applicative,
) -> impl FnMut(&mut rand_chacha::ChaCha8Rng) -> Value + 'a {
    move |r| app.sample(r, &mut |r2| sampler.leaf(r2))
}

/// Names of the categorical axioms, in report order.
pub const CATEGORICAL_AXIOMS: [&str; 19] = [
    "monad-id-l",
    "monad-id-r",
    "monad-assoc",
    "dec-extract",
    "dec-assoc",
    "dec-ret",
    "dec-join",
    "dist-id",
    "dist-compose",
    "dist-hom",
    "dist-ret",
    "dist-join",
    "dec-trav",
    "applicative-1",
    "applicative-2",
    "applicative-3",
    "applicative-4",
    "morphism-pure",
    "morphism-ap",
];

/// The thirteen axioms about the DTM itself, as opposed to its applicatives.
pub const DTM_AXIOMS: [&str; 13] = [
    "monad-id-l",
    "monad-id-r",
    "monad-assoc",
    "dec-extract",
    "dec-assoc",
    "dec-ret",
    "dec-join",
    "dist-id",
    "dist-compose",
    "dist-hom",
    "dist-ret",
    "dist-join",
    "dec-trav",
];

/// Checks the nineteen categorical axioms on sampled inputs.
pub fn check_categorical_axioms(
    c: &dyn CategoricalDtm,
    sampler: &dyn TermSampler,
    registry: &Registry,
    cfg: &SampleConfig,
) -> LawReport {
    let mut rng = sample::rng(cfg.seed, 0xCA7);
    let mut laws: Vec<LawOutcome> = DTM_AXIOMS.iter().map(|n| LawOutcome::new(*n)).collect();
    let [id_l, id_r, assoc, dec_extract, dec_assoc, dec_ret, dec_join, dist_id, dist_compose, dist_hom, dist_ret, dist_join, dec_trav] =
        laws.as_mut_slice()
    else {
        unreachable!()
    };
    let m = c.ctx_monoid();
    let pairs: Vec<(Applicative, Applicative)> = {
        let bases = dist_compose_bases();
        bases.iter().flat_map(|f| bases.iter().map(move |g| (f.clone(), g.clone()))).collect()
    };
    let inner_depth = 3.min(cfg.depth);

    for _ in 0..cfg.samples {
        let t = sampler.term(&mut rng, cfg.depth);
        let a = sampler.leaf(&mut rng);
        let tt = sampler.term_with(&mut rng, cfg.depth, &mut |r| sampler.term(r, inner_depth));
        let ttt = sampler.term_with(&mut rng, cfg.depth.min(4), &mut |r| {
            sampler.term_with(r, inner_depth, &mut |r2| sampler.term(r2, 2))
        });

        id_l.compare(|| format!("t = {t}"), &c.join(&c.ret(t.clone())), &t);
        id_r.compare(|| format!("t = {t}"), &c.join(&c.map(&|a| c.ret(a.clone()), &t)), &t);
        assoc.compare(|| format!("t = {ttt}"), &c.join(&c.join(&ttt)), &c.join(&c.map(&|x| c.join(x), &ttt)));

        let dt = c.dec(&t);
        dec_extract.compare(|| format!("t = {t}"), &c.map(&extract, &dt), &t);
        let dup = |p: &Value| Value::pair(unpair(p).0.clone(), p.clone());
        dec_assoc.compare(|| format!("t = {t}"), &c.dec(&dt), &c.map(&dup, &dt));
        dec_ret.compare(|| format!("a = {a}"), &c.dec(&c.ret(a.clone())), &c.ret(Value::pair(m.unit(), a.clone())));
        dec_join.compare(
            || format!("t = {tt}"),
            &c.dec(&c.join(&tt)),
            &join_decorated(c, &c.dec(&c.map(&|x| c.dec(x), &tt))),
        );

        dist_id.compare(|| format!("t = {t}"), &c.dist(&Applicative::Identity, &t), &t);

        for (f, g) in &pairs {
            let fg = Applicative::compose(f.clone(), g.clone());
            let depth = dist_depth(fg.branches(), cfg.depth);
            let tfg = sampler.term_with(&mut rng, depth, &mut leaf_sampler(sampler, &fg));
            let lhs = c.dist(&fg, &tfg);
            let rhs = f.map(&|x| c.dist(g, x), &c.dist(f, &tfg));
            dist_compose.compare(|| format!("F = {f}, G = {g}, t = {tfg}"), &lhs, &rhs);
        }

        for phi in &registry.morphisms {
            let depth = dist_depth(phi.source.branches() || phi.target.branches(), cfg.depth);
            let tf = sampler.term_with(&mut rng, depth, &mut leaf_sampler(sampler, &phi.source));
            let lhs = phi.apply(&c.dist(&phi.source, &tf));
            let rhs = c.dist(&phi.target, &c.map(&|x| phi.apply(x), &tf));
            dist_hom.compare(|| format!("phi = {}, t = {tf}", phi.name), &lhs, &rhs);
        }

        for app in &registry.applicatives {
            let fa = app.sample(&mut rng, &mut |r| sampler.leaf(r));
            let lhs = c.dist(app, &c.ret(fa.clone()));
            let rhs = app.map(&|x| c.ret(x.clone()), &fa);
            dist_ret.compare(|| format!("F = {app}, a = {fa}"), &lhs, &rhs);

            let branches = app.branches();
            // the joined tree is at most outer + inner - 1 deep
            let (outer, inner) = if branches { (2, 2.min(inner_depth)) } else { (cfg.depth.min(5), inner_depth) };
            let ttf = sampler.term_with(&mut rng, outer.min(cfg.depth), &mut |r| {
                sampler.term_with(r, inner, &mut leaf_sampler(sampler, app))
            });
            let lhs = c.dist(app, &c.join(&ttf));
            let rhs = app.map(&|x| c.join(x), &c.dist(app, &c.map(&|x| c.dist(app, x), &ttf)));
            dist_join.compare(|| format!("F = {app}, t = {ttf}"), &lhs, &rhs);

            let tf = sampler.term_with(&mut rng, dist_depth(branches, cfg.depth), &mut leaf_sampler(sampler, app));
            let strength = |p: &Value| {
                let (w, fa) = unpair(p);
                app.map(&|a| Value::pair(w.clone(), a.clone()), fa)
            };
            let lhs = c.dist(app, &c.map(&strength, &c.dec(&tf)));
            let rhs = app.map(&|x| c.dec(x), &c.dist(app, &tf));
            dec_trav.compare(|| format!("F = {app}, t = {tf}"), &lhs, &rhs);
        }
    }

    let mut report = LawReport::new(format!("categorical {}", c.name()));
    for law in laws {
        report.push(law);
    }
    let mut applicative = LawReport::new("applicatives");
    for app in &registry.applicatives {
        applicative.absorb(check_applicative_laws(app, cfg));
    }
    for phi in &registry.morphisms {
        applicative.absorb(check_morphism_laws(phi, cfg));
    }
    report.absorb(applicative);
    report
}

/// Checks the round trip between the two presentations in both directions:
/// the categorical operations of `dtm` rebuild its `binddt`, and `binddt`
/// rebuilt from `c` reproduces `c`'s operations. Also compares `binddt`
/// derived from `c` directly against `dtm`.
pub fn check_roundtrip(
    dtm: &dyn Dtm,
    c: &dyn CategoricalDtm,
    sampler: &dyn TermSampler,
    registry: &Registry,
    cfg: &SampleConfig,
) -> LawReport {
    let mut rng = sample::rng(cfg.seed, 0x4D);
    let names = [
        "roundtrip-binddt",
        "categorical-binddt",
        "roundtrip-map",
        "roundtrip-dec",
        "roundtrip-join",
        "roundtrip-dist",
    ];
    let mut laws: Vec<LawOutcome> = names.iter().map(|n| LawOutcome::new(*n)).collect();
    let [binddt_rt, binddt_c, map_rt, dec_rt, join_rt, dist_rt] = laws.as_mut_slice() else { unreachable!() };

    let derived = categorical_from_binddt(dtm);
    let rebuilt_kleisli = KleisliFromCategorical::new(c);
    let rebuilt = categorical_from_binddt(&rebuilt_kleisli);

    for i in 0..cfg.samples {
        let terms = SampledTerms::draw(sampler, &mut rng, cfg.depth);
        let t = &terms.full;
        let kind = ArrowKind::nth(i);
        for (j, app) in registry.applicatives.iter().enumerate() {
            let t = terms.pick(app.branches());
            let f = Arrow::sample(dtm, sampler, app, kind, arrow_seed(cfg, 6, i, j), arrow_depth(app.branches()));
            let expected = dtm.binddt(app, &|w, a| f.call(w, a), t);
            let via_derived = binddt_from_categorical(&derived, app, &|w, a| f.call(w, a), t);
            binddt_rt.compare(|| format!("F = {app}, f = {}, t = {t}", f.name), &via_derived, &expected);
            let via_c = binddt_from_categorical(c, app, &|w, a| f.call(w, a), t);
            binddt_c.compare(|| format!("F = {app}, f = {}, t = {t}", f.name), &via_c, &expected);
        }

        let table_seed = arrow_seed(cfg, 7, i, 0);
        let g = |v: &Value| sampler.leaf(&mut sample::rng(fingerprint(table_seed, &[v]), 0));
        map_rt.compare(|| format!("t = {t}"), &rebuilt.map(&g, t), &c.map(&g, t));
        dec_rt.compare(|| format!("t = {t}"), &rebuilt.dec(t), &c.dec(t));

        let tt = sampler.term_with(&mut rng, cfg.depth, &mut |r| sampler.term(r, 3));
        join_rt.compare(|| format!("t = {tt}"), &rebuilt.join(&tt), &c.join(&tt));

        for app in &registry.applicatives {
            let tf =
                sampler.term_with(&mut rng, term_depth(app.branches(), cfg.depth), &mut leaf_sampler(sampler, app));
            dist_rt.compare(|| format!("F = {app}, t = {tf}"), &rebuilt.dist(app, &tf), &c.dist(app, &tf));
        }
    }

    let mut report = LawReport::new(format!("roundtrip {} / {}", dtm.name(), c.name()));
    for law in laws {
        report.push(law);
    }
    report
}
