//! A defunctionalized universe of applicative functors.
//!
//! An [`Applicative`] is a tag naming an instance; payloads of its carrier are
//! plain [`Value`]s. Function-valued payloads (the `F(A → B)` side of `⊛`) are
//! [`Value::Func`]s.

use std::fmt;
use std::sync::Arc;

use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::monoid::{Monoid, MonoidHom};
use crate::report::{Counterexample, LawOutcome, LawReport};
use crate::sample::{self, SampleConfig};
use crate::value::Value;

type PureFn = Arc<dyn Fn(Value) -> Value + Send + Sync>;
type ApFn = Arc<dyn Fn(&Value, &Value) -> Value + Send + Sync>;

/// A test-supplied instance: a registered carrier with `pure` and/or `⊛`
/// replaced. Sampling, `map` and equality are inherited from the carrier.
#[derive(Clone)]
pub struct CustomApplicative {
    pub name: String,
    pub carrier: Applicative,
    pub pure: Option<PureFn>,
    pub ap: Option<ApFn>,
}

#[derive(Clone)]
pub enum Applicative {
    Identity,
    /// Constant functor over a monoid: `pure` is the unit, `⊛` multiplies.
    Const(Monoid),
    /// Failure: `pure` is present, `⊛` is present iff both sides are.
    Maybe,
    /// Nondeterminism: `⊛` applies every function to every argument.
    List,
    /// `F ∘ G`, with carrier `F(G(−))`.
    Compose(Arc<Applicative>, Arc<Applicative>),
    Custom(Arc<CustomApplicative>),
}

impl PartialEq for Applicative {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (Applicative::Identity, Applicative::Identity) => true,
            (Applicative::Const(a), Applicative::Const(b)) => a == b,
            (Applicative::Maybe, Applicative::Maybe) => true,
            (Applicative::List, Applicative::List) => true,
            (Applicative::Compose(f1, g1), Applicative::Compose(f2, g2)) => f1 == f2 && g1 == g2,
            (Applicative::Custom(a), Applicative::Custom(b)) => a.name == b.name,
            _ => false,
        }
    }
}

impl Eq for Applicative {}

impl fmt::Display for Applicative {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Applicative::Identity => f.write_str("Identity"),
            Applicative::Const(m) => write!(f, "Const({m})"),
            Applicative::Maybe => f.write_str("Maybe"),
            Applicative::List => f.write_str("List"),
            Applicative::Compose(a, b) => write!(f, "Compose({a}, {b})"),
            Applicative::Custom(c) => f.write_str(&c.name),
        }
    }
}

impl fmt::Debug for Applicative {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Applicative {
    /// Whether values can hold several results, so effects multiply across
    /// the leaves of a traversal.
    pub fn branches(&self) -> bool {
        match self {
            Applicative::List => true,
            Applicative::Compose(f, g) => f.branches() || g.branches(),
            Applicative::Custom(c) => c.carrier.branches(),
            _ => false,
        }
    }

    pub fn compose(outer: Applicative, inner: Applicative) -> Applicative {
        Applicative::Compose(Arc::new(outer), Arc::new(inner))
    }

    pub fn pure(&self, a: Value) -> Value {
        match self {
            Applicative::Identity => a,
            Applicative::Const(m) => m.unit(),
            Applicative::Maybe => Value::some(a),
            Applicative::List => Value::list(vec![a]),
            Applicative::Compose(f, g) => f.pure(g.pure(a)),
            Applicative::Custom(c) => match &c.pure {
                Some(p) => p(a),
                None => c.carrier.pure(a),
            },
        }
    }

    /// Idiomatic application `f ⊛ a`.
    pub fn ap(&self, f: &Value, a: &Value) -> Value {
        match self {
            Applicative::Identity => f.apply(a.clone()),
            Applicative::Const(m) => m.combine(f, a),
            Applicative::Maybe => match (f, a) {
                (Value::Maybe(Some(f)), Value::Maybe(Some(a))) => Value::some(f.apply((**a).clone())),
                _ => Value::none(),
            },
            Applicative::List => {
                let (fs, xs) = (list_payload(f), list_payload(a));
                let mut out = Vec::with_capacity(fs.len() * xs.len());
                for g in fs {
                    for x in xs {
                        out.push(g.apply(x.clone()));
                    }
                }
                Value::list(out)
            }
            Applicative::Compose(outer, inner) => {
                let inner = Arc::clone(inner);
                let lifted = outer.map(
                    &|gf: &Value| {
                        let inner = Arc::clone(&inner);
                        let gf = gf.clone();
                        Value::func("ap", move |gx| inner.ap(&gf, &gx))
                    },
                    f,
                );
                outer.ap(&lifted, a)
            }
            Applicative::Custom(c) => match &c.ap {
                Some(ap) => ap(f, a),
                None => c.carrier.ap(f, a),
            },
        }
    }

    /// Functorial action. Agrees with `pure f ⊛ a` for every lawful instance.
    pub fn map(&self, f: &dyn Fn(&Value) -> Value, a: &Value) -> Value {
        match self {
            Applicative::Identity => f(a),
            Applicative::Const(_) => a.clone(),
            Applicative::Maybe => match a {
                Value::Maybe(Some(x)) => Value::some(f(x)),
                _ => Value::none(),
            },
            Applicative::List => Value::list(list_payload(a).iter().map(f).collect()),
            Applicative::Compose(outer, inner) => outer.map(&|ga: &Value| inner.map(f, ga), a),
            Applicative::Custom(c) => c.carrier.map(f, a),
        }
    }

    /// `lift2 f x y = pure f ⊛ x ⊛ y`, sequencing `x` before `y`.
    pub fn lift2(
        &self,
        name: &str,
        f: Arc<dyn Fn(Value, Value) -> Value + Send + Sync>,
        x: &Value,
        y: &Value,
    ) -> Value {
        let name = name.to_string();
        let curried = self.map(
            &|vx: &Value| {
                let f = Arc::clone(&f);
                let vx = vx.clone();
                Value::func(&name, move |vy| f(vx.clone(), vy))
            },
            x,
        );
        self.ap(&curried, y)
    }

    /// Equality of carrier values.
    pub fn eq_values(&self, x: &Value, y: &Value) -> bool {
        x == y
    }

    /// Whether `v` has the shape of this instance's carrier, with `inner`
    /// deciding membership of the element type.
    pub fn carries_with(&self, v: &Value, inner: &dyn Fn(&Value) -> bool) -> bool {
        match self {
            Applicative::Identity => inner(v),
            Applicative::Const(m) => m.contains(v),
            Applicative::Maybe => match v {
                Value::Maybe(None) => true,
                Value::Maybe(Some(x)) => inner(x),
                _ => false,
            },
            Applicative::List => match v {
                Value::List(xs) => xs.iter().all(inner),
                _ => false,
            },
            Applicative::Compose(f, g) => f.carries_with(v, &|x| g.carries_with(x, inner)),
            Applicative::Custom(c) => c.carrier.carries_with(v, inner),
        }
    }

    pub fn carries(&self, v: &Value) -> bool {
        self.carries_with(v, &|_| true)
    }

    /// Draws a carrier value whose elements come from `leaf`.
    pub fn sample(&self, rng: &mut ChaCha8Rng, leaf: &mut dyn FnMut(&mut ChaCha8Rng) -> Value) -> Value {
        match self {
            Applicative::Identity => leaf(rng),
            Applicative::Const(m) => sample::monoid_value(*m, rng),
            Applicative::Maybe => {
                if sample::chance(rng, 0.15) {
                    Value::none()
                } else {
                    Value::some(leaf(rng))
                }
            }
            Applicative::List => {
                let len = sample::pick_weighted(rng, &[(0, 1), (1, 16), (2, 3)]);
                Value::list((0..len).map(|_| leaf(rng)).collect())
            }
            Applicative::Compose(f, g) => f.sample(rng, &mut |r| g.sample(r, leaf)),
            Applicative::Custom(c) => c.carrier.sample(rng, leaf),
        }
    }
}

fn list_payload(v: &Value) -> &[Value] {
    v.as_list().unwrap_or_else(|| panic!("List applicative given non-list payload {v}"))
}

/// A payload tagged with the instance it belongs to.
#[derive(Clone, Debug, PartialEq)]
pub struct AppValue {
    pub app: Applicative,
    pub payload: Value,
}

impl fmt::Display for AppValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}@{}", self.payload, self.app)
    }
}

impl AppValue {
    /// Tags `payload` after checking its outer shape.
    pub fn new(app: Applicative, payload: Value) -> Result<Self> {
        if !app.carries(&payload) {
            return Err(Error::Shape { expected: app.to_string(), value: payload.to_string() });
        }
        Ok(AppValue { app, payload })
    }
}

fn expect_tag(app: &Applicative, v: &AppValue) -> Result<()> {
    if &v.app != app {
        return Err(Error::TagMismatch { expected: app.to_string(), found: v.app.to_string() });
    }
    Ok(())
}

pub fn app_pure(app: &Applicative, a: Value) -> AppValue {
    AppValue { app: app.clone(), payload: app.pure(a) }
}

pub fn app_ap(app: &Applicative, f: &AppValue, a: &AppValue) -> Result<AppValue> {
    expect_tag(app, f)?;
    expect_tag(app, a)?;
    Ok(AppValue { app: app.clone(), payload: app.ap(&f.payload, &a.payload) })
}

pub fn app_map(app: &Applicative, f: &dyn Fn(&Value) -> Value, a: &AppValue) -> Result<AppValue> {
    expect_tag(app, a)?;
    Ok(AppValue { app: app.clone(), payload: app.map(f, &a.payload) })
}

pub fn compose_applicatives(outer: &Applicative, inner: &Applicative) -> Applicative {
    Applicative::compose(outer.clone(), inner.clone())
}

/// A natural transformation between two applicatives, expected to commute
/// with `pure` and `⊛` (see [`check_morphism_laws`]).
#[derive(Clone)]
pub struct Morphism {
    pub name: String,
    pub source: Applicative,
    pub target: Applicative,
    transform: Arc<dyn Fn(&Value) -> Value + Send + Sync>,
}

impl fmt::Debug for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {} => {}", self.name, self.source, self.target)
    }
}

impl fmt::Display for Morphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

impl Morphism {
    pub fn new(
        name: impl Into<String>,
        source: Applicative,
        target: Applicative,
        transform: impl Fn(&Value) -> Value + Send + Sync + 'static,
    ) -> Self {
        Morphism { name: name.into(), source, target, transform: Arc::new(transform) }
    }

    /// Applies the transformation to a raw payload.
    pub fn apply(&self, v: &Value) -> Value {
        (self.transform)(v)
    }

    pub fn identity(app: Applicative) -> Self {
        Morphism::new(format!("id[{app}]"), app.clone(), app, Value::clone)
    }

    /// The canonical `Identity ⇒ F`, `a ↦ pure_F a`.
    pub fn pure_embedding(target: Applicative) -> Self {
        let t = target.clone();
        Morphism::new(format!("pure[{target}]"), Applicative::Identity, target, move |v| t.pure(v.clone()))
    }

    /// Lifts a monoid homomorphism to `Const(M) ⇒ Const(N)`.
    pub fn from_monoid_hom(hom: MonoidHom) -> Self {
        Morphism::new(hom.name.clone(), Applicative::Const(hom.source), Applicative::Const(hom.target), move |v| {
            hom.apply(v)
        })
    }

    /// `Maybe ⇒ Const(2, ∧)`: whether the value is present.
    pub fn present_check() -> Self {
        Morphism::new("present", Applicative::Maybe, Applicative::Const(Monoid::All), |v| {
            Value::Bool(matches!(v, Value::Maybe(Some(_))))
        })
    }

    /// `Maybe ⇒ List`: absent to no results, present to one.
    pub fn maybe_to_list() -> Self {
        Morphism::new("to-list", Applicative::Maybe, Applicative::List, |v| match v {
            Value::Maybe(Some(x)) => Value::list(vec![(**x).clone()]),
            _ => Value::list(Vec::new()),
        })
    }

    /// `List ⇒ Const(2, ∧)`: whether any result exists.
    pub fn nonempty() -> Self {
        Morphism::new("nonempty", Applicative::List, Applicative::Const(Monoid::All), |v| {
            Value::Bool(!list_payload(v).is_empty())
        })
    }

    /// `φ ∘ G : F ∘ G ⇒ F' ∘ G`.
    pub fn whisker_outer(phi: &Morphism, inner: Applicative) -> Self {
        let p = phi.clone();
        Morphism::new(
            format!("{}*{inner}", phi.name),
            Applicative::compose(phi.source.clone(), inner.clone()),
            Applicative::compose(phi.target.clone(), inner),
            move |v| p.apply(v),
        )
    }

    /// `F ∘ φ : F ∘ G ⇒ F ∘ G'`.
    pub fn whisker_inner(outer: Applicative, phi: &Morphism) -> Self {
        let p = phi.clone();
        let o = outer.clone();
        Morphism::new(
            format!("{outer}*{}", phi.name),
            Applicative::compose(outer.clone(), phi.source.clone()),
            Applicative::compose(outer, phi.target.clone()),
            move |v| o.map(&|x| p.apply(x), v),
        )
    }
}

pub fn apply_morphism(phi: &Morphism, v: &AppValue) -> Result<AppValue> {
    expect_tag(&phi.source, v)?;
    Ok(AppValue { app: phi.target.clone(), payload: phi.apply(&v.payload) })
}

/// The single-layer instances law suites quantify over.
pub fn base_registry() -> Vec<Applicative> {
    vec![
        Applicative::Identity,
        Applicative::Const(Monoid::NatSum),
        Applicative::Const(Monoid::All),
        Applicative::Const(Monoid::FreeList),
        Applicative::Const(Monoid::AtomSet),
        Applicative::Maybe,
        Applicative::List,
    ]
}

/// Base instances plus a selection of composites.
pub fn registry() -> Vec<Applicative> {
    let mut out = base_registry();
    out.extend([
        Applicative::compose(Applicative::Maybe, Applicative::Const(Monoid::NatSum)),
        Applicative::compose(Applicative::List, Applicative::Maybe),
        Applicative::compose(Applicative::Maybe, Applicative::List),
        Applicative::compose(Applicative::Identity, Applicative::Maybe),
        Applicative::compose(Applicative::Const(Monoid::FreeList), Applicative::Maybe),
    ]);
    out
}

/// Instances paired for the traversal composition law.
pub fn dist_compose_bases() -> Vec<Applicative> {
    vec![
        Applicative::Identity,
        Applicative::Const(Monoid::NatSum),
        Applicative::Const(Monoid::All),
        Applicative::Maybe,
        Applicative::List,
    ]
}

/// The registered applicative morphisms.
pub fn morphism_registry() -> Vec<Morphism> {
    let mut out: Vec<Morphism> = base_registry().into_iter().map(Morphism::identity).collect();
    out.extend(base_registry().into_iter().skip(1).map(Morphism::pure_embedding));
    out.extend([
        Morphism::from_monoid_hom(MonoidHom::length()),
        Morphism::from_monoid_hom(MonoidHom::elements()),
        Morphism::present_check(),
        Morphism::maybe_to_list(),
        Morphism::nonempty(),
        Morphism::whisker_outer(&Morphism::maybe_to_list(), Applicative::Const(Monoid::NatSum)),
        Morphism::whisker_inner(Applicative::List, &Morphism::present_check()),
    ]);
    out
}

fn nat_leaf(rng: &mut ChaCha8Rng) -> Value {
    Value::Nat(sample::below(rng, 6))
}

fn nat_function(rng: &mut ChaCha8Rng) -> Value {
    match sample::below(rng, 5) {
        0 => Value::func("succ", |v| Value::Nat(v.as_nat().unwrap() + 1)),
        1 => Value::func("double", |v| Value::Nat(v.as_nat().unwrap() * 2)),
        2 => Value::func("const3", |_| Value::Nat(3)),
        3 => Value::func("sq-mod7", |v| Value::Nat(v.as_nat().unwrap().pow(2) % 7)),
        _ => Value::func("id", |v| v),
    }
}

fn compose_fn() -> Value {
    Value::func("compose", |g| {
        Value::func("compose-g", move |f| {
            let g = g.clone();
            Value::func("g.f", move |x| g.apply(f.apply(x)))
        })
    })
}

/// Checks the four applicative laws on sampled naturals and functions.
pub fn check_applicative_laws(app: &Applicative, cfg: &SampleConfig) -> LawReport {
    let mut rng = sample::rng(cfg.seed, 0xA11);
    let mut identity = LawOutcome::new("applicative-1");
    let mut homomorphism = LawOutcome::new("applicative-2");
    let mut composition = LawOutcome::new("applicative-3");
    let mut interchange = LawOutcome::new("applicative-4");
    for _ in 0..cfg.samples {
        let v = app.sample(&mut rng, &mut nat_leaf);
        let lhs = app.ap(&app.pure(Value::func("id", |x| x)), &v);
        identity.record(app.eq_values(&lhs, &v), || Counterexample {
            inputs: format!("v = {v}"),
            lhs: lhs.to_string(),
            rhs: v.to_string(),
        });

        let f = nat_function(&mut rng);
        let a = nat_leaf(&mut rng);
        let lhs = app.ap(&app.pure(f.clone()), &app.pure(a.clone()));
        let rhs = app.pure(f.apply(a.clone()));
        homomorphism.record(app.eq_values(&lhs, &rhs), || Counterexample {
            inputs: format!("f = {f}, a = {a}"),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        });

        let g = app.sample(&mut rng, &mut nat_function);
        let f = app.sample(&mut rng, &mut nat_function);
        let x = app.sample(&mut rng, &mut nat_leaf);
        let lhs = app.ap(&g, &app.ap(&f, &x));
        let rhs = app.ap(&app.ap(&app.ap(&app.pure(compose_fn()), &g), &f), &x);
        composition.record(app.eq_values(&lhs, &rhs), || Counterexample {
            inputs: format!("g = {g}, f = {f}, a = {x}"),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        });

        let f = app.sample(&mut rng, &mut nat_function);
        let a = nat_leaf(&mut rng);
        let lhs = app.ap(&f, &app.pure(a.clone()));
        let at = a.clone();
        let rhs = app.ap(&app.pure(Value::func("apply-to", move |k| k.apply(at.clone()))), &f);
        interchange.record(app.eq_values(&lhs, &rhs), || Counterexample {
            inputs: format!("f = {f}, a = {a}"),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        });
    }
    let mut report = LawReport::new(format!("applicative {app}"));
    for law in [identity, homomorphism, composition, interchange] {
        report.push(law);
    }
    report
}

/// Checks preservation of `pure` and `⊛` on sampled values.
pub fn check_morphism_laws(phi: &Morphism, cfg: &SampleConfig) -> LawReport {
    let (src, tgt) = (&phi.source, &phi.target);
    let mut rng = sample::rng(cfg.seed, 0xB22);
    let mut pure_law = LawOutcome::new("morphism-pure");
    let mut ap_law = LawOutcome::new("morphism-ap");
    for _ in 0..cfg.samples {
        let a = nat_leaf(&mut rng);
        let lhs = phi.apply(&src.pure(a.clone()));
        let rhs = tgt.pure(a.clone());
        pure_law.record(tgt.eq_values(&lhs, &rhs), || Counterexample {
            inputs: format!("a = {a}"),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        });

        let f = src.sample(&mut rng, &mut nat_function);
        let x = src.sample(&mut rng, &mut nat_leaf);
        let lhs = phi.apply(&src.ap(&f, &x));
        let rhs = tgt.ap(&phi.apply(&f), &phi.apply(&x));
        ap_law.record(tgt.eq_values(&lhs, &rhs), || Counterexample {
            inputs: format!("f = {f}, a = {x}"),
            lhs: lhs.to_string(),
            rhs: rhs.to_string(),
        });
    }
    let mut report = LawReport::new(format!("morphism {}", phi.name));
    report.push(pure_law);
    report.push(ap_law);
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::value::Atom;

    fn cfg(samples: usize) -> SampleConfig {
        SampleConfig { seed: 7, samples, depth: 4 }
    }

    fn succ() -> Value {
        Value::func("succ", |v| Value::Nat(v.as_nat().unwrap() + 1))
    }

    #[test]
    fn pure_vectors() {
        assert_eq!(Applicative::Identity.pure(Value::Nat(4)), Value::Nat(4));
        assert_eq!(Applicative::Const(Monoid::NatSum).pure(Value::Nat(4)), Value::Nat(0));
        assert_eq!(Applicative::Const(Monoid::All).pure(Value::Nat(4)), Value::Bool(true));
    }

    #[test]
    fn ap_vectors() {
        assert_eq!(Applicative::Identity.ap(&succ(), &Value::Nat(1)), Value::Nat(2));
        assert_eq!(Applicative::Const(Monoid::NatSum).ap(&Value::Nat(2), &Value::Nat(3)), Value::Nat(5));

        // ([w1], f) ⊛ ([w2], a) = ([w1, w2], f a) in Compose(Const(list), Identity)
        let writer = Applicative::compose(Applicative::Const(Monoid::FreeList), Applicative::Identity);
        let w1 = Value::list(vec![Value::Atom(Atom::new("w1"))]);
        let w2 = Value::list(vec![Value::Atom(Atom::new("w2"))]);
        assert_eq!(writer.ap(&w1, &w2), Value::list(vec![Value::Atom(Atom::new("w1")), Value::Atom(Atom::new("w2"))]));
        let pair = Applicative::compose(Applicative::Maybe, Applicative::Const(Monoid::FreeList));
        assert_eq!(pair.ap(&Value::some(w1.clone()), &Value::none()), Value::none());

        let list = Applicative::List;
        let fs = Value::list(vec![succ(), Value::func("double", |v| Value::Nat(v.as_nat().unwrap() * 2))]);
        let xs = Value::list(vec![Value::Nat(1), Value::Nat(5)]);
        assert_eq!(list.ap(&fs, &xs), Value::list(vec![Value::Nat(2), Value::Nat(6), Value::Nat(2), Value::Nat(10)]));
    }

    #[test]
    fn map_agrees_with_pure_ap() {
        let f = |v: &Value| Value::Nat(v.as_nat().unwrap() + 1);
        let mut rng = sample::rng(3, 1);
        for app in registry() {
            for _ in 0..50 {
                let x = app.sample(&mut rng, &mut nat_leaf);
                let via_ap = app.ap(&app.pure(succ()), &x);
                assert_eq!(app.map(&f, &x), via_ap, "{app}");
            }
        }
        // under both layers of a composite
        let comp = Applicative::compose(Applicative::List, Applicative::Maybe);
        let x = Value::list(vec![Value::some(Value::Nat(1)), Value::none()]);
        let nested = Applicative::List.map(&|inner| Applicative::Maybe.map(&f, inner), &x);
        assert_eq!(comp.map(&f, &x), nested);
    }

    #[test]
    fn registered_instances_are_lawful() {
        for app in registry() {
            let report = check_applicative_laws(&app, &cfg(1000));
            assert!(report.passed(), "{report}");
            assert_eq!(report.laws.len(), 4);
        }
    }

    #[test]
    fn composition_units() {
        let mut rng = sample::rng(11, 2);
        for g in base_registry() {
            let left = Applicative::compose(Applicative::Identity, g.clone());
            let right = Applicative::compose(g.clone(), Applicative::Identity);
            for _ in 0..100 {
                let f = g.sample(&mut rng, &mut nat_function);
                let x = g.sample(&mut rng, &mut nat_leaf);
                assert_eq!(left.ap(&f, &x), g.ap(&f, &x));
                assert_eq!(right.ap(&f, &x), g.ap(&f, &x));
                assert_eq!(left.pure(Value::Nat(1)), g.pure(Value::Nat(1)));
            }
        }
    }

    #[test]
    fn const_of_const_is_the_outer_const() {
        let comp = Applicative::compose(Applicative::Const(Monoid::NatSum), Applicative::Const(Monoid::All));
        let outer = Applicative::Const(Monoid::NatSum);
        let mut rng = sample::rng(5, 5);
        for _ in 0..100 {
            let a = sample::monoid_value(Monoid::NatSum, &mut rng);
            let b = sample::monoid_value(Monoid::NatSum, &mut rng);
            assert_eq!(comp.ap(&a, &b), outer.ap(&a, &b));
        }
        assert_eq!(comp.pure(Value::Unit), outer.pure(Value::Unit));
    }

    #[test]
    fn composition_is_associative_up_to_reassociation() {
        let (f, g, h) = (Applicative::Maybe, Applicative::List, Applicative::Const(Monoid::NatSum));
        let left = Applicative::compose(Applicative::compose(f.clone(), g.clone()), h.clone());
        let right = Applicative::compose(f, Applicative::compose(g, h));
        let mut rng = sample::rng(9, 9);
        for _ in 0..200 {
            let x = left.sample(&mut rng, &mut nat_leaf);
            let y = left.sample(&mut rng, &mut nat_leaf);
            // payloads of both associations are the same nested values
            assert_eq!(left.pure(Value::Nat(1)), right.pure(Value::Nat(1)));
            let fx = left.map(&|_| succ(), &x);
            assert_eq!(left.ap(&fx, &y), right.ap(&fx, &y));
        }
    }

    #[test]
    fn broken_instances_are_caught() {
        // keeps the argument, drops the function operand
        let drop_left = Applicative::Custom(Arc::new(CustomApplicative {
            name: "drop-left".into(),
            carrier: Applicative::Const(Monoid::NatSum),
            pure: None,
            ap: Some(Arc::new(|_, a| a.clone())),
        }));
        let report = check_applicative_laws(&drop_left, &cfg(200));
        assert_eq!(report.failing(), vec!["applicative-4"]);

        // keeps the function operand, drops the argument
        let drop_right = Applicative::Custom(Arc::new(CustomApplicative {
            name: "drop-right".into(),
            carrier: Applicative::Const(Monoid::NatSum),
            pure: None,
            ap: Some(Arc::new(|f, _| f.clone())),
        }));
        let report = check_applicative_laws(&drop_right, &cfg(200));
        assert!(report.failing().contains(&"applicative-1"), "{report}");
        assert!(report.law("applicative-1").unwrap().counterexample.is_some());
    }

    #[test]
    fn morphism_vectors() {
        let id = Morphism::identity(Applicative::Maybe);
        assert_eq!(id.apply(&Value::some(Value::Nat(3))), Value::some(Value::Nat(3)));
        let emb = Morphism::pure_embedding(Applicative::List);
        assert_eq!(emb.apply(&Value::Nat(3)), Value::list(vec![Value::Nat(3)]));
        let len = Morphism::from_monoid_hom(MonoidHom::length());
        let bs = Value::list(vec![Value::Atom(Atom::new("b1")), Value::Atom(Atom::new("b2"))]);
        assert_eq!(len.apply(&bs), Value::Nat(2));
    }

    #[test]
    fn registered_morphisms_are_lawful() {
        for phi in morphism_registry() {
            let report = check_morphism_laws(&phi, &cfg(1000));
            assert!(report.passed(), "{report}");
        }
    }

    #[test]
    fn length_plus_one_is_not_a_morphism() {
        let bad = Morphism::from_monoid_hom(MonoidHom::new("length+1", Monoid::FreeList, Monoid::NatSum, |v| {
            Value::Nat(v.as_list().unwrap().len() as u64 + 1)
        }));
        let report = check_morphism_laws(&bad, &cfg(100));
        assert!(report.failing().contains(&"morphism-pure"));
    }

    #[test]
    fn tagged_operations_reject_foreign_values() {
        let v = app_pure(&Applicative::Maybe, Value::Nat(1));
        let f = app_pure(&Applicative::List, succ());
        assert!(matches!(app_ap(&Applicative::List, &f, &v), Err(Error::TagMismatch { .. })));
        let ok = app_ap(&Applicative::Maybe, &app_pure(&Applicative::Maybe, succ()), &v).unwrap();
        assert_eq!(ok.payload, Value::some(Value::Nat(2)));
        assert!(apply_morphism(&Morphism::nonempty(), &v).is_err());
        let present = apply_morphism(&Morphism::present_check(), &v).unwrap();
        assert_eq!(present.app, Applicative::Const(Monoid::All));
        assert!(AppValue::new(Applicative::List, Value::Nat(1)).is_err());
        let mapped = app_map(&Applicative::Maybe, &|x| Value::Nat(x.as_nat().unwrap() * 10), &v).unwrap();
        assert_eq!(mapped.payload, Value::some(Value::Nat(10)));
    }
}
