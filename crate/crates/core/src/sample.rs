//! Seeded samplers for the law suites.
//!
//! Every suite draws from a [`ChaCha8Rng`] derived from the configured seed,
//! so identical configurations replay identical samples.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::applicative::Applicative;
use crate::dtm::Dtm;
use crate::monoid::Monoid;
use crate::value::{fingerprint, Atom, Value};

/// The small atom pool used by generators; small so names collide often.
pub const ATOM_POOL: [&str; 4] = ["a", "b", "c", "d"];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SampleConfig {
    pub seed: u64,
    pub samples: usize,
    /// Maximum depth of sampled terms.
    pub depth: usize,
}

impl Default for SampleConfig {
    fn default() -> Self {
        SampleConfig { seed: 42, samples: 1000, depth: 8 }
    }
}

/// An independent stream for `(seed, stream)`.
pub fn rng(seed: u64, stream: u64) -> ChaCha8Rng {
    let mut r = ChaCha8Rng::seed_from_u64(seed);
    r.set_stream(stream);
    r
}

pub fn below(rng: &mut ChaCha8Rng, n: u64) -> u64 {
    rng.gen_range(0..n)
}

pub fn chance(rng: &mut ChaCha8Rng, p: f64) -> bool {
    rng.gen_bool(p)
}

/// Picks a value from `(value, weight)` pairs.
pub fn pick_weighted<T: Copy>(rng: &mut ChaCha8Rng, choices: &[(T, u32)]) -> T {
    let total: u32 = choices.iter().map(|(_, w)| w).sum();
    let mut roll = rng.gen_range(0..total);
    for (v, w) in choices {
        if roll < *w {
            return *v;
        }
        roll -= w;
    }
    unreachable!("roll below total weight")
}

pub fn pool_atom(rng: &mut ChaCha8Rng) -> Atom {
    Atom::new(ATOM_POOL[below(rng, ATOM_POOL.len() as u64) as usize])
}

pub fn monoid_value(m: Monoid, rng: &mut ChaCha8Rng) -> Value {
    match m {
        Monoid::FreeList => {
            let len = below(rng, 4);
            Value::list((0..len).map(|_| Value::Atom(pool_atom(rng))).collect())
        }
        Monoid::NatSum => Value::Nat(below(rng, 6)),
        Monoid::All => Value::Bool(chance(rng, 0.8)),
        Monoid::Any => Value::Bool(chance(rng, 0.2)),
        Monoid::AtomSet => {
            let len = below(rng, 3);
            Value::set((0..len).map(|_| Value::Atom(pool_atom(rng))))
        }
    }
}

/// Produces sampled inhabitants of one DTM's tree type.
pub trait TermSampler: Sync {
    /// A random leaf.
    fn leaf(&self, rng: &mut ChaCha8Rng) -> Value;

    /// A random tree of depth at most `depth`, leaves drawn from `leaf`.
    fn term_with(&self, rng: &mut ChaCha8Rng, depth: usize, leaf: &mut dyn FnMut(&mut ChaCha8Rng) -> Value) -> Value;

    /// A leaf that records the binding context it was produced in.
    fn echo_context(&self, ctx: &Value, leaf: &Value) -> Value;

    fn term(&self, rng: &mut ChaCha8Rng, depth: usize) -> Value {
        self.term_with(rng, depth, &mut |r| self.leaf(r))
    }
}

/// How a sampled Kleisli arrow `W × A → F (T B)` chooses its output.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArrowKind {
    /// A random table keyed on the leaf only.
    Table,
    /// A random table keyed on context and leaf.
    ContextTable,
    /// One fixed output for every input.
    Constant,
    /// `pure ∘ ret ∘ extr`.
    Ret,
    /// `pure (ret (echo w a))`: the output leaf spells out the context.
    Echo,
    /// Random effect from a context-keyed table, value echoing the context.
    EchoWithEffect,
}

impl ArrowKind {
    pub const ALL: [ArrowKind; 6] = [
        ArrowKind::Table,
        ArrowKind::ContextTable,
        ArrowKind::Constant,
        ArrowKind::Ret,
        ArrowKind::Echo,
        ArrowKind::EchoWithEffect,
    ];

    pub fn nth(i: usize) -> ArrowKind {
        Self::ALL[i % Self::ALL.len()]
    }
}

type ArrowBody<'a> = Box<dyn Fn(&Value, &Value) -> Value + Send + Sync + 'a>;

/// A sampled function `W × A → F (T B)`, deterministic in its inputs.
pub struct Arrow<'a> {
    pub name: String,
    body: ArrowBody<'a>,
}

impl<'a> Arrow<'a> {
    pub fn new(name: impl Into<String>, body: impl Fn(&Value, &Value) -> Value + Send + Sync + 'a) -> Self {
        Arrow { name: name.into(), body: Box::new(body) }
    }

    pub fn call(&self, ctx: &Value, leaf: &Value) -> Value {
        (self.body)(ctx, leaf)
    }

    /// Samples an arrow of the given kind into `app`, with output trees of depth
    /// at most `out_depth`.
    pub fn sample(
        dtm: &'a dyn Dtm,
        sampler: &'a dyn TermSampler,
        app: &Applicative,
        kind: ArrowKind,
        seed: u64,
        out_depth: usize,
    ) -> Arrow<'a> {
        let app = app.clone();
        let name = format!("{kind:?}#{seed:x} into {app}");
        let draw = {
            let app = app.clone();
            move |key: u64| {
                let mut r = rng(key, 0xA44);
                app.sample(&mut r, &mut |r2| sampler.term(r2, out_depth))
            }
        };
        match kind {
            ArrowKind::Table => Arrow::new(name, move |_, a| draw(fingerprint(seed, &[a]))),
            ArrowKind::ContextTable => Arrow::new(name, move |w, a| draw(fingerprint(seed, &[w, a]))),
            ArrowKind::Constant => {
                let fixed = draw(seed);
                Arrow::new(name, move |_, _| fixed.clone())
            }
            ArrowKind::Ret => Arrow::new(name, move |_, a| app.pure(dtm.ret(a.clone()))),
            ArrowKind::Echo => Arrow::new(name, move |w, a| app.pure(dtm.ret(sampler.echo_context(w, a)))),
            ArrowKind::EchoWithEffect => Arrow::new(name, move |w, a| {
                let shape = draw(fingerprint(seed, &[w, a]));
                let echoed = dtm.ret(sampler.echo_context(w, a));
                app.map(&|_| echoed.clone(), &shape)
            }),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn streams_replay() {
        let a: Vec<u64> = (0..5)
            .map({
                let mut r = rng(1, 2);
                move |_| below(&mut r, 1000)
            })
            .collect();
        let b: Vec<u64> = (0..5)
            .map({
                let mut r = rng(1, 2);
                move |_| below(&mut r, 1000)
            })
            .collect();
        let c: Vec<u64> = (0..5)
            .map({
                let mut r = rng(1, 3);
                move |_| below(&mut r, 1000)
            })
            .collect();
        assert_eq!(a, b);
        assert_ne!(a, c);
    }

    #[test]
    fn weighted_pick_respects_zero_weights() {
        let mut r = rng(0, 0);
        for _ in 0..200 {
            assert_eq!(pick_weighted(&mut r, &[(1, 0), (2, 5), (3, 0)]), 2);
        }
    }

    #[test]
    fn monoid_values_lie_in_carrier() {
        let mut r = rng(4, 4);
        for m in Monoid::ALL {
            for _ in 0..100 {
                assert!(m.contains(&monoid_value(m, &mut r)));
            }
        }
    }
}
