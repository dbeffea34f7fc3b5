//! Seeded random terms.

use rand_chacha::ChaCha8Rng;

use super::term::{DynTerm, Leaf, LnTerm, LnVar, NamedTerm, Term};
use super::{AnyTerm, Mode};
use crate::sample::{self, pick_weighted, pool_atom, TermSampler};
use crate::value::{Atom, Value};

#[derive(Clone, Copy)]
enum Node {
    Var,
    App,
    Lam,
}

/// A random tree of depth at most `max_depth`.
pub fn gen_shape<B, V>(
    rng: &mut ChaCha8Rng,
    max_depth: usize,
    binder: &mut dyn FnMut(&mut ChaCha8Rng) -> B,
    leaf: &mut dyn FnMut(&mut ChaCha8Rng) -> V,
) -> Term<B, V> {
    let node =
        if max_depth <= 1 { Node::Var } else { pick_weighted(rng, &[(Node::Var, 1), (Node::App, 2), (Node::Lam, 2)]) };
    match node {
        Node::Var => Term::Var(leaf(rng)),
        Node::App => {
            let a = gen_shape(rng, max_depth - 1, binder, leaf);
            let b = gen_shape(rng, max_depth - 1, binder, leaf);
            Term::app(a, b)
        }
        Node::Lam => {
            let b = binder(rng);
            Term::lam(b, gen_shape(rng, max_depth - 1, binder, leaf))
        }
    }
}

/// Free atoms from the pool and indices `0..=3`, evenly.
pub fn ln_leaf(rng: &mut ChaCha8Rng) -> LnVar {
    if sample::chance(rng, 0.5) {
        LnVar::Fvar(pool_atom(rng))
    } else {
        LnVar::Bvar(sample::below(rng, 4))
    }
}

pub fn gen_ln_term(seed: u64, max_depth: usize) -> LnTerm {
    let mut rng = sample::rng(seed, 0x7E);
    gen_shape(&mut rng, max_depth, &mut |_| (), &mut ln_leaf)
}

pub fn gen_named_term(seed: u64, max_depth: usize) -> NamedTerm {
    let mut rng = sample::rng(seed, 0x7E);
    gen_shape(&mut rng, max_depth, &mut pool_atom, &mut pool_atom)
}

pub fn gen_term(seed: u64, max_depth: usize, mode: Mode) -> AnyTerm {
    match mode {
        Mode::LocallyNameless => AnyTerm::Ln(gen_ln_term(seed, max_depth)),
        Mode::Named => AnyTerm::Named(gen_named_term(seed, max_depth)),
    }
}

/// Samples dynamic lambda terms for the law suites.
#[derive(Clone, Copy, Debug)]
pub struct LambdaSampler {
    pub mode: Mode,
}

impl LambdaSampler {
    pub fn new(mode: Mode) -> Self {
        LambdaSampler { mode }
    }
}

impl TermSampler for LambdaSampler {
    fn leaf(&self, rng: &mut ChaCha8Rng) -> Value {
        match self.mode {
            Mode::LocallyNameless => ln_leaf(rng).to_value(),
            Mode::Named => Value::Atom(pool_atom(rng)),
        }
    }

    fn term_with(&self, rng: &mut ChaCha8Rng, depth: usize, leaf: &mut dyn FnMut(&mut ChaCha8Rng) -> Value) -> Value {
        let t: DynTerm = match self.mode {
            Mode::LocallyNameless => gen_shape(rng, depth, &mut |_| Value::Unit, leaf),
            Mode::Named => gen_shape(rng, depth, &mut |r| Value::Atom(pool_atom(r)), leaf),
        };
        Value::term(t)
    }

    fn echo_context(&self, ctx: &Value, leaf: &Value) -> Value {
        match self.mode {
            Mode::LocallyNameless => Value::Bvar(ctx.as_nat().expect("binder depth")),
            Mode::Named => {
                let binders: Vec<String> = ctx.as_list().expect("binder list").iter().map(Value::to_string).collect();
                Value::Atom(Atom::new(format!("{leaf}_{}", binders.join(""))))
            }
        }
    }
}
