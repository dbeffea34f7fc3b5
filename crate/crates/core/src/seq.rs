//! Flat sequences of leaves as a DTM with trivial decoration.
//!
//! No binders exist, so every context is the unit of `ℕ`. Useful for checking
//! that generic operations assume nothing beyond the DTM interface.

use std::sync::Arc;

use rand_chacha::ChaCha8Rng;

use crate::applicative::Applicative;
use crate::dtm::Dtm;
use crate::lambda::ln_leaf;
use crate::lambda::Leaf;
use crate::monoid::Monoid;
use crate::sample::{below, TermSampler};
use crate::value::Value;

#[derive(Clone, Copy, Debug, Default)]
pub struct SeqDtm;

fn items(t: &Value) -> &[Value] {
    t.as_list().unwrap_or_else(|| panic!("expected a sequence, got {t}"))
}

impl Dtm for SeqDtm {
    fn name(&self) -> String {
        "seq".into()
    }

    fn ctx_monoid(&self) -> Monoid {
        Monoid::NatSum
    }

    fn ret(&self, a: Value) -> Value {
        Value::list(vec![a])
    }

    fn binddt(&self, app: &Applicative, f: &dyn Fn(&Value, &Value) -> Value, t: &Value) -> Value {
        let unit = Monoid::NatSum.unit();
        let concat = Arc::new(|xs: Value, ys: Value| {
            let mut out = items(&xs).to_vec();
            out.extend_from_slice(items(&ys));
            Value::list(out)
        });
        items(t)
            .iter()
            .fold(app.pure(Value::list(Vec::new())), |acc, a| app.lift2("concat", concat.clone(), &acc, &f(&unit, a)))
    }
}

/// Sequences of locally nameless leaves, length below the depth bound.
#[derive(Clone, Copy, Debug, Default)]
pub struct SeqSampler;

impl TermSampler for SeqSampler {
    fn leaf(&self, rng: &mut ChaCha8Rng) -> Value {
        ln_leaf(rng).to_value()
    }

    fn term_with(&self, rng: &mut ChaCha8Rng, depth: usize, leaf: &mut dyn FnMut(&mut ChaCha8Rng) -> Value) -> Value {
        let len = below(rng, depth as u64 + 1);
        Value::list((0..len).map(|_| leaf(rng)).collect())
    }

    fn echo_context(&self, ctx: &Value, _leaf: &Value) -> Value {
        Value::Bvar(ctx.as_nat().expect("trivial context"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dtm::{check_bind_laws, check_kleisli_dtm_laws, derived_dec, Registry};
    use crate::sample::SampleConfig;

    #[test]
    fn traversal_runs_left_to_right() {
        let t = Value::list(vec![Value::fvar("a"), Value::fvar("b")]);
        let app = Applicative::Const(Monoid::FreeList);
        let out = SeqDtm.binddt(&app, &|_, a| Value::list(vec![a.clone()]), &t);
        assert_eq!(out.to_string(), "[a, b]");
        let dec = derived_dec(&SeqDtm, &t);
        assert_eq!(dec.to_string(), "[(0, a), (0, b)]");
    }

    #[test]
    fn is_a_lawful_dtm() {
        let cfg = SampleConfig { seed: 3, samples: 200, depth: 4 };
        let report = check_kleisli_dtm_laws(&SeqDtm, &SeqSampler, &Registry::standard(), &cfg);
        assert!(report.passed(), "{report}");
        assert!(check_bind_laws(&SeqDtm, &SeqSampler, &cfg).passed());
    }
}
