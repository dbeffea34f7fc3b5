use proptest::prelude::*;

use dtm::dtm::{derived_bind, derived_dec};
use dtm::lambda::oracle::{
    bind_oracle, dec_ln, dec_named, fv_oracle, lc_oracle, leaf_count, open_oracle, subst_oracle,
};
use dtm::lambda::{gen_ln_term, gen_named_term, LambdaDtm, Leaf, LnVar};
use dtm::ln::{fv_term, lc_term, open_term, subst_term};
use dtm::{Applicative, Atom, Dtm, LnTerm, Monoid, Term, Value};

fn atom() -> impl Strategy<Value = Atom> {
    prop::sample::select(vec!["a", "b", "c", "d"]).prop_map(Atom::new)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn subst_matches_structural_recursion(seed in any::<u64>(), useed in any::<u64>(), x in atom()) {
        let t = gen_ln_term(seed, 8);
        let u = gen_ln_term(useed, 3);
        prop_assert_eq!(subst_term(&x, &u, &t), subst_oracle(&x, &u, &t));
    }

    #[test]
    fn open_matches_structural_recursion(seed in any::<u64>(), useed in any::<u64>()) {
        let t = gen_ln_term(seed, 8);
        let u = gen_ln_term(useed, 3);
        prop_assert_eq!(open_term(&u, &t), open_oracle(&u, &t));
    }

    #[test]
    fn lc_and_fv_match_structural_recursion(seed in any::<u64>()) {
        let t = gen_ln_term(seed, 8);
        prop_assert_eq!(lc_term(&t), lc_oracle(&t));
        prop_assert_eq!(fv_term(&t), fv_oracle(&t));
    }

    #[test]
    fn dec_matches_structural_recursion(seed in any::<u64>()) {
        let t = gen_ln_term(seed, 8);
        prop_assert_eq!(derived_dec(&LambdaDtm::ln(), &t.to_value()), dec_ln(&t).to_value());
        let n = gen_named_term(seed, 8);
        prop_assert_eq!(derived_dec(&LambdaDtm::named(), &n.to_value()), dec_named(&n).to_value());
    }

    #[test]
    fn bind_matches_naive_substitution(seed in any::<u64>(), useed in any::<u64>()) {
        let t = gen_ln_term(seed, 8);
        let u = gen_ln_term(useed, 3);
        let f = |v: &LnVar| match v {
            LnVar::Fvar(_) => u.clone(),
            LnVar::Bvar(_) => Term::Var(v.clone()),
        };
        let dtm = LambdaDtm::ln();
        let by_binddt = derived_bind(&dtm, &|v| f(&LnVar::from_value(v).unwrap()).to_value(), &t.to_value());
        prop_assert_eq!(by_binddt, bind_oracle(&f, &t).to_value());
    }

    #[test]
    fn counting_traversal_counts_leaves(seed in any::<u64>()) {
        let t = gen_ln_term(seed, 8);
        let dtm = LambdaDtm::ln();
        let counted = dtm.binddt(&Applicative::Const(Monoid::NatSum), &|_, _| Value::Nat(1), &t.to_value());
        prop_assert_eq!(counted, Value::Nat(leaf_count(&t)));
    }
}

#[test]
fn open_then_lc_on_closed_bodies() {
    let body: LnTerm = dtm::lambda::parse_ln("#0 (\\ . #0 #1)").unwrap();
    assert!(!lc_term(&body));
    assert!(lc_term(&open_term(&LnTerm::fvar("a"), &body)));
}
