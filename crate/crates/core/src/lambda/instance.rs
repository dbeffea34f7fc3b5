use std::sync::Arc;

use super::term::{DynTerm, Term};
use super::Mode;
use crate::applicative::Applicative;
use crate::dtm::Dtm;
use crate::monoid::{ctx_prepend, writer_ret, Monoid};
use crate::value::{Atom, Value};

/// Deliberate defects, for checking that the law suites catch them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KleisliFault {
    /// `Lam` recurses with `f` instead of `f ⊙ [b]`.
    ForgetsCtxPrepend,
    /// `Var` hands `f` a one-binder context instead of the monoid unit.
    VarIgnoresUnit,
}

/// Lambda terms with `binddt` by structural recursion.
#[derive(Clone, Copy, Debug)]
pub struct LambdaDtm {
    pub mode: Mode,
    fault: Option<KleisliFault>,
}

impl LambdaDtm {
    pub fn new(mode: Mode) -> Self {
        LambdaDtm { mode, fault: None }
    }

    pub fn ln() -> Self {
        Self::new(Mode::LocallyNameless)
    }

    pub fn named() -> Self {
        Self::new(Mode::Named)
    }

    pub fn faulty(mode: Mode, fault: KleisliFault) -> Self {
        LambdaDtm { mode, fault: Some(fault) }
    }

    fn go(&self, app: &Applicative, f: &dyn Fn(&Value, &Value) -> Value, t: &DynTerm) -> Value {
        let m = self.mode.ctx_monoid();
        match t {
            Term::Var(v) => {
                let d = writer_ret(v.clone(), m);
                match self.fault {
                    Some(KleisliFault::VarIgnoresUnit) => f(&self.one_binder(), &d.payload),
                    _ => f(&d.ctx, &d.payload),
                }
            }
            Term::App(t1, t2) => {
                let ctor = Value::func("App", |a| {
                    Value::func("App a", move |b| Value::term(Term::App(subtree(&a), subtree(&b))))
                });
                let r1 = self.go(app, f, t1);
                let r2 = self.go(app, f, t2);
                app.ap(&app.ap(&app.pure(ctor), &r1), &r2)
            }
            Term::Lam(b, body) => {
                let binder = b.clone();
                let ctor = Value::func("Lam", move |t| Value::term(Term::Lam(binder.clone(), subtree(&t))));
                let r = match self.fault {
                    Some(KleisliFault::ForgetsCtxPrepend) => self.go(app, f, body),
                    _ => self.go(app, &ctx_prepend(f, self.mode.binder_ctx(b), m), body),
                };
                app.ap(&app.pure(ctor), &r)
            }
        }
    }

    fn one_binder(&self) -> Value {
        self.mode.binder_ctx(&Value::Atom(Atom::new("_")))
    }
}

fn subtree(v: &Value) -> Arc<DynTerm> {
    match v {
        Value::Term(t) => Arc::clone(t),
        other => panic!("expected a lambda term, got {other}"),
    }
}

impl Dtm for LambdaDtm {
    fn name(&self) -> String {
        match self.fault {
            None => format!("lambda[{}]", self.mode),
            Some(fault) => format!("lambda[{}, {fault:?}]", self.mode),
        }
    }

    fn ctx_monoid(&self) -> Monoid {
        self.mode.ctx_monoid()
    }

    fn ret(&self, a: Value) -> Value {
        Value::term(Term::Var(a))
    }

    fn binddt(&self, app: &Applicative, f: &dyn Fn(&Value, &Value) -> Value, t: &Value) -> Value {
        self.go(app, f, &subtree(t))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dtm::{derived_dec, derived_dist, derived_map, derived_traverse};
    use crate::lambda::oracle;
    use crate::lambda::{parse_ln, Leaf, LnVar};

    fn ln(text: &str) -> Value {
        parse_ln(text).unwrap().to_value()
    }

    #[test]
    fn var_clause_calls_f_at_the_unit() {
        let dtm = LambdaDtm::ln();
        let f = |w: &Value, a: &Value| Value::pair(w.clone(), a.clone());
        let out = dtm.binddt(&Applicative::Identity, &f, &dtm.ret(Value::fvar("v")));
        assert_eq!(out, Value::pair(Value::Nat(0), Value::fvar("v")));
    }

    #[test]
    fn leaf_count_through_const() {
        let dtm = LambdaDtm::ln();
        let app = Applicative::Const(Monoid::NatSum);
        let out = dtm.binddt(&app, &|_, _| Value::Nat(1), &ln("\\ . #0 #1"));
        assert_eq!(out, Value::Nat(2));
    }

    #[test]
    fn effects_run_left_to_right() {
        let dtm = LambdaDtm::ln();
        let app = Applicative::Const(Monoid::FreeList);
        let f = |_: &Value, a: &Value| match a {
            Value::Fvar(x) => Value::list(vec![Value::Atom(x.clone())]),
            _ => Value::list(vec![]),
        };
        let out = dtm.binddt(&app, &f, &ln("a (\\ . b #0) c"));
        assert_eq!(out.to_string(), "[a, b, c]");
    }

    #[test]
    fn dec_matches_oracle_vectors() {
        let dtm = LambdaDtm::ln();
        let t = parse_ln("\\ . \\ . #0 #1").unwrap();
        let expected = oracle::dec_ln(&t).to_value();
        assert_eq!(derived_dec(&dtm, &t.to_value()), expected);
    }

    #[test]
    fn map_and_dist_vectors() {
        let dtm = LambdaDtm::ln();
        let swap = |v: &Value| match v {
            Value::Fvar(a) if a.as_str() == "a" => Value::fvar("b"),
            Value::Fvar(a) if a.as_str() == "b" => Value::fvar("a"),
            other => other.clone(),
        };
        assert_eq!(derived_map(&dtm, &swap, &ln("a b")), ln("b a"));

        let t = Term::app(Term::Var(Value::some(Value::Nat(1))), Term::Var(Value::none()));
        assert_eq!(derived_dist(&dtm, &Applicative::Maybe, &Value::term(t)), Value::none());
        let t = Term::app(Term::Var(Value::Nat(1)), Term::lam(Value::Unit, Term::Var(Value::Nat(1))));
        assert_eq!(derived_dist(&dtm, &Applicative::Const(Monoid::NatSum), &Value::term(t)), Value::Nat(2));

        let sets = Applicative::Const(Monoid::AtomSet);
        let leaves = |v: &Value| match v {
            Value::Fvar(a) => Value::set([Value::Atom(a.clone())]),
            _ => Value::set([]),
        };
        assert_eq!(derived_traverse(&dtm, &sets, &leaves, &ln("a (\\ . b a #0)")).to_string(), "{a, b}");
    }

    #[test]
    fn decorated_leaves_read_back() {
        let dtm = LambdaDtm::ln();
        let out = derived_dec(&dtm, &ln("\\ . #0"));
        let typed = Term::<(), crate::monoid::Decorated<LnVar>>::from_value(&out).unwrap();
        assert_eq!(typed.leaves()[0].ctx, Value::Nat(1));
    }
}
