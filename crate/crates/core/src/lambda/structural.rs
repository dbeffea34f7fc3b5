//! The categorical operations on lambda terms, each by direct recursion.

use std::sync::Arc;

use super::term::{DynTerm, Term};
use super::Mode;
use crate::applicative::Applicative;
use crate::categorical::CategoricalDtm;
use crate::monoid::Monoid;
use crate::value::Value;

/// Deliberate defects, for checking that the axiom suite catches them.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CategoricalFault {
    /// `dec` under a `Lam` forgets the binders above it.
    DecDropsOuterBinders,
    /// `dist` runs the effects of both `App` arguments twice.
    DistVisitsTwice,
}

#[derive(Clone, Copy, Debug)]
pub struct StructuralLambda {
    pub mode: Mode,
    fault: Option<CategoricalFault>,
}

impl StructuralLambda {
    pub fn new(mode: Mode) -> Self {
        StructuralLambda { mode, fault: None }
    }

    pub fn faulty(mode: Mode, fault: CategoricalFault) -> Self {
        StructuralLambda { mode, fault: Some(fault) }
    }
}

fn tree(v: &Value) -> &DynTerm {
    v.as_term().unwrap_or_else(|| panic!("expected a lambda term, got {v}"))
}

fn subtree(v: &Value) -> Arc<DynTerm> {
    match v {
        Value::Term(t) => Arc::clone(t),
        other => panic!("expected a lambda term, got {other}"),
    }
}

fn map_rec(f: &dyn Fn(&Value) -> Value, t: &DynTerm) -> DynTerm {
    match t {
        Term::Var(v) => Term::Var(f(v)),
        Term::App(a, b) => Term::app(map_rec(f, a), map_rec(f, b)),
        Term::Lam(x, body) => Term::lam(x.clone(), map_rec(f, body)),
    }
}

fn join_rec(t: &DynTerm) -> DynTerm {
    match t {
        Term::Var(inner) => tree(inner).clone(),
        Term::App(a, b) => Term::app(join_rec(a), join_rec(b)),
        Term::Lam(x, body) => Term::lam(x.clone(), join_rec(body)),
    }
}

impl StructuralLambda {
    fn dec_rec(&self, w: &Value, t: &DynTerm) -> DynTerm {
        let m = self.mode.ctx_monoid();
        match t {
            Term::Var(v) => Term::Var(Value::pair(w.clone(), v.clone())),
            Term::App(a, b) => Term::app(self.dec_rec(w, a), self.dec_rec(w, b)),
            Term::Lam(x, body) => {
                let inner = match self.fault {
                    Some(CategoricalFault::DecDropsOuterBinders) => self.mode.binder_ctx(x),
                    _ => m.combine(w, &self.mode.binder_ctx(x)),
                };
                Term::lam(x.clone(), self.dec_rec(&inner, body))
            }
        }
    }

    fn dist_rec(&self, app: &Applicative, t: &DynTerm) -> Value {
        match t {
            Term::Var(fa) => app.map(&|a| Value::term(Term::Var(a.clone())), fa),
            Term::App(a, b) => {
                let ra = self.dist_rec(app, a);
                let rb = self.dist_rec(app, b);
                let mk = Arc::new(|x: Value, y: Value| Value::term(Term::App(subtree(&x), subtree(&y))));
                let once = app.lift2("App", mk, &ra, &rb);
                match self.fault {
                    Some(CategoricalFault::DistVisitsTwice) => {
                        let again = app.lift2("pair", Arc::new(|x, _| x), &ra, &rb);
                        app.lift2("first", Arc::new(|x, _| x), &once, &again)
                    }
                    _ => once,
                }
            }
            Term::Lam(x, body) => {
                let x = x.clone();
                app.map(&|b| Value::term(Term::Lam(x.clone(), subtree(b))), &self.dist_rec(app, body))
            }
        }
    }
}

impl CategoricalDtm for StructuralLambda {
    fn name(&self) -> String {
        match self.fault {
            None => format!("structural-lambda[{}]", self.mode),
            Some(fault) => format!("structural-lambda[{}, {fault:?}]", self.mode),
        }
    }

    fn ctx_monoid(&self) -> Monoid {
        self.mode.ctx_monoid()
    }

    fn ret(&self, a: Value) -> Value {
        Value::term(Term::Var(a))
    }

    fn map(&self, f: &dyn Fn(&Value) -> Value, t: &Value) -> Value {
        Value::term(map_rec(f, tree(t)))
    }

    fn join(&self, tt: &Value) -> Value {
        Value::term(join_rec(tree(tt)))
    }

    fn dec(&self, t: &Value) -> Value {
        Value::term(self.dec_rec(&self.mode.ctx_monoid().unit(), tree(t)))
    }

    fn dist(&self, app: &Applicative, t: &Value) -> Value {
        self.dist_rec(app, tree(t))
    }
}
