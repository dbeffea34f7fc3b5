//! Tagged JSON form: `{"var": v}`, `{"app": [t1, t2]}`,
//! `{"lam": {"binder": b, "body": t}}`. Locally nameless leaves are
//! `{"fvar": "a"}` or `{"bvar": 0}`; their binders are `null`.

use serde_json::{json, Value as Json};

use super::term::{LnTerm, LnVar, NamedTerm, Term};
use crate::error::{Error, Result};
use crate::value::Atom;

fn to_json<B, V>(t: &Term<B, V>, binder: &dyn Fn(&B) -> Json, leaf: &dyn Fn(&V) -> Json) -> Json {
    match t {
        Term::Var(v) => json!({ "var": leaf(v) }),
        Term::App(a, b) => json!({ "app": [to_json(a, binder, leaf), to_json(b, binder, leaf)] }),
        Term::Lam(x, body) => json!({ "lam": { "binder": binder(x), "body": to_json(body, binder, leaf) } }),
    }
}

fn ln_leaf_json(v: &LnVar) -> Json {
    match v {
        LnVar::Fvar(a) => json!({ "fvar": a.as_str() }),
        LnVar::Bvar(n) => json!({ "bvar": n }),
    }
}

pub fn ln_to_json(t: &LnTerm) -> Json {
    to_json(t, &|_| Json::Null, &ln_leaf_json)
}

pub fn named_to_json(t: &NamedTerm) -> Json {
    to_json(t, &|b| json!(b.as_str()), &|v| json!(v.as_str()))
}

fn bad(what: &str, j: &Json) -> Error {
    Error::Json(format!("expected {what}, got {j}"))
}

fn from_json<B, V>(
    j: &Json,
    binder: &dyn Fn(&Json) -> Result<B>,
    leaf: &dyn Fn(&Json) -> Result<V>,
) -> Result<Term<B, V>> {
    let obj = j.as_object().filter(|o| o.len() == 1).ok_or_else(|| bad("a single-key term object", j))?;
    let (tag, body) = obj.iter().next().expect("one entry");
    match tag.as_str() {
        "var" => Ok(Term::Var(leaf(body)?)),
        "app" => match body.as_array().map(Vec::as_slice) {
            Some([a, b]) => Ok(Term::app(from_json(a, binder, leaf)?, from_json(b, binder, leaf)?)),
            _ => Err(bad("a two-element array", body)),
        },
        "lam" => {
            let b = body.get("binder").ok_or_else(|| bad("a lam with a binder", body))?;
            let t = body.get("body").ok_or_else(|| bad("a lam with a body", body))?;
            Ok(Term::lam(binder(b)?, from_json(t, binder, leaf)?))
        }
        _ => Err(bad("one of var, app, lam", j)),
    }
}

fn atom_json(j: &Json) -> Result<Atom> {
    j.as_str().map(Atom::new).ok_or_else(|| bad("an atom string", j))
}

pub fn ln_from_json(j: &Json) -> Result<LnTerm> {
    from_json(j, &|b| if b.is_null() { Ok(()) } else { Err(bad("null binder", b)) }, &|v| {
        if let Some(a) = v.get("fvar") {
            Ok(LnVar::Fvar(atom_json(a)?))
        } else if let Some(n) = v.get("bvar") {
            n.as_u64().map(LnVar::Bvar).ok_or_else(|| bad("a natural index", n))
        } else {
            Err(bad("fvar or bvar", v))
        }
    })
}

pub fn named_from_json(j: &Json) -> Result<NamedTerm> {
    from_json(j, &atom_json, &atom_json)
}
