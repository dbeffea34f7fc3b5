//! The untyped lambda calculus as a decorated traversable monad.

mod gen;
mod instance;
mod json;
pub mod oracle;
mod parse;
mod structural;
mod term;

use std::fmt;

pub use gen::{gen_ln_term, gen_named_term, gen_shape, gen_term, ln_leaf, LambdaSampler};
pub use instance::{KleisliFault, LambdaDtm};
pub use json::{ln_from_json, ln_to_json, named_from_json, named_to_json};
pub use parse::{parse_ln, parse_named, ParseError};
pub use structural::{CategoricalFault, StructuralLambda};
pub use term::{BinderLabel, DynTerm, Leaf, LnTerm, LnVar, NamedTerm, Term};

use crate::error::Result;
use crate::monoid::Monoid;
use crate::value::Value;

/// Which binder representation terms use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Mode {
    Named,
    LocallyNameless,
}

impl Mode {
    /// `ℕ` under addition for locally nameless terms, binder lists for named ones.
    pub fn ctx_monoid(self) -> Monoid {
        match self {
            Mode::Named => Monoid::FreeList,
            Mode::LocallyNameless => Monoid::NatSum,
        }
    }

    /// What a `Lam` carrying binder `b` contributes to the context.
    pub fn binder_ctx(self, b: &Value) -> Value {
        match self {
            Mode::Named => Value::list(vec![b.clone()]),
            Mode::LocallyNameless => Value::Nat(1),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Named => "named",
            Mode::LocallyNameless => "ln",
        })
    }
}

/// A term in either representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum AnyTerm {
    Ln(LnTerm),
    Named(NamedTerm),
}

impl AnyTerm {
    pub fn parse(text: &str, mode: Mode) -> Result<AnyTerm> {
        Ok(match mode {
            Mode::LocallyNameless => AnyTerm::Ln(parse_ln(text)?),
            Mode::Named => AnyTerm::Named(parse_named(text)?),
        })
    }

    pub fn from_json(j: &serde_json::Value, mode: Mode) -> Result<AnyTerm> {
        Ok(match mode {
            Mode::LocallyNameless => AnyTerm::Ln(ln_from_json(j)?),
            Mode::Named => AnyTerm::Named(named_from_json(j)?),
        })
    }

    pub fn mode(&self) -> Mode {
        match self {
            AnyTerm::Ln(_) => Mode::LocallyNameless,
            AnyTerm::Named(_) => Mode::Named,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        match self {
            AnyTerm::Ln(t) => ln_to_json(t),
            AnyTerm::Named(t) => named_to_json(t),
        }
    }

    pub fn to_value(&self) -> Value {
        match self {
            AnyTerm::Ln(t) => t.to_value(),
            AnyTerm::Named(t) => t.to_value(),
        }
    }
}

impl fmt::Display for AnyTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AnyTerm::Ln(t) => write!(f, "{t}"),
            AnyTerm::Named(t) => write!(f, "{t}"),
        }
    }
}

/// Parses `text` in the given mode.
pub fn parse_term(text: &str, mode: Mode) -> Result<AnyTerm> {
    AnyTerm::parse(text, mode)
}

/// Canonical text of a term; parsing it back yields the same term.
pub fn print_term(t: &AnyTerm) -> String {
    t.to_string()
}
