//! Decorated traversable monads for syntax with binders.
//!
//! The core abstraction is [`dtm::Dtm`]: a `ret` and a `binddt` that maps
//! each leaf, together with the binders above it, to an effectful subtree.
//! Substitution, opening, local closure and free variables are all single
//! `binddt` calls ([`ln`]), and every law the abstraction promises has an
//! executable, sampled check.

pub mod applicative;
pub mod categorical;
pub mod cli;
pub mod dtm;
pub mod error;
pub mod lambda;
pub mod ln;
pub mod monoid;
pub mod report;
pub mod sample;
pub mod seq;
pub mod value;

pub use applicative::{Applicative, Morphism};
pub use categorical::{CategoricalDtm, FromKleisli, KleisliFromCategorical};
pub use dtm::{Dtm, Registry};
pub use error::{Error, Result};
pub use lambda::{AnyTerm, LambdaDtm, LnTerm, LnVar, Mode, NamedTerm, Term};
pub use monoid::{Decorated, Monoid};
pub use report::{LawOutcome, LawReport};
pub use sample::SampleConfig;
pub use value::{Atom, Value};
