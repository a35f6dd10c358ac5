//! Continuation-based quantifier scope on finite models.

pub mod error;
pub mod evaluator;
pub mod fincore;
pub mod gen;
pub mod lexicon;
pub mod monads;
pub mod scopetrees;
pub mod strengths;
pub mod transforms;

pub use error::{Error, Result};
pub use fincore::{FinMap, FinSet, Pred, ProdSet};
pub use lexicon::{make_gq, Determiner, GQuant};
pub use monads::{t_map, t_mult, t_unit, Elem, Monad, Morphism, Obj, TValue};
