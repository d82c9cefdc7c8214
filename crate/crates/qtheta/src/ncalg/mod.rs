//! Free associative algebras over a [`Coeff`] field, tensor squares with
//! truncation, rewriting to PBW normal form and ideal membership.

mod element;
mod gen;
mod morphism;
mod rules;
mod tensor;

use thiserror::Error;

pub use element::NCElement;
pub(crate) use element::fmt_term;
pub use gen::{word_to_string, word_weight, Gen, Weight, Word, MAX_NODES};
pub use morphism::GeneratorMap;
pub use rules::{ideal_member, normal_form, reduce_pbw, Normalizer, Reducer, RelationSet, DEFAULT_STEP_CAP};
pub use tensor::{exp_coefficient, Cap, ExpFlavor, TensorElement, TensorKey};

use crate::linalg::SolveError;
use crate::scalars::Coeff;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("relation set {rules} has no rule for the out-of-order pair {pair}")]
    IncompleteRules { rules: String, pair: String },
    #[error("rewriting exceeded {0} steps")]
    StepCapExceeded(usize),
    #[error("degree bound {bound} is below the word degree {found}")]
    DegreeBoundTooSmall { bound: usize, found: usize },
    #[error("no image given for generator {0}")]
    MissingImage(String),
    #[error("exponential of an element with a non-positive term needs an explicit depth")]
    ZeroHeightTerm,
    #[error("coefficient field cannot represent a required scalar")]
    ScalarUnsupported,
    #[error(transparent)]
    Solve(#[from] SolveError),
    #[error("solution escapes the ansatz: {0}")]
    AnsatzEscape(String),
}

/// Exponential series `sum_{k <= depth} c_k x^k` of a single-algebra element.
///
/// Each `x^k` is truncated to words of weight height at most `max_height`.
pub fn exponential<S: Coeff>(
    x: &NCElement<S>,
    flavor: ExpFlavor,
    depth: u32,
    max_height: i32,
) -> Result<NCElement<S>, AlgebraError> {
    let mut out = NCElement::one();
    let mut power = NCElement::one();
    for k in 1..=depth {
        power = power.mul_truncated(x, max_height);
        if power.is_zero() {
            break;
        }
        out = &out + &power.scale(&exp_coefficient::<S>(flavor, k)?);
    }
    Ok(out)
}
