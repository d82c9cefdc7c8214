//! Exact symbolic computation in Yangians and the quantum affine algebra of
//! `sl_3`: PBW rewriting, Theta-series solvers, Cartan-current series, the
//! prefundamental module `L_1^-` and R-matrix monodromy checks.

pub mod cartan;
pub mod health;
pub mod linalg;
pub mod ncalg;
pub mod prefund;
pub mod qaffine;
pub mod report;
pub mod rmatrix;
pub mod yangian;
pub mod scalars;

pub use scalars::{LaurentQ, Rational, RatFuncQ};

/// Yangian element over the rationals.
pub type YElement = ncalg::NCElement<Rational>;
/// Quantum affine element over `Q(q)`.
pub type QElement = ncalg::NCElement<RatFuncQ>;
pub type YTensor = ncalg::TensorElement<Rational>;
pub type QTensor = ncalg::TensorElement<RatFuncQ>;
