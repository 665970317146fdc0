//! Exact computer algebra for twist deformations of spacetime symmetries.
//!
//! The crate builds the Jordanian and Abelian twist families on the algebra
//! of polynomial differential operators, computes their star products and
//! deformed Hopf structures modulo a power of the deformation parameter `a`,
//! verifies the realization identities of the associated kappa-Minkowski
//! algebra, and evaluates the resulting dispersion relations numerically.

pub mod closed_forms;
pub mod dispersion;
pub mod error;
pub mod gauss;
pub mod generators;
pub mod hopf;
pub mod lie;
pub mod realization;
pub mod series;
pub mod twist;
pub mod weyl;

pub use error::{Error, Result};
pub use gauss::{Gauss, Rational};
pub use series::TruncatedSeries;
pub use weyl::{DiffOp, Monomial, Poly, Tensor, Tensor3, TensorOp};

/// Default truncation order in the deformation parameter.
pub const DEFAULT_ORDER: usize = 6;
/// Default spacetime dimension.
pub const DEFAULT_DIM: usize = 4;
