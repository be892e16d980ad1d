//! Exact computations on Lie algebra laws: structure constants, cochains and
//! their coboundaries, cohomology, formal and valued deformations,
//! contractions and rigidity.
//!
//! Everything is generic over an exact scalar type. The aliases below fix
//! the scalar to Gaussian rationals, the default used by the command line
//! tool and the catalog.

pub mod catalog;
pub mod cli;
pub mod cochain;
pub mod cohomology;
pub mod contraction;
pub mod deformation;
pub mod document;
pub mod error;
pub mod gaussian;
pub mod laurent;
pub mod law;
pub mod matrix;
pub mod scalar;
pub mod tuples;
pub mod variety;

pub use error::{Error, Result};
pub use gaussian::GaussianRational;
pub use laurent::{Laurent, LaurentFraction};
pub use law::{BasisChange, StructureConstants};
pub use matrix::Matrix;
pub use scalar::{Field, Ring};

/// Rational numbers.
pub type Rational = num_rational::BigRational;
/// A law over the Gaussian rationals.
pub type Law = StructureConstants<GaussianRational>;
/// Laurent polynomials in `eps` over the Gaussian rationals.
pub type EpsilonScalar = Laurent<GaussianRational>;
/// Quotients of [`EpsilonScalar`] values.
pub type EpsilonFraction = LaurentFraction<GaussianRational>;
/// A law whose structure constants depend on `eps`.
pub type PerturbedLaw = StructureConstants<EpsilonScalar>;
pub type ExactMatrix = Matrix<GaussianRational>;
