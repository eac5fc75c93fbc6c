//! Exact coefficients: rationals, Gaussian rationals, exponent vectors and
//! polynomials in the deformation symbols.

mod config;
mod deformation;
pub mod format;
mod gaussian;
mod multi_index;
mod rational;

pub use config::{DeformationMode, SpaceConfig};
pub use deformation::DeformationPoly;
pub use format::Style;
pub use gaussian::GaussianRational;
pub use multi_index::{MultiIndex, MAX_DIM};
pub use rational::{binomial, inverse_factorial, ParseRationalError, Rational};
