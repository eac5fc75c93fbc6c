//! Exact symbolic engine for the κ-deformed phase space.

pub mod algebroid;
pub mod cli;
pub mod error;
pub mod linalg;
pub mod poincare;
pub mod realization;
pub mod report;
pub mod scalars;
pub mod tensor;
pub mod terms;
pub mod twist;
pub mod weyl;

pub use error::{Error, Result};
