use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::deformation::DeformationPoly;
use super::gaussian::GaussianRational;
use super::multi_index::MAX_DIM;
use crate::error::{Error, Result};

/// How the deformation vector `a_μ` is instantiated by formal symbols.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DeformationMode {
    /// `n` independent symbols `a_0, …, a_{n−1}`.
    Generic,
    /// `a = (a_0, 0, …, 0)`.
    Time,
    /// `a = (0, a_1, 0, …, 0)`.
    Space,
    /// `a = (ℓ, ℓ, 0, …, 0)`, so that `a^μ a_μ` vanishes identically.
    Light,
}

impl DeformationMode {
    pub fn name(self) -> &'static str {
        match self {
            DeformationMode::Generic => "generic",
            DeformationMode::Time => "time",
            DeformationMode::Space => "space",
            DeformationMode::Light => "light",
        }
    }
}

impl fmt::Display for DeformationMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for DeformationMode {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "generic" => Ok(DeformationMode::Generic),
            "time" | "time-like" => Ok(DeformationMode::Time),
            "space" | "space-like" => Ok(DeformationMode::Space),
            "light" | "light-like" => Ok(DeformationMode::Light),
            other => Err(Error::InvalidConfig(format!("unknown deformation mode '{other}'"))),
        }
    }
}

/// Dimension, truncation order and deformation mode shared by every value of
/// one computation. The metric is always `diag(−1, 1, …, 1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SpaceConfig {
    pub dim: usize,
    pub order: usize,
    pub mode: DeformationMode,
}

impl SpaceConfig {
    pub fn new(dim: usize, order: usize, mode: DeformationMode) -> Result<Self> {
        if !(2..=MAX_DIM).contains(&dim) {
            return Err(Error::InvalidConfig(format!("dimension must be in 2..={MAX_DIM}, got {dim}")));
        }
        if order > 40 {
            return Err(Error::InvalidConfig(format!("truncation order {order} is unreasonably large")));
        }
        Ok(SpaceConfig { dim, order, mode })
    }

    /// Same space with a different truncation order.
    pub fn with_order(self, order: usize) -> Self {
        SpaceConfig { order, ..self }
    }

    pub fn check_index(&self, mu: usize) -> Result<()> {
        if mu < self.dim {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index: mu, dim: self.dim })
        }
    }

    /// Diagonal metric entry `η_{μμ}` (equal to `η^{μμ}`).
    pub fn metric(&self, mu: usize) -> i64 {
        if mu == 0 {
            -1
        } else {
            1
        }
    }

    /// Sign picked up when raising or lowering index `μ`.
    pub fn raise_index(&self, mu: usize) -> Result<i64> {
        self.check_index(mu)?;
        Ok(self.metric(mu))
    }

    pub fn num_symbols(&self) -> usize {
        match self.mode {
            DeformationMode::Generic => self.dim,
            _ => 1,
        }
    }

    /// Printed name of deformation symbol `j`.
    pub fn symbol_name(&self, j: usize) -> String {
        match self.mode {
            DeformationMode::Generic => format!("a_{j}"),
            DeformationMode::Time => "a_0".into(),
            DeformationMode::Space => "a_1".into(),
            DeformationMode::Light => "l".into(),
        }
    }

    /// `a_μ` as a polynomial in the deformation symbols.
    pub fn a(&self, mu: usize) -> DeformationPoly {
        assert!(mu < self.dim, "index {mu} out of range");
        match self.mode {
            DeformationMode::Generic => DeformationPoly::symbol(*self, mu),
            DeformationMode::Time if mu == 0 => DeformationPoly::symbol(*self, 0),
            DeformationMode::Space if mu == 1 => DeformationPoly::symbol(*self, 0),
            DeformationMode::Light if mu <= 1 => DeformationPoly::symbol(*self, 0),
            _ => DeformationPoly::zero(*self),
        }
    }

    /// `a^μ = η^{μν} a_ν`.
    pub fn a_up(&self, mu: usize) -> DeformationPoly {
        self.a(mu).scale(&GaussianRational::from_int(self.metric(mu)))
    }

    /// Checked access to `a^μ` / `a_μ`.
    pub fn a_index(&self, mu: usize, upper: bool) -> Result<DeformationPoly> {
        self.check_index(mu)?;
        Ok(if upper { self.a_up(mu) } else { self.a(mu) })
    }

    /// `a^μ a_μ`.
    pub fn a_squared(&self) -> DeformationPoly {
        let mut acc = DeformationPoly::zero(*self);
        for mu in 0..self.dim {
            acc = &acc + &(&self.a_up(mu) * &self.a(mu));
        }
        acc
    }

    /// Indices `μ` with `a_μ ≠ 0`.
    pub fn deformed_indices(&self) -> Vec<usize> {
        (0..self.dim).filter(|&mu| !self.a(mu).is_zero()).collect()
    }
}

impl fmt::Display for SpaceConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "dim={} order={} mode={}", self.dim, self.order, self.mode)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(mode: DeformationMode) -> SpaceConfig {
        SpaceConfig::new(4, 3, mode).unwrap()
    }

    #[test]
    fn raising_flips_time_component_only() {
        let c = cfg(DeformationMode::Generic);
        assert_eq!(c.a_up(0), -c.a(0));
        assert_eq!(c.a_up(1), c.a(1));
        // round trip
        for mu in 0..4 {
            let s = c.raise_index(mu).unwrap();
            assert_eq!(s * s, 1);
        }
        assert!(matches!(c.raise_index(4), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn light_like_vector_is_null() {
        assert!(cfg(DeformationMode::Light).a_squared().is_zero());
        assert!(!cfg(DeformationMode::Time).a_squared().is_zero());
        assert!(!cfg(DeformationMode::Space).a_squared().is_zero());
    }

    #[test]
    fn time_mode_kills_spatial_symbols() {
        let c = cfg(DeformationMode::Time);
        assert!((&c.a(0) * &c.a(1)).is_zero());
        assert_eq!(c.deformed_indices(), vec![0]);
    }

    #[test]
    fn rejects_bad_dimensions() {
        assert!(SpaceConfig::new(1, 3, DeformationMode::Time).is_err());
        assert!(SpaceConfig::new(MAX_DIM + 1, 3, DeformationMode::Time).is_err());
    }
}
