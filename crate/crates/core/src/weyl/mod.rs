//! The normal-ordered phase-space (Weyl) algebra, its action on polynomials
//! and a-graded series.

mod element;
mod poly;
pub mod series;

pub use element::PhaseSpaceElement;
pub(crate) use element::{reorder, Key};
pub use poly::CommutativePolynomial;
pub use series::{exp, inverse, log, log1p, pow1p, power_series, sqrt1p, substitute_momenta, SeriesAlgebra};

use crate::error::Result;
use crate::scalars::{inverse_factorial, GaussianRational, SpaceConfig};

impl crate::report::Residual for PhaseSpaceElement {
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
    fn describe(&self) -> String {
        self.to_string()
    }
}

impl crate::report::Residual for CommutativePolynomial {
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
    fn describe(&self) -> String {
        self.to_string()
    }
}

/// `[A, B]`.
pub fn commutator(a: &PhaseSpaceElement, b: &PhaseSpaceElement) -> PhaseSpaceElement {
    a.commutator(b)
}

/// `Σ_μ η^{μμ} u_μ v_μ`.
pub fn contract(u: &[PhaseSpaceElement], v: &[PhaseSpaceElement]) -> PhaseSpaceElement {
    let config = u[0].config();
    let mut acc = PhaseSpaceElement::zero(config);
    for mu in 0..config.dim {
        let t = &u[mu] * &v[mu];
        acc = if config.metric(mu) < 0 { &acc - &t } else { &acc + &t };
    }
    acc
}

/// `a^μ v_μ`.
pub fn dot_a(v: &[PhaseSpaceElement]) -> PhaseSpaceElement {
    let config = v[0].config();
    let mut acc = PhaseSpaceElement::zero(config);
    for (mu, vm) in v.iter().enumerate() {
        acc = &acc + &vm.mul_poly(&config.a_up(mu));
    }
    acc
}

pub fn xs(config: SpaceConfig) -> Vec<PhaseSpaceElement> {
    (0..config.dim).map(|mu| PhaseSpaceElement::x(config, mu)).collect()
}

pub fn ps(config: SpaceConfig) -> Vec<PhaseSpaceElement> {
    (0..config.dim).map(|mu| PhaseSpaceElement::p(config, mu)).collect()
}

/// `(ap) = a^α p_α`.
pub fn a_dot_p(config: SpaceConfig) -> PhaseSpaceElement {
    dot_a(&ps(config))
}

/// `(ax) = a^α x_α`.
pub fn a_dot_x(config: SpaceConfig) -> PhaseSpaceElement {
    dot_a(&xs(config))
}

/// `(xp) = x^α p_α`.
pub fn x_dot_p(config: SpaceConfig) -> PhaseSpaceElement {
    contract(&xs(config), &ps(config))
}

/// `E·A·E^{−1}`.
pub fn conjugate(a: &PhaseSpaceElement, e: &PhaseSpaceElement) -> Result<PhaseSpaceElement> {
    let e_inv = inverse(e)?;
    Ok(&(e * a) * &e_inv)
}

/// `e^X A e^{−X} = Σ_k ad_X^k(A)/k!` for `X` of a-degree ≥ 1.
pub fn adjoint_exp(x: &PhaseSpaceElement, a: &PhaseSpaceElement) -> Result<PhaseSpaceElement> {
    if let Some(w) = x.undeformed_witness() {
        return Err(crate::error::Error::NotNilpotent(w));
    }
    let mut acc = a.clone();
    let mut term = a.clone();
    for k in 1..=x.config().order as u32 {
        term = x.commutator(&term);
        if term.is_zero() {
            break;
        }
        acc = &acc + &term.scale(&GaussianRational::real(inverse_factorial(k)));
    }
    Ok(acc)
}
