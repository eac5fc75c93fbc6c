//! Realizations `x̂_μ = x^α φ_{αμ}(p)` of κ-Minkowski coordinates inside the
//! undeformed phase space, with their shift operator, momenta `p^L`, dual
//! coordinates `ŷ` and quantization map.

mod checks;
mod derive;
mod ordered;
mod similarity;

pub use checks::{dual_report, validate_realization, OOperator};
pub(crate) use derive::{phi_matrix, unipotent_inverse};
pub use ordered::OrderedAction;
pub use similarity::{similarity_transform, transformed_momenta};

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::scalars::{binomial, inverse_factorial, DeformationMode, GaussianRational, Rational, SpaceConfig};
use crate::weyl::{
    a_dot_p, a_dot_x, contract, exp, inverse, power_series, ps, sqrt1p, CommutativePolynomial, PhaseSpaceElement,
};

/// Which ordering prescription a realization implements.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RealizationKind {
    Left,
    Right,
    /// Non-covariant family, time-like deformations only.
    Lambda(Rational),
    /// Classical-basis realization `x̂_μ = X_μZ^{−1} − (aX)P_μ`.
    Natural,
    /// Anything else (similarity transforms, twist reconstructions, tests).
    Custom(String),
}

impl RealizationKind {
    pub fn label(&self) -> String {
        match self {
            RealizationKind::Left => "left".into(),
            RealizationKind::Right => "right".into(),
            RealizationKind::Lambda(l) => format!("lambda:{l}"),
            RealizationKind::Natural => "natural".into(),
            RealizationKind::Custom(s) => s.clone(),
        }
    }
}

impl fmt::Display for RealizationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl FromStr for RealizationKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "left" => Ok(RealizationKind::Left),
            "right" => Ok(RealizationKind::Right),
            "natural" => Ok(RealizationKind::Natural),
            _ => match s.strip_prefix("lambda:") {
                Some(l) => l
                    .parse::<Rational>()
                    .map(RealizationKind::Lambda)
                    .map_err(|e| Error::InvalidConfig(e.to_string())),
                None => Err(Error::InvalidConfig(format!("unknown realization '{s}'"))),
            },
        }
    }
}

/// One realization: `x̂_μ`, `ŷ_μ`, `Z`, `Z^{−1}` and `p^L_μ`, all normal
/// ordered in the canonical `x, p`.
#[derive(Clone, Debug)]
pub struct Realization {
    kind: RealizationKind,
    config: SpaceConfig,
    xhat: OrderedAction,
    yhat: OrderedAction,
    z: PhaseSpaceElement,
    z_inv: PhaseSpaceElement,
    p_l: Vec<PhaseSpaceElement>,
}

impl Realization {
    /// Assembles a realization from `x̂`, `Z` and `p^L`; `ŷ` is derived as
    /// `ŷ_μ = x̂^α O^{−1}_{μα}`.
    pub fn from_parts(
        kind: RealizationKind,
        xhat: Vec<PhaseSpaceElement>,
        z: PhaseSpaceElement,
        p_l: Vec<PhaseSpaceElement>,
    ) -> Result<Self> {
        let config = z.config();
        if xhat.len() != config.dim || p_l.len() != config.dim {
            return Err(Error::WrongShape {
                expected: format!("{} components", config.dim),
                found: format!("{} / {}", xhat.len(), p_l.len()),
            });
        }
        let z_inv = inverse(&z)?;
        let o_inv = checks::o_inverse_entries(config, &z, &p_l);
        let yhat = (0..config.dim)
            .map(|mu| {
                let row: Vec<PhaseSpaceElement> = (0..config.dim).map(|al| o_inv[mu][al].clone()).collect();
                // x̂^α O^{-1}_{μα}, x̂ to the left
                contract(&xhat, &row)
            })
            .collect();
        Ok(Realization {
            kind,
            config,
            xhat: OrderedAction::new(xhat),
            yhat: OrderedAction::new(yhat),
            z,
            z_inv,
            p_l,
        })
    }

    /// Looks up a catalog realization by its CLI name.
    pub fn by_name(name: &str, config: SpaceConfig) -> Result<Self> {
        Self::builtin(&name.parse()?, config)
    }

    pub fn builtin(kind: &RealizationKind, config: SpaceConfig) -> Result<Self> {
        match kind {
            RealizationKind::Left => Ok(Self::left(config)),
            RealizationKind::Right => Ok(Self::right(config)),
            RealizationKind::Lambda(l) => Self::lambda(config, l.clone()),
            RealizationKind::Natural => Ok(Self::natural(config)),
            RealizationKind::Custom(s) => Err(Error::InvalidConfig(format!("'{s}' is not a catalog realization"))),
        }
    }

    /// `x̂_μ = x_μ(1 + (ap))`, `Z = (1 + (ap))^{−1}`, `p^L = p`.
    pub fn left(config: SpaceConfig) -> Self {
        let z_inv = &PhaseSpaceElement::one(config) + &a_dot_p(config);
        let z = inverse(&z_inv).expect("shift operator is invertible");
        let xhat = (0..config.dim).map(|mu| &PhaseSpaceElement::x(config, mu) * &z_inv).collect();
        Self::from_parts(RealizationKind::Left, xhat, z, ps(config)).expect("left realization")
    }

    /// `x̂_μ = x_μ − a_μ(xp)`, `Z = 1 − (ap)`, `p^L_μ = p_μZ^{−1}`.
    pub fn right(config: SpaceConfig) -> Self {
        let z = &PhaseSpaceElement::one(config) - &a_dot_p(config);
        let z_inv = inverse(&z).expect("shift operator is invertible");
        let xp = crate::weyl::x_dot_p(config);
        let xhat = (0..config.dim)
            .map(|mu| &PhaseSpaceElement::x(config, mu) - &xp.mul_poly(&config.a(mu)))
            .collect();
        let p_l = (0..config.dim).map(|mu| &PhaseSpaceElement::p(config, mu) * &z_inv).collect();
        Self::from_parts(RealizationKind::Right, xhat, z, p_l).expect("right realization")
    }

    /// Time-like family: `Z = e^{a_0p_0}`, `x̂_0 = x_0 − a_0(1−λ)x_kp_k`,
    /// `x̂_k = x_kZ^{−λ}`, `p^L_0 = (1 − Z^{−1})/a_0`, `p^L_k = p_kZ^{λ−1}`.
    pub fn lambda(config: SpaceConfig, lambda: Rational) -> Result<Self> {
        if config.mode != DeformationMode::Time {
            return Err(Error::Unsupported { what: "the lambda family".into(), mode: config.mode.to_string() });
        }
        let n = config.dim;
        let a0 = config.a(0);
        let p0 = PhaseSpaceElement::p(config, 0);
        let big_a = p0.mul_poly(&a0);
        let z = exp(&big_a)?;
        let z_pow = |s: &Rational| exp(&big_a.scale(&GaussianRational::real(s.clone())));
        let one_minus = &Rational::one() - &lambda;
        let mut spatial = PhaseSpaceElement::zero(config);
        for k in 1..n {
            spatial = &spatial + &(&PhaseSpaceElement::x(config, k) * &PhaseSpaceElement::p(config, k));
        }
        let mut xhat = vec![&PhaseSpaceElement::x(config, 0)
            - &spatial.mul_poly(&a0.scale(&GaussianRational::real(one_minus.clone())))];
        let z_minus_lambda = z_pow(&-&lambda)?;
        for k in 1..n {
            xhat.push(&PhaseSpaceElement::x(config, k) * &z_minus_lambda);
        }
        // (1 − e^{−A})/a_0 = p_0 Σ_k (−A)^k/(k+1)!
        let series = power_series(&big_a, |k| {
            let s = if k % 2 == 0 { 1 } else { -1 };
            GaussianRational::real(&Rational::from_int(s) * &inverse_factorial(k + 1))
        })?;
        let mut p_l = vec![&p0 * &series];
        let z_lm1 = z_pow(&-&one_minus)?;
        for k in 1..n {
            p_l.push(&PhaseSpaceElement::p(config, k) * &z_lm1);
        }
        Self::from_parts(RealizationKind::Lambda(lambda), xhat, z, p_l)
    }

    /// Classical basis: `Z^{−1} = (ap) + √(1 + a²p²)`,
    /// `x̂_μ = x_μZ^{−1} − (ax)p_μ`, `p^L_μ = p_μ + a_μp²g(a²p²)` with
    /// `g(t) = (√(1+t) − 1)/t`.
    pub fn natural(config: SpaceConfig) -> Self {
        let p = ps(config);
        let p2 = contract(&p, &p);
        let t = p2.mul_poly(&config.a_squared());
        let z_inv = &a_dot_p(config) + &sqrt1p(&t).expect("a²p² has positive a-degree");
        let z = inverse(&z_inv).expect("shift operator is invertible");
        let ax = a_dot_x(config);
        let xhat = (0..config.dim)
            .map(|mu| &(&PhaseSpaceElement::x(config, mu) * &z_inv) - &(&ax * &p[mu]))
            .collect();
        let half = Rational::new(1, 2);
        let g = power_series(&t, |k| GaussianRational::real(binomial(&half, k + 1))).expect("nilpotent");
        let p2g = &p2 * &g;
        let p_l = (0..config.dim).map(|mu| &p[mu] + &p2g.mul_poly(&config.a(mu))).collect();
        Self::from_parts(RealizationKind::Natural, xhat, z, p_l).expect("natural realization")
    }

    pub fn kind(&self) -> &RealizationKind {
        &self.kind
    }

    pub fn name(&self) -> String {
        self.kind.label()
    }

    pub fn config(&self) -> SpaceConfig {
        self.config
    }

    pub fn lambda_param(&self) -> Option<&Rational> {
        match &self.kind {
            RealizationKind::Lambda(l) => Some(l),
            _ => None,
        }
    }

    pub fn xhat(&self) -> &[PhaseSpaceElement] {
        self.xhat.generators()
    }

    pub fn yhat(&self) -> &[PhaseSpaceElement] {
        self.yhat.generators()
    }

    pub fn z(&self) -> &PhaseSpaceElement {
        &self.z
    }

    pub fn z_inv(&self) -> &PhaseSpaceElement {
        &self.z_inv
    }

    pub fn p_l(&self) -> &[PhaseSpaceElement] {
        &self.p_l
    }

    /// `x̂^μ = η^{μμ}x̂_μ`.
    pub fn xhat_up(&self, mu: usize) -> PhaseSpaceElement {
        self.xhat()[mu].scale(&GaussianRational::from_int(self.config.metric(mu)))
    }

    pub fn yhat_up(&self, mu: usize) -> PhaseSpaceElement {
        self.yhat()[mu].scale(&GaussianRational::from_int(self.config.metric(mu)))
    }

    pub fn o_operator(&self) -> OOperator {
        OOperator::new(self)
    }

    /// Ordered-`x̂` machinery (quantization, star products).
    pub fn xhat_action(&self) -> &OrderedAction {
        &self.xhat
    }

    /// Ordered-`ŷ` machinery (dual star product, target map).
    pub fn yhat_action(&self) -> &OrderedAction {
        &self.yhat
    }

    /// PBW coefficients of `f̂` with `f̂ ▷ 1 = f`.
    pub fn quantize_pbw(&self, f: &CommutativePolynomial) -> CommutativePolynomial {
        self.xhat.quantize(f)
    }

    /// The element `f̂ = Σ c_α x̂^α` with `f̂ ▷ 1 = f`.
    pub fn quantize(&self, f: &CommutativePolynomial) -> PhaseSpaceElement {
        self.xhat.pbw_element(&self.xhat.quantize(f))
    }

    /// `f ⋆ g = f̂(x̂) ▷ g`.
    pub fn star(&self, f: &CommutativePolynomial, g: &CommutativePolynomial) -> CommutativePolynomial {
        self.xhat.act_pbw(&self.xhat.quantize(f), g)
    }

    /// Dual star product `f ⋆̃ g = f̂(ŷ) ▷ g`, with `f̂` expanded in ordered `ŷ`.
    pub fn dual_star(&self, f: &CommutativePolynomial, g: &CommutativePolynomial) -> CommutativePolynomial {
        self.yhat.act_pbw(&self.yhat.quantize(f), g)
    }
}
