//! Twists `F = exp(f)`, the realizations and star products they induce,
//! and cocycle checks in the strict and the algebroid sense.

mod checks;
pub mod solve;

pub use checks::{
    associativity_check, cocycle_check, dual_star_check, ideal_transport_check, star_routes_check, CocycleSense,
};
pub use solve::{solve_twist_exponent, AnsatzBasis, ExponentFamily};

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::realization::{Realization, RealizationKind};
use crate::scalars::{DeformationMode, DeformationPoly, GaussianRational, MultiIndex, Rational, SpaceConfig};
use crate::tensor::{coproduct0, Product, TensorElement};
use crate::weyl::{
    a_dot_p, exp, inverse, log, log1p, power_series, x_dot_p, CommutativePolynomial, PhaseSpaceElement,
};

/// Catalog entries, addressable by the names `lambda:<q>`, `jordanian-left`,
/// `jordanian-right`, `lightlike` and `normal:<realization>`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TwistKind {
    /// Abelian family `exp(i(λD_s⊗A − (1−λ)A⊗D_s))`, time-like only.
    Lambda(Rational),
    /// `exp(i(xp)⊗ln Z)` for the left covariant `Z`.
    JordanianLeft,
    /// `exp(−ln Z⊗i(xp))` for the right covariant `Z`.
    JordanianRight,
    /// `exp(a^αP^β ln(1+(aP))/(aP) ⊗ M_{αβ})`, light-like only.
    Lightlike,
    /// The normal-ordered representative `Σ c(x)p^β⊗p^γ` read off from a
    /// realization's star product.
    Normal(RealizationKind),
}

impl TwistKind {
    pub fn label(&self) -> String {
        match self {
            TwistKind::Lambda(l) => format!("lambda:{l}"),
            TwistKind::JordanianLeft => "jordanian-left".into(),
            TwistKind::JordanianRight => "jordanian-right".into(),
            TwistKind::Lightlike => "lightlike".into(),
            TwistKind::Normal(k) => format!("normal:{k}"),
        }
    }

    /// The catalog realization this twist induces.
    pub fn partner(&self) -> RealizationKind {
        match self {
            TwistKind::Lambda(l) => RealizationKind::Lambda(l.clone()),
            TwistKind::JordanianLeft => RealizationKind::Left,
            TwistKind::JordanianRight => RealizationKind::Right,
            TwistKind::Lightlike => RealizationKind::Natural,
            TwistKind::Normal(k) => k.clone(),
        }
    }

    /// The closed-form twist paired with a catalog realization, if any.
    pub fn default_for(kind: &RealizationKind, mode: DeformationMode) -> Option<TwistKind> {
        match kind {
            RealizationKind::Left => Some(TwistKind::JordanianLeft),
            RealizationKind::Right => Some(TwistKind::JordanianRight),
            RealizationKind::Lambda(l) => Some(TwistKind::Lambda(l.clone())),
            RealizationKind::Natural if mode == DeformationMode::Light => Some(TwistKind::Lightlike),
            _ => None,
        }
    }
}

impl fmt::Display for TwistKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

impl FromStr for TwistKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "jordanian-left" => Ok(TwistKind::JordanianLeft),
            "jordanian-right" => Ok(TwistKind::JordanianRight),
            "lightlike" => Ok(TwistKind::Lightlike),
            _ => {
                if let Some(l) = s.strip_prefix("lambda:") {
                    return l.parse::<Rational>().map(TwistKind::Lambda).map_err(|e| Error::InvalidConfig(e.to_string()));
                }
                if let Some(r) = s.strip_prefix("normal:") {
                    return Ok(TwistKind::Normal(r.parse()?));
                }
                Err(Error::InvalidConfig(format!("unknown twist '{s}'")))
            }
        }
    }
}

/// `F`, `F^{−1}` and `f = log F`, all truncated at the configured order.
#[derive(Clone, Debug)]
pub struct Twist {
    kind: TwistKind,
    config: SpaceConfig,
    exponent: TensorElement,
    f: TensorElement,
    f_inv: TensorElement,
}

fn unsupported(kind: &TwistKind, mode: DeformationMode) -> Error {
    Error::Unsupported { what: format!("twist {kind}"), mode: mode.name().into() }
}

/// `Σ_k x_k p_k` over the spatial indices.
fn spatial_dilatation(c: SpaceConfig) -> PhaseSpaceElement {
    (1..c.dim).fold(PhaseSpaceElement::zero(c), |acc, k| &acc + &(&PhaseSpaceElement::x(c, k) * &PhaseSpaceElement::p(c, k)))
}

/// `M_{αβ} = i(x_αp_β − x_βp_α)`.
pub(crate) fn lorentz0(c: SpaceConfig, al: usize, be: usize) -> PhaseSpaceElement {
    let (x, p) = (PhaseSpaceElement::x, PhaseSpaceElement::p);
    (&(&x(c, al) * &p(c, be)) - &(&x(c, be) * &p(c, al))).scale(&GaussianRational::i())
}

fn raised(c: SpaceConfig, e: PhaseSpaceElement, mu: usize) -> PhaseSpaceElement {
    e.scale(&GaussianRational::from_int(c.metric(mu)))
}

impl Twist {
    pub fn by_name(name: &str, config: SpaceConfig) -> Result<Self> {
        Self::builtin(&name.parse()?, config)
    }

    pub fn builtin(kind: &TwistKind, c: SpaceConfig) -> Result<Self> {
        let i = GaussianRational::i();
        let exponent = match kind {
            TwistKind::Lambda(l) => {
                if c.mode != DeformationMode::Time {
                    return Err(unsupported(kind, c.mode));
                }
                let a = PhaseSpaceElement::p(c, 0).mul_poly(&c.a(0));
                let d = spatial_dilatation(c);
                let lam = GaussianRational::real(l.clone());
                let rest = GaussianRational::real(&Rational::one() - l);
                let t = &TensorElement::tensor2(&d, &a).scale(&lam) - &TensorElement::tensor2(&a, &d).scale(&rest);
                t.scale(&i)
            }
            TwistKind::JordanianLeft => {
                let ln_z = -&log1p(&a_dot_p(c))?;
                TensorElement::tensor2(&x_dot_p(c), &ln_z).scale(&i)
            }
            TwistKind::JordanianRight => {
                let ln_z = log1p(&-&a_dot_p(c))?;
                -&TensorElement::tensor2(&ln_z, &x_dot_p(c)).scale(&i)
            }
            TwistKind::Lightlike => {
                if c.mode != DeformationMode::Light {
                    return Err(unsupported(kind, c.mode));
                }
                // ln(1 + t)/t = Σ (−1)^k t^k/(k+1)
                let l = power_series(&a_dot_p(c), |k| {
                    GaussianRational::ratio(if k % 2 == 0 { 1 } else { -1 }, k as i64 + 1)
                })?;
                let mut t = TensorElement::zero(c, 2);
                for al in 0..c.dim {
                    for be in 0..c.dim {
                        if al == be {
                            continue;
                        }
                        let left = &raised(c, PhaseSpaceElement::p(c, be), be).mul_poly(&c.a_up(al)) * &l;
                        t = &t + &TensorElement::tensor2(&left, &lorentz0(c, al, be));
                    }
                }
                t
            }
            TwistKind::Normal(rk) => {
                let r = Realization::builtin(rk, c)?;
                return Self::normal(&r);
            }
        };
        Self::from_exponent(kind.clone(), exponent)
    }

    /// `F = exp(f)`. For an Abelian exponent `F^{−1} = exp(−f)`; otherwise
    /// `F^{−1}` comes from series inversion of `F`.
    pub fn from_exponent(kind: TwistKind, exponent: TensorElement) -> Result<Self> {
        if exponent.rank() != 2 {
            return Err(Error::RankMismatch(2, exponent.rank()));
        }
        if let Some(w) = exponent.undeformed_witness() {
            return Err(Error::NotNilpotent(format!("twist exponent has undeformed term {w}")));
        }
        let config = exponent.config();
        let f = exp(&exponent)?;
        let f_inv = if is_abelian(&exponent) { exp(&-&exponent)? } else { inverse(&f)? };
        Ok(Twist { kind, config, exponent, f, f_inv })
    }

    /// A twist given through `F^{−1}`; `F` by series inversion and
    /// `f = −log F^{−1}`.
    pub fn from_inverse(kind: TwistKind, f_inv: TensorElement) -> Result<Self> {
        let config = f_inv.config();
        let f = inverse(&f_inv)?;
        let exponent = -&log(&f_inv)?;
        Ok(Twist { kind, config, exponent, f, f_inv })
    }

    /// The normal-ordered `F^{−1} = Σ C_{βγ}(x) p^β⊗p^γ` whose bidifferential
    /// action reproduces `r`'s star product.
    ///
    /// `C_{βγ}·s_βs_γβ!γ! = [(x−y)^β ⋆ (x−y)^γ]_{y=x}` with `p^β ▷ x^β = s_β β!`.
    /// At a-order `k` only `|β|+|γ| ≤ 2k` contributes.
    pub fn normal(r: &Realization) -> Result<Self> {
        let c = r.config();
        let n = c.dim;
        let top = 2 * c.order;
        let mons = MultiIndex::all_up_to_degree(n, top);
        let mut star_cache: BTreeMap<(MultiIndex, MultiIndex), CommutativePolynomial> = BTreeMap::new();
        let mut terms = BTreeMap::new();
        let s = |b: &MultiIndex| -> GaussianRational {
            let mut v = GaussianRational::one();
            for mu in 0..n {
                let f = &(-&GaussianRational::i()) * &GaussianRational::from_int(c.metric(mu));
                for _ in 0..b.get(mu) {
                    v = &v * &f;
                }
            }
            v
        };
        for b in &mons {
            for g in mons.iter().filter(|g| g.degree() + b.degree() <= top) {
                let mut t = CommutativePolynomial::zero(c);
                for d in b.divisors() {
                    for e in g.divisors() {
                        let rest = b.checked_sub(&d).expect("divisor") + g.checked_sub(&e).expect("divisor");
                        let sign = if rest.degree() % 2 == 0 { 1 } else { -1 };
                        let w = sign * (b.binomial(&d) * g.binomial(&e)) as i64;
                        let prod = star_cache.entry((d, e)).or_insert_with(|| {
                            r.star(&CommutativePolynomial::monomial(c, d), &CommutativePolynomial::monomial(c, e))
                        });
                        let shifted = prod.product(&CommutativePolynomial::monomial(c, rest));
                        t = &t + &shifted.scale(&GaussianRational::from_int(w));
                    }
                }
                if t.is_zero() {
                    continue;
                }
                let norm = &(&s(b) * &s(g)) * &GaussianRational::from_int((b.factorial() * g.factorial()) as i64);
                let inv = norm.recip()?;
                for (xm, coeff) in t.terms() {
                    let v: DeformationPoly = coeff.scale(&inv);
                    terms.insert([(*xm, *b), (MultiIndex::ZERO, *g), (MultiIndex::ZERO, MultiIndex::ZERO)], v);
                }
            }
        }
        let f_inv = TensorElement::from_map(c, 2, terms);
        Self::from_inverse(TwistKind::Normal(r.kind().clone()), f_inv)
    }

    pub fn kind(&self) -> &TwistKind {
        &self.kind
    }

    pub fn name(&self) -> String {
        self.kind.label()
    }

    pub fn config(&self) -> SpaceConfig {
        self.config
    }

    pub fn exponent(&self) -> &TensorElement {
        &self.exponent
    }

    pub fn f(&self) -> &TensorElement {
        &self.f
    }

    pub fn f_inv(&self) -> &TensorElement {
        &self.f_inv
    }

    /// `F̃^{−1} = τ₀F^{−1}τ₀`.
    pub fn f_tilde_inv(&self) -> TensorElement {
        self.f_inv.flip().expect("rank 2")
    }

    pub fn is_abelian(&self) -> bool {
        is_abelian(&self.exponent)
    }

    /// `Δ(h) = F Δ₀(h) F^{−1}`.
    pub fn coproduct(&self, h: &PhaseSpaceElement) -> TensorElement {
        &(&self.f * &coproduct0(h)) * &self.f_inv
    }

    /// `f ⋆ g = m(F^{−1} ▷ (f⊗g))`.
    pub fn star(&self, f: &CommutativePolynomial, g: &CommutativePolynomial) -> CommutativePolynomial {
        self.f_inv.act_pair(&[f, g], Product::Pointwise).expect("rank 2")
    }

    /// `m(F̃^{−1} ▷ (f⊗g))`, which equals `g ⋆ f`.
    pub fn dual_star(&self, f: &CommutativePolynomial, g: &CommutativePolynomial) -> CommutativePolynomial {
        self.f_tilde_inv().act_pair(&[f, g], Product::Pointwise).expect("rank 2")
    }

    /// `α(f) = m(F^{−1}(▷⊗1)(f⊗1))`.
    pub fn source(&self, f: &CommutativePolynomial) -> PhaseSpaceElement {
        self.f_inv.act_first_leg(f).expect("rank 2")
    }

    /// `β(f) = m(F̃^{−1}(▷⊗1)(f⊗1))`.
    pub fn target(&self, f: &CommutativePolynomial) -> PhaseSpaceElement {
        self.f_tilde_inv().act_first_leg(f).expect("rank 2")
    }

    /// The realization rebuilt from the twist: `x̂_μ = α(x_μ)`, with `Z` and
    /// `p^L` recovered from the coordinates.
    pub fn realization(&self) -> Result<Realization> {
        realization_from_twist(self)
    }
}

/// All leg factors of the exponent commute with each other.
fn is_abelian(exponent: &TensorElement) -> bool {
    let c = exponent.config();
    let mut legs: Vec<PhaseSpaceElement> = Vec::new();
    for (keys, _) in exponent.terms() {
        for k in keys {
            let e = PhaseSpaceElement::monomial(c, k.0, k.1, DeformationPoly::one(c));
            if !legs.contains(&e) {
                legs.push(e);
            }
        }
    }
    legs.iter().enumerate().all(|(i, a)| legs[i + 1..].iter().all(|b| a.commutator(b).is_zero()))
}

/// `x̂_μ = m(F^{−1}(▷⊗1)(x_μ⊗1))`, validated as a realization.
pub fn realization_from_twist(t: &Twist) -> Result<Realization> {
    let c = t.config();
    let xhat: Vec<PhaseSpaceElement> = (0..c.dim).map(|mu| t.source(&CommutativePolynomial::x(c, mu))).collect();
    let r = Realization::from_coordinates(t.kind().partner(), xhat)?;
    let rep = crate::realization::validate_realization(&r);
    if let Some(f) = rep.failures().next() {
        return Err(Error::Consistency(format!("twist {} gives an invalid realization: {}", t.name(), f.name)));
    }
    Ok(r)
}

#[cfg(feature = "experimental")]
/// The normal-ordered classical-basis operator at a-order 2 (natural
/// realization, any mode). It reproduces an associative star product, yet
/// in time- and space-like modes it fails the strict cocycle identity.
pub fn classical_order2(config: SpaceConfig) -> Result<Twist> {
    let c = config.with_order(2);
    Twist::normal(&Realization::natural(c))
}

#[cfg(test)]
mod tests;
