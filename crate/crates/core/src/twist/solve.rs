use std::fmt;

use super::lorentz0;
use crate::error::{Error, Result};
use crate::linalg::{equations_from_terms, solve};
use crate::scalars::{DeformationMode, GaussianRational, SpaceConfig};
use crate::tensor::{coproduct_lie, Product, TensorElement};
use crate::weyl::{a_dot_p, CommutativePolynomial, PhaseSpaceElement};

/// The first-order ansatz `{a^αP^β⊗M_{αβ}, M_{αβ}⊗a^αP^β, D⊗(aP), (aP)⊗D}`
/// with `D = c·x^αp_α`.
#[derive(Clone, Debug)]
pub struct AnsatzBasis {
    pub d_scale: GaussianRational,
    pub names: Vec<&'static str>,
    pub elements: Vec<TensorElement>,
}

impl AnsatzBasis {
    pub fn first_order(config: SpaceConfig, d_scale: GaussianRational) -> Self {
        let c = config.with_order(1);
        let n = c.dim;
        let p = |mu: usize| PhaseSpaceElement::p(c, mu);
        let p_up = |mu: usize| p(mu).scale(&GaussianRational::from_int(c.metric(mu)));
        let d = (0..n)
            .fold(PhaseSpaceElement::zero(c), |acc, al| &acc + &(&PhaseSpaceElement::x(c, al) * &p_up(al)))
            .scale(&d_scale);
        let ap = a_dot_p(c);
        let mut b1 = TensorElement::zero(c, 2);
        let mut b2 = TensorElement::zero(c, 2);
        for al in 0..n {
            for be in 0..n {
                let a_p = p_up(be).mul_poly(&c.a_up(al));
                let m = lorentz0(c, al, be);
                b1 = &b1 + &TensorElement::tensor2(&a_p, &m);
                b2 = &b2 + &TensorElement::tensor2(&m, &a_p);
            }
        }
        AnsatzBasis {
            d_scale,
            names: vec!["a^alpha P^beta ox M_alpha_beta", "M_alpha_beta ox a^alpha P^beta", "D ox (aP)", "(aP) ox D"],
            elements: vec![b1, b2, TensorElement::tensor2(&d, &ap), TensorElement::tensor2(&ap, &d)],
        }
    }

    pub fn combine(&self, coeffs: &[GaussianRational]) -> TensorElement {
        let c = self.elements[0].config();
        self.elements.iter().zip(coeffs).fold(TensorElement::zero(c, 2), |acc, (b, u)| &acc + &b.scale(u))
    }
}

/// `f₁ = Σ_j (particular_j + u·direction_j) B_j`, normalized so that the
/// particular member has no `M⊗aP` component and the direction has
/// coefficient 1 there.
#[derive(Clone, Debug)]
pub struct ExponentFamily {
    pub basis: AnsatzBasis,
    pub particular: Vec<GaussianRational>,
    pub directions: Vec<Vec<GaussianRational>>,
}

impl ExponentFamily {
    pub fn member(&self, params: &[GaussianRational]) -> TensorElement {
        let mut coeffs = self.particular.clone();
        for (d, u) in self.directions.iter().zip(params) {
            for (c, v) in coeffs.iter_mut().zip(d) {
                *c = &*c + &(v * u);
            }
        }
        self.basis.combine(&coeffs)
    }

    /// The expected shape `(1, 0, 0, 0) + u(−1, 1, −1, 1)`.
    pub fn matches_expected(&self) -> bool {
        let g = GaussianRational::from_int;
        self.particular == [g(1), g(0), g(0), g(0)] && self.directions == [vec![g(-1), g(1), g(-1), g(1)]]
    }

    /// The `u = 0` member only has `P` and `M` legs.
    pub fn base_is_poincare(&self) -> bool {
        self.particular[2].is_zero() && self.particular[3].is_zero()
    }
}

fn combo(coeffs: &[GaussianRational], names: &[&str]) -> String {
    let mut out = String::new();
    for (c, name) in coeffs.iter().zip(names) {
        if c.is_zero() {
            continue;
        }
        let (neg, mag) = if c.im.is_zero() && c.re.is_negative() { (true, -c) } else { (false, c.clone()) };
        let m = if mag.is_one() { name.to_string() } else { format!("({mag})*{name}") };
        if out.is_empty() {
            out = if neg { format!("-{m}") } else { m };
        } else {
            out.push_str(if neg { " - " } else { " + " });
            out.push_str(&m);
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

impl fmt::Display for ExponentFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = &self.basis.names;
        write!(f, "f1 = {}", combo(&self.particular, names))?;
        for (k, d) in self.directions.iter().enumerate() {
            let u = if self.directions.len() == 1 { "u".to_string() } else { format!("u{}", k + 1) };
            write!(f, " + {u}*({})", combo(d, names))?;
        }
        write!(f, "\nD = ({})*x^alpha p_alpha", self.basis.d_scale)
    }
}

/// `Δ₁P_μ = P_μ⊗(aP) − a_μP_α⊗P^α` and
/// `Δ₁M_{μν} = −a_μP^α⊗M_{αν} + a_νP^α⊗M_{αμ}`, the first-order parts of the
/// classical-basis coproducts.
fn first_order_targets(c: SpaceConfig) -> Vec<(PhaseSpaceElement, TensorElement)> {
    let n = c.dim;
    let p = |mu: usize| PhaseSpaceElement::p(c, mu);
    let up = |e: PhaseSpaceElement, mu: usize| e.scale(&GaussianRational::from_int(c.metric(mu)));
    let ap = a_dot_p(c);
    let mut out = Vec::new();
    for mu in 0..n {
        let mut t = TensorElement::tensor2(&p(mu), &ap);
        for al in 0..n {
            t = &t - &TensorElement::tensor2(&p(al).mul_poly(&c.a(mu)), &up(p(al), al));
        }
        out.push((p(mu), t));
    }
    for mu in 0..n {
        for nu in mu + 1..n {
            let mut t = TensorElement::zero(c, 2);
            for al in 0..n {
                t = &t - &TensorElement::tensor2(&up(p(al), al).mul_poly(&c.a(mu)), &lorentz0(c, al, nu));
                t = &t + &TensorElement::tensor2(&up(p(al), al).mul_poly(&c.a(nu)), &lorentz0(c, al, mu));
            }
            out.push((lorentz0(c, mu, nu), t));
        }
    }
    out
}

/// How the first-order equations are compared.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Matching {
    /// Raw tensor equality with the primitive coproduct.
    Exact,
    /// Equality modulo `(R₀)_μ`, tested by the action on monomial pairs of
    /// degree `≤ d` per slot.
    ModIdeal(usize),
}

/// Solves `[f₁, Δ₀h] = Δ₁h` for `h ∈ {P_μ, M_{μν}}` over the ansatz with
/// `D = c·x^αp_α`.
pub fn solve_with_scale(config: SpaceConfig, d_scale: GaussianRational, matching: Matching) -> Result<ExponentFamily> {
    let c = config.with_order(1);
    let basis = AnsatzBasis::first_order(c, d_scale);
    let mut rows = Vec::new();
    let mut rhs = Vec::new();
    for (h, target) in first_order_targets(c) {
        let d0 = coproduct_lie(&h)?;
        let comms: Vec<TensorElement> = basis.elements.iter().map(|b| b.commutator(&d0)).collect();
        match matching {
            Matching::Exact => {
                let cols: Vec<_> = comms.iter().map(|t| t.flat_terms()).collect();
                let (r, b) = equations_from_terms(&cols, &target.flat_terms());
                rows.extend(r);
                rhs.extend(b);
            }
            Matching::ModIdeal(d) => {
                let mons = CommutativePolynomial::monomials_up_to(c, d);
                for f in &mons {
                    for g in &mons {
                        let act = |t: &TensorElement| t.act_pair(&[f, g], Product::Pointwise).map(|e| e.flat_terms());
                        let cols = comms.iter().map(act).collect::<Result<Vec<_>>>()?;
                        let (r, b) = equations_from_terms(&cols, &act(&target)?);
                        rows.extend(r);
                        rhs.extend(b);
                    }
                }
            }
        }
    }
    let sol = solve(&rows, &rhs, basis.elements.len())?;
    let mut directions = sol.nullspace;
    let mut particular = sol.particular;
    if let [d] = directions.as_mut_slice() {
        if !d[1].is_zero() {
            let inv = d[1].recip()?;
            d.iter_mut().for_each(|v| *v = &*v * &inv);
            let shift = particular[1].clone();
            particular.iter_mut().zip(d.iter()).for_each(|(p, v)| *p = &*p - &(v * &shift));
        }
    }
    Ok(ExponentFamily { basis, particular, directions })
}

/// Normalizations tried for `D`, in order.
pub const D_SCALES: [(i64, i64); 4] = [(1, 0), (-1, 0), (0, 1), (0, -1)];

/// The first-order family of twist exponents for the natural realization.
///
/// `D = x^αp_α` is tried first; when the family does not take the
/// expected shape, the rescalings in [`D_SCALES`] are tried in turn and
/// the first matching one is returned. With no match the family for
/// `c = 1` is returned as is.
pub fn solve_twist_exponent(config: SpaceConfig, order: usize) -> Result<ExponentFamily> {
    if order != 1 {
        return Err(Error::Unsupported { what: format!("twist solving at order {order}"), mode: config.mode.name().into() });
    }
    if config.mode == DeformationMode::Light {
        return Err(Error::Unsupported { what: "twist solving".into(), mode: config.mode.name().into() });
    }
    let mut first = None;
    for (re, im) in D_SCALES {
        let s = GaussianRational::new(re.into(), im.into());
        let fam = solve_with_scale(config, s, Matching::ModIdeal(2))?;
        if fam.matches_expected() {
            return Ok(fam);
        }
        first.get_or_insert(fam);
    }
    Ok(first.expect("nonempty scan"))
}
