use super::{Realization, RealizationKind};
use crate::error::{Error, Result};
use crate::scalars::{GaussianRational, Rational};
use crate::weyl::PhaseSpaceElement;

pub(crate) type Matrix = Vec<Vec<PhaseSpaceElement>>;

fn p_degree_part(f: &PhaseSpaceElement, k: usize) -> PhaseSpaceElement {
    f.filter(|_, p| p.degree() == k)
}

/// The momentum function `f` with `f(0) = 0` and `∂f/∂p_β = g_β`, through
/// `f_k = (1/k) Σ_β p_β (g_β)_{k−1}` on each p-degree. Integrability is
/// not checked here.
pub(crate) fn integrate_gradient(g: &[PhaseSpaceElement]) -> PhaseSpaceElement {
    let c = g[0].config();
    let top = g.iter().map(|e| e.max_p_degree()).max().unwrap_or(0);
    let mut acc = PhaseSpaceElement::zero(c);
    for k in 1..=top + 1 {
        let w = GaussianRational::ratio(1, k as i64);
        for (beta, gb) in g.iter().enumerate() {
            let part = p_degree_part(gb, k - 1);
            if !part.is_zero() {
                acc = &acc + &(&PhaseSpaceElement::p(c, beta) * &part).scale(&w);
            }
        }
    }
    acc
}

/// Inverse of `1 + N` for a matrix of commuting momentum functions with `N`
/// of a-degree ≥ 1, by the Neumann series.
pub(crate) fn unipotent_inverse(m: &Matrix) -> Result<Matrix> {
    let n = m.len();
    let c = m[0][0].config();
    let one = PhaseSpaceElement::one(c);
    let nil: Matrix = (0..n)
        .map(|i| (0..n).map(|j| if i == j { &m[i][j] - &one } else { m[i][j].clone() }).collect())
        .collect();
    for row in &nil {
        for e in row {
            if let Some(w) = e.undeformed_witness() {
                return Err(Error::NotInvertible(format!("matrix entry has undeformed part {w}")));
            }
        }
    }
    let mul = |a: &Matrix, b: &Matrix| -> Matrix {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).fold(PhaseSpaceElement::zero(c), |acc, k| &acc + &(&a[i][k] * &b[k][j])))
                    .collect()
            })
            .collect()
    };
    let ident: Matrix =
        (0..n).map(|i| (0..n).map(|j| if i == j { one.clone() } else { PhaseSpaceElement::zero(c) }).collect()).collect();
    let neg: Matrix = nil.iter().map(|r| r.iter().map(|e| -e).collect()).collect();
    let mut acc = ident.clone();
    let mut pw = ident;
    for _ in 0..c.order {
        pw = mul(&pw, &neg);
        for i in 0..n {
            for j in 0..n {
                acc[i][j] = &acc[i][j] + &pw[i][j];
            }
        }
    }
    Ok(acc)
}

/// `ψ = φ^{−1}` for `φ` reducing to `η` at `a = 0`: `φ^{−1} = (ηφ)^{−1}η`.
pub(crate) fn phi_inverse(phi: &Matrix) -> Result<Matrix> {
    let c = phi[0][0].config();
    let eta = |i: usize| GaussianRational::from_int(c.metric(i));
    let scaled: Matrix = phi.iter().enumerate().map(|(i, r)| r.iter().map(|e| e.scale(&eta(i))).collect()).collect();
    let inv = unipotent_inverse(&scaled)?;
    Ok(inv.into_iter().map(|r| r.into_iter().enumerate().map(|(j, e)| e.scale(&eta(j))).collect()).collect())
}

/// `φ_{αμ} = i[p_α, x̂_μ]`, so that `x̂_μ = x^α φ_{αμ}` when `x̂` is linear
/// in the coordinates.
pub(crate) fn phi_matrix(xhat: &[PhaseSpaceElement]) -> Matrix {
    let c = xhat[0].config();
    (0..c.dim)
        .map(|al| {
            let p = PhaseSpaceElement::p(c, al);
            xhat.iter().map(|x| p.commutator(x).scale(&GaussianRational::i())).collect()
        })
        .collect()
}

impl Realization {
    /// Rebuilds `Z` and `p^L` from the coordinates alone.
    ///
    /// `Z` solves `[Z, x̂_μ] = ia_μZ`, i.e. `∂Z/∂p_β = −a_μ Z ψ_{μβ}` with
    /// `ψ = φ^{−1}`; `p^L` solves `[p^L_μ, x̂_ν] = −iη_{μν}Z^{−1}`.
    pub fn from_coordinates(kind: RealizationKind, xhat: Vec<PhaseSpaceElement>) -> Result<Self> {
        let c = xhat[0].config();
        if xhat.len() != c.dim {
            return Err(Error::WrongShape { expected: format!("{} components", c.dim), found: xhat.len().to_string() });
        }
        let phi = phi_matrix(&xhat);
        for (al, row) in phi.iter().enumerate() {
            for (mu, e) in row.iter().enumerate() {
                if !e.is_p_only() {
                    return Err(Error::InvalidConfig(format!("phi_{al}{mu} contains coordinates: {e}")));
                }
            }
        }
        let psi = phi_inverse(&phi)?;
        let one = PhaseSpaceElement::one(c);
        // a_μ ψ_{μβ}
        let a_psi: Vec<PhaseSpaceElement> = (0..c.dim)
            .map(|b| (0..c.dim).fold(PhaseSpaceElement::zero(c), |acc, mu| &acc + &psi[mu][b].mul_poly(&c.a(mu))))
            .collect();
        let mut z = one.clone();
        for _ in 0..c.order {
            let grad: Vec<PhaseSpaceElement> = a_psi.iter().map(|g| -&(&z * g)).collect();
            z = &one + &integrate_gradient(&grad);
        }
        let z_inv = crate::weyl::inverse(&z)?;
        let p_l = (0..c.dim)
            .map(|mu| {
                let s = GaussianRational::real(Rational::from_int(c.metric(mu)));
                let grad: Vec<PhaseSpaceElement> = (0..c.dim).map(|b| (&z_inv * &psi[mu][b]).scale(&s)).collect();
                integrate_gradient(&grad)
            })
            .collect();
        Realization::from_parts(kind, xhat, z, p_l)
    }
}
