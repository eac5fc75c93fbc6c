use super::{Realization, RealizationKind};
use crate::error::{Error, Result};
use crate::weyl::{adjoint_exp, contract, xs, PhaseSpaceElement};

/// Conjugates every piece of `r` by `E = exp(x^α Σ_α(p))`.
///
/// The `Σ_α` must contain momenta only and vanish at `a = 0`.
pub fn similarity_transform(r: &Realization, sigma: &[PhaseSpaceElement]) -> Result<Realization> {
    let c = r.config();
    if sigma.len() != c.dim {
        return Err(Error::WrongShape { expected: format!("{} components", c.dim), found: sigma.len().to_string() });
    }
    for (al, s) in sigma.iter().enumerate() {
        if !s.is_p_only() {
            return Err(Error::InvalidConfig(format!("Σ_{al} contains coordinates: {s}")));
        }
        if let Some(w) = s.undeformed_witness() {
            return Err(Error::NotNilpotent(format!("Σ_{al} has undeformed term {w}")));
        }
    }
    let gen = contract(&xs(c), sigma);
    let conj = |e: &PhaseSpaceElement| adjoint_exp(&gen, e);
    let xhat = r.xhat().iter().map(conj).collect::<Result<Vec<_>>>()?;
    let p_l = r.p_l().iter().map(conj).collect::<Result<Vec<_>>>()?;
    let z = conj(r.z())?;
    let kind = RealizationKind::Custom(format!("{}-transformed", r.name()));
    Realization::from_parts(kind, xhat, z, p_l)
}

/// `P_μ = E p_μ E^{−1}` for `E = exp(x^α Σ_α(p))`.
pub fn transformed_momenta(sigma: &[PhaseSpaceElement]) -> Result<Vec<PhaseSpaceElement>> {
    let c = sigma[0].config();
    let gen = contract(&xs(c), sigma);
    (0..c.dim).map(|mu| adjoint_exp(&gen, &PhaseSpaceElement::p(c, mu))).collect()
}
