//! Flattened term lists shared by every printer and serializer.

use std::cmp::Ordering;

use crate::scalars::format::{format_tensor_sum, power};
use crate::scalars::{DeformationPoly, GaussianRational, MultiIndex, SpaceConfig, Style};

/// One printed term `c · a^γ · (x^α p^β) ⊗ …`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FlatTerm {
    pub coeff: GaussianRational,
    pub a: MultiIndex,
    /// Per leg: `(x-exponents, p-exponents)`.
    pub legs: Vec<(MultiIndex, MultiIndex)>,
}

/// Generator names used when printing a leg.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Alphabet {
    /// Commuting `x_μ` and momenta `p_μ`.
    Canonical,
    /// Ordered monomials in `x̂_μ` (the x-slot only).
    Hatted,
    /// Ordered monomials in `ŷ_μ` (the x-slot only).
    Dual,
}

fn x_name(alphabet: Alphabet, mu: usize, style: Style) -> String {
    match (alphabet, style) {
        (Alphabet::Canonical, _) => format!("x_{mu}"),
        (Alphabet::Hatted, Style::Text) => format!("xhat_{mu}"),
        (Alphabet::Hatted, Style::Latex) => format!("\\hat{{x}}_{mu}"),
        (Alphabet::Dual, Style::Text) => format!("yhat_{mu}"),
        (Alphabet::Dual, Style::Latex) => format!("\\hat{{y}}_{mu}"),
    }
}

fn leg_cmp(a: &[(MultiIndex, MultiIndex)], b: &[(MultiIndex, MultiIndex)]) -> Ordering {
    for (la, lb) in a.iter().zip(b) {
        let o = la.0.cmp(&lb.0).then_with(|| la.1.cmp(&lb.1));
        if o != Ordering::Equal {
            return o;
        }
    }
    Ordering::Equal
}

/// Print order: ascending a-degree, then legs left to right in descending
/// graded-lex order, then ascending a-monomial.
pub fn sort_terms(terms: &mut [FlatTerm]) {
    terms.sort_by(|s, t| {
        s.a.degree()
            .cmp(&t.a.degree())
            .then_with(|| leg_cmp(&t.legs, &s.legs))
            .then_with(|| s.a.cmp(&t.a))
    });
}

/// Expands a polynomial coefficient into flat terms sharing `legs`.
pub fn push_expanded(out: &mut Vec<FlatTerm>, coeff: &DeformationPoly, legs: Vec<(MultiIndex, MultiIndex)>) {
    for (a, c) in coeff.terms() {
        out.push(FlatTerm { coeff: c.clone(), a: *a, legs: legs.clone() });
    }
}

pub fn render_terms(config: &SpaceConfig, terms: &[FlatTerm], alphabet: Alphabet, style: Style) -> String {
    let n = config.dim;
    format_tensor_sum(
        terms.iter().map(|t| {
            let mut legs = Vec::with_capacity(t.legs.len());
            for (k, (x, p)) in t.legs.iter().enumerate() {
                let mut f = if k == 0 {
                    DeformationPoly::monomial_factors(config, &t.a, style)
                } else {
                    Vec::new()
                };
                f.extend((0..n).filter_map(|mu| power(&x_name(alphabet, mu, style), x.get(mu), style)));
                f.extend((0..n).filter_map(|mu| power(&format!("p_{mu}"), p.get(mu), style)));
                legs.push(f);
            }
            (t.coeff.clone(), legs)
        }),
        style,
    )
}
