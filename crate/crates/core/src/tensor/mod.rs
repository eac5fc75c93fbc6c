//! Two- and three-leg tensors over the phase space, the undeformed
//! coproduct, the ideal generators `R̂_μ` and the congruence test.

mod element;
mod ideal;

pub use element::{Product, TensorElement};
pub use ideal::{congruent_mod_ideal, delta_p_left, Congruence, IdealGenerators};

use std::collections::{BTreeMap, HashMap};

use crate::error::{Error, Result};
use crate::scalars::{DeformationPoly, GaussianRational, MultiIndex, SpaceConfig};
use crate::weyl::PhaseSpaceElement;

/// Undeformed coproduct, `x^α p^β ↦ (x^α⊗1)·Π_μ(p_μ⊗1 + 1⊗p_μ)^{β_μ}`.
pub fn coproduct0(h: &PhaseSpaceElement) -> TensorElement {
    let config = h.config();
    let mut acc = BTreeMap::new();
    for (x, p, c) in h.terms() {
        for g in p.divisors() {
            let rest = p.checked_sub(&g).expect("divisor");
            let s = GaussianRational::from_int(p.binomial(&g) as i64);
            let key = [(*x, g), (MultiIndex::ZERO, rest), (MultiIndex::ZERO, MultiIndex::ZERO)];
            let v: DeformationPoly = c.scale(&s);
            acc.entry(key).and_modify(|e: &mut DeformationPoly| e.add_assign(&v)).or_insert(v);
        }
    }
    TensorElement::from_map(config, 2, acc)
}

/// `(Δ₀⊗1)T` for a rank-2 tensor.
pub fn coproduct0_left(t: &TensorElement) -> Result<TensorElement> {
    t.expand_leg(0, coproduct0)
}

/// `(1⊗Δ₀)T` for a rank-2 tensor.
pub fn coproduct0_right(t: &TensorElement) -> Result<TensorElement> {
    t.expand_leg(1, coproduct0)
}

/// Memoized primitive coproduct on unit monomials `x^αp^β`.
struct LieCoproduct {
    config: SpaceConfig,
    cache: HashMap<(MultiIndex, MultiIndex), TensorElement>,
}

impl LieCoproduct {
    fn new(config: SpaceConfig) -> Self {
        LieCoproduct { config, cache: HashMap::new() }
    }

    fn monomial(&mut self, x: MultiIndex, p: MultiIndex) -> Result<TensorElement> {
        let c = self.config;
        if let Some(t) = self.cache.get(&(x, p)) {
            return Ok(t.clone());
        }
        let unit = DeformationPoly::one(c);
        if x.degree() > p.degree() {
            let e = PhaseSpaceElement::monomial(c, x, p, unit);
            return Err(Error::WrongShape { expected: "an element of U(igl(n) x T)".into(), found: e.to_string() });
        }
        let out = if x.is_zero() {
            coproduct0(&PhaseSpaceElement::monomial(c, x, p, unit))
        } else {
            // x^α p^β = L_{μν}·x^{α'}p^{β'} + iη_{νν}α'_ν x^{α−e_ν}p^{β'}
            let mu = (0..c.dim).find(|&k| x.get(k) > 0).expect("nonzero");
            let nu = (0..c.dim).find(|&k| p.get(k) > 0).expect("p-degree ≥ x-degree");
            let xr = x.checked_sub(&MultiIndex::unit(mu)).expect("mu in support");
            let pr = p.checked_sub(&MultiIndex::unit(nu)).expect("nu in support");
            let l = PhaseSpaceElement::monomial(c, MultiIndex::unit(mu), MultiIndex::unit(nu), DeformationPoly::one(c));
            let one = PhaseSpaceElement::one(c);
            let dl = &TensorElement::tensor2(&l, &one) + &TensorElement::tensor2(&one, &l);
            let mut t = &dl * &self.monomial(xr, pr)?;
            if xr.get(nu) > 0 {
                let lower = x.checked_sub(&MultiIndex::unit(nu)).expect("nu in support");
                let w = &GaussianRational::i() * &GaussianRational::from_int(c.metric(nu) * xr.get(nu) as i64);
                t = &t + &self.monomial(lower, pr)?.scale(&w);
            }
            t
        };
        self.cache.insert((x, p), out.clone());
        Ok(out)
    }

    fn element(&mut self, h: &PhaseSpaceElement) -> Result<TensorElement> {
        let mut acc = TensorElement::zero(self.config, 2);
        for (x, p, c) in h.terms() {
            acc = &acc + &self.monomial(*x, *p)?.mul_poly(c);
        }
        Ok(acc)
    }
}

/// Coproduct of the enveloping algebra of `igl(n)⋉T`, generated by
/// `L_{μν} = x_μp_ν` and `p_μ`, all primitive. Defined on elements whose
/// monomials `x^αp^β` have `|α| ≤ |β|`; it agrees with [`coproduct0`]
/// modulo `(R₀)_μ`.
pub fn coproduct_lie(h: &PhaseSpaceElement) -> Result<TensorElement> {
    LieCoproduct::new(h.config()).element(h)
}

/// `(Δ⊗1)T` (`k = 0`) or `(1⊗Δ)T` (`k = 1`) with the coproduct of
/// [`coproduct_lie`].
pub fn coproduct_lie_leg(t: &TensorElement, k: usize) -> Result<TensorElement> {
    let mut lie = LieCoproduct::new(t.config());
    let mut images = HashMap::new();
    for (keys, _) in t.terms() {
        let (x, p) = keys[k.min(keys.len() - 1)];
        if !images.contains_key(&(x, p)) {
            images.insert((x, p), lie.monomial(x, p)?);
        }
    }
    // leg factors handed to the closure are unit monomials
    t.expand_leg(k, |e| {
        let (x, p, _) = e.terms().next().expect("unit monomial");
        images[&(*x, *p)].clone()
    })
}

#[cfg(test)]
mod tests;
