use std::collections::HashMap;
use std::sync::Mutex;

use crate::scalars::{DeformationPoly, MultiIndex, SpaceConfig};
use crate::weyl::{CommutativePolynomial, PhaseSpaceElement};

/// Ordered monomials in a family of generators `g_0, …, g_{n−1}` acting on
/// polynomials, with the ▷-images of single generators on monomials cached.
///
/// `g^α` means `g_0^{α_0} g_1^{α_1} ⋯` (ascending index, PBW order).
pub struct OrderedAction {
    gens: Vec<PhaseSpaceElement>,
    cache: Mutex<HashMap<(usize, MultiIndex), CommutativePolynomial>>,
}

impl Clone for OrderedAction {
    fn clone(&self) -> Self {
        OrderedAction::new(self.gens.clone())
    }
}

impl std::fmt::Debug for OrderedAction {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("OrderedAction").field("gens", &self.gens).finish()
    }
}

impl OrderedAction {
    pub fn new(gens: Vec<PhaseSpaceElement>) -> Self {
        OrderedAction { gens, cache: Mutex::new(HashMap::new()) }
    }

    pub fn generators(&self) -> &[PhaseSpaceElement] {
        &self.gens
    }

    fn config(&self) -> SpaceConfig {
        self.gens[0].config()
    }

    fn act_gen_monomial(&self, mu: usize, gamma: &MultiIndex) -> CommutativePolynomial {
        let key = (mu, *gamma);
        if let Some(v) = self.cache.lock().expect("cache poisoned").get(&key) {
            return v.clone();
        }
        let v = self.gens[mu].act(&CommutativePolynomial::monomial(self.config(), *gamma));
        self.cache.lock().expect("cache poisoned").insert(key, v.clone());
        v
    }

    /// `g_μ ▷ f`.
    pub fn act_gen(&self, mu: usize, f: &CommutativePolynomial) -> CommutativePolynomial {
        let mut acc = CommutativePolynomial::zero(self.config());
        for (gamma, c) in f.terms() {
            acc = &acc + &self.act_gen_monomial(mu, gamma).mul_poly(c);
        }
        acc
    }

    /// `g^α ▷ f`.
    pub fn act_monomial(&self, alpha: &MultiIndex, f: &CommutativePolynomial) -> CommutativePolynomial {
        let mut acc = f.clone();
        for mu in (0..self.config().dim).rev() {
            for _ in 0..alpha.get(mu) {
                acc = self.act_gen(mu, &acc);
            }
        }
        acc
    }

    /// `f̂(g) ▷ h` where `pbw` lists the coefficients of the ordered monomials.
    pub fn act_pbw(&self, pbw: &CommutativePolynomial, h: &CommutativePolynomial) -> CommutativePolynomial {
        let mut acc = CommutativePolynomial::zero(self.config());
        for (alpha, c) in pbw.terms() {
            acc = &acc + &self.act_monomial(alpha, h).mul_poly(c);
        }
        acc
    }

    /// Coefficients of the unique ordered expansion `f̂` with `f̂ ▷ 1 = f`.
    ///
    /// The ▷1-images of ordered monomials are unitriangular in total degree,
    /// so the top-degree residual is peeled off one degree at a time.
    pub fn quantize(&self, f: &CommutativePolynomial) -> CommutativePolynomial {
        let config = self.config();
        let one = CommutativePolynomial::one(config);
        let mut residual = f.clone();
        let mut out: Vec<(MultiIndex, DeformationPoly)> = Vec::new();
        while !residual.is_zero() {
            let top = residual.homogeneous(residual.degree());
            for (alpha, c) in top.terms() {
                out.push((*alpha, c.clone()));
                residual = &residual - &self.act_monomial(alpha, &one).mul_poly(c);
            }
        }
        CommutativePolynomial::from_terms(config, out)
    }

    /// The ordered monomial `g^α` as an element.
    pub fn monomial_element(&self, alpha: &MultiIndex) -> PhaseSpaceElement {
        let mut acc = PhaseSpaceElement::one(self.config());
        for mu in 0..self.config().dim {
            for _ in 0..alpha.get(mu) {
                acc = &acc * &self.gens[mu];
            }
        }
        acc
    }

    /// `Σ c_α g^α`.
    pub fn pbw_element(&self, pbw: &CommutativePolynomial) -> PhaseSpaceElement {
        let mut acc = PhaseSpaceElement::zero(self.config());
        for (alpha, c) in pbw.terms() {
            acc = &acc + &self.monomial_element(alpha).mul_poly(c);
        }
        acc
    }

    /// `Σ c_α (g^α)^{op}`: every ordered monomial multiplied in reverse.
    pub fn pbw_element_reversed(&self, pbw: &CommutativePolynomial) -> PhaseSpaceElement {
        let mut acc = PhaseSpaceElement::zero(self.config());
        for (alpha, c) in pbw.terms() {
            let mut m = PhaseSpaceElement::one(self.config());
            for mu in (0..self.config().dim).rev() {
                for _ in 0..alpha.get(mu) {
                    m = &m * &self.gens[mu];
                }
            }
            acc = &acc + &m.mul_poly(c);
        }
        acc
    }
}
