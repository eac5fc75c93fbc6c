use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::element::PhaseSpaceElement;
use crate::scalars::{DeformationPoly, GaussianRational, MultiIndex, SpaceConfig, Style};
use crate::terms::{push_expanded, render_terms, sort_terms, Alphabet, FlatTerm};

/// A polynomial `Σ c(a)·x^α` in the commuting coordinates.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CommutativePolynomial {
    config: SpaceConfig,
    terms: BTreeMap<MultiIndex, DeformationPoly>,
}

impl CommutativePolynomial {
    pub fn zero(config: SpaceConfig) -> Self {
        CommutativePolynomial { config, terms: BTreeMap::new() }
    }

    pub fn one(config: SpaceConfig) -> Self {
        Self::monomial(config, MultiIndex::ZERO)
    }

    pub fn constant(config: SpaceConfig, c: DeformationPoly) -> Self {
        Self::from_map(config, [(MultiIndex::ZERO, c)].into_iter().collect())
    }

    /// `x^α` with unit coefficient.
    pub fn monomial(config: SpaceConfig, alpha: MultiIndex) -> Self {
        Self::from_map(config, [(alpha, DeformationPoly::one(config))].into_iter().collect())
    }

    pub fn x(config: SpaceConfig, mu: usize) -> Self {
        Self::monomial(config, MultiIndex::unit(mu))
    }

    pub(crate) fn from_map(config: SpaceConfig, mut terms: BTreeMap<MultiIndex, DeformationPoly>) -> Self {
        terms.retain(|_, c| !c.is_zero());
        CommutativePolynomial { config, terms }
    }

    pub fn from_terms<I: IntoIterator<Item = (MultiIndex, DeformationPoly)>>(config: SpaceConfig, terms: I) -> Self {
        let mut map: BTreeMap<MultiIndex, DeformationPoly> = BTreeMap::new();
        for (m, c) in terms {
            match map.get_mut(&m) {
                Some(e) => e.add_assign(&c),
                None => {
                    map.insert(m, c);
                }
            }
        }
        Self::from_map(config, map)
    }

    /// All unit monomials in `n` coordinates of total degree ≤ `d`, ascending
    /// degree.
    pub fn monomials_up_to(config: SpaceConfig, d: usize) -> Vec<Self> {
        MultiIndex::all_up_to_degree(config.dim, d).into_iter().map(|m| Self::monomial(config, m)).collect()
    }

    pub fn config(&self) -> SpaceConfig {
        self.config
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &DeformationPoly)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, alpha: &MultiIndex) -> DeformationPoly {
        self.terms.get(alpha).cloned().unwrap_or_else(|| DeformationPoly::zero(self.config))
    }

    pub fn degree(&self) -> usize {
        self.terms.keys().map(|m| m.degree()).max().unwrap_or(0)
    }

    /// Terms of total coordinate degree exactly `d`.
    pub fn homogeneous(&self, d: usize) -> Self {
        Self::from_map(self.config, self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (*m, c.clone())).collect())
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        Self::from_map(self.config, self.terms.iter().map(|(m, x)| (*m, x.scale(c))).collect())
    }

    pub fn mul_poly(&self, c: &DeformationPoly) -> Self {
        Self::from_map(self.config, self.terms.iter().map(|(m, x)| (*m, x * c)).collect())
    }

    pub fn undeformed(&self) -> Self {
        Self::from_map(self.config, self.terms.iter().map(|(m, x)| (*m, x.homogeneous(0))).collect())
    }

    /// The same polynomial as a (p-free) phase-space element.
    pub fn to_element(&self) -> PhaseSpaceElement {
        PhaseSpaceElement::from_map(
            self.config,
            self.terms.iter().map(|(m, c)| ((*m, MultiIndex::ZERO), c.clone())).collect(),
        )
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        assert_eq!(self.config, other.config, "configuration mismatch");
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let c = if negate { -c } else { c.clone() };
            match terms.get_mut(m) {
                Some(e) => e.add_assign(&c),
                None => {
                    terms.insert(*m, c);
                }
            }
        }
        Self::from_map(self.config, terms)
    }

    /// Ordinary commutative product.
    pub fn product(&self, other: &Self) -> Self {
        assert_eq!(self.config, other.config, "configuration mismatch");
        let mut acc: BTreeMap<MultiIndex, DeformationPoly> = BTreeMap::new();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &other.terms {
                let c = c1 * c2;
                if c.is_zero() {
                    continue;
                }
                let key = *m1 + *m2;
                match acc.get_mut(&key) {
                    Some(e) => e.add_assign(&c),
                    None => {
                        acc.insert(key, c);
                    }
                }
            }
        }
        Self::from_map(self.config, acc)
    }

    pub fn flat_terms(&self) -> Vec<FlatTerm> {
        let mut out = Vec::new();
        for (m, c) in &self.terms {
            push_expanded(&mut out, c, vec![(*m, MultiIndex::ZERO)]);
        }
        sort_terms(&mut out);
        out
    }

    pub fn render(&self, style: Style) -> String {
        self.render_as(Alphabet::Canonical, style)
    }

    /// Renders with `x_μ` replaced by another alphabet, e.g. ordered `x̂`
    /// monomials.
    pub fn render_as(&self, alphabet: Alphabet, style: Style) -> String {
        render_terms(&self.config, &self.flat_terms(), alphabet, style)
    }
}

impl fmt::Display for CommutativePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Style::Text))
    }
}

impl fmt::Debug for CommutativePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CommutativePolynomial({self})")
    }
}

impl<'a> Add<&'a CommutativePolynomial> for &'a CommutativePolynomial {
    type Output = CommutativePolynomial;
    fn add(self, rhs: &'a CommutativePolynomial) -> CommutativePolynomial {
        self.combine(rhs, false)
    }
}

impl<'a> Sub<&'a CommutativePolynomial> for &'a CommutativePolynomial {
    type Output = CommutativePolynomial;
    fn sub(self, rhs: &'a CommutativePolynomial) -> CommutativePolynomial {
        self.combine(rhs, true)
    }
}

impl<'a> Mul<&'a CommutativePolynomial> for &'a CommutativePolynomial {
    type Output = CommutativePolynomial;
    fn mul(self, rhs: &'a CommutativePolynomial) -> CommutativePolynomial {
        self.product(rhs)
    }
}

impl Neg for &CommutativePolynomial {
    type Output = CommutativePolynomial;
    fn neg(self) -> CommutativePolynomial {
        self.scale(&GaussianRational::from_int(-1))
    }
}
