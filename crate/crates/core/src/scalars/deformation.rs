use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::config::SpaceConfig;
use super::format::{format_sum, power, Style};
use super::gaussian::GaussianRational;
use super::multi_index::MultiIndex;
use crate::error::{Error, Result};

/// Polynomial in the deformation symbols, truncated at total degree
/// `config.order`.
///
/// Terms are kept sorted by exponent (graded-lex ascending) with no zero
/// coefficients, so structural equality is mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct DeformationPoly {
    config: SpaceConfig,
    terms: Vec<(MultiIndex, GaussianRational)>,
}

impl DeformationPoly {
    pub fn zero(config: SpaceConfig) -> Self {
        DeformationPoly { config, terms: Vec::new() }
    }

    pub fn one(config: SpaceConfig) -> Self {
        Self::constant(config, GaussianRational::one())
    }

    pub fn constant(config: SpaceConfig, c: GaussianRational) -> Self {
        Self::monomial(config, MultiIndex::ZERO, c)
    }

    /// The `j`-th formal symbol (index into `config.num_symbols()`).
    pub fn symbol(config: SpaceConfig, j: usize) -> Self {
        assert!(j < config.num_symbols(), "deformation symbol {j} does not exist");
        Self::monomial(config, MultiIndex::unit(j), GaussianRational::one())
    }

    /// `c·a^γ`, dropped if above the truncation order.
    pub fn monomial(config: SpaceConfig, exps: MultiIndex, c: GaussianRational) -> Self {
        if c.is_zero() || exps.degree() > config.order {
            Self::zero(config)
        } else {
            DeformationPoly { config, terms: vec![(exps, c)] }
        }
    }

    /// Builds a canonical polynomial from arbitrary (possibly repeated) terms.
    pub fn from_terms<I>(config: SpaceConfig, terms: I) -> Self
    where
        I: IntoIterator<Item = (MultiIndex, GaussianRational)>,
    {
        let mut v: Vec<(MultiIndex, GaussianRational)> =
            terms.into_iter().filter(|(m, _)| m.degree() <= config.order).collect();
        v.sort_by(|a, b| a.0.cmp(&b.0));
        let mut out: Vec<(MultiIndex, GaussianRational)> = Vec::with_capacity(v.len());
        for (m, c) in v {
            match out.last_mut() {
                Some((lm, lc)) if *lm == m => *lc += &c,
                _ => out.push((m, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        DeformationPoly { config, terms: out }
    }

    pub fn config(&self) -> SpaceConfig {
        self.config
    }

    pub fn terms(&self) -> &[(MultiIndex, GaussianRational)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0.is_zero() && self.terms[0].1.is_one()
    }

    /// Degree-zero coefficient.
    pub fn constant_term(&self) -> GaussianRational {
        match self.terms.first() {
            Some((m, c)) if m.is_zero() => c.clone(),
            _ => GaussianRational::zero(),
        }
    }

    /// The value if the polynomial has no symbol dependence.
    pub fn as_constant(&self) -> Option<GaussianRational> {
        match self.terms.as_slice() {
            [] => Some(GaussianRational::zero()),
            [(m, c)] if m.is_zero() => Some(c.clone()),
            _ => None,
        }
    }

    /// Lowest total degree of a stored term.
    pub fn min_degree(&self) -> Option<usize> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.last().map(|(m, _)| m.degree())
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.config);
        }
        DeformationPoly {
            config: self.config,
            terms: self.terms.iter().map(|(m, x)| (*m, x * c)).collect(),
        }
    }

    /// Degree-`k` homogeneous component.
    pub fn homogeneous(&self, k: usize) -> Self {
        DeformationPoly {
            config: self.config,
            terms: self.terms.iter().filter(|(m, _)| m.degree() == k).cloned().collect(),
        }
    }

    /// Re-truncates at a lower order (or relabels at a higher one).
    pub fn truncate(&self, order: usize) -> Self {
        let config = self.config.with_order(order);
        DeformationPoly {
            config,
            terms: self.terms.iter().filter(|(m, _)| m.degree() <= order).cloned().collect(),
        }
    }

    /// Keeps the total-degree-zero part (the `a → 0` limit).
    pub fn undeformed(&self) -> Self {
        self.homogeneous(0)
    }

    /// Multiplies by `a^γ` for one monomial, truncating.
    pub fn shift(&self, exps: MultiIndex) -> Self {
        let d = exps.degree();
        DeformationPoly {
            config: self.config,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() + d <= self.config.order)
                .map(|(m, c)| (*m + exps, c.clone()))
                .collect(),
        }
    }

    /// In-place `self += other`.
    pub fn add_assign(&mut self, other: &Self) {
        debug_assert_eq!(self.config, other.config);
        if other.is_zero() {
            return;
        }
        if self.is_zero() {
            self.terms = other.terms.clone();
            return;
        }
        *self = self.add_unchecked(other, false);
    }

    /// In-place `self += c·other`.
    pub fn add_scaled_assign(&mut self, other: &Self, c: &GaussianRational) {
        if c.is_one() {
            self.add_assign(other);
        } else if !c.is_zero() {
            self.add_assign(&other.scale(c));
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.config == other.config {
            Ok(())
        } else {
            Err(Error::ConfigMismatch(self.config, other.config))
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.add_unchecked(other, false))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn add_unchecked(&self, other: &Self, negate: bool) -> Self {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() || j < b.len() {
            if j == b.len() || (i < a.len() && a[i].0 < b[j].0) {
                out.push(a[i].clone());
                i += 1;
            } else if i == a.len() || b[j].0 < a[i].0 {
                let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                out.push((b[j].0, c));
                j += 1;
            } else {
                let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                if !c.is_zero() {
                    out.push((a[i].0, c));
                }
                i += 1;
                j += 1;
            }
        }
        DeformationPoly { config: self.config, terms: out }
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.config);
        }
        if let Some(c) = other.as_constant() {
            return self.scale(&c);
        }
        if let Some(c) = self.as_constant() {
            return other.scale(&c);
        }
        let k = self.config.order;
        let prods = self.terms.iter().flat_map(|(ma, ca)| {
            other.terms.iter().filter_map(move |(mb, cb)| {
                (ma.degree() + mb.degree() <= k).then(|| (*ma + *mb, ca * cb))
            })
        });
        Self::from_terms(self.config, prods.collect::<Vec<_>>())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.config);
        for _ in 0..e {
            acc = acc.mul_unchecked(self);
        }
        acc
    }

    /// `a^γ` rendered as `a_0^2*a_1` (a single name in one-symbol modes).
    pub fn monomial_factors(config: &SpaceConfig, exps: &MultiIndex, style: Style) -> Vec<String> {
        (0..config.num_symbols())
            .filter_map(|j| power(&config.symbol_name(j), exps.get(j), style))
            .collect()
    }

    pub fn render(&self, style: Style) -> String {
        format_sum(
            self.terms.iter().map(|(m, c)| (c.clone(), Self::monomial_factors(&self.config, m, style))),
            style,
        )
    }
}

impl fmt::Display for DeformationPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Style::Text))
    }
}

impl fmt::Debug for DeformationPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DeformationPoly({self})")
    }
}

impl<'a> Add<&'a DeformationPoly> for &'a DeformationPoly {
    type Output = DeformationPoly;
    fn add(self, rhs: &'a DeformationPoly) -> DeformationPoly {
        self.checked_add(rhs).expect("deformation polynomial config mismatch")
    }
}

impl<'a> Sub<&'a DeformationPoly> for &'a DeformationPoly {
    type Output = DeformationPoly;
    fn sub(self, rhs: &'a DeformationPoly) -> DeformationPoly {
        self.check(rhs).expect("deformation polynomial config mismatch");
        self.add_unchecked(rhs, true)
    }
}

impl<'a> Mul<&'a DeformationPoly> for &'a DeformationPoly {
    type Output = DeformationPoly;
    fn mul(self, rhs: &'a DeformationPoly) -> DeformationPoly {
        self.checked_mul(rhs).expect("deformation polynomial config mismatch")
    }
}

impl Neg for &DeformationPoly {
    type Output = DeformationPoly;
    fn neg(self) -> DeformationPoly {
        DeformationPoly {
            config: self.config,
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Neg for DeformationPoly {
    type Output = DeformationPoly;
    fn neg(self) -> DeformationPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::DeformationMode;
    use proptest::prelude::*;

    fn cfg(order: usize, mode: DeformationMode) -> SpaceConfig {
        SpaceConfig::new(3, order, mode).unwrap()
    }

    #[test]
    fn truncation_examples() {
        for (k, expect) in [(1usize, "1"), (2, "1 - a_0^2")] {
            let c = cfg(k, DeformationMode::Generic);
            let one = DeformationPoly::one(c);
            let a0 = c.a(0);
            assert_eq!((&(&one + &a0) * &(&one - &a0)).to_string(), expect);
        }
    }

    #[test]
    fn mismatched_configs_error() {
        let p = DeformationPoly::one(cfg(1, DeformationMode::Generic));
        let q = DeformationPoly::one(cfg(2, DeformationMode::Generic));
        assert!(matches!(p.checked_mul(&q), Err(Error::ConfigMismatch(..))));
    }

    #[test]
    fn one_symbol_modes_print_their_symbol() {
        let c = cfg(3, DeformationMode::Light);
        let l = c.a(1);
        assert_eq!((&l * &l).to_string(), "l^2");
    }

    fn arb_poly(order: usize) -> impl Strategy<Value = DeformationPoly> {
        let c = cfg(order, DeformationMode::Generic);
        prop::collection::vec(((0u8..3, 0u8..3, 0u8..3), -4i64..5, 1i64..4), 0..6).prop_map(move |ts| {
            DeformationPoly::from_terms(
                c,
                ts.into_iter().map(|((e0, e1, e2), n, d)| {
                    (MultiIndex::from_slice(&[e0, e1, e2]), GaussianRational::ratio(n, d))
                }),
            )
        })
    }

    proptest! {
        #[test]
        fn ring_laws(p in arb_poly(3), q in arb_poly(3), r in arb_poly(3)) {
            prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
            prop_assert_eq!(&p * &q, &q * &p);
            prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        }

        #[test]
        fn truncation_is_a_homomorphism(p in arb_poly(3), q in arb_poly(3), k in 0usize..3) {
            let lhs = (&p * &q).truncate(k);
            let rhs = &p.truncate(k) * &q.truncate(k);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn canonical_form_is_structural(p in arb_poly(3)) {
            let rebuilt = DeformationPoly::from_terms(p.config(), p.terms().iter().rev().cloned());
            prop_assert_eq!(&rebuilt, &p);
            prop_assert!((&p - &p).is_zero());
        }
    }
}
