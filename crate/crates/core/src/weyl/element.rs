use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::poly::CommutativePolynomial;
use crate::error::{Error, Result};
use crate::scalars::{DeformationPoly, GaussianRational, MultiIndex, SpaceConfig, Style};
use crate::terms::{push_expanded, render_terms, sort_terms, Alphabet, FlatTerm};

pub(crate) type Key = (MultiIndex, MultiIndex);

/// A normal-ordered element `Σ c(a)·x^α p^β` of the phase-space algebra.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PhaseSpaceElement {
    config: SpaceConfig,
    terms: BTreeMap<Key, DeformationPoly>,
}

/// `p^β x^γ = Σ_m c_m x^{γ−m} p^{β−m}` with
/// `c_m = Π_μ m_μ!·C(β_μ,m_μ)·C(γ_μ,m_μ)·(−iη_{μμ})^{m_μ}`.
pub(crate) fn reorder(beta: &MultiIndex, gamma: &MultiIndex, n: usize) -> Vec<(MultiIndex, GaussianRational)> {
    // (m, integer factor, power of i)
    let mut acc: Vec<(MultiIndex, i64, usize)> = vec![(MultiIndex::ZERO, 1, 0)];
    for mu in 0..n {
        let (b, g) = (beta.get(mu), gamma.get(mu));
        let top = b.min(g);
        if top == 0 {
            continue;
        }
        let mut next = Vec::with_capacity(acc.len() * (top as usize + 1));
        for (m, c, ip) in &acc {
            let mut f: i64 = 1;
            for k in 0..=top {
                if k > 0 {
                    // m! C(b,m) C(g,m) = b!/(b−m)! · C(g,m); update incrementally
                    f = f * (b - k + 1) as i64 * (g - k + 1) as i64 / k as i64;
                }
                let mut mm = *m;
                mm.set(mu, k);
                let i_step = if mu == 0 { k as usize } else { 3 * k as usize };
                next.push((mm, c * f, (ip + i_step) % 4));
            }
        }
        acc = next;
    }
    acc.into_iter()
        .map(|(m, c, ip)| (m, &GaussianRational::from_int(c) * &GaussianRational::i_pow(ip)))
        .collect()
}

/// Coefficient of `p^β ▷ x^γ = c·x^{γ−β}`, or `None` when it vanishes.
pub(crate) fn derivative_coeff(beta: &MultiIndex, gamma: &MultiIndex, n: usize) -> Option<(MultiIndex, GaussianRational)> {
    let rest = gamma.checked_sub(beta)?;
    let mut c: i64 = 1;
    let mut ip = 0usize;
    for mu in 0..n {
        let b = beta.get(mu);
        for k in 0..b {
            c *= (gamma.get(mu) - k) as i64;
        }
        ip += if mu == 0 { b as usize } else { 3 * b as usize };
    }
    Some((rest, &GaussianRational::from_int(c) * &GaussianRational::i_pow(ip % 4)))
}

impl PhaseSpaceElement {
    pub fn zero(config: SpaceConfig) -> Self {
        PhaseSpaceElement { config, terms: BTreeMap::new() }
    }

    pub fn one(config: SpaceConfig) -> Self {
        Self::scalar(config, GaussianRational::one())
    }

    pub fn scalar(config: SpaceConfig, c: GaussianRational) -> Self {
        Self::from_poly(DeformationPoly::constant(config, c))
    }

    pub fn from_int(config: SpaceConfig, k: i64) -> Self {
        Self::scalar(config, GaussianRational::from_int(k))
    }

    pub fn from_poly(c: DeformationPoly) -> Self {
        Self::monomial(c.config(), MultiIndex::ZERO, MultiIndex::ZERO, c)
    }

    /// `c·x^α p^β`.
    pub fn monomial(config: SpaceConfig, x: MultiIndex, p: MultiIndex, c: DeformationPoly) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((x, p), c);
        }
        PhaseSpaceElement { config, terms }
    }

    pub(crate) fn from_map(config: SpaceConfig, mut terms: BTreeMap<Key, DeformationPoly>) -> Self {
        terms.retain(|_, c| !c.is_zero());
        PhaseSpaceElement { config, terms }
    }

    pub fn x(config: SpaceConfig, mu: usize) -> Self {
        assert!(mu < config.dim, "index {mu} out of range");
        Self::monomial(config, MultiIndex::unit(mu), MultiIndex::ZERO, DeformationPoly::one(config))
    }

    pub fn p(config: SpaceConfig, mu: usize) -> Self {
        assert!(mu < config.dim, "index {mu} out of range");
        Self::monomial(config, MultiIndex::ZERO, MultiIndex::unit(mu), DeformationPoly::one(config))
    }

    /// `a_μ` as a central element.
    pub fn a(config: SpaceConfig, mu: usize) -> Self {
        Self::from_poly(config.a(mu))
    }

    /// `a^μ` as a central element.
    pub fn a_up(config: SpaceConfig, mu: usize) -> Self {
        Self::from_poly(config.a_up(mu))
    }

    pub fn config(&self) -> SpaceConfig {
        self.config
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.get(&(MultiIndex::ZERO, MultiIndex::ZERO)).is_some_and(|c| c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &MultiIndex, &DeformationPoly)> {
        self.terms.iter().map(|((x, p), c)| (x, p, c))
    }

    pub fn coeff(&self, x: &MultiIndex, p: &MultiIndex) -> DeformationPoly {
        self.terms.get(&(*x, *p)).cloned().unwrap_or_else(|| DeformationPoly::zero(self.config))
    }

    /// The `1`-coefficient (no x, no p).
    pub fn constant_part(&self) -> DeformationPoly {
        self.coeff(&MultiIndex::ZERO, &MultiIndex::ZERO)
    }

    /// Lowest a-degree over all terms (`None` for zero).
    pub fn min_a_degree(&self) -> Option<usize> {
        self.terms.values().filter_map(|c| c.min_degree()).min()
    }

    /// A term with an a-degree-zero coefficient, if any.
    pub fn undeformed_witness(&self) -> Option<String> {
        self.terms.iter().find(|(_, c)| c.min_degree() == Some(0)).map(|((x, p), c)| {
            Self::monomial(self.config, *x, *p, c.homogeneous(0)).to_string()
        })
    }

    pub fn max_x_degree(&self) -> usize {
        self.terms.keys().map(|(x, _)| x.degree()).max().unwrap_or(0)
    }

    pub fn max_p_degree(&self) -> usize {
        self.terms.keys().map(|(_, p)| p.degree()).max().unwrap_or(0)
    }

    /// True when no term contains a coordinate.
    pub fn is_p_only(&self) -> bool {
        self.terms.keys().all(|(x, _)| x.is_zero())
    }

    pub fn is_x_only(&self) -> bool {
        self.terms.keys().all(|(_, p)| p.is_zero())
    }

    /// Keeps the terms of coordinate degree `d`.
    pub fn x_homogeneous(&self, d: usize) -> Self {
        self.filter(|x, _| x.degree() == d)
    }

    pub fn filter(&self, keep: impl Fn(&MultiIndex, &MultiIndex) -> bool) -> Self {
        PhaseSpaceElement {
            config: self.config,
            terms: self.terms.iter().filter(|((x, p), _)| keep(x, p)).map(|(k, c)| (*k, c.clone())).collect(),
        }
    }

    /// Applies `f` to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&DeformationPoly) -> DeformationPoly) -> Self {
        Self::from_map(self.config, self.terms.iter().map(|(k, c)| (*k, f(c))).collect())
    }

    /// The `a → 0` limit.
    pub fn undeformed(&self) -> Self {
        self.map_coeffs(|c| c.homogeneous(0))
    }

    /// Homogeneous a-degree-`k` part.
    pub fn a_homogeneous(&self, k: usize) -> Self {
        self.map_coeffs(|c| c.homogeneous(k))
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero(self.config);
        }
        self.map_coeffs(|x| x.scale(c))
    }

    pub fn mul_poly(&self, c: &DeformationPoly) -> Self {
        self.map_coeffs(|x| x * c)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.config == other.config {
            Ok(())
        } else {
            Err(Error::ConfigMismatch(self.config, other.config))
        }
    }

    pub(crate) fn add_into(acc: &mut BTreeMap<Key, DeformationPoly>, key: Key, c: &DeformationPoly) {
        match acc.get_mut(&key) {
            Some(e) => e.add_assign(c),
            None => {
                acc.insert(key, c.clone());
            }
        }
    }

    fn combine(&self, other: &Self, negate: bool) -> Self {
        let mut terms = self.terms.clone();
        for (k, c) in &other.terms {
            if negate {
                Self::add_into(&mut terms, *k, &-c);
            } else {
                Self::add_into(&mut terms, *k, c);
            }
        }
        Self::from_map(self.config, terms)
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.combine(other, false))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.combine(other, true))
    }

    /// The normal-ordered product `self · other`.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.config.dim;
        let order = self.config.order;
        let mut acc: BTreeMap<Key, DeformationPoly> = BTreeMap::new();
        for ((x1, p1), c1) in &self.terms {
            let d1 = c1.min_degree().unwrap_or(0);
            for ((x2, p2), c2) in &other.terms {
                if d1 + c2.min_degree().unwrap_or(0) > order {
                    continue;
                }
                let c = c1 * c2;
                if c.is_zero() {
                    continue;
                }
                if p1.is_zero() || x2.is_zero() {
                    Self::add_into(&mut acc, (*x1 + *x2, *p1 + *p2), &c);
                    continue;
                }
                for (m, s) in reorder(p1, x2, n) {
                    let x = *x1 + x2.checked_sub(&m).expect("contraction exceeds exponent");
                    let p = p1.checked_sub(&m).expect("contraction exceeds exponent") + *p2;
                    Self::add_into(&mut acc, (x, p), &c.scale(&s));
                }
            }
        }
        Ok(Self::from_map(self.config, acc))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one(self.config);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `[self, other] = self·other − other·self`.
    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// `self ▷ f`: coordinates multiply, `p_μ` acts as `−iη_{μμ}∂_μ`.
    pub fn act(&self, f: &CommutativePolynomial) -> CommutativePolynomial {
        assert_eq!(self.config, f.config(), "configuration mismatch in action");
        let n = self.config.dim;
        let order = self.config.order;
        let mut acc: BTreeMap<MultiIndex, DeformationPoly> = BTreeMap::new();
        for ((x, p), c) in &self.terms {
            let d1 = c.min_degree().unwrap_or(0);
            for (g, cg) in f.terms() {
                if d1 + cg.min_degree().unwrap_or(0) > order {
                    continue;
                }
                let Some((rest, s)) = derivative_coeff(p, g, n) else { continue };
                let prod = (c * cg).scale(&s);
                if prod.is_zero() {
                    continue;
                }
                let key = *x + rest;
                match acc.get_mut(&key) {
                    Some(e) => e.add_assign(&prod),
                    None => {
                        acc.insert(key, prod);
                    }
                }
            }
        }
        CommutativePolynomial::from_map(self.config, acc)
    }

    /// `self ▷ 1`: the p-free part as a polynomial.
    pub fn eval_at_unit(&self) -> CommutativePolynomial {
        CommutativePolynomial::from_map(
            self.config,
            self.terms.iter().filter(|((_, p), _)| p.is_zero()).map(|((x, _), c)| (*x, c.clone())).collect(),
        )
    }

    pub fn flat_terms(&self) -> Vec<FlatTerm> {
        let mut out = Vec::new();
        for ((x, p), c) in &self.terms {
            push_expanded(&mut out, c, vec![(*x, *p)]);
        }
        sort_terms(&mut out);
        out
    }

    pub fn render(&self, style: Style) -> String {
        render_terms(&self.config, &self.flat_terms(), Alphabet::Canonical, style)
    }
}

impl fmt::Display for PhaseSpaceElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Style::Text))
    }
}

impl fmt::Debug for PhaseSpaceElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PhaseSpaceElement({self})")
    }
}

impl<'a> Add<&'a PhaseSpaceElement> for &'a PhaseSpaceElement {
    type Output = PhaseSpaceElement;
    fn add(self, rhs: &'a PhaseSpaceElement) -> PhaseSpaceElement {
        self.checked_add(rhs).expect("phase-space config mismatch")
    }
}

impl<'a> Sub<&'a PhaseSpaceElement> for &'a PhaseSpaceElement {
    type Output = PhaseSpaceElement;
    fn sub(self, rhs: &'a PhaseSpaceElement) -> PhaseSpaceElement {
        self.checked_sub(rhs).expect("phase-space config mismatch")
    }
}

impl<'a> Mul<&'a PhaseSpaceElement> for &'a PhaseSpaceElement {
    type Output = PhaseSpaceElement;
    fn mul(self, rhs: &'a PhaseSpaceElement) -> PhaseSpaceElement {
        self.checked_mul(rhs).expect("phase-space config mismatch")
    }
}

impl Neg for &PhaseSpaceElement {
    type Output = PhaseSpaceElement;
    fn neg(self) -> PhaseSpaceElement {
        self.map_coeffs(|c| -c)
    }
}

impl Neg for PhaseSpaceElement {
    type Output = PhaseSpaceElement;
    fn neg(self) -> PhaseSpaceElement {
        -&self
    }
}

impl Add for PhaseSpaceElement {
    type Output = PhaseSpaceElement;
    fn add(self, rhs: PhaseSpaceElement) -> PhaseSpaceElement {
        &self + &rhs
    }
}

impl Sub for PhaseSpaceElement {
    type Output = PhaseSpaceElement;
    fn sub(self, rhs: PhaseSpaceElement) -> PhaseSpaceElement {
        &self - &rhs
    }
}

impl Mul for PhaseSpaceElement {
    type Output = PhaseSpaceElement;
    fn mul(self, rhs: PhaseSpaceElement) -> PhaseSpaceElement {
        &self * &rhs
    }
}
