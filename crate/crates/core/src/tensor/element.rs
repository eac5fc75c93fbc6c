use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalars::{DeformationPoly, GaussianRational, MultiIndex, SpaceConfig, Style};
use crate::terms::{push_expanded, render_terms, sort_terms, Alphabet, FlatTerm};
use crate::weyl::{CommutativePolynomial, Key, PhaseSpaceElement, SeriesAlgebra};

pub(crate) type Legs = [Key; 3];

const UNIT_KEY: Key = (MultiIndex::ZERO, MultiIndex::ZERO);

/// A finite sum of pure tensors over two or three legs, each leg a
/// normal-ordered monomial.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct TensorElement {
    config: SpaceConfig,
    rank: usize,
    terms: BTreeMap<Legs, DeformationPoly>,
}

fn add_into(acc: &mut BTreeMap<Legs, DeformationPoly>, key: Legs, c: &DeformationPoly) {
    match acc.get_mut(&key) {
        Some(e) => e.add_assign(c),
        None => {
            acc.insert(key, c.clone());
        }
    }
}

/// Normal-ordered product of two monomials with unit coefficient.
fn monomial_product(n: usize, a: &Key, b: &Key) -> Vec<(Key, GaussianRational)> {
    if a.1.is_zero() || b.0.is_zero() {
        return vec![((a.0 + b.0, a.1 + b.1), GaussianRational::one())];
    }
    crate::weyl::reorder(&a.1, &b.0, n)
        .into_iter()
        .map(|(m, s)| {
            let x = a.0 + b.0.checked_sub(&m).expect("contraction");
            let p = a.1.checked_sub(&m).expect("contraction") + b.1;
            ((x, p), s)
        })
        .collect()
}

/// Which product combines the leg results in [`TensorElement::act_pair`].
#[derive(Clone, Copy)]
pub enum Product<'a> {
    /// Commutative multiplication of polynomials.
    Pointwise,
    /// A star product `f ⋆ g`, passed as a closure.
    Star(&'a (dyn Fn(&CommutativePolynomial, &CommutativePolynomial) -> CommutativePolynomial + Sync)),
}

impl TensorElement {
    pub fn zero(config: SpaceConfig, rank: usize) -> Self {
        assert!(rank == 2 || rank == 3, "tensor rank must be 2 or 3");
        TensorElement { config, rank, terms: BTreeMap::new() }
    }

    pub fn one(config: SpaceConfig, rank: usize) -> Self {
        let mut t = Self::zero(config, rank);
        t.terms.insert([UNIT_KEY; 3], DeformationPoly::one(config));
        t
    }

    pub(crate) fn from_map(config: SpaceConfig, rank: usize, mut terms: BTreeMap<Legs, DeformationPoly>) -> Self {
        terms.retain(|_, c| !c.is_zero());
        TensorElement { config, rank, terms }
    }

    /// `A_1 ⊗ A_2 (⊗ A_3)` for arbitrary leg elements.
    pub fn product_of(legs: &[&PhaseSpaceElement]) -> Self {
        let rank = legs.len();
        let config = legs[0].config();
        let mut acc: BTreeMap<Legs, DeformationPoly> = BTreeMap::new();
        acc.insert([UNIT_KEY; 3], DeformationPoly::one(config));
        for (k, leg) in legs.iter().enumerate() {
            let mut next = BTreeMap::new();
            for (key, c) in &acc {
                for (x, p, d) in leg.terms() {
                    let prod = c * d;
                    if prod.is_zero() {
                        continue;
                    }
                    let mut nk = *key;
                    nk[k] = (*x, *p);
                    add_into(&mut next, nk, &prod);
                }
            }
            acc = next;
        }
        Self::from_map(config, rank, acc)
    }

    pub fn tensor2(a: &PhaseSpaceElement, b: &PhaseSpaceElement) -> Self {
        Self::product_of(&[a, b])
    }

    pub fn tensor3(a: &PhaseSpaceElement, b: &PhaseSpaceElement, c: &PhaseSpaceElement) -> Self {
        Self::product_of(&[a, b, c])
    }

    /// `A` placed in leg `k`, units elsewhere.
    pub fn in_leg(a: &PhaseSpaceElement, k: usize, rank: usize) -> Self {
        let one = PhaseSpaceElement::one(a.config());
        let legs: Vec<&PhaseSpaceElement> = (0..rank).map(|j| if j == k { a } else { &one }).collect();
        Self::product_of(&legs)
    }

    pub fn config(&self) -> SpaceConfig {
        self.config
    }

    pub fn rank(&self) -> usize {
        self.rank
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
        self.terms.len() == 1 && self.terms.get(&[UNIT_KEY; 3]).is_some_and(|c| c.is_one())
    }

    /// Terms as `(legs, coefficient)` with only the first `rank` legs.
    pub fn terms(&self) -> impl Iterator<Item = (&[Key], &DeformationPoly)> {
        self.terms.iter().map(move |(k, c)| (&k[..self.rank], c))
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.config != other.config {
            return Err(Error::ConfigMismatch(self.config, other.config));
        }
        if self.rank != other.rank {
            return Err(Error::RankMismatch(self.rank, other.rank));
        }
        Ok(())
    }

    pub fn map_coeffs(&self, f: impl Fn(&DeformationPoly) -> DeformationPoly) -> Self {
        Self::from_map(self.config, self.rank, self.terms.iter().map(|(k, c)| (*k, f(c))).collect())
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        self.map_coeffs(|x| x.scale(c))
    }

    pub fn mul_poly(&self, c: &DeformationPoly) -> Self {
        self.map_coeffs(|x| x * c)
    }

    pub fn undeformed(&self) -> Self {
        self.map_coeffs(|c| c.homogeneous(0))
    }

    pub fn a_homogeneous(&self, k: usize) -> Self {
        self.map_coeffs(|c| c.homogeneous(k))
    }

    pub fn min_a_degree(&self) -> Option<usize> {
        self.terms.values().filter_map(|c| c.min_degree()).min()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut t = self.terms.clone();
        for (k, c) in &other.terms {
            add_into(&mut t, *k, c);
        }
        Ok(Self::from_map(self.config, self.rank, t))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.checked_add(&-other)
    }

    /// Leg-wise product `(A⊗B)(C⊗D) = AC⊗BD`.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.config.dim;
        let order = self.config.order;
        let mut leg_cache: HashMap<(Key, Key), Vec<(Key, GaussianRational)>> = HashMap::new();
        let mut acc: BTreeMap<Legs, DeformationPoly> = BTreeMap::new();
        for (k1, c1) in &self.terms {
            let d1 = c1.min_degree().unwrap_or(0);
            for (k2, c2) in &other.terms {
                if d1 + c2.min_degree().unwrap_or(0) > order {
                    continue;
                }
                let c = c1 * c2;
                if c.is_zero() {
                    continue;
                }
                let mut partial: Vec<(Legs, GaussianRational)> = vec![([UNIT_KEY; 3], GaussianRational::one())];
                for leg in 0..self.rank {
                    let prods = leg_cache
                        .entry((k1[leg], k2[leg]))
                        .or_insert_with(|| monomial_product(n, &k1[leg], &k2[leg]));
                    let mut next = Vec::with_capacity(partial.len() * prods.len());
                    for (key, s) in &partial {
                        for (m, t) in prods.iter() {
                            let mut nk = *key;
                            nk[leg] = *m;
                            next.push((nk, s * t));
                        }
                    }
                    partial = next;
                }
                for (key, s) in partial {
                    add_into(&mut acc, key, &c.scale(&s));
                }
            }
        }
        Ok(Self::from_map(self.config, self.rank, acc))
    }

    pub fn commutator(&self, other: &Self) -> Self {
        &(self * other) - &(other * self)
    }

    /// `τ(A⊗B) = B⊗A`.
    pub fn flip(&self) -> Result<Self> {
        if self.rank != 2 {
            return Err(Error::RankMismatch(2, self.rank));
        }
        Ok(Self::from_map(
            self.config,
            2,
            self.terms.iter().map(|(k, c)| ([k[1], k[0], UNIT_KEY], c.clone())).collect(),
        ))
    }

    /// `m(A⊗B⊗…) = AB⋯`.
    pub fn mult_map(&self) -> PhaseSpaceElement {
        let config = self.config;
        let mut acc = PhaseSpaceElement::zero(config);
        for (k, c) in &self.terms {
            let mut e = PhaseSpaceElement::monomial(config, k[0].0, k[0].1, c.clone());
            for leg in &k[1..self.rank] {
                e = &e * &PhaseSpaceElement::monomial(config, leg.0, leg.1, DeformationPoly::one(config));
            }
            acc = &acc + &e;
        }
        acc
    }

    /// Leg `k` as monomial element with unit coefficient.
    fn leg_element(&self, key: &Key) -> PhaseSpaceElement {
        PhaseSpaceElement::monomial(self.config, key.0, key.1, DeformationPoly::one(self.config))
    }

    /// Applies a linear map to leg `k` (cached per monomial).
    pub fn map_leg(&self, k: usize, f: impl Fn(&PhaseSpaceElement) -> PhaseSpaceElement) -> Self {
        let mut cache: HashMap<Key, PhaseSpaceElement> = HashMap::new();
        let mut acc: BTreeMap<Legs, DeformationPoly> = BTreeMap::new();
        for (key, c) in &self.terms {
            let img = cache.entry(key[k]).or_insert_with(|| f(&self.leg_element(&key[k])));
            for (x, p, d) in img.terms() {
                let mut nk = *key;
                nk[k] = (*x, *p);
                add_into(&mut acc, nk, &(c * d));
            }
        }
        Self::from_map(self.config, self.rank, acc)
    }

    /// Replaces leg `k` of a rank-2 tensor by a rank-2 image, giving rank 3
    /// (e.g. `(Δ⊗1)T` for `k = 0`, `(1⊗Δ)T` for `k = 1`).
    pub fn expand_leg(&self, k: usize, f: impl Fn(&PhaseSpaceElement) -> TensorElement) -> Result<Self> {
        if self.rank != 2 {
            return Err(Error::RankMismatch(2, self.rank));
        }
        let mut cache: HashMap<Key, TensorElement> = HashMap::new();
        let mut acc: BTreeMap<Legs, DeformationPoly> = BTreeMap::new();
        for (key, c) in &self.terms {
            let img = cache.entry(key[k]).or_insert_with(|| f(&self.leg_element(&key[k])));
            let other = key[1 - k];
            for (ik, d) in &img.terms {
                let nk = if k == 0 { [ik[0], ik[1], other] } else { [other, ik[0], ik[1]] };
                add_into(&mut acc, nk, &(c * d));
            }
        }
        Ok(Self::from_map(self.config, 3, acc))
    }

    /// Embeds a rank-2 tensor into rank 3 as `T⊗1` (`at = 0`) or `1⊗T` (`at = 1`).
    pub fn extend_unit(&self, at: usize) -> Result<Self> {
        if self.rank != 2 {
            return Err(Error::RankMismatch(2, self.rank));
        }
        Ok(Self::from_map(
            self.config,
            3,
            self.terms
                .iter()
                .map(|(k, c)| (if at == 0 { [k[0], k[1], UNIT_KEY] } else { [UNIT_KEY, k[0], k[1]] }, c.clone()))
                .collect(),
        ))
    }

    /// `m ∘ (T ▷ (f_1 ⊗ ⋯))`: each leg acts on its slot, then the results are
    /// combined left to right with `product`.
    pub fn act_pair(&self, fs: &[&CommutativePolynomial], product: Product<'_>) -> Result<CommutativePolynomial> {
        if fs.len() != self.rank {
            return Err(Error::RankMismatch(self.rank, fs.len()));
        }
        let config = self.config;
        let mut caches: Vec<HashMap<Key, CommutativePolynomial>> = vec![HashMap::new(); self.rank];
        let mut acc = CommutativePolynomial::zero(config);
        // group terms by all legs but the last to share the leading results
        for (key, c) in &self.terms {
            let mut parts = Vec::with_capacity(self.rank);
            for leg in 0..self.rank {
                let v = caches[leg]
                    .entry(key[leg])
                    .or_insert_with(|| self.leg_element(&key[leg]).act(fs[leg]))
                    .clone();
                parts.push(v);
            }
            if parts.iter().any(|p| p.is_zero()) {
                continue;
            }
            let mut r = parts[0].mul_poly(c);
            for p in &parts[1..] {
                r = match product {
                    Product::Pointwise => r.product(p),
                    Product::Star(star) => star(&r, p),
                };
            }
            acc = &acc + &r;
        }
        Ok(acc)
    }

    /// `m(T(▷⊗1)(f⊗1)) = Σ (t_1 ▷ f)·t_2` for a rank-2 `T`.
    pub fn act_first_leg(&self, f: &CommutativePolynomial) -> Result<PhaseSpaceElement> {
        if self.rank != 2 {
            return Err(Error::RankMismatch(2, self.rank));
        }
        let mut cache: HashMap<Key, PhaseSpaceElement> = HashMap::new();
        let mut acc = PhaseSpaceElement::zero(self.config);
        for (key, c) in &self.terms {
            let v = cache.entry(key[0]).or_insert_with(|| self.leg_element(&key[0]).act(f).to_element());
            if v.is_zero() {
                continue;
            }
            acc = &acc + &(&*v * &self.leg_element(&key[1])).mul_poly(c);
        }
        Ok(acc)
    }

    pub fn flat_terms(&self) -> Vec<FlatTerm> {
        let mut out = Vec::new();
        for (k, c) in &self.terms {
            push_expanded(&mut out, c, k[..self.rank].to_vec());
        }
        sort_terms(&mut out);
        out
    }

    pub fn render(&self, style: Style) -> String {
        render_terms(&self.config, &self.flat_terms(), Alphabet::Canonical, style)
    }

    /// A term whose coefficient has an a-degree-zero part.
    pub fn undeformed_witness(&self) -> Option<String> {
        self.terms.iter().find(|(_, c)| c.min_degree() == Some(0)).map(|(k, c)| {
            let mut m = BTreeMap::new();
            m.insert(*k, c.homogeneous(0));
            TensorElement::from_map(self.config, self.rank, m).to_string()
        })
    }
}

impl SeriesAlgebra for TensorElement {
    fn unit_like(&self) -> Self {
        TensorElement::one(self.config, self.rank)
    }
    fn add_elem(&self, other: &Self) -> Self {
        self + other
    }
    fn mul_elem(&self, other: &Self) -> Self {
        self * other
    }
    fn scale_elem(&self, c: &GaussianRational) -> Self {
        self.scale(c)
    }
    fn is_zero_elem(&self) -> bool {
        self.is_zero()
    }
    fn truncation_order(&self) -> usize {
        self.config.order
    }
    fn undeformed_witness(&self) -> Option<String> {
        TensorElement::undeformed_witness(self)
    }
    fn leading_scalar(&self) -> GaussianRational {
        self.terms.get(&[UNIT_KEY; 3]).map(|c| c.constant_term()).unwrap_or_else(GaussianRational::zero)
    }
    fn mul_poly_elem(&self, c: &DeformationPoly) -> Self {
        self.mul_poly(c)
    }
}

impl crate::report::Residual for TensorElement {
    fn vanishes(&self) -> bool {
        self.is_zero()
    }
    fn describe(&self) -> String {
        self.to_string()
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Style::Text))
    }
}

impl fmt::Debug for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TensorElement[{}]({self})", self.rank)
    }
}

impl<'a> Add<&'a TensorElement> for &'a TensorElement {
    type Output = TensorElement;
    fn add(self, rhs: &'a TensorElement) -> TensorElement {
        self.checked_add(rhs).expect("tensor shape mismatch")
    }
}

impl<'a> Sub<&'a TensorElement> for &'a TensorElement {
    type Output = TensorElement;
    fn sub(self, rhs: &'a TensorElement) -> TensorElement {
        self.checked_sub(rhs).expect("tensor shape mismatch")
    }
}

impl<'a> Mul<&'a TensorElement> for &'a TensorElement {
    type Output = TensorElement;
    fn mul(self, rhs: &'a TensorElement) -> TensorElement {
        self.checked_mul(rhs).expect("tensor shape mismatch")
    }
}

impl Neg for &TensorElement {
    type Output = TensorElement;
    fn neg(self) -> TensorElement {
        self.map_coeffs(|c| -c)
    }
}
