use std::cmp::Ordering;
use std::fmt;
use std::ops::Add;

/// Largest supported spacetime dimension.
pub const MAX_DIM: usize = 8;

/// Exponent vector for monomials in x, p or the deformation symbols.
///
/// Only the first `n` slots are meaningful; the rest stay zero. Ordering is
/// graded-lexicographic: total degree first, then lexicographic with a larger
/// leading exponent ranking higher.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct MultiIndex([u8; MAX_DIM]);

impl MultiIndex {
    pub const ZERO: MultiIndex = MultiIndex([0; MAX_DIM]);

    pub fn zero() -> Self {
        Self::ZERO
    }

    /// The unit vector in slot `k`.
    pub fn unit(k: usize) -> Self {
        let mut m = Self::ZERO;
        m.0[k] = 1;
        m
    }

    pub fn from_slice(exps: &[u8]) -> Self {
        assert!(exps.len() <= MAX_DIM, "too many exponents");
        let mut m = Self::ZERO;
        m.0[..exps.len()].copy_from_slice(exps);
        m
    }

    pub fn get(&self, k: usize) -> u8 {
        self.0[k]
    }

    pub fn set(&mut self, k: usize, e: u8) {
        self.0[k] = e;
    }

    pub fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn exponents(&self, n: usize) -> &[u8] {
        &self.0[..n]
    }

    /// `self − other` if componentwise non-negative.
    pub fn checked_sub(&self, other: &Self) -> Option<Self> {
        let mut out = Self::ZERO;
        for k in 0..MAX_DIM {
            out.0[k] = self.0[k].checked_sub(other.0[k])?;
        }
        Some(out)
    }

    /// Highest slot with a nonzero exponent.
    pub fn support_len(&self) -> usize {
        self.0.iter().rposition(|&e| e != 0).map_or(0, |k| k + 1)
    }

    /// All componentwise divisors `m ≤ self`.
    pub fn divisors(&self) -> Vec<MultiIndex> {
        let mut out = vec![Self::ZERO];
        for k in 0..self.support_len() {
            let mut next = Vec::with_capacity(out.len() * (self.0[k] as usize + 1));
            for m in &out {
                for e in 0..=self.0[k] {
                    let mut d = *m;
                    d.0[k] = e;
                    next.push(d);
                }
            }
            out = next;
        }
        out
    }

    /// Every multi-index on `n` slots with total degree exactly `d`, in
    /// descending graded-lex order.
    pub fn all_of_degree(n: usize, d: usize) -> Vec<MultiIndex> {
        fn rec(n: usize, slot: usize, left: usize, cur: &mut MultiIndex, out: &mut Vec<MultiIndex>) {
            if slot + 1 == n {
                cur.0[slot] = left as u8;
                out.push(*cur);
                cur.0[slot] = 0;
                return;
            }
            for e in (0..=left).rev() {
                cur.0[slot] = e as u8;
                rec(n, slot + 1, left - e, cur, out);
            }
            cur.0[slot] = 0;
        }
        let mut out = Vec::new();
        if n == 0 {
            if d == 0 {
                out.push(Self::ZERO);
            }
            return out;
        }
        rec(n, 0, d, &mut Self::ZERO.clone(), &mut out);
        out
    }

    /// Every multi-index on `n` slots with total degree ≤ `d`, ascending degree.
    pub fn all_up_to_degree(n: usize, d: usize) -> Vec<MultiIndex> {
        (0..=d).flat_map(|k| Self::all_of_degree(n, k)).collect()
    }

    /// `Π_k binom(self_k, m_k)`.
    pub fn binomial(&self, m: &Self) -> u64 {
        let mut acc = 1u64;
        for k in 0..MAX_DIM {
            acc *= binom(self.0[k] as u64, m.0[k] as u64);
        }
        acc
    }

    /// `Π_k m_k!`.
    pub fn factorial(&self) -> u64 {
        self.0.iter().map(|&e| (1..=e as u64).product::<u64>()).product()
    }
}

fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let mut acc = 1u64;
    for j in 0..k {
        acc = acc * (n - j) / (j + 1);
    }
    acc
}

impl Add for MultiIndex {
    type Output = MultiIndex;
    fn add(self, rhs: MultiIndex) -> MultiIndex {
        let mut out = self;
        for k in 0..MAX_DIM {
            out.0[k] = self.0[k].checked_add(rhs.0[k]).expect("exponent overflow");
        }
        out
    }
}

impl Ord for MultiIndex {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for MultiIndex {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let len = self.support_len().max(1);
        write!(f, "{:?}", &self.0[..len])
    }
}
