//! Truncated power series of a-graded elements.
//!
//! Every argument handed to a series must have all of its terms at a-degree
//! at least one, which makes the `K+1`-st power vanish and the series finite.

use super::element::PhaseSpaceElement;
use crate::error::{Error, Result};
use crate::scalars::{binomial, inverse_factorial, DeformationPoly, GaussianRational, MultiIndex, Rational};

/// The ring operations needed to evaluate a series in an element.
pub trait SeriesAlgebra: Clone {
    fn unit_like(&self) -> Self;
    fn add_elem(&self, other: &Self) -> Self;
    fn mul_elem(&self, other: &Self) -> Self;
    fn scale_elem(&self, c: &GaussianRational) -> Self;
    fn is_zero_elem(&self) -> bool;
    fn truncation_order(&self) -> usize;
    /// A term with a-degree zero, if any.
    fn undeformed_witness(&self) -> Option<String>;
    /// Leading scalar: a-degree-zero coefficient of the identity.
    fn leading_scalar(&self) -> GaussianRational;
    fn mul_poly_elem(&self, c: &DeformationPoly) -> Self;
}

impl SeriesAlgebra for PhaseSpaceElement {
    fn unit_like(&self) -> Self {
        PhaseSpaceElement::one(self.config())
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
        self.config().order
    }
    fn undeformed_witness(&self) -> Option<String> {
        PhaseSpaceElement::undeformed_witness(self)
    }
    fn leading_scalar(&self) -> GaussianRational {
        self.coeff(&MultiIndex::ZERO, &MultiIndex::ZERO).constant_term()
    }
    fn mul_poly_elem(&self, c: &DeformationPoly) -> Self {
        self.mul_poly(c)
    }
}

fn require_nilpotent<T: SeriesAlgebra>(t: &T) -> Result<()> {
    match t.undeformed_witness() {
        Some(w) => Err(Error::NotNilpotent(w)),
        None => Ok(()),
    }
}

/// `Σ_k c_k t^k` for `k = 0..=K`.
pub fn power_series<T: SeriesAlgebra>(t: &T, coeff: impl Fn(u32) -> GaussianRational) -> Result<T> {
    require_nilpotent(t)?;
    Ok(power_series_unchecked(t, coeff))
}

pub(crate) fn power_series_unchecked<T: SeriesAlgebra>(t: &T, coeff: impl Fn(u32) -> GaussianRational) -> T {
    let mut acc = t.unit_like().scale_elem(&coeff(0));
    let mut pw = t.unit_like();
    for k in 1..=t.truncation_order() as u32 {
        pw = pw.mul_elem(t);
        if pw.is_zero_elem() {
            break;
        }
        let c = coeff(k);
        if !c.is_zero() {
            acc = acc.add_elem(&pw.scale_elem(&c));
        }
    }
    acc
}

pub fn exp<T: SeriesAlgebra>(t: &T) -> Result<T> {
    power_series(t, |k| GaussianRational::real(inverse_factorial(k)))
}

/// `ln(1 + t)`.
pub fn log1p<T: SeriesAlgebra>(t: &T) -> Result<T> {
    power_series(t, |k| {
        if k == 0 {
            GaussianRational::zero()
        } else {
            let s = if k % 2 == 1 { 1 } else { -1 };
            GaussianRational::ratio(s, k as i64)
        }
    })
}

/// `√(1 + t)`.
pub fn sqrt1p<T: SeriesAlgebra>(t: &T) -> Result<T> {
    let half = Rational::new(1, 2);
    power_series(t, |k| GaussianRational::real(binomial(&half, k)))
}

/// `(1 + t)^r` for rational `r`.
pub fn pow1p<T: SeriesAlgebra>(t: &T, r: &Rational) -> Result<T> {
    power_series(t, |k| GaussianRational::real(binomial(r, k)))
}

/// Inverse of `c + N` with `c` a nonzero scalar and `N` of a-degree ≥ 1.
pub fn inverse<T: SeriesAlgebra>(a: &T) -> Result<T> {
    let c = a.leading_scalar();
    if c.is_zero() {
        return Err(Error::NotInvertible("leading scalar vanishes".into()));
    }
    let nil = a.add_elem(&a.unit_like().scale_elem(&-&c));
    if let Some(w) = nil.undeformed_witness() {
        return Err(Error::NotInvertible(format!("undeformed non-scalar term {w}")));
    }
    let cinv = c.recip()?;
    // (c + N)^{-1} = c^{-1} Σ (−N/c)^k
    let t = nil.scale_elem(&-&cinv);
    Ok(power_series_unchecked(&t, |_| GaussianRational::one()).scale_elem(&cinv))
}

/// `ln(g)` for `g = 1 + N`.
/// `f(Y_0, …, Y_{n−1})` for a momentum-only `f` and pairwise commuting `Y_μ`.
pub fn substitute_momenta<T: SeriesAlgebra>(f: &PhaseSpaceElement, ys: &[T]) -> Result<T> {
    if !f.is_p_only() {
        return Err(Error::InvalidConfig(format!("substitution needs a momentum-only element, got {f}")));
    }
    let unit = ys[0].unit_like();
    let mut powers: Vec<Vec<T>> = ys.iter().map(|y| vec![unit.clone(), y.clone()]).collect();
    let mut acc = unit.scale_elem(&GaussianRational::zero());
    for (_, p, c) in f.terms() {
        let mut t = unit.mul_poly_elem(c);
        for (mu, pw) in powers.iter_mut().enumerate() {
            let e = p.get(mu) as usize;
            while pw.len() <= e {
                let next = pw[pw.len() - 1].mul_elem(&ys[mu]);
                pw.push(next);
            }
            if e > 0 {
                t = t.mul_elem(&pw[e]);
            }
        }
        acc = acc.add_elem(&t);
    }
    Ok(acc)
}

pub fn log<T: SeriesAlgebra>(g: &T) -> Result<T> {
    let nil = g.add_elem(&g.unit_like().scale_elem(&GaussianRational::from_int(-1)));
    log1p(&nil)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{DeformationMode, SpaceConfig};
    use crate::weyl::a_dot_p;

    fn cfg(order: usize) -> SpaceConfig {
        SpaceConfig::new(2, order, DeformationMode::Generic).unwrap()
    }

    #[test]
    fn geometric_series() {
        let c = cfg(2);
        let ap = a_dot_p(c);
        let one = PhaseSpaceElement::one(c);
        let inv = inverse(&(&one + &ap)).unwrap();
        assert_eq!(inv, &(&one - &ap) + &(&ap * &ap));
        assert_eq!(&inv * &(&one + &ap), one);
    }

    #[test]
    fn log_of_shift() {
        // oracle: composing the geometric and log series by hand
        let c = cfg(2);
        let ap = a_dot_p(c);
        let one = PhaseSpaceElement::one(c);
        let z = inverse(&(&one + &ap)).unwrap();
        let l = log1p(&(&z - &one)).unwrap();
        let expect = &(-&ap) + &(&ap * &ap).scale(&GaussianRational::ratio(1, 2));
        assert_eq!(l, expect);
    }

    #[test]
    fn exp_zero_and_round_trips() {
        let c = cfg(3);
        let zero = PhaseSpaceElement::zero(c);
        assert!(exp(&zero).unwrap().is_one());
        let t = &a_dot_p(c) + &(&PhaseSpaceElement::x(c, 0) * &PhaseSpaceElement::a(c, 1));
        let one = PhaseSpaceElement::one(c);
        assert_eq!(exp(&log1p(&t).unwrap()).unwrap(), &one + &t);
        let s = sqrt1p(&t).unwrap();
        assert_eq!(&s * &s, &one + &t);
        let u = &one + &t;
        assert_eq!(inverse(&inverse(&u).unwrap()).unwrap(), u);
    }

    #[test]
    fn rejects_undeformed_arguments() {
        let c = cfg(2);
        let p0 = PhaseSpaceElement::p(c, 0);
        assert!(matches!(exp(&p0), Err(Error::NotNilpotent(_))));
        assert!(inverse(&p0).is_err());
    }
}
