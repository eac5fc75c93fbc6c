use super::*;
use crate::scalars::{DeformationMode, Rational};
use crate::tensor::coproduct0;
use crate::weyl::{a_dot_p, exp, x_dot_p};
use proptest::prelude::*;

fn cfg(n: usize, k: usize, mode: DeformationMode) -> SpaceConfig {
    SpaceConfig::new(n, k, mode).unwrap()
}

#[test]
fn suite_left() {
    let h = HopfAlgebroidStructure::new(Realization::left(cfg(2, 3, DeformationMode::Generic))).unwrap();
    let rep = h.axiom_suite(3).unwrap();
    assert!(rep.passed(), "{rep}");
}

#[test]
fn suite_catalog() {
    let g = cfg(2, 2, DeformationMode::Generic);
    let t = cfg(2, 2, DeformationMode::Time);
    let mut rs = vec![Realization::right(g), Realization::natural(g), Realization::natural(t)];
    for l in [Rational::zero(), Rational::new(1, 2), Rational::one()] {
        rs.push(Realization::lambda(t, l).unwrap());
    }
    rs.push(Realization::natural(cfg(3, 2, DeformationMode::Light)));
    for r in rs {
        let h = HopfAlgebroidStructure::new(r).unwrap();
        let rep = h.axiom_suite(2).unwrap();
        assert!(rep.passed(), "{rep}");
    }
}

fn time(n: usize, k: usize) -> SpaceConfig {
    cfg(n, k, DeformationMode::Time)
}

fn zpow(c: SpaceConfig, e: &Rational) -> PhaseSpaceElement {
    let a = PhaseSpaceElement::p(c, 0).mul_poly(&c.a(0));
    exp(&a.scale(&GaussianRational::real(e.clone()))).unwrap()
}

// Σ_k x_k p_k over the spatial directions
fn spatial_dilatation(c: SpaceConfig) -> PhaseSpaceElement {
    (1..c.dim).fold(PhaseSpaceElement::zero(c), |acc, k| &acc + &(&PhaseSpaceElement::x(c, k) * &PhaseSpaceElement::p(c, k)))
}

#[test]
fn undeformed_antipode_mismatch() {
    let c = time(3, 2);
    let i = GaussianRational::i();
    for j in 1..3 {
        let h = &PhaseSpaceElement::x(c, j) * &PhaseSpaceElement::p(c, j);
        let want = &(-&h) + &PhaseSpaceElement::scalar(c, i.clone());
        assert_eq!(antipode0(&h), want);
    }
    assert_eq!(antipode0(&PhaseSpaceElement::x(c, 1)), PhaseSpaceElement::x(c, 1));
    assert_eq!(antipode0(&PhaseSpaceElement::p(c, 1)), -&PhaseSpaceElement::p(c, 1));
}

#[test]
fn lambda_antipodes() {
    let n = 3;
    let c = time(n, 3);
    let i = GaussianRational::i();
    let d = spatial_dilatation(c);
    let a0 = PhaseSpaceElement::one(c).mul_poly(&c.a(0));
    let big_a = PhaseSpaceElement::p(c, 0).mul_poly(&c.a(0));
    for l in [Rational::zero(), Rational::new(1, 2), Rational::one()] {
        let h = HopfAlgebroidStructure::new(Realization::lambda(c, l.clone()).unwrap()).unwrap();
        let two_l = &l + &l;
        let one_m = &Rational::one() - &two_l;
        let g = |q: &Rational| GaussianRational::real(q.clone());
        // χ = exp(i(1−2λ)A x_kp_k + λ(1−n)A)
        let gen = &(&big_a * &d).scale(&(&g(&one_m) * &i)) + &big_a.scale(&g(&(&l * &Rational::from_int(1 - n as i64))));
        assert_eq!(h.chi(), &exp(&gen).unwrap(), "lambda={l}");
        let s = |e: &PhaseSpaceElement| h.antipode(e, AntipodeVariant::S);
        let shift = a0.scale(&(&i * &GaussianRational::from_int(1 - n as i64)));
        for j in 1..n {
            let (x, p) = (PhaseSpaceElement::x(c, j), PhaseSpaceElement::p(c, j));
            assert_eq!(s(&p), -&(&p * &zpow(c, &(&two_l - &Rational::one()))), "lambda={l}");
            assert_eq!(s(&x), &x * &zpow(c, &one_m), "lambda={l}");
            let xh = &h.realization().xhat()[j];
            assert_eq!(s(xh), xh * h.realization().z(), "lambda={l}");
        }
        let (x0, p0) = (PhaseSpaceElement::x(c, 0), PhaseSpaceElement::p(c, 0));
        assert_eq!(s(&p0), -&p0);
        let want = &(&x0 - &(&a0 * &d).scale(&g(&one_m))) + &shift.scale(&g(&l));
        assert_eq!(s(&x0), want, "lambda={l}");
        let xh0 = &h.realization().xhat()[0];
        assert_eq!(s(xh0), &(xh0 + &(&a0 * &d)) + &shift, "lambda={l}");
    }
}

#[test]
fn source_target_and_counit_examples() {
    let c = cfg(2, 3, DeformationMode::Generic);
    let h = HopfAlgebroidStructure::new(Realization::left(c)).unwrap();
    let r = h.realization();
    let (x0, x1) = (CommutativePolynomial::x(c, 0), CommutativePolynomial::x(c, 1));
    assert_eq!(h.source(&CommutativePolynomial::one(c)).unwrap(), PhaseSpaceElement::one(c));
    assert_eq!(h.source(&x1).unwrap(), r.xhat()[1]);
    assert_eq!(h.target(&x1).unwrap(), r.yhat()[1]);
    // x_0x_1 ↦ x̂_0x̂_1 + ia_1x̂_0 for the left covariant ordering
    let want = &(&r.xhat()[0] * &r.xhat()[1]) + &r.xhat()[0].mul_poly(&c.a(1)).scale(&GaussianRational::i());
    assert_eq!(h.source(&x0.product(&x1)).unwrap(), want);
    for mu in 0..2 {
        let p = PhaseSpaceElement::p(c, mu);
        assert!(h.counit(&p).is_zero());
        assert_eq!(h.counit(&r.xhat()[mu]), CommutativePolynomial::x(c, mu));
        assert!(h.counit(&(&r.xhat()[mu] * &PhaseSpaceElement::p(c, 1 - mu))).is_zero());
    }
}

#[test]
fn left_momenta_coproduct_and_antipode() {
    for r in [Realization::left(cfg(2, 3, DeformationMode::Generic)), Realization::natural(cfg(2, 3, DeformationMode::Space))] {
        let c = r.config();
        let h = HopfAlgebroidStructure::new(r).unwrap();
        let r = h.realization();
        let star = |f: &CommutativePolynomial, g: &CommutativePolynomial| r.star(f, g);
        for mu in 0..2 {
            let pl = &r.p_l()[mu];
            let want = &TensorElement::tensor2(pl, r.z_inv()) + &TensorElement::tensor2(&PhaseSpaceElement::one(c), pl);
            let got = h.coproduct(pl);
            assert!(congruent_mod_ideal(&got, &want, 2, Product::Star(&star)).unwrap().holds, "{}", r.name());
            assert_eq!(h.antipode(pl, AntipodeVariant::S), -&(pl * r.z()), "{}", r.name());
        }
    }
}

#[test]
fn coproduct_is_undeformed_in_the_limit() {
    let c = cfg(2, 3, DeformationMode::Generic);
    let h = HopfAlgebroidStructure::new(Realization::right(c)).unwrap();
    for e in [h.realization().xhat()[0].clone(), h.realization().p_l()[1].clone(), h.realization().z().clone()] {
        assert_eq!(h.coproduct(&e).undeformed(), coproduct0(&e.undeformed()));
    }
}

#[test]
fn conjugator_closed_forms() {
    let i = GaussianRational::i();
    // (χ^L)^{-1} = exp(i(p·x)A) and (χ^R)^{-1} = exp(−iA(x·p)), A = −(ap)
    let c = cfg(2, 3, DeformationMode::Generic);
    let big_a = -&a_dot_p(c);
    let px = (0..2).fold(PhaseSpaceElement::zero(c), |acc, mu| {
        let xu = PhaseSpaceElement::x(c, mu).scale(&GaussianRational::from_int(c.metric(mu)));
        &acc + &(&PhaseSpaceElement::p(c, mu) * &xu)
    });
    let left = HopfAlgebroidStructure::new(Realization::left(c)).unwrap();
    assert_eq!(left.chi_inverse(), &exp(&(&px * &big_a).scale(&i)).unwrap());
    let right = HopfAlgebroidStructure::new(Realization::right(c)).unwrap();
    assert_eq!(right.chi_inverse(), &exp(&(&big_a * &x_dot_p(c)).scale(&-&i)).unwrap());
}

#[test]
fn inverse_antipode_is_a_shift_conjugate() {
    // S₀(χ) = Z^{n−1}χ, so S^{−1}(h) = Z^{n−1}S(h)Z^{1−n}
    for r in [Realization::left(cfg(2, 3, DeformationMode::Generic)), Realization::lambda(time(3, 2), Rational::new(1, 2)).unwrap()] {
        let n = r.config().dim as u32;
        let h = HopfAlgebroidStructure::new(r).unwrap();
        let r = h.realization();
        assert_eq!(antipode0(h.chi()), &r.z().pow(n - 1) * h.chi(), "{}", r.name());
        for e in [r.xhat()[1].clone(), PhaseSpaceElement::p(r.config(), 0), r.yhat()[0].clone()] {
            let want = &(&r.z().pow(n - 1) * &h.antipode(&e, AntipodeVariant::S)) * &r.z_inv().pow(n - 1);
            assert_eq!(h.antipode(&e, AntipodeVariant::SInverse), want, "{}", r.name());
        }
    }
}

#[test]
fn variant_names() {
    for v in [AntipodeVariant::S0, AntipodeVariant::S, AntipodeVariant::SInverse] {
        assert_eq!(v.to_string().parse::<AntipodeVariant>().unwrap(), v);
    }
    assert!("T".parse::<AntipodeVariant>().is_err());
}

fn arb_monomial(n: usize, d: usize) -> impl Strategy<Value = (MultiIndex, MultiIndex)> {
    let idx = move || prop::collection::vec(0u8..=d as u8, n);
    (idx(), idx())
        .prop_filter("degree bound", move |(x, p)| x.iter().chain(p).map(|&e| e as usize).sum::<usize>() <= d)
        .prop_map(|(x, p)| (MultiIndex::from_slice(&x), MultiIndex::from_slice(&p)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn antipode_round_trip((x, p) in arb_monomial(2, 3), which in 0usize..3) {
        let c = cfg(2, 3, DeformationMode::Generic);
        let r = [Realization::left(c), Realization::right(c), Realization::natural(c)][which].clone();
        let h = HopfAlgebroidStructure::new(r).unwrap();
        let e = PhaseSpaceElement::monomial(c, x, p, crate::scalars::DeformationPoly::one(c));
        let s = h.antipode(&e, AntipodeVariant::S);
        prop_assert_eq!(h.antipode(&s, AntipodeVariant::SInverse), e.clone());
        prop_assert_eq!(antipode0(&antipode0(&e)), e);
    }

    #[test]
    fn antipode_is_antihomomorphic((x, p) in arb_monomial(2, 2), (y, q) in arb_monomial(2, 2)) {
        let c = cfg(2, 3, DeformationMode::Generic);
        let h = HopfAlgebroidStructure::new(Realization::left(c)).unwrap();
        let one = crate::scalars::DeformationPoly::one(c);
        let e = PhaseSpaceElement::monomial(c, x, p, one.clone());
        let f = PhaseSpaceElement::monomial(c, y, q, one);
        let s = |g: &PhaseSpaceElement| h.antipode(g, AntipodeVariant::S);
        prop_assert_eq!(s(&(&e * &f)), &s(&f) * &s(&e));
    }
}
