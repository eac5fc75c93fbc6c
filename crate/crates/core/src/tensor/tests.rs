use super::*;
use crate::realization::Realization;
use crate::scalars::{DeformationMode, Rational, SpaceConfig};
use crate::weyl::{CommutativePolynomial, PhaseSpaceElement};
use proptest::prelude::*;

fn cfg(n: usize, k: usize, mode: DeformationMode) -> SpaceConfig {
    SpaceConfig::new(n, k, mode).unwrap()
}

fn catalog(n: usize, k: usize) -> Vec<Realization> {
    let g = cfg(n, k, DeformationMode::Generic);
    let t = cfg(n, k, DeformationMode::Time);
    vec![
        Realization::left(g),
        Realization::right(g),
        Realization::natural(g),
        Realization::lambda(t, Rational::zero()).unwrap(),
        Realization::lambda(t, Rational::new(1, 2)).unwrap(),
        Realization::lambda(t, Rational::one()).unwrap(),
    ]
}

#[test]
fn leg_arithmetic() {
    let c = cfg(2, 2, DeformationMode::Generic);
    let (x0, p0, one) = (PhaseSpaceElement::x(c, 0), PhaseSpaceElement::p(c, 0), PhaseSpaceElement::one(c));
    let t = TensorElement::tensor2(&x0, &p0);
    assert_eq!(t.flip().unwrap().to_string(), "p_0 ox x_0");
    assert_eq!(TensorElement::tensor2(&p0, &x0).mult_map().to_string(), "x_0*p_0 + i");
    let prod = &TensorElement::tensor2(&x0, &one) * &TensorElement::tensor2(&one, &x0);
    assert_eq!(prod, TensorElement::tensor2(&x0, &x0));
    // (p0 ox 1)(x0 ox 1) = p0 x0 ox 1
    let lhs = &TensorElement::tensor2(&p0, &one) * &TensorElement::tensor2(&x0, &one);
    assert_eq!(lhs, TensorElement::tensor2(&(&p0 * &x0), &one));
    assert!(TensorElement::tensor3(&x0, &p0, &one).flip().is_err());
    assert!(t.checked_add(&TensorElement::zero(c, 3)).is_err());
}

#[test]
fn coproduct0_examples() {
    let c = cfg(2, 2, DeformationMode::Generic);
    let (x0, p0) = (PhaseSpaceElement::x(c, 0), PhaseSpaceElement::p(c, 0));
    assert_eq!(coproduct0(&p0).to_string(), "p_0 ox 1 + 1 ox p_0");
    assert_eq!(coproduct0(&x0).to_string(), "x_0 ox 1");
    assert_eq!(coproduct0(&(&x0 * &p0)).to_string(), "x_0*p_0 ox 1 + x_0 ox p_0");
    // Leibniz of Δ₀ on (x_0, x_0): i x_0 + x_0 i
    let f = CommutativePolynomial::x(c, 0);
    let r = coproduct0(&p0).act_pair(&[&f, &f], Product::Pointwise).unwrap();
    assert_eq!(r.to_string(), "2*i*x_0");
}

#[test]
fn coproduct0_coassociative() {
    let c = cfg(2, 2, DeformationMode::Generic);
    let h = &(&PhaseSpaceElement::x(c, 1) * &PhaseSpaceElement::p(c, 0).pow(2)) + &PhaseSpaceElement::p(c, 1);
    let d = coproduct0(&h);
    assert_eq!(coproduct0_left(&d).unwrap(), coproduct0_right(&d).unwrap());
}

#[test]
fn undeformed_ideal() {
    let c = cfg(2, 2, DeformationMode::Generic);
    let id = IdealGenerators::undeformed(c);
    assert_eq!(id.get(0).unwrap().to_string(), "x_0 ox 1 - 1 ox x_0");
    let rep = id.report(None, 3).unwrap();
    assert!(rep.passed(), "{rep}");
    let (x0, one) = (PhaseSpaceElement::x(c, 0), PhaseSpaceElement::one(c));
    let res = congruent_mod_ideal(&TensorElement::tensor2(&x0, &one), &TensorElement::tensor2(&one, &x0), 3, Product::Pointwise)
        .unwrap();
    assert!(res.holds && res.degree == 3);
    let res = congruent_mod_ideal(&TensorElement::tensor2(&x0, &one), &TensorElement::zero(c, 2), 2, Product::Pointwise)
        .unwrap();
    assert!(!res.holds);
    assert_eq!(res.witness_string(&c).unwrap(), "(1, 1) -> x_0");
}

#[test]
fn deformed_ideal_relations() {
    for (n, k) in [(2, 3), (3, 2)] {
        for r in catalog(n, k) {
            let rep = IdealGenerators::deformed(&r).report(Some(&r), 2).unwrap();
            assert!(rep.passed(), "{rep}");
        }
    }
}

#[test]
fn light_and_space_modes_ideal() {
    for mode in [DeformationMode::Light, DeformationMode::Space] {
        let c = cfg(3, 3, mode);
        for r in [Realization::left(c), Realization::right(c), Realization::natural(c)] {
            let rep = IdealGenerators::deformed(&r).report(Some(&r), 2).unwrap();
            assert!(rep.passed(), "{rep}");
        }
    }
}

#[test]
fn pointwise_product_does_not_kill_deformed_ideal() {
    let c = cfg(2, 2, DeformationMode::Generic);
    let r = Realization::left(c);
    let id = IdealGenerators::deformed(&r);
    let zero = TensorElement::zero(c, 2);
    let res = congruent_mod_ideal(&id.generators()[0], &zero, 2, Product::Pointwise).unwrap();
    assert!(!res.holds);
}

#[test]
fn lu_coproduct_restriction() {
    // x̂_μ⊗1 ≡ O_{μα}⊗x̂^α and ŷ_μ⊗1 ≡ 1⊗x̂_μ
    let c = cfg(2, 3, DeformationMode::Generic);
    for r in [Realization::left(c), Realization::natural(c)] {
        let one = PhaseSpaceElement::one(c);
        let o = r.o_operator();
        let star = |f: &CommutativePolynomial, g: &CommutativePolynomial| r.star(f, g);
        for mu in 0..2 {
            let lhs = TensorElement::tensor2(&r.xhat()[mu], &one);
            let mut rhs = TensorElement::zero(c, 2);
            for al in 0..2 {
                rhs = &rhs + &TensorElement::tensor2(&o.entries[mu][al], &r.xhat_up(al));
            }
            assert!(congruent_mod_ideal(&lhs, &rhs, 3, Product::Star(&star)).unwrap().holds);
            let y1 = TensorElement::tensor2(&r.yhat()[mu], &one);
            let x2 = TensorElement::tensor2(&one, &r.xhat()[mu]);
            assert!(congruent_mod_ideal(&y1, &x2, 3, Product::Star(&star)).unwrap().holds);
        }
    }
}

#[test]
fn delta_p_left_leibniz() {
    // p^L acts on f ⋆ g through Δp^L = p^L⊗Z^{-1} + 1⊗p^L
    let c = cfg(2, 3, DeformationMode::Generic);
    let r = Realization::natural(c);
    let star = |f: &CommutativePolynomial, g: &CommutativePolynomial| r.star(f, g);
    let mons = CommutativePolynomial::monomials_up_to(c, 2);
    for mu in 0..2 {
        let d = delta_p_left(&r, mu);
        for f in &mons {
            for g in &mons {
                let lhs = r.p_l()[mu].act(&r.star(f, g));
                let rhs = d.act_pair(&[f, g], Product::Star(&star)).unwrap();
                assert_eq!(lhs, rhs, "mu={mu} f={f} g={g}");
            }
        }
    }
}

fn arb_element(c: SpaceConfig) -> impl Strategy<Value = PhaseSpaceElement> {
    let n = c.dim;
    proptest::collection::vec((proptest::collection::vec(0u8..2, 2 * n), -3i64..4), 1..4).prop_map(move |ts| {
        let mut e = PhaseSpaceElement::zero(c);
        for (exps, k) in ts {
            let x = crate::scalars::MultiIndex::from_slice(&exps[..n]);
            let p = crate::scalars::MultiIndex::from_slice(&exps[n..]);
            let coeff = crate::scalars::DeformationPoly::constant(c, crate::scalars::GaussianRational::from_int(k));
            e = &e + &PhaseSpaceElement::monomial(c, x, p, coeff);
        }
        e
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn coproduct0_is_homomorphism(
        a in arb_element(cfg(2, 1, DeformationMode::Generic)),
        b in arb_element(cfg(2, 1, DeformationMode::Generic)),
    ) {
        prop_assert_eq!(coproduct0(&(&a * &b)), &coproduct0(&a) * &coproduct0(&b));
    }

    #[test]
    fn leg_product_associative(
        a in arb_element(cfg(2, 1, DeformationMode::Generic)),
        b in arb_element(cfg(2, 1, DeformationMode::Generic)),
        e in arb_element(cfg(2, 1, DeformationMode::Generic)),
    ) {
        let t = TensorElement::tensor2(&a, &b);
        let u = TensorElement::tensor2(&b, &e);
        let v = TensorElement::tensor2(&e, &a);
        prop_assert_eq!(&(&t * &u) * &v, &t * &(&u * &v));
    }

    #[test]
    fn congruence_is_monotone_in_degree(
        a in arb_element(cfg(2, 1, DeformationMode::Generic)),
        b in arb_element(cfg(2, 1, DeformationMode::Generic)),
    ) {
        let t = TensorElement::tensor2(&a, &b);
        let u = t.flip().unwrap();
        let hi = congruent_mod_ideal(&t, &u, 2, Product::Pointwise).unwrap();
        let lo = congruent_mod_ideal(&t, &u, 1, Product::Pointwise).unwrap();
        prop_assert!(!hi.holds || lo.holds);
        let sym = congruent_mod_ideal(&u, &t, 2, Product::Pointwise).unwrap();
        prop_assert_eq!(hi.holds, sym.holds);
        prop_assert!(congruent_mod_ideal(&t, &t, 2, Product::Pointwise).unwrap().holds);
    }
}

#[test]
fn lie_coproduct() {
    let c = cfg(2, 2, DeformationMode::Generic);
    let one = PhaseSpaceElement::one(c);
    let l = &PhaseSpaceElement::x(c, 0) * &PhaseSpaceElement::p(c, 1);
    assert_eq!(coproduct_lie(&l).unwrap(), &TensorElement::tensor2(&l, &one) + &TensorElement::tensor2(&one, &l));
    let p = &PhaseSpaceElement::p(c, 0) * &PhaseSpaceElement::p(c, 1);
    assert_eq!(coproduct_lie(&p).unwrap(), coproduct0(&p));
    assert!(coproduct_lie(&PhaseSpaceElement::x(c, 0)).is_err());
    // D² for D = x_0p_0: the Weyl product agrees with Δ(D)Δ(D)
    let d2 = &l * &l;
    let dl = coproduct_lie(&l).unwrap();
    assert_eq!(coproduct_lie(&d2).unwrap(), &dl * &dl);
    let h = &(&PhaseSpaceElement::x(c, 1).pow(2) * &PhaseSpaceElement::p(c, 0).pow(2)) + &(&l * &PhaseSpaceElement::p(c, 0));
    let res = congruent_mod_ideal(&coproduct_lie(&h).unwrap(), &coproduct0(&h), 3, Product::Pointwise).unwrap();
    assert!(res.holds);
}
