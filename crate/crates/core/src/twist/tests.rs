use super::*;
use crate::scalars::DeformationMode;

fn cfg(n: usize, k: usize, mode: DeformationMode) -> SpaceConfig {
    SpaceConfig::new(n, k, mode).unwrap()
}

fn lambdas() -> Vec<Rational> {
    vec![Rational::zero(), Rational::new(1, 2), Rational::one()]
}

fn pairs(n: usize, k: usize) -> Vec<(Twist, Realization)> {
    let g = cfg(n, k, DeformationMode::Generic);
    let t = cfg(n, k, DeformationMode::Time);
    let mut out = vec![
        (Twist::builtin(&TwistKind::JordanianLeft, g).unwrap(), Realization::left(g)),
        (Twist::builtin(&TwistKind::JordanianRight, g).unwrap(), Realization::right(g)),
    ];
    for l in lambdas() {
        out.push((
            Twist::builtin(&TwistKind::Lambda(l.clone()), t).unwrap(),
            Realization::lambda(t, l).unwrap(),
        ));
    }
    let lc = cfg(n, k, DeformationMode::Light);
    out.push((Twist::builtin(&TwistKind::Lightlike, lc).unwrap(), Realization::natural(lc)));
    out
}

#[test]
fn names_round_trip() {
    for s in ["lambda:1/2", "jordanian-left", "jordanian-right", "lightlike", "normal:natural"] {
        assert_eq!(s.parse::<TwistKind>().unwrap().label(), s);
    }
    assert!("bogus".parse::<TwistKind>().is_err());
    let c = cfg(2, 2, DeformationMode::Space);
    assert!(matches!(Twist::by_name("lambda:0", c), Err(Error::Unsupported { .. })));
    assert!(matches!(Twist::by_name("lightlike", c), Err(Error::Unsupported { .. })));
}

#[test]
fn builtin_twists_reproduce_catalog() {
    for (t, r) in pairs(2, 3) {
        let rep = star_routes_check(&t, &r, 3).unwrap();
        assert!(rep.passed(), "{rep}");
    }
}

#[test]
fn builtin_twists_three_dimensions() {
    for (t, r) in pairs(3, 2) {
        let rep = star_routes_check(&t, &r, 2).unwrap();
        assert!(rep.passed(), "{rep}");
    }
}

#[test]
fn left_covariant_example() {
    // x_0 ⋆ x_1 = x̂_0 ▷ x_1 = x_0x_1 − ia_1x_0 by hand
    let c = cfg(2, 2, DeformationMode::Generic);
    let t = Twist::builtin(&TwistKind::JordanianLeft, c).unwrap();
    let (x0, x1) = (CommutativePolynomial::x(c, 0), CommutativePolynomial::x(c, 1));
    let got = t.star(&x0, &x1);
    let a1 = DeformationPoly::symbol(c, 1);
    let want = &x0.product(&x1) - &x0.mul_poly(&a1).scale(&GaussianRational::i());
    assert_eq!(got, want);
    let comm = &got - &t.star(&x1, &x0);
    let a0 = DeformationPoly::symbol(c, 0);
    let rhs = (&x1.mul_poly(&a0) - &x0.mul_poly(&a1)).scale(&GaussianRational::i());
    assert_eq!(comm, rhs);
    let one = CommutativePolynomial::one(c);
    assert_eq!(t.star(&one, &x1), x1);
}

#[test]
fn abelian_detection() {
    let t = cfg(2, 2, DeformationMode::Time);
    assert!(Twist::builtin(&TwistKind::Lambda(Rational::new(1, 2)), t).unwrap().is_abelian());
    let g = cfg(2, 2, DeformationMode::Generic);
    assert!(!Twist::builtin(&TwistKind::JordanianLeft, g).unwrap().is_abelian());
}

fn z_pow(c: SpaceConfig, e: &Rational) -> PhaseSpaceElement {
    // Z = exp(a_0 p_0)
    let a = PhaseSpaceElement::p(c, 0).mul_poly(&c.a(0));
    exp(&a.scale(&GaussianRational::real(e.clone()))).unwrap()
}

#[test]
fn lambda_coproducts_exact() {
    let c = cfg(3, 3, DeformationMode::Time);
    let one = PhaseSpaceElement::one(c);
    for l in lambdas() {
        let t = Twist::builtin(&TwistKind::Lambda(l.clone()), c).unwrap();
        let ml = -&l;
        let oml = &Rational::one() - &l;
        let d = spatial_dilatation(c);
        for j in 1..3 {
            let (x, p) = (PhaseSpaceElement::x(c, j), PhaseSpaceElement::p(c, j));
            assert_eq!(t.coproduct(&x), TensorElement::tensor2(&x, &z_pow(c, &l)), "lambda={l}");
            let want = &TensorElement::tensor2(&p, &z_pow(c, &ml)) + &TensorElement::tensor2(&z_pow(c, &oml), &p);
            assert_eq!(t.coproduct(&p), want, "lambda={l}");
        }
        let p0 = PhaseSpaceElement::p(c, 0);
        assert_eq!(t.coproduct(&p0), coproduct0(&p0));
        // Δx_0 = x_0⊗1 + a_0(1−λ)⊗x_kp_k
        let x0 = PhaseSpaceElement::x(c, 0);
        let s = GaussianRational::real(oml.clone());
        let want = &TensorElement::tensor2(&x0, &one) + &TensorElement::tensor2(&one, &d.mul_poly(&c.a(0))).scale(&s);
        assert_eq!(t.coproduct(&x0), want, "lambda={l}");
    }
}

#[test]
fn strict_cocycle_for_builtin_twists() {
    for (t, _) in pairs(2, 3) {
        let rep = cocycle_check(&t, CocycleSense::HopfStrict, 0).unwrap();
        assert!(rep.passed(), "{rep}");
    }
    let t = Twist::builtin(&TwistKind::Lightlike, cfg(3, 3, DeformationMode::Light)).unwrap();
    assert!(cocycle_check(&t, CocycleSense::HopfStrict, 0).unwrap().passed());
}

#[test]
fn algebroid_cocycle_for_builtin_twists() {
    for (t, _) in pairs(2, 2) {
        let rep = cocycle_check(&t, CocycleSense::Algebroid, 2).unwrap();
        assert!(rep.passed(), "{rep}");
    }
}

#[test]
fn dual_star_routes() {
    for (t, r) in pairs(2, 2) {
        let rep = dual_star_check(&r, Some(&t), 2);
        assert!(rep.passed(), "{rep}");
    }
}

#[test]
fn ideal_transport() {
    for (t, r) in pairs(2, 2) {
        let rep = ideal_transport_check(&t, &r, 2).unwrap();
        assert!(rep.passed(), "{rep}");
    }
}

#[test]
fn jordanian_left_coproduct_of_left_momenta() {
    let c = cfg(2, 3, DeformationMode::Generic);
    let r = Realization::left(c);
    let t = Twist::builtin(&TwistKind::JordanianLeft, c).unwrap();
    let star = |f: &CommutativePolynomial, g: &CommutativePolynomial| r.star(f, g);
    for mu in 0..2 {
        let got = t.coproduct(&r.p_l()[mu]);
        let want = crate::tensor::delta_p_left(&r, mu);
        assert!(crate::tensor::congruent_mod_ideal(&got, &want, 3, Product::Star(&star)).unwrap().holds);
    }
}

#[test]
fn normal_twist_round_trip() {
    for r in [Realization::natural(cfg(2, 2, DeformationMode::Generic)), Realization::left(cfg(2, 2, DeformationMode::Generic))] {
        let t = Twist::normal(&r).unwrap();
        let rep = star_routes_check(&t, &r, 2).unwrap();
        assert!(rep.passed(), "{rep}");
    }
}

#[test]
fn normal_twist_matches_closed_form() {
    // the normal-ordered F^-1 of the left covariant realization agrees with
    // the action of the Jordanian twist on every monomial pair
    let c = cfg(2, 2, DeformationMode::Generic);
    let r = Realization::left(c);
    let n = Twist::normal(&r).unwrap();
    let j = Twist::builtin(&TwistKind::JordanianLeft, c).unwrap();
    for f in CommutativePolynomial::monomials_up_to(c, 3) {
        for g in CommutativePolynomial::monomials_up_to(c, 3) {
            assert_eq!(n.star(&f, &g), j.star(&f, &g));
        }
    }
}

#[cfg(feature = "experimental")]
#[test]
fn classical_order2_cocycles() {
    for mode in [DeformationMode::Time, DeformationMode::Space] {
        let t = classical_order2(cfg(2, 2, mode)).unwrap();
        let strict = cocycle_check(&t, CocycleSense::HopfStrict, 0).unwrap();
        assert!(!strict.passed(), "{strict}");
        let alg = cocycle_check(&t, CocycleSense::Algebroid, 2).unwrap();
        assert!(alg.passed(), "{alg}");
    }
}

#[test]
fn first_order_family() {
    for mode in [DeformationMode::Time, DeformationMode::Space] {
        for n in [2, 3] {
            let c = cfg(n, 1, mode);
            let fam = solve_twist_exponent(c, 1).unwrap();
            assert!(fam.matches_expected(), "{fam}");
            assert_eq!(fam.basis.d_scale, GaussianRational::i());
            assert!(fam.base_is_poincare());
            let u0 = fam.member(&[GaussianRational::zero()]);
            assert_eq!(u0, fam.basis.elements[0]);
            assert!(u0.undeformed().is_zero());
        }
    }
}

#[test]
fn first_order_family_is_stable_in_degree() {
    let c = cfg(2, 1, DeformationMode::Time);
    let d2 = solve::solve_with_scale(c, GaussianRational::i(), solve::Matching::ModIdeal(2)).unwrap();
    let d3 = solve::solve_with_scale(c, GaussianRational::i(), solve::Matching::ModIdeal(3)).unwrap();
    assert_eq!(d2.particular, d3.particular);
    assert_eq!(d2.directions, d3.directions);
}

#[test]
fn first_order_family_without_exchange_identities() {
    // as raw tensors only the Poincaré member survives
    let c = cfg(3, 1, DeformationMode::Time);
    let fam = solve::solve_with_scale(c, GaussianRational::i(), solve::Matching::Exact).unwrap();
    assert!(fam.directions.is_empty());
    assert_eq!(fam.particular, vec![GaussianRational::one(), GaussianRational::zero(), GaussianRational::zero(), GaussianRational::zero()]);
}

#[test]
fn other_d_normalizations_miss_the_expected_shape() {
    let c = cfg(2, 1, DeformationMode::Space);
    for (re, im) in [(1, 0), (-1, 0), (0, -1)] {
        let s = GaussianRational::new(Rational::from_int(re), Rational::from_int(im));
        let fam = solve::solve_with_scale(c, s, solve::Matching::ModIdeal(2)).unwrap();
        assert_eq!(fam.directions.len(), 1);
        assert!(!fam.matches_expected());
    }
}

#[test]
fn solver_preconditions() {
    assert!(matches!(solve_twist_exponent(cfg(2, 1, DeformationMode::Time), 2), Err(Error::Unsupported { .. })));
    assert!(matches!(solve_twist_exponent(cfg(2, 1, DeformationMode::Light), 1), Err(Error::Unsupported { .. })));
}

#[cfg(feature = "experimental")]
#[test]
fn classical_order2_strict_failure_is_a_residual() {
    let t = classical_order2(cfg(2, 2, DeformationMode::Time)).unwrap();
    let rep = cocycle_check(&t, CocycleSense::HopfStrict, 0).unwrap();
    let r = rep.get("cocycle-strict").unwrap();
    assert!(r.note.is_none(), "{rep}");
    // at first order the same operator is still a cocycle
    let t1 = Twist::normal(&Realization::natural(cfg(2, 1, DeformationMode::Time))).unwrap();
    let rep = cocycle_check(&t1, CocycleSense::HopfStrict, 0).unwrap();
    assert!(rep.passed(), "{rep}");
}
