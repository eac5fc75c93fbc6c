use super::*;
use crate::scalars::DeformationMode;
use crate::tensor::coproduct_lie;

fn cfg(n: usize, k: usize, mode: DeformationMode) -> SpaceConfig {
    SpaceConfig::new(n, k, mode).unwrap()
}

const MODES: [DeformationMode; 3] = [DeformationMode::Time, DeformationMode::Space, DeformationMode::Light];

#[test]
fn classical_momenta_are_the_canonical_ones() {
    // in the classical basis P_μ coincides with p_μ
    for mode in MODES {
        let c = cfg(3, 3, mode);
        let g = PoincareGenerators::classical(c).unwrap();
        for mu in 0..3 {
            assert_eq!(g.p[mu], PhaseSpaceElement::p(c, mu), "{mode:?}");
        }
        let xs = g.canonical_coordinates().unwrap();
        for mu in 0..3 {
            assert_eq!(xs[mu], PhaseSpaceElement::x(c, mu), "{mode:?}");
        }
    }
}

#[test]
fn undeformed_lorentz_generators() {
    let c = cfg(3, 2, DeformationMode::Generic);
    let g = PoincareGenerators::classical(c).unwrap();
    for mu in 0..3 {
        for nu in 0..3 {
            let (x, p) = (PhaseSpaceElement::x, PhaseSpaceElement::p);
            let want = (&(&x(c, mu) * &p(c, nu)) - &(&x(c, nu) * &p(c, mu))).scale(&GaussianRational::i());
            assert_eq!(g.m[mu][nu].undeformed(), want);
        }
    }
    let apl = (0..3).fold(PhaseSpaceElement::one(c), |acc, al| &acc + &g.realization.p_l()[al].mul_poly(&c.a_up(al)));
    assert_eq!(g.z_inv, apl);
}

#[test]
fn bracket_examples() {
    let c = cfg(3, 3, DeformationMode::Generic);
    let g = PoincareGenerators::classical(c).unwrap();
    // [P_0, x̂_0] = −i(−Z^{−1} − a_0P_0)
    let want = (&(-&g.z_inv) - &g.p[0].mul_poly(&c.a(0))).scale(&-&GaussianRational::i());
    assert_eq!(g.p[0].commutator(&g.realization.xhat()[0]), want);
    assert!(g.m[0][1].commutator(&g.p[2]).is_zero());
    assert!(g.p[0].commutator(&g.p[1]).is_zero());
}

#[test]
fn algebra_in_all_modes() {
    for mode in MODES {
        let g = PoincareGenerators::classical(cfg(3, 3, mode)).unwrap();
        let rep = g.algebra_check().unwrap();
        assert!(rep.passed(), "{rep}");
    }
    let rep = PoincareGenerators::classical(cfg(2, 3, DeformationMode::Generic)).unwrap().algebra_check().unwrap();
    assert!(rep.passed(), "{rep}");
}

#[test]
fn coalgebra_in_all_modes() {
    for mode in MODES {
        let c = cfg(3, 3, mode);
        let g = PoincareGenerators::classical(c).unwrap();
        let h = HopfAlgebroidStructure::new(Realization::natural(c)).unwrap();
        let rep = g.coalgebra_check(&h, 3).unwrap();
        assert!(rep.passed(), "{rep}");
        if mode == DeformationMode::Light {
            assert_eq!(h.twist().name(), "lightlike");
        }
    }
}

#[test]
fn coalgebra_limits() {
    let c = cfg(3, 2, DeformationMode::Time);
    let g = PoincareGenerators::classical(c).unwrap();
    // the primitive limit
    for (a, b) in [(0, 1), (1, 2)] {
        assert_eq!(g.delta_m(a, b).undeformed(), coproduct_lie(&g.m[a][b].undeformed()).unwrap());
    }
    let h = HopfAlgebroidStructure::new(Realization::natural(c)).unwrap();
    assert!(h.counit(&g.p[1]).is_zero());
    assert!(g.coalgebra_check(&HopfAlgebroidStructure::new(Realization::left(c)).unwrap(), 1).is_err());
}
