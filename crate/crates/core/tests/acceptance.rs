//! Acceptance criteria 1 to 10, one PASS/FAIL line each.

use std::process::Command;
use std::time::Instant;

use kappa_algebroid::algebroid::{antipode0, AntipodeVariant, HopfAlgebroidStructure};
use kappa_algebroid::poincare::PoincareGenerators;
use kappa_algebroid::realization::{dual_report, validate_realization, Realization};
use kappa_algebroid::report::Report;
use kappa_algebroid::scalars::{DeformationMode, GaussianRational, Rational, SpaceConfig};
use kappa_algebroid::tensor::{coproduct0, TensorElement};
use kappa_algebroid::twist::{
    cocycle_check, dual_star_check, realization_from_twist, solve_twist_exponent, star_routes_check, CocycleSense, Twist,
    TwistKind,
};
use kappa_algebroid::weyl::{exp, CommutativePolynomial, PhaseSpaceElement};

type Outcome = Result<(), String>;

fn cfg(n: usize, k: usize, mode: DeformationMode) -> SpaceConfig {
    SpaceConfig::new(n, k, mode).unwrap()
}

fn lambdas() -> [Rational; 3] {
    [Rational::zero(), Rational::new(1, 2), Rational::one()]
}

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn report(r: Report) -> Outcome {
    ensure(r.passed(), || r.to_string())
}

fn catalog(n: usize, k: usize) -> Vec<Realization> {
    let g = cfg(n, k, DeformationMode::Generic);
    let t = cfg(n, k, DeformationMode::Time);
    let mut rs = vec![Realization::left(g), Realization::right(g), Realization::natural(g)];
    rs.extend(lambdas().into_iter().map(|l| Realization::lambda(t, l).unwrap()));
    rs
}

fn twist_pairs(n: usize, k: usize) -> Vec<(Twist, Realization)> {
    let g = cfg(n, k, DeformationMode::Generic);
    let t = cfg(n, k, DeformationMode::Time);
    let l = cfg(n, k, DeformationMode::Light);
    let mut out = vec![
        (Twist::builtin(&TwistKind::JordanianLeft, g).unwrap(), Realization::left(g)),
        (Twist::builtin(&TwistKind::JordanianRight, g).unwrap(), Realization::right(g)),
    ];
    for lam in lambdas() {
        out.push((Twist::builtin(&TwistKind::Lambda(lam.clone()), t).unwrap(), Realization::lambda(t, lam).unwrap()));
    }
    out.push((Twist::builtin(&TwistKind::Lightlike, l).unwrap(), Realization::natural(l)));
    out
}

fn criterion_1() -> Outcome {
    for n in [2, 3] {
        for r in catalog(n, 3) {
            report(validate_realization(&r))?;
            // oracle: compose the differential-operator actions on monomials
            let c = r.config();
            let xh = r.xhat();
            let i = GaussianRational::i();
            for f in CommutativePolynomial::monomials_up_to(c, 2) {
                for mu in 0..n {
                    for nu in 0..n {
                        let lhs = &xh[mu].act(&xh[nu].act(&f)) - &xh[nu].act(&xh[mu].act(&f));
                        let rhs = (&xh[nu].act(&f).mul_poly(&c.a(mu)) - &xh[mu].act(&f).mul_poly(&c.a(nu))).scale(&i);
                        ensure(lhs == rhs, || format!("{} mu={mu} nu={nu} f={f}", r.name()))?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn criterion_2() -> Outcome {
    for n in [2, 3] {
        for r in catalog(n, 3) {
            report(dual_report(&r))?;
            let c = r.config();
            for f in CommutativePolynomial::monomials_up_to(c, 2) {
                for mu in 0..n {
                    for nu in 0..n {
                        let (x, y) = (&r.xhat()[mu], &r.yhat()[nu]);
                        ensure(x.act(&y.act(&f)) == y.act(&x.act(&f)), || format!("{} [xhat, yhat] on {f}", r.name()))?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn criterion_3() -> Outcome {
    for n in [2, 3] {
        let h = HopfAlgebroidStructure::new(Realization::left(cfg(n, 3, DeformationMode::Generic))).map_err(|e| e.to_string())?;
        report(h.axiom_suite(3).map_err(|e| e.to_string())?)?;
        // S(x̂_μ) − ŷ_μ = ia_μ(1 − n), read off directly
        let r = h.realization();
        let c = r.config();
        for mu in 0..n {
            let shift = PhaseSpaceElement::a(c, mu).scale(&GaussianRational::new(Rational::zero(), Rational::from_int(1 - n as i64)));
            let got = &h.antipode(&r.xhat()[mu], AntipodeVariant::S) - &r.yhat()[mu];
            ensure(got == shift, || format!("n={n} mu={mu}: {got}"))?;
        }
    }
    Ok(())
}

fn z_pow(c: SpaceConfig, e: &Rational) -> PhaseSpaceElement {
    let a = PhaseSpaceElement::p(c, 0).mul_poly(&c.a(0));
    exp(&a.scale(&GaussianRational::real(e.clone()))).unwrap()
}

fn spatial_dilatation(c: SpaceConfig) -> PhaseSpaceElement {
    (1..c.dim).fold(PhaseSpaceElement::zero(c), |acc, k| &acc + &(&PhaseSpaceElement::x(c, k) * &PhaseSpaceElement::p(c, k)))
}

fn criterion_4() -> Outcome {
    for n in [2, 3] {
        for (t, r) in twist_pairs(n, 3) {
            let tr = realization_from_twist(&t).map_err(|e| e.to_string())?;
            ensure(tr.xhat() == r.xhat(), || format!("{} xhat", t.name()))?;
        }
    }
    let c = cfg(3, 3, DeformationMode::Time);
    let one = PhaseSpaceElement::one(c);
    let i = GaussianRational::i();
    let g = |q: &Rational| GaussianRational::real(q.clone());
    let d = spatial_dilatation(c);
    let a0 = PhaseSpaceElement::a(c, 0);
    for l in lambdas() {
        let t = Twist::builtin(&TwistKind::Lambda(l.clone()), c).unwrap();
        let h = HopfAlgebroidStructure::new(Realization::lambda(c, l.clone()).unwrap()).map_err(|e| e.to_string())?;
        let oml = &Rational::one() - &l;
        let one_m2 = &oml - &l;
        let s = |e: &PhaseSpaceElement| h.antipode(e, AntipodeVariant::S);
        for j in 1..3 {
            let (x, p) = (PhaseSpaceElement::x(c, j), PhaseSpaceElement::p(c, j));
            ensure(t.coproduct(&x) == TensorElement::tensor2(&x, &z_pow(c, &l)), || format!("lambda={l} Delta x_{j}"))?;
            let want = &TensorElement::tensor2(&p, &z_pow(c, &-&l)) + &TensorElement::tensor2(&z_pow(c, &oml), &p);
            ensure(t.coproduct(&p) == want, || format!("lambda={l} Delta p_{j}"))?;
            ensure(s(&p) == -&(&p * &z_pow(c, &-&one_m2)), || format!("lambda={l} S(p_{j})"))?;
            ensure(s(&x) == &x * &z_pow(c, &one_m2), || format!("lambda={l} S(x_{j})"))?;
        }
        let (x0, p0) = (PhaseSpaceElement::x(c, 0), PhaseSpaceElement::p(c, 0));
        ensure(t.coproduct(&p0) == coproduct0(&p0), || format!("lambda={l} Delta p_0"))?;
        let want = &TensorElement::tensor2(&x0, &one) + &TensorElement::tensor2(&one, &(&a0 * &d)).scale(&g(&oml));
        ensure(t.coproduct(&x0) == want, || format!("lambda={l} Delta x_0"))?;
        ensure(s(&p0) == -&p0, || format!("lambda={l} S(p_0)"))?;
        let shift = a0.scale(&(&i * &GaussianRational::from_int(1 - c.dim as i64)));
        let want = &(&x0 - &(&a0 * &d).scale(&g(&one_m2))) + &shift.scale(&g(&l));
        ensure(s(&x0) == want, || format!("lambda={l} S(x_0)"))?;
    }
    Ok(())
}

fn criterion_5() -> Outcome {
    for (t, r) in twist_pairs(2, 3) {
        report(star_routes_check(&t, &r, 3).map_err(|e| e.to_string())?)?;
        report(dual_star_check(&r, Some(&t), 3))?;
        report(cocycle_check(&t, CocycleSense::Algebroid, 3).map_err(|e| e.to_string())?)?;
    }
    Ok(())
}

fn criterion_6() -> Outcome {
    for n in [2, 3] {
        let t = cfg(n, 3, DeformationMode::Time);
        let mut twists: Vec<Twist> = lambdas().into_iter().map(|l| Twist::builtin(&TwistKind::Lambda(l), t).unwrap()).collect();
        twists.push(Twist::builtin(&TwistKind::Lightlike, cfg(n, 3, DeformationMode::Light)).unwrap());
        for tw in twists {
            report(cocycle_check(&tw, CocycleSense::HopfStrict, 0).map_err(|e| e.to_string())?)?;
        }
    }
    Ok(())
}

fn criterion_7() -> Outcome {
    for mode in [DeformationMode::Time, DeformationMode::Space, DeformationMode::Light] {
        let c = cfg(3, 3, mode);
        // classical() verifies both closed forms of Z^{-1}
        let g = PoincareGenerators::classical(c).map_err(|e| e.to_string())?;
        report(g.algebra_check().map_err(|e| e.to_string())?)?;
        let h = HopfAlgebroidStructure::new(Realization::natural(c)).map_err(|e| e.to_string())?;
        report(g.coalgebra_check(&h, 3).map_err(|e| e.to_string())?)?;
    }
    Ok(())
}

fn criterion_8() -> Outcome {
    for mode in [DeformationMode::Time, DeformationMode::Space] {
        for n in [2, 3] {
            let fam = solve_twist_exponent(cfg(n, 1, mode), 1).map_err(|e| e.to_string())?;
            ensure(fam.directions.len() == 1, || format!("{fam}"))?;
            ensure(fam.matches_expected() && fam.base_is_poincare(), || format!("{fam}"))?;
        }
    }
    Ok(())
}

fn criterion_9() -> Outcome {
    for n in [2, 3, 4] {
        let c = cfg(n, 2, DeformationMode::Time);
        for j in 1..n {
            let h = &PhaseSpaceElement::x(c, j) * &PhaseSpaceElement::p(c, j);
            let want = &(-&h) + &PhaseSpaceElement::scalar(c, GaussianRational::i());
            ensure(antipode0(&h) == want, || format!("n={n} j={j}: {}", antipode0(&h)))?;
        }
    }
    Ok(())
}

fn kappa(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_kappa")).args(args).output().expect("run kappa")
}

fn criterion_10() -> Outcome {
    let out = kappa(&["check", "all"]);
    let text = String::from_utf8_lossy(&out.stdout);
    ensure(out.status.code() == Some(0), || format!("check all exited {:?}\n{text}", out.status.code()))?;
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/golden");
    let corpus = std::fs::read_to_string(format!("{dir}/corpus.txt")).map_err(|e| e.to_string())?;
    let commands = corpus.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')).count();
    ensure(commands >= 25, || format!("only {commands} golden commands"))?;
    let script = format!("{dir}/corpus.txt");
    let first = kappa(&["--script", &script]).stdout;
    let second = kappa(&["--script", &script]).stdout;
    ensure(first == second, || "golden output differs between runs".into())?;
    let expected = std::fs::read(format!("{dir}/expected.txt")).map_err(|e| e.to_string())?;
    ensure(first == expected, || "golden output differs from expected.txt".into())
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("realization correctness", criterion_1),
        ("dual-basis identities", criterion_2),
        ("Hopf algebroid axioms", criterion_3),
        ("twist round trip and lambda family", criterion_4),
        ("star products", criterion_5),
        ("strict Hopf cocycle", criterion_6),
        ("kappa-Poincare", criterion_7),
        ("order-1 twist solver", criterion_8),
        ("antipode mismatch witness", criterion_9),
        ("CLI", criterion_10),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let res = f();
        let secs = start.elapsed().as_secs_f64();
        match res {
            Ok(()) => println!("criterion {:>2} PASS {name} ({secs:.1}s)", k + 1),
            Err(e) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name} ({secs:.1}s)\n{e}", k + 1);
            }
        }
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
