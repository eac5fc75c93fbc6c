use proptest::prelude::*;

use super::*;
use crate::scalars::{DeformationMode, DeformationPoly, GaussianRational, MultiIndex, Rational, SpaceConfig};
use crate::tensor::TensorElement;
use crate::weyl::PhaseSpaceElement;

fn run_args(args: &[&str]) -> Outcome {
    run(std::iter::once("kappa").chain(args.iter().copied()))
}

fn ctx(mode: DeformationMode) -> Context {
    let c = SpaceConfig::new(2, 2, mode).unwrap();
    Context::new(c, Realization::natural(c), None)
}

fn read_back(ctx: &Context, text: &str) -> Value {
    ctx.eval(&parse_expression(text).unwrap()).unwrap()
}

#[test]
fn worked_examples() {
    let out = |a: &[&str]| {
        let o = run_args(a);
        assert_eq!(o.code, 0, "{}", o.text);
        o.text
    };
    assert_eq!(out(&["normal-order", "[p_0, x_0]", "--dim", "2"]), "i");
    // η_00 = −1, so [p_0, x_0] = i
    assert_eq!(out(&["normal-order", "p_0 * x_0", "--dim", "2"]), "x_0*p_0 + i");
    assert_eq!(out(&["star", "x_0", "x_1", "--realization", "left", "--mode", "generic", "--dim", "2"]), "x_0*x_1 - i*a_1*x_0");
    assert_eq!(out(&["antipode", "x_1*p_1", "--variant", "S0", "--dim", "2"]), "-x_1*p_1 + i");
    assert_eq!(out(&["counit", "xhat_1", "--realization", "left", "--dim", "2"]), "x_1");
    assert_eq!(out(&["normal-order", "x_0^2", "--dim", "2", "--format", "latex"]), "x_0^{2}");
}

#[test]
fn exit_codes() {
    assert_eq!(run_args(&["normal-order", "x_7", "--dim", "2"]).code, 2);
    assert_eq!(run_args(&["normal-order", "x_0 +", "--dim", "2"]).code, 2);
    assert_eq!(run_args(&["frobnicate"]).code, 2);
    assert_eq!(run_args(&[]).code, 2);
    assert_eq!(run_args(&["--dim", "2", "twist", "show", "lightlike"]).code, 2);
    let o = run_args(&["--help"]);
    assert_eq!(o.code, 0);
    assert!(!o.stderr);
    let o = run_args(&["check", "realization", "--dim", "2", "--order", "2", "--degree", "2"]);
    assert_eq!(o.code, 0, "{}", o.text);
    assert!(o.text.ends_with("0 failed"));
}

#[test]
fn errors_carry_offsets() {
    let o = run_args(&["normal-order", "x_0 * (p_1", "--dim", "2"]);
    assert!(o.stderr);
    assert!(o.text.contains("offset 10"), "{}", o.text);
    let o = run_args(&["star", "p_0", "x_1", "--dim", "2"]);
    assert!(o.text.contains("offset 0"), "{}", o.text);
}

#[test]
fn json_schema() {
    let o = run_args(&["coproduct", "p_1", "--realization", "lambda:1", "--dim", "2", "--order", "1", "--format", "json"]);
    assert_eq!(o.code, 0, "{}", o.text);
    let v: serde_json::Value = serde_json::from_str(&o.text).unwrap();
    assert_eq!(v["kind"], "tensor");
    assert_eq!(v["config"]["dim"], 2);
    assert_eq!(v["config"]["mode"], "time");
    let terms = v["terms"].as_array().unwrap();
    assert_eq!(terms.len(), 3);
    for t in terms {
        assert!(t["coeff"]["re"].is_string() && t["coeff"]["im"].is_string());
        assert_eq!(t["legs"].as_array().unwrap().len(), 2);
    }
}

#[test]
fn script_lines_are_echoed() {
    let dir = std::env::temp_dir().join(format!("kappa-script-{}", std::process::id()));
    std::fs::write(&dir, "# comment\nnormal-order \"[p_1, x_1]\" --dim 2\nnormal-order x_9 --dim 2\n").unwrap();
    let o = run_args(&["--script", dir.to_str().unwrap()]);
    std::fs::remove_file(&dir).unwrap();
    assert_eq!(o.code, 2);
    assert!(!o.stderr);
    let lines: Vec<&str> = o.text.lines().collect();
    assert_eq!(lines[0], "$ kappa normal-order \"[p_1, x_1]\" --dim 2");
    assert_eq!(lines[1], "-i");
    assert!(lines[3].starts_with("error:"));
}

fn arb_coeff() -> impl Strategy<Value = GaussianRational> {
    (-4i64..=4, 1i64..=3, -2i64..=2).prop_map(|(re, d, im)| GaussianRational::new(Rational::new(re, d), Rational::from_int(im)))
}

fn arb_element(c: SpaceConfig) -> impl Strategy<Value = PhaseSpaceElement> {
    let term = (prop::collection::vec(0u8..=2, 2), prop::collection::vec(0u8..=2, 2), 0usize..=2, 0usize..2, arb_coeff());
    prop::collection::vec(term, 0..4).prop_map(move |ts| {
        ts.into_iter().fold(PhaseSpaceElement::zero(c), |acc, (x, p, k, s, g)| {
            let a = (0..k).fold(DeformationPoly::one(c), |m, _| &m * &c.a(s));
            let e = PhaseSpaceElement::monomial(c, MultiIndex::from_slice(&x), MultiIndex::from_slice(&p), a);
            &acc + &e.scale(&g)
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn element_text_round_trip((mode, e) in prop::sample::select(vec![DeformationMode::Time, DeformationMode::Generic, DeformationMode::Light])
        .prop_flat_map(|m| arb_element(SpaceConfig::new(2, 2, m).unwrap()).prop_map(move |e| (m, e)))) {
        let ctx = ctx(mode);
        let text = output::value(&Value::Element(e.clone()), Format::Text);
        prop_assert_eq!(read_back(&ctx, &text), Value::Element(e));
    }

    #[test]
    fn tensor_text_round_trip(l in arb_element(SpaceConfig::new(2, 2, DeformationMode::Generic).unwrap()),
                              r in arb_element(SpaceConfig::new(2, 2, DeformationMode::Generic).unwrap()),
                              s in arb_element(SpaceConfig::new(2, 2, DeformationMode::Generic).unwrap())) {
        let ctx = ctx(DeformationMode::Generic);
        let t = &TensorElement::tensor2(&l, &r) + &TensorElement::tensor2(&s, &PhaseSpaceElement::one(ctx.config));
        let text = output::value(&Value::Tensor(t.clone()), Format::Text);
        let back = read_back(&ctx, &text);
        // a vanishing tensor prints as 0 and reads back as a scalar
        if t.is_zero() {
            prop_assert_eq!(text, "0");
        } else {
            prop_assert_eq!(back, Value::Tensor(t));
        }
    }
}
