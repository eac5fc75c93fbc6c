//! Text, JSON and LaTeX serializers for values and reports.

use serde_json::{json, Value as Json};

use super::eval::Value;
use crate::report::Report;
use crate::scalars::{SpaceConfig, Style};
use crate::terms::{render_terms, Alphabet, FlatTerm};
use crate::weyl::CommutativePolynomial;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Text,
    Json,
    Latex,
}

fn json_terms(c: &SpaceConfig, terms: &[FlatTerm]) -> Json {
    let n = c.dim;
    let vec = |m: &crate::scalars::MultiIndex, len: usize| (0..len).map(|k| m.get(k)).collect::<Vec<_>>();
    Json::Array(
        terms
            .iter()
            .map(|t| {
                json!({
                    "coeff": {"re": t.coeff.re.to_string(), "im": t.coeff.im.to_string()},
                    "a": vec(&t.a, c.num_symbols()),
                    "legs": t.legs.iter().map(|(x, p)| json!({"x": vec(x, n), "p": vec(p, n)})).collect::<Vec<_>>(),
                })
            })
            .collect(),
    )
}

fn json_config(c: &SpaceConfig) -> Json {
    json!({"dim": c.dim, "order": c.order, "mode": c.mode.name()})
}

fn envelope(kind: &str, c: &SpaceConfig, terms: &[FlatTerm]) -> String {
    let v = json!({"kind": kind, "config": json_config(c), "terms": json_terms(c, terms)});
    serde_json::to_string_pretty(&v).expect("json")
}

pub fn value(v: &Value, f: Format) -> String {
    let (kind, c, terms) = match v {
        Value::Element(e) => ("element", e.config(), e.flat_terms()),
        Value::Tensor(t) => ("tensor", t.config(), t.flat_terms()),
    };
    match f {
        Format::Text => render_terms(&c, &terms, Alphabet::Canonical, Style::Text),
        Format::Latex => render_terms(&c, &terms, Alphabet::Canonical, Style::Latex),
        Format::Json => envelope(kind, &c, &terms),
    }
}

/// A function of the coordinates; `alphabet` selects `x`, ordered `x̂` or
/// ordered `ŷ` monomials.
pub fn polynomial(p: &CommutativePolynomial, alphabet: Alphabet, f: Format) -> String {
    let c = p.config();
    match f {
        Format::Text => p.render_as(alphabet, Style::Text),
        Format::Latex => p.render_as(alphabet, Style::Latex),
        Format::Json => {
            let kind = match alphabet {
                Alphabet::Canonical => "polynomial",
                Alphabet::Hatted => "ordered-xhat",
                Alphabet::Dual => "ordered-yhat",
            };
            envelope(kind, &c, &p.flat_terms())
        }
    }
}

pub fn report(r: &Report, f: Format) -> String {
    match f {
        Format::Json => serde_json::to_string_pretty(r).expect("json"),
        _ => r.to_string().trim_end().to_string(),
    }
}

pub fn reports(rs: &[Report], f: Format) -> String {
    match f {
        Format::Json => serde_json::to_string_pretty(rs).expect("json"),
        _ => rs.iter().map(|r| report(r, f)).collect::<Vec<_>>().join("\n"),
    }
}

/// Free text, e.g. the solver result.
pub fn lines(title: &str, body: &str, f: Format) -> String {
    match f {
        Format::Json => serde_json::to_string_pretty(&json!({"kind": title, "text": body})).expect("json"),
        _ => body.to_string(),
    }
}
