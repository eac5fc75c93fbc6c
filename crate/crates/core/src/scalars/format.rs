//! Shared plain-text and LaTeX rendering of coefficient-weighted sums.

use super::gaussian::GaussianRational;
use super::rational::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Style {
    Text,
    Latex,
}

impl Style {
    fn sep(self) -> &'static str {
        match self {
            Style::Text => "*",
            Style::Latex => " ",
        }
    }
}

fn rational(r: &Rational, style: Style) -> String {
    match style {
        Style::Text => r.to_string(),
        Style::Latex => {
            let (n, d) = r.parts();
            if d == "1" {
                n
            } else if let Some(stripped) = n.strip_prefix('-') {
                format!("-\\frac{{{stripped}}}{{{d}}}")
            } else {
                format!("\\frac{{{n}}}{{{d}}}")
            }
        }
    }
}

/// Splits a coefficient into a sign and a magnitude prefix (`None` for a
/// bare unit coefficient).
fn signed_prefix(c: &GaussianRational, style: Style) -> (bool, Option<String>) {
    let sep = style.sep();
    if c.im.is_zero() {
        let neg = c.re.is_negative();
        let m = c.re.abs();
        return (neg, if m.is_one() { None } else { Some(rational(&m, style)) });
    }
    if c.re.is_zero() {
        let neg = c.im.is_negative();
        let m = c.im.abs();
        let s = if m.is_one() { "i".to_string() } else { format!("{}{sep}i", rational(&m, style)) };
        return (neg, Some(s));
    }
    let (re, im) = (rational(&c.re, style), c.im.abs());
    let im_s = if im.is_one() { "i".to_string() } else { format!("{}{sep}i", rational(&im, style)) };
    let op = if c.im.is_negative() { "-" } else { "+" };
    (false, Some(format!("({re} {op} {im_s})")))
}

/// Renders `Σ c·f_1*f_2*…`, printing `0` for an empty sum.
pub fn format_sum<I>(terms: I, style: Style) -> String
where
    I: IntoIterator<Item = (GaussianRational, Vec<String>)>,
{
    format_tensor_sum(terms.into_iter().map(|(c, f)| (c, vec![f])), style)
}

/// Like [`format_sum`] for tensor terms: the coefficient joins the first
/// leg and empty legs print as `1`.
pub fn format_tensor_sum<I>(terms: I, style: Style) -> String
where
    I: IntoIterator<Item = (GaussianRational, Vec<Vec<String>>)>,
{
    let tensor = match style {
        Style::Text => " ox ",
        Style::Latex => " \\otimes ",
    };
    let mut out = String::new();
    for (c, legs) in terms {
        if c.is_zero() {
            continue;
        }
        let (neg, prefix) = signed_prefix(&c, style);
        let mut rendered = Vec::with_capacity(legs.len());
        for (k, leg) in legs.into_iter().enumerate() {
            let mut body: Vec<String> = Vec::new();
            if k == 0 {
                body.extend(prefix.clone());
            }
            body.extend(leg);
            rendered.push(if body.is_empty() { "1".to_string() } else { body.join(style.sep()) });
        }
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&rendered.join(tensor));
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// `name` or `name^e` (braced in LaTeX).
pub fn power(name: &str, e: u8, style: Style) -> Option<String> {
    match e {
        0 => None,
        1 => Some(name.to_string()),
        _ => Some(match style {
            Style::Text => format!("{name}^{e}"),
            Style::Latex => format!("{name}^{{{e}}}"),
        }),
    }
}
