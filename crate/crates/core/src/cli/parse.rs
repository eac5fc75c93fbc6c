//! Tokenizer and recursive-descent parser for the expression language.
//!
//! Precedence from loose to tight: `|>` (right associative), `+`/`-`,
//! `ox`, `*`, unary minus, `^`.

use std::fmt;

use crate::scalars::{GaussianRational, Rational};

/// A syntax or elaboration error at byte offset `pos` of the source.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub pos: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at offset {}: {}", self.pos, self.message)
    }
}

impl std::error::Error for ParseError {}

fn err<T>(pos: usize, message: impl Into<String>) -> Result<T, ParseError> {
    Err(ParseError { pos, message: message.into() })
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Num(Rational),
    /// A name with the digits after its `_`, if any.
    Sym(String, Option<String>),
    Op(&'static str),
    End,
}

fn tokenize(src: &str) -> Result<Vec<(Tok, usize)>, ParseError> {
    let b = src.as_bytes();
    let mut out = Vec::new();
    let mut k = 0;
    while k < b.len() {
        let c = b[k];
        if c.is_ascii_whitespace() {
            k += 1;
            continue;
        }
        let start = k;
        if c.is_ascii_digit() {
            while k < b.len() && b[k].is_ascii_digit() {
                k += 1;
            }
            if k + 1 < b.len() && b[k] == b'/' && b[k + 1].is_ascii_digit() {
                k += 1;
                while k < b.len() && b[k].is_ascii_digit() {
                    k += 1;
                }
            }
            let r: Rational = src[start..k].parse().map_err(|_| ParseError { pos: start, message: "invalid rational".into() })?;
            out.push((Tok::Num(r), start));
        } else if c.is_ascii_alphabetic() {
            while k < b.len() && b[k].is_ascii_alphanumeric() {
                k += 1;
            }
            let name = src[start..k].to_string();
            let mut idx = None;
            if k < b.len() && b[k] == b'_' {
                let s = k + 1;
                k = s;
                while k < b.len() && b[k].is_ascii_digit() {
                    k += 1;
                }
                if k == s {
                    return err(s, "expected an index after '_'");
                }
                idx = Some(src[s..k].to_string());
            }
            if name == "ox" && idx.is_none() {
                out.push((Tok::Op("ox"), start));
            } else {
                out.push((Tok::Sym(name, idx), start));
            }
        } else {
            let two = if k + 1 < b.len() { &src[k..k + 2] } else { "" };
            if two == "|>" {
                out.push((Tok::Op("|>"), start));
                k += 2;
                continue;
            }
            let op = match c {
                b'+' => "+",
                b'-' => "-",
                b'*' => "*",
                b'^' => "^",
                b'(' => "(",
                b')' => ")",
                b'[' => "[",
                b']' => "]",
                b',' => ",",
                _ => return err(start, format!("unexpected character '{}'", src[start..].chars().next().unwrap_or('?'))),
            };
            out.push((Tok::Op(op), start));
            k += 1;
        }
    }
    out.push((Tok::End, src.len()));
    Ok(out)
}

/// Series functions accepted in `fn(expr)` position.
pub const FUNCTIONS: [&str; 4] = ["exp", "log1p", "inv", "sqrt1p"];

#[derive(Clone, Debug, PartialEq)]
pub enum Expr {
    Num(GaussianRational),
    /// `name_digits` or a bare name; `pos` locates it for later errors.
    Sym { name: String, index: Option<String>, pos: usize },
    /// `dot(u, v) = u^α v_α` for vector names `u`, `v`.
    Dot { left: String, right: String, pos: usize },
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u32),
    Commutator(Box<Expr>, Box<Expr>),
    Tensor(Vec<Expr>),
    Func { name: String, arg: Box<Expr>, pos: usize },
    /// `h |> f`.
    Act(Box<Expr>, Box<Expr>),
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    k: usize,
}

impl Parser {
    fn peek(&self) -> &Tok {
        &self.toks[self.k].0
    }

    fn pos(&self) -> usize {
        self.toks[self.k].1
    }

    fn bump(&mut self) -> (Tok, usize) {
        let t = self.toks[self.k].clone();
        if self.k + 1 < self.toks.len() {
            self.k += 1;
        }
        t
    }

    fn eat(&mut self, op: &str) -> bool {
        if matches!(self.peek(), Tok::Op(o) if *o == op) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, op: &str) -> Result<(), ParseError> {
        if self.eat(op) {
            Ok(())
        } else {
            err(self.pos(), format!("expected '{op}'"))
        }
    }

    fn action(&mut self) -> Result<Expr, ParseError> {
        let lhs = self.sum()?;
        if self.eat("|>") {
            let rhs = self.action()?;
            return Ok(Expr::Act(Box::new(lhs), Box::new(rhs)));
        }
        Ok(lhs)
    }

    fn sum(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.tensor()?;
        loop {
            if self.eat("+") {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.tensor()?));
            } else if self.eat("-") {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.tensor()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn tensor(&mut self) -> Result<Expr, ParseError> {
        let first = self.term()?;
        let mut legs = vec![first];
        while self.eat("ox") {
            legs.push(self.term()?);
        }
        Ok(if legs.len() == 1 { legs.pop().expect("one leg") } else { Expr::Tensor(legs) })
    }

    fn term(&mut self) -> Result<Expr, ParseError> {
        let mut lhs = self.unary()?;
        while self.eat("*") {
            lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
        }
        Ok(lhs)
    }

    fn unary(&mut self) -> Result<Expr, ParseError> {
        if self.eat("-") {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.factor()
    }

    fn factor(&mut self) -> Result<Expr, ParseError> {
        let base = self.atom()?;
        if self.eat("^") {
            let pos = self.pos();
            return match self.bump().0 {
                Tok::Num(r) if r.is_integer() && !r.is_negative() => {
                    let e = r.to_string().parse::<u32>().map_err(|_| ParseError { pos, message: "exponent too large".into() })?;
                    Ok(Expr::Pow(Box::new(base), e))
                }
                _ => err(pos, "expected a non-negative integer exponent"),
            };
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr, ParseError> {
        let (tok, pos) = self.bump();
        match tok {
            Tok::Num(r) => Ok(Expr::Num(GaussianRational::real(r))),
            Tok::Op("(") => {
                let e = self.action()?;
                self.expect(")")?;
                Ok(e)
            }
            Tok::Op("[") => {
                let a = self.action()?;
                self.expect(",")?;
                let b = self.action()?;
                self.expect("]")?;
                Ok(Expr::Commutator(Box::new(a), Box::new(b)))
            }
            Tok::Sym(name, None) if name == "i" => Ok(Expr::Num(GaussianRational::i())),
            Tok::Sym(name, None) if name == "dot" => {
                self.expect("(")?;
                let vec_name = |p: &mut Parser| -> Result<String, ParseError> {
                    let at = p.pos();
                    match p.bump().0 {
                        Tok::Sym(n, None) => Ok(n),
                        _ => err(at, "expected a vector name such as a, x, p, xhat"),
                    }
                };
                let left = vec_name(self)?;
                self.expect(",")?;
                let right = vec_name(self)?;
                self.expect(")")?;
                Ok(Expr::Dot { left, right, pos })
            }
            Tok::Sym(name, None) if FUNCTIONS.contains(&name.as_str()) => {
                self.expect("(")?;
                let arg = self.action()?;
                self.expect(")")?;
                Ok(Expr::Func { name, arg: Box::new(arg), pos })
            }
            Tok::Sym(name, index) => Ok(Expr::Sym { name, index, pos }),
            Tok::End => err(pos, "unexpected end of input"),
            Tok::Op(o) => err(pos, format!("unexpected '{o}'")),
        }
    }
}

pub fn parse_expression(src: &str) -> Result<Expr, ParseError> {
    let mut p = Parser { toks: tokenize(src)?, k: 0 };
    let e = p.action()?;
    if *p.peek() != Tok::End {
        return err(p.pos(), "unexpected trailing input");
    }
    Ok(e)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn precedence() {
        let e = parse_expression("a_0 * x_0 ox p_0 + 1 ox x_1").unwrap();
        assert!(matches!(e, Expr::Add(ref l, ref r) if matches!(**l, Expr::Tensor(_)) && matches!(**r, Expr::Tensor(_))));
        let e = parse_expression("-x_0^2").unwrap();
        assert!(matches!(e, Expr::Neg(ref b) if matches!(**b, Expr::Pow(_, 2))));
        let e = parse_expression("[p_0, x_0]").unwrap();
        assert!(matches!(e, Expr::Commutator(..)));
        assert!(parse_expression("exp(i * (x_0*p_0) ox log1p(Z - 1))").is_ok());
        assert!(matches!(parse_expression("xhat_0 |> x_1").unwrap(), Expr::Act(..)));
    }

    #[test]
    fn rationals_and_errors() {
        assert_eq!(parse_expression("3/4").unwrap(), Expr::Num(GaussianRational::real(Rational::new(3, 4))));
        let e = parse_expression("x_0 + ").unwrap_err();
        assert_eq!(e.pos, 6);
        assert_eq!(parse_expression("x_ 0").unwrap_err().pos, 2);
        assert_eq!(parse_expression("x_0 $").unwrap_err().pos, 4);
        assert!(parse_expression("x_0^-1").is_err());
        assert!(parse_expression("(x_0").is_err());
    }
}
