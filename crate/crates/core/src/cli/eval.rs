//! Elaboration of parsed expressions into engine values.

use std::cell::OnceCell;

use super::parse::{Expr, ParseError};
use crate::algebroid::HopfAlgebroidStructure;
use crate::error::Result as EngineResult;
use crate::poincare::{dilatation, PoincareGenerators};
use crate::realization::Realization;
use crate::scalars::{DeformationMode, DeformationPoly, GaussianRational, SpaceConfig};
use crate::tensor::TensorElement;
use crate::twist::Twist;
use crate::weyl::{exp, inverse, log1p, sqrt1p, CommutativePolynomial, PhaseSpaceElement, SeriesAlgebra};

/// An elaborated expression.
#[derive(Clone, Debug, PartialEq)]
pub enum Value {
    Element(PhaseSpaceElement),
    Tensor(TensorElement),
}

/// The space, realization and twist expressions are read in. Derived
/// structures are built on first use.
pub struct Context {
    pub config: SpaceConfig,
    pub realization: Realization,
    twist_name: Option<String>,
    algebroid: OnceCell<HopfAlgebroidStructure>,
    poincare: OnceCell<PoincareGenerators>,
}

type Res<T> = Result<T, ParseError>;

fn at<T>(pos: usize, r: EngineResult<T>) -> Res<T> {
    r.map_err(|e| ParseError { pos, message: e.to_string() })
}

fn fail<T>(pos: usize, m: impl Into<String>) -> Res<T> {
    Err(ParseError { pos, message: m.into() })
}

impl Context {
    pub fn new(config: SpaceConfig, realization: Realization, twist_name: Option<String>) -> Self {
        Context { config, realization, twist_name, algebroid: OnceCell::new(), poincare: OnceCell::new() }
    }

    /// The structure over the chosen realization, with `--twist` when given.
    pub fn algebroid(&self) -> EngineResult<&HopfAlgebroidStructure> {
        if let Some(h) = self.algebroid.get() {
            return Ok(h);
        }
        let h = match &self.twist_name {
            None => HopfAlgebroidStructure::new(self.realization.clone())?,
            Some(t) => HopfAlgebroidStructure::with_twist(self.realization.clone(), Twist::by_name(t, self.config)?)?,
        };
        Ok(self.algebroid.get_or_init(|| h))
    }

    pub fn poincare(&self) -> EngineResult<&PoincareGenerators> {
        if let Some(g) = self.poincare.get() {
            return Ok(g);
        }
        let g = PoincareGenerators::classical(self.config)?;
        Ok(self.poincare.get_or_init(|| g))
    }

    fn index(&self, index: &Option<String>, pos: usize, name: &str) -> Res<usize> {
        let Some(s) = index else { return fail(pos, format!("'{name}' needs an index")) };
        let mu: usize = s.parse().map_err(|_| ParseError { pos, message: format!("bad index '{s}'") })?;
        if mu >= self.config.dim {
            return fail(pos, format!("index {mu} out of range for dimension {}", self.config.dim));
        }
        Ok(mu)
    }

    fn pair(&self, index: &Option<String>, pos: usize, name: &str) -> Res<(usize, usize)> {
        match index.as_deref().map(str::as_bytes) {
            Some([a, b]) => {
                let (a, b) = ((a - b'0') as usize, (b - b'0') as usize);
                if a >= self.config.dim || b >= self.config.dim {
                    return fail(pos, format!("index out of range for dimension {}", self.config.dim));
                }
                Ok((a, b))
            }
            _ => fail(pos, format!("'{name}' needs two single-digit indices, as in {name}_01")),
        }
    }

    /// Components of the vector named `name`, lower index.
    fn vector(&self, name: &str, pos: usize) -> Res<Vec<PhaseSpaceElement>> {
        let c = self.config;
        let r = &self.realization;
        Ok(match name {
            "x" => (0..c.dim).map(|mu| PhaseSpaceElement::x(c, mu)).collect(),
            "p" => (0..c.dim).map(|mu| PhaseSpaceElement::p(c, mu)).collect(),
            "a" => (0..c.dim).map(|mu| PhaseSpaceElement::a(c, mu)).collect(),
            "xhat" => r.xhat().to_vec(),
            "yhat" => r.yhat().to_vec(),
            "pL" => r.p_l().to_vec(),
            "P" => at(pos, self.poincare())?.p.clone(),
            _ => return fail(pos, format!("unknown vector '{name}'")),
        })
    }

    fn symbol(&self, name: &str, index: &Option<String>, pos: usize) -> Res<PhaseSpaceElement> {
        let c = self.config;
        let r = &self.realization;
        let bare = |v: PhaseSpaceElement| if index.is_some() { fail(pos, format!("'{name}' takes no index")) } else { Ok(v) };
        match name {
            "x" | "p" | "a" | "xhat" | "yhat" | "pL" | "P" => {
                let mu = self.index(index, pos, name)?;
                Ok(self.vector(name, pos)?.swap_remove(mu))
            }
            "M" => {
                let (a, b) = self.pair(index, pos, name)?;
                Ok(at(pos, self.poincare())?.m[a][b].clone())
            }
            "Z" => bare(r.z().clone()),
            "D" => bare(dilatation(c)),
            "l" if c.mode == DeformationMode::Light => bare(PhaseSpaceElement::from_poly(DeformationPoly::symbol(c, 0))),
            _ => fail(pos, format!("unknown symbol '{name}'")),
        }
    }

    pub fn eval(&self, e: &Expr) -> Res<Value> {
        let c = self.config;
        Ok(match e {
            Expr::Num(q) => Value::Element(PhaseSpaceElement::scalar(c, q.clone())),
            Expr::Sym { name, index, pos } => Value::Element(self.symbol(name, index, *pos)?),
            Expr::Dot { left, right, pos } => {
                let (u, v) = (self.vector(left, *pos)?, self.vector(right, *pos)?);
                let s = (0..c.dim).fold(PhaseSpaceElement::zero(c), |acc, al| {
                    &acc + &(&u[al] * &v[al]).scale(&GaussianRational::from_int(c.metric(al)))
                });
                Value::Element(s)
            }
            Expr::Neg(a) => match self.eval(a)? {
                Value::Element(x) => Value::Element(-&x),
                Value::Tensor(t) => Value::Tensor(t.scale(&GaussianRational::from_int(-1))),
            },
            Expr::Add(a, b) | Expr::Sub(a, b) => {
                let sub = matches!(e, Expr::Sub(..));
                match (self.eval(a)?, self.eval(b)?) {
                    (Value::Element(x), Value::Element(y)) => Value::Element(if sub { &x - &y } else { &x + &y }),
                    (Value::Tensor(x), Value::Tensor(y)) if x.rank() == y.rank() => {
                        Value::Tensor(if sub { &x - &y } else { &x + &y })
                    }
                    _ => return fail(position(e), "sum of values of different rank"),
                }
            }
            Expr::Mul(a, b) => match (self.eval(a)?, self.eval(b)?) {
                (Value::Element(x), Value::Element(y)) => Value::Element(&x * &y),
                (Value::Tensor(x), Value::Tensor(y)) if x.rank() == y.rank() => Value::Tensor(&x * &y),
                (Value::Element(s), Value::Tensor(t)) | (Value::Tensor(t), Value::Element(s)) => {
                    match scalar_part(&s) {
                        Some(k) => Value::Tensor(t.mul_poly(&k)),
                        None => return fail(position(e), "only scalars multiply a tensor; build the tensor with 'ox'"),
                    }
                }
                _ => return fail(position(e), "product of tensors of different rank"),
            },
            Expr::Pow(a, k) => match self.eval(a)? {
                Value::Element(x) => Value::Element(x.pow(*k)),
                Value::Tensor(t) => {
                    let mut acc = t.unit_like();
                    for _ in 0..*k {
                        acc = &acc * &t;
                    }
                    Value::Tensor(acc)
                }
            },
            Expr::Commutator(a, b) => match (self.eval(a)?, self.eval(b)?) {
                (Value::Element(x), Value::Element(y)) => Value::Element(x.commutator(&y)),
                (Value::Tensor(x), Value::Tensor(y)) if x.rank() == y.rank() => Value::Tensor(x.commutator(&y)),
                _ => return fail(position(e), "commutator of values of different rank"),
            },
            Expr::Tensor(legs) => {
                if legs.len() > 3 {
                    return fail(position(e), "tensors have rank 2 or 3");
                }
                let mut parts = Vec::new();
                for l in legs {
                    match self.eval(l)? {
                        Value::Element(x) => parts.push(x),
                        Value::Tensor(_) => return fail(position(l), "nested tensor product"),
                    }
                }
                let refs: Vec<&PhaseSpaceElement> = parts.iter().collect();
                Value::Tensor(TensorElement::product_of(&refs))
            }
            Expr::Func { name, arg, pos } => {
                let v = self.eval(arg)?;
                match v {
                    Value::Element(x) => Value::Element(at(*pos, apply(name, &x))?),
                    Value::Tensor(t) => Value::Tensor(at(*pos, apply(name, &t))?),
                }
            }
            Expr::Act(h, f) => {
                let f = self.polynomial(f)?;
                match self.eval(h)? {
                    Value::Element(x) => Value::Element(x.act(&f).to_element()),
                    Value::Tensor(_) => return fail(position(e), "only rank-one elements act on functions"),
                }
            }
        })
    }

    pub fn element(&self, e: &Expr) -> Res<PhaseSpaceElement> {
        match self.eval(e)? {
            Value::Element(x) => Ok(x),
            Value::Tensor(_) => fail(position(e), "expected a rank-one element, got a tensor"),
        }
    }

    /// A function of the commuting coordinates `x_μ` only.
    pub fn polynomial(&self, e: &Expr) -> Res<CommutativePolynomial> {
        let x = self.element(e)?;
        if !x.is_x_only() {
            return fail(position(e), format!("expected a function of the coordinates x_mu, got {x}"));
        }
        Ok(x.eval_at_unit())
    }
}

fn scalar_part(x: &PhaseSpaceElement) -> Option<DeformationPoly> {
    if x.terms().all(|(a, b, _)| a.degree() == 0 && b.degree() == 0) {
        Some(x.constant_part())
    } else {
        None
    }
}

fn apply<T: SeriesAlgebra>(name: &str, t: &T) -> EngineResult<T> {
    match name {
        "exp" => exp(t),
        "log1p" => log1p(t),
        "inv" => inverse(t),
        _ => sqrt1p(t),
    }
}

/// Leftmost source offset of `e`.
pub fn position(e: &Expr) -> usize {
    match e {
        Expr::Num(_) => 0,
        Expr::Sym { pos, .. } | Expr::Dot { pos, .. } | Expr::Func { pos, .. } => *pos,
        Expr::Neg(a) | Expr::Pow(a, _) => position(a),
        Expr::Add(a, _) | Expr::Sub(a, _) | Expr::Mul(a, _) | Expr::Commutator(a, _) | Expr::Act(a, _) => position(a),
        Expr::Tensor(v) => v.first().map(position).unwrap_or(0),
    }
}
