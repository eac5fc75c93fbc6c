use super::Realization;
use crate::report::{CheckRecord, Report};
use crate::scalars::{GaussianRational, SpaceConfig};
use crate::weyl::{CommutativePolynomial, PhaseSpaceElement};

type Matrix = Vec<Vec<PhaseSpaceElement>>;

fn eta(config: SpaceConfig, mu: usize, nu: usize) -> i64 {
    if mu == nu {
        config.metric(mu)
    } else {
        0
    }
}

fn eta_el(config: SpaceConfig, mu: usize, nu: usize) -> PhaseSpaceElement {
    PhaseSpaceElement::from_int(config, eta(config, mu, nu))
}

fn i_times(e: &PhaseSpaceElement) -> PhaseSpaceElement {
    e.scale(&GaussianRational::i())
}

/// `O^{−1}_{μα} = (η_{μα} + a_μp^L_α)Z`.
pub(crate) fn o_inverse_entries(config: SpaceConfig, z: &PhaseSpaceElement, p_l: &[PhaseSpaceElement]) -> Matrix {
    let n = config.dim;
    (0..n)
        .map(|mu| {
            (0..n)
                .map(|al| &(&eta_el(config, mu, al) + &p_l[al].mul_poly(&config.a(mu))) * z)
                .collect()
        })
        .collect()
}

/// The matrices `O_{μν} = Z^{−1}η_{μν} − a_μp^L_ν` and `O^{−1}_{μν}`.
#[derive(Clone, Debug)]
pub struct OOperator {
    pub entries: Matrix,
    pub inverse_entries: Matrix,
}

impl OOperator {
    pub fn new(r: &Realization) -> Self {
        let c = r.config();
        let n = c.dim;
        let entries = (0..n)
            .map(|mu| {
                (0..n)
                    .map(|nu| &r.z_inv().scale(&GaussianRational::from_int(eta(c, mu, nu))) - &r.p_l()[nu].mul_poly(&c.a(mu)))
                    .collect()
            })
            .collect();
        OOperator { entries, inverse_entries: o_inverse_entries(c, r.z(), r.p_l()) }
    }

    /// `Σ_{αβ} O_{μα}η^{αβ}O^{−1}_{βν}`, which should be `η_{μν}`.
    pub fn product(&self, mu: usize, nu: usize) -> PhaseSpaceElement {
        let c = self.entries[0][0].config();
        let mut acc = PhaseSpaceElement::zero(c);
        for al in 0..c.dim {
            let t = &self.entries[mu][al] * &self.inverse_entries[al][nu];
            acc = if c.metric(al) < 0 { &acc - &t } else { &acc + &t };
        }
        acc
    }

    /// Checks `O·O^{−1} = 1`, returning the first failing index pair.
    pub fn verify_inverse(&self) -> Option<(usize, usize, PhaseSpaceElement)> {
        let c = self.entries[0][0].config();
        for mu in 0..c.dim {
            for nu in 0..c.dim {
                let r = &self.product(mu, nu) - &eta_el(c, mu, nu);
                if !r.is_zero() {
                    return Some((mu, nu, r));
                }
            }
        }
        None
    }
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |a| (0..n).map(move |b| (a, b)))
}

fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |a| (0..n).flat_map(move |b| (0..n).map(move |c| (a, b, c))))
}

/// κ-Minkowski bracket, undeformed limit, shift-operator relations, `p^L`
/// relation and Jacobi identities on `{x̂, p}`.
pub fn validate_realization(r: &Realization) -> Report {
    let c = r.config();
    let n = c.dim;
    let xh = r.xhat();
    let mut rep = Report::new(format!("realization {} ({c})", r.name()));

    rep.check_all(
        "kappa-minkowski",
        "[x̂_μ, x̂_ν] = i(a_μ x̂_ν − a_ν x̂_μ)",
        pairs(n).filter(|(m, v)| m < v).map(|(mu, nu)| {
            let lhs = xh[mu].commutator(&xh[nu]);
            let rhs = i_times(&(&xh[nu].mul_poly(&c.a(mu)) - &xh[mu].mul_poly(&c.a(nu))));
            (format!("μ={mu}, ν={nu}"), &lhs - &rhs)
        }),
    );
    rep.check_all(
        "undeformed-limit",
        "x̂_μ|_{a=0} = x_μ",
        (0..n).map(|mu| (format!("μ={mu}"), &xh[mu].undeformed() - &PhaseSpaceElement::x(c, mu))),
    );
    rep.check_all(
        "phi-momentum-only",
        "[p_μ, x̂_ν] = −iφ_{μν}(p) contains no coordinates",
        pairs(n).map(|(mu, nu)| {
            let k = PhaseSpaceElement::p(c, mu).commutator(&xh[nu]);
            (format!("μ={mu}, ν={nu}"), k.is_p_only())
        }),
    );
    rep.check_all(
        "shift-operator",
        "[Z, x̂_μ] = i a_μ Z",
        (0..n).map(|mu| {
            let lhs = r.z().commutator(&xh[mu]);
            (format!("μ={mu}"), &lhs - &i_times(&r.z().mul_poly(&c.a(mu))))
        }),
    );
    rep.check_all(
        "shift-momenta",
        "[Z, p_μ] = 0",
        (0..n).map(|mu| (format!("μ={mu}"), r.z().commutator(&PhaseSpaceElement::p(c, mu)))),
    );
    rep.check_all(
        "shift-inverse",
        "Z·Z^{−1} = 1",
        std::iter::once(("Z".to_string(), &(r.z() * r.z_inv()) - &PhaseSpaceElement::one(c))),
    );
    rep.check_all(
        "left-momenta",
        "[p^L_μ, x̂_ν] = −iη_{μν}Z^{−1}",
        pairs(n).map(|(mu, nu)| {
            let lhs = r.p_l()[mu].commutator(&xh[nu]);
            let rhs = r.z_inv().scale(&(&GaussianRational::i() * &GaussianRational::from_int(-eta(c, mu, nu))));
            (format!("μ={mu}, ν={nu}"), &lhs - &rhs)
        }),
    );
    rep.check_all(
        "shift-from-left-momenta",
        "Z^{−1} = 1 + a^α p^L_α",
        std::iter::once({
            let mut s = PhaseSpaceElement::one(c);
            for al in 0..n {
                s = &s + &r.p_l()[al].mul_poly(&c.a_up(al));
            }
            ("Z^{-1}".to_string(), &s - r.z_inv())
        }),
    );
    let gens: Vec<(String, PhaseSpaceElement)> = (0..n)
        .map(|m| (format!("xhat_{m}"), xh[m].clone()))
        .chain((0..n).map(|m| (format!("p_{m}"), PhaseSpaceElement::p(c, m))))
        .collect();
    let g = gens.len();
    rep.check_all(
        "jacobi",
        "[[A,B],C] + [[B,C],A] + [[C,A],B] = 0 on {x̂_μ, p_ν}",
        (0..g).flat_map(|i| (i + 1..g).flat_map(move |j| (j + 1..g).map(move |k| (i, j, k)))).map(|(i, j, k)| {
            let (a, b, cc) = (&gens[i].1, &gens[j].1, &gens[k].1);
            let s = &(&a.commutator(b).commutator(cc) + &b.commutator(cc).commutator(a)) + &cc.commutator(a).commutator(b);
            (format!("{}, {}, {}", gens[i].0, gens[j].0, gens[k].0), s)
        }),
    );
    rep
}

/// Identities of the dual basis and the O-operator.
pub fn dual_report(r: &Realization) -> Report {
    let c = r.config();
    let n = c.dim;
    let (xh, yh) = (r.xhat(), r.yhat());
    let o = r.o_operator();
    let mut rep = Report::new(format!("dual basis for {} ({c})", r.name()));
    let a = |mu: usize| c.a(mu);

    match o.verify_inverse() {
        None => rep.push(CheckRecord::pass("o-inverse", "Σ O_{μα}η^{αβ}O^{−1}_{βν} = η_{μν}")),
        Some((mu, nu, res)) => rep.push(CheckRecord::fail(
            "o-inverse",
            "Σ O_{μα}η^{αβ}O^{−1}_{βν} = η_{μν}",
            format!("μ={mu}, ν={nu}"),
            res.to_string(),
        )),
    }
    rep.check_all(
        "o-structure-constants",
        "O_{μν} = η_{μν} + C^α_{ μν} p^L_α",
        pairs(n).map(|(mu, nu)| {
            // C^α_{μν} p^L_α = (ap^L)η_{μν} − a_μ p^L_ν
            let mut apl = PhaseSpaceElement::zero(c);
            for al in 0..n {
                apl = &apl + &r.p_l()[al].mul_poly(&c.a_up(al));
            }
            let rhs = &(&eta_el(c, mu, nu) + &apl.scale(&GaussianRational::from_int(eta(c, mu, nu))))
                - &r.p_l()[nu].mul_poly(&a(mu));
            (format!("μ={mu}, ν={nu}"), &o.entries[mu][nu] - &rhs)
        }),
    );
    rep.check_all(
        "a-contracts-o-inverse",
        "a^α O^{−1}_{μα} = a_μ",
        (0..n).map(|mu| {
            let mut s = PhaseSpaceElement::zero(c);
            for al in 0..n {
                s = &s + &o.inverse_entries[mu][al].mul_poly(&c.a_up(al));
            }
            (format!("μ={mu}"), &s - &PhaseSpaceElement::a(c, mu))
        }),
    );
    rep.check_all(
        "xhat-yhat-commute",
        "[x̂_μ, ŷ_ν] = 0",
        pairs(n).map(|(mu, nu)| (format!("μ={mu}, ν={nu}"), xh[mu].commutator(&yh[nu]))),
    );
    rep.check_all(
        "yhat-bracket",
        "[ŷ_μ, ŷ_ν] = −i(a_μŷ_ν − a_νŷ_μ)",
        pairs(n).filter(|(m, v)| m < v).map(|(mu, nu)| {
            let rhs = i_times(&(&yh[nu].mul_poly(&a(mu)) - &yh[mu].mul_poly(&a(nu))));
            (format!("μ={mu}, ν={nu}"), &yh[mu].commutator(&yh[nu]) + &rhs)
        }),
    );
    rep.check_all(
        "xhat-from-yhat",
        "x̂_μ = ŷ^α O_{μα}",
        (0..n).map(|mu| {
            let mut s = PhaseSpaceElement::zero(c);
            for al in 0..n {
                s = &s + &(&r.yhat_up(al) * &o.entries[mu][al]);
            }
            (format!("μ={mu}"), &s - &xh[mu])
        }),
    );
    rep.check_all(
        "yhat-on-unit",
        "ŷ_μ ▷ 1 = x_μ",
        (0..n).map(|mu| {
            let v = yh[mu].act(&CommutativePolynomial::one(c));
            (format!("μ={mu}"), &v - &CommutativePolynomial::x(c, mu))
        }),
    );
    rep.check_all(
        "o-xhat",
        "[O_{μν}, x̂_λ] = iC_{μλ}^α O_{αν} = i(a_μO_{λν} − a_λO_{μν})",
        triples(n).map(|(mu, nu, la)| {
            let lhs = o.entries[mu][nu].commutator(&xh[la]);
            let rhs = i_times(&(&o.entries[la][nu].mul_poly(&a(mu)) - &o.entries[mu][nu].mul_poly(&a(la))));
            (format!("μ={mu}, ν={nu}, λ={la}"), &lhs - &rhs)
        }),
    );
    rep.check_all(
        "o-commute",
        "[O_{μν}, O_{λρ}] = 0",
        pairs(n).flat_map(|(mu, nu)| pairs(n).map(move |(la, rho)| (mu, nu, la, rho))).map(|(mu, nu, la, rho)| {
            (format!("μ={mu}, ν={nu}, λ={la}, ρ={rho}"), o.entries[mu][nu].commutator(&o.entries[la][rho]))
        }),
    );
    rep.check_all(
        "o-inverse-xhat",
        "[O^{−1}_{μν}, x̂_λ] = i(−a_μη_{λν} + a_λO^{−1}_{μν})",
        triples(n).map(|(mu, nu, la)| {
            let lhs = o.inverse_entries[mu][nu].commutator(&xh[la]);
            let rhs = i_times(&(&o.inverse_entries[mu][nu].mul_poly(&a(la)) - &eta_el(c, la, nu).mul_poly(&a(mu))));
            (format!("μ={mu}, ν={nu}, λ={la}"), &lhs - &rhs)
        }),
    );
    rep.check_all(
        "o-yhat",
        "[O_{μν}, ŷ_λ] = i(a_μη_{λν} − a_λO_{μν})",
        triples(n).map(|(mu, nu, la)| {
            let lhs = o.entries[mu][nu].commutator(&yh[la]);
            let rhs = i_times(&(&eta_el(c, la, nu).mul_poly(&a(mu)) - &o.entries[mu][nu].mul_poly(&a(la))));
            (format!("μ={mu}, ν={nu}, λ={la}"), &lhs - &rhs)
        }),
    );
    rep.check_all(
        "o-inverse-yhat",
        "[O^{−1}_{μν}, ŷ_λ] = i(−a_μO^{−1}_{λν} + a_λO^{−1}_{μν})",
        triples(n).map(|(mu, nu, la)| {
            let lhs = o.inverse_entries[mu][nu].commutator(&yh[la]);
            let rhs = i_times(
                &(&o.inverse_entries[mu][nu].mul_poly(&a(la)) - &o.inverse_entries[la][nu].mul_poly(&a(mu))),
            );
            (format!("μ={mu}, ν={nu}, λ={la}"), &lhs - &rhs)
        }),
    );
    rep
}
