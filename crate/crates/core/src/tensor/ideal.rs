use rayon::prelude::*;

use super::{Product, TensorElement};
use crate::error::Result;
use crate::realization::Realization;
use crate::report::{CheckRecord, Report};
use crate::scalars::{GaussianRational, MultiIndex, SpaceConfig};
use crate::weyl::{CommutativePolynomial, PhaseSpaceElement};

/// Outcome of [`congruent_mod_ideal`]. The verdict only covers monomials up
/// to `degree` in every slot.
#[derive(Clone, Debug)]
pub struct Congruence {
    pub holds: bool,
    pub degree: usize,
    /// First basis tuple (in enumeration order) with a nonzero residual.
    pub witness: Option<(Vec<MultiIndex>, CommutativePolynomial)>,
}

impl Congruence {
    pub fn witness_string(&self, config: &SpaceConfig) -> Option<String> {
        self.witness.as_ref().map(|(ms, r)| {
            let slots: Vec<String> =
                ms.iter().map(|m| CommutativePolynomial::monomial(*config, *m).to_string()).collect();
            format!("({}) -> {}", slots.join(", "), r)
        })
    }
}

fn basis_tuples(n: usize, rank: usize, d: usize) -> Vec<Vec<MultiIndex>> {
    let mons = MultiIndex::all_up_to_degree(n, d);
    let mut out: Vec<Vec<MultiIndex>> = vec![vec![]];
    for _ in 0..rank {
        out = out
            .into_iter()
            .flat_map(|t| {
                mons.iter().map(move |m| {
                    let mut t = t.clone();
                    t.push(*m);
                    t
                })
            })
            .collect();
    }
    out
}

/// Decides `T ≡ U` by checking that `m∘▶` of the difference kills every
/// tuple of monomials of degree `≤ d` per slot.
pub fn congruent_mod_ideal(t: &TensorElement, u: &TensorElement, d: usize, product: Product<'_>) -> Result<Congruence> {
    let diff = t.checked_sub(u)?;
    let config = t.config();
    if diff.is_zero() {
        return Ok(Congruence { holds: true, degree: d, witness: None });
    }
    let tuples = basis_tuples(config.dim, t.rank(), d);
    let found = tuples.par_iter().map(|ms| {
        let fs: Vec<CommutativePolynomial> = ms.iter().map(|m| CommutativePolynomial::monomial(config, *m)).collect();
        let refs: Vec<&CommutativePolynomial> = fs.iter().collect();
        diff.act_pair(&refs, product).map(|r| (ms.clone(), r))
    });
    let first = found
        .filter_map(|r| match r {
            Ok((_, ref v)) if v.is_zero() => None,
            other => Some(other),
        })
        .find_first(|_| true);
    match first {
        None => Ok(Congruence { holds: true, degree: d, witness: None }),
        Some(Err(e)) => Err(e),
        Some(Ok(w)) => Ok(Congruence { holds: false, degree: d, witness: Some(w) }),
    }
}

/// `Δp^L_μ = p^L_μ⊗Z^{−1} + 1⊗p^L_μ`.
pub fn delta_p_left(r: &Realization, mu: usize) -> TensorElement {
    let one = PhaseSpaceElement::one(r.config());
    &TensorElement::tensor2(&r.p_l()[mu], r.z_inv()) + &TensorElement::tensor2(&one, &r.p_l()[mu])
}

/// Generators of the ideal that coproduct representatives are compared
/// modulo: `R̂_μ = x̂_μ⊗1 − O_{μα}⊗x̂^α`, or `(R₀)_μ = x_μ⊗1 − 1⊗x_μ`.
/// The deformed case also carries `Q̂_μ = ŷ_μ⊗1 − 1⊗x̂_μ`.
#[derive(Clone, Debug)]
pub struct IdealGenerators {
    config: SpaceConfig,
    generators: Vec<TensorElement>,
    q_hat: Vec<TensorElement>,
}

impl IdealGenerators {
    pub fn undeformed(config: SpaceConfig) -> Self {
        let one = PhaseSpaceElement::one(config);
        let generators = (0..config.dim)
            .map(|mu| {
                let x = PhaseSpaceElement::x(config, mu);
                &TensorElement::tensor2(&x, &one) - &TensorElement::tensor2(&one, &x)
            })
            .collect();
        IdealGenerators { config, generators, q_hat: Vec::new() }
    }

    pub fn deformed(r: &Realization) -> Self {
        let config = r.config();
        let one = PhaseSpaceElement::one(config);
        let o = r.o_operator();
        let generators = (0..config.dim)
            .map(|mu| {
                let mut t = TensorElement::tensor2(&r.xhat()[mu], &one);
                for al in 0..config.dim {
                    t = &t - &TensorElement::tensor2(&o.entries[mu][al], &r.xhat_up(al));
                }
                t
            })
            .collect();
        let q_hat = (0..config.dim)
            .map(|mu| &TensorElement::tensor2(&r.yhat()[mu], &one) - &TensorElement::tensor2(&one, &r.xhat()[mu]))
            .collect();
        IdealGenerators { config, generators, q_hat }
    }

    pub fn config(&self) -> SpaceConfig {
        self.config
    }

    pub fn generators(&self) -> &[TensorElement] {
        &self.generators
    }

    pub fn q_hat(&self) -> &[TensorElement] {
        &self.q_hat
    }

    pub fn get(&self, mu: usize) -> Result<&TensorElement> {
        self.config.check_index(mu)?;
        Ok(&self.generators[mu])
    }

    /// `i(a_μ G_ν − a_ν G_μ)`.
    fn structure(&self, gens: &[TensorElement], mu: usize, nu: usize) -> TensorElement {
        let c = self.config;
        (&gens[nu].mul_poly(&c.a(mu)) - &gens[mu].mul_poly(&c.a(nu))).scale(&GaussianRational::i())
    }

    /// Annihilation on monomials of degree `≤ d` and the bracket relations.
    /// Pass `None` only for the undeformed generators.
    pub fn report(&self, r: Option<&Realization>, d: usize) -> Result<Report> {
        let c = self.config;
        let n = c.dim;
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
        let mut rep = Report::new(match r {
            Some(r) => format!("ideal generators for {} ({c})", r.name()),
            None => format!("undeformed ideal generators ({c})"),
        });
        let star_fn = r.map(|r| move |f: &CommutativePolynomial, g: &CommutativePolynomial| r.star(f, g));
        let product = match &star_fn {
            Some(s) => Product::Star(s),
            None => Product::Pointwise,
        };
        rep.push(annihilation(&self.generators, "annihilation", "m(R_mu |> (f ox g)) = 0", d, product)?);
        let Some(r) = r else {
            rep.check_all(
                "r0-commute",
                "[(R0)_mu, (R0)_nu] = 0",
                pairs.iter().map(|&(m, v)| (format!("mu={m} nu={v}"), self.generators[m].commutator(&self.generators[v]))),
            );
            return Ok(rep);
        };
        let gens = &self.generators;
        let q = &self.q_hat;
        let one = PhaseSpaceElement::one(c);
        let xhat1: Vec<TensorElement> = r.xhat().iter().map(|x| TensorElement::tensor2(x, &one)).collect();
        let dpl: Vec<TensorElement> = (0..n).map(|mu| delta_p_left(r, mu)).collect();
        let o = r.o_operator();
        let ox: Vec<TensorElement> = (0..n)
            .map(|mu| {
                let mut t = TensorElement::zero(c, 2);
                for al in 0..n {
                    t = &t + &TensorElement::tensor2(&o.entries[mu][al], &r.xhat_up(al));
                }
                t
            })
            .collect();
        let w = |m: usize, v: usize| format!("mu={m} nu={v}");
        rep.check_all(
            "r-bracket",
            "[R_mu, R_nu] = i(a_mu R_nu - a_nu R_mu)",
            pairs.iter().map(|&(m, v)| (w(m, v), &gens[m].commutator(&gens[v]) - &self.structure(gens, m, v))),
        );
        rep.check_all(
            "xhat-r",
            "[xhat_mu ox 1, R_nu] = i(a_mu R_nu - a_nu R_mu)",
            pairs.iter().map(|&(m, v)| (w(m, v), &xhat1[m].commutator(&gens[v]) - &self.structure(gens, m, v))),
        );
        rep.check_all(
            "o-r",
            "[O_mu^alpha ox xhat_alpha, R_nu] = 0",
            pairs.iter().map(|&(m, v)| (w(m, v), ox[m].commutator(&gens[v]))),
        );
        rep.check_all(
            "delta-pl-r",
            "[Delta p^L_mu, R_nu] = 0",
            pairs.iter().map(|&(m, v)| (w(m, v), dpl[m].commutator(&gens[v]))),
        );
        rep.check_all(
            "xhat-delta-pl",
            "[xhat_mu ox 1, Delta p^L_nu] = i eta_mu_nu Z^-1 ox Z^-1",
            pairs.iter().map(|&(m, v)| {
                let mut rhs = TensorElement::zero(c, 2);
                if m == v {
                    rhs = TensorElement::tensor2(r.z_inv(), r.z_inv())
                        .scale(&(&GaussianRational::i() * &GaussianRational::from_int(c.metric(m))));
                }
                (w(m, v), &xhat1[m].commutator(&dpl[v]) - &rhs)
            }),
        );
        rep.check_all(
            "r-q-commute",
            "[R_mu, Q_nu] = 0",
            pairs.iter().map(|&(m, v)| (w(m, v), gens[m].commutator(&q[v]))),
        );
        rep.check_all(
            "q-bracket",
            "[Q_mu, Q_nu] = i(-a_mu Q_nu + a_nu Q_mu)",
            pairs.iter().map(|&(m, v)| (w(m, v), &q[m].commutator(&q[v]) + &self.structure(q, m, v))),
        );
        rep.check_all(
            "q-delta-pl",
            "[Q_mu, Delta p^L_nu] = 0",
            pairs.iter().map(|&(m, v)| (w(m, v), q[m].commutator(&dpl[v]))),
        );
        rep.check_all(
            "q-xhat",
            "[Q_mu, xhat_nu ox 1] = 0",
            pairs.iter().map(|&(m, v)| (w(m, v), q[m].commutator(&xhat1[v]))),
        );
        // Q_mu = sum_alpha R_alpha (O^-1_{mu alpha} eta^{alpha alpha} ox 1)
        rep.check_all(
            "q-from-r",
            "Q_mu = R_alpha ((O^-1)_mu^alpha ox 1)",
            (0..n).map(|m| {
                let mut t = TensorElement::zero(c, 2);
                for al in 0..n {
                    let f = o.inverse_entries[m][al].scale(&GaussianRational::from_int(c.metric(al)));
                    t = &t + &(&gens[al] * &TensorElement::tensor2(&f, &one));
                }
                (format!("mu={m}"), &t - &q[m])
            }),
        );
        rep.push(annihilation(q, "q-annihilation", "m(Q_mu |> (f ox g)) = 0", d, product)?);
        Ok(rep)
    }
}

fn annihilation(gens: &[TensorElement], name: &str, st: &str, d: usize, product: Product<'_>) -> Result<CheckRecord> {
    let zero = TensorElement::zero(gens[0].config(), 2);
    for (mu, g) in gens.iter().enumerate() {
        let res = congruent_mod_ideal(g, &zero, d, product)?;
        if let Some(w) = res.witness_string(&g.config()) {
            return Ok(CheckRecord::fail(name, st, format!("mu={mu} {w}"), "nonzero").with_degree(d));
        }
    }
    Ok(CheckRecord::pass(name, st).with_degree(d))
}
