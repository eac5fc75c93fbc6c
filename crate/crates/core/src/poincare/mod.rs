//! κ-Poincaré generators in the classical basis, built inside the natural
//! realization, with their algebra and the closed-form coalgebra.

use rayon::prelude::*;

use crate::algebroid::{AntipodeVariant, HopfAlgebroidStructure};
use crate::error::{Error, Result};
use crate::realization::{unipotent_inverse, Realization, RealizationKind};
use crate::report::{CheckRecord, Report};
use crate::scalars::{GaussianRational, SpaceConfig};
use crate::tensor::{congruent_mod_ideal, Product, TensorElement};
use crate::weyl::{sqrt1p, x_dot_p, CommutativePolynomial, PhaseSpaceElement};

/// `P_μ`, `M_{μν}` and `Z^{−1}` over the natural realization.
#[derive(Clone, Debug)]
pub struct PoincareGenerators {
    pub p: Vec<PhaseSpaceElement>,
    pub m: Vec<Vec<PhaseSpaceElement>>,
    pub z_inv: PhaseSpaceElement,
    pub realization: Realization,
}

fn i() -> GaussianRational {
    GaussianRational::i()
}

fn int(k: i64) -> GaussianRational {
    GaussianRational::from_int(k)
}

/// `D = x^αp_α`.
pub fn dilatation(config: SpaceConfig) -> PhaseSpaceElement {
    x_dot_p(config)
}

impl PoincareGenerators {
    /// `P_μ = p^L_μ − (a_μ/2)(p^L)²Z` and `M_{μν} = i(x̂_μP_ν − x̂_νP_μ)Z`.
    pub fn classical(config: SpaceConfig) -> Result<Self> {
        let r = Realization::natural(config);
        let c = config;
        let n = c.dim;
        let pl = r.p_l();
        let pl2 = (0..n).fold(PhaseSpaceElement::zero(c), |acc, al| &acc + &(&pl[al] * &pl[al]).scale(&int(c.metric(al))));
        let half = GaussianRational::real(crate::scalars::Rational::new(1, 2));
        let p: Vec<PhaseSpaceElement> =
            (0..n).map(|mu| &pl[mu] - &(&pl2 * r.z()).mul_poly(&c.a(mu)).scale(&half)).collect();
        let m: Vec<Vec<PhaseSpaceElement>> = (0..n)
            .map(|mu| {
                (0..n)
                    .map(|nu| {
                        let x = &(&r.xhat()[mu] * &p[nu]) - &(&r.xhat()[nu] * &p[mu]);
                        (&x * r.z()).scale(&i())
                    })
                    .collect()
            })
            .collect();
        let g = PoincareGenerators { p, m, z_inv: r.z_inv().clone(), realization: r };
        g.verify()?;
        Ok(g)
    }

    pub fn config(&self) -> SpaceConfig {
        self.realization.config()
    }

    /// `P^μ = η^{μμ}P_μ`.
    pub fn p_up(&self, mu: usize) -> PhaseSpaceElement {
        self.p[mu].scale(&int(self.config().metric(mu)))
    }

    /// `(aP) = a^αP_α`.
    pub fn a_dot_p(&self) -> PhaseSpaceElement {
        let c = self.config();
        (0..c.dim).fold(PhaseSpaceElement::zero(c), |acc, al| &acc + &self.p[al].mul_poly(&c.a_up(al)))
    }

    /// `Z^{−1} = (aP) + √(1 + a²P²)`.
    pub fn z_inv_from_momenta(&self) -> Result<PhaseSpaceElement> {
        let c = self.config();
        let ap = self.a_dot_p();
        let p2 = (0..c.dim).fold(PhaseSpaceElement::zero(c), |acc, al| &acc + &(&self.p[al] * &self.p_up(al)));
        let a2 = (0..c.dim).fold(PhaseSpaceElement::zero(c), |acc, al| &acc + &PhaseSpaceElement::one(c).mul_poly(&(&c.a(al) * &c.a_up(al))));
        Ok(&ap + &sqrt1p(&(&a2 * &p2))?)
    }

    /// Canonical `X_μ` with `x̂_μ = X_αN_{αμ}` and `N_{αμ} = δ_{αμ}Z^{−1} − a^αP_μ`.
    pub fn canonical_coordinates(&self) -> Result<Vec<PhaseSpaceElement>> {
        let c = self.config();
        let n = c.dim;
        // x̂ = X N with X_α on the left; rows follow the lower index of X
        let nm: Vec<Vec<PhaseSpaceElement>> = (0..n)
            .map(|al| {
                (0..n)
                    .map(|mu| {
                        let d = if al == mu { self.z_inv.clone() } else { PhaseSpaceElement::zero(c) };
                        &d - &self.p[mu].mul_poly(&c.a_up(al))
                    })
                    .collect()
            })
            .collect();
        let inv = unipotent_inverse(&nm)?;
        Ok((0..n)
            .map(|g| (0..n).fold(PhaseSpaceElement::zero(c), |acc, mu| &acc + &(&self.realization.xhat()[mu] * &inv[mu][g])))
            .collect())
    }

    fn verify(&self) -> Result<()> {
        let c = self.config();
        let n = c.dim;
        for mu in 0..n {
            for nu in 0..n {
                if self.m[mu][nu] != -&self.m[nu][mu] {
                    return Err(Error::Consistency(format!("M_{mu}{nu} is not antisymmetric")));
                }
            }
        }
        let r = &self.realization;
        let apl = (0..n).fold(PhaseSpaceElement::one(c), |acc, al| &acc + &r.p_l()[al].mul_poly(&c.a_up(al)));
        if apl != self.z_inv {
            return Err(Error::Consistency(format!("Z^-1 - 1 - (a p^L) = {}", &self.z_inv - &apl)));
        }
        let zp = self.z_inv_from_momenta()?;
        if zp != self.z_inv {
            return Err(Error::Consistency(format!("Z^-1 - (aP) - sqrt(1 + a^2 P^2) = {}", &self.z_inv - &zp)));
        }
        Ok(())
    }

    /// The brackets of `{x̂_μ, M_{μν}, P_μ}` and the canonical form of `x̂`.
    pub fn algebra_check(&self) -> Result<Report> {
        let c = self.config();
        let n = c.dim;
        let eta = |m: usize, k: usize| if m == k { int(c.metric(m)) } else { GaussianRational::zero() };
        let (p, m, xh) = (&self.p, &self.m, self.realization.xhat());
        let mut rep = Report::new(format!("kappa-Poincare algebra ({c})"));
        let idx2: Vec<(usize, usize)> = (0..n).flat_map(|a| (0..n).map(move |b| (a, b))).collect();
        let idx3: Vec<(usize, usize, usize)> = idx2.iter().flat_map(|&(a, b)| (0..n).map(move |l| (a, b, l))).collect();
        rep.check_all("p-p", "[P_mu, P_nu] = 0", idx2.iter().map(|&(a, b)| (format!("mu={a} nu={b}"), p[a].commutator(&p[b]))));
        let mm: Vec<(String, PhaseSpaceElement)> = idx3
            .par_iter()
            .flat_map_iter(|&(mu, nu, l)| {
                (0..n).map(move |rho| {
                    let lhs = m[mu][nu].commutator(&m[l][rho]);
                    let rhs = &(&(&m[mu][rho].scale(&eta(nu, l)) - &m[nu][rho].scale(&eta(mu, l)))
                        - &m[mu][l].scale(&eta(nu, rho)))
                        + &m[nu][l].scale(&eta(mu, rho));
                    (format!("mu={mu} nu={nu} lambda={l} rho={rho}"), &lhs - &rhs)
                })
            })
            .collect();
        rep.check_all(
            "m-m",
            "[M_munu, M_lambdarho] = eta_nulambda M_murho - eta_mulambda M_nurho - eta_nurho M_mulambda + eta_murho M_nulambda",
            mm,
        );
        let mp: Vec<(String, PhaseSpaceElement)> = idx3
            .par_iter()
            .map(|&(mu, nu, l)| {
                let rhs = &p[mu].scale(&eta(nu, l)) - &p[nu].scale(&eta(mu, l));
                (format!("mu={mu} nu={nu} lambda={l}"), &m[mu][nu].commutator(&p[l]) - &rhs)
            })
            .collect();
        rep.check_all("m-p", "[M_munu, P_lambda] = eta_nulambda P_mu - eta_mulambda P_nu", mp);
        let mx: Vec<(String, PhaseSpaceElement)> = idx3
            .par_iter()
            .map(|&(mu, nu, l)| {
                let rhs = &(&xh[mu].scale(&eta(nu, l)) - &xh[nu].scale(&eta(mu, l)))
                    + &(&m[mu][l].mul_poly(&c.a(nu)) - &m[nu][l].mul_poly(&c.a(mu))).scale(&i());
                (format!("mu={mu} nu={nu} lambda={l}"), &m[mu][nu].commutator(&xh[l]) - &rhs)
            })
            .collect();
        rep.check_all(
            "m-xhat",
            "[M_munu, xhat_lambda] = eta_nulambda xhat_mu - eta_mulambda xhat_nu - i a_mu M_nulambda + i a_nu M_mulambda",
            mx,
        );
        rep.check_all(
            "p-xhat",
            "[P_mu, xhat_nu] = -i(eta_munu Z^-1 - a_mu P_nu)",
            idx2.iter().map(|&(mu, nu)| {
                let rhs = (&self.z_inv.scale(&eta(mu, nu)) - &p[nu].mul_poly(&c.a(mu))).scale(&-&i());
                (format!("mu={mu} nu={nu}"), &p[mu].commutator(&xh[nu]) - &rhs)
            }),
        );
        let xs = self.canonical_coordinates()?;
        rep.check_all(
            "canonical-xx",
            "[X_mu, X_nu] = 0",
            idx2.iter().map(|&(a, b)| (format!("mu={a} nu={b}"), xs[a].commutator(&xs[b]))),
        );
        rep.check_all(
            "canonical-px",
            "[P_mu, X_nu] = -i eta_munu",
            idx2.iter().map(|&(mu, nu)| {
                let rhs = PhaseSpaceElement::scalar(c, &eta(mu, nu) * &-&i());
                (format!("mu={mu} nu={nu}"), &p[mu].commutator(&xs[nu]) - &rhs)
            }),
        );
        rep.check_all(
            "xhat-canonical",
            "xhat_mu = X_mu Z^-1 - (aX) P_mu",
            (0..n).map(|mu| {
                let ax = (0..n).fold(PhaseSpaceElement::zero(c), |acc, al| &acc + &xs[al].mul_poly(&c.a_up(al)));
                (format!("mu={mu}"), &xh[mu] - &(&(&xs[mu] * &self.z_inv) - &(&ax * &p[mu])))
            }),
        );
        rep.check_all(
            "xhat-xhat",
            "[xhat_mu, xhat_nu] = i(a_mu xhat_nu - a_nu xhat_mu)",
            idx2.iter().map(|&(mu, nu)| {
                let rhs = (&xh[nu].mul_poly(&c.a(mu)) - &xh[mu].mul_poly(&c.a(nu))).scale(&i());
                (format!("mu={mu} nu={nu}"), &xh[mu].commutator(&xh[nu]) - &rhs)
            }),
        );
        Ok(rep)
    }

    /// `ΔP_μ = P_μ⊗Z^{−1} + 1⊗P_μ − a_μp^L_αZ⊗P^α`.
    pub fn delta_p(&self, mu: usize) -> TensorElement {
        let c = self.config();
        let r = &self.realization;
        let one = PhaseSpaceElement::one(c);
        let mut t = &TensorElement::tensor2(&self.p[mu], &self.z_inv) + &TensorElement::tensor2(&one, &self.p[mu]);
        for al in 0..c.dim {
            let l = (&r.p_l()[al] * r.z()).mul_poly(&c.a(mu));
            t = &t - &TensorElement::tensor2(&l, &self.p_up(al));
        }
        t
    }

    /// `ΔM_{μν} = M_{μν}⊗1 + 1⊗M_{μν} − a_μ(p^L)^αZ⊗M_{αν} + a_ν(p^L)^αZ⊗M_{αμ}`.
    pub fn delta_m(&self, mu: usize, nu: usize) -> TensorElement {
        let c = self.config();
        let r = &self.realization;
        let one = PhaseSpaceElement::one(c);
        let mut t = &TensorElement::tensor2(&self.m[mu][nu], &one) + &TensorElement::tensor2(&one, &self.m[mu][nu]);
        for al in 0..c.dim {
            let plz = (&r.p_l()[al] * r.z()).scale(&int(c.metric(al)));
            t = &t - &TensorElement::tensor2(&plz.mul_poly(&c.a(mu)), &self.m[al][nu]);
            t = &t + &TensorElement::tensor2(&plz.mul_poly(&c.a(nu)), &self.m[al][mu]);
        }
        t
    }

    /// `S(P_μ) = (−P_μ − a_μp^L_αP^α)Z`.
    pub fn antipode_p(&self, mu: usize) -> PhaseSpaceElement {
        let c = self.config();
        let r = &self.realization;
        let s = (0..c.dim).fold(PhaseSpaceElement::zero(c), |acc, al| &acc + &(&r.p_l()[al] * &self.p_up(al)));
        &(-&(&self.p[mu] + &s.mul_poly(&c.a(mu)))) * r.z()
    }

    /// `S(M_{μν}) = −M_{μν} − a_μ(p^L)^αM_{αν} + a_ν(p^L)^αM_{αμ}`.
    pub fn antipode_m(&self, mu: usize, nu: usize) -> PhaseSpaceElement {
        let c = self.config();
        let r = &self.realization;
        let mut t = -&self.m[mu][nu];
        for al in 0..c.dim {
            let pu = r.p_l()[al].scale(&int(c.metric(al)));
            t = &t - &(&pu * &self.m[al][nu]).mul_poly(&c.a(mu));
            t = &t + &(&pu * &self.m[al][mu]).mul_poly(&c.a(nu));
        }
        t
    }

    /// The algebroid coproduct, antipode and counit of `P` and `M` against
    /// the closed forms. Coproducts are compared modulo the ideal at degree
    /// `d`; a note records when the representatives are also equal as
    /// tensors.
    pub fn coalgebra_check(&self, h: &HopfAlgebroidStructure, d: usize) -> Result<Report> {
        let c = self.config();
        if !matches!(h.realization().kind(), RealizationKind::Natural) || h.config() != c {
            return Err(Error::InvalidConfig("the coalgebra check needs the natural realization of the same space".into()));
        }
        let n = c.dim;
        let mut rep = Report::new(format!("kappa-Poincare coalgebra with twist {} ({c})", h.twist().name()));
        let r = h.realization();
        let star = |f: &CommutativePolynomial, g: &CommutativePolynomial| r.star(f, g);
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        let mut cases: Vec<(String, TensorElement, TensorElement)> =
            (0..n).map(|mu| (format!("P_{mu}"), h.coproduct(&self.p[mu]), self.delta_p(mu))).collect();
        let split = cases.len();
        cases.extend(pairs.iter().map(|&(a, b)| (format!("M_{a}{b}"), h.coproduct(&self.m[a][b]), self.delta_m(a, b))));
        let verdicts: Vec<Result<(bool, Option<String>)>> = cases
            .par_iter()
            .map(|(_, got, want)| {
                let raw = got == want;
                let cong = if raw { None } else { congruent_mod_ideal(got, want, d, Product::Star(&star))?.witness_string(&c) };
                Ok((raw, cong))
            })
            .collect();
        for (sl, name, st) in [
            (0..split, "coproduct-p", "Delta P_mu = P_mu ox Z^-1 + 1 ox P_mu - a_mu p^L_alpha Z ox P^alpha"),
            (split..cases.len(), "coproduct-m", "Delta M_munu = M_munu ox 1 + 1 ox M_munu - a_mu (p^L)^alpha Z ox M_alphanu + a_nu (p^L)^alpha Z ox M_alphamu"),
        ] {
            let mut rec = None;
            let mut all_raw = true;
            for k in sl {
                let (raw, wit) = verdicts[k].as_ref().map_err(|e| e.clone())?.clone();
                all_raw &= raw;
                if let Some(w) = wit {
                    rec = Some(CheckRecord::fail(name, st, format!("{} {w}", cases[k].0), "nonzero"));
                    break;
                }
            }
            let rec = match rec {
                Some(f) => f,
                None if all_raw => CheckRecord::pass(name, st).with_note("raw tensor equality also holds"),
                None => CheckRecord::pass(name, st).with_note("representatives differ as tensors"),
            };
            rep.push(rec.with_degree(d));
        }
        let s = |e: &PhaseSpaceElement| h.antipode(e, AntipodeVariant::S);
        rep.check_all(
            "antipode-p",
            "S(P_mu) = (-P_mu - a_mu p^L_alpha P^alpha) Z",
            (0..n).map(|mu| (format!("mu={mu}"), &s(&self.p[mu]) - &self.antipode_p(mu))),
        );
        rep.check_all(
            "antipode-m",
            "S(M_munu) = -M_munu - a_mu (p^L)^alpha M_alphanu + a_nu (p^L)^alpha M_alphamu",
            pairs.iter().map(|&(a, b)| (format!("mu={a} nu={b}"), &s(&self.m[a][b]) - &self.antipode_m(a, b))),
        );
        rep.check_all(
            "counit",
            "epsilon(P_mu) = epsilon(M_munu) = 0",
            (0..n)
                .map(|mu| (format!("P_{mu}"), h.counit(&self.p[mu])))
                .chain(pairs.iter().map(|&(a, b)| (format!("M_{a}{b}"), h.counit(&self.m[a][b]))))
                .collect::<Vec<_>>(),
        );
        Ok(rep)
    }
}

#[cfg(test)]
mod tests;
