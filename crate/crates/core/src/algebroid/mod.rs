//! Hopf algebroid maps over a realization and a twist that induces it:
//! source, target, counit, coproduct, the antipodes and the axiom suite.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::realization::{phi_matrix, unipotent_inverse, Realization};
use crate::report::{CheckRecord, Report};
use crate::scalars::{GaussianRational, MultiIndex, SpaceConfig};
use crate::tensor::{congruent_mod_ideal, IdealGenerators, Product, TensorElement};
use crate::twist::{Twist, TwistKind};
use crate::weyl::{inverse, substitute_momenta, CommutativePolynomial, PhaseSpaceElement};

/// The undeformed antipode: the antiautomorphism with `x ↦ x`, `p ↦ −p`,
/// so `x^αp^β ↦ (−p)^βx^α`, renormal-ordered.
pub fn antipode0(h: &PhaseSpaceElement) -> PhaseSpaceElement {
    let c = h.config();
    let mut acc = PhaseSpaceElement::zero(c);
    for (x, p, coeff) in h.terms() {
        let sign = GaussianRational::from_int(if p.degree() % 2 == 0 { 1 } else { -1 });
        let unit = crate::scalars::DeformationPoly::one(c);
        let pm = PhaseSpaceElement::monomial(c, MultiIndex::ZERO, *p, unit.clone());
        let xm = PhaseSpaceElement::monomial(c, *x, MultiIndex::ZERO, unit);
        acc = &acc + &(&pm * &xm).mul_poly(coeff).scale(&sign);
    }
    acc
}

/// Which antipode [`HopfAlgebroidStructure::antipode`] applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AntipodeVariant {
    S0,
    S,
    SInverse,
}

impl FromStr for AntipodeVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "S0" | "s0" => Ok(AntipodeVariant::S0),
            "S" | "s" => Ok(AntipodeVariant::S),
            "Sinv" | "sinv" | "S-1" | "S_inverse" => Ok(AntipodeVariant::SInverse),
            _ => Err(Error::InvalidConfig(format!("unknown antipode variant '{s}'"))),
        }
    }
}

impl fmt::Display for AntipodeVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AntipodeVariant::S0 => "S0",
            AntipodeVariant::S => "S",
            AntipodeVariant::SInverse => "Sinv",
        })
    }
}

/// The algebroid over `realization`, with maps built from `twist`.
#[derive(Clone, Debug)]
pub struct HopfAlgebroidStructure {
    realization: Realization,
    twist: Twist,
    chi: PhaseSpaceElement,
    chi_inv: PhaseSpaceElement,
    // images of x_μ and p_μ under the subalgebra representative of Δ
    dx: Vec<TensorElement>,
    dp: Vec<TensorElement>,
}

impl HopfAlgebroidStructure {
    /// Uses the closed-form twist paired with the realization when there is
    /// one, and the normal-ordered twist read off its star product otherwise.
    pub fn new(realization: Realization) -> Result<Self> {
        let c = realization.config();
        let twist = match TwistKind::default_for(realization.kind(), c.mode) {
            Some(k) => Twist::builtin(&k, c)?,
            None => Twist::normal(&realization)?,
        };
        Self::with_twist(realization, twist)
    }

    /// `χ^{−1} = m((S₀⊗1)F^{−1})`. The twist must reproduce the
    /// realization's coordinates.
    pub fn with_twist(realization: Realization, twist: Twist) -> Result<Self> {
        let c = realization.config();
        if twist.config() != c {
            return Err(Error::ConfigMismatch(twist.config(), c));
        }
        for mu in 0..c.dim {
            let x = CommutativePolynomial::x(c, mu);
            let d = &twist.source(&x) - &realization.xhat()[mu];
            if !d.is_zero() {
                return Err(Error::Consistency(format!(
                    "twist {} does not induce {}: residual {d} at x_{mu}",
                    twist.name(),
                    realization.name()
                )));
            }
        }
        let chi_inv = twist.f_inv().map_leg(0, antipode0).mult_map();
        let chi = inverse(&chi_inv)?;
        let (dx, dp) = subalgebra_images(&realization, &twist)?;
        Ok(HopfAlgebroidStructure { realization, twist, chi, chi_inv, dx, dp })
    }

    pub fn realization(&self) -> &Realization {
        &self.realization
    }

    pub fn twist(&self) -> &Twist {
        &self.twist
    }

    pub fn config(&self) -> SpaceConfig {
        self.realization.config()
    }

    pub fn chi(&self) -> &PhaseSpaceElement {
        &self.chi
    }

    pub fn chi_inverse(&self) -> &PhaseSpaceElement {
        &self.chi_inv
    }

    /// `α(f) = f̂(x̂)`, cross-checked against `m(F^{−1}(▷⊗1)(f⊗1))`.
    pub fn source(&self, f: &CommutativePolynomial) -> Result<PhaseSpaceElement> {
        let a = self.realization.quantize(f);
        let b = self.twist.source(f);
        if a != b {
            return Err(Error::Consistency(format!("source routes disagree at {f}: residual {}", &a - &b)));
        }
        Ok(a)
    }

    /// `β(f) = f̂^op(ŷ)` on the PBW expansion, cross-checked against
    /// `m(F̃^{−1}(▷⊗1)(f⊗1))`.
    pub fn target(&self, f: &CommutativePolynomial) -> Result<PhaseSpaceElement> {
        let r = &self.realization;
        let a = r.yhat_action().pbw_element_reversed(&r.quantize_pbw(f));
        let b = self.twist.target(f);
        if a != b {
            return Err(Error::Consistency(format!("target routes disagree at {f}: residual {}", &a - &b)));
        }
        Ok(a)
    }

    /// `ε(h) = h ▶ 1`.
    pub fn counit(&self, h: &PhaseSpaceElement) -> CommutativePolynomial {
        h.eval_at_unit()
    }

    /// `Δh = FΔ₀(h)F^{−1}`, a representative modulo the ideal.
    pub fn coproduct(&self, h: &PhaseSpaceElement) -> TensorElement {
        self.twist.coproduct(h)
    }

    /// The representative of `Δh` inside the subalgebra generated by
    /// `x̂_μ⊗1` and `Δp_μ`: `x_γ = (x̂_μ − χ_μ(p))N_{μγ}(p)` is sent to
    /// `(x̂_μ⊗1 − Δχ_μ)ΔN_{μγ}` and extended multiplicatively. It is
    /// congruent to [`Self::coproduct`] modulo the ideal, and it is the
    /// representative on which `m(1⊗S)` is well defined.
    pub fn coproduct_in_subalgebra(&self, h: &PhaseSpaceElement) -> TensorElement {
        let c = self.config();
        let mut acc = TensorElement::zero(c, 2);
        for (x, p, coeff) in h.terms() {
            let mut t = TensorElement::one(c, 2).mul_poly(coeff);
            for mu in 0..c.dim {
                for _ in 0..x.get(mu) {
                    t = &t * &self.dx[mu];
                }
            }
            for mu in 0..c.dim {
                for _ in 0..p.get(mu) {
                    t = &t * &self.dp[mu];
                }
            }
            acc = &acc + &t;
        }
        acc
    }

    pub fn antipode(&self, h: &PhaseSpaceElement, variant: AntipodeVariant) -> PhaseSpaceElement {
        match variant {
            AntipodeVariant::S0 => antipode0(h),
            // S(h) = χS₀(h)χ^{−1}
            AntipodeVariant::S => &(&self.chi * &antipode0(h)) * &self.chi_inv,
            // S^{−1}(h) = S₀(χ)S₀(h)S₀(χ^{−1})
            AntipodeVariant::SInverse => &(&antipode0(&self.chi) * &antipode0(h)) * &antipode0(&self.chi_inv),
        }
    }

    fn s(&self, h: &PhaseSpaceElement) -> PhaseSpaceElement {
        self.antipode(h, AntipodeVariant::S)
    }

    /// The elements the suite is run on: `x̂_μ`, `ŷ_μ`, `p_μ`, `p^L_μ`, `Z`,
    /// and normal-ordered monomials `x^αp^β` of total degree `≤ d`.
    fn probes(&self, d: usize) -> Vec<(String, PhaseSpaceElement)> {
        let r = &self.realization;
        let c = self.config();
        let mut out = Vec::new();
        for mu in 0..c.dim {
            out.push((format!("xhat_{mu}"), r.xhat()[mu].clone()));
            out.push((format!("yhat_{mu}"), r.yhat()[mu].clone()));
            out.push((format!("p_{mu}"), PhaseSpaceElement::p(c, mu)));
            out.push((format!("p^L_{mu}"), r.p_l()[mu].clone()));
        }
        out.push(("Z".into(), r.z().clone()));
        let unit = crate::scalars::DeformationPoly::one(c);
        for k in 2..=d {
            for kx in 0..=k {
                for x in MultiIndex::all_of_degree(c.dim, kx) {
                    for p in MultiIndex::all_of_degree(c.dim, k - kx) {
                        let e = PhaseSpaceElement::monomial(c, x, p, unit.clone());
                        out.push((e.to_string(), e));
                    }
                }
            }
        }
        out
    }

    /// `R̂_μ(α(x^γ)⊗1)Δ(p^β)` for `|γ| + |β| < d`: generators of the
    /// ideal inside the subalgebra.
    fn ideal_probes(&self, d: usize) -> Vec<(String, TensorElement)> {
        let c = self.config();
        let r = &self.realization;
        let one = PhaseSpaceElement::one(c);
        let ideal = IdealGenerators::deformed(r);
        let mut out = Vec::new();
        for k in 0..d {
            for kx in 0..=k {
                for g in MultiIndex::all_of_degree(c.dim, kx) {
                    let xg = r.quantize(&CommutativePolynomial::monomial(c, g));
                    for b in MultiIndex::all_of_degree(c.dim, k - kx) {
                        let pb = PhaseSpaceElement::monomial(c, MultiIndex::ZERO, b, crate::scalars::DeformationPoly::one(c));
                        let right = &TensorElement::tensor2(&xg, &one) * &self.coproduct_in_subalgebra(&pb);
                        for (mu, gen) in ideal.generators().iter().enumerate() {
                            out.push((format!("mu={mu} x^{g:?} p^{b:?}"), gen * &right));
                        }
                    }
                }
            }
        }
        out
    }

    /// The axioms at test degree `d`; see the record names for the list.
    pub fn axiom_suite(&self, d: usize) -> Result<Report> {
        let c = self.config();
        let r = &self.realization;
        let n = c.dim;
        let mut rep = Report::new(format!("Hopf algebroid axioms for {} with twist {} ({c})", r.name(), self.twist.name()));
        let mons = CommutativePolynomial::monomials_up_to(c, d);
        let low = CommutativePolynomial::monomials_up_to(c, d.min(2));

        // the two routes of α and β
        let mut routes = Vec::new();
        for f in &mons {
            if let Err(e) = self.source(f).and_then(|_| self.target(f)) {
                routes.push((f.to_string(), e.to_string()));
                break;
            }
        }
        rep.push(match routes.pop() {
            None => CheckRecord::pass("alpha-beta-routes", "alpha, beta from realization = from twist"),
            Some((w, e)) => CheckRecord::fail("alpha-beta-routes", "alpha, beta from realization = from twist", w, e),
        });
        let alpha = |f: &CommutativePolynomial| r.quantize(f);
        let beta = |f: &CommutativePolynomial| r.yhat_action().pbw_element_reversed(&r.quantize_pbw(f));
        rep.check_all(
            "alpha-homomorphism",
            "alpha(f * g) = alpha(f) alpha(g)",
            low.iter().flat_map(|f| low.iter().map(move |g| (f, g))).map(|(f, g)| {
                (format!("f={f} g={g}"), &alpha(&r.star(f, g)) - &(&alpha(f) * &alpha(g)))
            }),
        );
        rep.check_all(
            "beta-antihomomorphism",
            "beta(f * g) = beta(g) beta(f)",
            low.iter().flat_map(|f| low.iter().map(move |g| (f, g))).map(|(f, g)| {
                (format!("f={f} g={g}"), &beta(&r.star(f, g)) - &(&beta(g) * &beta(f)))
            }),
        );
        rep.check_all(
            "alpha-beta-commute",
            "[alpha(f), beta(g)] = 0",
            low.iter().flat_map(|f| low.iter().map(move |g| (f, g))).map(|(f, g)| {
                (format!("f={f} g={g}"), alpha(f).commutator(&beta(g)))
            }),
        );
        rep.check_all(
            "counit-alpha",
            "epsilon(alpha(f)) = f",
            CommutativePolynomial::monomials_up_to(c, d.max(4)).into_iter().map(|f| {
                let res = &self.counit(&alpha(&f)) - &f;
                (format!("f={f}"), res)
            }),
        );
        rep.check_eq(
            "chi-inverse",
            "chi chi^-1 = 1",
            || "chi".into(),
            &(&self.chi * &self.chi_inv),
            &PhaseSpaceElement::one(c),
        );
        // (i) Sβ = α
        rep.check_all(
            "s-beta",
            "S(beta(f)) = alpha(f)",
            mons.iter().map(|f| (format!("f={f}"), &self.s(&beta(f)) - &alpha(f))),
        );
        rep.check_all(
            "s-yhat",
            "S(yhat_mu) = xhat_mu",
            (0..n).map(|mu| (format!("mu={mu}"), &self.s(&r.yhat()[mu]) - &r.xhat()[mu])),
        );
        let shift = |mu: usize| {
            PhaseSpaceElement::one(c).mul_poly(&c.a(mu)).scale(&(&GaussianRational::i() * &GaussianRational::from_int(1 - n as i64)))
        };
        rep.check_all(
            "s-xhat",
            "S(xhat_mu) = yhat_mu + i a_mu (1 - n)",
            (0..n).map(|mu| (format!("mu={mu}"), &(&self.s(&r.xhat()[mu]) - &r.yhat()[mu]) - &shift(mu))),
        );
        rep.check_all(
            "s-left-momenta",
            "S(p^L_mu) = -p^L_mu Z",
            (0..n).map(|mu| (format!("mu={mu}"), &self.s(&r.p_l()[mu]) + &(&r.p_l()[mu] * r.z()))),
        );
        let probes = self.probes(d);
        let deltas: Vec<TensorElement> = probes.par_iter().map(|(_, h)| self.coproduct(h)).collect();
        // (ii) m(1⊗S)Δ = αε and (iii) m(S⊗1)Δ = βεS, on the subalgebra
        // representative; m(1⊗S) does not vanish on the whole ideal
        let sub: Vec<TensorElement> = probes.par_iter().map(|(_, h)| self.coproduct_in_subalgebra(h)).collect();
        let star = |f: &CommutativePolynomial, g: &CommutativePolynomial| r.star(f, g);
        let mut first: Option<CheckRecord> = None;
        let st = "subalgebra representative = F Delta0(h) F^-1 mod ideal";
        for ((w, h), (dh, sh)) in probes.iter().zip(deltas.iter().zip(&sub)) {
            if h.terms().any(|(x, p, _)| x.degree() + p.degree() > 2) {
                continue;
            }
            if let Some(wit) = congruent_mod_ideal(dh, sh, d.min(2), Product::Star(&star))?.witness_string(&c) {
                first = Some(CheckRecord::fail("coproduct-subalgebra", st, format!("h={w} {wit}"), "nonzero"));
                break;
            }
        }
        rep.push(first.unwrap_or_else(|| CheckRecord::pass("coproduct-subalgebra", st)).with_degree(d.min(2)));
        rep.check_all(
            "antipode-ideal",
            "m(1 ox S)(Rhat_mu (alpha(f) ox 1) Delta(p^beta)) = 0",
            self.ideal_probes(d).into_iter().map(|(w, t)| (w, t.map_leg(1, |e| self.s(e)).mult_map())),
        );
        rep.check_all(
            "antipode-right",
            "m(1 ox S)Delta(h) = alpha(epsilon(h))",
            probes.iter().zip(&sub).map(|((w, h), dh)| {
                let lhs = dh.map_leg(1, |e| self.s(e)).mult_map();
                (format!("h={w}"), &lhs - &alpha(&self.counit(h)))
            }),
        );
        rep.check_all(
            "antipode-left",
            "m(S ox 1)Delta(h) = beta(epsilon(S(h)))",
            probes.iter().zip(&sub).map(|((w, h), dh)| {
                let lhs = dh.map_leg(0, |e| self.s(e)).mult_map();
                (format!("h={w}"), &lhs - &beta(&self.counit(&self.s(h))))
            }),
        );
        // (iv) counit identities
        rep.check_all(
            "counit-left",
            "m(alpha epsilon ox 1)Delta(h) = h",
            probes.iter().zip(&deltas).map(|((w, h), dh)| {
                let lhs = dh.map_leg(0, |e| alpha(&self.counit(e))).mult_map();
                (format!("h={w}"), &lhs - h)
            }),
        );
        rep.check_all(
            "counit-right",
            "m(1 ox beta epsilon)Delta(h) = h",
            probes.iter().zip(&deltas).map(|((w, h), dh)| {
                let lhs = dh.map_leg(1, |e| beta(&self.counit(e))).mult_map();
                (format!("h={w}"), &lhs - h)
            }),
        );
        // (v) coassociativity through the rank-3 action
        let mut coassoc: Option<CheckRecord> = None;
        let st = "(Delta ox 1)Delta(h) = (1 ox Delta)Delta(h) mod ideal";
        let gens: Vec<(String, TensorElement)> = probes
            .iter()
            .zip(&deltas)
            .filter(|((_, h), _)| h.terms().all(|(x, p, _)| x.degree() + p.degree() <= 2))
            .map(|((w, _), dh)| (w.clone(), dh.clone()))
            .collect();
        let ad = d.min(2);
        for (w, dh) in &gens {
            let l = dh.expand_leg(0, |e| self.coproduct(e))?;
            let rr = dh.expand_leg(1, |e| self.coproduct(e))?;
            let res = congruent_mod_ideal(&l, &rr, ad, Product::Star(&star))?;
            if let Some(wit) = res.witness_string(&c) {
                coassoc = Some(CheckRecord::fail("coassociativity", st, format!("h={w} {wit}"), "nonzero"));
                break;
            }
        }
        rep.push(coassoc.unwrap_or_else(|| CheckRecord::pass("coassociativity", st)).with_degree(ad));
        // (vi) S² = Z^{1−n}(·)Z^{n−1}
        let zl = r.z_inv().pow(n as u32 - 1);
        let zr = r.z().pow(n as u32 - 1);
        rep.check_all(
            "s-squared",
            "S^2(h) = Z^(1-n) h Z^(n-1)",
            probes.par_iter().map(|(w, h)| (format!("h={w}"), &self.s(&self.s(h)) - &(&(&zl * h) * &zr))).collect::<Vec<_>>(),
        );
        rep.check_all(
            "s-inverse",
            "S(S^-1(h)) = S^-1(S(h)) = h",
            probes.iter().map(|(w, h)| {
                let si = self.antipode(h, AntipodeVariant::SInverse);
                let res = &(&self.s(&si) - h) + &(&self.antipode(&self.s(h), AntipodeVariant::SInverse) - h);
                (format!("h={w}"), res)
            }),
        );
        Ok(rep)
    }
}

fn subalgebra_images(r: &Realization, t: &Twist) -> Result<(Vec<TensorElement>, Vec<TensorElement>)> {
    let c = r.config();
    let n = c.dim;
    let dp: Vec<TensorElement> = (0..n).map(|mu| t.coproduct(&PhaseSpaceElement::p(c, mu))).collect();
    if let Some(e) = dp.iter().flat_map(|d| d.terms()).find(|(k, _)| k.iter().any(|(x, _)| x.degree() > 0)) {
        return Err(Error::Consistency(format!("momentum coproduct has a coordinate leg: {:?}", e.0)));
    }
    let phi = phi_matrix(r.xhat());
    // x̂_μ = x_β M_{βμ}(p) + χ_μ(p) with M_{βμ} = η_{ββ}φ_{βμ}
    let m: Vec<Vec<PhaseSpaceElement>> = phi
        .iter()
        .enumerate()
        .map(|(b, row)| row.iter().map(|e| e.scale(&GaussianRational::from_int(c.metric(b)))).collect())
        .collect();
    let inv = unipotent_inverse(&m)?;
    let lift = |g: &PhaseSpaceElement| substitute_momenta(g, &dp);
    let mut dx = Vec::with_capacity(n);
    let mut shifted = Vec::with_capacity(n);
    for mu in 0..n {
        let lin = (0..n).fold(PhaseSpaceElement::zero(c), |acc, b| &acc + &(&PhaseSpaceElement::x(c, b) * &m[b][mu]));
        let chi = &r.xhat()[mu] - &lin;
        if !chi.is_p_only() {
            return Err(Error::Consistency(format!("xhat_{mu} is not linear in the coordinates")));
        }
        shifted.push(&TensorElement::tensor2(&r.xhat()[mu], &PhaseSpaceElement::one(c)) - &lift(&chi)?);
    }
    for g in 0..n {
        let mut acc = TensorElement::zero(c, 2);
        for mu in 0..n {
            acc = &acc + &(&shifted[mu] * &lift(&inv[mu][g])?);
        }
        dx.push(acc);
    }
    Ok((dx, dp))
}

#[cfg(test)]
mod tests;
