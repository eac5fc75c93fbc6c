use rayon::prelude::*;

use super::{realization_from_twist, Twist};
use crate::error::Result;
use crate::realization::{phi_matrix, Realization};
use crate::report::{CheckRecord, Report};
use crate::scalars::{GaussianRational, MultiIndex, SpaceConfig};
use crate::tensor::{congruent_mod_ideal, coproduct_lie_leg, IdealGenerators, Product, TensorElement};
use crate::weyl::{exp, CommutativePolynomial};

/// Which cocycle condition [`cocycle_check`] tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CocycleSense {
    /// `(F⊗1)(Δ₀⊗1)F = (1⊗F)(1⊗Δ₀)F` as an exact rank-3 identity, with
    /// `Δ₀` the primitive coproduct of `U(igl(n)⋉T)`.
    HopfStrict,
    /// Associativity of the induced star product on monomials.
    Algebroid,
}

type Star<'a> = &'a (dyn Fn(&CommutativePolynomial, &CommutativePolynomial) -> CommutativePolynomial + Sync);

fn monomials(c: SpaceConfig, d: usize) -> Vec<CommutativePolynomial> {
    MultiIndex::all_up_to_degree(c.dim, d).into_iter().map(|m| CommutativePolynomial::monomial(c, m)).collect()
}

/// `(f⋆g)⋆h = f⋆(g⋆h)` for monomials of degree `≤ d` in every slot; the
/// witness is the first failing triple in enumeration order.
pub fn associativity_check(name: &str, c: SpaceConfig, star: Star<'_>, d: usize) -> CheckRecord {
    let mons = monomials(c, d);
    let m = mons.len();
    let triples: Vec<(usize, usize, usize)> =
        (0..m).flat_map(|i| (0..m).flat_map(move |j| (0..m).map(move |k| (i, j, k)))).collect();
    let found = triples.par_iter().find_first(|&&(i, j, k)| {
        let (f, g, h) = (&mons[i], &mons[j], &mons[k]);
        star(&star(f, g), h) != star(f, &star(g, h))
    });
    let st = "(f * g) * h = f * (g * h)";
    match found {
        None => CheckRecord::pass(name, st).with_degree(d),
        Some(&(i, j, k)) => {
            let (f, g, h) = (&mons[i], &mons[j], &mons[k]);
            let res = &star(&star(f, g), h) - &star(f, &star(g, h));
            CheckRecord::fail(name, st, format!("f={f} g={g} h={h}"), res.to_string()).with_degree(d)
        }
    }
}

/// Cocycle condition for `t`, in the chosen sense.
pub fn cocycle_check(t: &Twist, sense: CocycleSense, d: usize) -> Result<Report> {
    let c = t.config();
    let mut rep = Report::new(format!("cocycle for twist {} ({c})", t.name()));
    match sense {
        CocycleSense::HopfStrict => {
            // (Δ⊗1)e^f = e^{(Δ⊗1)f}; the exponent legs are Lie elements or
            // momentum functions, where Δ is unambiguous on the Weyl image
            let f = t.f();
            let st = "(F ox 1)(Delta0 ox 1)F = (1 ox F)(1 ox Delta0)F";
            let legs = |k: usize| coproduct_lie_leg(t.exponent(), k).and_then(|e| exp(&e));
            match (legs(0), legs(1)) {
                (Ok(l), Ok(r)) => {
                    let res = &(&f.extend_unit(0)? * &l) - &(&f.extend_unit(1)? * &r);
                    rep.push(if res.is_zero() {
                        CheckRecord::pass("cocycle-strict", st)
                    } else {
                        CheckRecord::fail("cocycle-strict", st, format!("order {}", c.order), res.to_string())
                    });
                }
                (Err(e), _) | (_, Err(e)) => rep.push(
                    CheckRecord::fail("cocycle-strict", st, "twist exponent", e.to_string())
                        .with_note("exponent is not in U(igl(n) x T) tensor square"),
                ),
            }
        }
        CocycleSense::Algebroid => {
            let star = |f: &CommutativePolynomial, g: &CommutativePolynomial| t.star(f, g);
            rep.push(associativity_check("cocycle-algebroid", c, &star, d));
        }
    }
    Ok(rep)
}

/// The two star-product routes, the twist normalization and the
/// twist-to-realization round trip against the catalog realization `r`.
pub fn star_routes_check(t: &Twist, r: &Realization, d: usize) -> Result<Report> {
    let c = t.config();
    let mut rep = Report::new(format!("twist {} against realization {} ({c})", t.name(), r.name()));
    rep.check_eq("twist-inverse", "F F^-1 = 1 ox 1", || "F".into(), &(t.f() * t.f_inv()), &TensorElement::one(c, 2));
    rep.check_eq(
        "twist-undeformed",
        "F -> 1 ox 1 as a -> 0",
        || "F".into(),
        &t.f().undeformed(),
        &TensorElement::one(c, 2),
    );
    let mons = monomials(c, d);
    let m = mons.len();
    let pairs: Vec<(usize, usize)> = (0..m).flat_map(|i| (0..m).map(move |j| (i, j))).collect();
    let bad = pairs.par_iter().find_first(|&&(i, j)| t.star(&mons[i], &mons[j]) != r.star(&mons[i], &mons[j]));
    let st = "m(F^-1 |> (f ox g)) = fhat(xhat) |> g";
    rep.push(match bad {
        None => CheckRecord::pass("star-routes", st).with_degree(d),
        Some(&(i, j)) => CheckRecord::fail(
            "star-routes",
            st,
            format!("f={} g={}", mons[i], mons[j]),
            (&t.star(&mons[i], &mons[j]) - &r.star(&mons[i], &mons[j])).to_string(),
        )
        .with_degree(d),
    });
    let one = CommutativePolynomial::one(c);
    rep.check_all(
        "twist-normalization",
        "f * 1 = 1 * f = f",
        monomials(c, d.max(4)).into_iter().map(|f| {
            let res = &(&t.star(&f, &one) - &f) + &(&t.star(&one, &f) - &f);
            (format!("f={f}"), res)
        }),
    );
    match realization_from_twist(t) {
        Err(e) => rep.push(CheckRecord::fail("twist-realization", "realization from twist", "", e.to_string())),
        Ok(tr) => {
            rep.check_all(
                "twist-xhat",
                "m(F^-1 (|> ox 1)(x_mu ox 1)) = xhat_mu",
                (0..c.dim).map(|mu| (format!("mu={mu}"), &tr.xhat()[mu] - &r.xhat()[mu])),
            );
            rep.check_all(
                "twist-yhat",
                "m(Ftilde^-1 (|> ox 1)(x_mu ox 1)) = yhat_mu",
                (0..c.dim).map(|mu| (format!("mu={mu}"), &t.target(&CommutativePolynomial::x(c, mu)) - &r.yhat()[mu])),
            );
            rep.check_eq("twist-shift", "Z from the twist", || "Z".into(), tr.z(), r.z());
            rep.check_all(
                "twist-left-momenta",
                "p^L from the twist",
                (0..c.dim).map(|mu| (format!("mu={mu}"), &tr.p_l()[mu] - &r.p_l()[mu])),
            );
        }
    }
    let low = monomials(c, d.min(2));
    rep.check_all(
        "source-routes",
        "alpha(f) from the twist = quantize(f)",
        low.iter().map(|f| (format!("f={f}"), &t.source(f) - &r.quantize(f))),
    );
    rep.check_all(
        "target-routes",
        "beta(f) from the twist = fhat^op(yhat)",
        low.iter().map(|f| {
            let b = r.yhat_action().pbw_element_reversed(&r.quantize_pbw(f));
            (format!("f={f}"), &t.target(f) - &b)
        }),
    );
    Ok(rep)
}

/// `f ⋆ g = g ⋆̃ f` on monomial pairs of degree `≤ d`, with `⋆̃` from the `ŷ`
/// action; when a twist is given the `F̃^{−1}` route is compared too.
pub fn dual_star_check(r: &Realization, t: Option<&Twist>, d: usize) -> Report {
    let c = r.config();
    let mut rep = Report::new(format!("dual star product for {} ({c})", r.name()));
    let mons = monomials(c, d);
    let pairs: Vec<(&CommutativePolynomial, &CommutativePolynomial)> =
        mons.iter().flat_map(|f| mons.iter().map(move |g| (f, g))).collect();
    let res: Vec<(String, CommutativePolynomial)> = pairs
        .par_iter()
        .map(|(f, g)| (format!("f={f} g={g}"), &r.star(f, g) - &r.dual_star(g, f)))
        .collect();
    rep.check_all("dual-star", "f * g = g *~ f", res);
    if let Some(t) = t {
        let res: Vec<(String, CommutativePolynomial)> = pairs
            .par_iter()
            .map(|(f, g)| (format!("f={f} g={g}"), &t.dual_star(g, f) - &r.dual_star(g, f)))
            .collect();
        rep.check_all("dual-star-twist", "m(Ftilde^-1 |> (g ox f)) = g *~ f", res);
    }
    rep.records.iter_mut().for_each(|x| x.degree = Some(d));
    rep
}

/// `R_μ = F(R₀)_μF^{−1}` lies in the ideal and `R̂_μ ≡ R^αΔ(φ_{αμ})`,
/// both modulo the ideal at degree `d`.
pub fn ideal_transport_check(t: &Twist, r: &Realization, d: usize) -> Result<Report> {
    let c = t.config();
    let mut rep = Report::new(format!("ideal transport by twist {} ({c})", t.name()));
    let star = |f: &CommutativePolynomial, g: &CommutativePolynomial| r.star(f, g);
    let r0 = IdealGenerators::undeformed(c);
    let rh = IdealGenerators::deformed(r);
    let rs: Vec<TensorElement> = r0.generators().iter().map(|g| &(t.f() * g) * t.f_inv()).collect();
    let zero = TensorElement::zero(c, 2);
    let mut first: Option<CheckRecord> = None;
    for (mu, g) in rs.iter().enumerate() {
        let res = congruent_mod_ideal(g, &zero, d, Product::Star(&star))?;
        if let Some(w) = res.witness_string(&c) {
            first = Some(CheckRecord::fail("twisted-r0", "F (R0)_mu F^-1 = 0 mod ideal", format!("mu={mu} {w}"), "nonzero"));
            break;
        }
    }
    rep.push(first.unwrap_or_else(|| CheckRecord::pass("twisted-r0", "F (R0)_mu F^-1 = 0 mod ideal")).with_degree(d));
    let phi = phi_matrix(r.xhat());
    let mut first: Option<CheckRecord> = None;
    for mu in 0..c.dim {
        let mut rhs = TensorElement::zero(c, 2);
        for al in 0..c.dim {
            let up = rs[al].scale(&GaussianRational::from_int(c.metric(al)));
            rhs = &rhs + &(&up * &t.coproduct(&phi[al][mu]));
        }
        let res = congruent_mod_ideal(&rh.generators()[mu], &rhs, d, Product::Star(&star))?;
        if let Some(w) = res.witness_string(&c) {
            first = Some(CheckRecord::fail("rhat-from-r", "Rhat_mu = R^alpha Delta(phi_alpha_mu)", format!("mu={mu} {w}"), "nonzero"));
            break;
        }
    }
    rep.push(
        first.unwrap_or_else(|| CheckRecord::pass("rhat-from-r", "Rhat_mu = R^alpha Delta(phi_alpha_mu)")).with_degree(d),
    );
    Ok(rep)
}
