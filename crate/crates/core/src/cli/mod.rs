//! The `kappa` command line: an expression language over the engine, a
//! command dispatcher and the check suites.

pub mod eval;
pub mod output;
pub mod parse;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::algebroid::{AntipodeVariant, HopfAlgebroidStructure};
use crate::error::Error;
use crate::realization::{dual_report, validate_realization, Realization};
use crate::report::Report;
use crate::scalars::SpaceConfig;
use crate::tensor::IdealGenerators;
use crate::terms::Alphabet;
use crate::twist::{
    cocycle_check, dual_star_check, ideal_transport_check, solve_twist_exponent, star_routes_check, CocycleSense, Twist,
    TwistKind,
};
pub use eval::{Context, Value};
use output::Format;
pub use parse::{parse_expression, Expr, ParseError};

#[derive(Parser, Debug)]
#[command(name = "kappa", version, about = "Exact computations in the kappa-deformed phase space")]
pub struct Cli {
    #[command(flatten)]
    pub opts: Opts,
    /// Run newline-separated commands from a file; `#` starts a comment line.
    #[arg(long, global = true)]
    pub script: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Option<Command>,
}

#[derive(Args, Debug, Clone)]
pub struct Opts {
    /// Spacetime dimension n.
    #[arg(long, default_value_t = 4, global = true)]
    pub dim: usize,
    /// Truncation order K in the deformation symbols.
    #[arg(long, default_value_t = 3, global = true)]
    pub order: usize,
    /// Deformation vector: time, space, light or generic.
    #[arg(long, default_value = "time", global = true)]
    pub mode: String,
    /// left, right, natural or lambda:<q>.
    #[arg(long, default_value = "left", global = true)]
    pub realization: String,
    /// Twist name; defaults to the realization's partner.
    #[arg(long, global = true)]
    pub twist: Option<String>,
    /// Test degree for the check suites.
    #[arg(long, default_value_t = 3, global = true)]
    pub degree: usize,
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    Realization,
    Algebroid,
    Cocycle,
    Poincare,
    All,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Normal-ordered form of an expression.
    NormalOrder { expr: String },
    /// f * g for functions of the coordinates.
    Star { f: String, g: String },
    /// Twisted coproduct representative F Delta0(h) F^-1.
    Coproduct { expr: String },
    /// Antipode of the algebroid, or the undeformed S0.
    Antipode {
        expr: String,
        /// S0, S or Sinv.
        #[arg(long, default_value = "S")]
        variant: String,
    },
    /// epsilon(h) = h |> 1.
    Counit { expr: String },
    /// Ordered xhat monomials of the quantized function.
    Quantize { f: String },
    /// alpha(f), both routes compared.
    Source { f: String },
    /// beta(f), both routes compared.
    Target { f: String },
    /// Run a check suite; exits 1 when any check fails.
    Check { suite: Suite },
    /// Inspect builtin twists.
    Twist {
        #[command(subcommand)]
        action: TwistAction,
    },
    /// First-order twist exponent family in the classical basis.
    SolveF1,
}

#[derive(Subcommand, Debug)]
pub enum TwistAction {
    /// Name, partner realization and exponent of a twist.
    Show { name: Option<String> },
}

/// Output text and process exit code.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub code: i32,
    /// The text is a diagnostic rather than a result.
    pub stderr: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, code: 0, stderr: false }
    }

    fn checks(text: String, passed: bool) -> Self {
        Outcome { text, code: if passed { 0 } else { 1 }, stderr: false }
    }

    fn error(text: impl Into<String>) -> Self {
        Outcome { text: format!("error: {}", text.into()), code: 2, stderr: true }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return Outcome { text: e.to_string().trim_end().to_string(), code, stderr: code == 2 };
        }
    };
    if let Some(path) = &cli.script {
        if cli.command.is_some() {
            return Outcome::error("--script takes no command");
        }
        return run_script(path);
    }
    match &cli.command {
        None => Outcome::error("no command given; see --help"),
        Some(cmd) => match dispatch(&cli.opts, cmd) {
            Ok(o) => o,
            Err(e) => Outcome::error(e),
        },
    }
}

fn run_script(path: &PathBuf) -> Outcome {
    let src = match std::fs::read_to_string(path) {
        Ok(s) => s,
        Err(e) => return Outcome::error(format!("cannot read {}: {e}", path.display())),
    };
    let mut text = String::new();
    let mut code = 0;
    for line in src.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#')) {
        let words = match shell_words::split(line) {
            Ok(w) => w,
            Err(e) => {
                text.push_str(&format!("$ kappa {line}\nerror: {e}\n"));
                code = code.max(2);
                continue;
            }
        };
        if words.iter().any(|w| w == "--script") {
            text.push_str(&format!("$ kappa {line}\nerror: scripts do not nest\n"));
            code = code.max(2);
            continue;
        }
        let o = run(std::iter::once("kappa".to_string()).chain(words));
        text.push_str(&format!("$ kappa {line}\n{}\n", o.text));
        code = code.max(o.code);
    }
    // a transcript is a result even when some lines failed
    Outcome { text: text.trim_end().to_string(), code, stderr: false }
}

fn context(o: &Opts) -> Result<Context, Error> {
    let c = SpaceConfig::new(o.dim, o.order, o.mode.parse()?)?;
    let r = Realization::by_name(&o.realization, c)?;
    Ok(Context::new(c, r, o.twist.clone()))
}

fn parse_in(ctx: &Context, src: &str) -> Result<Value, String> {
    let e = parse_expression(src).map_err(|e| format!("in '{src}' {e}"))?;
    ctx.eval(&e).map_err(|e| format!("in '{src}' {e}"))
}

fn element_in(ctx: &Context, src: &str) -> Result<crate::weyl::PhaseSpaceElement, String> {
    let e = parse_expression(src).map_err(|e| format!("in '{src}' {e}"))?;
    ctx.element(&e).map_err(|e| format!("in '{src}' {e}"))
}

fn poly_in(ctx: &Context, src: &str) -> Result<crate::weyl::CommutativePolynomial, String> {
    let e = parse_expression(src).map_err(|e| format!("in '{src}' {e}"))?;
    ctx.polynomial(&e).map_err(|e| format!("in '{src}' {e}"))
}

fn dispatch(o: &Opts, cmd: &Command) -> Result<Outcome, String> {
    let ctx = context(o).map_err(|e| e.to_string())?;
    let f = o.format;
    let h = || ctx.algebroid().map_err(|e| e.to_string());
    Ok(match cmd {
        Command::NormalOrder { expr } => Outcome::ok(output::value(&parse_in(&ctx, expr)?, f)),
        Command::Star { f: a, g } => {
            let (a, g) = (poly_in(&ctx, a)?, poly_in(&ctx, g)?);
            Outcome::ok(output::polynomial(&ctx.realization.star(&a, &g), Alphabet::Canonical, f))
        }
        Command::Coproduct { expr } => {
            let e = element_in(&ctx, expr)?;
            Outcome::ok(output::value(&Value::Tensor(h()?.coproduct(&e)), f))
        }
        Command::Antipode { expr, variant } => {
            let v: AntipodeVariant = variant.parse().map_err(|e: Error| e.to_string())?;
            let e = element_in(&ctx, expr)?;
            Outcome::ok(output::value(&Value::Element(h()?.antipode(&e, v)), f))
        }
        Command::Counit { expr } => {
            let e = element_in(&ctx, expr)?;
            Outcome::ok(output::polynomial(&h()?.counit(&e), Alphabet::Canonical, f))
        }
        Command::Quantize { f: src } => {
            let p = poly_in(&ctx, src)?;
            Outcome::ok(output::polynomial(&ctx.realization.quantize_pbw(&p), Alphabet::Hatted, f))
        }
        Command::Source { f: src } => {
            let p = poly_in(&ctx, src)?;
            Outcome::ok(output::value(&Value::Element(h()?.source(&p).map_err(|e| e.to_string())?), f))
        }
        Command::Target { f: src } => {
            let p = poly_in(&ctx, src)?;
            Outcome::ok(output::value(&Value::Element(h()?.target(&p).map_err(|e| e.to_string())?), f))
        }
        Command::Check { suite } => {
            let reps = suites(&ctx, *suite, o.degree).map_err(|e| e.to_string())?;
            let passed = reps.iter().all(Report::passed);
            let mut text = output::reports(&reps, f);
            if f != Format::Json {
                let (total, failed) = reps.iter().flat_map(|r| &r.records).fold((0, 0), |(t, k), r| (t + 1, k + usize::from(!r.passed)));
                text.push_str(&format!("\n{} checks, {} failed", total, failed));
            }
            Outcome::checks(text, passed)
        }
        Command::Twist { action: TwistAction::Show { name } } => {
            let t = match name {
                Some(n) => Twist::by_name(n, ctx.config).map_err(|e| e.to_string())?,
                None => h()?.twist().clone(),
            };
            let body = format!(
                "twist {}\npartner realization: {}\nabelian: {}\nexponent: {}",
                t.name(),
                t.kind().partner(),
                if t.is_abelian() { "yes" } else { "no" },
                output::value(&Value::Tensor(t.exponent().clone()), Format::Text)
            );
            match f {
                Format::Text => Outcome::ok(body),
                Format::Latex => Outcome::ok(output::value(&Value::Tensor(t.exponent().clone()), f)),
                Format::Json => Outcome::ok(output::value(&Value::Tensor(t.exponent().clone()), f)),
            }
        }
        Command::SolveF1 => {
            let fam = solve_twist_exponent(ctx.config, 1).map_err(|e| e.to_string())?;
            let body = format!(
                "{fam}\nfree parameters: {}\nmatches the expected family: {}\nu = 0 member has Poincare legs only: {}",
                fam.directions.len(),
                if fam.matches_expected() { "yes" } else { "no" },
                if fam.base_is_poincare() { "yes" } else { "no" }
            );
            Outcome::checks(output::lines("solve-f1", &body, f), fam.matches_expected() && fam.base_is_poincare())
        }
    })
}

/// Reports of one suite over the context's realization and twist.
pub fn suites(ctx: &Context, suite: Suite, d: usize) -> Result<Vec<Report>, Error> {
    let r = &ctx.realization;
    let mut out = Vec::new();
    if matches!(suite, Suite::Realization | Suite::All) {
        out.push(validate_realization(r));
        out.push(dual_report(r));
        out.push(IdealGenerators::deformed(r).report(Some(r), d)?);
    }
    if matches!(suite, Suite::Algebroid | Suite::All) {
        out.push(ctx.algebroid()?.axiom_suite(d)?);
    }
    if matches!(suite, Suite::Cocycle | Suite::All) {
        let t = ctx.algebroid()?.twist();
        // the normal-ordered twists are not expected to be Hopf cocycles
        if !matches!(t.kind(), TwistKind::Normal(_)) {
            out.push(cocycle_check(t, CocycleSense::HopfStrict, 0)?);
        }
        out.push(cocycle_check(t, CocycleSense::Algebroid, d)?);
        out.push(star_routes_check(t, r, d)?);
        out.push(dual_star_check(r, Some(t), d));
        out.push(ideal_transport_check(t, r, d)?);
    }
    if matches!(suite, Suite::Poincare | Suite::All) {
        let g = ctx.poincare()?;
        out.push(g.algebra_check()?);
        let nat = HopfAlgebroidStructure::new(Realization::natural(ctx.config))?;
        out.push(g.coalgebra_check(&nat, d)?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests;
