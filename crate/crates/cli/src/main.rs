use std::io::Write;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use spinhecke::cdaha::{cdaha_with_cap, daha_with_cap, upsilon_minus, upsilon_plus};
use spinhecke::dahca::dahca_with_cap;
use spinhecke::dunkl::{dunkl_act, dunkl_act_sdaha, ModuleKind, PolyModElem};
use spinhecke::expr::{parse_cdaha, parse_clifford, parse_daha, parse_dahca, parse_poly, parse_sdaha, parse_tensor};
use spinhecke::pbw::{Elem, Triangular};
use spinhecke::sdaha::{phi_big, psi_big, sdaha_with_cap, TensorSdaha};
use spinhecke::verify::{run_suite, SuiteReport, SUITES};
use spinhecke::weyl::{Family, WeylType};

#[derive(Parser)]
#[command(
    name = "spinhecke",
    version,
    about = "Exact normal forms in Hecke-Clifford, spin and covering double affine Hecke algebras"
)]
struct Cli {
    #[command(flatten)]
    opts: Opts,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args)]
struct Opts {
    /// Algebra the expressions live in.
    #[arg(long, global = true, value_enum, default_value = "dahca")]
    algebra: AlgebraArg,
    /// Weyl group family.
    #[arg(long = "type", global = true, default_value = "A")]
    family: Family,
    /// Rank.
    #[arg(long, global = true, default_value_t = 2)]
    n: usize,
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Total degree cap for normal-form computations.
    #[arg(long, global = true, default_value_t = 64)]
    max_degree: usize,
    /// Number of random cases per randomized check.
    #[arg(long, global = true, default_value_t = spinhecke::verify::DEFAULT_BUDGET)]
    budget: usize,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlgebraArg {
    Dahca,
    Sdaha,
    Cdaha,
    Daha,
}

#[derive(Clone, Copy, ValueEnum)]
enum MapArg {
    Phi,
    Psi,
    #[value(name = "upsilon+")]
    UpsilonPlus,
    #[value(name = "upsilon-")]
    UpsilonMinus,
}

#[derive(Clone, Copy, ValueEnum)]
enum VarsArg {
    X,
    Y,
}

#[derive(Subcommand)]
enum Cmd {
    /// Print the PBW normal form of an expression.
    Nf { expr: String },
    /// Print the normal form of e1*e2 - e2*e1.
    Comm { e1: String, e2: String },
    /// Build f (x) m in a polynomial module, optionally acting on it.
    Dunkl {
        #[arg(long, value_enum)]
        vars: VarsArg,
        /// Polynomial in the chosen variables.
        #[arg(long)]
        f: String,
        /// Clifford element.
        #[arg(long, default_value = "1")]
        m: String,
        /// Algebra element to apply.
        #[arg(long)]
        act: Option<String>,
    },
    /// Run a verification suite, or `all`.
    Verify {
        #[arg(long)]
        suite: String,
    },
    /// Apply an isomorphism or quotient map.
    Map {
        #[arg(long, value_enum)]
        which: MapArg,
        expr: String,
    },
}

struct Ctx {
    wt: WeylType,
    algebra: AlgebraArg,
    json: bool,
    cap: usize,
}

fn elem_out<T: Triangular>(ctx: &Ctx, e: &Elem<T>) -> String {
    if ctx.json {
        serde_json::to_string_pretty(&e.to_json()).unwrap()
    } else {
        e.to_string()
    }
}

fn tensor_out(ctx: &Ctx, t: &TensorSdaha) -> String {
    if !ctx.json {
        return t.to_string();
    }
    let alg = t.algebra();
    let terms: Vec<Value> = t
        .terms()
        .iter()
        .map(|((e, m), c)| json!({"coeff": c.to_string(), "clifford": e.to_string(), "monomial": alg.mono_text(m)}))
        .collect();
    serde_json::to_string_pretty(
        &json!({"algebra": format!("Cn (x) {}", alg.tag()), "text": t.to_string(), "terms": terms}),
    )
    .unwrap()
}

fn module_out(ctx: &Ctx, m: &PolyModElem) -> String {
    if !ctx.json {
        return m.to_string();
    }
    let n = ctx.wt.n;
    let terms: Vec<Value> = m
        .terms()
        .iter()
        .map(|((a, e), c)| json!({"coeff": c.to_string(), "exponents": &a[..n], "clifford": e.to_string()}))
        .collect();
    serde_json::to_string_pretty(&json!({
        "module": format!("{:?}", m.kind()),
        "variables": m.kind().var_name(),
        "text": m.to_string(),
        "terms": terms,
    }))
    .unwrap()
}

/// Parses in the selected algebra; with `comm`, forms `e1*e2 - e2*e1`.
fn in_algebra(ctx: &Ctx, exprs: &[&str], comm: bool) -> Result<String> {
    macro_rules! go {
        ($alg:expr, $parse:ident) => {{
            let alg = $alg;
            let parsed = exprs.iter().map(|s| $parse(s, &alg)).collect::<spinhecke::Result<Vec<_>>>()?;
            let e = if comm { parsed[0].commutator(&parsed[1])? } else { parsed[0].clone() };
            elem_out(ctx, &e)
        }};
    }
    Ok(match ctx.algebra {
        AlgebraArg::Dahca => go!(dahca_with_cap(ctx.wt, ctx.cap), parse_dahca),
        AlgebraArg::Sdaha => go!(sdaha_with_cap(ctx.wt, ctx.cap), parse_sdaha),
        AlgebraArg::Cdaha => go!(cdaha_with_cap(ctx.wt, ctx.cap), parse_cdaha),
        AlgebraArg::Daha => go!(daha_with_cap(ctx.wt, false, ctx.cap), parse_daha),
    })
}

fn dunkl(ctx: &Ctx, vars: VarsArg, f: &str, m: &str, act: Option<&str>) -> Result<String> {
    let kind = match (ctx.algebra, vars) {
        (AlgebraArg::Dahca, VarsArg::X) => ModuleKind::DahcaX,
        (AlgebraArg::Dahca, VarsArg::Y) => ModuleKind::DahcaY,
        (AlgebraArg::Sdaha, VarsArg::Y) => ModuleKind::SdahaY,
        _ => bail!("no polynomial module for this algebra and variable choice"),
    };
    let poly = parse_poly(f, kind.var_name(), &ctx.wt).context("in --f")?;
    let cl = parse_clifford(m, &ctx.wt).context("in --m")?;
    let mut elem = PolyModElem::tensor(kind, ctx.wt, &poly, &cl)?;
    if let Some(a) = act {
        elem = match kind {
            ModuleKind::SdahaY => dunkl_act_sdaha(&parse_sdaha(a, &sdaha_with_cap(ctx.wt, ctx.cap))?, &elem)?,
            _ => dunkl_act(&parse_dahca(a, &dahca_with_cap(ctx.wt, ctx.cap))?, &elem)?,
        };
    }
    Ok(module_out(ctx, &elem))
}

fn map(ctx: &Ctx, which: MapArg, src: &str) -> Result<String> {
    let (wt, cap) = (ctx.wt, ctx.cap);
    Ok(match which {
        MapArg::Phi => {
            let a = parse_dahca(src, &dahca_with_cap(wt, cap))?;
            tensor_out(ctx, &phi_big(&a, &sdaha_with_cap(wt, cap))?)
        }
        MapArg::Psi => {
            let t = parse_tensor(src, &sdaha_with_cap(wt, cap))?;
            elem_out(ctx, &psi_big(&t, &dahca_with_cap(wt, cap))?)
        }
        MapArg::UpsilonPlus => {
            let a = parse_cdaha(src, &cdaha_with_cap(wt, cap))?;
            elem_out(ctx, &upsilon_plus(&a, &daha_with_cap(wt, true, cap))?)
        }
        MapArg::UpsilonMinus => {
            let a = parse_cdaha(src, &cdaha_with_cap(wt, cap))?;
            elem_out(ctx, &upsilon_minus(&a, &sdaha_with_cap(wt, cap))?)
        }
    })
}

fn verify(ctx: &Ctx, suite: &str, opts: &Opts, family: Family) -> Result<(String, bool)> {
    let names: Vec<&str> = if suite == "all" { SUITES.to_vec() } else { vec![suite] };
    let reports: Vec<SuiteReport> =
        names.iter().map(|s| run_suite(s, family, opts.n, opts.seed, opts.budget)).collect::<spinhecke::Result<_>>()?;
    let passed = reports.iter().all(SuiteReport::passed);
    let out = if ctx.json {
        let v: Vec<Value> = reports.iter().map(|r| serde_json::to_value(r).unwrap()).collect();
        serde_json::to_string_pretty(&if v.len() == 1 { v[0].clone() } else { Value::Array(v) }).unwrap()
    } else {
        reports.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("\n").trim_end().to_string()
    };
    Ok((out, passed))
}

fn run(cli: Cli) -> Result<(String, bool)> {
    let family = cli.opts.family;
    let wt = WeylType::new_small_d(family, cli.opts.n)?;
    let ctx = Ctx { wt, algebra: cli.opts.algebra, json: cli.opts.json, cap: cli.opts.max_degree };
    match &cli.cmd {
        Cmd::Nf { expr } => Ok((in_algebra(&ctx, &[expr], false)?, true)),
        Cmd::Comm { e1, e2 } => Ok((in_algebra(&ctx, &[e1, e2], true)?, true)),
        Cmd::Dunkl { vars, f, m, act } => Ok((dunkl(&ctx, *vars, f, m, act.as_deref())?, true)),
        Cmd::Map { which, expr } => Ok((map(&ctx, *which, expr)?, true)),
        Cmd::Verify { suite } => verify(&ctx, suite, &cli.opts, family),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, passed)) => {
            let _ = writeln!(std::io::stdout(), "{}", out);
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::from(2)
        }
    }
}
