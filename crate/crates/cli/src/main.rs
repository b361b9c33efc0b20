use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};

use z4u_core::code::{budget_from_exponent, DEFAULT_SAMPLES, SLOW_BUDGET};
use z4u_core::construct::{search, verify_tables, Kind, SearchParams, Verdict};
use z4u_core::gray::{gray_image, z4_formal_duality};
use z4u_core::io::{format_matrix, read_matrix};
use z4u_core::project::{lift_bound_check, project_alpha, project_mu, project_nu, LiftTriple};
use z4u_core::wenum::{cwe, cwe_to_swe, lee, macwilliams_check, EnumeratorLines, EVAL_POINTS};
use z4u_core::{census, dual_standard, Alphabet, CodeError, F2u, LinearCode, Matrix, RingElem, Z4};

/// Codes this large or smaller get their complete and symmetrized
/// enumerators listed by `analyze`.
const LISTING_EXPONENT: u32 = 5;

#[derive(Parser)]
#[command(name = "z4u", version, about = "Linear codes over Z4+uZ4 (u^2 = 0)")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Enumeration budget as an exponent: at most 16^EXP messages.
    #[arg(long, global = true, value_name = "EXP", default_value_t = 7)]
    budget: u32,
    /// Raise the budget to 16^8 messages.
    #[arg(long, global = true)]
    slow: bool,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Random messages tried when only an upper bound is possible.
    #[arg(long, global = true, default_value_t = DEFAULT_SAMPLES)]
    samples: usize,
}

#[derive(Subcommand)]
enum Cmd {
    /// Length, size, distance, duality and enumerators of a code over R.
    Analyze { file: PathBuf },
    /// Gray image over Z4.
    Gray { file: PathBuf },
    /// Dual code.
    Dual { file: PathBuf },
    /// MacWilliams transforms against the directly computed dual.
    Macwilliams { file: PathBuf },
    /// Projections mu, nu and alpha.
    Project { file: PathBuf },
    /// Check that C lifts D (over Z4) and E (over F2+uF2), and the
    /// distance bound d <= 2 min(d', d'').
    LiftCheck { c: PathBuf, d: PathBuf, e: PathBuf },
    /// Search double circulant or bordered double circulant codes.
    Search {
        #[arg(long, value_enum)]
        kind: KindArg,
        /// Order of the block beside the identity; code length is 2n.
        #[arg(long)]
        n: usize,
        /// Allowed first-row entries, e.g. "00,10,30" (default: all of R).
        #[arg(long)]
        alphabet: Option<String>,
        /// Keep every candidate with at least this distance.
        #[arg(long, default_value_t = 0)]
        threshold: u32,
    },
    /// Rebuild the tabulated codes and compare distances.
    VerifyTables {
        #[arg(long, value_parser = clap::value_parser!(u8).range(2..=3))]
        table: u8,
        #[arg(long, default_value_t = 26)]
        max_length: usize,
    },
    /// Ring and character invariants.
    SelfCheck,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Dc,
    Bdc,
}

struct Ctx {
    budget: u128,
    samples: usize,
}

/// Outcome of a command that ran to completion.
enum Status {
    Ok,
    Fail,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    if let Some(t) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(1);
        }
    }
    let mut budget = budget_from_exponent(cli.budget);
    if cli.slow {
        budget = budget.max(SLOW_BUDGET);
    }
    let ctx = Ctx {
        budget,
        samples: cli.samples,
    };
    let mut out = String::new();
    let res = run(&cli.cmd, &ctx, &mut out);
    print!("{out}");
    match res {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Fail) => ExitCode::from(2),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cmd: &Cmd, ctx: &Ctx, out: &mut String) -> Result<Status> {
    match cmd {
        Cmd::Analyze { file } => analyze(&load(file)?, ctx, out),
        Cmd::Gray { file } => gray(&load(file)?, ctx, out),
        Cmd::Dual { file } => dual(&load(file)?, ctx, out),
        Cmd::Macwilliams { file } => macwilliams(&load(file)?, ctx, out),
        Cmd::Project { file } => project(&load(file)?, ctx, out),
        Cmd::LiftCheck { c, d, e } => lift_check(c, d, e, ctx, out),
        Cmd::Search {
            kind,
            n,
            alphabet,
            threshold,
        } => run_search(*kind, *n, alphabet.as_deref(), *threshold, ctx, out),
        Cmd::VerifyTables { table, max_length } => tables(*table, *max_length, ctx, out),
        Cmd::SelfCheck => self_check(out),
    }
}

fn read<S: Alphabet>(path: &Path) -> Result<Matrix<S>> {
    read_matrix(path).with_context(|| format!("in {}", path.display()))
}

fn load(path: &Path) -> Result<LinearCode> {
    Ok(LinearCode::new(read(path)?))
}

fn tokens<S: Alphabet>(v: &[S]) -> String {
    v.iter().map(|x| x.token()).collect::<Vec<_>>().join(" ")
}

fn over_budget<T>(r: z4u_core::Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(CodeError::BudgetExceeded { .. }) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

const SKIPPED: &str = "skipped (over budget)";

fn analyze(code: &LinearCode, ctx: &Ctx, out: &mut String) -> Result<Status> {
    writeln!(out, "alphabet: {}", RingElem::NAME)?;
    writeln!(out, "length: {}", code.length())?;
    writeln!(out, "generator rows: {}", code.dimension_rows())?;
    let std_form = if code.is_standard_form() { "yes" } else { "no" };
    writeln!(out, "standard form: {std_form}")?;
    match over_budget(code.cardinality(ctx.budget))? {
        Some(c) => writeln!(out, "cardinality: {c}")?,
        None => writeln!(out, "cardinality: {SKIPPED}")?,
    }
    if code.is_zero_code() {
        writeln!(out, "min Lee distance: none (zero code)")?;
    } else {
        let d = code.min_lee_distance(ctx.budget, ctx.samples)?;
        writeln!(out, "min Lee distance: {} ({})", d.weight, d.flag())?;
        writeln!(out, "witness: {}", tokens(&d.witness))?;
    }
    match over_budget(code.self_duality(ctx.budget))? {
        Some(s) => writeln!(out, "self-duality: {s}")?,
        None => writeln!(out, "self-duality: {SKIPPED}")?,
    }
    match over_budget(lee(code, ctx.budget))? {
        Some(p) => {
            let size = code.cardinality(ctx.budget)?;
            let fsd = z4u_core::wenum::macwilliams_lee(&p, size)? == p;
            writeln!(out, "formally self-dual: {}", yes_no(fsd))?;
            writeln!(out, "Lee enumerator: {p}")?;
            writeln!(out, "Lee terms (W,X : coefficient):")?;
            write!(out, "{}", EnumeratorLines(&p))?;
        }
        None => {
            writeln!(out, "formally self-dual: {SKIPPED}")?;
            writeln!(out, "Lee enumerator: {SKIPPED}")?;
        }
    }
    let listing = ctx.budget.min(budget_from_exponent(LISTING_EXPONENT));
    match over_budget(cwe(code, listing))? {
        Some(e) => {
            writeln!(out, "SWE terms (X,Y,Z,W,S : coefficient):")?;
            write!(out, "{}", EnumeratorLines(&cwe_to_swe(&e)))?;
            writeln!(out, "CWE terms (0,u,2u,3u,1,...,3+3u : coefficient):")?;
            write!(out, "{}", EnumeratorLines(&e))?;
        }
        None => {
            writeln!(
                out,
                "SWE terms: skipped (over listing budget 16^{LISTING_EXPONENT})"
            )?;
            writeln!(
                out,
                "CWE terms: skipped (over listing budget 16^{LISTING_EXPONENT})"
            )?;
        }
    }
    Ok(Status::Ok)
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn gray(code: &LinearCode, ctx: &Ctx, out: &mut String) -> Result<Status> {
    let img = gray_image(code, ctx.budget)?;
    writeln!(out, "Z4 length: {}", img.length())?;
    writeln!(out, "cardinality: {}", img.cardinality(ctx.budget)?)?;
    writeln!(out, "generator (phi(g), phi(ug) for each row g):")?;
    write!(out, "{}", format_matrix(img.generator()))?;
    if img.is_zero_code() {
        writeln!(out, "min Lee distance: none (zero code)")?;
    } else {
        let d = img.min_lee_distance(ctx.budget, ctx.samples)?;
        writeln!(out, "min Lee distance: {} ({})", d.weight, d.flag())?;
        writeln!(out, "witness: {}", tokens(&d.witness))?;
    }
    match over_budget(z4_formal_duality(&img, ctx.budget))? {
        Some(b) => writeln!(out, "formally self-dual over Z4: {}", yes_no(b))?,
        None => writeln!(out, "formally self-dual over Z4: {SKIPPED}")?,
    }
    Ok(Status::Ok)
}

fn dual(code: &LinearCode, ctx: &Ctx, out: &mut String) -> Result<Status> {
    if let Some(a) = code.standard_part() {
        let d = dual_standard(&a)?;
        writeln!(out, "method: [-A^T | I]")?;
        writeln!(out, "cardinality: {}", d.cardinality(ctx.budget)?)?;
        writeln!(out, "generator:")?;
        write!(out, "{}", format_matrix(d.generator()))?;
        return Ok(Status::Ok);
    }
    let words = code.dual_bruteforce(ctx.budget)?;
    writeln!(out, "method: brute force over R^{}", code.length())?;
    writeln!(out, "cardinality: {}", words.size())?;
    writeln!(out, "codewords:")?;
    for w in words.iter() {
        writeln!(out, "{}", tokens(w))?;
    }
    Ok(Status::Ok)
}

fn macwilliams(code: &LinearCode, ctx: &Ctx, out: &mut String) -> Result<Status> {
    let m = macwilliams_check(code, ctx.budget)?;
    writeln!(out, "|C| = {}, |C^perp| = {}", m.size, m.dual_size)?;
    writeln!(out, "|C| |C^perp| = 16^n: {}", verdict(m.size_product))?;
    writeln!(out, "Lee transform: {}", m.lee_transform)?;
    writeln!(
        out,
        "Lee transform equals dual Lee enumerator: {}",
        verdict(m.lee_equal)
    )?;
    match m.swe_equal {
        Some(b) => writeln!(out, "SWE transform equals dual SWE: {}", verdict(b))?,
        None => writeln!(out, "SWE transform: skipped (length over expansion limit)")?,
    }
    writeln!(
        out,
        "CWE transform at {EVAL_POINTS} seeded points: {}/{} agree: {}",
        m.cwe_agree,
        m.cwe_points,
        verdict(m.cwe_agree == m.cwe_points)
    )?;
    Ok(if m.pass() { Status::Ok } else { Status::Fail })
}

fn verdict(b: bool) -> &'static str {
    if b {
        "PASS"
    } else {
        "FAIL"
    }
}

fn project(code: &LinearCode, ctx: &Ctx, out: &mut String) -> Result<Status> {
    let mut report = |name: &str, size: usize, linear: bool, orth: bool, gen: String| {
        writeln!(
            out,
            "{name}: size {size}, linear {}, self-orthogonal {}",
            yes_no(linear),
            yes_no(orth)
        )?;
        write!(out, "{gen}")
    };
    let m = project_mu(code, ctx.budget)?;
    report(
        "mu(C) over Z4",
        m.size(),
        m.is_linear(),
        m.words.is_self_orthogonal(),
        format_matrix(m.code.generator()),
    )?;
    let n = project_nu(code, ctx.budget)?;
    report(
        "nu(C) over Z4",
        n.size(),
        n.is_linear(),
        n.words.is_self_orthogonal(),
        format_matrix(n.code.generator()),
    )?;
    let a = project_alpha(code, ctx.budget)?;
    report(
        "alpha(C) over F2+uF2",
        a.size(),
        a.is_linear(),
        a.words.is_self_orthogonal(),
        format_matrix(a.code.generator()),
    )?;
    Ok(Status::Ok)
}

fn lift_check(c: &Path, d: &Path, e: &Path, ctx: &Ctx, out: &mut String) -> Result<Status> {
    let t = LiftTriple::new(
        LinearCode::new(read::<RingElem>(c)?),
        LinearCode::new(read::<Z4>(d)?),
        LinearCode::new(read::<F2u>(e)?),
    );
    let is_lift = t.is_lift(ctx.budget)?;
    writeln!(out, "mu(C) = D and alpha(C) = E: {}", verdict(is_lift))?;
    let rep = lift_bound_check(&t, ctx.budget, ctx.samples)?;
    writeln!(out, "{rep}")?;
    writeln!(out, "witness: {}", tokens(&rep.d.witness))?;
    Ok(if is_lift && rep.holds {
        Status::Ok
    } else {
        Status::Fail
    })
}

fn parse_alphabet(s: &str) -> Result<Vec<RingElem>> {
    let v = s
        .split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| t.parse::<RingElem>().map_err(anyhow::Error::msg))
        .collect::<Result<Vec<_>>>()?;
    if v.is_empty() {
        bail!("empty alphabet");
    }
    Ok(v)
}

fn run_search(
    kind: KindArg,
    n: usize,
    alphabet: Option<&str>,
    threshold: u32,
    ctx: &Ctx,
    out: &mut String,
) -> Result<Status> {
    let kind = match kind {
        KindArg::Dc => Kind::DoubleCirculant,
        KindArg::Bdc => Kind::Bordered,
    };
    let mut p = SearchParams::new(kind, n);
    if let Some(a) = alphabet {
        p.alphabet = parse_alphabet(a)?;
    }
    p.budget = ctx.budget;
    p.threshold = threshold;
    p.samples = ctx.samples;
    let rep = search(&p)?;
    writeln!(out, "kind: {} n: {} length: {}", rep.kind, rep.n, 2 * rep.n)?;
    writeln!(out, "candidates: {}", rep.candidates)?;
    writeln!(out, "exhaustive: {}", yes_no(rep.exhaustive))?;
    match &rep.best {
        Some(b) => writeln!(out, "best: {b}")?,
        None => writeln!(out, "best: none")?,
    }
    writeln!(out, "retained (d >= {threshold}): {}", rep.retained.len())?;
    for r in &rep.retained {
        writeln!(out, "{r}")?;
    }
    Ok(Status::Ok)
}

fn tables(which: u8, max_length: usize, ctx: &Ctx, out: &mut String) -> Result<Status> {
    let rows = verify_tables(which, max_length, ctx.budget, ctx.samples)?;
    let mut fail = false;
    for r in &rows {
        writeln!(out, "{r}")?;
        fail |= r.verdict == Verdict::Fail;
    }
    let count = |v: Verdict| rows.iter().filter(|r| r.verdict == v).count();
    writeln!(
        out,
        "table {which}: {} PASS, {} FAIL, {} INCONCLUSIVE",
        count(Verdict::Pass),
        count(Verdict::Fail),
        count(Verdict::Inconclusive)
    )?;
    Ok(if fail { Status::Fail } else { Status::Ok })
}

fn self_check(out: &mut String) -> Result<Status> {
    let checks: Vec<_> = census::ring_census()
        .into_iter()
        .chain(census::character_suite())
        .collect();
    for c in &checks {
        writeln!(out, "{c}")?;
    }
    Ok(if checks.iter().all(|c| c.pass) {
        Status::Ok
    } else {
        Status::Fail
    })
}
