//! Command-line front end: `convert`, `map`, `unmap`, `count`, `verify`.
//!
//! JSON output goes through `serde_json::Value`, whose maps are ordered, so keys come
//! out sorted and identical inputs give byte-identical output.

use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::bijections::{got_to_paths, paths_to_got};
use crate::enumerate::{
    asm_generating_det, closed_form, count_cor14, count_cor17, count_l_histogram, np_count_lgv, np_count_rows,
    CountTable, Family,
};
use crate::error::{Error, Result};
use crate::grid::{asm_to_edges, edges_to_asm, edges_to_paths, paths_to_edges, AsmMatrix, EdgeMatrices, PathTuple};
use crate::orders::OrderSpec;
use crate::partitions::{BoundaryPair, Partition};
use crate::tableaux::{GenOscTableau, OscillatingTableau};
use crate::verify::{self, Suite};
use crate::vos::{self, VOSet};

#[derive(Debug, Parser)]
#[command(name = "oscu", version, about = "Osculating lattice paths, vacancy-osculation sets and oscillating tableaux")]
pub struct Cli {
    /// Input file, `-` for standard input, or inline JSON.
    #[arg(long, global = true)]
    pub input: Option<String>,
    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Emit the brute-force count table as CSV.
    #[arg(long, global = true)]
    pub csv: bool,
    /// Order specifier: lex, antilex, q, q:<int>, table:z1,z2,...
    #[arg(long, global = true)]
    pub order: Option<String>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Convert between paths, edge matrices, ASMs and vacancy-osculation sets.
    Convert {
        #[arg(long, value_enum)]
        from: Repr,
        #[arg(long, value_enum)]
        to: Repr,
    },
    /// Paths to a generalized oscillating tableau.
    Map,
    /// Generalized oscillating tableau back to paths.
    Unmap {
        #[arg(long)]
        n: usize,
        #[arg(long, allow_hyphen_values = true)]
        q: i64,
    },
    /// Exact counts.
    Count(CountArgs),
    /// Run the exhaustive check suites.
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 4)]
        max_dim: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Repr {
    Paths,
    Edges,
    Asm,
    Vos,
    /// 0/1 rows of the set, output only.
    Matrix,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Lemmas,
    Theorems,
    Counts,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Brute,
    Cor14,
    Cor17,
    Formula,
    Lgv,
    Rows,
    Gendet,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Asm,
    Refined,
    Quasi,
    Hsym,
    Hvsym,
}

#[derive(Debug, Args)]
pub struct CountArgs {
    #[arg(long, value_enum)]
    pub mode: Mode,
    #[arg(long)]
    pub a: Option<usize>,
    #[arg(long)]
    pub b: Option<usize>,
    /// Comma-separated ascending set, `-` for empty.
    #[arg(long, allow_hyphen_values = true)]
    pub alpha: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub beta: Option<String>,
    #[arg(long)]
    pub l: Option<usize>,
    #[arg(long, value_enum)]
    pub family: Option<FamilyArg>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
}

/// Parses a comma-separated ascending set; `-` is the empty set.
pub fn parse_set(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s == "-" || s.is_empty() {
        return Ok(Vec::new());
    }
    let v = s
        .split(',')
        .map(|x| x.trim().parse::<usize>().map_err(|_| Error::parse(format!("bad set element {x:?} in {s:?}"))))
        .collect::<Result<Vec<_>>>()?;
    if v.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::parse(format!("set {s:?} is not strictly ascending")));
    }
    Ok(v)
}

/// Largest brute-force side length allowed, from `OSCU_MAX_DIM` (default 5).
pub fn max_dim_ceiling() -> Result<usize> {
    match std::env::var("OSCU_MAX_DIM") {
        Ok(v) => v.trim().parse().map_err(|_| Error::parse(format!("OSCU_MAX_DIM={v:?} is not a number"))),
        Err(_) => Ok(5),
    }
}

fn read_input(input: &Option<String>) -> Result<String> {
    match input.as_deref() {
        None | Some("-") => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| Error::parse(format!("reading stdin: {e}")))?;
            Ok(s)
        }
        Some(x) if x.trim_start().starts_with(['{', '[']) => Ok(x.to_string()),
        Some(path) => std::fs::read_to_string(path).map_err(|e| Error::parse(format!("reading {path}: {e}"))),
    }
}

fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::parse(format!("invalid JSON: {e}")))
}

/// Pretty JSON with sorted keys and a trailing newline.
pub fn canonical_json<T: Serialize>(x: &T) -> Result<String> {
    let v: Value = serde_json::to_value(x).map_err(|e| Error::domain(e.to_string()))?;
    let mut s = serde_json::to_string_pretty(&v).map_err(|e| Error::domain(e.to_string()))?;
    s.push('\n');
    Ok(s)
}

#[derive(Deserialize)]
struct RawPaths {
    a: usize,
    b: usize,
    paths: Vec<Vec<(usize, usize)>>,
}

#[derive(Deserialize)]
struct RawAsm {
    a: usize,
    b: usize,
    entries: Vec<Vec<i8>>,
}

#[derive(Deserialize)]
struct RawVos {
    a: usize,
    b: usize,
    points: Vec<(usize, usize)>,
}

#[derive(Deserialize)]
struct RawGot {
    t: Vec<usize>,
    eps: Vec<Vec<usize>>,
}

fn load_edges(text: &str, repr: Repr) -> Result<EdgeMatrices> {
    match repr {
        Repr::Paths => paths_to_edges(&load_paths(text)?),
        Repr::Edges => {
            let e: EdgeMatrices = from_json(text)?;
            EdgeMatrices::new(e.a, e.b, e.h_rows().to_vec(), e.v_rows().to_vec())
        }
        Repr::Asm => {
            let r: RawAsm = from_json(text)?;
            asm_to_edges(&AsmMatrix::new(r.a, r.b, r.entries)?)
        }
        Repr::Vos => {
            let r: RawVos = from_json(text)?;
            vos::vos_to_edges(&VOSet::new(r.a, r.b, r.points)?)
        }
        Repr::Matrix => Err(Error::parse("matrix is an output-only representation")),
    }
}

fn load_paths(text: &str) -> Result<PathTuple> {
    let r: RawPaths = from_json(text)?;
    PathTuple::new(r.a, r.b, r.paths)
}

fn load_got(text: &str) -> Result<GenOscTableau> {
    let r: RawGot = from_json(text)?;
    let eps = r.eps.into_iter().map(Partition::new).collect::<Result<Vec<_>>>()?;
    GenOscTableau::new(r.t, OscillatingTableau::new(eps)?)
}

fn convert(text: &str, from: Repr, to: Repr) -> Result<String> {
    let e = load_edges(text, from)?;
    match to {
        Repr::Paths => canonical_json(&edges_to_paths(&e)?),
        Repr::Edges => canonical_json(&e),
        Repr::Asm => canonical_json(&edges_to_asm(&e)),
        Repr::Vos => canonical_json(&VOSet::unchecked(e.a, e.b, e.zset())),
        Repr::Matrix => {
            let mut s = VOSet::unchecked(e.a, e.b, e.zset()).render();
            if !s.ends_with('\n') {
                s.push('\n');
            }
            Ok(s)
        }
    }
}

fn require<T>(x: Option<T>, flag: &str, mode: &str) -> Result<T> {
    x.ok_or_else(|| Error::parse(format!("--mode {mode} needs --{flag}")))
}

fn boundary_from(c: &CountArgs, mode: &str) -> Result<BoundaryPair> {
    let a = require(c.a, "a", mode)?;
    let b = require(c.b, "b", mode)?;
    let alpha = parse_set(require(c.alpha.as_deref(), "alpha", mode)?)?;
    let beta = parse_set(require(c.beta.as_deref(), "beta", mode)?)?;
    BoundaryPair::new(a, b, alpha, beta)
}

fn check_brute_dims(a: usize, b: usize) -> Result<()> {
    let cap = max_dim_ceiling()?;
    if a * b > cap * cap {
        return Err(Error::domain(format!("{a}x{b} exceeds the brute-force ceiling of {cap}x{cap} cells (OSCU_MAX_DIM)")));
    }
    Ok(())
}

fn int_json(x: &BigInt) -> Value {
    match x.to_i64() {
        Some(v) => Value::from(v),
        None => Value::from(x.to_string()),
    }
}

fn count(c: &CountArgs, csv: bool, order: Option<&str>) -> Result<String> {
    let line = |x: String| Ok(format!("{x}\n"));
    match c.mode {
        Mode::Brute => {
            let a = require(c.a, "a", "brute")?;
            let b = require(c.b, "b", "brute")?;
            check_brute_dims(a, b)?;
            if csv {
                return CountTable::brute(a, b)?.to_csv();
            }
            if c.alpha.is_none() && c.beta.is_none() {
                let t = CountTable::brute(a, b)?;
                let total = match c.l {
                    Some(l) => t.rows.iter().filter(|(k, _)| k.l == l).map(|(_, v)| v).sum(),
                    None => t.total(),
                };
                return line(total.to_string());
            }
            let bp = boundary_from(c, "brute")?;
            let h = count_l_histogram(&bp)?;
            match c.l {
                Some(l) => line(h.get(&l).cloned().unwrap_or_default().to_string()),
                None => line(h.values().sum::<num_bigint::BigUint>().to_string()),
            }
        }
        Mode::Cor14 => {
            let bp = boundary_from(c, "cor14")?;
            let l = require(c.l, "l", "cor14")?;
            let spec: OrderSpec = order.unwrap_or("q").parse()?;
            let ord = spec.total_order(bp.a, bp.b)?;
            line(count_cor14(&bp, l, &ord)?.to_string())
        }
        Mode::Cor17 => {
            let bp = boundary_from(c, "cor17")?;
            let l = require(c.l, "l", "cor17")?;
            line(count_cor17(&bp, l)?.to_string())
        }
        Mode::Formula => {
            let n = require(c.n, "n", "formula")?;
            let f = match require(c.family, "family", "formula")? {
                FamilyArg::Asm => Family::Asm { n },
                FamilyArg::Refined => Family::Refined { n, m: require(c.m, "m", "formula")? },
                FamilyArg::Quasi => Family::Quasi { n, m: require(c.m, "m", "formula")? },
                FamilyArg::Hsym => Family::HSym { n },
                FamilyArg::Hvsym => Family::HvSym { n },
            };
            line(closed_form(f)?.to_string())
        }
        Mode::Lgv => line(np_count_lgv(&boundary_from(c, "lgv")?).to_string()),
        Mode::Rows => line(np_count_rows(&boundary_from(c, "rows")?).to_string()),
        Mode::Gendet => {
            let n = require(c.n, "n", "gendet")?;
            let p = asm_generating_det(n)?;
            let coeffs: Vec<Value> = p.coeffs().iter().map(int_json).collect();
            canonical_json(&serde_json::json!({ "coefficients": coeffs, "experimental": true, "n": n }))
        }
    }
}

fn run_verify(suite: SuiteArg, max_dim: usize) -> Result<(String, bool)> {
    let cap = max_dim_ceiling()?;
    if max_dim > cap {
        return Err(Error::domain(format!("--max-dim {max_dim} exceeds the ceiling {cap} (OSCU_MAX_DIM)")));
    }
    if max_dim == 0 {
        return Err(Error::domain("--max-dim must be at least 1"));
    }
    let suite = match suite {
        SuiteArg::Lemmas => Some(Suite::Lemmas),
        SuiteArg::Theorems => Some(Suite::Theorems),
        SuiteArg::Counts => Some(Suite::Counts),
        SuiteArg::All => None,
    };
    let start = Instant::now();
    let results = verify::run(suite, max_dim);
    let mut out = String::new();
    for r in &results {
        out.push_str(&format!("{r}\n"));
    }
    let failed = results.iter().filter(|r| !r.passed).count();
    out.push_str(&format!(
        "{} checks, {failed} failed, max-dim {max_dim}, {:.1}s\n",
        results.len(),
        start.elapsed().as_secs_f64()
    ));
    Ok((out, failed == 0))
}

/// Runs a parsed command and returns its output text.
pub fn execute(cli: &Cli) -> Result<String> {
    match &cli.command {
        Command::Convert { from, to } => convert(&read_input(&cli.input)?, *from, *to),
        Command::Map => {
            let p = load_paths(&read_input(&cli.input)?)?;
            let spec: OrderSpec = cli.order.as_deref().unwrap_or("q").parse()?;
            let ord = spec.total_order(p.a, p.b)?;
            canonical_json(&paths_to_got(&p, &ord)?)
        }
        Command::Unmap { n, q } => {
            let g = load_got(&read_input(&cli.input)?)?;
            let spec: OrderSpec = cli.order.as_deref().unwrap_or("q").parse()?;
            let (a, b) = crate::bijections::grid_for(*n, *q);
            let ord = spec.total_order(a, b)?;
            canonical_json(&got_to_paths(*n, *q, &ord, &g)?)
        }
        Command::Count(c) => count(c, cli.csv, cli.order.as_deref()),
        Command::Verify { suite, max_dim } => {
            let (out, ok) = run_verify(*suite, *max_dim)?;
            if ok {
                Ok(out)
            } else {
                Err(Error::Verification(out))
            }
        }
    }
}

fn emit(cli: &Cli, text: &str) -> Result<()> {
    match &cli.output {
        Some(path) => std::fs::write(path, text).map_err(|e| Error::domain(format!("writing {}: {e}", path.display()))),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(text.as_bytes()).and_then(|_| out.flush()).map_err(|e| Error::domain(e.to_string()))
        }
    }
}

/// Entry point for the binary; returns the process exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok(text) => match emit(&cli, &text) {
            Ok(()) => 0,
            Err(e) => {
                eprintln!("{e}");
                e.exit_code()
            }
        },
        Err(Error::Verification(report)) => {
            let _ = emit(&cli, &report);
            eprintln!("verification failed");
            3
        }
        Err(e) => {
            eprintln!("{e}");
            e.exit_code()
        }
    }
}
