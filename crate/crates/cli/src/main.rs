//! `guillotine`: exact counts, tables, enumeration, bijections, rendering and
//! self-checks for separable d-permutations and guillotine partitions.

mod families;
mod io;
mod verify;

use std::fmt::Write as _;
use std::io::{BufWriter, Read, Write};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use guillotine_core::separability::{find_occurrence, DEFAULT_MAX_WORK};
use guillotine_core::{
    dperm_to_tree, path_to_tree, render_planar, tree_to_dperm, tree_to_path, BigUint,
    ClassicalPattern, DPermutation, Error, RowPolicy,
};

use families::{Family, Item, Method, Params};

/// Anything that ends the process with a nonzero status.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Mismatch(String),
    NotSeparable(String),
    Verify(String),
    Core(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Mismatch(_) => 3,
            Failure::NotSeparable(_) => 4,
            Failure::Verify(_) => 1,
            Failure::Core(Error::Domain(_) | Error::Parse(_) | Error::Unsupported(_)) => 2,
            Failure::Core(_) => 1,
        }
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(m)
            | Failure::Mismatch(m)
            | Failure::NotSeparable(m)
            | Failure::Verify(m) => f.write_str(m),
            Failure::Core(e) => write!(f, "{e}"),
        }
    }
}

/// An inclusive integer range written `a..b`, or a single value.
#[derive(Debug, Clone, Copy)]
struct Span {
    lo: u64,
    hi: u64,
}

impl FromStr for Span {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let parse = |t: &str| {
            t.trim()
                .parse::<u64>()
                .map_err(|_| format!("bad integer {t:?}"))
        };
        let (lo, hi) = match s.split_once("..") {
            Some((a, b)) => (parse(a)?, parse(b.trim_start_matches('='))?),
            None => (parse(s)?, parse(s)?),
        };
        if lo > hi {
            return Err(format!("empty range {s}"));
        }
        Ok(Span { lo, hi })
    }
}

impl Span {
    fn iter(self) -> impl Iterator<Item = u64> {
        self.lo..=self.hi
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Svg,
}

#[derive(Parser)]
#[command(name = "guillotine", version, about)]
struct Cli {
    /// Largest number of objects a brute-force count may visit.
    #[arg(long, global = true, default_value_t = DEFAULT_MAX_WORK)]
    max_work: u64,
    /// Read and write tree colors as 0..d-1 instead of 1..d.
    #[arg(long, global = true)]
    zero_based: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Count one family by one or all methods.
    Count(CountArgs),
    /// Tabulate a family over ranges of n and d (or q).
    Table(TableArgs),
    /// Print every object of a family as JSON lines.
    Enumerate(FamilyArgs),
    /// Transform objects read from stdin, one per line.
    Bijection(BijectionArgs),
    /// Draw a two-color tree read from stdin as an SVG partition of the square.
    Render(RenderArgs),
    /// Run a self-check suite.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct FamilyArgs {
    #[arg(long, value_enum)]
    family: Family,
    /// Dimension (a range in `table`).
    #[arg(long)]
    d: Option<Span>,
    /// Number of colors of the box for `guillotine` (a range in `table`).
    #[arg(long)]
    q: Option<Span>,
    /// Alternation bound for `alternating`.
    #[arg(long)]
    m: Option<u32>,
    /// Size: cuts for partition families, columns for `separable`.
    #[arg(long)]
    n: Span,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args)]
struct CountArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long, value_enum, default_value = "gf")]
    method: Method,
    /// Run every applicable method and compare.
    #[arg(long)]
    all_methods: bool,
}

#[derive(Args)]
struct TableArgs {
    #[command(flatten)]
    family: FamilyArgs,
    #[arg(long, value_enum, default_value = "gf")]
    method: Method,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Direction {
    TreeToPath,
    PathToTree,
    TreeToDperm,
    DpermToTree,
}

#[derive(Args)]
struct BijectionArgs {
    #[arg(long, value_enum)]
    direction: Direction,
    /// Colors for paths, permutation dimension for d-permutations.
    #[arg(long)]
    d: Option<u32>,
    /// Also apply the inverse and fail unless it restores the input.
    #[arg(long)]
    roundtrip: bool,
}

#[derive(Args)]
struct RenderArgs {
    /// Tree JSON; read from stdin when absent.
    #[arg(long)]
    tree: Option<String>,
    #[arg(long, value_enum)]
    format: Option<Format>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: verify::Suite,
    /// Drop one form of pi3 before checking (characterization only).
    #[arg(long)]
    inject_fault: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = std::io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(&cli, &mut out);
    let flushed = out.flush();
    match result {
        Ok(()) if flushed.is_ok() => ExitCode::SUCCESS,
        Ok(()) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {f}");
            ExitCode::from(f.code())
        }
    }
}

fn run(cli: &Cli, out: &mut impl Write) -> Result<(), Failure> {
    match &cli.command {
        Command::Count(a) => count(cli, a, out),
        Command::Table(a) => table(cli, a, out),
        Command::Enumerate(a) => enumerate(cli, a, out),
        Command::Bijection(a) => bijection(cli, a, out),
        Command::Render(a) => render(cli, a, out),
        Command::Verify(a) => {
            if a.inject_fault && a.suite != verify::Suite::Characterization {
                return Err(Failure::Usage(
                    "--inject-fault only applies to characterization".into(),
                ));
            }
            out.flush().map_err(write_failed)?;
            verify::run(a.suite, a.inject_fault, cli.zero_based)
        }
    }
}

fn write_failed(e: std::io::Error) -> Failure {
    Failure::Core(Error::Unsupported(format!("cannot write output: {e}")))
}

fn to_u32(v: u64, flag: &str) -> Result<u32, Failure> {
    u32::try_from(v).map_err(|_| Failure::Usage(format!("--{flag} {v} is too large")))
}

/// Values of the column parameter (d or q) and the matching `Params`.
fn columns(cli: &Cli, a: &FamilyArgs) -> Result<Vec<Params>, Failure> {
    let m = match (a.family, a.m) {
        (Family::Alternating, Some(m)) if m >= 2 => m,
        (Family::Alternating, _) => return Err(Failure::Usage("--m >= 2 is required".into())),
        (_, Some(_)) => return Err(Failure::Usage("--m only applies to alternating".into())),
        (_, None) => 0,
    };
    let base = Params {
        family: a.family,
        dim: 0,
        m,
        max_work: cli.max_work,
    };
    let (span, wrong) = match a.family.column_parameter() {
        Some("q") => (a.q, a.d.map(|_| "d")),
        Some(_) => (a.d, a.q.map(|_| "q")),
        None => (
            Some(Span { lo: 2, hi: 2 }),
            a.d.map(|_| "d").or(a.q.map(|_| "q")),
        ),
    };
    if let Some(flag) = wrong {
        return Err(Failure::Usage(format!(
            "--{flag} does not apply to {}",
            a.family.name()
        )));
    }
    let span = span.ok_or_else(|| {
        Failure::Usage(format!(
            "{} needs --{}",
            a.family.name(),
            a.family.column_parameter().unwrap_or("d")
        ))
    })?;
    span.iter()
        .map(|v| {
            Ok(Params {
                dim: to_u32(v, "d")?,
                ..base
            })
        })
        .collect()
}

fn sizes(a: &FamilyArgs) -> Result<Vec<usize>, Failure> {
    a.n.iter()
        .map(|n| usize::try_from(n).map_err(|_| Failure::Usage("--n is too large".into())))
        .collect()
}

fn param_fields(p: &Params) -> Vec<(&'static str, u32)> {
    let mut v = Vec::new();
    if let Some(name) = p.family.column_parameter() {
        v.push((name, p.dim));
    }
    if p.family == Family::Alternating {
        v.push(("m", p.m));
    }
    v
}

fn count(cli: &Cli, a: &CountArgs, out: &mut impl Write) -> Result<(), Failure> {
    let fa = &a.family;
    let params = columns(cli, fa)?;
    let [p] = params.as_slice() else {
        return Err(Failure::Usage(
            "count takes a single --d/--q; use table for ranges".into(),
        ));
    };
    if fa.format == Some(Format::Svg) {
        return Err(Failure::Usage("count prints json or csv".into()));
    }
    let methods = if a.all_methods {
        families::methods(p)
    } else {
        vec![a.method]
    };
    let mut text = String::new();
    let mut rows = Vec::new();
    let mut mismatch = None;
    if fa.format == Some(Format::Csv) {
        let head: Vec<&str> = param_fields(p).iter().map(|f| f.0).collect();
        writeln!(
            text,
            "family,{}n,method,count",
            head.iter().map(|h| format!("{h},")).collect::<String>()
        )
        .unwrap();
    }
    for n in sizes(fa)? {
        let mut results: Vec<(Method, BigUint)> = Vec::new();
        for &method in &methods {
            match families::count(p, method, n) {
                Ok(v) => results.push((method, v)),
                Err(Failure::Core(Error::Resource { required, limit }))
                    if a.all_methods && method == Method::Brute =>
                {
                    if fa.format.is_none() {
                        writeln!(text, "brute skipped: needs {required} > --max-work {limit}")
                            .unwrap();
                    }
                }
                Err(e) => return Err(e),
            }
        }
        let agree = results.windows(2).all(|w| w[0].1 == w[1].1);
        if !agree && mismatch.is_none() {
            mismatch = Some(n);
        }
        match fa.format {
            None if a.all_methods => {
                if fa.n.lo != fa.n.hi {
                    writeln!(text, "n={n}").unwrap();
                }
                for (m, v) in &results {
                    writeln!(text, "{} {v}", m.name()).unwrap();
                }
                writeln!(text, "{}", if agree { "MATCH" } else { "MISMATCH" }).unwrap();
            }
            None => writeln!(text, "{}", results[0].1).unwrap(),
            Some(Format::Csv) => {
                for (m, v) in &results {
                    let params: String = param_fields(p)
                        .iter()
                        .map(|f| format!("{},", f.1))
                        .collect();
                    writeln!(text, "{},{params}{n},{},{v}", p.family.name(), m.name()).unwrap();
                }
            }
            _ => {
                let mut row = serde_json::Map::new();
                row.insert("family".into(), p.family.name().into());
                for (k, v) in param_fields(p) {
                    row.insert(k.into(), v.into());
                }
                row.insert("n".into(), n.into());
                let counts: serde_json::Map<_, _> = results
                    .iter()
                    .map(|(m, v)| (m.name().to_string(), v.to_string().into()))
                    .collect();
                row.insert("counts".into(), counts.into());
                if a.all_methods {
                    row.insert(
                        "verdict".into(),
                        if agree { "MATCH" } else { "MISMATCH" }.into(),
                    );
                }
                rows.push(serde_json::Value::Object(row));
            }
        }
    }
    if fa.format == Some(Format::Json) {
        writeln!(text, "{}", serde_json::to_string(&rows).expect("json")).unwrap();
    }
    out.write_all(text.as_bytes()).map_err(write_failed)?;
    match mismatch {
        Some(n) => Err(Failure::Mismatch(format!("methods disagree at n={n}"))),
        None => Ok(()),
    }
}

fn table(cli: &Cli, a: &TableArgs, out: &mut impl Write) -> Result<(), Failure> {
    let fa = &a.family;
    let params = columns(cli, fa)?;
    let ns = sizes(fa)?;
    let mut grid = Vec::with_capacity(params.len());
    for p in &params {
        let col = ns
            .iter()
            .map(|&n| families::count(p, a.method, n))
            .collect::<Result<Vec<_>, _>>()?;
        grid.push(col);
    }
    let label = |p: &Params| match p.family.column_parameter() {
        Some(name) => format!("{name}={}", p.dim),
        None => "count".to_string(),
    };
    let text = match fa.format {
        Some(Format::Svg) => return Err(Failure::Usage("table prints csv or json".into())),
        Some(Format::Json) => {
            let cols: Vec<serde_json::Value> = params
                .iter()
                .zip(&grid)
                .map(|(p, col)| {
                    let mut c = serde_json::Map::new();
                    for (k, v) in param_fields(p) {
                        c.insert(k.into(), v.into());
                    }
                    let values: Vec<String> = col.iter().map(ToString::to_string).collect();
                    c.insert("counts".into(), values.into());
                    c.into()
                })
                .collect();
            let doc = serde_json::json!({
                "family": fa.family.name(),
                "method": a.method.name(),
                "n": ns,
                "columns": cols,
            });
            format!("{doc}\n")
        }
        _ => {
            let mut s = String::from("n");
            for p in &params {
                write!(s, ",{}", label(p)).unwrap();
            }
            s.push('\n');
            for (i, n) in ns.iter().enumerate() {
                write!(s, "{n}").unwrap();
                for col in &grid {
                    write!(s, ",{}", col[i]).unwrap();
                }
                s.push('\n');
            }
            s
        }
    };
    out.write_all(text.as_bytes()).map_err(write_failed)
}

fn enumerate(cli: &Cli, a: &FamilyArgs, out: &mut impl Write) -> Result<(), Failure> {
    if matches!(a.format, Some(Format::Csv | Format::Svg)) {
        return Err(Failure::Usage("enumerate prints JSON lines".into()));
    }
    let params = columns(cli, a)?;
    let [p] = params.as_slice() else {
        return Err(Failure::Usage("enumerate takes a single --d/--q".into()));
    };
    let mut status = Ok(());
    for n in sizes(a)? {
        families::enumerate(p, n, |item| {
            if status.is_err() {
                return;
            }
            let line = match item {
                Item::Tree(t) => io::tree_json(&t, cli.zero_based),
                Item::Perm(q) => io::dperm_json(&q),
            };
            status = writeln!(out, "{line}");
        })?;
    }
    status.map_err(write_failed)
}

fn read_stdin() -> Result<String, Failure> {
    let mut s = String::new();
    std::io::stdin()
        .read_to_string(&mut s)
        .map_err(|e| Failure::Usage(format!("cannot read stdin: {e}")))?;
    Ok(s)
}

fn bijection(cli: &Cli, a: &BijectionArgs, out: &mut impl Write) -> Result<(), Failure> {
    let input = read_stdin()?;
    let need_d = || {
        a.d.ok_or_else(|| Failure::Usage("--d is required for this direction".into()))
    };
    let zb = cli.zero_based;
    let mut lines: Vec<&str> = input.lines().collect();
    if a.direction == Direction::PathToTree {
        if lines.is_empty() {
            lines.push("");
        }
    } else {
        lines.retain(|l| !l.trim().is_empty());
    }
    for line in lines {
        let (result, again) = match a.direction {
            Direction::TreeToPath => {
                let d = need_d()?;
                let t = io::parse_tree(line, zb)?;
                let p = tree_to_path(&t, d)?;
                let back = a.roundtrip.then(|| path_to_tree(&p, d)).transpose()?;
                (p.to_string(), back.map(|b| b == t))
            }
            Direction::PathToTree => {
                let d = need_d()?;
                let p = io::parse_path(line)?;
                let t = path_to_tree(&p, d)?;
                let back = a.roundtrip.then(|| tree_to_path(&t, d)).transpose()?;
                (io::tree_json(&t, zb), back.map(|b| b == p))
            }
            Direction::TreeToDperm => {
                let d = need_d()? as usize;
                let t = io::parse_tree(line, zb)?;
                let p = tree_to_dperm(&t, d)?;
                let back = a.roundtrip.then(|| dperm_to_tree(&p)).transpose()?;
                (io::dperm_json(&p), back.map(|b| b == t))
            }
            Direction::DpermToTree => {
                let p = io::parse_dperm(line)?;
                if let Some(d) = a.d {
                    if d as usize != p.d() {
                        return Err(Failure::Usage(format!(
                            "--d {d} but the input has {} rows",
                            p.d()
                        )));
                    }
                }
                let t = dperm_to_tree(&p).map_err(|_| not_separable(&p))?;
                let back = a.roundtrip.then(|| tree_to_dperm(&t, p.d())).transpose()?;
                (io::tree_json(&t, zb), back.map(|b| b == p))
            }
        };
        writeln!(out, "{result}").map_err(write_failed)?;
        if again == Some(false) {
            return Err(Failure::Mismatch(format!(
                "round trip does not restore {line}"
            )));
        }
    }
    Ok(())
}

/// Names an obstruction contained in a non-separable `p`.
fn not_separable(p: &DPermutation) -> Failure {
    for q in ClassicalPattern::separability_obstructions() {
        if q.d() > p.d() || q.n() > p.n() {
            continue;
        }
        if let Ok(Some(occ)) = find_occurrence(p, &q, RowPolicy::AnyRows) {
            let rows: Vec<usize> = occ.rows.iter().map(|r| r + 1).collect();
            let cols: Vec<usize> = occ.columns.iter().map(|c| c + 1).collect();
            return Failure::NotSeparable(format!(
                "{} is not separable: contains {} in rows {rows:?}, columns {cols:?}",
                io::dperm_json(p),
                q.name()
            ));
        }
    }
    Failure::NotSeparable(format!("{} is not separable", io::dperm_json(p)))
}

fn render(cli: &Cli, a: &RenderArgs, out: &mut impl Write) -> Result<(), Failure> {
    if matches!(a.format, Some(Format::Json | Format::Csv)) {
        return Err(Failure::Usage("render prints svg".into()));
    }
    let text = match &a.tree {
        Some(t) => t.clone(),
        None => read_stdin()?,
    };
    let t = io::parse_tree(text.trim(), cli.zero_based)?;
    out.write_all(render_planar(&t)?.as_bytes())
        .map_err(write_failed)
}
