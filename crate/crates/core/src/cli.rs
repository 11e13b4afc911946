//! Command-line front end: `build`, `analyze`, `verify`, `hunt` and
//! `list-groups`.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage or configuration
//! error, 3 enumeration budget or clique limit exhausted. Every error is a
//! single `error: ...` line on stderr.

use std::ffi::OsString;
use std::fmt;
use std::io::Write;
use std::path::PathBuf;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::builders::{analyze, build, GraphKind};
use crate::error::Error;
use crate::graph::{to_dot, DEFAULT_CLIQUE_LIMIT, MAX_VERTICES};
use crate::group::{
    catalog_entries, make_abelian, make_cyclic, make_dihedral, make_quaternion, make_symmetric,
    AbelianShape, CatalogEntry, Group, CATALOG_MAX_ORDER,
};
use crate::morphism::DEFAULT_ENUM_BUDGET;
use crate::verifier::{hunt_converse, run_all, VerifyConfig, CHECK_IDS};

const SELECTOR_HELP: &str = "\
Group selectors:
  cyclic:N          Z_N
  abelian:SHAPE     product of cyclic prime-power factors, x-separated,
                    e.g. abelian:2^3x2 = Z8 x Z2, abelian:2^2x3 = Z4 x Z3
  quaternion        Q8
  dihedral:M        symmetries of the M-gon (M >= 3), order 2M
  symmetric:D       S_D (D <= 5)
  catalog:O.I       I-th catalog group of order O (see list-groups),
  catalog:NAME      catalog group by name, e.g. catalog:Dic3,
  catalog:O         the only catalog group of order O
Groups are limited to 128 elements.";

/// A parsed `--group` argument.
#[derive(Debug, Clone)]
pub enum GroupSelector {
    Cyclic(usize),
    Abelian(AbelianShape),
    Quaternion,
    Dihedral(usize),
    Symmetric(usize),
    Catalog(&'static CatalogEntry),
}

impl GroupSelector {
    pub fn build(&self) -> crate::Result<Group> {
        match self {
            GroupSelector::Cyclic(n) => Ok(make_cyclic(*n)),
            GroupSelector::Abelian(shape) => make_abelian(shape),
            GroupSelector::Quaternion => Ok(make_quaternion()),
            GroupSelector::Dihedral(m) => make_dihedral(*m),
            GroupSelector::Symmetric(d) => make_symmetric(*d),
            GroupSelector::Catalog(e) => e.build(),
        }
    }
}

impl fmt::Display for GroupSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupSelector::Cyclic(n) => write!(f, "cyclic:{n}"),
            GroupSelector::Abelian(s) => write!(f, "abelian:{}", s.selector()),
            GroupSelector::Quaternion => f.write_str("quaternion"),
            GroupSelector::Dihedral(m) => write!(f, "dihedral:{m}"),
            GroupSelector::Symmetric(d) => write!(f, "symmetric:{d}"),
            GroupSelector::Catalog(e) => f.write_str(&e.selector()),
        }
    }
}

fn parse_count(what: &str, text: &str) -> crate::Result<usize> {
    text.parse()
        .map_err(|_| Error::Parse(format!("{what} expects a positive integer, got {text:?}")))
}

impl FromStr for GroupSelector {
    type Err = Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        let (family, arg) = s.split_once(':').unwrap_or((s, ""));
        let too_big = |order: usize| Error::SizeCap { order, cap: MAX_VERTICES };
        let sel = match family {
            "cyclic" => {
                let n = parse_count("cyclic", arg)?;
                if n == 0 {
                    return Err(Error::Parse("cyclic:0 is not a group".into()));
                }
                if n > MAX_VERTICES {
                    return Err(too_big(n));
                }
                GroupSelector::Cyclic(n)
            }
            "abelian" => {
                let shape = AbelianShape::parse(arg)?;
                if shape.order() > MAX_VERTICES as u64 {
                    return Err(too_big(shape.order().min(usize::MAX as u64) as usize));
                }
                GroupSelector::Abelian(shape)
            }
            "quaternion" | "q8" | "Q8" if arg.is_empty() => GroupSelector::Quaternion,
            "dihedral" => {
                let m = parse_count("dihedral", arg)?;
                if m < 3 {
                    return Err(Error::Parse(format!("dihedral:{m} needs M >= 3")));
                }
                if 2 * m > MAX_VERTICES {
                    return Err(too_big(2 * m));
                }
                GroupSelector::Dihedral(m)
            }
            "symmetric" => {
                let d = parse_count("symmetric", arg)?;
                if !(1..=5).contains(&d) {
                    return Err(Error::Parse(format!("symmetric:{d} needs 1 <= D <= 5")));
                }
                GroupSelector::Symmetric(d)
            }
            "catalog" => GroupSelector::Catalog(parse_catalog(arg)?),
            _ => {
                return Err(Error::Parse(format!(
                    "unknown group selector {s:?}; try cyclic:N, abelian:SHAPE, quaternion, dihedral:M, symmetric:D or catalog:O.I"
                )))
            }
        };
        Ok(sel)
    }
}

fn parse_catalog(arg: &str) -> crate::Result<&'static CatalogEntry> {
    let all = catalog_entries(CATALOG_MAX_ORDER)?;
    if let Some((o, i)) = arg.split_once('.') {
        let (o, i) = (parse_count("catalog order", o)?, parse_count("catalog index", i)?);
        return all
            .iter()
            .find(|e| e.order == o && e.index == i)
            .ok_or_else(|| Error::Parse(format!("no catalog group {o}.{i}")));
    }
    if let Ok(o) = arg.parse::<usize>() {
        let of_order: Vec<_> = all.iter().filter(|e| e.order == o).collect();
        return match of_order.as_slice() {
            [only] => Ok(*only),
            [] => Err(Error::Parse(format!(
                "no catalog group of order {o} (catalog covers 1..={CATALOG_MAX_ORDER})"
            ))),
            many => Err(Error::Parse(format!(
                "order {o} has {} catalog groups; pick one of {}",
                many.len(),
                many.iter().map(|e| e.selector()).collect::<Vec<_>>().join(", ")
            ))),
        };
    }
    all.iter()
        .find(|e| e.name.eq_ignore_ascii_case(arg))
        .ok_or_else(|| Error::Parse(format!("no catalog group named {arg:?}")))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Dot,
    Json,
    Text,
}

#[derive(Debug, Parser)]
#[command(
    name = "endograph",
    version,
    about = "Endomorphism, automorphism and power graphs of finite groups",
    after_help = SELECTOR_HELP
)]
pub struct Cli {
    /// Output format (build defaults to dot, everything else to text).
    #[arg(long, global = true, value_enum)]
    pub format: Option<Format>,
    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Largest number of candidate generator images tried by enumeration.
    #[arg(long, global = true, default_value_t = DEFAULT_ENUM_BUDGET)]
    pub max_enum_budget: u128,
    /// Accepted for compatibility; every computation is deterministic.
    #[arg(long, global = true)]
    pub seedless: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write a graph of a group as DOT or JSON.
    #[command(after_help = SELECTOR_HELP)]
    Build(GraphArgs),
    /// Report structural properties of a graph of a group.
    #[command(after_help = SELECTOR_HELP)]
    Analyze(GraphArgs),
    /// Run the verification suite.
    Verify(VerifyArgs),
    /// Sweep equal-order catalog pairs for isomorphic directed endomorphism graphs.
    Hunt(HuntArgs),
    /// List the catalog groups and their selectors.
    ListGroups(ListArgs),
}

#[derive(Debug, Args)]
pub struct GraphArgs {
    /// Group selector, e.g. cyclic:6, abelian:2^3x2, quaternion, catalog:8.5.
    #[arg(long, short)]
    pub group: GroupSelector,
    /// endo-directed, endo, auto, power-directed or power.
    #[arg(long, short, default_value = "endo")]
    pub kind: GraphKind,
    /// Remove the identity vertex.
    #[arg(long)]
    pub delete_identity: bool,
    /// Label DOT vertices with coordinate tuples (abelian groups).
    #[arg(long)]
    pub labels: bool,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Run only these checks (repeatable or comma-separated).
    #[arg(long, value_delimiter = ',')]
    pub only: Vec<String>,
    /// Largest n for the cyclic formula checks (power equality stops at 48).
    #[arg(long)]
    pub max_n: Option<u64>,
    /// Largest order of the enumeration-backed abelian fleet.
    #[arg(long)]
    pub max_order: Option<u64>,
    /// Largest order of the fast-path-only abelian fleet.
    #[arg(long)]
    pub fast_path_max_order: Option<u64>,
    /// Largest order on which all arc strategies are cross-checked.
    #[arg(long)]
    pub audit_max_order: Option<u64>,
    /// Largest catalog order.
    #[arg(long)]
    pub catalog_max_order: Option<usize>,
    /// Record per-check wall-clock time.
    #[arg(long)]
    pub timings: bool,
    /// Also write the JSON report to this file.
    #[arg(long)]
    pub report: Option<PathBuf>,
    /// List check ids and exit.
    #[arg(long)]
    pub list: bool,
}

#[derive(Debug, Args)]
pub struct HuntArgs {
    /// Largest group order (at most 15).
    #[arg(long, default_value_t = CATALOG_MAX_ORDER)]
    pub max_order: usize,
}

#[derive(Debug, Args)]
pub struct ListArgs {
    #[arg(long, default_value_t = CATALOG_MAX_ORDER)]
    pub max_order: usize,
}

/// Failure of one CLI invocation.
#[derive(Debug)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::BudgetExceeded { .. } | Error::CliqueOverflow { .. } => 3,
            _ => 2,
        };
        CliError { code, message: e.to_string() }
    }
}

fn usage(message: impl Into<String>) -> CliError {
    CliError { code: 2, message: message.into() }
}

/// Output text and exit code of a successful command.
struct Output {
    text: String,
    code: i32,
}

#[derive(Serialize)]
struct CatalogRow<'a> {
    selector: String,
    name: &'a str,
    order: usize,
    family: &'a str,
}

fn execute(cli: &Cli) -> Result<Output, CliError> {
    let budget = cli.max_enum_budget;
    let done = |text: String| Ok(Output { text, code: 0 });
    match &cli.command {
        Command::Build(a) => {
            let format = cli.format.unwrap_or(Format::Dot);
            let g = a.group.build()?;
            let built = build(&g, a.kind, a.delete_identity, budget)?;
            let coords = |x: usize| -> String {
                match g.presentation() {
                    Some(p) => {
                        let c: Vec<String> = p.coords(x).iter().map(u64::to_string).collect();
                        format!("({})", c.join(","))
                    }
                    None => x.to_string(),
                }
            };
            let display: Option<&dyn Fn(usize) -> String> = if a.labels { Some(&coords) } else { None };
            match format {
                Format::Dot => done(to_dot(&built.graph, display)),
                Format::Json => done(
                    serde_json::to_string(&built.graph.to_json()).expect("graph serializes") + "\n",
                ),
                Format::Text => {
                    let labels = built.graph.labels();
                    let name = |v: usize| display.map_or_else(|| labels[v].to_string(), |f| f(labels[v]));
                    let sep = if built.graph.is_directed() { "->" } else { "--" };
                    let mut text = format!(
                        "{} {} of {}: {} vertices, {} {}\n",
                        a.kind,
                        if a.delete_identity { "graph without identity" } else { "graph" },
                        g.name(),
                        built.graph.vertex_count(),
                        built.graph.pairs().len(),
                        if built.graph.is_directed() { "arcs" } else { "edges" }
                    );
                    for (u, v) in built.graph.pairs() {
                        text.push_str(&format!("{} {sep} {}\n", name(u), name(v)));
                    }
                    done(text)
                }
            }
        }
        Command::Analyze(a) => {
            let g = a.group.build()?;
            let built = build(&g, a.kind, a.delete_identity, budget)?;
            let report = analyze(&g, &built, DEFAULT_CLIQUE_LIMIT)?;
            match cli.format.unwrap_or(Format::Text) {
                Format::Text => done(report.to_text()),
                Format::Json => done(serde_json::to_string_pretty(&report).expect("analysis serializes") + "\n"),
                Format::Dot => Err(usage("analyze supports --format text or json")),
            }
        }
        Command::Verify(v) => {
            if v.list {
                return done(CHECK_IDS.join("\n") + "\n");
            }
            let mut config = VerifyConfig {
                budget,
                only: v.only.clone(),
                timings: v.timings,
                ..VerifyConfig::default()
            };
            if let Some(n) = v.max_n {
                config.formula_max_n = n;
                config.power_max_n = n.min(config.power_max_n);
            }
            if let Some(n) = v.max_order {
                config.abelian_max_order = n;
            }
            if let Some(n) = v.fast_path_max_order {
                config.fast_path_max_order = n;
            }
            if let Some(n) = v.audit_max_order {
                config.audit_max_order = n;
            }
            if let Some(n) = v.catalog_max_order {
                config.catalog_max_order = n;
            }
            let report = run_all(&config)?;
            if let Some(path) = &v.report {
                std::fs::write(path, report.to_json())
                    .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?;
            }
            let text = match cli.format.unwrap_or(Format::Text) {
                Format::Text => report.to_text(),
                Format::Json => report.to_json(),
                Format::Dot => return Err(usage("verify supports --format text or json")),
            };
            Ok(Output { text, code: if report.passed() { 0 } else { 1 } })
        }
        Command::Hunt(h) => {
            let check = hunt_converse(h.max_order, budget)?;
            match cli.format.unwrap_or(Format::Text) {
                Format::Json => done(serde_json::to_string_pretty(&check).expect("check serializes") + "\n"),
                Format::Text => {
                    let found: Vec<_> = check.counterexamples().collect();
                    let mut text = format!(
                        "{} equal-order pairs compared, {} with isomorphic directed endomorphism graphs\n",
                        check.witnesses.len(),
                        found.len()
                    );
                    for w in &check.witnesses {
                        text.push_str(&format!("{}: {}\n", w.group, w.observed));
                    }
                    for n in &check.notes {
                        text.push_str(&format!("note: {n}\n"));
                    }
                    done(text)
                }
                Format::Dot => Err(usage("hunt supports --format text or json")),
            }
        }
        Command::ListGroups(l) => {
            let rows: Vec<CatalogRow> = catalog_entries(l.max_order)?
                .iter()
                .map(|e| CatalogRow { selector: e.selector(), name: e.name, order: e.order, family: e.family })
                .collect();
            match cli.format.unwrap_or(Format::Text) {
                Format::Json => done(serde_json::to_string_pretty(&rows).expect("rows serialize") + "\n"),
                Format::Text => {
                    let mut text = String::new();
                    for r in &rows {
                        text.push_str(&format!("{:<14} {:<10} order {:>2}  {}\n", r.selector, r.name, r.order, r.family));
                    }
                    done(text)
                }
                Format::Dot => Err(usage("list-groups supports --format text or json")),
            }
        }
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code.
pub fn run_with<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = write!(stdout, "{e}");
                return 0;
            }
            let rendered = e.to_string();
            let line = rendered.lines().find(|l| !l.trim().is_empty()).unwrap_or("invalid arguments");
            let line = line.strip_prefix("error: ").unwrap_or(line);
            let _ = writeln!(stderr, "error: {line}");
            return 2;
        }
    };
    let result = execute(&cli).and_then(|out| {
        match &cli.out {
            Some(path) => std::fs::write(path, &out.text)
                .map_err(|e| usage(format!("cannot write {}: {e}", path.display())))?,
            None => stdout
                .write_all(out.text.as_bytes())
                .map_err(|e| usage(format!("cannot write output: {e}")))?,
        }
        Ok(out.code)
    });
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(stderr, "error: {}", e.message.replace('\n', " "));
            e.code
        }
    }
}

/// Runs with the process arguments and standard streams.
pub fn run() -> i32 {
    run_with(std::env::args_os(), &mut std::io::stdout().lock(), &mut std::io::stderr().lock())
}
