//! Command-line front end.
//!
//! Exit codes: 0 success, 1 I/O failure, 2 usage error, 3 unparseable input,
//! 4 input outside a solver envelope, 5 a verification claim failed.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::format::{parse_any, parse_graph6, to_dot, to_edge_list, to_graph6, ParseError};
use crate::generators::{
    build_jm, complete, cycle, cycle_power, path, petersen, random_corpus, star, GenError,
};
use crate::graph::Graph;
use crate::invariants::{
    connectivity, independence_number, induced_stars, toughness, TOUGHNESS_MAX_ORDER,
};
use crate::search::{run_census, CensusResult, Predicate, SearchError, SearchSpec, Source};
use crate::verify::{build_ledger, ledger_json, ClaimId, ClaimReport, LedgerConfig, VerifyError};

pub const EXIT_OK: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_PARSE: i32 = 3;
pub const EXIT_ENVELOPE: i32 = 4;
pub const EXIT_VERIFY: i32 = 5;

#[derive(Parser, Debug)]
#[command(
    name = "graph-toughness",
    version,
    about = "Exact toughness and related invariants"
)]
pub struct Cli {
    /// Worker threads (default: available parallelism)
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    workers: Option<u16>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Emit a graph from a named family
    Gen(GenArgs),
    /// Compute one invariant with its certificate
    Invariant(InvariantArgs),
    /// Check the J_m claims and report a ledger
    Verify(VerifyArgs),
    /// Filter small regular graphs by connectivity, claws and toughness
    Census(CensusArgs),
    /// Emit reproducible random connected graphs as graph6
    Corpus(CorpusArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Table,
    Graph6,
    Edges,
    Dot,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Family {
    Jm,
    #[value(name = "cycle_power", alias = "cycle-power")]
    CyclePower,
    Cycle,
    Path,
    Complete,
    Star,
    Petersen,
}

#[derive(Args, Debug)]
struct GenArgs {
    family: Family,
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    /// Power for cycle_power, leaf count for star
    #[arg(long)]
    k: Option<usize>,
    #[arg(long, value_enum, default_value = "graph6")]
    format: Format,
    /// Name J_m vertices by role (a1, b2, c3, ...)
    #[arg(long)]
    labels: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Which {
    Toughness,
    Connectivity,
    Independence,
    Claws,
}

#[derive(Args, Debug)]
struct GraphInput {
    /// Graph as a graph6 string
    #[arg(long, conflicts_with = "input")]
    graph6: Option<String>,
    /// File holding graph6 or an edge list (default: stdin)
    #[arg(long)]
    input: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct InvariantArgs {
    which: Which,
    #[command(flatten)]
    source: GraphInput,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    /// Parameter range `lo..hi` (inclusive) or a single value
    #[arg(long, default_value = "3..7", value_parser = parse_range)]
    m: (usize, usize),
    /// Restrict to these claims (repeatable)
    #[arg(long)]
    claim: Vec<ClaimId>,
    #[arg(long)]
    odd_only: bool,
    /// Also run claims outside their hypotheses and past the ceilings
    #[arg(long)]
    exploratory: bool,
    /// Largest m for toughness-based claims
    #[arg(long, default_value_t = crate::verify::TOUGHNESS_CEILING)]
    toughness_ceiling: usize,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args, Debug)]
struct CensusArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    r: usize,
    #[arg(long)]
    connected: bool,
    #[arg(long)]
    supertough: bool,
    #[arg(long)]
    has_claw: bool,
    #[arg(long)]
    claw_free: bool,
    /// Read graph6 lines from stdin instead of enumerating
    #[arg(long, conflicts_with = "input")]
    stdin: bool,
    /// Read graph6 lines from a file instead of enumerating
    #[arg(long)]
    input: Option<PathBuf>,
    /// Write survivors as graph6 lines
    #[arg(long)]
    survivors: Option<PathBuf>,
    /// Write one DOT file per survivor into this directory
    #[arg(long)]
    emit_dot: Option<PathBuf>,
    /// Fail when any input line is rejected
    #[arg(long)]
    strict: bool,
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args, Debug)]
struct CorpusArgs {
    #[arg(long, default_value_t = 100)]
    count: usize,
    #[arg(long, default_value_t = 1)]
    min_n: usize,
    #[arg(long, default_value_t = 12)]
    max_n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
}

fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let num = |t: &str| {
        t.trim()
            .parse::<usize>()
            .map_err(|_| format!("invalid number {t:?}"))
    };
    let (lo, hi) = match s.split_once("..") {
        Some((a, b)) => (num(a)?, num(b.trim_start_matches('='))?),
        None => {
            let v = num(s)?;
            (v, v)
        }
    };
    if lo > hi {
        return Err(format!("empty range {s:?}"));
    }
    Ok((lo, hi))
}

#[derive(Debug)]
enum CliError {
    Io(String),
    Usage(String),
    Parse(String),
    Envelope(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Io(_) => EXIT_IO,
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Parse(_) => EXIT_PARSE,
            CliError::Envelope(_) => EXIT_ENVELOPE,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Io(m) | CliError::Usage(m) | CliError::Parse(m) | CliError::Envelope(m) => m,
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}

impl From<ParseError> for CliError {
    fn from(e: ParseError) -> Self {
        if e.is_envelope() {
            CliError::Envelope(e.to_string())
        } else {
            CliError::Parse(e.to_string())
        }
    }
}

impl From<GenError> for CliError {
    fn from(e: GenError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<VerifyError> for CliError {
    fn from(e: VerifyError) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<SearchError> for CliError {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::Envelope { .. } => CliError::Envelope(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

/// Streams and terminal settings for one invocation.
pub struct Io<'a> {
    pub stdin: &'a mut (dyn Read + Send),
    pub stdout: &'a mut (dyn Write + Send),
    pub stderr: &'a mut (dyn Write + Send),
    /// ANSI colors in table output.
    pub color: bool,
}

/// Parses `args` (program name first), runs the command and returns the
/// exit code.
pub fn run<I, T>(args: I, io: &mut Io<'_>) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = if io.color {
                e.render().ansi().to_string()
            } else {
                e.render().to_string()
            };
            let out: &mut dyn Write = if e.use_stderr() { io.stderr } else { io.stdout };
            let _ = write!(out, "{text}");
            return code;
        }
    };
    let pool = match cli.workers {
        Some(w) => rayon::ThreadPoolBuilder::new()
            .num_threads(w as usize)
            .build(),
        None => rayon::ThreadPoolBuilder::new().build(),
    };
    let pool = match pool {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(io.stderr, "error: {e}");
            return EXIT_IO;
        }
    };
    let result = pool.install(|| dispatch(cli.command, io));
    match result {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(io.stderr, "error: {}", e.message());
            e.code()
        }
    }
}

fn dispatch(command: Command, io: &mut Io<'_>) -> Result<i32, CliError> {
    match command {
        Command::Gen(a) => cmd_gen(a, io),
        Command::Invariant(a) => cmd_invariant(a, io),
        Command::Verify(a) => cmd_verify(a, io),
        Command::Census(a) => cmd_census(a, io),
        Command::Corpus(a) => cmd_corpus(a, io),
    }
}

fn unsupported(format: Format, cmd: &str) -> CliError {
    CliError::Usage(format!(
        "format {} is not available for {cmd}",
        format.to_possible_value().unwrap().get_name()
    ))
}

fn emit_json(out: &mut dyn Write, v: &Value) -> Result<(), CliError> {
    let text = serde_json::to_string_pretty(v).expect("json values serialize");
    writeln!(out, "{text}")?;
    Ok(())
}

fn paint(color: bool, code: &str, text: &str) -> String {
    if color {
        format!("\x1b[{code}m{text}\x1b[0m")
    } else {
        text.to_string()
    }
}

fn required(v: Option<usize>, flag: &str, family: &str) -> Result<usize, CliError> {
    v.ok_or_else(|| CliError::Usage(format!("{family} needs --{flag}")))
}

fn cmd_gen(a: GenArgs, io: &mut Io<'_>) -> Result<i32, CliError> {
    let mut labels = None;
    let g = match a.family {
        Family::Jm => {
            let lg = build_jm(required(a.m, "m", "jm")?)?;
            if a.labels {
                labels = Some(lg.labeling.names());
            }
            lg.graph
        }
        Family::CyclePower => cycle_power(
            required(a.n, "n", "cycle_power")?,
            required(a.k, "k", "cycle_power")?,
        )?,
        Family::Cycle => cycle(required(a.n, "n", "cycle")?)?,
        Family::Path => path(required(a.n, "n", "path")?)?,
        Family::Complete => complete(required(a.n, "n", "complete")?)?,
        Family::Star => star(required(a.k, "k", "star")?)?,
        Family::Petersen => petersen(),
    };
    if a.labels && labels.is_none() {
        return Err(CliError::Usage("--labels applies to jm only".into()));
    }
    match a.format {
        Format::Graph6 => writeln!(io.stdout, "{}", to_graph6(&g))?,
        Format::Edges => write!(io.stdout, "{}", to_edge_list(&g))?,
        Format::Dot => write!(io.stdout, "{}", to_dot(&g, labels.as_deref()))?,
        Format::Json => {
            let mut v = json!({
                "n": g.order(),
                "edges": g.edges().into_iter().map(|(u, v)| [u, v]).collect::<Vec<_>>(),
                "graph6": to_graph6(&g),
            });
            if let Some(l) = labels {
                v["labels"] = json!(l);
            }
            emit_json(io.stdout, &v)?;
        }
        Format::Table => return Err(unsupported(a.format, "gen")),
    }
    Ok(EXIT_OK)
}

fn read_graph(src: &GraphInput, io: &mut Io<'_>) -> Result<Graph, CliError> {
    if let Some(s) = &src.graph6 {
        return Ok(parse_graph6(s)?);
    }
    let text = match &src.input {
        Some(p) => read_file(p)?,
        None => {
            let mut s = String::new();
            io.stdin.read_to_string(&mut s)?;
            s
        }
    };
    Ok(parse_any(&text)?)
}

fn read_file(p: &Path) -> Result<String, CliError> {
    fs::read_to_string(p).map_err(|e| CliError::Io(format!("{}: {e}", p.display())))
}

fn cmd_invariant(a: InvariantArgs, io: &mut Io<'_>) -> Result<i32, CliError> {
    if !matches!(a.format, Format::Json | Format::Table) {
        return Err(unsupported(a.format, "invariant"));
    }
    let g = read_graph(&a.source, io)?;
    let v = match a.which {
        Which::Toughness => {
            if g.order() > TOUGHNESS_MAX_ORDER {
                return Err(CliError::Envelope(format!(
                    "toughness is limited to {TOUGHNESS_MAX_ORDER} vertices, got {}",
                    g.order()
                )));
            }
            toughness(&g).to_json()
        }
        Which::Connectivity => connectivity(&g).to_json(&g),
        Which::Independence => independence_number(&g).to_json(),
        Which::Claws => {
            let stars = induced_stars(&g, 3);
            let mut witnesses = Vec::new();
            for s in &stars {
                if witnesses
                    .last()
                    .is_none_or(|w: &Value| w["center"] != s.center)
                {
                    witnesses.push(json!({"center": s.center, "leaves": s.leaves}));
                }
            }
            let centers: Vec<usize> = witnesses
                .iter()
                .map(|w| w["center"].as_u64().unwrap() as usize)
                .collect();
            json!({
                "invariant": "claws",
                "claw_free": centers.is_empty(),
                "value": centers,
                "witness": witnesses,
            })
        }
    };
    match a.format {
        Format::Json => emit_json(io.stdout, &v)?,
        _ => {
            let show = |x: &Value| match x {
                Value::Object(o) if o.contains_key("num") => {
                    let (n, d) = (&o["num"], &o["den"]);
                    if d == 1 {
                        n.to_string()
                    } else {
                        format!("{n}/{d}")
                    }
                }
                other => other.to_string(),
            };
            writeln!(
                io.stdout,
                "invariant  {}",
                v["invariant"].as_str().unwrap_or("")
            )?;
            writeln!(io.stdout, "value      {}", show(&v["value"]))?;
            writeln!(io.stdout, "witness    {}", v["witness"])?;
            if let Some(k) = v.get("components") {
                writeln!(io.stdout, "components {k}")?;
            }
        }
    }
    Ok(EXIT_OK)
}

fn verify_table(reports: &[ClaimReport], color: bool, out: &mut dyn Write) -> Result<(), CliError> {
    writeln!(
        out,
        "{:<18} {:<12} {:<7} NOTE",
        "CLAIM", "SUBJECT", "VERDICT"
    )?;
    for r in reports {
        let verdict = if r.passed() {
            paint(color, "32", "PASS   ")
        } else {
            paint(color, "31", "FAIL   ")
        };
        let note = if r.exploratory { "exploratory" } else { "" };
        writeln!(
            out,
            "{:<18} {:<12} {verdict} {note}",
            r.claim.name(),
            r.subject
        )?;
    }
    let failed = reports.iter().filter(|r| !r.passed()).count();
    writeln!(out, "{} reports, {} failed", reports.len(), failed)?;
    Ok(())
}

fn cmd_verify(a: VerifyArgs, io: &mut Io<'_>) -> Result<i32, CliError> {
    if !matches!(a.format, Format::Json | Format::Table) {
        return Err(unsupported(a.format, "verify"));
    }
    let mut cfg = LedgerConfig::new(a.m.0, a.m.1);
    cfg.claims = a.claim;
    cfg.odd_only = a.odd_only;
    cfg.exploratory = a.exploratory;
    cfg.toughness_ceiling = a.toughness_ceiling;
    let ledger = build_ledger(&cfg)?;
    match a.format {
        Format::Json => emit_json(io.stdout, &ledger_json(&ledger))?,
        _ => verify_table(&ledger, io.color, io.stdout)?,
    }
    Ok(if ledger.iter().all(ClaimReport::passed) {
        EXIT_OK
    } else {
        EXIT_VERIFY
    })
}

fn census_table(res: &CensusResult, out: &mut dyn Write) -> Result<(), CliError> {
    writeln!(
        out,
        "n={} r={} examined={} complete_excluded={}",
        res.n, res.r, res.examined, res.complete_excluded
    )?;
    for s in &res.stages {
        writeln!(
            out,
            "  {:<11} {:>6} -> {:>6}",
            s.predicate.name(),
            s.evaluated,
            s.passed
        )?;
    }
    for s in &res.survivors {
        writeln!(
            out,
            "{}  toughness={}  alpha={}  claw_centers={:?}",
            s.graph6,
            s.toughness.value(),
            s.independence.alpha,
            s.claw_centers.to_vec()
        )?;
    }
    for e in &res.errors {
        writeln!(out, "line {}: {}", e.line, e.message)?;
    }
    writeln!(out, "{} survivors", res.survivors.len())?;
    Ok(())
}

fn cmd_census(a: CensusArgs, io: &mut Io<'_>) -> Result<i32, CliError> {
    if !matches!(a.format, Format::Json | Format::Table) {
        return Err(unsupported(a.format, "census"));
    }
    if let Some(p) = &a.survivors {
        let parent = p.parent().filter(|d| !d.as_os_str().is_empty());
        if parent.is_some_and(|d| !d.is_dir()) {
            return Err(CliError::Io(format!(
                "{}: directory does not exist",
                p.display()
            )));
        }
    }
    if let Some(d) = &a.emit_dot {
        fs::create_dir_all(d).map_err(|e| CliError::Io(format!("{}: {e}", d.display())))?;
    }
    let source = if a.stdin {
        let mut s = String::new();
        io.stdin.read_to_string(&mut s)?;
        Source::Graph6(s)
    } else if let Some(p) = &a.input {
        Source::Graph6(read_file(p)?)
    } else {
        Source::Builtin
    };
    let predicates: Vec<Predicate> = [
        (a.connected, Predicate::Connected),
        (a.has_claw, Predicate::HasClaw),
        (a.claw_free, Predicate::ClawFree),
        (a.supertough, Predicate::Supertough),
    ]
    .into_iter()
    .filter_map(|(on, p)| on.then_some(p))
    .collect();
    let spec = SearchSpec {
        n: a.n,
        r: a.r,
        source,
        predicates,
    };
    let res = run_census(&spec)?;
    if let Some(p) = &a.survivors {
        fs::write(p, res.survivors_graph6())
            .map_err(|e| CliError::Io(format!("{}: {e}", p.display())))?;
    }
    if let Some(d) = &a.emit_dot {
        for (i, s) in res.survivors.iter().enumerate() {
            let file = d.join(format!("survivor_{}.dot", i + 1));
            fs::write(&file, to_dot(&s.graph, None))
                .map_err(|e| CliError::Io(format!("{}: {e}", file.display())))?;
        }
    }
    match a.format {
        Format::Json => emit_json(io.stdout, &res.to_json())?,
        _ => census_table(&res, io.stdout)?,
    }
    for e in &res.errors {
        writeln!(io.stderr, "line {}: {}", e.line, e.message)?;
    }
    Ok(if a.strict && !res.errors.is_empty() {
        EXIT_PARSE
    } else {
        EXIT_OK
    })
}

fn cmd_corpus(a: CorpusArgs, io: &mut Io<'_>) -> Result<i32, CliError> {
    for g in random_corpus(a.count, a.min_n, a.max_n, a.seed)? {
        writeln!(io.stdout, "{}", to_graph6(&g))?;
    }
    Ok(EXIT_OK)
}
