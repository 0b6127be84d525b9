//! Subcommands of the `nicepar` binary. Each returns the text to print and
//! an exit status.

use std::fmt::Write as _;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use nicepar::classify::{count_even_orbits, genfun_coefficients, is_nice, natural_dimension, NicenessVerdict};
use nicepar::jordan::{dimension_report, jordan_form};
use nicepar::oracle::matrix_model::MatrixModel;
use nicepar::oracle::{self, GradedAlgebra, RankReport, DEFAULT_SEED, DEFAULT_TRIALS};
use nicepar::parabolic::{blocks_to_coloring, coloring_to_blocks, levi_dim};
use nicepar::richardson::{build_matrix, RichardsonMatrix};
use nicepar::{BlockSequence, Error, LieType, ParabolicSpec};

pub const EXIT_OK: u8 = 0;
pub const EXIT_USAGE: u8 = 1;
pub const EXIT_DISAGREE: u8 = 2;
pub const EXIT_INDETERMINATE: u8 = 3;

/// Largest number of colorings a sweep visits unless `--budget` says otherwise.
pub const DEFAULT_BUDGET: usize = 20_000;

#[derive(Debug, Parser)]
#[command(name = "nicepar", version, about = "Nice parabolic subalgebras and their Richardson elements")]
pub struct Cli {
    #[command(flatten)]
    pub common: Common,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args, Clone)]
pub struct Common {
    /// Print JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    /// Seed for the oracle's random elements.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    /// Random elements the oracle may draw before giving up.
    #[arg(long, global = true, default_value_t = DEFAULT_TRIALS)]
    pub trials: usize,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide whether a parabolic is nice.
    Classify {
        /// `A6:1,0,1,0,0,1` or `C5#3,4,3`.
        spec: String,
        /// Also run the exact oracle.
        #[arg(long)]
        verify: bool,
    },
    /// Jordan form of a generic element of g_1 and the centralizer criterion.
    Jordan {
        spec: String,
        /// Compare with the oracle's verdict.
        #[arg(long)]
        verify: bool,
    },
    /// Print the Richardson matrix of a nice classical parabolic.
    Richardson {
        spec: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Confirm membership, grading, centralizer and ranks exactly.
        #[arg(long)]
        check: bool,
    },
    /// Compare all three routes on every coloring up to a rank.
    Sweep {
        /// Type letter (A, B, C, D) or exceptional label (G2, F4, E6, E7, E8).
        lie_type: String,
        /// Largest rank; the same as `--max-rank`.
        max_rank: Option<usize>,
        #[arg(long = "max-rank")]
        max_rank_flag: Option<usize>,
        /// Stop after this many colorings.
        #[arg(long, default_value_t = DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Count even nilpotent orbits of a classical algebra.
    EvenOrbits { lie_type: String, rank: usize },
    /// Both sides of the generating-function identity.
    Genfun { max_degree: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: u8,
}

impl Output {
    fn ok(stdout: String) -> Self {
        Output { stdout, stderr: String::new(), code: EXIT_OK }
    }

    fn usage(msg: impl std::fmt::Display) -> Self {
        Output { stdout: String::new(), stderr: format!("error: {msg}\n"), code: EXIT_USAGE }
    }
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn parse_spec(s: &str) -> Result<ParabolicSpec, Output> {
    s.parse::<ParabolicSpec>().map_err(|e| match e {
        Error::Parse { pos, .. } => Output::usage(format!("{e}\n  {s}\n  {}^", " ".repeat(pos))),
        e => Output::usage(e),
    })
}

fn blocks_label(b: &BlockSequence) -> String {
    let items: Vec<String> = b.blocks().iter().map(ToString::to_string).collect();
    format!("{}#{}", b.lie_type().label(b.rank()), items.join(","))
}

pub fn run(cli: Cli) -> Output {
    let c = &cli.common;
    if c.trials == 0 {
        return Output::usage("--trials must be at least 1");
    }
    let result = match cli.command {
        Command::Classify { spec, verify } => cmd_classify(&spec, verify, c),
        Command::Jordan { spec, verify } => cmd_jordan(&spec, verify, c),
        Command::Richardson { spec, format, check } => {
            cmd_richardson(&spec, if c.json { Format::Json } else { format }, check)
        }
        Command::Sweep { lie_type, max_rank, max_rank_flag, budget } => {
            cmd_sweep(&lie_type, max_rank_flag.or(max_rank), budget, c)
        }
        Command::EvenOrbits { lie_type, rank } => cmd_even_orbits(&lie_type, rank, c),
        Command::Genfun { max_degree } => cmd_genfun(max_degree, c),
    };
    result.unwrap_or_else(|o| o)
}

#[derive(Debug, Serialize)]
pub struct Verdict {
    pub nice: bool,
    pub rule: String,
}

impl From<NicenessVerdict> for Verdict {
    fn from(v: NicenessVerdict) -> Self {
        Verdict { nice: v.nice, rule: v.rule.tag().to_string() }
    }
}

#[derive(Debug, Serialize)]
pub struct DimensionRoute {
    pub nice: bool,
    pub centralizer_dim: usize,
    pub levi_dim: usize,
}

#[derive(Debug, Serialize)]
pub struct OracleSummary {
    /// `null` when the oracle was indeterminate.
    pub nice: Option<bool>,
    pub centralizer_dim: Option<usize>,
    pub levi_dim: Option<usize>,
    pub samples: Option<usize>,
    pub seed: u64,
    pub trials: usize,
    pub message: Option<String>,
}

fn run_oracle(spec: &ParabolicSpec, c: &Common) -> OracleSummary {
    match oracle::is_nice_oracle(spec, c.trials, c.seed) {
        Ok(v) => OracleSummary {
            nice: Some(v.nice),
            centralizer_dim: Some(v.centralizer_dim),
            levi_dim: Some(v.levi_dim),
            samples: Some(v.samples),
            seed: c.seed,
            trials: c.trials,
            message: None,
        },
        Err(e) => OracleSummary {
            nice: None,
            centralizer_dim: None,
            levi_dim: None,
            samples: None,
            seed: c.seed,
            trials: c.trials,
            message: Some(e.to_string()),
        },
    }
}

#[derive(Debug, Serialize)]
pub struct JordanData {
    pub partition: Vec<usize>,
    pub dual: Vec<usize>,
    /// `rank x^j` for `j = 1, 2, ..`.
    pub ranks: Vec<usize>,
    pub centralizer_dim: usize,
    pub levi_dim: usize,
}

#[derive(Debug, Serialize)]
pub struct Report {
    pub command: &'static str,
    pub spec: String,
    pub lie_type: String,
    pub rank: usize,
    pub coloring: Vec<u8>,
    pub blocks: Option<Vec<usize>>,
    pub blocks_spec: Option<String>,
    pub closed_form: Verdict,
    pub dimension_route: Option<DimensionRoute>,
    pub oracle: Option<OracleSummary>,
    pub jordan: Option<JordanData>,
    pub disagreement: bool,
    pub timings_ms: Timings,
}

#[derive(Debug, Default, Serialize)]
pub struct Timings {
    pub closed_form: f64,
    pub oracle: Option<f64>,
}

fn millis(start: Instant) -> f64 {
    (start.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

fn build_report(command: &'static str, spec: &ParabolicSpec, verify: bool, with_jordan: bool, c: &Common) -> Report {
    let t0 = Instant::now();
    let closed = is_nice(spec);
    let blocks = spec.lie_type().is_classical().then(|| coloring_to_blocks(spec).expect("classical"));
    let dims = blocks.as_ref().map(|b| dimension_report(b).expect("valid blocks"));
    let jordan = match (&blocks, &dims, with_jordan) {
        (Some(b), Some(d), true) => Some(JordanData {
            partition: d.partition.parts().to_vec(),
            dual: d.dual.parts().to_vec(),
            ranks: jordan_form(b).expect("valid blocks").ranks,
            centralizer_dim: d.centralizer_dim,
            levi_dim: d.levi_dim,
        }),
        _ => None,
    };
    let closed_ms = millis(t0);
    let (oracle, oracle_ms) = if verify {
        let t1 = Instant::now();
        let o = run_oracle(spec, c);
        (Some(o), Some(millis(t1)))
    } else {
        (None, None)
    };
    let dimension_route =
        dims.map(|d| DimensionRoute { nice: d.nice(), centralizer_dim: d.centralizer_dim, levi_dim: d.levi_dim });
    let mut disagreement = dimension_route.as_ref().is_some_and(|d| d.nice != closed.nice);
    if let Some(Some(n)) = oracle.as_ref().map(|o| o.nice) {
        disagreement |= n != closed.nice;
    }
    Report {
        command,
        spec: spec.to_string(),
        lie_type: spec.lie_type().to_string(),
        rank: spec.rank(),
        coloring: spec.coloring().to_vec(),
        blocks_spec: blocks.as_ref().map(blocks_label),
        blocks: blocks.map(|b| b.blocks().to_vec()),
        closed_form: closed.into(),
        dimension_route,
        oracle,
        jordan,
        disagreement,
        timings_ms: Timings { closed_form: closed_ms, oracle: oracle_ms },
    }
}

fn report_code(r: &Report) -> u8 {
    if r.disagreement {
        EXIT_DISAGREE
    } else if r.oracle.as_ref().is_some_and(|o| o.nice.is_none()) {
        EXIT_INDETERMINATE
    } else {
        EXIT_OK
    }
}

fn yes_no(nice: bool) -> &'static str {
    if nice {
        "nice"
    } else {
        "not nice"
    }
}

fn tuple(v: &[usize]) -> String {
    let items: Vec<String> = v.iter().map(ToString::to_string).collect();
    format!("({})", items.join(","))
}

fn oracle_line(out: &mut String, o: &OracleSummary) {
    match (o.nice, o.centralizer_dim, o.levi_dim) {
        (Some(n), Some(c), Some(m)) => {
            let _ = writeln!(out, "oracle:      {} (dim g^x {c}, dim m {m}, {} sample(s))", yes_no(n), o.samples.unwrap_or(0));
        }
        _ => {
            let _ = writeln!(out, "oracle:      indeterminate ({})", o.message.as_deref().unwrap_or(""));
        }
    }
}

fn cmd_classify(spec: &str, verify: bool, c: &Common) -> Result<Output, Output> {
    let spec = parse_spec(spec)?;
    let r = build_report("classify", &spec, verify, false, c);
    let code = report_code(&r);
    let stdout = if c.json {
        to_json(&r)
    } else {
        let mut s = String::new();
        let _ = write!(s, "{}", r.spec);
        if let Some(b) = &r.blocks {
            let _ = write!(s, "  blocks {}", tuple(b));
        }
        let _ = writeln!(s);
        let _ = writeln!(s, "closed form: {} ({})", yes_no(r.closed_form.nice), r.closed_form.rule);
        if let Some(d) = &r.dimension_route {
            let _ = writeln!(s, "dimension:   {} (dim g^x {}, dim m {})", yes_no(d.nice), d.centralizer_dim, d.levi_dim);
        }
        if let Some(o) = &r.oracle {
            oracle_line(&mut s, o);
        }
        if r.disagreement {
            let _ = writeln!(s, "DISAGREEMENT");
        }
        s
    };
    Ok(Output { stdout, stderr: String::new(), code })
}

fn cmd_jordan(spec: &str, verify: bool, c: &Common) -> Result<Output, Output> {
    let spec = parse_spec(spec)?;
    if !spec.lie_type().is_classical() {
        return Err(Output::usage(format!("unsupported: jordan needs a classical type, got {}", spec.lie_type())));
    }
    let r = build_report("jordan", &spec, verify, true, c);
    let code = report_code(&r);
    let stdout = if c.json {
        to_json(&r)
    } else {
        let j = r.jordan.as_ref().expect("classical");
        let mut s = String::new();
        let _ = writeln!(s, "{}  blocks {}", r.spec, tuple(r.blocks.as_deref().unwrap_or_default()));
        let _ = writeln!(s, "partition:   {}", tuple(&j.partition));
        let _ = writeln!(s, "dual:        {}", tuple(&j.dual));
        let ranks: Vec<String> = j.ranks.iter().map(ToString::to_string).collect();
        let _ = writeln!(s, "ranks x^j:   {}", ranks.join(", "));
        let _ = writeln!(s, "dim g^x:     {}", j.centralizer_dim);
        let _ = writeln!(s, "dim m:       {}", j.levi_dim);
        let _ = writeln!(s, "closed form: {} ({})", yes_no(r.closed_form.nice), r.closed_form.rule);
        if let Some(o) = &r.oracle {
            oracle_line(&mut s, o);
        }
        if r.disagreement {
            let _ = writeln!(s, "DISAGREEMENT");
        }
        s
    };
    Ok(Output { stdout, stderr: String::new(), code })
}

#[derive(Debug, Serialize)]
pub struct RichardsonCheck {
    pub member: bool,
    pub degree_one: bool,
    pub centralizer_dim: Option<usize>,
    pub levi_dim: usize,
    pub power_ranks: Vec<usize>,
    pub closed_form_ranks: Vec<usize>,
    pub ok: bool,
}

pub fn check_richardson(b: &BlockSequence, m: &RichardsonMatrix) -> RichardsonCheck {
    let model = MatrixModel::new(b.lie_type(), b.rank()).expect("classical");
    let x = m.to_exact();
    let member = model.contains(&x);
    let degree_one = m.degree_one_support();
    let centralizer_dim = model.decompose(&x).ok().and_then(|el| {
        let alg = GradedAlgebra::new(&blocks_to_coloring(b)).ok()?;
        RankReport::compute(&alg, &el).ok().map(|r| r.centralizer_dim())
    });
    let levi_dim = levi_dim(b);
    let power_ranks = m.power_ranks();
    let closed_form_ranks = jordan_form(b).expect("valid blocks").ranks;
    let ok = member && degree_one && centralizer_dim == Some(levi_dim) && power_ranks == closed_form_ranks;
    RichardsonCheck { member, degree_one, centralizer_dim, levi_dim, power_ranks, closed_form_ranks, ok }
}

fn cmd_richardson(spec: &str, format: Format, check: bool) -> Result<Output, Output> {
    let spec = parse_spec(spec)?;
    if !spec.lie_type().is_classical() {
        return Err(Output::usage(format!("unsupported: no Richardson recipe for {}", spec.lie_type())));
    }
    let b = coloring_to_blocks(&spec).expect("classical");
    let v = is_nice(&spec);
    if !v.nice {
        return Err(Output::usage(format!("{spec} {} is not nice ({}); it has no Richardson element in g_1", tuple(b.blocks()), v.rule)));
    }
    let m = build_matrix(&b).map_err(Output::usage)?;
    let chk = check.then(|| check_richardson(&b, &m));
    let code = if chk.as_ref().is_some_and(|c| !c.ok) { EXIT_DISAGREE } else { EXIT_OK };
    let mut stderr = String::new();
    let stdout = match format {
        Format::Json => {
            let mut v = serde_json::to_value(&m).expect("serializable");
            v["spec"] = serde_json::Value::String(spec.to_string());
            if let Some(c) = &chk {
                v["check"] = serde_json::to_value(c).expect("serializable");
            }
            to_json(&v)
        }
        Format::Text | Format::Csv => {
            let body = if format == Format::Text {
                let mut s = format!("{spec}  blocks {}\n", tuple(b.blocks()));
                s.push_str(&m.to_text());
                s
            } else {
                m.to_csv()
            };
            if let Some(c) = &chk {
                stderr = format!(
                    "check: member {}, degree-1 {}, dim g^X {} vs dim m {}, ranks {:?} vs {:?}: {}\n",
                    c.member,
                    c.degree_one,
                    c.centralizer_dim.map_or("?".to_string(), |d| d.to_string()),
                    c.levi_dim,
                    c.power_ranks,
                    c.closed_form_ranks,
                    if c.ok { "ok" } else { "FAILED" }
                );
            }
            body
        }
    };
    Ok(Output { stdout, stderr, code })
}

#[derive(Debug, Serialize)]
pub struct SweepRow {
    pub spec: String,
    pub blocks: Option<Vec<usize>>,
    pub closed_form: Verdict,
    pub dimension_route: Option<bool>,
    pub oracle: Option<bool>,
    pub agree: bool,
}

#[derive(Debug, Serialize)]
pub struct SweepSummary {
    pub colorings: usize,
    pub nice: usize,
    pub disagreements: usize,
    pub indeterminate: usize,
    pub truncated: bool,
}

#[derive(Debug, Serialize)]
pub struct SweepReport {
    pub command: &'static str,
    pub lie_type: String,
    pub ranks: Vec<usize>,
    pub seed: u64,
    pub trials: usize,
    pub rows: Vec<SweepRow>,
    pub summary: SweepSummary,
}

fn parse_type(s: &str) -> Result<(LieType, Option<usize>), Output> {
    if let Ok(t) = s.parse::<LieType>() {
        return Ok((t, t.fixed_rank()));
    }
    LieType::parse_label(s).map(|(t, n)| (t, Some(n))).map_err(Output::usage)
}

fn sweep_row(spec: &ParabolicSpec, c: &Common) -> SweepRow {
    let closed = is_nice(spec);
    let blocks = spec.lie_type().is_classical().then(|| coloring_to_blocks(spec).expect("classical"));
    let dimension_route = blocks.as_ref().map(|b| dimension_report(b).expect("valid blocks").nice());
    let oracle = oracle::is_nice_oracle(spec, c.trials, c.seed).ok().map(|v| v.nice);
    let agree = dimension_route.map_or(true, |d| d == closed.nice) && oracle.map_or(true, |o| o == closed.nice);
    SweepRow { spec: spec.to_string(), blocks: blocks.map(|b| b.blocks().to_vec()), closed_form: closed.into(), dimension_route, oracle, agree }
}

fn cmd_sweep(lie_type: &str, max_rank: Option<usize>, budget: usize, c: &Common) -> Result<Output, Output> {
    let (t, fixed) = parse_type(lie_type)?;
    let ranks: Vec<usize> = match (t.fixed_rank(), max_rank.or(fixed)) {
        (Some(n), Some(m)) if m < n => return Err(Output::usage(format!("{t} has rank {n}, above --max-rank {m}"))),
        (Some(n), _) => vec![n],
        (None, Some(m)) if m >= t.min_rank() => (t.min_rank()..=m).collect(),
        (None, Some(m)) => return Err(Output::usage(format!("type {t} needs rank at least {}, got {m}", t.min_rank()))),
        (None, None) => return Err(Output::usage(format!("sweep over type {t} needs a maximum rank"))),
    };
    let mut specs = Vec::new();
    let mut truncated = false;
    for &n in &ranks {
        if n >= 63 {
            truncated = true;
            break;
        }
        let available = budget - specs.len();
        if (1usize << n) > available {
            // colorings come in increasing binary order, so a prefix is well defined
            specs.extend(ParabolicSpec::all(t, n).map_err(Output::usage)?.into_iter().take(available));
            truncated = true;
            break;
        }
        specs.extend(ParabolicSpec::all(t, n).map_err(Output::usage)?);
    }
    let rows: Vec<SweepRow> = specs.par_iter().map(|s| sweep_row(s, c)).collect();
    let summary = SweepSummary {
        colorings: rows.len(),
        nice: rows.iter().filter(|r| r.closed_form.nice).count(),
        disagreements: rows.iter().filter(|r| !r.agree).count(),
        indeterminate: rows.iter().filter(|r| r.oracle.is_none()).count(),
        truncated,
    };
    let code = if summary.disagreements > 0 {
        EXIT_DISAGREE
    } else if summary.indeterminate > 0 {
        EXIT_INDETERMINATE
    } else {
        EXIT_OK
    };
    let report = SweepReport { command: "sweep", lie_type: t.to_string(), ranks, seed: c.seed, trials: c.trials, rows, summary };
    let stdout = if c.json {
        to_json(&report)
    } else {
        let show = |v: Option<bool>| match v {
            Some(true) => "nice",
            Some(false) => "-",
            None => "?",
        };
        let mut s = format!("{:<28} {:<22} {:<16} {:<9} {:<6}\n", "spec", "blocks", "closed form", "dimension", "oracle");
        for r in &report.rows {
            let blocks = r.blocks.as_deref().map(tuple).unwrap_or_default();
            let rule = if r.closed_form.nice { r.closed_form.rule.clone() } else { "-".to_string() };
            let _ = writeln!(
                s,
                "{:<28} {:<22} {:<16} {:<9} {:<6}{}",
                r.spec,
                blocks,
                rule,
                if r.dimension_route.is_some() { show(r.dimension_route) } else { "" },
                show(r.oracle),
                if r.agree { "" } else { "  DISAGREE" }
            );
        }
        let m = &report.summary;
        let _ = writeln!(
            s,
            "{} colorings, {} nice, {} disagreements, {} indeterminate{}",
            m.colorings,
            m.nice,
            m.disagreements,
            m.indeterminate,
            if m.truncated { ", TRUNCATED at budget" } else { "" }
        );
        s
    };
    Ok(Output { stdout, stderr: String::new(), code })
}

#[derive(Debug, Serialize)]
pub struct EvenOrbitsReport {
    pub lie_type: String,
    pub rank: usize,
    pub natural_dimension: usize,
    pub count: usize,
    pub compositions: Vec<Vec<usize>>,
}

fn cmd_even_orbits(lie_type: &str, rank: usize, c: &Common) -> Result<Output, Output> {
    let (t, _) = parse_type(lie_type)?;
    if rank == 0 {
        return Err(Output::usage("rank must be at least 1"));
    }
    let (count, list) = count_even_orbits(t, rank).map_err(Output::usage)?;
    let report = EvenOrbitsReport {
        lie_type: t.to_string(),
        rank,
        natural_dimension: natural_dimension(t, rank).map_err(Output::usage)?,
        count,
        compositions: list.iter().map(|c| c.parts().to_vec()).collect(),
    };
    if c.json {
        return Ok(Output::ok(to_json(&report)));
    }
    let mut s = format!("{t}{rank}: {count} even orbits\n");
    for comp in &report.compositions {
        let _ = writeln!(s, "  {}", tuple(comp));
    }
    Ok(Output::ok(s))
}

#[derive(Debug, Serialize)]
pub struct GenfunReport {
    pub max_degree: usize,
    pub lhs: Vec<i64>,
    pub rhs: Vec<i64>,
    #[serde(rename = "match")]
    pub matches: bool,
}

fn cmd_genfun(max_degree: usize, c: &Common) -> Result<Output, Output> {
    if max_degree == 0 {
        return Err(Output::usage("max degree must be at least 1"));
    }
    let (lhs, rhs) = genfun_coefficients(max_degree);
    let report = GenfunReport { max_degree, matches: lhs == rhs, lhs, rhs };
    let code = if report.matches { EXIT_OK } else { EXIT_DISAGREE };
    let stdout = if c.json {
        to_json(&report)
    } else {
        let join = |v: &[i64]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
        format!("lhs:   {}\nrhs:   {}\nmatch: {}\n", join(&report.lhs), join(&report.rhs), report.matches)
    };
    Ok(Output { stdout, stderr: String::new(), code })
}
