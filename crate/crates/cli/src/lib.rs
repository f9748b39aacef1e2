//! Command-line front end: expand product expressions, run single checks,
//! sweep parameter grids and export count tables.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::str::FromStr;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use quintrunc::combinatorics::{check_euler_chain, check_op_generating_function};
use quintrunc::{
    check_consequence, check_corollary, check_decomposition_identity, check_part_sign,
    check_partial_sum_lemma, check_ppp_generating_function, check_quintuple, check_tail_rewrite,
    lemma21_check, lemma21_generate, parse_product, ramanujan_entry_check, Consequence,
    CountTable, DecompositionPart, Entry, FamilyExpansion, PartTag, Split, Status, Theorem,
    TheoremFamily, TruncationWindow, VerificationReport,
};
use rayon::prelude::*;
use thiserror::Error;

/// Largest truncation bound accepted without `--allow-large-n`.
pub const LARGE_N: i64 = 1000;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] quintrunc::Error),
    #[error("i/o error: {0}")]
    Io(#[from] io::Error),
}

impl CliError {
    /// Usage errors, malformed input and violated hypotheses exit with 2.
    pub fn exit_code(&self) -> u8 {
        2
    }
}

type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Parser)]
#[command(name = "quintrunc", version, about = "Exact truncated q-series expansion and coefficient-sign verification")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Expand a product expression such as "(q^-1; q^3)_inf * (q; q^2)_5^-2".
    Expand {
        expr: String,
        #[command(flatten)]
        bound: BoundArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run a single check and print its report.
    Verify {
        /// Check name (see `--help` of `scan` for the list).
        check: Option<String>,
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        bound: BoundArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Run a check over a parameter grid; values accept `lo..hi` (inclusive)
    /// and comma lists.
    ///
    /// Checks: quintuple, consequence, thm11..thm17, lemma21, lemma32,
    /// lemma42, lemma33, lemma43, partsign, entry951, entry941, tailshift,
    /// ppp_gf, op_gf, corollary, euler_chain.
    Scan {
        check: Option<String>,
        #[command(flatten)]
        params: ParamArgs,
        #[command(flatten)]
        bound: BoundArgs,
        #[command(flatten)]
        output: OutputArgs,
        /// Worker threads.
        #[arg(long)]
        jobs: Option<usize>,
        /// Keep measured times in reports (they are zeroed otherwise so that
        /// repeated scans are byte-identical).
        #[arg(long)]
        timings: bool,
    },
    /// Export the partition, overpartition and triplet counts as CSV.
    Oracle {
        #[command(flatten)]
        bound: BoundArgs,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Debug, Clone, Args)]
pub struct BoundArgs {
    /// Truncation bound: results are exact through q^N.
    #[arg(long = "N", default_value_t = 100, allow_hyphen_values = true)]
    pub n: i64,
    /// Permit N above 1000.
    #[arg(long)]
    pub allow_large_n: bool,
}

impl BoundArgs {
    fn checked(&self) -> Result<i64> {
        if self.n > LARGE_N && !self.allow_large_n {
            return Err(CliError::Usage(format!(
                "N = {} is above {LARGE_N}; pass --allow-large-n to proceed",
                self.n
            )));
        }
        Ok(self.n)
    }
}

#[derive(Debug, Clone, Args)]
pub struct OutputArgs {
    /// Write output to this file instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

impl OutputArgs {
    fn writer(&self) -> Result<Box<dyn Write>> {
        Ok(match &self.out {
            Some(path) => Box::new(BufWriter::new(File::create(path)?)),
            None => Box::new(BufWriter::new(io::stdout())),
        })
    }
}

/// Check parameters. In `verify` each takes one integer; in `scan` each
/// takes a grid.
#[derive(Debug, Clone, Default, Args)]
pub struct ParamArgs {
    /// Check name, as an alternative to the positional argument.
    #[arg(long = "check")]
    pub check_flag: Option<String>,
    #[arg(long = "R", allow_hyphen_values = true)]
    pub r: Option<String>,
    #[arg(long = "S", allow_hyphen_values = true)]
    pub s: Option<String>,
    #[arg(long = "k", allow_hyphen_values = true)]
    pub k: Option<String>,
    #[arg(long = "a", allow_hyphen_values = true)]
    pub a: Option<String>,
    #[arg(long = "b", allow_hyphen_values = true)]
    pub b: Option<String>,
    /// Exponent of the specialisation a = q^j in the Ramanujan entries.
    #[arg(long = "j", allow_hyphen_values = true)]
    pub j: Option<String>,
    /// Half-width of the domain of the generated signed function.
    #[arg(long = "K", allow_hyphen_values = true)]
    pub big_k: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    pub seed: Option<String>,
    /// Largest slack drawn by the signed-function generator.
    #[arg(long, allow_hyphen_values = true)]
    pub magnitude: Option<String>,
    /// Part name: A, B, A1, A2, A3, C, D, C1, C2, C3, C4.
    #[arg(long)]
    pub part: Option<String>,
    /// threeNplusOne or sixNplusOne.
    #[arg(long)]
    pub family: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CheckKind {
    Quintuple,
    Consequence,
    Thm11,
    Thm12,
    Thm13,
    Thm14,
    Thm15,
    Thm16,
    Thm17,
    Lemma21,
    Lemma32,
    Lemma42,
    Lemma33,
    Lemma43,
    PartSign,
    Entry951,
    Entry941,
    TailShift,
    PppGf,
    OpGf,
    Corollary,
    EulerChain,
}

impl CheckKind {
    const ALL: [(CheckKind, &'static str); 22] = [
        (CheckKind::Quintuple, "quintuple"),
        (CheckKind::Consequence, "consequence"),
        (CheckKind::Thm11, "thm11"),
        (CheckKind::Thm12, "thm12"),
        (CheckKind::Thm13, "thm13"),
        (CheckKind::Thm14, "thm14"),
        (CheckKind::Thm15, "thm15"),
        (CheckKind::Thm16, "thm16"),
        (CheckKind::Thm17, "thm17"),
        (CheckKind::Lemma21, "lemma21"),
        (CheckKind::Lemma32, "lemma32"),
        (CheckKind::Lemma42, "lemma42"),
        (CheckKind::Lemma33, "lemma33"),
        (CheckKind::Lemma43, "lemma43"),
        (CheckKind::PartSign, "partsign"),
        (CheckKind::Entry951, "entry951"),
        (CheckKind::Entry941, "entry941"),
        (CheckKind::TailShift, "tailshift"),
        (CheckKind::PppGf, "ppp_gf"),
        (CheckKind::OpGf, "op_gf"),
        (CheckKind::Corollary, "corollary"),
        (CheckKind::EulerChain, "euler_chain"),
    ];

    pub fn name(self) -> &'static str {
        Self::ALL.iter().find(|(k, _)| *k == self).map(|(_, n)| *n).expect("listed")
    }

    /// Integer parameters the check needs, besides `N`.
    fn required(self) -> &'static [Key] {
        use Key::*;
        match self {
            CheckKind::Quintuple => &[R, S],
            CheckKind::Thm11 | CheckKind::Thm12 => &[R, S, K],
            CheckKind::Thm13 => &[R, S, A, B],
            CheckKind::Thm14 | CheckKind::Thm15 => &[K],
            CheckKind::Thm16 | CheckKind::Thm17 | CheckKind::Corollary | CheckKind::EulerChain => &[A, B],
            CheckKind::Lemma21 => &[Seed, BigK, Magnitude],
            CheckKind::Lemma32
            | CheckKind::Lemma42
            | CheckKind::Lemma33
            | CheckKind::Lemma43
            | CheckKind::PartSign
            | CheckKind::TailShift => &[K],
            CheckKind::Entry951 | CheckKind::Entry941 => &[J],
            CheckKind::Consequence | CheckKind::PppGf | CheckKind::OpGf => &[],
        }
    }

    fn needs_part(self) -> bool {
        self == CheckKind::PartSign
    }

    fn needs_family(self) -> bool {
        matches!(self, CheckKind::Consequence | CheckKind::TailShift)
    }
}

impl FromStr for CheckKind {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .iter()
            .find(|(_, n)| *n == s)
            .map(|(k, _)| *k)
            .ok_or_else(|| {
                let names: Vec<&str> = Self::ALL.iter().map(|(_, n)| *n).collect();
                CliError::Usage(format!("unknown check {s:?}; expected one of {}", names.join(", ")))
            })
    }
}

impl fmt::Display for CheckKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Integer parameter names, in report (and scan ordering) order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Key {
    BigK,
    R,
    S,
    A,
    B,
    J,
    K,
    Magnitude,
    Seed,
}

impl Key {
    fn flag(self) -> &'static str {
        match self {
            Key::BigK => "K",
            Key::R => "R",
            Key::S => "S",
            Key::A => "a",
            Key::B => "b",
            Key::J => "j",
            Key::K => "k",
            Key::Magnitude => "magnitude",
            Key::Seed => "seed",
        }
    }

    fn raw(self, p: &ParamArgs) -> Option<&str> {
        match self {
            Key::BigK => p.big_k.as_deref(),
            Key::R => p.r.as_deref(),
            Key::S => p.s.as_deref(),
            Key::A => p.a.as_deref(),
            Key::B => p.b.as_deref(),
            Key::J => p.j.as_deref(),
            Key::K => p.k.as_deref(),
            Key::Magnitude => p.magnitude.as_deref(),
            Key::Seed => p.seed.as_deref(),
        }
    }

    fn default(self) -> Option<i64> {
        match self {
            Key::BigK => Some(12),
            Key::Magnitude => Some(100),
            Key::Seed => Some(0),
            _ => None,
        }
    }
}

/// Parses `x`, `lo..hi`, `lo..=hi` (both inclusive) or `x,y,z`.
pub fn parse_grid(text: &str) -> std::result::Result<Vec<i64>, String> {
    let int = |s: &str| {
        s.trim()
            .parse::<i64>()
            .map_err(|_| format!("expected an integer, found {s:?}"))
    };
    if let Some(pos) = text.find("..") {
        let lo = int(&text[..pos])?;
        let rest = &text[pos + 2..];
        let hi = int(rest.strip_prefix('=').unwrap_or(rest))?;
        return Ok((lo..=hi).collect());
    }
    text.split(',').map(int).collect()
}

/// One grid point.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Point {
    ints: BTreeMap<Key, i64>,
    part: Option<PartTag>,
    family: Option<Consequence>,
}

impl Point {
    fn get(&self, key: Key) -> i64 {
        self.ints[&key]
    }

    fn describe(&self, report: VerificationReport) -> VerificationReport {
        let mut report = report;
        for (key, value) in &self.ints {
            report = report.param(key.flag(), *value);
        }
        if let Some(p) = self.part {
            report = report.param("part", p.as_str());
        }
        if let Some(f) = self.family {
            report = report.param("family", f.name());
        }
        report
    }
}

fn check_name(positional: &Option<String>, params: &ParamArgs) -> Result<CheckKind> {
    match (positional, &params.check_flag) {
        (Some(a), Some(b)) if a != b => Err(CliError::Usage(format!(
            "check given twice with different names: {a:?} and {b:?}"
        ))),
        (Some(name), _) | (None, Some(name)) => name.parse(),
        (None, None) => Err(CliError::Usage("no check named; pass it as an argument or with --check".into())),
    }
}

/// All grid points of `kind`, in lexicographic parameter order.
fn grid(kind: CheckKind, params: &ParamArgs, single: bool) -> Result<Vec<Point>> {
    let mut axes: Vec<(Key, Vec<i64>)> = Vec::new();
    for &key in kind.required() {
        let values = match (key.raw(params), key.default()) {
            (Some(text), _) => parse_grid(text).map_err(|e| CliError::Usage(format!("--{}: {e}", key.flag())))?,
            (None, Some(d)) => vec![d],
            (None, None) => {
                return Err(CliError::Usage(format!("{kind} needs --{}", key.flag())));
            }
        };
        if single && values.len() != 1 {
            return Err(CliError::Usage(format!("--{} takes a single value here", key.flag())));
        }
        axes.push((key, values));
    }
    axes.sort_by_key(|(k, _)| *k);

    let list = |raw: &Option<String>, flag: &str| -> Result<Option<Vec<String>>> {
        let values: Option<Vec<String>> = raw.as_ref().map(|t| t.split(',').map(|s| s.trim().to_owned()).collect());
        if single && values.as_ref().is_some_and(|v| v.len() != 1) {
            return Err(CliError::Usage(format!("--{flag} takes a single value here")));
        }
        Ok(values)
    };
    let parts: Vec<Option<PartTag>> = if kind.needs_part() {
        list(&params.part, "part")?
            .ok_or_else(|| CliError::Usage(format!("{kind} needs --part")))?
            .iter()
            .map(|p| p.parse().map(Some).map_err(CliError::Core))
            .collect::<Result<_>>()?
    } else {
        vec![None]
    };
    let families: Vec<Option<Consequence>> = if kind.needs_family() {
        list(&params.family, "family")?
            .ok_or_else(|| CliError::Usage(format!("{kind} needs --family")))?
            .iter()
            .map(|f| f.parse().map(Some).map_err(CliError::Core))
            .collect::<Result<_>>()?
    } else {
        vec![None]
    };

    let mut points = vec![BTreeMap::new()];
    for (key, values) in &axes {
        points = points
            .into_iter()
            .flat_map(|p| {
                values.iter().map(move |v| {
                    let mut p = p.clone();
                    p.insert(*key, *v);
                    p
                })
            })
            .collect();
    }
    let mut out: Vec<Point> = points
        .into_iter()
        .flat_map(|ints| {
            let families = families.clone();
            parts.iter().flat_map(move |&part| {
                let ints = ints.clone();
                families.clone().into_iter().map(move |family| Point { ints: ints.clone(), part, family })
            })
        })
        .collect();
    out.sort();
    out.dedup();
    Ok(out)
}

fn theorem(kind: CheckKind, p: &Point) -> Option<Theorem> {
    let window = || TruncationWindow::new(p.get(Key::A), p.get(Key::B));
    Some(match kind {
        CheckKind::Thm11 => Theorem::Thm11 { r: p.get(Key::R), s: p.get(Key::S), k: p.get(Key::K) },
        CheckKind::Thm12 => Theorem::Thm12 { r: p.get(Key::R), s: p.get(Key::S), k: p.get(Key::K) },
        CheckKind::Thm13 => Theorem::Thm13 { r: p.get(Key::R), s: p.get(Key::S), window: window() },
        CheckKind::Thm14 => Theorem::Thm14 { k: p.get(Key::K) },
        CheckKind::Thm15 => Theorem::Thm15 { k: p.get(Key::K) },
        CheckKind::Thm16 => Theorem::Thm16 { window: window() },
        CheckKind::Thm17 => Theorem::Thm17 { window: window() },
        _ => return None,
    })
}

/// Shared read-only state for evaluating many points.
#[derive(Default)]
struct Context {
    expansions: HashMap<TheoremFamily, FamilyExpansion>,
    counts: Option<CountTable>,
}

impl Context {
    fn prepare(kind: CheckKind, points: &[Point], bound: i64) -> Self {
        let mut families: Vec<TheoremFamily> = points
            .iter()
            .filter_map(|p| theorem(kind, p))
            .map(|t| t.family())
            .filter(|f| f.validate().is_ok())
            .collect();
        families.sort();
        families.dedup();
        let expansions = families
            .into_par_iter()
            .filter_map(|f| FamilyExpansion::new(f, bound).ok().map(|x| (f, x)))
            .collect();
        let counts = (kind == CheckKind::Corollary && bound >= 0).then(|| CountTable::build(bound as usize));
        Context { expansions, counts }
    }
}

/// Result of one point: the report plus an optional note for stderr.
struct Evaluated {
    report: VerificationReport,
    note: Option<String>,
}

fn evaluate(kind: CheckKind, p: &Point, bound: i64, ctx: &Context) -> quintrunc::Result<Evaluated> {
    let plain = |r: VerificationReport| Evaluated { report: r, note: None };
    let k = || p.get(Key::K);
    let family = || p.family.expect("family is required");
    let report = match kind {
        CheckKind::Quintuple => check_quintuple(p.get(Key::R), p.get(Key::S), bound)?,
        CheckKind::Consequence => check_consequence(family(), bound)?,
        CheckKind::Thm11
        | CheckKind::Thm12
        | CheckKind::Thm13
        | CheckKind::Thm14
        | CheckKind::Thm15
        | CheckKind::Thm16
        | CheckKind::Thm17 => {
            let thm = theorem(kind, p).expect("theorem check");
            thm.validate()?;
            match ctx.expansions.get(&thm.family()) {
                Some(x) => thm.verify_with(x)?,
                None => quintrunc::verify_truncated_theorem(thm, bound)?,
            }
        }
        CheckKind::Lemma21 => {
            let magnitude = u64::try_from(p.get(Key::Magnitude)).map_err(|_| {
                quintrunc::Error::InvalidParameters("magnitude must be >= 0".into())
            })?;
            let f = lemma21_generate(p.get(Key::Seed) as u64, p.get(Key::BigK), magnitude)?;
            lemma21_check(&f)?
                .param("seed", p.get(Key::Seed))
                .param("magnitude", p.get(Key::Magnitude))
        }
        CheckKind::Lemma32 => check_partial_sum_lemma(Consequence::ThreeNPlusOne, k(), bound)?,
        CheckKind::Lemma42 => check_partial_sum_lemma(Consequence::SixNPlusOne, k(), bound)?,
        CheckKind::Lemma33 => check_decomposition_identity(Split::A, k(), bound)?,
        CheckKind::Lemma43 => check_decomposition_identity(Split::C, k(), bound)?,
        CheckKind::PartSign => {
            check_part_sign(DecompositionPart::new(p.part.expect("part is required"), k())?, bound)?
        }
        CheckKind::Entry951 => ramanujan_entry_check(Entry::E951, p.get(Key::J), bound)?,
        CheckKind::Entry941 => ramanujan_entry_check(Entry::E941, p.get(Key::J), bound)?,
        CheckKind::TailShift => check_tail_rewrite(family(), k(), bound)?,
        CheckKind::PppGf => check_ppp_generating_function(bound)?,
        CheckKind::OpGf => check_op_generating_function(bound)?,
        CheckKind::EulerChain => check_euler_chain(TruncationWindow::new(p.get(Key::A), p.get(Key::B)), bound)?,
        CheckKind::Corollary => {
            if bound < 0 {
                return Err(quintrunc::Error::InvalidParameters(format!("N must be >= 0, got {bound}")));
            }
            let window = TruncationWindow::new(p.get(Key::A), p.get(Key::B));
            let built;
            let table = match &ctx.counts {
                Some(t) => t,
                None => {
                    built = CountTable::build(bound as usize);
                    &built
                }
            };
            let outcome = check_corollary(table, bound as u64, window)?;
            let note = outcome.n0_negative().then(|| {
                format!(
                    "note: corollary window ({}, {}) has value {} at n = 0; this case is reported, not asserted",
                    window.a, window.b, outcome.n0_value
                )
            });
            return Ok(Evaluated {
                report: p.describe(outcome.report).param("N", bound),
                note,
            });
        }
    };
    Ok(plain(p.describe(report).param("N", bound)))
}

/// Runs the CLI, writing diagnostics to `err`. Returns the process exit code.
pub fn run(cli: Cli, err: &mut dyn Write) -> u8 {
    match dispatch(cli, err) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cli: Cli, err: &mut dyn Write) -> Result<u8> {
    match cli.command {
        Command::Expand { expr, bound, output } => {
            let n = bound.checked()?;
            let product = parse_product(&expr).map_err(|e| {
                if let quintrunc::Error::Parse { position, .. } = &e {
                    let _ = writeln!(err, "  {expr}\n  {}^", " ".repeat(*position));
                }
                CliError::Core(e)
            })?;
            let series = product.expand(n)?;
            let mut w = output.writer()?;
            writeln!(w, "{}", series.to_json())?;
            w.flush()?;
            Ok(0)
        }
        Command::Verify { check, params, bound, output } => {
            let kind = check_name(&check, &params)?;
            let n = bound.checked()?;
            let point = grid(kind, &params, true)?
                .pop()
                .ok_or_else(|| CliError::Usage("empty parameter set".into()))?;
            let ctx = Context::default();
            let evaluated = evaluate(kind, &point, n, &ctx)?;
            if let Some(note) = &evaluated.note {
                writeln!(err, "{note}")?;
            }
            let mut w = output.writer()?;
            writeln!(w, "{}", evaluated.report.to_json())?;
            w.flush()?;
            Ok(if evaluated.report.status == Status::Fail { 1 } else { 0 })
        }
        Command::Scan { check, params, bound, output, jobs, timings } => {
            let kind = check_name(&check, &params)?;
            let n = bound.checked()?;
            let points = grid(kind, &params, false)?;
            let threads = match jobs {
                Some(0) => return Err(CliError::Usage("--jobs must be at least 1".into())),
                Some(j) => j,
                None => 0,
            };
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(threads)
                .build()
                .map_err(|e| CliError::Usage(e.to_string()))?;
            let results: Vec<quintrunc::Result<Evaluated>> = pool.install(|| {
                let ctx = Context::prepare(kind, &points, n);
                points
                    .par_iter()
                    .map(|p| {
                        let started = Instant::now();
                        match evaluate(kind, p, n, &ctx) {
                            Err(quintrunc::Error::InvalidParameters(_)) => Ok(Evaluated {
                                report: p.describe(VerificationReport::new(kind.name())).param("N", n).skipped(),
                                note: None,
                            }),
                            Ok(mut e) => {
                                e.report.elapsed_ms = if timings { started.elapsed().as_millis() as u64 } else { 0 };
                                Ok(e)
                            }
                            other => other,
                        }
                    })
                    .collect()
            });
            let mut w = output.writer()?;
            let mut counts: BTreeMap<&str, u64> = [("pass", 0), ("fail", 0), ("skipped", 0)].into();
            let mut fatal = None;
            for r in results {
                match r {
                    Ok(e) => {
                        if let Some(note) = e.note {
                            writeln!(err, "{note}")?;
                        }
                        let key = match e.report.status {
                            Status::Pass => "pass",
                            Status::Fail => "fail",
                            Status::Skipped => "skipped",
                        };
                        *counts.get_mut(key).expect("status key") += 1;
                        writeln!(w, "{}", e.report.to_json())?;
                    }
                    Err(e) => {
                        writeln!(err, "error: {e}")?;
                        fatal.get_or_insert(e);
                    }
                }
            }
            let summary = serde_json::json!({
                "summary": {
                    "check": kind.name(),
                    "total": counts.values().sum::<u64>(),
                    "pass": counts["pass"],
                    "fail": counts["fail"],
                    "skipped": counts["skipped"],
                }
            });
            writeln!(w, "{summary}")?;
            w.flush()?;
            if let Some(e) = fatal {
                return Err(e.into());
            }
            Ok(if counts["fail"] > 0 { 1 } else { 0 })
        }
        Command::Oracle { bound, output } => {
            let n = bound.checked()?;
            if n < 0 {
                return Err(CliError::Usage(format!("N must be >= 0, got {n}")));
            }
            let mut w = output.writer()?;
            CountTable::build(n as usize).write_csv(&mut w)?;
            w.flush()?;
            Ok(0)
        }
    }
}
