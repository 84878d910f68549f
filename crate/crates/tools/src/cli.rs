//! The `lincirc` command line.

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use lincirc::cover::{complement_identity_cover, rank_cover, RankOutcome};
use lincirc::lupanov::{lupanov_circuit, wire_bound, LupanovParams};
use lincirc::oracle::{gap_report, min_wires, GapReport, MinWires};
use lincirc::rewrite::{rewrite, Strategy};
use lincirc::satbridge::{count_covering_pairs, split_to_cover, CoverInstance, Tally, Via};
use lincirc::uniform::{build_code_matrix, generate_kuniform};
use lincirc::{
    is_st_free, kronecker, mp_lower_bound, tensor_or_circuit, trivial_circuit, BooleanMatrix, Semiring,
    TensorSpec, Vector,
};

use crate::format::{self, FormatError};
use crate::report::*;
use crate::stats::uniformity_test;

const DEFAULT_ORACLE_BUDGET: usize = 14;
const DEFAULT_SEARCH_BUDGET: u64 = 1 << 22;

#[derive(Debug, Parser)]
#[command(name = "lincirc", version, about = "OR, SUM and XOR circuits for boolean linear maps")]
pub struct Cli {
    #[command(flatten)]
    pub global: Global,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct Global {
    /// Seed for every random choice; recorded in each report.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Search budget: wires for `oracle`, search nodes for rank covers.
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    /// Where to write the artifact (circuit or matrix file, or the report
    /// when there is no artifact). Defaults to standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Generate a matrix file.
    Gen(GenArgs),
    /// Build a circuit for a matrix.
    Build(BuildArgs),
    /// Report weight, freeness, lower bounds and ranks of a matrix or circuit.
    Analyze(AnalyzeArgs),
    /// Rewrite an OR circuit as a SUM or XOR circuit.
    Rewrite(RewriteArgs),
    /// Evaluate a circuit on a vector, or extract its matrix.
    Eval(EvalArgs),
    /// Count models of a DIMACS CNF through covering pairs.
    Satcount(SatArgs),
    /// Exact minimum wire counts by exhaustive search (at most 5 × 5).
    Oracle(OracleArgs),
    /// Chi-square test of a k × k submatrix of sampled k-uniform matrices.
    Uniformity(UniformityArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Ring {
    Or,
    Sum,
    Xor,
}

impl From<Ring> for Semiring {
    fn from(r: Ring) -> Self {
        match r {
            Ring::Or => Semiring::Or,
            Ring::Sum => Semiring::Sum,
            Ring::Xor => Semiring::Xor,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Identity,
    ComplementIdentity,
    Ones,
    Random,
    Kuniform,
    Kronecker,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long, value_enum)]
    pub kind: Kind,
    /// Side length (square kinds) or column count of a k-uniform matrix.
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub rows: Option<usize>,
    #[arg(long)]
    pub cols: Option<usize>,
    /// Field degree of the code matrix (kuniform).
    #[arg(long)]
    pub t: Option<u32>,
    /// Uniformity order (kuniform).
    #[arg(long)]
    pub k: Option<usize>,
    /// Left factor B of B⊗A (kronecker).
    #[arg(long)]
    pub left: Option<PathBuf>,
    /// Right factor A of B⊗A (kronecker).
    #[arg(long)]
    pub right: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Trivial,
    Lupanov,
    Tensor,
    Kuniform,
}

#[derive(Debug, Args)]
pub struct BuildArgs {
    #[arg(long, value_enum)]
    pub method: Method,
    #[arg(long, value_enum, default_value = "or")]
    pub ring: Ring,
    /// Matrix file (the right factor A for `tensor`).
    #[arg(long = "in")]
    pub input: Option<PathBuf>,
    /// Lupanov block width (default: the width minimising the wire formula).
    #[arg(long)]
    pub b: Option<usize>,
    /// Left factor B for `tensor`; covered by its complement-identity cover
    /// when it is Ī, otherwise by a minimum rectangle cover.
    #[arg(long)]
    pub left: Option<PathBuf>,
    /// Field degree of the code matrix (kuniform).
    #[arg(long)]
    pub t: Option<u32>,
    /// Matrix side (kuniform).
    #[arg(long)]
    pub n: Option<usize>,
    /// Uniformity order (kuniform).
    #[arg(long)]
    pub k: Option<usize>,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// Matrix or circuit file.
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Test (s, t)-freeness for this s (with --t).
    #[arg(long, requires = "t")]
    pub s: Option<usize>,
    #[arg(long, requires = "s")]
    pub t: Option<usize>,
    /// Skip rank covers of matrices with more rows or columns than this.
    #[arg(long, default_value_t = 12)]
    pub rank_limit: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Sum,
    Xor,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum StrategyArg {
    Depth1,
    Lupanov,
}

#[derive(Debug, Args)]
pub struct RewriteArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long, value_enum)]
    pub target: Target,
    #[arg(long, value_enum, default_value = "depth1")]
    pub strategy: StrategyArg,
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    /// Input vector entries, separated by commas or spaces.
    #[arg(long, conflicts_with_all = ["ones", "extract"])]
    pub x: Option<String>,
    /// Evaluate on the all-ones vector.
    #[arg(long, conflicts_with = "extract")]
    pub ones: bool,
    /// Write the computed matrix instead of evaluating.
    #[arg(long)]
    pub extract: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Count,
    Parity,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ViaArg {
    Direct,
    Pipeline,
}

#[derive(Debug, Args)]
pub struct SatArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "count")]
    pub mode: Mode,
    #[arg(long, value_enum, default_value = "pipeline")]
    pub via: ViaArg,
    #[arg(long, default_value_t = lincirc::satbridge::DEFAULT_VAR_CAP)]
    pub var_cap: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OracleRing {
    Or,
    Sum,
    Xor,
    All,
}

#[derive(Debug, Args)]
pub struct OracleArgs {
    #[arg(long = "in")]
    pub input: PathBuf,
    #[arg(long, value_enum, default_value = "all")]
    pub ring: OracleRing,
}

#[derive(Debug, Args)]
pub struct UniformityArgs {
    #[arg(long, default_value_t = 3)]
    pub t: u32,
    #[arg(long, default_value_t = 8)]
    pub n: usize,
    #[arg(long, default_value_t = 2)]
    pub k: usize,
    #[arg(long, default_value_t = 16_000)]
    pub samples: usize,
    /// Comma-separated 1-based rows of the submatrix (default: the first k).
    #[arg(long, value_delimiter = ',')]
    pub rows: Vec<usize>,
    /// Comma-separated 1-based columns (default: the last k).
    #[arg(long, value_delimiter = ',')]
    pub cols: Vec<usize>,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}: {source}")]
    Format { path: PathBuf, source: FormatError },
    #[error(transparent)]
    Domain(#[from] lincirc::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// 1 for errors in the data or the computation, 2 for misuse.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) | CliError::Io { .. } => 2,
            CliError::Format { .. } | CliError::Domain(_) | CliError::Json(_) => 1,
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_owned(),
        source,
    })
}

fn parsed<T>(path: &Path, parse: impl FnOnce(&str) -> Result<T, FormatError>) -> CliResult<T> {
    parse(&read(path)?).map_err(|source| CliError::Format {
        path: path.to_owned(),
        source,
    })
}

fn required<T>(value: Option<T>, flag: &str) -> CliResult<T> {
    value.ok_or_else(|| usage(format!("missing --{flag}")))
}

/// What a command produced: an optional artifact file and a JSON report.
struct Output {
    artifact: Option<String>,
    report: String,
}

impl Output {
    fn new(artifact: Option<String>, report: &impl Serialize) -> CliResult<Self> {
        Ok(Output {
            artifact,
            report: serde_json::to_string_pretty(report)?,
        })
    }
}

/// Parses the process arguments, runs the command and returns the exit code.
pub fn main() -> i32 {
    let cli = Cli::parse();
    let mut stdout = std::io::stdout().lock();
    let mut stderr = std::io::stderr().lock();
    match run(&cli, &mut stdout, &mut stderr) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            e.exit_code()
        }
    }
}

/// Artifacts go to `--out` (or standard output); reports go to standard
/// output, or to standard error when the artifact already occupies it.
pub fn run(cli: &Cli, stdout: &mut dyn Write, stderr: &mut dyn Write) -> CliResult<()> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.global.threads.unwrap_or(0))
        .build()
        .map_err(|e| usage(e.to_string()))?;
    let out = pool.install(|| dispatch(cli))?;
    let io_err = |source| CliError::Io {
        path: cli.global.out.clone().unwrap_or_else(|| PathBuf::from("-")),
        source,
    };
    match (&out.artifact, &cli.global.out) {
        (Some(a), Some(path)) => {
            fs::write(path, a).map_err(io_err)?;
            writeln!(stdout, "{}", out.report).map_err(io_err)?;
        }
        (Some(a), None) => {
            stdout.write_all(a.as_bytes()).map_err(io_err)?;
            writeln!(stderr, "{}", out.report).map_err(io_err)?;
        }
        (None, Some(path)) => fs::write(path, format!("{}\n", out.report)).map_err(io_err)?,
        (None, None) => writeln!(stdout, "{}", out.report).map_err(io_err)?,
    }
    Ok(())
}

fn dispatch(cli: &Cli) -> CliResult<Output> {
    let g = &cli.global;
    match &cli.command {
        Command::Gen(a) => gen(g, a),
        Command::Build(a) => build(g, a),
        Command::Analyze(a) => analyze(g, a),
        Command::Rewrite(a) => rewrite_cmd(g, a),
        Command::Eval(a) => eval(g, a),
        Command::Satcount(a) => satcount(g, a),
        Command::Oracle(a) => oracle(g, a),
        Command::Uniformity(a) => uniformity(g, a),
    }
}

fn gen(g: &Global, a: &GenArgs) -> CliResult<Output> {
    let square = || required(a.n, "n");
    let m = match a.kind {
        Kind::Identity => BooleanMatrix::identity(square()?)?,
        Kind::ComplementIdentity => BooleanMatrix::complement_identity(square()?)?,
        Kind::Ones => BooleanMatrix::ones(a.rows.or(a.n).ok_or_else(|| usage("missing --n"))?, a.cols.or(a.n).ok_or_else(|| usage("missing --n"))?)?,
        Kind::Random => {
            let rows = a.rows.or(a.n).ok_or_else(|| usage("missing --n or --rows"))?;
            let cols = a.cols.or(a.n).ok_or_else(|| usage("missing --n or --cols"))?;
            let mut rng = lincirc::sample_rng(g.seed, 0);
            BooleanMatrix::random(&mut rng, rows, cols)?
        }
        Kind::Kuniform => {
            let code = build_code_matrix(required(a.t, "t")?, square()?, required(a.k, "k")?)?;
            generate_kuniform(&code, g.seed)?.a
        }
        Kind::Kronecker => {
            let b = parsed(&required(a.left.clone(), "left")?, format::parse_matrix)?;
            let r = parsed(&required(a.right.clone(), "right")?, format::parse_matrix)?;
            kronecker(&b, &r)?
        }
    };
    let report = GenReport {
        command: "gen",
        seed: g.seed,
        kind: a.kind.to_possible_value().map(|v| v.get_name().to_owned()).unwrap_or_default(),
        n_rows: m.n_rows(),
        n_cols: m.n_cols(),
        weight: m.weight(),
    };
    Output::new(Some(format::write_matrix(&m)), &report)
}

fn build(g: &Global, a: &BuildArgs) -> CliResult<Output> {
    let ring = Semiring::from(a.ring);
    let matrix = || parsed(&required(a.input.clone(), "in")?, format::parse_matrix);
    let mut block_width = None;
    let mut bound = None;
    let mut cover_size = None;
    let (c, trivial_wires) = match a.method {
        Method::Trivial => {
            let m = matrix()?;
            (trivial_circuit(&m, ring)?, m.weight())
        }
        Method::Lupanov => {
            let m = matrix()?;
            let params = match a.b {
                Some(b) => LupanovParams::new(b)?,
                None => LupanovParams::best_for(m.n_rows(), m.n_cols())
                    .ok_or_else(|| usage("a single column leaves no block width to choose"))?,
            };
            block_width = Some(params.block_width());
            bound = Some(wire_bound(m.n_rows(), m.n_cols(), params.block_width()));
            (lupanov_circuit(&m, ring, params)?, m.weight())
        }
        Method::Tensor => {
            if ring != Semiring::Or {
                return Err(usage("tensor circuits are OR circuits; use --ring or"));
            }
            let right = matrix()?;
            let left = parsed(&required(a.left.clone(), "left")?, format::parse_matrix)?;
            let cover = if left.n_rows() == left.n_cols()
                && left == BooleanMatrix::complement_identity(left.n_rows())?
            {
                complement_identity_cover(left.n_rows())?
            } else {
                match rank_cover(&left, false, g.budget.unwrap_or(DEFAULT_SEARCH_BUDGET)) {
                    RankOutcome::Exact(c) => c,
                    RankOutcome::Unknown { best, .. } => best,
                }
            };
            cover_size = Some(cover.len());
            let weight = left.weight() * right.weight();
            (tensor_or_circuit(&TensorSpec::new(left, right, cover)?)?, weight)
        }
        Method::Kuniform => {
            if ring != Semiring::Xor {
                return Err(usage("k-uniform circuits are XOR circuits; use --ring xor"));
            }
            let code = build_code_matrix(required(a.t, "t")?, required(a.n, "n")?, required(a.k, "k")?)?;
            let sample = generate_kuniform(&code, g.seed)?;
            let w = sample.a.weight();
            (sample.circuit, w)
        }
    };
    let report = BuildReport {
        command: "build",
        seed: g.seed,
        method: a.method.to_possible_value().map(|v| v.get_name().to_owned()).unwrap_or_default(),
        circuit: CircuitSummary::from(&c),
        trivial_wires,
        block_width,
        wire_bound: bound,
        cover_size,
    };
    Output::new(Some(format::write_circuit(&c)), &report)
}

fn analyze(g: &Global, a: &AnalyzeArgs) -> CliResult<Output> {
    let text = read(&a.input)?;
    let as_format = |source| CliError::Format {
        path: a.input.clone(),
        source,
    };
    let (m, circuit, violations) = if text.trim_start().starts_with("CIRCUIT") {
        let c = format::parse_circuit(&text).map_err(as_format)?;
        let v: Vec<String> = c.validate().iter().map(|v| v.to_string()).collect();
        let m = if v.is_empty() { Some(c.extract_matrix()?) } else { None };
        (m, Some(CircuitSummary::from(&c)), v)
    } else {
        (Some(format::parse_matrix(&text).map_err(as_format)?), None, Vec::new())
    };
    let report = AnalyzeReport {
        command: "analyze",
        seed: g.seed,
        circuit,
        violations,
        matrix: m.map(|m| analyze_matrix(g, a, &m)).transpose()?,
    };
    Output::new(None, &report)
}

fn analyze_matrix(g: &Global, a: &AnalyzeArgs, m: &BooleanMatrix) -> CliResult<MatrixAnalysis> {
    let freeness = match (a.s, a.t) {
        (Some(s), Some(t)) => Some(FreenessReport::from(&is_st_free(m, s, t)?)),
        _ => None,
    };
    let mp_bound = if m.weight() > 0 {
        Some(MpReport::from(&mp_lower_bound(m, m.n_rows(), m.n_cols())?))
    } else {
        None
    };
    let budget = g.budget.unwrap_or(DEFAULT_SEARCH_BUDGET);
    let small = m.n_rows() <= a.rank_limit && m.n_cols() <= a.rank_limit;
    let (rank_or, rank_sum) = if small {
        let (or, sum) = rayon::join(|| rank_cover(m, false, budget), || rank_cover(m, true, budget));
        (Some(RankReport::from(&or)), Some(RankReport::from(&sum)))
    } else {
        (None, None)
    };
    Ok(MatrixAnalysis {
        n_rows: m.n_rows(),
        n_cols: m.n_cols(),
        weight: m.weight(),
        zero_rows: m.zero_rows().map(|i| i + 1).collect(),
        freeness,
        mp_bound,
        rank_or,
        rank_sum,
    })
}

fn rewrite_cmd(g: &Global, a: &RewriteArgs) -> CliResult<Output> {
    let c = parsed(&a.input, format::parse_circuit)?;
    let target = match a.target {
        Target::Sum => Semiring::Sum,
        Target::Xor => Semiring::Xor,
    };
    let strategy = match a.strategy {
        StrategyArg::Depth1 => Strategy::Depth1,
        StrategyArg::Lupanov => Strategy::Lupanov,
    };
    let (out, r) = rewrite(&c, target, strategy)?;
    Output::new(Some(format::write_circuit(&out)), &RewriteJson::new(g.seed, target, &r))
}

fn eval(g: &Global, a: &EvalArgs) -> CliResult<Output> {
    let c = parsed(&a.input, format::parse_circuit)?;
    if a.extract {
        let m = c.extract_matrix()?;
        let report = GenReport {
            command: "eval",
            seed: g.seed,
            kind: "extract".into(),
            n_rows: m.n_rows(),
            n_cols: m.n_cols(),
            weight: m.weight(),
        };
        return Output::new(Some(format::write_matrix(&m)), &report);
    }
    let x = if a.ones {
        Vector::ones(c.semiring(), c.n_inputs())
    } else {
        let text = required(a.x.clone(), "x, --ones or --extract")?;
        let entries = text
            .split(|ch: char| ch == ',' || ch.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<u64>().map_err(|_| usage(format!("bad vector entry `{t}`"))))
            .collect::<CliResult<Vec<_>>>()?;
        Vector::new(c.semiring(), entries)?
    };
    let y = c.evaluate(&x)?;
    let report = EvalReport {
        command: "eval",
        seed: g.seed,
        semiring: c.semiring().to_string(),
        input: x.entries().to_vec(),
        output: y.entries().to_vec(),
    };
    Output::new(None, &report)
}

/// [`count_covering_pairs`] with [`Via::Direct`], rows split across threads.
pub fn count_covering_pairs_parallel(inst: &CoverInstance) -> u128 {
    (0..inst.size())
        .into_par_iter()
        .map(|i| (0..inst.size()).filter(|&j| inst.is_covering_pair(i, j)).count() as u128)
        .sum()
}

fn satcount(g: &Global, a: &SatArgs) -> CliResult<Output> {
    let f = parsed(&a.input, format::parse_dimacs)?;
    let start = Instant::now();
    let value = match (a.mode, a.via) {
        (Mode::Count, ViaArg::Pipeline) => lincirc::count_sat(&f, a.var_cap)?,
        (Mode::Parity, ViaArg::Pipeline) => lincirc::parity_sat(&f, a.var_cap)? as u128,
        (mode, ViaArg::Direct) => {
            let split = split_to_cover(&f, a.var_cap)?;
            let pairs = count_covering_pairs_parallel(&split.instance);
            let count = if split.padded { pairs / 2 } else { pairs };
            debug_assert_eq!(
                Some(pairs),
                count_covering_pairs(&split.instance, Via::Direct).ok().and_then(Tally::count)
            );
            match mode {
                Mode::Count => count,
                Mode::Parity => count % 2,
            }
        }
    };
    let report = SatReport {
        command: "satcount",
        seed: g.seed,
        n: f.n_vars(),
        m: f.clauses().len(),
        mode: match a.mode {
            Mode::Count => "count",
            Mode::Parity => "parity",
        },
        via: match a.via {
            ViaArg::Direct => "direct",
            ViaArg::Pipeline => "pipeline",
        },
        count_or_parity: value,
        elapsed_ms: start.elapsed().as_millis(),
    };
    Output::new(None, &report)
}

fn oracle(g: &Global, a: &OracleArgs) -> CliResult<Output> {
    let m = parsed(&a.input, format::parse_matrix)?;
    let budget = g.budget.unwrap_or(DEFAULT_ORACLE_BUDGET as u64) as usize;
    let ring = match a.ring {
        OracleRing::All => return Output::new(None, &GapJson::new(g.seed, &gap_report(&m, budget)?)),
        OracleRing::Or => Semiring::Or,
        OracleRing::Sum => Semiring::Sum,
        OracleRing::Xor => Semiring::Xor,
    };
    let result = min_wires(&m, ring, budget)?;
    let wires = result.wires();
    let partial = GapReport {
        matrix: m,
        budget,
        c_or: wires.filter(|_| ring == Semiring::Or),
        c_sum: wires.filter(|_| ring == Semiring::Sum),
        c_xor: wires.filter(|_| ring == Semiring::Xor),
        ratios: Vec::new(),
    };
    let artifact = match &result {
        MinWires::Resolved { circuit, .. } => Some(format::write_circuit(circuit)),
        MinWires::Unknown { .. } => None,
    };
    Output::new(artifact, &GapJson::new(g.seed, &partial))
}

fn uniformity(g: &Global, a: &UniformityArgs) -> CliResult<Output> {
    let code = build_code_matrix(a.t, a.n, a.k)?;
    let zero_based = |v: &[usize], default: Vec<usize>| -> CliResult<Vec<usize>> {
        if v.is_empty() {
            return Ok(default);
        }
        if v.len() != a.k {
            return Err(usage(format!("expected {} indices, found {}", a.k, v.len())));
        }
        v.iter()
            .map(|&i| i.checked_sub(1).ok_or_else(|| usage("indices are 1-based")))
            .collect()
    };
    let rows = zero_based(&a.rows, (0..a.k).collect())?;
    let cols = zero_based(&a.cols, (a.n - a.k..a.n).collect())?;
    let report = uniformity_test(&code, a.samples, &rows, &cols, g.seed)?;
    Output::new(None, &report)
}

