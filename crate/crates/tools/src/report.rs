//! JSON report records. Every record carries the seed of the run verbatim.

use serde::Serialize;

use lincirc::cover::RankOutcome;
use lincirc::oracle::GapReport;
use lincirc::{Circuit, FreenessCertificate, MpBound, RewriteReport};

#[derive(Debug, Clone, Serialize)]
pub struct GenReport {
    pub command: &'static str,
    pub seed: u64,
    pub kind: String,
    pub n_rows: usize,
    pub n_cols: usize,
    pub weight: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct CircuitSummary {
    pub semiring: String,
    pub n_inputs: usize,
    pub n_gates: usize,
    pub n_outputs: usize,
    pub wires: usize,
    pub depth: usize,
}

impl From<&Circuit> for CircuitSummary {
    fn from(c: &Circuit) -> Self {
        CircuitSummary {
            semiring: c.semiring().to_string(),
            n_inputs: c.n_inputs(),
            n_gates: c.n_gates(),
            n_outputs: c.n_outputs(),
            wires: c.wire_count(),
            depth: c.depth(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct BuildReport {
    pub command: &'static str,
    pub seed: u64,
    pub method: String,
    pub circuit: CircuitSummary,
    /// Wires of the depth-1 circuit for the same matrix.
    pub trivial_wires: usize,
    pub block_width: Option<usize>,
    pub wire_bound: Option<usize>,
    pub cover_size: Option<usize>,
}

#[derive(Debug, Clone, Serialize)]
pub struct FreenessReport {
    pub s: usize,
    pub t: usize,
    pub free: bool,
    /// 1-based rows and columns of an all-ones `(s+1) × (t+1)` submatrix.
    pub witness: Option<(Vec<usize>, Vec<usize>)>,
}

impl From<&FreenessCertificate> for FreenessReport {
    fn from(c: &FreenessCertificate) -> Self {
        let one_based = |v: &Vec<usize>| v.iter().map(|x| x + 1).collect();
        FreenessReport {
            s: c.s,
            t: c.t,
            free: c.free,
            witness: c.witness.as_ref().map(|(r, k)| (one_based(r), one_based(k))),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MpReport {
    pub s: usize,
    pub t: usize,
    pub distinct_row_weight: usize,
    pub bound: usize,
}

impl From<&MpBound> for MpReport {
    fn from(b: &MpBound) -> Self {
        MpReport {
            s: b.s,
            t: b.t,
            distinct_row_weight: b.weight,
            bound: b.bound,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RankReport {
    pub exact: Option<usize>,
    pub at_least: usize,
    pub best_found: usize,
}

impl From<&RankOutcome> for RankReport {
    fn from(r: &RankOutcome) -> Self {
        match r {
            RankOutcome::Exact(c) => RankReport {
                exact: Some(c.len()),
                at_least: c.len(),
                best_found: c.len(),
            },
            RankOutcome::Unknown { at_least, best } => RankReport {
                exact: None,
                at_least: *at_least,
                best_found: best.len(),
            },
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalyzeReport {
    pub command: &'static str,
    pub seed: u64,
    pub circuit: Option<CircuitSummary>,
    pub violations: Vec<String>,
    /// Absent for circuits that fail validation.
    pub matrix: Option<MatrixAnalysis>,
}

#[derive(Debug, Clone, Serialize)]
pub struct MatrixAnalysis {
    pub n_rows: usize,
    pub n_cols: usize,
    pub weight: usize,
    /// 1-based indices of all-zero rows.
    pub zero_rows: Vec<usize>,
    pub freeness: Option<FreenessReport>,
    pub mp_bound: Option<MpReport>,
    pub rank_or: Option<RankReport>,
    pub rank_sum: Option<RankReport>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RewriteJson {
    pub command: &'static str,
    pub seed: u64,
    pub strategy: &'static str,
    pub target: String,
    pub input_wires: usize,
    pub output_wires: usize,
    pub output_depth: usize,
}

impl RewriteJson {
    pub fn new(seed: u64, target: lincirc::Semiring, r: &RewriteReport) -> Self {
        RewriteJson {
            command: "rewrite",
            seed,
            strategy: r.strategy.name(),
            target: target.to_string(),
            input_wires: r.input_wires,
            output_wires: r.output_wires,
            output_depth: r.output_depth,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct EvalReport {
    pub command: &'static str,
    pub seed: u64,
    pub semiring: String,
    pub input: Vec<u64>,
    pub output: Vec<u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SatReport {
    pub command: &'static str,
    pub seed: u64,
    pub n: usize,
    pub m: usize,
    pub mode: &'static str,
    pub via: &'static str,
    /// The model count, or 0/1 for the parity.
    pub count_or_parity: u128,
    pub elapsed_ms: u128,
}

#[derive(Debug, Clone, Serialize)]
pub struct RatioJson {
    pub numerator: String,
    pub denominator: String,
    pub value: f64,
}

#[derive(Debug, Clone, Serialize)]
pub struct GapJson {
    pub command: &'static str,
    pub seed: u64,
    pub n_rows: usize,
    pub n_cols: usize,
    pub budget: usize,
    pub c_or: Option<usize>,
    pub c_sum: Option<usize>,
    pub c_xor: Option<usize>,
    /// Proven lower bound `budget + 1` for every unresolved semiring.
    pub unresolved_at_least: usize,
    pub ratios: Vec<RatioJson>,
}

impl GapJson {
    pub fn new(seed: u64, r: &GapReport) -> Self {
        GapJson {
            command: "oracle",
            seed,
            n_rows: r.matrix.n_rows(),
            n_cols: r.matrix.n_cols(),
            budget: r.budget,
            c_or: r.c_or,
            c_sum: r.c_sum,
            c_xor: r.c_xor,
            unresolved_at_least: r.budget + 1,
            ratios: r
                .ratios
                .iter()
                .map(|q| RatioJson {
                    numerator: q.numerator.to_string(),
                    denominator: q.denominator.to_string(),
                    value: q.value,
                })
                .collect(),
        }
    }
}
