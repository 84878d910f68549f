//! Counting CNF models through covering pairs and circuit rewriting.
//!
//! Splitting the variables into a left and a right half turns a formula into
//! a set system: `L_s` holds the clauses satisfied by left assignment `s`,
//! `R_t` those satisfied by right assignment `t`, and `(s, t)` is a model
//! exactly when `L_s ∪ R_t` is every clause. The matrix of non-covering
//! pairs has a small depth-2 OR circuit; rewriting it into SUM (or XOR) and
//! evaluating on the all-ones vector counts (or takes the parity of) the
//! non-covering pairs.
//!
//! Orientation: entry `(i, j)` of the covering matrix is 1 iff
//! `L_j ∪ R_i = [m]`, so columns follow left sets and rows follow right sets.

use alloc::vec::Vec;

use crate::bits::BitSet;
use crate::circuit::{Circuit, CircuitBuilder, Semiring, Vector};
use crate::error::{Error, Result};
use crate::matrix::BooleanMatrix;
use crate::rewrite::{rewrite, Strategy};

pub const DEFAULT_VAR_CAP: usize = 30;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CnfFormula {
    n_vars: usize,
    clauses: Vec<Vec<i32>>,
}

impl CnfFormula {
    pub fn new(n_vars: usize, clauses: Vec<Vec<i32>>) -> Result<Self> {
        for &lit in clauses.iter().flatten() {
            let var = lit.unsigned_abs() as usize;
            if lit == 0 || var > n_vars {
                return Err(Error::LiteralOutOfRange { var, n_vars });
            }
        }
        Ok(CnfFormula { n_vars, clauses })
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn clauses(&self) -> &[Vec<i32>] {
        &self.clauses
    }

    /// An empty clause makes the formula unsatisfiable outright.
    pub fn has_empty_clause(&self) -> bool {
        self.clauses.iter().any(Vec::is_empty)
    }

    /// Whether the assignment (bit `v` = value of variable `v + 1`) is a model.
    pub fn satisfied_by(&self, assignment: u64) -> bool {
        self.clauses
            .iter()
            .all(|c| c.iter().any(|&lit| literal_true(lit, assignment)))
    }
}

fn literal_true(lit: i32, assignment: u64) -> bool {
    let bit = (assignment >> (lit.unsigned_abs() - 1)) & 1 == 1;
    bit == (lit > 0)
}

/// Set systems `L_1..L_N` and `R_1..R_N` over the universe `[m]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverInstance {
    universe: usize,
    left: Vec<BitSet>,
    right: Vec<BitSet>,
}

impl CoverInstance {
    pub fn new(universe: usize, left: Vec<BitSet>, right: Vec<BitSet>) -> Result<Self> {
        if left.len() != right.len() {
            return Err(Error::DimensionMismatch {
                expected: left.len(),
                found: right.len(),
            });
        }
        if left.is_empty() {
            return Err(Error::EmptyMatrix);
        }
        if let Some(bad) = left.iter().chain(&right).find(|s| s.len() != universe) {
            return Err(Error::DimensionMismatch {
                expected: universe,
                found: bad.len(),
            });
        }
        Ok(CoverInstance { universe, left, right })
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    /// `N`, the number of sets on each side.
    pub fn size(&self) -> usize {
        self.left.len()
    }

    pub fn left(&self) -> &[BitSet] {
        &self.left
    }

    pub fn right(&self) -> &[BitSet] {
        &self.right
    }

    #[inline]
    pub fn is_covering_pair(&self, i: usize, j: usize) -> bool {
        let (l, r) = (self.left[j].words(), self.right[i].words());
        let last = l.len().saturating_sub(1);
        let tail = match self.universe % 64 {
            0 => u64::MAX,
            bits => (1u64 << bits) - 1,
        };
        l.iter()
            .zip(r)
            .enumerate()
            .all(|(w, (a, b))| a | b == if w == last { tail } else { u64::MAX })
    }

    /// Entry `(i, j)` is 1 iff `(i, j)` is a covering pair.
    pub fn covering_matrix(&self) -> Result<BooleanMatrix> {
        let n = self.size();
        let mut m = BooleanMatrix::zeros(n, n)?;
        for i in 0..n {
            for j in 0..n {
                if self.is_covering_pair(i, j) {
                    m.set(i, j, true);
                }
            }
        }
        Ok(m)
    }
}

#[derive(Debug, Clone)]
pub struct SplitCover {
    pub instance: CoverInstance,
    /// A free dummy variable was appended (as the last right variable) to
    /// make the count of variables even; covering pairs then number twice
    /// the models.
    pub padded: bool,
}

/// Left variables are `x_1..x_h`, right ones `x_{h+1}..x_{2h}`; in left
/// assignment `s` bit `v` is the value of `x_{v+1}`, in right assignment `t`
/// bit `v` is the value of `x_{h+v+1}`.
pub fn split_to_cover(f: &CnfFormula, var_cap: usize) -> Result<SplitCover> {
    if f.n_vars > var_cap || f.n_vars > 62 {
        return Err(Error::OutOfRange {
            what: "variables",
            value: f.n_vars,
            min: 0,
            max: var_cap.min(62),
        });
    }
    let padded = f.n_vars % 2 == 1;
    let half = f.n_vars.div_ceil(2);
    let m = f.clauses.len();
    let sets = |offset: usize| -> Vec<BitSet> {
        (0..1u64 << half)
            .map(|assignment| {
                let mut s = BitSet::new(m);
                for (c, clause) in f.clauses.iter().enumerate() {
                    let hit = clause.iter().any(|&lit| {
                        let v = lit.unsigned_abs() as usize - 1;
                        (offset..offset + half).contains(&v)
                            && ((assignment >> (v - offset)) & 1 == 1) == (lit > 0)
                    });
                    if hit {
                        s.insert(c);
                    }
                }
                s
            })
            .collect()
    };
    let instance = CoverInstance::new(m, sets(0), sets(half))?;
    Ok(SplitCover { instance, padded })
}

/// Depth-2 OR circuit for the complement of the covering matrix, with the
/// rows and middle gates that had to be dropped.
#[derive(Debug, Clone)]
pub struct ComplementCircuit {
    /// `None` when every row was dropped.
    pub circuit: Option<Circuit>,
    /// Instance row `i` for each circuit output, in order.
    pub output_rows: Vec<usize>,
    /// Rows whose complement row is all-zero: `R_i = [m]`, or every element
    /// outside `R_i` lies in every left set.
    pub pruned_rows: Vec<usize>,
    /// Elements `k` lying in every left set, whose middle gate would be unfed.
    pub pruned_gates: Vec<usize>,
}

/// Input `j` feeds middle gate `g_k` for every `k ∉ L_j`; output `i` reads
/// `g_k` for every `k ∉ R_i`. A path from `j` to `i` exists iff some `k`
/// avoids `L_j ∪ R_i`, i.e. iff `(i, j)` is not covering. At most `2·N·m`
/// wires.
pub fn cover_complement_circuit(inst: &CoverInstance) -> Result<ComplementCircuit> {
    let n = inst.size();
    let mut builder = CircuitBuilder::new(Semiring::Or, n);
    let mut gate_of = Vec::with_capacity(inst.universe);
    let mut pruned_gates = Vec::new();
    for k in 0..inst.universe {
        let fed: Vec<usize> = (0..n).filter(|&j| !inst.left[j].contains(k)).collect();
        if fed.is_empty() {
            pruned_gates.push(k);
            gate_of.push(None);
        } else {
            gate_of.push(Some(builder.gate(fed)));
        }
    }
    let mut output_rows = Vec::new();
    let mut pruned_rows = Vec::new();
    for i in 0..n {
        let ch: Vec<usize> = (0..inst.universe)
            .filter(|&k| !inst.right[i].contains(k))
            .filter_map(|k| gate_of[k])
            .collect();
        if ch.is_empty() {
            pruned_rows.push(i);
        } else {
            let g = builder.gate(ch);
            builder.output(g);
            output_rows.push(i);
        }
    }
    let circuit = if output_rows.is_empty() {
        None
    } else {
        Some(builder.finish()?)
    };
    Ok(ComplementCircuit {
        circuit,
        output_rows,
        pruned_rows,
        pruned_gates,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Via {
    /// Test every pair with word-parallel set unions.
    Direct,
    /// Rewrite the complement circuit into SUM and evaluate on all-ones.
    PipelineSum,
    /// Rewrite the complement circuit into XOR and evaluate on all-ones;
    /// yields the parity only.
    PipelineXor,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Tally {
    Count(u128),
    Parity(bool),
}

impl Tally {
    pub fn parity(self) -> bool {
        match self {
            Tally::Count(c) => c % 2 == 1,
            Tally::Parity(p) => p,
        }
    }

    pub fn count(self) -> Option<u128> {
        match self {
            Tally::Count(c) => Some(c),
            Tally::Parity(_) => None,
        }
    }
}

pub fn count_covering_pairs(inst: &CoverInstance, via: Via) -> Result<Tally> {
    let n = inst.size() as u128;
    match via {
        Via::Direct => {
            let mut count = 0u128;
            for i in 0..inst.size() {
                for j in 0..inst.size() {
                    count += inst.is_covering_pair(i, j) as u128;
                }
            }
            Ok(Tally::Count(count))
        }
        Via::PipelineSum => {
            // Dropped rows are all-zero in the complement and add nothing.
            let non_covering = evaluate_complement(inst, Semiring::Sum)?
                .iter()
                .map(|&y| y as u128)
                .sum::<u128>();
            Ok(Tally::Count(n * n - non_covering))
        }
        Via::PipelineXor => {
            let non_covering = evaluate_complement(inst, Semiring::Xor)?
                .iter()
                .fold(0, |acc, &y| acc ^ y);
            Ok(Tally::Parity(((n * n) as u64 ^ non_covering) & 1 == 1))
        }
    }
}

fn evaluate_complement(inst: &CoverInstance, target: Semiring) -> Result<Vec<u64>> {
    let built = cover_complement_circuit(inst)?;
    let Some(or_circuit) = built.circuit else {
        return Ok(Vec::new());
    };
    let (rewritten, _) = rewrite(&or_circuit, target, Strategy::Depth1)?;
    let y = rewritten.evaluate(&Vector::ones(target, inst.size()))?;
    Ok(y.entries().to_vec())
}

/// Number of models, through the SUM pipeline.
pub fn count_sat(f: &CnfFormula, var_cap: usize) -> Result<u128> {
    let split = split_to_cover(f, var_cap)?;
    let pairs = count_covering_pairs(&split.instance, Via::PipelineSum)?
        .count()
        .expect("SUM pipeline yields a count");
    Ok(if split.padded { pairs / 2 } else { pairs })
}

/// Parity of the number of models, through the XOR pipeline.
///
/// A free padding variable would double the count and erase its parity, so
/// odd variable counts are padded with a variable pinned true by a unit
/// clause instead.
pub fn parity_sat(f: &CnfFormula, var_cap: usize) -> Result<bool> {
    let split = if f.n_vars % 2 == 1 {
        let pin = f.n_vars as i32 + 1;
        let mut clauses = f.clauses.clone();
        clauses.push(alloc::vec![pin]);
        let pinned = CnfFormula::new(f.n_vars + 1, clauses)?;
        split_to_cover(&pinned, var_cap.max(f.n_vars + 1))?
    } else {
        split_to_cover(f, var_cap)?
    };
    debug_assert!(!split.padded);
    Ok(count_covering_pairs(&split.instance, Via::PipelineXor)?.parity())
}
