//! Rewriting OR circuits as SUM or XOR circuits for the same matrix.
//!
//! The rewrite extracts the matrix and rebuilds it from scratch, which is
//! quadratic in the input size in the worst case. Nothing here tries to do
//! better: a substantially subquadratic rewrite would yield a faster CNF
//! model counter than is believed possible.

use crate::circuit::{trivial_circuit, Circuit, Semiring};
use crate::error::{Error, Result};
use crate::lupanov::{lupanov_circuit, LupanovParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// One gate per row, wired to its 1-entries.
    Depth1,
    /// Block construction with the width minimising its wire formula.
    Lupanov,
}

impl Strategy {
    pub fn name(self) -> &'static str {
        match self {
            Strategy::Depth1 => "depth1",
            Strategy::Lupanov => "lupanov",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RewriteReport {
    pub input_wires: usize,
    pub output_wires: usize,
    pub output_depth: usize,
    pub strategy: Strategy,
}

pub fn rewrite(c: &Circuit, target: Semiring, strategy: Strategy) -> Result<(Circuit, RewriteReport)> {
    if c.semiring() != Semiring::Or {
        return Err(Error::SemiringMismatch {
            expected: Semiring::Or,
            found: c.semiring(),
        });
    }
    if target == Semiring::Or {
        return Err(Error::SemiringMismatch {
            expected: Semiring::Sum,
            found: target,
        });
    }
    let a = c.extract_matrix()?;
    a.require_nonzero_rows()?;
    let out = match (strategy, LupanovParams::best_for(a.n_rows(), a.n_cols())) {
        (Strategy::Lupanov, Some(params)) => lupanov_circuit(&a, target, params)?,
        // A single column leaves nothing to share.
        _ => trivial_circuit(&a, target)?,
    };
    let report = RewriteReport {
        input_wires: c.wire_count(),
        output_wires: out.wire_count(),
        output_depth: out.depth(),
        strategy,
    };
    Ok((out, report))
}

/// Whether two circuits compute the same boolean matrix, whatever their
/// arithmetics. SUM circuits must pass validation.
pub fn equivalent(c1: &Circuit, c2: &Circuit) -> Result<bool> {
    if c1.n_inputs() != c2.n_inputs() {
        return Err(Error::DimensionMismatch {
            expected: c1.n_inputs(),
            found: c2.n_inputs(),
        });
    }
    if c1.n_outputs() != c2.n_outputs() {
        return Err(Error::DimensionMismatch {
            expected: c1.n_outputs(),
            found: c2.n_outputs(),
        });
    }
    for c in [c1, c2] {
        if c.semiring() == Semiring::Sum {
            if let Some(v) = c.validate().into_iter().next() {
                return Err(Error::InvalidCircuit(v));
            }
        }
    }
    Ok(c1.extract_matrix()? == c2.extract_matrix()?)
}
