//! `(s, t)`-freeness and the wire lower bound it certifies for OR circuits.
//!
//! A matrix is `(s, t)`-free when it has no `(s+1) × (t+1)` all-ones
//! submatrix. Any OR circuit for an `(s, t)`-free matrix `A` needs at least
//! `|A| / (s·t)` wires.

use alloc::vec::Vec;

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::matrix::BooleanMatrix;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FreenessCertificate {
    pub s: usize,
    pub t: usize,
    pub free: bool,
    /// `(s+1)` rows and `(t+1)` columns spanning an all-ones submatrix.
    pub witness: Option<(Vec<usize>, Vec<usize>)>,
}

impl FreenessCertificate {
    /// Checks the witness against `a`: for a non-free certificate the named
    /// submatrix must have the right shape and be all-ones.
    pub fn witness_holds(&self, a: &BooleanMatrix) -> bool {
        match (&self.witness, self.free) {
            (None, true) => true,
            (Some((rows, cols)), false) => {
                rows.len() == self.s + 1
                    && cols.len() == self.t + 1
                    && rows.iter().all(|&i| cols.iter().all(|&j| a.get(i, j)))
            }
            _ => false,
        }
    }
}

/// Exhaustive search over `(s+1)`-row subsets, pruning any prefix whose
/// common columns already number at most `t`.
pub fn is_st_free(a: &BooleanMatrix, s: usize, t: usize) -> Result<FreenessCertificate> {
    if s == 0 || s + 1 > a.n_rows() {
        return Err(Error::OutOfRange {
            what: "s",
            value: s,
            min: 1,
            max: a.n_rows() - 1,
        });
    }
    if t == 0 || t + 1 > a.n_cols() {
        return Err(Error::OutOfRange {
            what: "t",
            value: t,
            min: 1,
            max: a.n_cols() - 1,
        });
    }
    let mut chosen = Vec::with_capacity(s + 1);
    let witness = find_block(a, s + 1, t + 1, 0, &BitSet::full(a.n_cols()), &mut chosen)
        .map(|cols| (chosen.clone(), cols.iter().take(t + 1).collect()));
    Ok(FreenessCertificate {
        s,
        t,
        free: witness.is_none(),
        witness,
    })
}

fn find_block(
    a: &BooleanMatrix,
    rows_needed: usize,
    cols_needed: usize,
    start: usize,
    common: &BitSet,
    chosen: &mut Vec<usize>,
) -> Option<BitSet> {
    if chosen.len() == rows_needed {
        return Some(common.clone());
    }
    let left = rows_needed - chosen.len();
    for i in start..=a.n_rows() - left {
        let mut next = common.clone();
        next.intersect_with(a.row(i));
        if next.count() < cols_needed {
            continue;
        }
        chosen.push(i);
        if let Some(found) = find_block(a, rows_needed, cols_needed, i + 1, &next, chosen) {
            return Some(found);
        }
        chosen.pop();
    }
    None
}

/// Largest number of columns shared by some `k` distinct rows.
fn max_common_columns(a: &BooleanMatrix, k: usize) -> usize {
    fn go(a: &BooleanMatrix, k: usize, start: usize, common: &BitSet, depth: usize, best: &mut usize) {
        let c = common.count();
        if c <= *best {
            return;
        }
        if depth == k {
            *best = c;
            return;
        }
        for i in start..=a.n_rows() - (k - depth) {
            let mut next = common.clone();
            next.intersect_with(a.row(i));
            go(a, k, i + 1, &next, depth + 1, best);
        }
    }
    if k > a.n_rows() {
        return 0;
    }
    let mut best = 0;
    go(a, k, 0, &BitSet::full(a.n_cols()), 0, &mut best);
    best
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MpBound {
    pub s: usize,
    pub t: usize,
    /// Weight of the distinct rows.
    pub weight: usize,
    /// `⌈weight / (s·t)⌉`, a lower bound on the OR wire complexity.
    pub bound: usize,
    pub certificate: FreenessCertificate,
}

/// Sweeps `1 ≤ s ≤ max_s`, `1 ≤ t ≤ max_t` and returns the free pair with the
/// largest `|A| / (s·t)`. Values of `s` at or above the row count (and `t` at
/// or above the column count) are free for every matrix and take part in the
/// sweep. Ties go to the smallest `s`.
///
/// Identical rows can share one output gate, so repeated rows are dropped
/// first; `weight` and the certificate refer to the distinct rows.
pub fn mp_lower_bound(a: &BooleanMatrix, max_s: usize, max_t: usize) -> Result<MpBound> {
    let mut rows = a.rows().to_vec();
    rows.sort_unstable();
    rows.dedup();
    let distinct = BooleanMatrix::from_rows(a.n_cols(), rows)?;
    let a = &distinct;
    let weight = a.weight();
    if weight == 0 {
        return Err(Error::ZeroMatrix);
    }
    if max_s == 0 || max_t == 0 {
        return Err(Error::OutOfRange {
            what: "max_s/max_t",
            value: 0,
            min: 1,
            max: usize::MAX,
        });
    }
    let mut best: Option<(usize, usize)> = None;
    for s in 1..=max_s {
        // (s, t) is free iff every (s+1)-row subset shares at most t columns.
        let t = max_common_columns(a, s + 1).max(1);
        if t > max_t {
            continue;
        }
        if best.is_none_or(|(bs, bt)| s * t < bs * bt) {
            best = Some((s, t));
        }
    }
    let (s, t) = best.ok_or(Error::OutOfRange {
        what: "max_t",
        value: max_t,
        min: 1,
        max: a.n_cols(),
    })?;
    Ok(MpBound {
        s,
        t,
        weight,
        bound: weight.div_ceil(s * t),
        certificate: FreenessCertificate {
            s,
            t,
            free: true,
            witness: None,
        },
    })
}
