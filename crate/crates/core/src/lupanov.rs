//! Depth-2 block construction for arbitrary boolean matrices.
//!
//! Columns are cut into blocks of `b` consecutive columns. Each output takes
//! one wire per block on which its row is nonzero: straight to the input when
//! the restriction is a single column, otherwise to a shared subset gate.
//! Subset gates are built on demand as a chain, each one adding the highest
//! column of its subset to the gate for the remaining columns, so every
//! subset gate costs two wires. Children of every gate have disjoint
//! supports, which makes the circuit valid in all three arithmetics.

use alloc::vec;
use alloc::vec::Vec;

use crate::circuit::{Circuit, CircuitBuilder, Semiring};
use crate::error::{Error, Result};
use crate::matrix::BooleanMatrix;

/// Widths above this would make the per-block subset table impractically large.
pub const MAX_BLOCK_WIDTH: usize = 24;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LupanovParams {
    block_width: usize,
}

impl LupanovParams {
    pub fn new(block_width: usize) -> Result<Self> {
        if !(2..=MAX_BLOCK_WIDTH).contains(&block_width) {
            return Err(Error::OutOfRange {
                what: "block width",
                value: block_width,
                min: 2,
                max: MAX_BLOCK_WIDTH,
            });
        }
        Ok(LupanovParams { block_width })
    }

    pub fn block_width(&self) -> usize {
        self.block_width
    }

    /// The width in `2..=min(n_cols, MAX_BLOCK_WIDTH)` minimising
    /// [`wire_bound`]; `None` when the matrix has a single column.
    pub fn best_for(n_rows: usize, n_cols: usize) -> Option<Self> {
        (2..=n_cols.min(MAX_BLOCK_WIDTH))
            .min_by_key(|&b| wire_bound(n_rows, n_cols, b))
            .map(|block_width| LupanovParams { block_width })
    }
}

/// `⌈n/b⌉·2(2^b − b − 1) + m·⌈n/b⌉`: the wires of the full construction with
/// every subset gate present.
pub fn wire_bound(n_rows: usize, n_cols: usize, b: usize) -> usize {
    let blocks = n_cols.div_ceil(b);
    blocks * 2 * ((1usize << b) - b - 1) + n_rows * blocks
}

pub fn lupanov_circuit(a: &BooleanMatrix, semiring: Semiring, params: LupanovParams) -> Result<Circuit> {
    a.require_nonzero_rows()?;
    let b = params.block_width;
    if b > a.n_cols() {
        return Err(Error::OutOfRange {
            what: "block width",
            value: b,
            min: 2,
            max: a.n_cols(),
        });
    }
    let n = a.n_cols();
    let n_blocks = n.div_ceil(b);
    let mut builder = CircuitBuilder::new(semiring, n);
    let mut subset_gate: Vec<Vec<usize>> = (0..n_blocks)
        .map(|k| vec![usize::MAX; 1 << block_len(n, b, k)])
        .collect();

    let mut row_children = Vec::with_capacity(a.n_rows());
    let mut masks = vec![0usize; n_blocks];
    for row in a.rows() {
        masks.iter_mut().for_each(|m| *m = 0);
        for j in row {
            masks[j / b] |= 1 << (j % b);
        }
        let mut ch = Vec::new();
        for (k, &mask) in masks.iter().enumerate() {
            if mask != 0 {
                ch.push(subset_node(&mut builder, &mut subset_gate[k], k * b, mask));
            }
        }
        row_children.push(ch);
    }
    for ch in row_children {
        let g = builder.gate(ch);
        builder.output(g);
    }
    builder.finish()
}

fn block_len(n: usize, b: usize, k: usize) -> usize {
    b.min(n - k * b)
}

fn subset_node(builder: &mut CircuitBuilder, memo: &mut [usize], base: usize, mask: usize) -> usize {
    if mask.count_ones() == 1 {
        return builder.input(base + mask.trailing_zeros() as usize);
    }
    if memo[mask] != usize::MAX {
        return memo[mask];
    }
    let high = usize::BITS as usize - 1 - mask.leading_zeros() as usize;
    let rest = subset_node(builder, memo, base, mask & !(1 << high));
    let g = builder.gate([rest, builder.input(base + high)]);
    memo[mask] = g;
    g
}
