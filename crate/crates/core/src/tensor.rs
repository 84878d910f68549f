//! Kronecker products and their OR circuits built from a rectangle cover.

use alloc::vec::Vec;

use crate::circuit::{Circuit, CircuitBuilder, Semiring};
use crate::cover::RectangleCover;
use crate::error::{Error, Result};
use crate::freeness::FreenessCertificate;
use crate::matrix::BooleanMatrix;

/// Largest row or column count [`kronecker`] will produce.
pub const MAX_KRONECKER_DIM: usize = 1 << 16;

/// `(B⊗A)[i·rows(A) + k, j·cols(A) + l] = B[i, j] · A[k, l]`.
pub fn kronecker(b: &BooleanMatrix, a: &BooleanMatrix) -> Result<BooleanMatrix> {
    let n_rows = b.n_rows().checked_mul(a.n_rows());
    let n_cols = b.n_cols().checked_mul(a.n_cols());
    let (n_rows, n_cols) = match (n_rows, n_cols) {
        (Some(r), Some(c)) if r <= MAX_KRONECKER_DIM && c <= MAX_KRONECKER_DIM => (r, c),
        _ => {
            return Err(Error::OutOfRange {
                what: "kronecker dimension",
                value: usize::max(
                    b.n_rows().saturating_mul(a.n_rows()),
                    b.n_cols().saturating_mul(a.n_cols()),
                ),
                min: 1,
                max: MAX_KRONECKER_DIM,
            })
        }
    };
    let mut out = BooleanMatrix::zeros(n_rows, n_cols)?;
    for i in 0..b.n_rows() {
        for j in b.row(i) {
            for k in 0..a.n_rows() {
                for l in a.row(k) {
                    out.set(i * a.n_rows() + k, j * a.n_cols() + l, true);
                }
            }
        }
    }
    Ok(out)
}

/// A Kronecker product `B⊗A` together with a rectangle cover of `B`.
#[derive(Debug, Clone)]
pub struct TensorSpec {
    pub left: BooleanMatrix,
    pub right: BooleanMatrix,
    pub cover: RectangleCover,
}

impl TensorSpec {
    pub fn new(left: BooleanMatrix, right: BooleanMatrix, cover: RectangleCover) -> Result<Self> {
        cover.check(&left)?;
        Ok(TensorSpec { left, right, cover })
    }
}

/// Depth-3 OR circuit for `B⊗A`.
///
/// Inputs are the entries of `X` (`cols(A) × cols(B)`) stacked column by
/// column, and the circuit computes `X ↦ (A·(X·Q))·Pᵀ` where `B = P·Qᵀ` comes
/// from the cover. Layers are wired naively, so each costs at most
/// `r·|rows|·|cols|` wires for a cover of size `r`.
pub fn tensor_or_circuit(spec: &TensorSpec) -> Result<Circuit> {
    let (b, a, cover) = (&spec.left, &spec.right, &spec.cover);
    cover.check(b)?;
    if let Some(row) = a.first_zero_row() {
        return Err(Error::ZeroRow { row });
    }
    if let Some(i) = b.first_zero_row() {
        return Err(Error::ZeroRow { row: i * a.n_rows() });
    }
    let (ra, ca) = (a.n_rows(), a.n_cols());
    let input = |l: usize, j: usize| j * ca + l;
    let mut builder = CircuitBuilder::new(Semiring::Or, ca * b.n_cols());

    // Layer 1: (X·Q)[l, ρ] = OR over j ∈ cols(ρ) of X[l, j]
    let xq: Vec<Vec<usize>> = (0..ca)
        .map(|l| {
            cover
                .rectangles
                .iter()
                .map(|rect| builder.gate(rect.cols.iter().map(|j| input(l, j))))
                .collect()
        })
        .collect();
    // Layer 2: (A·XQ)[k, ρ] = OR over l ∈ row k of A of XQ[l, ρ]
    let axq: Vec<Vec<usize>> = (0..ra)
        .map(|k| {
            (0..cover.len())
                .map(|rho| builder.gate(a.row(k).iter().map(|l| xq[l][rho])))
                .collect()
        })
        .collect();
    // Layer 3: Y[k, i] = OR over ρ with i ∈ rows(ρ) of AXQ[k, ρ]
    let mut outputs = Vec::with_capacity(b.n_rows() * ra);
    for i in 0..b.n_rows() {
        for axq_k in &axq {
            let ch: Vec<usize> = cover
                .rectangles
                .iter()
                .enumerate()
                .filter(|(_, rect)| rect.rows.contains(i))
                .map(|(rho, _)| axq_k[rho])
                .collect();
            outputs.push(builder.gate(ch));
        }
    }
    for o in outputs {
        builder.output(o);
    }
    builder.finish()
}

/// `⌈rank_SUM(B) · |A| / (s·t)⌉`, a lower bound on the SUM wire complexity of
/// `B⊗A` when `A` is `(s, t)`-free.
pub fn direct_sum_bound(
    a: &BooleanMatrix,
    certificate: &FreenessCertificate,
    sum_rank_of_left: usize,
) -> Result<usize> {
    if !certificate.free {
        return Err(Error::NotFree {
            s: certificate.s,
            t: certificate.t,
        });
    }
    if certificate.s == 0 || certificate.t == 0 {
        return Err(Error::OutOfRange {
            what: "s·t",
            value: 0,
            min: 1,
            max: usize::MAX,
        });
    }
    Ok((sum_rank_of_left * a.weight()).div_ceil(certificate.s * certificate.t))
}
