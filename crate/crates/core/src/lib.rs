//! Circuits computing boolean linear maps `x ↦ Ax` in three arithmetics:
//! OR (boolean sums), SUM (non-negative integer addition) and XOR (addition
//! modulo 2).
//!
//! The crate is `no_std` and needs only `alloc`. Text formats, reports and the
//! command-line tool live in the companion `lincirc-tools` crate.
#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod bits;
pub mod circuit;
pub mod cover;
pub mod error;
pub mod freeness;
pub mod lupanov;
pub mod matrix;
pub mod oracle;
pub mod rewrite;
pub mod satbridge;
pub mod tensor;
pub mod uniform;

pub use bits::BitSet;
pub use circuit::{trivial_circuit, Circuit, CircuitBuilder, Semiring, Vector, Violation};
pub use cover::{complement_identity_cover, rank_cover, RankOutcome, Rectangle, RectangleCover};
pub use error::{Error, Result};
pub use freeness::{is_st_free, mp_lower_bound, FreenessCertificate, MpBound};
pub use lupanov::{lupanov_circuit, LupanovParams};
pub use matrix::BooleanMatrix;
pub use oracle::{gap_report, min_wires, GapRatio, GapReport, MinWires};
pub use rewrite::{equivalent, rewrite, RewriteReport, Strategy};
pub use satbridge::{count_covering_pairs, count_sat, parity_sat, split_to_cover, CnfFormula, CoverInstance, Tally, Via};
pub use tensor::{direct_sum_bound, kronecker, tensor_or_circuit, TensorSpec};
pub use uniform::{build_code_matrix, check_k_independence, generate_kuniform, sample_rng, CodeMatrix, Independence, SampleRng, UniformSample};
