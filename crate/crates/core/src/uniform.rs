//! Code matrices with k-wise independent columns and the random matrices
//! `A = Pᵀ·R·P` they induce over GF(2).
//!
//! If every `k` columns of `P` are linearly independent and `R` is uniform,
//! then every `k × k` submatrix of `A` is uniform. `P` here is a Vandermonde
//! matrix over GF(2^t) with its entries expanded to bits, and `A` comes with
//! an XOR circuit that multiplies by `P`, then `R`, then `Pᵀ`.

use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bits::BitSet;
use crate::circuit::{trivial_circuit, Circuit, Semiring};
use crate::error::{Error, Result};
use crate::matrix::BooleanMatrix;

/// The generator behind every seeded experiment.
pub type SampleRng = ChaCha8Rng;

/// Generator for `seed`, on an independent substream per `stream`.
pub fn sample_rng(seed: u64, stream: u64) -> SampleRng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(stream);
    rng
}

/// Irreducible polynomials over GF(2) by degree, bit `i` = coefficient of `xⁱ`.
const IRREDUCIBLE: [u32; 17] = [
    0, 0x3, 0x7, 0xB, 0x13, 0x25, 0x43, 0x89, 0x11B, 0x211, 0x409, 0x805, 0x1053, 0x201B, 0x4443,
    0x8003, 0x1002B,
];

pub const MAX_FIELD_DEGREE: u32 = 16;

/// Arithmetic in GF(2^t) as polynomials modulo a fixed irreducible.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BinaryField {
    degree: u32,
    modulus: u32,
}

impl BinaryField {
    pub fn new(degree: u32) -> Result<Self> {
        if degree == 0 || degree > MAX_FIELD_DEGREE {
            return Err(Error::OutOfRange {
                what: "field degree",
                value: degree as usize,
                min: 1,
                max: MAX_FIELD_DEGREE as usize,
            });
        }
        Ok(BinaryField {
            degree,
            modulus: IRREDUCIBLE[degree as usize],
        })
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn modulus(&self) -> u32 {
        self.modulus
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        let mut acc: u32 = 0;
        let mut a = a;
        let mut b = b;
        while b != 0 {
            if b & 1 == 1 {
                acc ^= a;
            }
            b >>= 1;
            a <<= 1;
            if (a >> self.degree) & 1 == 1 {
                a ^= self.modulus;
            }
        }
        acc
    }

    pub fn pow(&self, a: u32, e: usize) -> u32 {
        (0..e).fold(1, |acc, _| self.mul(acc, a))
    }
}

/// A GF(2) matrix whose columns are `k`-wise linearly independent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CodeMatrix {
    p: BooleanMatrix,
    k: usize,
    field_degree: Option<u32>,
}

impl CodeMatrix {
    /// Wraps an arbitrary matrix claimed to have `k`-independent columns.
    /// The claim is not checked; see [`check_k_independence`].
    pub fn from_matrix(p: BooleanMatrix, k: usize) -> Self {
        CodeMatrix {
            p,
            k,
            field_degree: None,
        }
    }

    pub fn matrix(&self) -> &BooleanMatrix {
        &self.p
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn field_degree(&self) -> Option<u32> {
        self.field_degree
    }

    pub fn m(&self) -> usize {
        self.p.n_rows()
    }

    pub fn n(&self) -> usize {
        self.p.n_cols()
    }
}

/// `(k·t) × n` matrix whose column `j` stacks the bits of `αʲ⁰, αʲ¹, …,
/// αʲ^(k−1)` for the field element `α_j = j` of GF(2^t). Any `k` columns of
/// a Vandermonde matrix over GF(2^t) are independent, and a GF(2) relation
/// among the bit columns would be one among the field columns.
pub fn build_code_matrix(t: u32, n: usize, k: usize) -> Result<CodeMatrix> {
    let field = BinaryField::new(t)?;
    let size = 1usize << t;
    if n == 0 || n > size {
        return Err(Error::OutOfRange {
            what: "n",
            value: n,
            min: 1,
            max: size,
        });
    }
    if k == 0 || k > n {
        return Err(Error::OutOfRange {
            what: "k",
            value: k,
            min: 1,
            max: n,
        });
    }
    let t = t as usize;
    let mut p = BooleanMatrix::zeros(k * t, n)?;
    for j in 0..n {
        let alpha = j as u32;
        let mut power = 1;
        for i in 0..k {
            for bit in 0..t {
                if (power >> bit) & 1 == 1 {
                    p.set(i * t + bit, j, true);
                }
            }
            power = field.mul(power, alpha);
        }
    }
    Ok(CodeMatrix {
        p,
        k,
        field_degree: Some(t as u32),
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Independence {
    Independent,
    /// These `k` columns are linearly dependent.
    Dependent(Vec<usize>),
    /// `C(n, k)` exceeds the enumeration budget.
    Unverified { subsets: u128 },
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul((n - i) as u128) / (i as u128 + 1);
    }
    acc
}

/// Whether every `k`-subset of columns has GF(2) rank `k`, by depth-first
/// enumeration with an incremental echelon basis.
pub fn check_k_independence(code: &CodeMatrix, budget: u128) -> Independence {
    let (n, k) = (code.n(), code.k);
    let subsets = binomial(n, k);
    if subsets > budget {
        return Independence::Unverified { subsets };
    }
    let cols: Vec<BitSet> = (0..n).map(|j| code.p.column(j)).collect();
    let mut basis: Vec<(usize, BitSet)> = Vec::with_capacity(k);
    let mut chosen = Vec::with_capacity(k);
    match find_dependent(&cols, k, 0, &mut basis, &mut chosen) {
        None => Independence::Independent,
        Some(mut dep) => {
            // Pad a short dependent prefix to a full k-subset.
            let mut j = 0;
            while dep.len() < k {
                if !dep.contains(&j) {
                    dep.push(j);
                }
                j += 1;
            }
            dep.sort_unstable();
            Independence::Dependent(dep)
        }
    }
}

fn reduce(v: &BitSet, basis: &[(usize, BitSet)]) -> BitSet {
    let mut v = v.clone();
    for (pivot, b) in basis {
        if v.contains(*pivot) {
            v.symmetric_difference_with(b);
        }
    }
    v
}

fn find_dependent(
    cols: &[BitSet],
    k: usize,
    start: usize,
    basis: &mut Vec<(usize, BitSet)>,
    chosen: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    if chosen.len() == k {
        return None;
    }
    for j in start..=cols.len() - (k - chosen.len()) {
        let r = reduce(&cols[j], basis);
        chosen.push(j);
        let Some(pivot) = r.first() else {
            return Some(chosen.clone());
        };
        basis.push((pivot, r));
        let found = find_dependent(cols, k, j + 1, basis, chosen);
        basis.pop();
        if found.is_some() {
            return found;
        }
        chosen.pop();
    }
    None
}

#[derive(Debug, Clone)]
pub struct UniformSample {
    pub r: BooleanMatrix,
    pub a: BooleanMatrix,
    /// XOR circuit for `a`.
    pub circuit: Circuit,
}

/// Draws `R` uniformly from `seed` and builds `A = Pᵀ·R·P` with its circuit.
pub fn generate_kuniform(code: &CodeMatrix, seed: u64) -> Result<UniformSample> {
    let mut rng = sample_rng(seed, 0);
    let r = BooleanMatrix::random(&mut rng, code.m(), code.m())?;
    sample_with(code, r)
}

/// [`generate_kuniform`] with a caller-chosen `R`.
///
/// The circuit multiplies by `P` (depth 1), then by `R` (depth 1), then by
/// `Pᵀ` obtained by reversing a depth-1 circuit for `P`. Rows of `P` that are
/// zero, and rows of `R` that vanish on the remaining ones, carry nothing
/// and are dropped before wiring. Outputs left without any wire read a
/// shared gate `x₀ ⊕ x₀`, which is identically zero.
pub fn sample_with(code: &CodeMatrix, r: BooleanMatrix) -> Result<UniformSample> {
    let p = &code.p;
    if r.n_rows() != code.m() || r.n_cols() != code.m() {
        return Err(Error::DimensionMismatch {
            expected: code.m(),
            found: r.n_rows(),
        });
    }
    let a = p.transpose().mul_gf2(&r)?.mul_gf2(p)?;
    let circuit = compose_circuit(p, &r)?;
    Ok(UniformSample { r, a, circuit })
}

/// The three-stage circuit restricted to the output columns it actually
/// wires, with those columns in increasing order.
fn wired_stages(p: &BooleanMatrix, r: &BooleanMatrix) -> Result<Option<(Circuit, Vec<usize>)>> {
    let live_p: Vec<usize> = (0..p.n_rows()).filter(|&i| !p.row(i).is_empty()).collect();
    if live_p.is_empty() {
        return Ok(None);
    }
    let all_cols: Vec<usize> = (0..p.n_cols()).collect();
    let r_sub = r.submatrix(&live_p, &live_p)?;
    let live_r: Vec<usize> = (0..r_sub.n_rows()).filter(|&i| !r_sub.row(i).is_empty()).collect();
    if live_r.is_empty() {
        return Ok(None);
    }
    let p_live = p.submatrix(&live_p, &all_cols)?;
    let back = p_live.submatrix(&live_r, &all_cols)?;
    let wired: Vec<usize> = all_cols.iter().copied().filter(|&j| !back.column(j).is_empty()).collect();
    if wired.is_empty() {
        return Ok(None);
    }
    let r_live = r_sub.submatrix(&live_r, &(0..live_p.len()).collect::<Vec<_>>())?;
    let first = trivial_circuit(&p_live, Semiring::Xor)?;
    let middle = trivial_circuit(&r_live, Semiring::Xor)?;
    let last = trivial_circuit(&back.submatrix(&(0..live_r.len()).collect::<Vec<_>>(), &wired)?, Semiring::Xor)?
        .reverse_xor()?;
    Ok(Some((Circuit::compose(&Circuit::compose(&first, &middle)?, &last)?, wired)))
}

fn compose_circuit(p: &BooleanMatrix, r: &BooleanMatrix) -> Result<Circuit> {
    let n = p.n_cols();
    let (mut gates, outputs, wired) = match wired_stages(p, r)? {
        Some((c, wired)) => (c.gates().map(<[usize]>::to_vec).collect(), c.outputs().to_vec(), wired),
        None => (Vec::new(), Vec::new(), Vec::new()),
    };
    let mut by_col = outputs.into_iter();
    let mut zero = None;
    let mut final_outputs = Vec::with_capacity(n);
    for j in 0..n {
        if wired.binary_search(&j).is_ok() {
            final_outputs.push(by_col.next().expect("one output per wired column"));
        } else {
            let z = *zero.get_or_insert_with(|| {
                gates.push(vec![0, 0]);
                n + gates.len() - 1
            });
            final_outputs.push(z);
        }
    }
    Circuit::new(Semiring::Xor, n, gates, final_outputs)
}

/// Histogram of the `k × k` submatrix `A[rows × cols]` over `samples`
/// independent draws of `R`. Bin index: entry `(a, b)` is bit `a·k + b`.
pub fn tabulate_submatrix<G: Rng + ?Sized>(
    code: &CodeMatrix,
    rows: &[usize],
    cols: &[usize],
    samples: usize,
    rng: &mut G,
) -> Result<Vec<u64>> {
    let k = rows.len();
    if cols.len() != k {
        return Err(Error::DimensionMismatch {
            expected: k,
            found: cols.len(),
        });
    }
    if k == 0 || k * k > 20 {
        return Err(Error::OutOfRange {
            what: "k",
            value: k,
            min: 1,
            max: 4,
        });
    }
    if let Some(&bad) = rows.iter().chain(cols).find(|&&j| j >= code.n()) {
        return Err(Error::OutOfRange {
            what: "column index",
            value: bad,
            min: 0,
            max: code.n() - 1,
        });
    }
    let m = code.m();
    // Bits of P restricted to the chosen columns, one mask per row of P.
    let mask = |idx: &[usize], a: usize| {
        idx.iter()
            .enumerate()
            .fold(0u32, |acc, (b, &j)| acc | ((code.p.get(a, j) as u32) << b))
    };
    let p_rows: Vec<u32> = (0..m).map(|a| mask(rows, a)).collect();
    let p_cols: Vec<u32> = (0..m).map(|a| mask(cols, a)).collect();
    let mut counts = vec![0u64; 1 << (k * k)];
    let mut r_row = BitSet::new(m);
    for _ in 0..samples {
        // S = P_rowsᵀ · (R · P_cols), accumulated one row of R at a time.
        let mut s = 0u32;
        for &pr in &p_rows {
            for b in 0..m {
                r_row.set(b, rng.random::<bool>());
            }
            let rp = r_row.iter().fold(0u32, |acc, b| acc ^ p_cols[b]);
            for i in 0..k {
                if (pr >> i) & 1 == 1 {
                    s ^= rp << (i * k);
                }
            }
        }
        counts[s as usize] += 1;
    }
    Ok(counts)
}

/// Pearson's statistic against the uniform distribution on the bins.
pub fn chi_square_statistic(counts: &[u64]) -> f64 {
    let total: u64 = counts.iter().sum();
    let expected = total as f64 / counts.len() as f64;
    counts
        .iter()
        .map(|&o| {
            let d = o as f64 - expected;
            d * d / expected
        })
        .sum()
}

/// Smallest sample count accepted for a `k × k` histogram.
pub fn min_samples(k: usize) -> usize {
    100usize << (k * k)
}
