//! Chi-square uniformity harness for sampled `k × k` submatrices.

use rayon::prelude::*;
use serde::Serialize;
use statrs::distribution::{ChiSquared, ContinuousCDF};

use lincirc::uniform::{chi_square_statistic, min_samples, tabulate_submatrix, CodeMatrix};
use lincirc::{sample_rng, Error};

/// Samples drawn per random stream. Fixed so that results depend on the seed
/// alone, not on how many threads share the work.
pub const CHUNK: usize = 1024;

pub const SIGNIFICANCE: f64 = 0.001;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct UniformityReport {
    pub k: usize,
    pub samples: usize,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub counts: Vec<u64>,
    pub statistic: f64,
    pub dof: usize,
    pub critical_001: f64,
    pub pass: bool,
    pub seed: u64,
}

/// Upper `alpha` quantile of the chi-square distribution.
pub fn chi_square_critical(dof: usize, alpha: f64) -> f64 {
    ChiSquared::new(dof as f64)
        .expect("positive degrees of freedom")
        .inverse_cdf(1.0 - alpha)
}

/// Tabulates `A[rows × cols]` over `samples` draws of `R` and tests the
/// histogram against the uniform distribution at significance 0.001.
///
/// Chunk `i` of [`CHUNK`] samples draws from stream `i` of `seed`; chunks run
/// in parallel on the current rayon pool and are merged by summation.
pub fn uniformity_test(
    code: &CodeMatrix,
    samples: usize,
    rows: &[usize],
    cols: &[usize],
    seed: u64,
) -> Result<UniformityReport, Error> {
    let k = rows.len();
    let required = min_samples(k);
    if samples < required {
        return Err(Error::TooFewSamples { samples, required });
    }
    let chunks = samples.div_ceil(CHUNK);
    let partial: Vec<Vec<u64>> = (0..chunks)
        .into_par_iter()
        .map(|i| {
            let n = CHUNK.min(samples - i * CHUNK);
            let mut rng = sample_rng(seed, i as u64);
            tabulate_submatrix(code, rows, cols, n, &mut rng)
        })
        .collect::<Result<_, _>>()?;
    let mut counts = vec![0u64; 1 << (k * k)];
    for p in &partial {
        for (c, x) in counts.iter_mut().zip(p) {
            *c += x;
        }
    }
    let statistic = chi_square_statistic(&counts);
    let dof = counts.len() - 1;
    let critical_001 = chi_square_critical(dof, SIGNIFICANCE);
    Ok(UniformityReport {
        k,
        samples,
        rows: rows.to_vec(),
        cols: cols.to_vec(),
        counts,
        statistic,
        dof,
        critical_001,
        pass: statistic < critical_001,
        seed,
    })
}
