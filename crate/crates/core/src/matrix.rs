//! Dense boolean matrices.

use alloc::vec::Vec;
use core::fmt;

use rand::Rng;

use crate::bits::BitSet;
use crate::error::{Error, Result};

/// An `n_rows × n_cols` 0/1 matrix stored as one bitset per row.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BooleanMatrix {
    n_cols: usize,
    rows: Vec<BitSet>,
}

impl BooleanMatrix {
    pub fn zeros(n_rows: usize, n_cols: usize) -> Result<Self> {
        if n_rows == 0 || n_cols == 0 {
            return Err(Error::EmptyMatrix);
        }
        Ok(BooleanMatrix {
            n_cols,
            rows: (0..n_rows).map(|_| BitSet::new(n_cols)).collect(),
        })
    }

    pub fn from_rows(n_cols: usize, rows: Vec<BitSet>) -> Result<Self> {
        if rows.is_empty() || n_cols == 0 {
            return Err(Error::EmptyMatrix);
        }
        if let Some(bad) = rows.iter().find(|r| r.len() != n_cols) {
            return Err(Error::DimensionMismatch {
                expected: n_cols,
                found: bad.len(),
            });
        }
        Ok(BooleanMatrix { n_cols, rows })
    }

    /// Builds a matrix from nested 0/1 rows; convenient in tests.
    pub fn from_bits<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let n_cols = rows.first().map(|r| r.as_ref().len()).unwrap_or(0);
        let rows = rows
            .iter()
            .map(|r| {
                let r = r.as_ref();
                if r.len() != n_cols {
                    return Err(Error::DimensionMismatch {
                        expected: n_cols,
                        found: r.len(),
                    });
                }
                Ok(BitSet::from_indices(
                    n_cols,
                    r.iter().enumerate().filter(|(_, &b)| b != 0).map(|(j, _)| j),
                ))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(n_cols, rows)
    }

    pub fn identity(n: usize) -> Result<Self> {
        let mut m = Self::zeros(n, n)?;
        for i in 0..n {
            m.set(i, i, true);
        }
        Ok(m)
    }

    /// All-ones minus the identity.
    pub fn complement_identity(n: usize) -> Result<Self> {
        Ok(Self::identity(n)?.complement())
    }

    pub fn ones(n_rows: usize, n_cols: usize) -> Result<Self> {
        Ok(Self::zeros(n_rows, n_cols)?.complement())
    }

    pub fn random<R: Rng + ?Sized>(rng: &mut R, n_rows: usize, n_cols: usize) -> Result<Self> {
        let mut m = Self::zeros(n_rows, n_cols)?;
        for i in 0..n_rows {
            for j in 0..n_cols {
                if rng.random::<bool>() {
                    m.set(i, j, true);
                }
            }
        }
        Ok(m)
    }

    /// Uniformly random matrix conditioned on every row being nonzero.
    pub fn random_nonzero_rows<R: Rng + ?Sized>(
        rng: &mut R,
        n_rows: usize,
        n_cols: usize,
    ) -> Result<Self> {
        let mut m = Self::zeros(n_rows, n_cols)?;
        for row in m.rows.iter_mut() {
            while row.is_empty() {
                for j in 0..n_cols {
                    row.set(j, rng.random::<bool>());
                }
            }
        }
        Ok(m)
    }

    #[inline]
    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn n_cols(&self) -> usize {
        self.n_cols
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i].contains(j)
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, value: bool) {
        self.rows[i].set(j, value)
    }

    #[inline]
    pub fn row(&self, i: usize) -> &BitSet {
        &self.rows[i]
    }

    pub fn rows(&self) -> &[BitSet] {
        &self.rows
    }

    /// Number of 1-entries.
    pub fn weight(&self) -> usize {
        self.rows.iter().map(BitSet::count).sum()
    }

    pub fn zero_rows(&self) -> impl Iterator<Item = usize> + '_ {
        self.rows
            .iter()
            .enumerate()
            .filter(|(_, r)| r.is_empty())
            .map(|(i, _)| i)
    }

    pub fn first_zero_row(&self) -> Option<usize> {
        self.zero_rows().next()
    }

    /// Fails with [`Error::ZeroRow`] if some row is all-zero.
    pub fn require_nonzero_rows(&self) -> Result<()> {
        match self.first_zero_row() {
            Some(row) => Err(Error::ZeroRow { row }),
            None => Ok(()),
        }
    }

    pub fn complement(&self) -> Self {
        BooleanMatrix {
            n_cols: self.n_cols,
            rows: self.rows.iter().map(BitSet::complement).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = BooleanMatrix {
            n_cols: self.n_rows(),
            rows: (0..self.n_cols).map(|_| BitSet::new(self.n_rows())).collect(),
        };
        for (i, row) in self.rows.iter().enumerate() {
            for j in row {
                t.rows[j].insert(i);
            }
        }
        t
    }

    pub fn column(&self, j: usize) -> BitSet {
        BitSet::from_indices(self.n_rows(), (0..self.n_rows()).filter(|&i| self.get(i, j)))
    }

    /// Matrix product over GF(2).
    pub fn mul_gf2(&self, rhs: &BooleanMatrix) -> Result<Self> {
        if self.n_cols != rhs.n_rows() {
            return Err(Error::DimensionMismatch {
                expected: self.n_cols,
                found: rhs.n_rows(),
            });
        }
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc = BitSet::new(rhs.n_cols);
                for k in row {
                    acc.symmetric_difference_with(rhs.row(k));
                }
                acc
            })
            .collect();
        Self::from_rows(rhs.n_cols, rows)
    }

    /// Matrix product over the boolean semiring.
    pub fn mul_or(&self, rhs: &BooleanMatrix) -> Result<Self> {
        if self.n_cols != rhs.n_rows() {
            return Err(Error::DimensionMismatch {
                expected: self.n_cols,
                found: rhs.n_rows(),
            });
        }
        let rows = self
            .rows
            .iter()
            .map(|row| {
                let mut acc = BitSet::new(rhs.n_cols);
                for k in row {
                    acc.union_with(rhs.row(k));
                }
                acc
            })
            .collect();
        Self::from_rows(rhs.n_cols, rows)
    }

    /// Submatrix on the given row and column index lists.
    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Result<Self> {
        let mut m = Self::zeros(rows.len(), cols.len())?;
        for (a, &i) in rows.iter().enumerate() {
            for (b, &j) in cols.iter().enumerate() {
                m.set(a, b, self.get(i, j));
            }
        }
        Ok(m)
    }
}

impl fmt::Debug for BooleanMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "BooleanMatrix {}x{} [", self.n_rows(), self.n_cols)?;
        for row in &self.rows {
            f.write_str("  ")?;
            for j in 0..self.n_cols {
                f.write_str(if row.contains(j) { "1" } else { "0" })?;
            }
            writeln!(f)?;
        }
        f.write_str("]")
    }
}
