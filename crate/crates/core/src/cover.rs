//! Rectangle covers of boolean matrices and the exact OR and SUM ranks.
//!
//! A rectangle is a product `rows × cols` of all-ones positions. The OR rank
//! is the fewest rectangles whose union is exactly the 1-entries; the SUM
//! rank additionally requires the rectangles to be pairwise disjoint.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::matrix::BooleanMatrix;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Rectangle {
    pub rows: BitSet,
    pub cols: BitSet,
}

impl Rectangle {
    pub fn area(&self) -> usize {
        self.rows.count() * self.cols.count()
    }

    pub fn overlaps(&self, other: &Rectangle) -> bool {
        self.rows.intersects(&other.rows) && self.cols.intersects(&other.cols)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RectangleCover {
    pub n_rows: usize,
    pub n_cols: usize,
    pub rectangles: Vec<Rectangle>,
    /// Set when the rectangles are known to be pairwise disjoint.
    pub disjoint: bool,
}

impl RectangleCover {
    pub fn len(&self) -> usize {
        self.rectangles.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rectangles.is_empty()
    }

    /// Union of the rectangles as a matrix.
    pub fn to_matrix(&self) -> Result<BooleanMatrix> {
        let mut m = BooleanMatrix::zeros(self.n_rows, self.n_cols)?;
        for r in &self.rectangles {
            for i in &r.rows {
                for j in &r.cols {
                    m.set(i, j, true);
                }
            }
        }
        Ok(m)
    }

    pub fn pairwise_disjoint(&self) -> bool {
        self.rectangles
            .iter()
            .enumerate()
            .all(|(k, a)| self.rectangles[k + 1..].iter().all(|b| !a.overlaps(b)))
    }

    /// Checks that every rectangle is nonempty, the union is exactly the
    /// 1-entries of `a`, and the disjointness flag is honest.
    pub fn check(&self, a: &BooleanMatrix) -> Result<()> {
        if self.n_rows != a.n_rows() || self.n_cols != a.n_cols() {
            return Err(Error::InvalidCover("dimensions differ from the matrix"));
        }
        if self.rectangles.iter().any(|r| r.rows.is_empty() || r.cols.is_empty()) {
            return Err(Error::InvalidCover("empty rectangle"));
        }
        if self.to_matrix()? != *a {
            return Err(Error::InvalidCover("union differs from the 1-entries"));
        }
        if self.disjoint && !self.pairwise_disjoint() {
            return Err(Error::InvalidCover("rectangles overlap"));
        }
        Ok(())
    }

    /// Factors `P` (`n_rows × r`) and `Q` (`n_cols × r`) with `B = P·Qᵀ`
    /// over the boolean semiring, or over the integers when disjoint.
    pub fn factors(&self) -> Result<(BooleanMatrix, BooleanMatrix)> {
        let r = self.rectangles.len();
        if r == 0 {
            return Err(Error::InvalidCover("empty cover has no factors"));
        }
        let mut p = BooleanMatrix::zeros(self.n_rows, r)?;
        let mut q = BooleanMatrix::zeros(self.n_cols, r)?;
        for (k, rect) in self.rectangles.iter().enumerate() {
            for i in &rect.rows {
                p.set(i, k, true);
            }
            for j in &rect.cols {
                q.set(j, k, true);
            }
        }
        Ok((p, q))
    }
}

/// `2⌈log₂ n⌉` rectangles covering exactly the off-diagonal entries of the
/// `n × n` complemented identity: for each bit position `p` and value `v`,
/// the rows whose index has bit `p` equal to `v` times the columns whose
/// index has bit `p` equal to `1 − v`.
pub fn complement_identity_cover(n: usize) -> Result<RectangleCover> {
    if n < 2 {
        return Err(Error::OutOfRange {
            what: "n",
            value: n,
            min: 2,
            max: usize::MAX,
        });
    }
    let bits = usize::BITS - (n - 1).leading_zeros();
    let mut rectangles = Vec::with_capacity(2 * bits as usize);
    for p in 0..bits {
        for v in [0, 1] {
            let with = |want: usize| {
                BitSet::from_indices(n, (0..n).filter(move |&i| (i >> p) & 1 == want))
            };
            rectangles.push(Rectangle {
                rows: with(v),
                cols: with(1 - v),
            });
        }
    }
    Ok(RectangleCover {
        n_rows: n,
        n_cols: n,
        rectangles,
        disjoint: false,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RankOutcome {
    /// A cover of minimum cardinality.
    Exact(RectangleCover),
    /// The search budget ran out: no cover smaller than `at_least` exists,
    /// and `best` is the smallest cover found.
    Unknown { at_least: usize, best: RectangleCover },
}

impl RankOutcome {
    pub fn exact(&self) -> Option<usize> {
        match self {
            RankOutcome::Exact(c) => Some(c.len()),
            RankOutcome::Unknown { .. } => None,
        }
    }

    pub fn cover(&self) -> &RectangleCover {
        match self {
            RankOutcome::Exact(c) => c,
            RankOutcome::Unknown { best, .. } => best,
        }
    }
}

/// Minimum (disjoint if `disjoint`) rectangle cover by iterative deepening.
///
/// Branching is always on the first uncovered 1-entry in row-major order.
/// Overlapping covers branch over maximal rectangles only; disjoint covers
/// branch over every rectangle inside the still-uncovered region. Prefixes
/// are cut when the rectangles already used plus a lower bound for the rest
/// exceed the limit. The bound is a greedy fooling set and, for disjoint
/// covers, also the rank of the uncovered part over a large prime field
/// (a disjoint cover writes it as a sum of rank-one matrices).
///
/// `budget` caps the number of search nodes over all deepening rounds.
pub fn rank_cover(a: &BooleanMatrix, disjoint: bool, budget: u64) -> RankOutcome {
    let mut search = Search {
        a,
        disjoint,
        nodes: 0,
        budget,
        covered: (0..a.n_rows()).map(|_| BitSet::new(a.n_cols())).collect(),
        chosen: Vec::new(),
    };
    let upper = search.heuristic_cover();
    let lower = search.lower_bound();
    for limit in lower..upper.len() {
        match search.dfs(limit) {
            Some(true) => {
                let rectangles = core::mem::take(&mut search.chosen);
                return RankOutcome::Exact(RectangleCover {
                    n_rows: a.n_rows(),
                    n_cols: a.n_cols(),
                    rectangles,
                    disjoint,
                });
            }
            Some(false) => {}
            None => {
                return RankOutcome::Unknown {
                    at_least: limit,
                    best: upper,
                }
            }
        }
    }
    RankOutcome::Exact(upper)
}

struct Search<'a> {
    a: &'a BooleanMatrix,
    disjoint: bool,
    nodes: u64,
    budget: u64,
    covered: Vec<BitSet>,
    chosen: Vec<Rectangle>,
}

impl Search<'_> {
    fn uncovered_row(&self, i: usize) -> BitSet {
        let mut r = self.a.row(i).clone();
        r.difference_with(&self.covered[i]);
        r
    }

    fn first_uncovered(&self) -> Option<(usize, usize)> {
        (0..self.a.n_rows()).find_map(|i| self.uncovered_row(i).first().map(|j| (i, j)))
    }

    /// `Some(found)`, or `None` once the node budget is spent. On success
    /// `chosen` holds the cover.
    fn dfs(&mut self, limit: usize) -> Option<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        let Some((i, j)) = self.first_uncovered() else {
            return Some(true);
        };
        if self.chosen.len() + self.lower_bound() > limit {
            return Some(false);
        }
        for rect in self.candidates(i, j) {
            let saved: Vec<(usize, BitSet)> =
                rect.rows.iter().map(|r| (r, self.covered[r].clone())).collect();
            for r in &rect.rows {
                self.covered[r].union_with(&rect.cols);
            }
            self.chosen.push(rect);
            match self.dfs(limit) {
                Some(false) => {}
                other => return other,
            }
            self.chosen.pop();
            for (r, row) in saved {
                self.covered[r] = row;
            }
        }
        Some(false)
    }

    fn candidates(&self, i: usize, j: usize) -> Vec<Rectangle> {
        let n_rows = self.a.n_rows();
        let mut out: Vec<Rectangle> = Vec::new();
        if !self.disjoint {
            // Maximal all-ones rectangles of A through (i, j), keyed by columns.
            let rows_with_j: Vec<usize> = (0..n_rows).filter(|&r| r != i && self.a.get(r, j)).collect();
            let mut seen = BTreeSet::new();
            for_each_subset(&rows_with_j, &mut |subset| {
                let mut cols = self.a.row(i).clone();
                for &r in subset {
                    cols.intersect_with(self.a.row(r));
                }
                if seen.insert(cols.clone()) {
                    let rows = BitSet::from_indices(
                        n_rows,
                        (0..n_rows).filter(|&r| cols.is_subset(self.a.row(r))),
                    );
                    out.push(Rectangle { rows, cols });
                }
            });
            out.sort_by_key(|r| core::cmp::Reverse(self.gain(r)));
        } else {
            // Everything before (i, j) in row-major order is covered, so the
            // rectangle lives in rows ≥ i and, through row i, columns ≥ j.
            let mut row_i = self.uncovered_row(i);
            for c in 0..j {
                row_i.remove(c);
            }
            let others: Vec<usize> = (i + 1..n_rows)
                .filter(|&r| self.a.get(r, j) && !self.covered[r].contains(j))
                .collect();
            for_each_subset(&others, &mut |subset| {
                let mut cols = row_i.clone();
                for &r in subset {
                    cols.intersect_with(&self.uncovered_row(r));
                }
                let rows = BitSet::from_indices(n_rows, core::iter::once(i).chain(subset.iter().copied()));
                let extra: Vec<usize> = cols.iter().filter(|&c| c != j).collect();
                for_each_subset(&extra, &mut |more| {
                    out.push(Rectangle {
                        rows: rows.clone(),
                        cols: BitSet::from_indices(cols.len(), core::iter::once(j).chain(more.iter().copied())),
                    });
                });
            });
            out.sort_by_key(|r| core::cmp::Reverse(r.area()));
        }
        out
    }

    fn gain(&self, r: &Rectangle) -> usize {
        r.rows
            .iter()
            .map(|i| {
                let mut fresh = r.cols.clone();
                fresh.difference_with(&self.covered[i]);
                fresh.count()
            })
            .sum()
    }

    fn lower_bound(&self) -> usize {
        let fooling = self.fooling_set_size();
        if self.disjoint {
            let remaining: Vec<BitSet> = (0..self.a.n_rows()).map(|i| self.uncovered_row(i)).collect();
            fooling.max(rank_mod_p(&remaining))
        } else {
            fooling
        }
    }

    /// Greedy set of uncovered 1-entries no two of which fit in one
    /// all-ones rectangle of A.
    fn fooling_set_size(&self) -> usize {
        let mut picked: Vec<(usize, usize)> = Vec::new();
        for i in 0..self.a.n_rows() {
            for j in &self.uncovered_row(i) {
                if picked
                    .iter()
                    .all(|&(p, q)| !(self.a.get(p, j) && self.a.get(i, q)))
                {
                    picked.push((i, j));
                }
            }
        }
        picked.len()
    }

    /// Disjoint: one rectangle per nonzero row or per nonzero column,
    /// whichever is fewer. Overlapping: greedy by fresh coverage over
    /// maximal rectangles.
    fn heuristic_cover(&self) -> RectangleCover {
        let a = self.a;
        let mut rectangles = Vec::new();
        if self.disjoint {
            let by_rows: Vec<Rectangle> = (0..a.n_rows())
                .filter(|&i| !a.row(i).is_empty())
                .map(|i| Rectangle {
                    rows: BitSet::from_indices(a.n_rows(), [i]),
                    cols: a.row(i).clone(),
                })
                .collect();
            let t = a.transpose();
            let by_cols: Vec<Rectangle> = (0..t.n_rows())
                .filter(|&j| !t.row(j).is_empty())
                .map(|j| Rectangle {
                    rows: t.row(j).clone(),
                    cols: BitSet::from_indices(a.n_cols(), [j]),
                })
                .collect();
            rectangles = if by_cols.len() < by_rows.len() { by_cols } else { by_rows };
        } else {
            let mut probe = Search {
                a,
                disjoint: false,
                nodes: 0,
                budget: 0,
                covered: self.covered.clone(),
                chosen: Vec::new(),
            };
            while let Some((i, j)) = probe.first_uncovered() {
                let best = probe
                    .candidates(i, j)
                    .into_iter()
                    .next()
                    .expect("the entry itself is a rectangle");
                for r in &best.rows {
                    probe.covered[r].union_with(&best.cols);
                }
                rectangles.push(best);
            }
        }
        RectangleCover {
            n_rows: a.n_rows(),
            n_cols: a.n_cols(),
            rectangles,
            disjoint: self.disjoint,
        }
    }
}

fn for_each_subset(items: &[usize], f: &mut impl FnMut(&[usize])) {
    fn go(items: &[usize], k: usize, cur: &mut Vec<usize>, f: &mut impl FnMut(&[usize])) {
        if k == items.len() {
            f(cur);
            return;
        }
        cur.push(items[k]);
        go(items, k + 1, cur, f);
        cur.pop();
        go(items, k + 1, cur, f);
    }
    go(items, 0, &mut Vec::with_capacity(items.len()), f);
}

const PRIME: u64 = (1 << 61) - 1;

fn mul_mod(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % PRIME as u128) as u64
}

fn inv_mod(a: u64) -> u64 {
    let (mut base, mut exp, mut acc) = (a, PRIME - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base);
        }
        base = mul_mod(base, base);
        exp >>= 1;
    }
    acc
}

/// Rank of a 0/1 matrix over GF(2⁶¹ − 1). Never exceeds the rational rank.
fn rank_mod_p(rows: &[BitSet]) -> usize {
    let n_cols = rows.first().map(BitSet::len).unwrap_or(0);
    let mut m: Vec<Vec<u64>> = rows
        .iter()
        .filter(|r| !r.is_empty())
        .map(|r| (0..n_cols).map(|j| r.contains(j) as u64).collect())
        .collect();
    let mut rank = 0;
    for col in 0..n_cols {
        let Some(p) = (rank..m.len()).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, p);
        let inv = inv_mod(m[rank][col]);
        for r in rank + 1..m.len() {
            if m[r][col] == 0 {
                continue;
            }
            let f = mul_mod(m[r][col], inv);
            let (top, bottom) = m.split_at_mut(r);
            for (x, &p) in bottom[0][col..n_cols].iter_mut().zip(&top[rank][col..n_cols]) {
                *x = (*x + PRIME - mul_mod(f, p)) % PRIME;
            }
        }
        rank += 1;
    }
    rank
}
