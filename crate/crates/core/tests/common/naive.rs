//! Brute-force DAG enumerator shared by the oracle cross-checks.

use lincirc::{BooleanMatrix, Semiring};

/// Tries every circuit gate by gate: each new gate reads any non-empty set of
/// earlier nodes. Values are coefficient vectors in the ring itself, so SUM
/// gates with a coefficient of 2 are representable and simply never match a
/// row. Gates repeating an earlier gate value are skipped.
pub struct Naive {
    ring: Semiring,
    targets: Vec<Vec<u64>>,
}

impl Naive {
    fn combine(&self, acc: &mut [u64], v: &[u64]) {
        for (a, b) in acc.iter_mut().zip(v) {
            *a = match self.ring {
                Semiring::Or => *a | *b,
                Semiring::Sum => *a + *b,
                Semiring::Xor => *a ^ *b,
            };
        }
    }

    fn search(&self, nodes: &mut Vec<Vec<u64>>, n_inputs: usize, wires_left: usize) -> bool {
        let gates = &nodes[n_inputs..];
        if self.targets.iter().all(|t| gates.contains(t)) {
            return true;
        }
        let n = nodes.len();
        for mask in 1u32..1 << n {
            let fanin = mask.count_ones() as usize;
            if fanin > wires_left {
                continue;
            }
            let mut value = vec![0u64; n_inputs];
            for (c, child) in nodes.iter().enumerate() {
                if mask >> c & 1 == 1 {
                    self.combine(&mut value, child);
                }
            }
            if nodes[n_inputs..].contains(&value) || value.iter().all(|&x| x == 0) {
                continue;
            }
            nodes.push(value);
            let found = self.search(nodes, n_inputs, wires_left - fanin);
            nodes.pop();
            if found {
                return true;
            }
        }
        false
    }

    pub fn min_wires(a: &BooleanMatrix, ring: Semiring, cap: usize) -> Option<usize> {
        let naive = Naive {
            ring,
            targets: (0..a.n_rows())
                .map(|i| (0..a.n_cols()).map(|j| a.get(i, j) as u64).collect())
                .collect(),
        };
        let n = a.n_cols();
        (0..=cap).find(|&w| {
            let mut nodes: Vec<Vec<u64>> = (0..n).map(|j| (0..n).map(|l| (l == j) as u64).collect()).collect();
            naive.search(&mut nodes, n, w)
        })
    }
}
