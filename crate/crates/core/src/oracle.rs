//! Exact minimum wire counts for tiny matrices.
//!
//! A circuit is viewed as the sequence of supports its gates compute. With at
//! most five columns a support fits in five bits, so a search state (the set
//! of supports built so far) is a 32-bit mask over the 31 non-empty supports.
//! Adding support `U` to state `S` costs the least fan-in that produces `U`
//! from `S` and the input singletons: a set cover of `U` by available subsets
//! (OR), an exact partition of `U` (SUM), or a shortest XOR combination
//! (XOR). A* over states with an admissible, consistent heuristic yields the
//! exact minimum; a witness circuit is rebuilt from the parent chain.

use alloc::collections::{BTreeMap, BinaryHeap};
use alloc::vec::Vec;
use core::cmp::Reverse;

use crate::circuit::{Circuit, CircuitBuilder, Semiring};
use crate::error::{Error, Result};
use crate::matrix::BooleanMatrix;

pub const MAX_ORACLE_DIM: usize = 5;
pub const MAX_ORACLE_BUDGET: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MinWires {
    Resolved { wires: usize, circuit: Circuit },
    /// No circuit with at most `budget` wires exists; the minimum is at
    /// least `budget + 1`.
    Unknown { budget: usize },
}

impl MinWires {
    pub fn wires(&self) -> Option<usize> {
        match self {
            MinWires::Resolved { wires, .. } => Some(*wires),
            MinWires::Unknown { .. } => None,
        }
    }
}

struct Problem {
    ring: Semiring,
    n_cols: usize,
    inputs: u32,
    targets: Vec<u32>,
    target_set: u32,
    candidates: Vec<u32>,
}

impl Problem {
    fn new(a: &BooleanMatrix, ring: Semiring) -> Result<Self> {
        if a.n_rows() > MAX_ORACLE_DIM || a.n_cols() > MAX_ORACLE_DIM {
            return Err(Error::OutOfRange {
                what: "oracle dimension",
                value: a.n_rows().max(a.n_cols()),
                min: 1,
                max: MAX_ORACLE_DIM,
            });
        }
        a.require_nonzero_rows()?;
        let n_cols = a.n_cols();
        let inputs = (0..n_cols).fold(0u32, |acc, j| acc | 1 << (1u32 << j));
        let mut targets: Vec<u32> = (0..a.n_rows()).map(|i| a.row(i).as_mask() as u32).collect();
        targets.sort_unstable();
        targets.dedup();
        let target_set = targets.iter().fold(0u32, |acc, &t| acc | 1 << t);
        // A gate that is not an output either copies another node (fan-in 1)
        // or has support of size two or more; copies never help. Under OR and
        // SUM every useful gate feeds some output, so its support lies inside
        // that output's row.
        let candidates = (1u32..1 << n_cols)
            .filter(|&u| target_set >> u & 1 == 1 || u.count_ones() >= 2)
            .filter(|&u| ring == Semiring::Xor || targets.iter().any(|&t| u & !t == 0))
            .collect();
        Ok(Problem {
            ring,
            n_cols,
            inputs,
            targets,
            target_set,
            candidates,
        })
    }

    fn heuristic(&self, state: u32) -> usize {
        self.targets
            .iter()
            .filter(|&&t| state >> t & 1 == 0)
            .map(|&t| if t.count_ones() == 1 { 1 } else { 2 })
            .sum()
    }

    /// Least fan-in producing `u` from the available supports, with one
    /// optimal child list.
    fn cheapest(&self, available: u32, u: u32) -> Option<Vec<u32>> {
        let size = 1usize << self.n_cols;
        let mut dist = [u8::MAX; 32];
        let mut via = [(0u32, 0u32); 32];
        let mut queue = [0u32; 32];
        let (mut head, mut tail) = (0, 1);
        dist[0] = 0;
        while head < tail {
            let m = queue[head];
            head += 1;
            if m == u {
                break;
            }
            for v in 1..size as u32 {
                if available >> v & 1 == 0 {
                    continue;
                }
                let next = match self.ring {
                    Semiring::Or if v & !u == 0 && v & !m != 0 => m | v,
                    Semiring::Sum if v & !u == 0 && v & m == 0 => m | v,
                    Semiring::Xor => m ^ v,
                    _ => continue,
                };
                if dist[next as usize] == u8::MAX {
                    dist[next as usize] = dist[m as usize] + 1;
                    via[next as usize] = (m, v);
                    queue[tail] = next;
                    tail += 1;
                }
            }
        }
        if dist[u as usize] == u8::MAX {
            return None;
        }
        let mut children = Vec::with_capacity(dist[u as usize] as usize);
        let mut m = u;
        while m != 0 {
            let (prev, v) = via[m as usize];
            children.push(v);
            m = prev;
        }
        children.reverse();
        Some(children)
    }
}

/// Exact minimum wire count of a circuit over `ring` computing `a`.
///
/// Every output is a non-input gate; a row equal to a single column still
/// costs a fan-in-1 gate. Rows and columns are capped at five.
pub fn min_wires(a: &BooleanMatrix, ring: Semiring, wire_budget: usize) -> Result<MinWires> {
    if wire_budget > MAX_ORACLE_BUDGET {
        return Err(Error::OutOfRange {
            what: "wire budget",
            value: wire_budget,
            min: 0,
            max: MAX_ORACLE_BUDGET,
        });
    }
    let p = Problem::new(a, ring)?;
    // state -> (best cost, parent state, added support)
    let mut best: BTreeMap<u32, (usize, u32, u32)> = BTreeMap::new();
    let mut heap = BinaryHeap::new();
    best.insert(0, (0, 0, 0));
    heap.push(Reverse((p.heuristic(0), 0usize, 0u32)));
    while let Some(Reverse((f, g, state))) = heap.pop() {
        if f > wire_budget {
            break;
        }
        if best[&state].0 < g {
            continue;
        }
        if state & p.target_set == p.target_set {
            return Ok(MinWires::Resolved {
                wires: g,
                circuit: witness(a, &p, &best, state)?,
            });
        }
        let available = state | p.inputs;
        for &u in &p.candidates {
            if state >> u & 1 == 1 {
                continue;
            }
            let Some(children) = p.cheapest(available, u) else {
                continue;
            };
            let next = state | 1 << u;
            let cost = g + children.len();
            let f_next = cost + p.heuristic(next);
            if f_next > wire_budget {
                continue;
            }
            if best.get(&next).is_none_or(|&(c, _, _)| cost < c) {
                best.insert(next, (cost, state, u));
                heap.push(Reverse((f_next, cost, next)));
            }
        }
    }
    Ok(MinWires::Unknown { budget: wire_budget })
}

fn witness(a: &BooleanMatrix, p: &Problem, best: &BTreeMap<u32, (usize, u32, u32)>, goal: u32) -> Result<Circuit> {
    let mut order = Vec::new();
    let mut state = goal;
    while state != 0 {
        let (_, parent, u) = best[&state];
        order.push((parent, u));
        state = parent;
    }
    order.reverse();
    let mut node_of = [usize::MAX; 32];
    for j in 0..p.n_cols {
        node_of[1 << j] = j;
    }
    let mut gate_of = [usize::MAX; 32];
    let mut builder = CircuitBuilder::new(p.ring, p.n_cols);
    for (parent, u) in order {
        let children = p
            .cheapest(parent | p.inputs, u)
            .expect("support was reachable during the search");
        let g = builder.gate(children.iter().map(|&v| node_of[v as usize]));
        gate_of[u as usize] = g;
        if node_of[u as usize] == usize::MAX {
            node_of[u as usize] = g;
        }
    }
    for i in 0..a.n_rows() {
        builder.output(gate_of[a.row(i).as_mask() as usize]);
    }
    builder.finish()
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GapRatio {
    pub numerator: Semiring,
    pub denominator: Semiring,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GapReport {
    pub matrix: BooleanMatrix,
    pub budget: usize,
    pub c_or: Option<usize>,
    pub c_sum: Option<usize>,
    pub c_xor: Option<usize>,
    /// `C_X(A) / C_Y(A)` for every ordered pair of distinct semirings where
    /// both values are known.
    pub ratios: Vec<GapRatio>,
}

impl GapReport {
    pub fn get(&self, ring: Semiring) -> Option<usize> {
        match ring {
            Semiring::Or => self.c_or,
            Semiring::Sum => self.c_sum,
            Semiring::Xor => self.c_xor,
        }
    }
}

pub fn gap_report(a: &BooleanMatrix, wire_budget: usize) -> Result<GapReport> {
    let mut values = [None; 3];
    for (slot, ring) in values.iter_mut().zip(Semiring::ALL) {
        *slot = min_wires(a, ring, wire_budget)?.wires();
    }
    let mut ratios = Vec::new();
    for (x, &vx) in Semiring::ALL.iter().zip(&values) {
        for (y, &vy) in Semiring::ALL.iter().zip(&values) {
            if let (true, Some(vx), Some(vy)) = (x != y, vx, vy) {
                ratios.push(GapRatio {
                    numerator: *x,
                    denominator: *y,
                    value: vx as f64 / vy as f64,
                });
            }
        }
    }
    Ok(GapReport {
        matrix: a.clone(),
        budget: wire_budget,
        c_or: values[0],
        c_sum: values[1],
        c_xor: values[2],
        ratios,
    })
}
