//! Gate-level circuits over the OR, SUM and XOR arithmetics.
//!
//! A circuit has `n_inputs` input nodes followed by its gates in topological
//! order, so node `v < n_inputs` is an input and node `n_inputs + g` is gate
//! `g`. Gate children are stored as consecutive runs of one flat list; the
//! wire count of the circuit is the length of that list.
//!
//! Every output names a gate, never an input, and every gate has fan-in at
//! least one. A circuit is immutable once built; [`Circuit::from_parts`]
//! accepts arbitrary data so that [`Circuit::validate`] can report what is
//! wrong with it, while every computing operation first re-checks structure.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::bits::BitSet;
use crate::error::{Error, Result};
use crate::matrix::BooleanMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Semiring {
    /// Boolean disjunction; entries are reachability.
    Or,
    /// Non-negative integer addition; entries are path counts.
    Sum,
    /// Addition modulo 2; entries are path-count parities.
    Xor,
}

impl Semiring {
    pub const ALL: [Semiring; 3] = [Semiring::Or, Semiring::Sum, Semiring::Xor];

    pub fn name(self) -> &'static str {
        match self {
            Semiring::Or => "OR",
            Semiring::Sum => "SUM",
            Semiring::Xor => "XOR",
        }
    }
}

impl fmt::Display for Semiring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl core::str::FromStr for Semiring {
    type Err = ();

    fn from_str(s: &str) -> core::result::Result<Self, ()> {
        match s {
            "OR" | "or" => Ok(Semiring::Or),
            "SUM" | "sum" | "+" => Ok(Semiring::Sum),
            "XOR" | "xor" => Ok(Semiring::Xor),
            _ => Err(()),
        }
    }
}

/// A value vector tagged with the arithmetic it lives in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Vector {
    semiring: Semiring,
    entries: Vec<u64>,
}

impl Vector {
    pub fn new(semiring: Semiring, entries: Vec<u64>) -> Result<Self> {
        if semiring != Semiring::Sum {
            if let Some((index, &value)) = entries.iter().enumerate().find(|(_, &v)| v > 1) {
                return Err(Error::VectorDomain {
                    semiring,
                    index,
                    value,
                });
            }
        }
        Ok(Vector { semiring, entries })
    }

    pub fn ones(semiring: Semiring, len: usize) -> Self {
        Vector {
            semiring,
            entries: vec![1; len],
        }
    }

    pub fn basis(semiring: Semiring, len: usize, j: usize) -> Self {
        let mut entries = vec![0; len];
        entries[j] = 1;
        Vector { semiring, entries }
    }

    pub fn semiring(&self) -> Semiring {
        self.semiring
    }

    pub fn entries(&self) -> &[u64] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// A reason a circuit fails its invariants. Node numbers are 0-based.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    NoInputs,
    NoOutputs,
    EmptyFanIn { gate: usize },
    ChildOutOfRange { gate: usize, child: usize },
    /// A gate refers to itself or to a later gate.
    ForwardReference { gate: usize, child: usize },
    OutputIsInput { position: usize, node: usize },
    OutputOutOfRange { position: usize, node: usize },
    /// SUM only: two children of `gate` share input `input` in their supports.
    OverlappingChildren { gate: usize, input: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Violation::NoInputs => write!(f, "circuit has no inputs"),
            Violation::NoOutputs => write!(f, "circuit has no outputs"),
            Violation::EmptyFanIn { gate } => write!(f, "gate {gate} has fan-in 0"),
            Violation::ChildOutOfRange { gate, child } => {
                write!(f, "gate {gate} refers to nonexistent node {child}")
            }
            Violation::ForwardReference { gate, child } => {
                write!(f, "gate {gate} refers to node {child}, which is not earlier")
            }
            Violation::OutputIsInput { position, node } => {
                write!(f, "output {position} designates input {node}")
            }
            Violation::OutputOutOfRange { position, node } => {
                write!(f, "output {position} designates nonexistent node {node}")
            }
            Violation::OverlappingChildren { gate, input } => {
                write!(f, "children of gate {gate} share input {input}")
            }
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Circuit {
    semiring: Semiring,
    n_inputs: usize,
    /// `offsets[g]..offsets[g + 1]` indexes `children` for gate `g`.
    offsets: Vec<usize>,
    children: Vec<usize>,
    outputs: Vec<usize>,
}

impl Circuit {
    /// Assembles a circuit without checking anything.
    pub fn from_parts(
        semiring: Semiring,
        n_inputs: usize,
        gates: Vec<Vec<usize>>,
        outputs: Vec<usize>,
    ) -> Self {
        let mut offsets = Vec::with_capacity(gates.len() + 1);
        let mut children = Vec::new();
        offsets.push(0);
        for g in gates {
            children.extend(g);
            offsets.push(children.len());
        }
        Circuit {
            semiring,
            n_inputs,
            offsets,
            children,
            outputs,
        }
    }

    /// Assembles a circuit and rejects it on the first structural violation.
    pub fn new(
        semiring: Semiring,
        n_inputs: usize,
        gates: Vec<Vec<usize>>,
        outputs: Vec<usize>,
    ) -> Result<Self> {
        let c = Self::from_parts(semiring, n_inputs, gates, outputs);
        c.check_structure()?;
        Ok(c)
    }

    #[inline]
    pub fn semiring(&self) -> Semiring {
        self.semiring
    }

    #[inline]
    pub fn n_inputs(&self) -> usize {
        self.n_inputs
    }

    #[inline]
    pub fn n_gates(&self) -> usize {
        self.offsets.len() - 1
    }

    #[inline]
    pub fn n_nodes(&self) -> usize {
        self.n_inputs + self.n_gates()
    }

    #[inline]
    pub fn n_outputs(&self) -> usize {
        self.outputs.len()
    }

    pub fn outputs(&self) -> &[usize] {
        &self.outputs
    }

    #[inline]
    pub fn is_input(&self, node: usize) -> bool {
        node < self.n_inputs
    }

    /// Children of gate number `g` (not node number).
    #[inline]
    pub fn gate_children(&self, g: usize) -> &[usize] {
        &self.children[self.offsets[g]..self.offsets[g + 1]]
    }

    /// Children of `node`; empty for inputs.
    pub fn children(&self, node: usize) -> &[usize] {
        if self.is_input(node) {
            &[]
        } else {
            self.gate_children(node - self.n_inputs)
        }
    }

    pub fn gates(&self) -> impl Iterator<Item = &[usize]> + '_ {
        (0..self.n_gates()).map(move |g| self.gate_children(g))
    }

    /// Total number of child references, i.e. the circuit size.
    #[inline]
    pub fn wire_count(&self) -> usize {
        self.children.len()
    }

    /// The same wiring read in another arithmetic.
    pub fn with_semiring(&self, semiring: Semiring) -> Circuit {
        Circuit {
            semiring,
            ..self.clone()
        }
    }

    /// Length of the longest input-to-output path, in wires.
    pub fn depth(&self) -> usize {
        let mut depth = vec![0usize; self.n_nodes()];
        for g in 0..self.n_gates() {
            let d = self
                .gate_children(g)
                .iter()
                .map(|&c| depth.get(c).copied().unwrap_or(0))
                .max()
                .unwrap_or(0);
            depth[self.n_inputs + g] = d + 1;
        }
        self.outputs
            .iter()
            .filter_map(|&o| depth.get(o).copied())
            .max()
            .unwrap_or(0)
    }

    fn structural_violations(&self, out: &mut Vec<Violation>) {
        if self.n_inputs == 0 {
            out.push(Violation::NoInputs);
        }
        if self.outputs.is_empty() {
            out.push(Violation::NoOutputs);
        }
        let n_nodes = self.n_nodes();
        for g in 0..self.n_gates() {
            let node = self.n_inputs + g;
            let ch = self.gate_children(g);
            if ch.is_empty() {
                out.push(Violation::EmptyFanIn { gate: node });
            }
            for &c in ch {
                if c >= n_nodes {
                    out.push(Violation::ChildOutOfRange { gate: node, child: c });
                } else if c >= node {
                    out.push(Violation::ForwardReference { gate: node, child: c });
                }
            }
        }
        for (position, &node) in self.outputs.iter().enumerate() {
            if node >= n_nodes {
                out.push(Violation::OutputOutOfRange { position, node });
            } else if node < self.n_inputs {
                out.push(Violation::OutputIsInput { position, node });
            }
        }
    }

    pub(crate) fn check_structure(&self) -> Result<()> {
        let mut v = Vec::new();
        self.structural_violations(&mut v);
        match v.into_iter().next() {
            Some(first) => Err(Error::InvalidCircuit(first)),
            None => Ok(()),
        }
    }

    /// Every violated invariant. Under SUM this includes each gate whose
    /// children have overlapping supports, which is equivalent to some
    /// input-to-gate path count exceeding one.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        self.structural_violations(&mut out);
        if !out.is_empty() || self.semiring != Semiring::Sum {
            return out;
        }
        let supports = self.all_supports();
        for g in 0..self.n_gates() {
            let mut acc = BitSet::new(self.n_inputs);
            for &c in self.gate_children(g) {
                let s = &supports[c];
                if let Some(input) = s.iter().find(|&j| acc.contains(j)) {
                    out.push(Violation::OverlappingChildren {
                        gate: self.n_inputs + g,
                        input,
                    });
                    break;
                }
                acc.union_with(s);
            }
        }
        out
    }

    fn all_supports(&self) -> Vec<BitSet> {
        let mut supports: Vec<BitSet> = (0..self.n_inputs)
            .map(|j| BitSet::from_indices(self.n_inputs, [j]))
            .collect();
        for g in 0..self.n_gates() {
            let mut acc = BitSet::new(self.n_inputs);
            for &c in self.gate_children(g) {
                match self.semiring {
                    Semiring::Xor => acc.symmetric_difference_with(&supports[c]),
                    Semiring::Or | Semiring::Sum => acc.union_with(&supports[c]),
                }
            }
            supports.push(acc);
        }
        supports
    }

    /// Support of `node`: union of child supports under OR and SUM,
    /// symmetric difference under XOR.
    pub fn support(&self, node: usize) -> Result<BitSet> {
        if node >= self.n_nodes() {
            return Err(Error::UnknownNode(node));
        }
        self.check_structure()?;
        if self.is_input(node) {
            return Ok(BitSet::from_indices(self.n_inputs, [node]));
        }
        let prefix = Circuit {
            offsets: self.offsets[..=node - self.n_inputs + 1].to_vec(),
            children: self.children[..self.offsets[node - self.n_inputs + 1]].to_vec(),
            ..self.clone()
        };
        Ok(prefix.all_supports().swap_remove(node))
    }

    /// Evaluates the circuit in its own arithmetic in one topological pass.
    pub fn evaluate(&self, x: &Vector) -> Result<Vector> {
        if x.semiring != self.semiring {
            return Err(Error::SemiringMismatch {
                expected: self.semiring,
                found: x.semiring,
            });
        }
        if x.len() != self.n_inputs {
            return Err(Error::DimensionMismatch {
                expected: self.n_inputs,
                found: x.len(),
            });
        }
        self.check_structure()?;
        let mut values = Vec::with_capacity(self.n_nodes());
        values.extend_from_slice(&x.entries);
        for g in 0..self.n_gates() {
            let ch = self.gate_children(g);
            let v = match self.semiring {
                Semiring::Or => ch.iter().any(|&c| values[c] != 0) as u64,
                Semiring::Xor => ch.iter().fold(0, |acc, &c| acc ^ values[c]),
                Semiring::Sum => ch.iter().try_fold(0u64, |acc, &c| {
                    acc.checked_add(values[c]).ok_or(Error::Overflow)
                })?,
            };
            values.push(v);
        }
        Ok(Vector {
            semiring: self.semiring,
            entries: self.outputs.iter().map(|&o| values[o]).collect(),
        })
    }

    /// The boolean matrix computed by the circuit, one row per output.
    ///
    /// Supports are propagated as bitsets over the inputs and dropped once
    /// their last consumer is processed. Under SUM a second bitset tracks
    /// inputs reached by two or more paths; such an input at an output is an
    /// error because the circuit then computes a non-boolean matrix.
    pub fn extract_matrix(&self) -> Result<BooleanMatrix> {
        self.check_structure()?;
        let n = self.n_inputs;
        let mut uses = vec![0usize; self.n_nodes()];
        for &c in &self.children {
            uses[c] += 1;
        }
        let mut is_output = vec![false; self.n_nodes()];
        for &o in &self.outputs {
            is_output[o] = true;
        }
        // (reached by >= 1 path, reached by >= 2 paths)
        let mut sets: Vec<Option<(BitSet, BitSet)>> = vec![None; self.n_nodes()];
        for g in 0..self.n_gates() {
            let node = n + g;
            let mut once = BitSet::new(n);
            let mut twice = BitSet::new(n);
            for &c in self.gate_children(g) {
                if c < n {
                    match self.semiring {
                        Semiring::Or => once.insert(c),
                        Semiring::Xor => once.set(c, !once.contains(c)),
                        Semiring::Sum => {
                            if once.contains(c) {
                                twice.insert(c);
                            }
                            once.insert(c);
                        }
                    }
                } else {
                    let (c1, c2) = sets[c].as_ref().expect("child support already released");
                    match self.semiring {
                        Semiring::Or => once.union_with(c1),
                        Semiring::Xor => once.symmetric_difference_with(c1),
                        Semiring::Sum => {
                            twice.union_with(c2);
                            let mut both = once.clone();
                            both.intersect_with(c1);
                            twice.union_with(&both);
                            once.union_with(c1);
                        }
                    }
                    uses[c] -= 1;
                    if uses[c] == 0 && !is_output[c] {
                        sets[c] = None;
                    }
                }
            }
            if uses[node] > 0 || is_output[node] {
                sets[node] = Some((once, twice));
            }
        }
        let mut rows = Vec::with_capacity(self.outputs.len());
        for (row, &o) in self.outputs.iter().enumerate() {
            let (once, twice) = sets[o].as_ref().expect("output support retained");
            if let Some(col) = twice.first() {
                return Err(Error::NotBooleanSum { row, col });
            }
            rows.push(once.clone());
        }
        BooleanMatrix::from_rows(n, rows)
    }

    /// Nodes from which some output is reachable (outputs included).
    fn live_nodes(&self) -> Vec<bool> {
        let mut live = vec![false; self.n_nodes()];
        for &o in &self.outputs {
            live[o] = true;
        }
        for node in (self.n_inputs..self.n_nodes()).rev() {
            if live[node] {
                for &c in self.children(node) {
                    live[c] = true;
                }
            }
        }
        live
    }

    /// Drops gates that reach no output and renumbers the rest.
    pub fn prune(&self) -> Result<Circuit> {
        self.check_structure()?;
        let live = self.live_nodes();
        let mut remap = vec![usize::MAX; self.n_nodes()];
        for (j, slot) in remap.iter_mut().enumerate().take(self.n_inputs) {
            *slot = j;
        }
        let mut gates = Vec::new();
        for g in 0..self.n_gates() {
            let node = self.n_inputs + g;
            if live[node] {
                remap[node] = self.n_inputs + gates.len();
                gates.push(self.gate_children(g).iter().map(|&c| remap[c]).collect());
            }
        }
        let outputs = self.outputs.iter().map(|&o| remap[o]).collect();
        Ok(Circuit::from_parts(self.semiring, self.n_inputs, gates, outputs))
    }

    /// Transposes an XOR circuit by reversing every wire.
    ///
    /// Former outputs become inputs and former inputs become output gates
    /// whose children are the former parents. A former output gate with no
    /// parents and a single designation is identified with its new input, so
    /// when every output gate is a distinct sink the wire count is preserved
    /// exactly. Otherwise each extra designation costs one wire.
    pub fn reverse_xor(&self) -> Result<Circuit> {
        if self.semiring != Semiring::Xor {
            return Err(Error::SemiringMismatch {
                expected: Semiring::Xor,
                found: self.semiring,
            });
        }
        self.check_structure()?;
        let n = self.n_inputs;
        let mut parents: Vec<Vec<usize>> = vec![Vec::new(); self.n_nodes()];
        for g in 0..self.n_gates() {
            for &c in self.gate_children(g) {
                parents[c].push(n + g);
            }
        }
        if let Some(j) = (0..n).find(|&j| parents[j].is_empty()) {
            return Err(Error::UnusedInput(j));
        }
        let live = self.live_nodes();
        if let Some(node) = (n..self.n_nodes()).find(|&v| !live[v]) {
            return Err(Error::DeadGate(node));
        }
        let mut designations: Vec<Vec<usize>> = vec![Vec::new(); self.n_nodes()];
        for (position, &o) in self.outputs.iter().enumerate() {
            designations[o].push(position);
        }

        let m = self.outputs.len();
        // image[v] = node of the reversed circuit carrying v's co-support
        let mut image = vec![usize::MAX; self.n_nodes()];
        let mut gates: Vec<Vec<usize>> = Vec::new();
        for node in (n..self.n_nodes()).rev() {
            let des = &designations[node];
            let par = &parents[node];
            if par.is_empty() && des.len() == 1 {
                image[node] = des[0];
                continue;
            }
            let mut ch: Vec<usize> = des.clone();
            ch.extend(par.iter().map(|&p| image[p]));
            image[node] = m + gates.len();
            gates.push(ch);
        }
        let mut outputs = Vec::with_capacity(n);
        for par in parents.iter().take(n) {
            outputs.push(m + gates.len());
            gates.push(par.iter().map(|&p| image[p]).collect());
        }
        Circuit::new(Semiring::Xor, m, gates, outputs)
    }

    /// Feeds the outputs of `inner` into the inputs of `outer`.
    pub fn compose(inner: &Circuit, outer: &Circuit) -> Result<Circuit> {
        if inner.semiring != outer.semiring {
            return Err(Error::SemiringMismatch {
                expected: inner.semiring,
                found: outer.semiring,
            });
        }
        if inner.n_outputs() != outer.n_inputs {
            return Err(Error::DimensionMismatch {
                expected: inner.n_outputs(),
                found: outer.n_inputs,
            });
        }
        inner.check_structure()?;
        outer.check_structure()?;
        let shift = inner.n_nodes();
        let map = |v: usize| {
            if v < outer.n_inputs {
                inner.outputs[v]
            } else {
                v - outer.n_inputs + shift
            }
        };
        let mut gates: Vec<Vec<usize>> = inner.gates().map(|g| g.to_vec()).collect();
        gates.extend(outer.gates().map(|g| g.iter().map(|&c| map(c)).collect()));
        let outputs = outer.outputs.iter().map(|&o| map(o)).collect();
        Circuit::new(inner.semiring, inner.n_inputs, gates, outputs)
    }
}

impl fmt::Debug for Circuit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "Circuit {} inputs={} gates={} wires={} {{",
            self.semiring,
            self.n_inputs,
            self.n_gates(),
            self.wire_count()
        )?;
        for g in 0..self.n_gates() {
            writeln!(f, "  {}: {:?}", self.n_inputs + g, self.gate_children(g))?;
        }
        writeln!(f, "  outputs: {:?}", self.outputs)?;
        f.write_str("}")
    }
}

/// Incremental construction of a circuit in topological order.
#[derive(Debug, Clone)]
pub struct CircuitBuilder {
    semiring: Semiring,
    n_inputs: usize,
    offsets: Vec<usize>,
    children: Vec<usize>,
    outputs: Vec<usize>,
}

impl CircuitBuilder {
    pub fn new(semiring: Semiring, n_inputs: usize) -> Self {
        CircuitBuilder {
            semiring,
            n_inputs,
            offsets: vec![0],
            children: Vec::new(),
            outputs: Vec::new(),
        }
    }

    pub fn input(&self, j: usize) -> usize {
        debug_assert!(j < self.n_inputs);
        j
    }

    /// Appends a gate and returns its node number.
    pub fn gate(&mut self, children: impl IntoIterator<Item = usize>) -> usize {
        self.children.extend(children);
        self.offsets.push(self.children.len());
        self.n_inputs + self.offsets.len() - 2
    }

    pub fn output(&mut self, node: usize) {
        self.outputs.push(node);
    }

    pub fn wire_count(&self) -> usize {
        self.children.len()
    }

    pub fn finish(self) -> Result<Circuit> {
        let c = Circuit {
            semiring: self.semiring,
            n_inputs: self.n_inputs,
            offsets: self.offsets,
            children: self.children,
            outputs: self.outputs,
        };
        c.check_structure()?;
        Ok(c)
    }
}

/// Depth-1 circuit with one gate per row of `a`, wired to the row's 1-entries.
pub fn trivial_circuit(a: &BooleanMatrix, semiring: Semiring) -> Result<Circuit> {
    a.require_nonzero_rows()?;
    let mut b = CircuitBuilder::new(semiring, a.n_cols());
    for row in a.rows() {
        let g = b.gate(row.iter());
        b.output(g);
    }
    b.finish()
}

/// How outputs are chosen by [`random_circuit`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OutputChoice {
    /// Every gate without parents, each designated once.
    Sinks,
    /// This many gates drawn uniformly with replacement.
    Random(usize),
}

#[derive(Debug, Clone, Copy)]
pub struct RandomCircuitConfig {
    pub semiring: Semiring,
    pub n_inputs: usize,
    pub n_gates: usize,
    pub max_fanin: usize,
    pub outputs: OutputChoice,
}

/// Random topologically ordered circuit in which every input feeds a gate.
///
/// Under SUM the children of each gate are chosen with pairwise disjoint
/// supports, so the result always passes [`Circuit::validate`].
pub fn random_circuit<R: Rng + ?Sized>(rng: &mut R, cfg: &RandomCircuitConfig) -> Circuit {
    assert!(cfg.n_inputs > 0 && cfg.max_fanin > 0);
    let n = cfg.n_inputs;
    let n_gates = cfg.n_gates.max(n.div_ceil(cfg.max_fanin)).max(1);
    let mut supports: Vec<BitSet> = (0..n).map(|j| BitSet::from_indices(n, [j])).collect();
    let mut has_parent = vec![false; n + n_gates];
    let mut unused: Vec<usize> = (0..n).collect();
    unused.shuffle(rng);
    let mut gates = Vec::with_capacity(n_gates);
    for g in 0..n_gates {
        let node = n + g;
        let remaining_gates = n_gates - g;
        let fanin = rng.random_range(1..=cfg.max_fanin);
        let mut ch: Vec<usize> = Vec::with_capacity(fanin);
        let mut acc = BitSet::new(n);
        // Spread unused inputs so that all are consumed by the last gate.
        let forced = unused.len().div_ceil(remaining_gates).min(cfg.max_fanin);
        for _ in 0..forced {
            let j = unused.pop().unwrap();
            ch.push(j);
            acc.insert(j);
        }
        let mut candidates: Vec<usize> = (0..node).collect();
        candidates.shuffle(rng);
        for c in candidates {
            if ch.len() >= fanin.max(forced) {
                break;
            }
            if ch.contains(&c) {
                continue;
            }
            if cfg.semiring == Semiring::Sum && supports[c].intersects(&acc) {
                continue;
            }
            ch.push(c);
            match cfg.semiring {
                Semiring::Xor => acc.symmetric_difference_with(&supports[c]),
                _ => acc.union_with(&supports[c]),
            }
        }
        ch.shuffle(rng);
        for &c in &ch {
            has_parent[c] = true;
        }
        supports.push(acc);
        gates.push(ch);
    }
    let outputs = match cfg.outputs {
        OutputChoice::Sinks => (n..n + n_gates).filter(|&v| !has_parent[v]).collect(),
        OutputChoice::Random(m) => (0..m.max(1)).map(|_| rng.random_range(n..n + n_gates)).collect(),
    };
    Circuit::from_parts(cfg.semiring, n, gates, outputs)
}
