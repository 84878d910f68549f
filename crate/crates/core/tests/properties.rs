use lincirc::circuit::{random_circuit, OutputChoice, RandomCircuitConfig};
use lincirc::cover::rank_cover;
use lincirc::lupanov::wire_bound;
use lincirc::rewrite::Strategy as Rewrite;
use lincirc::satbridge::{count_covering_pairs, cover_complement_circuit, CoverInstance, Tally, Via};
use lincirc::{
    complement_identity_cover, equivalent, is_st_free, kronecker, lupanov_circuit, rewrite, tensor_or_circuit,
    trivial_circuit, BitSet, BooleanMatrix, Circuit, LupanovParams, Semiring, TensorSpec, Vector,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn ring() -> impl Strategy<Value = Semiring> {
    prop_oneof![Just(Semiring::Or), Just(Semiring::Sum), Just(Semiring::Xor)]
}

fn circuit(semiring: Semiring, seed: u64, outputs: OutputChoice) -> Circuit {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cfg = RandomCircuitConfig {
        semiring,
        n_inputs: rng.random_range(1..=16),
        n_gates: rng.random_range(1..=40),
        max_fanin: rng.random_range(1..=5),
        outputs,
    };
    random_circuit(&mut rng, &cfg)
}

fn matrix(seed: u64, max_rows: usize, max_cols: usize) -> BooleanMatrix {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (r, c) = (rng.random_range(1..=max_rows), rng.random_range(1..=max_cols));
    BooleanMatrix::random_nonzero_rows(&mut rng, r, c).unwrap()
}

fn cover_instance(seed: u64, max_n: usize, max_m: usize) -> CoverInstance {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = rng.random_range(1..=max_n);
    let m = rng.random_range(0..=max_m);
    // Dense sets make covering pairs common enough to matter.
    let density = rng.random_range(0.3..0.95);
    let mut side = || -> Vec<BitSet> {
        (0..n)
            .map(|_| BitSet::from_indices(m, (0..m).filter(|_| rng.random_bool(density))))
            .collect()
    };
    let left = side();
    let right = side();
    CoverInstance::new(m, left, right).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn evaluation_matches_extraction(s in ring(), seed in any::<u64>()) {
        let c = circuit(s, seed, OutputChoice::Random(6));
        prop_assert!(c.validate().is_empty());
        let a = c.extract_matrix().unwrap();
        for j in 0..c.n_inputs() {
            let y = c.evaluate(&Vector::basis(s, c.n_inputs(), j)).unwrap();
            for (i, &v) in y.entries().iter().enumerate() {
                prop_assert_eq!(v, a.get(i, j) as u64);
            }
        }
    }

    #[test]
    fn evaluation_is_linear_over_the_semiring(s in ring(), seed in any::<u64>(), xs in proptest::collection::vec(0u64..2, 16)) {
        let c = circuit(s, seed, OutputChoice::Random(4));
        let a = c.extract_matrix().unwrap();
        let x = Vector::new(s, xs[..c.n_inputs()].to_vec()).unwrap();
        let y = c.evaluate(&x).unwrap();
        for i in 0..a.n_rows() {
            let expected = a.row(i).iter().map(|j| xs[j]).fold(0, |acc, v| match s {
                Semiring::Or => acc | v,
                Semiring::Sum => acc + v,
                Semiring::Xor => acc ^ v,
            });
            prop_assert_eq!(y.entries()[i], expected);
        }
    }

    #[test]
    fn reversal_transposes_and_keeps_wires(seed in any::<u64>()) {
        let c = circuit(Semiring::Xor, seed, OutputChoice::Sinks);
        let r = c.reverse_xor().unwrap();
        prop_assert!(r.validate().is_empty());
        prop_assert_eq!(r.wire_count(), c.wire_count());
        prop_assert_eq!(r.extract_matrix().unwrap(), c.extract_matrix().unwrap().transpose());
    }

    #[test]
    fn reversal_with_shared_outputs_still_transposes(seed in any::<u64>()) {
        let c = circuit(Semiring::Xor, seed, OutputChoice::Random(5)).prune().unwrap();
        match c.reverse_xor() {
            Ok(r) => prop_assert_eq!(r.extract_matrix().unwrap(), c.extract_matrix().unwrap().transpose()),
            Err(e) => prop_assert!(matches!(e, lincirc::Error::UnusedInput(_))),
        }
    }

    #[test]
    fn pruning_keeps_the_matrix(s in ring(), seed in any::<u64>()) {
        let c = circuit(s, seed, OutputChoice::Random(3));
        let p = c.prune().unwrap();
        prop_assert!(p.wire_count() <= c.wire_count());
        prop_assert_eq!(p.extract_matrix().unwrap(), c.extract_matrix().unwrap());
    }

    #[test]
    fn rewrites_are_equivalent(seed in any::<u64>(), strategy in prop_oneof![Just(Rewrite::Depth1), Just(Rewrite::Lupanov)]) {
        let c = circuit(Semiring::Or, seed, OutputChoice::Random(8));
        let a = c.extract_matrix().unwrap();
        for target in [Semiring::Sum, Semiring::Xor] {
            let (out, report) = rewrite(&c, target, strategy).unwrap();
            prop_assert!(out.validate().is_empty());
            prop_assert!(equivalent(&c, &out).unwrap());
            if strategy == Rewrite::Depth1 {
                prop_assert_eq!(report.output_wires, a.weight());
                prop_assert_eq!(report.output_depth, 1);
            }
        }
    }

    #[test]
    fn lupanov_extracts_input_within_bound(s in ring(), seed in any::<u64>(), b in 2usize..=6) {
        let a = matrix(seed, 40, 40);
        prop_assume!(b <= a.n_cols());
        let c = lupanov_circuit(&a, s, LupanovParams::new(b).unwrap()).unwrap();
        prop_assert!(c.validate().is_empty());
        prop_assert_eq!(c.extract_matrix().unwrap(), a.clone());
        prop_assert!(c.wire_count() <= wire_bound(a.n_rows(), a.n_cols(), b));
    }

    #[test]
    fn trivial_circuit_has_matrix_weight(s in ring(), seed in any::<u64>()) {
        let a = matrix(seed, 20, 20);
        let c = trivial_circuit(&a, s).unwrap();
        prop_assert_eq!(c.wire_count(), a.weight());
        prop_assert_eq!(c.extract_matrix().unwrap(), a);
    }

    #[test]
    fn kronecker_entries(seed in any::<u64>()) {
        let b = matrix(seed, 5, 5);
        let a = matrix(seed ^ 0x5555, 5, 5);
        let k = kronecker(&b, &a).unwrap();
        for i in 0..b.n_rows() {
            for j in 0..b.n_cols() {
                for x in 0..a.n_rows() {
                    for y in 0..a.n_cols() {
                        prop_assert_eq!(k.get(i * a.n_rows() + x, j * a.n_cols() + y), b.get(i, j) && a.get(x, y));
                    }
                }
            }
        }
        prop_assert_eq!(k.weight(), a.weight() * b.weight());
    }

    #[test]
    fn tensor_circuit_extracts_product(seed in any::<u64>(), n in 2usize..=6) {
        let ci = BooleanMatrix::complement_identity(n).unwrap();
        let a = matrix(seed, 5, 5);
        let cover = complement_identity_cover(n).unwrap();
        let r = cover.len();
        let c = tensor_or_circuit(&TensorSpec::new(ci.clone(), a.clone(), cover).unwrap()).unwrap();
        prop_assert_eq!(c.extract_matrix().unwrap(), kronecker(&ci, &a).unwrap());
        let side = n.max(a.n_rows()).max(a.n_cols());
        prop_assert!(c.wire_count() <= 3 * r * side * side);
    }

    #[test]
    fn rank_covers_are_valid(seed in any::<u64>(), disjoint in any::<bool>()) {
        let a = matrix(seed, 5, 5);
        let out = rank_cover(&a, disjoint, 1 << 18);
        let cover = out.cover();
        prop_assert!(cover.check(&a).is_ok());
        if disjoint {
            prop_assert!(cover.pairwise_disjoint());
        }
        if let (Some(or), Some(sum)) = (rank_cover(&a, false, 1 << 18).exact(), rank_cover(&a, true, 1 << 18).exact()) {
            prop_assert!(or <= sum);
        }
    }

    #[test]
    fn freeness_witnesses_hold(seed in any::<u64>(), s in 1usize..=3, t in 1usize..=3) {
        let a = matrix(seed, 6, 6);
        prop_assume!(s < a.n_rows() && t < a.n_cols());
        let cert = is_st_free(&a, s, t).unwrap();
        if cert.free {
            prop_assert!(cert.witness.is_none());
        } else {
            prop_assert!(cert.witness_holds(&a));
        }
    }

    #[test]
    fn complement_circuit_size_and_content(seed in any::<u64>()) {
        let inst = cover_instance(seed, 40, 20);
        let built = cover_complement_circuit(&inst).unwrap();
        let complement = inst.covering_matrix().unwrap().complement();
        for &i in &built.pruned_rows {
            prop_assert!(complement.row(i).is_empty());
        }
        if let Some(c) = &built.circuit {
            prop_assert!(c.wire_count() <= 2 * inst.size() * inst.universe());
            let a = c.extract_matrix().unwrap();
            for (out, &i) in built.output_rows.iter().enumerate() {
                prop_assert_eq!(a.row(out), complement.row(i));
            }
        }
    }

    #[test]
    fn covering_counts_agree(seed in any::<u64>()) {
        let inst = cover_instance(seed, 64, 24);
        let direct = count_covering_pairs(&inst, Via::Direct).unwrap();
        prop_assert_eq!(count_covering_pairs(&inst, Via::PipelineSum).unwrap(), direct);
        prop_assert_eq!(count_covering_pairs(&inst, Via::PipelineXor).unwrap(), Tally::Parity(direct.parity()));
    }
}

#[test]
fn complement_identity_cover_sizes() {
    for n in 2..=64usize {
        let cover = complement_identity_cover(n).unwrap();
        let expected = 2 * (usize::BITS - (n - 1).leading_zeros()) as usize;
        assert_eq!(cover.len(), expected, "n = {n}");
        assert_eq!(cover.to_matrix().unwrap(), BooleanMatrix::complement_identity(n).unwrap());
    }
}

#[test]
fn disjoint_rank_of_complement_identity() {
    for n in 2..=6 {
        let ci = BooleanMatrix::complement_identity(n).unwrap();
        assert_eq!(rank_cover(&ci, true, 1 << 24).exact(), Some(n), "n = {n}");
    }
}
