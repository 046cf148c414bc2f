//! Property suites: algebraic invariants checked on randomized inputs,
//! with independent oracles where one exists.

use proptest::prelude::*;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use stabkit::dense::Complex64;
use stabkit::gf2::{BitMatrix, BitVec, SpanBasis};
use stabkit::gf4::{is_gf4_linear, is_xi_closed, xi_scale};
use stabkit::graphstate::{graph_state, to_graph_form, Graph};
use stabkit::lclifford::{lc_equivalent_with_cap, random_lc};
use stabkit::pauli::{PauliOperator, SupportMask};
use stabkit::random::{random_fully_entangled, random_stabilizer};
use stabkit::stabilizer::StabilizerGroup;

fn arb_bitmatrix(max_dim: usize) -> impl Strategy<Value = BitMatrix> {
    (1..=max_dim, 1..=max_dim).prop_flat_map(|(r, c)| {
        proptest::collection::vec(proptest::collection::vec(any::<bool>(), c), r).prop_map(|rows| {
            BitMatrix::from_rows(rows.iter().map(|b| BitVec::from_bools(b)).collect())
        })
    })
}

fn arb_pauli(n: usize) -> impl Strategy<Value = PauliOperator> {
    (
        proptest::collection::vec(any::<bool>(), n),
        proptest::collection::vec(any::<bool>(), n),
        0u8..4,
    )
        .prop_map(|(z, x, phase)| {
            PauliOperator::from_parts(BitVec::from_bools(&z), BitVec::from_bools(&x), phase)
                .unwrap()
        })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn rank_is_transpose_invariant(m in arb_bitmatrix(64)) {
        prop_assert_eq!(m.rank(), m.transpose().rank());
    }

    #[test]
    fn kernel_basis_annihilates_and_is_independent(m in arb_bitmatrix(24)) {
        let basis = m.kernel_basis();
        for v in &basis {
            prop_assert!(m.mul_vec(v).is_zero());
        }
        let mut span = SpanBasis::new();
        for v in &basis {
            prop_assert!(span.insert(v), "kernel basis vectors must be independent");
        }
        prop_assert_eq!(basis.len(), m.cols() - m.rank());
    }

    #[test]
    fn solve_finds_solutions_exactly_when_consistent(
        m in arb_bitmatrix(16),
        bits in proptest::collection::vec(any::<bool>(), 16),
    ) {
        let b = BitVec::from_bools(&bits[..m.rows()]);
        match m.solve(&b) {
            Some(x) => prop_assert_eq!(m.mul_vec(&x), b),
            None => {
                // Inconsistency certificate: appending b raises the rank.
                let mut rows = Vec::new();
                for r in 0..m.rows() {
                    rows.push(m.row(r).concat(&b.slice(r..r + 1)));
                }
                let augmented = BitMatrix::from_rows(rows);
                prop_assert!(augmented.rank() > m.rank());
            }
        }
    }

    #[test]
    fn pauli_multiplication_is_associative(
        (a, b, c) in (1usize..=10).prop_flat_map(|n| (arb_pauli(n), arb_pauli(n), arb_pauli(n))),
    ) {
        let left = a.multiply(&b).unwrap().multiply(&c).unwrap();
        let right = a.multiply(&b.multiply(&c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn bit_map_is_a_homomorphism(
        (a, b) in (1usize..=10).prop_flat_map(|n| (arb_pauli(n), arb_pauli(n))),
    ) {
        let prod = a.multiply(&b).unwrap();
        prop_assert_eq!(prod.z_bits().clone(), a.z_bits().xor(b.z_bits()));
        prop_assert_eq!(prod.x_bits().clone(), a.x_bits().xor(b.x_bits()));
    }

    #[test]
    fn commutation_iff_products_agree(
        (a, b) in (1usize..=10).prop_flat_map(|n| (arb_pauli(n), arb_pauli(n))),
    ) {
        let ab = a.multiply(&b).unwrap();
        let ba = b.multiply(&a).unwrap();
        prop_assert_eq!(a.commutes(&b).unwrap(), ab == ba);
        prop_assert_eq!(a.commutes(&b).unwrap(), b.commutes(&a).unwrap());
    }

    #[test]
    fn support_of_product_within_union(
        (a, b) in (1usize..=12).prop_flat_map(|n| (arb_pauli(n), arb_pauli(n))),
    ) {
        let prod = a.multiply(&b).unwrap();
        let union = a.support().union(&b.support());
        prop_assert!(prod.support().is_subset(&union));
    }

    #[test]
    fn xi_scale_cubed_is_identity(bits in proptest::collection::vec(any::<bool>(), 2..=40)) {
        let mut even = bits;
        if even.len() % 2 == 1 {
            even.pop();
        }
        let v = BitVec::from_bools(&even);
        let thrice = xi_scale(&xi_scale(&xi_scale(&v).unwrap()).unwrap()).unwrap();
        prop_assert_eq!(thrice, v);
    }
}

#[test]
fn dense_product_oracle_on_random_pairs() {
    let mut rng = StdRng::seed_from_u64(101);
    for _ in 0..60 {
        let n = rng.gen_range(1..=4);
        let a = random_pauli(n, &mut rng);
        let b = random_pauli(n, &mut rng);
        let dense = a.to_dense().unwrap().mul(&b.to_dense().unwrap());
        let algebraic = a.multiply(&b).unwrap().to_dense().unwrap();
        assert!(dense.approx_eq(&algebraic, 1e-12));
    }
}

fn random_pauli(n: usize, rng: &mut impl Rng) -> PauliOperator {
    let z: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
    let x: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
    PauliOperator::from_parts(
        BitVec::from_bools(&z),
        BitVec::from_bools(&x),
        rng.gen_range(0..4),
    )
    .unwrap()
}

#[test]
fn projector_is_fixed_by_generators_on_random_groups() {
    let mut rng = StdRng::seed_from_u64(102);
    for _ in 0..25 {
        let n = rng.gen_range(1..=4);
        let g = random_stabilizer(n, &mut rng);
        let rho = g.dense_projector().unwrap();
        assert!(rho.is_hermitian(1e-10));
        assert!(rho.mul(&rho).approx_eq(&rho, 1e-10));
        assert!((rho.trace() - Complex64::new(1.0, 0.0)).norm() < 1e-10);
        for gen in g.generators() {
            let m = gen.to_dense().unwrap();
            assert!(m.mul(&rho).approx_eq(&rho, 1e-10));
        }
    }
}

#[test]
fn support_counts_partition_the_group() {
    let mut rng = StdRng::seed_from_u64(103);
    for _ in 0..40 {
        let n = rng.gen_range(1..=8);
        let g = random_stabilizer(n, &mut rng);
        let tally = g.support_tally().unwrap();
        assert_eq!(tally.total_count(), 1u64 << n);
        // Route agreement: restricted-subgroup counts match enumeration.
        for (bits, entry) in tally.iter() {
            let omega = SupportMask::from_bits(bits.clone());
            assert_eq!(g.a_omega(&omega).a_omega, entry.count);
        }
    }
}

#[test]
fn reduced_states_match_partial_traces() {
    let mut rng = StdRng::seed_from_u64(104);
    for _ in 0..15 {
        let n = rng.gen_range(1..=5);
        let g = random_stabilizer(n, &mut rng);
        let rho = g.dense_projector().unwrap();
        for raw in 0..1u32 << n {
            let keep: Vec<usize> = (0..n).filter(|&q| raw >> q & 1 == 1).collect();
            let omega = SupportMask::from_indices(n, &keep);
            let reduced = g.reduced_density_dense(&omega).unwrap();
            let traced = rho.partial_trace(n, &keep);
            assert!(reduced.approx_eq(&traced, 1e-10));
        }
    }
}

#[test]
fn graph_connectivity_agrees_with_bipartition_scan() {
    let mut rng = StdRng::seed_from_u64(105);
    for trial in 0..200 {
        let n = rng.gen_range(1..=8);
        let g = random_stabilizer(n, &mut rng);
        let fast = g.entanglement();
        let oracle = g.entanglement_by_scan();
        assert_eq!(
            fast.fully_entangled, oracle.fully_entangled,
            "trial {trial}"
        );
        if let Some(witness) = fast.witness {
            let inside = g.support_subgroup_dim(&witness);
            let outside = g.support_subgroup_dim(&witness.complement());
            assert_eq!(inside + outside, n, "witness must certify the split");
        }
    }
}

#[test]
fn graph_form_round_trip_on_random_adjacencies() {
    let mut rng = StdRng::seed_from_u64(106);
    for _ in 0..300 {
        let n = rng.gen_range(1..=8);
        let state = random_stabilizer(n, &mut rng);
        let (graph, op) = to_graph_form(&state).unwrap();
        let target = graph_state(&graph);
        assert!(op.apply(&state).unwrap().same_signed_group(&target));
        // Converting the graph state again is a fixed point.
        let (again, _) = to_graph_form(&target).unwrap();
        assert_eq!(again.adjacency(), graph.adjacency());
    }
}

#[test]
fn asymmetric_adjacency_fails_group_validation() {
    let mut rng = StdRng::seed_from_u64(107);
    for _ in 0..40 {
        let n = rng.gen_range(2..=6);
        let mut theta = BitMatrix::zeros(n, n);
        for i in 0..n {
            for j in 0..n {
                if i != j && rng.gen() {
                    theta.set(i, j, true);
                }
            }
        }
        let symmetric = (0..n).all(|i| (0..n).all(|j| theta.get(i, j) == theta.get(j, i)));
        // Assemble [theta; I] columns directly as Pauli generators.
        let gens: Vec<PauliOperator> = (0..n)
            .map(|j| {
                PauliOperator::from_parts(theta.column(j), BitVec::from_indices(n, &[j]), 0)
                    .unwrap()
            })
            .collect();
        let built = StabilizerGroup::build(gens);
        assert_eq!(built.is_ok(), symmetric, "commutation iff symmetry");
    }
}

#[test]
fn gf4_linearity_routes_agree_and_span_closure_holds() {
    let mut rng = StdRng::seed_from_u64(108);
    let mut linear_instances: Vec<StabilizerGroup> = vec![
        StabilizerGroup::from_strings(&["XX", "ZZ"]).unwrap(),
        StabilizerGroup::from_strings(&["XXII", "ZZII", "IIXX", "IIZZ"]).unwrap(),
    ];
    for _ in 0..300 {
        let n = rng.gen_range(2..=6);
        let g = random_stabilizer(n, &mut rng);
        assert_eq!(is_gf4_linear(&g), is_xi_closed(&g));
        if is_gf4_linear(&g) {
            linear_instances.push(g);
        }
    }
    // The binary space of a linear group is closed under xi on arbitrary
    // elements, not only on the basis columns.
    for g in &linear_instances {
        for element in g.enumerate_elements().unwrap() {
            let scaled = xi_scale(&element.packed_bits()).unwrap();
            assert!(g.contains_bits(&scaled));
        }
    }
}

#[test]
fn lc_search_certificate_satisfies_the_binary_criterion() {
    // When a certificate Q exists, S2^T P Q S1 = 0; absence at this scale
    // is exhaustive.
    let mut rng = StdRng::seed_from_u64(109);
    for trial in 0..25 {
        let n = rng.gen_range(2..=4);
        let g1 = random_stabilizer(n, &mut rng);
        let g2 = if trial % 2 == 0 {
            random_lc(n, rng.gen()).apply(&g1).unwrap()
        } else {
            random_stabilizer(n, &mut rng)
        };
        if let Some(op) = lc_equivalent_with_cap(&g1, &g2, 8).unwrap() {
            let q = op.assembled_matrix();
            let mut p_form = BitMatrix::zeros(2 * n, 2 * n);
            for i in 0..n {
                p_form.set(i, n + i, true);
                p_form.set(n + i, i, true);
            }
            let product = g2
                .gen_matrix()
                .transpose()
                .mul(&p_form)
                .mul(&q)
                .mul(g1.gen_matrix());
            assert!(product.is_zero(), "binary LC criterion");
        }
    }
}

#[test]
fn a_table_is_invariant_under_local_clifford_maps() {
    let mut rng = StdRng::seed_from_u64(110);
    for _ in 0..50 {
        let n = rng.gen_range(1..=7);
        let g = random_stabilizer(n, &mut rng);
        let image = random_lc(n, rng.gen()).apply(&g).unwrap();
        let before = g.support_tally().unwrap();
        let after = image.support_tally().unwrap();
        assert!(before.same_counts(&after));
    }
}

#[test]
fn minimal_support_counts_stay_lemma1_legal_under_scrambling() {
    let mut rng = StdRng::seed_from_u64(111);
    for _ in 0..30 {
        let n = rng.gen_range(2..=7);
        let g = random_fully_entangled(n, &mut rng);
        let report = stabkit::lemma1_verify(&g).unwrap();
        assert!(report.ok(), "{:?}", report.violations);
    }
}

#[test]
fn ghz_classification_is_lc_invariant() {
    let mut rng = StdRng::seed_from_u64(112);
    for n in 2..=6usize {
        let ghz = stabkit::ghz_stabilizer(n).unwrap();
        for _ in 0..10 {
            let scrambled = random_lc(n, rng.gen()).apply(&ghz).unwrap();
            assert!(stabkit::is_lc_ghz(&scrambled));
            let cert = stabkit::ghz_certificate(&scrambled).unwrap();
            assert!(cert.op.apply(&scrambled).unwrap().same_signed_group(&ghz));
        }
    }
}

#[test]
fn graph_cycle_c5_minimal_supports_match_brute_force() {
    // Independent oracle: enumerate all 32 elements densely and collect
    // inclusion-minimal supports by hand.
    let c5 = graph_state(&Graph::cycle(5));
    let mut supports: Vec<Vec<usize>> = c5
        .enumerate_elements()
        .unwrap()
        .skip(1)
        .map(|e| e.support().indices())
        .collect();
    supports.sort();
    supports.dedup();
    let minimal: Vec<&Vec<usize>> = supports
        .iter()
        .filter(|s| {
            !supports
                .iter()
                .any(|other| other.len() < s.len() && other.iter().all(|q| s.contains(q)))
        })
        .collect();
    let table = stabkit::minimal_supports(&c5).unwrap();
    let reported: Vec<Vec<usize>> = table.entries.iter().map(|e| e.omega.indices()).collect();
    assert_eq!(minimal.len(), reported.len());
    for m in minimal {
        assert!(reported.contains(m));
    }
    assert_eq!(table.m_basis.len(), 5);
}
