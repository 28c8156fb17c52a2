//! Randomized and exhaustive property checks across modules.

mod common;

use lightsout::classify::{self, ActivationClass};
use lightsout::graph::{random_graph, random_tree, random_tree_with};
use lightsout::oracle;
use lightsout::structure::{self, Verdict};
use lightsout::{solver, BitVec, Graph};
use proptest::prelude::*;
use rand::Rng;

use common::{random_always_solvable_tree, random_graph_between, rng};

fn sorted(mut v: Vec<BitVec>) -> Vec<BitVec> {
    v.sort_by_key(|p| p.to_mask());
    v
}

#[test]
fn solve_config_matches_enumeration() {
    let mut r = rng(100);
    for _ in 0..200 {
        let g = random_graph_between(&mut r, 1, 12);
        let c = BitVec::from_mask(g.n(), r.gen());
        let brute = oracle::enumerate_solutions(&g, &c).unwrap();
        match solver::solve_config(&g, &c).unwrap() {
            Some(set) => {
                assert_eq!(sorted(set.enumerate().unwrap()), brute, "{g:?} c={c}");
                assert_eq!(brute.len(), 1 << solver::nullity(&g));
            }
            None => assert!(brute.is_empty(), "{g:?} c={c}"),
        }
    }
}

#[test]
fn solvability_tests_agree_on_full_configuration_sweeps() {
    // Every graph on ≤ 5 vertices, then random graphs up to 8 vertices.
    let mut r = rng(101);
    let graphs = (0..=5)
        .flat_map(oracle::all_graphs)
        .chain((0..100).map(|_| random_graph_between(&mut r, 1, 8)));
    for g in graphs {
        for mask in 0..1u64 << g.n() {
            let c = BitVec::from_mask(g.n(), mask);
            assert_eq!(
                solver::is_solvable(&g, &c).unwrap(),
                solver::solve_config(&g, &c).unwrap().is_some(),
                "{g:?} c={c}"
            );
        }
    }
}

#[test]
fn edge_deletion_transport_matches_direct_evaluation() {
    let mut r = rng(102);
    for _ in 0..40 {
        let g = random_graph_between(&mut r, 2, 12);
        for e in g.edges() {
            let h = g.delete_edge(e.u, e.w).unwrap();
            for _ in 0..100 {
                let p = BitVec::from_mask(g.n(), r.gen());
                assert_eq!(
                    solver::transported_config(&g, e.u, e.w, &p).unwrap(),
                    solver::apply_pattern(&h, &BitVec::zeros(g.n()), &p).unwrap()
                );
            }
        }
    }
}

#[test]
fn all_ones_is_always_solvable() {
    let mut r = rng(103);
    for _ in 0..1000 {
        let g = random_graph_between(&mut r, 1, 64);
        let set = solver::solve_all_ones(&g).unwrap();
        assert!(
            solver::apply_pattern(&g, &BitVec::ones(g.n()), &set.particular)
                .unwrap()
                .is_zero()
        );
    }
}

#[test]
fn null_patterns_change_nothing() {
    let mut r = rng(104);
    for _ in 0..100 {
        let g = random_graph_between(&mut r, 1, 30);
        let c = BitVec::from_mask(g.n().min(64), r.gen());
        let c = if g.n() <= 64 { c } else { BitVec::zeros(g.n()) };
        for l in solver::null_patterns(&g) {
            assert_eq!(solver::apply_pattern(&g, &c, &l).unwrap(), c);
        }
    }
}

#[test]
fn null_patterns_have_even_weight() {
    // ℓᵀNℓ = |ℓ| mod 2 for symmetric N with unit diagonal, and Nℓ = 0.
    let mut r = rng(105);
    for _ in 0..500 {
        let g = random_graph_between(&mut r, 1, 14);
        for l in solver::null_patterns(&g) {
            assert_eq!(l.count_ones() % 2, 0, "{g:?} ℓ={l}");
        }
    }
}

#[test]
fn trees_have_an_even_number_of_half_activated_vertices() {
    let mut r = rng(114);
    for _ in 0..500 {
        let n = r.gen_range(1..=30);
        let t = random_tree_with(&mut r, n).unwrap();
        let half = classify::activation_vector(&t)
            .unwrap()
            .into_iter()
            .filter(|&a| a == ActivationClass::HalfActivated)
            .count();
        assert_eq!(half % 2, 0, "{t:?}");
    }
}

#[test]
fn triangle_has_three_half_activated_vertices() {
    // Kernel of N(K₃) is {000, 110, 101, 011}: every vertex is half-activated,
    // so the even-count property does not extend to arbitrary graphs.
    let k3 = Graph::complete(3);
    assert_eq!(solver::nullity(&k3), 2);
    assert_eq!(
        classify::activation_vector(&k3).unwrap(),
        vec![ActivationClass::HalfActivated; 3]
    );
}

#[test]
fn all_ones_and_unit_solutions_share_fixed_values() {
    // For fixed v, every all-ones solution and every c_v solution agree at v.
    let mut r = rng(106);
    for _ in 0..150 {
        let g = random_graph_between(&mut r, 1, 10);
        let ones = oracle::enumerate_solutions(&g, &BitVec::ones(g.n())).unwrap();
        for v in 0..g.n() {
            let unit = oracle::enumerate_solutions(&g, &classify::unit_config(g.n(), v)).unwrap();
            assert_eq!(classify::is_fixed(&g, v).unwrap(), !unit.is_empty());
            assert_eq!(
                classify::is_fixed(&g, v).unwrap(),
                !classify::is_half_activated(&g, v).unwrap()
            );
            if unit.is_empty() {
                continue;
            }
            let shared = ones[0].get(v);
            assert!(
                ones.iter().chain(&unit).all(|p| p.get(v) == shared),
                "{g:?} v={v}"
            );
        }
    }
}

#[test]
fn always_solvable_graphs_have_an_always_activated_vertex() {
    let mut r = rng(107);
    let mut seen = 0;
    while seen < 200 {
        let g = random_graph_between(&mut r, 1, 20);
        if !solver::is_always_solvable(&g) {
            continue;
        }
        seen += 1;
        assert!(classify::activation_vector(&g)
            .unwrap()
            .contains(&ActivationClass::AlwaysActivated));
    }
}

#[test]
fn profile_identity_holds() {
    let mut r = rng(108);
    for _ in 0..200 {
        let g = random_graph_between(&mut r, 1, 16);
        // profile() itself fails on any mismatch between A, nd and fixedness.
        let profiles = classify::profile(&g).unwrap();
        assert_eq!(profiles.len(), g.n());
    }
}

#[test]
fn adjacent_tree_vertices_are_never_both_pushed() {
    let mut r = rng(109);
    for _ in 0..200 {
        let n = r.gen_range(1..=12);
        let t = random_tree_with(&mut r, n).unwrap();
        for p in oracle::enumerate_solutions(&t, &BitVec::ones(n)).unwrap() {
            assert!(
                t.edges().iter().all(|e| !(p.get(e.u) && p.get(e.w))),
                "{t:?} {p}"
            );
        }
    }
}

#[test]
fn cut_edge_test_matches_component_counts() {
    let mut r = rng(110);
    for _ in 0..300 {
        let g = random_graph_between(&mut r, 1, 12);
        let before = g.component_count();
        for e in g.edges() {
            let after = g.delete_edge(e.u, e.w).unwrap().component_count();
            assert_eq!(g.is_cut_edge(e.u, e.w).unwrap(), after > before);
        }
        assert!(g.closed_neighborhood_matrix().is_symmetric());
    }
}

#[test]
fn star_join_prediction_matches_observation() {
    let mut r = rng(111);
    for _ in 0..300 {
        let hub = random_always_solvable_tree(&mut r, 8);
        let u = r.gen_range(0..hub.n());
        let k = r.gen_range(0..=4);
        let attachments: Vec<(Graph, usize)> = (0..k)
            .map(|_| {
                let g = random_always_solvable_tree(&mut r, 6);
                let v = r.gen_range(0..g.n());
                (g, v)
            })
            .collect();
        let s = structure::star_join_check(&hub, u, &attachments).unwrap();
        assert_eq!(s.predicted, s.observed, "{hub:?} at {u}, {attachments:?}");
    }
}

#[test]
fn exact_pi_matches_partition_enumeration() {
    let mut r = rng(112);
    for _ in 0..60 {
        let g = random_graph_between(&mut r, 1, 8);
        let (count, witness) = oracle::pi_partition_oracle(&g).unwrap();
        assert_eq!(structure::pi_exact(&g).unwrap(), count, "{g:?}");
        assert!(structure::verify_pass(&g, &witness, true)
            .unwrap()
            .is_valid());
    }
}

#[test]
fn exact_pi_adds_over_components() {
    let mut r = rng(115);
    let mut connected_solvable = 0;
    for _ in 0..150 {
        let g = random_graph_between(&mut r, 1, 10);
        let pi = structure::pi_exact(&g).unwrap();
        let by_component: usize = g
            .components()
            .iter()
            .map(|c| structure::pi_exact(&c.graph).unwrap())
            .sum();
        assert_eq!(pi, by_component, "{g:?}");
        if g.is_connected() && solver::is_always_solvable(&g) {
            connected_solvable += 1;
            assert_eq!(pi, 1, "{g:?}");
        }
    }
    assert!(connected_solvable > 10);
}

#[test]
fn chain_certificates_with_broken_order_fail() {
    let mut r = rng(113);
    let mut rejected = 0;
    for _ in 0..200 {
        let g = random_graph_between(&mut r, 3, 12);
        let nu = solver::nullity(&g);
        if nu == 0 {
            continue;
        }
        let mut cert = structure::build_chain(&g).unwrap();
        // Swap the first removed vertex with a never- or always-activated one.
        let act = classify::activation_vector(&g).unwrap();
        let Some(pos) = cert
            .removal_order
            .iter()
            .position(|&v| act[v] != ActivationClass::HalfActivated)
        else {
            continue;
        };
        cert.removal_order.swap(0, pos);
        assert!(matches!(
            structure::verify_chain(&g, &cert),
            Verdict::Invalid(_)
        ));
        rejected += 1;
    }
    assert!(rejected > 50);
}

#[test]
fn random_trees_partition_and_decompose() {
    for seed in 0..300 {
        let t = random_tree(1 + (seed as usize % 16), seed).unwrap();
        let cert = structure::min_pass_tree(&t).unwrap();
        assert!(structure::verify_pass(&t, &cert, true).unwrap().is_valid());
        if solver::is_always_solvable(&t) {
            let d = structure::decompose_tree(&t).unwrap();
            assert!(structure::verify_decomposition(&t, &d).is_valid());
        }
    }
}

#[test]
fn large_graphs_stay_consistent() {
    // Rank–nullity and a solved all-ones configuration on a few hundred vertices.
    for seed in 0..3 {
        let g = random_graph(300, 0.05, seed).unwrap();
        let nu = solver::nullity(&g);
        assert_eq!(solver::rank(&g) + nu, 300);
        assert_eq!(solver::null_patterns(&g).len(), nu);
        let set = solver::solve_all_ones(&g).unwrap();
        assert!(
            solver::apply_pattern(&g, &BitVec::ones(300), &set.particular)
                .unwrap()
                .is_zero()
        );
    }
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let edges = (0..n)
                .flat_map(|a| (a + 1..n).map(move |b| (a, b)))
                .zip(bits)
                .filter(|(_, keep)| *keep)
                .map(|(e, _)| e);
            Graph::new(n, edges).unwrap()
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn activation_matches_enumeration(g in arb_graph(10)) {
        let stats = oracle::activation_stats(&g).unwrap();
        prop_assert_eq!(stats.classes(), Some(classify::activation_vector(&g).unwrap()));
    }

    #[test]
    fn edge_list_round_trip(g in arb_graph(12)) {
        prop_assert_eq!(Graph::parse_edge_list(&g.to_edge_list()).unwrap(), g);
    }

    #[test]
    fn join_then_cut_restores_operands(g1 in arb_graph(6), g2 in arb_graph(6), u in 0usize..6, w in 0usize..6) {
        let (u, w) = (u % g1.n(), w % g2.n());
        let j = Graph::join(&g1, u, &g2, w).unwrap();
        prop_assert_eq!(j.graph.delete_edge(j.u, j.w).unwrap(), g1.disjoint_union(&g2));
        let report = structure::join_report(&g1, u, &g2, w).unwrap();
        prop_assert!(report.table_row_ok, "{:?}", report);
    }
}
