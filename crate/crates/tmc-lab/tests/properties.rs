//! Property-based checks over randomly generated graphs, plus sweep-wide
//! invariants that are cheap enough to run exhaustively.

use proptest::prelude::*;

use tmc_lab::coloring::{construct_theorem1, verify_tmc, waste};
use tmc_lab::enumerate::enumerate_connected_graphs;
use tmc_lab::formats::{emit_edge_list, emit_graph6, parse_edge_list, parse_graph6};
use tmc_lab::graph::Graph;
use tmc_lab::spanning::{leaf_lower_bound, spanning_stats, tree_leaf_profile};

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (2..=max_n).prop_flat_map(|n| {
        let pairs = n * (n - 1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |bits| {
            let mut g = Graph::new(n).unwrap();
            let mut k = 0;
            for u in 0..n {
                for v in (u + 1)..n {
                    if bits[k] {
                        g.add_edge(u, v).unwrap();
                    }
                    k += 1;
                }
            }
            g
        })
    })
}

proptest! {
    #[test]
    fn graph6_round_trip(g in arb_graph(30)) {
        let text = emit_graph6(&g).unwrap();
        prop_assert_eq!(parse_graph6(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_round_trip(g in arb_graph(20)) {
        let text = emit_edge_list(&g);
        prop_assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn complement_is_involution(g in arb_graph(15)) {
        prop_assert_eq!(g.complement().complement(), g.clone());
        let total = g.n() * (g.n() - 1) / 2;
        prop_assert_eq!(g.m() + g.complement().m(), total);
    }

    #[test]
    fn degree_sum_is_twice_m(g in arb_graph(20)) {
        let sum: usize = (0..g.n()).map(|u| g.degree(u)).sum();
        prop_assert_eq!(sum, 2 * g.m());
    }

    #[test]
    fn greedy_leaves_bounded_by_exact(g in arb_graph(9), seed in any::<u64>()) {
        prop_assume!(g.is_connected());
        let stats = spanning_stats(&g).unwrap();
        let lb = leaf_lower_bound(&g, seed).unwrap();
        prop_assert!(lb <= stats.l);
        prop_assert_eq!(stats.l + stats.q, g.n());
        let (leaves, internal) = tree_leaf_profile(&stats.witness_tree).unwrap();
        prop_assert_eq!(leaves.len(), stats.l);
        prop_assert_eq!(internal.len(), stats.q);
    }

    #[test]
    fn construction_verifies(g in arb_graph(10)) {
        prop_assume!(g.is_connected());
        let col = construct_theorem1(&g).unwrap();
        prop_assert!(verify_tmc(&g, &col).unwrap().ok);
        let l = spanning_stats(&g).unwrap().l;
        prop_assert_eq!(col.num_colors(), g.m() + 2 + l - g.n());
    }

    #[test]
    fn coloring_json_round_trip(g in arb_graph(10)) {
        prop_assume!(g.is_connected());
        let col = construct_theorem1(&g).unwrap();
        let text = serde_json::to_string(&col.to_json()).unwrap();
        let back = tmc_lab::coloring::TotalColoring::from_json(&text).unwrap();
        prop_assert_eq!(back, col);
    }
}

#[test]
fn path_waste_is_edge_count_minus_one_plus_internals() {
    // spot-check the waste bookkeeping against hand counts
    assert_eq!(waste(&[(0, 1), (1, 2)]).unwrap(), 2);
    assert_eq!(waste(&[(0, 1), (1, 2), (2, 3)]).unwrap(), 4);
    assert_eq!(waste(&[(0, 1), (0, 2), (0, 3)]).unwrap(), 3);
    assert!(waste(&[(0, 1)]).is_err());
}

#[test]
fn adding_edges_never_decreases_leaf_count() {
    for n in 2..=6usize {
        for g in enumerate_connected_graphs(n).unwrap() {
            let l = spanning_stats(&g).unwrap().l;
            for u in 0..n {
                for v in (u + 1)..n {
                    if !g.has_edge(u, v) {
                        let mut h = g.clone();
                        h.add_edge(u, v).unwrap();
                        assert!(spanning_stats(&h).unwrap().l >= l);
                    }
                }
            }
        }
    }
}
