//! Randomized invariants: format roundtrips, induced-subgraph composition,
//! oracle duality against brute force, and properness of forced
//! decompositions.

use proptest::prelude::*;
use starfree::colorer::{
    color_star_forest_free, greedy_color, verify_coloring, CheckMode, ColorConfig,
};
use starfree::gen::gnp;
use starfree::graph::Graph;
use starfree::io::{read_dimacs_col, read_graph6, write_dimacs_col, write_graph6};
use starfree::oracles::{clique_number, is_h_free, stability_number};
use starfree::pattern::StarForest;
use starfree::VertexSet;

/// Arbitrary graph on up to `max_n` vertices via an edge bitmask.
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        let pairs = n * n.saturating_sub(1) / 2;
        proptest::collection::vec(any::<bool>(), pairs).prop_map(move |mask| {
            let mut edges = Vec::new();
            let mut idx = 0;
            for u in 0..n {
                for v in u + 1..n {
                    if mask[idx] {
                        edges.push((u, v));
                    }
                    idx += 1;
                }
            }
            Graph::build(n, &edges).unwrap()
        })
    })
}

/// Maximum clique size by subset enumeration; only for tiny graphs.
fn brute_omega(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 16);
    let mut best = 0;
    for mask in 0u32..(1 << n) {
        let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let is_clique = members
            .iter()
            .enumerate()
            .all(|(i, &u)| members[i + 1..].iter().all(|&v| g.has_edge(u, v)));
        if is_clique {
            best = best.max(members.len());
        }
    }
    best
}

proptest! {
    #[test]
    fn graph6_roundtrip(g in arb_graph(30)) {
        let text = write_graph6(&g);
        let back = read_graph6(&text).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn dimacs_roundtrip(g in arb_graph(30)) {
        let text = write_dimacs_col(&g);
        let (back, warnings) = read_dimacs_col(&text).unwrap();
        prop_assert!(warnings.is_empty());
        prop_assert_eq!(back, g);
    }

    #[test]
    fn induced_composes(g in arb_graph(14), mask1 in any::<u16>(), mask2 in any::<u16>()) {
        // G[S][T'] must equal G[T] where T is T' pulled back through S's labels
        let s = VertexSet::from_members(
            g.n(),
            (0..g.n()).filter(|&v| mask1 >> v & 1 == 1),
        );
        let (gs, labels) = g.induced(&s);
        let t_local = VertexSet::from_members(
            gs.n(),
            (0..gs.n()).filter(|&v| mask2 >> v & 1 == 1),
        );
        let (gst, inner_labels) = gs.induced(&t_local);
        let t_global = VertexSet::from_members(
            g.n(),
            t_local.iter().map(|v| labels[v]),
        );
        let (gt, direct_labels) = g.induced(&t_global);
        prop_assert_eq!(&gst, &gt);
        let composed: Vec<usize> = inner_labels.iter().map(|&v| labels[v]).collect();
        prop_assert_eq!(composed, direct_labels);
    }

    #[test]
    fn greedy_is_proper(g in arb_graph(25)) {
        let order: Vec<usize> = (0..g.n()).collect();
        let col = greedy_color(&g, &order);
        prop_assert!(verify_coloring(&g, &col));
        prop_assert!(col.palette_size <= g.max_degree() + 1);
    }

    #[test]
    fn gnp_is_deterministic(n in 0usize..25, p_num in 0u64..=4, seed in any::<u64>()) {
        let a = gnp(n, p_num, 4, seed);
        let b = gnp(n, p_num, 4, seed);
        prop_assert_eq!(&a, &b);
        prop_assert!(a.is_valid());
        if p_num == 0 {
            prop_assert_eq!(a.edge_count(), 0);
        }
        if p_num == 4 {
            prop_assert_eq!(a.edge_count(), n * n.saturating_sub(1) / 2);
        }
    }

    #[test]
    fn clique_stable_duality(g in arb_graph(12)) {
        prop_assert_eq!(clique_number(&g), brute_omega(&g));
        prop_assert_eq!(stability_number(&g), brute_omega(&g.complement()));
    }

    #[test]
    fn forced_decomposition_stays_proper(g in arb_graph(14), leaves in 1u32..=2) {
        // override drops the degree threshold to 1, so every node with an
        // edge decomposes; the coloring must stay proper regardless
        let h = StarForest::new(vec![leaves, leaves]);
        prop_assume!(is_h_free(&g, &h));
        let cfg = ColorConfig {
            check_h_free: CheckMode::On,
            degree_threshold_override: Some(1),
            enumeration_cap: 1_000_000,
        };
        let (col, trace, _) = color_star_forest_free(&g, &h, &cfg).unwrap();
        prop_assert!(verify_coloring(&g, &col));
        prop_assert_eq!(trace.vertices().len(), g.n());
    }
}
