use std::collections::BTreeSet;

use ktorus::graph::format::{parse_edge_list, parse_graph6, to_edge_list, to_graph6};
use ktorus::graph::{blocks, canonical_form, is_isomorphic};
use ktorus::Graph;
use proptest::prelude::*;

fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut g = Graph::empty(n);
            let mut k = 0;
            for u in 0..n {
                for v in u + 1..n {
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
    fn canonical_form_ignores_labels(g in arb_graph(9), seed in any::<u64>()) {
        let n = g.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        // Fisher-Yates with a small LCG keeps the strategy simple.
        let mut s = seed | 1;
        for i in (1..n).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        let h = g.relabel(|v| perm[v]);
        prop_assert_eq!(canonical_form(&g), canonical_form(&h));
        prop_assert!(is_isomorphic(&g, &h));
    }

    #[test]
    fn formats_round_trip(g in arb_graph(12)) {
        prop_assert_eq!(parse_graph6(&to_graph6(&g)).unwrap(), g.clone());
        let back = parse_edge_list(&to_edge_list(&g)).unwrap();
        prop_assert_eq!(back.edge_set(), g.edge_set());
    }

    #[test]
    fn blocks_partition_edges(g in arb_graph(10)) {
        let d = blocks(&g);
        let mut seen = BTreeSet::new();
        for b in &d.blocks {
            for e in &b.edges {
                prop_assert!(seen.insert(*e));
            }
            let bg = b.graph();
            // No block has a cut vertex of its own.
            if bg.vertex_count() > 2 {
                for v in bg.vertices() {
                    let mut h = bg.clone();
                    h.remove_vertex(v);
                    prop_assert!(h.is_connected());
                }
            }
        }
        prop_assert_eq!(seen, g.edge_set());
    }

    #[test]
    fn contraction_drops_vertex_count(g in arb_graph(8)) {
        if let Some(e) = g.edges().next() {
            let h = g.contract_edge(e).unwrap();
            prop_assert_eq!(h.vertex_count() + 1, g.vertex_count());
            prop_assert!(h.edge_count() < g.edge_count());
        }
    }
}
