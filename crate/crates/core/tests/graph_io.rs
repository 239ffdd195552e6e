use eqcol::{greedy_maximal_clique, parse_dimacs, Graph};
use proptest::prelude::*;

fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..40).prop_flat_map(|n| {
        proptest::collection::vec((0..n, 0..n), 0..200).prop_map(move |pairs| {
            Graph::from_edges(n, pairs.into_iter().filter(|(u, v)| u != v)).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn dimacs_round_trip(g in arb_graph()) {
        let back = parse_dimacs(&g.to_dimacs()).unwrap();
        prop_assert_eq!(back, g);
    }

    #[test]
    fn graph_invariants(g in arb_graph()) {
        let mut degree_sum = 0;
        for u in 0..g.n() {
            prop_assert!(!g.has_edge(u, u));
            for v in g.neighbors(u).iter() {
                prop_assert!(g.has_edge(v, u));
            }
            degree_sum += g.degree(u);
        }
        prop_assert_eq!(degree_sum, 2 * g.m());
    }

    #[test]
    fn greedy_clique_is_maximal(g in arb_graph()) {
        let q = greedy_maximal_clique(&g);
        prop_assert!(!q.is_empty());
        prop_assert!(g.is_clique(&q));
        for v in (0..g.n()).filter(|v| !q.contains(*v)) {
            prop_assert!(q.iter().any(|u| !g.has_edge(u, v)));
        }
    }
}

#[test]
fn reads_bundled_instances() {
    let dir = std::path::Path::new(env!("CARGO_MANIFEST_DIR")).join("../../instances");
    for (name, n, m) in [("queen8_8", 64, 728), ("myciel3", 11, 20), ("myciel4", 23, 71), ("myciel5", 47, 236)] {
        let text = std::fs::read_to_string(dir.join(format!("{name}.col"))).unwrap();
        let g = parse_dimacs(&text).unwrap();
        assert_eq!((g.n(), g.m()), (n, m), "{name}");
    }
}
