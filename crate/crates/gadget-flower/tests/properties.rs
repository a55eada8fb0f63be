use gadget_flower::interval::{edge_weight, min_scale};
use gadget_flower::*;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn weights_weakly_decrease_with_height(s in 2i64..200) {
        let scale = min_scale(201);
        prop_assert!(edge_weight(s + 1, scale) <= edge_weight(s, scale));
    }

    #[test]
    fn grid_distance_matches_closed_form(a1 in 0i64..8, l1 in 0i64..5, a2 in 0i64..8, l2 in 0i64..5) {
        let w = gamma_window(0, 15, 16, min_scale(16)).unwrap();
        let p = Interval::new(a1, a1 + l1);
        let q = Interval::new(a2, a2 + l2);
        let d = interval_distance(&w.graph, w.vertex(p).unwrap(), w.vertex(q).unwrap()).unwrap();
        prop_assert_eq!(d, closed_form_distance(&p, &q, w.scale));
    }

    #[test]
    fn canonical_forests_cover_all_terminals(k in 2u32..6, pick in 0usize..64) {
        let t = 1usize << k;
        let f = build_flower(t, (t / 4) as u64).unwrap();
        let a = pick % (t / 2) + 1;
        let s = canonical_forest(&f, a).unwrap();
        prop_assert_eq!(&s.weight, &f.optimum());
        let mut dsu = graph_core::Dsu::new(f.graph.vertex_count());
        for &e in &s.edges {
            let ed = f.graph.edge(e);
            dsu.union(ed.u, ed.v);
        }
        let (p, q) = (f.portals[a % t], f.portals[f.opposite(a)]);
        prop_assert!(!dsu.equiv(p, q));
        prop_assert!(f.terminals.iter().all(|&x| dsu.equiv(x, p) || dsu.equiv(x, q)));
    }
}
