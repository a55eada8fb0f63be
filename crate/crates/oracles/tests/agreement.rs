use graph_core::random::{random_planar, random_terminals_on_faces, rng_from_seed, RandomPlanarOptions};
use graph_core::{PlanarGraph, SimpleGraph, Weight};
use oracles::{
    dreyfus_wagner, exhaustive_min_steiner, one_face_steiner, portal_anchored_forest_min, DwConfig,
};
use proptest::prelude::*;

fn arb_graph() -> impl Strategy<Value = (SimpleGraph, Vec<usize>)> {
    (3usize..9).prop_flat_map(|n| {
        let edge = (0..n, 0..n, 0u64..8);
        (
            Just(n),
            proptest::collection::vec(edge, 1..16),
            proptest::collection::vec(0..n, 1..5),
        )
            .prop_map(|(n, raw, terms)| {
                let mut g = SimpleGraph::new(n);
                for (u, v, w) in raw {
                    if u != v {
                        g.add_edge(u, v, Weight::from(w));
                    }
                }
                // Chain keeps everything reachable.
                for i in 1..n {
                    g.add_edge(i - 1, i, Weight::from(9u64));
                }
                (g, terms)
            })
    })
}

fn simple_face(g: &PlanarGraph, f: usize) -> bool {
    let face = g.face(f);
    face.darts.len() == face.vertices.len()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dw_matches_brute_force((g, terms) in arb_graph()) {
        let dw = dreyfus_wagner(&g, &terms, &DwConfig::default()).unwrap();
        let ex = exhaustive_min_steiner(&g, &terms).unwrap();
        prop_assert_eq!(&dw.weight, &ex.weight);
        prop_assert!(dw.is_forest(&g));
        prop_assert!(dw.connects(&g, &terms));
        prop_assert!(dw.weight_matches(&g));
    }

    #[test]
    fn one_face_matches_dw(seed in 0u64..5000) {
        let mut rng = rng_from_seed(seed);
        let opts = RandomPlanarOptions { vertices: 10, ..Default::default() };
        let g = random_planar(&opts, &mut rng);
        let faces: Vec<usize> = (0..g.faces().len()).filter(|&f| simple_face(&g, f)).collect();
        prop_assume!(!faces.is_empty());
        let f = faces[seed as usize % faces.len()];
        let verts = &g.face(f).vertices;
        let terms: Vec<usize> = verts.iter().copied().step_by(1 + seed as usize % 2).collect();
        let a = one_face_steiner(&g, &terms, f).unwrap();
        let b = dreyfus_wagner(&g, &terms, &DwConfig::default()).unwrap();
        prop_assert_eq!(&a.weight, &b.weight);
        prop_assert!(a.connects(&g, &terms));
        prop_assert!(a.is_forest(&g));
    }
}

#[test]
fn portal_forest_on_path() {
    // terminals 0 and 4 at the ends, portal in the middle and at 3.
    let mut g = SimpleGraph::new(5);
    for i in 0..4 {
        g.add_edge(i, i + 1, Weight::from(1u64 + i as u64));
    }
    let s = portal_anchored_forest_min(&g, &[0, 4], &[2, 3], &DwConfig::default()).unwrap();
    // 0-1-2 costs 3, 3-4 costs 4.
    assert_eq!(s.weight, Weight::from(7u64));
    assert_eq!(s.edges, vec![0, 1, 3]);
}

#[test]
fn off_face_terminal_is_rejected() {
    let mut rng = rng_from_seed(11);
    let g = random_planar(&RandomPlanarOptions { vertices: 12, ..Default::default() }, &mut rng);
    let (terms, faces) = random_terminals_on_faces(&g, 1, 3, &mut rng);
    let f = faces[0];
    let off = (0..g.vertex_count()).find(|&v| !g.face(f).contains_vertex(v)).unwrap();
    let mut bad = terms.clone();
    bad.push(off);
    assert_eq!(
        one_face_steiner(&g, &bad, f).unwrap_err(),
        oracles::OracleError::TerminalOffFace(off)
    );
}
