use graph_core::random::{random_planar, random_terminals_on_faces, rng_from_seed, RandomPlanarOptions};
use graph_core::Weight;
use oracles::{dreyfus_wagner, DwConfig};
use preprocess::{is_biconnected, lift_solution, make_subcubic_2connected, LiftError};
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn preprocessing_preserves_the_optimum(seed in 0u64..100_000, n in 2usize..12, faces in 1usize..4) {
        let mut rng = rng_from_seed(seed);
        let opts = RandomPlanarOptions { vertices: n, extra_edge_prob: 0.3, ..Default::default() };
        let g = random_planar(&opts, &mut rng);
        let (terms, kf) = random_terminals_on_faces(&g, faces, 5, &mut rng);
        let cap = g.edges().iter().map(|e| e.weight.clone()).max().unwrap_or_default();
        let p = make_subcubic_2connected(&g, &terms, &kf, &cap).unwrap();
        let h = &p.graph;
        prop_assert!((0..h.vertex_count()).all(|v| h.degree(v) <= 3));
        prop_assert!(h.vertex_count() < 3 || is_biconnected(h));
        for &t in &p.terminals {
            prop_assert!(p.faces.iter().any(|&f| h.face(f).contains_vertex(t)));
        }
        let cfg = DwConfig::default();
        let before = dreyfus_wagner(&g, &terms, &cfg).unwrap();
        let after = dreyfus_wagner(h, &p.terminals, &cfg).unwrap();
        prop_assert_eq!(&before.weight, &after.weight);
        let lifted = lift_solution(&g, &p, &after.edges).unwrap();
        prop_assert_eq!(&lifted.weight, &before.weight);
        prop_assert!(lifted.connects(&g, &terms));
        prop_assert!(lifted.is_forest(&g));
    }
}

#[test]
fn lifting_a_non_solution_fails() {
    let mut rng = rng_from_seed(5);
    let g = random_planar(&RandomPlanarOptions { vertices: 8, ..Default::default() }, &mut rng);
    let (terms, kf) = random_terminals_on_faces(&g, 2, 3, &mut rng);
    let p = make_subcubic_2connected(&g, &terms, &kf, &Weight::from(10u64)).unwrap();
    if p.terminals.len() > 1 {
        assert_eq!(lift_solution(&g, &p, &[]).unwrap_err(), LiftError::NotASolution);
    }
}
