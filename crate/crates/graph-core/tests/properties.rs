use std::collections::BTreeSet;

use graph_core::io::{instance_to_json, parse_instance};
use graph_core::random::{random_planar, rng_from_seed, RandomPlanarOptions};
use graph_core::{dijkstra, shortest_path, twin, Partition, PlanarGraph, Weight};
use proptest::prelude::*;

fn labels(n: usize) -> impl Strategy<Value = Vec<usize>> {
    proptest::collection::vec(0..n.max(1), n)
}

fn pair_of_partitions() -> impl Strategy<Value = (Vec<usize>, Partition, Partition, Partition)> {
    (1usize..8).prop_flat_map(|n| (labels(n), labels(n), labels(n))).prop_map(|(a, b, c)| {
        let ground: Vec<usize> = (0..a.len()).map(|i| 3 * i + 1).collect();
        let p = Partition::from_labels(&ground, &a);
        let q = Partition::from_labels(&ground, &b);
        let r = Partition::from_labels(&ground, &c);
        (ground, p, q, r)
    })
}

fn graph(seed: u64, n: usize, p: f64) -> PlanarGraph {
    let opts = RandomPlanarOptions { vertices: n, extra_edge_prob: p, ..Default::default() };
    random_planar(&opts, &mut rng_from_seed(seed))
}

#[test]
fn partition_counts_are_bell_numbers() {
    let bell = [1, 1, 2, 5, 15, 52, 203, 877];
    for (n, &b) in bell.iter().enumerate() {
        let ground: Vec<usize> = (0..n).collect();
        let all: Vec<Partition> = Partition::all(&ground).collect();
        assert_eq!(all.len(), b, "n = {n}");
        let distinct: BTreeSet<Vec<Vec<usize>>> = all.iter().map(|p| p.blocks().to_vec()).collect();
        assert_eq!(distinct.len(), b);
    }
}

proptest! {
    #[test]
    fn join_is_the_least_upper_bound((ground, p, q, r) in pair_of_partitions()) {
        let j = p.join(&q);
        prop_assert_eq!(&j, &q.join(&p));
        prop_assert_eq!(&p.join(&p), &p);
        prop_assert_eq!(j.join(&r), p.join(&q.join(&r)));
        prop_assert!(p.is_finer_than(&j) && q.is_finer_than(&j));
        if p.is_finer_than(&r) && q.is_finer_than(&r) {
            prop_assert!(j.is_finer_than(&r));
        }
        prop_assert!(Partition::singletons(&ground).is_finer_than(&p));
        prop_assert!(p.is_finer_than(&Partition::single_block(&ground)));
        prop_assert_eq!(j.ground_set(), ground);
    }

    #[test]
    fn projection_keeps_block_membership((ground, p, _q, _r) in pair_of_partitions(), keep in any::<u32>()) {
        let w: Vec<usize> = ground.iter().copied().enumerate().filter(|(i, _)| keep >> (i % 32) & 1 == 1).map(|(_, x)| x).collect();
        let proj = p.project(&w).unwrap();
        prop_assert_eq!(proj.ground_set(), w.clone());
        for &a in &w {
            for &b in &w {
                prop_assert_eq!(proj.same_block(a, b), p.same_block(a, b));
            }
        }
        prop_assert_eq!(p.project(&ground).unwrap(), p.clone());
        prop_assert!(p.project(&[0]).is_err());
    }

    #[test]
    fn coarsenings_are_exactly_the_coarser_partitions((ground, p, _q, _r) in pair_of_partitions()) {
        prop_assume!(ground.len() <= 6);
        let coarse: BTreeSet<Vec<Vec<usize>>> = p.coarsenings().iter().map(|c| c.blocks().to_vec()).collect();
        let want: BTreeSet<Vec<Vec<usize>>> =
            Partition::all(&ground).filter(|c| p.is_finer_than(c)).map(|c| c.blocks().to_vec()).collect();
        prop_assert_eq!(coarse, want);
    }

    #[test]
    fn random_embeddings_satisfy_euler(seed in any::<u64>(), n in 1usize..30, p in 0.0f64..1.0) {
        let g = graph(seed, n, p);
        prop_assert!(g.is_connected());
        let (v, e, f) = (g.vertex_count() as i64, g.edges().len() as i64, g.faces().len() as i64);
        if e > 0 {
            prop_assert_eq!(v - e + f, 2);
        }
        // Every dart lies on exactly one face walk.
        let mut seen = vec![0usize; 2 * g.edges().len()];
        for (i, face) in g.faces().iter().enumerate() {
            for &d in &face.darts {
                seen[d] += 1;
                prop_assert_eq!(g.dart_face(d), i);
                prop_assert_eq!(g.dart_head(d), g.dart_tail(g.face_next(d)));
            }
        }
        prop_assert!(seen.iter().all(|&c| c == 1));
        for d in 0..2 * g.edges().len() {
            prop_assert_eq!(twin(twin(d)), d);
            prop_assert_eq!(g.rot_prev(g.rot_next(d)), d);
            prop_assert_eq!(g.dart_tail(g.rot_next(d)), g.dart_tail(d));
        }
        let deg: usize = (0..g.vertex_count()).map(|x| g.degree(x)).sum();
        prop_assert_eq!(deg, 2 * g.edges().len());
    }

    #[test]
    fn json_round_trip(seed in any::<u64>(), n in 2usize..20, pick in any::<usize>()) {
        let g = graph(seed, n, 0.5);
        let faces: Vec<usize> = if g.faces().is_empty() { vec![] } else { vec![pick % g.faces().len()] };
        let terms: Vec<usize> = faces.iter().flat_map(|&f| g.face(f).vertices.clone()).collect();
        let inst = parse_instance(&instance_to_json(&g, &terms, &faces)).unwrap();
        prop_assert_eq!(inst.graph.edges(), g.edges());
        prop_assert_eq!(inst.graph.rotations(), g.rotations());
        prop_assert_eq!(inst.graph.faces(), g.faces());
        prop_assert_eq!(inst.terminals, terms);
        // A lone cycle has two faces with one edge set; either reading covers the same vertices.
        let edges_of = |g: &PlanarGraph, fs: &[usize]| fs.iter().map(|&f| g.face(f).edges.clone()).collect::<Vec<_>>();
        prop_assert_eq!(edges_of(&inst.graph, &inst.faces), edges_of(&g, &faces));
    }

    #[test]
    fn distances_form_a_metric(seed in any::<u64>(), n in 2usize..20) {
        let g = graph(seed, n, 0.4);
        let d: Vec<Vec<Weight>> =
            (0..n).map(|s| dijkstra(&g, &[s]).into_iter().map(|x| x.unwrap()).collect()).collect();
        for a in 0..n {
            prop_assert!(d[a][a].is_zero());
            for b in 0..n {
                prop_assert_eq!(&d[a][b], &d[b][a]);
                for c in 0..n {
                    prop_assert!(d[a][c] <= &d[a][b] + &d[b][c]);
                }
            }
        }
        let (total, _, path) = shortest_path(&g, 0, n - 1).unwrap();
        let w = path.iter().fold(Weight::zero(), |acc, &e| &acc + &g.edge(e).weight);
        prop_assert_eq!(&w, &d[0][n - 1]);
        prop_assert_eq!(total, w);
    }
}
