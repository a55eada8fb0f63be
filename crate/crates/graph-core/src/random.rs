//! Seeded random plane graphs drawn on a grid with optional diagonals.

use std::collections::BTreeSet;

use rand::seq::SliceRandom;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;

use crate::embed::EmbeddingBuilder;
use crate::graph::PlanarGraph;
use crate::solution::Dsu;
use crate::weight::Weight;

#[derive(Clone, Debug)]
pub struct RandomPlanarOptions {
    pub vertices: usize,
    /// Probability of keeping each non-tree edge.
    pub extra_edge_prob: f64,
    pub diagonals: bool,
    pub min_weight: u64,
    pub max_weight: u64,
    /// Applies to non-tree edges only.
    pub max_degree: usize,
}

impl Default for RandomPlanarOptions {
    fn default() -> Self {
        RandomPlanarOptions {
            vertices: 12,
            extra_edge_prob: 0.5,
            diagonals: true,
            min_weight: 1,
            max_weight: 10,
            max_degree: usize::MAX,
        }
    }
}

pub fn rng_from_seed(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Connected plane graph on `opts.vertices` grid points.
pub fn random_planar(opts: &RandomPlanarOptions, rng: &mut ChaCha8Rng) -> PlanarGraph {
    let n = opts.vertices.max(1);
    let side = (n as f64).sqrt().ceil() as i64 + 1;
    let mut chosen: Vec<(i64, i64)> = vec![(side / 2, side / 2)];
    let mut set: BTreeSet<(i64, i64)> = chosen.iter().copied().collect();
    while chosen.len() < n {
        let &(x, y) = chosen.choose(rng).expect("nonempty");
        let (dx, dy) = [(1, 0), (-1, 0), (0, 1), (0, -1)][rng.gen_range(0..4)];
        let c = (x + dx, y + dy);
        if c.0 < 0 || c.1 < 0 || c.0 >= side || c.1 >= side || set.contains(&c) {
            continue;
        }
        set.insert(c);
        chosen.push(c);
    }
    let id = |c: &(i64, i64)| chosen.iter().position(|d| d == c);
    let mut cand: Vec<(usize, usize)> = Vec::new();
    for (i, &(x, y)) in chosen.iter().enumerate() {
        for d in [(x + 1, y), (x, y + 1)] {
            if let Some(j) = id(&d) {
                cand.push((i, j));
            }
        }
        if opts.diagonals && rng.gen_bool(0.5) {
            let (a, b) = if rng.gen_bool(0.5) {
                ((x, y), (x + 1, y + 1))
            } else {
                ((x + 1, y), (x, y + 1))
            };
            if let (Some(i), Some(j)) = (id(&a), id(&b)) {
                cand.push((i, j));
            }
        }
    }
    cand.shuffle(rng);
    let mut dsu = Dsu::new(n);
    let mut tree = Vec::new();
    let mut rest = Vec::new();
    for (u, v) in cand {
        if dsu.union(u, v) {
            tree.push((u, v));
        } else {
            rest.push((u, v));
        }
    }
    let mut deg = vec![0usize; n];
    for &(u, v) in &tree {
        deg[u] += 1;
        deg[v] += 1;
    }
    let mut edges = tree;
    for (u, v) in rest {
        if deg[u] < opts.max_degree && deg[v] < opts.max_degree && rng.gen_bool(opts.extra_edge_prob) {
            deg[u] += 1;
            deg[v] += 1;
            edges.push((u, v));
        }
    }
    edges.sort_unstable();
    let mut b = EmbeddingBuilder::new();
    for &(x, y) in &chosen {
        b.add_vertex(x as f64, y as f64);
    }
    for (u, v) in edges {
        let w = rng.gen_range(opts.min_weight..=opts.max_weight);
        b.add_edge(u, v, Weight::from(w));
    }
    b.build().expect("grid drawings are plane")
}

/// Picks up to `faces` faces and up to `terminals` distinct vertices on them.
pub fn random_terminals_on_faces(
    g: &PlanarGraph,
    faces: usize,
    terminals: usize,
    rng: &mut ChaCha8Rng,
) -> (Vec<usize>, Vec<usize>) {
    if g.faces().is_empty() {
        return (vec![0], Vec::new());
    }
    let mut ids: Vec<usize> = (0..g.faces().len()).collect();
    ids.shuffle(rng);
    ids.truncate(faces.max(1));
    ids.sort_unstable();
    let mut pool: Vec<usize> = ids
        .iter()
        .flat_map(|&f| g.face(f).vertices.iter().copied())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    pool.shuffle(rng);
    pool.truncate(terminals.max(1));
    pool.sort_unstable();
    // Keep only faces that actually carry a chosen terminal.
    ids.retain(|&f| pool.iter().any(|&t| g.face(f).contains_vertex(t)));
    (pool, ids)
}
