use std::time::Instant;

use graph_core::random::{random_planar, random_terminals_on_faces, rng_from_seed, RandomPlanarOptions};
use oracles::{dreyfus_wagner, DwConfig};
use pbsf_solver::{steiner_tree, SolverConfig};
use serde::Serialize;

use crate::{input_err, BenchArgs, CliError, Output};

#[derive(Serialize)]
struct Row {
    size: usize,
    seed: u64,
    vertices: usize,
    edges: usize,
    terminals: usize,
    faces: usize,
    solver_weight: String,
    solver_ms: f64,
    base_case_calls: usize,
    separators_tried: usize,
    recursion_depth: usize,
    dw_weight: String,
    dw_ms: f64,
    agree: bool,
}

const HEADER: [&str; 14] = [
    "size", "seed", "vertices", "edges", "terminals", "faces", "solver_weight", "solver_ms",
    "base_case_calls", "separators_tried", "recursion_depth", "dw_weight", "dw_ms", "agree",
];

fn ms(start: Instant) -> f64 {
    (start.elapsed().as_secs_f64() * 1e6).round() / 1e3
}

pub fn cmd_bench(a: &BenchArgs, threads: usize) -> Result<Output, CliError> {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    w.write_record(HEADER).map_err(input_err)?;
    let cfg = SolverConfig { c0: a.c0, sep_max: a.sep_max, parallel: threads > 1, dw: DwConfig::default() };
    for &size in &a.sizes {
        for seed in 0..a.seeds {
            let mut rng = rng_from_seed(seed);
            let g = random_planar(&RandomPlanarOptions { vertices: size, ..Default::default() }, &mut rng);
            let (terms, faces) = random_terminals_on_faces(&g, a.faces, a.terminals, &mut rng);
            let t0 = Instant::now();
            let run = steiner_tree(&g, &terms, &faces, &cfg).map_err(input_err)?;
            let solver_ms = ms(t0);
            let t1 = Instant::now();
            let dw = dreyfus_wagner(&g, &terms, &DwConfig::default()).map_err(input_err)?;
            let dw_ms = ms(t1);
            w.serialize(Row {
                size,
                seed,
                vertices: g.vertex_count(),
                edges: g.edges().len(),
                terminals: terms.len(),
                faces: faces.len(),
                solver_weight: run.solution.weight.to_string(),
                solver_ms,
                base_case_calls: run.stats.base_case_calls,
                separators_tried: run.stats.separators_tried,
                recursion_depth: run.stats.recursion_depth,
                dw_weight: dw.weight.to_string(),
                dw_ms,
                agree: run.solution.weight == dw.weight,
            })
            .map_err(input_err)?;
        }
    }
    let bytes = w.into_inner().map_err(input_err)?;
    let mut s = String::from_utf8(bytes).map_err(input_err)?;
    if s.ends_with('\n') {
        s.pop();
    }
    Ok(Output::ok(s))
}
