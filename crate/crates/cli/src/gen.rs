use std::collections::BTreeSet;

use gadget_flower::build_flower;
use graph_core::io::{instance_to_json, to_dot};
use graph_core::random::{random_planar, random_terminals_on_faces, rng_from_seed, RandomPlanarOptions};
use graph_core::{PlanarGraph, Weight};
use reduction::{build_lvg, build_reduction_with, build_vg, subdivide_to_unit_weights, GridTilingInstance};
use serde_json::{json, Value};

use crate::{attachment, input_err, read_input, to_json, CliError, GenArgs, GenWhat, Output};

struct Generated {
    graph: PlanarGraph,
    terminals: Vec<usize>,
    faces: Vec<usize>,
    meta: Value,
    /// Vertices to fill in the DOT rendering.
    marked: Vec<usize>,
}

fn parse_sets(s: &str) -> Result<Vec<BTreeSet<usize>>, CliError> {
    s.split(';')
        .map(|part| {
            part.split(',')
                .filter(|x| !x.trim().is_empty())
                .map(|x| x.trim().parse::<usize>().map_err(input_err))
                .collect()
        })
        .collect()
}

fn generate(what: &GenWhat) -> Result<Generated, CliError> {
    match *what {
        GenWhat::Flower { t, scale } => {
            let scale = scale.unwrap_or_else(|| gadget_flower::interval::min_scale((t / 2) as i64));
            let f = build_flower(t, scale).map_err(input_err)?;
            let meta = json!({
                "kind": "flower", "t": t, "scale": scale,
                "portals": f.portals, "terminals": f.terminals,
                "carpel": f.carpel, "outer": f.outer,
                "optimum": f.optimum(),
            });
            Ok(Generated {
                terminals: f.terminals.clone(),
                faces: vec![f.carpel, f.outer],
                marked: f.portals.clone(),
                graph: f.graph,
                meta,
            })
        }
        GenWhat::Vg { n, ref set, m } => {
            let s: BTreeSet<usize> = set.as_ref().map_or_else(|| (1..=n).collect(), |v| v.iter().copied().collect());
            let m = Weight::from(m.unwrap_or(10 * n as u64 + 1));
            let g = build_vg(n, &s, &m).map_err(input_err)?;
            let mut marked = g.portals.y.clone();
            marked.extend(&g.portals.z);
            marked.push(g.portals.w);
            let meta = json!({ "kind": "vg", "n": n, "m": m, "set": s, "portals": g.portals });
            Ok(Generated { graph: g.graph, terminals: Vec::new(), faces: Vec::new(), meta, marked })
        }
        GenWhat::Lvg { n, l, ref sets, m } => {
            let sets = match sets {
                Some(s) => parse_sets(s)?,
                None => vec![(1..=n).collect(); l],
            };
            if sets.len() != l {
                return Err(CliError::Input(format!("{} selector sets given for L = {l}", sets.len())));
            }
            let m = Weight::from(m.unwrap_or((10 * n * l) as u64 + 1));
            let g = build_lvg(n, &sets, &m).map_err(input_err)?;
            let p = &g.portals;
            let marked = p.p.iter().chain(&p.q).chain(&p.w).copied().collect();
            let meta = json!({ "kind": "lvg", "n": n, "l": l, "m": m, "sets": sets, "portals": p });
            Ok(Generated { graph: g.graph, terminals: Vec::new(), faces: Vec::new(), meta, marked })
        }
        GenWhat::Reduction { ref grid, subdivide, budget, pendant_dummies } => {
            let gt: GridTilingInstance = serde_json::from_str(&read_input(grid)?).map_err(input_err)?;
            let out = build_reduction_with(&gt, attachment(pendant_dummies)).map_err(input_err)?;
            let graph = if subdivide {
                subdivide_to_unit_weights(&out.graph, budget).map_err(input_err)?.graph
            } else {
                out.graph.clone()
            };
            let d = &out.directory;
            let mut marked: Vec<usize> = d.fuse.values().copied().collect();
            for c in d.cells.values() {
                marked.extend(c.west.p.iter().chain(&c.west.q).chain(&c.east.p).chain(&c.east.q));
            }
            let meta = json!({
                "kind": "reduction",
                "K_M": out.budget,
                "dummies": out.attachment,
                "constants": out.constants,
                "grid": out.grid,
                "vertex_count": out.graph.vertex_count(),
                "subdivided": subdivide,
                "terminal_faces": out.terminal_faces,
                "directory": out.directory,
            });
            Ok(Generated { graph, terminals: out.terminals, faces: out.terminal_faces, meta, marked })
        }
        GenWhat::RandomPlanar { n, seed, terminals, faces, min_weight, max_weight, extra_prob } => {
            if n == 0 || min_weight > max_weight || !(0.0..=1.0).contains(&extra_prob) {
                return Err(CliError::Input("need n >= 1, min-weight <= max-weight, 0 <= extra-prob <= 1".into()));
            }
            let mut rng = rng_from_seed(seed);
            let opts = RandomPlanarOptions { vertices: n, extra_edge_prob: extra_prob, min_weight, max_weight, ..Default::default() };
            let g = random_planar(&opts, &mut rng);
            let (terms, fs) = random_terminals_on_faces(&g, faces, terminals, &mut rng);
            let meta = json!({ "kind": "random-planar", "n": n, "seed": seed });
            Ok(Generated { graph: g, terminals: terms, faces: fs, meta, marked: Vec::new() })
        }
    }
}

pub fn cmd_gen(a: &GenArgs) -> Result<Output, CliError> {
    let g = generate(&a.what)?;
    let graph_json = instance_to_json(&g.graph, &g.terminals, &g.faces);
    if let Some(path) = &a.dot {
        std::fs::write(path, to_dot(&g.graph, &g.terminals, &g.marked, None))?;
    }
    let meta = to_json(&g.meta);
    match (&a.meta, &a.out) {
        (Some(p), _) => std::fs::write(p, meta)?,
        (None, Some(out)) => std::fs::write(format!("{out}.meta.json"), meta)?,
        (None, None) => eprintln!("{meta}"),
    }
    match &a.out {
        Some(p) => {
            std::fs::write(p, graph_json)?;
            Ok(Output::ok(String::new()))
        }
        None => Ok(Output::ok(graph_json)),
    }
}
