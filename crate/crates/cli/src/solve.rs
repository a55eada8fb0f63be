use std::collections::BTreeSet;

use graph_core::io::parse_instance;
use graph_core::{Instance, PlanarGraph, SteinerSolution, Weight};
use oracles::{dreyfus_wagner, exhaustive_min_steiner, one_face_steiner, DwConfig, OracleError};
use pbsf_solver::{steiner_tree, PbsfError, SolveStats, SolverConfig};
use serde::Serialize;

use crate::{input_err, read_input, to_json, CliError, Engine, OracleArgs, Output, SolveArgs};

/// Output schema shared by `solve` and `oracle`.
#[derive(Clone, Debug, Serialize)]
pub struct SolveReport {
    pub weight: Weight,
    pub edges: Vec<usize>,
    pub optimal_certified: bool,
    pub stats: SolveStats,
}

/// Restricts `inst` to the component holding its terminals.
///
/// Returns the restricted instance and the original id of every kept edge.
/// Terminals in different components make the instance infeasible.
pub fn restrict_to_terminal_component(inst: &Instance) -> Result<(Instance, Vec<usize>), CliError> {
    let g = &inst.graph;
    if inst.terminals.is_empty() || g.is_connected() {
        return Ok((inst.clone(), (0..g.edges().len()).collect()));
    }
    let comp = g.components();
    let c = comp[inst.terminals[0]];
    if let Some(&t) = inst.terminals.iter().find(|&&t| comp[t] != c) {
        return Err(CliError::Infeasible(format!("terminals {} and {t} are in different components", inst.terminals[0])));
    }
    let mut vid = vec![usize::MAX; g.vertex_count()];
    let mut n = 0;
    for v in 0..g.vertex_count() {
        if comp[v] == c {
            vid[v] = n;
            n += 1;
        }
    }
    let kept: Vec<usize> = (0..g.edges().len()).filter(|&e| comp[g.edge(e).u] == c).collect();
    let mut eid = vec![usize::MAX; g.edges().len()];
    for (i, &e) in kept.iter().enumerate() {
        eid[e] = i;
    }
    let dart = |d: usize| 2 * eid[d / 2] + d % 2;
    let edges = kept
        .iter()
        .map(|&e| {
            let x = g.edge(e);
            graph_core::Edge::new(vid[x.u], vid[x.v], x.weight.clone())
        })
        .collect();
    let rotation = (0..g.vertex_count())
        .filter(|&v| comp[v] == c)
        .map(|v| g.rotation(v).iter().map(|&d| dart(d)).collect())
        .collect();
    let sub = PlanarGraph::new(n, edges, rotation).map_err(input_err)?;
    let faces = inst
        .faces
        .iter()
        .map(|&f| g.face(f).darts[0])
        .filter(|&d| comp[g.dart_tail(d)] == c)
        .map(|d| sub.dart_face(dart(d)))
        .collect();
    let terminals = inst.terminals.iter().map(|&t| vid[t]).collect();
    Ok((Instance { graph: sub, terminals, faces }, kept))
}

/// Greedy cover of the terminals by faces, used when the input names none.
fn cover_faces(g: &PlanarGraph, terminals: &[usize]) -> Vec<usize> {
    let mut left: BTreeSet<usize> = terminals.iter().copied().collect();
    let mut chosen = Vec::new();
    while !left.is_empty() {
        let best = (0..g.faces().len())
            .max_by_key(|&f| (left.iter().filter(|&&t| g.face(f).contains_vertex(t)).count(), std::cmp::Reverse(f)))
            .expect("a terminal lies on some face");
        let covered: Vec<usize> = left.iter().copied().filter(|&t| g.face(best).contains_vertex(t)).collect();
        if covered.is_empty() {
            // Isolated terminal vertices lie on no face.
            break;
        }
        for t in covered {
            left.remove(&t);
        }
        chosen.push(best);
    }
    chosen
}

fn load(path: &str) -> Result<Instance, CliError> {
    let mut inst = parse_instance(&read_input(path)?).map_err(input_err)?;
    inst.terminals.sort_unstable();
    inst.terminals.dedup();
    if inst.faces.is_empty() && !inst.terminals.is_empty() {
        inst.faces = cover_faces(&inst.graph, &inst.terminals);
    }
    Ok(inst)
}

fn oracle_err(e: OracleError) -> CliError {
    match e {
        OracleError::Unreachable(v) => CliError::Infeasible(format!("terminal {v} is unreachable")),
        other => input_err(other),
    }
}

fn report(sol: SteinerSolution, back: &[usize], certified: bool, stats: SolveStats) -> Output {
    let mut edges: Vec<usize> = sol.edges.iter().map(|&e| back[e]).collect();
    edges.sort_unstable();
    Output::ok(to_json(&SolveReport { weight: sol.weight, edges, optimal_certified: certified, stats }))
}

pub fn cmd_solve(a: &SolveArgs, threads: usize) -> Result<Output, CliError> {
    let inst = load(&a.input)?;
    let (inst, back) = restrict_to_terminal_component(&inst)?;
    let dw = DwConfig { terminal_cap: a.dw_cap };
    match a.engine {
        Engine::Oracle => {
            let sol = dreyfus_wagner(&inst.graph, &inst.terminals, &dw).map_err(oracle_err)?;
            Ok(report(sol, &back, true, SolveStats::default()))
        }
        Engine::Pbsf => {
            let cfg = SolverConfig { c0: a.c0, sep_max: a.sep_max, parallel: threads > 1, dw };
            let run = steiner_tree(&inst.graph, &inst.terminals, &inst.faces, &cfg).map_err(|e| match e {
                PbsfError::Infeasible => CliError::Infeasible("no Steiner tree exists".into()),
                PbsfError::Oracle(o) => oracle_err(o),
                other => input_err(other),
            })?;
            Ok(report(run.solution, &back, run.optimal_certified, run.stats))
        }
    }
}

pub fn cmd_oracle(a: &OracleArgs) -> Result<Output, CliError> {
    let inst = load(&a.input)?;
    let (inst, back) = restrict_to_terminal_component(&inst)?;
    let g = &inst.graph;
    let sol = match a.engine {
        crate::OracleEngine::Dw => dreyfus_wagner(g, &inst.terminals, &DwConfig { terminal_cap: a.dw_cap }),
        crate::OracleEngine::Exhaustive => exhaustive_min_steiner(g, &inst.terminals),
        crate::OracleEngine::Oneface => {
            let &f = inst.faces.first().ok_or_else(|| CliError::Input("oneface needs a terminal face".into()))?;
            one_face_steiner(g, &inst.terminals, f)
        }
    }
    .map_err(oracle_err)?;
    Ok(report(sol, &back, true, SolveStats::default()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use graph_core::EmbeddingBuilder;

    #[test]
    fn restriction_keeps_terminal_component() {
        let mut b = EmbeddingBuilder::new();
        for (x, y) in [(0.0, 0.0), (1.0, 0.0), (0.0, 1.0), (5.0, 5.0), (6.0, 5.0)] {
            b.add_vertex(x, y);
        }
        b.add_edge(3, 4, Weight::one());
        b.add_edge(0, 1, Weight::from(2u64));
        b.add_edge(1, 2, Weight::from(3u64));
        b.add_edge(2, 0, Weight::from(4u64));
        let g = b.build().unwrap();
        let f = (0..g.faces().len()).find(|&f| g.face(f).vertices == vec![0, 1, 2]).unwrap();
        let inst = Instance { graph: g, terminals: vec![0, 2], faces: vec![f] };
        let (sub, back) = restrict_to_terminal_component(&inst).unwrap();
        assert_eq!(sub.graph.vertex_count(), 3);
        assert_eq!(back, vec![1, 2, 3]);
        assert_eq!(sub.graph.face(sub.faces[0]).vertices, vec![0, 1, 2]);
        let split = Instance { terminals: vec![0, 3], ..inst };
        assert!(matches!(restrict_to_terminal_component(&split), Err(CliError::Infeasible(_))));
    }
}
