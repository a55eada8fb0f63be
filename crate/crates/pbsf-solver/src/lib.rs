//! Exact planar Steiner tree and block Steiner forest solving by recursive
//! decomposition over small vertex separators.
//!
//! A block Steiner forest for `(G, B, pi, T)` connects every terminal of `T`
//! to some boundary vertex of `B`, and joins two boundary vertices exactly
//! when they share a block of `pi`.

pub mod faces;
pub mod noncrossing;
mod solver;

use graph_core::solution::connects;
use graph_core::{Dsu, Partition, PlanarGraph, SteinerSolution, Weight, WeightedGraph};
use oracles::cost::{fits_u128, BigCost, Cost};
use oracles::{DwConfig, OracleError};
use preprocess::{lift_solution, make_subcubic_2connected, PreprocessError};
use serde::Serialize;
use thiserror::Error;

pub use faces::{face_components, faces_hit};
pub use noncrossing::{
    collapse_to_minimal, enumerate_minimal_noncrossing, expand_minimal, is_minimal, is_noncrossing,
    verify_noncrossing_bound, NonCrossingReport,
};
pub use solver::separator_bound;

use solver::{Ctx, Sub};

#[derive(Clone, Debug)]
pub struct SolverConfig {
    /// Subproblems with |B| + |K(T)| at most this go straight to the base case.
    pub c0: usize,
    /// Largest separator enumerated.
    pub sep_max: usize,
    pub parallel: bool,
    pub dw: DwConfig,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig { c0: 8, sep_max: 3, parallel: false, dw: DwConfig::default() }
    }
}

#[derive(Clone, Debug)]
pub struct PbsfInstance {
    pub boundary: Vec<usize>,
    pub partition: Partition,
    pub terminals: Vec<usize>,
    /// Face ids of the graph; every terminal must lie on one of them.
    pub faces: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct SolveStats {
    pub recursion_depth: usize,
    pub base_case_calls: usize,
    pub separators_tried: usize,
    /// Children larger than the contraction bound (expected to stay 0).
    pub contraction_violations: usize,
}

#[derive(Clone, Debug)]
pub struct PbsfOutcome {
    /// `None` when no block Steiner forest exists.
    pub solution: Option<SteinerSolution>,
    /// False when `sep_max` cut the separator enumeration short.
    pub optimal_certified: bool,
    pub config_too_tight: bool,
    /// Whether distinct blocks of the partition stay disconnected in the witness.
    pub exact_connectivity: bool,
    pub stats: SolveStats,
}

impl PbsfOutcome {
    pub fn weight(&self) -> Option<&Weight> {
        self.solution.as_ref().map(|s| &s.weight)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PbsfError {
    #[error("c0 must be at least 1")]
    BadConfig,
    #[error("vertex {0} is out of range")]
    BadVertex(usize),
    #[error("face {0} does not exist")]
    NoSuchFace(usize),
    #[error("partition does not cover exactly the boundary")]
    PartitionMismatch,
    #[error("terminal {0} lies on none of the terminal faces")]
    TerminalOffFaces(usize),
    #[error("no Steiner tree exists")]
    Infeasible,
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Preprocess(#[from] PreprocessError),
}

fn validate(g: &PlanarGraph, inst: &PbsfInstance, cfg: &SolverConfig) -> Result<(), PbsfError> {
    if cfg.c0 == 0 {
        return Err(PbsfError::BadConfig);
    }
    let n = g.vertex_count();
    if let Some(&v) = inst.boundary.iter().chain(&inst.terminals).find(|&&v| v >= n) {
        return Err(PbsfError::BadVertex(v));
    }
    if let Some(&f) = inst.faces.iter().find(|&&f| f >= g.faces().len()) {
        return Err(PbsfError::NoSuchFace(f));
    }
    let mut b = inst.boundary.clone();
    b.sort_unstable();
    b.dedup();
    if inst.partition.ground_set() != b {
        return Err(PbsfError::PartitionMismatch);
    }
    for &t in &inst.terminals {
        if !b.contains(&t) && !inst.faces.iter().any(|&f| g.face(f).contains_vertex(t)) {
            return Err(PbsfError::TerminalOffFaces(t));
        }
    }
    Ok(())
}

/// Exact block Steiner forest by recursive separator decomposition.
pub fn steiner(g: &PlanarGraph, inst: &PbsfInstance, cfg: &SolverConfig) -> Result<PbsfOutcome, PbsfError> {
    run(g, inst, cfg, false)
}

/// Exact block Steiner forest by the exhaustive base case alone.
pub fn steiner_base(g: &PlanarGraph, inst: &PbsfInstance, cfg: &SolverConfig) -> Result<PbsfOutcome, PbsfError> {
    run(g, inst, cfg, true)
}

fn run(g: &PlanarGraph, inst: &PbsfInstance, cfg: &SolverConfig, base_only: bool) -> Result<PbsfOutcome, PbsfError> {
    validate(g, inst, cfg)?;
    if fits_u128(&g.total_weight()) {
        run_with::<u128>(g, inst, cfg, base_only)
    } else {
        run_with::<BigCost>(g, inst, cfg, base_only)
    }
}

fn run_with<C: Cost>(
    g: &PlanarGraph,
    inst: &PbsfInstance,
    cfg: &SolverConfig,
    base_only: bool,
) -> Result<PbsfOutcome, PbsfError> {
    let ctx = Ctx::<C>::new(g, cfg);
    let sub = Sub::new(inst.boundary.clone(), inst.partition.clone(), &inst.terminals, &inst.faces);
    let val = if base_only { ctx.base(&sub, None) } else { ctx.solve(&sub, 0) };
    if let Some(e) = ctx.error.lock().unwrap().take() {
        return Err(e.into());
    }
    let too_tight = ctx.too_tight.load(std::sync::atomic::Ordering::Relaxed);
    let stats = SolveStats {
        recursion_depth: ctx.depth.load(std::sync::atomic::Ordering::Relaxed),
        base_case_calls: ctx.base_calls.load(std::sync::atomic::Ordering::Relaxed),
        separators_tried: ctx.separators.load(std::sync::atomic::Ordering::Relaxed),
        contraction_violations: ctx.violations.load(std::sync::atomic::Ordering::Relaxed),
    };
    let solution = val.map(|(_, edges)| {
        let edges = repair(g, &sub.b, &sub.pi, &sub.t, edges);
        SteinerSolution::from_edges(g, edges)
    });
    let exact_connectivity = solution
        .as_ref()
        .map_or(true, |s| exact_blocks(g, &s.edges, &sub.pi));
    Ok(PbsfOutcome {
        solution,
        optimal_certified: !too_tight,
        config_too_tight: too_tight,
        exact_connectivity,
        stats,
    })
}

fn dsu_of(g: &PlanarGraph, edges: &[usize]) -> Dsu {
    let mut dsu = Dsu::new(g.vertex_count());
    for &e in edges {
        let ed = g.edge(e);
        dsu.union(ed.u, ed.v);
    }
    dsu
}

/// Every terminal reaches the boundary and every block is internally connected.
pub fn is_weak_block_forest(g: &PlanarGraph, edges: &[usize], b: &[usize], pi: &Partition, t: &[usize]) -> bool {
    let dsu = dsu_of(g, edges);
    t.iter().all(|&x| b.iter().any(|&y| dsu.equiv(x, y)))
        && pi.blocks().iter().all(|bl| bl.iter().all(|&y| dsu.equiv(y, bl[0])))
}

/// Boundary vertices are connected exactly when they share a block.
pub fn exact_blocks(g: &PlanarGraph, edges: &[usize], pi: &Partition) -> bool {
    let dsu = dsu_of(g, edges);
    let bl = pi.blocks();
    (0..bl.len()).all(|i| (i + 1..bl.len()).all(|j| !dsu.equiv(bl[i][0], bl[j][0])))
}

/// Full validity check of a block Steiner forest.
pub fn is_block_forest(g: &PlanarGraph, edges: &[usize], b: &[usize], pi: &Partition, t: &[usize]) -> bool {
    is_weak_block_forest(g, edges, b, pi, t) && exact_blocks(g, edges, pi)
}

/// Drops edges, heaviest first, while the witness stays a weak block forest.
fn repair(g: &PlanarGraph, b: &[usize], pi: &Partition, t: &[usize], mut edges: Vec<usize>) -> Vec<usize> {
    let mut order = edges.clone();
    order.sort_by(|&x, &y| g.edge(y).weight.cmp(&g.edge(x).weight).then(y.cmp(&x)));
    for e in order {
        let trial: Vec<usize> = edges.iter().copied().filter(|&f| f != e).collect();
        if is_weak_block_forest(g, &trial, b, pi, t) {
            edges = trial;
        }
    }
    edges
}

/// Outcome of the whole Steiner tree pipeline on the input graph.
#[derive(Clone, Debug)]
pub struct SteinerRun {
    pub solution: SteinerSolution,
    pub optimal_certified: bool,
    pub stats: SolveStats,
    pub preprocessed_vertices: usize,
}

/// Minimum Steiner tree for terminals lying on the given faces: makes the
/// graph subcubic and 2-connected, roots the forest at one terminal, solves,
/// and maps the result back.
pub fn steiner_tree(
    g: &PlanarGraph,
    terminals: &[usize],
    faces: &[usize],
    cfg: &SolverConfig,
) -> Result<SteinerRun, PbsfError> {
    let mut terms = terminals.to_vec();
    terms.sort_unstable();
    terms.dedup();
    if let Some(&v) = terms.iter().find(|&&v| v >= g.vertex_count()) {
        return Err(PbsfError::BadVertex(v));
    }
    if terms.len() <= 1 {
        return Ok(SteinerRun {
            solution: SteinerSolution::empty(),
            optimal_certified: true,
            stats: SolveStats::default(),
            preprocessed_vertices: g.vertex_count(),
        });
    }
    let cap = g.edges().iter().map(|e| e.weight.clone()).max().unwrap_or_default();
    let pre = make_subcubic_2connected(g, &terms, faces, &cap)?;
    let root = pre.terminals[0];
    let inst = PbsfInstance {
        boundary: vec![root],
        partition: Partition::single_block(&[root]),
        terminals: pre.terminals[1..].to_vec(),
        faces: pre.faces.clone(),
    };
    let out = steiner(&pre.graph, &inst, cfg)?;
    let sol = out.solution.ok_or(PbsfError::Infeasible)?;
    debug_assert!(connects(&pre.graph, &sol.edges, &pre.terminals));
    let lifted = lift_solution(g, &pre, &sol.edges).map_err(|_| PbsfError::Infeasible)?;
    Ok(SteinerRun {
        solution: lifted,
        optimal_certified: out.optimal_certified,
        stats: out.stats,
        preprocessed_vertices: pre.graph.vertex_count(),
    })
}
