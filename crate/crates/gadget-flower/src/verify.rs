//! Numeric checks of the metric and Steiner-weight claims about the gadgets.

use std::collections::BTreeSet;

use graph_core::solution::is_forest;
use graph_core::{dijkstra, Dsu, Weight};
use oracles::{exhaustive_min_edge_set, portal_anchored_forest_min, DwConfig, SteinerTable};
use serde::Serialize;

use crate::flower::{build_flower, canonical_forest, FlowerGadget};
use crate::gamma::{gamma_window, GammaWindow};
use crate::interval::{closed_form_distance, edge_weight, min_scale, monotone_weight, Interval};
use crate::GadgetError;

/// Exact distance between two vertices of a gadget graph.
pub fn interval_distance(g: &graph_core::PlanarGraph, p: usize, q: usize) -> Option<Weight> {
    dijkstra(g, &[p])[q].clone()
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct MetricReport {
    pub width: i64,
    pub height: i64,
    pub scale: u64,
    pub comparable_pairs: usize,
    pub monotone_paths: usize,
    pub incomparable_pairs: usize,
    /// Incomparable pairs whose join falls outside the window.
    pub skipped_pairs: usize,
    pub vertical_checks: usize,
    pub diagonal_checks: usize,
    pub failures: Vec<String>,
    pub ok: bool,
}

/// Weights of every monotone path from `p` up to `q`.
fn monotone_path_weights(p: Interval, q: Interval, scale: u64, acc: Weight, out: &mut Vec<Weight>) {
    if p == q {
        out.push(acc);
        return;
    }
    let w = edge_weight(p.size() + 1, scale);
    if p.a > q.a {
        monotone_path_weights(Interval::new(p.a - 1, p.b), q, scale, &acc + &w, out);
    }
    if p.b < q.b {
        monotone_path_weights(Interval::new(p.a, p.b + 1), q, scale, &acc + &w, out);
    }
}

/// Checks path-weight and distance claims on the window [0, width-1] with
/// intervals of size at most height + 1.
pub fn verify_metric_propositions(width: i64, height: i64) -> Result<MetricReport, GadgetError> {
    let max_size = height + 1;
    let scale = min_scale(max_size);
    let w = gamma_window(0, width - 1, max_size, scale)?;
    let g = &w.graph;
    let n = g.vertex_count();
    let mut rep = MetricReport { width, height, scale, ..Default::default() };
    let all: Vec<Vec<Option<Weight>>> = (0..n).map(|v| dijkstra(g, &[v])).collect();
    for p in 0..n {
        for q in 0..n {
            let (ip, iq) = (w.interval(p), w.interval(q));
            let d = all[p][q].clone().expect("window is connected");
            if iq.contains(&ip) && ip != iq {
                if iq.size() - ip.size() > 6 {
                    continue;
                }
                rep.comparable_pairs += 1;
                let mut ws = Vec::new();
                monotone_path_weights(ip, iq, scale, Weight::zero(), &mut ws);
                rep.monotone_paths += ws.len();
                if ws.iter().any(|x| *x != d) {
                    rep.failures.push(format!("monotone paths {ip:?} -> {iq:?} differ from distance {d}"));
                }
            } else if !ip.contains(&iq) && !iq.contains(&ip) && p < q {
                if !w.contains(&ip.join(&iq)) {
                    rep.skipped_pairs += 1;
                    continue;
                }
                rep.incomparable_pairs += 1;
                let want = closed_form_distance(&ip, &iq, scale);
                if want != d {
                    rep.failures.push(format!("{ip:?}, {iq:?}: distance {d}, via join {want}"));
                }
            }
        }
    }
    let set_dist = |from: &[usize], to: &[usize]| -> Weight {
        let d = dijkstra(g, from);
        to.iter().filter_map(|&v| d[v].clone()).min().expect("reachable")
    };
    let unit = w.unit();
    for b in 0..width - 1 {
        let ld: Vec<usize> = (0..n).filter(|&v| w.interval(v).b == b).collect();
        let vert: Vec<usize> = (0..n).filter(|&v| w.interval(v).a + w.interval(v).b == 2 * b + 1).collect();
        let rd: Vec<usize> = (0..n).filter(|&v| w.interval(v).a == b + 1).collect();
        rep.vertical_checks += 1;
        let dv = set_dist(&ld, &vert);
        if dv != unit {
            rep.failures.push(format!("dist(LD_{b}, V_{b}+1/2) = {dv}"));
        }
        rep.diagonal_checks += 1;
        let dd = set_dist(&ld, &rd);
        if dd != &unit + &unit {
            rep.failures.push(format!("dist(LD_{b}, RD_{}) = {dd}", b + 1));
        }
        for a in 0..=b {
            let p = Interval::new(a, b);
            let q = Interval::new(a, 2 * b + 1 - a);
            if w.contains(&q) && monotone_weight(&p, &q, scale) != unit {
                rep.failures.push(format!("straight path {p:?} -> {q:?} is not one unit"));
            }
        }
    }
    rep.ok = rep.failures.is_empty();
    Ok(rep)
}

#[derive(Clone, Debug, Serialize)]
pub struct TriangleReport {
    pub l: i64,
    /// Sweep radius around the triangle of ⟦0, l⟧, in units.
    pub radius: u64,
    /// Horizontal margin of the window that passed the stability check.
    pub margin: i64,
    pub scale: u64,
    pub swept: usize,
    pub tight: usize,
    pub violations: Vec<String>,
    /// Weight at the tip ⟦0, l⟧ in units, when l + 1 is a power of two.
    pub tip_units: Option<u64>,
    pub tip_ok: Option<bool>,
    pub ok: bool,
}

struct TriangleWindow {
    w: GammaWindow,
    table: SteinerTable,
    dist: Vec<Option<Weight>>,
}

fn triangle_window(l: i64, margin: i64, scale: u64) -> Result<TriangleWindow, GadgetError> {
    let width = l + 1 + 2 * margin;
    let w = gamma_window(-margin, l + margin, width, scale)?;
    let terms: Vec<usize> = (0..=l).map(|i| w.vertex(Interval::point(i)).expect("in window")).collect();
    let table = SteinerTable::build(&w.graph, &terms)?;
    let dist = dijkstra(&w.graph, &w.triangle(Interval::new(0, l)));
    Ok(TriangleWindow { w, table, dist })
}

const MAX_MARGIN: i64 = 256;

/// Sweeps every vertex p within `radius` units of the triangle of ⟦0, l⟧:
/// the cheapest tree on {p, ⟦0⟧, ..., ⟦l⟧} must weigh at least 2l units
/// plus that distance.
///
/// The grid is infinite, so values come from a finite window.  The margin
/// doubles until a window and its double agree on which vertices lie in the
/// ball and on every swept optimum and distance.
pub fn verify_triangle_lemma(l: i64, radius: u64) -> Result<TriangleReport, GadgetError> {
    let mut margin = 4;
    loop {
        if margin > MAX_MARGIN {
            return Err(GadgetError::WindowTooSmall { l, margin });
        }
        let scale = min_scale(l + 1 + 4 * margin);
        let small = triangle_window(l, margin, scale)?;
        let big = triangle_window(l, 2 * margin, scale)?;
        let r = Weight::from(radius * scale);
        let ball = |tw: &TriangleWindow| -> Vec<usize> {
            (0..tw.w.intervals.len()).filter(|&v| tw.dist[v].as_ref().map_or(false, |d| *d <= r)).collect()
        };
        let (in_small, in_big) = (ball(&small), ball(&big));
        let full = (1usize << (l + 1)) - 1;
        let stable = in_small.len() == in_big.len()
            && in_small.iter().all(|&v| {
                let vb = big.w.vertex(small.w.interval(v)).expect("larger window contains smaller");
                big.dist[vb] == small.dist[v] && big.table.value(full, vb) == small.table.value(full, v)
            });
        if !stable {
            margin *= 2;
            continue;
        }
        let unit = Weight::from(scale);
        let two_l = Weight::from(2 * l as u64 * scale);
        let mut rep = TriangleReport {
            l,
            radius,
            margin,
            scale,
            swept: in_small.len(),
            tight: 0,
            violations: Vec::new(),
            tip_units: None,
            tip_ok: None,
            ok: false,
        };
        for &v in &in_small {
            let opt = small.table.value(full, v).expect("connected");
            let bound = &two_l + small.dist[v].as_ref().expect("in ball");
            if opt < bound {
                rep.violations.push(format!("p = {:?}: optimum {opt} below {bound}", small.w.interval(v)));
            } else if opt == bound {
                rep.tight += 1;
            }
        }
        if (l + 1) & l == 0 {
            let tip = small.w.vertex(Interval::new(0, l)).expect("in window");
            let opt = small.table.value(full, tip).expect("connected");
            rep.tip_units = opt.exact_div(&unit).and_then(|u| u.to_u64());
            rep.tip_ok = Some(opt == two_l);
        }
        rep.ok = rep.violations.is_empty() && rep.tip_ok != Some(false);
        return Ok(rep);
    }
}

/// Cheapest tree on ⟦0, l⟧ and its singletons, in units.
pub fn triangle_tip_units(l: i64) -> Result<Option<u64>, GadgetError> {
    let margin = 2;
    let scale = min_scale(l + 1 + 2 * margin);
    let tw = triangle_window(l, margin, scale)?;
    let tip = tw.w.vertex(Interval::new(0, l)).expect("in window");
    let opt = tw.table.value((1usize << (l + 1)) - 1, tip).expect("connected");
    Ok(opt.exact_div(&Weight::from(scale)).and_then(|u| u.to_u64()))
}

#[derive(Clone, Debug, Serialize)]
pub struct StructuralReport {
    pub subsets_enumerated: u64,
    pub optimal_forests: usize,
    pub at_least_two_components: bool,
    pub one_portal_per_component: bool,
    pub consecutive_coverage: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelaxationReport {
    pub non_opposite_pairs: usize,
    pub bipartitions_per_pair: usize,
    /// Smallest excess over the optimum among non-opposite pairs, in scaled weight.
    pub min_excess: Option<Weight>,
    pub strict: bool,
    /// Best two-tree sum over opposite pairs equals the optimum.
    pub opposite_attains: bool,
    /// Canonical split of one opposite pair attains the optimum.
    pub canonical_split_attains: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FlowerReport {
    pub t: usize,
    pub scale: u64,
    pub optimum_units: u64,
    pub portal_forest_weight: Weight,
    pub portal_forest_ok: bool,
    pub canonical_ok: bool,
    pub structural: Option<StructuralReport>,
    pub relaxation: RelaxationReport,
    pub ok: bool,
}

fn components(f: &FlowerGadget, edges: &[usize]) -> Vec<BTreeSet<usize>> {
    let g = &f.graph;
    let mut dsu = Dsu::new(g.vertex_count());
    let mut touched = BTreeSet::new();
    for &e in edges {
        let ed = g.edge(e);
        dsu.union(ed.u, ed.v);
        touched.insert(ed.u);
        touched.insert(ed.v);
    }
    let mut comps: Vec<BTreeSet<usize>> = Vec::new();
    let mut roots: Vec<usize> = Vec::new();
    for v in touched {
        let r = dsu.find(v);
        match roots.iter().position(|&x| x == r) {
            Some(i) => {
                comps[i].insert(v);
            }
            None => {
                roots.push(r);
                comps.push(BTreeSet::from([v]));
            }
        }
    }
    comps
}

/// Every forest of the t = 4 gadget whose trees all hold a portal and which
/// covers all terminals, checked at minimum weight.
fn structural_check(f: &FlowerGadget) -> Result<StructuralReport, GadgetError> {
    let accept = |e: &[usize]| {
        if !is_forest(&f.graph, e) {
            return false;
        }
        let comps = components(f, e);
        f.terminals.iter().all(|t| comps.iter().any(|c| c.contains(t)))
            && comps.iter().all(|c| f.portals.iter().any(|p| c.contains(p)))
    };
    let best = exhaustive_min_edge_set(&f.graph, accept)?.ok_or(GadgetError::TooLarge(f.t))?;
    let m = f.graph.edges().len();
    let mut rep = StructuralReport {
        subsets_enumerated: 1 << m,
        optimal_forests: 0,
        at_least_two_components: true,
        one_portal_per_component: true,
        consecutive_coverage: true,
    };
    for mask in 0u64..1 << m {
        let edges: Vec<usize> = (0..m).filter(|&i| mask >> i & 1 == 1).collect();
        let w: Weight = edges.iter().map(|&e| f.graph.edge(e).weight.clone()).sum();
        if w != best.weight || !accept(&edges) {
            continue;
        }
        rep.optimal_forests += 1;
        let comps = components(f, &edges);
        rep.at_least_two_components &= comps.len() >= 2;
        let mut used = Vec::new();
        for c in &comps {
            let ps: Vec<usize> = (0..f.t).filter(|&a| c.contains(&f.portals[a])).collect();
            rep.one_portal_per_component &= ps.len() == 1;
            used.extend(ps);
        }
        let half = f.t / 2;
        rep.consecutive_coverage &= (0..f.t).all(|s| (0..half).any(|i| used.contains(&((s + i) % f.t))));
    }
    Ok(rep)
}

fn relaxation_check(f: &FlowerGadget) -> Result<RelaxationReport, GadgetError> {
    let table = SteinerTable::build(&f.graph, &f.terminals)?;
    let full = (1usize << f.t) - 1;
    let opt = f.optimum();
    let val = |m: usize, v: usize| -> Weight {
        if m == 0 {
            Weight::zero()
        } else {
            table.value(m, v).expect("connected")
        }
    };
    let pair_min = |p: usize, q: usize| -> Weight {
        (0..=full)
            .map(|m| {
                val(m, f.portals[p]) + val(full ^ m, f.portals[q])
            })
            .min()
            .expect("nonempty")
    };
    let mut rep = RelaxationReport {
        non_opposite_pairs: 0,
        bipartitions_per_pair: full + 1,
        min_excess: None,
        strict: true,
        opposite_attains: true,
        canonical_split_attains: false,
    };
    for p in 0..f.t {
        for q in p + 1..f.t {
            let best = pair_min(p, q);
            if q == f.opposite(p) {
                rep.opposite_attains &= best == opt;
                continue;
            }
            rep.non_opposite_pairs += 1;
            match best.checked_sub(&opt) {
                Some(x) if !x.is_zero() => {
                    if rep.min_excess.as_ref().map_or(true, |m| x < *m) {
                        rep.min_excess = Some(x);
                    }
                }
                _ => rep.strict = false,
            }
        }
    }
    let half_mask = (1usize << (f.t / 2)) - 1;
    let split = val(half_mask, f.portals[0]) + val(full ^ half_mask, f.portals[f.t / 2]);
    rep.canonical_split_attains = split == opt;
    Ok(rep)
}

/// Runs every flower check that is tractable for `t` (4 or 8).
pub fn verify_flower_theorem(t: usize) -> Result<FlowerReport, GadgetError> {
    if t != 4 && t != 8 {
        return Err(GadgetError::TooLarge(t));
    }
    let f = build_flower(t, (t / 4) as u64)?;
    let forest = portal_anchored_forest_min(&f.graph, &f.terminals, &f.portals, &DwConfig::default())?;
    let canonical_ok = (1..=t / 2).all(|a| {
        canonical_forest(&f, a).map_or(false, |s| s.weight == f.optimum() && s.is_forest(&f.graph) && components(&f, &s.edges).len() == 2)
    });
    let structural = if t == 4 { Some(structural_check(&f)?) } else { None };
    let relaxation = relaxation_check(&f)?;
    let portal_forest_ok = forest.weight == f.optimum();
    let ok = portal_forest_ok
        && canonical_ok
        && structural.as_ref().map_or(true, |s| {
            s.optimal_forests > 0 && s.at_least_two_components && s.one_portal_per_component && s.consecutive_coverage
        })
        && relaxation.strict
        && relaxation.opposite_attains
        && relaxation.canonical_split_attains;
    Ok(FlowerReport {
        t,
        scale: f.scale,
        optimum_units: 2 * t as u64 - 4,
        portal_forest_weight: forest.weight,
        portal_forest_ok,
        canonical_ok,
        structural,
        relaxation,
        ok,
    })
}
