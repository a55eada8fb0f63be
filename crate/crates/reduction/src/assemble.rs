//! The assembled graph G_M for a Grid Tiling instance.

use std::collections::{BTreeMap, BTreeSet};

use gadget_flower::build_flower;
use graph_core::{PlanarGraph, Weight};
use serde::Serialize;

use crate::constants::{DummyAttachment, ReductionConstants};
use crate::grid::GridTilingInstance;
use crate::sketch::{mirror, mirrored_face, Anchor, Sketch};
use crate::vg::{draw_lvg, lvg_width, Frame, LvgPortals};
use crate::ReductionError;

#[derive(Clone, Debug, Serialize)]
pub struct CellPortals {
    pub west: LvgPortals,
    pub east: LvgPortals,
    /// `joins[j-1]` joins `q^W[j]` to `q^E[N-j+1]`.
    pub joins: Vec<usize>,
}

#[derive(Clone, Debug, Serialize)]
pub struct FlowerPortals {
    /// Size-1 intervals, indexed by element modulo t.
    pub terminals: Vec<usize>,
    /// Size-t/2 intervals, indexed by left endpoint modulo t.
    pub portals: Vec<usize>,
    pub carpel: usize,
}

/// Named vertices of `G_M`. Keys are 1-based `"a,b"` or `"a,b,i"` strings.
#[derive(Clone, Debug, Serialize)]
pub struct PortalDirectory {
    pub root: usize,
    pub heads: Vec<usize>,
    pub cells: BTreeMap<String, CellPortals>,
    pub fuse: BTreeMap<String, usize>,
    pub flowers: BTreeMap<String, FlowerPortals>,
    /// `"0,b"` above row 1, `"k,b"` below row k.
    pub dummies: BTreeMap<String, usize>,
    pub outer_face: usize,
}

#[derive(Clone, Debug)]
pub struct ReductionOutput {
    pub graph: PlanarGraph,
    pub terminals: Vec<usize>,
    /// Flower carpels, then the outer face.
    pub terminal_faces: Vec<usize>,
    /// The budget `K_M`.
    pub budget: Weight,
    pub attachment: DummyAttachment,
    pub constants: ReductionConstants,
    pub directory: PortalDirectory,
    /// The instance after padding `n` to a power of two.
    pub grid: GridTilingInstance,
}

const JOIN_GAP: f64 = 2.0;
const FUSE_GAP: f64 = 2.0;
const ROW_GAP: f64 = 4.0;

fn key2(a: usize, b: usize) -> String {
    format!("{a},{b}")
}

/// Flower of size `t` with weights `t M_7` per unit, oriented so that its
/// portals run clockwise in index order; returns graph, carpel and outer face.
fn oriented_flower(c: &ReductionConstants) -> Result<(PlanarGraph, usize, usize, Vec<usize>, Vec<usize>), ReductionError> {
    let f = build_flower(c.t, c.t as u64)?;
    let order: Vec<usize> = f.graph.face_vertex_order(f.outer).into_iter().filter(|v| f.portals.contains(v)).collect();
    let pos = |v: usize| f.portals.iter().position(|&p| p == v).expect("portal");
    let ascending = (0..order.len()).all(|i| pos(order[(i + 1) % order.len()]) == (pos(order[i]) + 1) % c.t);
    if ascending {
        let m = mirror(&f.graph);
        let carpel = mirrored_face(&f.graph, &m, f.carpel);
        let outer = mirrored_face(&f.graph, &m, f.outer);
        Ok((m, carpel, outer, f.terminals, f.portals))
    } else {
        Ok((f.graph, f.carpel, f.outer, f.terminals, f.portals))
    }
}

/// Builds `G_M`, its terminals, the `k(k-1)+1` terminal faces and `K_M`,
/// with the dummies identified with the w-portals.
pub fn build_reduction(gt: &GridTilingInstance) -> Result<ReductionOutput, ReductionError> {
    build_reduction_with(gt, DummyAttachment::Identified)
}

pub fn build_reduction_with(gt: &GridTilingInstance, mode: DummyAttachment) -> Result<ReductionOutput, ReductionError> {
    gt.validate()?;
    let gt = gt.padded();
    let c = ReductionConstants::new(gt.n, gt.k);
    let (n, k, nn, l, t) = (gt.n, gt.k, c.big_n, c.l, c.t);
    let pw = &c.powers;
    let wl = lvg_width(nn, l);
    let cw = 2.0 * wl + JOIN_GAP;
    let cx = |b: usize| (b - 1) as f64 * (cw + FUSE_GAP);
    let ry = |a: usize| -((a - 1) as f64) * ((nn + 1) as f64 + ROW_GAP);
    let mut sk = Sketch::default();

    let lift = if mode == DummyAttachment::Pendant { 2.0 } else { 0.0 };
    let mut dummies = BTreeMap::new();
    for b in 1..=k {
        dummies.insert(key2(0, b), sk.add_vertex(cx(b) + cw - wl / 2.0, ry(1) + lift));
        dummies.insert(key2(k, b), sk.add_vertex(cx(b) + wl / 2.0, ry(k) - (nn + 1) as f64 - lift));
    }
    let shared = |key: String| (mode == DummyAttachment::Identified).then(|| dummies[&key]);

    let mut cells = BTreeMap::new();
    for a in 1..=k {
        for b in 1..=k {
            let cell = gt.cell(a, b);
            let west_sets: Vec<BTreeSet<usize>> =
                (1..=l).map(|y| cell.iter().filter(|p| p.1 == y).map(|&(x, _)| (x - 1) * n + y).collect()).collect();
            let east_sets: Vec<BTreeSet<usize>> =
                west_sets.iter().map(|s| s.iter().map(|&j| nn - j + 1).collect()).collect();
            let wf = Frame { x: cx(b), y: ry(a), flip: false };
            let ef = Frame { x: cx(b) + cw, y: ry(a) - (nn + 1) as f64, flip: true };
            let west = draw_lvg(&mut sk, wf, nn, &west_sets, pw, if a == k { shared(key2(k, b)) } else { None });
            let east = draw_lvg(&mut sk, ef, nn, &east_sets, pw, if a == 1 { shared(key2(0, b)) } else { None });
            if mode == DummyAttachment::Pendant {
                for (hit, lvg, d) in [(a == k, &west, key2(k, b)), (a == 1, &east, key2(0, b))] {
                    if hit {
                        for &wv in &lvg.w {
                            sk.add_edge(dummies[&d], wv, c.mi(6).clone());
                        }
                    }
                }
            }
            let joins = (1..=nn).map(|j| sk.add_edge(west.q[j - 1], east.q[nn - j], c.mi(6).clone())).collect();
            cells.insert(key2(a, b), CellPortals { west, east, joins });
        }
    }

    let mut fuse = BTreeMap::new();
    for a in 1..=k {
        for b in 1..k {
            for i in 1..=n {
                let y = ry(a) - ((i - 1) * n) as f64 - (n + 1) as f64 / 2.0;
                let f = sk.add_vertex(cx(b) + cw + FUSE_GAP / 2.0, y);
                for li in 1..=n {
                    let j = (i - 1) * n + li;
                    let left = cells[&key2(a, b)].east.p[nn - j];
                    let right = cells[&key2(a, b + 1)].west.p[j - 1];
                    sk.add_edge(left, f, c.mi(6).clone());
                    sk.add_edge(f, right, c.mi(6).clone());
                }
                fuse.insert(format!("{a},{b},{i}"), f);
            }
        }
    }

    let mid = (ry(1) + ry(k) - (nn + 1) as f64) / 2.0;
    let root = sk.add_vertex(-2.0, mid);
    let mut heads = Vec::new();
    for a in 1..=k {
        for &p in &cells[&key2(a, 1)].west.p {
            sk.add_edge(root, p, c.mi(6).clone());
        }
        let h = sk.add_vertex(cx(k) + cw + 2.0, ry(a) - (nn + 1) as f64 / 2.0);
        for &p in &cells[&key2(a, k)].east.p {
            sk.add_edge(p, h, c.mi(6).clone());
        }
        heads.push(h);
    }

    let (fg, carpel, outer, fterms, fportals) = oriented_flower(&c)?;
    let down = (-170f64.to_radians(), -10f64.to_radians());
    let up = (10f64.to_radians(), 170f64.to_radians());
    let mut grafted = Vec::new();
    for a in 1..k {
        for b in 1..=k {
            let mut anchors = BTreeMap::new();
            for li in 1..=l {
                let wv = cells[&key2(a, b)].west.w[li - 1];
                anchors.insert(fportals[li % t], Anchor { vertex: wv, lo: down.0, hi: down.1 });
                let ev = cells[&key2(a + 1, b)].east.w[li - 1];
                anchors.insert(fportals[(li + t / 2) % t], Anchor { vertex: ev, lo: up.0, hi: up.1 });
            }
            let (map, base) = sk.graft(&fg, outer, &anchors, |w| w * c.mi(7))?;
            grafted.push((key2(a, b), map, base));
        }
    }

    let graph = sk.build()?;
    let mut flowers = BTreeMap::new();
    let mut terminal_faces = Vec::new();
    let carpel_dart = fg.face(carpel).darts[0];
    for (key, map, base) in grafted {
        let face = graph.dart_face(2 * (base + carpel_dart / 2) + carpel_dart % 2);
        terminal_faces.push(face);
        let terminals = fterms.iter().map(|&v| map[v]).collect();
        let portals = fportals.iter().map(|&v| map[v]).collect();
        flowers.insert(key, FlowerPortals { terminals, portals, carpel: face });
    }

    let mut terminals: Vec<usize> = vec![root];
    terminals.extend(&heads);
    terminals.extend(dummies.values());
    terminals.extend(flowers.values().flat_map(|f| f.terminals.iter().copied()));
    terminals.sort_unstable();
    let comp = graph_core::graph::components_of(graph.vertex_count(), graph.edges());
    let on_outer: Vec<usize> = std::iter::once(root).chain(heads.iter().copied()).chain(dummies.values().copied())
        .filter(|&v| comp[v] == comp[root])
        .collect();
    let outer_face = graph
        .faces_at(root)
        .into_iter()
        .find(|&f| on_outer.iter().all(|&v| graph.face(f).contains_vertex(v)))
        .ok_or_else(|| ReductionError::Layout("root, heads and dummies share no face".into()))?;
    terminal_faces.push(outer_face);
    // Dummies cut off from the root (empty selector sets) still get a face.
    for &v in dummies.values() {
        if comp[v] != comp[root] && graph.degree(v) > 0 && !terminal_faces.iter().any(|&f| graph.face(f).contains_vertex(v)) {
            terminal_faces.push(graph.faces_at(v)[0]);
        }
    }

    let directory = PortalDirectory { root, heads, cells, fuse, flowers, dummies, outer_face };
    let budget = c.budget_for(mode);
    Ok(ReductionOutput { graph, terminals, terminal_faces, budget, attachment: mode, constants: c, directory, grid: gt })
}
