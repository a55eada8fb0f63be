//! Verification gadgets VG_N and their L-chains, with S-reductions.

use std::collections::BTreeSet;

use graph_core::{PlanarGraph, Weight};
use serde::Serialize;

use crate::constants::Powers;
use crate::sketch::Sketch;
use crate::ReductionError;

/// Placement of a gadget drawn in local coordinates; `flip` turns it by 180 degrees.
#[derive(Clone, Copy, Debug)]
pub(crate) struct Frame {
    pub x: f64,
    pub y: f64,
    pub flip: bool,
}

impl Frame {
    pub fn place(&self, x: f64, y: f64) -> (f64, f64) {
        if self.flip {
            (self.x - x, self.y - y)
        } else {
            (self.x + x, self.y + y)
        }
    }
}

/// Vertex and edge ids of one VG_N; vectors are indexed by `i - 1`.
#[derive(Clone, Debug, Serialize)]
pub struct VgPortals {
    pub y: Vec<usize>,
    pub w: usize,
    pub z: Vec<usize>,
    /// `v[i][j]` is `v[i+1, j+1]`.
    pub v: Vec<Vec<usize>>,
    /// `(i, edge)` for each selector present.
    pub selectors: Vec<(usize, usize)>,
}

/// Vertex and edge ids of one L-VG.
#[derive(Clone, Debug, Serialize)]
pub struct LvgPortals {
    pub p: Vec<usize>,
    pub w: Vec<usize>,
    pub q: Vec<usize>,
    pub gadgets: Vec<VgPortals>,
    /// `connectors[l][i]` joins `z^{l+1}[i+1]` to `y^{l+2}[i+1]`.
    pub connectors: Vec<Vec<usize>>,
}

#[derive(Clone, Debug)]
pub struct VgGadget {
    pub graph: PlanarGraph,
    pub portals: VgPortals,
}

#[derive(Clone, Debug)]
pub struct LvgGadget {
    pub graph: PlanarGraph,
    pub portals: LvgPortals,
}

/// Width of an L-VG drawing; the q-portals sit at this x.
pub(crate) fn lvg_width(n: usize, l: usize) -> f64 {
    (1 + l * (n + 2)) as f64
}

/// Draws VG_N with its left column at local `x0`; rows go down from y = -1.
///
/// `w` supplies a shared w vertex (a merged dummy terminal); otherwise one is
/// created below the bottom row.
pub(crate) fn draw_vg(
    sk: &mut Sketch,
    fr: Frame,
    x0: f64,
    n: usize,
    s: &BTreeSet<usize>,
    pw: &Powers,
    w: Option<usize>,
) -> VgPortals {
    let at = |sk: &mut Sketch, x: f64, y: f64| {
        let (px, py) = fr.place(x, y);
        sk.add_vertex(px, py)
    };
    let y: Vec<usize> = (1..=n).map(|i| at(sk, x0, -(i as f64))).collect();
    let v: Vec<Vec<usize>> =
        (1..=n).map(|i| (1..=n).map(|j| at(sk, x0 + i as f64, -(j as f64))).collect()).collect();
    let z: Vec<usize> = (1..=n).map(|i| at(sk, x0 + (n + 1) as f64, -(i as f64))).collect();
    let w = w.unwrap_or_else(|| at(sk, x0 + (n + 1) as f64 / 2.0, -((n + 1) as f64)));
    for i in 1..=n {
        let c = i as u64;
        sk.add_edge(y[i - 1], v[0][i - 1], pw.m(2) * c);
        sk.add_edge(z[i - 1], v[n - 1][i - 1], pw.m(3) * c);
    }
    for j in 0..n {
        for i in 0..n - 1 {
            sk.add_edge(v[i][j], v[i + 1][j], pw.m(4).clone());
        }
    }
    for i in 0..n {
        for j in i..n - 1 {
            sk.add_edge(v[i][j], v[i][j + 1], pw.m(3).clone());
        }
    }
    let mut selectors = Vec::new();
    for &i in s {
        let e = sk.add_edge(v[i - 1][n - 1], w, pw.combo(&[(1, 5)], &[(i as u64, 2)]));
        selectors.push((i, e));
    }
    VgPortals { y, w, z, v, selectors }
}

/// Draws an L-VG: p-portals at local x = 0, q-portals at [`lvg_width`].
///
/// `shared_w` merges all L w-portals into one given vertex.
pub(crate) fn draw_lvg(
    sk: &mut Sketch,
    fr: Frame,
    n: usize,
    sets: &[BTreeSet<usize>],
    pw: &Powers,
    shared_w: Option<usize>,
) -> LvgPortals {
    let l = sets.len();
    let at = |sk: &mut Sketch, x: f64, y: f64| {
        let (px, py) = fr.place(x, y);
        sk.add_vertex(px, py)
    };
    let p: Vec<usize> = (1..=n).map(|i| at(sk, 0.0, -(i as f64))).collect();
    let gadgets: Vec<VgPortals> = sets
        .iter()
        .enumerate()
        .map(|(li, s)| draw_vg(sk, fr, (1 + li * (n + 2)) as f64, n, s, pw, shared_w))
        .collect();
    let q: Vec<usize> = (1..=n).map(|i| at(sk, lvg_width(n, l), -(i as f64))).collect();
    for i in 1..=n {
        let c = i as u64;
        sk.add_edge(p[i - 1], gadgets[0].y[i - 1], pw.m(1) * c);
        sk.add_edge(q[i - 1], gadgets[l - 1].z[i - 1], pw.combo(&[(1, 2)], &[(c, 1)]));
    }
    let connectors = (0..l - 1)
        .map(|li| {
            (1..=n)
                .map(|i| {
                    let c = i as u64;
                    let wt = pw.combo(&[(1, 5)], &[(c, 3), (c, 2)]);
                    sk.add_edge(gadgets[li].z[i - 1], gadgets[li + 1].y[i - 1], wt)
                })
                .collect()
        })
        .collect();
    let w = gadgets.iter().map(|g| g.w).collect();
    LvgPortals { p, w, q, gadgets, connectors }
}

fn check_base(n: usize, m: &Weight) -> Result<(), ReductionError> {
    if n == 0 {
        return Err(ReductionError::BadParameters("N must be positive".into()));
    }
    if *m <= Weight::from(n as u64) {
        return Err(ReductionError::BadParameters(format!("M = {m} must exceed N = {n}")));
    }
    Ok(())
}

fn check_set(n: usize, s: &BTreeSet<usize>) -> Result<(), ReductionError> {
    match s.iter().find(|&&i| i == 0 || i > n) {
        Some(i) => Err(ReductionError::BadParameters(format!("selector {i} outside [{n}]"))),
        None => Ok(()),
    }
}

/// The S-reduction of VG_N: selectors only for `i` in `s`.
pub fn build_vg(n: usize, s: &BTreeSet<usize>, m: &Weight) -> Result<VgGadget, ReductionError> {
    check_base(n, m)?;
    check_set(n, s)?;
    let mut sk = Sketch::default();
    let fr = Frame { x: 0.0, y: 0.0, flip: false };
    let portals = draw_vg(&mut sk, fr, 0.0, n, s, &Powers::new(m), None);
    Ok(VgGadget { graph: sk.build()?, portals })
}

/// The S-reduction of the L-VG with `sets.len()` chained gadgets.
pub fn build_lvg(n: usize, sets: &[BTreeSet<usize>], m: &Weight) -> Result<LvgGadget, ReductionError> {
    check_base(n, m)?;
    if sets.is_empty() {
        return Err(ReductionError::BadParameters("L must be positive".into()));
    }
    for s in sets {
        check_set(n, s)?;
    }
    let mut sk = Sketch::default();
    let fr = Frame { x: 0.0, y: 0.0, flip: false };
    let portals = draw_lvg(&mut sk, fr, n, sets, &Powers::new(m), None);
    Ok(LvgGadget { graph: sk.build()?, portals })
}
