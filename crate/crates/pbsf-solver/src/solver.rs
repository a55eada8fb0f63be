//! Recursive decomposition over small separators with an exhaustive base case.

use std::collections::{BTreeSet, HashMap};
use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};
use std::sync::{Arc, Mutex};

use graph_core::{Dsu, Partition, PlanarGraph};
use oracles::cost::Cost;
use oracles::{dreyfus_wagner, one_face_steiner, OracleError};
use rayon::prelude::*;

use crate::faces::{face_components, faces_hit, is_simple_face};
use crate::noncrossing::noncrossing_sequences;
use crate::SolverConfig;

/// A finite cost with its witness edges, or `None` for infinity.
pub(crate) type Val<C> = Option<(C, Vec<usize>)>;

/// Deterministic minimum: cost first, then the sorted edge list.
pub(crate) fn pick<C: Cost>(a: Val<C>, b: Val<C>) -> Val<C> {
    match (a, b) {
        (None, x) | (x, None) => x,
        (Some(a), Some(b)) => {
            if (&b.0, &b.1) < (&a.0, &a.1) {
                Some(b)
            } else {
                Some(a)
            }
        }
    }
}

fn merge_edges(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut e: Vec<usize> = a.iter().chain(b).copied().collect();
    e.sort_unstable();
    e.dedup();
    e
}

fn sorted_union(a: &[usize], b: &[usize]) -> Vec<usize> {
    merge_edges(a, b)
}

fn minus(a: &[usize], b: &[usize]) -> Vec<usize> {
    a.iter().copied().filter(|x| !b.contains(x)).collect()
}

/// Largest separator the decomposition needs for a subproblem of size `s`.
pub fn separator_bound(s: usize) -> usize {
    (15.0 * (s as f64).sqrt()).floor() as usize + 2
}

/// Boundary, its partition, the terminals outside the boundary and the
/// terminal faces of one subproblem.
#[derive(Clone, Debug)]
pub(crate) struct Sub {
    pub b: Vec<usize>,
    pub pi: Partition,
    pub t: Vec<usize>,
    pub k: Vec<usize>,
}

impl Sub {
    pub fn new(b: Vec<usize>, pi: Partition, t: &[usize], k: &[usize]) -> Self {
        let mut b = b;
        b.sort_unstable();
        b.dedup();
        let mut t = minus(t, &b);
        t.sort_unstable();
        t.dedup();
        let mut k = k.to_vec();
        k.sort_unstable();
        k.dedup();
        Sub { b, pi, t, k }
    }
}

type StEntry<C> = Option<(C, Arc<Vec<usize>>)>;

pub(crate) struct Ctx<'g, C> {
    g: &'g PlanarGraph,
    cfg: &'g SolverConfig,
    simple: Vec<bool>,
    st_cache: Mutex<HashMap<Vec<usize>, StEntry<C>>>,
    nc_cache: Mutex<HashMap<(usize, usize), Arc<Vec<Vec<u8>>>>>,
    pub base_calls: AtomicUsize,
    pub separators: AtomicUsize,
    pub depth: AtomicUsize,
    pub violations: AtomicUsize,
    pub too_tight: AtomicBool,
    pub error: Mutex<Option<OracleError>>,
}

impl<'g, C: Cost> Ctx<'g, C> {
    pub fn new(g: &'g PlanarGraph, cfg: &'g SolverConfig) -> Self {
        Ctx {
            g,
            cfg,
            simple: (0..g.faces().len()).map(|f| is_simple_face(g, f)).collect(),
            st_cache: Mutex::new(HashMap::new()),
            nc_cache: Mutex::new(HashMap::new()),
            base_calls: AtomicUsize::new(0),
            separators: AtomicUsize::new(0),
            depth: AtomicUsize::new(0),
            violations: AtomicUsize::new(0),
            too_tight: AtomicBool::new(false),
            error: Mutex::new(None),
        }
    }

    /// Minimum Steiner tree on a sorted vertex set, cached.
    fn st(&self, set: &[usize]) -> StEntry<C> {
        if set.len() <= 1 {
            return Some((C::zero(), Arc::new(Vec::new())));
        }
        if let Some(v) = self.st_cache.lock().unwrap().get(set) {
            return v.clone();
        }
        let face = self
            .g
            .faces_at(set[0])
            .into_iter()
            .find(|&f| self.simple[f] && set.iter().all(|&v| self.g.face(f).contains_vertex(v)));
        let res = match face {
            Some(f) => one_face_steiner(self.g, set, f),
            None => dreyfus_wagner(self.g, set, &self.cfg.dw),
        };
        let entry = match res {
            Ok(s) => Some((C::from_weight(&s.weight), Arc::new(s.edges))),
            Err(OracleError::Unreachable(_)) => None,
            Err(e) => {
                self.error.lock().unwrap().get_or_insert(e);
                None
            }
        };
        self.st_cache.lock().unwrap().insert(set.to_vec(), entry.clone());
        entry
    }

    fn nc(&self, l: usize, len: usize) -> Arc<Vec<Vec<u8>>> {
        let mut cache = self.nc_cache.lock().unwrap();
        cache.entry((l, len)).or_insert_with(|| Arc::new(noncrossing_sequences(l, len))).clone()
    }

    fn on_faces(&self, t: &[usize], faces: &[usize]) -> Vec<usize> {
        t.iter().copied().filter(|&v| faces.iter().any(|&f| self.g.face(f).contains_vertex(v))).collect()
    }

    /// Faces of the subproblem that carry a terminal.
    pub fn k_of_t(&self, sub: &Sub) -> Vec<usize> {
        sub.k
            .iter()
            .copied()
            .filter(|&f| sub.t.iter().any(|&v| self.g.face(f).contains_vertex(v)))
            .collect()
    }

    /// Terminals grouped by their first terminal face, each group in boundary order.
    fn groups(&self, sub: &Sub) -> Vec<Vec<usize>> {
        let mut by_face: Vec<(usize, Vec<usize>)> = Vec::new();
        let mut loose = Vec::new();
        for &v in &sub.t {
            match sub.k.iter().copied().find(|&f| self.g.face(f).contains_vertex(v)) {
                Some(f) => match by_face.iter_mut().find(|(g, _)| *g == f) {
                    Some((_, list)) => list.push(v),
                    None => by_face.push((f, vec![v])),
                },
                None => loose.push(vec![v]),
            }
        }
        let mut out: Vec<Vec<usize>> = by_face
            .into_iter()
            .map(|(f, mut list)| {
                let order = self.g.face_vertex_order(f);
                list.sort_by_key(|v| order.iter().position(|x| x == v));
                list
            })
            .collect();
        out.extend(loose);
        out
    }

    /// Exhaustive solve: every coarsening of the boundary partition, every
    /// non-crossing assignment of terminals to its blocks.
    pub fn base(&self, sub: &Sub, mut memo: Option<&mut HashMap<Partition, Val<C>>>) -> Val<C> {
        self.base_calls.fetch_add(1, Ordering::Relaxed);
        if sub.b.is_empty() {
            return sub.t.is_empty().then(|| (C::zero(), Vec::new()));
        }
        let groups = self.groups(sub);
        let mut best = None;
        for sigma in sub.pi.coarsenings() {
            let v = match memo.as_deref_mut() {
                Some(m) => m.entry(sigma.clone()).or_insert_with(|| self.strict(&sigma, &groups)).clone(),
                None => self.strict(&sigma, &groups),
            };
            best = pick(best, v);
        }
        best
    }

    /// Cheapest union of one tree per block of `sigma`, over all non-crossing
    /// assignments of the grouped terminals to blocks.
    fn strict(&self, sigma: &Partition, groups: &[Vec<usize>]) -> Val<C> {
        let l = sigma.len();
        let seqs: Vec<Arc<Vec<Vec<u8>>>> = groups.iter().map(|gr| self.nc(l, gr.len())).collect();
        if seqs.iter().any(|s| s.is_empty()) {
            return None;
        }
        let flat: Vec<usize> = groups.concat();
        assert!(flat.len() <= 64, "at most 64 terminals per subproblem");
        let mut local: HashMap<(usize, u64), StEntry<C>> = HashMap::new();
        let mut block_cost = |i: usize, mask: u64| -> StEntry<C> {
            local
                .entry((i, mask))
                .or_insert_with(|| {
                    let mut set = sigma.blocks()[i].clone();
                    set.extend((0..flat.len()).filter(|&j| mask >> j & 1 == 1).map(|j| flat[j]));
                    set.sort_unstable();
                    set.dedup();
                    self.st(&set)
                })
                .clone()
        };
        let mut idx = vec![0usize; groups.len()];
        let mut best: Option<(C, Vec<u64>)> = None;
        'outer: loop {
            let mut masks = vec![0u64; l];
            let mut off = 0;
            for (gi, gr) in groups.iter().enumerate() {
                for (j, &c) in seqs[gi][idx[gi]].iter().enumerate() {
                    masks[c as usize] |= 1 << (off + j);
                }
                off += gr.len();
            }
            let mut cost = C::zero();
            let mut ok = true;
            for (i, &m) in masks.iter().enumerate() {
                match block_cost(i, m) {
                    Some((c, _)) => cost = cost.plus(&c),
                    None => {
                        ok = false;
                        break;
                    }
                }
                if matches!(&best, Some((b, _)) if cost >= *b) {
                    ok = false;
                    break;
                }
            }
            if ok {
                best = Some((cost, masks));
            }
            let mut g = 0;
            loop {
                if g == idx.len() {
                    break 'outer;
                }
                idx[g] += 1;
                if idx[g] < seqs[g].len() {
                    break;
                }
                idx[g] = 0;
                g += 1;
            }
        }
        let (cost, masks) = best?;
        let mut edges = BTreeSet::new();
        for (i, &m) in masks.iter().enumerate() {
            let (_, e) = block_cost(i, m).expect("finite block");
            edges.extend(e.iter().copied());
        }
        Some((cost, edges.into_iter().collect()))
    }

    pub fn solve(&self, sub: &Sub, depth: usize) -> Val<C> {
        self.depth.fetch_max(depth, Ordering::Relaxed);
        let kt = self.k_of_t(sub);
        let s = sub.b.len() + kt.len();
        if s <= self.cfg.c0 {
            return self.base(sub, None);
        }
        let n = self.g.vertex_count();
        let full = separator_bound(s);
        let cap = self.cfg.sep_max.min(full).min(n);
        if cap < full.min(n) {
            self.too_tight.store(true, Ordering::Relaxed);
        }
        let xs = subsets_up_to(n, cap);
        self.separators.fetch_add(xs.len(), Ordering::Relaxed);
        let eval = |x: &Vec<usize>| self.try_separator(sub, &kt, s, x, depth);
        let results: Vec<(bool, Val<C>)> = if self.cfg.parallel {
            xs.par_iter().map(eval).collect()
        } else {
            xs.iter().map(eval).collect()
        };
        if !results.iter().any(|r| r.0) {
            return self.base(sub, None);
        }
        results.into_iter().fold(None, |a, r| pick(a, r.1))
    }

    /// Every balanced split and segment assignment for one separator `x`.
    /// The flag reports whether any split fell inside the balance window.
    fn try_separator(&self, sub: &Sub, kt: &[usize], s: usize, x: &[usize], depth: usize) -> (bool, Val<C>) {
        let kx = faces_hit(self.g, &sub.k, x);
        let bfree = minus(&sub.b, x);
        let kfree = minus(kt, &kx);
        let tfree = minus(&sub.t, x);
        let mut segs: Vec<Vec<usize>> = Vec::new();
        for &f in &kx {
            for block in face_components(self.g, f, x).blocks() {
                let ts: Vec<usize> = block.iter().copied().filter(|v| tfree.contains(v)).collect();
                if !ts.is_empty() {
                    segs.push(ts);
                }
            }
        }
        segs.sort();
        segs.dedup();
        let all_seg: Vec<usize> = segs.iter().flatten().copied().collect::<BTreeSet<_>>().into_iter().collect();
        let mut window = false;
        let mut best = None;
        for bm in 0u32..1 << bfree.len() {
            for km in 0u32..1 << kfree.len() {
                let c = (bm.count_ones() + km.count_ones()) as usize;
                if 3 * c < s || 3 * c > 2 * s {
                    continue;
                }
                window = true;
                let (b1, b2) = split(&bfree, bm);
                let (k1, k2) = split(&kfree, km);
                let tk1 = self.on_faces(&tfree, &k1);
                let tk2 = self.on_faces(&tfree, &k2);
                let kk1 = sorted_union(&k1, &kx);
                let kk2 = sorted_union(&k2, &kx);
                for am in 0u64..1 << segs.len() {
                    let a1: Vec<usize> = segs
                        .iter()
                        .enumerate()
                        .filter(|(i, _)| am >> i & 1 == 1)
                        .flat_map(|(_, s)| s.iter().copied())
                        .collect();
                    let t1 = sorted_union(&a1, &tk1);
                    let t2 = sorted_union(&minus(&all_seg, &a1), &tk2);
                    let v = self.combine(sub, s, x, (&b1, &t1, &kk1), (&b2, &t2, &kk2), depth);
                    best = pick(best, v);
                }
            }
        }
        (window, best)
    }

    /// Pairs of boundary partitions whose join restricts to `sub.pi` and
    /// attaches every separator vertex to the boundary.
    fn combine(
        &self,
        sub: &Sub,
        s: usize,
        x: &[usize],
        side1: (&[usize], &[usize], &[usize]),
        side2: (&[usize], &[usize], &[usize]),
        depth: usize,
    ) -> Val<C> {
        let u1 = sorted_union(side1.0, x);
        let u2 = sorted_union(side2.0, x);
        let all = sorted_union(&sub.b, x);
        let pos = |v: usize| all.binary_search(&v).expect("in boundary union");
        let parts1: Vec<Partition> = Partition::all(&u1).collect();
        let parts2: Vec<Partition> = Partition::all(&u2).collect();
        let blocks = |p: &Partition| -> Vec<Vec<usize>> {
            p.blocks().iter().map(|b| b.iter().map(|&v| pos(v)).collect()).collect()
        };
        let bl1: Vec<Vec<Vec<usize>>> = parts1.iter().map(blocks).collect();
        let bl2: Vec<Vec<Vec<usize>>> = parts2.iter().map(blocks).collect();
        let bpos: Vec<usize> = sub.b.iter().map(|&v| pos(v)).collect();
        let xpos: Vec<usize> = minus(x, &sub.b).into_iter().map(pos).collect();
        let mut pairs = Vec::new();
        for (i, p1) in bl1.iter().enumerate() {
            for (j, p2) in bl2.iter().enumerate() {
                let mut dsu = Dsu::new(all.len());
                for b in p1.iter().chain(p2) {
                    for w in b.windows(2) {
                        dsu.union(w[0], w[1]);
                    }
                }
                let ok_b = (0..bpos.len()).all(|a| {
                    (a + 1..bpos.len()).all(|c| {
                        dsu.equiv(bpos[a], bpos[c]) == sub.pi.same_block(sub.b[a], sub.b[c])
                    })
                });
                let ok_x = xpos.iter().all(|&xp| bpos.iter().any(|&bp| dsu.equiv(xp, bp)));
                if ok_b && ok_x {
                    pairs.push((i, j));
                }
            }
        }
        if pairs.is_empty() {
            return None;
        }
        let vals1 = self.child_values(&u1, &parts1, side1.1, side1.2, pairs.iter().map(|p| p.0), s, depth);
        let vals2 = self.child_values(&u2, &parts2, side2.1, side2.2, pairs.iter().map(|p| p.1), s, depth);
        let mut best = None;
        for (i, j) in pairs {
            if let (Some((c1, e1)), Some((c2, e2))) = (&vals1[&i], &vals2[&j]) {
                best = pick(best, Some((c1.plus(c2), merge_edges(e1, e2))));
            }
        }
        best
    }

    #[allow(clippy::too_many_arguments)]
    fn child_values(
        &self,
        u: &[usize],
        parts: &[Partition],
        t: &[usize],
        k: &[usize],
        needed: impl Iterator<Item = usize>,
        s: usize,
        depth: usize,
    ) -> HashMap<usize, Val<C>> {
        let needed: BTreeSet<usize> = needed.collect();
        let mut out = HashMap::new();
        let mut memo = HashMap::new();
        for i in needed {
            let child = Sub::new(u.to_vec(), parts[i].clone(), t, k);
            let s_child = child.b.len() + self.k_of_t(&child).len();
            let limit = 2.0 * s as f64 / 3.0 + 4.0 * separator_bound(s) as f64;
            if s_child as f64 > limit {
                self.violations.fetch_add(1, Ordering::Relaxed);
            }
            let v = if s_child >= s {
                self.base(&child, Some(&mut memo))
            } else {
                self.solve(&child, depth + 1)
            };
            out.insert(i, v);
        }
        out
    }
}

fn split(items: &[usize], mask: u32) -> (Vec<usize>, Vec<usize>) {
    let (mut a, mut b) = (Vec::new(), Vec::new());
    for (i, &v) in items.iter().enumerate() {
        if mask >> i & 1 == 1 {
            a.push(v);
        } else {
            b.push(v);
        }
    }
    (a, b)
}

/// All subsets of `0..n` with at most `k` elements, by size then lexicographically.
pub(crate) fn subsets_up_to(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for size in 1..=k.min(n) {
        let mut c: Vec<usize> = (0..size).collect();
        loop {
            out.push(c.clone());
            let mut i = size;
            while i > 0 && c[i - 1] == n - size + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            c[i - 1] += 1;
            for j in i..size {
                c[j] = c[j - 1] + 1;
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_counts() {
        assert_eq!(subsets_up_to(5, 2).len(), 1 + 5 + 10);
        assert_eq!(subsets_up_to(3, 9).len(), 8);
        assert_eq!(subsets_up_to(4, 0), vec![Vec::<usize>::new()]);
    }

    #[test]
    fn bound_values() {
        assert_eq!(separator_bound(1), 17);
        assert_eq!(separator_bound(4), 32);
    }
}
