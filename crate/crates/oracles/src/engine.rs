//! Subset dynamic program shared by Dreyfus-Wagner and the one-face
//! interval variant: merge two parts at a vertex, then grow by Dijkstra.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use graph_core::WeightedGraph;

use crate::cost::Cost;

pub const NONE: u32 = u32::MAX;

/// A family of terminal sets closed under the splits it reports.
///
/// Set ids must be ordered so that both parts of a split precede the set.
pub trait SetFamily {
    fn count(&self) -> usize;
    /// Terminal vertex for a singleton set.
    fn singleton(&self, s: usize) -> Option<usize>;
    /// Calls `f(a, b)` for each unordered split of `s` into two nonempty parts.
    fn splits(&self, s: usize, f: &mut dyn FnMut(usize, usize));
    fn complement(&self, s: usize, a: usize) -> usize;
}

pub struct Arena<C> {
    pub n: usize,
    pub adj: Vec<Vec<(u32, u32)>>,
    pub w: Vec<C>,
    pub ends: Vec<(u32, u32)>,
}

impl<C: Cost> Arena<C> {
    pub fn new<G: WeightedGraph + ?Sized>(g: &G) -> Self {
        let n = g.vertex_count();
        let mut adj = vec![Vec::new(); n];
        let mut w = Vec::with_capacity(g.edge_list().len());
        let mut ends = Vec::with_capacity(g.edge_list().len());
        for (i, e) in g.edge_list().iter().enumerate() {
            adj[e.u].push((e.v as u32, i as u32));
            adj[e.v].push((e.u as u32, i as u32));
            w.push(C::from_weight(&e.weight));
            ends.push((e.u as u32, e.v as u32));
        }
        Arena { n, adj, w, ends }
    }
}

pub struct Table<C> {
    pub n: usize,
    pub dp: Vec<C>,
    /// First part of the merge that produced the value, or NONE.
    pub split: Vec<u32>,
    /// Edge through which the value was grown, or NONE.
    pub pred: Vec<u32>,
}

impl<C: Cost> Table<C> {
    pub fn value(&self, s: usize, v: usize) -> &C {
        &self.dp[s * self.n + v]
    }

    /// Edges of a tree realizing `value(s, v)` (possibly with repeats removed).
    pub fn tree<F: SetFamily + ?Sized>(&self, fam: &F, arena: &Arena<C>, s: usize, v: usize) -> Vec<usize> {
        let mut out = Vec::new();
        let mut stack = vec![(s, v)];
        while let Some((s, v)) = stack.pop() {
            let i = s * self.n + v;
            if self.split[i] != NONE {
                let a = self.split[i] as usize;
                stack.push((a, v));
                stack.push((fam.complement(s, a), v));
            } else if self.pred[i] != NONE {
                let e = self.pred[i] as usize;
                out.push(e);
                let (x, y) = arena.ends[e];
                let other = if x as usize == v { y } else { x };
                stack.push((s, other as usize));
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }
}

pub fn run<C: Cost, F: SetFamily + ?Sized>(fam: &F, arena: &Arena<C>) -> Table<C> {
    let n = arena.n;
    let sets = fam.count();
    let mut dp = vec![C::infinity(); sets * n];
    let mut split = vec![NONE; sets * n];
    let mut pred = vec![NONE; sets * n];
    let mut heap = BinaryHeap::new();
    for s in 0..sets {
        let (lo, hi) = dp.split_at_mut(s * n);
        let row = &mut hi[..n];
        let srow = &mut split[s * n..(s + 1) * n];
        if let Some(t) = fam.singleton(s) {
            row[t] = C::zero();
        } else {
            fam.splits(s, &mut |a, b| {
                let ra = &lo[a * n..(a + 1) * n];
                let rb = &lo[b * n..(b + 1) * n];
                for v in 0..n {
                    if ra[v].is_inf() || rb[v].is_inf() {
                        continue;
                    }
                    let c = ra[v].plus(&rb[v]);
                    if c < row[v] {
                        row[v] = c;
                        srow[v] = a as u32;
                    }
                }
            });
        }
        grow(arena, row, &mut srow[..], &mut pred[s * n..(s + 1) * n], &mut heap);
    }
    Table { n, dp, split, pred }
}

fn grow<C: Cost>(
    arena: &Arena<C>,
    row: &mut [C],
    srow: &mut [u32],
    prow: &mut [u32],
    heap: &mut BinaryHeap<Reverse<(C, u32)>>,
) {
    heap.clear();
    for (v, c) in row.iter().enumerate() {
        if !c.is_inf() {
            heap.push(Reverse((c.clone(), v as u32)));
        }
    }
    while let Some(Reverse((d, x))) = heap.pop() {
        let x = x as usize;
        if d != row[x] {
            continue;
        }
        for &(y, e) in &arena.adj[x] {
            let y = y as usize;
            let nd = d.plus(&arena.w[e as usize]);
            if nd < row[y] {
                row[y] = nd.clone();
                prow[y] = e;
                srow[y] = NONE;
                heap.push(Reverse((nd, y as u32)));
            }
        }
    }
}

/// All subsets of `k` terminals as bitmasks; set id = mask.
pub struct Subsets<'a> {
    pub terms: &'a [usize],
}

impl SetFamily for Subsets<'_> {
    fn count(&self) -> usize {
        1 << self.terms.len()
    }
    fn singleton(&self, s: usize) -> Option<usize> {
        (s.count_ones() == 1).then(|| self.terms[s.trailing_zeros() as usize])
    }
    fn splits(&self, s: usize, f: &mut dyn FnMut(usize, usize)) {
        if s.count_ones() < 2 {
            return;
        }
        let low = s & s.wrapping_neg();
        let rest = s ^ low;
        // Subsets x of rest, excluding rest itself: parts (low|x, rest^x).
        let mut x = (rest.wrapping_sub(1)) & rest;
        loop {
            f(low | x, rest ^ x);
            if x == 0 {
                break;
            }
            x = (x - 1) & rest;
        }
    }
    fn complement(&self, s: usize, a: usize) -> usize {
        s ^ a
    }
}

/// Contiguous intervals of a terminal sequence, ordered by length.
pub struct Intervals<'a> {
    pub terms: &'a [usize],
    ids: Vec<(usize, usize)>,
    index: Vec<Vec<usize>>,
}

impl<'a> Intervals<'a> {
    pub fn new(terms: &'a [usize]) -> Self {
        let q = terms.len();
        let mut ids = Vec::new();
        let mut index = vec![vec![usize::MAX; q]; q];
        for len in 1..=q {
            for i in 0..=q - len {
                index[i][i + len - 1] = ids.len();
                ids.push((i, i + len - 1));
            }
        }
        Intervals { terms, ids, index }
    }

    pub fn id(&self, i: usize, j: usize) -> usize {
        self.index[i][j]
    }
}

impl SetFamily for Intervals<'_> {
    fn count(&self) -> usize {
        self.ids.len()
    }
    fn singleton(&self, s: usize) -> Option<usize> {
        let (i, j) = self.ids[s];
        (i == j).then(|| self.terms[i])
    }
    fn splits(&self, s: usize, f: &mut dyn FnMut(usize, usize)) {
        let (i, j) = self.ids[s];
        for m in i..j {
            f(self.index[i][m], self.index[m + 1][j]);
        }
    }
    fn complement(&self, s: usize, a: usize) -> usize {
        let (i, j) = self.ids[s];
        let (_, m) = self.ids[a];
        debug_assert_eq!(self.ids[a].0, i);
        self.index[m + 1][j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_splits_are_unordered_and_complete() {
        let terms = [0, 1, 2, 3];
        let fam = Subsets { terms: &terms };
        let mut seen = Vec::new();
        fam.splits(0b1011, &mut |a, b| seen.push((a, b)));
        // 2^(3-1) - 1 = 3 unordered splits.
        assert_eq!(seen.len(), 3);
        for (a, b) in seen {
            assert_eq!(a | b, 0b1011);
            assert_eq!(a & b, 0);
            assert!(a & 1 == 1 && b != 0);
        }
    }

    #[test]
    fn interval_ids_follow_length() {
        let terms = [5, 6, 7];
        let fam = Intervals::new(&terms);
        assert_eq!(fam.count(), 6);
        assert_eq!(fam.id(0, 2), 5);
        let mut parts = Vec::new();
        fam.splits(fam.id(0, 2), &mut |a, b| parts.push((a, b)));
        assert_eq!(parts, vec![(fam.id(0, 0), fam.id(1, 2)), (fam.id(0, 1), fam.id(2, 2))]);
        assert_eq!(fam.complement(fam.id(0, 2), fam.id(0, 1)), fam.id(2, 2));
    }
}
