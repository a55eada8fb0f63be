use graph_core::solution::tidy_forest;
use graph_core::{SteinerSolution, WeightedGraph};

use crate::cost::{fits_u128, BigCost, Cost};
use crate::dw::normalize_terminals;
use crate::error::OracleError;

/// Largest edge count the brute-force oracles accept.
pub const EXHAUSTIVE_EDGE_CAP: usize = 30;

/// Union-find with undo, for depth-first edge enumeration.
struct UndoDsu {
    parent: Vec<usize>,
    size: Vec<usize>,
    log: Vec<Option<(usize, usize)>>,
}

impl UndoDsu {
    fn new(n: usize) -> Self {
        UndoDsu { parent: (0..n).collect(), size: vec![1; n], log: Vec::new() }
    }

    fn find(&self, mut x: usize) -> usize {
        while self.parent[x] != x {
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (mut ra, mut rb) = (self.find(a), self.find(b));
        if ra == rb {
            self.log.push(None);
            return;
        }
        if self.size[ra] < self.size[rb] {
            std::mem::swap(&mut ra, &mut rb);
        }
        self.parent[rb] = ra;
        self.size[ra] += self.size[rb];
        self.log.push(Some((ra, rb)));
    }

    fn undo(&mut self) {
        if let Some(Some((ra, rb))) = self.log.pop() {
            self.parent[rb] = rb;
            self.size[ra] -= self.size[rb];
        }
    }
}

struct Search<'a, C> {
    ends: Vec<(usize, usize)>,
    w: Vec<C>,
    order: Vec<usize>,
    terms: &'a [usize],
    dsu: UndoDsu,
    chosen: Vec<usize>,
    best: Option<(C, Vec<usize>)>,
}

impl<C: Cost> Search<'_, C> {
    fn connected(&self) -> bool {
        let r = self.dsu.find(self.terms[0]);
        self.terms[1..].iter().all(|&t| self.dsu.find(t) == r)
    }

    fn go(&mut self, idx: usize, cur: C) {
        if let Some((b, _)) = &self.best {
            if cur >= *b {
                return;
            }
        }
        if self.connected() {
            self.best = Some((cur, self.chosen.clone()));
            return;
        }
        if idx == self.order.len() {
            return;
        }
        let e = self.order[idx];
        let (u, v) = self.ends[e];
        // An edge inside one component never helps: some optimum is a forest.
        if self.dsu.find(u) != self.dsu.find(v) {
            self.dsu.union(u, v);
            self.chosen.push(e);
            let next = cur.plus(&self.w[e]);
            self.go(idx + 1, next);
            self.chosen.pop();
            self.dsu.undo();
        }
        self.go(idx + 1, cur);
    }
}

/// Minimum Steiner tree by enumerating edge subsets (with weight-bound pruning).
pub fn exhaustive_min_steiner<G: WeightedGraph + ?Sized>(
    g: &G,
    terminals: &[usize],
) -> Result<SteinerSolution, OracleError> {
    let m = g.edge_list().len();
    if m > EXHAUSTIVE_EDGE_CAP {
        return Err(OracleError::TooLarge { edges: m, cap: EXHAUSTIVE_EDGE_CAP });
    }
    let t = normalize_terminals(g.vertex_count(), terminals)?;
    if t.len() <= 1 {
        return Ok(SteinerSolution::empty());
    }
    let edges = if fits_u128(&g.total_weight()) {
        search::<u128, G>(g, &t)
    } else {
        search::<BigCost, G>(g, &t)
    };
    match edges {
        Some(e) => Ok(SteinerSolution::from_edges(g, tidy_forest(g, &e, &t))),
        None => {
            let comp = graph_core::graph::components_of(g.vertex_count(), g.edge_list());
            let bad = t.iter().copied().find(|&x| comp[x] != comp[t[0]]).unwrap_or(t[0]);
            Err(OracleError::Unreachable(bad))
        }
    }
}

fn search<C: Cost, G: WeightedGraph + ?Sized>(g: &G, t: &[usize]) -> Option<Vec<usize>> {
    let edges = g.edge_list();
    let w: Vec<C> = edges.iter().map(|e| C::from_weight(&e.weight)).collect();
    let mut order: Vec<usize> = (0..edges.len()).collect();
    order.sort_by(|&a, &b| w[a].cmp(&w[b]).then(a.cmp(&b)));
    let mut s = Search {
        ends: edges.iter().map(|e| (e.u, e.v)).collect(),
        w,
        order,
        terms: t,
        dsu: UndoDsu::new(g.vertex_count()),
        chosen: Vec::new(),
        best: None,
    };
    s.go(0, C::zero());
    s.best.map(|(_, e)| e)
}

/// Minimum-weight edge subset accepted by `accept`, by full enumeration.
///
/// `accept` need not be monotone; supersets are skipped only when they cannot
/// be strictly lighter.
pub fn exhaustive_min_edge_set<G, P>(g: &G, mut accept: P) -> Result<Option<SteinerSolution>, OracleError>
where
    G: WeightedGraph + ?Sized,
    P: FnMut(&[usize]) -> bool,
{
    let m = g.edge_list().len();
    if m > 22 {
        return Err(OracleError::TooLarge { edges: m, cap: 22 });
    }
    let w: Vec<BigCost> = g.edge_list().iter().map(|e| BigCost::from_weight(&e.weight)).collect();
    let mut best: Option<(BigCost, Vec<usize>)> = None;
    let mut chosen = Vec::new();
    fn rec<P: FnMut(&[usize]) -> bool>(
        i: usize,
        cur: BigCost,
        w: &[BigCost],
        chosen: &mut Vec<usize>,
        best: &mut Option<(BigCost, Vec<usize>)>,
        accept: &mut P,
    ) {
        if let Some((b, _)) = best {
            if cur >= *b {
                return;
            }
        }
        if accept(chosen) {
            *best = Some((cur.clone(), chosen.clone()));
        }
        for e in i..w.len() {
            chosen.push(e);
            rec(e + 1, cur.plus(&w[e]), w, chosen, best, accept);
            chosen.pop();
        }
    }
    rec(0, BigCost::zero(), &w, &mut chosen, &mut best, &mut accept);
    Ok(best.map(|(_, e)| SteinerSolution::from_edges(g, e)))
}
