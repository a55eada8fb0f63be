//! Bridges and cut vertices by iterative low-link search.

use graph_core::PlanarGraph;

struct LowLink {
    disc: Vec<usize>,
    low: Vec<usize>,
    bridges: Vec<usize>,
    cut: Vec<bool>,
}

fn lowlink(g: &PlanarGraph) -> LowLink {
    let n = g.vertex_count();
    let adj = g.adjacency();
    let mut s = LowLink { disc: vec![usize::MAX; n], low: vec![0; n], bridges: Vec::new(), cut: vec![false; n] };
    let mut time = 0;
    for root in 0..n {
        if s.disc[root] != usize::MAX {
            continue;
        }
        // (vertex, parent edge, next neighbor index)
        let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        s.disc[root] = time;
        s.low[root] = time;
        time += 1;
        let mut root_children = 0;
        while let Some(top) = stack.last_mut() {
            let (x, pe) = (top.0, top.1);
            if top.2 < adj[x].len() {
                let (y, e) = adj[x][top.2];
                top.2 += 1;
                if e == pe {
                    continue;
                }
                if s.disc[y] == usize::MAX {
                    s.disc[y] = time;
                    s.low[y] = time;
                    time += 1;
                    if x == root {
                        root_children += 1;
                    }
                    stack.push((y, e, 0));
                } else {
                    s.low[x] = s.low[x].min(s.disc[y]);
                }
            } else {
                stack.pop();
                if let Some(&(p, _, _)) = stack.last() {
                    s.low[p] = s.low[p].min(s.low[x]);
                    if s.low[x] > s.disc[p] {
                        s.bridges.push(pe);
                    }
                    if p != root && s.low[x] >= s.disc[p] {
                        s.cut[p] = true;
                    }
                }
            }
        }
        if root_children > 1 {
            s.cut[root] = true;
        }
    }
    s.bridges.sort_unstable();
    s
}

/// Sorted ids of bridge edges.
pub fn bridges(g: &PlanarGraph) -> Vec<usize> {
    lowlink(g).bridges
}

pub fn cut_vertices(g: &PlanarGraph) -> Vec<usize> {
    let s = lowlink(g);
    (0..g.vertex_count()).filter(|&v| s.cut[v]).collect()
}

/// Connected, at least three vertices, and no cut vertex.
pub fn is_biconnected(g: &PlanarGraph) -> bool {
    g.vertex_count() >= 3 && g.is_connected() && cut_vertices(g).is_empty()
}
