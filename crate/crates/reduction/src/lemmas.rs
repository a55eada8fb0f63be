//! Exhaustive checks of the VG and L-VG lemmas with Dreyfus-Wagner.

use std::collections::BTreeSet;

use graph_core::{PlanarGraph, SimpleGraph, Weight};
use oracles::{dreyfus_wagner, DwConfig, OracleError};
use rayon::prelude::*;
use serde::Serialize;

use crate::constants::Powers;
use crate::vg::{build_lvg, build_vg};
use crate::ReductionError;

/// One lemma clause: how many instances were checked, which failed, and how
/// many met their bound with equality.
#[derive(Clone, Debug, Default, Serialize)]
pub struct ClauseReport {
    pub name: String,
    pub checked: usize,
    pub tight: usize,
    pub failures: Vec<String>,
}

impl ClauseReport {
    fn named(name: &str) -> Self {
        ClauseReport { name: name.into(), ..Default::default() }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok && self.failures.len() < 20 {
            self.failures.push(what());
        }
    }

    fn absorb(&mut self, other: ClauseReport) {
        self.checked += other.checked;
        self.tight += other.tight;
        for f in other.failures {
            if self.failures.len() < 20 {
                self.failures.push(f);
            }
        }
    }

    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct LemmaReport {
    pub n: usize,
    pub l: usize,
    pub m: Weight,
    pub clauses: Vec<ClauseReport>,
    pub ok: bool,
}

/// Minimum Steiner tree weight on `terms`, or `None` if they are not connected.
///
/// `force` edges are included for free and their weight added back;
/// `drop` edges are removed.
fn min_tree(g: &PlanarGraph, terms: &[usize], force: &[usize], drop: &[usize]) -> Result<Option<Weight>, ReductionError> {
    let mut h = SimpleGraph::new(g.vertex_count());
    let mut extra = Weight::zero();
    let mut t = terms.to_vec();
    for (i, e) in g.edges().iter().enumerate() {
        if drop.contains(&i) {
            continue;
        }
        if force.contains(&i) {
            h.add_edge(e.u, e.v, Weight::zero());
            extra += &e.weight;
            t.extend([e.u, e.v]);
        } else {
            h.add_edge(e.u, e.v, e.weight.clone());
        }
    }
    match dreyfus_wagner(&h, &t, &DwConfig::default()) {
        Ok(s) => Ok(Some(s.weight + extra)),
        Err(OracleError::Unreachable(_)) => Ok(None),
        Err(e) => Err(e.into()),
    }
}

fn at_least(x: &Option<Weight>, bound: &Weight) -> bool {
    x.as_ref().map_or(true, |w| w >= bound)
}

fn show(x: &Option<Weight>) -> String {
    x.as_ref().map_or("unreachable".into(), |w| w.to_string())
}

fn subsets(n: usize) -> Vec<BTreeSet<usize>> {
    (0..1usize << n).map(|mask| (1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect()).collect()
}

/// All four VG clauses for one S; returns reports in clause order.
fn vg_for_set(n: usize, s: &BTreeSet<usize>, m: &Weight) -> Result<[ClauseReport; 4], ReductionError> {
    let gad = build_vg(n, s, m)?;
    let (g, p) = (&gad.graph, &gad.portals);
    let pw = Powers::new(m);
    let nu = n as u64;
    let f1 = pw.combo(&[(1, 5), (nu - 1, 4), (nu, 3)], &[]);
    let f1_slack = &f1 + pw.m(2);
    let sel = |i: usize| p.selectors.iter().find(|x| x.0 == i).map(|x| x.1);
    let mut r = [ClauseReport::named("vg(i)"), ClauseReport::named("vg(ii)"), ClauseReport::named("vg(iii)"), ClauseReport::named("vg(iv)")];
    for i in 1..=n {
        let (y, z) = (p.y[i - 1], p.z[i - 1]);
        if let Some(e) = sel(i) {
            let v = min_tree(g, &[y, z, p.w], &[e], &[])?;
            r[0].check(v.as_ref() == Some(&f1), || format!("S={s:?} i={i}: {} != {f1}", show(&v)));
            r[0].tight += 1;
        }
        let base = pw.combo(&[(nu - 1, 4), (i as u64, 2), (i as u64, 3)], &[]);
        let v = min_tree(g, &[y, z], &[], &[])?;
        r[2].check(v.as_ref() == Some(&base), || format!("S={s:?} i={i}: {} != {base}", show(&v)));
        for j in 1..=n {
            let zj = p.z[j - 1];
            let v = min_tree(g, &[y, zj, p.w], &[], &[])?;
            r[1].check(at_least(&v, &f1), || format!("S={s:?} i={i} j={j}: {} < {f1}", show(&v)));
            if v.as_ref() == Some(&f1) {
                r[1].tight += 1;
            }
            // Any subgraph lighter than f1 + M_2 has i = j and only the i-selector.
            for &(si, e) in &p.selectors {
                if si != i || i != j {
                    let v = min_tree(g, &[y, zj, p.w], &[e], &[])?;
                    r[1].check(at_least(&v, &f1_slack), || {
                        format!("S={s:?} i={i} j={j} with selector {si}: {} < {f1_slack}", show(&v))
                    });
                }
            }
            if i == j {
                if let Some(e) = sel(i) {
                    let v = min_tree(g, &[y, zj, p.w], &[], &[e])?;
                    r[1].check(at_least(&v, &f1_slack), || {
                        format!("S={s:?} i={i} without its selector: {} < {f1_slack}", show(&v))
                    });
                }
            }
            let bound = &pw.combo(&[(nu - 1, 4), (i as u64, 2), (i as u64, 3)], &[])
                + &(pw.m(3) * (2 * j.saturating_sub(i) as u64));
            let v = min_tree(g, &[y, zj], &[], &[])?;
            r[3].check(at_least(&v, &bound), || format!("S={s:?} i={i} j={j}: {} < {bound}", show(&v)));
            if v.as_ref() == Some(&bound) {
                r[3].tight += 1;
            }
        }
    }
    Ok(r)
}

/// Both L-VG clauses for one family of sets.
fn lvg_for_family(n: usize, sets: &[BTreeSet<usize>], m: &Weight) -> Result<[ClauseReport; 2], ReductionError> {
    let gad = build_lvg(n, sets, m)?;
    let (g, p) = (&gad.graph, &gad.portals);
    let pw = Powers::new(m);
    let (nu, lu) = (n as u64, sets.len() as u64);
    let fl = pw.combo(&[(lu, 5), (lu * (nu - 1), 4), (nu, 3), (1, 2)], &[]);
    let all_selectors: Vec<(usize, usize, usize)> = p
        .gadgets
        .iter()
        .enumerate()
        .flat_map(|(l, vg)| vg.selectors.iter().map(move |&(i, e)| (l + 1, i, e)))
        .collect();
    let sel = |l: usize, i: usize| all_selectors.iter().find(|x| x.0 == l && x.1 == i).map(|x| x.2);
    let mut r = [ClauseReport::named("lvg(i)"), ClauseReport::named("lvg(ii)")];
    for l in 1..=sets.len() {
        let w = p.w[l - 1];
        for i in 1..=n {
            let pi = p.p[i - 1];
            if let Some(e) = sel(l, i) {
                let v = min_tree(g, &[pi, p.q[i - 1], w], &[e], &[])?;
                r[0].check(v.as_ref() == Some(&fl), || format!("S={sets:?} l={l} i={i}: {} != {fl}", show(&v)));
                r[0].tight += 1;
            }
            for j in 1..=n {
                let qj = p.q[j - 1];
                let v = min_tree(g, &[pi, qj, w], &[], &[])?;
                let attained = v.as_ref() == Some(&fl);
                let expect = i == j && sel(l, i).is_some();
                r[1].check(at_least(&v, &fl) && attained == expect, || {
                    format!("S={sets:?} l={l} i={i} j={j}: min {} vs {fl}", show(&v))
                });
                if attained {
                    r[1].tight += 1;
                }
                if i != j {
                    continue;
                }
                // Equality forces exactly the i-selector at w[l].
                for &(sl, si, e) in &all_selectors {
                    if (sl, si) != (l, i) {
                        let v = min_tree(g, &[pi, qj, w], &[e], &[])?;
                        r[1].check(v.as_ref().map_or(true, |x| *x > fl), || {
                            format!("S={sets:?} l={l} i={i} with selector ({sl},{si}): {} <= {fl}", show(&v))
                        });
                    }
                }
                if let Some(e) = sel(l, i) {
                    let v = min_tree(g, &[pi, qj, w], &[], &[e])?;
                    r[1].check(v.as_ref().map_or(true, |x| *x > fl), || {
                        format!("S={sets:?} l={l} i={i} without its selector: {} <= {fl}", show(&v))
                    });
                }
            }
        }
    }
    Ok(r)
}

/// Checks every clause of both gadget lemmas over all `S` (and all families
/// of `l` sets) for gadgets of size `n`.
pub fn verify_gadget_lemmas(n: usize, l: usize, m: &Weight) -> Result<LemmaReport, ReductionError> {
    if n == 0 || l == 0 {
        return Err(ReductionError::BadParameters("N and L must be positive".into()));
    }
    if n > 4 || l > 2 {
        return Err(ReductionError::TooLarge(format!("N = {n}, L = {l}; at most N = 4, L = 2")));
    }
    if *m <= Weight::from((10 * n * l) as u64) {
        return Err(ReductionError::BadParameters(format!("M = {m} must exceed 10 N L = {}", 10 * n * l)));
    }
    let sets = subsets(n);
    let vg: Vec<[ClauseReport; 4]> = sets.par_iter().map(|s| vg_for_set(n, s, m)).collect::<Result<_, _>>()?;
    let families: Vec<Vec<BTreeSet<usize>>> = (0..sets.len().pow(l as u32))
        .map(|mut code| {
            (0..l)
                .map(|_| {
                    let s = sets[code % sets.len()].clone();
                    code /= sets.len();
                    s
                })
                .collect()
        })
        .collect();
    let lvg: Vec<[ClauseReport; 2]> = families.par_iter().map(|f| lvg_for_family(n, f, m)).collect::<Result<_, _>>()?;
    let mut clauses: Vec<ClauseReport> = ["vg(i)", "vg(ii)", "vg(iii)", "vg(iv)", "lvg(i)", "lvg(ii)"]
        .iter()
        .map(|s| ClauseReport::named(s))
        .collect();
    for r in vg {
        for (c, x) in clauses.iter_mut().zip(r) {
            c.absorb(x);
        }
    }
    for r in lvg {
        for (c, x) in clauses[4..].iter_mut().zip(r) {
            c.absorb(x);
        }
    }
    let ok = clauses.iter().all(ClauseReport::ok);
    Ok(LemmaReport { n, l, m: m.clone(), clauses, ok })
}

/// The smallest base weight the lemmas are stated for, `10 N L + 1`.
pub fn default_base(n: usize, l: usize) -> Weight {
    Weight::from((10 * n * l + 1) as u64)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn vg_examples_n2() {
        let m = Weight::from(41u64);
        let pw = Powers::new(&m);
        let g = build_vg(2, &[1, 2].into_iter().collect(), &m).unwrap();
        let p = &g.portals;
        let v = min_tree(&g.graph, &[p.y[0], p.z[0], p.w], &[], &[]).unwrap().unwrap();
        assert_eq!(v, pw.combo(&[(1, 5), (1, 4), (2, 3)], &[]));
        let v = min_tree(&g.graph, &[p.y[1], p.z[1]], &[], &[]).unwrap().unwrap();
        assert_eq!(v, pw.combo(&[(1, 4), (2, 2), (2, 3)], &[]));
        let v = min_tree(&g.graph, &[p.y[0], p.z[1]], &[], &[]).unwrap().unwrap();
        assert!(v >= pw.combo(&[(1, 4), (1, 2), (3, 3)], &[]));
    }

    #[test]
    fn lemmas_hold_small() {
        let r = verify_gadget_lemmas(2, 1, &default_base(2, 1)).unwrap();
        assert!(r.ok, "{r:?}");
        assert!(r.clauses.iter().all(|c| c.checked > 0));
    }

    #[test]
    fn bounds_enforced() {
        assert!(matches!(verify_gadget_lemmas(5, 1, &Weight::from(1000u64)), Err(ReductionError::TooLarge(_))));
        assert!(verify_gadget_lemmas(2, 2, &Weight::from(40u64)).is_err());
    }
}
