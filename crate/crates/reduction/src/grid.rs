//! Grid Tiling instances and a brute-force decider.

use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::ReductionError;

/// Largest number of row assignments `n^k` the brute force will try.
pub const BRUTEFORCE_CAP: u64 = 10_000_000;

/// `k x k` cells, each a set of pairs in `[n] x [n]`; all indices 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "RawGrid", into = "RawGrid")]
pub struct GridTilingInstance {
    pub n: usize,
    pub k: usize,
    pub cells: BTreeMap<(usize, usize), BTreeSet<(usize, usize)>>,
}

/// JSON shape: `{"n": 2, "k": 2, "cells": {"1,2": [[1, 1], [2, 1]]}}`.
#[derive(Serialize, Deserialize)]
struct RawGrid {
    n: usize,
    k: usize,
    cells: BTreeMap<String, Vec<[usize; 2]>>,
}

impl TryFrom<RawGrid> for GridTilingInstance {
    type Error = ReductionError;

    fn try_from(raw: RawGrid) -> Result<Self, Self::Error> {
        let mut g = GridTilingInstance::empty(raw.n, raw.k);
        for (key, pairs) in raw.cells {
            let (a, b) = key
                .split_once(',')
                .and_then(|(a, b)| Some((a.trim().parse().ok()?, b.trim().parse().ok()?)))
                .ok_or_else(|| ReductionError::InvalidGrid(format!("bad cell key {key:?}")))?;
            if !g.cells.contains_key(&(a, b)) {
                return Err(ReductionError::InvalidGrid(format!("cell ({a},{b}) outside [{}]^2", raw.k)));
            }
            for [x, y] in pairs {
                g.insert(a, b, x, y);
            }
        }
        g.validate()?;
        Ok(g)
    }
}

impl From<GridTilingInstance> for RawGrid {
    fn from(g: GridTilingInstance) -> Self {
        let cells = g
            .cells
            .iter()
            .map(|(&(a, b), s)| (format!("{a},{b}"), s.iter().map(|&(x, y)| [x, y]).collect()))
            .collect();
        RawGrid { n: g.n, k: g.k, cells }
    }
}

/// Values `x_a` (rows) and `y_b` (columns), 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GridSolution {
    pub x: Vec<usize>,
    pub y: Vec<usize>,
}

impl GridTilingInstance {
    /// All `k^2` cells present and empty.
    pub fn empty(n: usize, k: usize) -> Self {
        let mut cells = BTreeMap::new();
        for a in 1..=k {
            for b in 1..=k {
                cells.insert((a, b), BTreeSet::new());
            }
        }
        GridTilingInstance { n, k, cells }
    }

    pub fn insert(&mut self, a: usize, b: usize, x: usize, y: usize) {
        self.cells.entry((a, b)).or_default().insert((x, y));
    }

    pub fn cell(&self, a: usize, b: usize) -> &BTreeSet<(usize, usize)> {
        &self.cells[&(a, b)]
    }

    pub fn validate(&self) -> Result<(), ReductionError> {
        if self.n == 0 || self.k == 0 {
            return Err(ReductionError::InvalidGrid("n and k must be positive".into()));
        }
        for a in 1..=self.k {
            for b in 1..=self.k {
                let Some(cell) = self.cells.get(&(a, b)) else {
                    return Err(ReductionError::InvalidGrid(format!("cell ({a},{b}) missing")));
                };
                if let Some(&(x, y)) = cell.iter().find(|&&(x, y)| x == 0 || y == 0 || x > self.n || y > self.n) {
                    return Err(ReductionError::InvalidGrid(format!(
                        "pair ({x},{y}) in cell ({a},{b}) outside [{}]^2",
                        self.n
                    )));
                }
            }
        }
        if self.cells.len() != self.k * self.k {
            return Err(ReductionError::InvalidGrid("cell outside the k x k grid".into()));
        }
        Ok(())
    }

    /// Same instance with `n` raised to a power of two (at least 2); new values appear in no cell.
    pub fn padded(&self) -> Self {
        let mut g = self.clone();
        g.n = self.n.max(2).next_power_of_two();
        g
    }

    pub fn is_solution(&self, s: &GridSolution) -> bool {
        s.x.len() == self.k
            && s.y.len() == self.k
            && (1..=self.k).all(|a| (1..=self.k).all(|b| self.cell(a, b).contains(&(s.x[a - 1], s.y[b - 1]))))
    }

    /// Uniform random cells: each pair enters each cell with probability `density`.
    pub fn random(n: usize, k: usize, density: f64, rng: &mut ChaCha8Rng) -> Self {
        let mut g = GridTilingInstance::empty(n, k);
        for a in 1..=k {
            for b in 1..=k {
                for x in 1..=n {
                    for y in 1..=n {
                        if rng.gen_bool(density) {
                            g.insert(a, b, x, y);
                        }
                    }
                }
            }
        }
        g
    }

    /// Random cells plus a planted solution, returned alongside.
    pub fn planted(n: usize, k: usize, density: f64, rng: &mut ChaCha8Rng) -> (Self, GridSolution) {
        let mut g = Self::random(n, k, density, rng);
        let x: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=n)).collect();
        let y: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=n)).collect();
        for a in 1..=k {
            for b in 1..=k {
                g.insert(a, b, x[a - 1], y[b - 1]);
            }
        }
        (g, GridSolution { x, y })
    }
}

/// Lexicographically first solution, or `None`.
///
/// Enumerates the row values; each column value is then independent.
pub fn solve_grid_tiling_bruteforce(gt: &GridTilingInstance) -> Result<Option<GridSolution>, ReductionError> {
    gt.validate()?;
    let (n, k) = (gt.n, gt.k);
    let tries = (n as u64).checked_pow(k as u32).unwrap_or(u64::MAX);
    if tries > BRUTEFORCE_CAP {
        return Err(ReductionError::TooLarge(format!("n^k = {n}^{k} row assignments")));
    }
    let mut x = vec![1usize; k];
    loop {
        let y: Option<Vec<usize>> = (1..=k)
            .map(|b| (1..=n).find(|&yb| (1..=k).all(|a| gt.cell(a, b).contains(&(x[a - 1], yb)))))
            .collect();
        if let Some(y) = y {
            return Ok(Some(GridSolution { x, y }));
        }
        let mut i = k;
        loop {
            if i == 0 {
                return Ok(None);
            }
            i -= 1;
            if x[i] < n {
                x[i] += 1;
                break;
            }
            x[i] = 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use graph_core::random::rng_from_seed;

    fn exhaustive(gt: &GridTilingInstance) -> bool {
        let (n, k) = (gt.n, gt.k);
        let total = n.pow(2 * k as u32);
        (0..total).any(|mut code| {
            let mut vals = Vec::new();
            for _ in 0..2 * k {
                vals.push(code % n + 1);
                code /= n;
            }
            let s = GridSolution { x: vals[..k].to_vec(), y: vals[k..].to_vec() };
            gt.is_solution(&s)
        })
    }

    #[test]
    fn singleton_cell() {
        let mut g = GridTilingInstance::empty(1, 1);
        g.insert(1, 1, 1, 1);
        let s = solve_grid_tiling_bruteforce(&g).unwrap().unwrap();
        assert_eq!(s, GridSolution { x: vec![1], y: vec![1] });
    }

    #[test]
    fn all_cells_one_one() {
        let mut g = GridTilingInstance::empty(2, 2);
        for a in 1..=2 {
            for b in 1..=2 {
                g.insert(a, b, 1, 1);
            }
        }
        let s = solve_grid_tiling_bruteforce(&g).unwrap().unwrap();
        assert_eq!(s, GridSolution { x: vec![1, 1], y: vec![1, 1] });
    }

    #[test]
    fn contradictory_row() {
        // Row 1 needs x_1 = 1 in column 1 and x_1 = 2 in column 2.
        let mut g = GridTilingInstance::empty(2, 2);
        g.insert(1, 1, 1, 1);
        g.insert(1, 2, 2, 1);
        g.insert(2, 1, 1, 1);
        g.insert(2, 2, 1, 1);
        assert_eq!(solve_grid_tiling_bruteforce(&g).unwrap(), None);
        assert!(!exhaustive(&g));
    }

    #[test]
    fn agrees_with_full_enumeration() {
        let mut rng = rng_from_seed(11);
        for _ in 0..200 {
            let g = GridTilingInstance::random(2, 2, 0.45, &mut rng);
            let s = solve_grid_tiling_bruteforce(&g).unwrap();
            assert_eq!(s.is_some(), exhaustive(&g));
            if let Some(s) = s {
                assert!(g.is_solution(&s));
            }
        }
    }

    #[test]
    fn json_round_trip_and_validation() {
        let (g, _) = GridTilingInstance::planted(3, 2, 0.3, &mut rng_from_seed(2));
        let s = serde_json::to_string(&g).unwrap();
        let back: GridTilingInstance = serde_json::from_str(&s).unwrap();
        assert_eq!(g, back);
        let bad = r#"{"n": 2, "k": 1, "cells": {"1,1": [[3, 1]]}}"#;
        assert!(serde_json::from_str::<GridTilingInstance>(bad).is_err());
        let missing = r#"{"n": 2, "k": 2, "cells": {"3,1": []}}"#;
        assert!(serde_json::from_str::<GridTilingInstance>(missing).is_err());
    }

    #[test]
    fn padding() {
        assert_eq!(GridTilingInstance::empty(1, 1).padded().n, 2);
        assert_eq!(GridTilingInstance::empty(3, 1).padded().n, 4);
        assert_eq!(GridTilingInstance::empty(4, 1).padded().n, 4);
    }

    #[test]
    fn too_large() {
        let g = GridTilingInstance::empty(40, 5);
        assert!(matches!(solve_grid_tiling_bruteforce(&g), Err(ReductionError::TooLarge(_))));
    }
}
