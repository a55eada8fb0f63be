use std::collections::{BTreeMap, BTreeSet};

use crate::error::PartitionError;

/// Set partition in canonical form: blocks sorted internally and by first element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(blocks: Vec<Vec<usize>>) -> Result<Self, PartitionError> {
        let mut seen = BTreeSet::new();
        let mut out = Vec::with_capacity(blocks.len());
        for mut b in blocks {
            if b.is_empty() {
                return Err(PartitionError::EmptyBlock);
            }
            b.sort_unstable();
            b.dedup();
            for &x in &b {
                if !seen.insert(x) {
                    return Err(PartitionError::Overlap(x));
                }
            }
            out.push(b);
        }
        out.sort();
        Ok(Partition { blocks: out })
    }

    pub fn singletons(ground: &[usize]) -> Self {
        Partition::new(ground.iter().map(|&x| vec![x]).collect()).expect("distinct ground set")
    }

    pub fn single_block(ground: &[usize]) -> Self {
        if ground.is_empty() {
            return Partition { blocks: Vec::new() };
        }
        Partition::new(vec![ground.to_vec()]).expect("distinct ground set")
    }

    /// Partition of `ground` from a label per element (equal labels share a block).
    pub fn from_labels(ground: &[usize], labels: &[usize]) -> Self {
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (&x, &l) in ground.iter().zip(labels) {
            groups.entry(l).or_default().push(x);
        }
        Partition::new(groups.into_values().collect()).expect("distinct ground set")
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn ground_set(&self) -> Vec<usize> {
        let mut g: Vec<usize> = self.blocks.iter().flatten().copied().collect();
        g.sort_unstable();
        g
    }

    pub fn block_index(&self, x: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.binary_search(&x).is_ok())
    }

    pub fn same_block(&self, a: usize, b: usize) -> bool {
        match (self.block_index(a), self.block_index(b)) {
            (Some(i), Some(j)) => i == j,
            _ => false,
        }
    }

    /// Finest common coarsening over the union of both ground sets.
    pub fn join(&self, other: &Partition) -> Partition {
        let ground: BTreeSet<usize> = self.ground_set().into_iter().chain(other.ground_set()).collect();
        let ground: Vec<usize> = ground.into_iter().collect();
        let idx: BTreeMap<usize, usize> = ground.iter().enumerate().map(|(i, &x)| (x, i)).collect();
        let mut parent: Vec<usize> = (0..ground.len()).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for b in self.blocks.iter().chain(other.blocks.iter()) {
            let r = find(&mut parent, idx[&b[0]]);
            for &x in &b[1..] {
                let s = find(&mut parent, idx[&x]);
                parent[s] = r;
            }
        }
        let labels: Vec<usize> = (0..ground.len()).map(|i| find(&mut parent, i)).collect();
        Partition::from_labels(&ground, &labels)
    }

    /// Restriction to `w`, which must be a subset of the ground set.
    pub fn project(&self, w: &[usize]) -> Result<Partition, PartitionError> {
        let mut labels = Vec::with_capacity(w.len());
        for &x in w {
            labels.push(self.block_index(x).ok_or(PartitionError::NotSubset(x))?);
        }
        Ok(Partition::from_labels(w, &labels))
    }

    /// True if every block of `self` lies inside a block of `other`.
    pub fn is_finer_than(&self, other: &Partition) -> bool {
        self.blocks.iter().all(|b| {
            let i = other.block_index(b[0]);
            i.is_some() && b.iter().all(|&x| other.block_index(x) == i)
        })
    }

    /// Every partition obtained by merging blocks, in restricted-growth order.
    pub fn coarsenings(&self) -> Vec<Partition> {
        RestrictedGrowth::new(self.blocks.len())
            .map(|rgs| {
                let mut merged: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
                for (b, &l) in self.blocks.iter().zip(&rgs) {
                    merged.entry(l).or_default().extend(b.iter().copied());
                }
                Partition::new(merged.into_values().collect()).expect("merging keeps disjointness")
            })
            .collect()
    }

    /// All partitions of `ground`, in restricted-growth order.
    pub fn all(ground: &[usize]) -> impl Iterator<Item = Partition> + '_ {
        RestrictedGrowth::new(ground.len()).map(move |rgs| Partition::from_labels(ground, &rgs))
    }
}

pub fn partition_join(a: &Partition, b: &Partition) -> Partition {
    a.join(b)
}

pub fn partition_project(p: &Partition, w: &[usize]) -> Result<Partition, PartitionError> {
    p.project(w)
}

/// Restricted-growth strings of length `n` (a_0 = 0, a_i <= 1 + max prefix).
#[derive(Clone, Debug)]
pub struct RestrictedGrowth {
    cur: Vec<usize>,
    done: bool,
}

impl RestrictedGrowth {
    pub fn new(n: usize) -> Self {
        RestrictedGrowth { cur: vec![0; n], done: false }
    }
}

impl Iterator for RestrictedGrowth {
    type Item = Vec<usize>;
    fn next(&mut self) -> Option<Vec<usize>> {
        if self.done {
            return None;
        }
        let out = self.cur.clone();
        let n = self.cur.len();
        // Advance: rightmost position that can grow.
        let mut i = n;
        loop {
            if i <= 1 {
                self.done = true;
                break;
            }
            i -= 1;
            let max_prefix = self.cur[..i].iter().copied().max().unwrap_or(0);
            if self.cur[i] <= max_prefix {
                self.cur[i] += 1;
                for x in &mut self.cur[i + 1..] {
                    *x = 0;
                }
                break;
            }
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(blocks: &[&[usize]]) -> Partition {
        Partition::new(blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    #[test]
    fn bell_numbers() {
        let counts: Vec<usize> = (0..7).map(|n| RestrictedGrowth::new(n).count()).collect();
        assert_eq!(counts, vec![1, 1, 2, 5, 15, 52, 203]);
    }

    #[test]
    fn join_merges_overlapping_blocks() {
        let a = p(&[&[1, 2], &[3], &[4]]);
        let b = p(&[&[2, 3], &[5]]);
        assert_eq!(a.join(&b), p(&[&[1, 2, 3], &[4], &[5]]));
    }

    #[test]
    fn project_restricts_and_rejects_strangers() {
        let a = p(&[&[1, 2], &[3, 4]]);
        assert_eq!(a.project(&[2, 3]).unwrap(), p(&[&[2], &[3]]));
        assert_eq!(a.project(&[1, 2]).unwrap(), p(&[&[1, 2]]));
        assert_eq!(a.project(&[9]), Err(PartitionError::NotSubset(9)));
    }

    #[test]
    fn coarsenings_of_three_blocks() {
        let a = p(&[&[1], &[2], &[3, 4]]);
        let c = a.coarsenings();
        assert_eq!(c.len(), 5);
        assert!(c.iter().all(|q| a.is_finer_than(q)));
        assert_eq!(c[0], p(&[&[1, 2, 3, 4]]));
    }

    #[test]
    fn rejects_overlap() {
        assert_eq!(Partition::new(vec![vec![1], vec![1, 2]]), Err(PartitionError::Overlap(1)));
    }
}
