//! Discrete intervals ⟦a,b⟧ and the dyadic edge weights of the interval grid.

use graph_core::Weight;
use serde::Serialize;

/// The integer set {a, ..., b}.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Interval {
    pub a: i64,
    pub b: i64,
}

impl Interval {
    pub fn new(a: i64, b: i64) -> Self {
        assert!(a <= b, "empty interval");
        Interval { a, b }
    }

    pub fn point(a: i64) -> Self {
        Interval { a, b: a }
    }

    pub fn size(&self) -> i64 {
        self.b - self.a + 1
    }

    pub fn contains(&self, other: &Interval) -> bool {
        self.a <= other.a && other.b <= self.b
    }

    /// Smallest interval containing both.
    pub fn join(&self, other: &Interval) -> Interval {
        Interval { a: self.a.min(other.a), b: self.b.max(other.b) }
    }
}

/// Base-2 floor logarithm with floor_log2(1) = 0.
pub fn floor_log2(x: u64) -> u32 {
    assert!(x >= 1);
    63 - x.leading_zeros()
}

/// Divisor making an edge into an interval of the given size weigh
/// `scale / divisor`: 2^floor(log2(size - 1)).
pub fn weight_divisor(size: i64) -> u64 {
    assert!(size >= 2);
    1u64 << floor_log2((size - 1) as u64)
}

/// Smallest scale keeping every edge into intervals of size <= `max_size` integral.
pub fn min_scale(max_size: i64) -> u64 {
    if max_size < 2 {
        1
    } else {
        weight_divisor(max_size)
    }
}

/// Weight of an edge whose larger endpoint has `size` elements.
pub fn edge_weight(size: i64, scale: u64) -> Weight {
    let d = weight_divisor(size);
    assert!(scale % d == 0, "scale {scale} not divisible by {d}");
    Weight::from(scale / d)
}

/// Weight of any monotone path from `p` up to `q` (requires p ⊆ q).
pub fn monotone_weight(p: &Interval, q: &Interval, scale: u64) -> Weight {
    assert!(q.contains(p));
    (p.size() + 1..=q.size()).map(|s| edge_weight(s, scale)).sum()
}

/// Closed-form distance in the infinite grid: the monotone weight for
/// comparable intervals, otherwise the two straight paths via the join.
pub fn closed_form_distance(p: &Interval, q: &Interval, scale: u64) -> Weight {
    if q.contains(p) {
        monotone_weight(p, q, scale)
    } else if p.contains(q) {
        monotone_weight(q, p, scale)
    } else {
        let j = p.join(q);
        monotone_weight(p, &j, scale) + monotone_weight(q, &j, scale)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dyadic_weights() {
        assert_eq!(edge_weight(2, 4), Weight::from(4u64));
        assert_eq!(edge_weight(3, 4), Weight::from(2u64));
        assert_eq!(edge_weight(4, 4), Weight::from(2u64));
        assert_eq!(edge_weight(5, 4), Weight::from(1u64));
        assert_eq!(min_scale(8), 4);
        assert_eq!(floor_log2(1), 0);
    }

    #[test]
    fn straight_path_to_next_vertical_weighs_one_unit() {
        for a in 0..5 {
            for b in a..a + 9 {
                let p = Interval::new(a, b);
                let q = Interval::new(a, 2 * b + 1 - a);
                assert_eq!(monotone_weight(&p, &q, 64), Weight::from(64u64), "{p:?}");
            }
        }
    }
}
