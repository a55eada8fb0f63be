//! Non-crossing value sequences.
//!
//! A sequence is non-crossing when no indices i < j < k < l carry a pattern
//! a b a b with a != b.  It is minimal when no value repeats three times in a
//! row.  Both properties are closed under taking prefixes.

use serde::Serialize;

pub fn is_noncrossing(seq: &[u8]) -> bool {
    (1..=seq.len()).all(|l| !closes_crossing(&seq[..l - 1], seq[l - 1]))
}

pub fn is_minimal(seq: &[u8]) -> bool {
    !seq.windows(3).any(|w| w[0] == w[1] && w[1] == w[2])
}

/// True if appending `c` to the non-crossing `prefix` creates a crossing:
/// some `c` sits strictly between two occurrences of another value.
fn closes_crossing(prefix: &[u8], c: u8) -> bool {
    let mut first = [usize::MAX; 256];
    let mut last = [0usize; 256];
    for (i, &v) in prefix.iter().enumerate() {
        if first[v as usize] == usize::MAX {
            first[v as usize] = i;
        }
        last[v as usize] = i;
    }
    prefix.iter().enumerate().any(|(j, &v)| {
        v == c
            && (0..256).any(|a| a != c as usize && first[a] != usize::MAX && first[a] < j && last[a] > j)
    })
}

/// Every non-crossing sequence of length `len` over values `0..l`.
pub fn noncrossing_sequences(l: usize, len: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(len);
    fn rec(l: usize, len: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for c in 0..l as u8 {
            if !closes_crossing(cur, c) {
                cur.push(c);
                rec(l, len, cur, out);
                cur.pop();
            }
        }
    }
    if l > 0 || len == 0 {
        rec(l, len, &mut cur, &mut out);
    }
    out
}

/// Minimal non-crossing sequences over `1..=l` that use every value.
pub fn enumerate_minimal_noncrossing(l: usize) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    walk_minimal(l, false, 4 * l, &mut |s| {
        if distinct(s) == l {
            out.push(s.iter().map(|&v| v + 1).collect());
        }
    });
    out
}

fn distinct(s: &[u8]) -> usize {
    let mut seen = [false; 256];
    s.iter().filter(|&&v| !std::mem::replace(&mut seen[v as usize], true)).count()
}

/// Depth-first walk over minimal non-crossing sequences up to `max_len`.
/// With `canonical`, values appear in order of first occurrence.
fn walk_minimal(l: usize, canonical: bool, max_len: usize, f: &mut dyn FnMut(&[u8])) {
    let mut cur = Vec::new();
    fn rec(l: usize, canonical: bool, max_len: usize, cur: &mut Vec<u8>, f: &mut dyn FnMut(&[u8])) {
        if !cur.is_empty() {
            f(cur);
        }
        if cur.len() == max_len {
            return;
        }
        let limit = if canonical {
            (cur.iter().copied().max().map_or(0, |m| m as usize + 1) + 1).min(l)
        } else {
            l
        };
        for c in 0..limit as u8 {
            let n = cur.len();
            if n >= 2 && cur[n - 1] == c && cur[n - 2] == c {
                continue;
            }
            if closes_crossing(cur, c) {
                continue;
            }
            cur.push(c);
            rec(l, canonical, max_len, cur, f);
            cur.pop();
        }
    }
    rec(l, canonical, max_len, &mut cur, f);
}

/// Replaces each maximal run of length >= 3 by a run of two.
/// Returns the minimal sequence and the original run length of each kept run.
pub fn collapse_to_minimal(seq: &[u8]) -> (Vec<u8>, Vec<usize>) {
    let mut min = Vec::new();
    let mut runs = Vec::new();
    let mut i = 0;
    while i < seq.len() {
        let mut j = i;
        while j < seq.len() && seq[j] == seq[i] {
            j += 1;
        }
        let len = j - i;
        min.extend(std::iter::repeat(seq[i]).take(len.min(2)));
        runs.push(len);
        i = j;
    }
    (min, runs)
}

/// Inverse of [`collapse_to_minimal`]: stretches each run to its recorded length.
pub fn expand_minimal(min: &[u8], runs: &[usize]) -> Option<Vec<u8>> {
    let mut out = Vec::new();
    let mut i = 0;
    for &len in runs {
        if i >= min.len() {
            return None;
        }
        let v = min[i];
        let kept = if i + 1 < min.len() && min[i + 1] == v { 2 } else { 1 };
        if (kept == 1 && len != 1) || (kept == 2 && len < 2) {
            return None;
        }
        out.extend(std::iter::repeat(v).take(len));
        i += kept;
    }
    (i == min.len()).then_some(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct NonCrossingReport {
    pub l: usize,
    pub bound: usize,
    /// Longest minimal sequence using exactly `l` values.
    pub max_length: usize,
    /// Minimal sequences using exactly `l` values, counted with all labelings.
    pub count: u64,
    /// Same, up to relabeling.
    pub canonical_count: u64,
    /// Whether a sequence of length bound + 1 exists (it must not).
    pub exceeded: bool,
    pub ok: bool,
}

/// Walks all minimal non-crossing sequences up to length 4l + 1 (up to
/// relabeling) and confirms none longer than 4l exists.
pub fn verify_noncrossing_bound(l: usize) -> NonCrossingReport {
    let bound = 4 * l;
    let mut max_length = 0;
    let mut canonical_count = 0u64;
    let mut exceeded = false;
    walk_minimal(l, true, bound + 1, &mut |s| {
        if s.len() > bound {
            exceeded = true;
        }
        if distinct(s) == l {
            canonical_count += 1;
            max_length = max_length.max(s.len());
        }
    });
    let fact: u64 = (1..=l as u64).product();
    NonCrossingReport {
        l,
        bound,
        max_length,
        count: canonical_count * fact,
        canonical_count,
        exceeded,
        ok: !exceeded && max_length <= bound,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn single_value() {
        assert_eq!(enumerate_minimal_noncrossing(1), vec![vec![1], vec![1, 1]]);
    }

    #[test]
    fn crossing_pattern_detected() {
        assert!(!is_noncrossing(&[0, 1, 0, 1]));
        assert!(is_noncrossing(&[0, 1, 1, 0]));
        assert!(is_noncrossing(&[0, 0, 0, 0]));
        assert!(!is_noncrossing(&[2, 0, 1, 2, 0, 1]));
    }

    #[test]
    fn collapse_and_expand_round_trip() {
        let s = [0u8, 0, 0, 1, 0, 0, 2, 2, 2, 2];
        let (m, runs) = collapse_to_minimal(&s);
        assert_eq!(m, vec![0, 0, 1, 0, 0, 2, 2]);
        assert_eq!(runs, vec![3, 1, 2, 4]);
        assert_eq!(expand_minimal(&m, &runs).unwrap(), s.to_vec());
        assert!(expand_minimal(&m, &[1, 1, 2, 4]).is_none());
    }

    #[test]
    fn counts_match_literal_filter_for_short_lengths() {
        for l in 1..=3 {
            for len in 0..=6 {
                let fast = noncrossing_sequences(l, len).len();
                let mut slow = 0;
                let total = l.pow(len as u32);
                for mut code in 0..total {
                    let mut s = Vec::new();
                    for _ in 0..len {
                        s.push((code % l) as u8);
                        code /= l;
                    }
                    if is_noncrossing(&s) {
                        slow += 1;
                    }
                }
                assert_eq!(fast, slow, "l={l} len={len}");
            }
        }
    }
}
