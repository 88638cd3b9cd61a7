//! k-coverage under the Hamming distance.
//!
//! The prefix sweep keeps the positions `i` with `lcp_k(0,i) ≥ ℓ` in a
//! linked list. Adjacent pairs `(i, j)` with `j − i < ℓ` (overlapping) are
//! aggregated into a single gap sum; the remaining pairs sit in buckets
//! keyed by gap and each contributes exactly `ℓ` covered positions, so
//!
//! ```text
//! Covered(T[0,ℓ−1]) = sum(overlapping gaps) + ℓ · #non-overlapping pairs
//! ```
//!
//! Every step is amortized `O(1)`, giving `O(n)` for all prefixes once the
//! `PREF_k` table is known. Running the same sweep on row `a` of the
//! all-pairs `lcp_k` table gives the coverage of every factor starting at
//! `a`.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::lcpk::{lcp_k_all_pairs, pref_k, LcpKTable, PrefKTable};
use crate::penalty::Cost;
use crate::report::{FactorCoverage, ThresholdReport};
use crate::text::{border_lengths, pad_for_seed, Text};

const NIL: usize = usize::MAX;

/// Snapshot handed to sweep observers after each prefix length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepStep {
    pub len: usize,
    pub overlapping_sum: usize,
    pub non_overlapping: usize,
    pub coverage: usize,
    /// Adjacent pairs created so far, including the initial `n`.
    pub pairs_created: usize,
}

/// Live positions, the overlapping/non-overlapping pair stores and the
/// bucketed non-overlapping pairs. A pair is identified by its left element.
struct SweepState {
    len: usize,
    prev: Vec<usize>,
    next: Vec<usize>,
    bucket_head: Vec<usize>,
    bucket_prev: Vec<usize>,
    bucket_next: Vec<usize>,
    in_bucket: Vec<bool>,
    overlapping_sum: usize,
    non_overlapping: usize,
    pairs_created: usize,
}

impl SweepState {
    /// List `0..=n` (with sentinel `n`) at `ℓ = 1`: every pair has gap 1 and
    /// is non-overlapping.
    fn new(n: usize) -> Self {
        let mut s = Self {
            len: 1,
            prev: (0..=n).map(|i| if i == 0 { NIL } else { i - 1 }).collect(),
            next: (0..=n).map(|i| if i == n { NIL } else { i + 1 }).collect(),
            bucket_head: vec![NIL; n + 2],
            bucket_prev: vec![NIL; n + 1],
            bucket_next: vec![NIL; n + 1],
            in_bucket: vec![false; n + 1],
            overlapping_sum: 0,
            non_overlapping: 0,
            pairs_created: 0,
        };
        for i in 0..n {
            s.insert_pair(i, i + 1);
        }
        s
    }

    fn coverage(&self) -> usize {
        self.overlapping_sum + self.non_overlapping * self.len
    }

    fn insert_pair(&mut self, i: usize, j: usize) {
        self.pairs_created += 1;
        let gap = j - i;
        if gap < self.len {
            self.overlapping_sum += gap;
        } else {
            let head = self.bucket_head[gap];
            self.bucket_next[i] = head;
            self.bucket_prev[i] = NIL;
            if head != NIL {
                self.bucket_prev[head] = i;
            }
            self.bucket_head[gap] = i;
            self.in_bucket[i] = true;
            self.non_overlapping += 1;
        }
    }

    fn unlink_from_bucket(&mut self, i: usize, gap: usize) {
        let (p, q) = (self.bucket_prev[i], self.bucket_next[i]);
        if p == NIL {
            self.bucket_head[gap] = q;
        } else {
            self.bucket_next[p] = q;
        }
        if q != NIL {
            self.bucket_prev[q] = p;
        }
        self.in_bucket[i] = false;
    }

    fn remove_pair(&mut self, i: usize, j: usize) {
        let gap = j - i;
        if self.in_bucket[i] {
            self.unlink_from_bucket(i, gap);
            self.non_overlapping -= 1;
        } else {
            self.overlapping_sum -= gap;
        }
    }

    /// Removes live position `q`; the sentinel is never removed.
    fn remove_position(&mut self, q: usize) {
        let (q1, q2) = (self.prev[q], self.next[q]);
        debug_assert!(q2 != NIL);
        if q1 != NIL {
            self.remove_pair(q1, q);
            self.next[q1] = q2;
        }
        self.remove_pair(q, q2);
        self.prev[q2] = q1;
        if q1 != NIL {
            self.insert_pair(q1, q2);
        }
    }

    /// `ℓ → ℓ+1`: pairs with gap exactly `ℓ` become overlapping.
    fn advance(&mut self) {
        let gap = self.len;
        let mut i = self.bucket_head[gap];
        while i != NIL {
            let nxt = self.bucket_next[i];
            self.in_bucket[i] = false;
            self.non_overlapping -= 1;
            self.overlapping_sum += gap;
            i = nxt;
        }
        self.bucket_head[gap] = NIL;
        self.len += 1;
    }
}

/// Coverage of every length `ℓ = 0..=max_len` of the subject whose
/// approximate occurrences are `{ i : lens[i] ≥ ℓ }`.
///
/// `lens` is `PREF_k` for prefixes, or row `a` of the `lcp_k` table for
/// factors starting at `a` (then `max_len = n − a`).
pub fn coverage_sweep(
    lens: &[u32],
    max_len: usize,
    mut observer: impl FnMut(&SweepStep),
) -> Vec<usize> {
    let n = lens.len();
    let mut out = vec![0usize; max_len + 1];
    if n == 0 || max_len == 0 {
        return out;
    }
    // removal schedule: positions bucketed by their length value
    let mut start = vec![0usize; n + 2];
    for &v in lens {
        start[(v as usize).min(n) + 1] += 1;
    }
    for v in 1..start.len() {
        start[v] += start[v - 1];
    }
    let mut order = vec![0usize; n];
    let mut fill = start.clone();
    for (i, &v) in lens.iter().enumerate() {
        let v = (v as usize).min(n);
        order[fill[v]] = i;
        fill[v] += 1;
    }
    let scheduled = |v: usize| &order[start[v]..start[v + 1]];

    let mut st = SweepState::new(n);
    for &q in scheduled(0) {
        st.remove_position(q);
    }
    for len in 1..=max_len {
        if len > 1 {
            for &q in scheduled(len - 1) {
                st.remove_position(q);
            }
            st.advance();
        }
        debug_assert_eq!(st.len, len);
        out[len] = st.coverage();
        observer(&SweepStep {
            len,
            overlapping_sum: st.overlapping_sum,
            non_overlapping: st.non_overlapping,
            coverage: out[len],
            pairs_created: st.pairs_created,
        });
    }
    out
}

/// `Covered_k^Ham(T[0,ℓ−1], T)` for `ℓ = 0..=n` (entry 0 is 0).
pub fn prefix_coverage(t: &Text, pref: &PrefKTable) -> Result<Vec<usize>> {
    if pref.len() != t.len() {
        return Err(Error::TableLength { expected: t.len(), got: pref.len() });
    }
    Ok(coverage_sweep(pref.values(), t.len(), |_| {}))
}

fn coverage_rows(table: &LcpKTable, rows: std::ops::Range<usize>) -> FactorCoverage {
    let n = table.len();
    let mut cells = vec![0u32; n * n];
    cells
        .par_chunks_mut(n.max(1))
        .enumerate()
        .filter(|(a, _)| rows.contains(a))
        .for_each(|(a, row)| {
            let cov = coverage_sweep(table.row(a), n - a, |_| {});
            for b in a..n {
                row[b] = cov[b - a + 1] as u32;
            }
        });
    FactorCoverage::from_cells(n, cells)
}

/// Hamming k-coverage of every factor, `O(n²)` in total.
pub fn factor_coverage_all(t: &Text, k: usize) -> FactorCoverage {
    let table = lcp_k_all_pairs(t, k);
    coverage_rows(&table, 0..t.len())
}

/// For every distinct proper factor, the least `ℓ ≤ k` for which it is an
/// `ℓ`-approximate cover.
pub fn k_restricted_covers(t: &Text, k: usize) -> ThresholdReport {
    let n = t.len();
    let tables: Vec<FactorCoverage> = (0..=k).map(|l| factor_coverage_all(t, l)).collect();
    let candidates = (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).filter(|&(a, b)| b - a + 1 < n);
    ThresholdReport::group(t.symbols(), candidates, |a, b| {
        tables.iter().position(|tab| tab.get(a, b) == n).map(|l| l as Cost)
    })
}

/// For every distinct factor `C` with `2|C| ≤ n`, the least `ℓ ≤ k` for
/// which it is an `ℓ`-approximate seed, i.e. an `ℓ`-approximate cover of
/// `◇ⁿ T ◇ⁿ`.
pub fn k_restricted_seeds(t: &Text, k: usize) -> ThresholdReport {
    let n = t.len();
    let padded = pad_for_seed(t);
    let tables: Vec<FactorCoverage> = (0..=k)
        .map(|l| coverage_rows(&lcp_k_all_pairs(&padded, l), n..2 * n))
        .collect();
    let candidates = (0..n)
        .flat_map(|a| (a..n).map(move |b| (a, b)))
        .filter(|&(a, b)| 2 * (b - a + 1) <= n);
    ThresholdReport::group(t.symbols(), candidates, |a, b| {
        tables
            .iter()
            .position(|tab| tab.get(n + a, n + b) == 3 * n)
            .map(|l| l as Cost)
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnhancedCover {
    pub start: usize,
    pub len: usize,
    pub coverage: usize,
}

/// Keeps the better of two candidates: more coverage, then shorter, then
/// further left.
fn better(best: Option<EnhancedCover>, cand: EnhancedCover) -> Option<EnhancedCover> {
    match best {
        Some(b) if (b.coverage, std::cmp::Reverse(b.len), std::cmp::Reverse(b.start))
            >= (cand.coverage, std::cmp::Reverse(cand.len), std::cmp::Reverse(cand.start)) =>
        {
            Some(b)
        }
        _ => Some(cand),
    }
}

/// The proper border of `t` with maximal k-coverage.
pub fn enhanced_cover_exact_border(t: &Text, k: usize) -> Option<EnhancedCover> {
    let cov = coverage_sweep(pref_k(t, k).values(), t.len(), |_| {});
    border_lengths(t.symbols())
        .into_iter()
        .map(|len| EnhancedCover { start: 0, len, coverage: cov[len] })
        .fold(None, better)
}

/// The proper factor that is a k-approximate border (within `k` mismatches
/// of both the prefix and the suffix of its length) with maximal
/// k-coverage.
pub fn enhanced_cover_approx_border(t: &Text, k: usize) -> Option<EnhancedCover> {
    let n = t.len();
    let table = lcp_k_all_pairs(t, k);
    let cov = coverage_rows(&table, 0..n);
    let mut best = None;
    for a in 0..n {
        for len in 1..(n - a + 1).min(n) {
            if table.get(a, 0) >= len && table.get(a, n - len) >= len {
                let cand = EnhancedCover { start: a, len, coverage: cov.get(a, a + len - 1) };
                best = better(best, cand);
            }
        }
    }
    best
}
