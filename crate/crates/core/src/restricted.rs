//! Restricted approximate covers and seeds under weighted edit distance.
//!
//! For a factor `C = T[a,b]`, `Q_{a,b}[i]` is the least threshold at which
//! the approximate occurrences of `C` tile `T[i, n−1]`; `Q_{a,b}[0]` is the
//! factor's cover threshold. Seeds are covers of `◇ⁿ T ◇ⁿ`.

use std::collections::{HashMap, HashSet};

use rayon::prelude::*;

use crate::edit::SpecialPointIndex;
use crate::error::{Error, Result};
use crate::penalty::{edit_distance_row, Cost, PenaltyMatrix, INF};
use crate::report::ThresholdReport;
use crate::text::{pad_for_seed, Symbol, Text};

/// `Q_{a,b}[0..=n]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QTable {
    pub a: usize,
    pub b: usize,
    values: Vec<Cost>,
}

impl QTable {
    pub fn values(&self) -> &[Cost] {
        &self.values
    }

    pub fn get(&self, i: usize) -> Cost {
        self.values[i]
    }

    /// `Q[0]`: the cover threshold of the factor.
    pub fn threshold(&self) -> Cost {
        self.values[0]
    }
}

fn check_factor(n: usize, a: usize, b: usize) -> Result<()> {
    if b >= n {
        return Err(Error::IndexOutOfRange { index: b, bound: n.saturating_sub(1) });
    }
    if a > b {
        return Err(Error::IndexOutOfRange { index: a, bound: b });
    }
    Ok(())
}

/// Quadratic dynamic program over all occurrences `T[i,j]`; the row
/// `D_{a,i}[b,·]` is recomputed for every `i`.
pub fn q_table_quadratic(t: &Text, a: usize, b: usize, p: &PenaltyMatrix) -> Result<QTable> {
    check_factor(t.len(), a, b)?;
    p.check_text(t)?;
    Ok(q_quadratic(t.symbols(), a, b, p))
}

pub(crate) fn q_quadratic(s: &[Symbol], a: usize, b: usize, p: &PenaltyMatrix) -> QTable {
    let n = s.len();
    let pattern = &s[a..=b];
    let mut q = vec![INF; n + 1];
    q[n] = 0;
    for i in (0..n).rev() {
        let row = edit_distance_row(pattern, &s[i..], p);
        let mut best = INF;
        let mut min_q = INF;
        for j in i..n {
            min_q = min_q.min(q[j + 1]);
            best = best.min(row[j - i + 1].max(min_q));
        }
        q[i] = best;
    }
    QTable { a, b, values: q }
}

/// Range minima over a table filled from right to left.
///
/// `RM[p][i]` is the minimum of `[i, i + 2^p − 1]`; entry `i` and all its
/// levels are written when `i` is materialized.
#[derive(Debug, Clone)]
pub struct RMTable {
    len: usize,
    first: usize,
    levels: Vec<Vec<Cost>>,
}

impl RMTable {
    pub fn new(len: usize) -> Self {
        let depth = (usize::BITS - len.leading_zeros()).max(1) as usize;
        Self { len, first: len, levels: vec![vec![INF; len]; depth] }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Lowest materialized index (`len` when none).
    pub fn first(&self) -> usize {
        self.first
    }

    /// Materializes entry `i`, which must be the next index to the left.
    pub fn build_step(&mut self, i: usize, value: Cost) -> Result<()> {
        if self.first == 0 || i != self.first - 1 {
            return Err(Error::IndexOutOfRange { index: i, bound: self.first.saturating_sub(1) });
        }
        self.levels[0][i] = value;
        let mut p = 1;
        while p < self.levels.len() && i + (1 << p) <= self.len {
            let half = 1 << (p - 1);
            self.levels[p][i] = self.levels[p - 1][i].min(self.levels[p - 1][i + half]);
            p += 1;
        }
        self.first = i;
        Ok(())
    }

    /// Minimum over `[i, j]`.
    pub fn query(&self, i: usize, j: usize) -> Result<Cost> {
        if i < self.first || j >= self.len || i > j {
            return Err(Error::Unmaterialized { from: i, to: j });
        }
        Ok(self.min(i, j))
    }

    #[inline]
    fn min(&self, i: usize, j: usize) -> Cost {
        let p = (usize::BITS - 1 - (j - i + 1).leading_zeros()) as usize;
        self.levels[p][i].min(self.levels[p][j + 1 - (1 << p)])
    }
}

/// `Q_{a,b}` from the special-point index in `O(n·M log n)`.
pub fn q_table_fast(
    t: &Text,
    a: usize,
    b: usize,
    p: &PenaltyMatrix,
    idx: &SpecialPointIndex,
) -> Result<QTable> {
    if !idx.matches(t, p) {
        return Err(Error::IndexMismatch);
    }
    check_factor(t.len(), a, b)?;
    Ok(q_fast(idx, a, b))
}

pub(crate) fn q_fast(idx: &SpecialPointIndex, a: usize, b: usize) -> QTable {
    let n = idx.text_len();
    let m = idx.block_size();
    let bi = b as isize;
    let mut q = vec![INF; n + 1];
    let mut rm = RMTable::new(n + 1);
    q[n] = 0;
    rm.build_step(n, 0).expect("rightmost entry");
    for i in (0..n).rev() {
        let mut best = INF;
        if b - a + 1 < m {
            let mut min_q = INF;
            for j in i..(i + m - 1).min(n) {
                min_q = min_q.min(q[j + 1]);
                best = best.min(idx.block(a, i, bi, j as isize).max(min_q));
            }
        }
        for (c, c2) in idx.splits(a, i) {
            let base = idx.block(a, i, c as isize - 1, c2 as isize - 1);
            if base >= INF {
                continue;
            }
            let (ds, bs) = idx.list(c, c2, bi);
            // an empty occurrence (j = i−1) tiles nothing
            let skip = bs.partition_point(|&j| (j as isize) < i as isize);
            let (ds, bs) = (&ds[skip..], &bs[skip..]);
            if ds.is_empty() {
                continue;
            }
            let tail = |x: usize| rm.min(i + 1, bs[x] as usize + 1);
            let (mut lo, mut hi) = (0, ds.len());
            while lo < hi {
                let mid = (lo + hi) / 2;
                if tail(mid) <= base + ds[mid] {
                    hi = mid;
                } else {
                    lo = mid + 1;
                }
            }
            let x = lo.min(ds.len() - 1);
            for y in [x, x.saturating_sub(1)] {
                best = best.min((base + ds[y]).max(tail(y)));
            }
        }
        q[i] = best;
        rm.build_step(i, best).expect("right-to-left order");
    }
    QTable { a, b, values: q }
}

/// Thresholds of every distinct candidate factor of `text`, computed once
/// per string in parallel.
fn collect(
    text: &[Symbol],
    candidates: Vec<(usize, usize)>,
    threshold: impl Fn(usize, usize) -> Cost + Sync,
) -> ThresholdReport {
    let mut seen = HashSet::new();
    let firsts: Vec<(usize, usize)> = candidates
        .iter()
        .copied()
        .filter(|&(a, b)| seen.insert(&text[a..=b]))
        .collect();
    let values: HashMap<(usize, usize), Cost> =
        firsts.par_iter().map(|&(a, b)| ((a, b), threshold(a, b))).collect();
    ThresholdReport::group(text, candidates.into_iter(), |a, b| values.get(&(a, b)).copied())
}

/// `Q_{a,b}[0]` for every proper factor of `t`.
pub fn restricted_covers_ed(t: &Text, p: &PenaltyMatrix) -> Result<ThresholdReport> {
    p.check_text(t)?;
    let idx = SpecialPointIndex::build(t.symbols(), p, true);
    Ok(covers_with(t, &idx))
}

/// As [`restricted_covers_ed`] with a prebuilt index.
pub fn restricted_covers_ed_with(
    t: &Text,
    p: &PenaltyMatrix,
    idx: &SpecialPointIndex,
) -> Result<ThresholdReport> {
    if !idx.matches(t, p) {
        return Err(Error::IndexMismatch);
    }
    Ok(covers_with(t, idx))
}

fn covers_with(t: &Text, idx: &SpecialPointIndex) -> ThresholdReport {
    let n = t.len();
    let candidates = (0..n)
        .flat_map(|a| (a..n).map(move |b| (a, b)))
        .filter(|&(a, b)| b - a + 1 < n)
        .collect();
    collect(t.symbols(), candidates, |a, b| q_fast(idx, a, b).threshold())
}

/// Seed thresholds of the factors `C` of `t` with `2|C| ≤ |t|`: the cover
/// thresholds of the same factors inside `◇ⁿ T ◇ⁿ`.
pub fn restricted_seeds_ed(t: &Text, p: &PenaltyMatrix) -> Result<ThresholdReport> {
    p.check_text(t)?;
    let n = t.len();
    let padded = pad_for_seed(t);
    let idx = SpecialPointIndex::build(padded.symbols(), p, true);
    let candidates = (0..n)
        .flat_map(|a| (a..n).map(move |b| (a, b)))
        .filter(|&(a, b)| 2 * (b - a + 1) <= n)
        .collect();
    Ok(collect(t.symbols(), candidates, |a, b| q_fast(&idx, a + n, b + n).threshold()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sample;
    use rand::{RngExt, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn t(s: &str) -> Text {
        Text::from_ascii(s)
    }

    #[test]
    fn quadratic_examples() {
        let p = PenaltyMatrix::unit(2);
        let q = q_table_quadratic(&t("abab"), 0, 1, &p).unwrap();
        assert_eq!(q.values(), &[0, 1, 0, 1, 0]);
        let q = q_table_quadratic(&t("abba"), 0, 3, &p).unwrap();
        assert_eq!(q.threshold(), 0);
        assert_eq!(q.get(4), 0);
        assert!(q_table_quadratic(&t("ab"), 1, 2, &p).is_err());
    }

    #[test]
    fn rm_table() {
        let mut rm = RMTable::new(3);
        for (i, v) in [(2, 0), (1, 1), (0, 0)] {
            rm.build_step(i, v).unwrap();
        }
        assert_eq!(rm.query(0, 2).unwrap(), 0);
        assert_eq!(rm.query(1, 1).unwrap(), 1);
        assert!(rm.build_step(0, 5).is_err());

        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for len in 1..65 {
            let values: Vec<Cost> = (0..len).map(|_| rng.random_range(0..20)).collect();
            let mut rm = RMTable::new(len);
            assert!(rm.query(len - 1, len - 1).is_err());
            for i in (0..len).rev() {
                rm.build_step(i, values[i]).unwrap();
                for j in i..len {
                    let naive = *values[i..=j].iter().min().unwrap();
                    assert_eq!(rm.query(i, j).unwrap(), naive);
                }
                if i > 0 {
                    assert!(rm.query(i - 1, len - 1).is_err());
                }
            }
        }
    }

    #[test]
    fn fast_matches_quadratic() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        for round in 0..30 {
            let text = sample::random_text(&mut rng, 1..17, 2..4);
            let p = match round % 2 {
                0 => PenaltyMatrix::unit(text.sigma()),
                _ => sample::random_penalty(&mut rng, text.sigma(), 4),
            };
            let idx = SpecialPointIndex::build(text.symbols(), &p, true);
            let n = text.len();
            for a in 0..n {
                for b in a..n {
                    let slow = q_quadratic(text.symbols(), a, b, &p);
                    assert_eq!(q_fast(&idx, a, b), slow, "{text} [{a},{b}]");
                }
            }
        }
    }

    #[test]
    fn covers_examples() {
        let p = PenaltyMatrix::unit(2);
        let report = restricted_covers_ed(&t("abab"), &p).unwrap();
        assert_eq!(report.minimal_threshold(), Some(0));
        let best: Vec<_> = report.minimal().map(|e| e.factor.clone()).collect();
        assert_eq!(best, vec![t("ab").symbols().to_vec()]);
        assert_eq!(report.get(t("ab").symbols()).unwrap().occurrences, vec![(0, 1), (2, 3)]);
        assert!(report.get(t("abab").symbols()).is_none());

        let report = restricted_covers_ed(&t("aaaa"), &PenaltyMatrix::unit(1)).unwrap();
        assert_eq!(report.get(t("a").symbols()).unwrap().threshold, Some(0));
    }

    #[test]
    fn seeds_examples() {
        let p = PenaltyMatrix::unit(2);
        let report = restricted_seeds_ed(&t("aaaaa"), &PenaltyMatrix::unit(1)).unwrap();
        assert_eq!(report.get(t("a").symbols()).unwrap().threshold, Some(0));
        assert!(report.get(t("aaa").symbols()).is_none());
        let text = t("abaabaab");
        let seeds = restricted_seeds_ed(&text, &p).unwrap();
        let covers = restricted_covers_ed(&text, &p).unwrap();
        for e in &seeds.entries {
            let c = covers.get(&e.factor).unwrap();
            assert!(e.threshold <= c.threshold);
        }
        assert_eq!(seeds.get(t("aab").symbols()).unwrap().threshold, Some(0));
        let report = restricted_seeds_ed(&t("ab"), &p).unwrap();
        assert_eq!(report.entries.len(), 2);
    }
}
