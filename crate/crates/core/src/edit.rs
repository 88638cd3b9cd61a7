//! k-coverage of every factor under the Levenshtein and weighted edit
//! distances.
//!
//! Both routes fill a [`PTable`]: `P[a,b,a']` is the largest `b' ≥ a'−1`
//! with `d(T[a,b], T[a',b']) ≤ k`, or −1 when there is none. The coverage
//! of `T[a,b]` is then the size of `⋃_{a'} [a', P[a,b,a']]`.
//!
//! Levenshtein tables are read off h-waves. Weighted tables use Pareto
//! lists of D-table rows stored for special points (multiples of the block
//! size `M`) together with all `M × M` corner blocks of the D-tables.

use std::collections::VecDeque;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::hamming;
use crate::interval::union_size_sorted;
use crate::lcpk::Kangaroo;
use crate::metric::Metric;
use crate::penalty::{dtable_unchecked, Cost, PenaltyMatrix, INF};
use crate::report::FactorCoverage;
use crate::text::{Symbol, Text};

/// Below every valid row index.
pub const NO_ROW: isize = isize::MIN;

/// Waves `L^0, …, L^h` of the Levenshtein D-table of `t1` against `t2`.
///
/// Row `i ∈ [−1, |t1|−1]` of the table stands for the prefix `t1[0,i]`;
/// diagonal `d` holds the cells `(i, i+d)`. `L^g(d)` is the largest row on
/// diagonal `d` whose value is at most `g`, or [`NO_ROW`] if the diagonal
/// has no cells. Symbols are compared exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HWaves {
    h: usize,
    cells: Vec<isize>,
}

impl HWaves {
    pub fn budget(&self) -> usize {
        self.h
    }

    /// `[L^g(−g), …, L^g(g)]`.
    pub fn wave(&self, g: usize) -> &[isize] {
        &self.cells[g * g..(g + 1) * (g + 1)]
    }

    /// `L^g(d)`, or [`NO_ROW`] for `|d| > g`.
    pub fn get(&self, g: usize, d: isize) -> isize {
        if d.unsigned_abs() > g {
            NO_ROW
        } else {
            self.cells[g * g + (d + g as isize) as usize]
        }
    }

    /// Furthest-reaching construction. `slide(i, j)` returns the longest
    /// common extension of `t1[i..]` and `t2[j..]`.
    fn build_with(m1: usize, m2: usize, h: usize, slide: impl Fn(usize, usize) -> usize) -> Self {
        let mut cells: Vec<isize> = Vec::with_capacity((h + 1) * (h + 1));
        let (last1, last2) = (m1 as isize - 1, m2 as isize - 1);
        for g in 0..=h {
            let gi = g as isize;
            let prev_base = g.saturating_sub(1).pow(2);
            for d in -gi..=gi {
                let start = (-1).max(-1 - d);
                let end = last1.min(last2 - d);
                if end < start {
                    cells.push(NO_ROW);
                    continue;
                }
                // the first cell of diagonal d holds |d|
                let mut row = if d.unsigned_abs() == g { start } else { NO_ROW };
                if g > 0 {
                    // mismatch, deletion from t1, insertion into t1
                    for (e, step) in [(d, 1), (d + 1, 1), (d - 1, 0)] {
                        if e.unsigned_abs() < g {
                            let r = cells[prev_base + (e + gi - 1) as usize];
                            if r != NO_ROW {
                                row = row.max(r + step);
                            }
                        }
                    }
                }
                debug_assert!(row != NO_ROW);
                row = row.min(end);
                if row < end {
                    let ext = slide((row + 1) as usize, (row + 1 + d) as usize);
                    row += ext.min((end - row) as usize) as isize;
                }
                cells.push(row);
            }
        }
        Self { h, cells }
    }
}

fn naive_lce(t1: &[Symbol], t2: &[Symbol], i: usize, j: usize) -> usize {
    t1.get(i..)
        .unwrap_or(&[])
        .iter()
        .zip(t2.get(j..).unwrap_or(&[]))
        .take_while(|(x, y)| x == y)
        .count()
}

/// Waves `L^0 … L^h` for `t1` against `t2`.
pub fn hwave_build(t1: &[Symbol], t2: &[Symbol], h: usize) -> HWaves {
    HWaves::build_with(t1.len(), t2.len(), h, |i, j| naive_lce(t1, t2, i, j))
}

/// Waves of a fixed `t1` against a `t2` that grows at the front.
///
/// Each prepend recomputes the waves from the diagonals' first cells; the
/// cost is `O(h²)` extension queries rather than the `O(h)` of
/// Landau–Myers–Schmidt.
#[derive(Debug, Clone)]
pub struct WaveTracker {
    t1: Vec<Symbol>,
    t2: VecDeque<Symbol>,
    waves: HWaves,
}

impl WaveTracker {
    pub fn new(t1: &[Symbol], t2: &[Symbol], h: usize) -> Self {
        Self { t1: t1.to_vec(), t2: t2.iter().copied().collect(), waves: hwave_build(t1, t2, h) }
    }

    pub fn waves(&self) -> &HWaves {
        &self.waves
    }

    pub fn second(&self) -> Vec<Symbol> {
        self.t2.iter().copied().collect()
    }

    /// Replaces `t2` by `letter · t2`.
    pub fn prepend(&mut self, letter: Symbol) {
        self.t2.push_front(letter);
        let (t1, t2) = (&self.t1, &self.t2);
        let slide = |i: usize, j: usize| {
            t1.iter()
                .skip(i)
                .zip(t2.iter().skip(j))
                .take_while(|(x, y)| x == y)
                .count()
        };
        self.waves = HWaves::build_with(t1.len(), t2.len(), self.waves.h, slide);
    }
}

/// `P[a,b,a']` for `0 ≤ a ≤ b < n` and `0 ≤ a' < n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PTable {
    n: usize,
    k: Cost,
    cells: Vec<i32>,
}

impl PTable {
    pub fn text_len(&self) -> usize {
        self.n
    }

    pub fn budget(&self) -> Cost {
        self.k
    }

    pub fn get(&self, a: usize, b: usize, a2: usize) -> isize {
        assert!(a <= b && b < self.n && a2 < self.n, "P[{a},{b},{a2}] out of range");
        self.cells[(a * self.n + b) * self.n + a2] as isize
    }

    /// Coverage of `T[a,b]`: union of `[a', P[a,b,a']]` over all `a'`.
    pub fn coverage(&self, a: usize, b: usize) -> usize {
        let base = (a * self.n + b) * self.n;
        let row = &self.cells[base..base + self.n];
        union_size_sorted(row.iter().enumerate().map(|(a2, &p)| (a2 as isize, p as isize)))
    }

    pub fn factor_coverage(&self) -> FactorCoverage {
        let n = self.n;
        let cells = (0..n * n)
            .into_par_iter()
            .map(|x| {
                let (a, b) = (x / n, x % n);
                if a <= b { self.coverage(a, b) as u32 } else { 0 }
            })
            .collect();
        FactorCoverage::from_cells(n, cells)
    }
}

/// Levenshtein `P_k` table via h-waves, `O(n³ + n²k²)`.
///
/// For every pair `(a, a')` the waves of `T[a..]` against `T[a'..]` are
/// formed; then, as `b` grows, the rightmost diagonal whose `k`-wave still
/// reaches row `b−a` is tracked downwards. Each start `a` fills its own
/// contiguous block of the table.
pub fn p_lev_table(t: &Text, k: usize) -> Result<PTable> {
    if t.has_wildcards() {
        return Err(Error::WildcardUnsupported);
    }
    let n = t.len();
    let kg = Kangaroo::new(t);
    let h = k.min(n);
    let hi = h as isize;
    let mut cells = vec![-1i32; n * n * n];
    cells.par_chunks_mut((n * n).max(1)).enumerate().for_each(|(a, block)| {
        for a2 in 0..n {
            let waves = HWaves::build_with(n - a, n - a2, h, |i, j| kg.lce(a + i, a2 + j));
            let wave = waves.wave(h);
            let mut d = hi;
            for b in a..n {
                let r = (b - a) as isize;
                while d >= -hi && wave[(d + hi) as usize] < r {
                    d -= 1;
                }
                if d >= -hi {
                    block[b * n + a2] = (a2 as isize + r + d) as i32;
                }
            }
        }
    });
    Ok(PTable { n, k: k as Cost, cells })
}

/// Non-dominated `(distance, end)` pairs of a D-table row, by increasing
/// distance; ends increase along with the distances.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParetoList {
    pairs: Vec<(Cost, isize)>,
}

impl ParetoList {
    pub fn pairs(&self) -> &[(Cost, isize)] {
        &self.pairs
    }

    pub fn len(&self) -> usize {
        self.pairs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.pairs.is_empty()
    }

    /// Last pair with distance at most `x`.
    pub fn pred(&self, x: Cost) -> Option<(Cost, isize)> {
        let i = self.pairs.partition_point(|&(d, _)| d <= x);
        i.checked_sub(1).map(|i| self.pairs[i])
    }
}

/// Stack filter over `row`, whose first entry is column `first`.
pub fn pareto_list_build(row: &[Cost], first: isize) -> ParetoList {
    let (mut ds, mut bs) = (Vec::new(), Vec::new());
    pareto_filter(row, first, &mut ds, &mut bs);
    ParetoList { pairs: ds.into_iter().zip(bs.into_iter().map(|b| b as isize)).collect() }
}

/// Appends the filtered pairs of `row` to `ds`/`bs`.
fn pareto_filter(row: &[Cost], first: isize, ds: &mut Vec<Cost>, bs: &mut Vec<i32>) {
    let base = ds.len();
    for (x, &d) in row.iter().enumerate() {
        while ds.len() > base && *ds.last().unwrap() >= d {
            ds.pop();
            bs.pop();
        }
        ds.push(d);
        bs.push((first + x as isize) as i32);
    }
}

/// `M = max(1, ⌊√(n / log₂ n)⌋)`, and 1 for `n ≤ 2`.
pub fn block_size(n: usize) -> usize {
    if n <= 2 {
        return 1;
    }
    let n = n as f64;
    ((n / n.log2()).sqrt().floor() as usize).max(1)
}

const NO_SLOT: u32 = u32::MAX;

/// Precomputed structures for weighted `P` and `Q` queries on one text:
/// the Pareto lists `L_{c,c'}[b]` for every pair `c, c' ∈ [0,n]` with `c`
/// or `c'` a multiple of `M`, and the corner blocks
/// `D_{a,a'}[b,b']`, `−1 ≤ b−a, b'−a' ≤ M−2`, for all `a, a' ∈ [0,n]`.
///
/// Lists with `c = n` or `c' = n` hold the single pair of the all-deletion
/// or all-insertion alignment; they are needed when one side of a split is
/// consumed entirely.
#[derive(Debug, Clone)]
pub struct SpecialPointIndex {
    n: usize,
    m: usize,
    text: Vec<Symbol>,
    penalty: PenaltyMatrix,
    slot: Vec<u32>,
    group_rows: Vec<usize>,
    offsets: Vec<usize>,
    ds: Vec<Cost>,
    bs: Vec<i32>,
    blocks: Vec<Cost>,
}

pub fn precompute_special(t: &Text, p: &PenaltyMatrix) -> Result<SpecialPointIndex> {
    p.check_text(t)?;
    Ok(SpecialPointIndex::build(t.symbols(), p, true))
}

impl SpecialPointIndex {
    pub(crate) fn build(s: &[Symbol], p: &PenaltyMatrix, with_end: bool) -> Self {
        let n = s.len();
        let m = block_size(n);
        let top = if with_end { n } else { n.saturating_sub(1) };
        let pairs: Vec<(usize, usize)> = (0..=n)
            .flat_map(|c| (0..=n).map(move |c2| (c, c2)))
            .filter(|&(c, c2)| (c % m == 0 || c2 % m == 0) && c <= top && c2 <= top)
            .filter(|&(c, c2)| n > 0 || (c, c2) == (0, 0))
            .collect();
        let lists: Vec<(Vec<Cost>, Vec<i32>, Vec<usize>)> = pairs
            .par_iter()
            .map(|&(c, c2)| {
                let table = dtable_unchecked(s, c, c2, p);
                let (mut ds, mut bs, mut offs) = (Vec::new(), Vec::new(), Vec::new());
                for b in c as isize - 1..n as isize {
                    offs.push(ds.len());
                    pareto_filter(table.row(b), c2 as isize - 1, &mut ds, &mut bs);
                }
                offs.push(ds.len());
                (ds, bs, offs)
            })
            .collect();
        let side = n + 1;
        let mut slot = vec![NO_SLOT; side * side];
        let (mut group_rows, mut offsets, mut ds, mut bs) = (Vec::new(), Vec::new(), Vec::new(), Vec::new());
        for (&(c, c2), (d, b, offs)) in pairs.iter().zip(lists) {
            slot[c * side + c2] = group_rows.len() as u32;
            group_rows.push(offsets.len());
            let shift = ds.len();
            offsets.extend(offs.into_iter().map(|o| o + shift));
            ds.extend(d);
            bs.extend(b);
        }
        let blocks = (0..side)
            .into_par_iter()
            .flat_map_iter(|a| {
                (0..side).flat_map(move |a2| corner_block(s, a, a2, m, p))
            })
            .collect();
        Self { n, m, text: s.to_vec(), penalty: p.clone(), slot, group_rows, offsets, ds, bs, blocks }
    }

    pub fn text_len(&self) -> usize {
        self.n
    }

    pub fn block_size(&self) -> usize {
        self.m
    }

    /// Whether the index was built for `t` and `p`.
    pub fn matches(&self, t: &Text, p: &PenaltyMatrix) -> bool {
        self.text == t.symbols() && &self.penalty == p
    }

    pub fn is_special(&self, x: usize) -> bool {
        x.is_multiple_of(self.m)
    }

    /// `D_{a,a'}[b,b']` from the corner blocks; `INF` outside the block or
    /// the text.
    pub fn block(&self, a: usize, a2: usize, b: isize, b2: isize) -> Cost {
        let (r, c) = (b - a as isize + 1, b2 - a2 as isize + 1);
        let m = self.m as isize;
        if a > self.n || a2 > self.n || r < 0 || c < 0 || r >= m || c >= m {
            return INF;
        }
        let side = self.n + 1;
        self.blocks[((a * side + a2) * self.m + r as usize) * self.m + c as usize]
    }

    /// `L_{c,c'}[b]` as parallel slices of distances and ends; empty when
    /// not stored or when `b` is outside `[c−1, n−1]`.
    pub(crate) fn list(&self, c: usize, c2: usize, b: isize) -> (&[Cost], &[i32]) {
        let side = self.n + 1;
        if c > self.n || c2 > self.n || b < c as isize - 1 || b >= self.n as isize {
            return (&[], &[]);
        }
        let g = self.slot[c * side + c2];
        if g == NO_SLOT {
            return (&[], &[]);
        }
        let at = self.group_rows[g as usize] + (b - c as isize + 1) as usize;
        let (lo, hi) = (self.offsets[at], self.offsets[at + 1]);
        (&self.ds[lo..hi], &self.bs[lo..hi])
    }

    /// The stored list `L_{c,c'}[b]`, or `None` when neither index is
    /// special.
    pub fn pareto_list(&self, c: usize, c2: usize, b: isize) -> Option<ParetoList> {
        let side = self.n + 1;
        if c > self.n || c2 > self.n || self.slot[c * side + c2] == NO_SLOT {
            return None;
        }
        let (ds, bs) = self.list(c, c2, b);
        Some(ParetoList { pairs: ds.iter().copied().zip(bs.iter().map(|&x| x as isize)).collect() })
    }

    /// Nearest special point at or after `x`.
    pub(crate) fn next_special(&self, x: usize) -> usize {
        x.div_ceil(self.m) * self.m
    }

    /// Candidate splits `(c, c')` for anchors `a` (pattern) and `a2` (text).
    pub(crate) fn splits(&self, a: usize, a2: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        let (s, s2) = (self.next_special(a), self.next_special(a2));
        let m = self.m;
        (a2..a2 + m)
            .map(move |c2| (s, c2))
            .chain((a..a + m).map(move |c| (c, s2)))
            .filter(move |&(c, c2)| c <= self.n && c2 <= self.n)
    }

    /// `P_k[a,b,a']` for weighted costs.
    pub fn p_entry(&self, a: usize, b: usize, a2: usize, k: Cost) -> Result<isize> {
        let n = self.n;
        for index in [b, a2] {
            if index >= n {
                return Err(Error::IndexOutOfRange { index, bound: n.saturating_sub(1) });
            }
        }
        if a > b {
            return Err(Error::IndexOutOfRange { index: a, bound: b });
        }
        Ok(self.entry(a, b, a2, k))
    }

    fn entry(&self, a: usize, b: usize, a2: usize, k: Cost) -> isize {
        let m = self.m;
        let b_i = b as isize;
        let mut res = -1isize;
        if b - a + 1 < m {
            let last = (a2 + m - 2).min(self.n - 1) as isize;
            for b2 in a2 as isize - 1..=last {
                if self.block(a, a2, b_i, b2) <= k {
                    res = b2;
                }
            }
        }
        for (c, c2) in self.splits(a, a2) {
            let base = self.block(a, a2, c as isize - 1, c2 as isize - 1);
            if base > k {
                continue;
            }
            let (ds, bs) = self.list(c, c2, b_i);
            let i = ds.partition_point(|&d| d <= k - base);
            if i > 0 {
                res = res.max(bs[i - 1] as isize);
            }
        }
        res
    }
}

/// Corner block of `D_{a,a'}`: rows and columns `−1 … M−2` relative to
/// the origin, `INF` past the end of the text.
fn corner_block(s: &[Symbol], a: usize, a2: usize, m: usize, p: &PenaltyMatrix) -> Vec<Cost> {
    let n = s.len();
    let u = &s[a.min(n)..(a + m - 1).min(n)];
    let v = &s[a2.min(n)..(a2 + m - 1).min(n)];
    let mut cells = vec![INF; m * m];
    cells[0] = 0;
    for j in 1..=v.len() {
        cells[j] = cells[j - 1] + p.ins(v[j - 1]);
    }
    for i in 1..=u.len() {
        let x = u[i - 1];
        cells[i * m] = cells[(i - 1) * m] + p.del(x);
        for j in 1..=v.len() {
            let y = v[j - 1];
            cells[i * m + j] = (cells[(i - 1) * m + j - 1] + p.sub(x, y))
                .min(cells[i * m + j - 1] + p.ins(y))
                .min(cells[(i - 1) * m + j] + p.del(x));
        }
    }
    cells
}

/// Weighted `P_k` table from a special-point index.
pub fn p_ed_table(t: &Text, k: Cost, idx: &SpecialPointIndex, p: &PenaltyMatrix) -> Result<PTable> {
    if !idx.matches(t, p) {
        return Err(Error::IndexMismatch);
    }
    let n = t.len();
    let mut cells = vec![-1i32; n * n * n];
    cells.par_chunks_mut((n * n).max(1)).enumerate().for_each(|(a, block)| {
        for b in a..n {
            for a2 in 0..n {
                block[b * n + a2] = idx.entry(a, b, a2, k) as i32;
            }
        }
    });
    Ok(PTable { n, k, cells })
}

/// k-coverage of every factor under `metric`.
///
/// Levenshtein on a text with wildcards goes through the weighted route
/// with unit costs, since free wildcard insertions break the wave
/// structure.
pub fn factor_coverage(t: &Text, metric: Metric<'_>, k: Cost) -> Result<FactorCoverage> {
    let n = t.len();
    if k < 0 {
        return Ok(FactorCoverage::from_cells(n, vec![0; n * n]));
    }
    match metric {
        Metric::Hamming => Ok(hamming::factor_coverage_all(t, k as usize)),
        Metric::Levenshtein if !t.has_wildcards() => Ok(p_lev_table(t, k as usize)?.factor_coverage()),
        Metric::Levenshtein => {
            let p = PenaltyMatrix::unit(t.sigma());
            let idx = precompute_special(t, &p)?;
            Ok(p_ed_table(t, k, &idx, &p)?.factor_coverage())
        }
        Metric::Edit(p) => {
            let idx = precompute_special(t, p)?;
            Ok(p_ed_table(t, k, &idx, p)?.factor_coverage())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::penalty::{build_dtable, edit_distance, levenshtein};
    use crate::sample;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn t(s: &str) -> Text {
        Text::from_ascii(s)
    }

    /// Waves read straight off the full D-table.
    fn oracle_waves(t1: &[Symbol], t2: &[Symbol], h: usize) -> Vec<Vec<isize>> {
        let (m1, m2) = (t1.len() as isize, t2.len() as isize);
        let lev = |i: isize, j: isize| levenshtein(&t1[..(i + 1) as usize], &t2[..(j + 1) as usize]);
        (0..=h)
            .map(|g| {
                (-(g as isize)..=g as isize)
                    .map(|d| {
                        (-1..m1)
                            .filter(|&i| (-1..m2).contains(&(i + d)) && lev(i, i + d) <= g as Cost)
                            .max()
                            .unwrap_or(NO_ROW)
                    })
                    .collect()
            })
            .collect()
    }

    fn assert_waves(w: &HWaves, t1: &[Symbol], t2: &[Symbol]) {
        for (g, expected) in oracle_waves(t1, t2, w.budget()).iter().enumerate() {
            assert_eq!(w.wave(g), &expected[..], "g={g} t1={t1:?} t2={t2:?}");
        }
    }

    #[test]
    fn wave_examples() {
        let ab = t("ab");
        let w = hwave_build(ab.symbols(), ab.symbols(), 0);
        assert_eq!(w.get(0, 0), 1);
        let w = hwave_build(ab.symbols(), t("b").symbols(), 1);
        assert_eq!(w.wave(1).len(), 3);
        assert_waves(&w, ab.symbols(), t("b").symbols());
        // D for "ab" vs "b": D[0,0]=1, D[1,0]=1; diagonal −1 reaches row 1
        assert_eq!(w.get(1, -1), 1);
        assert_eq!(w.get(0, -1), NO_ROW);
    }

    #[test]
    fn waves_match_full_table() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..200 {
            let t1 = sample::random_text(&mut rng, 0..9, 2..4);
            let t2 = sample::random_text(&mut rng, 0..9, 2..4);
            for h in 0..4 {
                assert_waves(&hwave_build(t1.symbols(), t2.symbols(), h), t1.symbols(), t2.symbols());
            }
        }
    }

    #[test]
    fn prepend_equals_rebuild() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..50 {
            let t1 = sample::random_text(&mut rng, 0..10, 2..3);
            let mut tracker = WaveTracker::new(t1.symbols(), &[], 2);
            assert_waves(tracker.waves(), t1.symbols(), &[]);
            for _ in 0..8 {
                let letter = sample::random_text(&mut rng, 1..2, 2..3)[0];
                tracker.prepend(letter);
                assert_eq!(tracker.waves(), &hwave_build(t1.symbols(), &tracker.second(), 2));
            }
        }
    }

    fn brute_p(text: &Text, k: Cost, p: &PenaltyMatrix) -> Vec<isize> {
        let n = text.len();
        let mut out = vec![-1; n * n * n];
        for a in 0..n {
            for a2 in 0..n {
                let d = build_dtable(text, a, a2, p).unwrap();
                for b in a..n {
                    let best = (a2 as isize - 1..n as isize).filter(|&b2| d.get(b as isize, b2) <= k).max();
                    out[(a * n + b) * n + a2] = best.unwrap_or(-1);
                }
            }
        }
        out
    }

    fn table_cells(pt: &PTable) -> Vec<isize> {
        let n = pt.text_len();
        let mut out = vec![-1; n * n * n];
        for a in 0..n {
            for b in a..n {
                for a2 in 0..n {
                    out[(a * n + b) * n + a2] = pt.get(a, b, a2);
                }
            }
        }
        out
    }

    #[test]
    fn p_lev_examples() {
        let pt = p_lev_table(&t("abc"), 1).unwrap();
        assert_eq!(pt.get(0, 1, 1), 1);
        let pt = p_lev_table(&t("aab"), 1).unwrap();
        assert_eq!(pt.get(0, 1, 2), -1);
        let pt = p_lev_table(&t("abcab"), 0).unwrap();
        for a in 0..5 {
            for b in a..5 {
                assert_eq!(pt.get(a, b, a), b as isize);
            }
        }
        assert!(p_lev_table(&t("a?b"), 1).is_err());
    }

    #[test]
    fn p_lev_matches_dp() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..20 {
            let text = sample::random_text(&mut rng, 1..12, 2..4);
            let p = PenaltyMatrix::unit(text.sigma());
            for k in 0..4 {
                let pt = p_lev_table(&text, k).unwrap();
                assert_eq!(table_cells(&pt), brute_p(&text, k as Cost, &p), "{text} k={k}");
            }
        }
    }

    #[test]
    fn pareto_examples() {
        let l = pareto_list_build(&[3, 2, 2, 4], 0);
        assert_eq!(l.pairs(), &[(2, 2), (4, 3)]);
        assert_eq!(pareto_list_build(&[4, 3, 2, 1], 0).pairs(), &[(1, 3)]);
        assert_eq!(pareto_list_build(&[1, 2, 3], -1).pairs(), &[(1, -1), (2, 0), (3, 1)]);
        assert_eq!(l.pred(1), None);
        assert_eq!(l.pred(3), Some((2, 2)));
        assert_eq!(l.pred(9), Some((4, 3)));
    }

    #[test]
    fn block_sizes() {
        assert_eq!(block_size(0), 1);
        assert_eq!(block_size(1), 1);
        assert_eq!(block_size(2), 1);
        assert_eq!(block_size(16), 2);
        assert_eq!(block_size(1 << 10), 10);
    }

    #[test]
    fn index_cells() {
        let text = t("abbabaabba");
        let p = PenaltyMatrix::new(2, vec![0, 3, 3, 0], vec![2, 2], vec![2, 2]).unwrap();
        let idx = SpecialPointIndex::build(text.symbols(), &p, true);
        let m = idx.block_size() as isize;
        let n = text.len();
        for a in 0..=n {
            for a2 in 0..=n {
                for r in -1..m - 1 {
                    for c in -1..m - 1 {
                        let (b, b2) = (a as isize + r, a2 as isize + c);
                        let got = idx.block(a, a2, b, b2);
                        if b < n as isize && b2 < n as isize {
                            let u = text.factor(a, b);
                            let v = text.factor(a2, b2);
                            assert_eq!(got, edit_distance(u, v, &p).unwrap());
                        } else {
                            assert_eq!(got, INF);
                        }
                    }
                }
            }
        }
        // the all-insertion list at the right end
        let l = idx.pareto_list(0, n, -1).unwrap();
        assert_eq!(l.pairs(), &[(0, n as isize - 1)]);
        let l = idx.pareto_list(n, 0, n as isize - 1).unwrap();
        assert_eq!(l.pairs().last(), Some(&(2 * n as Cost, n as isize - 1)));
    }

    #[test]
    fn p_ed_unit_matches_lev() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..20 {
            let text = sample::random_text(&mut rng, 1..16, 2..4);
            let p = PenaltyMatrix::unit(text.sigma());
            let idx = precompute_special(&text, &p).unwrap();
            for k in 0..4 {
                let lev = p_lev_table(&text, k).unwrap();
                let ed = p_ed_table(&text, k as Cost, &idx, &p).unwrap();
                assert_eq!(table_cells(&lev), table_cells(&ed), "{text} k={k}");
            }
        }
    }

    #[test]
    fn p_ed_weighted_matches_dp() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..15 {
            let text = sample::random_text(&mut rng, 1..13, 2..4);
            let p = sample::random_penalty(&mut rng, text.sigma(), 4);
            let idx = precompute_special(&text, &p).unwrap();
            for k in 0..=2 * p.max_cost() {
                let ed = p_ed_table(&text, k, &idx, &p).unwrap();
                assert_eq!(table_cells(&ed), brute_p(&text, k, &p), "{text} k={k}");
            }
        }
    }

    /// Without the lists anchored at `n`, splits whose text side is the
    /// empty suffix are lost.
    #[test]
    fn end_lists_are_needed() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let mut found = false;
        for _ in 0..300 {
            let text = sample::random_text(&mut rng, 16..20, 2..3);
            let p = sample::random_penalty(&mut rng, text.sigma(), 3);
            let full = SpecialPointIndex::build(text.symbols(), &p, true);
            let cut = SpecialPointIndex::build(text.symbols(), &p, false);
            let n = text.len();
            let k = 3 * p.max_cost();
            'search: for a in 0..n {
                for b in a..n {
                    for a2 in 0..n {
                        if full.entry(a, b, a2, k) != cut.entry(a, b, a2, k) {
                            found = true;
                            break 'search;
                        }
                    }
                }
            }
            if found {
                break;
            }
        }
        assert!(found);
    }

    #[test]
    fn split_identity() {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for _ in 0..10 {
            let text = sample::random_text(&mut rng, 8..13, 2..4);
            let p = sample::random_penalty(&mut rng, text.sigma(), 3);
            let idx = precompute_special(&text, &p).unwrap();
            let n = text.len();
            let m = idx.block_size();
            for a in 0..n {
                for a2 in 0..n {
                    let d = build_dtable(&text, a, a2, &p).unwrap();
                    for b in a..n {
                        for b2 in a2..n {
                            if b - a + 1 < m && b2 - a2 + 1 < m {
                                continue;
                            }
                            let whole = d.get(b as isize, b2 as isize);
                            let ok = idx.splits(a, a2).any(|(c, c2)| {
                                let tail = build_dtable(&text, c, c2, &p).unwrap();
                                d.get(c as isize - 1, c2 as isize - 1) + tail.get(b as isize, b2 as isize) == whole
                            });
                            assert!(ok, "{text} a={a} b={b} a'={a2} b'={b2}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn coverage_examples() {
        let text = t("abab");
        let cov = factor_coverage(&text, Metric::Levenshtein, 1).unwrap();
        assert_eq!(cov.get(0, 1), 4);
        let p = PenaltyMatrix::unit(2);
        let cov_ed = factor_coverage(&text, Metric::Edit(&p), 1).unwrap();
        assert_eq!(cov, cov_ed);
        let cov0 = factor_coverage(&text, Metric::Levenshtein, 0).unwrap();
        assert_eq!(cov0, factor_coverage(&text, Metric::Hamming, 0).unwrap());
        let wild = t("a?ab");
        let cov = factor_coverage(&wild, Metric::Levenshtein, 0).unwrap();
        assert_eq!(cov.get(0, 0), 3);
    }
}
