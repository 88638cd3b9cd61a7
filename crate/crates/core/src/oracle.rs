//! Brute-force reference implementations.
//!
//! Every function here evaluates a definition directly: enumerate factors,
//! compute distances, mark positions. They are meant for tests, the gadget
//! validators and small inputs.

use crate::error::{Error, Result};
use crate::interval::IntervalSet;
use crate::metric::Metric;
use crate::penalty::Cost;
use crate::report::ThresholdReport;
use crate::text::{pad_for_seed, Symbol, Text};

/// Default cap on exhaustive enumerations.
pub const DEFAULT_BUDGET: u128 = 1 << 22;

/// `Occ_k(s, t)`: every non-empty `[i, j]` with `d(s, t[i,j]) ≤ k`.
pub fn brute_occurrences(s: &[Symbol], t: &[Symbol], metric: Metric<'_>, k: Cost) -> IntervalSet {
    let mut occ = IntervalSet::new();
    if k < 0 {
        return occ;
    }
    for i in 0..t.len() {
        for j in i..t.len() {
            if metric.distance(s, &t[i..=j]).is_some_and(|d| d <= k) {
                occ.push(i as isize, j as isize);
            }
        }
    }
    occ
}

/// `Covered_k(s, t)`, counted by marking positions.
pub fn brute_coverage(s: &[Symbol], t: &[Symbol], metric: Metric<'_>, k: Cost) -> usize {
    let mut covered = vec![false; t.len()];
    for (i, j) in brute_occurrences(s, t, metric, k).iter() {
        for cell in &mut covered[i as usize..=j as usize] {
            *cell = true;
        }
    }
    covered.iter().filter(|&&c| c).count()
}

/// Largest `b' ≥ a'−1` with `d(T[a,b], T[a',b']) ≤ k`, or −1.
pub fn brute_p_entry(t: &[Symbol], metric: Metric<'_>, k: Cost, a: usize, b: usize, a2: usize) -> isize {
    let pattern = &t[a..=b];
    (a2 as isize - 1..t.len() as isize)
        .rev()
        .find(|&b2| {
            let occ = &t[a2..(b2 + 1) as usize];
            metric.distance(pattern, occ).is_some_and(|d| d <= k)
        })
        .unwrap_or(-1)
}

/// Least `k` at which `c` is a k-approximate cover of `x` (covers every
/// position), trying the distances of `c` to the factors of `x` in
/// increasing order; `None` if no threshold works.
pub fn brute_min_cover_threshold(c: &[Symbol], x: &[Symbol], metric: Metric<'_>) -> Option<Cost> {
    if x.is_empty() {
        return Some(0);
    }
    let mut values: Vec<Cost> = (0..x.len())
        .flat_map(|i| (i..x.len()).map(move |j| (i, j)))
        .filter_map(|(i, j)| metric.distance(c, &x[i..=j]))
        .collect();
    values.sort_unstable();
    values.dedup();
    values.into_iter().find(|&k| brute_coverage(c, x, metric, k) == x.len())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    Cover,
    Seed,
}

/// Minimal threshold of every candidate factor: proper factors for covers,
/// factors with `2|C| ≤ |t|` (measured on the padded text) for seeds.
pub fn brute_restricted_min_k(t: &Text, metric: Metric<'_>, variant: Variant) -> ThresholdReport {
    let n = t.len();
    let s = t.symbols();
    let padded = pad_for_seed(t);
    let target = match variant {
        Variant::Cover => s,
        Variant::Seed => padded.symbols(),
    };
    let candidates = (0..n).flat_map(|a| (a..n).map(move |b| (a, b))).filter(|&(a, b)| {
        let len = b - a + 1;
        match variant {
            Variant::Cover => len < n,
            Variant::Seed => 2 * len <= n,
        }
    });
    ThresholdReport::group(s, candidates, |a, b| brute_min_cover_threshold(&s[a..=b], target, metric))
}

fn check_budget(candidates: Option<u128>, budget: u128) -> Result<u128> {
    match candidates {
        Some(c) if c <= budget => Ok(c),
        _ => Err(Error::BudgetExceeded { candidates: candidates.unwrap_or(u128::MAX), budget }),
    }
}

/// Lexicographically first string of length `c` over `Σ` that is a
/// k-approximate cover of `t`.
pub fn brute_general_cover_exists(
    t: &Text,
    c: usize,
    metric: Metric<'_>,
    k: Cost,
    budget: u128,
) -> Result<Option<Vec<Symbol>>> {
    let sigma = t.sigma() as u128;
    let total = check_budget(sigma.checked_pow(c as u32), budget)?;
    let mut candidate = vec![0 as Symbol; c];
    for _ in 0..total {
        if brute_coverage(&candidate, t.symbols(), metric, k) == t.len() {
            return Ok(Some(candidate));
        }
        // next string in lexicographic order
        for x in candidate.iter_mut().rev() {
            *x += 1;
            if (*x as u128) < sigma {
                break;
            }
            *x = 0;
        }
    }
    Ok(None)
}

/// Lexicographically first binary `S` with `Ham(S, S_i) ≤ k` for every
/// input string.
pub fn brute_consensus(strings: &[Vec<u8>], k: usize, budget: u128) -> Result<Option<Vec<u8>>> {
    let len = strings.first().map_or(0, Vec::len);
    if let Some(&bad) = strings.iter().flatten().find(|&&x| x > 1) {
        return Err(Error::NonBinary(bad));
    }
    if strings.iter().any(|s| s.len() != len) {
        return Err(Error::InvalidInstance("strings differ in length".into()));
    }
    let work = 1u128.checked_shl(len as u32).and_then(|x| x.checked_mul(strings.len().max(1) as u128));
    check_budget(work, budget)?;
    for mask in 0..1u128 << len {
        let candidate: Vec<u8> = (0..len).map(|j| ((mask >> (len - 1 - j)) & 1) as u8).collect();
        let close = |s: &Vec<u8>| s.iter().zip(&candidate).filter(|(x, y)| x != y).count() <= k;
        if strings.iter().all(close) {
            return Ok(Some(candidate));
        }
    }
    Ok(None)
}
