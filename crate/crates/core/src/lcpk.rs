//! Longest common prefixes with at most `k` mismatches between suffixes of
//! one text: the all-pairs diagonal DP, kangaroo queries on top of an exact
//! longest-common-extension structure, and the `PREF_k` table.
//!
//! Wildcards never count as mismatches.

use std::collections::VecDeque;

use crate::text::{symbols_match, Symbol, Text, WILDCARD};

/// `lcp_k(i, j)` for all `i, j < n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LcpKTable {
    n: usize,
    k: usize,
    cells: Vec<u32>,
}

impl LcpKTable {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn budget(&self) -> usize {
        self.k
    }

    pub fn get(&self, i: usize, j: usize) -> usize {
        self.cells[i * self.n + j] as usize
    }

    /// `[lcp_k(i,0), …, lcp_k(i,n−1)]`.
    pub fn row(&self, i: usize) -> &[u32] {
        &self.cells[i * self.n..(i + 1) * self.n]
    }
}

/// All-pairs `lcp_k` in `O(n²)`: each diagonal is scanned right to left
/// while a window of the nearest `k+1` mismatches is maintained.
pub fn lcp_k_all_pairs(t: &Text, k: usize) -> LcpKTable {
    let s = t.symbols();
    let n = s.len();
    let mut cells = vec![0u32; n * n];
    let mut window: VecDeque<usize> = VecDeque::with_capacity(k + 2);
    for delta in 0..n {
        let len = n - delta;
        window.clear();
        for i in (0..len).rev() {
            if !symbols_match(s[i], s[i + delta]) {
                window.push_front(i);
                if window.len() > k + 1 {
                    window.pop_back();
                }
            }
            let value = match window.len() == k + 1 {
                true => window.back().unwrap() - i,
                false => len - i,
            } as u32;
            cells[i * n + i + delta] = value;
            cells[(i + delta) * n + i] = value;
        }
    }
    LcpKTable { n, k, cells }
}

/// `PREF_k[i] = lcp_k(0, i)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrefKTable {
    k: usize,
    values: Vec<u32>,
}

impl PrefKTable {
    pub fn budget(&self) -> usize {
        self.k
    }

    pub fn values(&self) -> &[u32] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

/// `PREF_k` via `n` kangaroo queries, `O(nk)` after preprocessing.
pub fn pref_k(t: &Text, k: usize) -> PrefKTable {
    Kangaroo::new(t).pref_k(k)
}

/// Suffix array by prefix doubling.
fn suffix_array(s: &[Symbol]) -> Vec<usize> {
    let n = s.len();
    let mut sa: Vec<usize> = (0..n).collect();
    if n == 0 {
        return sa;
    }
    let mut rank: Vec<usize> = {
        let mut alphabet: Vec<Symbol> = s.to_vec();
        alphabet.sort_unstable();
        alphabet.dedup();
        s.iter().map(|x| alphabet.binary_search(x).unwrap()).collect()
    };
    let mut tmp = vec![0usize; n];
    let mut step = 1;
    loop {
        let key = |i: usize| (rank[i], if i + step < n { rank[i + step] + 1 } else { 0 });
        sa.sort_unstable_by_key(|&i| key(i));
        tmp[sa[0]] = 0;
        for w in 1..n {
            tmp[sa[w]] = tmp[sa[w - 1]] + usize::from(key(sa[w - 1]) != key(sa[w]));
        }
        std::mem::swap(&mut rank, &mut tmp);
        if rank[sa[n - 1]] == n - 1 {
            break;
        }
        step *= 2;
    }
    sa
}

/// Kasai: `lcp[r]` is the common prefix of suffixes `sa[r−1]` and `sa[r]`.
fn lcp_array(s: &[Symbol], sa: &[usize], rank: &[usize]) -> Vec<u32> {
    let n = s.len();
    let mut lcp = vec![0u32; n];
    let mut h = 0usize;
    for i in 0..n {
        if rank[i] == 0 {
            h = 0;
            continue;
        }
        let j = sa[rank[i] - 1];
        while i + h < n && j + h < n && s[i + h] == s[j + h] {
            h += 1;
        }
        lcp[rank[i]] = h as u32;
        h = h.saturating_sub(1);
    }
    lcp
}

/// Static sparse table for `O(1)` range minima.
#[derive(Debug, Clone)]
struct SparseMin {
    levels: Vec<Vec<u32>>,
}

impl SparseMin {
    fn new(values: Vec<u32>) -> Self {
        let n = values.len();
        let mut levels = vec![values];
        let mut width = 1;
        while 2 * width <= n {
            let prev = levels.last().unwrap();
            let next = (0..=n - 2 * width)
                .map(|i| prev[i].min(prev[i + width]))
                .collect();
            levels.push(next);
            width *= 2;
        }
        Self { levels }
    }

    /// Minimum over `[i, j]`, `i ≤ j`.
    fn min(&self, i: usize, j: usize) -> u32 {
        let p = (usize::BITS - 1 - (j - i + 1).leading_zeros()) as usize;
        self.levels[p][i].min(self.levels[p][j + 1 - (1 << p)])
    }
}

/// Exact longest-common-extension queries (suffix array + LCP + RMQ)
/// and the kangaroo method on top of them.
#[derive(Debug, Clone)]
pub struct Kangaroo {
    symbols: Vec<Symbol>,
    rank: Vec<usize>,
    rmq: SparseMin,
}

impl Kangaroo {
    pub fn new(t: &Text) -> Self {
        let s = t.symbols();
        let sa = suffix_array(s);
        let mut rank = vec![0usize; s.len()];
        for (r, &i) in sa.iter().enumerate() {
            rank[i] = r;
        }
        let lcp = lcp_array(s, &sa, &rank);
        Self { symbols: s.to_vec(), rank, rmq: SparseMin::new(lcp) }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Exact LCE of suffixes `i` and `j`; the wildcard only equals itself.
    pub fn lce(&self, i: usize, j: usize) -> usize {
        let n = self.symbols.len();
        if i >= n || j >= n {
            return 0;
        }
        if i == j {
            return n - i;
        }
        let (lo, hi) = match self.rank[i] < self.rank[j] {
            true => (self.rank[i], self.rank[j]),
            false => (self.rank[j], self.rank[i]),
        };
        self.rmq.min(lo + 1, hi) as usize
    }

    /// Longest common extension where wildcards match everything.
    pub fn lce_wild(&self, i: usize, j: usize) -> usize {
        self.lcp_k_counted(i, j, 0).0
    }

    /// `lcp_k(i, j)`.
    pub fn lcp_k(&self, i: usize, j: usize, k: usize) -> usize {
        self.lcp_k_counted(i, j, k).0
    }

    /// `lcp_k(i, j)` together with the number of exact-LCE jumps taken.
    /// Without wildcards at most `k + 1` jumps are made; every wildcard stop
    /// costs one extra jump but no budget.
    pub fn lcp_k_counted(&self, i: usize, j: usize, k: usize) -> (usize, usize) {
        let n = self.symbols.len();
        let mut len = 0;
        let mut budget = k;
        let mut jumps = 0;
        loop {
            len += self.lce(i + len, j + len);
            jumps += 1;
            if i + len >= n || j + len >= n {
                break;
            }
            let (x, y) = (self.symbols[i + len], self.symbols[j + len]);
            if x != WILDCARD && y != WILDCARD {
                if budget == 0 {
                    break;
                }
                budget -= 1;
            }
            len += 1;
        }
        (len, jumps)
    }

    pub fn pref_k(&self, k: usize) -> PrefKTable {
        let values = (0..self.len()).map(|i| self.lcp_k(0, i, k) as u32).collect();
        PrefKTable { k, values }
    }
}
