//! Reductions from binary Hamming String Consensus to general (unrestricted)
//! approximate covers and seeds under the Hamming distance, with checkers
//! for the structural facts the reductions rely on.
//!
//! Binary strings are `Vec<u8>` over `{0, 1}`.

use std::fmt;

use crate::error::{Error, Result};
use crate::metric::Metric;
use crate::oracle::{brute_consensus, brute_coverage, brute_general_cover_exists, brute_occurrences};
use crate::text::{pad_for_seed, Symbol, Text};

/// Strings `S_1 … S_m` of a common length `ℓ` and a budget `k ≤ ℓ`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConsensusInstance {
    strings: Vec<Vec<u8>>,
    k: usize,
}

impl ConsensusInstance {
    pub fn new(strings: Vec<Vec<u8>>, k: usize) -> Result<Self> {
        let Some(first) = strings.first() else {
            return Err(Error::InvalidInstance("at least one string is required".into()));
        };
        let len = first.len();
        if let Some(&bad) = strings.iter().flatten().find(|&&x| x > 1) {
            return Err(Error::NonBinary(bad));
        }
        if strings.iter().any(|s| s.len() != len) {
            return Err(Error::InvalidInstance("strings differ in length".into()));
        }
        if k > len {
            return Err(Error::InvalidInstance(format!("k = {k} exceeds the length {len}")));
        }
        Ok(Self { strings, k })
    }

    /// Parses `m ℓ k` followed by `m` lines of `ℓ` binary digits.
    pub fn parse(src: &str) -> Result<Self> {
        let mut lines = src.lines().map(str::trim).filter(|l| !l.is_empty());
        let header = lines.next().ok_or_else(|| Error::Parse("empty instance file".into()))?;
        let nums: Vec<usize> = header
            .split_whitespace()
            .map(|x| x.parse().map_err(|_| Error::Parse(format!("bad header field {x:?}"))))
            .collect::<Result<_>>()?;
        let [m, len, k] = nums[..] else {
            return Err(Error::Parse(format!("header must be \"m l k\", got {header:?}")));
        };
        let mut strings = Vec::with_capacity(m);
        for _ in 0..m {
            let line = lines.next().unwrap_or("");
            let s: Vec<u8> = line
                .bytes()
                .map(|b| match b {
                    b'0' | b'1' => Ok(b - b'0'),
                    _ => Err(Error::Parse(format!("non-binary character {:?}", b as char))),
                })
                .collect::<Result<_>>()?;
            if s.len() != len {
                return Err(Error::Parse(format!("expected {len} digits, got {line:?}")));
            }
            strings.push(s);
        }
        if lines.next().is_some() {
            return Err(Error::Parse(format!("more than {m} strings")));
        }
        Self::new(strings, k)
    }

    pub fn strings(&self) -> &[Vec<u8>] {
        &self.strings
    }

    pub fn m(&self) -> usize {
        self.strings.len()
    }

    /// `ℓ`.
    pub fn len(&self) -> usize {
        self.strings[0].len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Length of every `γ_i`: `(2k+4) + ℓ(4k+12)`.
    pub fn gamma_len(&self) -> usize {
        2 * self.k + 4 + self.len() * (4 * self.k + 12)
    }
}

impl fmt::Display for ConsensusInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{} {} {}", self.m(), self.len(), self.k)?;
        for s in &self.strings {
            writeln!(f, "{}", render(s))?;
        }
        Ok(())
    }
}

/// `0`/`1` characters.
pub fn render(s: &[u8]) -> String {
    s.iter().map(|&x| char::from(b'0' + x)).collect()
}

fn ones(n: usize) -> impl Iterator<Item = u8> {
    std::iter::repeat_n(1, n)
}

/// `φ(0) = 0^{2k+4} 1010 0^{2k+4}`, `φ(1) = 0^{2k+4} 1011 0^{2k+4}`.
pub fn phi(s: &[u8], k: usize) -> Result<Vec<u8>> {
    let pad = 2 * k + 4;
    let mut out = Vec::with_capacity(s.len() * (2 * pad + 4));
    for &x in s {
        if x > 1 {
            return Err(Error::NonBinary(x));
        }
        out.extend(std::iter::repeat_n(0, pad));
        out.extend([1, 0, 1, x]);
        out.extend(std::iter::repeat_n(0, pad));
    }
    Ok(out)
}

/// `γ = 1^{2k+4} φ(s)`.
pub fn gamma(s: &[u8], k: usize) -> Result<Vec<u8>> {
    let mut out: Vec<u8> = ones(2 * k + 4).collect();
    out.extend(phi(s, k)?);
    Ok(out)
}

/// Inverse of [`gamma`]: the bits at positions `j(4k+12) − 1`, `j = 1…ℓ`.
pub fn psi(u: &[u8], k: usize, len: usize) -> Result<Vec<u8>> {
    let block = 4 * k + 12;
    if u.len() < len * block {
        return Err(Error::TooShort { needed: len * block, got: u.len() });
    }
    Ok((1..=len).map(|j| u[j * block - 1]).collect())
}

/// A constructed text with the length of the cover or seed sought in it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetEncoding {
    pub text: Vec<u8>,
    pub target_len: usize,
}

impl GadgetEncoding {
    pub fn to_text(&self) -> Text {
        binary_text(&self.text)
    }
}

pub fn binary_text(s: &[u8]) -> Text {
    Text::new(s.iter().map(|&x| x as Symbol).collect(), 2).expect("binary symbols")
}

fn gammas(inst: &ConsensusInstance) -> Vec<Vec<u8>> {
    inst.strings().iter().map(|s| gamma(s, inst.k()).expect("validated instance")).collect()
}

/// `T = γ_1 … γ_m` with `c = |γ_i|`.
pub fn build_cover_instance(inst: &ConsensusInstance) -> GadgetEncoding {
    GadgetEncoding { text: gammas(inst).concat(), target_len: inst.gamma_len() }
}

/// `T' = γ_1 · γ_1 γ_2 … γ_m · 1^{2k+4} γ_m 1^{2k+4}` with
/// `c' = |γ_1| + 2k + 4`.
pub fn build_seed_instance(inst: &ConsensusInstance) -> GadgetEncoding {
    let g = gammas(inst);
    let pad = 2 * inst.k() + 4;
    let mut text = g[0].clone();
    text.extend(g.concat());
    text.extend(ones(pad));
    text.extend(g.last().unwrap());
    text.extend(ones(pad));
    GadgetEncoding { text, target_len: inst.gamma_len() + pad }
}

/// Largest number of ones in a length-`w` window of `s`.
pub fn max_window_ones(s: &[u8], w: usize) -> usize {
    if w == 0 || s.len() < w {
        return s.iter().filter(|&&x| x == 1).count();
    }
    s.windows(w).map(|win| win.iter().filter(|&&x| x == 1).count()).max().unwrap_or(0)
}

/// A window of `φ(S_index)` with more than three ones.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WindowViolation {
    pub index: usize,
    pub ones: usize,
}

/// Scans every length-`(2k+4)` window of every `φ(S_i)`.
pub fn validate_window_ones(inst: &ConsensusInstance) -> Vec<WindowViolation> {
    let w = 2 * inst.k() + 4;
    inst.strings()
        .iter()
        .enumerate()
        .filter_map(|(index, s)| {
            let ones = max_window_ones(&phi(s, inst.k()).expect("validated instance"), w);
            (ones > 3).then_some(WindowViolation { index, ones })
        })
        .collect()
}

/// A prefix of `γ_i` and a suffix of `γ_j` of length `p` within `2k`
/// mismatches.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrefixSuffixViolation {
    pub i: usize,
    pub j: usize,
    pub p: usize,
    pub distance: usize,
}

/// Checks that no `γ_i` prefix and `γ_j` suffix of length
/// `p ∈ [2k+4, |γ|−1]` are within Hamming distance `2k`.
pub fn validate_prefix_suffix(inst: &ConsensusInstance) -> Vec<PrefixSuffixViolation> {
    let g = gammas(inst);
    let len = inst.gamma_len();
    let k = inst.k();
    let mut out = Vec::new();
    for (i, gi) in g.iter().enumerate() {
        for (j, gj) in g.iter().enumerate() {
            for p in 2 * k + 4..len {
                let distance = gi[..p].iter().zip(&gj[len - p..]).filter(|(x, y)| x != y).count();
                if distance <= 2 * k {
                    out.push(PrefixSuffixViolation { i, j, p, distance });
                }
            }
        }
    }
    out
}

/// Outcome of the exhaustive search for a length-`c` cover of `T`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CoverSearch {
    /// The search space exceeded the budget; nothing was checked.
    Skipped { candidates: u128, budget: u128 },
    /// No k-approximate cover of length `c` exists.
    NoCover,
    /// The lexicographically first cover and its decoding `ψ(C)`.
    Found { cover: Vec<u8>, decoded: Vec<u8> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForwardVerdict {
    pub consensus: Option<Vec<u8>>,
    /// `StartOcc_k(C, T)` of `C = 1^{2k+4} φ(S)` for the consensus `S`.
    pub start_occ: Vec<usize>,
    /// `C` is a k-approximate cover of `T` with `StartOcc = {0, c, …}`.
    pub cover_ok: bool,
    /// `1^{2k+4} φ(S) 1^{2k+4}` is a k-approximate cover and seed of `T'`.
    pub seed_ok: bool,
    pub search: CoverSearch,
}

impl ForwardVerdict {
    /// Every applicable check passed.
    pub fn holds(&self, inst: &ConsensusInstance) -> bool {
        let search_ok = match (&self.search, &self.consensus) {
            (CoverSearch::Skipped { .. }, _) => true,
            (CoverSearch::NoCover, None) => true,
            (CoverSearch::NoCover, Some(_)) => false,
            (CoverSearch::Found { decoded, .. }, _) => is_consensus(inst, decoded),
        };
        match self.consensus {
            Some(_) => self.cover_ok && self.seed_ok && search_ok,
            None => search_ok,
        }
    }
}

pub fn is_consensus(inst: &ConsensusInstance, s: &[u8]) -> bool {
    s.len() == inst.len()
        && inst
            .strings()
            .iter()
            .all(|x| x.iter().zip(s).filter(|(a, b)| a != b).count() <= inst.k())
}

/// Runs the forward direction of both reductions on `inst`, plus an
/// exhaustive cover search over `{0,1}^c` when it fits in `budget`.
pub fn reduction_forward_check(inst: &ConsensusInstance, budget: u128) -> Result<ForwardVerdict> {
    let k = inst.k();
    let consensus = brute_consensus(inst.strings(), k, budget)?;
    let cover_enc = build_cover_instance(inst);
    let t = cover_enc.to_text();
    let c = cover_enc.target_len;
    let (mut start_occ, mut cover_ok, mut seed_ok) = (Vec::new(), false, false);
    if let Some(s) = &consensus {
        let cover: Vec<Symbol> = gamma(s, k)?.into_iter().map(Symbol::from).collect();
        let occ = brute_occurrences(&cover, t.symbols(), Metric::Hamming, k as i64);
        start_occ = occ.starts().into_iter().map(|x| x as usize).collect();
        let expected: Vec<usize> = (0..inst.m()).map(|i| i * c).collect();
        cover_ok = occ.union_size() == t.len() && start_occ == expected;

        let seed_enc = build_seed_instance(inst);
        let t2 = seed_enc.to_text();
        let mut seed: Vec<Symbol> = cover.clone();
        seed.extend(std::iter::repeat_n(1, 2 * k + 4));
        debug_assert_eq!(seed.len(), seed_enc.target_len);
        let padded = pad_for_seed(&t2);
        seed_ok = brute_coverage(&seed, t2.symbols(), Metric::Hamming, k as i64) == t2.len()
            && brute_coverage(&seed, padded.symbols(), Metric::Hamming, k as i64) == padded.len();
    }
    let search = match brute_general_cover_exists(&t, c, Metric::Hamming, k as i64, budget) {
        Err(Error::BudgetExceeded { candidates, budget }) => CoverSearch::Skipped { candidates, budget },
        Err(e) => return Err(e),
        Ok(None) => CoverSearch::NoCover,
        Ok(Some(found)) => {
            let cover: Vec<u8> = found.iter().map(|&x| x as u8).collect();
            let decoded = psi(&cover, k, inst.len())?;
            CoverSearch::Found { cover, decoded }
        }
    };
    Ok(ForwardVerdict { consensus, start_occ, cover_ok, seed_ok, search })
}
