//! Result containers shared by the Hamming and edit-distance modules.

use std::collections::HashMap;

use crate::interval::IntervalSet;
use crate::penalty::Cost;
use crate::text::Symbol;

/// k-coverage of every factor `T[a,b]`, `a ≤ b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorCoverage {
    n: usize,
    cells: Vec<u32>,
}

impl FactorCoverage {
    pub(crate) fn from_cells(n: usize, cells: Vec<u32>) -> Self {
        debug_assert_eq!(cells.len(), n * n);
        Self { n, cells }
    }

    pub fn text_len(&self) -> usize {
        self.n
    }

    /// Coverage of `T[a,b]`.
    pub fn get(&self, a: usize, b: usize) -> usize {
        assert!(a <= b && b < self.n, "factor [{a},{b}] out of range");
        self.cells[a * self.n + b] as usize
    }

    /// Rows `(a, b, coverage)` in lexicographic `(a, b)` order.
    pub fn iter(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        (0..self.n).flat_map(move |a| (a..self.n).map(move |b| (a, b, self.get(a, b))))
    }
}

/// What a coverage figure refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Subject {
    Prefix { len: usize },
    Factor { start: usize, end: usize },
}

/// `Covered_k(S, T)` for one subject, optionally with the occurrences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverageReport {
    pub subject: Subject,
    pub coverage: usize,
    pub occurrences: Option<IntervalSet>,
}

/// Minimal threshold of one distinct factor string.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FactorThreshold {
    pub factor: Vec<Symbol>,
    /// Every `(a, b)` with `T[a,b]` equal to `factor`, leftmost first.
    pub occurrences: Vec<(usize, usize)>,
    /// `None` when no admissible threshold exists (e.g. above a search limit).
    pub threshold: Option<Cost>,
}

impl FactorThreshold {
    pub fn start(&self) -> usize {
        self.occurrences[0].0
    }

    pub fn end(&self) -> usize {
        self.occurrences[0].1
    }
}

/// Thresholds for all candidate factors, deduplicated by content.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ThresholdReport {
    pub entries: Vec<FactorThreshold>,
}

impl ThresholdReport {
    /// Groups candidate factors by content. `candidates` must be in
    /// lexicographic `(a, b)` order; entries are ordered by their leftmost
    /// occurrence.
    pub(crate) fn group(
        text: &[Symbol],
        candidates: impl Iterator<Item = (usize, usize)>,
        mut threshold: impl FnMut(usize, usize) -> Option<Cost>,
    ) -> Self {
        let mut slot: HashMap<&[Symbol], usize> = HashMap::new();
        let mut entries: Vec<FactorThreshold> = Vec::new();
        for (a, b) in candidates {
            let key = &text[a..=b];
            match slot.get(key) {
                Some(&e) => entries[e].occurrences.push((a, b)),
                None => {
                    slot.insert(key, entries.len());
                    entries.push(FactorThreshold {
                        factor: key.to_vec(),
                        occurrences: vec![(a, b)],
                        threshold: threshold(a, b),
                    });
                }
            }
        }
        entries.sort_by_key(|e| e.occurrences[0]);
        Self { entries }
    }

    pub fn minimal_threshold(&self) -> Option<Cost> {
        self.entries.iter().filter_map(|e| e.threshold).min()
    }

    /// Entries achieving the minimal threshold.
    pub fn minimal(&self) -> impl Iterator<Item = &FactorThreshold> {
        let best = self.minimal_threshold();
        self.entries
            .iter()
            .filter(move |e| best.is_some() && e.threshold == best)
    }

    pub fn get(&self, factor: &[Symbol]) -> Option<&FactorThreshold> {
        self.entries.iter().find(|e| e.factor == factor)
    }
}
