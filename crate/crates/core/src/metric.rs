use crate::penalty::{edit_distance_row, levenshtein, Cost, PenaltyMatrix};
use crate::text::{hamming_distance, Symbol};

/// Distance selector shared by the coverage front ends and the oracles.
#[derive(Debug, Clone, Copy)]
pub enum Metric<'p> {
    Hamming,
    Levenshtein,
    Edit(&'p PenaltyMatrix),
}

impl Metric<'_> {
    /// `d(u, v)`, or `None` where the metric is undefined (Hamming on
    /// strings of different lengths).
    pub fn distance(&self, u: &[Symbol], v: &[Symbol]) -> Option<Cost> {
        match self {
            Metric::Hamming => hamming_distance(u, v).ok().map(|d| d as Cost),
            Metric::Levenshtein => Some(levenshtein(u, v)),
            Metric::Edit(p) => Some(edit_distance_row(u, v, p)[v.len()]),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Metric::Hamming => "hamming",
            Metric::Levenshtein => "levenshtein",
            Metric::Edit(_) => "edit",
        }
    }
}
