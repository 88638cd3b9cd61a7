//! Approximate quasiperiodicity of strings: k-coverage, restricted
//! approximate covers and seeds, and enhanced covers under the Hamming,
//! Levenshtein and weighted edit distances.

pub mod bench;
pub mod edit;
pub mod error;
pub mod gadget;
pub mod hamming;
pub mod interval;
pub mod lcpk;
pub mod metric;
pub mod oracle;
pub mod penalty;
pub mod report;
pub mod restricted;
pub mod sample;
pub mod text;

pub use error::{Error, Result};
pub use metric::Metric;
pub use penalty::{Cost, PenaltyMatrix, INF};
pub use text::{Alphabet, Symbol, Text, WILDCARD};
