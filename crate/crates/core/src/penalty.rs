//! Weighted edit costs, metric validation and the edit-distance D-tables.

use std::fmt;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::text::{Alphabet, Symbol, Text, WILDCARD};

/// Exact edit cost. Costs are integers so that every threshold comparison
/// is exact.
pub type Cost = i64;

/// Larger than any reachable distance; sums of two `INF`s do not overflow.
pub const INF: Cost = Cost::MAX / 4;

/// Substitution, insertion and deletion costs over `0..sigma`.
///
/// The wildcard is implicit: substituting, inserting or deleting it is free.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PenaltyMatrix {
    sigma: usize,
    sub: Vec<Cost>,
    ins: Vec<Cost>,
    del: Vec<Cost>,
}

/// A point of `Σ ∪ {ε}`; `None` is the empty string.
pub type Point = Option<Symbol>;

fn show(p: Point) -> String {
    match p {
        Some(x) => x.to_string(),
        None => "ε".to_string(),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MetricViolation {
    Negative { from: Point, to: Point, cost: Cost },
    NonZeroDiagonal { symbol: Symbol, cost: Cost },
    ZeroOffDiagonal { from: Point, to: Point },
    Asymmetric { from: Point, to: Point, forward: Cost, backward: Cost },
    Triangle { x: Point, y: Point, z: Point },
}

impl fmt::Display for MetricViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::Negative { from, to, cost } => {
                write!(f, "negative cost c({},{}) = {cost}", show(from), show(to))
            }
            Self::NonZeroDiagonal { symbol, cost } => {
                write!(f, "c({symbol},{symbol}) = {cost}, expected 0")
            }
            Self::ZeroOffDiagonal { from, to } => {
                write!(f, "c({},{}) = 0 for distinct points", show(from), show(to))
            }
            Self::Asymmetric { from, to, forward, backward } => write!(
                f,
                "c({a},{b}) = {forward} but c({b},{a}) = {backward}",
                a = show(from),
                b = show(to)
            ),
            Self::Triangle { x, y, z } => write!(
                f,
                "c({a},{c}) > c({a},{b}) + c({b},{c})",
                a = show(x),
                b = show(y),
                c = show(z)
            ),
        }
    }
}

impl PenaltyMatrix {
    /// Builds and validates a matrix. `sub` is row-major `sigma × sigma`.
    pub fn new(sigma: usize, sub: Vec<Cost>, ins: Vec<Cost>, del: Vec<Cost>) -> Result<Self> {
        let p = Self::new_unchecked(sigma, sub, ins, del)?;
        p.validate().map_err(Error::NotAMetric)?;
        Ok(p)
    }

    /// Checks only the table shapes; use [`validate`](Self::validate) for the
    /// metric axioms.
    pub fn new_unchecked(
        sigma: usize,
        sub: Vec<Cost>,
        ins: Vec<Cost>,
        del: Vec<Cost>,
    ) -> Result<Self> {
        if sub.len() != sigma * sigma {
            return Err(Error::PenaltyShape(format!(
                "substitution table has {} entries, expected {}",
                sub.len(),
                sigma * sigma
            )));
        }
        if ins.len() != sigma || del.len() != sigma {
            return Err(Error::PenaltyShape(format!(
                "insertion/deletion vectors have {}/{} entries, expected {sigma}",
                ins.len(),
                del.len()
            )));
        }
        Ok(Self { sigma, sub, ins, del })
    }

    /// Levenshtein costs.
    pub fn unit(sigma: usize) -> Self {
        let sub = (0..sigma * sigma)
            .map(|i| Cost::from(i / sigma != i % sigma))
            .collect();
        Self { sigma, sub, ins: vec![1; sigma], del: vec![1; sigma] }
    }

    pub fn sigma(&self) -> usize {
        self.sigma
    }

    #[inline]
    pub fn sub(&self, x: Symbol, y: Symbol) -> Cost {
        if x == WILDCARD || y == WILDCARD {
            0
        } else {
            self.sub[x as usize * self.sigma + y as usize]
        }
    }

    /// `c(ε, x)`.
    #[inline]
    pub fn ins(&self, x: Symbol) -> Cost {
        if x == WILDCARD { 0 } else { self.ins[x as usize] }
    }

    /// `c(x, ε)`.
    #[inline]
    pub fn del(&self, x: Symbol) -> Cost {
        if x == WILDCARD { 0 } else { self.del[x as usize] }
    }

    /// Largest single-operation cost.
    pub fn max_cost(&self) -> Cost {
        self.sub
            .iter()
            .chain(&self.ins)
            .chain(&self.del)
            .copied()
            .max()
            .unwrap_or(0)
    }

    fn point_cost(&self, from: Point, to: Point) -> Cost {
        match (from, to) {
            (Some(x), Some(y)) => self.sub[x as usize * self.sigma + y as usize],
            (None, Some(y)) => self.ins[y as usize],
            (Some(x), None) => self.del[x as usize],
            (None, None) => 0,
        }
    }

    /// Checks the metric axioms over `Σ ∪ {ε}` and reports the first
    /// violation found.
    pub fn validate(&self) -> Result<(), MetricViolation> {
        let points: Vec<Point> = (0..self.sigma as Symbol)
            .map(Some)
            .chain(std::iter::once(None))
            .collect();
        for &p in &points {
            for &q in &points {
                let c = self.point_cost(p, q);
                if c < 0 {
                    return Err(MetricViolation::Negative { from: p, to: q, cost: c });
                }
            }
        }
        for &p in &points {
            if let Some(x) = p {
                let c = self.point_cost(p, p);
                if c != 0 {
                    return Err(MetricViolation::NonZeroDiagonal { symbol: x, cost: c });
                }
            }
            for &q in &points {
                if p != q && self.point_cost(p, q) == 0 {
                    return Err(MetricViolation::ZeroOffDiagonal { from: p, to: q });
                }
            }
        }
        for (i, &p) in points.iter().enumerate() {
            for &q in &points[i + 1..] {
                let (forward, backward) = (self.point_cost(p, q), self.point_cost(q, p));
                if forward != backward {
                    return Err(MetricViolation::Asymmetric { from: p, to: q, forward, backward });
                }
            }
        }
        for &x in &points {
            for &y in &points {
                for &z in &points {
                    if self.point_cost(x, z) > self.point_cost(x, y) + self.point_cost(y, z) {
                        return Err(MetricViolation::Triangle { x, y, z });
                    }
                }
            }
        }
        Ok(())
    }

    fn check_symbols(&self, s: &[Symbol]) -> Result<()> {
        match s.iter().find(|&&x| x != WILDCARD && x as usize >= self.sigma) {
            Some(&symbol) => Err(Error::SymbolOutOfRange { symbol, sigma: self.sigma }),
            None => Ok(()),
        }
    }

    pub fn check_text(&self, t: &Text) -> Result<()> {
        self.check_symbols(t.symbols())
    }
}

/// On-disk penalty description (TOML):
///
/// ```toml
/// alphabet = "ab"
/// substitution = [[0, 1], [1, 0]]
/// insertion = [1, 1]
/// deletion = [1, 1]
/// ```
#[derive(Debug, Clone, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PenaltyFile {
    pub alphabet: String,
    pub substitution: Vec<Vec<Cost>>,
    pub insertion: Vec<Cost>,
    pub deletion: Vec<Cost>,
}

impl PenaltyFile {
    pub fn parse(src: &str) -> Result<Self> {
        toml::from_str(src).map_err(|e| Error::Parse(e.to_string()))
    }

    /// Resolves the file into an alphabet and a validated matrix.
    pub fn into_matrix(self, wildcard: u8) -> Result<(Alphabet, PenaltyMatrix)> {
        let alphabet = Alphabet::new(self.alphabet.as_bytes(), wildcard)?;
        let sigma = alphabet.size();
        if self.substitution.len() != sigma || self.substitution.iter().any(|r| r.len() != sigma) {
            return Err(Error::PenaltyShape(format!(
                "substitution table must be {sigma}×{sigma}"
            )));
        }
        let sub = self.substitution.into_iter().flatten().collect();
        let p = PenaltyMatrix::new(sigma, sub, self.insertion, self.deletion)?;
        Ok((alphabet, p))
    }
}

/// Weighted edit distance between `u` and `v`.
pub fn edit_distance(u: &[Symbol], v: &[Symbol], p: &PenaltyMatrix) -> Result<Cost> {
    p.check_symbols(u)?;
    p.check_symbols(v)?;
    Ok(edit_distance_row(u, v, p)[v.len()])
}

/// Last row of the D-table for `u` against `v`: entry `j` is
/// `ed(u, v[..j])`. Symbols are assumed valid for `p`.
pub(crate) fn edit_distance_row(u: &[Symbol], v: &[Symbol], p: &PenaltyMatrix) -> Vec<Cost> {
    dp_last_row(u, v, |x, y| p.sub(x, y), |y| p.ins(y), |x| p.del(x))
}

/// Levenshtein distance; wildcards are free as under weighted costs.
pub fn levenshtein(u: &[Symbol], v: &[Symbol]) -> Cost {
    let unit = |x: Symbol| Cost::from(x != WILDCARD);
    let sub = |x: Symbol, y: Symbol| Cost::from(x != y && x != WILDCARD && y != WILDCARD);
    dp_last_row(u, v, sub, unit, unit)[v.len()]
}

fn dp_last_row(
    u: &[Symbol],
    v: &[Symbol],
    sub: impl Fn(Symbol, Symbol) -> Cost,
    ins: impl Fn(Symbol) -> Cost,
    del: impl Fn(Symbol) -> Cost,
) -> Vec<Cost> {
    let mut prev: Vec<Cost> = Vec::with_capacity(v.len() + 1);
    prev.push(0);
    for &y in v {
        let last = *prev.last().unwrap();
        prev.push(last + ins(y));
    }
    let mut cur = vec![0; v.len() + 1];
    for &x in u {
        cur[0] = prev[0] + del(x);
        for (j, &y) in v.iter().enumerate() {
            cur[j + 1] = (prev[j] + sub(x, y))
                .min(cur[j] + ins(y))
                .min(prev[j + 1] + del(x));
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev
}

/// `D_{a,a'}`: edit distances between `T[a,b]` and `T[a',b']` for
/// `b ∈ [a−1, n−1]`, `b' ∈ [a'−1, n−1]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DTable {
    a: usize,
    a2: usize,
    rows: usize,
    cols: usize,
    cells: Vec<Cost>,
}

impl DTable {
    pub fn origin(&self) -> (usize, usize) {
        (self.a, self.a2)
    }

    /// `D[b,b']`; `INF` outside the table.
    pub fn get(&self, b: isize, b2: isize) -> Cost {
        let r = b - self.a as isize + 1;
        let c = b2 - self.a2 as isize + 1;
        if r < 0 || c < 0 || r as usize >= self.rows || c as usize >= self.cols {
            INF
        } else {
            self.cells[r as usize * self.cols + c as usize]
        }
    }

    /// Row `b` as the slice over `b' = a'−1 ..= n−1`.
    pub fn row(&self, b: isize) -> &[Cost] {
        let r = (b - self.a as isize + 1) as usize;
        &self.cells[r * self.cols..(r + 1) * self.cols]
    }
}

pub fn build_dtable(t: &Text, a: usize, a2: usize, p: &PenaltyMatrix) -> Result<DTable> {
    let n = t.len();
    for index in [a, a2] {
        if index > n {
            return Err(Error::IndexOutOfRange { index, bound: n });
        }
    }
    p.check_text(t)?;
    Ok(dtable_unchecked(t.symbols(), a, a2, p))
}

pub(crate) fn dtable_unchecked(s: &[Symbol], a: usize, a2: usize, p: &PenaltyMatrix) -> DTable {
    let u = &s[a..];
    let v = &s[a2..];
    let (rows, cols) = (u.len() + 1, v.len() + 1);
    let mut cells = vec![0; rows * cols];
    for j in 1..cols {
        cells[j] = cells[j - 1] + p.ins(v[j - 1]);
    }
    for i in 1..rows {
        let x = u[i - 1];
        let (head, tail) = cells.split_at_mut(i * cols);
        let prev = &head[(i - 1) * cols..];
        let cur = &mut tail[..cols];
        cur[0] = prev[0] + p.del(x);
        for j in 1..cols {
            let y = v[j - 1];
            cur[j] = (prev[j - 1] + p.sub(x, y))
                .min(cur[j - 1] + p.ins(y))
                .min(prev[j] + p.del(x));
        }
    }
    DTable { a, a2, rows, cols, cells }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(s: &str) -> Text {
        Text::from_ascii(s)
    }

    #[test]
    fn edit_distance_examples() {
        let p = PenaltyMatrix::unit(2);
        assert_eq!(edit_distance(t("ab").symbols(), t("ab").symbols(), &p).unwrap(), 0);
        assert_eq!(edit_distance(t("ab").symbols(), &[], &p).unwrap(), 2);
        assert_eq!(edit_distance(t("aa").symbols(), t("b").symbols(), &p).unwrap(), 2);
        assert!(edit_distance(t("c").symbols(), &[], &p).is_err());
    }

    #[test]
    fn wildcards_are_free() {
        let p = PenaltyMatrix::unit(2);
        assert_eq!(edit_distance(t("ab").symbols(), t("??").symbols(), &p).unwrap(), 0);
        assert_eq!(edit_distance(t("ab").symbols(), t("?").symbols(), &p).unwrap(), 1);
        assert_eq!(edit_distance(t("a").symbols(), t("a???").symbols(), &p).unwrap(), 0);
    }

    #[test]
    fn validation() {
        assert_eq!(PenaltyMatrix::unit(3).validate(), Ok(()));
        // c(a,b)=5 with cheap indels through ε
        let p = PenaltyMatrix::new_unchecked(2, vec![0, 5, 5, 0], vec![1, 1], vec![1, 1]).unwrap();
        assert!(matches!(p.validate(), Err(MetricViolation::Triangle { .. })));
        let p = PenaltyMatrix::new_unchecked(2, vec![0, 1, 2, 0], vec![2, 2], vec![2, 2]).unwrap();
        assert!(matches!(p.validate(), Err(MetricViolation::Asymmetric { .. })));
        let p = PenaltyMatrix::new_unchecked(2, vec![0, 1, 1, 0], vec![1, 1], vec![2, 1]).unwrap();
        assert!(matches!(p.validate(), Err(MetricViolation::Asymmetric { from: Some(0), to: None, .. })));
        let p = PenaltyMatrix::new_unchecked(2, vec![0, 0, 0, 0], vec![1, 1], vec![1, 1]).unwrap();
        assert!(matches!(p.validate(), Err(MetricViolation::ZeroOffDiagonal { .. })));
        let p = PenaltyMatrix::new_unchecked(1, vec![1], vec![1], vec![1]).unwrap();
        assert!(matches!(p.validate(), Err(MetricViolation::NonZeroDiagonal { .. })));
        assert!(PenaltyMatrix::new_unchecked(2, vec![0; 3], vec![1; 2], vec![1; 2]).is_err());
    }

    #[test]
    fn dtable_examples() {
        let p = PenaltyMatrix::unit(2);
        let d = build_dtable(&t("ab"), 0, 1, &p).unwrap();
        assert_eq!(d.get(-1, 0), 0);
        assert_eq!(d.get(0, 0), 1);
        assert_eq!(d.get(0, 1), 1);
        assert_eq!(d.get(1, 1), 1);
        assert_eq!(d.get(-1, 1), 1);
        assert_eq!(d.get(5, 1), INF);
        let d = build_dtable(&t("abba"), 2, 2, &p).unwrap();
        for b in 1..4 {
            assert_eq!(d.get(b, b), 0);
        }
        assert!(build_dtable(&t("ab"), 3, 0, &p).is_err());
    }

    #[test]
    fn initialization_row_is_cumulative_insertion() {
        let p = PenaltyMatrix::new(2, vec![0, 3, 3, 0], vec![2, 3], vec![2, 3]).unwrap();
        let text = t("abbab");
        let d = build_dtable(&text, 1, 0, &p).unwrap();
        let mut acc = 0;
        for b2 in 0..5 {
            acc += p.ins(text[b2]);
            assert_eq!(d.get(0, b2 as isize), acc);
        }
    }

    #[test]
    fn penalty_file() {
        let src = r#"
            alphabet = "ab"
            substitution = [[0, 2], [2, 0]]
            insertion = [1, 2]
            deletion = [1, 2]
        "#;
        let (alpha, p) = PenaltyFile::parse(src).unwrap().into_matrix(b'?').unwrap();
        assert_eq!(alpha.bytes(), b"ab");
        assert_eq!(p.sub(0, 1), 2);
        assert_eq!(p.del(1), 2);
        let bad = src.replace("[[0, 2], [2, 0]]", "[[0, 2]]");
        assert!(PenaltyFile::parse(&bad).unwrap().into_matrix(b'?').is_err());
    }
}
