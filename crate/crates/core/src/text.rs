//! Symbol sequences, alphabets and the wildcard.
//!
//! Texts are stored as dense symbol identifiers `0..sigma`. The reserved
//! [`WILDCARD`] identifier matches every other symbol under Hamming
//! comparison and is free under weighted edit operations.

use std::fmt;

use crate::error::{Error, Result};

/// Dense symbol identifier.
pub type Symbol = u32;

/// Reserved identifier for the wildcard (a "hole" of a partial word).
pub const WILDCARD: Symbol = Symbol::MAX;

/// Default input byte that denotes the wildcard.
pub const DEFAULT_WILDCARD_BYTE: u8 = b'?';

#[inline]
pub fn symbols_match(x: Symbol, y: Symbol) -> bool {
    x == y || x == WILDCARD || y == WILDCARD
}

/// Byte-to-identifier mapping.
///
/// Symbol `i` is the `i`-th byte of `bytes`; the wildcard byte is kept
/// separately and is never part of the alphabet proper.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    bytes: Vec<u8>,
    index: [Option<Symbol>; 256],
    wildcard: u8,
}

impl Alphabet {
    pub fn new(bytes: &[u8], wildcard: u8) -> Result<Self> {
        let mut index = [None; 256];
        for (i, &b) in bytes.iter().enumerate() {
            if b == wildcard {
                return Err(Error::WildcardInAlphabet(wildcard as char));
            }
            if index[b as usize].is_some() {
                return Err(Error::DuplicateSymbol(b as char));
            }
            index[b as usize] = Some(i as Symbol);
        }
        Ok(Self { bytes: bytes.to_vec(), index, wildcard })
    }

    /// Alphabet of the distinct non-wildcard bytes of `input`, in byte order.
    pub fn from_input(input: &[u8], wildcard: u8) -> Self {
        let mut seen = [false; 256];
        for &b in input {
            seen[b as usize] = true;
        }
        seen[wildcard as usize] = false;
        let bytes: Vec<u8> = (0..=255u8).filter(|&b| seen[b as usize]).collect();
        Self::new(&bytes, wildcard).expect("distinct bytes without wildcard")
    }

    pub fn size(&self) -> usize {
        self.bytes.len()
    }

    pub fn wildcard(&self) -> u8 {
        self.wildcard
    }

    pub fn bytes(&self) -> &[u8] {
        &self.bytes
    }

    pub fn encode(&self, input: &[u8]) -> Result<Text> {
        let symbols = input
            .iter()
            .enumerate()
            .map(|(pos, &b)| {
                if b == self.wildcard {
                    Ok(WILDCARD)
                } else {
                    self.index[b as usize].ok_or(Error::UnknownByte { byte: b, pos })
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Text { symbols, sigma: self.size() })
    }

    pub fn decode(&self, symbols: &[Symbol]) -> String {
        symbols
            .iter()
            .map(|&s| {
                if s == WILDCARD {
                    self.wildcard as char
                } else {
                    self.bytes[s as usize] as char
                }
            })
            .collect()
    }
}

/// A (partial) word over `0..sigma` plus [`WILDCARD`].
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Text {
    symbols: Vec<Symbol>,
    sigma: usize,
}

impl Text {
    pub fn new(symbols: Vec<Symbol>, sigma: usize) -> Result<Self> {
        if let Some(pos) = symbols
            .iter()
            .position(|&s| s != WILDCARD && s as usize >= sigma)
        {
            return Err(Error::SymbolOutOfRange { symbol: symbols[pos], sigma });
        }
        Ok(Self { symbols, sigma })
    }

    /// Shorthand for tests and examples: lowercase ASCII letters map to
    /// `0..26`, `'?'` maps to the wildcard; `sigma` is the smallest size
    /// covering the letters used.
    pub fn from_ascii(s: &str) -> Self {
        let symbols: Vec<Symbol> = s
            .bytes()
            .map(|b| match b {
                b'?' => WILDCARD,
                b'a'..=b'z' => (b - b'a') as Symbol,
                b'0'..=b'9' => (b - b'0') as Symbol,
                _ => panic!("from_ascii: unsupported byte {:?}", b as char),
            })
            .collect();
        let sigma = symbols
            .iter()
            .filter(|&&s| s != WILDCARD)
            .map(|&s| s as usize + 1)
            .max()
            .unwrap_or(0);
        Self { symbols, sigma }
    }

    pub fn empty(sigma: usize) -> Self {
        Self { symbols: Vec::new(), sigma }
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn sigma(&self) -> usize {
        self.sigma
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn has_wildcards(&self) -> bool {
        self.symbols.contains(&WILDCARD)
    }

    /// `T[i,j]` with inclusive bounds; empty when `j < i`.
    pub fn factor(&self, i: usize, j: isize) -> &[Symbol] {
        if j < i as isize {
            &[]
        } else {
            &self.symbols[i..=j as usize]
        }
    }

    /// Cyclic shift `rot_b`: for `T = XY` with `|X| = b`, returns `YX`.
    pub fn rotate(&self, b: usize) -> Text {
        let mut symbols = self.symbols.clone();
        if !symbols.is_empty() {
            symbols.rotate_left(b % self.len());
        }
        Text { symbols, sigma: self.sigma }
    }
}

impl std::ops::Index<usize> for Text {
    type Output = Symbol;

    fn index(&self, i: usize) -> &Symbol {
        &self.symbols[i]
    }
}

impl fmt::Display for Text {
    /// Renders symbols `< 26` as lowercase letters, the wildcard as `?`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &s in &self.symbols {
            let c = match s {
                WILDCARD => '?',
                0..=25 => (b'a' + s as u8) as char,
                _ => '#',
            };
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Number of mismatching positions; a wildcard on either side matches.
pub fn hamming_distance(u: &[Symbol], v: &[Symbol]) -> Result<usize> {
    if u.len() != v.len() {
        return Err(Error::LengthMismatch { left: u.len(), right: v.len() });
    }
    Ok(u.iter().zip(v).filter(|&(&x, &y)| !symbols_match(x, y)).count())
}

/// `◇ⁿ · T · ◇ⁿ`: covers of the padded text are exactly the seeds of `T`.
pub fn pad_for_seed(t: &Text) -> Text {
    let n = t.len();
    let mut symbols = Vec::with_capacity(3 * n);
    symbols.extend(std::iter::repeat_n(WILDCARD, n));
    symbols.extend_from_slice(t.symbols());
    symbols.extend(std::iter::repeat_n(WILDCARD, n));
    Text { symbols, sigma: t.sigma() }
}

/// Lengths of all proper borders of `s`, longest first, via the failure
/// function.
pub fn border_lengths(s: &[Symbol]) -> Vec<usize> {
    let n = s.len();
    if n == 0 {
        return Vec::new();
    }
    let mut fail = vec![0usize; n];
    let mut k = 0;
    for i in 1..n {
        while k > 0 && s[i] != s[k] {
            k = fail[k - 1];
        }
        if s[i] == s[k] {
            k += 1;
        }
        fail[i] = k;
    }
    let mut out = Vec::new();
    let mut b = fail[n - 1];
    while b > 0 {
        out.push(b);
        b = fail[b - 1];
    }
    out
}
