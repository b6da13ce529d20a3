//! Gauss codes over the branch alphabet `J = {(j, L), (j, R)}`.
//!
//! A code on `n` letters is a cyclic word of length `2n` using every symbol
//! of `J` exactly once. Symbols are stored in their numeric encoding
//! `(j, L) = 2j - 1`, `(j, R) = 2j`, so the order on `J` is integer order and
//! the lexicographic order of codes is the order of their numeric tuples.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported number of crossings (every symbol fits in a `u8`).
pub const MAX_CROSSINGS: usize = 127;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Side {
    L,
    R,
}

/// One branch symbol `(crossing, side)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct JLabel {
    crossing: u8,
    side: Side,
}

impl JLabel {
    pub fn new(crossing: u8, side: Side) -> Self {
        assert!(crossing >= 1, "crossing indices start at 1");
        JLabel { crossing, side }
    }

    /// Decodes `2j - 1 -> (j, L)` and `2j -> (j, R)`.
    pub fn from_num(m: u8) -> Self {
        assert!(m >= 1, "numeric symbols start at 1");
        let crossing = m.div_ceil(2);
        let side = if m % 2 == 1 { Side::L } else { Side::R };
        JLabel { crossing, side }
    }

    pub fn num(self) -> u8 {
        match self.side {
            Side::L => 2 * self.crossing - 1,
            Side::R => 2 * self.crossing,
        }
    }

    pub fn crossing(self) -> u8 {
        self.crossing
    }

    pub fn side(self) -> Side {
        self.side
    }
}

impl Ord for JLabel {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        self.num().cmp(&other.num())
    }
}

impl PartialOrd for JLabel {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for JLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = match self.side {
            Side::L => 'L',
            Side::R => 'R',
        };
        write!(f, "{}{}", self.crossing, side)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Style {
    /// `jL` / `jR` tokens separated by spaces.
    Letter,
    /// `(m1, m2, ..., m2n)`.
    Numeric,
}

/// A validated Gauss code.
///
/// The derived ordering is lexicographic on the numeric tuple, which for codes
/// of equal size is the order induced by `(1, L) < (1, R) < (2, L) < ...`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<u8>", into = "Vec<u8>")]
pub struct GaussCode {
    seq: Vec<u8>,
}

impl GaussCode {
    /// Builds a code from its numeric form, checking the exactly-once invariant.
    pub fn new(seq: Vec<u8>) -> Result<Self> {
        let len = seq.len();
        if len == 0 || len % 2 == 1 {
            return Err(Error::OddLength(len));
        }
        let n = len / 2;
        if n > MAX_CROSSINGS {
            return Err(Error::TooManyCrossings(n));
        }
        let mut seen = vec![false; len + 1];
        for (i, &m) in seq.iter().enumerate() {
            let m_idx = m as usize;
            if m_idx == 0 || m_idx > len {
                return Err(Error::ValueOutOfRange {
                    position: i + 1,
                    value: m_idx,
                    n,
                });
            }
            if seen[m_idx] {
                return Err(Error::DuplicateLabel(JLabel::from_num(m)));
            }
            seen[m_idx] = true;
        }
        // Unreachable by pigeonhole once the checks above pass.
        if let Some(m) = (1..=len).find(|&m| !seen[m]) {
            return Err(Error::MissingLabel(JLabel::from_num(m as u8)));
        }
        Ok(GaussCode { seq })
    }

    pub fn from_labels<I: IntoIterator<Item = JLabel>>(labels: I) -> Result<Self> {
        Self::new(labels.into_iter().map(JLabel::num).collect())
    }

    /// Callers guarantee the invariants.
    pub(crate) fn from_vec_unchecked(seq: Vec<u8>) -> Self {
        debug_assert!(Self::new(seq.clone()).is_ok(), "invalid code {seq:?}");
        GaussCode { seq }
    }

    /// Number of crossings.
    pub fn n(&self) -> usize {
        self.seq.len() / 2
    }

    pub fn len(&self) -> usize {
        self.seq.len()
    }

    pub fn is_empty(&self) -> bool {
        self.seq.is_empty()
    }

    pub fn as_slice(&self) -> &[u8] {
        &self.seq
    }

    pub fn into_vec(self) -> Vec<u8> {
        self.seq
    }

    /// Symbol at 0-based position `i`.
    pub fn label(&self, i: usize) -> JLabel {
        JLabel::from_num(self.seq[i])
    }

    pub fn labels(&self) -> impl Iterator<Item = JLabel> + '_ {
        self.seq.iter().map(|&m| JLabel::from_num(m))
    }

    /// Parses the letter form (`1L 2R ...`) or the numeric form (`(1, 4, ...)`).
    ///
    /// The style is decided by the first token: a trailing `L`/`R` selects
    /// the letter form. Tokens are separated by commas and/or whitespace and an
    /// enclosing pair of parentheses is ignored.
    pub fn parse(text: &str) -> Result<Self> {
        let mut body = text.trim();
        if let Some(inner) = body.strip_prefix('(').and_then(|b| b.strip_suffix(')')) {
            body = inner;
        }
        let tokens: Vec<&str> = body
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .collect();
        let letter = tokens
            .first()
            .and_then(|t| t.chars().last())
            .is_some_and(|c| matches!(c, 'L' | 'l' | 'R' | 'r'));

        // Syntax first, so that a bad token is reported before a bad length.
        let mut raw: Vec<(usize, Option<Side>)> = Vec::with_capacity(tokens.len());
        for (i, token) in tokens.iter().enumerate() {
            let bad = || Error::BadToken {
                position: i + 1,
                token: token.to_string(),
            };
            let (digits, side) = if letter {
                let (idx, side) = token.char_indices().last().ok_or_else(bad)?;
                let side = match side {
                    'L' | 'l' => Side::L,
                    'R' | 'r' => Side::R,
                    _ => return Err(bad()),
                };
                (&token[..idx], Some(side))
            } else {
                (*token, None)
            };
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            raw.push((digits.parse().map_err(|_| bad())?, side));
        }

        if raw.is_empty() || raw.len() % 2 == 1 {
            return Err(Error::OddLength(raw.len()));
        }
        let n = raw.len() / 2;
        if n > MAX_CROSSINGS {
            return Err(Error::TooManyCrossings(n));
        }
        let mut seq = Vec::with_capacity(raw.len());
        for (i, &(value, side)) in raw.iter().enumerate() {
            let position = i + 1;
            let m = match side {
                Some(side) => {
                    if value == 0 || value > n {
                        return Err(Error::ValueOutOfRange { position, value, n });
                    }
                    JLabel::new(value as u8, side).num()
                }
                None => {
                    if value == 0 || value > 2 * n {
                        return Err(Error::ValueOutOfRange { position, value, n });
                    }
                    value as u8
                }
            };
            seq.push(m);
        }
        Self::new(seq)
    }

    pub fn format(&self, style: Style) -> String {
        match style {
            Style::Numeric => {
                let parts: Vec<String> = self.seq.iter().map(u8::to_string).collect();
                format!("({})", parts.join(", "))
            }
            Style::Letter => {
                let parts: Vec<String> = self.labels().map(|l| l.to_string()).collect();
                parts.join(" ")
            }
        }
    }

    /// Applies `pi_*`: every `(j, s)` becomes `(perm[j - 1], s)`.
    pub fn relabel(&self, perm: &[u8]) -> Result<Self> {
        let n = self.n();
        if perm.len() != n {
            return Err(Error::NotAPermutation(n));
        }
        let mut hit = vec![false; n + 1];
        for &p in perm {
            let p = p as usize;
            if p == 0 || p > n || hit[p] {
                return Err(Error::NotAPermutation(n));
            }
            hit[p] = true;
        }
        Ok(self.relabel_unchecked(|j| perm[j as usize - 1]))
    }

    pub(crate) fn relabel_unchecked(&self, perm: impl Fn(u8) -> u8) -> Self {
        let seq = self
            .seq
            .iter()
            .map(|&m| {
                let l = JLabel::from_num(m);
                JLabel::new(perm(l.crossing), l.side).num()
            })
            .collect();
        GaussCode::from_vec_unchecked(seq)
    }

    /// `shift[m]`: moves the first `m` symbols to the end.
    pub fn shift(&self, m: usize) -> Result<Self> {
        if m >= self.len() {
            return Err(Error::ShiftOutOfRange { m, len: self.len() });
        }
        Ok(self.rotated(m))
    }

    pub(crate) fn rotated(&self, m: usize) -> Self {
        let mut seq = self.seq.clone();
        seq.rotate_left(m % self.len());
        GaussCode { seq }
    }

    pub fn reverse(&self) -> Self {
        let mut seq = self.seq.clone();
        seq.reverse();
        GaussCode { seq }
    }

    /// The cyclically adjacent pairs `(x_i, x_{i+1})`, including `(x_2n, x_1)`.
    pub fn adjacent_pairs(&self) -> impl Iterator<Item = (u8, u8)> + '_ {
        let len = self.seq.len();
        (0..len).map(move |i| (self.seq[i], self.seq[(i + 1) % len]))
    }
}

impl fmt::Debug for GaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GaussCode{}", self.format(Style::Numeric))
    }
}

impl fmt::Display for GaussCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.format(Style::Numeric))
    }
}

impl FromStr for GaussCode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        GaussCode::parse(s)
    }
}

impl TryFrom<Vec<u8>> for GaussCode {
    type Error = Error;

    fn try_from(seq: Vec<u8>) -> Result<Self> {
        GaussCode::new(seq)
    }
}

impl From<GaussCode> for Vec<u8> {
    fn from(code: GaussCode) -> Self {
        code.seq
    }
}
