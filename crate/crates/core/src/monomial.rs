//! Reduced monomials `y_α x_β` of the Leavitt algebra `L_n`.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};
use smallvec::SmallVec;

use crate::error::{LeavittError, Result};

/// Index of a free generator `x_i` / `y_i`, `1 ≤ i ≤ n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct GenIndex(u16);

impl GenIndex {
    pub fn new(value: usize, arity: usize) -> Result<Self> {
        if value == 0 || value > arity || value > u16::MAX as usize {
            return Err(LeavittError::GeneratorOutOfRange { index: value, arity });
        }
        Ok(GenIndex(value as u16))
    }

    pub fn get(self) -> usize {
        self.0 as usize
    }
}

pub type Word = SmallVec<[u16; 6]>;

/// The basis element `y_{a1}…y_{ak} x_{b1}…x_{bl}`.
///
/// `y` stores `a1…ak` and `x` stores `b1…bl` in left-to-right reading order.
/// A monomial is reduced for `L_n` when it is not of the form `… y_n x_n …` at
/// the junction between the two words.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    pub(crate) y: Word,
    pub(crate) x: Word,
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.y.cmp(&other.y))
            .then_with(|| self.x.cmp(&other.x))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Monomial {
    pub fn one() -> Self {
        Monomial::default()
    }

    /// Builds a monomial, checking index ranges and the junction condition.
    pub fn new(y: &[usize], x: &[usize], arity: usize) -> Result<Self> {
        let conv = |w: &[usize]| -> Result<Word> {
            w.iter()
                .map(|&i| GenIndex::new(i, arity).map(|g| g.0))
                .collect()
        };
        let m = Monomial { y: conv(y)?, x: conv(x)? };
        if !m.is_reduced(arity) {
            return Err(LeavittError::NotReduced);
        }
        Ok(m)
    }

    pub(crate) fn from_words(y: Word, x: Word) -> Self {
        Monomial { y, x }
    }

    pub fn x(i: usize) -> Self {
        Monomial { y: Word::new(), x: smallvec::smallvec![i as u16] }
    }

    pub fn y(i: usize) -> Self {
        Monomial { y: smallvec::smallvec![i as u16], x: Word::new() }
    }

    /// `x_u x_1^t`
    pub fn list_entry(u: usize, t: usize) -> Self {
        let mut x = Word::new();
        x.push(u as u16);
        x.extend(std::iter::repeat(1u16).take(t));
        Monomial { y: Word::new(), x }
    }

    pub fn yword(&self) -> impl Iterator<Item = usize> + '_ {
        self.y.iter().map(|&i| i as usize)
    }

    pub fn xword(&self) -> impl Iterator<Item = usize> + '_ {
        self.x.iter().map(|&i| i as usize)
    }

    pub fn ylen(&self) -> usize {
        self.y.len()
    }

    pub fn xlen(&self) -> usize {
        self.x.len()
    }

    pub fn len(&self) -> usize {
        self.y.len() + self.x.len()
    }

    pub fn is_one(&self) -> bool {
        self.y.is_empty() && self.x.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_one()
    }

    pub fn is_reduced(&self, arity: usize) -> bool {
        !(self.y.last() == Some(&(arity as u16)) && self.x.first() == Some(&(arity as u16)))
    }

    pub fn max_index(&self) -> usize {
        self.y.iter().chain(self.x.iter()).copied().max().unwrap_or(0) as usize
    }

    /// `deg(y^t x^u) = u - t`
    pub fn degree(&self) -> i64 {
        self.x.len() as i64 - self.y.len() as i64
    }

    /// `(y_α x_β)* = y_{rev β} x_{rev α}`
    pub fn involute(&self) -> Self {
        Monomial {
            y: self.x.iter().rev().copied().collect(),
            x: self.y.iter().rev().copied().collect(),
        }
    }

    /// Writes the monomial as `y1.y2.x3`, or `1` for the empty word.
    pub fn render(&self) -> String {
        self.to_string()
    }

    /// Compact rendering with powers, e.g. `x2x1^2`.
    pub fn render_compact(&self) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        let mut out = String::new();
        for (letter, word) in [('y', &self.y), ('x', &self.x)] {
            let mut i = 0;
            while i < word.len() {
                let mut j = i;
                while j < word.len() && word[j] == word[i] {
                    j += 1;
                }
                out.push_str(&format!("{letter}{}", word[i]));
                if j - i > 1 {
                    out.push_str(&format!("^{}", j - i));
                }
                i = j;
            }
        }
        out
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .y
            .iter()
            .map(|i| format!("y{i}"))
            .chain(self.x.iter().map(|i| format!("x{i}")))
            .collect();
        write!(f, "{}", parts.join("."))
    }
}
