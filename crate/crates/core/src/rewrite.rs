//! Word-level rewriting of formal combinations over `{x_i, y_i}`.
//!
//! Rules: `R1: x_i y_j → δ_ij` and `R2: y_n x_n → 1 − Σ_{j<n} y_j x_j`.
//! [`reduce`] applies them leftmost-innermost until no redex is left. Any other
//! order reaches the same normal form; [`reduce_with`] exposes a seeded random
//! order so that can be checked.

use std::collections::BTreeMap;
use std::fmt;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::element::Element;
use crate::error::{LeavittError, Result};
use crate::field::Field;
use crate::monomial::{Monomial, Word};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    X(u16),
    Y(u16),
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Letter::X(i) => write!(f, "x{i}"),
            Letter::Y(i) => write!(f, "y{i}"),
        }
    }
}

pub type RawWord = Vec<Letter>;

/// A formal linear combination of words in the free algebra.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawExpr<F: Field> {
    pub arity: usize,
    pub terms: Vec<(F, RawWord)>,
}

impl<F: Field> RawExpr<F> {
    pub fn word(arity: usize, word: RawWord) -> Self {
        RawExpr { arity, terms: vec![(F::one(), word)] }
    }

    fn validate(&self) -> Result<()> {
        for (_, w) in &self.terms {
            for l in w {
                let (Letter::X(i) | Letter::Y(i)) = *l;
                if i == 0 || i as usize > self.arity {
                    return Err(LeavittError::GeneratorOutOfRange {
                        index: i as usize,
                        arity: self.arity,
                    });
                }
            }
        }
        Ok(())
    }
}

/// Parses a word like `y1.x2.x3` (or `1` for the empty word).
pub fn parse_word(text: &str, arity: usize) -> Result<RawWord> {
    let text = text.trim();
    if text == "1" || text.is_empty() {
        return Ok(Vec::new());
    }
    text.split('.')
        .map(|tok| {
            let bad = || LeavittError::Parse(format!("bad letter {tok:?}"));
            let (kind, idx) = tok.split_at(1);
            let i: usize = idx.parse().map_err(|_| bad())?;
            if i == 0 || i > arity {
                return Err(LeavittError::GeneratorOutOfRange { index: i, arity });
            }
            match kind {
                "x" => Ok(Letter::X(i as u16)),
                "y" => Ok(Letter::Y(i as u16)),
                _ => Err(bad()),
            }
        })
        .collect()
}

/// Order in which redexes are chosen.
#[derive(Clone, Copy, Debug)]
pub enum ReductionOrder {
    LeftmostInnermost,
    /// Random word and random redex at every step.
    Random(u64),
}

fn redexes(word: &[Letter], n: u16) -> impl Iterator<Item = usize> + '_ {
    word.windows(2).enumerate().filter_map(move |(k, w)| match (w[0], w[1]) {
        (Letter::X(_), Letter::Y(_)) => Some(k),
        (Letter::Y(a), Letter::X(b)) if a == n && b == n => Some(k),
        _ => None,
    })
}

fn add_word<F: Field>(map: &mut BTreeMap<RawWord, F>, w: RawWord, c: F) {
    if c.is_zero() {
        return;
    }
    // zero sums are dropped lazily by the caller
    let entry = map.entry(w).or_insert_with(F::zero);
    *entry = entry.add(&c);
}

/// Rewrites one redex at position `k` of `word`, pushing the results.
fn rewrite_at<F: Field>(
    word: &[Letter],
    k: usize,
    c: &F,
    n: u16,
    out: &mut BTreeMap<RawWord, F>,
) {
    let (pre, post) = (&word[..k], &word[k + 2..]);
    match (word[k], word[k + 1]) {
        (Letter::X(i), Letter::Y(j)) => {
            if i == j {
                add_word(out, [pre, post].concat(), c.clone());
            }
        }
        (Letter::Y(_), Letter::X(_)) => {
            add_word(out, [pre, post].concat(), c.clone());
            for j in 1..n {
                add_word(out, [pre, &[Letter::Y(j), Letter::X(j)], post].concat(), c.neg());
            }
        }
        _ => unreachable!("not a redex"),
    }
}

/// Normal form under the leftmost-innermost order.
pub fn reduce<F: Field>(raw: &RawExpr<F>) -> Result<Element<F>> {
    reduce_with(raw, ReductionOrder::LeftmostInnermost)
}

pub fn reduce_with<F: Field>(raw: &RawExpr<F>, order: ReductionOrder) -> Result<Element<F>> {
    raw.validate()?;
    let n = raw.arity as u16;
    let mut rng = match order {
        ReductionOrder::Random(seed) => Some(ChaCha8Rng::seed_from_u64(seed)),
        ReductionOrder::LeftmostInnermost => None,
    };
    let mut pending: BTreeMap<RawWord, F> = BTreeMap::new();
    for (c, w) in &raw.terms {
        add_word(&mut pending, w.clone(), c.clone());
    }
    let mut normal: BTreeMap<RawWord, F> = BTreeMap::new();
    loop {
        pending.retain(|_, c| !c.is_zero());
        let Some(key) = (match rng.as_mut() {
            Some(r) if !pending.is_empty() => {
                let idx = r.gen_range(0..pending.len());
                pending.keys().nth(idx).cloned()
            }
            _ => pending.keys().next().cloned(),
        }) else {
            break;
        };
        let c = pending.remove(&key).expect("key present");
        let positions: Vec<usize> = redexes(&key, n).collect();
        if positions.is_empty() {
            add_word(&mut normal, key, c);
            continue;
        }
        let k = match rng.as_mut() {
            Some(r) => positions[r.gen_range(0..positions.len())],
            None => positions[0],
        };
        rewrite_at(&key, k, &c, n, &mut pending);
    }
    let terms = normal.into_iter().filter(|(_, c)| !c.is_zero()).map(|(w, c)| {
        let split = w.iter().position(|l| matches!(l, Letter::X(_))).unwrap_or(w.len());
        let y: Word = w[..split]
            .iter()
            .map(|l| match l {
                Letter::Y(i) => *i,
                Letter::X(_) => unreachable!("normal words are y* x*"),
            })
            .collect();
        let x: Word = w[split..]
            .iter()
            .map(|l| match l {
                Letter::X(i) => *i,
                Letter::Y(_) => unreachable!("normal words are y* x*"),
            })
            .collect();
        (Monomial::from_words(y, x), c)
    });
    Ok(Element::from_terms(raw.arity, terms))
}

/// Evaluates a word by multiplying generator elements, without rewriting.
pub fn evaluate_word<F: Field>(word: &[Letter], arity: usize) -> Element<F> {
    word.iter().fold(Element::one(arity), |acc, l| match *l {
        Letter::X(i) => &acc * &Element::x(arity, i as usize),
        Letter::Y(i) => &acc * &Element::y(arity, i as usize),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn red(text: &str, n: usize) -> Element<Rational> {
        reduce(&RawExpr::word(n, parse_word(text, n).unwrap())).unwrap()
    }

    #[test]
    fn orientation_of_r2() {
        let n = 4;
        let expected = (1..n).fold(Element::one(n), |acc, j| {
            &acc - &(&Element::y(n, j) * &Element::x(n, j))
        });
        assert_eq!(red("y4.x4", n), expected);
    }

    #[test]
    fn r1_kills_mismatched_pair() {
        assert!(red("x1.y2.x3", 3).is_zero());
        assert_eq!(red("x1.y1.x3", 3), Element::x(3, 3));
    }

    #[test]
    fn random_orders_agree() {
        let w = parse_word("x2.y3.y3.x3.x3.y1.y3.x3", 3).unwrap();
        let raw = RawExpr::<Rational>::word(3, w.clone());
        let a = reduce_with(&raw, ReductionOrder::Random(1)).unwrap();
        let b = reduce_with(&raw, ReductionOrder::Random(2)).unwrap();
        assert_eq!(a, b);
        assert_eq!(a, evaluate_word(&w, 3));
    }

    #[test]
    fn reduce_is_idempotent() {
        let e = red("y3.x3.y3.x3.x1", 3);
        let again = RawExpr {
            arity: 3,
            terms: e
                .terms()
                .map(|(m, c)| {
                    let w = m
                        .yword()
                        .map(|i| Letter::Y(i as u16))
                        .chain(m.xword().map(|i| Letter::X(i as u16)))
                        .collect();
                    (c.clone(), w)
                })
                .collect(),
        };
        assert_eq!(reduce(&again).unwrap(), e);
    }
}
