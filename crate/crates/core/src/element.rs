//! Elements of `L_n`: finite linear combinations of reduced monomials.
//!
//! Multiplication uses the rewriting rules `x_i y_j → δ_ij` and
//! `y_n x_n → 1 − Σ_{j<n} y_j x_j` directly on monomials. Every stored
//! monomial satisfies the junction condition, so two elements are equal exactly
//! when their term maps are equal.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{LeavittError, Result};
use crate::field::{Field, Rational};
use crate::monomial::{Monomial, Word};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Element<F: Field = Rational> {
    arity: usize,
    terms: BTreeMap<Monomial, F>,
}

/// Homogeneity of an element under the `ℤ`-grading.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Degree {
    /// The zero element, homogeneous of every degree.
    Any,
    Exactly(i64),
    Mixed,
}

pub(crate) fn accumulate<F: Field>(terms: &mut BTreeMap<Monomial, F>, m: Monomial, c: F) {
    if c.is_zero() {
        return;
    }
    match terms.entry(m) {
        std::collections::btree_map::Entry::Vacant(v) => {
            v.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut o) => {
            let sum = o.get().add(&c);
            if sum.is_zero() {
                o.remove();
            } else {
                *o.get_mut() = sum;
            }
        }
    }
}

/// Adds `c · y_y x_x` to `out`, expanding every `y_n x_n` junction.
pub(crate) fn push_reduced<F: Field>(
    y: Word,
    x: Word,
    c: F,
    arity: usize,
    out: &mut BTreeMap<Monomial, F>,
) {
    let n = arity as u16;
    if y.last() == Some(&n) && x.first() == Some(&n) {
        let mut y_rest = y;
        y_rest.pop();
        let x_rest: Word = x[1..].iter().copied().collect();
        let minus = c.neg();
        for j in 1..n {
            let mut yj = y_rest.clone();
            yj.push(j);
            let mut xj = Word::with_capacity(x_rest.len() + 1);
            xj.push(j);
            xj.extend_from_slice(&x_rest);
            accumulate(out, Monomial::from_words(yj, xj), minus.clone());
        }
        push_reduced(y_rest, x_rest, c, arity, out);
    } else {
        accumulate(out, Monomial::from_words(y, x), c);
    }
}

/// Product of two reduced monomials in `L_n`, accumulated with weight `c`.
pub(crate) fn mono_mul_into<F: Field>(
    a: &Monomial,
    b: &Monomial,
    c: F,
    arity: usize,
    out: &mut BTreeMap<Monomial, F>,
) {
    // cancel x_{a.x} against y_{b.y} from the inside out
    let ax = &a.x;
    let by = &b.y;
    let k = ax.len().min(by.len());
    for i in 0..k {
        if ax[ax.len() - 1 - i] != by[i] {
            return;
        }
    }
    let (y, x) = if ax.len() >= by.len() {
        // y_{a.y} x_{a.x[..rest]} x_{b.x}
        let mut x: Word = ax[..ax.len() - k].iter().copied().collect();
        x.extend_from_slice(&b.x);
        (a.y.clone(), x)
    } else {
        let mut y = a.y.clone();
        y.extend_from_slice(&by[k..]);
        (y, b.x.clone())
    };
    push_reduced(y, x, c, arity, out);
}

/// Product of two monomials as a reduced element.
pub fn mono_mul<F: Field>(a: &Monomial, b: &Monomial, arity: usize) -> Result<Element<F>> {
    for m in [a, b] {
        if m.max_index() > arity {
            return Err(LeavittError::GeneratorOutOfRange { index: m.max_index(), arity });
        }
        if !m.is_reduced(arity) {
            return Err(LeavittError::NotReduced);
        }
    }
    let mut terms = BTreeMap::new();
    mono_mul_into(a, b, F::one(), arity, &mut terms);
    Ok(Element { arity, terms })
}

impl<F: Field> Element<F> {
    pub fn zero(arity: usize) -> Self {
        Element { arity, terms: BTreeMap::new() }
    }

    pub fn one(arity: usize) -> Self {
        Self::scalar(arity, F::one())
    }

    pub fn scalar(arity: usize, c: F) -> Self {
        let mut terms = BTreeMap::new();
        accumulate(&mut terms, Monomial::one(), c);
        Element { arity, terms }
    }

    /// `x_i`; panics if `i` is out of range.
    pub fn x(arity: usize, i: usize) -> Self {
        assert!((1..=arity).contains(&i), "x_{i} outside L_{arity}");
        Self::monomial(arity, Monomial::x(i))
    }

    /// `y_i`; panics if `i` is out of range.
    pub fn y(arity: usize, i: usize) -> Self {
        assert!((1..=arity).contains(&i), "y_{i} outside L_{arity}");
        Self::monomial(arity, Monomial::y(i))
    }

    /// A single basis monomial, reduced first if it crosses the junction.
    pub fn monomial(arity: usize, m: Monomial) -> Self {
        Self::from_terms(arity, [(m, F::one())])
    }

    /// Sums arbitrary (possibly unreduced) `y_α x_β` terms.
    pub fn from_terms(arity: usize, terms: impl IntoIterator<Item = (Monomial, F)>) -> Self {
        let mut out = BTreeMap::new();
        for (m, c) in terms {
            push_reduced(m.y, m.x, c, arity, &mut out);
        }
        Element { arity, terms: out }
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self.terms.first_key_value().is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &Monomial) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    /// The single monomial with coefficient 1, if the element is one.
    pub fn as_monomial(&self) -> Option<&Monomial> {
        match self.terms.first_key_value() {
            Some((m, c)) if self.terms.len() == 1 && c.is_one() => Some(m),
            _ => None,
        }
    }

    fn check_arity(&self, other: &Self) -> Result<()> {
        if self.arity != other.arity {
            return Err(LeavittError::ArityMismatch { left: self.arity, right: other.arity });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            accumulate(&mut terms, m.clone(), c.clone());
        }
        Ok(Element { arity: self.arity, terms })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&other.scale(&F::one().neg()))
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        let mut terms = BTreeMap::new();
        self.mul_into(other, &F::one(), &mut terms);
        Ok(Element { arity: self.arity, terms })
    }

    /// Adds `c · self · other` into `out`.
    pub(crate) fn mul_into(&self, other: &Self, c: &F, out: &mut BTreeMap<Monomial, F>) {
        for (ma, ca) in &self.terms {
            let cac = ca.mul(c);
            for (mb, cb) in &other.terms {
                mono_mul_into(ma, mb, cac.mul(cb), self.arity, out);
            }
        }
    }

    pub(crate) fn from_map(arity: usize, terms: BTreeMap<Monomial, F>) -> Self {
        Element { arity, terms }
    }

    pub(crate) fn add_assign_ref(&mut self, other: &Self) {
        for (m, c) in &other.terms {
            accumulate(&mut self.terms, m.clone(), c.clone());
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.arity);
        }
        Element {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v.mul(c))).collect(),
        }
    }

    /// The coefficient-fixing involution `x_i ↔ y_i`, an anti-automorphism.
    pub fn involute(&self) -> Self {
        Element {
            arity: self.arity,
            terms: self.terms.iter().map(|(m, c)| (m.involute(), c.clone())).collect(),
        }
    }

    pub fn degree(&self) -> Degree {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => Degree::Any,
            Some(d) if degs.all(|e| e == d) => Degree::Exactly(d),
            Some(_) => Degree::Mixed,
        }
    }

    /// Longest monomial, 0 for the zero element.
    pub fn max_len(&self) -> usize {
        self.terms.keys().map(Monomial::len).max().unwrap_or(0)
    }

    pub fn pow(&self, e: usize) -> Self {
        let mut acc = Self::one(self.arity);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// Compact rendering used in matrix displays: `x1^2`, `1 - y1x1`.
    pub fn render_compact(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let (neg, abs) = split_sign(c);
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = m.render_compact();
            match (abs == "1", m.is_one()) {
                (true, _) => out.push_str(&mono),
                (false, true) => out.push_str(&abs),
                (false, false) => out.push_str(&format!("{abs}{mono}")),
            }
        }
        out
    }

    pub fn to_json(&self) -> Vec<TermJson> {
        self.terms
            .iter()
            .map(|(m, c)| TermJson {
                coeff: c.to_string(),
                y: m.yword().collect(),
                x: m.xword().collect(),
            })
            .collect()
    }

    pub fn from_json(arity: usize, terms: &[TermJson]) -> Result<Self> {
        let mut out = Vec::with_capacity(terms.len());
        for t in terms {
            for &i in t.y.iter().chain(t.x.iter()) {
                if i == 0 || i > arity {
                    return Err(LeavittError::GeneratorOutOfRange { index: i, arity });
                }
            }
            let m = Monomial::from_words(
                t.y.iter().map(|&i| i as u16).collect(),
                t.x.iter().map(|&i| i as u16).collect(),
            );
            out.push((m, F::parse(&t.coeff)?));
        }
        Ok(Self::from_terms(arity, out))
    }
}

fn split_sign<F: Field>(c: &F) -> (bool, String) {
    let s = c.to_string();
    match s.strip_prefix('-') {
        Some(rest) => (true, rest.to_string()),
        None => (false, s),
    }
}

/// JSON form of a single term: `{"coeff": "p/q", "y": [..], "x": [..]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermJson {
    pub coeff: String,
    pub y: Vec<usize>,
    pub x: Vec<usize>,
}

impl<F: Field> fmt::Display for Element<F> {
    /// Signed sum with explicit coefficients in canonical term order, e.g.
    /// `1*1 - 1*y1.x1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let (neg, abs) = split_sign(c);
            match (k, neg) {
                (0, true) => write!(f, "-{abs}*{m}")?,
                (0, false) => write!(f, "{abs}*{m}")?,
                (_, true) => write!(f, " - {abs}*{m}")?,
                (_, false) => write!(f, " + {abs}*{m}")?,
            }
        }
        Ok(())
    }
}

impl<'a, F: Field> Add<&'a Element<F>> for &'a Element<F> {
    type Output = Element<F>;

    fn add(self, rhs: &'a Element<F>) -> Element<F> {
        self.try_add(rhs).expect("arity mismatch in Element addition")
    }
}

impl<'a, F: Field> Sub<&'a Element<F>> for &'a Element<F> {
    type Output = Element<F>;

    fn sub(self, rhs: &'a Element<F>) -> Element<F> {
        self.try_sub(rhs).expect("arity mismatch in Element subtraction")
    }
}

impl<'a, F: Field> Mul<&'a Element<F>> for &'a Element<F> {
    type Output = Element<F>;

    fn mul(self, rhs: &'a Element<F>) -> Element<F> {
        self.try_mul(rhs).expect("arity mismatch in Element multiplication")
    }
}

impl<F: Field> Neg for &Element<F> {
    type Output = Element<F>;

    fn neg(self) -> Element<F> {
        self.scale(&F::one().neg())
    }
}
