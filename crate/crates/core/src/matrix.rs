//! `M_d(L_n)`: dense `d × d` matrices with entries in `L_n`.
//!
//! Indices in the public API are 1-based, matching `e_{i,j}`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use serde::{Deserialize, Serialize};

use crate::element::{Element, TermJson};
use crate::error::{LeavittError, Result};
use crate::field::{Field, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LMatrix<F: Field = Rational> {
    dim: usize,
    arity: usize,
    entries: Vec<Element<F>>,
}

impl<F: Field> LMatrix<F> {
    pub fn zero(dim: usize, arity: usize) -> Self {
        assert!(dim >= 1, "matrix dimension must be at least 1");
        LMatrix { dim, arity, entries: vec![Element::zero(arity); dim * dim] }
    }

    pub fn identity(dim: usize, arity: usize) -> Self {
        let mut m = Self::zero(dim, arity);
        for i in 0..dim {
            m.entries[i * dim + i] = Element::one(arity);
        }
        m
    }

    /// Builds a matrix from a row-major list of entries.
    pub fn from_entries(dim: usize, arity: usize, entries: Vec<Element<F>>) -> Result<Self> {
        if dim == 0 || entries.len() != dim * dim {
            return Err(LeavittError::InvalidParameters(format!(
                "{} entries for a {dim}x{dim} matrix",
                entries.len()
            )));
        }
        if let Some(e) = entries.iter().find(|e| e.arity() != arity) {
            return Err(LeavittError::ArityMismatch { left: arity, right: e.arity() });
        }
        Ok(LMatrix { dim, arity, entries })
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.dim {
            return Err(LeavittError::IndexOutOfRange { index: i, bound: self.dim });
        }
        Ok(())
    }

    /// `c · e_{i,j}`
    pub fn single(dim: usize, arity: usize, i: usize, j: usize, c: Element<F>) -> Result<Self> {
        let mut m = Self::zero(dim, arity);
        m.check_index(i)?;
        m.check_index(j)?;
        if c.arity() != arity {
            return Err(LeavittError::ArityMismatch { left: arity, right: c.arity() });
        }
        m.entries[(i - 1) * dim + (j - 1)] = c;
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    /// Entry `(i, j)`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> &Element<F> {
        &self.entries[(i - 1) * self.dim + (j - 1)]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Element<F>) {
        assert_eq!(value.arity(), self.arity);
        self.entries[(i - 1) * self.dim + (j - 1)] = value;
    }

    pub fn entries(&self) -> &[Element<F>] {
        &self.entries
    }

    /// Nonzero entries as `(i, j, entry)`, 1-based.
    pub fn nonzero(&self) -> impl Iterator<Item = (usize, usize, &Element<F>)> {
        self.entries
            .iter()
            .enumerate()
            .filter(|(_, e)| !e.is_zero())
            .map(move |(k, e)| (k / self.dim + 1, k % self.dim + 1, e))
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Element::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.entries.iter().enumerate().all(|(k, e)| {
            if k / self.dim == k % self.dim {
                e.is_one()
            } else {
                e.is_zero()
            }
        })
    }

    /// Largest number of terms in any entry.
    pub fn max_entry_len(&self) -> usize {
        self.entries.iter().map(Element::len).max().unwrap_or(0)
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.dim != other.dim {
            return Err(LeavittError::DimensionMismatch { left: self.dim, right: other.dim });
        }
        if self.arity != other.arity {
            return Err(LeavittError::ArityMismatch { left: self.arity, right: other.arity });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect();
        Ok(LMatrix { dim: self.dim, arity: self.arity, entries })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let entries = self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect();
        Ok(LMatrix { dim: self.dim, arity: self.arity, entries })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let d = self.dim;
        let one = F::one();
        let mut acc: Vec<BTreeMap<_, F>> = vec![BTreeMap::new(); d * d];
        for i in 0..d {
            for k in 0..d {
                let a = &self.entries[i * d + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    let b = &other.entries[k * d + j];
                    if !b.is_zero() {
                        a.mul_into(b, &one, &mut acc[i * d + j]);
                    }
                }
            }
        }
        let entries = acc.into_iter().map(|t| Element::from_map(self.arity, t)).collect();
        Ok(LMatrix { dim: d, arity: self.arity, entries })
    }

    pub fn scale(&self, c: &F) -> Self {
        LMatrix {
            dim: self.dim,
            arity: self.arity,
            entries: self.entries.iter().map(|e| e.scale(c)).collect(),
        }
    }

    /// Multiplies every entry on the left by an element of `L_n`.
    pub fn left_mul_element(&self, a: &Element<F>) -> Self {
        LMatrix {
            dim: self.dim,
            arity: self.arity,
            entries: self.entries.iter().map(|e| a * e).collect(),
        }
    }

    /// `self += c · other`
    pub fn add_scaled(&mut self, c: &F, other: &Self) {
        assert_eq!((self.dim, self.arity), (other.dim, other.arity));
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            if !b.is_zero() {
                a.add_assign_ref(&b.scale(c));
            }
        }
    }

    /// `X* = (x_{j,i}*)`
    pub fn involute(&self) -> Self {
        let d = self.dim;
        let mut entries = Vec::with_capacity(d * d);
        for i in 0..d {
            for j in 0..d {
                entries.push(self.entries[j * d + i].involute());
            }
        }
        LMatrix { dim: d, arity: self.arity, entries }
    }

    pub fn to_json(&self) -> MatrixJson {
        MatrixJson {
            dim: self.dim,
            arity: self.arity,
            entries: self.entries.iter().map(Element::to_json).collect(),
        }
    }

    pub fn from_json(json: &MatrixJson) -> Result<Self> {
        let entries = json
            .entries
            .iter()
            .map(|t| Element::from_json(json.arity, t))
            .collect::<Result<Vec<_>>>()?;
        Self::from_entries(json.dim, json.arity, entries)
    }

    /// Aligned text layout, one row per line, entries in compact form.
    pub fn render_pretty(&self) -> String {
        let cells: Vec<String> = self.entries.iter().map(Element::render_compact).collect();
        let width = cells.iter().map(|c| c.chars().count()).max().unwrap_or(1);
        let mut out = String::new();
        for i in 0..self.dim {
            let row: Vec<String> = (0..self.dim)
                .map(|j| format!("{:<width$}", cells[i * self.dim + j]))
                .collect();
            out.push_str(row.join("  ").trim_end());
            out.push('\n');
        }
        out
    }
}

/// `e_{i,j}` in `M_d(L_n)`.
pub fn matrix_unit<F: Field>(dim: usize, arity: usize, i: usize, j: usize) -> Result<LMatrix<F>> {
    LMatrix::single(dim, arity, i, j, Element::one(arity))
}

/// `e_i = e_{i,i}`
pub fn idem<F: Field>(dim: usize, arity: usize, i: usize) -> Result<LMatrix<F>> {
    matrix_unit(dim, arity, i, i)
}

/// `E_i = Σ_{j ≤ i} e_j`; `E_0` is the zero matrix.
pub fn partial_identity<F: Field>(dim: usize, arity: usize, i: usize) -> Result<LMatrix<F>> {
    if i > dim {
        return Err(LeavittError::IndexOutOfRange { index: i, bound: dim });
    }
    let mut m = LMatrix::zero(dim, arity);
    for k in 1..=i {
        m.set(k, k, Element::one(arity));
    }
    Ok(m)
}

/// JSON form: `{dim, arity, entries}` with row-major element arrays.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub dim: usize,
    pub arity: usize,
    pub entries: Vec<Vec<TermJson>>,
}

impl<F: Field> fmt::Display for LMatrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render_pretty())
    }
}

impl<'a, F: Field> Add<&'a LMatrix<F>> for &'a LMatrix<F> {
    type Output = LMatrix<F>;

    fn add(self, rhs: &'a LMatrix<F>) -> LMatrix<F> {
        self.try_add(rhs).expect("shape mismatch in matrix addition")
    }
}

impl<'a, F: Field> Sub<&'a LMatrix<F>> for &'a LMatrix<F> {
    type Output = LMatrix<F>;

    fn sub(self, rhs: &'a LMatrix<F>) -> LMatrix<F> {
        self.try_sub(rhs).expect("shape mismatch in matrix subtraction")
    }
}

impl<'a, F: Field> Mul<&'a LMatrix<F>> for &'a LMatrix<F> {
    type Output = LMatrix<F>;

    fn mul(self, rhs: &'a LMatrix<F>) -> LMatrix<F> {
        self.try_mul(rhs).expect("shape mismatch in matrix multiplication")
    }
}
