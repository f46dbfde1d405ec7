//! The degree-0 component of `L_n` as a direct limit of `M_{n^T}(K)`.
//!
//! At level `T` the basis of `K^{n^T}` is indexed by words of length `T` over
//! `{1..n}` in lexicographic order. A degree-0 monomial `y_α x_β` with
//! `|α| = |β| = t ≤ T` maps to `Σ_w e_{αw, β̄w}` over words `w` of length
//! `T − t`, where `β̄` is `β` read backwards. The connecting maps
//! `M_{n^t} → M_{n^{t+1}}` send `a ↦ a ⊗ I_n`, which is the padding by `w`.

use crate::element::{Degree, Element};
use crate::error::{LeavittError, Result};
use crate::field::Field;

/// Dense square matrix over the coefficient field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarMatrix<F: Field> {
    size: usize,
    data: Vec<F>,
}

impl<F: Field> ScalarMatrix<F> {
    pub fn zero(size: usize) -> Self {
        ScalarMatrix { size, data: vec![F::zero(); size * size] }
    }

    pub fn identity(size: usize) -> Self {
        let mut m = Self::zero(size);
        for i in 0..size {
            m.data[i * size + i] = F::one();
        }
        m
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, row: usize, col: usize) -> &F {
        &self.data[row * self.size + col]
    }

    fn add_at(&mut self, row: usize, col: usize, c: &F) {
        let k = row * self.size + col;
        self.data[k] = self.data[k].add(c);
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        assert_eq!(self.size, rhs.size);
        let n = self.size;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = &self.data[i * n + k];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = &rhs.data[k * n + j];
                    if !b.is_zero() {
                        out.add_at(i, j, &a.mul(b));
                    }
                }
            }
        }
        out
    }

    /// Nonzero entries as `(row, col, value)`, 0-based.
    pub fn nonzero(&self) -> Vec<(usize, usize, F)> {
        (0..self.size * self.size)
            .filter(|&k| !self.data[k].is_zero())
            .map(|k| (k / self.size, k % self.size, self.data[k].clone()))
            .collect()
    }
}

fn word_index(word: impl Iterator<Item = usize>, arity: usize) -> usize {
    word.fold(0, |acc, letter| acc * arity + (letter - 1))
}

/// Image of a degree-0 element in `M_{n^T}(K)`.
pub fn degree_zero_image<F: Field>(a: &Element<F>, level: usize) -> Result<ScalarMatrix<F>> {
    match a.degree() {
        Degree::Any | Degree::Exactly(0) => {}
        _ => return Err(LeavittError::NotDegreeZero),
    }
    let n = a.arity();
    let needed = a.terms().map(|(m, _)| m.ylen()).max().unwrap_or(0);
    if needed > level {
        return Err(LeavittError::LevelTooSmall { level, needed });
    }
    let size = n.checked_pow(level as u32).ok_or_else(|| {
        LeavittError::InvalidParameters(format!("n^T overflows for n={n}, T={level}"))
    })?;
    let mut out = ScalarMatrix::zero(size);
    for (m, c) in a.terms() {
        let t = m.ylen();
        let row0 = word_index(m.yword(), n);
        let col0 = word_index(m.xword().collect::<Vec<_>>().into_iter().rev(), n);
        let pad = n.pow((level - t) as u32);
        for w in 0..pad {
            out.add_at(row0 * pad + w, col0 * pad + w, c);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    type E = Element<Rational>;

    #[test]
    fn level_one_unit() {
        let n = 2;
        let a = &E::y(n, 1) * &E::x(n, 1);
        let img = degree_zero_image(&a, 1).unwrap();
        assert_eq!(img.nonzero(), vec![(0, 0, Rational::from(1))]);
    }

    #[test]
    fn padding_by_one_letter() {
        // words 11, 12, 21, 22 -> indices 0..4
        let n = 2;
        let a = &E::y(n, 1) * &E::x(n, 1);
        let img = degree_zero_image(&a, 2).unwrap();
        let one = Rational::from(1);
        assert_eq!(img.nonzero(), vec![(0, 0, one.clone()), (1, 1, one)]);
    }

    #[test]
    fn unital() {
        for n in 2..=3 {
            for t in 0..=3 {
                assert_eq!(
                    degree_zero_image(&E::one(n), t).unwrap(),
                    ScalarMatrix::identity(n.pow(t as u32))
                );
            }
        }
    }

    #[test]
    fn junction_term_is_consistent() {
        // y_n x_n reduces to 1 - Σ y_j x_j; its image is still e_{n,n}
        let n = 3;
        let a = &E::y(n, 3) * &E::x(n, 3);
        let img = degree_zero_image(&a, 1).unwrap();
        assert_eq!(img.nonzero(), vec![(2, 2, Rational::from(1))]);
    }

    #[test]
    fn errors() {
        assert_eq!(degree_zero_image(&E::x(2, 1), 1), Err(LeavittError::NotDegreeZero));
        let a = &(&E::y(2, 1) * &E::y(2, 1)) * &(&E::x(2, 1) * &E::x(2, 2));
        assert_eq!(
            degree_zero_image(&a, 1),
            Err(LeavittError::LevelTooSmall { level: 1, needed: 2 })
        );
    }
}
