//! Isomorphism questions for `M_d(L_n)` decided from `K₀` data and the grading.

use std::fmt;

use num_integer::Integer;
use serde::Serialize;

use crate::error::{LeavittError, Result};

/// `(ℤ/(n−1)ℤ, [d])`, with `[1]` of the matrix ring at `unit_class`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct K0Class {
    pub modulus: usize,
    pub unit_class: usize,
}

fn check_params(n: usize, d: usize) -> Result<()> {
    if n < 2 || d < 1 {
        return Err(LeavittError::InvalidParameters(format!("need n >= 2 and d >= 1, got n={n}, d={d}")));
    }
    Ok(())
}

pub fn k0_data(n: usize, d: usize) -> Result<K0Class> {
    check_params(n, d)?;
    Ok(K0Class { modulus: n - 1, unit_class: d % (n - 1) })
}

/// `(1, m)` with `R^a ≅ R^b` iff `a ≡ b (mod m)` for `a, b ≥ 1`.
pub fn module_type(n: usize, d: usize) -> Result<(usize, usize)> {
    check_params(n, d)?;
    Ok((1, (n - 1) / d.gcd(&(n - 1))))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Reason {
    /// Different `n`, so the `K₀` groups have different orders.
    ModulusMismatch,
    /// `ℤ/1ℤ`: every matrix size gives the same data.
    TrivialK0,
    /// Whether `[k]` lies in the orbit of `[d]` under multiplication by units.
    K0UnitOrbit,
    /// Every prime of `d` divides `n`, or not.
    PrimeDivisibility,
}

impl Reason {
    pub fn as_str(self) -> &'static str {
        match self {
            Reason::ModulusMismatch => "modulus-mismatch",
            Reason::TrivialK0 => "trivial-k0",
            Reason::K0UnitOrbit => "k0-unit-orbit",
            Reason::PrimeDivisibility => "prime-divisibility",
        }
    }
}

impl fmt::Display for Reason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub isomorphic: bool,
    pub reason: Reason,
}

/// Whether `M_d(L_n) ≅ M_k(L_m)`.
pub fn is_isomorphic(n: usize, d: usize, m: usize, k: usize) -> Result<Verdict> {
    check_params(n, d)?;
    check_params(m, k)?;
    if n != m {
        return Ok(Verdict { isomorphic: false, reason: Reason::ModulusMismatch });
    }
    if n == 2 {
        return Ok(Verdict { isomorphic: true, reason: Reason::TrivialK0 });
    }
    let isomorphic = d.gcd(&(n - 1)) == k.gcd(&(n - 1));
    Ok(Verdict { isomorphic, reason: Reason::K0UnitOrbit })
}

/// `[k] = [d]·u` for some unit `u` of `ℤ/modulus`, by trying every `u`.
pub fn in_unit_orbit(modulus: usize, d: usize, k: usize) -> bool {
    if modulus <= 1 {
        return true;
    }
    (1..modulus).filter(|u| u.gcd(&modulus) == 1).any(|u| (d * u) % modulus == k % modulus)
}

/// Whether `d | n^α` for some `α ≥ 0`.
pub fn graded_iso_exists(n: usize, d: usize) -> Result<bool> {
    check_params(n, d)?;
    let mut rest = d;
    loop {
        let g = rest.gcd(&n);
        if g == 1 {
            break;
        }
        rest /= g;
    }
    Ok(rest == 1)
}

/// Whether some `2n` matrices with entries of degree `±1` can generate
/// `M_d(L_n)`; only asked when the rings are isomorphic at all.
pub fn degree_one_generating_set_possible(n: usize, d: usize) -> Result<bool> {
    check_params(n, d)?;
    if d.gcd(&(n - 1)) != 1 {
        return Err(LeavittError::NotCoprime { n, d });
    }
    graded_iso_exists(n, d)
}

/// Everything the classifier says about one `M_d(L_n)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Classification {
    pub n: usize,
    pub d: usize,
    pub k0: K0Class,
    pub module_type: (usize, usize),
    pub isomorphic_to_l_n: bool,
    pub graded_iso: bool,
}

pub fn classify(n: usize, d: usize) -> Result<Classification> {
    Ok(Classification {
        n,
        d,
        k0: k0_data(n, d)?,
        module_type: module_type(n, d)?,
        isomorphic_to_l_n: is_isomorphic(n, d, n, 1)?.isomorphic,
        graded_iso: graded_iso_exists(n, d)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k0_examples() {
        assert_eq!(k0_data(5, 3).unwrap(), K0Class { modulus: 4, unit_class: 3 });
        assert_eq!(k0_data(2, 7).unwrap(), K0Class { modulus: 1, unit_class: 0 });
        assert_eq!(k0_data(6, 11).unwrap(), K0Class { modulus: 5, unit_class: 1 });
        assert!(k0_data(1, 3).is_err());
        assert!(k0_data(3, 0).is_err());
    }

    #[test]
    fn module_types() {
        assert_eq!(module_type(5, 3).unwrap(), (1, 4));
        assert_eq!(module_type(5, 2).unwrap(), (1, 2));
        for n in 2..10 {
            assert_eq!(module_type(n, 1).unwrap(), (1, n - 1));
        }
    }

    #[test]
    fn iso_examples() {
        assert!(is_isomorphic(5, 3, 5, 1).unwrap().isomorphic);
        let v = is_isomorphic(5, 2, 5, 1).unwrap();
        assert!(!v.isomorphic);
        assert_eq!(v.reason, Reason::K0UnitOrbit);
        assert!(is_isomorphic(5, 2, 5, 6).unwrap().isomorphic);
        assert_eq!(is_isomorphic(5, 1, 6, 1).unwrap().reason, Reason::ModulusMismatch);
        assert_eq!(is_isomorphic(2, 3, 2, 8).unwrap().reason, Reason::TrivialK0);
    }

    #[test]
    fn graded_examples() {
        assert!(graded_iso_exists(6, 3).unwrap());
        assert!(!graded_iso_exists(5, 3).unwrap());
        assert!(graded_iso_exists(6, 4).unwrap());
        assert!(graded_iso_exists(7, 1).unwrap());
        assert!(degree_one_generating_set_possible(6, 3).unwrap());
        assert!(!degree_one_generating_set_possible(5, 3).unwrap());
        assert!(!degree_one_generating_set_possible(9, 5).unwrap());
        assert!(matches!(degree_one_generating_set_possible(5, 2), Err(LeavittError::NotCoprime { .. })));
    }

    #[test]
    fn reason_strings() {
        assert_eq!(serde_json::to_string(&Reason::K0UnitOrbit).unwrap(), "\"k0-unit-orbit\"");
        assert_eq!(Reason::PrimeDivisibility.to_string(), "prime-divisibility");
    }
}
