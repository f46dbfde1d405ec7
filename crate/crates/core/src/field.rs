//! Exact coefficient fields.
//!
//! Everything in this crate is generic over [`Field`]. The default is
//! [`Rational`], an exact rational number that stays on machine words while the
//! numerator and denominator fit and promotes itself to a big rational when they
//! do not. [`Fp`] is the prime field of order `P`.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::LeavittError;

/// An exact field of coefficients.
pub trait Field:
    Clone + PartialEq + Eq + Hash + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(value: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
    /// Parses `p` or `p/q`.
    fn parse(text: &str) -> Result<Self, LeavittError>;
    /// Stable identifier, `rational` or `fp<p>`.
    fn name() -> String;

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

#[derive(Clone, Debug)]
enum Repr {
    /// `den > 0`, `gcd(num, den) = 1`.
    Small { num: i64, den: i64 },
    /// Only used when the reduced value does not fit `Small`.
    Big(BigRational),
}

/// Exact rational number with an overflow-free small representation.
#[derive(Clone, Debug)]
pub struct Rational(Repr);

impl Rational {
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_i128(num as i128, den as i128)
    }

    fn from_i128(num: i128, den: i128) -> Self {
        let (mut num, mut den) = (num, den);
        if den < 0 {
            num = -num;
            den = -den;
        }
        let g = num.gcd(&den);
        if g > 1 {
            num /= g;
            den /= g;
        }
        match (i64::try_from(num), i64::try_from(den)) {
            (Ok(num), Ok(den)) => Rational(Repr::Small { num, den }),
            _ => Rational(Repr::Big(BigRational::new(BigInt::from(num), BigInt::from(den)))),
        }
    }

    fn from_big(value: BigRational) -> Self {
        match (value.numer().to_i64(), value.denom().to_i64()) {
            (Some(num), Some(den)) => Rational(Repr::Small { num, den }),
            _ => Rational(Repr::Big(value)),
        }
    }

    fn to_big(&self) -> BigRational {
        match &self.0 {
            Repr::Small { num, den } => {
                BigRational::new_raw(BigInt::from(*num), BigInt::from(*den))
            }
            Repr::Big(b) => b.clone(),
        }
    }

    pub fn numer(&self) -> BigInt {
        match &self.0 {
            Repr::Small { num, .. } => BigInt::from(*num),
            Repr::Big(b) => b.numer().clone(),
        }
    }

    pub fn denom(&self) -> BigInt {
        match &self.0 {
            Repr::Small { den, .. } => BigInt::from(*den),
            Repr::Big(b) => b.denom().clone(),
        }
    }
}

impl PartialEq for Rational {
    fn eq(&self, other: &Self) -> bool {
        match (&self.0, &other.0) {
            (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) => a == c && b == d,
            (Repr::Big(x), Repr::Big(y)) => x == y,
            // normalized values never mix representations
            _ => false,
        }
    }
}

impl Eq for Rational {}

impl Hash for Rational {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match &self.0 {
            Repr::Small { num, den } => {
                0u8.hash(state);
                num.hash(state);
                den.hash(state);
            }
            Repr::Big(b) => {
                1u8.hash(state);
                b.hash(state);
            }
        }
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Small { num, den: 1 } => write!(f, "{num}"),
            Repr::Small { num, den } => write!(f, "{num}/{den}"),
            Repr::Big(b) if b.denom().is_one() => write!(f, "{}", b.numer()),
            Repr::Big(b) => write!(f, "{}/{}", b.numer(), b.denom()),
        }
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Rational(Repr::Small { num: 0, den: 1 })
    }

    fn one() -> Self {
        Rational(Repr::Small { num: 1, den: 1 })
    }

    fn from_i64(value: i64) -> Self {
        Rational(Repr::Small { num: value, den: 1 })
    }

    fn is_zero(&self) -> bool {
        matches!(self.0, Repr::Small { num: 0, .. })
    }

    fn add(&self, rhs: &Self) -> Self {
        match (&self.0, &rhs.0) {
            (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) => {
                if b == d {
                    Self::from_i128(*a as i128 + *c as i128, *b as i128)
                } else {
                    let (a, b, c, d) = (*a as i128, *b as i128, *c as i128, *d as i128);
                    Self::from_i128(a * d + c * b, b * d)
                }
            }
            _ => Self::from_big(self.to_big() + rhs.to_big()),
        }
    }

    fn mul(&self, rhs: &Self) -> Self {
        match (&self.0, &rhs.0) {
            (Repr::Small { num: a, den: b }, Repr::Small { num: c, den: d }) => {
                Self::from_i128(*a as i128 * *c as i128, *b as i128 * *d as i128)
            }
            _ => Self::from_big(self.to_big() * rhs.to_big()),
        }
    }

    fn neg(&self) -> Self {
        match &self.0 {
            Repr::Small { num, den } => match num.checked_neg() {
                Some(num) => Rational(Repr::Small { num, den: *den }),
                None => Self::from_big(-self.to_big()),
            },
            Repr::Big(b) => Self::from_big(-b.clone()),
        }
    }

    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        match &self.0 {
            Repr::Small { num, den } => Some(Self::from_i128(*den as i128, *num as i128)),
            Repr::Big(b) => Some(Self::from_big(b.recip())),
        }
    }

    fn parse(text: &str) -> Result<Self, LeavittError> {
        let bad = || LeavittError::Parse(format!("invalid rational coefficient {text:?}"));
        let text = text.trim();
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (text, "1"),
        };
        let num = BigInt::from_str(num).map_err(|_| bad())?;
        let den = BigInt::from_str(den).map_err(|_| bad())?;
        if den.is_zero() {
            return Err(bad());
        }
        Ok(Self::from_big(BigRational::new(num, den)))
    }

    fn name() -> String {
        "rational".to_string()
    }
}

impl From<i64> for Rational {
    fn from(value: i64) -> Self {
        Rational::from_i64(value)
    }
}

impl Rational {
    pub fn is_negative(&self) -> bool {
        match &self.0 {
            Repr::Small { num, .. } => *num < 0,
            Repr::Big(b) => b.is_negative(),
        }
    }
}

/// The prime field with `P` elements. `P` must be prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Fp<const P: u64>(u64);

impl<const P: u64> Fp<P> {
    const VALID: () = assert!(P >= 2 && P <= (1 << 62), "modulus out of range");

    pub fn new(value: i64) -> Self {
        #[allow(clippy::let_unit_value)]
        let _ = Self::VALID;
        Fp((value as i128).rem_euclid(P as i128) as u64)
    }

    pub fn value(self) -> u64 {
        self.0
    }

    fn pow(self, mut e: u64) -> Self {
        let mut base = self.0 as u128;
        let mut acc = 1u128;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base % P as u128;
            }
            base = base * base % P as u128;
            e >>= 1;
        }
        Fp(acc as u64)
    }
}

impl<const P: u64> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u64> Field for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }

    fn one() -> Self {
        Fp(1 % P)
    }

    fn from_i64(value: i64) -> Self {
        Fp::new(value)
    }

    fn is_zero(&self) -> bool {
        self.0 == 0
    }

    fn add(&self, rhs: &Self) -> Self {
        Fp(((self.0 as u128 + rhs.0 as u128) % P as u128) as u64)
    }

    fn mul(&self, rhs: &Self) -> Self {
        Fp(((self.0 as u128 * rhs.0 as u128) % P as u128) as u64)
    }

    fn neg(&self) -> Self {
        if self.0 == 0 {
            *self
        } else {
            Fp(P - self.0)
        }
    }

    fn inv(&self) -> Option<Self> {
        if self.0 == 0 {
            None
        } else {
            Some(self.pow(P - 2))
        }
    }

    fn parse(text: &str) -> Result<Self, LeavittError> {
        let bad = || LeavittError::Parse(format!("invalid coefficient {text:?} for fp<{P}>"));
        let reduce = |s: &str| -> Result<Self, LeavittError> {
            let v = BigInt::from_str(s.trim()).map_err(|_| bad())?;
            let r = v.mod_floor(&BigInt::from(P));
            Ok(Fp(r.to_u64().ok_or_else(bad)?))
        };
        match text.split_once('/') {
            Some((n, d)) => {
                let d = reduce(d)?.inv().ok_or_else(bad)?;
                Ok(reduce(n)?.mul(&d))
            }
            None => reduce(text),
        }
    }

    fn name() -> String {
        format!("fp<{P}>")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_rationals_normalize() {
        assert_eq!(Rational::new(2, -4), Rational::new(-1, 2));
        assert_eq!(Rational::new(3, 3), Rational::one());
        assert_eq!(Rational::new(1, 3).to_string(), "1/3");
        assert_eq!(Rational::from_i64(-7).to_string(), "-7");
    }

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = Rational::from_i64(i64::MAX);
        let sq = big.mul(&big);
        assert!(matches!(sq.0, Repr::Big(_)));
        let back = sq.mul(&big.inv().unwrap());
        assert_eq!(back, big);
        assert!(matches!(back.0, Repr::Small { .. }));
        let min = Rational::from_i64(i64::MIN);
        assert_eq!(min.neg().add(&min), Rational::zero());
    }

    #[test]
    fn rational_parse() {
        assert_eq!(Rational::parse("-3/6").unwrap(), Rational::new(-1, 2));
        assert_eq!(Rational::parse("5").unwrap(), Rational::from_i64(5));
        assert!(Rational::parse("1/0").is_err());
        assert!(Rational::parse("x").is_err());
    }

    #[test]
    fn prime_field() {
        type F7 = Fp<7>;
        let a = F7::from_i64(3);
        assert_eq!(a.mul(&a.inv().unwrap()), F7::one());
        assert_eq!(F7::from_i64(-1), F7::from_i64(6));
        assert_eq!(F7::parse("1/2").unwrap(), F7::from_i64(4));
        assert_eq!(F7::name(), "fp<7>");
    }
}
