//! Integer combinatorics attached to a pair `(n, d)` with `gcd(d, n−1) = 1`.
//!
//! Writing `n = q·d + r` with `1 ≤ r ≤ d` and `s = d − (r−1)`, the h-sequence
//! `h_i = 1 + (i−1)s mod d` and u-sequence `u_i = i·s mod d` (both with
//! representatives in `1..=d`) drive the construction. The first `d₁` entries of
//! the h-sequence, ending at `r−1`, form the class `Ŝ₁`; the rest form `Ŝ₂`.

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{LeavittError, Result};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Profile {
    pub n: usize,
    pub d: usize,
    pub q: usize,
    pub r: usize,
    pub s: usize,
    pub hseq: Vec<usize>,
    pub useq: Vec<usize>,
    pub s1hat: Vec<usize>,
    pub s2hat: Vec<usize>,
    pub d1: usize,
    pub d2: usize,
    pub e1: usize,
    pub e2: usize,
    pub f1: usize,
    pub f2: usize,
    pub b: usize,
    pub t: usize,
}

/// Which of the two classes an index belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Class {
    One,
    Two,
}

impl Class {
    pub fn number(self) -> u8 {
        match self {
            Class::One => 1,
            Class::Two => 2,
        }
    }
}

/// `w = q_w·d + ŵ` with `1 ≤ ŵ ≤ d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Residue {
    pub quotient: usize,
    pub hat: usize,
    pub class: Class,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub list_size: usize,
    pub box_count: usize,
    pub s1_box_count: usize,
    pub s1_list_count: usize,
}

/// Steps `v ↦ v + s` if `v ≤ r−1`, else `v ↦ v − (r−1)`.
fn step_sequence(start: usize, d: usize, r: usize, s: usize) -> Vec<usize> {
    let mut out = Vec::with_capacity(d);
    let mut v = start;
    out.push(v);
    for _ in 1..d {
        v = if v + 1 <= r { v + s } else { v - (r - 1) };
        out.push(v);
    }
    out
}

/// Builds the profile of `(n, d)`; requires `gcd(d, n−1) = 1` and `d < n`.
pub fn make_profile(n: usize, d: usize) -> Result<Profile> {
    if n < 2 || d < 1 {
        return Err(LeavittError::InvalidParameters(format!("need n >= 2, d >= 1 (n={n}, d={d})")));
    }
    if d.gcd(&(n - 1)) != 1 {
        return Err(LeavittError::NotCoprime { n, d });
    }
    if d >= n {
        return Err(LeavittError::RequiresReduction { n, d });
    }
    let q = (n - 1) / d;
    let r = n - q * d;
    if d == 1 {
        // r = 1: the identity case, nothing to partition
        return Ok(Profile {
            n,
            d,
            q,
            r,
            s: 1,
            hseq: vec![1],
            useq: vec![1],
            s1hat: vec![1],
            s2hat: Vec::new(),
            d1: 1,
            d2: 0,
            e1: 0,
            e2: 0,
            f1: 0,
            f2: 0,
            b: 0,
            t: 0,
        });
    }
    debug_assert!(r >= 2, "r = 1 forces d = 1 under the coprimality hypothesis");
    let s = d - (r - 1);
    let hseq = step_sequence(1, d, r, s);
    let useq = step_sequence(s, d, r, s);
    let d1 = hseq.iter().position(|&h| h == r - 1).expect("r-1 occurs in the h-sequence") + 1;
    let d2 = d - d1;
    let mut s1hat: Vec<usize> = hseq[..d1].to_vec();
    let mut s2hat: Vec<usize> = hseq[d1..].to_vec();
    s1hat.sort_unstable();
    s2hat.sort_unstable();
    let count = |set: &[usize], lo: usize, hi: usize| set.iter().filter(|&&v| lo <= v && v <= hi).count();
    let e1 = count(&s1hat, r - 1, d);
    let e2 = count(&s2hat, r - 1, d);
    let f1 = count(&s1hat, 1, r);
    let f2 = count(&s2hat, 1, r);
    let t = hseq[..d1 - 1].iter().filter(|&&h| h >= r).count();
    let b = d1 - 1 - t;
    Ok(Profile { n, d, q, r, s, hseq, useq, s1hat, s2hat, d1, d2, e1, e2, f1, f2, b, t })
}

/// `d' ≡ d (mod n−1)` with `1 ≤ d' ≤ n−1`.
pub fn reduce_large_d(n: usize, d: usize) -> Result<usize> {
    if n < 2 || d < 1 {
        return Err(LeavittError::InvalidParameters(format!("need n >= 2, d >= 1 (n={n}, d={d})")));
    }
    if d.gcd(&(n - 1)) != 1 {
        return Err(LeavittError::NotCoprime { n, d });
    }
    if d < n {
        return Ok(d);
    }
    Ok((d - 1) % (n - 1) + 1)
}

impl Profile {
    pub fn is_trivial(&self) -> bool {
        self.d == 1
    }

    pub fn h_sequence(&self) -> &[usize] {
        &self.hseq
    }

    pub fn u_sequence(&self) -> &[usize] {
        &self.useq
    }

    pub fn partition(&self) -> (&[usize], &[usize]) {
        (&self.s1hat, &self.s2hat)
    }

    /// `(d1, d2, e1, e2, f1, f2, b, t)`
    pub fn stats(&self) -> [usize; 8] {
        [self.d1, self.d2, self.e1, self.e2, self.f1, self.f2, self.b, self.t]
    }

    /// Class of a row index `1 ≤ i ≤ d`.
    pub fn row_class(&self, i: usize) -> Class {
        if self.s1hat.binary_search(&i).is_ok() {
            Class::One
        } else {
            Class::Two
        }
    }

    /// `i ∼ j`
    pub fn same_class(&self, i: usize, j: usize) -> bool {
        self.row_class(i) == self.row_class(j)
    }

    /// Class of a generator index `1 ≤ w ≤ n`, extended from `{1..d}` modulo `d`.
    pub fn class_of(&self, w: usize) -> Result<Residue> {
        if w == 0 || w > self.n {
            return Err(LeavittError::IndexOutOfRange { index: w, bound: self.n });
        }
        let quotient = (w - 1) / self.d;
        let hat = (w - 1) % self.d + 1;
        Ok(Residue { quotient, hat, class: self.row_class(hat) })
    }

    /// Position (1-based) of a value in the h-sequence.
    pub fn h_position(&self, value: usize) -> usize {
        self.hseq.iter().position(|&h| h == value).expect("value in 1..=d") + 1
    }

    /// Class-1 subset `S₁ ⊆ {1..n}`.
    pub fn s1(&self) -> Vec<usize> {
        (1..=self.n).filter(|&w| self.row_class((w - 1) % self.d + 1) == Class::One).collect()
    }

    pub fn s2(&self) -> Vec<usize> {
        (1..=self.n).filter(|&w| self.row_class((w - 1) % self.d + 1) == Class::Two).collect()
    }

    /// Closed-form sizes of the list and of the boxes to fill.
    pub fn counts(&self) -> Counts {
        if self.is_trivial() {
            return Counts { list_size: 0, box_count: 0, s1_box_count: 0, s1_list_count: 0 };
        }
        let (n, d, q, s) = (self.n as i64, self.d as i64, self.q as i64, self.s as i64);
        let (d1, e1, f1) = (self.d1 as i64, self.e1 as i64, self.f1 as i64);
        let list_size = (d - 1) * (n - 1) + 1;
        let box_count = (s + 1) + d * (n - (q + 2));
        let s1_box_count = d1 * (n - (q + 2)) + e1;
        let s1_list_count = (d - 1) * ((q * d1 - 1) + f1) + 1;
        Counts {
            list_size: list_size as usize,
            box_count: box_count as usize,
            s1_box_count: s1_box_count as usize,
            s1_list_count: s1_list_count as usize,
        }
    }

    /// Checks every structural identity of a nontrivial profile, naming the
    /// first one that fails.
    pub fn check_invariants(&self) -> std::result::Result<(), String> {
        if self.is_trivial() {
            return Ok(());
        }
        let (n, d, q, r, s) = (self.n, self.d, self.q, self.r, self.s);
        let ensure = |ok: bool, what: &str| if ok { Ok(()) } else { Err(what.to_string()) };
        ensure(n == q * d + r && (1..=d).contains(&r), "n = qd + r")?;
        ensure(s + r - 1 == d, "s = d - (r-1)")?;
        ensure(d.gcd(&(n - 1)) == 1 && s.gcd(&d) == 1, "coprimality")?;
        let is_perm = |v: &[usize]| {
            let mut w = v.to_vec();
            w.sort_unstable();
            w == (1..=d).collect::<Vec<_>>()
        };
        ensure(is_perm(&self.hseq), "h-sequence is a permutation")?;
        ensure(is_perm(&self.useq), "u-sequence is a permutation")?;
        ensure(self.hseq[d - 1] == r, "h_d = r")?;
        ensure(self.useq[d - 2] == r - 1, "u_{d-1} = r-1")?;
        ensure(self.useq[d - 1] == d, "u_d = d")?;
        ensure(self.hseq[self.d1 - 1] == r - 1, "h_{d1} = r-1")?;
        for (i, &h) in self.hseq.iter().enumerate() {
            ensure(h == (i * s) % d + 1, "h_i = 1 + (i-1)s mod d")?;
        }
        for (i, &u) in self.useq.iter().enumerate() {
            ensure(u == ((i + 1) * s - 1) % d + 1, "u_i = is mod d")?;
        }
        ensure(self.s1hat.contains(&1) && self.s1hat.contains(&(r - 1)), "1, r-1 in S1hat")?;
        ensure(self.s2hat.contains(&r) && self.s2hat.contains(&d), "r, d in S2hat")?;
        let (d1, d2, e1, e2, f1, f2, b, t) =
            (self.d1, self.d2, self.e1, self.e2, self.f1, self.f2, self.b, self.t);
        ensure(d1 + d2 == d, "d1 + d2 = d")?;
        ensure(e1 + e2 == d - r + 2, "e1 + e2 = d - r + 2")?;
        ensure(f1 + f2 == r, "f1 + f2 = r")?;
        ensure(e1 + f1 == d1 + 1, "e1 + f1 = d1 + 1")?;
        ensure(e2 + f2 == d2 + 1, "e2 + f2 = d2 + 1")?;
        ensure(e1 == t + 1, "e1 = t + 1")?;
        ensure(d1 == 1 + b + t, "d1 = 1 + b + t")?;
        ensure(f1 == 1 + b, "f1 = 1 + b")?;
        ensure(r - 1 + t * (r - 1) == 1 + b * s, "r - 1 = 1 + bs - t(r-1)")?;
        ensure(d1 * r + d == d * f1 + d1 + 1, "d1 r = d f1 - d + d1 + 1")?;
        let c = self.counts();
        ensure(c.list_size == c.box_count, "list size = box count")?;
        ensure(c.s1_box_count == c.s1_list_count, "class-1 boxes = class-1 list entries")?;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn example_35_13() {
        let p = make_profile(35, 13).unwrap();
        assert_eq!((p.q, p.r, p.s), (2, 9, 5));
        assert_eq!(p.hseq, vec![1, 6, 11, 3, 8, 13, 5, 10, 2, 7, 12, 4, 9]);
        assert_eq!(p.s1hat, vec![1, 3, 6, 8, 11]);
        assert_eq!(p.s2hat, vec![2, 4, 5, 7, 9, 10, 12, 13]);
        assert_eq!(p.stats(), [5, 8, 2, 4, 4, 5, 3, 1]);
        assert_eq!(&p.useq[11..], &[8, 13]);
        p.check_invariants().unwrap();
    }

    #[test]
    fn small_examples() {
        let p = make_profile(5, 3).unwrap();
        assert_eq!((p.q, p.r, p.s), (1, 2, 2));
        assert_eq!(p.hseq, vec![1, 3, 2]);
        assert_eq!(p.useq, vec![2, 1, 3]);
        assert_eq!(p.partition(), (&[1][..], &[2, 3][..]));
        assert_eq!(&p.stats()[..6], &[1, 2, 1, 2, 1, 1]);
        assert_eq!(p.s1(), vec![1, 4]);
        assert_eq!(p.s2(), vec![2, 3, 5]);
        let c = p.counts();
        assert_eq!(c.list_size, 9);
        assert_eq!(c.box_count, 9);
        assert_eq!((c.s1_box_count, c.s1_list_count), (3, 3));

        let p = make_profile(6, 3).unwrap();
        assert_eq!((p.q, p.r, p.s), (1, 3, 1));
        assert_eq!(p.partition(), (&[1, 2][..], &[3][..]));
        assert_eq!((p.d1, p.d2), (2, 1));
        assert_eq!(p.s1(), vec![1, 2, 4, 5]);
        assert_eq!(p.s2(), vec![3, 6]);
    }

    #[test]
    fn trivial_profile() {
        let p = make_profile(4, 1).unwrap();
        assert!(p.is_trivial());
        assert_eq!(p.hseq, vec![1]);
        assert_eq!(p.useq, vec![1]);
        assert_eq!(p.class_of(1).unwrap().class, Class::One);
    }

    #[test]
    fn errors() {
        assert_eq!(make_profile(5, 2), Err(LeavittError::NotCoprime { n: 5, d: 2 }));
        assert_eq!(make_profile(5, 7), Err(LeavittError::RequiresReduction { n: 5, d: 7 }));
        assert!(make_profile(1, 1).is_err());
        let p = make_profile(5, 3).unwrap();
        assert!(p.class_of(0).is_err());
        assert!(p.class_of(6).is_err());
    }

    #[test]
    fn class_residues() {
        let p = make_profile(5, 3).unwrap();
        let r = p.class_of(4).unwrap();
        assert_eq!((r.quotient, r.hat, r.class), (1, 1, Class::One));
        let r = p.class_of(5).unwrap();
        assert_eq!((r.quotient, r.hat, r.class), (1, 2, Class::Two));
    }

    #[test]
    fn large_d_reduction() {
        assert_eq!(reduce_large_d(5, 7), Ok(3));
        assert_eq!(reduce_large_d(5, 3), Ok(3));
        assert_eq!(reduce_large_d(5, 4), Err(LeavittError::NotCoprime { n: 5, d: 4 }));
        assert_eq!(reduce_large_d(6, 11), Ok(1));
        assert_eq!(reduce_large_d(5, 6), Err(LeavittError::NotCoprime { n: 5, d: 6 }));
        assert_eq!(reduce_large_d(2, 9), Ok(1));
    }
}
