//! Generator sets in `M_d(L_n)`.
//!
//! [`build_generators`] produces the `2n` matrices of the main construction:
//! `X_1..X_q` carry `x_1..x_{qd}` down column 1, `X_{q+1}` and `X_{q+2}` carry
//! the remaining variables together with fixed 1-entries, and the list
//! monomials `x_u x_1^t` are placed in column `d` of `X_{q+2}..X_n` subject to
//! the class constraint. The graded set (for `d | n`) and the lexicographic set
//! are also available.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::One;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::element::Element;
use crate::error::{LeavittError, Result};
use crate::field::Field;
use crate::matrix::{LMatrix, MatrixJson};
use crate::monomial::Monomial;
use crate::profile::{Class, Profile};

/// The list monomial `x_u x_1^t`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ListEntry {
    pub u: usize,
    pub t: usize,
}

impl ListEntry {
    pub fn monomial(self) -> Monomial {
        Monomial::list_entry(self.u, self.t)
    }

    pub fn element<F: Field>(self, arity: usize) -> Element<F> {
        Element::monomial(arity, self.monomial())
    }

    /// Reads `x_u x_1^t` back from a monomial, if it has that shape.
    pub fn from_monomial(m: &Monomial) -> Option<Self> {
        if m.ylen() != 0 || m.xlen() == 0 {
            return None;
        }
        let mut it = m.xword();
        let u = it.next()?;
        let rest: Vec<usize> = it.collect();
        if rest.iter().any(|&i| i != 1) {
            return None;
        }
        Some(ListEntry { u, t: rest.len() })
    }
}

impl fmt::Display for ListEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.monomial())
    }
}

impl std::str::FromStr for ListEntry {
    type Err = LeavittError;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || LeavittError::Parse(format!("not a list monomial: {s:?}"));
        let letters: Vec<usize> = s
            .split('.')
            .map(|tok| tok.strip_prefix('x').and_then(|i| i.parse().ok()).ok_or_else(bad))
            .collect::<Result<_>>()?;
        let m = Monomial::from_words(
            smallvec::SmallVec::new(),
            letters.iter().map(|&i| i as u16).collect(),
        );
        ListEntry::from_monomial(&m).ok_or_else(bad)
    }
}

/// The `(d−1)(n−1)+1` monomials `x_1^{d−1}` and `x_u x_1^t` (`2 ≤ u ≤ n`,
/// `0 ≤ t ≤ d−2`), in display order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheList {
    entries: Vec<ListEntry>,
}

impl TheList {
    pub fn entries(&self) -> &[ListEntry] {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// The list with arbitrary entries, e.g. with one removed.
    pub fn from_entries(entries: Vec<ListEntry>) -> Self {
        TheList { entries }
    }
}

pub fn the_list(profile: &Profile) -> Result<TheList> {
    if profile.is_trivial() {
        return Err(LeavittError::EmptyConstruction);
    }
    let (n, d) = (profile.n, profile.d);
    let mut entries = vec![ListEntry { u: 1, t: d - 2 }];
    for t in (0..=d - 2).rev() {
        entries.extend((2..=n).map(|u| ListEntry { u, t }));
    }
    Ok(TheList { entries })
}

/// Class of a list entry: the class of its leading index `u`.
pub fn entry_class(profile: &Profile, entry: ListEntry) -> Class {
    profile.row_class((entry.u - 1) % profile.d + 1)
}

/// An entry of column `d` in `X_matrix` still to be specified.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct BoxRef {
    pub matrix: usize,
    pub row: usize,
}

/// All boxes: rows `r−1..d` of `X_{q+2}`, then every row of `X_{q+3}..X_n`.
pub fn boxes(profile: &Profile) -> Vec<BoxRef> {
    if profile.is_trivial() {
        return Vec::new();
    }
    let (n, d, q, r) = (profile.n, profile.d, profile.q, profile.r);
    let mut out: Vec<BoxRef> = (r - 1..=d).map(|row| BoxRef { matrix: q + 2, row }).collect();
    for matrix in q + 3..=n {
        out.extend((1..=d).map(|row| BoxRef { matrix, row }));
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum PlacementStrategy {
    Canonical,
    Random,
    Explicit,
}

/// A class-compatible bijection from list entries to boxes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Placement {
    assignment: BTreeMap<BoxRef, ListEntry>,
    pub strategy: PlacementStrategy,
    pub seed: Option<u64>,
}

/// One placement record in JSON: `{entry, matrix, row}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlacementJson {
    pub entry: String,
    pub matrix: usize,
    pub row: usize,
}

impl Placement {
    pub fn get(&self, b: BoxRef) -> Option<ListEntry> {
        self.assignment.get(&b).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = (BoxRef, ListEntry)> + '_ {
        self.assignment.iter().map(|(b, e)| (*b, *e))
    }

    /// The box holding a given entry.
    pub fn locate(&self, entry: ListEntry) -> Option<BoxRef> {
        self.assignment.iter().find(|(_, e)| **e == entry).map(|(b, _)| *b)
    }

    pub fn len(&self) -> usize {
        self.assignment.len()
    }

    pub fn is_empty(&self) -> bool {
        self.assignment.is_empty()
    }

    /// Validates and wraps an explicit assignment.
    pub fn explicit(
        profile: &Profile,
        assignment: impl IntoIterator<Item = (BoxRef, ListEntry)>,
    ) -> Result<Self> {
        let p = Placement {
            assignment: assignment.into_iter().collect(),
            strategy: PlacementStrategy::Explicit,
            seed: None,
        };
        p.validate(profile)?;
        Ok(p)
    }

    /// Bijectivity onto the boxes and class compatibility.
    pub fn validate(&self, profile: &Profile) -> Result<()> {
        let expected_boxes = boxes(profile);
        let list = if profile.is_trivial() { Vec::new() } else { the_list(profile)?.entries };
        if self.assignment.len() != expected_boxes.len()
            || expected_boxes.iter().any(|b| !self.assignment.contains_key(b))
        {
            return Err(LeavittError::InvalidPlacement("boxes not filled exactly once".into()));
        }
        let mut used: Vec<ListEntry> = self.assignment.values().copied().collect();
        used.sort_unstable();
        let mut want = list;
        want.sort_unstable();
        if used != want {
            return Err(LeavittError::InvalidPlacement("list entries not used exactly once".into()));
        }
        for (b, e) in &self.assignment {
            if profile.row_class(b.row) != entry_class(profile, *e) {
                return Err(LeavittError::InvalidPlacement(format!(
                    "{e} (class {}) in row {} of X_{} (class {})",
                    entry_class(profile, *e).number(),
                    b.row,
                    b.matrix,
                    profile.row_class(b.row).number()
                )));
            }
        }
        Ok(())
    }

    pub fn to_json(&self) -> Vec<PlacementJson> {
        self.assignment
            .iter()
            .map(|(b, e)| PlacementJson { entry: e.to_string(), matrix: b.matrix, row: b.row })
            .collect()
    }

    pub fn from_json(profile: &Profile, records: &[PlacementJson]) -> Result<Self> {
        let pairs = records
            .iter()
            .map(|r| Ok((BoxRef { matrix: r.matrix, row: r.row }, r.entry.parse()?)))
            .collect::<Result<Vec<_>>>()?;
        Self::explicit(profile, pairs)
    }

    /// Reads the placement off the column-`d` boxes of a generator set.
    pub fn from_generators<F: Field>(profile: &Profile, gens: &GeneratorSet<F>) -> Result<Self> {
        let mut pairs = Vec::new();
        for b in boxes(profile) {
            let entry = gens.x[b.matrix - 1].get(b.row, profile.d);
            let m = entry
                .as_monomial()
                .and_then(ListEntry::from_monomial)
                .ok_or_else(|| {
                    LeavittError::InvalidPlacement(format!(
                        "X_{}[{},{}] is not a list monomial",
                        b.matrix, b.row, profile.d
                    ))
                })?;
            pairs.push((b, m));
        }
        Self::explicit(profile, pairs)
    }
}

/// Canonical first-fit placement or a uniformly random compatible one.
pub fn make_placement(
    profile: &Profile,
    list: &TheList,
    strategy: PlacementStrategy,
    seed: Option<u64>,
) -> Result<Placement> {
    let all_boxes = boxes(profile);
    let mut by_class: BTreeMap<Class, Vec<ListEntry>> = BTreeMap::new();
    for &e in list.entries() {
        by_class.entry(entry_class(profile, e)).or_default().push(e);
    }
    let mut ordered_boxes = all_boxes.clone();
    match strategy {
        PlacementStrategy::Canonical => {
            // (matrix index, h-order of rows)
            ordered_boxes.sort_by_key(|b| (b.matrix, profile.h_position(b.row)));
        }
        PlacementStrategy::Random => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed.unwrap_or(0));
            for entries in by_class.values_mut() {
                entries.shuffle(&mut rng);
            }
        }
        PlacementStrategy::Explicit => {
            return Err(LeavittError::InvalidParameters(
                "explicit placements are built with Placement::explicit".into(),
            ))
        }
    }
    let mut cursors: BTreeMap<Class, std::vec::IntoIter<ListEntry>> =
        by_class.into_iter().map(|(k, v)| (k, v.into_iter())).collect();
    let mut assignment = BTreeMap::new();
    for b in ordered_boxes {
        let class = profile.row_class(b.row);
        let entry = cursors.get_mut(&class).and_then(Iterator::next).ok_or_else(|| {
            LeavittError::InvalidPlacement(format!("no class-{} entry left", class.number()))
        })?;
        assignment.insert(b, entry);
    }
    let placement = Placement {
        assignment,
        strategy,
        seed: if strategy == PlacementStrategy::Random { Some(seed.unwrap_or(0)) } else { None },
    };
    placement.validate(profile)?;
    Ok(placement)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    MainConstruction,
    Graded,
    LeavittLex,
    External,
}

/// `2n` matrices `X_1..X_n`, `Y_i = X_i*`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet<F: Field> {
    pub n: usize,
    pub d: usize,
    pub provenance: Provenance,
    pub x: Vec<LMatrix<F>>,
    pub y: Vec<LMatrix<F>>,
    pub placement: Option<Placement>,
    pub label: Option<String>,
}

/// JSON form of a generator set. `Y` is never stored; it is `X*`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GeneratorSetJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub label: Option<String>,
    pub n: usize,
    pub d: usize,
    pub provenance: Provenance,
    #[serde(rename = "X")]
    pub x: Vec<MatrixJson>,
    #[serde(default)]
    pub placement: Vec<PlacementJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub placement_strategy: Option<PlacementStrategy>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl<F: Field> GeneratorSet<F> {
    /// Wraps `X` matrices, deriving `Y_i = X_i*`.
    pub fn from_x(n: usize, d: usize, provenance: Provenance, x: Vec<LMatrix<F>>) -> Result<Self> {
        if x.len() != n {
            return Err(LeavittError::InvalidParameters(format!(
                "{} matrices for L_{n}",
                x.len()
            )));
        }
        for m in &x {
            if m.dim() != d {
                return Err(LeavittError::DimensionMismatch { left: d, right: m.dim() });
            }
            if m.arity() != n {
                return Err(LeavittError::ArityMismatch { left: n, right: m.arity() });
            }
        }
        let y = x.iter().map(LMatrix::involute).collect();
        Ok(GeneratorSet { n, d, provenance, x, y, placement: None, label: None })
    }

    /// `X_i`, 1-based.
    pub fn xm(&self, i: usize) -> &LMatrix<F> {
        &self.x[i - 1]
    }

    /// `Y_i`, 1-based.
    pub fn ym(&self, i: usize) -> &LMatrix<F> {
        &self.y[i - 1]
    }

    pub fn to_json(&self) -> GeneratorSetJson {
        GeneratorSetJson {
            label: self.label.clone(),
            n: self.n,
            d: self.d,
            provenance: self.provenance,
            x: self.x.iter().map(LMatrix::to_json).collect(),
            placement: self.placement.as_ref().map(Placement::to_json).unwrap_or_default(),
            placement_strategy: self.placement.as_ref().map(|p| p.strategy),
            seed: self.placement.as_ref().and_then(|p| p.seed),
        }
    }

    pub fn from_json(json: &GeneratorSetJson) -> Result<Self> {
        let x = json.x.iter().map(LMatrix::from_json).collect::<Result<Vec<_>>>()?;
        let mut g = Self::from_x(json.n, json.d, json.provenance, x)?;
        g.label = json.label.clone();
        if !json.placement.is_empty() {
            let profile = crate::profile::make_profile(json.n, json.d)?;
            let mut p = Placement::from_json(&profile, &json.placement)?;
            if let Some(s) = json.placement_strategy {
                p.strategy = s;
            }
            p.seed = json.seed;
            g.placement = Some(p);
        }
        Ok(g)
    }

    /// The `X` matrices laid out one after another.
    pub fn render_pretty(&self) -> String {
        let mut out = String::new();
        for (i, m) in self.x.iter().enumerate() {
            out.push_str(&format!("X{} =\n{}\n", i + 1, m.render_pretty()));
        }
        out
    }
}

/// The matrices of the main construction for a profile and placement.
pub fn build_generators<F: Field>(profile: &Profile, placement: &Placement) -> Result<GeneratorSet<F>> {
    let (n, d) = (profile.n, profile.d);
    placement.validate(profile)?;
    if profile.is_trivial() {
        let x = (1..=n).map(|i| LMatrix::single(1, n, 1, 1, Element::x(n, i))).collect::<Result<_>>()?;
        let mut g = GeneratorSet::from_x(n, 1, Provenance::MainConstruction, x)?;
        g.placement = Some(placement.clone());
        return Ok(g);
    }
    let (q, r, s) = (profile.q, profile.r, profile.s);
    let one = Element::<F>::one(n);
    let mut x: Vec<LMatrix<F>> = Vec::with_capacity(n);
    for i in 1..=q {
        let mut m = LMatrix::zero(d, n);
        for j in 1..=d {
            m.set(j, 1, Element::x(n, (i - 1) * d + j));
        }
        x.push(m);
    }
    // X_{q+1} = Σ_{i=1}^{d-r} e_{i+r,i+1} + Σ_{t=1}^{r} x_{qd+t} e_{t,1}
    let mut m = LMatrix::zero(d, n);
    for i in 1..=d - r {
        m.set(i + r, i + 1, one.clone());
    }
    for t in 1..=r {
        m.set(t, 1, Element::x(n, q * d + t));
    }
    x.push(m);
    // X_{q+2} = Σ_{j=1}^{r-2} e_{j,j+s} + Σ_{rows r-1..d} a e_{row,d}
    let mut m = LMatrix::zero(d, n);
    for j in 1..=r - 2 {
        m.set(j, j + s, one.clone());
    }
    x.push(m);
    for _ in q + 3..=n {
        x.push(LMatrix::zero(d, n));
    }
    for (b, e) in placement.iter() {
        x[b.matrix - 1].set(b.row, d, e.element(n));
    }
    let mut g = GeneratorSet::from_x(n, d, Provenance::MainConstruction, x)?;
    g.placement = Some(placement.clone());
    Ok(g)
}

/// Convenience: profile, list, placement and generators in one call.
pub fn construct<F: Field>(
    profile: &Profile,
    strategy: PlacementStrategy,
    seed: Option<u64>,
) -> Result<GeneratorSet<F>> {
    let placement = if profile.is_trivial() {
        Placement { assignment: BTreeMap::new(), strategy, seed }
    } else {
        make_placement(profile, &the_list(profile)?, strategy, seed)?
    };
    build_generators(profile, &placement)
}

/// Degree-1 set for `d | n`: `X_{(c−1)k+m}` has `x_{(m−1)d+1..md}` down column `c`,
/// where `k = n/d`.
pub fn build_graded_generators<F: Field>(n: usize, d: usize) -> Result<GeneratorSet<F>> {
    if n < 2 || d < 1 {
        return Err(LeavittError::InvalidParameters(format!("need n >= 2, d >= 1 (n={n}, d={d})")));
    }
    if n % d != 0 {
        return Err(LeavittError::NotDivisible { n, d });
    }
    let k = n / d;
    let mut x = Vec::with_capacity(n);
    for c in 1..=d {
        for block in 1..=k {
            let mut m = LMatrix::zero(d, n);
            for j in 1..=d {
                m.set(j, c, Element::x(n, (block - 1) * d + j));
            }
            x.push(m);
        }
    }
    GeneratorSet::from_x(n, d, Provenance::Graded, x)
}

/// Lexicographic fill: `x_1..x_n` written down successive columns, `d` slots
/// per matrix, wrapping to the next column after `n` slots.
pub fn leavitt_lexicographic_generators<F: Field>(n: usize, d: usize) -> Result<GeneratorSet<F>> {
    if n < 2 || d < 1 {
        return Err(LeavittError::InvalidParameters(format!("need n >= 2, d >= 1 (n={n}, d={d})")));
    }
    if d.gcd(&(n - 1)) != 1 {
        return Err(LeavittError::NotCoprime { n, d });
    }
    let mut x: Vec<LMatrix<F>> = (0..n).map(|_| LMatrix::zero(d, n)).collect();
    for slot in 0..n * d {
        let var = slot % n + 1;
        let col = slot / n + 1;
        let (matrix, row) = (slot / d, slot % d + 1);
        x[matrix].set(row, col, Element::x(n, var));
    }
    GeneratorSet::from_x(n, d, Provenance::LeavittLex, x)
}

fn factorial(k: usize) -> BigUint {
    (1..=k).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// `d · (n−(q+2))! · e₁! · e₂! · (d₁! d₂!)^{n−(q+2)}`
pub fn automorphism_count(profile: &Profile) -> Result<BigUint> {
    if profile.is_trivial() {
        return Err(LeavittError::EmptyConstruction);
    }
    let m = profile.n - (profile.q + 2);
    let block = factorial(profile.d1) * factorial(profile.d2);
    Ok(BigUint::from(profile.d)
        * factorial(m)
        * factorial(profile.e1)
        * factorial(profile.e2)
        * num_traits::pow(block, m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use crate::profile::make_profile;

    fn entries(text: &str) -> Vec<ListEntry> {
        text.split_whitespace().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn list_for_5_3() {
        let p = make_profile(5, 3).unwrap();
        let l = the_list(&p).unwrap();
        assert_eq!(
            l.entries(),
            entries("x1.x1 x2.x1 x3.x1 x4.x1 x5.x1 x2 x3 x4 x5").as_slice()
        );
    }

    #[test]
    fn list_sizes() {
        let p = make_profile(8, 5).unwrap();
        assert_eq!(the_list(&p).unwrap().len(), 29);
        let p = make_profile(6, 2).unwrap();
        let l = the_list(&p).unwrap();
        assert_eq!(l.entries(), entries("x1 x2 x3 x4 x5 x6").as_slice());
        assert_eq!(the_list(&make_profile(3, 1).unwrap()), Err(LeavittError::EmptyConstruction));
    }

    #[test]
    fn row_one_candidates_5_3() {
        let p = make_profile(5, 3).unwrap();
        let l = the_list(&p).unwrap();
        let row1: Vec<ListEntry> =
            l.entries().iter().copied().filter(|&e| entry_class(&p, e) == p.row_class(1)).collect();
        assert_eq!(row1, entries("x1.x1 x4.x1 x4"));
    }

    #[test]
    fn placements_validate() {
        let p = make_profile(9, 5).unwrap();
        let l = the_list(&p).unwrap();
        make_placement(&p, &l, PlacementStrategy::Canonical, None).unwrap();
        for seed in 0..100 {
            let pl = make_placement(&p, &l, PlacementStrategy::Random, Some(seed)).unwrap();
            assert_eq!(pl.seed, Some(seed));
        }
    }

    #[test]
    fn broken_placements_rejected() {
        let p = make_profile(5, 3).unwrap();
        let l = the_list(&p).unwrap();
        let good = make_placement(&p, &l, PlacementStrategy::Canonical, None).unwrap();
        let mut pairs: Vec<_> = good.iter().collect();
        // swap a class-1 and a class-2 entry
        let i1 = pairs.iter().position(|(b, _)| p.row_class(b.row) == Class::One).unwrap();
        let i2 = pairs.iter().position(|(b, _)| p.row_class(b.row) == Class::Two).unwrap();
        let (e1, e2) = (pairs[i1].1, pairs[i2].1);
        pairs[i1].1 = e2;
        pairs[i2].1 = e1;
        assert!(Placement::explicit(&p, pairs.clone()).is_err());
        pairs[i1].1 = e1;
        pairs[i2].1 = e1;
        assert!(Placement::explicit(&p, pairs).is_err());
    }

    #[test]
    fn construction_shape_35_13() {
        let p = make_profile(35, 13).unwrap();
        let g: GeneratorSet<Rational> = construct(&p, PlacementStrategy::Canonical, None).unwrap();
        for j in 1..=13 {
            assert_eq!(g.xm(1).get(j, 1), &Element::x(35, j));
        }
        for i in 1..=35 {
            assert_eq!(g.ym(i), &g.xm(i).involute());
        }
    }

    #[test]
    fn construction_5_3_has_unit_at_3_2() {
        let p = make_profile(5, 3).unwrap();
        let g: GeneratorSet<Rational> = construct(&p, PlacementStrategy::Canonical, None).unwrap();
        assert!(g.xm(2).get(3, 2).is_one());
        assert_eq!(g.xm(2).get(1, 1), &Element::x(5, 4));
        assert_eq!(g.xm(2).get(2, 1), &Element::x(5, 5));
    }

    #[test]
    fn graded_sets() {
        let g: GeneratorSet<Rational> = build_graded_generators(4, 2).unwrap();
        assert_eq!(g.xm(1).get(2, 1), &Element::x(4, 2));
        assert_eq!(g.xm(2).get(1, 1), &Element::x(4, 3));
        assert_eq!(g.xm(3).get(1, 2), &Element::x(4, 1));
        assert_eq!(g.xm(4).get(2, 2), &Element::x(4, 4));
        assert_eq!(
            build_graded_generators::<Rational>(6, 4),
            Err(LeavittError::NotDivisible { n: 6, d: 4 })
        );
        let lex: GeneratorSet<Rational> = leavitt_lexicographic_generators(6, 3).unwrap();
        assert_eq!(lex.x, build_graded_generators::<Rational>(6, 3).unwrap().x);
    }

    #[test]
    fn lexicographic_5_3() {
        let g: GeneratorSet<Rational> = leavitt_lexicographic_generators(5, 3).unwrap();
        assert_eq!(g.xm(2).get(1, 1), &Element::x(5, 4));
        assert_eq!(g.xm(2).get(3, 2), &Element::x(5, 1));
        assert_eq!(g.xm(4).get(1, 2), &Element::x(5, 5));
        assert_eq!(g.xm(4).get(2, 3), &Element::x(5, 1));
        assert_eq!(
            leavitt_lexicographic_generators::<Rational>(5, 2),
            Err(LeavittError::NotCoprime { n: 5, d: 2 })
        );
    }

    #[test]
    fn automorphism_counts() {
        let p = make_profile(5, 3).unwrap();
        assert_eq!(automorphism_count(&p).unwrap(), BigUint::from(48u32));
        let p = make_profile(4, 2).unwrap();
        let m = p.n - (p.q + 2);
        let expected = BigUint::from(p.d)
            * factorial(m)
            * factorial(p.e1)
            * factorial(p.e2)
            * num_traits::pow(factorial(p.d1) * factorial(p.d2), m);
        assert_eq!(automorphism_count(&p).unwrap(), expected);
        let p = make_profile(35, 13).unwrap();
        let c = automorphism_count(&p).unwrap();
        assert_eq!(c % BigUint::from(13u32), BigUint::from(0u32));
    }

    #[test]
    fn placement_json_roundtrip() {
        let p = make_profile(8, 3).unwrap();
        let l = the_list(&p).unwrap();
        let pl = make_placement(&p, &l, PlacementStrategy::Random, Some(9)).unwrap();
        let back = Placement::from_json(&p, &pl.to_json()).unwrap();
        assert_eq!(back.iter().collect::<Vec<_>>(), pl.iter().collect::<Vec<_>>());
    }
}
