//! Bounded span closure: the linear span of all products of generators,
//! explored breadth-first by product length.
//!
//! Coordinates are `(monomial, i, j)`. Rows are kept in semi-echelon form with
//! distinct leading coordinates under the order (monomial length, monomial,
//! row, column); membership is tested by reducing in descending pivot order.
//! Any product with a monomial longer than the degree bound is discarded, so
//! everything in the span is a genuine element of the generated algebra.
//! Failing to reach a target is reported as inconclusive, never as proof of
//! non-generation.

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::Serialize;

use crate::element::Element;
use crate::field::Field;
use crate::matrix::LMatrix;
use crate::monomial::Monomial;

type Key = (Monomial, u16, u16);
type Vector<F> = BTreeMap<Key, F>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ClosureOptions {
    /// Longest monomial (`|α| + |β|`) allowed in any spanning element.
    pub degree_bound: usize,
    /// Number of breadth-first rounds.
    pub iteration_bound: usize,
    /// Largest span dimension before giving up.
    pub max_dimension: usize,
}

impl Default for ClosureOptions {
    fn default() -> Self {
        ClosureOptions { degree_bound: 6, iteration_bound: 12, max_dimension: 200_000 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum InconclusiveReason {
    /// No new element appeared within the degree bound.
    Saturated,
    IterationBound,
    DimensionBound,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "outcome")]
pub enum ClosureOutcome {
    Verified { depth: usize, dimension: usize },
    Inconclusive { reason: InconclusiveReason, depth: usize, dimension: usize, missing: Vec<String> },
}

impl ClosureOutcome {
    pub fn is_verified(&self) -> bool {
        matches!(self, ClosureOutcome::Verified { .. })
    }
}

/// A named matrix to be reached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureTarget<F: Field> {
    pub label: String,
    pub matrix: LMatrix<F>,
}

/// `e_{i,j}`, `x_w e_{i,j}` and `y_w e_{i,j}` for all `i, j, w`.
pub fn standard_targets<F: Field>(n: usize, d: usize) -> Vec<ClosureTarget<F>> {
    let mut out = Vec::with_capacity((2 * n + 1) * d * d);
    for i in 1..=d {
        for j in 1..=d {
            let mut unit = LMatrix::zero(d, n);
            unit.set(i, j, Element::one(n));
            out.push(ClosureTarget { label: format!("e_{{{i},{j}}}"), matrix: unit });
            for w in 1..=n {
                for (name, e) in [("x", Element::x(n, w)), ("y", Element::y(n, w))] {
                    let mut m = LMatrix::zero(d, n);
                    m.set(i, j, e);
                    out.push(ClosureTarget { label: format!("{name}{w}·e_{{{i},{j}}}"), matrix: m });
                }
            }
        }
    }
    out
}

/// A single matrix unit as a target.
pub fn unit_target<F: Field>(n: usize, d: usize, i: usize, j: usize) -> ClosureTarget<F> {
    let mut m = LMatrix::zero(d, n);
    m.set(i, j, Element::one(n));
    ClosureTarget { label: format!("e_{{{i},{j}}}"), matrix: m }
}

fn to_vector<F: Field>(m: &LMatrix<F>) -> Vector<F> {
    let mut v = BTreeMap::new();
    for (i, j, e) in m.nonzero() {
        for (mono, c) in e.terms() {
            v.insert((mono.clone(), i as u16, j as u16), c.clone());
        }
    }
    v
}

/// Sparse `(i, j) → entry` view of a vector.
fn to_entries<F: Field>(v: &Vector<F>, n: usize) -> BTreeMap<(u16, u16), Element<F>> {
    let mut grouped: BTreeMap<(u16, u16), Vec<(Monomial, F)>> = BTreeMap::new();
    for ((m, i, j), c) in v {
        grouped.entry((*i, *j)).or_default().push((m.clone(), c.clone()));
    }
    grouped.into_iter().map(|(k, t)| (k, Element::from_terms(n, t))).collect()
}

fn split_corners<F: Field>(v: Vector<F>) -> Vec<Vector<F>> {
    let mut out: BTreeMap<(u16, u16), Vector<F>> = BTreeMap::new();
    for (k, c) in v {
        out.entry((k.1, k.2)).or_default().insert(k, c);
    }
    out.into_values().collect()
}

/// A matrix unit `e_{i,j}`: multiplying by one never lengthens an entry.
fn is_unit<F: Field>(m: &LMatrix<F>) -> bool {
    let mut it = m.nonzero();
    matches!((it.next(), it.next()), (Some((_, _, e)), None) if e.is_one())
}

fn is_short<F: Field>(v: &Vector<F>) -> bool {
    v.keys().all(|k| k.0.len() <= SHORT)
}

/// A single-entry element `a·e_{i,j}`.
struct Piece<F: Field> {
    i: u16,
    j: u16,
    entry: Element<F>,
}

impl<F: Field> Piece<F> {
    fn new(v: &Vector<F>, n: usize) -> Self {
        let (_, i, j) = v.keys().next().cloned().expect("nonzero piece");
        let entry = Element::from_terms(n, v.iter().map(|(k, c)| (k.0.clone(), c.clone())));
        Piece { i, j, entry }
    }

    /// `self · other`, if it fits under the bound.
    fn times(&self, other: &Piece<F>, bound: usize) -> Option<Vector<F>> {
        debug_assert_eq!(self.j, other.i);
        let p = &self.entry * &other.entry;
        let mut out = BTreeMap::new();
        for (m, c) in p.terms() {
            if m.len() > bound {
                return None;
            }
            out.insert((m.clone(), self.i, other.j), c.clone());
        }
        (!out.is_empty()).then_some(out)
    }
}

/// Nonzero entries of a generator by row and by column, 1-based.
struct SparseGen<F: Field> {
    by_row: HashMap<u16, Vec<(u16, Element<F>)>>,
    by_col: HashMap<u16, Vec<(u16, Element<F>)>>,
}

impl<F: Field> SparseGen<F> {
    fn new(m: &LMatrix<F>) -> Self {
        let mut by_row: HashMap<u16, Vec<(u16, Element<F>)>> = HashMap::new();
        let mut by_col: HashMap<u16, Vec<(u16, Element<F>)>> = HashMap::new();
        for (i, j, e) in m.nonzero() {
            by_row.entry(i as u16).or_default().push((j as u16, e.clone()));
            by_col.entry(j as u16).or_default().push((i as u16, e.clone()));
        }
        SparseGen { by_row, by_col }
    }
}

/// Longest monomial in an element that is multiplied even when dependent.
const SHORT: usize = 2;

/// Elements to be multiplied, without repeats.
struct Raw<F: Field> {
    items: Vec<Vector<F>>,
    /// Whether the item added a basis row.
    basis: Vec<bool>,
    /// `items` grouped by position, filled in lazily.
    entries: Vec<BTreeMap<(u16, u16), Element<F>>>,
    seen: HashSet<Vector<F>>,
}

impl<F: Field> Raw<F> {
    fn push(&mut self, w: Vector<F>, basis: bool) {
        if self.seen.insert(w.clone()) {
            self.items.push(w);
            self.basis.push(basis);
        }
    }
}

struct Span<F: Field> {
    rows: Vec<Vector<F>>,
    pivots: HashMap<Key, usize>,
}

impl<F: Field> Span<F> {
    fn reduce(&self, mut v: Vector<F>) -> Vector<F> {
        let mut cursor: Option<Key> = None;
        loop {
            let next = match &cursor {
                None => v.keys().next_back().cloned(),
                Some(c) => v.range(..c.clone()).next_back().map(|(k, _)| k.clone()),
            };
            let Some(k) = next else { break };
            if let Some(&r) = self.pivots.get(&k) {
                let c = v[&k].clone();
                for (key, rc) in &self.rows[r] {
                    let delta = rc.mul(&c).neg();
                    match v.get_mut(key) {
                        Some(x) => {
                            *x = x.add(&delta);
                            if x.is_zero() {
                                v.remove(key);
                            }
                        }
                        None => {
                            v.insert(key.clone(), delta);
                        }
                    }
                }
            }
            cursor = Some(k);
        }
        v
    }

    /// Records `w` when it is new to the span. Short elements are kept even
    /// when dependent: writing them through longer rows would push their
    /// products past the degree bound.
    fn add_raw(&mut self, raw: &mut Raw<F>, w: Vector<F>) {
        let reduced = self.reduce(w.clone());
        if !reduced.is_empty() {
            self.insert(reduced);
            raw.push(w, true);
        } else if is_short(&w) {
            raw.push(w, false);
        }
    }

    /// Adds a reduced nonzero vector, scaled so its leading coefficient is 1.
    fn insert(&mut self, v: Vector<F>) {
        let (lead, c) = v.iter().next_back().map(|(k, c)| (k.clone(), c.clone())).expect("nonzero");
        let inv = c.inv().expect("nonzero coefficient");
        let row: Vector<F> = v.into_iter().map(|(k, x)| (k, x.mul(&inv))).collect();
        self.pivots.insert(lead, self.rows.len());
        self.rows.push(row);
    }

    fn contains(&self, v: &Vector<F>) -> bool {
        self.reduce(v.clone()).is_empty()
    }
}

fn multiply<F: Field>(
    v: &BTreeMap<(u16, u16), Element<F>>,
    g: &SparseGen<F>,
    left: bool,
    n: usize,
    bound: usize,
) -> Option<Vector<F>> {
    let mut acc: BTreeMap<(u16, u16), Element<F>> = BTreeMap::new();
    for (&(i, j), e) in v {
        if left {
            // (g·v)_{a,j} = Σ_i g_{a,i} v_{i,j}
            for (a, ge) in g.by_col.get(&i).into_iter().flatten() {
                let p = ge * e;
                let slot = acc.entry((*a, j)).or_insert_with(|| Element::zero(n));
                *slot = &*slot + &p;
            }
        } else {
            for (b, ge) in g.by_row.get(&j).into_iter().flatten() {
                let p = e * ge;
                let slot = acc.entry((i, *b)).or_insert_with(|| Element::zero(n));
                *slot = &*slot + &p;
            }
        }
    }
    let mut out = BTreeMap::new();
    for ((i, j), e) in acc {
        for (m, c) in e.terms() {
            if m.len() > bound {
                return None;
            }
            out.insert((m.clone(), i, j), c.clone());
        }
    }
    Some(out)
}

/// Closure of `{I}` under left and right multiplication by `gens`.
///
/// The degree bound is raised one step at a time, saturating at each level
/// before moving on, so low-degree targets are found without first filling
/// the much larger high-degree part of the space. Targets already reached are
/// added to the multipliers: they lie in the generated algebra, and the short
/// ones (matrix units) shorten the paths to the rest.
pub fn span_closure<F: Field>(
    gens: &[LMatrix<F>],
    targets: &[ClosureTarget<F>],
    options: ClosureOptions,
) -> ClosureOutcome {
    let Some(first) = gens.first() else {
        return ClosureOutcome::Inconclusive {
            reason: InconclusiveReason::Saturated,
            depth: 0,
            dimension: 0,
            missing: targets.iter().map(|t| t.label.clone()).collect(),
        };
    };
    let (d, n) = (first.dim(), first.arity());
    let mut multipliers: Vec<SparseGen<F>> = gens.iter().map(SparseGen::new).collect();
    let mut span = Span { rows: Vec::new(), pivots: HashMap::new() };
    // unreduced products, one per basis row; these are the elements that get
    // multiplied, since reduced rows can carry long terms that only cancel in sums
    let mut raw = Raw { items: Vec::new(), basis: Vec::new(), entries: Vec::new(), seen: HashSet::new() };
    span.add_raw(&mut raw, to_vector(&LMatrix::identity(d, n)));
    let mut pending: Vec<ClosureTarget<F>> = Vec::new();
    for t in targets {
        if span.contains(&to_vector(&t.matrix)) {
            if is_unit(&t.matrix) {
                multipliers.push(SparseGen::new(&t.matrix));
            }
        } else {
            pending.push(t.clone());
        }
    }
    let idempotents: Vec<Vector<F>> =
        (1..=d).map(|i| to_vector(&unit_target::<F>(n, d, i, i).matrix)).collect();
    let mut corners = false;
    // raw indices of independent pieces with only short monomials
    let (mut short, mut short_scanned) = (Vec::new(), 0usize);
    let mut depth = 0;
    let mut hit_iteration_bound = false;
    'bounds: for bound in 0..=options.degree_bound {
        // products discarded at the last bound may fit now
        let mut done = vec![0usize; multipliers.len()];
        let mut short_seen = 0;
        let mut passes = 0;
        while !pending.is_empty() {
            if passes == options.iteration_bound {
                hit_iteration_bound = true;
                break 'bounds;
            }
            let end = raw.items.len();
            if done.iter().all(|&k| k == end) {
                if !corners {
                    break;
                }
                // saturated under the multipliers: try short pieces against each
                // other, since cancellations like x_i y_i = 1 only appear when two
                // short elements meet
                for r in short_scanned..end {
                    if raw.basis[r] && is_short(&raw.items[r]) {
                        short.push(Piece::new(&raw.items[r], n));
                    }
                }
                short_scanned = end;
                if short_seen == short.len() {
                    break;
                }
                let mut by_row: HashMap<u16, Vec<usize>> = HashMap::new();
                let mut by_col: HashMap<u16, Vec<usize>> = HashMap::new();
                for (k, p) in short.iter().enumerate() {
                    by_row.entry(p.i).or_default().push(k);
                    by_col.entry(p.j).or_default().push(k);
                }
                let mut products = Vec::new();
                for a in short_seen..short.len() {
                    let pa = &short[a];
                    // pairs with both members old were done on an earlier round
                    let right = by_row.get(&pa.j).into_iter().flatten();
                    let left = by_col.get(&pa.i).into_iter().flatten();
                    for &b in right {
                        if b < short_seen || b <= a {
                            products.push(pa.times(&short[b], bound));
                        }
                    }
                    for &b in left {
                        if b < short_seen || b < a {
                            products.push(short[b].times(pa, bound));
                        }
                    }
                }
                for w in products.into_iter().flatten() {
                    span.add_raw(&mut raw, w);
                }
                short_seen = short.len();
            } else {
                for (m, g) in multipliers.iter().enumerate() {
                    let end = raw.items.len();
                    while raw.entries.len() < end {
                        let k = raw.entries.len();
                        raw.entries.push(to_entries(&raw.items[k], n));
                    }
                    for r in done[m]..end {
                        for left in [true, false] {
                            let Some(w) = multiply(&raw.entries[r], g, left, n, bound) else { continue };
                            let pieces = if corners { split_corners(w) } else { vec![w] };
                            for w in pieces {
                                span.add_raw(&mut raw, w);
                            }
                        }
                        if span.rows.len() > options.max_dimension {
                            return inconclusive(
                                InconclusiveReason::DimensionBound,
                                depth,
                                span.rows.len(),
                                &pending,
                            );
                        }
                    }
                    done[m] = end;
                }
            }
            passes += 1;
            depth += 1;
            if span.rows.len() > options.max_dimension {
                return inconclusive(InconclusiveReason::DimensionBound, depth, span.rows.len(), &pending);
            }
            let (reached, still): (Vec<_>, Vec<_>) =
                pending.into_iter().partition(|t| span.contains(&to_vector(&t.matrix)));
            pending = still;
            for t in reached.iter().filter(|t| is_unit(&t.matrix)) {
                multipliers.push(SparseGen::new(&t.matrix));
                done.push(0);
            }
            // with every e_{i,i} in hand, e_{i,i} w e_{j,j} is in the algebra
            // for each w, so entries can be explored one at a time
            if !corners && idempotents.iter().all(|e| span.contains(e)) {
                corners = true;
                for r in 0..raw.items.len() {
                    for w in split_corners(raw.items[r].clone()) {
                        span.add_raw(&mut raw, w);
                    }
                }
            }
        }
        if pending.is_empty() {
            break;
        }
    }
    if pending.is_empty() {
        return ClosureOutcome::Verified { depth, dimension: span.rows.len() };
    }
    let reason = if hit_iteration_bound {
        InconclusiveReason::IterationBound
    } else {
        InconclusiveReason::Saturated
    };
    inconclusive(reason, depth, span.rows.len(), &pending)
}

fn inconclusive<F: Field>(
    reason: InconclusiveReason,
    depth: usize,
    dimension: usize,
    pending: &[ClosureTarget<F>],
) -> ClosureOutcome {
    ClosureOutcome::Inconclusive {
        reason,
        depth,
        dimension,
        missing: pending.iter().map(|t| t.label.clone()).collect(),
    }
}
