//! Relation checks and the combined verification report.

use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;

use crate::certificate::{generation_certificate, evaluate_certificate};
use crate::closure::{span_closure, ClosureOptions, ClosureOutcome, ClosureTarget};
use crate::construct::{GeneratorSet, Provenance, TheList};
use crate::element::Element;
use crate::error::{LeavittError, Result};
use crate::field::Field;
use crate::matrix::LMatrix;
use crate::profile::make_profile;

/// Which relation failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    /// `X_i Y_j = δ_{ij} I`
    Pair { i: usize, j: usize },
    /// `Σ_j Y_j X_j = I`
    Sum,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationFailure<F: Field> {
    pub relation: Relation,
    /// Left side minus right side.
    pub residual: LMatrix<F>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationReport<F: Field> {
    /// `pairs[i-1][j-1]` is true when `X_i Y_j = δ_{ij} I`.
    pub pairs: Vec<Vec<bool>>,
    pub sum_ok: bool,
    pub first_failure: Option<RelationFailure<F>>,
}

impl<F: Field> RelationReport<F> {
    pub fn all_ok(&self) -> bool {
        self.sum_ok && self.pairs.iter().flatten().all(|&b| b)
    }
}

pub fn check_relations<F: Field>(g: &GeneratorSet<F>) -> Result<RelationReport<F>> {
    let (n, d) = (g.n, g.d);
    let identity = LMatrix::<F>::identity(d, n);
    let zero = LMatrix::<F>::zero(d, n);
    let rows: Vec<Vec<(bool, LMatrix<F>)>> = (1..=n)
        .into_par_iter()
        .map(|i| {
            (1..=n)
                .map(|j| {
                    let prod = g.xm(i).try_mul(g.ym(j))?;
                    let want = if i == j { &identity } else { &zero };
                    let residual = prod.try_sub(want)?;
                    Ok((residual.is_zero(), residual))
                })
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let mut sum = LMatrix::zero(d, n);
    for j in 1..=n {
        sum = sum.try_add(&g.ym(j).try_mul(g.xm(j))?)?;
    }
    let sum_residual = sum.try_sub(&identity)?;
    let sum_ok = sum_residual.is_zero();
    let mut first_failure = None;
    'outer: for (i, row) in rows.iter().enumerate() {
        for (j, (ok, residual)) in row.iter().enumerate() {
            if !ok {
                first_failure = Some(RelationFailure {
                    relation: Relation::Pair { i: i + 1, j: j + 1 },
                    residual: residual.clone(),
                });
                break 'outer;
            }
        }
    }
    if first_failure.is_none() && !sum_ok {
        first_failure = Some(RelationFailure { relation: Relation::Sum, residual: sum_residual });
    }
    let pairs = rows.into_iter().map(|r| r.into_iter().map(|(ok, _)| ok).collect()).collect();
    Ok(RelationReport { pairs, sum_ok, first_failure })
}

/// `Σ a* a` over the list entries.
pub fn dagger_sum<F: Field>(list: &TheList, n: usize) -> Element<F> {
    let mut total = Element::zero(n);
    for e in list.entries() {
        let a = e.element::<F>(n);
        total = &total + &(&a.involute() * &a);
    }
    total
}

/// Whether `Σ a* a = 1` over the list entries.
pub fn check_dagger<F: Field>(list: &TheList, n: usize) -> bool {
    dagger_sum::<F>(list, n).is_one()
}

/// Relations first, then the bounded closure.
pub fn span_closure_verify<F: Field>(
    g: &GeneratorSet<F>,
    targets: &[ClosureTarget<F>],
    options: ClosureOptions,
) -> Result<ClosureOutcome> {
    let rel = check_relations(g)?;
    if let Some(f) = rel.first_failure {
        return Err(LeavittError::RelationFailure(format!("{:?}", f.relation)));
    }
    let gens: Vec<LMatrix<F>> = g.x.iter().chain(&g.y).cloned().collect();
    Ok(span_closure(&gens, targets, options))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case", tag = "status")]
pub enum Generation {
    Certified { nodes: usize, checked: usize, max_entry_terms: usize },
    VerifiedByClosure { depth: usize, dimension: usize },
    NotFoundUpToBound { bound: usize, reason: String, missing: Vec<String> },
    CertificateFailed { node: usize, label: String },
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub n: usize,
    pub d: usize,
    pub relations_ok: bool,
    pub pair_failures: Vec<(usize, usize)>,
    pub sum_ok: bool,
    pub generation: Generation,
    pub relations_ms: u128,
    pub generation_ms: u128,
}

impl VerifyReport {
    /// 0 verified, 1 relation failure, 2 inconclusive.
    pub fn exit_code(&self) -> i32 {
        if !self.relations_ok {
            return 1;
        }
        match self.generation {
            Generation::Certified { .. } | Generation::VerifiedByClosure { .. } => 0,
            Generation::CertificateFailed { .. } => 1,
            Generation::NotFoundUpToBound { .. } | Generation::Skipped => 2,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GenerationMethod {
    /// Certificate for constructed sets, closure otherwise.
    Auto,
    Certificate,
    Closure,
}

/// Full check of a generator set.
pub fn verify_generator_set<F: Field>(
    g: &GeneratorSet<F>,
    method: GenerationMethod,
    closure: ClosureOptions,
) -> Result<VerifyReport> {
    let t0 = Instant::now();
    let rel = check_relations(g)?;
    let relations_ms = t0.elapsed().as_millis();
    let pair_failures = rel
        .pairs
        .iter()
        .enumerate()
        .flat_map(|(i, row)| {
            row.iter().enumerate().filter(|(_, ok)| !**ok).map(move |(j, _)| (i + 1, j + 1))
        })
        .collect();
    let mut report = VerifyReport {
        n: g.n,
        d: g.d,
        relations_ok: rel.all_ok(),
        pair_failures,
        sum_ok: rel.sum_ok,
        generation: Generation::Skipped,
        relations_ms,
        generation_ms: 0,
    };
    if !report.relations_ok {
        return Ok(report);
    }
    let t1 = Instant::now();
    let use_certificate = match method {
        GenerationMethod::Certificate => true,
        GenerationMethod::Closure => false,
        GenerationMethod::Auto => g.provenance == Provenance::MainConstruction,
    };
    report.generation = if use_certificate {
        let profile = make_profile(g.n, g.d)?;
        let cert = generation_certificate(&profile, g)?;
        let r = evaluate_certificate(&cert, g)?;
        match r.mismatch {
            None => Generation::Certified {
                nodes: r.node_count,
                checked: r.checked,
                max_entry_terms: r.max_entry_terms,
            },
            Some(m) => Generation::CertificateFailed { node: m.node, label: m.label },
        }
    } else {
        let gens: Vec<LMatrix<F>> = g.x.iter().chain(&g.y).cloned().collect();
        let targets = crate::closure::standard_targets(g.n, g.d);
        match span_closure(&gens, &targets, closure) {
            ClosureOutcome::Verified { depth, dimension } => {
                Generation::VerifiedByClosure { depth, dimension }
            }
            ClosureOutcome::Inconclusive { reason, missing, .. } => Generation::NotFoundUpToBound {
                bound: closure.degree_bound,
                reason: format!("{reason:?}").to_lowercase(),
                missing,
            },
        }
    };
    report.generation_ms = t1.elapsed().as_millis();
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{construct, the_list, ListEntry, PlacementStrategy};
    use crate::field::Rational;
    use crate::profile::make_profile;

    #[test]
    fn constructed_relations_hold() {
        let p = make_profile(5, 3).unwrap();
        let g: GeneratorSet<Rational> = construct(&p, PlacementStrategy::Canonical, None).unwrap();
        let r = check_relations(&g).unwrap();
        assert!(r.all_ok());
    }

    #[test]
    fn duplicated_entry_breaks_sum() {
        let p = make_profile(5, 3).unwrap();
        let mut g: GeneratorSet<Rational> = construct(&p, PlacementStrategy::Canonical, None).unwrap();
        // overwrite the x5 box with a second copy of x2
        let pl = g.placement.clone().unwrap();
        let b = pl.locate(ListEntry { u: 5, t: 0 }).unwrap();
        g.x[b.matrix - 1].set(b.row, 3, Element::x(5, 2));
        g.y[b.matrix - 1] = g.x[b.matrix - 1].involute();
        let r = check_relations(&g).unwrap();
        assert!(!r.sum_ok);
        assert!(r.first_failure.is_some());
    }

    #[test]
    fn dagger() {
        for (n, d) in [(5, 3), (8, 5)] {
            let l = the_list(&make_profile(n, d).unwrap()).unwrap();
            assert!(check_dagger::<Rational>(&l, n));
            let mut short = l.entries().to_vec();
            short.pop();
            assert!(!check_dagger::<Rational>(&TheList::from_entries(short), n));
        }
    }
}
