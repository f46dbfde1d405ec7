//! Batch rerun of every worked example.

use rayon::prelude::*;
use serde::Serialize;

use leavitt::closure::unit_target;
use leavitt::fixtures::{self, GENERATING};
use leavitt::{
    certify, check_relations, construct, graded_iso_exists, is_isomorphic, make_profile,
    span_closure_verify, standard_targets, ClosureOptions, ClosureOutcome, Field, GeneratorSet,
    PlacementStrategy,
};
use num_integer::Integer;

use crate::{Outcome, EXIT_FAILED, EXIT_OK};

#[derive(Debug, Serialize)]
struct Row {
    check: String,
    pass: bool,
    detail: String,
}

fn row(check: impl Into<String>, pass: bool, detail: impl Into<String>) -> Row {
    Row { check: check.into(), pass, detail: detail.into() }
}

fn profile_rows() -> Vec<Row> {
    let want = [1, 6, 11, 3, 8, 13, 5, 10, 2, 7, 12, 4, 9];
    match make_profile(35, 13) {
        Ok(p) => {
            let pass = p.hseq == want
                && p.s1hat == [1, 3, 6, 8, 11]
                && p.stats() == [5, 8, 2, 4, 4, 5, 3, 1];
            vec![row("profile (35,13)", pass, format!("hseq {:?}", p.hseq))]
        }
        Err(e) => vec![row("profile (35,13)", false, e.to_string())],
    }
}

fn fixture_rows<F: Field>() -> Vec<Row> {
    fixtures::names()
        .collect::<Vec<_>>()
        .into_par_iter()
        .map(|name| {
            let g: GeneratorSet<F> = match fixtures::load(name) {
                Ok(g) => g,
                Err(e) => return row(format!("fixture {name}"), false, e.to_string()),
            };
            let generating = GENERATING.contains(&name);
            let targets = if generating { standard_targets(g.n, g.d) } else { vec![unit_target(g.n, g.d, 1, 3)] };
            match span_closure_verify(&g, &targets, ClosureOptions::default()) {
                Ok(ClosureOutcome::Verified { depth, dimension }) => row(
                    format!("fixture {name}"),
                    generating,
                    format!("verified, depth {depth}, dimension {dimension}"),
                ),
                Ok(ClosureOutcome::Inconclusive { reason, missing, .. }) => row(
                    format!("fixture {name}"),
                    !generating,
                    format!("inconclusive ({reason:?}), {} targets missing", missing.len()),
                ),
                Err(e) => row(format!("fixture {name}"), false, e.to_string()),
            }
        })
        .collect()
}

fn grid_rows<F: Field>() -> Vec<Row> {
    let pairs: Vec<(usize, usize)> = (2..=8usize)
        .flat_map(|n| (2..n).map(move |d| (n, d)))
        .filter(|&(n, d)| d.gcd(&(n - 1)) == 1)
        .collect();
    let failures: Vec<String> = pairs
        .par_iter()
        .filter_map(|&(n, d)| {
            let ok = make_profile(n, d)
                .and_then(|p| {
                    let g: GeneratorSet<F> = construct(&p, PlacementStrategy::Canonical, None)?;
                    let rel = check_relations(&g)?;
                    certify(&p, &g)?;
                    Ok(rel.all_ok())
                })
                .unwrap_or(false);
            (!ok).then(|| format!("({n},{d})"))
        })
        .collect();
    let detail = if failures.is_empty() {
        format!("{} pairs certified", pairs.len())
    } else {
        format!("failed: {}", failures.join(" "))
    };
    vec![row("certificate grid n<=8", failures.is_empty(), detail)]
}

fn classifier_rows() -> Vec<Row> {
    let mut bad = Vec::new();
    for n in 2..=12 {
        for d in 1..=30 {
            let iso = is_isomorphic(n, d, n, 1).map(|v| v.isomorphic).unwrap_or(false);
            if iso != (d.gcd(&(n - 1)) == 1) {
                bad.push(format!("iso({n},{d})"));
            }
            let graded = graded_iso_exists(n, d).unwrap_or(false);
            if graded && !iso {
                bad.push(format!("graded({n},{d})"));
            }
        }
    }
    vec![row("classifier cross-checks", bad.is_empty(), bad.join(" "))]
}

pub fn run<F: Field>(json: bool) -> Outcome {
    let mut rows = profile_rows();
    rows.extend(fixture_rows::<F>());
    rows.extend(grid_rows::<F>());
    rows.extend(classifier_rows());
    let all = rows.iter().all(|r| r.pass);
    if json {
        println!("{}", serde_json::to_string_pretty(&serde_json::json!({ "pass": all, "rows": rows }))?);
    } else {
        let width = rows.iter().map(|r| r.check.len()).max().unwrap_or(0);
        for r in &rows {
            println!("{:<width$}  {}  {}", r.check, if r.pass { "PASS" } else { "FAIL" }, r.detail);
        }
    }
    Ok(if all { EXIT_OK } else { EXIT_FAILED })
}
