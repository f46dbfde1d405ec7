//! `leavitt`: profiles, constructions, verification and classification for
//! `M_d(L_n)` from the command line.

mod reproduce;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use leavitt::closure::unit_target;
use leavitt::construct::{GeneratorSetJson, Provenance};
use leavitt::verify::{GenerationMethod, VerifyReport};
use leavitt::{
    build_graded_generators, classify, construct, fixtures, generation_certificate, is_isomorphic,
    leavitt_lexicographic_generators, make_profile, reduce_large_d, span_closure_verify,
    verify_generator_set, ClosureOptions, ClosureOutcome, Field, Fp, GeneratorSet, LeavittError,
    PlacementStrategy, Rational,
};
use serde_json::json;

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILED: u8 = 1;
pub const EXIT_INCONCLUSIVE: u8 = 2;
pub const EXIT_USAGE: u8 = 64;

#[derive(Parser, Debug)]
#[command(name = "leavitt", version, about = "Leavitt algebras and their matrix rings")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Integer data driving the construction for (n, d)
    Profile {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        #[arg(long)]
        json: bool,
    },
    /// Build 2n generating matrices of M_d(L_n)
    Construct {
        #[command(flatten)]
        build: BuildArgs,
        /// Write the generation certificate here
        #[arg(long)]
        certificate: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Check relations and generation for a constructed or supplied set
    Verify {
        #[command(flatten)]
        build: BuildArgs,
        /// Generator set JSON (as written by `construct --json`)
        #[arg(long, conflicts_with = "fixture")]
        set: Option<PathBuf>,
        /// Bundled fixture by name
        #[arg(long)]
        fixture: Option<String>,
        /// Use span closure instead of the certificate
        #[arg(long)]
        closure: bool,
        #[arg(long, default_value_t = ClosureOptions::default().degree_bound)]
        degree_bound: usize,
        #[arg(long, default_value_t = ClosureOptions::default().iteration_bound)]
        iteration_bound: usize,
        #[arg(long, default_value_t = ClosureOptions::default().max_dimension)]
        max_dimension: usize,
        /// Only look for e_{i,j} instead of the full target list
        #[arg(long, value_parser = parse_unit, value_name = "I,J")]
        target: Option<(usize, usize)>,
        /// Write the generation certificate here
        #[arg(long)]
        certificate: Option<PathBuf>,
        /// Include timings in the report
        #[arg(long)]
        timing: bool,
        #[arg(long)]
        json: bool,
    },
    /// K0 data, module type and isomorphism questions
    Classify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        d: usize,
        /// Compare with M_k(L_m)
        #[arg(long, requires = "k")]
        m: Option<usize>,
        #[arg(long, requires = "m")]
        k: Option<usize>,
        /// Also decide graded isomorphism with L_n
        #[arg(long)]
        graded: bool,
        #[arg(long)]
        json: bool,
    },
    /// Rerun every worked example and print a pass/fail table
    Reproduce {
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args, Debug, Default)]
struct BuildArgs {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    d: Option<usize>,
    #[arg(long, value_enum, default_value_t = Kind::Main)]
    kind: Kind,
    #[arg(long, value_enum, default_value_t = Strategy::Canonical)]
    placement: Strategy,
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum Kind {
    #[default]
    Main,
    Graded,
    Lex,
}

#[derive(Clone, Copy, Debug, Default, ValueEnum)]
enum Strategy {
    #[default]
    Canonical,
    Random,
}

fn parse_unit(s: &str) -> Result<(usize, usize), String> {
    let (i, j) = s.split_once(',').ok_or("expected I,J")?;
    let p = |t: &str| t.trim().parse::<usize>().map_err(|e| e.to_string());
    Ok((p(i)?, p(j)?))
}

/// A failure with the exit code it maps to.
#[derive(Debug)]
pub struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure { code: EXIT_USAGE, message: message.into() }
    }
}

impl From<LeavittError> for Failure {
    fn from(e: LeavittError) -> Self {
        let code = match e {
            LeavittError::RelationFailure(_) | LeavittError::CertificateMismatch { .. } => EXIT_FAILED,
            _ => EXIT_USAGE,
        };
        Failure { code, message: e.to_string() }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::usage(e.to_string())
    }
}

impl From<serde_json::Error> for Failure {
    fn from(e: serde_json::Error) -> Self {
        Failure::usage(format!("json: {e}"))
    }
}

type Outcome = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let field = std::env::var("LEAVITT_FIELD").unwrap_or_else(|_| "rational".into());
    let result = match field.as_str() {
        "rational" => run::<Rational>(cli.command),
        "fp<2>" => run::<Fp<2>>(cli.command),
        "fp<3>" => run::<Fp<3>>(cli.command),
        "fp<5>" => run::<Fp<5>>(cli.command),
        "fp<7>" => run::<Fp<7>>(cli.command),
        "fp<101>" => run::<Fp<101>>(cli.command),
        "fp<65537>" => run::<Fp<65537>>(cli.command),
        "fp<1000003>" => run::<Fp<1_000_003>>(cli.command),
        "fp<2147483647>" => run::<Fp<2_147_483_647>>(cli.command),
        other => Err(Failure::usage(format!(
            "LEAVITT_FIELD={other:?} is not supported; use rational or fp<p> with p in \
             2, 3, 5, 7, 101, 65537, 1000003, 2147483647"
        ))),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn print_json(value: &impl serde::Serialize) -> Result<(), Failure> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

fn run<F: Field>(command: Command) -> Outcome {
    match command {
        Command::Profile { n, d, json } => profile(n, d, json),
        Command::Construct { build, certificate, json } => {
            let g = build_set::<F>(&build)?;
            if let Some(path) = certificate {
                write_certificate(&g, &path)?;
            }
            if json {
                print_json(&g.to_json())?;
            } else {
                print!("{}", g.render_pretty());
            }
            Ok(EXIT_OK)
        }
        Command::Verify {
            build,
            set,
            fixture,
            closure,
            degree_bound,
            iteration_bound,
            max_dimension,
            target,
            certificate,
            timing,
            json,
        } => {
            let g: GeneratorSet<F> = match (&set, &fixture) {
                (Some(path), _) => {
                    let text = fs::read_to_string(path)?;
                    let parsed: GeneratorSetJson = serde_json::from_str(&text)?;
                    GeneratorSet::from_json(&parsed)?
                }
                (_, Some(name)) => fixtures::load(name)?,
                _ => build_set(&build)?,
            };
            if let Some(path) = certificate {
                write_certificate(&g, &path)?;
            }
            let options = ClosureOptions { degree_bound, iteration_bound, max_dimension };
            match target {
                Some((i, j)) => verify_single_target(&g, i, j, options, json),
                None => {
                    let method = if closure { GenerationMethod::Closure } else { GenerationMethod::Auto };
                    let report = verify_generator_set(&g, method, options)?;
                    emit_report(&report, timing, json)?;
                    Ok(report.exit_code() as u8)
                }
            }
        }
        Command::Classify { n, d, m, k, graded, json } => classify_cmd(n, d, m.zip(k), graded, json),
        Command::Reproduce { json } => reproduce::run::<F>(json),
    }
}

fn profile(n: usize, d: usize, json: bool) -> Outcome {
    let p = make_profile(n, d)?;
    p.check_invariants().map_err(Failure::usage)?;
    let counts = p.counts();
    if json {
        print_json(&json!({ "profile": p, "counts": counts }))?;
    } else {
        let join = |v: &[usize]| v.iter().map(usize::to_string).collect::<Vec<_>>().join(",");
        println!("n={} d={} q={} r={} s={}", p.n, p.d, p.q, p.r, p.s);
        println!("hseq {}", join(&p.hseq));
        println!("useq {}", join(&p.useq));
        println!("s1hat {{{}}}  s2hat {{{}}}", join(&p.s1hat), join(&p.s2hat));
        println!(
            "d1={} d2={} e1={} e2={} f1={} f2={} b={} t={}",
            p.d1, p.d2, p.e1, p.e2, p.f1, p.f2, p.b, p.t
        );
        println!(
            "list {} boxes {} s1 boxes {} s1 list {}",
            counts.list_size, counts.box_count, counts.s1_box_count, counts.s1_list_count
        );
    }
    Ok(EXIT_OK)
}

fn build_set<F: Field>(b: &BuildArgs) -> Result<GeneratorSet<F>, Failure> {
    let (Some(n), Some(d)) = (b.n, b.d) else {
        return Err(Failure::usage("--n and --d are required unless --set or --fixture is given"));
    };
    match b.kind {
        Kind::Main => {
            let d = if d >= n { reduce_large_d(n, d)? } else { d };
            let p = make_profile(n, d)?;
            let strategy = match b.placement {
                Strategy::Canonical => PlacementStrategy::Canonical,
                Strategy::Random => PlacementStrategy::Random,
            };
            if matches!(b.placement, Strategy::Random) && b.seed.is_none() {
                return Err(Failure::usage("--placement random needs --seed"));
            }
            Ok(construct(&p, strategy, b.seed)?)
        }
        Kind::Graded => Ok(build_graded_generators(n, d)?),
        Kind::Lex => Ok(leavitt_lexicographic_generators(n, d)?),
    }
}

fn write_certificate<F: Field>(g: &GeneratorSet<F>, path: &PathBuf) -> Result<(), Failure> {
    if g.provenance != Provenance::MainConstruction {
        return Err(Failure::usage("certificates exist only for main-construction sets"));
    }
    let p = make_profile(g.n, g.d)?;
    let cert = generation_certificate(&p, g)?;
    fs::write(path, serde_json::to_string_pretty(&cert.to_json())?)?;
    Ok(())
}

fn emit_report(report: &VerifyReport, timing: bool, json: bool) -> Result<(), Failure> {
    let mut value = serde_json::to_value(report)?;
    if !timing {
        if let Some(obj) = value.as_object_mut() {
            obj.remove("relations_ms");
            obj.remove("generation_ms");
        }
    }
    if json {
        print_json(&value)?;
        return Ok(());
    }
    println!("M_{}(L_{})", report.d, report.n);
    println!("relations: {}", if report.relations_ok { "ok" } else { "FAIL" });
    for (i, j) in &report.pair_failures {
        println!("  X_{i} Y_{j} wrong");
    }
    if !report.sum_ok {
        println!("  sum Y_j X_j != I");
    }
    println!("generation: {}", serde_json::to_string(&report.generation)?);
    if timing {
        println!("time: relations {} ms, generation {} ms", report.relations_ms, report.generation_ms);
    }
    Ok(())
}

fn verify_single_target<F: Field>(
    g: &GeneratorSet<F>,
    i: usize,
    j: usize,
    options: ClosureOptions,
    json: bool,
) -> Outcome {
    if i == 0 || j == 0 || i > g.d || j > g.d {
        return Err(Failure::usage(format!("target e_{{{i},{j}}} outside 1..={}", g.d)));
    }
    let out = match span_closure_verify(g, &[unit_target(g.n, g.d, i, j)], options) {
        Ok(out) => out,
        Err(LeavittError::RelationFailure(msg)) => {
            println!("relations: FAIL ({msg})");
            return Ok(EXIT_FAILED);
        }
        Err(e) => return Err(e.into()),
    };
    if json {
        print_json(&out)?;
    } else {
        println!("e_{{{i},{j}}}: {}", serde_json::to_string(&out)?);
    }
    Ok(match out {
        ClosureOutcome::Verified { .. } => EXIT_OK,
        ClosureOutcome::Inconclusive { .. } => EXIT_INCONCLUSIVE,
    })
}

fn classify_cmd(n: usize, d: usize, other: Option<(usize, usize)>, graded: bool, json: bool) -> Outcome {
    let c = classify(n, d)?;
    let (m, k) = other.unwrap_or((n, 1));
    let verdict = is_isomorphic(n, d, m, k)?;
    if json {
        let mut value = json!({
            "n": n,
            "d": d,
            "k0": c.k0,
            "module_type": c.module_type,
            "compare": { "m": m, "k": k, "isomorphic": verdict.isomorphic, "reason": verdict.reason },
        });
        if graded {
            value["graded_iso"] = json!({ "exists": c.graded_iso, "reason": "prime-divisibility" });
        }
        print_json(&value)?;
        return Ok(EXIT_OK);
    }
    println!("M_{d}(L_{n}): K0 = Z/{}Z, [1] = {}", c.k0.modulus, c.k0.unit_class);
    println!("module type ({}, {})", c.module_type.0, c.module_type.1);
    let rhs = if k == 1 { format!("L_{m}") } else { format!("M_{k}(L_{m})") };
    let word = if verdict.isomorphic { "isomorphic" } else { "not isomorphic" };
    println!("{word} to {rhs} ({})", verdict.reason);
    if graded {
        let word = if c.graded_iso { "graded isomorphic" } else { "not graded isomorphic" };
        println!("{word} to L_{n} (prime-divisibility)");
    }
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_parsing() {
        assert_eq!(parse_unit("1,3"), Ok((1, 3)));
        assert!(parse_unit("13").is_err());
        assert!(parse_unit("a,3").is_err());
    }

    #[test]
    fn cli_shape() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
