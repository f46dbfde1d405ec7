//! Exact computation in Leavitt algebras `L_n` and their matrix rings `M_d(L_n)`.
//!
//! The crate builds explicit generator sets realizing `L_n ≅ M_d(L_n)` when
//! `gcd(d, n−1) = 1`, checks the defining relations, replays the generation
//! argument as an evaluable certificate, and decides isomorphism questions from
//! `K₀` data and the `ℤ`-grading.

pub mod certificate;
pub mod classifier;
pub mod closure;
pub mod construct;
pub mod element;
pub mod error;
pub mod field;
pub mod fixtures;
pub mod grading;
pub mod matrix;
pub mod monomial;
pub mod profile;
pub mod rewrite;
pub mod verify;

pub use construct::{
    automorphism_count, boxes, build_generators, build_graded_generators, construct, make_placement,
    leavitt_lexicographic_generators, the_list, BoxRef, GeneratorSet, ListEntry, Placement,
    PlacementStrategy, Provenance, TheList,
};
pub use certificate::{certify, evaluate_certificate, generation_certificate, Certificate, Target};
pub use classifier::{
    classify, degree_one_generating_set_possible, graded_iso_exists, is_isomorphic, k0_data, module_type,
    Classification, K0Class, Reason, Verdict,
};
pub use closure::{span_closure, standard_targets, ClosureOptions, ClosureOutcome};
pub use element::{Degree, Element};
pub use error::{LeavittError, Result};
pub use field::{Field, Fp, Rational};
pub use matrix::LMatrix;
pub use monomial::{GenIndex, Monomial};
pub use profile::{make_profile, reduce_large_d, Profile};
pub use verify::{check_dagger, check_relations, span_closure_verify, verify_generator_set, VerifyReport};
