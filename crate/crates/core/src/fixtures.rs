//! Generator sets transcribed from published examples, embedded as JSON.

use crate::construct::{GeneratorSet, GeneratorSetJson};
use crate::error::{LeavittError, Result};
use crate::field::Field;

/// `(name, json)` for every bundled set.
pub const FIXTURES: &[(&str, &str)] = &[
    ("m3l5_lex", include_str!("../fixtures/m3l5_lex.json")),
    ("m3l5_a", include_str!("../fixtures/m3l5_a.json")),
    ("m3l5_b", include_str!("../fixtures/m3l5_b.json")),
    ("m3l5_b_x5prime", include_str!("../fixtures/m3l5_b_x5prime.json")),
    ("m3l5_b_swap", include_str!("../fixtures/m3l5_b_swap.json")),
    ("m3l5_c", include_str!("../fixtures/m3l5_c.json")),
    ("m3l5_main", include_str!("../fixtures/m3l5_main.json")),
    ("m4l6", include_str!("../fixtures/m4l6.json")),
    ("m5l9", include_str!("../fixtures/m5l9.json")),
    ("m3l6_graded", include_str!("../fixtures/m3l6_graded.json")),
    ("m3l6_main", include_str!("../fixtures/m3l6_main.json")),
];

/// Sets that generate the full matrix ring.
pub const GENERATING: &[&str] = &[
    "m3l5_a",
    "m3l5_b",
    "m3l5_b_x5prime",
    "m3l5_b_swap",
    "m3l5_c",
    "m3l5_main",
    "m4l6",
    "m5l9",
    "m3l6_graded",
    "m3l6_main",
];

pub fn names() -> impl Iterator<Item = &'static str> {
    FIXTURES.iter().map(|(n, _)| *n)
}

pub fn raw(name: &str) -> Option<&'static str> {
    FIXTURES.iter().find(|(n, _)| *n == name).map(|(_, j)| *j)
}

pub fn parse<F: Field>(json: &str) -> Result<GeneratorSet<F>> {
    let parsed: GeneratorSetJson =
        serde_json::from_str(json).map_err(|e| LeavittError::Parse(e.to_string()))?;
    GeneratorSet::from_json(&parsed)
}

pub fn load<F: Field>(name: &str) -> Result<GeneratorSet<F>> {
    let json = raw(name).ok_or_else(|| LeavittError::Parse(format!("no fixture named {name:?}")))?;
    parse(json)
}
