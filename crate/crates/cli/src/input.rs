// SPDX-License-Identifier: Apache-2.0

//! Reading and writing the JSON artifacts, and the sign-list syntax.

use std::fs;
use std::path::Path;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sigcolor_core::color::IncidenceColoring;
use sigcolor_core::graph::{Sign, SignedGraph};

use crate::Failure;

/// `all-plus`, `all-minus`, `random(SEED)` / `random:SEED`, or an explicit
/// list such as `+,-,+`, `1,-1,1` or `explicit[+,-,+]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SignsArg {
    AllPlus,
    AllMinus,
    Random(u64),
    Explicit(Vec<Sign>),
}

impl std::str::FromStr for SignsArg {
    type Err = String;

    fn from_str(text: &str) -> Result<SignsArg, String> {
        let t = text.trim();
        match t {
            "all-plus" => return Ok(SignsArg::AllPlus),
            "all-minus" => return Ok(SignsArg::AllMinus),
            _ => {}
        }
        let seed = t
            .strip_prefix("random(")
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| t.strip_prefix("random:"));
        if let Some(seed) = seed {
            return seed.trim().parse().map(SignsArg::Random).map_err(|e| format!("bad seed {seed:?}: {e}"));
        }
        let body = t
            .strip_prefix("explicit")
            .unwrap_or(t)
            .trim_start_matches('[')
            .trim_end_matches(']');
        let mut signs = Vec::new();
        for item in body.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            signs.push(match item {
                "+" | "1" | "+1" => Sign::Plus,
                "-" | "-1" => Sign::Minus,
                other => return Err(format!("bad sign {other:?}")),
            });
        }
        Ok(SignsArg::Explicit(signs))
    }
}

impl SignsArg {
    pub fn resolve(&self, len: usize) -> Result<Vec<Sign>, Failure> {
        Ok(match self {
            SignsArg::AllPlus => vec![Sign::Plus; len],
            SignsArg::AllMinus => vec![Sign::Minus; len],
            SignsArg::Random(seed) => {
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                (0..len).map(|_| if rng.gen_bool(0.5) { Sign::Minus } else { Sign::Plus }).collect()
            }
            SignsArg::Explicit(list) => {
                if list.len() != len {
                    return Err(Failure::usage(format!("expected {len} signs, got {}", list.len())));
                }
                list.clone()
            }
        })
    }
}

pub fn read_text(path: &Path) -> Result<String, Failure> {
    if path.as_os_str() == "-" {
        return std::io::read_to_string(std::io::stdin()).map_err(|e| Failure::usage(format!("stdin: {e}")));
    }
    fs::read_to_string(path).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

pub fn read_graph(path: &Path) -> Result<SignedGraph, Failure> {
    SignedGraph::from_json(&read_text(path)?).map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

pub fn read_coloring(graph: &SignedGraph, path: &Path) -> Result<IncidenceColoring, Failure> {
    IncidenceColoring::from_json(graph, &read_text(path)?)
        .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))
}

/// Writes one line of JSON to `out`, or to stdout when `out` is `None`.
pub fn emit(value: &serde_json::Value, out: Option<&Path>) -> Result<(), Failure> {
    let text = serde_json::to_string(value).expect("json value serializes");
    match out {
        Some(path) => fs::write(path, text + "\n").map_err(|e| Failure::usage(format!("{}: {e}", path.display()))),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

pub fn parse_list(text: &str) -> Result<Vec<usize>, Failure> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse().map_err(|e| Failure::usage(format!("bad number {s:?}: {e}"))))
        .collect()
}
