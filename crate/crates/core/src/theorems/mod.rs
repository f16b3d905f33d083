// SPDX-License-Identifier: Apache-2.0

//! Constructive `Δ`-colorings of products, one routine per result.
//!
//! Every routine takes the factors, builds the product with the matching
//! function of [`crate::products`] and returns a coloring of that product's
//! graph. Paths and cycles are expected in the labeling produced by
//! [`make_path`](crate::graph::make_path) and [`make_cycle`](crate::graph::make_cycle).

mod cartesian;
mod corona;
mod strong;
mod tensor;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::color::IncidenceColoring;
use crate::error::{Error, Result};
use crate::graph::{SignedGraph, VertexSet};

pub use cartesian::{
    classify_cycle_product, color_cartesian_combined, color_cartesian_combined_traced, color_cartesian_path_cycle,
    decompose_balanced_even_odd, decompose_even_even, parity_lower_bound, switch_to_all_negative, CombinedTrace,
    ParityCertificate,
};
pub use corona::{
    color_corona, color_corona_traced, CoronaCase, CoronaOptions, CoronaStep, CoronaTrace, DEFAULT_ORACLE_EDGE_GUARD,
};
pub use strong::{color_strong_combined, color_strong_paths};
pub use tensor::{
    color_tensor_p2, color_tensor_tree, greedy_tree_edge_coloring,
    tensor_copy_decomposition, CopyDecomposition,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Claim {
    Delta,
    DeltaPlusOne,
}

/// Why a classification came out the way it did.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "reason", rename_all = "kebab-case")]
pub enum Certificate {
    /// Both factors are `Δ`-colorable; their colorings were combined.
    CombinedFactors,
    /// Even-by-even product split into two unions of balanced 4-cycles.
    EvenEvenDecomposition,
    /// Balanced even cycle times odd cycle, split into two balanced 2-factors.
    BalancedEvenOddDecomposition,
    /// `2r`-regular with an odd number of negative edges.
    OddNegativeRegular { degree: usize, negative_edges: usize },
    /// Both factors odd and unbalanced: switching by `switching` makes every
    /// edge negative, and with an odd vertex count every 2-factor then has an
    /// odd number of negative edges.
    AllNegativeOddOrder { switching: Vec<usize>, vertices: usize },
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Certificate::CombinedFactors => f.write_str("combined factor colorings"),
            Certificate::EvenEvenDecomposition => f.write_str("even-even balanced 4-cycle decomposition"),
            Certificate::BalancedEvenOddDecomposition => f.write_str("balanced even factor times odd factor decomposition"),
            Certificate::OddNegativeRegular { degree, negative_edges } => {
                write!(f, "parity: {degree}-regular with {negative_edges} negative edges")
            }
            Certificate::AllNegativeOddOrder { vertices, .. } => {
                write!(f, "switches to all-negative on {vertices} vertices")
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TheoremOutcome {
    pub claim: Claim,
    /// Present exactly when `claim` is [`Claim::Delta`].
    pub coloring: Option<IncidenceColoring>,
    pub certificate: Certificate,
}

/// `r` if `graph` is the path `0 - 1 - … - (r-1)` with `r ≥ 1`.
pub fn path_order(graph: &SignedGraph) -> Option<usize> {
    let n = graph.n();
    (n >= 1 && graph.m() == n - 1 && (1..n).all(|i| graph.find_edge(i - 1, i).is_some())).then_some(n)
}

/// `r` if `graph` is the cycle `0 - 1 - … - (r-1) - 0` with `r ≥ 3`.
pub fn cycle_order(graph: &SignedGraph) -> Option<usize> {
    let n = graph.n();
    (n >= 3 && graph.m() == n && (0..n).all(|i| graph.find_edge(i, (i + 1) % n).is_some())).then_some(n)
}

pub(crate) fn require_path(graph: &SignedGraph) -> Result<usize> {
    path_order(graph).ok_or(Error::WrongShape("path labeled 0..r"))
}

pub(crate) fn require_cycle(graph: &SignedGraph) -> Result<usize> {
    cycle_order(graph).ok_or(Error::WrongShape("cycle labeled 0..r"))
}

/// Indices of the edges of `graph` not listed in `part`.
pub(crate) fn complement(graph: &SignedGraph, part: &[usize]) -> Vec<usize> {
    let mut mark = vec![false; graph.m()];
    for &e in part {
        mark[e] = true;
    }
    (0..graph.m()).filter(|&e| !mark[e]).collect()
}

pub(crate) fn vertex_list(set: &VertexSet) -> Vec<usize> {
    set.iter().collect()
}
