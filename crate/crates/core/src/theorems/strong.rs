// SPDX-License-Identifier: Apache-2.0

use super::{color_cartesian_combined, color_tensor_tree, require_path};
use crate::color::{
    color_balanced_cycle, color_matching, color_path, ensure_valid, shift_nonzero, IncidenceColoring,
};
use crate::error::{Error, Result};
use crate::graph::SignedGraph;
use crate::products::{cartesian, strong, tensor, ProductGraph, ProductKind};

/// Merges a `Δ(H1)`-coloring of the cartesian part and a `Δ(H2)`-coloring
/// of the tensor part of a strong product. The part with even maximum degree
/// is shifted past the other; both odd is rejected.
pub fn color_strong_combined(
    product: &ProductGraph,
    c1: &IncidenceColoring,
    c2: &IncidenceColoring,
) -> Result<IncidenceColoring> {
    if product.kind != ProductKind::Strong {
        return Err(Error::precondition("expected a strong product"));
    }
    let parts = product.strong_parts();
    let (h1, h2) = (&parts.parts[0], &parts.parts[1]);
    let (g1, g2) = (product.graph.edge_subgraph(h1), product.graph.edge_subgraph(h2));
    let (d1, d2) = (g1.max_degree(), g2.max_degree());
    ensure_valid(&g1, c1, d1)?;
    ensure_valid(&g2, c2, d2)?;
    let (c1, c2) = match (d1 % 2, d2 % 2) {
        (_, 0) => (c1.clone(), shift_nonzero(c2, d1 / 2)),
        (0, _) => (shift_nonzero(c1, d2 / 2), c2.clone()),
        _ => return Err(Error::precondition("both parts have odd maximum degree")),
    };
    let mut values = vec![[0; 2]; product.graph.m()];
    for (part, coloring) in [(h1, &c1), (h2, &c2)] {
        for (&e, &pair) in part.iter().zip(coloring.values()) {
            values[e] = pair;
        }
    }
    let k = d1 + d2;
    let coloring = IncidenceColoring::new(k, values);
    ensure_valid(&product.graph, &coloring, k)?;
    Ok(coloring)
}

/// `P_r ⊠ P_s` with `Δ` colors.
pub fn color_strong_paths(s1: &SignedGraph, s2: &SignedGraph) -> Result<IncidenceColoring> {
    let r = require_path(s1)?;
    let s = require_path(s2)?;
    if r == 1 && s == 1 {
        return Err(Error::precondition("the product of two single vertices has no edges"));
    }
    let product = strong(s1, s2);
    if r == 1 || s == 1 {
        return color_path(&product.graph);
    }
    let (c1, c2) = if r == 2 && s == 2 {
        // K4: a balanced 4-cycle and a perfect matching.
        (
            color_balanced_cycle(&cartesian(s1, s2).graph)?,
            color_matching(&tensor(s1, s2).graph)?,
        )
    } else {
        let (p1, p2) = (color_path(s1)?, color_path(s2)?);
        (color_cartesian_combined(s1, &p1, s2, &p2)?, color_tensor_tree(s1, &p1, s2)?)
    };
    color_strong_combined(&product, &c1, &c2)
}
