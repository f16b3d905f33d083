// SPDX-License-Identifier: Apache-2.0

//! Direct colorings of matchings, paths, balanced cycles and forests.

use std::collections::VecDeque;

use super::{check_partial, ColorSet, IncidenceColoring};
use crate::error::{Error, Result};
use crate::graph::SignedGraph;

/// Every incidence colored 0; needs `Δ ≤ 1`.
pub fn color_matching(graph: &SignedGraph) -> Result<IncidenceColoring> {
    if graph.m() == 0 {
        return Err(Error::Edgeless);
    }
    if graph.max_degree() > 1 {
        return Err(Error::WrongShape("matching"));
    }
    Ok(IncidenceColoring::new(1, vec![[0, 0]; graph.m()]))
}

/// Colors each path or cycle component with `±alpha`, walking it and
/// alternating the sign as `σ` dictates. Fails on an unbalanced cycle.
/// The declared palette is `M_{2 alpha}`.
pub fn color_paths_and_cycles(graph: &SignedGraph, alpha: i32) -> Result<IncidenceColoring> {
    if alpha <= 0 {
        return Err(Error::precondition("alpha must be positive"));
    }
    if graph.max_degree() > 2 {
        return Err(Error::WrongShape("union of paths and cycles"));
    }
    let n = graph.n();
    let mut values: Vec<Option<[i32; 2]>> = vec![None; graph.m()];
    let mut seen = vec![false; n];
    // Path components first, from an end; whatever is left is a cycle.
    let starts = (0..n)
        .filter(|&v| graph.degree(v) == 1)
        .chain((0..n).filter(|&v| graph.degree(v) == 2));
    for start in starts.collect::<Vec<_>>() {
        if seen[start] {
            continue;
        }
        let walk = graph.walk_from(start);
        let mut a = alpha;
        for &(e, from, to) in &walk {
            let edge = graph.edge(e);
            let b = -edge.sign.value() * a;
            values[e] = Some(if from == edge.u { [a, b] } else { [b, a] });
            seen[from] = true;
            seen[to] = true;
            a = -b;
        }
        let closed = walk.len() >= 3 && graph.degree(start) == 2;
        if closed && a != alpha {
            return Err(Error::Unbalanced);
        }
    }
    let coloring = IncidenceColoring::new(
        2 * alpha as usize,
        values.into_iter().map(|v| v.expect("every edge walked")).collect(),
    );
    Ok(coloring)
}

fn is_path(graph: &SignedGraph) -> bool {
    graph.m() >= 1 && graph.is_connected() && graph.n() == graph.m() + 1 && graph.max_degree() <= 2
}

fn is_cycle(graph: &SignedGraph) -> bool {
    graph.n() >= 3 && graph.is_connected() && graph.regular_degree() == Some(2)
}

/// A path on at least two vertices: 1 color for a single edge, else 2.
pub fn color_path(graph: &SignedGraph) -> Result<IncidenceColoring> {
    if !is_path(graph) {
        return Err(Error::WrongShape("path on at least two vertices"));
    }
    if graph.m() == 1 {
        return color_matching(graph);
    }
    color_paths_and_cycles(graph, 1)
}

/// A balanced cycle with 2 colors: switch to all-positive, color that, and
/// negate the colors at the switched vertices.
pub fn color_balanced_cycle(graph: &SignedGraph) -> Result<IncidenceColoring> {
    if !is_cycle(graph) {
        return Err(Error::WrongShape("cycle"));
    }
    let x = graph.balance_witness().ok_or(Error::Unbalanced)?;
    let positive = graph.switch(&x)?;
    Ok(color_paths_and_cycles(&positive, 1)?.negate_at(&positive, &x))
}

/// A signed forest with `Δ` colors: breadth-first from the smallest vertex
/// of each tree, children take the first free colors of the search order.
pub fn color_signed_forest(graph: &SignedGraph) -> Result<IncidenceColoring> {
    color_signed_forest_with(graph, graph.max_degree())
}

/// [`color_signed_forest`] over the palette `M_k` for some `k ≥ Δ`.
pub fn color_signed_forest_with(graph: &SignedGraph, k: usize) -> Result<IncidenceColoring> {
    if graph.m() == 0 {
        return Err(Error::Edgeless);
    }
    if !graph.is_forest() {
        return Err(Error::WrongShape("forest"));
    }
    if k < graph.max_degree() {
        return Err(Error::precondition(format!("{k} colors cannot cover degree {}", graph.max_degree())));
    }
    let order = ColorSet::new(k)?.search_order();
    let mut values: Vec<Option<[i32; 2]>> = vec![None; graph.m()];
    let mut parent_color: Vec<Option<i32>> = vec![None; graph.n()];
    let mut seen = vec![false; graph.n()];
    for root in 0..graph.n() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            let taken = parent_color[x];
            let mut free = order.iter().copied().filter(|&c| Some(c) != taken);
            for &(y, e) in graph.neighbors(x) {
                if seen[y] {
                    continue;
                }
                seen[y] = true;
                let edge = graph.edge(e);
                let a = free.next().expect("Δ colors suffice at every vertex");
                let b = -edge.sign.value() * a;
                values[e] = Some(if x == edge.u { [a, b] } else { [b, a] });
                parent_color[y] = Some(b);
                queue.push_back(y);
            }
        }
    }
    debug_assert!(check_partial(graph, k, &values).is_valid());
    Ok(IncidenceColoring::new(
        k,
        values.into_iter().map(|v| v.expect("tree edge")).collect(),
    ))
}
