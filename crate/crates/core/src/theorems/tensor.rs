// SPDX-License-Identifier: Apache-2.0

use std::collections::VecDeque;

use crate::color::{
    color_paths_and_cycles, color_signed_forest_with, ensure_valid, shift_nonzero, IncidenceColoring,
};
use crate::error::{Error, Result};
use crate::graph::{make_path, Decomposition, Sign, SignedGraph, VertexSet};
use crate::products::{tensor, EdgeOrigin};

/// `S1 × P2` where the single `P2` edge has sign `sigma2`: every color class
/// `±α` of `c1` lifts to paths and balanced cycles colored `±α` again, and
/// the 0-class lifts to a matching.
pub fn color_tensor_p2(s1: &SignedGraph, c1: &IncidenceColoring, sigma2: Sign) -> Result<IncidenceColoring> {
    let k = s1.max_degree();
    ensure_valid(s1, c1, k)?;
    let p2 = make_path(2, &[sigma2])?;
    let product = tensor(s1, &p2);
    let g = &product.graph;
    let magnitude = |e: usize| match product.origins[e] {
        EdgeOrigin::Tensor { first, .. } => c1.values()[first][0].abs(),
        _ => unreachable!("tensor origin"),
    };
    let mut values = vec![[0; 2]; g.m()];
    for alpha in 1..=(k / 2) as i32 {
        let class: Vec<usize> = (0..g.m()).filter(|&e| magnitude(e) == alpha).collect();
        if class.is_empty() {
            continue;
        }
        let colored = color_paths_and_cycles(&g.edge_subgraph(&class), alpha)?;
        for (&e, &pair) in class.iter().zip(colored.values()) {
            values[e] = pair;
        }
    }
    let coloring = IncidenceColoring::new(k, values);
    ensure_valid(g, &coloring, k)?;
    Ok(coloring)
}

/// The tensor edges grouped by the edge of the second factor they lie over.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CopyDecomposition {
    pub decomposition: Decomposition,
    /// `tags[i]` is the second-factor edge under part `i`.
    pub tags: Vec<usize>,
}

/// Splits `S1 × S2` into `m(S2)` copies of `S1 × P2`, one per edge of `S2`.
pub fn tensor_copy_decomposition(s1: &SignedGraph, s2: &SignedGraph) -> CopyDecomposition {
    let product = tensor(s1, s2);
    let mut parts = vec![Vec::new(); s2.m()];
    for (e, origin) in product.origins.iter().enumerate() {
        if let EdgeOrigin::Tensor { second, .. } = *origin {
            parts[second].push(e);
        }
    }
    CopyDecomposition {
        decomposition: Decomposition::new(parts),
        tags: (0..s2.m()).collect(),
    }
}

/// Proper edge coloring of an unsigned forest with colors `1..=Δ`, assigned
/// breadth-first from the smallest vertex of each tree.
pub fn greedy_tree_edge_coloring(tree: &SignedGraph) -> Result<Vec<usize>> {
    if !tree.is_forest() {
        return Err(Error::WrongShape("forest"));
    }
    let mut colors = vec![0usize; tree.m()];
    let mut parent = vec![0usize; tree.n()];
    let mut seen = vec![false; tree.n()];
    for root in 0..tree.n() {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut queue = VecDeque::from([root]);
        while let Some(x) = queue.pop_front() {
            let mut next = 1;
            for &(y, e) in tree.neighbors(x) {
                if seen[y] {
                    continue;
                }
                if next == parent[x] {
                    next += 1;
                }
                colors[e] = next;
                parent[y] = next;
                next += 1;
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    Ok(colors)
}

/// `S1 × T` for a signed tree `T`. After switching `T` to all-positive every
/// copy of `S1 × P2` over a tree edge is the same signed graph. Copy `i` is
/// colored from the bank `R_t` with `t` the greedy color of its tree edge,
/// then the edges left at 0 (a forest) are recolored with fresh colors.
pub fn color_tensor_tree(s1: &SignedGraph, c1: &IncidenceColoring, t: &SignedGraph) -> Result<IncidenceColoring> {
    if t.m() == 0 || !t.is_forest() || !t.is_connected() {
        return Err(Error::WrongShape("tree with at least one edge"));
    }
    if t.m() == 1 {
        return color_tensor_p2(s1, c1, t.edge(0).sign);
    }
    let d1 = s1.max_degree();
    let dt = t.max_degree();
    let product = tensor(s1, t);
    let total = d1 * dt;
    let base = color_tensor_p2(s1, c1, Sign::Plus)?;
    let lifted = tensor(s1, &make_path(2, &[Sign::Plus])?);
    let mut lookup = vec![[usize::MAX; 2]; s1.m()];
    for (e, origin) in lifted.origins.iter().enumerate() {
        if let EdgeOrigin::Tensor { first, crossed, .. } = *origin {
            lookup[first][crossed as usize] = e;
        }
    }

    let y = t.balance_witness().expect("trees are balanced");
    let n2 = t.n();
    let x = VertexSet::from_vertices(
        product.graph.n(),
        (0..s1.n()).flat_map(|u| y.iter().map(move |w| u * n2 + w)),
    )?;
    let switched = product.graph.switch(&x)?;

    let bank = greedy_tree_edge_coloring(t)?;
    let k = d1 / 2;
    let mut values = vec![[0; 2]; product.graph.m()];
    for (e, origin) in product.origins.iter().enumerate() {
        let EdgeOrigin::Tensor { first, second, crossed } = *origin else {
            unreachable!("tensor origin")
        };
        let offset = ((bank[second] - 1) * k) as i32;
        let [a, b] = base.values()[lookup[first][crossed as usize]];
        values[e] = [a + a.signum() * offset, b + b.signum() * offset];
    }

    let zeros: Vec<usize> = (0..values.len()).filter(|&e| values[e] == [0, 0]).collect();
    if !zeros.is_empty() {
        let forest = switched.edge_subgraph(&zeros);
        let repaired = color_signed_forest_with(&forest, dt)?;
        let repaired = shift_nonzero(&repaired, k * dt);
        for (&e, &pair) in zeros.iter().zip(repaired.values()) {
            values[e] = pair;
        }
    }
    let on_switched = IncidenceColoring::new(total, values);
    ensure_valid(&switched, &on_switched, total)?;
    let coloring = on_switched.negate_at(&switched, &x);
    ensure_valid(&product.graph, &coloring, total)?;
    Ok(coloring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::color::{color_balanced_cycle, color_path, color_signed_forest, exact_chromatic_index, verify_coloring};
    use crate::graph::{make_cycle, make_star, make_tree, Sign::Minus as M, Sign::Plus as P};

    #[test]
    fn p2_lifts() {
        let c4 = make_cycle(4, &[M, M, P, P]).unwrap();
        let c = color_tensor_p2(&c4, &color_balanced_cycle(&c4).unwrap(), P).unwrap();
        assert_eq!(c.k(), 2);
        let g = tensor(&c4, &make_path(2, &[P]).unwrap()).graph;
        assert_eq!(g.component_count(), 2);

        let c3 = make_cycle(3, &[M, M, P]).unwrap();
        let g = tensor(&c3, &make_path(2, &[M]).unwrap()).graph;
        assert!(g.is_connected() && g.is_balanced());
        let c = color_tensor_p2(&c3, &color_balanced_cycle(&c3).unwrap(), M).unwrap();
        assert!(verify_coloring(&g, &c).unwrap().is_valid());

        let p3 = make_path(3, &[P, M]).unwrap();
        let c = color_tensor_p2(&p3, &color_path(&p3).unwrap(), M).unwrap();
        assert_eq!(c.k(), 2);
    }

    #[test]
    fn copies() {
        let g1 = make_cycle(3, &[P; 3]).unwrap();
        let one = tensor_copy_decomposition(&g1, &make_path(2, &[P]).unwrap());
        assert_eq!(one.decomposition.parts.len(), 1);
        let p3 = make_path(3, &[P, P]).unwrap();
        let two = tensor_copy_decomposition(&g1, &p3);
        let g = tensor(&g1, &p3).graph;
        assert!(two.decomposition.is_valid_for(&g));
        let touched = |part: &[usize]| -> Vec<bool> {
            let mut t = vec![false; g.n()];
            for &e in part {
                t[g.edge(e).u] = true;
                t[g.edge(e).v] = true;
            }
            t
        };
        let (a, b) = (touched(&two.decomposition.parts[0]), touched(&two.decomposition.parts[1]));
        assert_eq!((0..g.n()).filter(|&v| a[v] && b[v]).count(), 3);
    }

    #[test]
    fn greedy_tree() {
        assert_eq!(greedy_tree_edge_coloring(&make_path(4, &[P; 3]).unwrap()).unwrap(), vec![1, 2, 1]);
        assert_eq!(greedy_tree_edge_coloring(&make_star(4, &[P; 4]).unwrap()).unwrap(), vec![1, 2, 3, 4]);
        assert_eq!(greedy_tree_edge_coloring(&make_path(2, &[M]).unwrap()).unwrap(), vec![1]);
        assert!(greedy_tree_edge_coloring(&make_cycle(3, &[P; 3]).unwrap()).is_err());
    }

    #[test]
    fn trees() {
        let p3 = make_path(3, &[P, M]).unwrap();
        let cp = color_path(&p3).unwrap();
        let star = make_star(3, &[M, P, M]).unwrap();
        let c = color_tensor_tree(&p3, &cp, &star).unwrap();
        let g = tensor(&p3, &star).graph;
        assert_eq!(c.k(), 6);
        assert_eq!(exact_chromatic_index(&g).unwrap().0, 6);

        let c = color_tensor_tree(&p3, &cp, &make_path(3, &[M, M]).unwrap()).unwrap();
        assert_eq!(c.k(), 4);

        let s1 = make_star(3, &[P, M, M]).unwrap();
        let t = make_tree(&[0, 1, 1, 0], &[M, P, M, P]).unwrap();
        let c = color_tensor_tree(&s1, &color_signed_forest(&s1).unwrap(), &t).unwrap();
        assert_eq!(c.k(), 9);

        let m = SignedGraph::new(4, [(0, 1, M), (2, 3, P)]).unwrap();
        let c = color_tensor_tree(&m, &crate::color::color_matching(&m).unwrap(), &star).unwrap();
        assert_eq!(c.k(), 3);
        assert!(color_tensor_tree(&p3, &cp, &make_cycle(3, &[P; 3]).unwrap()).is_err());
    }
}
