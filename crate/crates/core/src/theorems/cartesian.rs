// SPDX-License-Identifier: Apache-2.0

use serde::{Deserialize, Serialize};

use super::{
    complement, require_cycle, require_path, vertex_list, Certificate, Claim, TheoremOutcome,
};
use crate::color::{
    color_balanced_cycle, color_matching, color_paths_and_cycles, ensure_valid, merge_colorings, shift_nonzero,
    IncidenceColoring,
};
use crate::error::{Error, Result};
use crate::graph::{Decomposition, Sign, SignedGraph, VertexSet};
use crate::products::{cartesian, swap_map, EdgeOrigin, ProductGraph};

/// A combined coloring and the edges that were recolored because both of
/// their incidences had received 0.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CombinedTrace {
    pub coloring: IncidenceColoring,
    pub zero_graph: Vec<usize>,
}

/// Combines `Δ`-colorings of two factors into a `Δ`-coloring of their
/// cartesian product.
pub fn color_cartesian_combined(
    s1: &SignedGraph,
    c1: &IncidenceColoring,
    s2: &SignedGraph,
    c2: &IncidenceColoring,
) -> Result<IncidenceColoring> {
    Ok(color_cartesian_combined_traced(s1, c1, s2, c2)?.coloring)
}

pub fn color_cartesian_combined_traced(
    s1: &SignedGraph,
    c1: &IncidenceColoring,
    s2: &SignedGraph,
    c2: &IncidenceColoring,
) -> Result<CombinedTrace> {
    let (d1, d2) = (s1.max_degree(), s2.max_degree());
    if d1 == 0 || d2 == 0 {
        return Err(Error::precondition("both factors need an edge"));
    }
    ensure_valid(s1, c1, d1)?;
    ensure_valid(s2, c2, d2)?;
    let product = cartesian(s1, s2);
    let k = d1 + d2;

    // The factor with even Δ gets shifted past the other one's colors; in the
    // odd-odd case the second factor is shifted and every 0-0 edge is repaired.
    let (c1, c2) = if d2 % 2 == 0 || d1 % 2 == 1 {
        (c1.clone(), shift_nonzero(c2, d1 / 2))
    } else {
        (shift_nonzero(c1, d2 / 2), c2.clone())
    };
    let mut values: Vec<[i32; 2]> = product
        .origins
        .iter()
        .map(|origin| match *origin {
            EdgeOrigin::First { edge, .. } => c1.values()[edge],
            EdgeOrigin::Second { edge, .. } => c2.values()[edge],
            _ => unreachable!("cartesian origins"),
        })
        .collect();

    let zero_graph: Vec<usize> = (0..values.len()).filter(|&e| values[e] == [0, 0]).collect();
    if d1 % 2 == 1 && d2 % 2 == 1 {
        let h = product.graph.edge_subgraph(&zero_graph);
        check_zero_graph(&h)?;
        let alpha = (d1 / 2 + d2 / 2 + 1) as i32;
        let recolored = color_paths_and_cycles(&h, alpha)?;
        for (&e, &pair) in zero_graph.iter().zip(recolored.values()) {
            values[e] = pair;
        }
    } else if !zero_graph.is_empty() && k % 2 == 0 {
        return Err(Error::construction("0 left in an even palette"));
    }
    let coloring = IncidenceColoring::new(k, values);
    ensure_valid(&product.graph, &coloring, k)?;
    Ok(CombinedTrace {
        coloring,
        zero_graph: if d1 % 2 == 1 && d2 % 2 == 1 { zero_graph } else { Vec::new() },
    })
}

/// Every component of the 0-0 subgraph must be one edge or a balanced 4-cycle.
fn check_zero_graph(h: &SignedGraph) -> Result<()> {
    let (label, count) = h.components();
    let mut edges = vec![0usize; count];
    let mut vertices = vec![0usize; count];
    for v in 0..h.n() {
        if h.degree(v) > 0 {
            vertices[label[v]] += 1;
        }
    }
    for e in h.edges() {
        edges[label[e.u]] += 1;
    }
    for c in 0..count {
        match (edges[c], vertices[c]) {
            (0, _) | (1, 2) | (4, 4) => {}
            (m, n) => {
                return Err(Error::construction(format!(
                    "0-0 component with {m} edges on {n} vertices"
                )))
            }
        }
    }
    if h.max_degree() > 2 || !h.is_balanced() {
        return Err(Error::construction("0-0 subgraph is not matchings and balanced 4-cycles"));
    }
    Ok(())
}

/// `P_r □ C_s` for `r ≥ 2`: one part gets the cycle copies minus their
/// closing edge plus the rungs pairing columns `2t, 2t + 1` at the two end
/// rows; it is a union of balanced cycles and at most one path. The rest is
/// a matching for `r = 2` and paths plus balanced 4-cycles otherwise.
pub fn color_cartesian_path_cycle(s1: &SignedGraph, s2: &SignedGraph) -> Result<IncidenceColoring> {
    let r = require_path(s1)?;
    let s = require_cycle(s2)?;
    if r < 2 {
        return Err(Error::precondition("the path factor needs at least two vertices"));
    }
    let product = cartesian(s1, s2);
    let g = &product.graph;
    let at = |i: usize, j: usize| i * s + j;
    let edge = |a: usize, b: usize| g.find_edge(a, b).expect("product edge");
    let mut h1 = Vec::new();
    for i in 0..r {
        for j in 0..s - 1 {
            h1.push(edge(at(i, j), at(i, j + 1)));
        }
    }
    for t in 0..r / 2 {
        for j in [0, s - 1] {
            h1.push(edge(at(2 * t, j), at(2 * t + 1, j)));
        }
    }
    let h2 = complement(g, &h1);
    let c1 = color_paths_and_cycles(&g.edge_subgraph(&h1), 1)?;
    let c2 = if r == 2 {
        color_matching(&g.edge_subgraph(&h2))?
    } else {
        color_paths_and_cycles(&g.edge_subgraph(&h2), 2)?
    };
    let k = g.max_degree();
    let coloring = merge_colorings(g, &Decomposition::new(vec![h1, h2]), &[c1, c2])?.with_k(k);
    ensure_valid(g, &coloring, k)?;
    Ok(coloring)
}

fn four_cycles_to_edges(g: &SignedGraph, cycles: &[[usize; 4]]) -> Result<Vec<usize>> {
    let mut out = Vec::with_capacity(4 * cycles.len());
    for c in cycles {
        for t in 0..4 {
            let (a, b) = (c[t], c[(t + 1) % 4]);
            out.push(
                g.find_edge(a, b)
                    .ok_or_else(|| Error::construction(format!("{a}-{b} is not a product edge")))?,
            );
        }
    }
    Ok(out)
}

fn split_and_color(product: &ProductGraph, h1: Vec<usize>) -> Result<(Decomposition, IncidenceColoring)> {
    let g = &product.graph;
    let sub1 = g.edge_subgraph(&h1);
    if sub1.regular_degree() != Some(2) {
        return Err(Error::construction("first part is not 2-regular"));
    }
    let h2 = complement(g, &h1);
    let c1 = color_paths_and_cycles(&sub1, 1)?;
    let c2 = color_paths_and_cycles(&g.edge_subgraph(&h2), 2)?;
    let d = Decomposition::new(vec![h1, h2]);
    let coloring = merge_colorings(g, &d, &[c1, c2])?.with_k(4);
    ensure_valid(g, &coloring, 4)?;
    Ok((d, coloring))
}

/// `C_{2r} □ C_{2s}`: the first part is `rs` vertex-disjoint balanced 4-cycles
/// (corner, border-column, border-row and interior families); the rest is
/// another such union. Colored `±1` and `±2`.
pub fn decompose_even_even(s1: &SignedGraph, s2: &SignedGraph) -> Result<(Decomposition, IncidenceColoring)> {
    let a = require_cycle(s1)?;
    let b = require_cycle(s2)?;
    if a % 2 == 1 || b % 2 == 1 {
        return Err(Error::precondition("both cycles must be even"));
    }
    let (r, s) = (a / 2, b / 2);
    let product = cartesian(s1, s2);
    // 1-based `(i, j)` as written in the construction.
    let at = |i: usize, j: usize| (i - 1) * b + (j - 1);
    let mut cycles = vec![[at(1, 1), at(1, 2 * s), at(2 * r, 2 * s), at(2 * r, 1)]];
    for i in 1..r {
        cycles.push([at(2 * i, 1), at(2 * i, 2 * s), at(2 * i + 1, 2 * s), at(2 * i + 1, 1)]);
    }
    for i in 1..s {
        cycles.push([at(1, 2 * i), at(1, 2 * i + 1), at(2 * r, 2 * i + 1), at(2 * r, 2 * i)]);
    }
    for i in 1..r {
        for j in 1..s {
            cycles.push([at(2 * i, 2 * j), at(2 * i, 2 * j + 1), at(2 * i + 1, 2 * j + 1), at(2 * i + 1, 2 * j)]);
        }
    }
    debug_assert_eq!(cycles.len(), r * s);
    let h1 = four_cycles_to_edges(&product.graph, &cycles)?;
    split_and_color(&product, h1)
}

/// `C_{2r} □ C_{2s+1}` with the even factor balanced: for each column pair
/// `2i-1, 2i` one long balanced cycle runs down one column and back up the
/// other; the remaining edges are row copies of the even factor plus 4-cycles
/// on the last two rows.
pub fn decompose_balanced_even_odd(
    s1: &SignedGraph,
    s2: &SignedGraph,
) -> Result<(Decomposition, IncidenceColoring)> {
    let a = require_cycle(s1)?;
    let b = require_cycle(s2)?;
    if a % 2 == 1 || b % 2 == 0 {
        return Err(Error::precondition("expected an even cycle times an odd cycle"));
    }
    if !s1.is_balanced() {
        return Err(Error::Unbalanced);
    }
    let (r, s) = (a / 2, (b - 1) / 2);
    let product = cartesian(s1, s2);
    let g = &product.graph;
    let at = |i: usize, j: usize| (i - 1) * b + (j - 1);
    let edge = |x: usize, y: usize| {
        g.find_edge(x, y)
            .ok_or_else(|| Error::construction(format!("{x}-{y} is not a product edge")))
    };
    let mut h1 = Vec::new();
    for i in 1..=r {
        let (p, q) = (2 * i - 1, 2 * i);
        h1.push(edge(at(p, 2 * s + 1), at(p, 1))?);
        h1.push(edge(at(q, 2 * s + 1), at(p, 2 * s + 1))?);
        h1.push(edge(at(q, 1), at(q, 2 * s + 1))?);
        h1.push(edge(at(p, 2 * s), at(q, 2 * s))?);
        for j in 1..2 * s {
            h1.push(edge(at(p, j), at(p, j + 1))?);
            h1.push(edge(at(q, j + 1), at(q, j))?);
        }
    }
    split_and_color(&product, h1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ParityCertificate {
    pub degree: usize,
    pub negative_edges: usize,
}

/// A `2r`-regular graph (`r ≥ 1`) with an odd number of negative edges needs
/// `Δ + 1` colors: a `Δ`-coloring would split it into `r` balanced 2-factors.
pub fn parity_lower_bound(graph: &SignedGraph) -> Option<ParityCertificate> {
    let degree = graph.regular_degree()?;
    let negative_edges = graph.negative_count();
    (degree >= 2 && degree % 2 == 0 && negative_edges % 2 == 1).then_some(ParityCertificate { degree, negative_edges })
}

fn negated(graph: &SignedGraph) -> SignedGraph {
    let signs: Vec<Sign> = graph.signs().into_iter().map(|s| -s).collect();
    graph.with_signs(&signs).expect("same length")
}

/// For two unbalanced odd cycles, a switching set of their cartesian product
/// after which every edge is negative: `(X1 × V2) Δ (V1 × X2)` where `Xi`
/// switches factor `i` to all-negative.
pub fn switch_to_all_negative(s1: &SignedGraph, s2: &SignedGraph) -> Result<VertexSet> {
    let a = require_cycle(s1)?;
    let b = require_cycle(s2)?;
    if a % 2 == 0 || b % 2 == 0 || s1.is_balanced() || s2.is_balanced() {
        return Err(Error::precondition("both factors must be unbalanced odd cycles"));
    }
    let x1 = negated(s1).balance_witness().expect("odd unbalanced cycle negates to balanced");
    let x2 = negated(s2).balance_witness().expect("odd unbalanced cycle negates to balanced");
    let n = a * b;
    let first = VertexSet::from_vertices(n, x1.iter().flat_map(|u| (0..b).map(move |j| u * b + j)))?;
    let second = VertexSet::from_vertices(n, (0..a).flat_map(|i| x2.iter().map(move |j| i * b + j)))?;
    let x = first.symmetric_difference(&second);
    let switched = cartesian(s1, s2).graph.switch(&x)?;
    if switched.negative_count() != switched.m() {
        return Err(Error::construction("switching left a positive edge"));
    }
    Ok(x)
}

fn combined_balanced_cycles(s1: &SignedGraph, s2: &SignedGraph) -> Result<IncidenceColoring> {
    let c1 = color_balanced_cycle(s1)?;
    let c2 = color_balanced_cycle(s2)?;
    color_cartesian_combined(s1, &c1, s2, &c2)
}

fn delta(coloring: IncidenceColoring, certificate: Certificate) -> TheoremOutcome {
    TheoremOutcome { claim: Claim::Delta, coloring: Some(coloring), certificate }
}

fn parity_outcome(product: &SignedGraph) -> Result<TheoremOutcome> {
    let cert = parity_lower_bound(product)
        .ok_or_else(|| Error::construction("expected an odd number of negative edges"))?;
    Ok(TheoremOutcome {
        claim: Claim::DeltaPlusOne,
        coloring: None,
        certificate: Certificate::OddNegativeRegular {
            degree: cert.degree,
            negative_edges: cert.negative_edges,
        },
    })
}

/// Decides `χ′(C_r □ C_s)` from the factor lengths and balance, with a
/// coloring when it is `Δ`.
pub fn classify_cycle_product(s1: &SignedGraph, s2: &SignedGraph) -> Result<TheoremOutcome> {
    let r = require_cycle(s1)?;
    let s = require_cycle(s2)?;
    let product = cartesian(s1, s2);
    let (b1, b2) = (s1.is_balanced(), s2.is_balanced());
    match (r % 2 == 0, s % 2 == 0) {
        (true, true) => Ok(delta(decompose_even_even(s1, s2)?.1, Certificate::EvenEvenDecomposition)),
        (true, false) | (false, true) => {
            let even_first = r % 2 == 0;
            let (even_balanced, odd_balanced) = if even_first { (b1, b2) } else { (b2, b1) };
            match (even_balanced, odd_balanced) {
                (true, true) => Ok(delta(combined_balanced_cycles(s1, s2)?, Certificate::CombinedFactors)),
                (true, false) => {
                    let coloring = if even_first {
                        decompose_balanced_even_odd(s1, s2)?.1
                    } else {
                        let flipped = cartesian(s2, s1);
                        decompose_balanced_even_odd(s2, s1)?.1.transport(
                            &flipped.graph,
                            &product.graph,
                            &swap_map(s, r),
                        )?
                    };
                    ensure_valid(&product.graph, &coloring, 4)?;
                    Ok(delta(coloring, Certificate::BalancedEvenOddDecomposition))
                }
                _ => parity_outcome(&product.graph),
            }
        }
        (false, false) => match (b1, b2) {
            (true, true) => Ok(delta(combined_balanced_cycles(s1, s2)?, Certificate::CombinedFactors)),
            (false, false) => {
                let x = switch_to_all_negative(s1, s2)?;
                Ok(TheoremOutcome {
                    claim: Claim::DeltaPlusOne,
                    coloring: None,
                    certificate: Certificate::AllNegativeOddOrder {
                        switching: vertex_list(&x),
                        vertices: product.graph.n(),
                    },
                })
            }
            _ => parity_outcome(&product.graph),
        },
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::color::{color_path, color_signed_forest, decide_k_colorable, exact_chromatic_index, verify_coloring};
    use crate::graph::{make_cycle, make_path, make_star, Sign::Minus as M, Sign::Plus as P};

    fn valid(g: &SignedGraph, c: &IncidenceColoring) -> bool {
        verify_coloring(g, c).unwrap().is_valid()
    }

    #[test]
    fn path_by_path() {
        let a = make_path(3, &[P, M]).unwrap();
        let b = make_path(3, &[M, M]).unwrap();
        let (ca, cb) = (color_path(&a).unwrap(), color_path(&b).unwrap());
        let c = color_cartesian_combined(&a, &ca, &b, &cb).unwrap();
        assert_eq!(c.k(), 4);
        assert!(c.colors_used().iter().all(|x| [1, -1, 2, -2].contains(x)));
    }

    #[test]
    fn odd_odd_repair_on_single_edges() {
        let a = make_path(2, &[M]).unwrap();
        let b = make_path(2, &[P]).unwrap();
        let ca = color_path(&a).unwrap();
        let cb = color_path(&b).unwrap();
        let trace = color_cartesian_combined_traced(&a, &ca, &b, &cb).unwrap();
        assert_eq!(trace.zero_graph.len(), 4);
        assert_eq!(trace.coloring.k(), 2);
        let g = cartesian(&a, &b).graph;
        assert!(decide_k_colorable(&g, 2).unwrap().is_some());
    }

    #[test]
    fn star_by_edge() {
        let a = make_star(3, &[M, P, M]).unwrap();
        let b = make_path(2, &[M]).unwrap();
        let ca = color_signed_forest(&a).unwrap();
        let cb = color_path(&b).unwrap();
        let c = color_cartesian_combined(&a, &ca, &b, &cb).unwrap();
        let g = cartesian(&a, &b).graph;
        assert_eq!(c.k(), 4);
        assert!(valid(&g, &c));
        assert_eq!(exact_chromatic_index(&g).unwrap().0, 4);
    }

    #[test]
    fn path_cycle_small() {
        for sig in [[P, P, P, P], [M, P, P, P], [M, M, P, M]] {
            let c4 = make_cycle(4, &sig).unwrap();
            for (r, k) in [(2, 3), (3, 4), (4, 4), (5, 4)] {
                let p = make_path(r, &vec![M; r - 1]).unwrap();
                let c = color_cartesian_path_cycle(&p, &c4).unwrap();
                assert_eq!(c.k(), k);
                assert!(valid(&cartesian(&p, &c4).graph, &c));
            }
        }
        assert!(color_cartesian_path_cycle(&make_path(1, &[]).unwrap(), &make_cycle(3, &[P; 3]).unwrap()).is_err());
    }

    #[test]
    fn even_even_parts_are_two_factors() {
        let a = make_cycle(6, &[M, P, P, P, P, P]).unwrap();
        let b = make_cycle(4, &[M, M, P, M]).unwrap();
        let (d, c) = decompose_even_even(&a, &b).unwrap();
        let g = cartesian(&a, &b).graph;
        assert!(valid(&g, &c));
        for part in &d.parts {
            assert_eq!(g.edge_subgraph(part).regular_degree(), Some(2));
        }
    }

    #[test]
    fn balanced_even_times_odd() {
        let a = make_cycle(6, &[M, M, P, P, P, P]).unwrap();
        let b = make_cycle(5, &[M, P, P, P, P]).unwrap();
        let (_, c) = decompose_balanced_even_odd(&a, &b).unwrap();
        assert!(valid(&cartesian(&a, &b).graph, &c));
        let unbalanced = make_cycle(4, &[M, P, P, P]).unwrap();
        assert!(decompose_balanced_even_odd(&unbalanced, &b).is_err());
    }

    #[test]
    fn all_negative_switch() {
        let a = make_cycle(3, &[P, M, P]).unwrap();
        let b = make_cycle(5, &[M, M, M, P, P]).unwrap();
        let x = switch_to_all_negative(&a, &b).unwrap();
        let g = cartesian(&a, &b).graph.switch(&x).unwrap();
        assert_eq!(g.negative_count(), 30);
        assert!(switch_to_all_negative(&make_cycle(3, &[P; 3]).unwrap(), &b).is_err());
    }

    #[test]
    fn parity() {
        let c4 = make_cycle(4, &[M, P, P, P]).unwrap();
        assert_eq!(parity_lower_bound(&c4), Some(ParityCertificate { degree: 2, negative_edges: 1 }));
        assert_eq!(parity_lower_bound(&make_path(3, &[M, P]).unwrap()), None);
        assert_eq!(parity_lower_bound(&make_cycle(4, &[M, M, P, P]).unwrap()), None);
    }

    #[test]
    fn classification_dispatch() {
        let c4u = make_cycle(4, &[M, P, P, P]).unwrap();
        let c6u = make_cycle(6, &[M, P, P, P, P, P]).unwrap();
        let c5b = make_cycle(5, &[P; 5]).unwrap();
        let c3u = make_cycle(3, &[M, P, P]).unwrap();
        let c4b = make_cycle(4, &[P; 4]).unwrap();

        let o = classify_cycle_product(&c4u, &c6u).unwrap();
        assert_eq!((o.claim, &o.certificate), (Claim::Delta, &Certificate::EvenEvenDecomposition));
        let o = classify_cycle_product(&c4u, &c5b).unwrap();
        assert_eq!(o.claim, Claim::DeltaPlusOne);
        assert!(matches!(o.certificate, Certificate::OddNegativeRegular { .. }));
        let o = classify_cycle_product(&c3u, &c3u).unwrap();
        assert_eq!(o.claim, Claim::DeltaPlusOne);
        assert!(matches!(o.certificate, Certificate::AllNegativeOddOrder { .. }));
        for (x, y) in [(&c4b, &c3u), (&c3u, &c4b)] {
            let o = classify_cycle_product(x, y).unwrap();
            assert_eq!(o.certificate, Certificate::BalancedEvenOddDecomposition);
            assert!(valid(&cartesian(x, y).graph, o.coloring.as_ref().unwrap()));
        }
    }
}
