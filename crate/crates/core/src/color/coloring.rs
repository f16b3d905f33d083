// SPDX-License-Identifier: Apache-2.0

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::ColorSet;
use crate::error::{Error, Result};
use crate::graph::{Decomposition, Incidence, SignedGraph, VertexSet};

/// An assignment of colors to every incidence of a host graph.
///
/// `values[e] = [f(u:e), f(v:e)]` for edge `e = uv` with `u < v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IncidenceColoring {
    k: usize,
    values: Vec<[i32; 2]>,
}

impl IncidenceColoring {
    pub fn new(k: usize, values: Vec<[i32; 2]>) -> IncidenceColoring {
        IncidenceColoring { k, values }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn values(&self) -> &[[i32; 2]] {
        &self.values
    }

    pub fn palette(&self) -> ColorSet {
        ColorSet::new(self.k.max(1)).expect("positive")
    }

    /// Color of `vertex` on `edge`.
    pub fn at(&self, graph: &SignedGraph, edge: usize, vertex: usize) -> i32 {
        let e = graph.edge(edge);
        if vertex == e.u {
            self.values[edge][0]
        } else {
            debug_assert_eq!(vertex, e.v);
            self.values[edge][1]
        }
    }

    pub fn at_incidence(&self, graph: &SignedGraph, incidence: Incidence) -> i32 {
        self.at(graph, incidence.edge, incidence.vertex)
    }

    pub fn colors_used(&self) -> BTreeSet<i32> {
        self.values.iter().flatten().copied().collect()
    }

    pub fn uses_zero(&self) -> bool {
        self.values.iter().flatten().any(|&c| c == 0)
    }

    /// Same values, declared against another palette size.
    pub fn with_k(mut self, k: usize) -> IncidenceColoring {
        self.k = k;
        self
    }

    /// Colors every incidence at a vertex in `set` with its negation. This
    /// carries a valid coloring of a graph to one of the graph switched at
    /// `set`.
    pub fn negate_at(&self, graph: &SignedGraph, set: &VertexSet) -> IncidenceColoring {
        let values = graph
            .edges()
            .iter()
            .zip(&self.values)
            .map(|(e, &[a, b])| {
                [
                    if set.contains(e.u) { -a } else { a },
                    if set.contains(e.v) { -b } else { b },
                ]
            })
            .collect();
        IncidenceColoring { k: self.k, values }
    }

    /// Carries a coloring across a vertex relabeling: `target` must equal
    /// `source.relabel(map)`.
    pub fn transport(
        &self,
        source: &SignedGraph,
        target: &SignedGraph,
        map: &[usize],
    ) -> Result<IncidenceColoring> {
        let mut values = vec![[0; 2]; target.m()];
        let mut filled = vec![false; target.m()];
        for (i, e) in source.edges().iter().enumerate() {
            let (a, b) = (map[e.u], map[e.v]);
            let j = target
                .find_edge(a, b)
                .ok_or_else(|| Error::ShapeMismatch(format!("edge {a}-{b} missing in target")))?;
            let [fu, fv] = self.values[i];
            values[j] = if a < b { [fu, fv] } else { [fv, fu] };
            filled[j] = true;
        }
        if filled.iter().any(|f| !f) {
            return Err(Error::ShapeMismatch("target has extra edges".into()));
        }
        Ok(IncidenceColoring { k: self.k, values })
    }

    pub fn to_json(&self, graph: &SignedGraph) -> String {
        serde_json::to_string(&ColoringRepr::from_coloring(graph, self)).expect("coloring serializes")
    }

    pub fn to_json_value(&self, graph: &SignedGraph) -> serde_json::Value {
        serde_json::to_value(ColoringRepr::from_coloring(graph, self)).expect("coloring serializes")
    }

    /// Parses `{"k": .., "values": [[u, v, f_u, f_v], ..]}` against `graph`.
    /// Every edge must appear exactly once; either orientation is accepted.
    pub fn from_json(graph: &SignedGraph, text: &str) -> Result<IncidenceColoring> {
        let repr: ColoringRepr = serde_json::from_str(text)?;
        repr.into_coloring(graph)
    }

    pub fn from_json_value(graph: &SignedGraph, value: serde_json::Value) -> Result<IncidenceColoring> {
        let repr: ColoringRepr = serde_json::from_value(value)?;
        repr.into_coloring(graph)
    }
}

#[derive(Serialize, Deserialize)]
struct ColoringRepr {
    k: usize,
    values: Vec<(i64, i64, i64, i64)>,
}

impl ColoringRepr {
    fn from_coloring(graph: &SignedGraph, c: &IncidenceColoring) -> ColoringRepr {
        ColoringRepr {
            k: c.k,
            values: graph
                .edges()
                .iter()
                .zip(&c.values)
                .map(|(e, &[a, b])| (e.u as i64, e.v as i64, a as i64, b as i64))
                .collect(),
        }
    }

    fn into_coloring(self, graph: &SignedGraph) -> Result<IncidenceColoring> {
        let mut values = vec![None; graph.m()];
        for (a, b, fa, fb) in self.values {
            let (a, b) = (usize::try_from(a), usize::try_from(b));
            let (Ok(a), Ok(b)) = (a, b) else {
                return Err(Error::ShapeMismatch("negative vertex id".into()));
            };
            let e = graph
                .find_edge(a, b)
                .ok_or_else(|| Error::ShapeMismatch(format!("no edge {a}-{b} in graph")))?;
            let (fa, fb) = (fa as i32, fb as i32);
            let pair = if a < b { [fa, fb] } else { [fb, fa] };
            if values[e].replace(pair).is_some() {
                return Err(Error::ShapeMismatch(format!("edge {a}-{b} colored twice")));
            }
        }
        let missing = values.iter().filter(|v| v.is_none()).count();
        if missing > 0 {
            return Err(Error::ShapeMismatch(format!("{missing} edge(s) left uncolored")));
        }
        Ok(IncidenceColoring {
            k: self.k,
            values: values.into_iter().map(Option::unwrap).collect(),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Violation {
    /// A value outside `M_k`.
    OutOfPalette { incidence: Incidence, color: i32 },
    /// `f(u:uv) != -σ(uv) f(v:uv)`.
    EdgeRelation { edge: usize, at_u: i32, at_v: i32 },
    /// Two incidences at one vertex share a color.
    RepeatedColor {
        vertex: usize,
        color: i32,
        edges: (usize, usize),
    },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::OutOfPalette { incidence, color } => write!(
                f,
                "color {color} at {}:e{} is outside the palette",
                incidence.vertex, incidence.edge
            ),
            Violation::EdgeRelation { edge, at_u, at_v } => {
                write!(f, "edge e{edge} colored ({at_u}, {at_v}) breaks f(u) = -σ f(v)")
            }
            Violation::RepeatedColor { vertex, color, edges } => write!(
                f,
                "color {color} repeated at vertex {vertex} on edges e{} and e{}",
                edges.0, edges.1
            ),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Verification {
    pub violations: Vec<Violation>,
}

impl Verification {
    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn into_result(self) -> Result<()> {
        if self.is_valid() {
            Ok(())
        } else {
            Err(Error::InvalidColoring(self.violations))
        }
    }
}

/// Checks the palette, edge relation and vertex-distinctness conditions on
/// the colored edges; `None` entries are skipped.
pub(crate) fn check_partial(graph: &SignedGraph, k: usize, values: &[Option<[i32; 2]>]) -> Verification {
    let palette = ColorSet::new(k.max(1)).expect("positive");
    let mut violations = Vec::new();
    for (i, (e, value)) in graph.edges().iter().zip(values).enumerate() {
        let Some([a, b]) = *value else { continue };
        for (vertex, color) in [(e.u, a), (e.v, b)] {
            if k == 0 || !palette.contains(color) {
                violations.push(Violation::OutOfPalette {
                    incidence: Incidence { vertex, edge: i },
                    color,
                });
            }
        }
        if a != -e.sign.value() * b {
            violations.push(Violation::EdgeRelation { edge: i, at_u: a, at_v: b });
        }
    }
    for v in 0..graph.n() {
        let mut seen: Vec<(i32, usize)> = Vec::new();
        for &(_, e) in graph.neighbors(v) {
            let Some(pair) = values[e] else { continue };
            let color = if graph.edge(e).u == v { pair[0] } else { pair[1] };
            if let Some(&(_, first)) = seen.iter().find(|(c, _)| *c == color) {
                violations.push(Violation::RepeatedColor {
                    vertex: v,
                    color,
                    edges: (first, e),
                });
            } else {
                seen.push((color, e));
            }
        }
    }
    Verification { violations }
}

/// Verifies a total coloring of `graph`.
pub fn verify_coloring(graph: &SignedGraph, coloring: &IncidenceColoring) -> Result<Verification> {
    if coloring.values.len() != graph.m() {
        return Err(Error::ShapeMismatch(format!(
            "coloring has {} edges, graph has {}",
            coloring.values.len(),
            graph.m()
        )));
    }
    let values: Vec<_> = coloring.values.iter().copied().map(Some).collect();
    Ok(check_partial(graph, coloring.k, &values))
}

/// Verifies and additionally requires `coloring.k == k`.
pub(crate) fn ensure_valid(graph: &SignedGraph, coloring: &IncidenceColoring, k: usize) -> Result<()> {
    verify_coloring(graph, coloring)?.into_result()?;
    if coloring.k != k {
        return Err(Error::construction(format!(
            "coloring declares {} colors, expected {k}",
            coloring.k
        )));
    }
    Ok(())
}

/// Moves every positive color up by `offset` and every negative one down.
pub fn shift_colors(coloring: &IncidenceColoring, offset: usize) -> Result<IncidenceColoring> {
    if coloring.uses_zero() {
        return Err(Error::UsesZero);
    }
    Ok(shift_nonzero(coloring, offset).with_k(coloring.k + 2 * offset))
}

/// Like [`shift_colors`] but leaves zeros in place; `k` is unchanged.
pub(crate) fn shift_nonzero(coloring: &IncidenceColoring, offset: usize) -> IncidenceColoring {
    let d = offset as i32;
    let shift = |c: i32| c + c.signum() * d;
    IncidenceColoring {
        k: coloring.k,
        values: coloring
            .values
            .iter()
            .map(|&[a, b]| [shift(a), shift(b)])
            .collect(),
    }
}

/// Combines colorings of the parts of a decomposition. `parts[i]` colors
/// `graph.edge_subgraph(&decomposition.parts[i])`. The result is declared
/// against the smallest palette containing every color used.
pub fn merge_colorings(
    graph: &SignedGraph,
    decomposition: &Decomposition,
    parts: &[IncidenceColoring],
) -> Result<IncidenceColoring> {
    if !decomposition.is_valid_for(graph) {
        return Err(Error::precondition("parts do not partition the edge set"));
    }
    if parts.len() != decomposition.parts.len() {
        return Err(Error::LengthMismatch {
            what: "part colorings",
            expected: decomposition.parts.len(),
            got: parts.len(),
        });
    }
    let mut values = vec![[0; 2]; graph.m()];
    for (part, coloring) in decomposition.parts.iter().zip(parts) {
        let mut idx = part.clone();
        idx.sort_unstable();
        if coloring.values.len() != idx.len() {
            return Err(Error::ShapeMismatch(format!(
                "part with {} edges colored with {} values",
                idx.len(),
                coloring.values.len()
            )));
        }
        for (&e, &pair) in idx.iter().zip(&coloring.values) {
            values[e] = pair;
        }
    }
    for v in 0..graph.n() {
        let mut seen = BTreeSet::new();
        for &(_, e) in graph.neighbors(v) {
            let color = if graph.edge(e).u == v { values[e][0] } else { values[e][1] };
            if !seen.insert(color) {
                return Err(Error::ColorCollision { vertex: v, color });
            }
        }
    }
    let k = ColorSet::covering(values.iter().flatten().copied()).k();
    let merged = IncidenceColoring { k, values };
    verify_coloring(graph, &merged)?.into_result()?;
    Ok(merged)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{make_cycle, make_path, Sign::Minus as M, Sign::Plus as P};

    #[test]
    fn single_edge_relation() {
        let p = make_path(2, &[P]).unwrap();
        let c = IncidenceColoring::new(2, vec![[1, -1]]);
        assert!(verify_coloring(&p, &c).unwrap().is_valid());
        let n = make_path(2, &[M]).unwrap();
        let c = IncidenceColoring::new(2, vec![[1, 1]]);
        assert!(verify_coloring(&n, &c).unwrap().is_valid());
        let c = IncidenceColoring::new(2, vec![[1, -1]]);
        let report = verify_coloring(&n, &c).unwrap();
        assert_eq!(report.violations, vec![Violation::EdgeRelation { edge: 0, at_u: 1, at_v: -1 }]);
    }

    #[test]
    fn repeated_color_at_vertex() {
        let p = make_path(3, &[P, P]).unwrap();
        let c = IncidenceColoring::new(2, vec![[-1, 1], [1, -1]]);
        let report = verify_coloring(&p, &c).unwrap();
        assert_eq!(
            report.violations,
            vec![Violation::RepeatedColor { vertex: 1, color: 1, edges: (0, 1) }]
        );
    }

    #[test]
    fn out_of_palette_and_shape() {
        let p = make_path(2, &[P]).unwrap();
        let c = IncidenceColoring::new(1, vec![[1, -1]]);
        assert_eq!(verify_coloring(&p, &c).unwrap().violations.len(), 2);
        let short = IncidenceColoring::new(1, vec![]);
        assert!(verify_coloring(&p, &short).is_err());
    }

    #[test]
    fn shifting() {
        let c = IncidenceColoring::new(2, vec![[1, -1], [-1, 1]]);
        let s = shift_colors(&c, 1).unwrap();
        assert_eq!(s.values(), &[[2, -2], [-2, 2]]);
        assert_eq!(s.k(), 4);
        assert_eq!(shift_colors(&c, 0).unwrap(), c);
        let c = IncidenceColoring::new(4, vec![[1, -2], [2, 1]]);
        assert_eq!(shift_colors(&c, 2).unwrap().values(), &[[3, -4], [4, 3]]);
        assert!(matches!(
            shift_colors(&IncidenceColoring::new(1, vec![[0, 0]]), 1),
            Err(Error::UsesZero)
        ));
    }

    #[test]
    fn merge_disjoint_and_colliding() {
        let g = SignedGraph::unsigned(4, [(0, 1), (2, 3)]).unwrap();
        let d = Decomposition::new(vec![vec![0], vec![1]]);
        let parts = [
            IncidenceColoring::new(1, vec![[0, 0]]),
            IncidenceColoring::new(1, vec![[0, 0]]),
        ];
        assert_eq!(merge_colorings(&g, &d, &parts).unwrap().k(), 1);

        let p = make_path(3, &[P, P]).unwrap();
        let d = Decomposition::new(vec![vec![0], vec![1]]);
        let parts = [
            IncidenceColoring::new(2, vec![[-1, 1]]),
            IncidenceColoring::new(2, vec![[1, -1]]),
        ];
        assert!(matches!(
            merge_colorings(&p, &d, &parts),
            Err(Error::ColorCollision { vertex: 1, color: 1 })
        ));
    }

    #[test]
    fn json_shape_errors() {
        let c4 = make_cycle(4, &[P; 4]).unwrap();
        let c = IncidenceColoring::new(2, vec![[1, -1], [-1, 1], [-1, 1], [1, -1]]);
        let text = c.to_json(&c4);
        assert_eq!(IncidenceColoring::from_json(&c4, &text).unwrap(), c);
        let p = make_path(4, &[P; 3]).unwrap();
        assert!(IncidenceColoring::from_json(&p, &text).is_err());
        let partial = r#"{"k":2,"values":[[0,1,1,-1]]}"#;
        assert!(IncidenceColoring::from_json(&c4, partial).is_err());
    }

    #[test]
    fn negation_follows_switching() {
        let c4 = make_cycle(4, &[P, M, P, M]).unwrap();
        let c = IncidenceColoring::new(2, vec![[1, -1], [-1, -1], [1, 1], [-1, 1]]);
        assert!(verify_coloring(&c4, &c).unwrap().is_valid());
        let x = VertexSet::from_vertices(4, [1]).unwrap();
        let switched = c4.switch(&x).unwrap();
        assert!(verify_coloring(&switched, &c.negate_at(&c4, &x)).unwrap().is_valid());
    }
}
