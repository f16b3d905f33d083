// SPDX-License-Identifier: Apache-2.0

//! Cartesian, tensor, strong and corona products of signed graphs.
//!
//! For the first three, vertex `(i, j)` of the product is `i * n2 + j`. The
//! corona keeps the base vertices `0..n1` and puts vertex `j` of copy `i` at
//! `n1 + i * n2 + j`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Decomposition, Incidence, Sign, SignedGraph};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProductKind {
    Cartesian,
    Tensor,
    Strong,
    Corona,
}

impl std::str::FromStr for ProductKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<ProductKind> {
        match s {
            "cartesian" => Ok(ProductKind::Cartesian),
            "tensor" => Ok(ProductKind::Tensor),
            "strong" => Ok(ProductKind::Strong),
            "corona" => Ok(ProductKind::Corona),
            other => Err(Error::precondition(format!("unknown product kind {other:?}"))),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Factor {
    First,
    Second,
}

/// Where a product edge comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "from", rename_all = "kebab-case")]
pub enum EdgeOrigin {
    /// `(u, at)(v, at)` for edge `uv` of the first factor.
    First { edge: usize, at: usize },
    /// `(at, u')(at, v')` for edge `u'v'` of the second factor.
    Second { at: usize, edge: usize },
    /// Tensor edge over `uv` (first) and `u'v'` (second), both stored with
    /// `u < v`, `u' < v'`: `(u, u')(v, v')` when not crossed, else
    /// `(u, v')(v, u')`.
    Tensor { first: usize, second: usize, crossed: bool },
    /// An edge of the corona base graph.
    Base { edge: usize },
    /// Edge `edge` of the second factor inside copy `copy`.
    Copy { copy: usize, edge: usize },
    /// The link from base vertex `base` to vertex `vertex` of its copy.
    Link { base: usize, vertex: usize },
}

/// An edge projected onto one factor. For a cartesian edge along the other
/// factor `fixed` names the vertex it sits over.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeProjection {
    pub edge: usize,
    pub fixed: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductGraph {
    pub graph: SignedGraph,
    pub kind: ProductKind,
    pub dims: (usize, usize),
    pub origins: Vec<EdgeOrigin>,
}

impl ProductGraph {
    /// Vertex for the pair `(i, j)`; for a corona, vertex `j` of copy `i`.
    pub fn pair_index(&self, i: usize, j: usize) -> usize {
        let (n1, n2) = self.dims;
        match self.kind {
            ProductKind::Corona => n1 + i * n2 + j,
            _ => i * n2 + j,
        }
    }

    /// Inverse of [`pair_index`](Self::pair_index); `None` for corona base vertices.
    pub fn pair_of(&self, v: usize) -> Option<(usize, usize)> {
        let (n1, n2) = self.dims;
        match self.kind {
            ProductKind::Corona => (v >= n1).then(|| ((v - n1) / n2, (v - n1) % n2)),
            _ => Some((v / n2, v % n2)),
        }
    }

    /// Corona base vertices `v_1, …, v_{n1}`; empty for the other kinds.
    pub fn attachment_vertices(&self) -> Vec<usize> {
        match self.kind {
            ProductKind::Corona => (0..self.dims.0).collect(),
            _ => Vec::new(),
        }
    }

    pub fn project_vertex(&self, which: Factor, v: usize) -> Result<usize> {
        if v >= self.graph.n() {
            return Err(Error::VertexOutOfRange { vertex: v, n: self.graph.n() });
        }
        let (n1, _) = self.dims;
        match (self.kind, which) {
            (ProductKind::Corona, Factor::First) if v < n1 => Ok(v),
            (ProductKind::Corona, Factor::Second) if v >= n1 => Ok(self.pair_of(v).expect("copy").1),
            (ProductKind::Corona, _) => Err(Error::UndefinedProjection(format!(
                "vertex {v} has no image in the {which:?} factor"
            ))),
            (_, Factor::First) => Ok(v / self.dims.1),
            (_, Factor::Second) => Ok(v % self.dims.1),
        }
    }

    pub fn project_edge(&self, which: Factor, e: usize) -> Result<EdgeProjection> {
        let origin = *self
            .origins
            .get(e)
            .ok_or_else(|| Error::UndefinedProjection(format!("no edge {e}")))?;
        let undefined = || {
            Err(Error::UndefinedProjection(format!(
                "edge {e} ({origin:?}) has no image in the {which:?} factor"
            )))
        };
        match (origin, which) {
            (EdgeOrigin::First { edge, at }, Factor::First) => Ok(EdgeProjection { edge, fixed: Some(at) }),
            (EdgeOrigin::Second { at, edge }, Factor::Second) => Ok(EdgeProjection { edge, fixed: Some(at) }),
            (EdgeOrigin::Tensor { first, .. }, Factor::First) => Ok(EdgeProjection { edge: first, fixed: None }),
            (EdgeOrigin::Tensor { second, .. }, Factor::Second) => Ok(EdgeProjection { edge: second, fixed: None }),
            (EdgeOrigin::Base { edge }, Factor::First) => Ok(EdgeProjection { edge, fixed: None }),
            (EdgeOrigin::Copy { copy, edge }, Factor::Second) => Ok(EdgeProjection { edge, fixed: Some(copy) }),
            _ => undefined(),
        }
    }

    pub fn project_incidence(&self, which: Factor, incidence: Incidence) -> Result<Incidence> {
        let edge = self.project_edge(which, incidence.edge)?.edge;
        let vertex = self.project_vertex(which, incidence.vertex)?;
        Ok(Incidence { vertex, edge })
    }

    /// Edge indices grouped by origin: cartesian edges first, then tensor edges.
    /// Only meaningful for strong products.
    pub fn strong_parts(&self) -> Decomposition {
        let (cart, tens): (Vec<usize>, Vec<usize>) = (0..self.graph.m())
            .partition(|&e| !matches!(self.origins[e], EdgeOrigin::Tensor { .. }));
        Decomposition::new(vec![cart, tens])
    }

    /// Sidecar describing the pair-index map.
    pub fn index_map_json(&self) -> serde_json::Value {
        let pairs: Vec<_> = (0..self.graph.n())
            .map(|v| match self.pair_of(v) {
                Some((i, j)) => serde_json::json!([v, i, j]),
                None => serde_json::json!([v, null, null]),
            })
            .collect();
        serde_json::json!({
            "kind": self.kind,
            "dims": [self.dims.0, self.dims.1],
            "pairs": pairs,
            "origins": self.origins,
        })
    }
}

fn build(
    n: usize,
    kind: ProductKind,
    dims: (usize, usize),
    mut list: Vec<(usize, usize, Sign, EdgeOrigin)>,
) -> ProductGraph {
    for item in &mut list {
        if item.0 > item.1 {
            std::mem::swap(&mut item.0, &mut item.1);
        }
    }
    list.sort_by_key(|&(u, v, _, _)| (u, v));
    let graph = SignedGraph::new(n, list.iter().map(|&(u, v, s, _)| (u, v, s)))
        .expect("product edges are simple");
    ProductGraph {
        graph,
        kind,
        dims,
        origins: list.into_iter().map(|t| t.3).collect(),
    }
}

fn cartesian_edges(s1: &SignedGraph, s2: &SignedGraph) -> Vec<(usize, usize, Sign, EdgeOrigin)> {
    let n2 = s2.n();
    let mut list = Vec::with_capacity(s1.n() * s2.m() + s2.n() * s1.m());
    for (edge, e) in s1.edges().iter().enumerate() {
        for at in 0..n2 {
            list.push((e.u * n2 + at, e.v * n2 + at, e.sign, EdgeOrigin::First { edge, at }));
        }
    }
    for at in 0..s1.n() {
        for (edge, e) in s2.edges().iter().enumerate() {
            list.push((at * n2 + e.u, at * n2 + e.v, e.sign, EdgeOrigin::Second { at, edge }));
        }
    }
    list
}

fn tensor_edges(s1: &SignedGraph, s2: &SignedGraph) -> Vec<(usize, usize, Sign, EdgeOrigin)> {
    let n2 = s2.n();
    let mut list = Vec::with_capacity(2 * s1.m() * s2.m());
    for (first, e1) in s1.edges().iter().enumerate() {
        for (second, e2) in s2.edges().iter().enumerate() {
            let sign = e1.sign * e2.sign;
            list.push((
                e1.u * n2 + e2.u,
                e1.v * n2 + e2.v,
                sign,
                EdgeOrigin::Tensor { first, second, crossed: false },
            ));
            list.push((
                e1.u * n2 + e2.v,
                e1.v * n2 + e2.u,
                sign,
                EdgeOrigin::Tensor { first, second, crossed: true },
            ));
        }
    }
    list
}

pub fn cartesian(s1: &SignedGraph, s2: &SignedGraph) -> ProductGraph {
    let dims = (s1.n(), s2.n());
    build(dims.0 * dims.1, ProductKind::Cartesian, dims, cartesian_edges(s1, s2))
}

pub fn tensor(s1: &SignedGraph, s2: &SignedGraph) -> ProductGraph {
    let dims = (s1.n(), s2.n());
    build(dims.0 * dims.1, ProductKind::Tensor, dims, tensor_edges(s1, s2))
}

/// The strong product; [`ProductGraph::strong_parts`] splits it back into its
/// cartesian and tensor parts.
pub fn strong(s1: &SignedGraph, s2: &SignedGraph) -> ProductGraph {
    let dims = (s1.n(), s2.n());
    let mut list = cartesian_edges(s1, s2);
    list.extend(tensor_edges(s1, s2));
    build(dims.0 * dims.1, ProductKind::Strong, dims, list)
}

/// The corona `S1 ⊙ S2`. `link_signs[i * n2 + j]` signs the edge from base
/// vertex `i` to vertex `j` of its copy.
pub fn corona(s1: &SignedGraph, s2: &SignedGraph, link_signs: &[Sign]) -> Result<ProductGraph> {
    let (n1, n2) = (s1.n(), s2.n());
    if link_signs.len() != n1 * n2 {
        return Err(Error::LengthMismatch {
            what: "link signs",
            expected: n1 * n2,
            got: link_signs.len(),
        });
    }
    let mut list = Vec::new();
    for (edge, e) in s1.edges().iter().enumerate() {
        list.push((e.u, e.v, e.sign, EdgeOrigin::Base { edge }));
    }
    for copy in 0..n1 {
        let offset = n1 + copy * n2;
        for (edge, e) in s2.edges().iter().enumerate() {
            list.push((offset + e.u, offset + e.v, e.sign, EdgeOrigin::Copy { copy, edge }));
        }
        for vertex in 0..n2 {
            list.push((
                copy,
                offset + vertex,
                link_signs[copy * n2 + vertex],
                EdgeOrigin::Link { base: copy, vertex },
            ));
        }
    }
    Ok(build(n1 * (1 + n2), ProductKind::Corona, (n1, n2), list))
}

/// Relabels `(i, j) -> (j, i)`: maps `S1 ∘ S2` onto `S2 ∘ S1` for the three
/// pair products.
pub fn swap_map(n1: usize, n2: usize) -> Vec<usize> {
    (0..n1 * n2).map(|v| (v % n2) * n1 + v / n2).collect()
}
