// SPDX-License-Identifier: Apache-2.0

//! Signed graphs with a canonical edge list.
//!
//! Vertices are the dense range `0..n`. Every edge is stored as `(u, v, sign)`
//! with `u < v` and the edge list is kept sorted, so two graphs with the same
//! vertices, edges and signs compare (and serialize) identically no matter how
//! they were built.

use std::collections::VecDeque;
use std::fmt;
use std::ops::{Mul, Neg};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn from_int(value: i64) -> Result<Sign> {
        match value {
            1 => Ok(Sign::Plus),
            -1 => Ok(Sign::Minus),
            other => Err(Error::InvalidSign(other)),
        }
    }

    pub fn value(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Minus
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub u: usize,
    pub v: usize,
    pub sign: Sign,
}

impl Edge {
    /// The endpoint opposite to `x`. `x` must be an endpoint.
    pub fn other(&self, x: usize) -> usize {
        debug_assert!(x == self.u || x == self.v);
        if x == self.u {
            self.v
        } else {
            self.u
        }
    }

    pub fn has(&self, x: usize) -> bool {
        self.u == x || self.v == x
    }
}

/// A vertex paired with one of its edges, `v:e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Incidence {
    pub vertex: usize,
    pub edge: usize,
}

#[derive(Clone, Debug)]
pub struct SignedGraph {
    n: usize,
    edges: Vec<Edge>,
    adj: Vec<Vec<(usize, usize)>>,
}

impl PartialEq for SignedGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}

impl Eq for SignedGraph {}

impl std::hash::Hash for SignedGraph {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.edges.hash(state);
    }
}

impl SignedGraph {
    /// Builds a graph from edges in any order and orientation.
    pub fn new<I>(n: usize, edges: I) -> Result<SignedGraph>
    where
        I: IntoIterator<Item = (usize, usize, Sign)>,
    {
        let mut list = Vec::new();
        for (a, b, sign) in edges {
            if a >= n || b >= n {
                return Err(Error::VertexOutOfRange { vertex: a.max(b), n });
            }
            if a == b {
                return Err(Error::SelfLoop(a));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            list.push(Edge { u, v, sign });
        }
        list.sort();
        for pair in list.windows(2) {
            if pair[0].u == pair[1].u && pair[0].v == pair[1].v {
                return Err(Error::DuplicateEdge(pair[0].u, pair[0].v));
            }
        }
        Ok(Self::from_sorted(n, list))
    }

    /// An all-positive graph on the given pairs.
    pub fn unsigned<I>(n: usize, pairs: I) -> Result<SignedGraph>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        Self::new(n, pairs.into_iter().map(|(u, v)| (u, v, Sign::Plus)))
    }

    pub fn empty(n: usize) -> SignedGraph {
        Self::from_sorted(n, Vec::new())
    }

    fn from_sorted(n: usize, edges: Vec<Edge>) -> SignedGraph {
        let mut adj = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            adj[e.u].push((e.v, i));
            adj[e.v].push((e.u, i));
        }
        SignedGraph { n, edges, adj }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> Edge {
        self.edges[index]
    }

    /// `(neighbour, edge index)` pairs, in edge-list order.
    pub fn neighbors(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Index of the edge joining `a` and `b`, if any.
    pub fn find_edge(&self, a: usize, b: usize) -> Option<usize> {
        if a >= self.n || b >= self.n {
            return None;
        }
        let (u, v) = if a < b { (a, b) } else { (b, a) };
        self.edges
            .binary_search_by(|e| (e.u, e.v).cmp(&(u, v)))
            .ok()
    }

    pub fn signs(&self) -> Vec<Sign> {
        self.edges.iter().map(|e| e.sign).collect()
    }

    pub fn negative_count(&self) -> usize {
        self.edges.iter().filter(|e| e.sign.is_negative()).count()
    }

    /// Same underlying graph, new signature in edge-list order.
    pub fn with_signs(&self, signs: &[Sign]) -> Result<SignedGraph> {
        if signs.len() != self.m() {
            return Err(Error::LengthMismatch {
                what: "signature",
                expected: self.m(),
                got: signs.len(),
            });
        }
        let edges = self
            .edges
            .iter()
            .zip(signs)
            .map(|(e, &sign)| Edge { sign, ..*e })
            .collect();
        Ok(Self::from_sorted(self.n, edges))
    }

    /// Signature given as a bitmask: bit `i` set means edge `i` is negative.
    pub fn with_sign_mask(&self, mask: u64) -> SignedGraph {
        debug_assert!(self.m() <= 64);
        let edges = self
            .edges
            .iter()
            .enumerate()
            .map(|(i, e)| Edge {
                sign: if mask >> i & 1 == 1 { Sign::Minus } else { Sign::Plus },
                ..*e
            })
            .collect();
        Self::from_sorted(self.n, edges)
    }

    /// The spanning subgraph keeping only the listed edges. Edge `j` of the
    /// result is edge `sorted(indices)[j]` of `self`.
    pub fn edge_subgraph(&self, indices: &[usize]) -> SignedGraph {
        let mut idx = indices.to_vec();
        idx.sort_unstable();
        idx.dedup();
        Self::from_sorted(self.n, idx.iter().map(|&i| self.edges[i]).collect())
    }

    /// Applies a vertex relabeling `v -> map[v]`.
    pub fn relabel(&self, map: &[usize]) -> Result<SignedGraph> {
        if map.len() != self.n {
            return Err(Error::LengthMismatch {
                what: "vertex map",
                expected: self.n,
                got: map.len(),
            });
        }
        Self::new(
            self.n,
            self.edges.iter().map(|e| (map[e.u], map[e.v], e.sign)),
        )
    }

    /// Degree shared by every vertex, if the graph is regular and non-empty.
    pub fn regular_degree(&self) -> Option<usize> {
        let first = self.adj.first()?.len();
        self.adj.iter().all(|a| a.len() == first).then_some(first)
    }

    /// Component label per vertex and the number of components.
    pub fn components(&self) -> (Vec<usize>, usize) {
        let mut label = vec![usize::MAX; self.n];
        let mut count = 0;
        for start in 0..self.n {
            if label[start] != usize::MAX {
                continue;
            }
            label[start] = count;
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for &(y, _) in &self.adj[x] {
                    if label[y] == usize::MAX {
                        label[y] = count;
                        queue.push_back(y);
                    }
                }
            }
            count += 1;
        }
        (label, count)
    }

    pub fn component_count(&self) -> usize {
        self.components().1
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    pub fn is_forest(&self) -> bool {
        self.m() + self.component_count() == self.n
    }

    /// Marks the edges of a breadth-first spanning forest.
    pub fn spanning_forest(&self) -> Vec<bool> {
        let mut in_tree = vec![false; self.m()];
        let mut seen = vec![false; self.n];
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for &(y, e) in &self.adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        in_tree[e] = true;
                        queue.push_back(y);
                    }
                }
            }
        }
        in_tree
    }

    /// Negates every edge with exactly one endpoint in `set`.
    pub fn switch(&self, set: &VertexSet) -> Result<SignedGraph> {
        if set.universe() != self.n {
            return Err(Error::LengthMismatch {
                what: "switching set",
                expected: self.n,
                got: set.universe(),
            });
        }
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let sign = if set.contains(e.u) != set.contains(e.v) {
                    -e.sign
                } else {
                    e.sign
                };
                Edge { sign, ..*e }
            })
            .collect();
        Ok(Self::from_sorted(self.n, edges))
    }

    /// A vertex set whose switching makes every edge positive, if one exists.
    ///
    /// Runs a breadth-first sweep assigning each vertex a potential
    /// `h(v) = ±1` with `σ(uv) = h(u)h(v)`; the set is `{v : h(v) = -1}` and
    /// always excludes the first vertex of each component.
    pub fn balance_witness(&self) -> Option<VertexSet> {
        let mut potential: Vec<Option<Sign>> = vec![None; self.n];
        for start in 0..self.n {
            if potential[start].is_some() {
                continue;
            }
            potential[start] = Some(Sign::Plus);
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                let hx = potential[x].expect("visited");
                for &(y, e) in &self.adj[x] {
                    let want = hx * self.edges[e].sign;
                    match potential[y] {
                        None => {
                            potential[y] = Some(want);
                            queue.push_back(y);
                        }
                        Some(hy) if hy != want => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let mut set = VertexSet::new(self.n);
        for (v, h) in potential.iter().enumerate() {
            if *h == Some(Sign::Minus) {
                set.insert(v);
            }
        }
        Some(set)
    }

    pub fn is_balanced(&self) -> bool {
        self.balance_witness().is_some()
    }

    /// Sign product along a cycle given as its vertex sequence (without
    /// repeating the first vertex at the end).
    pub fn cycle_sign(&self, cycle: &[usize]) -> Result<Sign> {
        if cycle.len() < 3 {
            return Err(Error::WrongShape("cycle (fewer than 3 vertices)"));
        }
        let mut seen = vec![false; self.n];
        let mut sign = Sign::Plus;
        for (i, &a) in cycle.iter().enumerate() {
            if a >= self.n {
                return Err(Error::VertexOutOfRange { vertex: a, n: self.n });
            }
            if std::mem::replace(&mut seen[a], true) {
                return Err(Error::WrongShape("cycle (repeated vertex)"));
            }
            let b = cycle[(i + 1) % cycle.len()];
            let e = self
                .find_edge(a, b)
                .ok_or(Error::WrongShape("cycle (missing edge)"))?;
            sign = sign * self.edges[e].sign;
        }
        Ok(sign)
    }

    /// Visits the edges of a component that is a path or cycle, in walking
    /// order, starting from `start`. Returns `(edge, from, to)` triples.
    pub(crate) fn walk_from(&self, start: usize) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        let mut used = vec![false; self.m()];
        let mut at = start;
        loop {
            let next = self.adj[at].iter().find(|(_, e)| !used[*e]).copied();
            match next {
                Some((y, e)) => {
                    used[e] = true;
                    out.push((e, at, y));
                    at = y;
                }
                None => break,
            }
        }
        out
    }
}

impl fmt::Display for SignedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "n={} [", self.n)?;
        for (i, e) in self.edges.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{}{}{}", e.u, e.sign, e.v)?;
        }
        f.write_str("]")
    }
}

/// Serialized form: `{"n": 3, "edges": [[0, 1, 1], [1, 2, -1]]}`.
#[derive(Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<(i64, i64, i64)>,
}

impl Serialize for SignedGraph {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        GraphRepr {
            n: self.n,
            edges: self
                .edges
                .iter()
                .map(|e| (e.u as i64, e.v as i64, e.sign.value() as i64))
                .collect(),
        }
        .serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SignedGraph {
    fn deserialize<D: serde::Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let repr = GraphRepr::deserialize(deserializer)?;
        let mut edges = Vec::with_capacity(repr.edges.len());
        for (u, v, s) in repr.edges {
            if u < 0 || v < 0 {
                return Err(serde::de::Error::custom("negative vertex id"));
            }
            let sign = Sign::from_int(s).map_err(serde::de::Error::custom)?;
            edges.push((u as usize, v as usize, sign));
        }
        SignedGraph::new(repr.n, edges).map_err(serde::de::Error::custom)
    }
}

impl SignedGraph {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serializes")
    }

    pub fn from_json(text: &str) -> Result<SignedGraph> {
        Ok(serde_json::from_str(text)?)
    }
}

/// A subset of `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct VertexSet {
    members: Vec<bool>,
}

impl VertexSet {
    pub fn new(n: usize) -> VertexSet {
        VertexSet {
            members: vec![false; n],
        }
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(n: usize, vertices: I) -> Result<VertexSet> {
        let mut set = VertexSet::new(n);
        for v in vertices {
            if v >= n {
                return Err(Error::VertexOutOfRange { vertex: v, n });
            }
            set.insert(v);
        }
        Ok(set)
    }

    /// Size of the ground set.
    pub fn universe(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.members.get(v).copied().unwrap_or(false)
    }

    pub fn insert(&mut self, v: usize) {
        self.members[v] = true;
    }

    pub fn len(&self) -> usize {
        self.members.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.members
            .iter()
            .enumerate()
            .filter_map(|(v, &b)| b.then_some(v))
    }

    /// Switching by `a` then by `b` equals switching by their symmetric difference.
    pub fn symmetric_difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet {
            members: self
                .members
                .iter()
                .zip(&other.members)
                .map(|(a, b)| a != b)
                .collect(),
        }
    }
}

/// A partition of a host graph's edge indices into parts.
#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Decomposition {
    pub parts: Vec<Vec<usize>>,
}

impl Decomposition {
    pub fn new(parts: Vec<Vec<usize>>) -> Decomposition {
        Decomposition { parts }
    }

    /// True iff the parts are pairwise disjoint and cover every edge.
    pub fn is_valid_for(&self, graph: &SignedGraph) -> bool {
        let mut seen = vec![false; graph.m()];
        for part in &self.parts {
            for &e in part {
                if e >= graph.m() || std::mem::replace(&mut seen[e], true) {
                    return false;
                }
            }
        }
        seen.into_iter().all(|b| b)
    }
}

pub fn validate_decomposition(graph: &SignedGraph, decomposition: &Decomposition) -> bool {
    decomposition.is_valid_for(graph)
}

pub fn max_degree(graph: &SignedGraph) -> usize {
    graph.max_degree()
}

pub fn switch(graph: &SignedGraph, set: &VertexSet) -> Result<SignedGraph> {
    graph.switch(set)
}

pub fn is_balanced(graph: &SignedGraph) -> bool {
    graph.is_balanced()
}

pub fn cycle_sign(graph: &SignedGraph, cycle: &[usize]) -> Result<Sign> {
    graph.cycle_sign(cycle)
}

fn check_len(what: &'static str, expected: usize, got: usize) -> Result<()> {
    if expected == got {
        Ok(())
    } else {
        Err(Error::LengthMismatch { what, expected, got })
    }
}

/// The path `0 - 1 - ... - (r-1)`; `signs[i]` is the sign of edge `i(i+1)`.
pub fn make_path(r: usize, signs: &[Sign]) -> Result<SignedGraph> {
    if r == 0 {
        return Err(Error::precondition("a path needs at least one vertex"));
    }
    check_len("path signature", r - 1, signs.len())?;
    SignedGraph::new(r, signs.iter().enumerate().map(|(i, &s)| (i, i + 1, s)))
}

/// The cycle `0 - 1 - ... - (r-1) - 0`; `signs[r-1]` is the sign of the closing
/// edge `(r-1)0`.
pub fn make_cycle(r: usize, signs: &[Sign]) -> Result<SignedGraph> {
    if r < 3 {
        return Err(Error::precondition("a cycle needs at least three vertices"));
    }
    check_len("cycle signature", r, signs.len())?;
    SignedGraph::new(
        r,
        signs.iter().enumerate().map(|(i, &s)| (i, (i + 1) % r, s)),
    )
}

/// `K_n` with signs in canonical (lexicographic) edge order.
pub fn make_complete(n: usize, signs: &[Sign]) -> Result<SignedGraph> {
    check_len("complete graph signature", n * n.saturating_sub(1) / 2, signs.len())?;
    let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    SignedGraph::new(n, pairs.zip(signs).map(|((u, v), &s)| (u, v, s)))
}

/// A tree given by parent pointers: vertex `i + 1` hangs off `parents[i]`,
/// which must be at most `i`.
pub fn make_tree(parents: &[usize], signs: &[Sign]) -> Result<SignedGraph> {
    check_len("tree signature", parents.len(), signs.len())?;
    for (i, &p) in parents.iter().enumerate() {
        if p > i {
            return Err(Error::precondition(format!(
                "parent of vertex {} must be below it, got {p}",
                i + 1
            )));
        }
    }
    SignedGraph::new(
        parents.len() + 1,
        parents.iter().zip(signs).enumerate().map(|(i, (&p, &s))| (p, i + 1, s)),
    )
}

/// The star `K_{1,leaves}` centred at vertex 0.
pub fn make_star(leaves: usize, signs: &[Sign]) -> Result<SignedGraph> {
    make_tree(&vec![0; leaves], signs)
}
