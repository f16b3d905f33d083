// SPDX-License-Identifier: Apache-2.0

//! Reference checks written against the definitions only. They share no code
//! with the library beyond the graph container.

#![allow(dead_code)]

use rand::Rng;
use rand_chacha::ChaCha8Rng;
use sigcolor_core::color::IncidenceColoring;
use sigcolor_core::graph::{Sign, SignedGraph};

pub use rand::SeedableRng;
pub type TestRng = ChaCha8Rng;

pub fn rng(seed: u64) -> TestRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// `{±1..±l}` for `k = 2l`, `{0, ±1..±l}` for `k = 2l + 1`.
pub fn palette(k: usize) -> Vec<i32> {
    let l = (k / 2) as i32;
    let mut out: Vec<i32> = (1..=l).flat_map(|a| [a, -a]).collect();
    if k % 2 == 1 {
        out.insert(0, 0);
    }
    out
}

/// Checks a raw incidence assignment against the definition.
pub fn is_valid_coloring(graph: &SignedGraph, values: &[[i32; 2]], k: usize) -> bool {
    if values.len() != graph.m() {
        return false;
    }
    let allowed = palette(k);
    let mut at: Vec<Vec<i32>> = vec![Vec::new(); graph.n()];
    for (e, &[a, b]) in graph.edges().iter().zip(values) {
        if !allowed.contains(&a) || !allowed.contains(&b) || a != -e.sign.value() * b {
            return false;
        }
        at[e.u].push(a);
        at[e.v].push(b);
    }
    at.iter_mut().all(|colors| {
        colors.sort_unstable();
        colors.windows(2).all(|w| w[0] != w[1])
    })
}

pub fn valid(graph: &SignedGraph, coloring: &IncidenceColoring) -> bool {
    is_valid_coloring(graph, coloring.values(), coloring.k())
}

fn max_degree(graph: &SignedGraph) -> usize {
    let mut deg = vec![0; graph.n()];
    for e in graph.edges() {
        deg[e.u] += 1;
        deg[e.v] += 1;
    }
    deg.into_iter().max().unwrap_or(0)
}

pub fn delta(graph: &SignedGraph) -> usize {
    max_degree(graph)
}

/// Plain depth-first search over edges in order. `None` if the node budget
/// runs out first.
pub fn naive_k_colorable(graph: &SignedGraph, k: usize, budget: u64) -> Option<bool> {
    struct S<'a> {
        edges: &'a [sigcolor_core::graph::Edge],
        colors: Vec<i32>,
        used: Vec<Vec<i32>>,
        nodes: u64,
        budget: u64,
    }
    fn go(s: &mut S, i: usize) -> Option<bool> {
        if i == s.edges.len() {
            return Some(true);
        }
        s.nodes += 1;
        if s.nodes > s.budget {
            return None;
        }
        let e = s.edges[i];
        for idx in 0..s.colors.len() {
            let a = s.colors[idx];
            let b = -e.sign.value() * a;
            if s.used[e.u].contains(&a) || s.used[e.v].contains(&b) {
                continue;
            }
            s.used[e.u].push(a);
            s.used[e.v].push(b);
            let r = go(s, i + 1);
            s.used[e.u].pop();
            s.used[e.v].pop();
            match r {
                Some(false) => {}
                other => return other,
            }
        }
        Some(false)
    }
    let mut s = S {
        edges: graph.edges(),
        colors: palette(k),
        used: vec![Vec::new(); graph.n()],
        nodes: 0,
        budget,
    };
    go(&mut s, 0)
}

/// `χ′` from the naive search, trying `Δ` first.
pub fn naive_chromatic_index(graph: &SignedGraph, budget: u64) -> Option<usize> {
    let d = max_degree(graph);
    match naive_k_colorable(graph, d, budget)? {
        true => Some(d),
        false => Some(d + 1),
    }
}

/// Balanced iff the vertices admit a ±1 labeling `x` with `σ(uv) = x_u x_v`.
pub fn balanced(graph: &SignedGraph) -> bool {
    let mut label = vec![0i32; graph.n()];
    for start in 0..graph.n() {
        if label[start] != 0 {
            continue;
        }
        label[start] = 1;
        let mut stack = vec![start];
        while let Some(x) = stack.pop() {
            for e in graph.edges() {
                let (a, b) = if e.u == x { (e.u, e.v) } else if e.v == x { (e.v, e.u) } else { continue };
                let want = label[a] * e.sign.value();
                if label[b] == 0 {
                    label[b] = want;
                    stack.push(b);
                } else if label[b] != want {
                    return false;
                }
            }
        }
    }
    true
}

pub fn negatives(graph: &SignedGraph) -> usize {
    graph.edges().iter().filter(|e| e.sign == Sign::Minus).count()
}

pub fn signs_from_mask(mask: u64, len: usize) -> Vec<Sign> {
    (0..len).map(|b| if mask >> b & 1 == 1 { Sign::Minus } else { Sign::Plus }).collect()
}

pub fn random_signs(rng: &mut TestRng, len: usize) -> Vec<Sign> {
    (0..len).map(|_| if rng.gen_bool(0.5) { Sign::Minus } else { Sign::Plus }).collect()
}

/// Random signs with an even number of negatives, so a cycle is balanced.
pub fn balanced_cycle_signs(rng: &mut TestRng, len: usize) -> Vec<Sign> {
    let mut signs = random_signs(rng, len);
    if signs.iter().filter(|s| **s == Sign::Minus).count() % 2 == 1 {
        signs[0] = -signs[0];
    }
    signs
}

/// A random simple graph on at most `max_n` vertices with between 1 and
/// `max_m` edges.
pub fn random_graph(rng: &mut TestRng, max_n: usize, max_m: usize) -> SignedGraph {
    let n = rng.gen_range(2..=max_n);
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    for i in (1..pairs.len()).rev() {
        pairs.swap(i, rng.gen_range(0..=i));
    }
    let m = rng.gen_range(1..=max_m.min(pairs.len()));
    let signs = random_signs(rng, m);
    SignedGraph::new(n, pairs[..m].iter().zip(signs).map(|(&(u, v), s)| (u, v, s))).unwrap()
}

/// A random forest on `2..=max_n` vertices with at least one edge.
pub fn random_forest(rng: &mut TestRng, max_n: usize) -> SignedGraph {
    loop {
        let n = rng.gen_range(2..=max_n);
        let mut edges = Vec::new();
        for v in 1..n {
            if rng.gen_bool(0.8) {
                let sign = if rng.gen_bool(0.5) { Sign::Minus } else { Sign::Plus };
                edges.push((rng.gen_range(0..v), v, sign));
            }
        }
        if !edges.is_empty() {
            return SignedGraph::new(n, edges).unwrap();
        }
    }
}

/// A random tree with `1..=max_edges` edges.
pub fn random_tree(rng: &mut TestRng, max_edges: usize) -> SignedGraph {
    let m = rng.gen_range(1..=max_edges);
    let edges: Vec<_> = (1..=m)
        .map(|v| {
            let sign = if rng.gen_bool(0.5) { Sign::Minus } else { Sign::Plus };
            (rng.gen_range(0..v), v, sign)
        })
        .collect();
    SignedGraph::new(m + 1, edges).unwrap()
}
