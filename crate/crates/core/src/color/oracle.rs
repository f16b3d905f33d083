// SPDX-License-Identifier: Apache-2.0

//! Exact decision procedure for `k`-colorability.
//!
//! Backtracking over edges, branching on the color at the smaller endpoint
//! (the other end is then forced). Per vertex a bitmask of used colors and a
//! bitmask of their negations make each edge's domain a couple of word
//! operations. The next edge is the one with the fewest remaining values,
//! ties broken by a static order (larger endpoint degree first, then edge
//! index). Magnitudes not yet used anywhere are interchangeable, as is the
//! sign of each one, so only `+(max + 1)` is tried as a fresh magnitude.
//! A Hall-type count at every vertex prunes states where the free colors at
//! a vertex cannot all be reached by its uncolored edges.

use super::IncidenceColoring;
use crate::error::{Error, Result};
use crate::graph::SignedGraph;

/// Largest palette the bitmask search handles.
pub const MAX_ORACLE_COLORS: usize = 63;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SearchStats {
    pub nodes: u64,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Colorable(IncidenceColoring),
    Infeasible,
    /// The node budget ran out first.
    Aborted,
}

/// Returns a `k`-coloring if one exists.
pub fn decide_k_colorable(graph: &SignedGraph, k: usize) -> Result<Option<IncidenceColoring>> {
    match search_k_colorable(graph, k, None)?.0 {
        SearchOutcome::Colorable(c) => Ok(Some(c)),
        SearchOutcome::Infeasible => Ok(None),
        SearchOutcome::Aborted => unreachable!("no budget"),
    }
}

/// [`decide_k_colorable`] with an optional cap on search nodes.
pub fn search_k_colorable(
    graph: &SignedGraph,
    k: usize,
    node_budget: Option<u64>,
) -> Result<(SearchOutcome, SearchStats)> {
    if k == 0 {
        return Err(Error::precondition("k must be at least 1"));
    }
    if graph.max_degree() > k {
        return Ok((SearchOutcome::Infeasible, SearchStats::default()));
    }
    if k > MAX_ORACLE_COLORS {
        return Err(Error::Unsupported(format!(
            "exact search supports at most {MAX_ORACLE_COLORS} colors"
        )));
    }
    let mut s = Search::new(graph, k, node_budget);
    let found = s.run();
    let stats = SearchStats { nodes: s.nodes };
    let outcome = if found {
        SearchOutcome::Colorable(s.witness())
    } else if s.aborted {
        SearchOutcome::Aborted
    } else {
        SearchOutcome::Infeasible
    };
    Ok((outcome, stats))
}

/// `χ′(S)` with a witness; tries `Δ` then `Δ + 1`.
pub fn exact_chromatic_index(graph: &SignedGraph) -> Result<(usize, IncidenceColoring)> {
    if graph.m() == 0 {
        return Err(Error::Edgeless);
    }
    let delta = graph.max_degree();
    if let Some(c) = decide_k_colorable(graph, delta)? {
        return Ok((delta, c));
    }
    match decide_k_colorable(graph, delta + 1)? {
        Some(c) => Ok((delta + 1, c)),
        None => Err(Error::BoundViolated(delta + 1)),
    }
}

struct Search<'a> {
    graph: &'a SignedGraph,
    k: usize,
    l: i32,
    width: u32,
    full: u64,
    /// Allowed values at the smaller endpoint once magnitudes `1..=mm` are in use.
    allowed: Vec<u64>,
    /// Value order: 0, +1, -1, +2, -2, ...
    order_bits: Vec<(i32, u64)>,
    static_order: Vec<usize>,
    value: Vec<Option<i32>>,
    used: Vec<u64>,
    neg: Vec<u64>,
    remaining: Vec<u32>,
    max_mag: i32,
    nodes: u64,
    budget: Option<u64>,
    aborted: bool,
}

impl<'a> Search<'a> {
    fn new(graph: &'a SignedGraph, k: usize, budget: Option<u64>) -> Search<'a> {
        let l = (k / 2) as i32;
        let width = (2 * l + 1) as u32;
        let bit = |c: i32| 1u64 << (c + l);
        let mut full = 0;
        for c in -l..=l {
            if c != 0 || k % 2 == 1 {
                full |= bit(c);
            }
        }
        let allowed = (0..=l)
            .map(|mm| {
                let mut mask = 0;
                for c in -mm..=mm {
                    mask |= bit(c);
                }
                if mm < l {
                    mask |= bit(mm + 1);
                }
                mask & full
            })
            .collect();
        let mut order_bits = Vec::new();
        if k % 2 == 1 {
            order_bits.push((0, bit(0)));
        }
        for m in 1..=l {
            order_bits.push((m, bit(m)));
            order_bits.push((-m, bit(-m)));
        }
        let mut static_order: Vec<usize> = (0..graph.m()).collect();
        static_order.sort_by_key(|&i| {
            let e = graph.edge(i);
            (std::cmp::Reverse(graph.degree(e.u).max(graph.degree(e.v))), i)
        });
        Search {
            graph,
            k,
            l,
            width,
            full,
            allowed,
            order_bits,
            static_order,
            value: vec![None; graph.m()],
            used: vec![0; graph.n()],
            neg: vec![0; graph.n()],
            remaining: (0..graph.n()).map(|v| graph.degree(v) as u32).collect(),
            max_mag: 0,
            nodes: 0,
            budget,
            aborted: false,
        }
    }

    fn bit(&self, c: i32) -> u64 {
        1u64 << (c + self.l)
    }

    fn reverse(&self, mask: u64) -> u64 {
        mask.reverse_bits() >> (64 - self.width)
    }

    /// Values still possible at the smaller endpoint of edge `i`.
    fn domain(&self, i: usize) -> u64 {
        let e = self.graph.edge(i);
        let other = if e.sign.is_negative() {
            self.used[e.v]
        } else {
            self.neg[e.v]
        };
        self.full & !self.used[e.u] & !other
    }

    fn hall_ok(&self) -> bool {
        for w in 0..self.graph.n() {
            let need = self.remaining[w];
            if need == 0 {
                continue;
            }
            let mut reach = 0u64;
            for &(_, i) in self.graph.neighbors(w) {
                if self.value[i].is_some() {
                    continue;
                }
                let d = self.domain(i);
                let e = self.graph.edge(i);
                reach |= if w == e.u || e.sign.is_negative() {
                    d
                } else {
                    self.reverse(d)
                };
            }
            if reach.count_ones() < need {
                return false;
            }
        }
        true
    }

    fn assign(&mut self, i: usize, a: i32) {
        let e = self.graph.edge(i);
        let b = -e.sign.value() * a;
        self.value[i] = Some(a);
        self.used[e.u] |= self.bit(a);
        self.neg[e.u] |= self.bit(-a);
        self.used[e.v] |= self.bit(b);
        self.neg[e.v] |= self.bit(-b);
        self.remaining[e.u] -= 1;
        self.remaining[e.v] -= 1;
    }

    fn unassign(&mut self, i: usize, a: i32) {
        let e = self.graph.edge(i);
        let b = -e.sign.value() * a;
        self.value[i] = None;
        self.used[e.u] &= !self.bit(a);
        self.neg[e.u] &= !self.bit(-a);
        self.used[e.v] &= !self.bit(b);
        self.neg[e.v] &= !self.bit(-b);
        self.remaining[e.u] += 1;
        self.remaining[e.v] += 1;
    }

    fn run(&mut self) -> bool {
        self.nodes += 1;
        if let Some(b) = self.budget {
            if self.nodes > b {
                self.aborted = true;
                return false;
            }
        }
        let allowed = self.allowed[self.max_mag as usize];
        let mut best: Option<(u32, usize, u64)> = None;
        for idx in 0..self.static_order.len() {
            let i = self.static_order[idx];
            if self.value[i].is_some() {
                continue;
            }
            let d = self.domain(i) & allowed;
            let count = d.count_ones();
            if count == 0 {
                return false;
            }
            if best.map_or(true, |(c, _, _)| count < c) {
                best = Some((count, i, d));
                if count == 1 {
                    break;
                }
            }
        }
        let Some((_, i, d)) = best else {
            return true;
        };
        if !self.hall_ok() {
            return false;
        }
        for idx in 0..self.order_bits.len() {
            let (a, bit) = self.order_bits[idx];
            if d & bit == 0 {
                continue;
            }
            let saved = self.max_mag;
            self.max_mag = self.max_mag.max(a.abs());
            self.assign(i, a);
            if self.run() {
                return true;
            }
            self.unassign(i, a);
            self.max_mag = saved;
            if self.aborted {
                return false;
            }
        }
        false
    }

    fn witness(&self) -> IncidenceColoring {
        let values = self
            .graph
            .edges()
            .iter()
            .zip(&self.value)
            .map(|(e, a)| {
                let a = a.expect("complete assignment");
                [a, -e.sign.value() * a]
            })
            .collect();
        IncidenceColoring::new(self.k, values)
    }
}
