// SPDX-License-Identifier: Apache-2.0

use serde::{Deserialize, Serialize};

use super::ratio::{EnumerationOptions, Enumeration};
use crate::color::{decide_k_colorable, ensure_valid, exact_chromatic_index, IncidenceColoring};
use crate::error::{Error, Result};
use crate::graph::{make_complete, Sign, SignedGraph};
use crate::theorems::{parity_lower_bound, ParityCertificate};

pub const COMPLETE_PROBE_GUARD: usize = 5;
pub const JOINED_PROBE_GUARD: usize = 4;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    /// Edge signs in the graph's edge order.
    pub signs: Vec<i32>,
    pub negative_edges: Vec<[usize; 2]>,
    pub chromatic_index: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub parity: Option<ParityCertificate>,
}

/// Outcome of the mirrored-clique construction over all consistent signatures.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RemarkCheck {
    pub signatures: u64,
    pub verified: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProbeReport {
    pub conjecture: String,
    pub n: usize,
    pub representatives: u64,
    /// The chromatic index the conjecture asserts.
    pub expected: usize,
    pub counterexamples: Vec<Counterexample>,
    pub holds: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub remark: Option<RemarkCheck>,
}

fn guard(n: usize, limit: usize) -> Result<()> {
    if n > limit {
        return Err(Error::GuardExceeded { what: "clique order", limit, actual: n });
    }
    Ok(())
}

fn counterexamples(graph: &SignedGraph, expected: usize) -> Result<(u64, Vec<Counterexample>)> {
    let opts = EnumerationOptions { jobs: Some(1), ..Default::default() };
    let run = Enumeration::cosets(graph, &opts)?;
    let total = run.state().total;
    let mut found = Vec::new();
    for index in 0..total {
        let g = run.signature(index);
        let (index_value, _) = exact_chromatic_index(&g)?;
        if index_value != expected {
            found.push(Counterexample {
                signs: g.signs().iter().map(|s| s.value()).collect(),
                negative_edges: g.edges().iter().filter(|e| e.sign.is_negative()).map(|e| [e.u, e.v]).collect(),
                chromatic_index: index_value,
                parity: parity_lower_bound(&g),
            });
        }
    }
    Ok((total, found))
}

/// Checks `χ′ = n - 1` on one signature per switching class of `K_n`.
pub fn probe_complete_conjecture(n: usize, limit: usize) -> Result<ProbeReport> {
    guard(n, limit)?;
    if n < 2 {
        return Err(Error::precondition("K_n needs n ≥ 2"));
    }
    let graph = make_complete(n, &vec![Sign::Plus; n * (n - 1) / 2])?;
    let (representatives, found) = counterexamples(&graph, n - 1)?;
    Ok(ProbeReport {
        conjecture: "complete".into(),
        n,
        representatives,
        expected: n - 1,
        holds: found.is_empty(),
        counterexamples: found,
        remark: None,
    })
}

/// Two copies of `K_n` on `0..n` and `n..2n`, vertex `i` matching `n + i`,
/// joined by the edge `0 - n`.
pub fn joined_cliques(n: usize, first: &[Sign], second: &[Sign], join: Sign) -> Result<SignedGraph> {
    let a = make_complete(n, first)?;
    let b = make_complete(n, second)?;
    let edges = a
        .edges()
        .iter()
        .map(|e| (e.u, e.v, e.sign))
        .chain(b.edges().iter().map(|e| (e.u + n, e.v + n, e.sign)))
        .chain([(0, n, join)]);
    SignedGraph::new(2 * n, edges)
}

/// An `n`-coloring of the joined graph when both copies carry the same
/// signature. `c′` colors `K_n` with `n` colors and misses `α` at vertex 0.
/// A positive join takes `c′` and `-c′`, colored `α` and `-α` at its ends;
/// a negative join takes `c′` twice and `α` at both ends.
pub fn mirrored_clique_coloring(n: usize, signs: &[Sign], join: Sign) -> Result<IncidenceColoring> {
    let clique = make_complete(n, signs)?;
    let graph = joined_cliques(n, signs, signs, join)?;
    let c = decide_k_colorable(&clique, n)?
        .ok_or_else(|| Error::construction("K_n has no n-coloring"))?;
    let used: Vec<i32> = clique.neighbors(0).iter().map(|&(_, e)| c.at(&clique, e, 0)).collect();
    let alpha = c
        .palette()
        .members()
        .into_iter()
        .find(|a| !used.contains(a))
        .ok_or_else(|| Error::construction("no color missing at vertex 0"))?;
    let mirror = if join == Sign::Plus { -1 } else { 1 };
    let mut values = vec![[0; 2]; graph.m()];
    let mut put = |a: usize, b: usize, fa: i32, fb: i32| {
        let f = graph.find_edge(a, b).expect("edge of the joined graph");
        values[f] = if graph.edge(f).u == a { [fa, fb] } else { [fb, fa] };
    };
    for (e, ed) in clique.edges().iter().enumerate() {
        let (x, y) = (c.at(&clique, e, ed.u), c.at(&clique, e, ed.v));
        put(ed.u, ed.v, x, y);
        put(ed.u + n, ed.v + n, mirror * x, mirror * y);
    }
    put(0, n, alpha, mirror * alpha);
    let coloring = IncidenceColoring::new(n, values);
    ensure_valid(&graph, &coloring, n)?;
    Ok(coloring)
}

/// Checks `χ′ = n` on one signature per switching class of `(K_n ∪ K_n) + e`,
/// and runs [`mirrored_clique_coloring`] on every consistent signature.
pub fn probe_joined_cliques_conjecture(n: usize, limit: usize) -> Result<ProbeReport> {
    guard(n, limit)?;
    if n < 2 {
        return Err(Error::precondition("K_n needs n ≥ 2"));
    }
    let q = n * (n - 1) / 2;
    let plus = vec![Sign::Plus; q];
    let graph = joined_cliques(n, &plus, &plus, Sign::Plus)?;
    let (representatives, found) = counterexamples(&graph, n)?;

    let mut signatures = 0;
    let mut verified = 0;
    for mask in 0..1u64 << q {
        let signs: Vec<Sign> = (0..q).map(|b| if mask >> b & 1 == 1 { Sign::Minus } else { Sign::Plus }).collect();
        for join in [Sign::Plus, Sign::Minus] {
            signatures += 1;
            verified += mirrored_clique_coloring(n, &signs, join).is_ok() as u64;
        }
    }
    Ok(ProbeReport {
        conjecture: "joined-cliques".into(),
        n,
        representatives,
        expected: n,
        holds: found.is_empty(),
        counterexamples: found,
        remark: Some(RemarkCheck { signatures, verified }),
    })
}
