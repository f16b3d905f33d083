// SPDX-License-Identifier: Apache-2.0

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::color::decide_k_colorable;
use crate::error::{Error, Result};
use crate::graph::{make_cycle, Sign, SignedGraph};
use crate::products::{cartesian, ProductKind};
use crate::theorems::{classify_cycle_product, parity_lower_bound, Claim};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Strategy {
    Full,
    Cosets,
    ProductInduced,
}

impl FromStr for Strategy {
    type Err = Error;

    fn from_str(s: &str) -> Result<Strategy> {
        match s {
            "full" => Ok(Strategy::Full),
            "cosets" => Ok(Strategy::Cosets),
            "product-induced" => Ok(Strategy::ProductInduced),
            other => Err(Error::precondition(format!("unknown strategy {other:?}"))),
        }
    }
}

impl fmt::Display for Strategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Strategy::Full => "full",
            Strategy::Cosets => "cosets",
            Strategy::ProductInduced => "product-induced",
        })
    }
}

/// Signatures of one balance pattern of the factors and how many of them
/// are `Δ`-colorable.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternCount {
    pub pattern: String,
    pub signatures: u64,
    pub delta: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassRatioReport {
    pub total: u64,
    pub delta: u64,
    #[serde(with = "ratio_string")]
    pub ratio: Ratio<u64>,
    pub strategy: Strategy,
    /// Signatures decided by the parity certificate instead of the search.
    #[serde(default)]
    pub parity_pruned: u64,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub breakdown: Vec<PatternCount>,
}

impl ClassRatioReport {
    fn new(strategy: Strategy, total: u64, delta: u64, parity_pruned: u64, breakdown: Vec<PatternCount>) -> Self {
        ClassRatioReport {
            total,
            delta,
            ratio: Ratio::new(delta, total),
            strategy,
            parity_pruned,
            breakdown,
        }
    }
}

mod ratio_string {
    use num_rational::Ratio;
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Ratio<u64>, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(r)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Ratio<u64>, D::Error> {
        let text = String::deserialize(d)?;
        text.parse::<Ratio<u64>>().map_err(D::Error::custom)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationOptions {
    /// Signatures per work unit.
    pub chunk: u64,
    /// Worker threads; `None` uses the rayon default.
    pub jobs: Option<usize>,
    /// Skip the search on regular graphs of even degree with an odd number
    /// of negative edges.
    pub parity_pruning: bool,
    /// Largest `m` for full enumeration.
    pub full_edge_cap: usize,
    /// Largest `m - n + c` for coset enumeration.
    pub coset_exponent_cap: usize,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        EnumerationOptions {
            chunk: 4096,
            jobs: None,
            parity_pruning: true,
            full_edge_cap: 20,
            coset_exponent_cap: 17,
        }
    }
}

/// Progress of an enumeration, serializable so a run can be resumed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationState {
    pub strategy: Strategy,
    /// The graph as `[u, v]` pairs, to reject a state from another graph.
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
    pub chunk: u64,
    pub next_chunk: u64,
    pub chunks: u64,
    pub total: u64,
    pub delta: u64,
    pub parity_pruned: u64,
}

/// A resumable sweep over signatures `σ` that are +1 outside `free` and
/// range over all of `{±1}^free`.
#[derive(Debug)]
pub struct Enumeration {
    graph: SignedGraph,
    free: Vec<usize>,
    delta_degree: usize,
    options: EnumerationOptions,
    state: EnumerationState,
}

fn shape(graph: &SignedGraph) -> Vec<[usize; 2]> {
    graph.edges().iter().map(|e| [e.u, e.v]).collect()
}

impl Enumeration {
    /// All `2^m` signatures.
    pub fn full(graph: &SignedGraph, options: &EnumerationOptions) -> Result<Enumeration> {
        if graph.m() > options.full_edge_cap {
            return Err(Error::GuardExceeded {
                what: "edge count for full enumeration",
                limit: options.full_edge_cap,
                actual: graph.m(),
            });
        }
        Enumeration::with_free(graph, (0..graph.m()).collect(), Strategy::Full, options)
    }

    /// One signature per switching class: +1 on a spanning forest, free on
    /// the remaining `m - n + c` edges.
    pub fn cosets(graph: &SignedGraph, options: &EnumerationOptions) -> Result<Enumeration> {
        let forest = graph.spanning_forest();
        let free: Vec<usize> = (0..graph.m()).filter(|&e| !forest[e]).collect();
        if free.len() > options.coset_exponent_cap {
            return Err(Error::GuardExceeded {
                what: "cycle-space dimension for coset enumeration",
                limit: options.coset_exponent_cap,
                actual: free.len(),
            });
        }
        Enumeration::with_free(graph, free, Strategy::Cosets, options)
    }

    /// Continues from a saved state; `graph` must be the graph it was started on.
    pub fn resume(graph: &SignedGraph, state: EnumerationState, options: &EnumerationOptions) -> Result<Enumeration> {
        if state.n != graph.n() || state.edges != shape(graph) {
            return Err(Error::ShapeMismatch("state belongs to a different graph".into()));
        }
        let mut opts = *options;
        opts.chunk = state.chunk;
        let mut run = match state.strategy {
            Strategy::Full => Enumeration::full(graph, &opts)?,
            Strategy::Cosets => Enumeration::cosets(graph, &opts)?,
            Strategy::ProductInduced => {
                return Err(Error::Unsupported("product-induced ratios are not chunked".into()))
            }
        };
        if state.chunks != run.state.chunks || state.next_chunk > state.chunks {
            return Err(Error::ShapeMismatch("state chunk layout does not match".into()));
        }
        run.state = state;
        Ok(run)
    }

    fn with_free(
        graph: &SignedGraph,
        free: Vec<usize>,
        strategy: Strategy,
        options: &EnumerationOptions,
    ) -> Result<Enumeration> {
        if graph.m() == 0 {
            return Err(Error::Edgeless);
        }
        if graph.m() > 64 {
            return Err(Error::Unsupported("signature masks hold at most 64 edges".into()));
        }
        if options.chunk == 0 {
            return Err(Error::precondition("chunk size must be positive"));
        }
        let total = 1u64 << free.len();
        let chunks = total.div_ceil(options.chunk);
        let unsigned = SignedGraph::new(graph.n(), graph.edges().iter().map(|e| (e.u, e.v, Sign::Plus)))?;
        Ok(Enumeration {
            delta_degree: graph.max_degree(),
            state: EnumerationState {
                strategy,
                n: graph.n(),
                edges: shape(graph),
                chunk: options.chunk,
                next_chunk: 0,
                chunks,
                total,
                delta: 0,
                parity_pruned: 0,
            },
            graph: unsigned,
            free,
            options: *options,
        })
    }

    pub fn state(&self) -> &EnumerationState {
        &self.state
    }

    pub fn is_done(&self) -> bool {
        self.state.next_chunk >= self.state.chunks
    }

    /// The signature with index `index`: bit `b` of the index negates `free[b]`.
    pub fn signature(&self, index: u64) -> SignedGraph {
        let mut mask = 0u64;
        for (b, &e) in self.free.iter().enumerate() {
            if index >> b & 1 == 1 {
                mask |= 1 << e;
            }
        }
        self.graph.with_sign_mask(mask)
    }

    /// `(Δ-colorable, decided by parity)` for one signature.
    fn decide(&self, index: u64) -> Result<(bool, bool)> {
        let g = self.signature(index);
        if self.options.parity_pruning && parity_lower_bound(&g).is_some() {
            return Ok((false, true));
        }
        Ok((decide_k_colorable(&g, self.delta_degree)?.is_some(), false))
    }

    fn run_chunk(&self, chunk: u64) -> Result<(u64, u64)> {
        let start = chunk * self.state.chunk;
        let end = (start + self.state.chunk).min(self.state.total);
        let mut delta = 0;
        let mut pruned = 0;
        for index in start..end {
            let (ok, by_parity) = self.decide(index)?;
            delta += ok as u64;
            pruned += by_parity as u64;
        }
        Ok((delta, pruned))
    }

    /// Processes up to `max_chunks` further chunks (all if `None`).
    pub fn advance(&mut self, max_chunks: Option<u64>) -> Result<()> {
        let end = match max_chunks {
            Some(k) => (self.state.next_chunk + k).min(self.state.chunks),
            None => self.state.chunks,
        };
        let range = self.state.next_chunk..end;
        let work = || -> Result<(u64, u64)> {
            range
                .clone()
                .into_par_iter()
                .map(|c| self.run_chunk(c))
                .try_reduce(|| (0, 0), |a, b| Ok((a.0 + b.0, a.1 + b.1)))
        };
        let (delta, pruned) = match self.options.jobs {
            Some(1) => range.clone().try_fold((0, 0), |acc, c| {
                self.run_chunk(c).map(|r| (acc.0 + r.0, acc.1 + r.1))
            })?,
            Some(j) => rayon::ThreadPoolBuilder::new()
                .num_threads(j)
                .build()
                .map_err(|e| Error::Unsupported(format!("thread pool: {e}")))?
                .install(work)?,
            None => work()?,
        };
        self.state.delta += delta;
        self.state.parity_pruned += pruned;
        self.state.next_chunk = end;
        Ok(())
    }

    /// The report once every chunk is done.
    pub fn report(&self) -> Option<ClassRatioReport> {
        self.is_done().then(|| {
            ClassRatioReport::new(
                self.state.strategy,
                self.state.total,
                self.state.delta,
                self.state.parity_pruned,
                Vec::new(),
            )
        })
    }
}

pub fn class_ratio_full(graph: &SignedGraph, options: &EnumerationOptions) -> Result<ClassRatioReport> {
    let mut run = Enumeration::full(graph, options)?;
    run.advance(None)?;
    Ok(run.report().expect("finished"))
}

pub fn class_ratio_cosets(graph: &SignedGraph, options: &EnumerationOptions) -> Result<ClassRatioReport> {
    let mut run = Enumeration::cosets(graph, options)?;
    run.advance(None)?;
    Ok(run.report().expect("finished"))
}

/// Ratio over the signatures of `C_r □ C_s` induced by signing the factors.
/// A cycle signature is balanced or not, half of the `2^r` each; one
/// representative per pair of patterns is classified and weighted.
pub fn class_ratio_product_induced(r: usize, s: usize, kind: ProductKind) -> Result<ClassRatioReport> {
    if kind != ProductKind::Cartesian {
        return Err(Error::Unsupported(format!("product-induced ratios for {kind:?} products")));
    }
    if r < 3 || s < 3 || r + s > 62 {
        return Err(Error::precondition("cycle lengths must be at least 3"));
    }
    let cycle = |len: usize, balanced: bool| {
        let mut signs = vec![Sign::Plus; len];
        if !balanced {
            signs[0] = Sign::Minus;
        }
        make_cycle(len, &signs)
    };
    let weight = 1u64 << (r - 1 + s - 1);
    let mut breakdown = Vec::new();
    let mut delta = 0;
    for b1 in [true, false] {
        for b2 in [true, false] {
            let outcome = classify_cycle_product(&cycle(r, b1)?, &cycle(s, b2)?)?;
            let good = outcome.claim == Claim::Delta;
            let name = |b: bool| if b { "balanced" } else { "unbalanced" };
            breakdown.push(PatternCount {
                pattern: format!("{} x {}", name(b1), name(b2)),
                signatures: weight,
                delta: if good { weight } else { 0 },
            });
            delta += if good { weight } else { 0 };
        }
    }
    Ok(ClassRatioReport::new(Strategy::ProductInduced, 4 * weight, delta, 0, breakdown))
}

/// Every product-induced signature of `C_r □ C_s`, as the product graphs.
pub fn product_induced_signatures(r: usize, s: usize) -> Result<Vec<SignedGraph>> {
    if r + s > 20 {
        return Err(Error::GuardExceeded { what: "r + s for explicit product signatures", limit: 20, actual: r + s });
    }
    let signs = |mask: u64, len: usize| -> Vec<Sign> {
        (0..len).map(|b| if mask >> b & 1 == 1 { Sign::Minus } else { Sign::Plus }).collect()
    };
    let mut out = Vec::with_capacity(1 << (r + s));
    for m1 in 0..1u64 << r {
        for m2 in 0..1u64 << s {
            out.push(cartesian(&make_cycle(r, &signs(m1, r))?, &make_cycle(s, &signs(m2, s))?).graph);
        }
    }
    Ok(out)
}
