// SPDX-License-Identifier: Apache-2.0

use std::path::Path;

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use sigcolor_core::analysis::{
    class_ratio_product_induced, probe_complete_conjecture, probe_joined_cliques_conjecture, ClassRatioReport,
    Enumeration, EnumerationOptions, EnumerationState, Strategy,
};
use sigcolor_core::color::{
    color_balanced_cycle, color_matching, color_path, color_signed_forest, decide_k_colorable,
    exact_chromatic_index, verify_coloring, IncidenceColoring,
};
use sigcolor_core::graph::{make_complete, make_cycle, make_path, make_tree, SignedGraph, VertexSet};
use sigcolor_core::products::{cartesian, corona, strong, tensor, ProductKind};
use sigcolor_core::theorems::{
    classify_cycle_product, color_cartesian_combined, color_cartesian_path_cycle, color_corona, color_strong_paths,
    color_tensor_tree, Claim, CoronaOptions, DEFAULT_ORACLE_EDGE_GUARD,
};

use crate::input::{emit, parse_list, read_coloring, read_graph, read_text};
use crate::*;

struct Config {
    guard_edges: usize,
    explicit_guard: bool,
}

impl Config {
    fn from_cli(cli: &Cli) -> Result<Config, Failure> {
        if let Some(g) = cli.guard_edges {
            return Ok(Config { guard_edges: g, explicit_guard: true });
        }
        match std::env::var("SG_GUARD_EDGES") {
            Ok(v) => v
                .trim()
                .parse()
                .map(|g| Config { guard_edges: g, explicit_guard: true })
                .map_err(|e| Failure::usage(format!("SG_GUARD_EDGES={v:?}: {e}"))),
            Err(_) => Ok(Config { guard_edges: DEFAULT_GUARD_EDGES, explicit_guard: false }),
        }
    }

    fn check(&self, graph: &SignedGraph) -> Result<(), Failure> {
        if graph.m() > self.guard_edges {
            return Err(Failure::usage(format!(
                "graph has {} edges, above the exact-search guard of {} (set --guard-edges or SG_GUARD_EDGES)",
                graph.m(),
                self.guard_edges
            )));
        }
        Ok(())
    }

    /// A `Δ`-coloring from the exact search, or exit 1 if none exists.
    fn delta_coloring(&self, graph: &SignedGraph, what: &str) -> Result<IncidenceColoring, Failure> {
        self.check(graph)?;
        let d = graph.max_degree();
        decide_k_colorable(graph, d)?.ok_or_else(|| Failure::negative(format!("{what} is not {d}-colorable")))
    }
}

pub fn run(cli: &Cli) -> Result<u8, Failure> {
    let config = Config::from_cli(cli)?;
    match &cli.command {
        Command::Gen(a) => gen(a),
        Command::Product(a) => product(a),
        Command::Color(a) => color(&config, a),
        Command::Chi(a) => chi(&config, a),
        Command::Verify(a) => verify(a),
        Command::ClassRatio(a) => class_ratio(a),
        Command::Switch(a) => switch(a),
        Command::Reproduce(a) => reproduce(a),
    }
}

fn graph_value(graph: &SignedGraph) -> Value {
    serde_json::to_value(graph).expect("graph serializes")
}

fn gen(a: &GenArgs) -> Result<u8, Failure> {
    let n = a.size;
    let graph = match a.family {
        Family::Path => {
            if n == 0 {
                return Err(Failure::usage("a path needs a vertex"));
            }
            make_path(n, &a.signs.resolve(n - 1)?)?
        }
        Family::Cycle => {
            if n < 3 {
                return Err(Failure::usage("a cycle needs at least 3 vertices"));
            }
            make_cycle(n, &a.signs.resolve(n)?)?
        }
        Family::Complete => make_complete(n, &a.signs.resolve(n * n.saturating_sub(1) / 2)?)?,
        Family::Tree => {
            if n == 0 {
                return Err(Failure::usage("a tree needs a vertex"));
            }
            let parents = match &a.parents {
                Some(text) => parse_list(text)?,
                None => {
                    let mut rng = ChaCha8Rng::seed_from_u64(a.tree_seed);
                    (1..n).map(|v| rng.gen_range(0..v)).collect()
                }
            };
            if parents.len() + 1 != n {
                return Err(Failure::usage(format!("{n} vertices need {} parents", n - 1)));
            }
            make_tree(&parents, &a.signs.resolve(n - 1)?)?
        }
    };
    emit(&graph_value(&graph), a.out.as_deref())?;
    Ok(0)
}

fn product(a: &ProductArgs) -> Result<u8, Failure> {
    let (s1, s2) = (read_graph(&a.first)?, read_graph(&a.second)?);
    let p = match a.kind {
        ProductKind::Cartesian => cartesian(&s1, &s2),
        ProductKind::Tensor => tensor(&s1, &s2),
        ProductKind::Strong => strong(&s1, &s2),
        ProductKind::Corona => corona(&s1, &s2, &a.links.resolve(s1.n() * s2.n())?)?,
    };
    let value = if a.graph_only {
        graph_value(&p.graph)
    } else {
        json!({ "graph": p.graph, "index_map": p.index_map_json() })
    };
    emit(&value, a.out.as_deref())?;
    Ok(0)
}

fn need<'a>(path: &'a Option<std::path::PathBuf>, flag: &str, method: Method) -> Result<&'a Path, Failure> {
    path.as_deref()
        .ok_or_else(|| Failure::usage(format!("--method {method:?} needs {flag}").to_lowercase()))
}

fn color(config: &Config, a: &ColorArgs) -> Result<u8, Failure> {
    let single = |a: &ColorArgs| -> Result<SignedGraph, Failure> { read_graph(need(&a.graph, "--graph", a.method)?) };
    let pair = |a: &ColorArgs| -> Result<(SignedGraph, SignedGraph), Failure> {
        Ok((
            read_graph(need(&a.first, "--first", a.method)?)?,
            read_graph(need(&a.second, "--second", a.method)?)?,
        ))
    };
    let (graph, coloring) = match a.method {
        Method::Oracle => {
            let g = single(a)?;
            config.check(&g)?;
            let (_, c) = exact_chromatic_index(&g)?;
            (g, c)
        }
        Method::Path => {
            let g = single(a)?;
            let c = color_path(&g)?;
            (g, c)
        }
        Method::BalancedCycle => {
            let g = single(a)?;
            let c = color_balanced_cycle(&g)?;
            (g, c)
        }
        Method::Forest => {
            let g = single(a)?;
            let c = color_signed_forest(&g)?;
            (g, c)
        }
        Method::Matching => {
            let g = single(a)?;
            let c = color_matching(&g)?;
            (g, c)
        }
        Method::Cartesian => {
            let (s1, s2) = pair(a)?;
            let c1 = config.delta_coloring(&s1, "the first factor")?;
            let c2 = config.delta_coloring(&s2, "the second factor")?;
            (cartesian(&s1, &s2).graph, color_cartesian_combined(&s1, &c1, &s2, &c2)?)
        }
        Method::PathCycle => {
            let (s1, s2) = pair(a)?;
            (cartesian(&s1, &s2).graph, color_cartesian_path_cycle(&s1, &s2)?)
        }
        Method::CycleProduct => {
            let (s1, s2) = pair(a)?;
            let outcome = classify_cycle_product(&s1, &s2)?;
            match (outcome.claim, outcome.coloring) {
                (Claim::Delta, Some(c)) => (cartesian(&s1, &s2).graph, c),
                _ => {
                    emit(&json!({ "claim": outcome.claim, "certificate": outcome.certificate }), a.out.as_deref())?;
                    return Ok(1);
                }
            }
        }
        Method::Tensor => {
            let (s1, t) = pair(a)?;
            let c1 = config.delta_coloring(&s1, "the first factor")?;
            (tensor(&s1, &t).graph, color_tensor_tree(&s1, &c1, &t)?)
        }
        Method::Strong => {
            let (s1, s2) = pair(a)?;
            (strong(&s1, &s2).graph, color_strong_paths(&s1, &s2)?)
        }
        Method::Corona => {
            let (s1, s2) = pair(a)?;
            let links = a.links.resolve(s1.n() * s2.n())?;
            let guard = if config.explicit_guard { config.guard_edges } else { DEFAULT_ORACLE_EDGE_GUARD };
            let c = color_corona(&s1, &s2, &links, &CoronaOptions { oracle_edge_guard: guard })?;
            (corona(&s1, &s2, &links)?.graph, c)
        }
    };
    emit(&coloring.to_json_value(&graph), a.out.as_deref())?;
    Ok(0)
}

fn chi(config: &Config, a: &ChiArgs) -> Result<u8, Failure> {
    let g = read_graph(&a.graph)?;
    if g.m() == 0 {
        return Err(Failure::usage("graph has no edges; the chromatic index is undefined"));
    }
    config.check(&g)?;
    let (chi, witness) = exact_chromatic_index(&g)?;
    let value = json!({ "delta": g.max_degree(), "chi": chi, "witness": witness.to_json_value(&g) });
    emit(&value, a.out.as_deref())?;
    Ok(0)
}

fn verify(a: &VerifyArgs) -> Result<u8, Failure> {
    let g = read_graph(&a.graph)?;
    let c = read_coloring(&g, &a.coloring)?;
    let report = verify_coloring(&g, &c)?;
    let violations: Vec<Value> = report
        .violations
        .iter()
        .map(|v| {
            let mut entry = serde_json::to_value(v).expect("violation serializes");
            entry["message"] = json!(v.to_string());
            entry
        })
        .collect();
    emit(&json!({ "valid": report.is_valid(), "k": c.k(), "violations": violations }), None)?;
    Ok(if report.is_valid() { 0 } else { 1 })
}

fn report_value(report: &ClassRatioReport) -> Value {
    serde_json::to_value(report).expect("report serializes")
}

fn parse_cycles(text: &str) -> Result<(usize, usize), Failure> {
    match parse_list(text)?[..] {
        [r, s] => Ok((r, s)),
        _ => Err(Failure::usage("--cycles takes two lengths R,S")),
    }
}

fn class_ratio(a: &ClassRatioArgs) -> Result<u8, Failure> {
    if a.strategy == Strategy::ProductInduced {
        let text = a.cycles.as_deref().ok_or_else(|| Failure::usage("product-induced needs --cycles R,S"))?;
        let (r, s) = parse_cycles(text)?;
        let report = class_ratio_product_induced(r, s, ProductKind::Cartesian)?;
        emit(&report_value(&report), a.out.as_deref())?;
        return Ok(0);
    }
    let graph = read_graph(a.graph.as_deref().ok_or_else(|| Failure::usage("--graph is required"))?)?;
    let opts = EnumerationOptions {
        chunk: a.chunk,
        jobs: a.jobs,
        parity_pruning: !a.no_parity,
        full_edge_cap: a.edge_cap,
        coset_exponent_cap: a.coset_cap,
    };
    let mut run = match &a.resume {
        Some(path) => {
            let state: EnumerationState = serde_json::from_str(&read_text(path)?)
                .map_err(|e| Failure::usage(format!("{}: {e}", path.display())))?;
            if state.strategy != a.strategy {
                return Err(Failure::usage(format!("state was saved by the {} strategy", state.strategy)));
            }
            Enumeration::resume(&graph, state, &opts)?
        }
        None if a.strategy == Strategy::Full => Enumeration::full(&graph, &opts)?,
        None => Enumeration::cosets(&graph, &opts)?,
    };
    run.advance(a.max_chunks)?;
    match run.report() {
        Some(report) => emit(&report_value(&report), a.out.as_deref())?,
        None => {
            let state = serde_json::to_value(run.state()).expect("state serializes");
            if let Some(path) = &a.state_out {
                emit(&state, Some(path))?;
            }
            let s = run.state();
            emit(
                &json!({
                    "partial": true,
                    "done_chunks": s.next_chunk,
                    "chunks": s.chunks,
                    "delta_so_far": s.delta,
                    "state": state,
                }),
                a.out.as_deref(),
            )?;
        }
    }
    Ok(0)
}

fn switch(a: &SwitchArgs) -> Result<u8, Failure> {
    let g = read_graph(&a.graph)?;
    let set = VertexSet::from_vertices(g.n(), parse_list(&a.set)?)?;
    let h = g.switch(&set)?;
    if let Some(path) = &a.coloring {
        let c = read_coloring(&g, path)?;
        let moved = c.negate_at(&g, &set);
        emit(&moved.to_json_value(&h), a.coloring_out.as_deref())?;
    }
    if a.coloring.is_none() || a.coloring_out.is_some() || a.out.is_some() {
        emit(&graph_value(&h), a.out.as_deref())?;
    }
    Ok(0)
}

fn unsigned_cycle(r: usize) -> SignedGraph {
    make_cycle(r, &vec![sigcolor_core::graph::Sign::Plus; r]).expect("r >= 3")
}

fn reproduce(a: &ReproduceArgs) -> Result<u8, Failure> {
    let mut rows = Vec::new();
    let mut all_pass = true;
    match a.table {
        Table::CycleRatios => {
            let opts = EnumerationOptions { jobs: a.jobs, coset_exponent_cap: a.coset_cap, ..Default::default() };
            for (r, s, want) in [(4, 4, Ratio::from_integer(1u64)), (4, 3, Ratio::new(1, 2)), (3, 3, Ratio::new(1, 4))] {
                let induced = class_ratio_product_induced(r, s, ProductKind::Cartesian)?;
                let graph = cartesian(&unsigned_cycle(r), &unsigned_cycle(s)).graph;
                let cosets = Enumeration::cosets(&graph, &opts).and_then(|mut run| {
                    run.advance(None)?;
                    Ok(run.report().expect("finished"))
                });
                let mut row = json!({
                    "instance": format!("C{r}xC{s}"),
                    "expected": want.to_string(),
                    "product_induced": induced.ratio.to_string(),
                    "product_induced_pass": induced.ratio == want,
                });
                let status = match cosets {
                    Ok(c) => {
                        row["cosets"] = json!(c.ratio.to_string());
                        row["cosets_total"] = json!(c.total);
                        row["cosets_pass"] = json!(c.ratio == want);
                        if c.ratio == want && induced.ratio == want { "pass" } else { "fail" }
                    }
                    Err(sigcolor_core::Error::GuardExceeded { .. }) => "skipped",
                    Err(e) => return Err(e.into()),
                };
                all_pass &= status == "pass";
                row["status"] = json!(status);
                rows.push(row);
            }
        }
        Table::Conjectures => {
            let mut push = |name: String, result: sigcolor_core::Result<sigcolor_core::analysis::ProbeReport>| {
                let row = match result {
                    Ok(r) => json!({
                        "instance": name,
                        "representatives": r.representatives,
                        "counterexamples": r.counterexamples.len(),
                        "first_counterexample": r.counterexamples.first(),
                        "remark": r.remark,
                        "status": if r.holds { "pass" } else { "fail" },
                    }),
                    Err(_) => json!({ "instance": name, "status": "skipped" }),
                };
                all_pass &= row["status"] == "pass";
                rows.push(row);
            };
            for n in 3..=5 {
                push(format!("K{n}"), probe_complete_conjecture(n, a.complete_guard));
            }
            for n in 2..=3 {
                push(format!("joined K{n}"), probe_joined_cliques_conjecture(n, a.joined_guard));
            }
        }
    }
    for row in &rows {
        eprintln!("{}: {}", row["instance"].as_str().unwrap_or("?"), row["status"].as_str().unwrap_or("?"));
    }
    let table = match a.table {
        Table::CycleRatios => "cycle-ratios",
        Table::Conjectures => "conjectures",
    };
    emit(&json!({ "table": table, "rows": rows, "all_pass": all_pass }), a.out.as_deref())?;
    Ok(if all_pass { 0 } else { 1 })
}
