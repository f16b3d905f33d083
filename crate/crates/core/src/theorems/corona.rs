// SPDX-License-Identifier: Apache-2.0

//! `Δ`-colorings of corona products.
//!
//! Base graph and the stars `S_{2,i} + v_i` are first colored with one color
//! more than their maximum degree. Property (I) then bounds the unpaired
//! colors at every `v_i`, and each star is recolored by moving its color
//! classes onto pairs `±t` of the full palette. Since the only vertex a star
//! shares with the rest of the graph is `v_i`, the steps are independent.
//!
//! When `v_i` has fewer base edges than `Δ(S1)`, its color set is padded with
//! unused colors of the base palette first, so the count
//! `|colors at v_i| + n(S2) = Δ` used by the case analysis holds exactly.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::color::{check_partial, color_paths_and_cycles, decide_k_colorable, ensure_valid, ColorSet, IncidenceColoring};
use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph};
use crate::products::{corona, EdgeOrigin};

/// Largest number of edges handed to the exact search for a base coloring.
pub const DEFAULT_ORACLE_EDGE_GUARD: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CoronaOptions {
    pub oracle_edge_guard: usize,
}

impl Default for CoronaOptions {
    fn default() -> Self {
        CoronaOptions { oracle_edge_guard: DEFAULT_ORACLE_EDGE_GUARD }
    }
}

/// Which recoloring was used at an attachment vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CoronaCase {
    /// 0 in the palette, 0 at `v_i` from the base, one unpaired color on each side.
    OneAPrime,
    /// 0 in the palette, only full pairs from the base, one unpaired color in the star.
    OneADoublePrime,
    /// 0 in the palette and at `v_i` in the star, one unpaired color on each side.
    OneBPrime,
    /// 0 in the palette, one unpaired base color, only full pairs in the star.
    OneBDoublePrime,
    /// 0 not in the palette, two unpaired colors on each side.
    TwoRevertBoth,
    /// Two unpaired base colors, the star has only full pairs.
    TwoSplitPair,
    /// One unpaired color on each side.
    TwoRevertOne,
    /// No unpaired base color, two in the star; one of them is a matching.
    TwoMatchingPlusEdge,
    /// 0 not in the palette, nothing unpaired.
    TwoPairsOnly,
}

/// What happened at one attachment vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoronaStep {
    pub vertex: usize,
    pub case: CoronaCase,
    /// Colors of the base edges at the vertex.
    pub base_colors: Vec<i32>,
    /// `base_colors` plus padding; always `Δ(S1)` colors.
    pub padded: Vec<i32>,
    /// Colors at the vertex in the star coloring before recoloring.
    pub star_colors: Vec<i32>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoronaTrace {
    pub coloring: IncidenceColoring,
    pub steps: Vec<CoronaStep>,
}

/// A `Δ`-coloring of `S1 ⊙ S2` with the given link signs, for `Δ(S1) ≥ 2`.
pub fn color_corona(
    s1: &SignedGraph,
    s2: &SignedGraph,
    link_signs: &[Sign],
    options: &CoronaOptions,
) -> Result<IncidenceColoring> {
    Ok(color_corona_traced(s1, s2, link_signs, options)?.coloring)
}

fn base_coloring(graph: &SignedGraph, k: usize, guard: usize) -> Result<IncidenceColoring> {
    if graph.m() > guard {
        return Err(Error::GuardExceeded {
            what: "edges given to the exact search",
            limit: guard,
            actual: graph.m(),
        });
    }
    decide_k_colorable(graph, k)?.ok_or(Error::BoundViolated(k))
}

/// Replaces 0 by `±half`: `+half` at the smaller endpoint.
fn remap_zero(graph: &SignedGraph, c: &IncidenceColoring, half: i32) -> IncidenceColoring {
    let values = graph
        .edges()
        .iter()
        .zip(c.values())
        .map(|(e, &pair)| if pair == [0, 0] { [half, -e.sign.value() * half] } else { pair })
        .collect();
    IncidenceColoring::new(c.k(), values)
}

pub fn color_corona_traced(
    s1: &SignedGraph,
    s2: &SignedGraph,
    link_signs: &[Sign],
    options: &CoronaOptions,
) -> Result<CoronaTrace> {
    let d1 = s1.max_degree();
    if d1 < 2 {
        return Err(Error::precondition("the base graph needs maximum degree at least 2"));
    }
    let (n1, n2) = (s1.n(), s2.n());
    if n2 == 0 {
        return Err(Error::precondition("the attached graph needs a vertex"));
    }
    let product = corona(s1, s2, link_signs)?;
    let g = &product.graph;
    let delta = d1 + n2;
    if g.max_degree() != delta {
        return Err(Error::construction("maximum degree is not Δ(S1) + n(S2)"));
    }
    let half = (delta / 2) as i32;
    let guard = options.oracle_edge_guard;

    let base_remap = delta % 2 == 0 && (d1 + 1) % 2 == 1;
    let mut c0 = base_coloring(s1, d1 + 1, guard)?;
    if base_remap {
        c0 = remap_zero(s1, &c0, half);
    }
    let mut values: Vec<Option<[i32; 2]>> = vec![None; g.m()];
    for (e, origin) in product.origins.iter().enumerate() {
        if let EdgeOrigin::Base { edge } = *origin {
            values[e] = Some(c0.values()[edge]);
        }
    }
    check_partial(g, delta, &values).into_result()?;

    let slots = ColorSet::new(d1 + 1)?.search_order();
    let slot_color = |s: i32| if s == 0 && base_remap { half } else { s };
    let color_slot = |c: i32| if base_remap && c.abs() == half { 0 } else { c };

    let star_remap = delta % 2 == 0 && (n2 + 1) % 2 == 1;
    let mut steps = Vec::with_capacity(n1);
    for i in 0..n1 {
        let base_colors: Vec<i32> = s1.neighbors(i).iter().map(|&(_, e)| c0.at(s1, e, i)).collect();
        let used: BTreeSet<i32> = base_colors.iter().map(|&c| color_slot(c)).collect();
        let mut padded = base_colors.clone();
        padded.extend(
            slots
                .iter()
                .filter(|s| !used.contains(s))
                .take(d1 - base_colors.len())
                .map(|&s| slot_color(s)),
        );

        let offset = n1 + i * n2;
        let global = |x: usize| if x == 0 { i } else { offset + x - 1 };
        let star = SignedGraph::new(
            n2 + 1,
            s2.edges()
                .iter()
                .map(|e| (e.u + 1, e.v + 1, e.sign))
                .chain((0..n2).map(|j| (0, j + 1, link_signs[i * n2 + j]))),
        )?;
        let mut local = base_coloring(&star, n2 + 1, guard)?;
        if star_remap {
            local = remap_zero(&star, &local, half);
        }
        let star_colors: Vec<i32> = star.neighbors(0).iter().map(|&(_, e)| local.at(&star, e, 0)).collect();
        if padded.len() + star_colors.len() != delta {
            return Err(Error::construction(format!(
                "degree count at vertex {i}: {} + {} != {delta}",
                padded.len(),
                star_colors.len()
            )));
        }
        let (case, recolored) = recolor_star(&star, &local, &padded, delta)?;
        for (le, e) in star.edges().iter().enumerate() {
            let ge = g
                .find_edge(global(e.u), global(e.v))
                .ok_or_else(|| Error::construction("star edge missing from the product"))?;
            values[ge] = Some(recolored[le]);
        }
        check_partial(g, delta, &values).into_result()?;
        steps.push(CoronaStep { vertex: i, case, base_colors, padded, star_colors });
    }

    let coloring = IncidenceColoring::new(
        delta,
        values.into_iter().map(|v| v.expect("every edge colored")).collect(),
    );
    ensure_valid(g, &coloring, delta)?;
    Ok(CoronaTrace { coloring, steps })
}

struct Class {
    magnitude: i32,
    edges: Vec<usize>,
    /// Colors of this class at vertex 0.
    at_v: Vec<i32>,
}

/// Sends every color `±m` of `pair` to `±t`, times `flip`.
fn linear(pair: [i32; 2], t: i32, flip: i32) -> [i32; 2] {
    [pair[0].signum() * t * flip, pair[1].signum() * t * flip]
}

/// The flip taking color `from` to `to` under [`linear`].
fn flip_for(from: i32, to: i32) -> i32 {
    from.signum() * to.signum()
}

/// Moves the classes of `local` (a coloring of the star on vertex 0 = `v_i`)
/// onto pairs of `M_delta` so that vertex 0 avoids `padded`.
fn recolor_star(
    star: &SignedGraph,
    local: &IncidenceColoring,
    padded: &[i32],
    delta: usize,
) -> Result<(CoronaCase, Vec<[i32; 2]>)> {
    let top = (delta / 2) as i32;
    let has_zero = delta % 2 == 1;
    let in_u = |c: i32| padded.contains(&c);

    let mut classes: Vec<Class> = Vec::new();
    for (e, pair) in local.values().iter().enumerate() {
        let m = pair[0].abs();
        let idx = match classes.iter().position(|c| c.magnitude == m) {
            Some(idx) => idx,
            None => {
                classes.push(Class { magnitude: m, edges: Vec::new(), at_v: Vec::new() });
                classes.len() - 1
            }
        };
        classes[idx].edges.push(e);
        if star.edge(e).u == 0 {
            classes[idx].at_v.push(pair[0]);
        }
    }

    let u_unpaired: Vec<i32> = padded.iter().copied().filter(|&c| c != 0 && !in_u(-c)).collect();
    let full_u: Vec<i32> = (1..=top).filter(|&t| in_u(t) && in_u(-t)).collect();
    let w_unpaired: Vec<usize> = (0..classes.len())
        .filter(|&c| classes[c].magnitude != 0 && classes[c].at_v.len() == 1)
        .collect();

    let mut out: Vec<Option<[i32; 2]>> = vec![None; star.m()];
    let mut owned: BTreeSet<i32> = BTreeSet::new();
    let mut done = vec![false; classes.len()];
    let vals = local.values();
    let at_v_edge = |class: &Class, color: i32| -> usize {
        *class
            .edges
            .iter()
            .find(|&&e| star.edge(e).u == 0 && vals[e][0] == color)
            .expect("class edge at vertex 0")
    };

    // Unpaired star color l' goes to -l for an unpaired base color l.
    let revert = |class: &Class, l: i32, out: &mut Vec<Option<[i32; 2]>>| {
        let f = flip_for(class.at_v[0], -l);
        for &e in &class.edges {
            out[e] = Some(linear(vals[e], l.abs(), f));
        }
    };

    let mut matching_plus_edge: Option<(usize, usize)> = None;
    let case = match (has_zero, u_unpaired.len(), w_unpaired.len()) {
        (true, 1, 1) | (false, 1, 1) => {
            let (c, l) = (w_unpaired[0], u_unpaired[0]);
            revert(&classes[c], l, &mut out);
            owned.insert(l.abs());
            done[c] = true;
            match (has_zero, in_u(0)) {
                (true, true) => CoronaCase::OneAPrime,
                (true, false) => CoronaCase::OneBPrime,
                _ => CoronaCase::TwoRevertOne,
            }
        }
        (false, 2, 2) => {
            for (&c, &l) in w_unpaired.iter().zip(&u_unpaired) {
                revert(&classes[c], l, &mut out);
                owned.insert(l.abs());
                done[c] = true;
            }
            CoronaCase::TwoRevertBoth
        }
        (true, 0, 1) => {
            // Off-vertex edges of the l' class go to a full base pair, the
            // edge at v_i goes to 0.
            let c = w_unpaired[0];
            let k1 = *full_u.first().ok_or_else(|| Error::construction("no full base pair"))?;
            let ev = at_v_edge(&classes[c], classes[c].at_v[0]);
            for &e in &classes[c].edges {
                out[e] = Some(if e == ev { [0, 0] } else { linear(vals[e], k1, 1) });
            }
            owned.extend([0, k1]);
            done[c] = true;
            CoronaCase::OneADoublePrime
        }
        (true, 1, 0) => {
            let l = u_unpaired[0];
            let k1 = *full_u.first().ok_or_else(|| Error::construction("no full base pair"))?;
            let c = (0..classes.len())
                .find(|&c| classes[c].magnitude != 0 && classes[c].at_v.len() == 2)
                .ok_or_else(|| Error::construction("no full star pair"))?;
            let m = classes[c].magnitude;
            let (ea, eb) = (at_v_edge(&classes[c], m), at_v_edge(&classes[c], -m));
            let fb = flip_for(-m, -l);
            for &e in &classes[c].edges {
                out[e] = Some(if e == ea {
                    [0, 0]
                } else if e == eb {
                    linear(vals[e], l.abs(), fb)
                } else {
                    linear(vals[e], k1, 1)
                });
            }
            let y = star.edge(eb).v;
            let at_y = out[eb].expect("set above")[1];
            if let Some(z) = classes.iter().position(|cl| cl.magnitude == 0) {
                if !classes[z].at_v.is_empty() {
                    return Err(Error::construction("0 at the attachment vertex"));
                }
                for &e in &classes[z].edges {
                    let edge = star.edge(e);
                    let sigma = edge.sign.value();
                    let pick = [l.abs(), -l.abs()]
                        .into_iter()
                        .find(|&x| !(edge.u == y && x == at_y) && !(edge.v == y && -sigma * x == at_y))
                        .expect("two orientations, one conflict at most");
                    out[e] = Some([pick, -sigma * pick]);
                }
                done[z] = true;
            }
            owned.extend([0, k1, l.abs()]);
            done[c] = true;
            CoronaCase::OneBDoublePrime
        }
        (false, 2, 0) => {
            let (l1, l2) = (u_unpaired[0], u_unpaired[1]);
            let c = (0..classes.len())
                .find(|&c| classes[c].at_v.len() == 2)
                .ok_or_else(|| Error::construction("no full star pair"))?;
            let m = classes[c].magnitude;
            let ea = at_v_edge(&classes[c], m);
            let fa = flip_for(m, -l1);
            let fb = flip_for(-m, -l2);
            for &e in &classes[c].edges {
                out[e] = Some(if e == ea {
                    linear(vals[e], l1.abs(), fa)
                } else {
                    linear(vals[e], l2.abs(), fb)
                });
            }
            // The class missing at v_i is the matching that replaced 0; it
            // shares the first pair, flipped where it meets the end of `ea`.
            for z in 0..classes.len() {
                if !classes[z].at_v.is_empty() {
                    continue;
                }
                if star.edge_subgraph(&classes[z].edges).max_degree() > 1 {
                    return Err(Error::construction("class missing at the attachment vertex is not a matching"));
                }
                for &e in &classes[z].edges {
                    let edge = star.edge(e);
                    let sigma = edge.sign.value();
                    let clash = |vertex: usize, color: i32| {
                        star.neighbors(vertex).iter().any(|&(_, f)| {
                            f != e && out[f].is_some_and(|p| p[(star.edge(f).v == vertex) as usize] == color)
                        })
                    };
                    let pick = [l1.abs(), -l1.abs()]
                        .into_iter()
                        .find(|&x| !clash(edge.u, x) && !clash(edge.v, -sigma * x))
                        .ok_or_else(|| Error::construction("no orientation for the missing class"))?;
                    out[e] = Some([pick, -sigma * pick]);
                }
                done[z] = true;
            }
            owned.extend([l1.abs(), l2.abs()]);
            done[c] = true;
            CoronaCase::TwoSplitPair
        }
        (false, 0, 2) => {
            let is_matching = |c: usize| {
                let sub = star.edge_subgraph(&classes[c].edges);
                sub.max_degree() <= 1
            };
            let (a, b) = (w_unpaired[0], w_unpaired[1]);
            let (l1, l2) = if is_matching(b) && (classes[b].magnitude == top || !is_matching(a)) {
                (a, b)
            } else if is_matching(a) {
                (b, a)
            } else {
                return Err(Error::construction("neither unpaired star class is a matching"));
            };
            let k1 = *full_u.first().ok_or_else(|| Error::construction("no full base pair"))?;
            let ev = at_v_edge(&classes[l1], classes[l1].at_v[0]);
            for &e in &classes[l1].edges {
                if e != ev {
                    out[e] = Some(linear(vals[e], k1, 1));
                }
            }
            owned.insert(k1);
            done[l1] = true;
            done[l2] = true;
            matching_plus_edge = Some((l2, ev));
            CoronaCase::TwoMatchingPlusEdge
        }
        (false, 0, 0) => CoronaCase::TwoPairsOnly,
        (z, u, w) => {
            return Err(Error::construction(format!(
                "property (I) fails: {u} unpaired base and {w} unpaired star colors (0 in palette: {z})"
            )))
        }
    };

    let is_free = |t: i32, owned: &BTreeSet<i32>| !owned.contains(&t) && !in_u(t) && !in_u(-t);
    for c in 0..classes.len() {
        if done[c] {
            continue;
        }
        let class = &classes[c];
        if class.magnitude == 0 && !class.at_v.is_empty() {
            if !has_zero || in_u(0) || owned.contains(&0) {
                return Err(Error::construction("0 at the attachment vertex has nowhere to go"));
            }
            for &e in &class.edges {
                out[e] = Some([0, 0]);
            }
            owned.insert(0);
            continue;
        }
        let target = if class.at_v.len() == 2 {
            (1..=top).find(|&t| is_free(t, &owned))
        } else if class.at_v.is_empty() {
            full_u
                .iter()
                .copied()
                .find(|t| !owned.contains(t))
                .or_else(|| (1..=top).find(|&t| is_free(t, &owned)))
        } else {
            return Err(Error::construction("unpaired star color left over"));
        };
        let t = target.ok_or_else(|| Error::construction("ran out of color pairs"))?;
        for &e in &class.edges {
            out[e] = Some(if class.magnitude == 0 {
                [t, -star.edge(e).sign.value() * t]
            } else {
                linear(vals[e], t, 1)
            });
        }
        owned.insert(t);
    }

    if let Some((l2, ev)) = matching_plus_edge {
        let t = (1..=top)
            .find(|&t| is_free(t, &owned))
            .ok_or_else(|| Error::construction("no pair left for the matching plus edge"))?;
        let mut rest = classes[l2].edges.clone();
        rest.push(ev);
        rest.sort_unstable();
        let colored = color_paths_and_cycles(&star.edge_subgraph(&rest), t)?;
        for (&e, &pair) in rest.iter().zip(colored.values()) {
            out[e] = Some(pair);
        }
    }

    let values: Vec<[i32; 2]> = out
        .into_iter()
        .map(|v| v.ok_or_else(|| Error::construction("star edge left uncolored")))
        .collect::<Result<_>>()?;
    Ok((case, values))
}
