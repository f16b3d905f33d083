// SPDX-License-Identifier: Apache-2.0

//! Class ratios over signatures and the clique probes.

mod probes;
mod ratio;

pub use probes::{
    joined_cliques, mirrored_clique_coloring, probe_complete_conjecture, probe_joined_cliques_conjecture,
    Counterexample, ProbeReport, RemarkCheck, COMPLETE_PROBE_GUARD, JOINED_PROBE_GUARD,
};
pub use ratio::{
    class_ratio_cosets, class_ratio_full, class_ratio_product_induced, product_induced_signatures,
    ClassRatioReport, Enumeration, EnumerationOptions, EnumerationState, PatternCount, Strategy,
};
