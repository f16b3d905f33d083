// SPDX-License-Identifier: Apache-2.0

mod base;
mod coloring;
mod oracle;
mod palette;

pub use base::{
    color_balanced_cycle, color_matching, color_path, color_paths_and_cycles, color_signed_forest,
    color_signed_forest_with,
};
pub(crate) use coloring::{check_partial, ensure_valid, shift_nonzero};
pub use coloring::{merge_colorings, shift_colors, verify_coloring, IncidenceColoring, Verification, Violation};
pub use oracle::{
    decide_k_colorable, exact_chromatic_index, search_k_colorable, SearchOutcome, SearchStats,
    MAX_ORACLE_COLORS,
};
pub use palette::{color_set, ColorSet};
