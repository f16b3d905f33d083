// SPDX-License-Identifier: Apache-2.0

//! Fixed instances shared by the benchmarks.

use sigcolor_core::graph::{make_complete, make_cycle, Sign, SignedGraph};
use sigcolor_core::products::cartesian;

pub fn unsigned_cycle(r: usize) -> SignedGraph {
    make_cycle(r, &vec![Sign::Plus; r]).expect("r >= 3")
}

/// `C_r □ C_s` with every edge positive.
pub fn cycle_product(r: usize, s: usize) -> SignedGraph {
    cartesian(&unsigned_cycle(r), &unsigned_cycle(s)).graph
}

/// `C_r □ C_s` with exactly one negative edge, which needs `Δ + 1` colors.
pub fn odd_cycle_product(r: usize, s: usize) -> SignedGraph {
    cycle_product(r, s).with_sign_mask(1)
}

/// `K_n` with every edge negative.
pub fn all_negative_complete(n: usize) -> SignedGraph {
    make_complete(n, &vec![Sign::Minus; n * (n - 1) / 2]).expect("signs match")
}
