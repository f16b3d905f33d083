// SPDX-License-Identifier: Apache-2.0

pub mod analysis;
pub mod color;
pub mod error;
pub mod graph;
pub mod products;
pub mod theorems;

pub use error::{Error, Result};
