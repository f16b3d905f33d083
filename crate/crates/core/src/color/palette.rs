// SPDX-License-Identifier: Apache-2.0

use crate::error::{Error, Result};

/// The symmetric palette `M_k`: `{±1, …, ±l}` for `k = 2l` and
/// `{0, ±1, …, ±l}` for `k = 2l + 1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ColorSet {
    k: usize,
}

impl ColorSet {
    pub fn new(k: usize) -> Result<ColorSet> {
        if k == 0 {
            return Err(Error::precondition("a palette needs at least one color"));
        }
        Ok(ColorSet { k })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Largest magnitude `l`.
    pub fn half(&self) -> i32 {
        (self.k / 2) as i32
    }

    pub fn has_zero(&self) -> bool {
        self.k % 2 == 1
    }

    pub fn contains(&self, color: i32) -> bool {
        let l = self.half();
        if color == 0 {
            self.has_zero()
        } else {
            color.abs() <= l
        }
    }

    /// All members in ascending order.
    pub fn members(&self) -> Vec<i32> {
        let l = self.half();
        (-l..=l).filter(|&c| self.contains(c)).collect()
    }

    /// Members in search order: `0` (if present), then `1, -1, 2, -2, …`.
    pub fn search_order(&self) -> Vec<i32> {
        let mut out = Vec::with_capacity(self.k);
        if self.has_zero() {
            out.push(0);
        }
        for m in 1..=self.half() {
            out.push(m);
            out.push(-m);
        }
        out
    }

    /// Smallest palette containing every given color.
    pub fn covering<I: IntoIterator<Item = i32>>(colors: I) -> ColorSet {
        let mut l = 0;
        let mut zero = false;
        for c in colors {
            l = l.max(c.unsigned_abs() as usize);
            zero |= c == 0;
        }
        let k = if zero || l == 0 { 2 * l + 1 } else { 2 * l };
        ColorSet { k }
    }
}

pub fn color_set(k: usize) -> Result<ColorSet> {
    ColorSet::new(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn palettes_match_definition() {
        assert_eq!(color_set(1).unwrap().members(), vec![0]);
        assert_eq!(color_set(4).unwrap().members(), vec![-2, -1, 1, 2]);
        assert_eq!(color_set(5).unwrap().members(), vec![-2, -1, 0, 1, 2]);
        assert!(color_set(0).is_err());
        for k in 1..20 {
            assert_eq!(color_set(k).unwrap().members().len(), k);
        }
    }

    #[test]
    fn covering_palette() {
        assert_eq!(ColorSet::covering([1, -1]).k(), 2);
        assert_eq!(ColorSet::covering([0, 1, -1]).k(), 3);
        assert_eq!(ColorSet::covering([0]).k(), 1);
        assert_eq!(ColorSet::covering([3, -2]).k(), 6);
    }
}
