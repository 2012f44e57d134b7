use std::fmt;

use crate::rng::SplitMix64;

/// A fixed-length bitstring over an instance's ground set.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Solution {
    bits: Vec<bool>,
}

impl Solution {
    pub fn zeros(len: usize) -> Self {
        Solution {
            bits: vec![false; len],
        }
    }

    pub fn ones(len: usize) -> Self {
        Solution {
            bits: vec![true; len],
        }
    }

    pub fn from_bits(bits: Vec<bool>) -> Self {
        Solution { bits }
    }

    /// The `len` low bits of `mask`, bit `i` of the mask at position `i`.
    pub fn from_mask(mask: u64, len: usize) -> Self {
        debug_assert!(len <= 64);
        Solution {
            bits: (0..len).map(|i| mask >> i & 1 == 1).collect(),
        }
    }

    pub fn from_indices(len: usize, indices: impl IntoIterator<Item = usize>) -> Self {
        let mut s = Solution::zeros(len);
        for i in indices {
            s.bits[i] = true;
        }
        s
    }

    pub fn random(len: usize, rng: &mut SplitMix64) -> Self {
        Solution {
            bits: (0..len).map(|_| rng.next_bool()).collect(),
        }
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.bits.len()
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        self.bits[i]
    }

    #[inline]
    pub fn set(&mut self, i: usize, value: bool) {
        self.bits[i] = value;
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        self.bits[i] = !self.bits[i];
    }

    /// `|x|₁`.
    pub fn count_ones(&self) -> usize {
        self.bits.iter().filter(|b| **b).count()
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits
            .iter()
            .enumerate()
            .filter_map(|(i, b)| b.then_some(i))
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn hamming(&self, other: &Solution) -> usize {
        assert_eq!(self.len(), other.len());
        self.bits
            .iter()
            .zip(&other.bits)
            .filter(|(a, b)| a != b)
            .count()
    }
}

impl fmt::Debug for Solution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Solution({self})")
    }
}

impl fmt::Display for Solution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for b in &self.bits {
            f.write_str(if *b { "1" } else { "0" })?;
        }
        Ok(())
    }
}
