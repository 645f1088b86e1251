//! The boundary 01-word of a Young diagram.
//!
//! Walking the boundary of the diagram from its bottom-left corner to its
//! top-right corner, each horizontal edge is written as `0` and each vertical
//! edge as `1`. Bits are stored in walk order, so `bits[0]` is `w_0`, the
//! leftmost character of the text form. A partition of perimeter `n` gives a
//! word of length `n + 1` with `w_0 = 0` and `w_n = 1`; the `i`-th `1` from the
//! left encodes a part equal to the number of `0`s before it.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::partition::Partition;

#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BoundarySequence {
    bits: Vec<bool>,
}

impl BoundarySequence {
    /// Validates the endpoint conditions: empty, or starts with 0 and ends with 1.
    pub fn new(bits: Vec<bool>) -> Result<Self> {
        if let (Some(&first), Some(&last)) = (bits.first(), bits.last()) {
            if first || !last || bits.len() < 2 {
                return Err(Error::Codec(format!(
                    "word must start with 0 and end with 1: {}",
                    render(&bits)
                )));
            }
        }
        Ok(Self { bits })
    }

    pub(crate) fn from_bits_unchecked(bits: Vec<bool>) -> Self {
        debug_assert!(bits.is_empty() || (!bits[0] && bits[bits.len() - 1]));
        Self { bits }
    }

    /// The word of `Λ_n` whose free middle bits `w_1 … w_{n-1}` are the binary
    /// digits of `mask`, `w_1` most significant.
    pub fn from_mask(n: usize, mask: u64) -> Self {
        debug_assert!(n >= 1 && (n == 1 || mask < 1u64 << (n - 1)));
        let mut bits = Vec::with_capacity(n + 1);
        bits.push(false);
        for i in 1..n {
            bits.push((mask >> (n - 1 - i)) & 1 == 1);
        }
        bits.push(true);
        Self { bits }
    }

    /// Inverse of [`from_mask`](Self::from_mask).
    pub fn mask(&self) -> u64 {
        let n = self.perimeter();
        (1..n).fold(0u64, |acc, i| (acc << 1) | self.bits[i] as u64)
    }

    pub fn bits(&self) -> &[bool] {
        &self.bits
    }

    pub fn len(&self) -> usize {
        self.bits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_empty()
    }

    /// Length minus one; 0 for the empty word.
    pub fn perimeter(&self) -> usize {
        self.bits.len().saturating_sub(1)
    }

    pub fn from_partition(partition: &Partition) -> Self {
        let parts = partition.parts();
        let mut bits = Vec::with_capacity(partition.perimeter().map_or(0, |n| n + 1));
        let mut previous = 0u64;
        for &part in parts.iter().rev() {
            bits.extend(std::iter::repeat_n(false, (part - previous) as usize));
            bits.push(true);
            previous = part;
        }
        Self { bits }
    }

    pub fn to_partition(&self) -> Partition {
        let mut parts = Vec::new();
        let mut zeros = 0u64;
        for &bit in &self.bits {
            if bit {
                parts.push(zeros);
            } else {
                zeros += 1;
            }
        }
        parts.reverse();
        Partition::from_parts_unchecked(parts)
    }

    /// `|{1 ≤ i ≤ n : w_i = 1}|`, the number of parts.
    pub fn ones(&self) -> usize {
        self.bits.iter().skip(1).filter(|&&b| b).count()
    }

    /// `|{1 ≤ i ≤ n : w_i = w_{i-1} = 1}|`.
    pub fn rep(&self) -> usize {
        self.bits.windows(2).filter(|w| w[0] && w[1]).count()
    }

    /// `|{1 ≤ i ≤ n : w_i = 1, #{j < i : w_j = 0} even}|`.
    pub fn even(&self) -> usize {
        self.count_ones_by_zero_prefix(1, |zeros| zeros % 2 == 0)
    }

    /// Positions `i ≥ 1` with `w_i = w_{i+k} = 1` and only zeros strictly between,
    /// for some `1 ≤ k ≤ d`.
    pub fn dif(&self, d: usize) -> usize {
        let mut count = 0;
        let mut last_one: Option<usize> = None;
        for (i, &bit) in self.bits.iter().enumerate().skip(1) {
            if bit {
                if let Some(j) = last_one {
                    if i - j <= d {
                        count += 1;
                    }
                }
                last_one = Some(i);
            }
        }
        count
    }

    /// `|{2 ≤ i ≤ n : w_i = 1, #{j < i : w_j = 0} ≢ 1 (mod d+1)}|`.
    pub fn mod_prime(&self, d: usize) -> usize {
        self.count_ones_by_zero_prefix(2, |zeros| zeros % (d + 1) != 1)
    }

    fn count_ones_by_zero_prefix(&self, from: usize, keep: impl Fn(usize) -> bool) -> usize {
        let mut zeros = 0;
        let mut count = 0;
        for (i, &bit) in self.bits.iter().enumerate() {
            if bit {
                if i >= from && keep(zeros) {
                    count += 1;
                }
            } else {
                zeros += 1;
            }
        }
        count
    }
}

fn render(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

impl fmt::Display for BoundarySequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(&self.bits))
    }
}

impl FromStr for BoundarySequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bits = s
            .trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(Error::Codec(format!(
                    "unexpected character {other:?} in {s:?}"
                ))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(bits)
    }
}

/// Encode a partition as its boundary word.
pub fn to_bits(partition: &Partition) -> BoundarySequence {
    BoundarySequence::from_partition(partition)
}

/// Decode a boundary word.
pub fn from_bits(word: &BoundarySequence) -> Partition {
    word.to_partition()
}
