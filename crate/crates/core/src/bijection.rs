//! The recursive word bijections `φ̃_d` (with `φ̃ = φ̃_1`), their inverses,
//! orbits, and the injection `ξ : M_{n,d} → D_{n,d}`.
//!
//! `φ̃_d` is defined by two rules on a word `w = w_0 w_1 … w_n` of `Λ_n`:
//!
//! * `w = 00w_2…w_n`: take `φ̃_d(0w_2…w_n)` and insert a `1` right after its
//!   initial `0`;
//! * `w = 01w_2…w_n`: let `w_m` be the `(d+1)`-th `0` of `w` (`m = n+1` if there
//!   is none) and return `00w_2…w_{m-1}` followed by `φ̃_d(w_m…w_n)`;
//!
//! with `φ̃_d(∅) = ∅` and `φ̃_d(01) = 01`. Unrolling the first rule, a word
//! `0^a 1 y` maps to `0 1^{a-1}` followed by the image of `01y` with its
//! leading `0` dropped, which lets both maps run as a single left-to-right
//! pass over suffixes instead of recursing once per `0`.

use std::collections::{BTreeSet, HashSet};

use serde::Serialize;

use crate::boundary::BoundarySequence;
use crate::enumerate::{enum_labeled_d, enum_labeled_m};
use crate::error::{domain, Error, Result};
use crate::partition::{LabeledPartition, Partition};

fn check_d(d: usize) -> Result<()> {
    if d == 0 {
        Err(domain("d must be at least 1"))
    } else {
        Ok(())
    }
}

/// Index of the `count`-th zero (1-based) at or after `from`, if any.
fn nth_zero(bits: &[bool], from: usize, count: usize) -> Option<usize> {
    bits.iter()
        .enumerate()
        .skip(from)
        .filter(|(_, &b)| !b)
        .nth(count - 1)
        .map(|(i, _)| i)
}

/// Apply `φ̃_d`.
pub fn phi_d(word: &BoundarySequence, d: usize) -> Result<BoundarySequence> {
    check_d(d)?;
    let w = word.bits();
    let len = w.len();
    let mut out = Vec::with_capacity(len);
    let mut start = 0;
    while start < len {
        // current suffix is 0^a 1 y
        let a = w[start..].iter().take_while(|&&b| !b).count();
        out.push(false);
        out.extend(std::iter::repeat_n(true, a - 1));
        // u = 0 1 y begins at u0
        let u0 = start + a - 1;
        if u0 + 2 == len {
            out.push(true);
            break;
        }
        out.push(false);
        match nth_zero(w, u0, d + 1) {
            Some(m) => {
                out.extend_from_slice(&w[u0 + 2..m]);
                start = m;
            }
            None => {
                out.extend_from_slice(&w[u0 + 2..]);
                break;
            }
        }
    }
    debug_assert_eq!(out.len(), len);
    Ok(BoundarySequence::from_bits_unchecked(out))
}

/// Apply `φ̃_d^{-1}`.
///
/// Rules: `01w_2…w_n` maps to `φ̃_d^{-1}(0w_2…w_n)` with a `0` inserted after
/// the initial `0`; `00w_2…w_n` maps to `01w_2…w_{m-1}` followed by
/// `φ̃_d^{-1}(w_m…w_n)` where `w_m` is the `(d+2)`-th `0`.
pub fn phi_d_inverse(word: &BoundarySequence, d: usize) -> Result<BoundarySequence> {
    check_d(d)?;
    let w = word.bits();
    let len = w.len();
    let mut out = Vec::with_capacity(len);
    let mut start = 0;
    while start < len {
        // position from which the tail of a `00…` word is copied
        let copy_from = if w[start + 1] {
            // suffix is 0 1^b z
            let b = w[start + 1..].iter().take_while(|&&x| x).count();
            let z = start + 1 + b;
            if z == len {
                out.extend(std::iter::repeat_n(false, b));
                out.push(true);
                break;
            }
            // 0^{b+1} then the image of the virtual word 0z without its leading 0
            out.extend(std::iter::repeat_n(false, b + 1));
            z + 1
        } else {
            out.push(false);
            start + 2
        };
        out.push(true);
        // the two leading zeros are already consumed; d more are needed
        match nth_zero(w, copy_from, d) {
            Some(m) => {
                out.extend_from_slice(&w[copy_from..m]);
                start = m;
            }
            None => {
                out.extend_from_slice(&w[copy_from..]);
                break;
            }
        }
    }
    debug_assert_eq!(out.len(), len);
    Ok(BoundarySequence::from_bits_unchecked(out))
}

/// `φ_d = w^{-1} ∘ φ̃_d ∘ w` on partitions. Perimeter is preserved.
pub fn phi_on_partition(partition: &Partition, d: usize) -> Result<Partition> {
    if partition.is_empty() {
        return Err(domain("phi is applied to nonempty partitions"));
    }
    Ok(phi_d(&BoundarySequence::from_partition(partition), d)?.to_partition())
}

/// `φ_d^{-1}` on partitions.
pub fn phi_inverse_on_partition(partition: &Partition, d: usize) -> Result<Partition> {
    if partition.is_empty() {
        return Err(domain("phi is applied to nonempty partitions"));
    }
    Ok(phi_d_inverse(&BoundarySequence::from_partition(partition), d)?.to_partition())
}

/// The cycle of a word under `φ̃_d`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrbitReport {
    #[serde(serialize_with = "crate::ser::display")]
    pub start: BoundarySequence,
    #[serde(serialize_with = "crate::ser::display_seq")]
    pub cycle: Vec<BoundarySequence>,
    pub length: usize,
}

pub fn orbit(word: &BoundarySequence, d: usize) -> Result<OrbitReport> {
    check_d(d)?;
    if word.is_empty() {
        return Err(domain("orbit needs a nonempty word"));
    }
    let n = word.perimeter();
    let cap: u128 = 1u128 << (n - 1);
    let mut cycle = vec![word.clone()];
    let mut current = phi_d(word, d)?;
    let mut steps: u128 = 1;
    while &current != word {
        if steps >= cap {
            return Err(Error::Internal(format!(
                "no return to {word} within {cap} applications of phi_{d}"
            )));
        }
        let next = phi_d(&current, d)?;
        cycle.push(current);
        current = next;
        steps += 1;
    }
    let length = cycle.len();
    Ok(OrbitReport {
        start: word.clone(),
        cycle,
        length,
    })
}

/// Decompose a part `v ≢ 1 (mod d+1)` as `l(d+1) + k` with `2 ≤ k ≤ d+1`.
fn split_residue(value: u64, d: u64) -> Option<(u64, u64)> {
    let m = d + 1;
    match value % m {
        1 => None,
        0 => Some((value / m - 1, m)),
        r => Some((value / m, r)),
    }
}

/// The injection `ξ : M_{n,d} → D_{n,d}`.
///
/// With `λ_i = l(d+1) + k`, `2 ≤ k ≤ d+1` and `λ_{ℓ+1} = 0`: if
/// `λ_i − λ_{i+1} ≤ k − 2` the star moves to `i+1`; otherwise the first `i`
/// parts each lose one cell and a new part `l(d+1)+1` is inserted after
/// position `i`, carrying the star.
pub fn xi(labeled: &LabeledPartition, d: usize) -> Result<LabeledPartition> {
    check_d(d)?;
    let i = labeled.star();
    let value = labeled.starred_part();
    let (l, k) = split_residue(value, d as u64).ok_or_else(|| {
        Error::Precondition(format!(
            "({labeled}) is not in M_(n,{d}): starred part is 1 mod {}",
            d + 1
        ))
    })?;
    let next = labeled.part_or_zero(i + 1);
    let parts = labeled.partition().parts();
    if value - next <= k - 2 {
        return LabeledPartition::new(labeled.partition().clone(), i + 1);
    }
    let mut image = Vec::with_capacity(parts.len() + 1);
    image.extend(parts[..i].iter().map(|&p| p - 1));
    image.push(l * (d as u64 + 1) + 1);
    image.extend_from_slice(&parts[i..]);
    LabeledPartition::new(Partition::from_parts_unchecked(image), i + 1)
}

/// Residue characterization of the elements of `D_{n,d}` missed by `ξ`:
/// `λ_{i-1} ≡ 1` and `λ_i ≢ 1 (mod d+1)`.
///
/// Exact for `d ≤ 2`. From `d = 3` on, `ξ` also misses elements with
/// `λ_{i-1} ≢ 1`, such as `(6,4*)` at `n = 7, d = 3`: its only candidate
/// preimage `(6*,4)` falls in the second case of `ξ`.
pub fn outside_xi_image(labeled: &LabeledPartition, d: usize) -> bool {
    let m = d as u64 + 1;
    let i = labeled.star();
    i >= 2 && labeled.part_or_zero(i - 1) % m == 1 && labeled.starred_part() % m != 1
}

/// `D_{n,d} \ ξ(M_{n,d})` computed two ways.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XiComplement {
    /// Filtered from `D_{n,d}` by [`outside_xi_image`].
    pub direct: BTreeSet<LabeledPartition>,
    /// `D_{n,d}` minus the image of `ξ`.
    pub by_difference: BTreeSet<LabeledPartition>,
}

impl XiComplement {
    pub fn agree(&self) -> bool {
        self.direct == self.by_difference
    }
}

pub fn xi_complement(n: usize, d: usize) -> Result<XiComplement> {
    let d_set: BTreeSet<LabeledPartition> = enum_labeled_d(n, d)?.collect();
    let mut image = HashSet::new();
    for lp in enum_labeled_m(n, d)? {
        image.insert(xi(&lp, d)?);
    }
    let direct = d_set
        .iter()
        .filter(|lp| outside_xi_image(lp, d))
        .cloned()
        .collect();
    let by_difference = d_set.into_iter().filter(|lp| !image.contains(lp)).collect();
    Ok(XiComplement {
        direct,
        by_difference,
    })
}
