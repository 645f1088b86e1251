//! Exhaustive generators for the finite families: partitions of fixed
//! perimeter, partitions of fixed size, k-extraordinary subsets and the
//! labeled sets `D_{n,d}` and `M_{n,d}`.
//!
//! Every generator is deterministic and duplicate-free.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use crate::error::{domain, Error, Result};
use crate::partition::{LabeledPartition, Partition};

/// Largest perimeter whose free bits fit a `u64` mask.
pub const MAX_PERIMETER: usize = 64;

/// Partitions of perimeter `n` in lexicographic order of their boundary words.
///
/// The `2^(n-1)` free middle bits of the word are the binary digits of a
/// counter, so any index range can be enumerated on its own.
#[derive(Clone, Debug)]
pub struct PerimeterIter {
    n: usize,
    next: u64,
    end: u64,
}

impl PerimeterIter {
    fn decode(&self, mask: u64) -> Partition {
        let n = self.n;
        let mut parts = Vec::new();
        let mut zeros = 1u64;
        for i in 1..n {
            if (mask >> (n - 1 - i)) & 1 == 1 {
                parts.push(zeros);
            } else {
                zeros += 1;
            }
        }
        parts.push(zeros);
        parts.reverse();
        Partition::from_parts_unchecked(parts)
    }
}

impl Iterator for PerimeterIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.next >= self.end {
            return None;
        }
        let item = self.decode(self.next);
        self.next += 1;
        Some(item)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let left = (self.end - self.next) as usize;
        (left, Some(left))
    }
}

impl ExactSizeIterator for PerimeterIter {}

fn check_perimeter(n: usize) -> Result<()> {
    if n == 0 {
        return Err(domain("perimeter must be at least 1"));
    }
    if n > MAX_PERIMETER {
        return Err(domain(format!("perimeter {n} exceeds {MAX_PERIMETER}")));
    }
    Ok(())
}

/// Number of partitions with perimeter `n`, as a mask bound.
pub fn perimeter_count(n: usize) -> Result<u64> {
    check_perimeter(n)?;
    Ok(1u64 << (n - 1))
}

/// All of `H_n`.
pub fn enum_perimeter(n: usize) -> Result<PerimeterIter> {
    let end = perimeter_count(n)?;
    Ok(PerimeterIter { n, next: 0, end })
}

/// The slice of `H_n` whose word masks fall in `range`.
pub fn enum_perimeter_range(n: usize, range: Range<u64>) -> Result<PerimeterIter> {
    let total = perimeter_count(n)?;
    if range.end > total || range.start > range.end {
        return Err(domain(format!("mask range {range:?} outside 0..{total}")));
    }
    Ok(PerimeterIter {
        n,
        next: range.start,
        end: range.end,
    })
}

/// Partitions of `n` in reverse lexicographic order, starting from `(n)`.
#[derive(Clone, Debug)]
pub struct SizeIter {
    current: Option<Vec<u64>>,
}

impl Iterator for SizeIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        let parts = self.current.take()?;
        let item = Partition::from_parts_unchecked(parts.clone());
        self.current = advance_size(parts);
        Some(item)
    }
}

fn advance_size(mut parts: Vec<u64>) -> Option<Vec<u64>> {
    let mut spill = 0u64;
    while parts.last() == Some(&1) {
        parts.pop();
        spill += 1;
    }
    let last = parts.pop()?;
    let cap = last - 1;
    parts.push(cap);
    spill += 1;
    while spill > 0 {
        let take = cap.min(spill);
        parts.push(take);
        spill -= take;
    }
    Some(parts)
}

/// All partitions of `n` (`Par_n`).
pub fn enum_size(n: usize) -> Result<SizeIter> {
    if n == 0 {
        return Err(domain("size must be at least 1"));
    }
    Ok(SizeIter {
        current: Some(vec![n as u64]),
    })
}

/// Subsets `S ⊆ [n]` whose size equals their `k`-th smallest element, in
/// lexicographic order of the sorted element lists.
pub fn enum_extraordinary(n: usize, k: usize) -> Result<std::vec::IntoIter<Vec<usize>>> {
    if k == 0 || k > n {
        return Err(domain(format!("need 1 <= k <= n, got n={n}, k={k}")));
    }
    let mut out = Vec::new();
    let mut current = Vec::new();
    extraordinary_dfs(n, k, 1, &mut current, &mut out);
    Ok(out.into_iter())
}

fn extraordinary_dfs(
    n: usize,
    k: usize,
    from: usize,
    current: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if current.len() >= k {
        let target = current[k - 1];
        if current.len() == target {
            out.push(current.clone());
        }
        // growing further only moves |S| away from a fixed k-th element
        if current.len() >= target {
            return;
        }
    }
    for next in from..=n {
        current.push(next);
        extraordinary_dfs(n, k, next + 1, current, out);
        current.pop();
    }
}

fn check_nd(n: usize, d: usize) -> Result<()> {
    check_perimeter(n)?;
    if d == 0 {
        return Err(domain("d must be at least 1"));
    }
    Ok(())
}

/// `D_{n,d}`: `(λ, i)` with `λ ∈ H_n`, `2 ≤ i ≤ ℓ(λ)` and `λ_{i-1} − λ_i < d`.
pub fn enum_labeled_d(n: usize, d: usize) -> Result<impl Iterator<Item = LabeledPartition>> {
    check_nd(n, d)?;
    let d = d as u64;
    Ok(enum_perimeter(n)?.flat_map(move |lambda| {
        let stars: Vec<usize> = (2..=lambda.len())
            .filter(|&i| lambda.parts()[i - 2] - lambda.parts()[i - 1] < d)
            .collect();
        stars
            .into_iter()
            .map(move |i| LabeledPartition::new(lambda.clone(), i).expect("star in range"))
    }))
}

/// `M_{n,d}`: `(λ, i)` with `λ ∈ H_n` and `λ_i ≢ 1 (mod d+1)`.
pub fn enum_labeled_m(n: usize, d: usize) -> Result<impl Iterator<Item = LabeledPartition>> {
    check_nd(n, d)?;
    let m = d as u64 + 1;
    Ok(enum_perimeter(n)?.flat_map(move |lambda| {
        let stars: Vec<usize> = (1..=lambda.len())
            .filter(|&i| lambda.parts()[i - 1] % m != 1)
            .collect();
        stars
            .into_iter()
            .map(move |i| LabeledPartition::new(lambda.clone(), i).expect("star in range"))
    }))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    Perimeter,
    Size,
    Extraordinary,
    LabeledD,
    LabeledM,
}

impl Family {
    pub const ALL: [Family; 5] = [
        Family::Perimeter,
        Family::Size,
        Family::Extraordinary,
        Family::LabeledD,
        Family::LabeledM,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Perimeter => "perimeter",
            Family::Size => "size",
            Family::Extraordinary => "extraordinary",
            Family::LabeledD => "labeled-d",
            Family::LabeledM => "labeled-m",
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::Parse(format!("unknown family {s:?}")))
    }
}

/// One enumerable family with its parameters.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnumerationRequest {
    pub family: Family,
    pub n: usize,
    /// `k` for extraordinary subsets, `d` for the labeled sets.
    pub param: Option<usize>,
}

impl EnumerationRequest {
    pub fn new(family: Family, n: usize, d: Option<usize>, k: Option<usize>) -> Result<Self> {
        let param = match family {
            Family::Perimeter | Family::Size => {
                if d.is_some() || k.is_some() {
                    return Err(domain(format!("family {} takes no --d/--k", family.name())));
                }
                None
            }
            Family::Extraordinary => {
                if d.is_some() {
                    return Err(domain("extraordinary subsets take --k, not --d"));
                }
                Some(k.ok_or_else(|| domain("extraordinary subsets need --k"))?)
            }
            Family::LabeledD | Family::LabeledM => {
                if k.is_some() {
                    return Err(domain("labeled sets take --d, not --k"));
                }
                Some(d.ok_or_else(|| domain("labeled sets need --d"))?)
            }
        };
        Ok(Self { family, n, param })
    }

    pub fn run(&self) -> Result<Box<dyn Iterator<Item = Item>>> {
        let param = self.param.unwrap_or(0);
        Ok(match self.family {
            Family::Perimeter => Box::new(enum_perimeter(self.n)?.map(Item::Partition)),
            Family::Size => Box::new(enum_size(self.n)?.map(Item::Partition)),
            Family::Extraordinary => Box::new(enum_extraordinary(self.n, param)?.map(Item::Subset)),
            Family::LabeledD => Box::new(enum_labeled_d(self.n, param)?.map(Item::Labeled)),
            Family::LabeledM => Box::new(enum_labeled_m(self.n, param)?.map(Item::Labeled)),
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Item {
    Partition(Partition),
    Subset(Vec<usize>),
    Labeled(LabeledPartition),
}

impl fmt::Display for Item {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Item::Partition(p) => p.fmt(f),
            Item::Labeled(lp) => lp.fmt(f),
            Item::Subset(s) => {
                let text: Vec<String> = s.iter().map(ToString::to_string).collect();
                f.write_str(&text.join(","))
            }
        }
    }
}
