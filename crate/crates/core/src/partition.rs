//! Partitions, labeled partitions and their statistics.
//!
//! A partition is stored as its weakly decreasing list of parts. Text form is
//! the comma-separated part list (`6,3,3,1`); a labeled partition marks its
//! starred part with a trailing `*` (`14,13,11*,10,5,2`).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{domain, Error, Result};

/// Weakly decreasing sequence of positive parts.
///
/// The empty partition exists only as the base case of the boundary codec and
/// of the recursive maps; [`Partition::perimeter`] and the fallible statistic
/// evaluators in [`crate::stats`] reject it.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition {
    parts: Vec<u64>,
}

impl Partition {
    pub fn new(parts: Vec<u64>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Parse(format!("parts must be positive: {parts:?}")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Parse(format!(
                "parts must be weakly decreasing: {parts:?}"
            )));
        }
        Ok(Self { parts })
    }

    /// Caller guarantees the invariants.
    pub(crate) fn from_parts_unchecked(parts: Vec<u64>) -> Self {
        debug_assert!(parts.iter().all(|&p| p > 0));
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Self { parts }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[u64] {
        &self.parts
    }

    pub fn into_parts(self) -> Vec<u64> {
        self.parts
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Largest part, zero for the empty partition.
    pub fn largest(&self) -> u64 {
        self.parts.first().copied().unwrap_or(0)
    }

    /// Sum of the parts.
    pub fn size(&self) -> u64 {
        self.parts.iter().sum()
    }

    /// Largest part plus number of parts minus one.
    pub fn perimeter(&self) -> Result<usize> {
        match self.parts.first() {
            None => Err(domain("the empty partition has no perimeter")),
            Some(&first) => Ok(first as usize + self.parts.len() - 1),
        }
    }

    /// Multiplicity view `1^{m_1} 2^{m_2} ...`: part value to number of copies.
    pub fn multiplicities(&self) -> BTreeMap<u64, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Adjacent positions holding equal parts.
    pub fn rep(&self) -> usize {
        self.parts.windows(2).filter(|w| w[0] == w[1]).count()
    }

    pub fn even(&self) -> usize {
        self.parts.iter().filter(|&&p| p % 2 == 0).count()
    }

    /// Number of distinct part values; equals `len() - rep()`.
    pub fn dist(&self) -> usize {
        self.parts.len() - self.rep()
    }

    /// Number of distinct values occurring at least twice.
    pub fn rep_star(&self) -> usize {
        self.multiplicities().values().filter(|&&m| m >= 2).count()
    }

    /// Number of distinct even values.
    pub fn even_star(&self) -> usize {
        self.multiplicities()
            .keys()
            .filter(|&&p| p % 2 == 0)
            .count()
    }

    /// Adjacent pairs whose difference is below `d`. `dif(1) == rep()`.
    pub fn dif(&self, d: usize) -> usize {
        let d = d as u64;
        self.parts.windows(2).filter(|w| w[0] - w[1] < d).count()
    }

    /// Parts congruent to 1 modulo `d + 1`.
    pub fn mod_count(&self, d: usize) -> usize {
        let m = d as u64 + 1;
        self.parts.iter().filter(|&&p| p % m == 1).count()
    }

    /// Parts not congruent to 1 modulo `d + 1`. `mod_prime(1) == even()`.
    pub fn mod_prime(&self, d: usize) -> usize {
        self.parts.len() - self.mod_count(d)
    }

    pub fn odd_parts(&self) -> usize {
        self.parts.len() - self.even()
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

fn parse_part(token: &str) -> Result<u64> {
    token
        .trim()
        .parse::<u64>()
        .map_err(|e| Error::Parse(format!("bad part {token:?}: {e}")))
}

impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Self::empty());
        }
        let parts = s.split(',').map(parse_part).collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

/// A partition with one starred part, `(λ, i)` with `1 <= i <= ℓ(λ)`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LabeledPartition {
    partition: Partition,
    star: usize,
}

impl LabeledPartition {
    /// `star` is 1-based.
    pub fn new(partition: Partition, star: usize) -> Result<Self> {
        if star == 0 || star > partition.len() {
            return Err(Error::Parse(format!(
                "star index {star} outside 1..={} for ({partition})",
                partition.len()
            )));
        }
        Ok(Self { partition, star })
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn star(&self) -> usize {
        self.star
    }

    /// Value of the starred part.
    pub fn starred_part(&self) -> u64 {
        self.partition.parts()[self.star - 1]
    }

    /// Part at 1-based position `i`, with the convention that positions past
    /// the end hold 0.
    pub fn part_or_zero(&self, i: usize) -> u64 {
        if i == 0 {
            return 0;
        }
        self.partition.parts().get(i - 1).copied().unwrap_or(0)
    }
}

impl fmt::Display for LabeledPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.partition.parts().iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
            if i + 1 == self.star {
                f.write_str("*")?;
            }
        }
        Ok(())
    }
}

impl FromStr for LabeledPartition {
    type Err = Error;

    /// Accepts `a,b*,c` and the alternative `a,b,c:2`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if let Some((parts, star)) = s.split_once(':') {
            let partition: Partition = parts.parse()?;
            let star = star
                .trim()
                .parse::<usize>()
                .map_err(|e| Error::Parse(format!("bad star index {star:?}: {e}")))?;
            return Self::new(partition, star);
        }
        let mut star = None;
        let mut parts = Vec::new();
        for (i, token) in s.split(',').enumerate() {
            let token = token.trim();
            let token = match token.strip_suffix('*') {
                Some(stripped) => {
                    if star.replace(i + 1).is_some() {
                        return Err(Error::Parse(format!("more than one star in {s:?}")));
                    }
                    stripped
                }
                None => token,
            };
            parts.push(parse_part(token)?);
        }
        let star = star.ok_or_else(|| Error::Parse(format!("no starred part in {s:?}")))?;
        Self::new(Partition::new(parts)?, star)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn perimeter_examples() {
        assert_eq!(p("6,3,3,1").perimeter().unwrap(), 9);
        assert_eq!(p("1").perimeter().unwrap(), 1);
        assert_eq!(p("5").perimeter().unwrap(), 5);
        assert!(matches!(
            Partition::empty().perimeter(),
            Err(Error::Domain(_))
        ));
    }

    #[test]
    fn rep_and_even() {
        assert_eq!((p("4,4").rep(), p("4,4").even()), (1, 2));
        assert_eq!((p("3,3,3").rep(), p("3,3,3").even()), (2, 0));
        assert_eq!((p("5").rep(), p("5").even()), (0, 0));
    }

    #[test]
    fn dist_examples() {
        assert_eq!(p("6,3,3,1").dist(), 3);
        assert_eq!(p("5").dist(), 1);
        assert_eq!(p("2,2,2,2").dist(), 1);
    }

    #[test]
    fn valued_statistics() {
        assert_eq!((p("4,4").rep_star(), p("4,4").even_star()), (1, 1));
        assert_eq!((p("2,2,1,1").rep_star(), p("2,2,1,1").even_star()), (2, 1));
        assert_eq!((p("5").rep_star(), p("5").even_star()), (0, 0));
    }

    #[test]
    fn dif_examples() {
        assert_eq!(p("3,2").dif(2), 1);
        assert_eq!(p("14,13,11,10,5,2").dif(5), 4);
        for d in 1..6 {
            assert_eq!(p("5").dif(d), 0);
        }
    }

    #[test]
    fn mod_examples() {
        assert_eq!(p("2,2,2").mod_prime(2), 3);
        assert_eq!(p("1,1,1").mod_prime(2), 0);
        assert_eq!((p("3,2,1").mod_count(2), p("3,2,1").mod_prime(2)), (1, 2));
    }

    #[test]
    fn rejects_bad_partitions() {
        assert!("3,4".parse::<Partition>().is_err());
        assert!("3,0".parse::<Partition>().is_err());
        assert!("3,x".parse::<Partition>().is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn labeled_syntax() {
        let lp: LabeledPartition = "14,13,11*,10,5,2".parse().unwrap();
        assert_eq!(lp.star(), 3);
        assert_eq!(lp.starred_part(), 11);
        assert_eq!(lp.to_string(), "14,13,11*,10,5,2");
        let alt: LabeledPartition = "14,13,11,10,5,2:3".parse().unwrap();
        assert_eq!(alt, lp);
        assert_eq!(lp.part_or_zero(7), 0);
        assert!("3*,2*".parse::<LabeledPartition>().is_err());
        assert!("3,2".parse::<LabeledPartition>().is_err());
        assert!("3,2:3".parse::<LabeledPartition>().is_err());
    }

    #[test]
    fn multiplicity_view() {
        let m = p("6,3,3,1").multiplicities();
        assert_eq!(
            m.into_iter().collect::<Vec<_>>(),
            vec![(1, 1), (3, 2), (6, 1)]
        );
    }
}
