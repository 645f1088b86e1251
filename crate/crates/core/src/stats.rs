//! Statistics as values, so that distributions can be computed generically.

use std::collections::BTreeMap;

use num_bigint::BigUint;

use crate::error::{domain, Result};
use crate::partition::Partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Statistic {
    Length,
    Rep,
    Even,
    Dist,
    RepStar,
    EvenStar,
    Dif(usize),
    Mod(usize),
    ModPrime(usize),
}

impl Statistic {
    /// Evaluate on a nonempty partition.
    pub fn eval(self, partition: &Partition) -> Result<usize> {
        if partition.is_empty() {
            return Err(domain(format!(
                "{} is undefined on the empty partition",
                self.name()
            )));
        }
        if let Statistic::Dif(0) | Statistic::Mod(0) | Statistic::ModPrime(0) = self {
            return Err(domain("d must be at least 1"));
        }
        Ok(self.eval_unchecked(partition))
    }

    pub(crate) fn eval_unchecked(self, partition: &Partition) -> usize {
        match self {
            Statistic::Length => partition.len(),
            Statistic::Rep => partition.rep(),
            Statistic::Even => partition.even(),
            Statistic::Dist => partition.dist(),
            Statistic::RepStar => partition.rep_star(),
            Statistic::EvenStar => partition.even_star(),
            Statistic::Dif(d) => partition.dif(d),
            Statistic::Mod(d) => partition.mod_count(d),
            Statistic::ModPrime(d) => partition.mod_prime(d),
        }
    }

    pub fn name(self) -> String {
        match self {
            Statistic::Length => "length".into(),
            Statistic::Rep => "rep".into(),
            Statistic::Even => "even".into(),
            Statistic::Dist => "dist".into(),
            Statistic::RepStar => "rep*".into(),
            Statistic::EvenStar => "even*".into(),
            Statistic::Dif(d) => format!("dif_{d}"),
            Statistic::Mod(d) => format!("mod_{d}"),
            Statistic::ModPrime(d) => format!("mod'_{d}"),
        }
    }
}

/// Coefficient list of `Σ t^{stat(λ)}` over the given partitions, index = exponent.
/// Trailing zeros are trimmed.
pub fn distribution<I>(partitions: I, stat: Statistic) -> Vec<BigUint>
where
    I: IntoIterator<Item = Partition>,
{
    let mut counts: Vec<u64> = Vec::new();
    for partition in partitions {
        let value = stat.eval_unchecked(&partition);
        if counts.len() <= value {
            counts.resize(value + 1, 0);
        }
        counts[value] += 1;
    }
    counts.into_iter().map(BigUint::from).collect()
}

/// Counts of `(a(λ), b(λ))` pairs, e.g. the joint law of `dif_d` and `mod'_d`.
pub fn joint_distribution<I>(
    partitions: I,
    a: Statistic,
    b: Statistic,
) -> BTreeMap<(usize, usize), u64>
where
    I: IntoIterator<Item = Partition>,
{
    let mut table = BTreeMap::new();
    for partition in partitions {
        *table
            .entry((a.eval_unchecked(&partition), b.eval_unchecked(&partition)))
            .or_insert(0) += 1;
    }
    table
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_empty_and_zero_d() {
        let empty = Partition::empty();
        assert!(Statistic::Rep.eval(&empty).is_err());
        let one: Partition = "1".parse().unwrap();
        assert!(Statistic::Dif(0).eval(&one).is_err());
        assert_eq!(Statistic::ModPrime(2).eval(&one).unwrap(), 0);
    }

    #[test]
    fn distribution_counts() {
        let parts: Vec<Partition> = ["2", "1,1"].iter().map(|s| s.parse().unwrap()).collect();
        let dist = distribution(parts, Statistic::Rep);
        assert_eq!(dist, vec![BigUint::from(1u8), BigUint::from(1u8)]);
    }

    #[test]
    fn joint_counts() {
        let parts: Vec<Partition> = ["2", "1,1", "3,3"]
            .iter()
            .map(|s| s.parse().unwrap())
            .collect();
        let joint = joint_distribution(parts, Statistic::Rep, Statistic::Even);
        assert_eq!(joint, BTreeMap::from([((0, 1), 1), ((1, 0), 2)]));
    }
}
