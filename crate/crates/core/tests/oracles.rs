//! Derived values checked against independent brute-force computations.

use num_bigint::BigInt;
use perimeter::counting::{sum_dif, table_c};
use perimeter::enumerate::{enum_perimeter, perimeter_count};
use perimeter::series::{delta_series, gf_dif, sum_series_dif};
use perimeter::stats::{distribution, joint_distribution};
use perimeter::Statistic;

/// Partitions of perimeter `n` built from compositions: choose the largest
/// part `a` and length `l` with `a + l - 1 = n`, then every weakly decreasing
/// tail below `a`.
fn perimeter_oracle(n: usize) -> Vec<Vec<u64>> {
    fn tails(len: usize, max: u64, acc: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if len == 0 {
            out.push(acc.clone());
            return;
        }
        for p in 1..=max {
            acc.push(p);
            tails(len - 1, p, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    for a in 1..=n as u64 {
        let l = n + 1 - a as usize;
        let mut acc = vec![a];
        tails(l - 1, a, &mut acc, &mut out);
    }
    out
}

fn dif(parts: &[u64], d: u64) -> usize {
    parts.windows(2).filter(|w| w[0] - w[1] < d).count()
}

#[test]
fn perimeter_classes_match_oracle() {
    for n in 1..=12 {
        let mut ours: Vec<Vec<u64>> = enum_perimeter(n)
            .unwrap()
            .map(|l| l.parts().to_vec())
            .collect();
        let mut theirs = perimeter_oracle(n);
        ours.sort();
        theirs.sort();
        assert_eq!(ours, theirs, "n={n}");
        assert_eq!(perimeter_count(n).unwrap(), 1 << (n - 1));
    }
}

#[test]
fn sum_dif_examples() {
    let brute = |n: usize, d: u64| -> usize { perimeter_oracle(n).iter().map(|p| dif(p, d)).sum() };
    assert_eq!(brute(5, 1), 20);
    assert_eq!(brute(4, 2), 11);
    assert_eq!(sum_dif(5, 1, false).unwrap(), BigInt::from(20));
    assert_eq!(sum_dif(4, 2, false).unwrap(), BigInt::from(11));
    let sums = sum_series_dif(1, 5).unwrap().integer_coeffs().unwrap();
    assert_eq!(sums[5], BigInt::from(20));
    assert!(sum_dif(3, 3, false).is_err());
    assert_eq!(sum_dif(3, 3, true).unwrap(), BigInt::from(brute(3, 3)));
}

#[test]
fn dif_series_coefficient_matches_rep_total() {
    let gf = gf_dif(1, 5, None).unwrap();
    let at_one = gf
        .derivative_at_one(perimeter::series::Var::T)
        .integer_coeffs()
        .unwrap();
    let rep_total: usize = perimeter_oracle(5).iter().map(|p| dif(p, 1)).sum();
    assert_eq!(at_one[5], BigInt::from(rep_total));
}

/// `Σ_i C(n, 3i+1)` by Pascal's triangle.
#[test]
fn delta_two_is_a_binomial_sum() {
    let coeffs = delta_series(2, 40)
        .unwrap()
        .series
        .integer_coeffs()
        .unwrap();
    let mut row = vec![BigInt::from(1)];
    for (n, c) in coeffs.iter().enumerate() {
        let want: BigInt = row
            .iter()
            .enumerate()
            .filter(|(k, _)| k % 3 == 1)
            .map(|(_, v)| v.clone())
            .sum();
        assert_eq!(*c, want, "x^{n}");
        let mut next = vec![BigInt::from(1); n + 2];
        for k in 1..=n {
            next[k] = &row[k - 1] + &row[k];
        }
        row = next;
    }
}

#[test]
fn delta_zero_and_one_vanish() {
    for d in [0, 1] {
        let delta = delta_series(d, 60).unwrap();
        assert!(delta
            .series
            .integer_coeffs()
            .unwrap()
            .iter()
            .all(|c| *c == BigInt::from(0)));
    }
}

#[test]
fn extraordinary_diagonal() {
    for n in 1..=12 {
        assert_eq!(table_c(n).unwrap().get(n), BigInt::from(1));
    }
}

#[test]
fn joint_law_marginals() {
    for n in 1..=10 {
        for d in 1..=3 {
            let joint = joint_distribution(
                enum_perimeter(n).unwrap(),
                Statistic::Dif(d),
                Statistic::ModPrime(d),
            );
            let total: u64 = joint.values().sum();
            assert_eq!(total, 1 << (n - 1));
            let mut marginal = vec![0u64; n];
            for (&(a, _), &c) in &joint {
                marginal[a] += c;
            }
            while marginal.last() == Some(&0) {
                marginal.pop();
            }
            let dist: Vec<u64> = distribution(enum_perimeter(n).unwrap(), Statistic::Dif(d))
                .iter()
                .map(|v| u64::try_from(v).unwrap())
                .collect();
            assert_eq!(marginal, dist, "n={n} d={d}");
        }
    }
}
