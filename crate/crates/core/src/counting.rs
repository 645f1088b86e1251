//! Counting by recurrence and closed form.
//!
//! `A(n,k)` and `B(n,k)` count partitions of perimeter `n` by `rep` and `even`;
//! both obey `X(n,k) = X(n-1,k) + X(n-1,k-1) + X(n-2,k) - X(n-2,k-1)` with
//! `X(1,0) = 1` and an all-zero row at `n = 0`. `C(n,k)` counts
//! k-extraordinary subsets of `[n]` via Grimaldi's recursion.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};

use crate::error::{domain, Result};

/// One row `{k ↦ count}` of a counting table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CountTable {
    pub n: usize,
    pub values: BTreeMap<usize, BigInt>,
}

impl CountTable {
    fn from_row(n: usize, row: &[BigInt], offset: usize) -> Self {
        let values = row
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(k, v)| (k + offset, v.clone()))
            .collect();
        Self { n, values }
    }

    /// Zero outside the stored range.
    pub fn get(&self, k: usize) -> BigInt {
        self.values.get(&k).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> BigInt {
        self.values.values().sum()
    }

    /// Dense values for `k = 0..=max key`.
    pub fn dense(&self) -> Vec<BigInt> {
        let top = self.values.keys().next_back().map_or(0, |&k| k + 1);
        (0..top).map(|k| self.get(k)).collect()
    }
}

fn at(row: &[BigInt], k: isize) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    row.get(k as usize).cloned().unwrap_or_default()
}

/// Rows `0..=n_max` of the shared four-term recurrence; row `n` has `n` entries.
fn four_term_rows(n_max: usize) -> Vec<Vec<BigInt>> {
    let mut rows: Vec<Vec<BigInt>> = vec![Vec::new(), vec![BigInt::one()]];
    for n in 2..=n_max {
        let (prev, prev2) = (&rows[n - 1], &rows[n - 2]);
        let row: Vec<BigInt> = (0..n as isize)
            .map(|k| at(prev, k) + at(prev, k - 1) + at(prev2, k) - at(prev2, k - 1))
            .collect();
        rows.push(row);
    }
    rows.truncate(n_max + 1);
    rows
}

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        Err(domain("n must be at least 1"))
    } else {
        Ok(())
    }
}

/// `A(n,·)`: partitions of perimeter `n` by number of repeated parts.
pub fn table_a(n: usize) -> Result<CountTable> {
    check_n(n)?;
    Ok(CountTable::from_row(n, &four_term_rows(n)[n], 0))
}

/// `B(n,·)`: partitions of perimeter `n` by number of even parts. Same
/// recurrence and initial value as `A`.
pub fn table_b(n: usize) -> Result<CountTable> {
    check_n(n)?;
    Ok(CountTable::from_row(n, &four_term_rows(n)[n], 0))
}

/// `C(n,·)` for `k = 1..=n`: number of k-extraordinary subsets of `[n]`.
///
/// Grimaldi's recursion `C(n,k) = C(n-1,k) + Σ_{i=1}^{k} C(n-k-2+i, i)` is used
/// for `k < n`; the diagonal `C(n,n) = 1` (the set `[n]` itself) is seeded
/// directly, since with zero extension the recursion's only out-of-range term
/// on the diagonal is `C(-1,1)`.
pub fn table_c(n: usize) -> Result<CountTable> {
    check_n(n)?;
    // rows[m][k] for 0 <= k <= m; index 0 unused
    let mut rows: Vec<Vec<BigInt>> = vec![vec![BigInt::zero()]];
    for m in 1..=n {
        let mut row = vec![BigInt::zero(); m + 1];
        row[m] = BigInt::one();
        for (k, slot) in row.iter_mut().enumerate().take(m).skip(1) {
            let mut value = lookup_c(&rows, m as isize - 1, k);
            for i in 1..=k {
                value += lookup_c(&rows, m as isize - k as isize - 2 + i as isize, i);
            }
            *slot = value;
        }
        rows.push(row);
    }
    Ok(CountTable::from_row(n, &rows[n][1..], 1))
}

fn lookup_c(rows: &[Vec<BigInt>], m: isize, k: usize) -> BigInt {
    if m < 1 || k == 0 || k > m as usize {
        return BigInt::zero();
    }
    rows[m as usize][k].clone()
}

/// Univariate polynomial in `p` with big-integer coefficients, lowest degree first.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigInt {
        self.coeffs.get(k).cloned().unwrap_or_default()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Horner evaluation.
    pub fn eval(&self, at: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * at + c)
    }
}

impl Add for &IntPolynomial {
    type Output = IntPolynomial;

    fn add(self, rhs: &IntPolynomial) -> IntPolynomial {
        let len = self.coeffs.len().max(rhs.coeffs.len());
        IntPolynomial::new((0..len).map(|k| self.coeff(k) + rhs.coeff(k)).collect())
    }
}

impl Neg for &IntPolynomial {
    type Output = IntPolynomial;

    fn neg(self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Sub for &IntPolynomial {
    type Output = IntPolynomial;

    fn sub(self, rhs: &IntPolynomial) -> IntPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &IntPolynomial {
    type Output = IntPolynomial;

    fn mul(self, rhs: &IntPolynomial) -> IntPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return IntPolynomial::default();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        IntPolynomial::new(out)
    }
}

impl fmt::Display for IntPolynomial {
    /// Ascending powers of `p`, e.g. `-1+p` or `p-p^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            write_term(f, c, &monomial_p(k), first)?;
            first = false;
        }
        Ok(())
    }
}

fn monomial_p(k: usize) -> String {
    match k {
        0 => String::new(),
        1 => "p".into(),
        _ => format!("p^{k}"),
    }
}

/// Writes `±c·m` with unit coefficients elided.
pub(crate) fn write_term(
    f: &mut impl fmt::Write,
    coeff: &BigInt,
    monomial: &str,
    first: bool,
) -> fmt::Result {
    let negative = coeff.is_negative();
    if negative {
        f.write_str("-")?;
    } else if !first {
        f.write_str("+")?;
    }
    let magnitude = coeff.abs();
    if monomial.is_empty() {
        write!(f, "{magnitude}")
    } else if magnitude.is_one() {
        f.write_str(monomial)
    } else {
        write!(f, "{magnitude}*{monomial}")
    }
}

/// `h_n(p) = Σ_{Γ(λ)=n} (-1)^{ℓ(λ)} p^{rep(λ)}` from
/// `h_n = (1-p)(h_{n-1} - h_{n-2})`, `h_1 = -1`, `h_2 = p - 1`.
pub fn h_poly(n: usize) -> Result<IntPolynomial> {
    check_n(n)?;
    let one_minus_p = IntPolynomial::from_i64(&[1, -1]);
    let mut older = IntPolynomial::from_i64(&[-1]);
    if n == 1 {
        return Ok(older);
    }
    let mut newer = IntPolynomial::from_i64(&[-1, 1]);
    for _ in 3..=n {
        let next = &one_minus_p * &(&newer - &older);
        older = std::mem::replace(&mut newer, next);
    }
    Ok(newer)
}

/// Predicted `h_n(0)`: `(-1)^m` when `n ∈ {3m-2, 3m-1}`, else 0.
pub fn h_at_zero_pattern(n: usize) -> i64 {
    match n % 3 {
        0 => 0,
        _ => {
            let m = n.div_ceil(3);
            if m.is_multiple_of(2) {
                1
            } else {
                -1
            }
        }
    }
}

fn pow2(e: usize) -> BigInt {
    BigInt::one() << e
}

/// Total number of odd parts over `H_n`: `(n+2)·2^(n-3)`.
pub fn a_odd(n: usize) -> Result<BigInt> {
    if n < 2 {
        return Err(domain("the odd-part total is stated for n >= 2"));
    }
    Ok((BigInt::from(n + 2) << n) >> 3)
}

/// Total number of even parts over `H_n`: `n·2^(n-3)`.
pub fn a_even(n: usize) -> Result<BigInt> {
    if n < 2 {
        return Err(domain("the even-part total is stated for n >= 2"));
    }
    Ok((BigInt::from(n) << n) >> 3)
}

/// `Σ_{λ∈H_n} dif_d(λ) = (n-1)·2^(n-2) − (n-d-1)·2^(n-d-2)` for `1 ≤ d ≤ n-1`.
///
/// For `d ≥ n` every adjacent gap is below `d`, so the sum saturates at
/// `(n-1)·2^(n-2)`; that value is returned only when `allow_degenerate` is set.
pub fn sum_dif(n: usize, d: usize, allow_degenerate: bool) -> Result<BigInt> {
    check_n(n)?;
    if d == 0 {
        return Err(domain("d must be at least 1"));
    }
    // (n-1)·2^(n-2), exact at n = 1 where it is 0
    let full = (BigInt::from(n - 1) << n) >> 2;
    if d >= n {
        if !allow_degenerate {
            return Err(domain(format!(
                "closed form is stated for 1 <= d <= n-1 (n={n}, d={d}); pass the degenerate flag for the saturated value"
            )));
        }
        return Ok(full);
    }
    let tail = (BigInt::from(n - d - 1) << (n - d)) >> 2;
    Ok(full - tail)
}

/// The same total assembled from boundary segments: a `1` at position `i` and
/// the next `1` at `i + j` (`j ≤ d`) contribute `(n-j-1)·2^(n-j-2)` words when
/// `i + j < n` and `2^(n-j-1)` words when `i + j = n`.
pub fn sum_dif_by_segments(n: usize, d: usize) -> Result<BigInt> {
    check_n(n)?;
    if d == 0 {
        return Err(domain("d must be at least 1"));
    }
    let mut total = BigInt::zero();
    for j in 1..=d.min(n - 1) {
        if n - j >= 2 {
            total += BigInt::from(n - j - 1) * pow2(n - j - 2);
        }
        total += pow2(n - j - 1);
    }
    Ok(total)
}

/// `F_1 = F_2 = 1`.
pub fn fibonacci(n: usize) -> Result<BigUint> {
    check_n(n)?;
    let (mut a, mut b) = (BigUint::one(), BigUint::one());
    for _ in 2..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
    }
    Ok(if n == 1 { a } else { b })
}
