//! Truncated power series in `x` (optionally also `y`) with [`Polynomial`]
//! coefficients, and exact expansion of rational expressions.

use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed};

use super::poly::{Polynomial, Var};
use crate::error::{domain, Result};

/// Rectangular truncation: degrees `0..=order_x` in `x` and `0..=order_y` in `y`.
/// A univariate series has `order_y == None`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    order_x: usize,
    order_y: Option<usize>,
    coeffs: Vec<Polynomial>,
}

impl TruncatedSeries {
    pub fn zero(order_x: usize, order_y: Option<usize>) -> Self {
        let width = order_y.map_or(1, |m| m + 1);
        Self {
            order_x,
            order_y,
            coeffs: vec![Polynomial::zero(); (order_x + 1) * width],
        }
    }

    pub fn from_coeffs(coeffs: Vec<Polynomial>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(domain("a series needs at least one coefficient"));
        }
        Ok(Self {
            order_x: coeffs.len() - 1,
            order_y: None,
            coeffs,
        })
    }

    pub fn from_integers(values: &[i64]) -> Result<Self> {
        Self::from_coeffs(values.iter().map(|&v| Polynomial::constant(v)).collect())
    }

    pub fn order_x(&self) -> usize {
        self.order_x
    }

    pub fn order_y(&self) -> Option<usize> {
        self.order_y
    }

    pub fn is_bivariate(&self) -> bool {
        self.order_y.is_some()
    }

    fn width(&self) -> usize {
        self.order_y.map_or(1, |m| m + 1)
    }

    fn index(&self, i: usize, j: usize) -> usize {
        assert!(
            i <= self.order_x && j < self.width(),
            "index ({i},{j}) beyond truncation"
        );
        i * self.width() + j
    }

    /// Coefficient of `x^i` (of `x^i y^0` for a bivariate series).
    pub fn coeff(&self, i: usize) -> &Polynomial {
        self.coeff_xy(i, 0)
    }

    pub fn coeff_xy(&self, i: usize, j: usize) -> &Polynomial {
        &self.coeffs[self.index(i, j)]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Polynomial) {
        let k = self.index(i, j);
        self.coeffs[k] = value;
    }

    /// `((x_degree, y_degree), coefficient)` in row-major order.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), &Polynomial)> {
        let width = self.width();
        self.coeffs
            .iter()
            .enumerate()
            .map(move |(k, c)| ((k / width, k % width), c))
    }

    /// Apply `f` to every coefficient.
    pub fn map_coeffs(&self, f: impl Fn(&Polynomial) -> Polynomial) -> Self {
        Self {
            order_x: self.order_x,
            order_y: self.order_y,
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn eval_var(&self, v: Var, value: &BigInt) -> Self {
        self.map_coeffs(|c| c.eval_var(v, value))
    }

    /// `∂/∂v` followed by `v = 1`.
    pub fn derivative_at_one(&self, v: Var) -> Self {
        let one = BigInt::one();
        self.map_coeffs(|c| c.derivative(v).eval_var(v, &one))
    }

    /// Restrict to lower orders.
    pub fn truncate(&self, order_x: usize, order_y: Option<usize>) -> Result<Self> {
        match (self.order_y, order_y) {
            (None, None) | (Some(_), Some(_)) => {}
            _ => {
                return Err(domain(
                    "cannot change the number of variables by truncation",
                ))
            }
        }
        if order_x > self.order_x || order_y > self.order_y {
            return Err(domain("truncation orders exceed the available ones"));
        }
        let mut out = Self::zero(order_x, order_y);
        for i in 0..=order_x {
            for j in 0..out.width() {
                out.set(i, j, self.coeff_xy(i, j).clone());
            }
        }
        Ok(out)
    }

    /// All coefficients as integers; domain error if a marker variable survives.
    pub fn integer_coeffs(&self) -> Result<Vec<BigInt>> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| {
                c.as_integer().ok_or_else(|| {
                    let width = self.width();
                    domain(format!(
                        "coefficient at ({}, {}) is symbolic: {c}",
                        k / width,
                        k % width
                    ))
                })
            })
            .collect()
    }

    pub fn is_nonnegative(&self) -> Result<bool> {
        Ok(self.integer_coeffs()?.iter().all(|c| !c.is_negative()))
    }

    fn check_shape(&self, other: &Self) -> Result<()> {
        if self.order_x != other.order_x || self.order_y != other.order_y {
            return Err(domain(format!(
                "truncation orders differ: ({}, {:?}) vs ({}, {:?})",
                self.order_x, self.order_y, other.order_x, other.order_y
            )));
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self {
            coeffs,
            ..self.clone_shape()
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.try_add(&-other)
    }

    /// Truncated Cauchy product.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check_shape(other)?;
        let mut out = Self::zero(self.order_x, self.order_y);
        let width = self.width();
        for ((i1, j1), a) in self.entries().filter(|(_, c)| !c.is_zero()) {
            for i2 in 0..=self.order_x - i1 {
                for j2 in 0..width - j1 {
                    let b = other.coeff_xy(i2, j2);
                    if !b.is_zero() {
                        let k = out.index(i1 + i2, j1 + j2);
                        out.coeffs[k] += &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    fn clone_shape(&self) -> Self {
        Self {
            order_x: self.order_x,
            order_y: self.order_y,
            coeffs: Vec::new(),
        }
    }
}

impl Neg for &TruncatedSeries {
    type Output = TruncatedSeries;

    fn neg(self) -> TruncatedSeries {
        self.map_coeffs(|c| -c)
    }
}

/// `f ≥_x g`: every coefficient of `f − g` is a nonnegative integer.
pub fn series_geq(f: &TruncatedSeries, g: &TruncatedSeries) -> Result<bool> {
    f.try_sub(g)?.is_nonnegative()
}

/// Polynomial in `x`, `y` with [`Polynomial`] coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct XyPoly {
    terms: BTreeMap<(usize, usize), Polynomial>,
}

impl XyPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(Polynomial::one())
    }

    pub fn constant(c: Polynomial) -> Self {
        Self::term(c, 0, 0)
    }

    /// `c·x^i·y^j`.
    pub fn term(c: Polynomial, i: usize, j: usize) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((i, j), c);
        }
        Self { terms }
    }

    pub fn int(c: i64) -> Self {
        Self::constant(Polynomial::constant(c))
    }

    pub fn x() -> Self {
        Self::x_pow(1)
    }

    pub fn y() -> Self {
        Self::y_pow(1)
    }

    pub fn x_pow(k: usize) -> Self {
        Self::term(Polynomial::one(), k, 0)
    }

    pub fn y_pow(k: usize) -> Self {
        Self::term(Polynomial::one(), 0, k)
    }

    pub fn var(v: Var) -> Self {
        Self::constant(Polynomial::var(v))
    }

    pub fn coeff(&self, i: usize, j: usize) -> Polynomial {
        self.terms.get(&(i, j)).cloned().unwrap_or_default()
    }

    pub fn uses_y(&self) -> bool {
        self.terms.keys().any(|&(_, j)| j > 0)
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    fn add_term(&mut self, key: (usize, usize), c: Polynomial) {
        let entry = self.terms.entry(key).or_default();
        *entry += &c;
        if entry.is_zero() {
            self.terms.remove(&key);
        }
    }
}

impl Add for &XyPoly {
    type Output = XyPoly;

    fn add(self, rhs: &XyPoly) -> XyPoly {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c.clone());
        }
        out
    }
}

impl Neg for &XyPoly {
    type Output = XyPoly;

    fn neg(self) -> XyPoly {
        XyPoly {
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl Sub for &XyPoly {
    type Output = XyPoly;

    fn sub(self, rhs: &XyPoly) -> XyPoly {
        self + &(-rhs)
    }
}

impl Mul for &XyPoly {
    type Output = XyPoly;

    fn mul(self, rhs: &XyPoly) -> XyPoly {
        let mut out = XyPoly::zero();
        for ((i1, j1), a) in &self.terms {
            for ((i2, j2), b) in &rhs.terms {
                out.add_term((i1 + i2, j1 + j2), a * b);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for XyPoly {
            type Output = XyPoly;
            fn $method(self, rhs: XyPoly) -> XyPoly {
                (&self).$method(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for XyPoly {
    type Output = XyPoly;

    fn neg(self) -> XyPoly {
        -&self
    }
}

/// `numerator / denominator` with a unit constant term in the denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalExpr {
    numerator: XyPoly,
    denominator: XyPoly,
}

impl RationalExpr {
    /// Normalizes the denominator constant term to `+1`.
    pub fn new(numerator: XyPoly, denominator: XyPoly) -> Result<Self> {
        let c = denominator.coeff(0, 0).as_integer();
        match c.as_ref().map(|c| (c.is_one(), (-c).is_one())) {
            Some((true, _)) => Ok(Self {
                numerator,
                denominator,
            }),
            Some((_, true)) => Ok(Self {
                numerator: -numerator,
                denominator: -denominator,
            }),
            _ => Err(domain(format!(
                "denominator constant term must be +1 or -1, got {}",
                denominator.coeff(0, 0)
            ))),
        }
    }

    pub fn numerator(&self) -> &XyPoly {
        &self.numerator
    }

    pub fn denominator(&self) -> &XyPoly {
        &self.denominator
    }

    pub fn is_bivariate(&self) -> bool {
        self.numerator.uses_y() || self.denominator.uses_y()
    }

    /// Exact long division to orders `order_x` (and `order_y`).
    pub fn expand(&self, order_x: usize, order_y: Option<usize>) -> Result<TruncatedSeries> {
        if self.is_bivariate() && order_y.is_none() {
            return Err(domain("expression involves y; a y order is required"));
        }
        let mut out = TruncatedSeries::zero(order_x, order_y);
        let width = order_y.map_or(1, |m| m + 1);
        let divisor: Vec<_> = self
            .denominator
            .terms
            .iter()
            .filter(|(&(i, j), _)| (i, j) != (0, 0) && i <= order_x && j < width)
            .collect();
        for i in 0..=order_x {
            for j in 0..width {
                let mut value = self.numerator.coeff(i, j);
                for (&(a, b), c) in &divisor {
                    if a <= i && b <= j {
                        value -= &(*c * out.coeff_xy(i - a, j - b));
                    }
                }
                out.set(i, j, value);
            }
        }
        Ok(out)
    }
}
