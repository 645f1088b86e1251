//! The named generating functions, as rational expressions in `x` (and `y`).
//!
//! The nested form of the (dist, even) function by length and largest part is
//! cleared once into a single fraction. With
//! `E = (1-x)(1-qx) - (1-x+px)(1-qx+pqx)y²` it reads
//!
//! ```text
//! pxy·E + (pqx(1-x) + pxy(1-qx+pqx))(1-x+px)y²
//! --------------------------------------------
//!                  (1-x)·E
//! ```

use std::collections::BTreeMap;

use num_bigint::BigInt;

use super::poly::Var;
use super::truncated::{series_geq, RationalExpr, TruncatedSeries, XyPoly};
use crate::error::{domain, Result};

fn x() -> XyPoly {
    XyPoly::x()
}

fn y() -> XyPoly {
    XyPoly::y()
}

fn one() -> XyPoly {
    XyPoly::one()
}

fn int(c: i64) -> XyPoly {
    XyPoly::int(c)
}

fn p() -> XyPoly {
    XyPoly::var(Var::P)
}

fn q() -> XyPoly {
    XyPoly::var(Var::Q)
}

fn t() -> XyPoly {
    XyPoly::var(Var::T)
}

fn check_d(d: usize) -> Result<()> {
    if d == 0 {
        Err(domain("d must be at least 1"))
    } else {
        Ok(())
    }
}

fn check_order(order: usize) -> Result<()> {
    if order == 0 {
        Err(domain("order must be at least 1"))
    } else {
        Ok(())
    }
}

fn pow(base: &XyPoly, d: usize) -> XyPoly {
    base.pow(d as u32)
}

/// `Σ p^rep q^even x^Γ`.
pub fn rep_even_expr() -> RationalExpr {
    let num = x() * (one() - (p() - one()) * q() * (x().pow(2) + x()));
    let den = one()
        - p() * (one() + q()) * x()
        - (one() - p().pow(2) * q()) * x().pow(2)
        - (one() - p()) * (one() + q()) * x().pow(3)
        - (p() - one()).pow(2) * q() * x().pow(4);
    RationalExpr::new(num, den).expect("unit constant term")
}

/// `Σ p^dist q^even x^ℓ y^λ₁` over nonempty partitions.
pub fn dist_even_expr() -> RationalExpr {
    let one_x = one() - x();
    let a = one() - x() + p() * x();
    let b = one() - q() * x() + p() * q() * x();
    let e = &one_x * &(one() - q() * x()) - &a * &b * y().pow(2);
    let num = p() * x() * y() * e.clone()
        + (p() * q() * x() * one_x.clone() + p() * x() * y() * b) * a * y().pow(2);
    RationalExpr::new(num, one_x * e).expect("unit constant term")
}

/// `Σ t^{mod'_d} x^Γ`.
pub fn mod_expr(d: usize) -> Result<RationalExpr> {
    check_d(d)?;
    let one_tx_d = pow(&(one() - t() * x()), d);
    let num = x() * (t() * x().pow(d as u32 + 1) + one_tx_d.clone() * (x() - one()));
    let den = (one() - x() - t() * x()) * (one_tx_d * (x() - one()) + x().pow(d as u32 + 1));
    RationalExpr::new(num, den)
}

/// `Σ t^{mod_d} x^ℓ y^λ₁` over nonempty partitions.
pub fn mod_bivariate_expr(d: usize) -> Result<RationalExpr> {
    check_d(d)?;
    let one_x_d = pow(&(one() - x()), d);
    let xy1 = x() + y() - one();
    let num = t() * x() * y() * one_x_d.clone() * xy1.clone()
        + x() * y() * (y().pow(d as u32 + 1) - y() * one_x_d.clone());
    let den = xy1 * ((one() - t() * x()) * one_x_d - y().pow(d as u32 + 1));
    RationalExpr::new(num, den)
}

/// `Σ t^{dif_d} x^Γ`.
pub fn dif_expr(d: usize) -> Result<RationalExpr> {
    check_d(d)?;
    let den = one() - x() - t() * x() * (one() - x().pow(d as u32)) - x().pow(d as u32 + 1);
    RationalExpr::new(x(), den)
}

/// `Σ t^{dif_d} x^ℓ y^λ₁` over nonempty partitions.
pub fn dif_bivariate_expr(d: usize) -> Result<RationalExpr> {
    check_d(d)?;
    let yd = y().pow(d as u32);
    let den = one() - y() - t() * x() * (one() - yd.clone()) - x() * yd;
    RationalExpr::new(x() * y(), den)
}

/// `Σ_n (Σ_{H_n} mod'_d) x^n`.
pub fn sum_mod_expr(d: usize) -> Result<RationalExpr> {
    check_d(d)?;
    let e = d as u32 + 1;
    let num = x() * (one() - x()) * (x().pow(e) - x() * pow(&(one() - x()), d));
    let den = (one() - int(2) * x()).pow(2) * (x().pow(e) - (one() - x()).pow(e));
    RationalExpr::new(num, den)
}

/// `Σ_n (Σ_{H_n} dif_d) x^n`.
pub fn sum_dif_expr(d: usize) -> Result<RationalExpr> {
    check_d(d)?;
    let num = x().pow(2) * (one() - x().pow(d as u32));
    RationalExpr::new(num, (one() - int(2) * x()).pow(2))
}

pub fn gf_rep_even(order: usize) -> Result<TruncatedSeries> {
    check_order(order)?;
    rep_even_expr().expand(order, None)
}

/// Rectangular in `x` (length) and `y` (largest part).
pub fn gf_dist_even_bivariate(order_x: usize, order_y: usize) -> Result<TruncatedSeries> {
    check_order(order_x)?;
    check_order(order_y)?;
    dist_even_expr().expand(order_x, Some(order_y))
}

/// Univariate by perimeter, or bivariate by length and largest part when
/// `order_y` is given.
pub fn gf_mod(d: usize, order: usize, order_y: Option<usize>) -> Result<TruncatedSeries> {
    check_order(order)?;
    match order_y {
        None => mod_expr(d)?.expand(order, None),
        Some(m) => mod_bivariate_expr(d)?.expand(order, Some(m)),
    }
}

pub fn gf_dif(d: usize, order: usize, order_y: Option<usize>) -> Result<TruncatedSeries> {
    check_order(order)?;
    match order_y {
        None => dif_expr(d)?.expand(order, None),
        Some(m) => dif_bivariate_expr(d)?.expand(order, Some(m)),
    }
}

pub fn sum_series_mod(d: usize, order: usize) -> Result<TruncatedSeries> {
    sum_mod_expr(d)?.expand(order, None)
}

pub fn sum_series_dif(d: usize, order: usize) -> Result<TruncatedSeries> {
    sum_dif_expr(d)?.expand(order, None)
}

/// `1/(1-2x)`.
fn geometric_two(order: usize) -> TruncatedSeries {
    RationalExpr::new(one(), one() - int(2) * x())
        .and_then(|e| e.expand(order, None))
        .expect("unit constant term")
}

/// `Δ_d` with its nonnegativity flag.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeltaSeries {
    pub series: TruncatedSeries,
    pub nonnegative: bool,
}

/// `Δ_d = 1/((1-x)^{d+1} - x^{d+1}) - 1/(1-2x)`, defined for every `d ≥ 0`.
pub fn delta_series(d: usize, order: usize) -> Result<DeltaSeries> {
    let e = d as u32 + 1;
    let first = RationalExpr::new(one(), (one() - x()).pow(e) - x().pow(e))?.expand(order, None)?;
    let series = first.try_sub(&geometric_two(order))?;
    let nonnegative = series.is_nonnegative()?;
    Ok(DeltaSeries {
        series,
        nonnegative,
    })
}

/// `x/(1-x)^d ≥_x x^d/(1-x)^d`.
pub fn bino_comparison(d: usize, order: usize) -> Result<bool> {
    check_d(d)?;
    let den = pow(&(one() - x()), d);
    let f = RationalExpr::new(x(), den.clone())?.expand(order, None)?;
    let g = RationalExpr::new(x().pow(d as u32), den)?.expand(order, None)?;
    series_geq(&f, &g)
}

/// Checks that `sum_dif − sum_mod` equals both
/// `x^{d+2}(1-2x+x^{d+1}-(1-x)^{d+1}) / ((1-2x)²((1-x)^{d+1}-x^{d+1}))`
/// and `x^{d+2}/(1-2x) · Δ_d`.
pub fn difference_identity_check(d: usize, order: usize) -> Result<bool> {
    check_d(d)?;
    let difference = sum_series_dif(d, order)?.try_sub(&sum_series_mod(d, order)?)?;
    let e = d as u32 + 1;
    let closed = RationalExpr::new(
        x().pow(e + 1) * (one() - int(2) * x() + x().pow(e) - (one() - x()).pow(e)),
        (one() - int(2) * x()).pow(2) * ((one() - x()).pow(e) - x().pow(e)),
    )?
    .expand(order, None)?;
    let shift = RationalExpr::new(x().pow(e + 1), one())?.expand(order, None)?;
    let factored = shift
        .try_mul(&geometric_two(order))?
        .try_mul(&delta_series(d, order)?.series)?;
    Ok(difference == closed && difference == factored)
}

/// Parameters shared by every named generating function.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SeriesParams {
    pub d: Option<usize>,
    pub order: usize,
    pub order_y: Option<usize>,
}

impl SeriesParams {
    fn d(&self) -> Result<usize> {
        self.d.ok_or_else(|| domain("this series needs --d"))
    }

    fn univariate(&self, name: &str) -> Result<()> {
        match self.order_y {
            Some(_) => Err(domain(format!("{name} is univariate; drop the y order"))),
            None => Ok(()),
        }
    }
}

pub trait GeneratingFunction: Send + Sync {
    fn name(&self) -> &'static str;
    fn description(&self) -> &'static str;
    fn expand(&self, params: &SeriesParams) -> Result<TruncatedSeries>;
}

struct RepEven;
struct DistEvenXy;
struct Mod;
struct Dif;
struct SumMod;
struct SumDif;
struct Delta;

impl GeneratingFunction for RepEven {
    fn name(&self) -> &'static str {
        "rep-even"
    }
    fn description(&self) -> &'static str {
        "sum of p^rep q^even x^perimeter"
    }
    fn expand(&self, params: &SeriesParams) -> Result<TruncatedSeries> {
        params.univariate(self.name())?;
        gf_rep_even(params.order)
    }
}

impl GeneratingFunction for DistEvenXy {
    fn name(&self) -> &'static str {
        "dist-even-xy"
    }
    fn description(&self) -> &'static str {
        "sum of p^dist q^even x^length y^largest"
    }
    fn expand(&self, params: &SeriesParams) -> Result<TruncatedSeries> {
        gf_dist_even_bivariate(params.order, params.order_y.unwrap_or(params.order))
    }
}

impl GeneratingFunction for Mod {
    fn name(&self) -> &'static str {
        "mod"
    }
    fn description(&self) -> &'static str {
        "sum of t^mod'_d x^perimeter, or t^mod_d x^length y^largest with a y order"
    }
    fn expand(&self, params: &SeriesParams) -> Result<TruncatedSeries> {
        gf_mod(params.d()?, params.order, params.order_y)
    }
}

impl GeneratingFunction for Dif {
    fn name(&self) -> &'static str {
        "dif"
    }
    fn description(&self) -> &'static str {
        "sum of t^dif_d x^perimeter, or x^length y^largest with a y order"
    }
    fn expand(&self, params: &SeriesParams) -> Result<TruncatedSeries> {
        gf_dif(params.d()?, params.order, params.order_y)
    }
}

impl GeneratingFunction for SumMod {
    fn name(&self) -> &'static str {
        "sum-mod"
    }
    fn description(&self) -> &'static str {
        "total of mod'_d over each perimeter class"
    }
    fn expand(&self, params: &SeriesParams) -> Result<TruncatedSeries> {
        params.univariate(self.name())?;
        sum_series_mod(params.d()?, params.order)
    }
}

impl GeneratingFunction for SumDif {
    fn name(&self) -> &'static str {
        "sum-dif"
    }
    fn description(&self) -> &'static str {
        "total of dif_d over each perimeter class"
    }
    fn expand(&self, params: &SeriesParams) -> Result<TruncatedSeries> {
        params.univariate(self.name())?;
        sum_series_dif(params.d()?, params.order)
    }
}

impl GeneratingFunction for Delta {
    fn name(&self) -> &'static str {
        "delta"
    }
    fn description(&self) -> &'static str {
        "1/((1-x)^(d+1) - x^(d+1)) - 1/(1-2x)"
    }
    fn expand(&self, params: &SeriesParams) -> Result<TruncatedSeries> {
        params.univariate(self.name())?;
        Ok(delta_series(params.d()?, params.order)?.series)
    }
}

/// Named generating functions, selectable at runtime.
pub struct SeriesRegistry {
    entries: BTreeMap<&'static str, Box<dyn GeneratingFunction>>,
}

impl SeriesRegistry {
    pub fn empty() -> Self {
        Self {
            entries: BTreeMap::new(),
        }
    }

    pub fn register(&mut self, gf: Box<dyn GeneratingFunction>) {
        self.entries.insert(gf.name(), gf);
    }

    pub fn get(&self, name: &str) -> Result<&dyn GeneratingFunction> {
        self.entries.get(name).map(|b| b.as_ref()).ok_or_else(|| {
            domain(format!(
                "unknown series {name:?}; known: {}",
                self.names().join(", ")
            ))
        })
    }

    pub fn names(&self) -> Vec<&'static str> {
        self.entries.keys().copied().collect()
    }
}

impl Default for SeriesRegistry {
    fn default() -> Self {
        let mut registry = Self::empty();
        registry.register(Box::new(RepEven));
        registry.register(Box::new(DistEvenXy));
        registry.register(Box::new(Mod));
        registry.register(Box::new(Dif));
        registry.register(Box::new(SumMod));
        registry.register(Box::new(SumDif));
        registry.register(Box::new(Delta));
        registry
    }
}

/// Parses `p=1,q=2` into substitutions.
pub fn parse_substitutions(spec: &str) -> Result<Vec<(Var, BigInt)>> {
    spec.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|item| {
            let (var, value) = item.split_once('=').ok_or_else(|| {
                crate::error::Error::Parse(format!("expected var=value, got {item:?}"))
            })?;
            let value: BigInt = value
                .trim()
                .parse()
                .map_err(|_| crate::error::Error::Parse(format!("not an integer: {value:?}")))?;
            Ok((var.parse()?, value))
        })
        .collect()
}

pub fn substitute(series: &TruncatedSeries, subs: &[(Var, BigInt)]) -> TruncatedSeries {
    subs.iter()
        .fold(series.clone(), |acc, (v, value)| acc.eval_var(*v, value))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::poly::Polynomial;

    fn ints(s: &TruncatedSeries) -> Vec<i64> {
        s.integer_coeffs()
            .unwrap()
            .iter()
            .map(|c| i64::try_from(c).unwrap())
            .collect()
    }

    fn text_at(s: &TruncatedSeries, v: Var, value: i64, n: usize) -> String {
        s.coeff(n).eval_var(v, &value.into()).to_string()
    }

    #[test]
    fn rep_even_coefficients() {
        let s = gf_rep_even(6).unwrap();
        assert!(s.coeff(1).is_one());
        assert_eq!(text_at(&s, Var::Q, 1, 5), "5+5*p+4*p^2+p^3+p^4");
        assert_eq!(text_at(&s, Var::P, 1, 5), "5+5*q+4*q^2+q^3+q^4");
    }

    #[test]
    fn dist_even_small_coefficients() {
        let s = gf_dist_even_bivariate(3, 3).unwrap();
        assert_eq!(s.coeff_xy(1, 1).to_string(), "p");
        assert_eq!(s.coeff_xy(2, 2).to_string(), "p*q^2+p^2*q");
        assert_eq!(s.coeff_xy(1, 2).to_string(), "p*q");
        assert!(s.coeff_xy(0, 0).is_zero());
    }

    #[test]
    fn mod_and_dif_at_d1() {
        let m = gf_mod(1, 6, None).unwrap();
        let f = gf_dif(1, 6, None).unwrap();
        assert_eq!(m.coeff(5).to_string(), "5+5*t+4*t^2+t^3+t^4");
        assert_eq!(f.coeff(5).to_string(), "5+5*t+4*t^2+t^3+t^4");
        assert!(m.coeff(1).is_one() && f.coeff(1).is_one());
    }

    #[test]
    fn sums() {
        assert_eq!(ints(&sum_series_dif(1, 5).unwrap())[5], 20);
        assert_eq!(ints(&sum_series_dif(2, 5).unwrap())[4], 11);
        assert_eq!(ints(&sum_series_mod(2, 5).unwrap())[4], 11);
    }

    #[test]
    fn derivative_matches_sum() {
        for d in 1..=4 {
            let via_t = gf_dif(d, 16, None).unwrap().derivative_at_one(Var::T);
            assert_eq!(via_t, sum_series_dif(d, 16).unwrap(), "dif d={d}");
            let via_t = gf_mod(d, 16, None).unwrap().derivative_at_one(Var::T);
            assert_eq!(via_t, sum_series_mod(d, 16).unwrap(), "mod d={d}");
        }
    }

    #[test]
    fn delta_displays() {
        let d2 = delta_series(2, 6).unwrap();
        assert_eq!(ints(&d2.series), vec![0, 1, 2, 3, 5, 10, 21]);
        assert!(d2.nonnegative);
        assert_eq!(
            ints(&delta_series(3, 6).unwrap().series),
            vec![0, 2, 6, 12, 20, 32, 56]
        );
        assert_eq!(
            ints(&delta_series(4, 6).unwrap().series),
            vec![0, 3, 11, 27, 54, 95, 156]
        );
        for d in 0..=1 {
            assert!(ints(&delta_series(d, 20).unwrap().series)
                .iter()
                .all(|&c| c == 0));
        }
    }

    #[test]
    fn comparisons() {
        assert!(bino_comparison(3, 30).unwrap());
        let f = geometric_two(30);
        let g = RationalExpr::new(one(), (one() - x()).pow(3) - x().pow(3))
            .unwrap()
            .expand(30, None)
            .unwrap();
        assert!(series_geq(&g, &f).unwrap());
        assert!(series_geq(&f, &f).unwrap());
    }

    #[test]
    fn difference_identity() {
        assert!(difference_identity_check(1, 20).unwrap());
        let diff = sum_series_dif(1, 20)
            .unwrap()
            .try_sub(&sum_series_mod(1, 20).unwrap())
            .unwrap();
        assert!(ints(&diff).iter().all(|&c| c == 0));
        assert!(difference_identity_check(2, 20).unwrap());
        assert!(difference_identity_check(5, 40).unwrap());
    }

    #[test]
    fn registry_lookup() {
        let registry = SeriesRegistry::default();
        assert_eq!(
            registry.names(),
            vec![
                "delta",
                "dif",
                "dist-even-xy",
                "mod",
                "rep-even",
                "sum-dif",
                "sum-mod"
            ]
        );
        let params = SeriesParams {
            d: Some(2),
            order: 6,
            order_y: None,
        };
        let s = registry.get("delta").unwrap().expand(&params).unwrap();
        assert_eq!(ints(&s), vec![0, 1, 2, 3, 5, 10, 21]);
        assert!(registry.get("nope").is_err());
        let no_d = SeriesParams {
            d: None,
            order: 6,
            order_y: None,
        };
        assert!(registry.get("mod").unwrap().expand(&no_d).is_err());
    }

    #[test]
    fn substitution_parsing() {
        let subs = parse_substitutions("p=1, q=2").unwrap();
        assert_eq!(subs, vec![(Var::P, 1.into()), (Var::Q, 2.into())]);
        assert!(parse_substitutions("z=1").is_err());
        assert!(parse_substitutions("p").is_err());
        let s = substitute(&gf_rep_even(3).unwrap(), &subs);
        assert_eq!(s.coeff(3).as_integer(), Some(BigInt::from(8)));
        assert_eq!(Polynomial::one().as_integer(), Some(BigInt::from(1)));
    }
}
