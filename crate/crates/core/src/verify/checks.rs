use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::fmt::Display;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde_json::Value;

use super::{CheckParams, Outcome, Param, TheoremCheck};
use crate::bijection::{
    phi_d, phi_d_inverse, phi_inverse_on_partition, phi_on_partition, xi, xi_complement,
};
use crate::boundary::BoundarySequence;
use crate::counting::{
    a_even, a_odd, fibonacci, h_at_zero_pattern, h_poly, sum_dif, sum_dif_by_segments, table_a,
    table_b, table_c, IntPolynomial,
};
use crate::enumerate::{enum_extraordinary, enum_labeled_d, enum_perimeter, enum_size};
use crate::error::Result;
use crate::partition::{LabeledPartition, Partition};
use crate::series::{
    bino_comparison, delta_series, difference_identity_check, gf_dif, gf_dist_even_bivariate,
    gf_mod, gf_rep_even, sum_series_dif, sum_series_mod, Polynomial, TruncatedSeries, Var,
};

fn class(n: usize) -> Result<Vec<Partition>> {
    Ok(enum_perimeter(n)?.collect())
}

fn counts(values: impl Iterator<Item = usize>) -> Vec<u64> {
    let mut out: Vec<u64> = Vec::new();
    for v in values {
        if out.len() <= v {
            out.resize(v + 1, 0);
        }
        out[v] += 1;
    }
    out
}

fn strings<T: Display>(values: &[T]) -> Value {
    Value::from(values.iter().map(ToString::to_string).collect::<Vec<_>>())
}

/// Compares two coefficient lists, failing at the first differing index.
fn same_distribution(out: &mut Outcome, a: &[u64], b: &[u64]) {
    let len = a.len().max(b.len());
    for k in 0..len {
        let (x, y) = (
            a.get(k).copied().unwrap_or(0),
            b.get(k).copied().unwrap_or(0),
        );
        if x != y {
            out.fail(format!("t^{k}: {x} vs {y}"));
            return;
        }
    }
}

fn mono(v: Var, k: usize) -> Polynomial {
    Polynomial::var_pow(v, k as u32)
}

fn xy_index(i: usize, j: Option<usize>) -> String {
    match j {
        None => format!("x^{i}"),
        Some(j) => format!("x^{i}*y^{j}"),
    }
}

/// `Σ_{λ∈H_n} weight(λ)` for `n = 0..=order`.
fn perimeter_sums(
    order: usize,
    weight: impl Fn(&Partition) -> Polynomial,
) -> Result<Vec<Polynomial>> {
    let mut sums = vec![Polynomial::zero()];
    for n in 1..=order {
        let mut total = Polynomial::zero();
        for lambda in enum_perimeter(n)? {
            total += &weight(&lambda);
        }
        sums.push(total);
    }
    Ok(sums)
}

fn compare_univariate(
    out: &mut Outcome,
    label: &str,
    series: &TruncatedSeries,
    expected: &[Polynomial],
) {
    for (i, want) in expected.iter().enumerate() {
        if series.coeff(i) != want {
            out.fail(format!(
                "{label} {}: {} vs {want}",
                xy_index(i, None),
                series.coeff(i)
            ));
            return;
        }
    }
}

/// `Σ weight(λ) x^ℓ y^λ₁` over partitions with `ℓ + λ₁ ≤ order`, compared on
/// every monomial of total degree `≤ order`.
fn compare_bivariate(
    out: &mut Outcome,
    label: &str,
    series: &TruncatedSeries,
    order: usize,
    weight: impl Fn(&Partition) -> Polynomial,
) -> Result<()> {
    let mut expected: BTreeMap<(usize, usize), Polynomial> = BTreeMap::new();
    for n in 1..order {
        for lambda in enum_perimeter(n)? {
            let key = (lambda.len(), lambda.largest() as usize);
            *expected.entry(key).or_default() += &weight(&lambda);
        }
    }
    for i in 0..=order {
        for j in 0..=order - i {
            let want = expected.remove(&(i, j)).unwrap_or_default();
            if *series.coeff_xy(i, j) != want {
                out.fail(format!(
                    "{label} {}: {} vs {want}",
                    xy_index(i, Some(j)),
                    series.coeff_xy(i, j)
                ));
                return Ok(());
            }
        }
    }
    Ok(())
}

macro_rules! check {
    ($ty:ident, $name:literal, [$($p:ident),*]) => {
        struct $ty;
        impl $ty {
            const NAME: &'static str = $name;
            const PARAMS: &'static [Param] = &[$(Param::$p),*];
        }
    };
}

check!(Straub, "straub", [N]);
check!(FuTang, "fu-tang", [N, D]);
check!(RepEven, "rep-even", [N]);
check!(RepEvenValued, "rep-even-valued", [N]);
check!(Wilf, "wilf", [N]);
check!(Ineq, "ineq", [N, D]);
check!(Codec, "codec", [N]);
check!(Phi, "phi", [N]);
check!(PhiD, "phi-d", [N, D]);
check!(Xi, "xi", [N, D]);
check!(XiImage, "xi-complement", [N, D]);
check!(Recurrences, "recurrences", [N]);
check!(HPoly, "h-poly", [N]);
check!(PartTotals, "part-totals", [N]);
check!(SumDif, "sum-dif", [N, D]);
check!(SeriesRepEven, "series-rep-even", [Order]);
check!(SeriesD, "series-d", [D, Order]);
check!(Positivity, "positivity", [D, Order]);

macro_rules! identity {
    () => {
        fn name(&self) -> &'static str {
            Self::NAME
        }
        fn params(&self) -> &'static [Param] {
            Self::PARAMS
        }
    };
}

impl TheoremCheck for Straub {
    identity!();

    fn evaluate(&self, p: &CheckParams) -> Result<Outcome> {
        let h = class(p.n)?;
        let odd = h
            .iter()
            .filter(|l| l.parts().iter().all(|v| v % 2 == 1))
            .count();
        let distinct = h
            .iter()
            .filter(|l| l.parts().windows(2).all(|w| w[0] != w[1]))
            .count();
        let mut out = Outcome::new();
        out.detail("all_odd", odd).detail("distinct", distinct);
        out.require(odd == distinct, || {
            format!("all-odd {odd} vs distinct {distinct}")
        });
        Ok(out)
    }
}

impl TheoremCheck for FuTang {
    identity!();

    fn evaluate(&self, p: &CheckParams) -> Result<Outcome> {
        let h = class(p.n)?;
        let no_mod = h.iter().filter(|l| l.mod_prime(p.d) == 0).count();
        let no_dif = h.iter().filter(|l| l.dif(p.d) == 0).count();
        let mut out = Outcome::new();
        out.detail("mod_prime_zero", no_mod)
            .detail("dif_zero", no_dif);
        out.require(no_mod == no_dif, || {
            format!("mod'_{} zero {no_mod} vs dif_{} zero {no_dif}", p.d, p.d)
        });
        Ok(out)
    }
}

fn equidistribution(
    population: &[Partition],
    (left, f): (&str, fn(&Partition) -> usize),
    (right, g): (&str, fn(&Partition) -> usize),
) -> Outcome {
    let a = counts(population.iter().map(f));
    let b = counts(population.iter().map(g));
    let mut out = Outcome::new();
    out.detail(left, strings(&a)).detail(right, strings(&b));
    same_distribution(&mut out, &a, &b);
    out
}

impl TheoremCheck for RepEven {
    identity!();

    fn evaluate(&self, p: &CheckParams) -> Result<Outcome> {
        Ok(equidistribution(
            &class(p.n)?,
            ("rep", Partition::rep),
            ("even", Partition::even),
        ))
    }
}

impl TheoremCheck for RepEvenValued {
    identity!();

    fn evaluate(&self, p: &CheckParams) -> Result<Outcome> {
        Ok(equidistribution(
            &class(p.n)?,
            ("rep*", Partition::rep_star),
            ("even*", Partition::even_star),
        ))
    }
}

impl TheoremCheck for Wilf {
    identity!();

    fn evaluate(&self, p: &CheckParams) -> Result<Outcome> {
        let all: Vec<Partition> = enum_size(p.n)?.collect();
        let mut out = equidistribution(
            &all,
            ("rep*", Partition::rep_star),
            ("even*", Partition::even_star),
        );
        out.detail("partitions", all.len());
        Ok(out)
    }
}

impl TheoremCheck for Ineq {
    identity!();

    fn evaluate(&self, p: &CheckParams) -> Result<Outcome> {
        let h = class(p.n)?;
        let dif: usize = h.iter().map(|l| l.dif(p.d)).sum();
        let modp: usize = h.iter().map(|l| l.mod_prime(p.d)).sum();
        let complement = xi_complement(p.n, p.d)?;
        let mut out = Outcome::new();
        out.detail("sum_dif", dif)
            .detail("sum_mod_prime", modp)
            .detail("slack", dif as i64 - modp as i64)
            .detail("complement", complement.by_difference.len());
        out.require(dif >= modp, || {
            format!("sum dif_{} {dif} < sum mod'_{} {modp}", p.d, p.d)
        });
        out.require(
            dif.saturating_sub(modp) == complement.by_difference.len(),
            || {
                format!(
                    "slack {} vs complement size {}",
                    dif.saturating_sub(modp),
                    complement.by_difference.len()
                )
            },
        );
        Ok(out)
    }
}

impl TheoremCheck for Codec {
    identity!();

    fn evaluate(&self, p: &CheckParams) -> Result<Outcome> {
        let n = p.n;
        let mut out = Outcome::new();
        let mut seen = HashSet::new();
        for lambda in enum_perimeter(n)? {
            let ok = lambda.perimeter()? == n && seen.insert(lambda.clone());
            out.require(ok, || format!("enumeration repeats or misplaces {lambda}"));
        }
        out.require(seen.len() as u64 == 1u64 << (n - 1), || {
            format!("{} partitions enumerated", seen.len())
        });
        for mask in 0..1u64 << (n - 1) {
            let w = BoundarySequence::from_mask(n, mask);
            let lambda = w.to_partition();
            let mut ok = BoundarySequence::from_partition(&lambda) == w
                && seen.contains(&lambda)
                && w.rep() == lambda.rep()
                && w.even() == lambda.even()
                && w.ones() == lambda.len();
            for d in 1..=3 {
                ok &= w.dif(d) == lambda.dif(d) && w.mod_prime(d) == lambda.mod_prime(d);
            }
            out.require(ok, || w.to_string());
        }
        out.detail("words", seen.len());
        Ok(out)
    }
}

/// Permutation, round trip and the statistic relation for one `d`.
fn check_phi(
    n: usize,
    d: usize,
    relation: impl Fn(&Partition, &Partition) -> bool,
) -> Result<Outcome> {
    let mut out = Outcome::new();
    let mut images = HashSet::new();
    let mut total = 0u64;
    for lambda in enum_perimeter(n)? {
        total += 1;
        let image = phi_on_partition(&lambda, d)?;
        let back = phi_inverse_on_partition(&image, d)?;
        let word = BoundarySequence::from_partition(&lambda);
        let word_ok = phi_d_inverse(&phi_d(&word, d)?, d)? == word;
        let ok = image.perimeter()? == n && back == lambda && word_ok && relation(&lambda, &image);
        out.require(ok, || lambda.to_string());
        images.insert(image);
    }
    out.require(images.len() as u64 == total, || {
        format!("{} distinct images of {total}", images.len())
    });
    out.detail("partitions", total);
    Ok(out)
}

impl TheoremCheck for Phi {
    identity!();

    fn evaluate(&self, p: &CheckParams) -> Result<Outcome> {
        check_phi(p.n, 1, |l, img| {
            l.rep() == img.even() && l.rep_star() == img.even_star()
        })
    }
}

impl TheoremCheck for PhiD {
    identity!();

    fn evaluate(&self, p: &CheckParams) -> Result<Outcome> {
        let d = p.d;
        check_phi(p.n, d, |l, img| {
            let (a, b) = (l.dif(d), img.mod_prime(d));
            a >= b && ((a == 0) == (b == 0))
        })
    }
}

/// `D_{n,d}` and `M_{n,d}` straight from their definitions.
fn labeled_sets(n: usize, d: u64) -> Result<(BTreeSet<LabeledPartition>, Vec<LabeledPartition>)> {
    let m = d + 1;
    let mut d_set = BTreeSet::new();
    let mut m_set = Vec::new();
    for lambda in enum_perimeter(n)? {
        let parts = lambda.parts();
        for i in 1..=parts.len() {
            if i >= 2 && parts[i - 2] - parts[i - 1] < d {
                d_set.insert(LabeledPartition::new(lambda.clone(), i)?);
            }
            if parts[i - 1] % m != 1 {
                m_set.push(LabeledPartition::new(lambda.clone(), i)?);
            }
        }
    }
    Ok((d_set, m_set))
}

/// `D_{n,d}` minus the image of `ξ`, failing on any element of `M_{n,d}`
/// whose image is outside `D_{n,d}`, has the wrong star, or collides.
fn xi_missed(
    out: &mut Outcome,
    d_set: &BTreeSet<LabeledPartition>,
    m_set: &[LabeledPartition],
    d: usize,
) -> Result<BTreeSet<LabeledPartition>> {
    let mut image = HashSet::new();
    for lp in m_set {
        let img = xi(lp, d)?;
        let ok = d_set.contains(&img) && img.star() == lp.star() + 1 && image.insert(img);
        out.require(ok, || lp.to_string());
    }
    Ok(d_set
        .iter()
        .filter(|lp| !image.contains(*lp))
        .cloned()
        .collect())
}

impl TheoremCheck for Xi {
    identity!();

    fn evaluate(&self, p: &CheckParams) -> Result<Outcome> {
        let (d_set, m_set) = labeled_sets(p.n, p.d as u64)?;
        let mut out = Outcome::new();
        let missed = xi_missed(&mut out, &d_set, &m_set, p.d)?;
        let module = xi_complement(p.n, p.d)?;
        out.require(module.by_difference == missed, || {
            "complement from the bijection module differs".into()
        });
        out.require(missed.len() + m_set.len() == d_set.len(), || {
            "complement size".into()
        });
        out.detail("d_size", d_set.len())
            .detail("m_size", m_set.len())
            .detail("complement", missed.len());
        Ok(out)
    }
}

impl TheoremCheck for XiImage {
    identity!();

    /// The complement of the image against the residue characterization
    /// `λ_{i-1} ≡ 1`, `λ_i ≢ 1 (mod d+1)`.
    fn evaluate(&self, p: &CheckParams) -> Result<Outcome> {
        let m = p.d as u64 + 1;
        let (d_set, m_set) = labeled_sets(p.n, p.d as u64)?;
        let mut out = Outcome::new();
        let missed = xi_missed(&mut out, &d_set, &m_set, p.d)?;
        let predicted: BTreeSet<_> = d_set
            .iter()
            .filter(|lp| lp.part_or_zero(lp.star() - 1) % m == 1 && lp.starred_part() % m != 1)
            .cloned()
            .collect();
        if let Some(lp) = missed.symmetric_difference(&predicted).next() {
            out.fail(lp.to_string());
        }
        let module = xi_complement(p.n, p.d)?;
        out.require(module.direct == predicted, || {
            "characterization from the bijection module differs".into()
        });
        let listing = |set: &BTreeSet<LabeledPartition>| {
            Value::from(set.iter().map(ToString::to_string).collect::<Vec<_>>())
        };
        out.detail("complement", listing(&missed))
            .detail("characterized", listing(&predicted));
        Ok(out)
    }
}

impl TheoremCheck for Recurrences {
    identity!();

    fn evaluate(&self, p: &CheckParams) -> Result<Outcome> {
        let n = p.n;
        let h = class(n)?;
        let rep = counts(h.iter().map(Partition::rep));
        let even = counts(h.iter().map(Partition::even));
        let (a, b, c) = (table_a(n)?, table_b(n)?, table_c(n)?);
        let mut out = Outcome::new();
        for k in 0..n {
            let big = |v: &[u64]| BigInt::from(v.get(k).copied().unwrap_or(0));
            out.require(a.get(k) == big(&rep), || format!("A({n},{k})"));
            out.require(b.get(k) == big(&even), || format!("B({n},{k})"));
            out.require(a.get(k) == c.get(k + 1), || format!("C({n},{})", k + 1));
        }
        for k in 1..=n {
            let subsets = enum_extraordinary(n, k)?.count();
            out.require(c.get(k) == BigInt::from(subsets), || {
                format!("C({n},{k}) vs {subsets} subsets")
            });
        }
        out.detail("a", strings(&a.dense()))
            .detail("c", strings(&(1..=n).map(|k| c.get(k)).collect::<Vec<_>>()));
        Ok(out)
    }
}

impl TheoremCheck for HPoly {
    identity!();

    fn evaluate(&self, p: &CheckParams) -> Result<Outcome> {
        let n = p.n;
        let mut signed = vec![BigInt::zero(); n];
        for lambda in enum_perimeter(n)? {
            let sign = if lambda.len() % 2 == 0 { 1 } else { -1 };
            signed[lambda.rep()] += sign;
        }
        let enumerated = IntPolynomial::new(signed);
        let h = h_poly(n)?;
        let mut out = Outcome::new();
        out.detail("h", h.to_string());
        out.require(h == enumerated, || {
            format!("recurrence {h} vs enumeration {enumerated}")
        });
        out.require(n < 3 || h.eval(&BigInt::one()).is_zero(), || "h(1)".into());
        out.require(
            h.eval(&BigInt::zero()) == BigInt::from(h_at_zero_pattern(n)),
            || "h(0)".into(),
        );
        let at_two = h.eval(&BigInt::from(2)).abs();
        out.require(at_two == BigInt::from(fibonacci(n)?), || {
            format!("|h(2)| = {at_two}")
        });
        Ok(out)
    }
}

impl TheoremCheck for PartTotals {
    identity!();

    fn evaluate(&self, p: &CheckParams) -> Result<Outcome> {
        let h = class(p.n)?;
        let odd: usize = h.iter().map(Partition::odd_parts).sum();
        let even: usize = h.iter().map(Partition::even).sum();
        let mut out = Outcome::new();
        out.detail("odd_parts", odd).detail("even_parts", even);
        if p.n >= 2 {
            out.require(a_odd(p.n)? == BigInt::from(odd), || {
                format!("odd total {odd}")
            });
            out.require(a_even(p.n)? == BigInt::from(even), || {
                format!("even total {even}")
            });
        }
        Ok(out)
    }
}

impl TheoremCheck for SumDif {
    identity!();

    fn evaluate(&self, p: &CheckParams) -> Result<Outcome> {
        let total: usize = class(p.n)?.iter().map(|l| l.dif(p.d)).sum();
        let labeled = enum_labeled_d(p.n, p.d)?.count();
        let closed = sum_dif(p.n, p.d, true)?;
        let mut out = Outcome::new();
        out.detail("sum_dif", total)
            .detail("degenerate", p.d >= p.n);
        out.require(labeled == total, || format!("|D| {labeled} vs sum {total}"));
        out.require(closed == BigInt::from(total), || {
            format!("closed form {closed} vs {total}")
        });
        out.require(sum_dif_by_segments(p.n, p.d)? == closed, || {
            "segment sum".into()
        });
        Ok(out)
    }
}

impl TheoremCheck for SeriesRepEven {
    identity!();

    fn evaluate(&self, p: &CheckParams) -> Result<Outcome> {
        let order = p.order;
        let mut out = Outcome::new();
        let gf = gf_rep_even(order)?;
        let want = perimeter_sums(order, |l| {
            Polynomial::monomial(1, [l.rep() as u32, l.even() as u32, 0])
        })?;
        compare_univariate(&mut out, "rep-even", &gf, &want);

        let one = BigInt::one();
        let at_q1 = gf.eval_var(Var::Q, &one);
        let dif1 = gf_dif(1, order, None)?.map_coeffs(|c| c.rename(Var::T, Var::P));
        out.require(at_q1 == dif1, || "rep-even at q=1 vs dif_1".into());
        let at_p1 = gf.eval_var(Var::P, &one);
        let mod1 = gf_mod(1, order, None)?.map_coeffs(|c| c.rename(Var::T, Var::Q));
        out.require(at_p1 == mod1, || "rep-even at p=1 vs mod'_1".into());

        let xy = gf_dist_even_bivariate(order, order)?;
        compare_bivariate(&mut out, "dist-even", &xy, order, |l| {
            Polynomial::monomial(1, [l.dist() as u32, l.even() as u32, 0])
        })?;
        out.detail("order", order);
        Ok(out)
    }
}

impl TheoremCheck for SeriesD {
    identity!();

    fn evaluate(&self, p: &CheckParams) -> Result<Outcome> {
        let (d, order) = (p.d, p.order);
        let mut out = Outcome::new();
        let modp = gf_mod(d, order, None)?;
        compare_univariate(
            &mut out,
            "mod",
            &modp,
            &perimeter_sums(order, |l| mono(Var::T, l.mod_prime(d)))?,
        );
        let dif = gf_dif(d, order, None)?;
        compare_univariate(
            &mut out,
            "dif",
            &dif,
            &perimeter_sums(order, |l| mono(Var::T, l.dif(d)))?,
        );
        let sum_m = sum_series_mod(d, order)?;
        let sum_d = sum_series_dif(d, order)?;
        let totals = |f: &dyn Fn(&Partition) -> usize| {
            perimeter_sums(order, |l| Polynomial::constant(BigUint::from(f(l))))
        };
        compare_univariate(&mut out, "sum-mod", &sum_m, &totals(&|l| l.mod_prime(d))?);
        compare_univariate(&mut out, "sum-dif", &sum_d, &totals(&|l| l.dif(d))?);
        out.require(modp.derivative_at_one(Var::T) == sum_m, || {
            "t-derivative of mod".into()
        });
        out.require(dif.derivative_at_one(Var::T) == sum_d, || {
            "t-derivative of dif".into()
        });

        let mod_xy = gf_mod(d, order, Some(order))?;
        compare_bivariate(&mut out, "mod-xy", &mod_xy, order, |l| {
            mono(Var::T, l.mod_count(d))
        })?;
        let dif_xy = gf_dif(d, order, Some(order))?;
        compare_bivariate(&mut out, "dif-xy", &dif_xy, order, |l| {
            mono(Var::T, l.dif(d))
        })?;
        out.detail("sum_mod", strings(&sum_m.integer_coeffs()?))
            .detail("sum_dif", strings(&sum_d.integer_coeffs()?));
        Ok(out)
    }
}

impl TheoremCheck for Positivity {
    identity!();

    fn min_d(&self) -> usize {
        0
    }

    fn evaluate(&self, p: &CheckParams) -> Result<Outcome> {
        let (d, order) = (p.d, p.order);
        let delta = delta_series(d, order)?;
        let coeffs = delta.series.integer_coeffs()?;
        let mut out = Outcome::new();
        out.detail("delta_prefix", strings(&coeffs[..coeffs.len().min(8)]));
        if let Some(i) = coeffs.iter().position(|c| c.is_negative()) {
            out.fail(xy_index(i, None));
        }
        if d >= 1 {
            out.require(bino_comparison(d, order)?, || "binomial comparison".into());
            out.require(difference_identity_check(d, order)?, || {
                "difference identity".into()
            });
        }
        Ok(out)
    }
}

pub fn all_checks() -> Vec<Box<dyn TheoremCheck>> {
    vec![
        Box::new(Straub),
        Box::new(FuTang),
        Box::new(RepEven),
        Box::new(RepEvenValued),
        Box::new(Wilf),
        Box::new(Ineq),
        Box::new(Codec),
        Box::new(Phi),
        Box::new(PhiD),
        Box::new(Xi),
        Box::new(XiImage),
        Box::new(Recurrences),
        Box::new(HPoly),
        Box::new(PartTotals),
        Box::new(SumDif),
        Box::new(SeriesRepEven),
        Box::new(SeriesD),
        Box::new(Positivity),
    ]
}

#[cfg(test)]
mod tests {
    use super::super::check;
    use super::*;

    fn run(name: &str, n: usize, d: usize, order: usize) -> super::super::VerificationReport {
        check(name, &CheckParams::new(n, d, order)).unwrap()
    }

    #[test]
    fn known_examples() {
        let r = run("straub", 5, 0, 0);
        assert!(r.passed());
        assert_eq!(r.details["all_odd"], 5);
        let r = run("rep-even", 5, 0, 0);
        assert_eq!(
            r.details["rep"],
            serde_json::json!(["5", "5", "4", "1", "1"])
        );
        assert_eq!(r.details["even"], r.details["rep"]);
        let r = run("ineq", 6, 2, 0);
        assert!(r.passed());
        assert_eq!(
            (r.details["slack"].clone(), r.details["complement"].clone()),
            (4.into(), 4.into())
        );
        let r = run("ineq", 4, 2, 0);
        assert_eq!(
            (r.details["sum_dif"].clone(), r.details["slack"].clone()),
            (11.into(), 0.into())
        );
        assert!(run("fu-tang", 10, 3, 0).passed());
        assert!(run("wilf", 20, 0, 0).passed());
        assert_eq!(run("wilf", 20, 0, 0).details["partitions"], 627);
    }

    #[test]
    fn xi_complement_listing() {
        let r = run("xi-complement", 6, 2, 0);
        assert!(r.passed(), "{:?}", r.witness);
        let listed: Vec<&str> = r.details["complement"]
            .as_array()
            .unwrap()
            .iter()
            .map(|v| v.as_str().unwrap())
            .collect();
        assert_eq!(listed.len(), 4);
        for want in ["4,3*,1", "4,3*,2", "4,4,3*", "4,3*,3"] {
            assert!(listed.contains(&want), "{want}");
        }
        assert_eq!(run("xi", 6, 2, 0).details["complement"], 4);
    }

    #[test]
    fn residue_characterization_breaks_at_d3() {
        let r = run("xi-complement", 7, 3, 0);
        assert!(!r.passed());
        assert_eq!(r.witness.as_deref(), Some("6,4*"));
        let r = run("xi", 7, 3, 0);
        assert!(r.passed());
        assert_eq!(r.details["complement"], 10);
        assert_eq!(run("ineq", 7, 3, 0).details["slack"], 10);
    }

    #[test]
    fn equidistribution_failure_has_witness() {
        let population: Vec<Partition> = ["2,2", "2"].iter().map(|s| s.parse().unwrap()).collect();
        let out = equidistribution(
            &population,
            ("rep", Partition::rep),
            ("odd", Partition::odd_parts),
        );
        assert_eq!(out.witness.as_deref(), Some("t^0: 1 vs 2"));
    }
}
