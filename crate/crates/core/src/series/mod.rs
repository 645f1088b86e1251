//! Truncated formal power series and the generating functions built on them.

pub mod gf;
pub mod poly;
pub mod truncated;

pub use gf::{
    bino_comparison, delta_series, difference_identity_check, gf_dif, gf_dist_even_bivariate,
    gf_mod, gf_rep_even, parse_substitutions, substitute, sum_series_dif, sum_series_mod,
    DeltaSeries, GeneratingFunction, SeriesParams, SeriesRegistry,
};
pub use poly::{Polynomial, Var};
pub use truncated::{series_geq, RationalExpr, TruncatedSeries, XyPoly};
