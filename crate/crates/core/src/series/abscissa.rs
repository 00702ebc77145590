//! Heuristic finite-N estimates of the abscissas of convergence and absolute convergence.
//!
//! When the abscissa is `>= 0`, `σ_c = limsup log|Σ_{n<=x} a_n| / log x`, and
//! likewise `σ_a` with `|a_n|`. The limsup is approximated by the maximum of the
//! quotient over the last decade `[N/10, N]`, and the spread of the quotient over
//! that window is reported as a band.

use serde::Serialize;

use super::DirichletSeries;
use crate::scalar::{Scalar, C64};

/// Below this truncation the estimate is always flagged.
pub const ABSCISSA_MIN_N: usize = 16;
/// Band width above which the estimate is flagged.
pub const ABSCISSA_BAND_LIMIT: f64 = 0.5;

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct AbscissaEstimate {
    pub sigma_c: f64,
    pub band_c: f64,
    pub sigma_a: f64,
    pub band_a: f64,
    /// False when `N` is too small, a band exceeds the limit, or the window has
    /// no nonzero coefficient (a finite series, whose true abscissas are `-∞`).
    pub reliable: bool,
    /// `σ_a <= σ_c + 1 + max(band)`.
    pub consistent: bool,
}

fn window_stats(partial: &[f64], start: usize) -> (f64, f64) {
    let mut hi = f64::NEG_INFINITY;
    let mut lo = f64::INFINITY;
    for (i, &a) in partial.iter().enumerate().skip(start) {
        let x = (i + 1) as f64;
        if a > 0.0 && x > 1.0 {
            let q = a.ln() / x.ln();
            hi = hi.max(q);
            lo = lo.min(q);
        }
    }
    if hi.is_finite() {
        (hi, hi - lo)
    } else {
        (f64::NEG_INFINITY, 0.0)
    }
}

pub fn abscissa_estimates<K: Scalar>(f: &DirichletSeries<K>) -> AbscissaEstimate {
    let n = f.truncation();
    let mut sum = C64::new(0.0, 0.0);
    let mut abs_sum = 0.0;
    let mut partial = Vec::with_capacity(n);
    let mut partial_abs = Vec::with_capacity(n);
    for c in f.coeffs() {
        let c = c.to_c64();
        sum += c;
        abs_sum += c.norm();
        partial.push(sum.norm());
        partial_abs.push(abs_sum);
    }
    let start = (n / 10).max(1);
    let (sigma_c, band_c) = window_stats(&partial, start);
    let (sigma_a, band_a) = window_stats(&partial_abs, start);
    let tail_live = f.coeffs()[start..].iter().any(|c| !c.is_zero());
    let band = band_c.max(band_a);
    let reliable = n >= ABSCISSA_MIN_N && band <= ABSCISSA_BAND_LIMIT && tail_live;
    let consistent = sigma_a == f64::NEG_INFINITY || sigma_a <= sigma_c + 1.0 + band;
    AbscissaEstimate { sigma_c, band_c, sigma_a, band_a, reliable, consistent }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::FloatSeries;

    #[test]
    fn zeta_abscissa_is_one() {
        let z = FloatSeries::from_fn(10_000, |_| C64::new(1.0, 0.0)).unwrap();
        let est = abscissa_estimates(&z);
        assert!((est.sigma_c - 1.0).abs() < 1e-12);
        assert!((est.sigma_a - 1.0).abs() < 1e-12);
        assert!(est.reliable && est.consistent);
    }

    #[test]
    fn alternating_series() {
        let f = FloatSeries::from_fn(10_000, |n| C64::new(if n % 2 == 1 { 1.0 } else { -1.0 }, 0.0)).unwrap();
        let est = abscissa_estimates(&f);
        assert!(est.sigma_c.abs() < 1e-12);
        assert!((est.sigma_a - 1.0).abs() < 1e-12);
        assert!(est.consistent);
    }

    #[test]
    fn finite_series_is_flagged() {
        let one = FloatSeries::unit(100).unwrap();
        let est = abscissa_estimates(&one);
        assert!(est.sigma_c <= 0.0 && est.sigma_a <= 0.0);
        assert!(!est.reliable);
        let short = FloatSeries::from_fn(8, |_| C64::new(1.0, 0.0)).unwrap();
        assert!(!abscissa_estimates(&short).reliable);
    }
}
