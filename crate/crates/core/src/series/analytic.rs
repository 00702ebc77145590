//! Evaluation in the right half-plane and the coefficient-side operators built on it.

use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use super::{DirichletSeries, ExactSeries, FloatSeries};
use crate::arith::first_primes;
use crate::error::{Error, Result};
use crate::scalar::{ExactComplex, Scalar, C64};

/// Relative slack for the `|f(s)| <= C_{s,r} ‖f‖₂` check.
pub const LEMMA_REL_SLACK: f64 = 1e-9;

/// A point `s = σ + it`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HalfPlanePoint {
    pub sigma: f64,
    pub t: f64,
}

impl HalfPlanePoint {
    pub fn new(sigma: f64, t: f64) -> Self {
        HalfPlanePoint { sigma, t }
    }

    pub fn to_complex(self) -> C64 {
        C64::new(self.sigma, self.t)
    }

    pub fn from_complex(z: C64) -> Self {
        HalfPlanePoint { sigma: z.re, t: z.im }
    }
}

/// Truncated value and a bound on the neglected tail.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EvalResult {
    pub value: C64,
    /// `+∞` when no bound is available.
    pub tail_bound: f64,
}

/// `n^{-s} = exp(-s log n)`.
pub fn n_pow_neg(n: u64, s: C64) -> C64 {
    if n == 1 {
        return C64::new(1.0, 0.0);
    }
    (-s * (n as f64).ln()).exp()
}

/// `Σ_{n<=N} a_n n^{-s}`.
///
/// `residual_l2` is the ℓ² mass of the coefficients beyond `N`. `None` treats the
/// series as an exact Dirichlet polynomial (tail 0). With a residual, Cauchy–Schwarz
/// and `Σ_{n>N} n^{-2σ} <= N^{1-2σ}/(2σ-1)` bound the tail when `σ > 1/2`.
pub fn evaluate<K: Scalar>(f: &DirichletSeries<K>, s: HalfPlanePoint, residual_l2: Option<f64>) -> EvalResult {
    let z = s.to_complex();
    let value = f
        .nonzero_terms()
        .map(|(n, a)| a.to_c64() * n_pow_neg(n, z))
        .sum();
    let tail_bound = match residual_l2 {
        None | Some(0.0) => 0.0,
        Some(r) if s.sigma > 0.5 => {
            let n = f.truncation() as f64;
            r * (n.powf(1.0 - 2.0 * s.sigma) / (2.0 * s.sigma - 1.0)).sqrt()
        }
        Some(_) => f64::INFINITY,
    };
    EvalResult { value, tail_bound }
}

/// `C_{s,r} = (Π_{j<=r} (1 - p_j^{-2σ})^{-1})^{1/2}`, the norm of point evaluation
/// at `s` on Dirichlet polynomials built from the first `r` primes.
pub fn euler_constant(s: HalfPlanePoint, r: usize) -> Result<f64> {
    if s.sigma <= 0.0 || s.sigma.is_nan() {
        return Err(Error::Domain(format!("euler_constant needs sigma > 0, got {}", s.sigma)));
    }
    let product: f64 = first_primes(r)
        .into_iter()
        .map(|p| 1.0 / (1.0 - (p as f64).powf(-2.0 * s.sigma)))
        .product();
    Ok(product.sqrt())
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LemmaCheck {
    pub value_abs: f64,
    pub bound: f64,
    pub holds: bool,
}

/// Compare `|f(s)|` with `C_{s,r} ‖f‖₂`; `f` must live on `{p_1^{k_1}⋯p_r^{k_r}}`.
pub fn lemma_bound<K: Scalar>(f: &DirichletSeries<K>, s: HalfPlanePoint, r: usize) -> Result<LemmaCheck> {
    let primes = first_primes(r);
    for (n, _) in f.nonzero_terms() {
        let mut m = n;
        for &p in &primes {
            while m % p == 0 {
                m /= p;
            }
        }
        if m != 1 {
            return Err(Error::SupportViolation(n));
        }
    }
    let value_abs = evaluate(f, s, None).value.norm();
    let bound = euler_constant(s, r)? * f.l2_norm();
    let holds = value_abs <= bound * (1.0 + LEMMA_REL_SLACK) + f64::MIN_POSITIVE;
    Ok(LemmaCheck { value_abs, bound, holds })
}

pub fn lemma_bound_check<K: Scalar>(f: &DirichletSeries<K>, s: HalfPlanePoint, r: usize) -> Result<bool> {
    lemma_bound(f, s, r).map(|c| c.holds)
}

/// `⟨f, g⟩ = Σ a_n conj(b_n)` on the common truncation.
pub fn inner_product<K: Scalar, L: Scalar>(f: &DirichletSeries<K>, g: &DirichletSeries<L>) -> C64 {
    f.coeffs()
        .iter()
        .zip(g.coeffs())
        .filter(|(a, _)| !a.is_zero())
        .map(|(a, b)| a.to_c64() * b.to_c64().conj())
        .sum()
}

fn map_indexed(f: &FloatSeries, mut weight: impl FnMut(u64) -> C64) -> FloatSeries {
    DirichletSeries {
        coeffs: f
            .coeffs()
            .iter()
            .enumerate()
            .map(|(i, a)| if Scalar::is_zero(a) { *a } else { a * weight(i as u64 + 1) })
            .collect(),
        support: f.support.clone(),
    }
}

/// `(T_t f)(s) = f(s + it)`: coefficients `a_n n^{-it}`.
pub fn vertical_translate(f: &FloatSeries, t: f64) -> FloatSeries {
    if t == 0.0 {
        return f.clone();
    }
    map_indexed(f, |n| n_pow_neg(n, C64::new(0.0, t)))
}

/// `f(s + a)`: coefficients `a_n n^{-a}`.
pub fn shift_abscissa(f: &FloatSeries, a: C64) -> FloatSeries {
    if a == C64::new(0.0, 0.0) {
        return f.clone();
    }
    map_indexed(f, |n| n_pow_neg(n, a))
}

/// Exact shift by a nonnegative integer abscissa: coefficients `a_n / n^k`.
pub fn shift_abscissa_int(f: &ExactSeries, k: u32) -> ExactSeries {
    let coeffs = f
        .coeffs()
        .iter()
        .enumerate()
        .map(|(i, a)| {
            let scale = num::BigRational::new(1.into(), num::BigInt::from(i as u64 + 1).pow(k));
            ExactComplex::new(&a.re * &scale, &a.im * &scale)
        })
        .collect();
    DirichletSeries { coeffs, support: f.support.clone() }
}

/// Triangular Fejér multiplier `max(1 - log(n)/m, 0)`.
pub fn fejer_weight(n: u64, m: f64) -> f64 {
    if n == 1 {
        return 1.0;
    }
    (1.0 - (n as f64).ln() / m).max(0.0)
}

/// Multiply coefficients by the Fejér weight; the result vanishes for `n >= e^m`.
pub fn fejer_smooth(f: &FloatSeries, m: f64) -> Result<FloatSeries> {
    if m.is_nan() || m <= 0.0 {
        return Err(Error::Domain(format!("fejer_smooth needs m > 0, got {m}")));
    }
    Ok(map_indexed(f, |n| C64::new(fejer_weight(n, m), 0.0)))
}

/// `max(|f(s)|` over the grid, `max_n |a_n|)`: a lower bound for the sup norm on `Re s > 0`.
pub fn sup_norm_lower_bound<K: Scalar>(f: &DirichletSeries<K>, grid: &[HalfPlanePoint]) -> Result<f64> {
    let mut best = f.max_abs_coeff();
    for &s in grid {
        if s.sigma.is_nan() || s.sigma <= 0.0 {
            return Err(Error::Domain(format!("grid point sigma = {} is not in Re s > 0", s.sigma)));
        }
        best = best.max(evaluate(f, s, None).value.norm());
    }
    Ok(best)
}

/// Largest `‖f g‖₂` over random unit-norm `g` supported on the support of `f`
/// (or on all of `[1..N]` without a declared support).
pub fn multiplier_ratio_max(f: &FloatSeries, trials: usize, seed: u64) -> Result<f64> {
    if trials == 0 {
        return Err(Error::Domain("trials must be >= 1".into()));
    }
    let n = f.truncation();
    let slots: Vec<u64> = match f.support() {
        Some(sv) => sv.members().take_while(|&k| k as usize <= n).collect(),
        None => (1..=n as u64).collect(),
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut best: f64 = 0.0;
    for _ in 0..trials {
        let mut coeffs = vec![C64::new(0.0, 0.0); n];
        for &k in &slots {
            let re: f64 = StandardNormal.sample(&mut rng);
            let im: f64 = StandardNormal.sample(&mut rng);
            coeffs[k as usize - 1] = C64::new(re, im);
        }
        let mut g = FloatSeries::new(coeffs)?;
        let norm = g.l2_norm();
        if norm == 0.0 {
            continue;
        }
        g = g.scale(&C64::new(1.0 / norm, 0.0));
        if let Some(sv) = f.support() {
            g = g.with_support(Arc::clone(sv))?;
        }
        best = best.max(f.convolve(&g)?.l2_norm());
    }
    Ok(best)
}
