//! Lacunary zeta functions, their reproducing kernels and principal-character L-series.

use std::sync::Arc;

use super::analytic::{n_pow_neg, HalfPlanePoint};
use super::{DirichletSeries, FloatSeries};
use crate::arith::gcd;
use crate::error::{Error, Result};
use crate::scalar::{Scalar, C64};
use crate::semigroup::{sieve, MembershipSieve, SemigroupSpec};

fn check_truncation(sv: &MembershipSieve, n: usize) -> Result<()> {
    if n == 0 || n > sv.bound() {
        return Err(Error::Domain(format!("truncation {n} outside [1..{}]", sv.bound())));
    }
    Ok(())
}

/// `ζ_S = Σ_{n∈S} n^{-s}` truncated at `n`, carrying `S` as its support.
pub fn zeta_s<K: Scalar>(sv: &Arc<MembershipSieve>, n: usize) -> Result<DirichletSeries<K>> {
    check_truncation(sv, n)?;
    DirichletSeries::from_fn(n, |k| if sv.contains(k) { K::one() } else { K::zero() })?
        .with_support(Arc::clone(sv))
}

/// Kernel at `a` as a series in `s`: `ζ_S(s + ā)`, coefficients `n^{-ā}` on `S`.
pub fn kernel_series(sv: &Arc<MembershipSieve>, a: HalfPlanePoint, n: usize) -> Result<FloatSeries> {
    check_truncation(sv, n)?;
    let abar = a.to_complex().conj();
    FloatSeries::from_fn(n, |k| if sv.contains(k) { n_pow_neg(k, abar) } else { C64::new(0.0, 0.0) })?
        .with_support(Arc::clone(sv))
}

/// `Σ_{n∈S, n<=N} n^{-(s+ā)}`.
pub fn kernel_eval(sv: &MembershipSieve, s: HalfPlanePoint, a: HalfPlanePoint, n: usize) -> Result<C64> {
    check_truncation(sv, n)?;
    let z = s.to_complex() + a.to_complex().conj();
    Ok(sv.members().take_while(|&k| k as usize <= n).map(|k| n_pow_neg(k, z)).sum())
}

/// Principal character mod `m`: 1 if `gcd(n, m) = 1`, else 0.
pub fn principal_character(m: u64, n: u64) -> u8 {
    u8::from(gcd(n, m) == 1)
}

/// `L(s, χ₀) = Σ χ₀(n) n^{-s}`, i.e. `ζ_{S_m}`.
pub fn l_series<K: Scalar>(m: u64, n: usize) -> Result<DirichletSeries<K>> {
    let sv = Arc::new(sieve(&SemigroupSpec::coprime_to(m)?, n)?);
    zeta_s(&sv, n)
}
