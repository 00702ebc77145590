//! Seeded random series, for experiments and tests.

use std::sync::Arc;

use num::{BigInt, BigRational, Complex};
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::Result;
use crate::scalar::{ExactComplex, Scalar, C64};
use crate::semigroup::MembershipSieve;
use crate::series::{DirichletSeries, ExactSeries, FloatSeries};

/// Small random rational in `[-bound, bound]` with denominator in `1..=den`.
pub fn small_rational<R: Rng + ?Sized>(rng: &mut R, bound: i64, den: i64) -> BigRational {
    let num = rng.gen_range(-bound * den..=bound * den);
    BigRational::new(BigInt::from(num), BigInt::from(rng.gen_range(1..=den)))
}

pub fn small_exact<R: Rng + ?Sized>(rng: &mut R, bound: i64, den: i64) -> ExactComplex {
    Complex::new(small_rational(rng, bound, den), small_rational(rng, bound, den))
}

pub fn gaussian<R: Rng + ?Sized>(rng: &mut R) -> C64 {
    C64::new(rng.sample(StandardNormal), rng.sample(StandardNormal))
}

/// A series on `[1..n]` whose coefficients are drawn by `draw` on the members of
/// `sv`, each kept with probability `density`; the result carries `sv` as support.
pub fn random_supported<K: Scalar, R: Rng + ?Sized>(
    sv: &Arc<MembershipSieve>,
    n: usize,
    density: f64,
    rng: &mut R,
    mut draw: impl FnMut(&mut R) -> K,
) -> Result<DirichletSeries<K>> {
    let mut coeffs = vec![K::zero(); n];
    for k in sv.members().take_while(|&k| k as usize <= n) {
        if rng.gen_bool(density) {
            coeffs[k as usize - 1] = draw(rng);
        }
    }
    DirichletSeries::new(coeffs)?.with_support(Arc::clone(sv))
}

pub fn random_exact<R: Rng + ?Sized>(sv: &Arc<MembershipSieve>, n: usize, density: f64, rng: &mut R) -> Result<ExactSeries> {
    random_supported(sv, n, density, rng, |r| small_exact(r, 5, 4))
}

pub fn random_float<R: Rng + ?Sized>(sv: &Arc<MembershipSieve>, n: usize, density: f64, rng: &mut R) -> Result<FloatSeries> {
    random_supported(sv, n, density, rng, gaussian)
}

/// As [`random_exact`] but with `a_1 = 1`, so the series is invertible.
pub fn random_exact_unit<R: Rng + ?Sized>(sv: &Arc<MembershipSieve>, n: usize, density: f64, rng: &mut R) -> Result<ExactSeries> {
    let mut f = random_exact(sv, n, density, rng)?;
    f.set_coeff(1, ExactComplex::one())?;
    Ok(f)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::semigroup::{sieve, SemigroupSpec};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn seeded_and_supported() {
        let sv = Arc::new(sieve(&SemigroupSpec::CoprimeTo(6), 300).unwrap());
        let a = random_exact(&sv, 300, 0.5, &mut ChaCha8Rng::seed_from_u64(9)).unwrap();
        let b = random_exact(&sv, 300, 0.5, &mut ChaCha8Rng::seed_from_u64(9)).unwrap();
        assert_eq!(a, b);
        assert!(a.support_indices().iter().all(|&k| k % 2 != 0 && k % 3 != 0));
        let u = random_exact_unit(&sv, 50, 0.3, &mut ChaCha8Rng::seed_from_u64(1)).unwrap();
        assert_eq!(u.coeff(1), ExactComplex::one());
    }
}
