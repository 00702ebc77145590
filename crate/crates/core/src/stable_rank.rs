//! Unimodular tuples with explicit Bézout cofactors.
//!
//! For distinct generators `q_1, …, q_{2n}` the tuple
//! `f_j = q_j^{-s}` (`j <= n`), `f_{n+1} = Π_{j<=n} (𝟏 - (q_j q_{n+j})^{-s})`
//! is unimodular: expanding the product gives `f_{n+1} = 𝟏 - Σ_j f_j g_j`, so with
//! `g_{n+1} = 𝟏` the cofactors satisfy `Σ f_j g_j = 𝟏`. Everything here is a
//! checkable certificate on a truncation; irreducibility is not decidable this way.

use std::sync::Arc;

use crate::arith::checked_product;
use crate::error::{Error, Result};
use crate::scalar::Scalar;
use crate::semigroup::{sieve, MembershipSieve, SemigroupSpec};
use crate::series::DirichletSeries;

/// Series `fs` and cofactors `gs` claimed to satisfy `Σ f_j g_j = 𝟏` on `[1..N]`.
#[derive(Debug, Clone, PartialEq)]
pub struct BezoutSystem<K> {
    /// Number of "free" entries; the tuple has `n + 1` entries.
    pub n: usize,
    pub generators: Vec<u64>,
    pub fs: Vec<DirichletSeries<K>>,
    pub gs: Vec<DirichletSeries<K>>,
    pub truncation: usize,
}

/// Outcome of [`verify_bezout`]; `residual = Σ f_j g_j - 𝟏`.
#[derive(Debug, Clone, PartialEq)]
pub struct BezoutVerdict<K> {
    pub holds: bool,
    pub residual: DirichletSeries<K>,
}

/// Smallest truncation that holds the full expansion: `Π_{j<=n} q_j q_{n+j}`.
pub fn required_truncation(q: &[u64]) -> Option<u64> {
    checked_product(q.iter().copied())
}

fn check_generators(q: &[u64], n: usize) -> Result<()> {
    if q.len() != 2 * n {
        return Err(Error::LengthMismatch { expected: 2 * n, got: q.len() });
    }
    let mut sorted = q.to_vec();
    sorted.sort_unstable();
    if sorted.iter().any(|&x| x < 2) || sorted.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::GeneratorsNotDistinct);
    }
    Ok(())
}

/// Build the tuple and its cofactors for `2n` generators.
///
/// Cofactors come from expanding `Π (𝟏 - (q_j q_{n+j})^{-s})` over nonempty subsets
/// `T ⊆ {1..n}`: the term for `T` is assigned to `g_j` with `j = min T`, after
/// factoring out `q_j^{-s}`. `truncation` defaults to the required bound; anything
/// smaller is rejected.
pub fn unimodular_tuple<K: Scalar>(q: &[u64], n: usize, truncation: Option<usize>) -> Result<BezoutSystem<K>> {
    check_generators(q, n)?;
    let required = required_truncation(q).ok_or(Error::InsufficientTruncation {
        given: truncation.unwrap_or(0),
        required: u64::MAX,
    })?;
    let big_n = match truncation {
        Some(t) if (t as u64) < required => {
            return Err(Error::InsufficientTruncation { given: t, required });
        }
        Some(t) => t,
        None => usize::try_from(required).map_err(|_| Error::ResourceLimit {
            requested: usize::MAX,
            ceiling: crate::semigroup::DEFAULT_MAX_N,
        })?,
    };
    let spec = if n == 0 { SemigroupSpec::Trivial } else { SemigroupSpec::generators(q.iter().copied())? };
    let support = Arc::new(sieve(&spec, big_n)?);

    let mono = |k: u64, c: K| -> Result<DirichletSeries<K>> {
        DirichletSeries::monomial(big_n, k, c)?.with_support(Arc::clone(&support))
    };
    let unit = mono(1, K::one())?;

    let mut fs = Vec::with_capacity(n + 1);
    let mut gs: Vec<DirichletSeries<K>> = Vec::with_capacity(n + 1);
    for &qj in &q[..n] {
        fs.push(mono(qj, K::one())?);
        gs.push(DirichletSeries::zero(big_n)?.with_support(Arc::clone(&support))?);
    }
    let mut last = unit.clone();
    for j in 0..n {
        last = last.convolve(&unit.sub(&mono(q[j] * q[n + j], K::one())?))?;
    }
    fs.push(last);

    for subset in 1u64..(1 << n) {
        let j = subset.trailing_zeros() as usize;
        let size = subset.count_ones();
        // term of the expansion is (-1)^|T| Π_{k∈T} (q_k q_{n+k})^{-s}
        let mut index = q[n + j];
        for k in (j + 1)..n {
            if subset & (1 << k) != 0 {
                index *= q[k] * q[n + k];
            }
        }
        let sign = if size % 2 == 1 { 1 } else { -1 };
        let old = gs[j].coeff(index);
        gs[j].set_coeff(index, old.add(&K::from_i64(sign)))?;
    }
    gs.push(unit);

    Ok(BezoutSystem { n, generators: q.to_vec(), fs, gs, truncation: big_n })
}

impl<K: Scalar> BezoutSystem<K> {
    /// A hand-assembled system with `n = fs.len() - 1`.
    pub fn from_parts(fs: Vec<DirichletSeries<K>>, gs: Vec<DirichletSeries<K>>) -> Result<Self> {
        if fs.is_empty() || fs.len() != gs.len() {
            return Err(Error::LengthMismatch { expected: fs.len().max(1), got: gs.len() });
        }
        let truncation = fs.iter().chain(&gs).map(DirichletSeries::truncation).min().unwrap_or(1);
        Ok(BezoutSystem { n: fs.len() - 1, generators: Vec::new(), fs, gs, truncation })
    }

    /// Checks that every series lives on the semigroup `spec`.
    pub fn check_within(&self, spec: &SemigroupSpec) -> Result<()> {
        for s in self.fs.iter().chain(&self.gs) {
            if let Some(n) = s.nonzero_terms().map(|(n, _)| n).find(|&n| !spec.contains(n)) {
                return Err(Error::SupportViolation(n));
            }
        }
        Ok(())
    }

    pub fn support(&self) -> Option<&Arc<MembershipSieve>> {
        self.fs.first().and_then(DirichletSeries::support)
    }
}

fn bezout_sum<K: Scalar>(pairs: impl Iterator<Item = Result<DirichletSeries<K>>>, n: usize) -> Result<DirichletSeries<K>> {
    let mut total = DirichletSeries::zero(n)?;
    for term in pairs {
        total = total.add(&term?);
    }
    Ok(total)
}

/// `Σ f_j g_j = 𝟏` exactly on `[1..N]`.
pub fn verify_bezout<K: Scalar>(sys: &BezoutSystem<K>) -> Result<BezoutVerdict<K>> {
    if sys.fs.len() != sys.gs.len() {
        return Err(Error::LengthMismatch { expected: sys.fs.len(), got: sys.gs.len() });
    }
    let total = bezout_sum(sys.fs.iter().zip(&sys.gs).map(|(f, g)| f.convolve(g)), sys.truncation)?;
    let residual = total.sub(&DirichletSeries::unit(total.truncation())?);
    let holds = residual.nonzero_terms().next().is_none();
    Ok(BezoutVerdict { holds, residual: residual.without_support() })
}

/// Checks a claimed reduction: `Σ_j (f_j + x_j f_{n+1}) y_j = 𝟏` on `[1..N]`.
///
/// A `true` answer on a truncation does not contradict irreducibility in the
/// bounded algebra; only `false` answers carry information here.
pub fn check_reduction_certificate<K: Scalar>(
    sys: &BezoutSystem<K>,
    xs: &[DirichletSeries<K>],
    ys: &[DirichletSeries<K>],
) -> Result<bool> {
    for list in [xs, ys] {
        if list.len() != sys.n {
            return Err(Error::LengthMismatch { expected: sys.n, got: list.len() });
        }
    }
    let last = &sys.fs[sys.n];
    let terms = (0..sys.n).map(|j| {
        let reduced = sys.fs[j].add(&xs[j].convolve(last)?);
        reduced.convolve(&ys[j])
    });
    let total = bezout_sum(terms, sys.truncation)?;
    Ok(total.is_unit_series())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{exact_int, ExactComplex};

    type Sys = BezoutSystem<ExactComplex>;

    #[test]
    fn two_three_system() {
        let sys: Sys = unimodular_tuple(&[2, 3], 1, None).unwrap();
        assert_eq!(sys.truncation, 6);
        assert_eq!(sys.fs[0].support_indices(), vec![2]);
        assert_eq!(sys.fs[1].coeff(1), exact_int(1));
        assert_eq!(sys.fs[1].coeff(6), exact_int(-1));
        assert_eq!(sys.fs[1].support_indices(), vec![1, 6]);
        assert_eq!(sys.gs[0].support_indices(), vec![3]);
        assert_eq!(sys.gs[0].coeff(3), exact_int(1));
        assert!(sys.gs[1].is_unit_series());
        assert!(verify_bezout(&sys).unwrap().holds);
    }

    #[test]
    fn four_primes_system() {
        let sys: Sys = unimodular_tuple(&[2, 3, 5, 7], 2, None).unwrap();
        assert_eq!(sys.truncation, 210);
        assert!(verify_bezout(&sys).unwrap().holds);
        // f_{n+1} = 𝟏 - Σ f_j g_j term for term
        let mut partial = DirichletSeries::unit(210).unwrap();
        for j in 0..2 {
            partial = partial.sub(&sys.fs[j].convolve(&sys.gs[j]).unwrap());
        }
        assert_eq!(partial.coeffs(), sys.fs[2].coeffs());
    }

    #[test]
    fn errors() {
        assert_eq!(
            unimodular_tuple::<ExactComplex>(&[2, 3], 1, Some(5)).err(),
            Some(Error::InsufficientTruncation { given: 5, required: 6 })
        );
        assert_eq!(unimodular_tuple::<ExactComplex>(&[2, 2], 1, None).err(), Some(Error::GeneratorsNotDistinct));
        assert_eq!(
            unimodular_tuple::<ExactComplex>(&[2, 3, 5], 1, None).err(),
            Some(Error::LengthMismatch { expected: 2, got: 3 })
        );
    }

    #[test]
    fn corrupted_coefficient_leaves_residual() {
        let mut sys: Sys = unimodular_tuple(&[2, 3, 5, 7], 2, None).unwrap();
        let old = sys.gs[0].coeff(5);
        sys.gs[0].set_coeff(5, old.add(&exact_int(1))).unwrap();
        let verdict = verify_bezout(&sys).unwrap();
        assert!(!verdict.holds);
        // residual is f_1 * δ_5 = 10^{-s}
        assert_eq!(verdict.residual.support_indices(), vec![10]);
    }

    #[test]
    fn degenerate_system() {
        let one = DirichletSeries::<ExactComplex>::unit(4).unwrap();
        let sys = Sys::from_parts(vec![one.clone()], vec![one]).unwrap();
        assert_eq!(sys.n, 0);
        assert!(verify_bezout(&sys).unwrap().holds);
        let built: Sys = unimodular_tuple(&[], 0, None).unwrap();
        assert!(verify_bezout(&built).unwrap().holds);
    }

    #[test]
    fn reduction_certificates() {
        let sys: Sys = unimodular_tuple(&[2, 3], 1, None).unwrap();
        let zero = DirichletSeries::zero(6).unwrap();
        assert!(!check_reduction_certificate(&sys, std::slice::from_ref(&zero), std::slice::from_ref(&zero)).unwrap());
        assert_eq!(
            check_reduction_certificate(&sys, &[], &[]),
            Err(Error::LengthMismatch { expected: 1, got: 0 })
        );

        // (f_1, 𝟏) reduces with x_1 = 𝟏 - f_1, y_1 = 𝟏
        let n = 30;
        let f1 = DirichletSeries::<ExactComplex>::monomial(n, 2, exact_int(1)).unwrap();
        let one = DirichletSeries::unit(n).unwrap();
        let trivial = Sys::from_parts(vec![f1.clone(), one.clone()], vec![zero_like(n), one.clone()]).unwrap();
        let x = one.sub(&f1);
        assert!(check_reduction_certificate(&trivial, &[x], &[one]).unwrap());
    }

    fn zero_like(n: usize) -> DirichletSeries<ExactComplex> {
        DirichletSeries::zero(n).unwrap()
    }

    #[test]
    fn systems_stay_in_the_generated_semigroup() {
        let sys: Sys = unimodular_tuple(&[2, 5, 9, 13], 2, None).unwrap();
        assert!(verify_bezout(&sys).unwrap().holds);
        sys.check_within(&SemigroupSpec::SumOfTwoSquares).unwrap();
        sys.check_within(&"gen(2,5,9,13)".parse().unwrap()).unwrap();
        assert!(sys.check_within(&SemigroupSpec::CoprimeTo(3)).is_err());
    }
}
