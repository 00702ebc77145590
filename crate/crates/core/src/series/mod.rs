//! Truncated Dirichlet series `Σ_{n<=N} a_n n^{-s}` and their algebra.
//!
//! Every product and inverse is exact on `[1..min(N_f, N_g)]`: the coefficient
//! `c_n` of a product only reads coefficients at divisors of `n`, and `[1..N]`
//! is closed under taking divisors.

mod abscissa;
mod analytic;
mod kernels;

use std::sync::Arc;

pub use abscissa::{abscissa_estimates, AbscissaEstimate, ABSCISSA_BAND_LIMIT, ABSCISSA_MIN_N};
pub use analytic::{
    euler_constant, evaluate, fejer_smooth, fejer_weight, inner_product, lemma_bound,
    lemma_bound_check, multiplier_ratio_max, n_pow_neg, shift_abscissa, shift_abscissa_int,
    sup_norm_lower_bound, vertical_translate, EvalResult, HalfPlanePoint, LemmaCheck, LEMMA_REL_SLACK,
};
pub use kernels::{kernel_eval, kernel_series, l_series, principal_character, zeta_s};

use num::{BigRational, Zero};

use crate::error::{Error, Result};
use crate::scalar::{ExactComplex, Scalar, C64};
use crate::semigroup::MembershipSieve;

/// Coefficients `a_1..a_N` with an optional declared support.
///
/// When a support `S` is attached, `a_n = 0` for every `n ∉ S`.
#[derive(Debug, Clone, PartialEq)]
pub struct DirichletSeries<K> {
    coeffs: Vec<K>,
    support: Option<Arc<MembershipSieve>>,
}

pub type ExactSeries = DirichletSeries<ExactComplex>;
pub type FloatSeries = DirichletSeries<C64>;

impl<K: Scalar> DirichletSeries<K> {
    /// `coeffs[i]` is the coefficient of `(i + 1)^{-s}`.
    pub fn new(coeffs: Vec<K>) -> Result<Self> {
        if coeffs.is_empty() {
            return Err(Error::Domain("truncation must be >= 1".into()));
        }
        Ok(DirichletSeries { coeffs, support: None })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(u64) -> K) -> Result<Self> {
        Self::new((1..=n as u64).map(&mut f).collect())
    }

    pub fn zero(n: usize) -> Result<Self> {
        Self::new(vec![K::zero(); n])
    }

    /// The unit `𝟏 = 1^{-s}`.
    pub fn unit(n: usize) -> Result<Self> {
        Self::monomial(n, 1, K::one())
    }

    /// `c · k^{-s}` truncated at `n`; the term is dropped if `k > n`.
    pub fn monomial(n: usize, k: u64, c: K) -> Result<Self> {
        let mut s = Self::zero(n)?;
        if k == 0 {
            return Err(Error::Domain("indices start at 1".into()));
        }
        if k as usize <= n {
            s.coeffs[k as usize - 1] = c;
        }
        Ok(s)
    }

    /// Attach a declared support after checking the support condition.
    pub fn with_support(mut self, support: Arc<MembershipSieve>) -> Result<Self> {
        if self.truncation() > support.bound() {
            return Err(Error::Domain(format!(
                "truncation {} exceeds support bound {}",
                self.truncation(),
                support.bound()
            )));
        }
        if let Some(n) = self.first_off_support(&support) {
            return Err(Error::SupportViolation(n));
        }
        self.support = Some(support);
        Ok(self)
    }

    pub fn without_support(mut self) -> Self {
        self.support = None;
        self
    }

    fn first_off_support(&self, sv: &MembershipSieve) -> Option<u64> {
        self.nonzero_terms().map(|(n, _)| n).find(|&n| !sv.contains(n))
    }

    pub fn truncation(&self) -> usize {
        self.coeffs.len()
    }

    pub fn support(&self) -> Option<&Arc<MembershipSieve>> {
        self.support.as_ref()
    }

    pub fn coeffs(&self) -> &[K] {
        &self.coeffs
    }

    /// Coefficient of `n^{-s}`; zero beyond the truncation.
    pub fn coeff(&self, n: u64) -> K {
        match n {
            0 => K::zero(),
            _ => self.coeffs.get(n as usize - 1).cloned().unwrap_or_else(K::zero),
        }
    }

    pub fn set_coeff(&mut self, n: u64, c: K) -> Result<()> {
        if n == 0 || n as usize > self.truncation() {
            return Err(Error::Domain(format!("index {n} outside [1..{}]", self.truncation())));
        }
        if let Some(sv) = &self.support {
            if !c.is_zero() && !sv.contains(n) {
                return Err(Error::SupportViolation(n));
            }
        }
        self.coeffs[n as usize - 1] = c;
        Ok(())
    }

    pub fn nonzero_terms(&self) -> impl Iterator<Item = (u64, &K)> + '_ {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as u64 + 1, c))
    }

    /// Indices with nonzero coefficients.
    pub fn support_indices(&self) -> Vec<u64> {
        self.nonzero_terms().map(|(n, _)| n).collect()
    }

    /// Largest index with a nonzero coefficient, 0 for the zero series.
    pub fn degree(&self) -> u64 {
        self.coeffs.iter().rposition(|c| !c.is_zero()).map_or(0, |i| i as u64 + 1)
    }

    pub fn truncate(&self, n: usize) -> Result<Self> {
        let n = n.min(self.truncation());
        let mut out = Self::new(self.coeffs[..n].to_vec())?;
        out.support = self.support.clone();
        Ok(out)
    }

    pub fn is_unit_series(&self) -> bool {
        self.coeffs[0] == K::one() && self.coeffs[1..].iter().all(Scalar::is_zero)
    }

    /// Support shared by both operands, kept only when it is a closed semigroup.
    fn shared_support(&self, other: &Self) -> Option<Arc<MembershipSieve>> {
        match (&self.support, &other.support) {
            (Some(a), Some(b)) if a.same_set(b) && a.is_closed() => Some(Arc::clone(a)),
            _ => None,
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.truncation().min(other.truncation());
        let coeffs = self.coeffs[..n].iter().zip(&other.coeffs[..n]).map(|(a, b)| a.add(b)).collect();
        let support = match (&self.support, &other.support) {
            (Some(a), Some(b)) if a.same_set(b) => Some(Arc::clone(a)),
            _ => None,
        };
        DirichletSeries { coeffs, support }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&K::from_i64(-1)))
    }

    pub fn scale(&self, c: &K) -> Self {
        DirichletSeries {
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
            support: self.support.clone(),
        }
    }

    /// Dirichlet convolution `c_n = Σ_{d|n} a_d b_{n/d}` on `[1..min(N_f, N_g)]`.
    pub fn convolve(&self, other: &Self) -> Result<Self> {
        let n = self.truncation().min(other.truncation());
        let mut out = vec![K::zero(); n];
        let rhs: Vec<(usize, &K)> = other.coeffs[..n]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i + 1, c))
            .collect();
        for (i, a) in self.coeffs[..n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let d = i + 1;
            for &(k, b) in &rhs {
                let m = d * k;
                if m > n {
                    break;
                }
                out[m - 1].add_mul_assign(a, b);
            }
        }
        let result = DirichletSeries { coeffs: out, support: None };
        match self.shared_support(other) {
            Some(sv) => result.with_support(sv),
            None => Ok(result),
        }
    }

    /// Convolution inverse on `[1..N]`, from `b_1 = 1/a_1` and
    /// `b_n = -(1/a_1) Σ_{d|n, d>1} a_d b_{n/d}`.
    pub fn invert(&self) -> Result<Self> {
        let n = self.truncation();
        let inv_lead = self.coeffs[0].inv().ok_or(Error::NonUnitConstantTerm)?;
        let tail: Vec<(usize, &K)> = self.coeffs[1..]
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i + 2, c))
            .collect();
        // acc[m - 1] = Σ_{d|m, d>1} a_d b_{m/d}, filled forward as each b_k settles
        let mut acc = vec![K::zero(); n];
        let mut out = vec![K::zero(); n];
        for k in 1..=n {
            let rhs = if k == 1 { K::one() } else { acc[k - 1].neg() };
            let b = rhs.mul(&inv_lead);
            if !b.is_zero() {
                for &(d, a) in &tail {
                    let m = d * k;
                    if m > n {
                        break;
                    }
                    acc[m - 1].add_mul_assign(a, &b);
                }
            }
            out[k - 1] = b;
        }
        let result = DirichletSeries { coeffs: out, support: None };
        match &self.support {
            Some(sv) if sv.is_closed() => result.with_support(Arc::clone(sv)),
            _ => Ok(result),
        }
    }

    /// `‖f‖₂` over `n <= N`.
    pub fn l2_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.to_c64().norm_sqr()).sum::<f64>().sqrt()
    }

    /// `‖f‖₁ = Σ |a_n|` over `n <= N`.
    pub fn l1_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c.abs()).sum()
    }

    pub fn max_abs_coeff(&self) -> f64 {
        self.coeffs.iter().map(|c| c.abs()).fold(0.0, f64::max)
    }

    pub fn to_float(&self) -> FloatSeries {
        DirichletSeries {
            coeffs: self.coeffs.iter().map(Scalar::to_c64).collect(),
            support: self.support.clone(),
        }
    }
}

impl ExactSeries {
    /// `‖f‖₂²` as an exact rational.
    pub fn l2_norm_squared_exact(&self) -> BigRational {
        self.coeffs
            .iter()
            .fold(BigRational::zero(), |acc, c| acc + &c.re * &c.re + &c.im * &c.im)
    }
}

impl FloatSeries {
    /// Largest coefficient gap on the common truncation.
    pub fn max_abs_diff(&self, other: &FloatSeries) -> f64 {
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }
}
