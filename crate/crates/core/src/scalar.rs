//! Scalar backends: exact complex rationals and complex `f64`.

use std::fmt::Debug;

use num::{BigInt, BigRational, Complex, One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

pub type Rational = BigRational;
pub type ExactComplex = Complex<BigRational>;
pub type C64 = Complex<f64>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Backend {
    Rational,
    Float,
}

impl std::str::FromStr for Backend {
    type Err = crate::Error;

    fn from_str(s: &str) -> crate::Result<Self> {
        match s {
            "rational" => Ok(Backend::Rational),
            "float" => Ok(Backend::Float),
            other => Err(crate::Error::Parse(format!("unknown backend {other:?}"))),
        }
    }
}

/// Coefficient field of a series.
pub trait Scalar: Clone + PartialEq + Debug + Send + Sync + 'static {
    const BACKEND: Backend;

    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn from_i64(v: i64) -> Self;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;
    /// `self += a * b`
    fn add_mul_assign(&mut self, a: &Self, b: &Self);
    fn to_c64(&self) -> C64;

    fn abs(&self) -> f64 {
        self.to_c64().norm()
    }
}

impl Scalar for C64 {
    const BACKEND: Backend = Backend::Float;

    fn zero() -> Self {
        Complex::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex::new(1.0, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn from_i64(v: i64) -> Self {
        Complex::new(v as f64, 0.0)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        (!Scalar::is_zero(self)).then(|| Complex::inv(self))
    }
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        *self += a * b;
    }
    fn to_c64(&self) -> C64 {
        *self
    }
}

fn rat_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or_else(|| {
        if r.is_negative() {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    })
}

impl Scalar for ExactComplex {
    const BACKEND: Backend = Backend::Rational;

    fn zero() -> Self {
        Complex::new(BigRational::zero(), BigRational::zero())
    }
    fn one() -> Self {
        Complex::new(BigRational::one(), BigRational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn from_i64(v: i64) -> Self {
        Complex::new(BigRational::from_integer(BigInt::from(v)), BigRational::zero())
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn sub(&self, other: &Self) -> Self {
        self - other
    }
    fn mul(&self, other: &Self) -> Self {
        if self.im.is_zero() && other.im.is_zero() {
            return Complex::new(&self.re * &other.re, BigRational::zero());
        }
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        if Scalar::is_zero(self) {
            return None;
        }
        if self.im.is_zero() {
            return Some(Complex::new(self.re.recip(), BigRational::zero()));
        }
        let denom = &self.re * &self.re + &self.im * &self.im;
        Some(Complex::new(&self.re / &denom, -(&self.im / &denom)))
    }
    fn add_mul_assign(&mut self, a: &Self, b: &Self) {
        if a.im.is_zero() && b.im.is_zero() {
            self.re += &a.re * &b.re;
        } else {
            *self += a * b;
        }
    }
    fn to_c64(&self) -> C64 {
        Complex::new(rat_to_f64(&self.re), rat_to_f64(&self.im))
    }
}

/// Exact complex number from two integer ratios.
pub fn exact(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> ExactComplex {
    Complex::new(
        BigRational::new(re_num.into(), re_den.into()),
        BigRational::new(im_num.into(), im_den.into()),
    )
}

pub fn exact_int(v: i64) -> ExactComplex {
    ExactComplex::from_i64(v)
}
