//! JSON wire formats for series, polynomials and Bézout systems, and the
//! backend-tagged wrappers used when the backend is only known at run time.

use std::str::FromStr;
use std::sync::Arc;

use num::{BigRational, Complex, FromPrimitive, Zero};
use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::bohr::{Basis, ExponentVector, MultiPowerSeries};
use crate::error::{Error, Result};
use crate::scalar::{Backend, ExactComplex, Scalar, C64};
use crate::semigroup::{sieve_expr, Generators, SemigroupSpec, SetExpr};
use crate::series::{DirichletSeries, ExactSeries, FloatSeries};
use crate::stable_rank::{BezoutSystem, BezoutVerdict};

/// Textual/numeric form of one scalar component.
///
/// Rationals travel as `"p/q"` (or `"p"`) strings, floats as JSON numbers.
pub trait WireScalar: Scalar {
    fn parts_to_json(&self) -> (Value, Value);
    fn parts_from_json(re: &Value, im: &Value) -> Result<Self>;
}

fn rational_from_value(v: &Value) -> Result<BigRational> {
    match v {
        Value::String(s) => BigRational::from_str(s.trim())
            .map_err(|_| Error::Json(format!("bad rational {s:?}"))),
        Value::Number(n) => {
            if let Some(i) = n.as_i64() {
                Ok(BigRational::from_integer(i.into()))
            } else {
                let f = n.as_f64().ok_or_else(|| Error::Json(format!("bad number {n}")))?;
                BigRational::from_f64(f).ok_or_else(|| Error::Json(format!("non-finite {f}")))
            }
        }
        Value::Null => Ok(BigRational::zero()),
        other => Err(Error::Json(format!("expected string or number, got {other}"))),
    }
}

fn float_from_value(v: &Value) -> Result<f64> {
    match v {
        Value::Number(n) => n.as_f64().ok_or_else(|| Error::Json(format!("bad number {n}"))),
        Value::String(s) => match s.trim().parse::<f64>() {
            Ok(f) => Ok(f),
            Err(_) => rational_from_value(v).map(|r| ExactComplex::new(r, BigRational::zero()).to_c64().re),
        },
        Value::Null => Ok(0.0),
        other => Err(Error::Json(format!("expected string or number, got {other}"))),
    }
}

impl WireScalar for ExactComplex {
    fn parts_to_json(&self) -> (Value, Value) {
        (Value::String(self.re.to_string()), Value::String(self.im.to_string()))
    }

    fn parts_from_json(re: &Value, im: &Value) -> Result<Self> {
        Ok(Complex::new(rational_from_value(re)?, rational_from_value(im)?))
    }
}

impl WireScalar for C64 {
    fn parts_to_json(&self) -> (Value, Value) {
        (Value::from(self.re), Value::from(self.im))
    }

    fn parts_from_json(re: &Value, im: &Value) -> Result<Self> {
        Ok(C64::new(float_from_value(re)?, float_from_value(im)?))
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CoeffJson {
    pub n: u64,
    #[serde(default)]
    pub re: Value,
    #[serde(default)]
    pub im: Value,
}

/// `{"N", "backend", "support"?, "coeffs": [{"n", "re", "im"}]}`; omitted entries are zero.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeriesJson {
    #[serde(rename = "N")]
    pub n: usize,
    pub backend: Backend,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub support: Option<String>,
    pub coeffs: Vec<CoeffJson>,
}

pub fn series_to_json<K: WireScalar>(f: &DirichletSeries<K>) -> SeriesJson {
    SeriesJson {
        n: f.truncation(),
        backend: K::BACKEND,
        support: f.support().map(|sv| sv.source().to_string()),
        coeffs: f
            .nonzero_terms()
            .map(|(n, c)| {
                let (re, im) = c.parts_to_json();
                CoeffJson { n, re, im }
            })
            .collect(),
    }
}

pub fn series_from_json<K: WireScalar>(json: &SeriesJson, ceiling: usize) -> Result<DirichletSeries<K>> {
    if json.backend != K::BACKEND {
        return Err(Error::BackendMismatch { left: json.backend, right: K::BACKEND });
    }
    let mut f = DirichletSeries::<K>::zero(json.n)?;
    for c in &json.coeffs {
        let value = K::parts_from_json(&c.re, &c.im)?;
        let merged = f.coeff(c.n).add(&value);
        f.set_coeff(c.n, merged)?;
    }
    match &json.support {
        Some(expr) => {
            let expr: SetExpr = expr.parse()?;
            let sv = Arc::new(sieve_expr(&expr, json.n, ceiling)?);
            f.with_support(sv)
        }
        None => Ok(f),
    }
}

/// A series whose backend is decided at run time.
#[derive(Debug, Clone, PartialEq)]
pub enum AnySeries {
    Rational(ExactSeries),
    Float(FloatSeries),
}

impl AnySeries {
    pub fn backend(&self) -> Backend {
        match self {
            AnySeries::Rational(_) => Backend::Rational,
            AnySeries::Float(_) => Backend::Float,
        }
    }

    pub fn from_json(json: &SeriesJson, ceiling: usize) -> Result<Self> {
        Ok(match json.backend {
            Backend::Rational => AnySeries::Rational(series_from_json(json, ceiling)?),
            Backend::Float => AnySeries::Float(series_from_json(json, ceiling)?),
        })
    }

    pub fn to_json(&self) -> SeriesJson {
        match self {
            AnySeries::Rational(f) => series_to_json(f),
            AnySeries::Float(f) => series_to_json(f),
        }
    }

    pub fn parse(text: &str, ceiling: usize) -> Result<Self> {
        Self::from_json(&serde_json::from_str(text)?, ceiling)
    }

    pub fn truncation(&self) -> usize {
        match self {
            AnySeries::Rational(f) => f.truncation(),
            AnySeries::Float(f) => f.truncation(),
        }
    }

    /// Explicit conversion to the float backend.
    pub fn to_float(&self) -> FloatSeries {
        match self {
            AnySeries::Rational(f) => f.to_float(),
            AnySeries::Float(f) => f.clone(),
        }
    }

    fn mismatch(&self, other: &AnySeries) -> Error {
        Error::BackendMismatch { left: self.backend(), right: other.backend() }
    }

    pub fn convolve(&self, other: &AnySeries) -> Result<AnySeries> {
        match (self, other) {
            (AnySeries::Rational(a), AnySeries::Rational(b)) => Ok(AnySeries::Rational(a.convolve(b)?)),
            (AnySeries::Float(a), AnySeries::Float(b)) => Ok(AnySeries::Float(a.convolve(b)?)),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn add(&self, other: &AnySeries) -> Result<AnySeries> {
        match (self, other) {
            (AnySeries::Rational(a), AnySeries::Rational(b)) => Ok(AnySeries::Rational(a.add(b))),
            (AnySeries::Float(a), AnySeries::Float(b)) => Ok(AnySeries::Float(a.add(b))),
            _ => Err(self.mismatch(other)),
        }
    }

    pub fn invert(&self) -> Result<AnySeries> {
        Ok(match self {
            AnySeries::Rational(f) => AnySeries::Rational(f.invert()?),
            AnySeries::Float(f) => AnySeries::Float(f.invert()?),
        })
    }

    /// `(n, |a_n|)` for the nonzero coefficients.
    pub fn magnitudes(&self) -> Vec<(u64, f64)> {
        match self {
            AnySeries::Rational(f) => f.nonzero_terms().map(|(n, c)| (n, c.abs())).collect(),
            AnySeries::Float(f) => f.nonzero_terms().map(|(n, c)| (n, c.norm())).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum BasisJson {
    Named(String),
    Generators { generators: Vec<u64> },
}

impl BasisJson {
    pub fn from_basis(b: &Basis) -> Self {
        match b {
            Basis::Primes => BasisJson::Named("primes".into()),
            Basis::Generators(g) => BasisJson::Generators { generators: g.clone() },
        }
    }

    pub fn to_basis(&self) -> Result<Basis> {
        match self {
            BasisJson::Named(s) if s == "primes" => Ok(Basis::Primes),
            BasisJson::Named(s) => Err(Error::Json(format!("unknown basis {s:?}"))),
            BasisJson::Generators { generators } => Basis::generators(generators.clone()),
        }
    }
}

/// Parses `primes` or `gen(2,3,…)` as used on the command line.
pub fn parse_basis(s: &str) -> Result<Basis> {
    let s = s.trim();
    if s == "primes" {
        return Ok(Basis::Primes);
    }
    match s.parse::<SetExpr>()? {
        SetExpr::Spec(SemigroupSpec::Generators(Generators::List(g))) => Basis::generators(g),
        _ => Err(Error::Parse(format!("basis must be 'primes' or 'gen(...)', got {s:?}"))),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermJson {
    pub exps: Vec<(u32, u32)>,
    #[serde(default)]
    pub re: Value,
    #[serde(default)]
    pub im: Value,
}

/// `{"basis": "primes" | {"generators": […]}, "terms": [{"exps": [[k, e], …], "re", "im"}]}`.
///
/// `backend` is optional on input; when absent it is inferred from the value types.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PolyJson {
    pub basis: BasisJson,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub backend: Option<Backend>,
    pub terms: Vec<TermJson>,
}

impl PolyJson {
    fn inferred_backend(&self) -> Backend {
        self.backend.unwrap_or_else(|| {
            let any_string = self
                .terms
                .iter()
                .any(|t| t.re.is_string() || t.im.is_string());
            if any_string {
                Backend::Rational
            } else {
                Backend::Float
            }
        })
    }
}

pub fn poly_to_json<K: WireScalar>(p: &MultiPowerSeries<K>) -> PolyJson {
    PolyJson {
        basis: BasisJson::from_basis(p.basis()),
        backend: Some(K::BACKEND),
        terms: p
            .terms()
            .iter()
            .map(|(v, c)| {
                let (re, im) = c.parts_to_json();
                TermJson { exps: v.pairs().to_vec(), re, im }
            })
            .collect(),
    }
}

pub fn poly_from_json<K: WireScalar>(json: &PolyJson) -> Result<MultiPowerSeries<K>> {
    let backend = json.inferred_backend();
    if backend != K::BACKEND {
        return Err(Error::BackendMismatch { left: backend, right: K::BACKEND });
    }
    let basis = json.basis.to_basis()?;
    let mut terms = Vec::with_capacity(json.terms.len());
    for t in &json.terms {
        terms.push((ExponentVector::new(t.exps.iter().copied())?, K::parts_from_json(&t.re, &t.im)?));
    }
    Ok(MultiPowerSeries::from_terms(basis, terms))
}

#[derive(Debug, Clone, PartialEq)]
pub enum AnyPoly {
    Rational(MultiPowerSeries<ExactComplex>),
    Float(MultiPowerSeries<C64>),
}

impl AnyPoly {
    pub fn from_json(json: &PolyJson) -> Result<Self> {
        Ok(match json.inferred_backend() {
            Backend::Rational => AnyPoly::Rational(poly_from_json(json)?),
            Backend::Float => AnyPoly::Float(poly_from_json(json)?),
        })
    }

    pub fn to_json(&self) -> PolyJson {
        match self {
            AnyPoly::Rational(p) => poly_to_json(p),
            AnyPoly::Float(p) => poly_to_json(p),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationJson {
    pub holds: bool,
    pub residual: SeriesJson,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BezoutJson {
    pub n: usize,
    pub generators: Vec<u64>,
    #[serde(rename = "N")]
    pub truncation: usize,
    pub fs: Vec<SeriesJson>,
    pub gs: Vec<SeriesJson>,
    pub verification: VerificationJson,
}

pub fn bezout_to_json<K: WireScalar>(sys: &BezoutSystem<K>, verdict: &BezoutVerdict<K>) -> BezoutJson {
    BezoutJson {
        n: sys.n,
        generators: sys.generators.clone(),
        truncation: sys.truncation,
        fs: sys.fs.iter().map(series_to_json).collect(),
        gs: sys.gs.iter().map(series_to_json).collect(),
        verification: VerificationJson { holds: verdict.holds, residual: series_to_json(&verdict.residual) },
    }
}

pub fn bezout_from_json<K: WireScalar>(json: &BezoutJson, ceiling: usize) -> Result<BezoutSystem<K>> {
    let fs = json.fs.iter().map(|s| series_from_json(s, ceiling)).collect::<Result<Vec<_>>>()?;
    let gs = json.gs.iter().map(|s| series_from_json(s, ceiling)).collect::<Result<Vec<_>>>()?;
    let mut sys = BezoutSystem::from_parts(fs, gs)?;
    sys.generators = json.generators.clone();
    sys.truncation = json.truncation;
    Ok(sys)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::exact;
    use crate::semigroup::DEFAULT_MAX_N;

    #[test]
    fn rational_series_json_shape() {
        let f = ExactSeries::from_fn(4, |n| if n == 3 { exact(-2, 3, 1, 1) } else { exact(0, 1, 0, 1) }).unwrap();
        let text = serde_json::to_string(&series_to_json(&f)).unwrap();
        assert_eq!(text, r#"{"N":4,"backend":"rational","coeffs":[{"n":3,"re":"-2/3","im":"1"}]}"#);
        let back = AnySeries::parse(&text, DEFAULT_MAX_N).unwrap();
        assert_eq!(back, AnySeries::Rational(f));
    }

    #[test]
    fn lenient_input() {
        let text = r#"{"N":5,"backend":"rational","support":"coprime(2)","coeffs":[{"n":1,"re":1},{"n":3,"re":"1/2","im":0}]}"#;
        let AnySeries::Rational(f) = AnySeries::parse(text, DEFAULT_MAX_N).unwrap() else { panic!() };
        assert_eq!(f.coeff(3), exact(1, 2, 0, 1));
        assert!(f.support().is_some());
        let off = r#"{"N":5,"backend":"rational","support":"coprime(2)","coeffs":[{"n":2,"re":1}]}"#;
        assert_eq!(AnySeries::parse(off, DEFAULT_MAX_N), Err(Error::SupportViolation(2)));
        let float = r#"{"N":3,"backend":"float","coeffs":[{"n":2,"re":"1/4","im":-1.5}]}"#;
        let AnySeries::Float(g) = AnySeries::parse(float, DEFAULT_MAX_N).unwrap() else { panic!() };
        assert_eq!(g.coeff(2), C64::new(0.25, -1.5));
    }

    #[test]
    fn backend_mismatch_is_an_error() {
        let a = AnySeries::Rational(ExactSeries::unit(3).unwrap());
        let b = AnySeries::Float(FloatSeries::unit(3).unwrap());
        assert_eq!(
            a.convolve(&b),
            Err(Error::BackendMismatch { left: Backend::Rational, right: Backend::Float })
        );
        assert!(a.add(&b).is_err());
    }

    #[test]
    fn polynomial_json() {
        let text = r#"{"basis":{"generators":[2,3]},"terms":[{"exps":[[1,2]],"re":"3","im":"0"}]}"#;
        let json: PolyJson = serde_json::from_str(text).unwrap();
        let AnyPoly::Rational(p) = AnyPoly::from_json(&json).unwrap() else { panic!() };
        assert_eq!(p.basis(), &Basis::Generators(vec![2, 3]));
        let out = serde_json::to_string(&poly_to_json(&p)).unwrap();
        assert_eq!(out, r#"{"basis":{"generators":[2,3]},"backend":"rational","terms":[{"exps":[[1,2]],"re":"3","im":"0"}]}"#);
        let primes: PolyJson = serde_json::from_str(r#"{"basis":"primes","terms":[{"exps":[],"re":1.0,"im":0.0}]}"#).unwrap();
        assert!(matches!(AnyPoly::from_json(&primes).unwrap(), AnyPoly::Float(_)));
        assert_eq!(parse_basis("gen(2,3)").unwrap(), Basis::Generators(vec![2, 3]));
        assert!(parse_basis("coprime(2)").is_err());
    }
}
