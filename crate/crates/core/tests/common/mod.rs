#![allow(dead_code)]

use lacunary::scalar::{exact, ExactComplex, C64};
use lacunary::semigroup::{Generators, SemigroupSpec};
use lacunary::series::{ExactSeries, FloatSeries};
use num::Zero;
use proptest::prelude::*;

pub fn zero() -> ExactComplex {
    ExactComplex::zero()
}

pub fn exact_coeff() -> impl Strategy<Value = ExactComplex> {
    (-6i64..=6, 1i64..=4, -6i64..=6, 1i64..=4).prop_map(|(a, b, c, d)| exact(a, b, c, d))
}

pub fn sparse_coeffs(n: usize) -> impl Strategy<Value = Vec<ExactComplex>> {
    prop::collection::vec(prop_oneof![2 => Just(zero()), 3 => exact_coeff()], n)
}

pub fn exact_series(max_n: usize) -> impl Strategy<Value = ExactSeries> {
    (1..=max_n).prop_flat_map(sparse_coeffs).prop_map(|c| ExactSeries::new(c).unwrap())
}

/// Three series sharing one truncation.
pub fn exact_triple(max_n: usize) -> impl Strategy<Value = (ExactSeries, ExactSeries, ExactSeries)> {
    (1..=max_n).prop_flat_map(|n| (sparse_coeffs(n), sparse_coeffs(n), sparse_coeffs(n))).prop_map(|(a, b, c)| {
        (ExactSeries::new(a).unwrap(), ExactSeries::new(b).unwrap(), ExactSeries::new(c).unwrap())
    })
}

pub fn float_coeffs(n: usize) -> impl Strategy<Value = Vec<C64>> {
    prop::collection::vec(
        prop_oneof![1 => Just(C64::new(0.0, 0.0)), 2 => (-3.0..3.0f64, -3.0..3.0f64).prop_map(|(a, b)| C64::new(a, b))],
        n,
    )
}

pub fn float_series(max_n: usize) -> impl Strategy<Value = FloatSeries> {
    (1..=max_n).prop_flat_map(float_coeffs).prop_map(|c| FloatSeries::new(c).unwrap())
}

/// Schoolbook `c_n = Σ_{de=n} a_d b_e` by trial division.
pub fn naive_convolution(a: &[ExactComplex], b: &[ExactComplex]) -> Vec<ExactComplex> {
    let n = a.len().min(b.len());
    (1..=n)
        .map(|k| {
            let mut acc = zero();
            for d in 1..=k {
                if k % d == 0 {
                    acc += &a[d - 1] * &b[k / d - 1];
                }
            }
            acc
        })
        .collect()
}

pub fn leaf_spec() -> impl Strategy<Value = SemigroupSpec> {
    prop_oneof![
        Just(SemigroupSpec::Full),
        Just(SemigroupSpec::Trivial),
        Just(SemigroupSpec::SumOfTwoSquares),
        Just(SemigroupSpec::Generators(Generators::Primes)),
        (1u64..6).prop_map(|m| SemigroupSpec::powers(m).unwrap()),
        (1u64..60).prop_map(|m| SemigroupSpec::coprime_to(m).unwrap()),
        prop::collection::btree_set(2u64..40, 1..4).prop_map(|g| SemigroupSpec::generators(g).unwrap()),
    ]
}

pub fn any_spec() -> impl Strategy<Value = SemigroupSpec> {
    prop_oneof![
        3 => leaf_spec(),
        1 => prop::collection::vec(leaf_spec(), 0..3).prop_map(SemigroupSpec::Intersection),
    ]
}

/// The built-in families with one representative each, plus an intersection.
pub fn builtin_specs() -> Vec<SemigroupSpec> {
    [
        "full",
        "trivial",
        "gen(2,3)",
        "gen(primes)",
        "powers(2)",
        "powers(3)",
        "coprime(6)",
        "coprime(30)",
        "sum2sq",
        "and(coprime(2),coprime(3))",
        "and(powers(2),coprime(5))",
    ]
    .iter()
    .map(|s| s.parse().unwrap())
    .collect()
}

/// Möbius function by a direct sieve over primes.
pub fn mobius_sieve(n: usize) -> Vec<i64> {
    let mut mu = vec![1i64; n + 1];
    let mut composite = vec![false; n + 1];
    for p in 2..=n {
        if composite[p] {
            continue;
        }
        for m in (p..=n).step_by(p) {
            if m > p {
                composite[m] = true;
            }
            mu[m] = -mu[m];
        }
        let sq = p * p;
        for m in (sq..=n).step_by(sq) {
            mu[m] = 0;
        }
    }
    mu
}

/// Numbers `<= bound` whose prime factors all lie in `primes`.
pub fn smooth_numbers(primes: &[u64], bound: u64) -> Vec<u64> {
    let mut out = vec![1u64];
    for &p in primes {
        let mut next = Vec::new();
        for &m in &out {
            let mut v = m;
            loop {
                next.push(v);
                match v.checked_mul(p) {
                    Some(w) if w <= bound => v = w,
                    _ => break,
                }
            }
        }
        out = next;
    }
    out.sort_unstable();
    out
}
