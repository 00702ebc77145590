//! The Bohr correspondence between Dirichlet series and power series in
//! countably many variables.
//!
//! Under the `primes` basis the variable `z_k` stands for `p_k^{-s}` (`p_1 = 2`);
//! under a `generators` basis it stands for `q_k^{-s}` for a declared list
//! `q_1 < q_2 < ⋯` whose products are unique. A coefficient `a_n` is placed at
//! the monomial `z^{ν(n)}` where `n = Π basis_k^{ν_k(n)}`.

use std::collections::BTreeMap;
use std::fmt;

use crate::arith::{factorize, first_primes, SpfTable};
use crate::error::{Error, Result};
use crate::scalar::{Scalar, C64};
use crate::semigroup::factorizations_over;
use crate::series::DirichletSeries;

/// Finitely supported exponent sequence, stored as ascending `(variable, exponent)`
/// pairs with every exponent positive. Variables are numbered from 1.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ExponentVector(Vec<(u32, u32)>);

impl ExponentVector {
    /// Builds a canonical vector; zero exponents are dropped, repeated variables summed.
    pub fn new(pairs: impl IntoIterator<Item = (u32, u32)>) -> Result<Self> {
        let mut map: BTreeMap<u32, u32> = BTreeMap::new();
        for (k, e) in pairs {
            if k == 0 {
                return Err(Error::Domain("variables are numbered from 1".into()));
            }
            *map.entry(k).or_default() += e;
        }
        Ok(ExponentVector(map.into_iter().filter(|&(_, e)| e > 0).collect()))
    }

    pub fn zero() -> Self {
        ExponentVector(Vec::new())
    }

    /// The vector `e_k`.
    pub fn unit(k: u32) -> Self {
        assert!(k >= 1);
        ExponentVector(vec![(k, 1)])
    }

    pub fn pairs(&self) -> &[(u32, u32)] {
        &self.0
    }

    pub fn get(&self, k: u32) -> u32 {
        self.0.iter().find(|&&(j, _)| j == k).map_or(0, |&(_, e)| e)
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Total degree `|ν|`.
    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&(_, e)| e).sum()
    }

    /// `ν! = Π ν_k!`, `None` on overflow.
    pub fn factorial(&self) -> Option<u64> {
        self.0.iter().try_fold(1u64, |acc, &(_, e)| {
            (1..=e as u64).try_fold(acc, |a, i| a.checked_mul(i))
        })
    }

    pub fn max_variable(&self) -> u32 {
        self.0.last().map_or(0, |&(k, _)| k)
    }

    /// Componentwise order `β ≼ α`.
    pub fn precedes(&self, other: &ExponentVector) -> bool {
        self.0.iter().all(|&(k, e)| other.get(k) >= e)
    }

    pub fn add(&self, other: &ExponentVector) -> ExponentVector {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            match (self.0.get(i), other.0.get(j)) {
                (Some(&(a, ea)), Some(&(b, eb))) if a == b => {
                    out.push((a, ea + eb));
                    i += 1;
                    j += 1;
                }
                (Some(&(a, ea)), Some(&(b, _))) if a < b => {
                    out.push((a, ea));
                    i += 1;
                }
                (Some(_), Some(&(b, eb))) => {
                    out.push((b, eb));
                    j += 1;
                }
                (Some(&p), None) => {
                    out.push(p);
                    i += 1;
                }
                (None, Some(&p)) => {
                    out.push(p);
                    j += 1;
                }
                (None, None) => unreachable!(),
            }
        }
        ExponentVector(out)
    }

    /// `self - other` when `other ≼ self`.
    pub fn checked_sub(&self, other: &ExponentVector) -> Option<ExponentVector> {
        if !other.precedes(self) {
            return None;
        }
        Some(ExponentVector(
            self.0
                .iter()
                .map(|&(k, e)| (k, e - other.get(k)))
                .filter(|&(_, e)| e > 0)
                .collect(),
        ))
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .0
            .iter()
            .map(|&(k, e)| if e == 1 { format!("z{k}") } else { format!("z{k}^{e}") })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// What the variables stand for.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Basis {
    Primes,
    /// Strictly increasing list, each entry `>= 2`.
    Generators(Vec<u64>),
}

impl Basis {
    /// A generators basis; rejects lists that are not strictly increasing and `>= 2`.
    pub fn generators(list: Vec<u64>) -> Result<Self> {
        if list.iter().any(|&q| q < 2) || list.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::GeneratorsNotDistinct);
        }
        Ok(Basis::Generators(list))
    }

    /// Integer values `basis_1..basis_count`.
    fn values(&self, count: usize) -> Result<Vec<u64>> {
        match self {
            Basis::Primes => Ok(first_primes(count)),
            Basis::Generators(list) if count <= list.len() => Ok(list[..count].to_vec()),
            Basis::Generators(list) => {
                Err(Error::Domain(format!("variable {count} beyond {} generators", list.len())))
            }
        }
    }

    /// `Π basis_k^{ν_k}`, `None` on `u64` overflow.
    pub fn image(&self, v: &ExponentVector) -> Result<Option<u64>> {
        let values = self.values(v.max_variable() as usize)?;
        Ok(image_with(&values, v))
    }
}

fn image_with(values: &[u64], v: &ExponentVector) -> Option<u64> {
    v.pairs()
        .iter()
        .try_fold(1u64, |acc, &(k, e)| acc.checked_mul(values[k as usize - 1].checked_pow(e)?))
}

/// `ν(n)` over the given basis.
pub fn exponent_vector(n: u64, basis: &Basis) -> Result<ExponentVector> {
    if n == 0 {
        return Err(Error::Domain("n must be >= 1".into()));
    }
    match basis {
        Basis::Primes => {
            let factors = factorize(n);
            let largest = factors.last().map_or(2, |&(p, _)| p);
            let primes = crate::arith::primes_up_to(largest as usize);
            ExponentVector::new(factors.into_iter().map(|(p, e)| {
                let k = primes.binary_search(&p).expect("prime in table") as u32 + 1;
                (k, e)
            }))
        }
        Basis::Generators(list) => {
            let found = factorizations_over(list, n);
            match found.len() {
                0 => Err(Error::NoFactorization(n)),
                1 => ExponentVector::new(found[0].iter().map(|q| {
                    (list.binary_search(q).expect("generator") as u32 + 1, 1)
                })),
                _ => Err(Error::AmbiguousFactorization(n)),
            }
        }
    }
}

/// `ν(n)` for every `n <= bound` that factors over the basis.
#[derive(Debug, Clone)]
pub struct ExponentTable {
    basis: Basis,
    vectors: Vec<Option<ExponentVector>>,
}

impl ExponentTable {
    /// Under a generators basis this fails with `AmbiguousFactorization` at the
    /// least `n <= bound` with two factorizations.
    pub fn new(basis: &Basis, bound: usize) -> Result<Self> {
        let mut vectors: Vec<Option<ExponentVector>> = vec![None; bound + 1];
        if bound >= 1 {
            vectors[1] = Some(ExponentVector::zero());
        }
        match basis {
            Basis::Primes => {
                let spf = SpfTable::new(bound.max(1));
                let index: std::collections::HashMap<u64, u32> = spf
                    .primes()
                    .iter()
                    .enumerate()
                    .map(|(i, &p)| (p as u64, i as u32 + 1))
                    .collect();
                for n in 2..=bound {
                    let p = spf.smallest_prime_factor(n) as usize;
                    let rest = vectors[n / p].clone().expect("smaller entry");
                    vectors[n] = Some(rest.add(&ExponentVector::unit(index[&(p as u64)])));
                }
            }
            Basis::Generators(list) => {
                let mut ways = vec![0u8; bound + 1];
                if bound >= 1 {
                    ways[1] = 1;
                }
                for &q in list {
                    let q = q as usize;
                    for m in (q..=bound).step_by(q) {
                        ways[m] = ways[m].saturating_add(ways[m / q]).min(2);
                    }
                }
                if let Some(m) = ways.iter().position(|&w| w >= 2) {
                    return Err(Error::AmbiguousFactorization(m as u64));
                }
                for n in 2..=bound {
                    if ways[n] == 0 {
                        continue;
                    }
                    for (i, &q) in list.iter().enumerate() {
                        let q = q as usize;
                        if q > n {
                            break;
                        }
                        if n % q == 0 {
                            if let Some(rest) = &vectors[n / q] {
                                vectors[n] = Some(rest.add(&ExponentVector::unit(i as u32 + 1)));
                                break;
                            }
                        }
                    }
                }
            }
        }
        Ok(ExponentTable { basis: basis.clone(), vectors })
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn get(&self, n: u64) -> Option<&ExponentVector> {
        self.vectors.get(n as usize).and_then(Option::as_ref)
    }
}

/// Sparse polynomial `Σ c_ν z^ν`; zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq)]
pub struct MultiPowerSeries<K> {
    basis: Basis,
    terms: BTreeMap<ExponentVector, K>,
}

impl<K: Scalar> MultiPowerSeries<K> {
    pub fn zero(basis: Basis) -> Self {
        MultiPowerSeries { basis, terms: BTreeMap::new() }
    }

    pub fn from_terms(basis: Basis, terms: impl IntoIterator<Item = (ExponentVector, K)>) -> Self {
        let mut p = Self::zero(basis);
        for (v, c) in terms {
            p.add_term(v, c);
        }
        p
    }

    pub fn basis(&self) -> &Basis {
        &self.basis
    }

    pub fn terms(&self) -> &BTreeMap<ExponentVector, K> {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, v: &ExponentVector) -> K {
        self.terms.get(v).cloned().unwrap_or_else(K::zero)
    }

    /// `∂^ν F(0) = ν! · c_ν`; `None` if `ν!` overflows.
    pub fn derivative_at_zero(&self, v: &ExponentVector) -> Option<K> {
        let fact = i64::try_from(v.factorial()?).ok()?;
        Some(self.coefficient(v).mul(&K::from_i64(fact)))
    }

    pub fn add_term(&mut self, v: ExponentVector, c: K) {
        let sum = match self.terms.remove(&v) {
            Some(old) => old.add(&c),
            None => c,
        };
        if !sum.is_zero() {
            self.terms.insert(v, sum);
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.basis != other.basis {
            return Err(Error::BasisMismatch);
        }
        let mut out = self.clone();
        for (v, c) in &other.terms {
            out.add_term(v.clone(), c.clone());
        }
        Ok(out)
    }

    /// Total degree of the highest term.
    pub fn degree(&self) -> u32 {
        self.terms.keys().map(ExponentVector::degree).max().unwrap_or(0)
    }

    fn basis_values(&self) -> Result<Vec<u64>> {
        let top = self.terms.keys().map(ExponentVector::max_variable).max().unwrap_or(0);
        self.basis.values(top as usize)
    }

    /// Parts `P_m` collecting the terms of total degree `m`.
    pub fn homogeneous_parts(&self) -> BTreeMap<u32, MultiPowerSeries<K>> {
        let mut out: BTreeMap<u32, MultiPowerSeries<K>> = BTreeMap::new();
        for (v, c) in &self.terms {
            out.entry(v.degree())
                .or_insert_with(|| Self::zero(self.basis.clone()))
                .terms
                .insert(v.clone(), c.clone());
        }
        out
    }

    /// `Σ c_ν Π z_k^{ν_k}`; unlisted variables are 0 and listed ones need `|z_k| < 1`.
    pub fn evaluate(&self, z: &BTreeMap<u32, C64>) -> Result<C64> {
        if let Some((k, zk)) = z.iter().find(|(_, zk)| zk.norm().is_nan() || zk.norm() >= 1.0) {
            return Err(Error::Domain(format!("|z_{k}| = {} is not < 1", zk.norm())));
        }
        let mut total = C64::new(0.0, 0.0);
        'terms: for (v, c) in &self.terms {
            let mut mono = c.to_c64();
            for &(k, e) in v.pairs() {
                match z.get(&k) {
                    Some(zk) => mono *= zk.powu(e),
                    None => continue 'terms,
                }
            }
            total += mono;
        }
        Ok(total)
    }
}

/// Place `a_n` at `z^{ν(n)}`.
pub fn lift<K: Scalar>(f: &DirichletSeries<K>, basis: &Basis) -> Result<MultiPowerSeries<K>> {
    let table = ExponentTable::new(basis, f.truncation())?;
    lift_with(f, &table)
}

/// Same as [`lift`] with a prebuilt table covering the truncation.
pub fn lift_with<K: Scalar>(f: &DirichletSeries<K>, table: &ExponentTable) -> Result<MultiPowerSeries<K>> {
    let mut out = MultiPowerSeries::zero(table.basis().clone());
    for (n, a) in f.nonzero_terms() {
        let v = table.get(n).ok_or(Error::NoFactorization(n))?;
        out.terms.insert(v.clone(), a.clone());
    }
    Ok(out)
}

/// Inverse of [`lift`]: monomial `z^ν` becomes `(Π basis_k^{ν_k})^{-s}`.
pub fn drop<K: Scalar>(p: &MultiPowerSeries<K>, n: usize) -> Result<DirichletSeries<K>> {
    let values = p.basis_values()?;
    let mut out = DirichletSeries::<K>::zero(n)?;
    for (v, c) in &p.terms {
        let image = image_with(&values, v)
            .filter(|&m| m as usize <= n)
            .ok_or(Error::TruncationOverflow { image: image_with(&values, v).unwrap_or(u64::MAX), bound: n })?;
        let merged = out.coeff(image).add(c);
        out.set_coeff(image, merged)?;
    }
    Ok(out)
}

/// Product `Σ_{β≼γ} P[β] Q[γ-β]`, keeping only monomials whose integer image is
/// at most `bound` when one is given, matching Dirichlet truncation at `bound`.
pub fn poly_multiply<K: Scalar>(
    p: &MultiPowerSeries<K>,
    q: &MultiPowerSeries<K>,
    bound: Option<u64>,
) -> Result<MultiPowerSeries<K>> {
    if p.basis != q.basis {
        return Err(Error::BasisMismatch);
    }
    let values = match bound {
        Some(_) => {
            let top = p
                .terms
                .keys()
                .chain(q.terms.keys())
                .map(ExponentVector::max_variable)
                .max()
                .unwrap_or(0);
            p.basis.values(top as usize)?
        }
        None => Vec::new(),
    };
    let mut acc: BTreeMap<ExponentVector, K> = BTreeMap::new();
    for (a, ca) in &p.terms {
        for (b, cb) in &q.terms {
            let g = a.add(b);
            if let Some(cap) = bound {
                if image_with(&values, &g).is_none_or(|m| m > cap) {
                    continue;
                }
            }
            acc.entry(g).or_insert_with(K::zero).add_mul_assign(ca, cb);
        }
    }
    acc.retain(|_, c| !c.is_zero());
    Ok(MultiPowerSeries { basis: p.basis.clone(), terms: acc })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{exact_int, ExactComplex};
    use crate::series::ExactSeries;

    fn ev(pairs: &[(u32, u32)]) -> ExponentVector {
        ExponentVector::new(pairs.iter().copied()).unwrap()
    }

    #[test]
    fn exponent_vector_examples() {
        assert_eq!(exponent_vector(12, &Basis::Primes).unwrap(), ev(&[(1, 2), (2, 1)]));
        assert_eq!(exponent_vector(1, &Basis::Primes).unwrap(), ExponentVector::zero());
        let gens = Basis::generators(vec![2, 3]).unwrap();
        assert_eq!(exponent_vector(8, &gens).unwrap(), ev(&[(1, 3)]));
        assert_eq!(exponent_vector(1, &gens).unwrap(), ExponentVector::zero());
        assert_eq!(exponent_vector(10, &gens), Err(Error::NoFactorization(10)));
        let bad = Basis::generators(vec![4, 6, 9]).unwrap();
        assert_eq!(exponent_vector(36, &bad), Err(Error::AmbiguousFactorization(36)));
        assert_eq!(ExponentTable::new(&bad, 100).err(), Some(Error::AmbiguousFactorization(36)));
        assert_eq!(exponent_vector(97, &Basis::Primes).unwrap(), ev(&[(25, 1)]));
    }

    #[test]
    fn vector_algebra() {
        let a = ev(&[(1, 2), (3, 1)]);
        let b = ev(&[(1, 1)]);
        assert!(b.precedes(&a) && !a.precedes(&b));
        assert_eq!(a.checked_sub(&b), Some(ev(&[(1, 1), (3, 1)])));
        assert_eq!(b.checked_sub(&a), None);
        assert_eq!(a.add(&b), ev(&[(1, 3), (3, 1)]));
        assert_eq!(a.degree(), 3);
        assert_eq!(a.factorial(), Some(2));
        assert_eq!(ev(&[(2, 0)]), ExponentVector::zero());
        assert_eq!(a.to_string(), "z1^2*z3");
    }

    #[test]
    fn lift_examples() {
        let f = ExactSeries::from_fn(10, |n| exact_int(i64::from(n == 2 || n == 6))).unwrap();
        let p = lift(&f, &Basis::Primes).unwrap();
        let expected = MultiPowerSeries::from_terms(
            Basis::Primes,
            [(ev(&[(1, 1)]), exact_int(1)), (ev(&[(1, 1), (2, 1)]), exact_int(1))],
        );
        assert_eq!(p, expected);
        assert_eq!(drop(&p, 10).unwrap().coeffs(), f.coeffs());
        let one = lift(&ExactSeries::unit(5).unwrap(), &Basis::Primes).unwrap();
        assert_eq!(one.terms().len(), 1);
        assert_eq!(one.coefficient(&ExponentVector::zero()), exact_int(1));
    }

    #[test]
    fn lift_over_generators_requires_factorization() {
        let gens = Basis::generators(vec![2, 3]).unwrap();
        let f = ExactSeries::monomial(10, 5, exact_int(1)).unwrap();
        assert_eq!(lift(&f, &gens), Err(Error::NoFactorization(5)));
    }

    #[test]
    fn drop_overflow() {
        let p = MultiPowerSeries::from_terms(Basis::Primes, [(ev(&[(2, 3)]), exact_int(1))]);
        assert_eq!(drop(&p, 20), Err(Error::TruncationOverflow { image: 27, bound: 20 }));
    }

    #[test]
    fn multiply_monomials() {
        let z1 = MultiPowerSeries::from_terms(Basis::Primes, [(ExponentVector::unit(1), exact_int(1))]);
        let z2 = MultiPowerSeries::from_terms(Basis::Primes, [(ExponentVector::unit(2), exact_int(1))]);
        let prod = poly_multiply(&z1, &z2, None).unwrap();
        assert_eq!(drop(&prod, 10).unwrap().support_indices(), vec![6]);
        assert!(poly_multiply(&z1, &z2, Some(5)).unwrap().is_empty());
        let g = MultiPowerSeries::<ExactComplex>::zero(Basis::generators(vec![2]).unwrap());
        assert_eq!(poly_multiply(&z1, &g, None), Err(Error::BasisMismatch));
    }

    #[test]
    fn homogeneous_parts_of_zeta_four() {
        let z = ExactSeries::from_fn(4, |_| exact_int(1)).unwrap();
        let parts = lift(&z, &Basis::Primes).unwrap().homogeneous_parts();
        assert_eq!(parts.keys().copied().collect::<Vec<_>>(), vec![0, 1, 2]);
        assert_eq!(parts[&0].len(), 1);
        assert_eq!(parts[&1].terms().keys().cloned().collect::<Vec<_>>(), vec![ev(&[(1, 1)]), ev(&[(2, 1)])]);
        assert_eq!(parts[&2].terms().keys().cloned().collect::<Vec<_>>(), vec![ev(&[(1, 2)])]);
    }

    #[test]
    fn evaluation() {
        let z1 = MultiPowerSeries::from_terms(Basis::Primes, [(ExponentVector::unit(1), exact_int(1))]);
        let point: BTreeMap<u32, C64> = [(1, C64::new(0.5, 0.0))].into();
        assert_eq!(z1.evaluate(&point).unwrap(), C64::new(0.5, 0.0));
        let bad: BTreeMap<u32, C64> = [(1, C64::new(1.0, 0.0))].into();
        assert!(z1.evaluate(&bad).is_err());
        let f = ExactSeries::from_fn(30, |n| exact_int(n as i64 % 5 - 2)).unwrap();
        let p = lift(&f, &Basis::Primes).unwrap();
        assert_eq!(p.evaluate(&BTreeMap::new()).unwrap(), f.coeff(1).to_c64());
    }
}
