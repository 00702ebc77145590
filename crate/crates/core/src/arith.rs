//! Elementary integer helpers: smallest-prime-factor tables, factoring, gcd.

use num::integer::Integer;

/// Smallest-prime-factor table on `[0..=bound]`, built with a linear sieve.
///
/// `spf[n]` is the least prime dividing `n` for `n >= 2`; entries 0 and 1 are 0.
#[derive(Debug, Clone)]
pub struct SpfTable {
    spf: Vec<u32>,
    primes: Vec<u32>,
}

impl SpfTable {
    pub fn new(bound: usize) -> Self {
        let mut spf = vec![0u32; bound + 1];
        let mut primes = Vec::new();
        for i in 2..=bound {
            if spf[i] == 0 {
                spf[i] = i as u32;
                primes.push(i as u32);
            }
            let si = spf[i];
            for &p in &primes {
                if p > si || i * p as usize > bound {
                    break;
                }
                spf[i * p as usize] = p;
            }
        }
        SpfTable { spf, primes }
    }

    pub fn bound(&self) -> usize {
        self.spf.len() - 1
    }

    pub fn primes(&self) -> &[u32] {
        &self.primes
    }

    pub fn smallest_prime_factor(&self, n: usize) -> u32 {
        self.spf[n]
    }

    /// Prime factorization as ascending `(p, e)` pairs; empty for `n = 1`.
    pub fn factorize(&self, mut n: usize) -> Vec<(u64, u32)> {
        assert!(n >= 1 && n <= self.bound(), "n outside table");
        let mut out: Vec<(u64, u32)> = Vec::new();
        while n > 1 {
            let p = self.spf[n] as usize;
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p as u64, e));
        }
        out
    }

    /// All divisors of `n`, ascending.
    pub fn divisors(&self, n: usize) -> Vec<u64> {
        let mut divs = vec![1u64];
        for (p, e) in self.factorize(n) {
            let len = divs.len();
            let mut pk = 1u64;
            for _ in 0..e {
                pk *= p;
                for i in 0..len {
                    divs.push(divs[i] * pk);
                }
            }
        }
        divs.sort_unstable();
        divs
    }
}

/// Trial-division factorization for arbitrary `n >= 1`.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    assert!(n >= 1);
    let mut out = Vec::new();
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut e = 0;
            while n.is_multiple_of(p) {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && factorize(n).len() == 1 && factorize(n)[0].1 == 1
}

/// The first `count` primes.
pub fn first_primes(count: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(count);
    let mut candidate = 2u64;
    while out.len() < count {
        if out.iter().take_while(|&&p| p * p <= candidate).all(|&p| !candidate.is_multiple_of(p)) {
            out.push(candidate);
        }
        candidate += 1;
    }
    out
}

/// Primes `<= bound`, ascending.
pub fn primes_up_to(bound: usize) -> Vec<u64> {
    if bound < 2 {
        return Vec::new();
    }
    SpfTable::new(bound).primes().iter().map(|&p| p as u64).collect()
}

pub fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    a.lcm(&b)
}

/// Exact integer `k`-th root if `n` is a perfect `k`-th power.
pub fn exact_root(n: u64, k: u32) -> Option<u64> {
    if k == 1 || n <= 1 {
        return Some(n);
    }
    let guess = (n as f64).powf(1.0 / k as f64).round() as u64;
    let lo = guess.saturating_sub(1).max(1);
    (lo..=guess + 1).find(|&r| r.checked_pow(k) == Some(n))
}

/// Product of a list, `None` on overflow.
pub fn checked_product(values: impl IntoIterator<Item = u64>) -> Option<u64> {
    values.into_iter().try_fold(1u64, |acc, v| acc.checked_mul(v))
}
