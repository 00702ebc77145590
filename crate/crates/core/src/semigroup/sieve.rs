use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::spec::{Generators, SemigroupSpec, SetExpr};
use crate::arith::{factorize, primes_up_to, SpfTable};
use crate::error::{Error, Result};

/// Default ceiling on sieve bounds.
pub const DEFAULT_MAX_N: usize = 1 << 22;

/// Membership table of a set `S ⊆ ℕ` on `[1..=bound]`.
#[derive(Debug)]
pub struct MembershipSieve {
    bound: usize,
    // index 0 unused
    bits: Vec<bool>,
    source: SetExpr,
    closed: OnceLock<bool>,
}

impl Clone for MembershipSieve {
    fn clone(&self) -> Self {
        let closed = OnceLock::new();
        if let Some(&c) = self.closed.get() {
            let _ = closed.set(c);
        }
        MembershipSieve { bound: self.bound, bits: self.bits.clone(), source: self.source.clone(), closed }
    }
}

impl PartialEq for MembershipSieve {
    fn eq(&self, other: &Self) -> bool {
        self.bound == other.bound && self.source == other.source && self.bits == other.bits
    }
}

/// A pair `a <= b` of members whose product `ab <= N` is not a member.
pub type Violation = (u64, u64, u64);

/// Sieve `spec` on `[1..=n]` under the default ceiling.
pub fn sieve(spec: &SemigroupSpec, n: usize) -> Result<MembershipSieve> {
    sieve_with_ceiling(spec, n, DEFAULT_MAX_N)
}

pub fn sieve_with_ceiling(spec: &SemigroupSpec, n: usize, ceiling: usize) -> Result<MembershipSieve> {
    check_bound(n, ceiling)?;
    Ok(MembershipSieve {
        bound: n,
        bits: spec_bits(spec, n),
        source: SetExpr::Spec(spec.clone()),
        closed: OnceLock::new(),
    })
}

/// Sieve either a semigroup expression or an ad-hoc set.
pub fn sieve_expr(expr: &SetExpr, n: usize, ceiling: usize) -> Result<MembershipSieve> {
    match expr {
        SetExpr::Spec(spec) => sieve_with_ceiling(spec, n, ceiling),
        SetExpr::Set(members) => {
            check_bound(n, ceiling)?;
            Ok(MembershipSieve::from_members(n, members.iter().copied()))
        }
    }
}

fn check_bound(n: usize, ceiling: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::Domain("sieve bound must be >= 1".into()));
    }
    if n > ceiling {
        return Err(Error::ResourceLimit { requested: n, ceiling });
    }
    Ok(())
}

fn spec_bits(spec: &SemigroupSpec, n: usize) -> Vec<bool> {
    let mut bits = vec![false; n + 1];
    match spec {
        SemigroupSpec::Full => bits[1..].fill(true),
        SemigroupSpec::Trivial => bits[1] = true,
        SemigroupSpec::Generators(gens) => {
            let list = match gens {
                Generators::List(list) => list.clone(),
                Generators::Primes => primes_up_to(n),
            };
            // every member other than 1 is q * (smaller member)
            bits[1] = true;
            for m in 1..=n {
                if !bits[m] {
                    continue;
                }
                for &q in &list {
                    match m.checked_mul(q as usize) {
                        Some(p) if p <= n => bits[p] = true,
                        _ => break,
                    }
                }
            }
        }
        SemigroupSpec::Powers(m) => {
            let mut k = 1u64;
            while let Some(p) = k.checked_pow(*m as u32) {
                if p as usize > n {
                    break;
                }
                bits[p as usize] = true;
                k += 1;
            }
        }
        SemigroupSpec::CoprimeTo(m) => {
            bits[1..].fill(true);
            for (p, _) in factorize(*m) {
                for k in (p as usize..=n).step_by(p as usize) {
                    bits[k] = false;
                }
            }
        }
        SemigroupSpec::SumOfTwoSquares => {
            let spf = SpfTable::new(n);
            bits[1] = true;
            for k in 2..=n {
                let p = spf.smallest_prime_factor(k) as usize;
                bits[k] = if p % 4 != 3 {
                    bits[k / p]
                } else {
                    k % (p * p) == 0 && bits[k / (p * p)]
                };
            }
        }
        SemigroupSpec::Intersection(parts) => {
            bits[1..].fill(true);
            for part in parts {
                for (b, other) in bits.iter_mut().zip(spec_bits(part, n)) {
                    *b &= other;
                }
            }
        }
    }
    bits
}

impl MembershipSieve {
    /// Table for an arbitrary member list; entries above `bound` are ignored.
    pub fn from_members(bound: usize, members: impl IntoIterator<Item = u64>) -> Self {
        let mut bits = vec![false; bound + 1];
        let mut listed: Vec<u64> = Vec::new();
        for m in members {
            assert!(m >= 1, "members must be >= 1");
            if (m as usize) <= bound {
                bits[m as usize] = true;
            }
            listed.push(m);
        }
        listed.sort_unstable();
        listed.dedup();
        MembershipSieve { bound, bits, source: SetExpr::Set(listed), closed: OnceLock::new() }
    }

    pub fn bound(&self) -> usize {
        self.bound
    }

    pub fn source(&self) -> &SetExpr {
        &self.source
    }

    pub fn spec(&self) -> Option<&SemigroupSpec> {
        match &self.source {
            SetExpr::Spec(s) => Some(s),
            SetExpr::Set(_) => None,
        }
    }

    pub fn contains(&self, n: u64) -> bool {
        n >= 1 && (n as usize) <= self.bound && self.bits[n as usize]
    }

    pub fn members(&self) -> impl Iterator<Item = u64> + '_ {
        (1..=self.bound).filter(|&k| self.bits[k]).map(|k| k as u64)
    }

    pub fn count(&self) -> usize {
        self.bits.iter().filter(|&&b| b).count()
    }

    /// Same underlying set description, so supports can be shared.
    pub fn same_set(&self, other: &MembershipSieve) -> bool {
        self.source == other.source
    }

    /// Re-sieve the same description on a smaller bound.
    pub fn restrict(&self, bound: usize) -> MembershipSieve {
        let bound = bound.min(self.bound);
        let closed = OnceLock::new();
        if self.closed.get() == Some(&true) {
            let _ = closed.set(true);
        }
        MembershipSieve {
            bound,
            bits: self.bits[..=bound].to_vec(),
            source: self.source.clone(),
            closed,
        }
    }

    /// Every pair `a <= b` of members with `ab <= N` and `ab` missing, in lexicographic order.
    pub fn verify_closure(&self) -> Vec<Violation> {
        let members: Vec<u64> = self.members().collect();
        let mut out = Vec::new();
        for (i, &a) in members.iter().enumerate() {
            if a * a > self.bound as u64 {
                break;
            }
            for &b in &members[i..] {
                let ab = a * b;
                if ab > self.bound as u64 {
                    break;
                }
                if !self.bits[ab as usize] {
                    out.push((a, b, ab));
                }
            }
        }
        out
    }

    /// Whether `1` is a member and no closure violation exists; cached.
    pub fn is_closed(&self) -> bool {
        *self
            .closed
            .get_or_init(|| self.contains(1) && self.verify_closure().is_empty())
    }

    pub fn to_json(&self) -> SieveJson {
        SieveJson {
            spec: self.source.to_string(),
            n: self.bound,
            members: self.members().collect(),
        }
    }

    /// Rebuilds the sieve from its expression and checks the member list matches.
    pub fn from_json(json: &SieveJson, ceiling: usize) -> Result<Self> {
        let expr: SetExpr = json.spec.parse()?;
        let sv = sieve_expr(&expr, json.n, ceiling)?;
        let members: Vec<u64> = sv.members().collect();
        if members != json.members {
            return Err(Error::Json(format!(
                "member list does not match {} on [1..{}]",
                json.spec, json.n
            )));
        }
        Ok(sv)
    }
}

/// Wire form `{spec, N, members}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SieveJson {
    pub spec: String,
    #[serde(rename = "N")]
    pub n: usize,
    pub members: Vec<u64>,
}
