use serde::{Deserialize, Serialize};

use super::sieve::MembershipSieve;
use crate::error::{Error, Result};

/// Irreducible elements of a truncated semigroup and its factorization behaviour.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AtomReport {
    pub atoms: Vec<u64>,
    pub unique_factorization: bool,
    /// Least member with two or more atom factorizations.
    pub counterexample: Option<u64>,
    /// Members with no factorization over atoms `<= N`. Every factor of a member
    /// `n <= N` is itself `<= N`, so on a closed sieve this stays zero.
    pub skipped: usize,
}

/// Members `> 1` with no splitting `xy` into two members `x, y > 1`.
fn irreducibles(sv: &MembershipSieve) -> Vec<u64> {
    let n = sv.bound();
    let members: Vec<u64> = sv.members().collect();
    let mut reducible = vec![false; n + 1];
    for (i, &a) in members.iter().enumerate().skip(1) {
        if a * a > n as u64 {
            break;
        }
        for &b in &members[i..] {
            let ab = a * b;
            if ab > n as u64 {
                break;
            }
            reducible[ab as usize] = true;
        }
    }
    members.into_iter().skip(1).filter(|&m| !reducible[m as usize]).collect()
}

/// Atoms of a closed sieve together with a unique-factorization verdict on `[1..N]`.
pub fn atoms(sv: &MembershipSieve) -> Result<AtomReport> {
    if let Some(&(a, b, product)) = sv.verify_closure().first() {
        return Err(Error::ClosureViolation { a, b, product });
    }
    if !sv.contains(1) {
        return Err(Error::NotInSemigroup(1));
    }
    let atoms = irreducibles(sv);
    let n = sv.bound();

    // multiset count by unbounded knapsack over atoms, saturating at 2
    let mut ways = vec![0u8; n + 1];
    ways[1] = 1;
    for &a in &atoms {
        let a = a as usize;
        for m in (a..=n).step_by(a) {
            ways[m] = ways[m].saturating_add(ways[m / a]).min(2);
        }
    }
    let mut counterexample = None;
    let mut skipped = 0;
    for m in sv.members() {
        match ways[m as usize] {
            0 => skipped += 1,
            1 => {}
            _ => {
                counterexample.get_or_insert(m);
            }
        }
    }
    Ok(AtomReport { atoms, unique_factorization: counterexample.is_none(), counterexample, skipped })
}

/// All multisets of atoms with product `n`, each sorted ascending, listed lexicographically.
pub fn factorizations(sv: &MembershipSieve, n: u64) -> Result<Vec<Vec<u64>>> {
    if !sv.contains(n) {
        return Err(Error::NotInSemigroup(n));
    }
    let atoms = irreducibles(sv);
    Ok(factorizations_over(&atoms, n))
}

/// Multisets drawn from the ascending list `atoms` whose product is `n`.
pub fn factorizations_over(atoms: &[u64], n: u64) -> Vec<Vec<u64>> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    descend(atoms, n, 0, &mut stack, &mut out);
    out
}

fn descend(atoms: &[u64], rest: u64, start: usize, stack: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    if rest == 1 {
        out.push(stack.clone());
        return;
    }
    for (i, &a) in atoms.iter().enumerate().skip(start) {
        if a > rest {
            break;
        }
        if rest.is_multiple_of(a) {
            stack.push(a);
            descend(atoms, rest / a, i, stack, out);
            stack.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::primes_up_to;
    use crate::semigroup::{sieve, SemigroupSpec};

    fn sv(spec: &str, n: usize) -> MembershipSieve {
        sieve(&spec.parse::<SemigroupSpec>().unwrap(), n).unwrap()
    }

    #[test]
    fn full_semigroup_atoms_are_primes() {
        let report = atoms(&sv("full", 30)).unwrap();
        assert_eq!(report.atoms, primes_up_to(30));
        assert!(report.unique_factorization);
        assert_eq!(report.skipped, 0);
    }

    #[test]
    fn trivial_semigroup_has_no_atoms() {
        let report = atoms(&sv("trivial", 10)).unwrap();
        assert!(report.atoms.is_empty());
        assert!(report.unique_factorization);
    }

    #[test]
    fn squares_are_free_on_prime_squares() {
        let report = atoms(&sv("powers(2)", 100)).unwrap();
        assert_eq!(report.atoms, vec![4, 9, 25, 49]);
        assert!(!report.atoms.contains(&36));
        assert!(report.unique_factorization);
    }

    #[test]
    fn non_unique_factorization_is_detected() {
        // 36 = 4 * 9 = 6 * 6
        let report = atoms(&sv("gen(4,6,9)", 100)).unwrap();
        assert_eq!(report.atoms, vec![4, 6, 9]);
        assert!(!report.unique_factorization);
        assert_eq!(report.counterexample, Some(36));
        assert_eq!(
            factorizations(&sv("gen(4,6,9)", 100), 36).unwrap(),
            vec![vec![4, 9], vec![6, 6]]
        );
    }

    #[test]
    fn factorization_examples() {
        let full = sv("full", 100);
        assert_eq!(factorizations(&full, 12).unwrap(), vec![vec![2, 2, 3]]);
        assert_eq!(factorizations(&full, 1).unwrap(), vec![Vec::<u64>::new()]);
        assert_eq!(factorizations(&sv("powers(2)", 10_000), 144).unwrap(), vec![vec![4, 4, 9]]);
        assert!(matches!(factorizations(&sv("coprime(2)", 100), 4), Err(Error::NotInSemigroup(4))));
    }

    #[test]
    fn atoms_rejects_non_closed_sets() {
        let adhoc = MembershipSieve::from_members(10, [1, 2, 3]);
        assert_eq!(atoms(&adhoc), Err(Error::ClosureViolation { a: 2, b: 2, product: 4 }));
    }
}
