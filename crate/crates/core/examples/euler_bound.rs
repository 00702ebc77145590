// Pointwise bound `|f(s)| <= C_{s,r} ‖f‖₂` for polynomials in the first r primes.

use num::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lacunary::arith::first_primes;
use lacunary::series::{euler_constant, lemma_bound, FloatSeries, HalfPlanePoint};

fn smooth_numbers(primes: &[u64], bound: u64) -> Vec<u64> {
    let mut out = vec![1];
    for &p in primes {
        let mut next = Vec::new();
        for &m in &out {
            let mut v = m;
            while v <= bound {
                next.push(v);
                v *= p;
            }
        }
        out = next;
    }
    out.sort_unstable();
    out
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for r in 1..=4 {
        let n = 1000;
        let slots = smooth_numbers(&first_primes(r), n as u64);
        let f = FloatSeries::from_fn(n, |k| {
            if slots.binary_search(&k).is_ok() {
                Complex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))
            } else {
                Complex::new(0.0, 0.0)
            }
        })?;
        let s = HalfPlanePoint::new(0.5, 1.0);
        let check = lemma_bound(&f, s, r)?;
        println!(
            "r = {r}: C = {:.4}  |f(s)| = {:.4}  C‖f‖₂ = {:.4}",
            euler_constant(s, r)?,
            check.value_abs,
            check.bound
        );
        assert!(check.holds);
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
