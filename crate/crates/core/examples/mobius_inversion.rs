// Invert the truncated zeta function and recover the Möbius function.

use std::sync::Arc;
use std::time::Instant;

use lacunary::arith::factorize;
use lacunary::scalar::exact_int;
use lacunary::semigroup::{sieve, SemigroupSpec};
use lacunary::series::{zeta_s, ExactSeries};

fn mobius(n: u64) -> i64 {
    let f = factorize(n);
    if f.iter().any(|&(_, e)| e > 1) {
        0
    } else if f.len().is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let n = 10_000;
    let full = Arc::new(sieve(&SemigroupSpec::Full, n)?);
    let zeta: ExactSeries = zeta_s(&full, n)?;

    let start = Instant::now();
    let mu = zeta.invert()?;
    println!("inverted zeta at N = {n} in {:?}", start.elapsed());

    for k in 1..=n as u64 {
        assert_eq!(mu.coeff(k), exact_int(mobius(k)), "n = {k}");
    }
    let first: Vec<i64> = (1..=12).map(mobius).collect();
    println!("mu(1..12) = {first:?}");
    assert!(zeta.convolve(&mu)?.is_unit_series());
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
