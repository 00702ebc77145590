// Unimodular tuples with explicit cofactors, over the primes and over sums of two squares.

use lacunary::arith::first_primes;
use lacunary::scalar::ExactComplex;
use lacunary::semigroup::{atoms, sieve, SemigroupSpec};
use lacunary::series::DirichletSeries;
use lacunary::stable_rank::{check_reduction_certificate, required_truncation, unimodular_tuple, verify_bezout};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let sum2sq = atoms(&sieve(&SemigroupSpec::SumOfTwoSquares, 200)?)?.atoms;
    for n in 1..=3 {
        for (label, q) in [("primes", first_primes(2 * n)), ("sum2sq", sum2sq[..2 * n].to_vec())] {
            let big_n = required_truncation(&q).unwrap_or(u64::MAX);
            let sys = unimodular_tuple::<ExactComplex>(&q, n, None)?;
            let verdict = verify_bezout(&sys)?;
            println!("n = {n} {label:<6} q = {q:?}  N = {big_n}  holds: {}", verdict.holds);
            assert!(verdict.holds);
        }
    }

    // a reduction that does work: f_2 = 1 - 6^{-s}, x = 1 - f_1 gives f_1 + x f_2 = 1 on [1..6]
    let sys = unimodular_tuple::<ExactComplex>(&[2, 3], 1, None)?;
    let one = DirichletSeries::unit(sys.truncation)?;
    let x = one.sub(&sys.fs[0]);
    let reduced = sys.fs[0].add(&x.convolve(&sys.fs[1])?);
    let y = reduced.invert()?;
    println!("formal reduction on the truncation: {}", check_reduction_certificate(&sys, &[x], &[y])?);
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
