// Point evaluation as an inner product against the shifted lacunary zeta function.

use std::sync::Arc;

use lacunary::sample::random_float;
use lacunary::semigroup::{sieve, SemigroupSpec};
use lacunary::series::{evaluate, inner_product, kernel_series, HalfPlanePoint};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let a = HalfPlanePoint::new(0.75, 0.3);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for text in ["full", "gen(2,3)", "coprime(10)", "sum2sq"] {
        let sv = Arc::new(sieve(&text.parse::<SemigroupSpec>()?, 500)?);
        let f = random_float(&sv, 300, 0.2, &mut rng)?;
        let kernel = kernel_series(&sv, a, 500)?;
        let lhs = inner_product(&f, &kernel);
        let rhs = evaluate(&f, a, None).value;
        let rel = (lhs - rhs).norm() / rhs.norm().max(f64::MIN_POSITIVE);
        println!("{text:<12} <f, k_a> = {lhs:.6}   f(a) = {rhs:.6}   rel. diff {rel:.1e}");
        assert!(rel < 1e-9);
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
