// Inverses of series supported on a semigroup stay on the semigroup.

use std::sync::Arc;

use lacunary::sample::random_exact_unit;
use lacunary::semigroup::{sieve, SemigroupSpec};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let n = 2000;
    let sv = Arc::new(sieve(&SemigroupSpec::coprime_to(6)?, n)?);
    let mut rng = ChaCha8Rng::seed_from_u64(7);

    let f = random_exact_unit(&sv, n, 0.05, &mut rng)?;
    let g = f.invert()?;
    let off: Vec<u64> = g.support_indices().into_iter().filter(|&k| !sv.contains(k)).collect();
    assert!(off.is_empty());
    assert!(f.convolve(&g)?.is_unit_series());
    println!(
        "f has {} terms on coprime(6); its inverse has {} terms, all on coprime(6)",
        f.nonzero_terms().count(),
        g.nonzero_terms().count()
    );
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
