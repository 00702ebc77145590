// Fejér mollification: triangular coefficient weights `max(1 - ln n / m, 0)`.

use std::sync::Arc;

use lacunary::semigroup::{sieve, SemigroupSpec};
use lacunary::series::{fejer_smooth, zeta_s, FloatSeries};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let n = 5000;
    let sv = Arc::new(sieve(&SemigroupSpec::Full, n)?);
    let zeta: FloatSeries = zeta_s(&sv, n)?;
    let mut last = f64::INFINITY;
    for m in [1.0, 2.0, 4.0, 8.0] {
        let g = fejer_smooth(&zeta, m)?;
        let dist = g.sub(&zeta).l2_norm();
        println!("m = {m}: {} surviving terms, ‖φ_m f - f‖₂ = {dist:.3}", g.nonzero_terms().count());
        assert!(g.degree() as f64 <= m.exp());
        assert!(dist <= last);
        last = dist;
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
