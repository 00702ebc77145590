// Series and polynomials in their JSON wire formats.

use std::sync::Arc;

use lacunary::bohr::{lift, Basis};
use lacunary::io::{poly_to_json, series_to_json, AnySeries, SeriesJson};
use lacunary::semigroup::{sieve, SemigroupSpec, DEFAULT_MAX_N};
use lacunary::series::{l_series, ExactSeries};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let l: ExactSeries = l_series(6, 30)?;
    let mu = l.invert()?;
    let json = series_to_json(&mu);
    let text = serde_json::to_string(&json)?;
    println!("{text}");

    let back = AnySeries::parse(&text, DEFAULT_MAX_N)?;
    assert_eq!(back, AnySeries::Rational(mu.clone()));
    let reparsed: SeriesJson = serde_json::from_str(&text)?;
    assert_eq!(reparsed, json);

    let sv = Arc::new(sieve(&SemigroupSpec::coprime_to(6)?, 30)?);
    assert!(mu.support().is_some_and(|s| s.same_set(&sv)));
    println!("{}", serde_json::to_string(&poly_to_json(&lift(&mu, &Basis::Primes)?))?);
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
