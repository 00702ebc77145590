// Finite-N estimates of the abscissas of convergence and absolute convergence.

use num::Complex;

use lacunary::series::{abscissa_estimates, FloatSeries};

type Case = (&'static str, fn(u64) -> f64);

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let n = 10_000;
    let cases: [Case; 3] = [
        ("1", |_| 1.0),
        ("(-1)^(n+1)", |k| if k % 2 == 1 { 1.0 } else { -1.0 }),
        ("n^(-1/2)", |k| (k as f64).powf(-0.5)),
    ];
    for (label, a) in cases {
        let f = FloatSeries::from_fn(n, |k| Complex::new(a(k), 0.0))?;
        let est = abscissa_estimates(&f);
        println!(
            "a_n = {label:<11} sigma_c ~ {:+.3} (band {:.3})  sigma_a ~ {:+.3} (band {:.3})  reliable: {}",
            est.sigma_c, est.band_c, est.sigma_a, est.band_a, est.reliable
        );
        assert!(est.consistent);
    }
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
