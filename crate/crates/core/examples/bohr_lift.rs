// The Bohr lift turns Dirichlet convolution into polynomial multiplication.

use lacunary::bohr::{drop, lift, poly_multiply, Basis};
use lacunary::scalar::exact;
use lacunary::series::ExactSeries;

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    let n = 60;
    // 1 - 2^{-s} and 1 + 3^{-s} + 6^{-s}
    let f = ExactSeries::from_fn(n, |k| match k {
        1 => exact(1, 1, 0, 1),
        2 => exact(-1, 1, 0, 1),
        _ => exact(0, 1, 0, 1),
    })?;
    let g = ExactSeries::from_fn(n, |k| match k {
        1 | 3 | 6 => exact(1, 1, 0, 1),
        _ => exact(0, 1, 0, 1),
    })?;

    let pf = lift(&f, &Basis::Primes)?;
    let pg = lift(&g, &Basis::Primes)?;
    let product = poly_multiply(&pf, &pg, Some(n as u64))?;
    assert_eq!(product, lift(&f.convolve(&g)?, &Basis::Primes)?);
    assert_eq!(drop(&product, n)?.coeffs(), f.convolve(&g)?.coeffs());
    for (v, c) in product.terms() {
        println!("  {c} * {v}");
    }

    // the squares, with the prime squares as variables
    let basis = Basis::generators(vec![4, 9, 25, 49])?;
    let h = ExactSeries::from_fn(n, |k| if k == 36 { exact(2, 1, 0, 1) } else { exact(0, 1, 0, 1) })?;
    println!("36 over {{4,9,25,49}}: {:?}", lift(&h, &basis)?.terms().keys().next().map(ToString::to_string));
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
