// Sieve a few semigroups, list their atoms and look for non-unique factorizations.

use lacunary::semigroup::{atoms, factorizations, sieve, sieve_expr, SemigroupSpec, SetExpr, DEFAULT_MAX_N};

pub fn run_example() -> Result<(), Box<dyn std::error::Error>> {
    for text in ["full", "powers(2)", "coprime(6)", "sum2sq", "gen(4,6,9)"] {
        let spec: SemigroupSpec = text.parse()?;
        let sv = sieve(&spec, 200)?;
        let report = atoms(&sv)?;
        let shown: Vec<_> = report.atoms.iter().take(8).collect();
        println!(
            "{spec:<12} members<=200: {:>3}  atoms: {shown:?}  unique: {}",
            sv.count(),
            report.unique_factorization
        );
        if let Some(n) = report.counterexample {
            println!("    {n} = {:?}", factorizations(&sv, n)?);
        }
    }

    // squares of integers: a free monoid on the prime squares
    let squares = sieve(&SemigroupSpec::powers(2)?, 10_000)?;
    assert!(atoms(&squares)?.unique_factorization);
    assert_eq!(factorizations(&squares, 144)?, vec![vec![4, 4, 9]]);

    let adhoc: SetExpr = "{1,2,3}".parse()?;
    let sv = sieve_expr(&adhoc, 10, DEFAULT_MAX_N)?;
    println!("{adhoc} is closed: {}  violations: {:?}", sv.is_closed(), sv.verify_closure());
    Ok(())
}

fn main() {
    if let Err(e) = run_example() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
