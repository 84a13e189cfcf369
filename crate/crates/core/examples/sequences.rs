// Tabulates sigma_k, omega_k, delta_k for one symbol and the commutator
// eigenvalues lambda_k for one pair (m, n).
//
//     cargo run --example sequences

use hyponorm::numerics::{fmt_rational, int, rat, Scalar};
use hyponorm::sequences::{asymptotic_leading, delta, lambda_eig, omega, sigma, SequenceKind, SymbolParams};

pub fn run_example() -> hyponorm::Result<()> {
    let p = SymbolParams::new(2, 1, rat(1, 2), int(3), int(0))?;
    println!("n = 2, m = 1, s = 1/2, t = 3");
    println!("{:>6} {:>24} {:>24} {:>24}", "k", "sigma", "omega", "delta");
    for k in [0, 1, 2, 3, 10, 100] {
        println!(
            "{k:>6} {:>24} {:>24} {:>24}",
            fmt_rational(&sigma(&p, k)),
            fmt_rational(&omega(&p, k)),
            fmt_rational(&delta(&p, k))
        );
    }

    println!("\nratio to the leading term");
    for k in [100u64, 10_000, 1_000_000] {
        let r = |kind, exact: f64| exact / asymptotic_leading(kind, &p, k).unwrap();
        println!(
            "k = {k:>8}: sigma {:.6}  omega {:.6}  delta {:.6}",
            r(SequenceKind::Sigma, sigma(&p, k).to_f64()),
            r(SequenceKind::Omega, omega(&p, k).to_f64()),
            r(SequenceKind::Delta, delta(&p, k).to_f64()),
        );
    }

    println!("\nlambda_k(8, 7)");
    for k in 0..8 {
        let v = lambda_eig(8, 7, k)?;
        println!("k = {k}: {:>12} = {:.6}", fmt_rational(&v), v.to_f64());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("sequences example");
}
