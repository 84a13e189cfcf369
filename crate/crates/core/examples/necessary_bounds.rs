// Necessary conditions on |a| from basis vectors, and the ratio bound for
// z^m zbar^{m-1} + a zbar^{m-q} z^{m-q-1}.
//
//     cargo run --example necessary_bounds

use hyponorm::hypotest::{basis_vector_bound, kl_ratio_bound, lambda_ratio, lambda_ratio_limit};
use hyponorm::numerics::{fmt_rational, int, rat, Scalar};
use hyponorm::sequences::SymbolParams;

pub fn run_example() -> hyponorm::Result<()> {
    println!("basis-vector bound on |a|^2 with t = 0");
    for (n, m, s) in [(1, 1, int(1)), (2, 3, rat(1, 2)), (3, 1, int(0)), (1, 4, int(2))] {
        let p = SymbolParams::new(n, m, s.clone(), int(0), int(0))?;
        let b = basis_vector_bound(&p, 1 << 14);
        println!(
            "  (n, m, s) = ({n}, {m}, {s}): bound {} (k = {}), endpoint values give {}",
            fmt_rational(&b.bound),
            b.argmin_k,
            fmt_rational(&b.endpoint_bound)
        );
    }

    println!("ratio bound on |a|^2");
    for (m, q) in [(3, 1), (5, 2), (10, 3)] {
        let b = kl_ratio_bound(m, q)?;
        println!(
            "  (m, q) = ({m}, {q}): {} vs {}, first term is the minimum: {}",
            fmt_rational(&b.first_term),
            fmt_rational(&b.second_term),
            b.first_is_min
        );
    }

    println!("lambda_k(5, 4) / lambda_k(3, 2)");
    for k in [1, 2, 5, 50, 5000] {
        println!("  k = {k:>4}: {:.6}", lambda_ratio(5, 2, k)?.to_f64());
    }
    println!("  limit: {}", fmt_rational(&lambda_ratio_limit(5, 2)));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("bounds example");
}
