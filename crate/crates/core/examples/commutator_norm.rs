// Norm of the self-commutator of T_{z^m zbar^n} and the index attaining it.
//
//     cargo run --example commutator_norm

use hyponorm::commutator::{commutator_norm, verify_half_bound};
use hyponorm::numerics::{fmt_rational, Scalar};

pub fn run_example() -> hyponorm::Result<()> {
    for (m, n) in [(2, 1), (5, 4), (8, 7), (13, 9), (40, 30), (100, 99)] {
        let r = commutator_norm(m, n)?;
        let cp = r
            .monotonicity
            .critical_point
            .as_ref()
            .map_or("none".to_string(), |iv| format!("{:.4}", iv.midpoint().to_f64()));
        println!(
            "(m, n) = ({m:>3}, {n:>3}): norm {:>24} = {:.6} at k = {:>2}, {:?}, critical point {cp}",
            fmt_rational(&r.norm),
            r.norm.to_f64(),
            r.argmax_k,
            r.monotonicity.classification,
        );
        let rec = verify_half_bound(m, n)?;
        assert!(rec.quartic.all_positive());
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("commutator example");
}
