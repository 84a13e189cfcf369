// Brackets the largest |a| for which T_phi is hyponormal.
//
//     cargo run --example boundary_sweep

use hyponorm::hypotest::{basis_vector_bound, boundary_sweep, SweepOptions, SweepOutcome};
use hyponorm::numerics::{int, rat, Scalar};
use hyponorm::sequences::SymbolParams;

pub fn run_example() -> hyponorm::Result<()> {
    let cases = [
        (1, 1, int(1), int(1)),
        (1, 2, rat(1, 2), int(3)),
        (2, 1, int(2), rat(1, 2)),
    ];
    for (n, m, s, t) in cases {
        let p = SymbolParams::new(n, m, s.clone(), t.clone(), int(0))?;
        let res = boundary_sweep(&p, &rat(1, 1000), &SweepOptions::default())?;
        let basis = basis_vector_bound(&p, 1 << 14).bound.to_f64().sqrt();
        let status = match res.outcome {
            SweepOutcome::Converged => "converged".to_string(),
            SweepOutcome::Inconclusive { note, .. } => {
                format!("stopped: {}", note.split(" (").next().unwrap_or(&note))
            }
        };
        println!(
            "(n, m, s, t) = ({n}, {m}, {s}, {t}): |a| in [{:.5}, {:.5}] after {} steps ({status}); basis vectors alone give {basis:.5}",
            res.lo.to_f64(),
            res.hi.to_f64(),
            res.iterations
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("sweep example");
}
