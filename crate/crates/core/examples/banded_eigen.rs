// Smallest eigenvalue of the truncated hyponormality form, a symmetric
// matrix with one off-diagonal band at distance n + m.
//
//     cargo run --example banded_eigen

use hyponorm::hypotest::assemble_form;
use hyponorm::numerics::banded_min_eigenvalue;
use hyponorm::sequences::SymbolParams;

pub fn run_example() -> hyponorm::Result<()> {
    for a in [0.2, 0.25, 0.3, 1.0] {
        let p = SymbolParams::new(1, 2, 0.5, 3.0, a)?;
        for size in [64, 512, 4096] {
            let form = assemble_form(&p, size)?;
            let eig = banded_min_eigenvalue(&form.diag, &form.band, form.offset)?;
            let rayleigh = form.evaluate(&eig.vector.iter().map(|x| x.abs()).collect::<Vec<_>>());
            let peak = eig
                .vector
                .iter()
                .enumerate()
                .max_by(|x, y| x.1.abs().total_cmp(&y.1.abs()))
                .map_or(0, |(i, _)| i);
            println!(
                "|a| = {a:.2}, K = {size:>4}: lambda_min = {:+.4e}, form on |v| = {:+.4e}, largest entry at k = {peak}",
                eig.value, rayleigh
            );
        }
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("banded example");
}
