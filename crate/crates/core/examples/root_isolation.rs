// Exact real-root isolation and refinement for rational polynomials.
//
//     cargo run --example root_isolation

use hyponorm::commutator::{cubic_p, slope_cubic};
use hyponorm::numerics::{fmt_rational, isolate_positive_roots, isolate_real_roots, rat, refine_root, Polynomial};

pub fn run_example() -> hyponorm::Result<()> {
    let cubic = slope_cubic();
    println!("{cubic}");
    for iv in isolate_real_roots(&cubic) {
        let fine = refine_root(&cubic, &iv, &rat(1, 1 << 40))?;
        println!("  root in [{}, {}] ~ {:.12}", fmt_rational(&iv.lo), fmt_rational(&iv.hi), fine.lo_f64());
    }

    let p = cubic_p(8, 7)?;
    println!("P for (m, n) = (8, 7): {p}");
    for iv in isolate_positive_roots(&p) {
        let fine = refine_root(&p, &iv, &rat(1, 1 << 30))?;
        println!("  positive root ~ {:.9}", fine.lo_f64());
    }

    // (x - 1)^2 (x + 2)(3x - 1)
    let q = &(&Polynomial::from_ints(&[-1, 1]).pow(2) * &Polynomial::from_ints(&[2, 1])) * &Polynomial::from_ints(&[-1, 3]);
    let roots: Vec<String> = isolate_real_roots(&q)
        .iter()
        .map(|iv| format!("[{}, {}]", fmt_rational(&iv.lo), fmt_rational(&iv.hi)))
        .collect();
    println!("{q}: {}", roots.join(" "));
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("roots example");
}
