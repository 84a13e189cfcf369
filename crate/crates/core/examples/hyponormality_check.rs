// Certifies or refutes hyponormality of T_phi for a few coefficients.
//
//     cargo run --example hyponormality_check

use hyponorm::hypotest::{certify_hyponormal, refute_truncated, HypoVerdict, Status, Truncation};
use hyponorm::numerics::{fmt_rational, int, rat, Rational};
use hyponorm::sequences::SymbolParams;

fn decide(p: &SymbolParams<Rational>) -> hyponorm::Result<HypoVerdict> {
    let v = certify_hyponormal(p, &Truncation::default())?;
    if v.status == Status::CertifiedHyponormal || v.is_degenerate() {
        return Ok(v);
    }
    Ok(refute_truncated(p, 2048))
}

fn describe(v: &HypoVerdict) -> String {
    match (&v.certificate, &v.witness) {
        (Some(c), _) => format!(
            "hyponormal: margins checked to k = {}, smallest {} at k = {}, tail of degree {} positive on [{}, inf)",
            c.truncation,
            fmt_rational(&c.min_margin),
            c.argmin_k,
            c.tail_degree,
            c.tail_start
        ),
        (_, Some(w)) => format!(
            "not hyponormal: {:?} vector on [{}, {}] gives {:.3e}",
            w.vector.kind,
            w.vector.support_start,
            w.vector.support_end(),
            hyponorm::numerics::Scalar::to_f64(&w.value)
        ),
        _ => format!("inconclusive: {}", v.diagnostics.note.as_deref().unwrap_or("")),
    }
}

pub fn run_example() -> hyponorm::Result<()> {
    println!("phi = z |z|^2 + a zbar |z|^2");
    for a in [rat(1, 2), rat(99, 100), int(1), rat(101, 100), int(2)] {
        let p = SymbolParams::new(1, 1, int(1), int(1), a.clone())?;
        println!("  |a| = {:>7}: {}", fmt_rational(&a), describe(&decide(&p)?));
    }

    println!("phi = z^2 |z| + a zbar^3 |z|^8");
    for a in [rat(1, 4), rat(1, 2), int(1)] {
        let p = SymbolParams::new(2, 3, rat(1, 2), int(4), a.clone())?;
        println!("  |a| = {:>7}: {}", fmt_rational(&a), describe(&decide(&p)?));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("hyponormality example");
}
