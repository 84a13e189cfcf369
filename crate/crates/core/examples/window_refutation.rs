// Window test vectors for the family a(t) = c / t with c above (n + 2s)/2.
//
//     cargo run --example window_refutation

use hyponorm::hypotest::{refute_window, window_value, WindowSearchConfig};
use hyponorm::numerics::{fmt_rational, int, Scalar};
use hyponorm::sequences::SymbolParams;

pub fn run_example() -> hyponorm::Result<()> {
    let (n, m, s) = (1, 1, int(1));
    for c in [int(2), int(3)] {
        let cfg = WindowSearchConfig::for_family(n, m, &s, &c)?;
        println!(
            "c = {}: eta = {}, epsilon = {}, window length k2 = {}",
            fmt_rational(&c),
            fmt_rational(&cfg.eta),
            fmt_rational(&cfg.epsilon),
            cfg.k2
        );
        let v = refute_window(n, m, &s, &c, &cfg)?;
        match v.witness {
            Some(w) => println!(
                "  violated at t = {}, k1 = {}: form value {:.4e}",
                fmt_rational(&w.t),
                w.vector.support_start,
                w.value.to_f64()
            ),
            None => println!("  no violation on the grid"),
        }
    }

    // the same window on the hyponormal side stays positive
    let t = 64;
    let p = SymbolParams::new(n, m, s.clone(), int(t), int(1) / int(t))?;
    println!("c = 1, t = {t}, window [4096, 4110]: {:.4e}", window_value(&p, 4096, 14).to_f64());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("window example");
}
