// Pairs (m, n) where the tail eigenvalues are not monotone, written as a P1
// bitmap, and the slope of the region's lower edge.
//
//     cargo run --example monotonicity_region

use std::fs::File;
use std::io::BufWriter;

use hyponorm::commutator::{boundary_slope, scan_region};

pub fn run_example() -> hyponorm::Result<()> {
    let scan = scan_region(600, 599);
    let path = std::env::temp_dir().join("hyponorm-region-600.pbm");
    scan.write_pbm(BufWriter::new(File::create(&path)?))?;
    println!("wrote {}", path.display());
    println!("shaded cells: {}", scan.shaded_count());
    println!("first m with a shaded cell: {:?}", scan.boundary_samples.first());
    println!("columns that are not a single run: {:?}", scan.non_contiguous_columns());
    println!("pairs with d = 0: {:?}", scan.degenerate);
    let slope = boundary_slope();
    if let Some(fit) = scan.fit_boundary() {
        println!(
            "fitted slope {:.5}, m/n at m = {} is {:.5}, limiting slope {:.12}",
            fit.slope,
            fit.m_at_max,
            fit.ratio_at_max,
            slope.lo_f64()
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() {
    run_example().expect("region example");
}
