macro_rules! example {
    ($module:ident, $file:literal) => {
        mod $module {
            include!(concat!(env!("CARGO_MANIFEST_DIR"), "/examples/", $file));
        }
    };
}

example!(sequences, "sequences.rs");
example!(hyponormality_check, "hyponormality_check.rs");
example!(window_refutation, "window_refutation.rs");
example!(boundary_sweep, "boundary_sweep.rs");
example!(necessary_bounds, "necessary_bounds.rs");
example!(commutator_norm, "commutator_norm.rs");
example!(monotonicity_region, "monotonicity_region.rs");
example!(root_isolation, "root_isolation.rs");
example!(banded_eigen, "banded_eigen.rs");

#[test]
fn sequences_runs() {
    sequences::run_example().unwrap();
}

#[test]
fn hyponormality_check_runs() {
    hyponormality_check::run_example().unwrap();
}

#[test]
fn window_refutation_runs() {
    window_refutation::run_example().unwrap();
}

#[test]
fn boundary_sweep_runs() {
    boundary_sweep::run_example().unwrap();
}

#[test]
fn necessary_bounds_runs() {
    necessary_bounds::run_example().unwrap();
}

#[test]
fn commutator_norm_runs() {
    commutator_norm::run_example().unwrap();
}

#[test]
fn monotonicity_region_runs() {
    monotonicity_region::run_example().unwrap();
}

#[test]
fn root_isolation_runs() {
    root_isolation::run_example().unwrap();
}

#[test]
fn banded_eigen_runs() {
    banded_eigen::run_example().unwrap();
}
