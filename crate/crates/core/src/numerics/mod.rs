//! Exact rational arithmetic, polynomial root isolation and banded symmetric
//! eigenvalues.

pub mod banded;
pub mod polynomial;
pub mod roots;
pub mod scalar;

pub use banded::{banded_min_eigenvalue, BandEigen};
pub use polynomial::Polynomial;
pub use roots::{isolate_positive_roots, isolate_real_roots, refine_root, sign_on_ray, RootInterval};
pub use scalar::{fmt_rational, int, parse_rational, rat, rational_from_f64, Rational, Scalar};
