//! Hyponormality of `T_phi` for `phi = z^n |z|^{2s} + a zbar^m |z|^{2t}`.
//!
//! `T_phi` is hyponormal iff the quadratic form
//!
//! ```text
//! Q(u) = |a|^2 sum omega_k |u_k|^2 - 2|a| sum |delta_k u_k conj(u_{k+n+m})| + sum sigma_k |u_k|^2
//! ```
//!
//! is strictly positive on every nonzero finitely supported `u`. `Q` depends on
//! `u` only through `|u_k|`, so it suffices to consider nonnegative real vectors,
//! which turns `Q` into a real symmetric form with a single band at offset
//! `n + m` (see [`QuadraticFormBand`]).
//!
//! Verdicts are always backed by exact rational arithmetic: refutations carry a
//! finitely supported witness with its exact (negative) form value, and
//! certifications carry a pointwise-domination certificate whose tail is closed
//! by an exact polynomial positivity argument.

mod bounds;
mod certify;
mod form;
mod refute;
mod sweep;
mod window;

pub use bounds::{basis_vector_bound, kl_ratio_bound, lambda_ratio, lambda_ratio_limit, BasisBound, KlBound};
pub use certify::{certify_hyponormal, tail_polynomial, Certificate, TailPolynomial};
pub use form::{assemble_form, form_value, QuadraticFormBand};
pub use refute::refute_truncated;
pub use sweep::{boundary_sweep, SweepOptions, SweepOutcome, SweepResult};
pub use window::{refute_window, window_value, WindowSearchConfig};

use serde::Serialize;

use crate::numerics::Rational;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Status {
    CertifiedHyponormal,
    CertifiedNotHyponormal,
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VectorKind {
    Window,
    Eigenvector,
    Basis,
}

/// Finitely supported test sequence: `u_{support_start + i} = values[i]`.
#[derive(Clone, Debug, PartialEq)]
pub struct TestVector {
    pub support_start: u64,
    pub values: Vec<Rational>,
    pub kind: VectorKind,
}

impl TestVector {
    pub fn basis(k: u64) -> Self {
        TestVector { support_start: k, values: vec![crate::numerics::int(1)], kind: VectorKind::Basis }
    }

    pub fn window(k1: u64, k2: u64) -> Self {
        TestVector {
            support_start: k1,
            values: vec![crate::numerics::int(1); (k2 + 1) as usize],
            kind: VectorKind::Window,
        }
    }

    pub fn support_end(&self) -> u64 {
        self.support_start + self.values.len() as u64 - 1
    }
}

/// A violating test vector for the symbol with coefficient modulus `a` and
/// co-analytic exponent `t`, with its exactly evaluated form value.
#[derive(Clone, Debug, PartialEq)]
pub struct Witness {
    pub vector: TestVector,
    pub value: Rational,
    pub a: Rational,
    pub t: Rational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Float,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Diagnostics {
    pub truncation: usize,
    pub mode: Mode,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct HypoVerdict {
    pub status: Status,
    pub witness: Option<Witness>,
    pub certificate: Option<Certificate>,
    pub diagnostics: Diagnostics,
}

impl HypoVerdict {
    pub(crate) fn inconclusive(truncation: usize, note: impl Into<String>) -> Self {
        HypoVerdict {
            status: Status::Inconclusive,
            witness: None,
            certificate: None,
            diagnostics: Diagnostics { truncation, mode: Mode::Exact, note: Some(note.into()) },
        }
    }

    pub(crate) fn refuted(truncation: usize, witness: Witness) -> Self {
        HypoVerdict {
            status: Status::CertifiedNotHyponormal,
            witness: Some(witness),
            certificate: None,
            diagnostics: Diagnostics { truncation, mode: Mode::Exact, note: None },
        }
    }

    pub fn is_degenerate(&self) -> bool {
        self.diagnostics.note.as_deref().is_some_and(|n| n.starts_with(DEGENERATE))
    }
}

pub(crate) const DEGENERATE: &str = "degenerate-form";

/// Truncation schedule: start at `start`, double on an inconclusive tail up to `max`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Truncation {
    pub start: usize,
    pub max: usize,
}

impl Truncation {
    pub const fn fixed(k: usize) -> Self {
        Truncation { start: k, max: k }
    }

    pub fn sizes(&self) -> impl Iterator<Item = usize> {
        let max = self.max;
        std::iter::successors(Some(self.start), move |&k| (k < max).then(|| (2 * k).min(max)))
    }
}

impl Default for Truncation {
    fn default() -> Self {
        Truncation { start: 256, max: 1 << 15 }
    }
}
