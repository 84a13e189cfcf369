use num_traits::Zero;

use super::bounds::basis_vector_bound;
use super::certify::{certify_hyponormal, Certificate};
use super::refute::refute_truncated;
use super::{Status, Truncation, Witness};
use crate::error::{Error, Result};
use crate::numerics::{fmt_rational, int, rat, scalar::sqrt_upper, Rational};
use crate::sequences::SymbolParams;

#[derive(Clone, Debug)]
pub struct SweepOptions {
    pub certify: Truncation,
    /// Truncations tried, in order, when refuting a midpoint.
    pub refute_sizes: Vec<usize>,
    pub max_iterations: usize,
    /// Length of the basis-vector scan used to seed the upper end.
    pub basis_scan: u64,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            certify: Truncation::default(),
            refute_sizes: vec![256, 1024, 4096],
            max_iterations: 200,
            basis_scan: 1 << 14,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum SweepOutcome {
    /// `lo` certified hyponormal, `hi` refuted, `hi - lo <= tol`.
    Converged,
    /// Bisection stopped at `at`, where neither verdict could be obtained.
    Inconclusive { at: Rational, note: String },
}

#[derive(Clone, Debug)]
pub struct SweepResult {
    pub lo: Rational,
    pub hi: Rational,
    pub outcome: SweepOutcome,
    pub lo_certificate: Option<Certificate>,
    pub hi_witness: Option<Witness>,
    pub iterations: usize,
}

/// Brackets the largest `|a|` with `T_phi` hyponormal by bisection between a
/// certified lower end and a refuted upper end.
///
/// The upper end starts just above the square root of 1.001 times the
/// basis-vector bound and is doubled until a witness appears. The
/// `|a|` in `params` is ignored.
pub fn boundary_sweep(params: &SymbolParams<Rational>, tol: &Rational, opts: &SweepOptions) -> Result<SweepResult> {
    let base = params.with_a(Rational::zero());
    let lo_verdict = certify_hyponormal(&base, &opts.certify)?;
    if lo_verdict.status != Status::CertifiedHyponormal {
        return Err(Error::BudgetExhausted("could not certify |a| = 0".into()));
    }
    let mut lo = Rational::zero();
    let mut lo_certificate = lo_verdict.certificate;

    let seed = basis_vector_bound(&base, opts.basis_scan);
    let mut hi = sqrt_upper(&(seed.bound * rat(1001, 1000)), 40);
    let mut hi_witness = None;
    let mut iterations = 0;
    while hi_witness.is_none() {
        iterations += 1;
        if iterations > opts.max_iterations {
            return Err(Error::BudgetExhausted(format!("no refutation up to |a| = {}", fmt_rational(&hi))));
        }
        match refute(&base.with_a(hi.clone()), &opts.refute_sizes) {
            Some(w) => hi_witness = Some(w),
            None => hi *= int(2),
        }
    }

    while &hi - &lo > *tol {
        iterations += 1;
        if iterations > opts.max_iterations {
            return Err(Error::BudgetExhausted(format!(
                "bracket [{}, {}] after {} iterations",
                fmt_rational(&lo),
                fmt_rational(&hi),
                opts.max_iterations
            )));
        }
        let mid = (&lo + &hi) / int(2);
        let at_mid = base.with_a(mid.clone());
        let verdict = certify_hyponormal(&at_mid, &opts.certify)?;
        if verdict.status == Status::CertifiedHyponormal {
            lo = mid;
            lo_certificate = verdict.certificate;
            continue;
        }
        if let Some(w) = refute(&at_mid, &opts.refute_sizes) {
            hi = mid;
            hi_witness = Some(w);
            continue;
        }
        let note = verdict.diagnostics.note.unwrap_or_default();
        return Ok(SweepResult {
            lo,
            hi,
            outcome: SweepOutcome::Inconclusive { at: mid, note },
            lo_certificate,
            hi_witness,
            iterations,
        });
    }
    Ok(SweepResult { lo, hi, outcome: SweepOutcome::Converged, lo_certificate, hi_witness, iterations })
}

fn refute(params: &SymbolParams<Rational>, sizes: &[usize]) -> Option<Witness> {
    sizes
        .iter()
        .filter(|&&k| k > params.offset())
        .find_map(|&k| refute_truncated(params, k).witness)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn symmetric_case_brackets_one() {
        let p = SymbolParams::new(1, 1, int(1), int(1), int(0)).unwrap();
        let r = boundary_sweep(&p, &rat(1, 1000), &SweepOptions::default()).unwrap();
        assert_eq!(r.outcome, SweepOutcome::Converged);
        assert!(r.lo < int(1) && int(1) < r.hi);
        assert!(&r.hi - &r.lo <= rat(1, 1000));
        assert!(r.lo_certificate.is_some() && r.hi_witness.is_some());
    }

    #[test]
    fn coarse_tolerance_returns_immediately() {
        let p = SymbolParams::new(1, 1, int(1), int(1), int(0)).unwrap();
        let r = boundary_sweep(&p, &int(10), &SweepOptions::default()).unwrap();
        assert_eq!(r.lo, int(0));
        assert_eq!(r.outcome, SweepOutcome::Converged);
        assert!(r.hi <= int(10));
    }
}
