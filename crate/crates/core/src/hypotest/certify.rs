use num_traits::{Signed, Zero};
use rayon::prelude::*;

use super::{Diagnostics, HypoVerdict, Mode, Status, Truncation, DEGENERATE};
use crate::error::{Error, Result};
use crate::numerics::{int, sign_on_ray, Polynomial, Rational};
use crate::sequences::{delta, omega, sigma, SymbolParams};

/// Record backing a `CertifiedHyponormal` verdict.
///
/// Pointwise domination: `c_k = sigma_k + |a|^2 omega_k - |a|(|delta_k| +
/// |delta_{k-n-m}|) > 0` for all `k` implies the form is positive, because
/// `2|delta_k u_k u_{k+n+m}| <= |delta_k| (|u_k|^2 + |u_{k+n+m}|^2)`. The
/// values `k <= truncation` are checked one by one; for `k > truncation`,
/// `c_k` is a rational function of `k` whose numerator is shown positive on the
/// whole ray `[truncation + 1, inf)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Certificate {
    pub truncation: usize,
    pub min_margin: Rational,
    pub argmin_k: u64,
    pub tail_start: u64,
    pub tail_degree: usize,
}

/// `c(x)` on `x >= start` as `numerator / denominator` with a positive denominator.
#[derive(Clone, Debug)]
pub struct TailPolynomial {
    pub numerator: Polynomial,
    pub denominator: Polynomial,
    pub start: u64,
}

fn lin(c: &Rational) -> Polynomial {
    Polynomial::shifted_x(c.clone())
}

fn lin_u(c: u64) -> Polynomial {
    lin(&int(c as i64))
}

/// `(num, den)` of `sigma` as a function of a real index `x >= n`.
fn sigma_fn(n: u64, s: &Rational) -> (Polynomial, Polynomial) {
    let a = lin(&(int(n as i64 + 1) + s));
    let b = lin(&(int(1) + s));
    let up = lin_u(n + 1);
    let down = lin(&int(1 - n as i64));
    let num = &(&up * &b.pow(2)) - &(&down * &a.pow(2));
    (num, &a.pow(2) * &b.pow(2))
}

/// `(num, den)` of `omega` for real `x >= m`.
fn omega_fn(m: u64, t: &Rational) -> (Polynomial, Polynomial) {
    let a = lin(&(int(m as i64 + 1) + t));
    let b = lin(&(int(1) + t));
    let up = lin(&int(1 - m as i64));
    let down = lin_u(m + 1);
    let num = &(&up * &a.pow(2)) - &(&down * &b.pow(2));
    (num, &a.pow(2) * &b.pow(2))
}

/// `(num, den)` of `delta` for real `x >= 0`.
fn delta_fn(n: u64, m: u64, s: &Rational, t: &Rational) -> (Polynomial, Polynomial) {
    let f1 = lin(&(int((n + 1) as i64) + s));
    let f2 = lin(&(int((n + m + 1) as i64) + t));
    let f3 = lin(&(int((n + m + 1) as i64) + s));
    let f4 = lin(&(int((m + 1) as i64) + t));
    let num = &(&lin_u(n + 1) * &(&f3 * &f4)) - &(&lin_u(m + 1) * &(&f1 * &f2));
    let den = &(&f1 * &f2) * &(&f3 * &f4);
    (num, den)
}

/// Builds `c(x)` for `x >= start`, resolving `|delta|` by the constant sign of
/// `delta` on the ray. Returns `None` when a `delta` numerator changes sign at
/// or beyond the relevant start point.
pub fn tail_polynomial(params: &SymbolParams<Rational>, start: u64) -> Option<TailPolynomial> {
    let p = params.offset() as u64;
    assert!(start >= p && start >= params.n && start >= params.m, "tail must start beyond the branch points");
    let a = &params.a;
    let x0 = int(start as i64);
    let (sn, sd) = sigma_fn(params.n, &params.s);
    let (on, od) = omega_fn(params.m, &params.t);
    let (dn, dd) = delta_fn(params.n, params.m, &params.s, &params.t);
    let back = int(-(p as i64));
    let (dsn, dsd) = (dn.taylor_shift(&back), dd.taylor_shift(&back));

    let e1 = sign_on_ray(&dn, &x0)?;
    let e2 = sign_on_ray(&dsn, &x0)?;

    // sigma + a^2 omega - a (e1 delta(x) + e2 delta(x - p)) over the product denominator
    let a2 = a * a;
    let t_sigma = &sn * &(&od * &(&dd * &dsd));
    let t_omega = (&on * &(&sd * &(&dd * &dsd))).scale(&a2);
    let t_delta = (&dn * &(&sd * &(&od * &dsd))).scale(&(a * int(e1 as i64)));
    let t_delta_shift = (&dsn * &(&sd * &(&od * &dd))).scale(&(a * int(e2 as i64)));
    let numerator = &(&t_sigma + &t_omega) - &(&t_delta + &t_delta_shift);
    let denominator = &sd * &(&od * &(&dd * &dsd));
    Some(TailPolynomial { numerator, denominator, start })
}

/// Pointwise margins `c_k` for `k` in `0..=last`.
#[cfg(test)]
fn margins(params: &SymbolParams<Rational>, last: u64) -> Vec<Rational> {
    margins_range(params, 0, last)
}

fn margins_range(params: &SymbolParams<Rational>, first: u64, last: u64) -> Vec<Rational> {
    let p = params.offset() as u64;
    let a = &params.a;
    let a2 = a * a;
    (first..=last)
        .into_par_iter()
        .map(|k| {
            let mut c = sigma(params, k) + &a2 * omega(params, k);
            if !a.is_zero() {
                let mut d = delta(params, k).abs();
                if k >= p {
                    d += delta(params, k - p).abs();
                }
                c -= a * d;
            }
            c
        })
        .collect()
}

fn form_vanishes(params: &SymbolParams<Rational>, last: u64) -> bool {
    let a2 = &params.a * &params.a;
    (0..=last).into_par_iter().all(|k| {
        (sigma(params, k) + &a2 * omega(params, k)).is_zero() && (params.a.is_zero() || delta(params, k).is_zero())
    })
}

/// Certifies positivity of the hyponormality form by pointwise domination.
///
/// Tries each truncation of the schedule in turn; a larger truncation is used
/// only when the tail argument fails. Never returns a false certificate: any
/// failure yields `Inconclusive`.
pub fn certify_hyponormal(params: &SymbolParams<Rational>, schedule: &Truncation) -> Result<HypoVerdict> {
    let offset = params.offset();
    if schedule.start <= offset {
        return Err(Error::TruncationTooSmall { k: schedule.start, offset });
    }
    let mut checked: Vec<Rational> = Vec::new();
    let mut last_note = String::new();
    let mut last_k = schedule.start;
    for k in schedule.sizes() {
        last_k = k;
        let from = checked.len() as u64;
        if k as u64 >= from {
            checked.extend(margins_range(params, from, k as u64));
        }
        if let Some((bad, _)) = checked.iter().enumerate().find(|(_, c)| !c.is_positive()) {
            if form_vanishes(params, k as u64) {
                return Ok(HypoVerdict::inconclusive(k, format!("{DEGENERATE}: the form vanishes identically")));
            }
            return Ok(HypoVerdict::inconclusive(
                k,
                format!("pointwise domination fails at k = {bad} (c_k = {})", crate::numerics::fmt_rational(&checked[bad])),
            ));
        }
        let Some(tail) = tail_polynomial(params, k as u64 + 1) else {
            last_note = format!("delta changes sign beyond k = {k}");
            continue;
        };
        match sign_on_ray(&tail.numerator, &int(tail.start as i64)) {
            Some(1) => {
                let (argmin, min) = checked
                    .iter()
                    .enumerate()
                    .min_by(|a, b| a.1.cmp(b.1))
                    .map(|(i, c)| (i as u64, c.clone()))
                    .expect("nonempty");
                let certificate = Certificate {
                    truncation: k,
                    min_margin: min,
                    argmin_k: argmin,
                    tail_start: tail.start,
                    tail_degree: tail.numerator.degree().unwrap_or(0),
                };
                return Ok(HypoVerdict {
                    status: Status::CertifiedHyponormal,
                    witness: None,
                    certificate: Some(certificate),
                    diagnostics: Diagnostics { truncation: k, mode: Mode::Exact, note: None },
                });
            }
            Some(0) => {
                return Ok(HypoVerdict::inconclusive(k, format!("{DEGENERATE}: tail margin vanishes identically")));
            }
            _ => last_note = format!("tail margin is not positive on [{}, inf)", k + 1),
        }
    }
    if last_note.is_empty() {
        last_note = "truncation schedule exhausted".into();
    }
    Ok(HypoVerdict::inconclusive(last_k, last_note))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rat;

    fn params(n: u64, m: u64, s: Rational, t: Rational, a: Rational) -> SymbolParams<Rational> {
        SymbolParams::new(n, m, s, t, a).unwrap()
    }

    #[test]
    fn tail_polynomial_matches_margins_at_integers() {
        let p = params(1, 2, rat(1, 2), int(3), rat(2, 7));
        let start = 10;
        let tail = tail_polynomial(&p, start).unwrap();
        let c = margins(&p, 40);
        for k in start..=40 {
            let x = int(k as i64);
            let v = tail.numerator.eval(&x) / tail.denominator.eval(&x);
            assert_eq!(v, c[k as usize], "k = {k}");
        }
    }

    #[test]
    fn zero_coefficient_always_certified() {
        for (n, m, s, t) in [(1, 1, int(1), int(1)), (3, 1, int(0), int(5)), (2, 5, rat(1, 3), rat(7, 2))] {
            let v = certify_hyponormal(&params(n, m, s, t, int(0)), &Truncation::default()).unwrap();
            assert_eq!(v.status, Status::CertifiedHyponormal);
            assert!(v.certificate.is_some());
        }
    }

    #[test]
    fn subthreshold_large_t_certified() {
        // |t a| = 1 < (n + 2s)/2 = 3/2
        let v = certify_hyponormal(&params(1, 1, int(1), int(100), rat(1, 100)), &Truncation::default()).unwrap();
        assert_eq!(v.status, Status::CertifiedHyponormal, "{:?}", v.diagnostics);
    }

    #[test]
    fn huge_coefficient_never_certified() {
        let v = certify_hyponormal(&params(1, 1, int(1), int(10), int(10)), &Truncation::default()).unwrap();
        assert_eq!(v.status, Status::Inconclusive);
        assert!(v.diagnostics.note.unwrap().contains("k = 0"));
    }

    #[test]
    fn symmetric_boundary_is_degenerate() {
        let v = certify_hyponormal(&params(1, 1, int(1), int(1), int(1)), &Truncation::default()).unwrap();
        assert_eq!(v.status, Status::Inconclusive);
        assert!(v.is_degenerate());
        let v = certify_hyponormal(&params(1, 1, int(1), int(1), rat(999, 1000)), &Truncation::default()).unwrap();
        assert_eq!(v.status, Status::CertifiedHyponormal);
    }

    #[test]
    fn rejects_small_truncation() {
        assert!(certify_hyponormal(&params(2, 2, int(0), int(0), int(0)), &Truncation::fixed(4)).is_err());
    }
}
