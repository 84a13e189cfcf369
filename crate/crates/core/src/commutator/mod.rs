//! Spectrum and norm of the self-commutator `[T*, T]` for `T = T_{z^m zbar^n}`,
//! `m > n`.
//!
//! The eigenvalues are `lambda_k` (see [`crate::sequences::lambda_eig`]). For
//! `k >= m - n` they are the values at integers of
//! `F(x) = (x+1)((x+m-n+1)/(x+m+1)^2 - (x+n-m+1)/(x+n+1)^2)`, and
//! `F'(x + m - n) = P(x) / Q(x)` with `Q > 0` on `x >= 0` and a cubic
//! `P(x) = a x^3 + b x^2 + c x + d` whose first three coefficients are negative.
//! The sign of `d` therefore decides whether `F` decreases on `[m-n, inf)` or has
//! a single interior maximum.

mod region;

pub use region::{scan_region, BoundaryFit, RegionScan};

use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numerics::{int, isolate_positive_roots, isolate_real_roots, rat, refine_root, Polynomial, Rational, RootInterval};
use crate::sequences::lambda_unchecked;

fn big(v: u64) -> BigInt {
    BigInt::from(v)
}

fn check_order(m: u64, n: u64) -> Result<()> {
    if m <= n || n == 0 {
        return Err(Error::InvalidOrder { m, n });
    }
    Ok(())
}

/// Coefficients `[a, b, c, d]` of the cubic `P`, for any `m, n`.
pub fn p_coefficients(m: u64, n: u64) -> [BigInt; 4] {
    let (m, n) = (big(m), big(n));
    let nm = &n - &m;
    let a = BigInt::from(2) * (&n * &n - &m * &m);
    let b = BigInt::from(3) * &nm * (BigInt::from(3) * &m * &m - &n * &n + BigInt::from(2) * &m + BigInt::from(2) * &n);
    let c = &nm
        * (BigInt::from(13) * m.pow(3) + BigInt::from(18) * &m * &m + BigInt::from(6) * &m
            - BigInt::from(13) * &m * &m * &n
            + BigInt::from(6) * &n
            - &m * &n * &n
            - BigInt::from(6) * &n * &n
            + n.pow(3));
    let d = d_big(&m, &n);
    [a, b, c, d]
}

fn d_big(m: &BigInt, n: &BigInt) -> BigInt {
    let one = BigInt::from(1);
    let two = BigInt::from(2);
    let first = (&one + m).pow(3) * (m + n - m * n + &two * m * m - n * n);
    let second = (&two * m + &one - n).pow(3) * (m + n - m * n + m * m);
    first - second
}

/// `d(m, n) = (1+m)^3 (m+n-mn+2m^2-n^2) - (2m+1-n)^3 (m+n-mn+m^2)`.
pub fn d_coefficient(m: u64, n: u64) -> BigInt {
    d_big(&big(m), &big(n))
}

/// Sign of `d(m, n)`, using `i128` when it cannot overflow.
pub fn d_sign(m: u64, n: u64) -> i8 {
    match d_i128(m, n) {
        Some(v) => v.signum() as i8,
        None => {
            let d = d_coefficient(m, n);
            if d.is_zero() {
                0
            } else if d.is_positive() {
                1
            } else {
                -1
            }
        }
    }
}

fn d_i128(m: u64, n: u64) -> Option<i128> {
    let (m, n) = (i128::from(m), i128::from(n));
    let cube = |x: i128| x.checked_mul(x)?.checked_mul(x);
    let f1 = m.checked_add(n)?.checked_sub(m.checked_mul(n)?)?.checked_add(2 * m.checked_mul(m)?)?.checked_sub(n.checked_mul(n)?)?;
    let f2 = m.checked_add(n)?.checked_sub(m * n)?.checked_add(m.checked_mul(m)?)?;
    let first = cube(1 + m)?.checked_mul(f1)?;
    let second = cube((2 * m).checked_add(1)?.checked_sub(n)?)?.checked_mul(f2)?;
    first.checked_sub(second)
}

/// The cubic `P` with `F'(x + m - n) = P(x) / Q(x)`.
pub fn cubic_p(m: u64, n: u64) -> Result<Polynomial> {
    check_order(m, n)?;
    let [a, b, c, d] = p_coefficients(m, n);
    let r = |v: BigInt| Rational::from_integer(v);
    Ok(Polynomial::new(vec![r(d), r(c), r(b), r(a)]))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Classification {
    MonotoneDecreasing,
    UniqueInteriorMax,
    /// `d = 0`: excluded from the dichotomy.
    Degenerate,
}

#[derive(Clone, Debug, PartialEq)]
pub struct MonotonicityReport {
    pub m: u64,
    pub n: u64,
    pub d: BigInt,
    pub classification: Classification,
    /// Isolating interval for the critical point `x_hat` of `F` in `(m-n, inf)`.
    pub critical_point: Option<RootInterval>,
}

/// Classifies `F` on `[m-n, inf)` by the exact sign of `d`.
pub fn classify_monotonicity(m: u64, n: u64) -> Result<MonotonicityReport> {
    let p = cubic_p(m, n)?;
    let [a, b, c, d] = p_coefficients(m, n);
    assert!(a.is_negative() && b.is_negative() && c.is_negative(), "cubic coefficients a, b, c must be negative for m > n");
    let classification = if d.is_negative() {
        Classification::MonotoneDecreasing
    } else if d.is_zero() {
        Classification::Degenerate
    } else {
        Classification::UniqueInteriorMax
    };
    let critical_point = if classification == Classification::UniqueInteriorMax {
        // P(0) = d > 0 and P -> -inf: exactly one positive root, a local max of F.
        let roots = isolate_positive_roots(&p);
        assert_eq!(roots.len(), 1, "P must have exactly one positive root when d > 0");
        let iv = refine_root(&p, &roots[0], &rat(1, 8))?;
        Some(iv.shifted(&int((m - n) as i64)))
    } else {
        None
    };
    Ok(MonotonicityReport { m, n, d, classification, critical_point })
}

#[derive(Clone, Debug, PartialEq)]
pub struct IndexedValue {
    pub k: u64,
    pub value: Rational,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CommutatorReport {
    pub m: u64,
    pub n: u64,
    pub norm: Rational,
    pub argmax_k: u64,
    /// Maximum over `0 <= k < m - n`.
    pub head_max: IndexedValue,
    /// Maximum over `k >= m - n`.
    pub tail_max: IndexedValue,
    pub monotonicity: MonotonicityReport,
}

fn argmax_exact(m: u64, n: u64, ks: impl IntoIterator<Item = u64>) -> IndexedValue {
    let mut best: Option<IndexedValue> = None;
    for k in ks {
        let v = lambda_unchecked(m, n, k);
        if best.as_ref().map_or(true, |b| v > b.value) {
            best = Some(IndexedValue { k, value: v });
        }
    }
    best.expect("nonempty index range")
}

/// `||[T*, T]|| = max_k lambda_k`, located exactly.
pub fn commutator_norm(m: u64, n: u64) -> Result<CommutatorReport> {
    let monotonicity = classify_monotonicity(m, n)?;
    let gap = m - n;
    let head_max = argmax_exact(m, n, 0..gap);
    let tail_max = match &monotonicity.critical_point {
        None => IndexedValue { k: gap, value: lambda_unchecked(m, n, gap) },
        Some(iv) => {
            // F increases up to x_hat and decreases after it; the integer max is
            // floor(x_hat) or ceil(x_hat), both inside [floor(lo), ceil(hi)].
            let from = iv.lo.floor().to_integer();
            let to = iv.hi.ceil().to_integer();
            let from: u64 = from.try_into().expect("critical point fits in u64");
            let to: u64 = to.try_into().expect("critical point fits in u64");
            argmax_exact(m, n, from.max(gap)..=to.max(gap))
        }
    };
    let (norm, argmax_k) = if head_max.value >= tail_max.value {
        (head_max.value.clone(), head_max.k)
    } else {
        (tail_max.value.clone(), tail_max.k)
    };
    Ok(CommutatorReport { m, n, norm, argmax_k, head_max, tail_max, monotonicity })
}

/// Coefficients of `R(x + m - n) = x^4 + alpha x^3 + beta x^2 + gamma x + delta`,
/// where `R(x) = (x+m+1)^2 (x+n+1)^2 - 2(x+1)((x+m-n+1)(x+n+1)^2 - (x+n-m+1)(x+m+1)^2)`.
/// `R > 0` on `[m-n, inf)` is equivalent to `lambda_k < 1/2` there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuarticR {
    pub m: u64,
    pub n: u64,
    pub alpha: BigInt,
    pub beta: BigInt,
    pub gamma: BigInt,
    pub delta: BigInt,
}

impl QuarticR {
    pub fn new(m: u64, n: u64) -> Self {
        let (mb, nb) = (big(m), big(n));
        let i = |v: i64| BigInt::from(v);
        let diff = &mb - &nb;
        let alpha = i(4) + i(6) * &mb - i(2) * &nb;
        let beta = i(6) * (i(2) * &mb + 1) + (i(8) * &mb + 6) * &diff + i(3) * (&mb * &mb + &nb * &nb);
        let gamma = i(2)
            * (i(2) * mb.pow(3) + i(3) * (&mb * &mb + &nb * &nb) + i(6) * &mb + 2
                + &diff * (&mb * &mb - &mb * &nb + &nb * &nb + i(8) * &mb + 3));
        // constant term R(m - n)
        let delta = (&mb + i(1)).pow(2) * (i(2) * &mb - &nb + i(1)).pow(2)
            - i(2) * &diff * (&diff + 1) * (i(2) * &mb * &mb + &mb + &nb);
        QuarticR { m, n, alpha, beta, gamma, delta }
    }

    pub fn all_positive(&self) -> bool {
        [&self.alpha, &self.beta, &self.gamma, &self.delta].iter().all(|c| c.is_positive())
    }

    pub fn polynomial(&self) -> Polynomial {
        let r = |v: &BigInt| Rational::from_integer(v.clone());
        Polynomial::new(vec![r(&self.delta), r(&self.gamma), r(&self.beta), r(&self.alpha), int(1)])
    }
}

/// `R(x + m - n)` expanded directly from the definition of `R`.
pub fn quartic_r_expanded(m: u64, n: u64) -> Polynomial {
    let lin = |c: i64| Polynomial::shifted_x(int(c));
    let (mi, ni) = (m as i64, n as i64);
    let xm = lin(mi + 1);
    let xn = lin(ni + 1);
    let r = &(&xm.pow(2) * &xn.pow(2))
        - &(&lin(1).scale(&int(2))
            * &(&(&lin(mi - ni + 1) * &xn.pow(2)) - &(&lin(ni - mi + 1) * &xm.pow(2))));
    r.taylor_shift(&int(mi - ni))
}

#[derive(Clone, Debug, PartialEq)]
pub struct HalfBoundRecord {
    pub quartic: QuarticR,
    /// Largest head eigenvalue (`k < m - n`), checked directly.
    pub head_max: IndexedValue,
}

/// Checks `lambda_k < 1/2` for all `k`: positivity of the shifted quartic
/// coefficients covers `k >= m - n`, direct evaluation covers `k < m - n`.
pub fn verify_half_bound(m: u64, n: u64) -> Result<HalfBoundRecord> {
    check_order(m, n)?;
    let quartic = QuarticR::new(m, n);
    for (name, c) in [("alpha", &quartic.alpha), ("beta", &quartic.beta), ("gamma", &quartic.gamma), ("delta", &quartic.delta)] {
        if !c.is_positive() {
            return Err(Error::CoefficientSign { name, m, n });
        }
    }
    let head_max = argmax_exact(m, n, 0..m - n);
    if head_max.value >= rat(1, 2) {
        return Err(Error::CoefficientSign { name: "head eigenvalue", m, n });
    }
    Ok(HalfBoundRecord { quartic, head_max })
}

/// `6 alpha^3 - 13 alpha^2 + 6 alpha - 1 = (2 alpha - 1)^3 - alpha^2 (2 alpha + 1)`,
/// whose root above 1 is the asymptotic slope `m/n` of the lower edge of the
/// non-monotone region.
pub fn slope_cubic() -> Polynomial {
    Polynomial::from_ints(&[-1, 6, -13, 6])
}

/// Isolating intervals for every real root of [`slope_cubic`].
pub fn slope_cubic_real_roots() -> Vec<RootInterval> {
    isolate_real_roots(&slope_cubic())
}

/// The unique root above 1 of [`slope_cubic`], refined to width `1e-12`.
pub fn boundary_slope() -> RootInterval {
    let p = slope_cubic();
    let above_one: Vec<RootInterval> = isolate_real_roots(&p).into_iter().filter(|iv| iv.hi > int(1)).collect();
    assert_eq!(above_one.len(), 1, "slope cubic must have a single root above 1");
    let iv = &above_one[0];
    let iv = if iv.lo < int(1) { RootInterval::new(int(1), iv.hi.clone()) } else { iv.clone() };
    refine_root(&p, &iv, &rat(1, 1_000_000_000_000)).expect("bracket from isolation")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sequences::lambda_eig;

    #[test]
    fn p_vanishes_on_diagonal() {
        for n in 1..20 {
            assert!(p_coefficients(n, n).iter().all(Zero::is_zero));
        }
        assert!(matches!(cubic_p(3, 3), Err(Error::InvalidOrder { .. })));
    }

    #[test]
    fn d_examples() {
        assert_eq!(d_coefficient(2, 1), BigInt::from(27 * 8 - 64 * 5));
        assert_eq!(d_coefficient(2, 1), BigInt::from(-104));
        assert_eq!(d_coefficient(8, 7), BigInt::from(729 * 38 - 1000 * 23));
        assert_eq!(d_coefficient(8, 7), BigInt::from(4702));
        assert_eq!(d_sign(8, 7), 1);
        assert_eq!(d_sign(2, 1), -1);
        // beyond i128 reach the BigInt path agrees with direct evaluation
        let (m, n) = (u64::MAX / 4, u64::MAX / 8);
        assert!(d_i128(m, n).is_none());
        assert_eq!(d_sign(m, n) as i32, d_coefficient(m, n).signum().to_string().parse::<i32>().unwrap());
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_monotonicity(2, 1).unwrap().classification, Classification::MonotoneDecreasing);
        let r = classify_monotonicity(8, 7).unwrap();
        assert_eq!(r.classification, Classification::UniqueInteriorMax);
        let r = classify_monotonicity(5, 4).unwrap();
        let cp = r.critical_point.unwrap();
        assert!(cp.lo >= int(1) && cp.hi <= int(2));
        assert!(classify_monotonicity(1, 1).is_err());
    }

    #[test]
    fn norm_examples() {
        let r = commutator_norm(2, 1).unwrap();
        assert_eq!(r.norm, rat(2, 9));
        assert_eq!(r.argmax_k, 0);
        assert_eq!(r.tail_max.value, int(2) * (rat(3, 16) - rat(1, 9)));
        assert!(rat(2, 9) > rat(55, 360));

        let r = commutator_norm(8, 7).unwrap();
        assert_eq!(r.argmax_k, 3);
        assert_eq!(r.norm, rat(692, 17424));

        let r = commutator_norm(5, 4).unwrap();
        assert_eq!(r.argmax_k, 1);
    }

    #[test]
    fn norm_matches_scan_small() {
        for m in 2..25u64 {
            for n in 1..m {
                let r = commutator_norm(m, n).unwrap();
                let brute = (0..2000).map(|k| lambda_eig(m, n, k).unwrap()).max().unwrap();
                assert_eq!(r.norm, brute, "m = {m}, n = {n}");
            }
        }
    }

    #[test]
    fn quartic_closed_form_matches_expansion() {
        for m in 2..40u64 {
            for n in 1..m {
                let q = QuarticR::new(m, n);
                assert_eq!(q.polynomial(), quartic_r_expanded(m, n), "m = {m}, n = {n}");
            }
        }
        // base case m = n of the induction in m
        for n in 1..10u64 {
            assert_eq!(QuarticR::new(n, n).delta, BigInt::from(n + 1).pow(4));
        }
    }

    #[test]
    fn half_bound_examples() {
        let rec = verify_half_bound(2, 1).unwrap();
        assert!(rec.quartic.all_positive());
        verify_half_bound(1001, 1000).unwrap();
        verify_half_bound(5, 4).unwrap();
        assert!(verify_half_bound(4, 5).is_err());
    }

    #[test]
    fn slope_root() {
        let iv = boundary_slope();
        assert!(iv.width() <= rat(1, 1_000_000_000_000));
        // 40-digit reference: 1.609778956757873386200472455521477200971
        assert!((iv.lo_f64() - 1.609_778_956_757_873_4).abs() < 2e-12);
        assert_eq!(slope_cubic_real_roots().len(), 1);
        let p = slope_cubic();
        assert_eq!(p.eval(&int(1)), int(-2));
        assert_eq!(p.eval(&int(2)), int(7));
        // (2a - 1)^3 - a^2 (2a + 1)
        let a = Polynomial::x();
        let two_a_minus_one = &a.scale(&int(2)) - &Polynomial::constant(int(1));
        let expanded = &two_a_minus_one.pow(3) - &(&a.pow(2) * &(&a.scale(&int(2)) + &Polynomial::constant(int(1))));
        assert_eq!(expanded, p);
    }
}
