//! Exact real-root isolation (Descartes' rule of signs with interval bisection)
//! and bisection refinement.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::Serialize;

use super::polynomial::Polynomial;
use super::scalar::{fmt_rational, int, Rational, Scalar};
use crate::error::{Error, Result};

/// Closed interval `[lo, hi]` with `lo < hi` bracketing one real root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootInterval {
    pub lo: Rational,
    pub hi: Rational,
}

impl RootInterval {
    pub fn new(lo: Rational, hi: Rational) -> Self {
        assert!(lo < hi, "root interval must satisfy lo < hi");
        RootInterval { lo, hi }
    }

    pub fn width(&self) -> Rational {
        &self.hi - &self.lo
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lo + &self.hi) / int(2)
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn shifted(&self, by: &Rational) -> RootInterval {
        RootInterval { lo: &self.lo + by, hi: &self.hi + by }
    }

    pub fn lo_f64(&self) -> f64 {
        self.lo.to_f64()
    }

    pub fn hi_f64(&self) -> f64 {
        self.hi.to_f64()
    }
}

#[derive(Serialize)]
struct IntervalRepr {
    lo: String,
    hi: String,
    lo_approx: f64,
    hi_approx: f64,
}

impl Serialize for RootInterval {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        IntervalRepr {
            lo: fmt_rational(&self.lo),
            hi: fmt_rational(&self.hi),
            lo_approx: self.lo_f64(),
            hi_approx: self.hi_f64(),
        }
        .serialize(s)
    }
}

/// Descartes bound on the number of roots of `p` in the open interval `(lo, hi)`.
///
/// Maps `(lo, hi)` onto `(0, inf)` with a Moebius transform and counts sign
/// variations. A count of 0 or 1 is exact.
fn descartes_count(p: &Polynomial, lo: &Rational, hi: &Rational) -> usize {
    let on_unit = p.taylor_shift(lo).scale_arg(&(hi - lo));
    on_unit.reversed().taylor_shift(&Rational::one()).sign_variations()
}

/// Power of two strictly exceeding every root modulus (Cauchy bound).
fn root_bound(p: &Polynomial) -> Rational {
    let lead = p.leading().expect("nonzero polynomial").abs();
    let max = p
        .coeffs()
        .iter()
        .take(p.coeffs().len() - 1)
        .map(|c| c.abs() / &lead)
        .fold(Rational::zero(), |a, b| if b > a { b } else { a });
    let bound = max + Rational::one();
    let mut pow = Rational::one();
    while pow <= bound {
        pow *= int(2);
    }
    pow
}

/// A point strictly inside `(lo, hi)`, near the midpoint, where `p` does not vanish.
fn split_point(p: &Polynomial, lo: &Rational, hi: &Rational) -> Rational {
    let w = hi - lo;
    let mid = lo + &w / int(2);
    if !p.eval(&mid).is_zero() {
        return mid;
    }
    let mut offset = &w / int(8);
    loop {
        for cand in [&mid + &offset, &mid - &offset] {
            if !p.eval(&cand).is_zero() {
                return cand;
            }
        }
        offset /= int(2);
    }
}

/// Isolates every distinct positive real root of `p`.
///
/// Returns disjoint intervals sorted ascending, each with `lo >= 0` and
/// containing exactly one distinct positive root of `p`. Each interval brackets a
/// sign change of the squarefree part of `p`. Panics if `p` is the zero
/// polynomial.
pub fn isolate_positive_roots(p: &Polynomial) -> Vec<RootInterval> {
    assert!(!p.is_zero(), "root isolation of the zero polynomial");
    let mut q = p.squarefree();
    while q.degree().unwrap_or(0) > 0 && q.coeff(0).is_zero() {
        q = q.div_rem(&Polynomial::x()).0;
    }
    if q.degree().unwrap_or(0) == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut stack = vec![(Rational::zero(), root_bound(&q))];
    while let Some((lo, hi)) = stack.pop() {
        match descartes_count(&q, &lo, &hi) {
            0 => {}
            1 => out.push(RootInterval::new(lo, hi)),
            _ => {
                let c = split_point(&q, &lo, &hi);
                stack.push((c.clone(), hi));
                stack.push((lo, c));
            }
        }
    }
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    out
}

/// Isolates all real roots: negative ones via `p(-x)` and, when `p(0) = 0`, a
/// small interval around zero that excludes every other root.
pub fn isolate_real_roots(p: &Polynomial) -> Vec<RootInterval> {
    let mut q = p.squarefree();
    let zero_root = q.coeff(0).is_zero();
    if zero_root {
        q = q.div_rem(&Polynomial::x()).0;
    }
    let pos: Vec<RootInterval> = if q.degree().unwrap_or(0) == 0 {
        Vec::new()
    } else {
        isolate_positive_roots(&q).into_iter().map(|iv| detach_from_zero(&q, iv)).collect()
    };
    let reflected = q.scale_arg(&int(-1));
    let neg: Vec<RootInterval> = if q.degree().unwrap_or(0) == 0 {
        Vec::new()
    } else {
        isolate_positive_roots(&reflected)
            .into_iter()
            .map(|iv| detach_from_zero(&reflected, iv))
            .map(|iv| RootInterval::new(-iv.hi, -iv.lo))
            .collect()
    };
    let mut out = neg;
    if zero_root {
        let mut gap = Rational::one();
        if let Some(first) = pos.first() {
            gap = gap.min(first.lo.clone());
        }
        if let Some(last) = out.iter().map(|iv| -iv.hi.clone()).min() {
            gap = gap.min(last);
        }
        out.push(RootInterval::new(-gap.clone() / int(2), gap / int(2)));
    }
    out.extend(pos);
    out.sort_by(|a, b| a.lo.cmp(&b.lo));
    out
}

/// Shrinks an isolating interval starting at 0 until `lo > 0` (requires `q(0) != 0`).
fn detach_from_zero(q: &Polynomial, mut iv: RootInterval) -> RootInterval {
    let s0 = q.sign_at(&iv.lo);
    while iv.lo.is_zero() {
        let mid = iv.midpoint();
        let s = q.sign_at(&mid);
        if s == 0 {
            let quarter = iv.width() / int(4);
            return RootInterval::new(&mid - &quarter, &mid + &quarter);
        }
        if s == s0 {
            iv.lo = mid;
        } else {
            iv.hi = mid;
        }
    }
    iv
}

/// Bisects `iv` in exact arithmetic until its width is at most `tol`.
///
/// An even-multiplicity root is located through the squarefree part of `p`.
/// Fails with [`Error::BracketInvalid`] when neither `p` nor its squarefree part
/// changes sign across `iv`.
pub fn refine_root(p: &Polynomial, iv: &RootInterval, tol: &Rational) -> Result<RootInterval> {
    assert!(tol.is_positive(), "tolerance must be positive");
    let mut lo = iv.lo.clone();
    let mut hi = iv.hi.clone();
    let s_lo = p.sign_at(&lo);
    let s_hi = p.sign_at(&hi);
    if s_lo == 0 {
        let hi = if &lo + tol < hi { &lo + tol } else { hi };
        return Ok(RootInterval::new(lo, hi));
    }
    if s_hi == 0 {
        let lo = if &hi - tol > lo { &hi - tol } else { lo };
        return Ok(RootInterval::new(lo, hi));
    }
    if s_lo == s_hi {
        let sq = p.squarefree();
        if sq.degree() < p.degree() && sq.sign_at(&lo) * sq.sign_at(&hi) < 0 {
            return refine_root(&sq, iv, tol);
        }
        return Err(Error::BracketInvalid { lo: fmt_rational(&lo), hi: fmt_rational(&hi) });
    }
    while &hi - &lo > *tol {
        let mid = (&lo + &hi) / int(2);
        match p.sign_at(&mid) {
            0 => {
                let quarter = tol / int(4);
                let a = if &mid - &quarter > lo { &mid - &quarter } else { lo };
                let b = if &mid + &quarter < hi { &mid + &quarter } else { hi };
                return Ok(RootInterval::new(a, b));
            }
            s if s == s_lo => lo = mid,
            _ => hi = mid,
        }
    }
    Ok(RootInterval::new(lo, hi))
}

/// `2^-bits` as a rational, handy for refinement tolerances.
pub fn pow2_tol(bits: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << bits)
}

/// Sign taken by `p` on the whole ray `[x0, inf)`, or `None` if it changes sign
/// or vanishes somewhere on the ray. The zero polynomial reports `Some(0)`.
pub fn sign_on_ray(p: &Polynomial, x0: &Rational) -> Option<i8> {
    if p.is_zero() {
        return Some(0);
    }
    let shifted = p.taylor_shift(x0);
    let s0 = shifted.sign_at(&Rational::zero());
    if s0 == 0 {
        return None;
    }
    if shifted.coeffs().iter().all(|c| !c.is_negative()) || shifted.coeffs().iter().all(|c| !c.is_positive()) {
        return Some(s0);
    }
    if isolate_positive_roots(&shifted).is_empty() {
        Some(s0)
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::scalar::rat;

    #[test]
    fn cube_minus_one() {
        let p = Polynomial::from_ints(&[-1, 0, 0, 1]);
        let roots = isolate_positive_roots(&p);
        assert_eq!(roots.len(), 1);
        assert!(roots[0].contains(&int(1)));
        let r = refine_root(&p, &roots[0], &pow2_tol(30)).unwrap();
        assert!(r.contains(&int(1)));
    }

    #[test]
    fn sqrt_two() {
        let p = Polynomial::from_ints(&[-2, 0, 1]);
        let r = refine_root(&p, &RootInterval::new(int(1), int(2)), &rat(1, 1_000_000_000_000)).unwrap();
        assert!(r.width() <= rat(1, 1_000_000_000_000));
        assert!((r.lo_f64() - std::f64::consts::SQRT_2).abs() < 1e-12);
        assert!(p.sign_at(&r.lo) < 0 && p.sign_at(&r.hi) > 0);
    }

    #[test]
    fn linear_root_at_dyadic_midpoint() {
        let p = Polynomial::from_ints(&[-3, 1]);
        let r = refine_root(&p, &RootInterval::new(int(2), int(4)), &rat(1, 1_000_000)).unwrap();
        assert!(r.contains(&int(3)));
        assert!(r.width() <= rat(1, 1_000_000));
    }

    #[test]
    fn refine_rejects_non_bracket() {
        let p = Polynomial::from_ints(&[-2, 0, 1]);
        assert!(matches!(
            refine_root(&p, &RootInterval::new(int(2), int(3)), &rat(1, 10)),
            Err(Error::BracketInvalid { .. })
        ));
    }

    #[test]
    fn repeated_and_zero_roots() {
        // x^2 (x - 1)^3 (x - 5)
        let base = Polynomial::from_ints(&[-1, 1]).pow(3);
        let p = &(&base * &Polynomial::from_ints(&[-5, 1])) * &Polynomial::from_ints(&[0, 0, 1]);
        let roots = isolate_positive_roots(&p);
        assert_eq!(roots.len(), 2);
        assert!(roots[0].contains(&int(1)));
        assert!(roots[1].contains(&int(5)));
    }

    #[test]
    fn slope_cubic_has_single_real_root() {
        let p = Polynomial::from_ints(&[-1, 6, -13, 6]);
        let pos = isolate_positive_roots(&p);
        assert_eq!(pos.len(), 1);
        assert_eq!(isolate_real_roots(&p).len(), 1);
        let r = refine_root(&p, &RootInterval::new(rat(3, 2), int(2)), &rat(1, 1_000_000_000_000)).unwrap();
        // Frozen from a 50-digit bisection of 6a^3 - 13a^2 + 6a - 1.
        assert!((r.lo_f64() - 1.609_778_956_757_87).abs() < 1e-12);
    }

    #[test]
    fn ray_sign() {
        let p = Polynomial::from_ints(&[-10, 1]);
        assert_eq!(sign_on_ray(&p, &int(11)), Some(1));
        assert_eq!(sign_on_ray(&p, &int(3)), None);
        assert_eq!(sign_on_ray(&Polynomial::zero(), &int(3)), Some(0));
        // (x - 2)(x - 3) + 1/100 dips but stays positive? no: discriminant 1 - 0.04 > 0.
        let q = &Polynomial::from_ints(&[6, -5, 1]) + &Polynomial::constant(rat(1, 100));
        assert_eq!(sign_on_ray(&q, &int(0)), None);
        assert_eq!(sign_on_ray(&q, &int(4)), Some(1));
    }
}
