//! Scalar abstraction shared by the exact and binary64 evaluation paths.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

/// Exact rational number with arbitrary-precision numerator and denominator.
///
/// `BigRational` keeps the denominator positive and the fraction reduced after
/// every arithmetic operation.
pub type Rational = BigRational;

/// Field element usable by the sequence formulas.
///
/// Implemented for [`Rational`] (exact mode) and `f64` (float mode). The caller
/// picks the mode by picking the type.
pub trait Scalar: Clone + PartialOrd + fmt::Debug + Signed + Send + Sync + 'static {
    fn from_i64(v: i64) -> Self;
    fn to_f64(&self) -> f64;

    fn from_u64(v: u64) -> Self {
        Self::from_i64(i64::try_from(v).expect("index exceeds i64 range"))
    }

    fn square(&self) -> Self {
        self.clone() * self.clone()
    }
}

impl Scalar for f64 {
    fn from_i64(v: i64) -> Self {
        v as f64
    }

    fn to_f64(&self) -> f64 {
        *self
    }
}

impl Scalar for Rational {
    fn from_i64(v: i64) -> Self {
        Rational::from_integer(BigInt::from(v))
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

/// `num / den` as an exact rational.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Exact binary64 to rational conversion; `None` for NaN or infinities.
pub fn rational_from_f64(x: f64) -> Option<Rational> {
    Rational::from_float(x)
}

/// Parses `"p/q"`, an integer, or a decimal.
///
/// Returns the value together with a flag that is `true` when the text used
/// decimal or exponent syntax. Such inputs are read as the nearest binary64 and
/// then converted exactly, so the result is exact for that binary64 value.
pub fn parse_rational(text: &str) -> Option<(Rational, bool)> {
    let text = text.trim();
    if let Some((p, q)) = text.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        return Some((Rational::new(p, q), false));
    }
    if let Ok(v) = text.parse::<BigInt>() {
        return Some((Rational::from_integer(v), false));
    }
    let x: f64 = text.parse().ok()?;
    rational_from_f64(x).map(|r| (r, true))
}

/// Smallest dyadic rational `j / 2^bits` that is `>= x`.
pub fn dyadic_ceil(x: &Rational, bits: u32) -> Rational {
    let scale = BigInt::from(1u8) << bits;
    let scaled = x * Rational::from_integer(scale.clone());
    Rational::new(scaled.ceil().to_integer(), scale)
}

/// Dyadic upper approximation of `sqrt(x)`, within a few units of `2^-bits`.
pub fn sqrt_upper(x: &Rational, bits: u32) -> Rational {
    assert!(!x.is_negative(), "square root of a negative rational");
    if x.is_zero() {
        return Rational::zero();
    }
    let guess = dyadic_ceil(&rational_from_f64(Scalar::to_f64(x).sqrt()).expect("finite"), bits);
    let mut r = if guess.is_zero() { dyadic_ceil(x, bits) } else { guess };
    // Any Newton iterate is >= sqrt(x) by AM-GM, and rounding up keeps it there.
    for _ in 0..8 {
        let next = dyadic_ceil(&((r.clone() + x / r.clone()) / int(2)), bits);
        if next == r {
            break;
        }
        r = next;
    }
    while &(r.clone() * r.clone()) < x {
        r += Rational::new(BigInt::from(1), BigInt::from(1u8) << bits);
    }
    r
}

/// Human-readable `p/q` (or `p` for integers).
pub fn fmt_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_all_syntaxes() {
        assert_eq!(parse_rational("3/4"), Some((rat(3, 4), false)));
        assert_eq!(parse_rational("-6/8"), Some((rat(-3, 4), false)));
        assert_eq!(parse_rational("12"), Some((int(12), false)));
        assert_eq!(parse_rational("1.5"), Some((rat(3, 2), true)));
        let (tenth, float) = parse_rational("0.1").unwrap();
        assert!(float);
        assert_eq!(tenth, rational_from_f64(0.1).unwrap());
        assert_ne!(tenth, rat(1, 10));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("abc"), None);
    }

    #[test]
    fn sqrt_upper_brackets_root() {
        for v in [rat(2, 1), rat(1001, 1000), rat(4, 9), rat(1, 3_000_000)] {
            let r = sqrt_upper(&v, 60);
            assert!(r.clone() * r.clone() >= v);
            let below = r.clone() - Rational::new(BigInt::from(1), BigInt::from(1u8) << 50);
            assert!(below.clone() * below < v);
        }
        assert_eq!(sqrt_upper(&rat(9, 4), 10), rat(3, 2));
    }
}
