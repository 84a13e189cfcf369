//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::scalar::{fmt_rational, int, Rational};

/// Coefficients in ascending degree order. The leading coefficient is nonzero
/// unless the polynomial is identically zero, in which case the list is empty.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial {
    coeffs: Vec<Rational>,
}

impl Polynomial {
    pub fn new(coeffs: Vec<Rational>) -> Self {
        let mut p = Polynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero() -> Self {
        Polynomial { coeffs: Vec::new() }
    }

    pub fn constant(c: Rational) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `x`.
    pub fn x() -> Self {
        Self::new(vec![Rational::zero(), Rational::one()])
    }

    /// `x + c`.
    pub fn shifted_x(c: Rational) -> Self {
        Self::new(vec![c, Rational::one()])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_f64(&self, x: f64) -> f64 {
        use num_traits::ToPrimitive;
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.to_f64().unwrap_or(f64::NAN))
    }

    /// Sign of `p(x)` as -1, 0 or 1.
    pub fn sign_at(&self, x: &Rational) -> i8 {
        let v = self.eval(x);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }

    pub fn scale(&self, c: &Rational) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * int(i as i64))
                .collect(),
        )
    }

    /// `p(x + c)` by repeated synthetic division.
    pub fn taylor_shift(&self, c: &Rational) -> Self {
        let mut a = self.coeffs.clone();
        let n = a.len();
        if c.is_zero() || n < 2 {
            return self.clone();
        }
        for i in 0..n - 1 {
            for j in (i..n - 1).rev() {
                let t = &a[j + 1] * c;
                a[j] += t;
            }
        }
        Self::new(a)
    }

    /// `p(h x)`.
    pub fn scale_arg(&self, h: &Rational) -> Self {
        let mut pow = Rational::one();
        let mut out = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            out.push(c * &pow);
            pow *= h;
        }
        Self::new(out)
    }

    /// `x^deg p(1/x)`, where `deg` is the degree of `p`.
    pub fn reversed(&self) -> Self {
        let mut c = self.coeffs.clone();
        c.reverse();
        Self::new(c)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Polynomial::constant(Rational::one());
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Number of sign changes in the coefficient sequence, zeros skipped.
    pub fn sign_variations(&self) -> usize {
        let mut last = 0i8;
        let mut count = 0;
        for c in &self.coeffs {
            let s = if c.is_positive() {
                1
            } else if c.is_negative() {
                -1
            } else {
                continue;
            };
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
        count
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Polynomial) -> (Polynomial, Polynomial) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return (Polynomial::zero(), Polynomial::zero());
        };
        if nd < dd {
            return (Polynomial::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); nd - dd + 1];
        for i in (0..=nd - dd).rev() {
            let q = &rem[i + dd] / &lead;
            if !q.is_zero() {
                for (j, dc) in divisor.coeffs.iter().enumerate() {
                    rem[i + j] -= &q * dc;
                }
            }
            quot[i] = q;
        }
        rem.truncate(dd);
        (Polynomial::new(quot), Polynomial::new(rem))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Polynomial) -> Polynomial {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            Some(l) => self.scale(&(Rational::one() / l)),
            None => Polynomial::zero(),
        }
    }

    /// `p / gcd(p, p')`: same distinct roots, all simple.
    pub fn squarefree(&self) -> Polynomial {
        if self.degree().unwrap_or(0) < 1 {
            return self.clone();
        }
        let g = self.gcd(&self.derivative());
        self.div_rem(&g).0
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " {} ", if c.is_negative() { '-' } else { '+' })?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            first = false;
            let a = c.abs();
            let show_coeff = i == 0 || !a.is_one();
            if show_coeff {
                write!(f, "{}", fmt_rational(&a))?;
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl<'a> Sub<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Polynomial::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl<'a> Mul<&'a Polynomial> for &'a Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Polynomial::new(out)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $m(self, rhs: Polynomial) -> Polynomial {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::scalar::rat;

    #[test]
    fn arithmetic_and_display() {
        let p = Polynomial::from_ints(&[-1, 6, -13, 6]);
        assert_eq!(p.to_string(), "6x^3 - 13x^2 + 6x - 1");
        assert_eq!(p.degree(), Some(3));
        assert_eq!(p.eval(&int(1)), int(-2));
        assert_eq!(p.eval(&int(2)), int(7));
        assert_eq!(p.sign_variations(), 3);
        let q = &p - &p;
        assert!(q.is_zero());
        assert_eq!(q.degree(), None);
    }

    #[test]
    fn taylor_shift_matches_composition() {
        let p = Polynomial::from_ints(&[3, -2, 0, 5, 1]);
        let c = rat(-7, 3);
        let shifted = p.taylor_shift(&c);
        let composed = {
            let lin = Polynomial::shifted_x(c.clone());
            let mut acc = Polynomial::zero();
            for (i, a) in p.coeffs().iter().enumerate() {
                acc = &acc + &lin.pow(i as u32).scale(a);
            }
            acc
        };
        assert_eq!(shifted, composed);
        for x in [int(0), rat(1, 2), int(-4)] {
            assert_eq!(shifted.eval(&x), p.eval(&(x.clone() + c.clone())));
        }
    }

    #[test]
    fn division_and_gcd() {
        // (x - 1)^2 (x + 2)
        let a = Polynomial::from_ints(&[2, -3, 0, 1]);
        let (q, r) = a.div_rem(&Polynomial::from_ints(&[-1, 1]));
        assert!(r.is_zero());
        assert_eq!(q, Polynomial::from_ints(&[-2, 1, 1]));
        let sf = a.squarefree();
        assert_eq!(sf.monic(), Polynomial::from_ints(&[-2, 1, 1]));
        let g = a.gcd(&Polynomial::from_ints(&[-1, 0, 1]));
        assert_eq!(g, Polynomial::from_ints(&[-1, 1]));
    }

    #[test]
    fn reversed_and_scaled() {
        let p = Polynomial::from_ints(&[1, 2, 3]);
        assert_eq!(p.reversed(), Polynomial::from_ints(&[3, 2, 1]));
        assert_eq!(p.scale_arg(&int(2)), Polynomial::from_ints(&[1, 4, 12]));
        assert_eq!(p.derivative(), Polynomial::from_ints(&[2, 6]));
    }
}
