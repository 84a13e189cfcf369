//! Closed forms for the sequences `sigma_k`, `omega_k`, `delta_k` attached to the
//! symbol `z^n |z|^{2s} + a zbar^m |z|^{2t}`, the commutator eigenvalues
//! `lambda_k` of `T_{z^m zbar^n}`, and their large-`k` leading terms.
//!
//! Every function is generic over [`Scalar`]: instantiate with [`Rational`] for
//! exact values or with `f64` for binary64.

use num_bigint::BigInt;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numerics::{rational_from_f64, Rational, Scalar};

/// Parameters `(n, m, s, t, |a|)` of the symbol `z^n |z|^{2s} + a zbar^m |z|^{2t}`.
///
/// Only the modulus of `a` enters the hyponormality criterion, so that is what is
/// stored.
#[derive(Clone, Debug, PartialEq)]
pub struct SymbolParams<T> {
    pub n: u64,
    pub m: u64,
    pub s: T,
    pub t: T,
    pub a: T,
}

impl<T: Scalar> SymbolParams<T> {
    pub fn new(n: u64, m: u64, s: T, t: T, a: T) -> Result<Self> {
        if n == 0 || m == 0 {
            return Err(Error::InvalidParams(format!("n and m must be at least 1 (got n = {n}, m = {m})")));
        }
        if s.is_negative() || t.is_negative() {
            return Err(Error::InvalidParams("s and t must be nonnegative".into()));
        }
        if a.is_negative() {
            return Err(Error::InvalidParams("|a| must be nonnegative".into()));
        }
        Ok(SymbolParams { n, m, s, t, a })
    }

    /// Offset `n + m` of the cross term `u_k conj(u_{k+n+m})`.
    pub fn offset(&self) -> usize {
        (self.n + self.m) as usize
    }

    pub fn with_a(&self, a: T) -> Self {
        SymbolParams { a, ..self.clone() }
    }

    pub fn with_t(&self, t: T) -> Self {
        SymbolParams { t, ..self.clone() }
    }

    pub fn to_f64(&self) -> SymbolParams<f64> {
        SymbolParams { n: self.n, m: self.m, s: self.s.to_f64(), t: self.t.to_f64(), a: self.a.to_f64() }
    }
}

impl SymbolParams<f64> {
    /// Float-mode parameters from a complex coefficient `a = re + i im`.
    pub fn with_complex_coefficient(n: u64, m: u64, s: f64, t: f64, re: f64, im: f64) -> Result<Self> {
        Self::new(n, m, s, t, re.hypot(im))
    }

    /// Exact copy of the binary64 values; fails for non-finite entries.
    pub fn to_exact(&self) -> Result<SymbolParams<Rational>> {
        let conv = |name: &str, x: f64| {
            rational_from_f64(x).ok_or_else(|| Error::Mode(format!("{name} = {x} is not finite")))
        };
        Ok(SymbolParams {
            n: self.n,
            m: self.m,
            s: conv("s", self.s)?,
            t: conv("t", self.t)?,
            a: conv("a", self.a)?,
        })
    }
}

/// `(sigma_k, omega_k, delta_k)` at one index.
#[derive(Clone, Debug, PartialEq)]
pub struct SequencePoint<T> {
    pub k: u64,
    pub sigma: T,
    pub omega: T,
    pub delta: T,
}

fn c<T: Scalar>(v: u64) -> T {
    T::from_u64(v)
}

/// `sigma_k`: `(k+n+1)/(k+n+s+1)^2`, minus `(k-n+1)/(k+s+1)^2` once `k >= n`.
pub fn sigma<T: Scalar>(p: &SymbolParams<T>, k: u64) -> T {
    sigma_raw(p.n, &p.s, k)
}

pub(crate) fn sigma_raw<T: Scalar>(n: u64, s: &T, k: u64) -> T {
    let head = c::<T>(k + n + 1) / (c::<T>(k + n + 1) + s.clone()).square();
    if k < n {
        head
    } else {
        head - c::<T>(k - n + 1) / (c::<T>(k + 1) + s.clone()).square()
    }
}

/// `omega_k`: `-(k+m+1)/(k+m+t+1)^2`, plus `(k-m+1)/(k+t+1)^2` once `k >= m`.
pub fn omega<T: Scalar>(p: &SymbolParams<T>, k: u64) -> T {
    omega_raw(p.m, &p.t, k)
}

pub(crate) fn omega_raw<T: Scalar>(m: u64, t: &T, k: u64) -> T {
    let head = -(c::<T>(k + m + 1) / (c::<T>(k + m + 1) + t.clone()).square());
    if k < m {
        head
    } else {
        head + c::<T>(k - m + 1) / (c::<T>(k + 1) + t.clone()).square()
    }
}

/// `delta_k = (k+n+1)/((k+n+s+1)(k+n+m+t+1)) - (k+m+1)/((k+n+m+s+1)(k+m+t+1))`.
pub fn delta<T: Scalar>(p: &SymbolParams<T>, k: u64) -> T {
    let (n, m) = (p.n, p.m);
    let first = c::<T>(k + n + 1) / ((c::<T>(k + n + 1) + p.s.clone()) * (c::<T>(k + n + m + 1) + p.t.clone()));
    let second = c::<T>(k + m + 1) / ((c::<T>(k + n + m + 1) + p.s.clone()) * (c::<T>(k + m + 1) + p.t.clone()));
    first - second
}

/// Numerator `t(n^2 - ms + n(s+k+1)) - ms(m+k+1)` of `delta_k` over a positive
/// denominator; it has the sign of `delta_k` and no cancellation.
pub fn delta_sign_numerator<T: Scalar>(p: &SymbolParams<T>, k: u64) -> T {
    let (n, m) = (c::<T>(p.n), c::<T>(p.m));
    let s = p.s.clone();
    let t = p.t.clone();
    t * (n.square() - m.clone() * s.clone() + n * (s.clone() + c::<T>(k + 1))) - m.clone() * s * (m + c::<T>(k + 1))
}

pub fn point<T: Scalar>(p: &SymbolParams<T>, k: u64) -> SequencePoint<T> {
    SequencePoint { k, sigma: sigma(p, k), omega: omega(p, k), delta: delta(p, k) }
}

/// Eigenvalue `lambda_k` of `[T*, T]` for `T = T_{z^m zbar^n}`, `m >= n`.
///
/// `(k+1)(k+m-n+1)/(k+m+1)^2` for `k < m-n`, and that minus
/// `(k+1)(k+n-m+1)/(k+n+1)^2` for `k >= m-n`. `n = 0` is accepted.
pub fn lambda_eig(m: u64, n: u64, k: u64) -> Result<Rational> {
    if m < n {
        return Err(Error::InvalidOrder { m, n });
    }
    Ok(lambda_unchecked(m, n, k))
}

pub(crate) fn lambda_unchecked(m: u64, n: u64, k: u64) -> Rational {
    let big = |v: u64| BigInt::from(v);
    let k1 = big(k + 1);
    let head = Rational::new(&k1 * big(k + m - n + 1), big(k + m + 1).pow(2));
    if k < m - n {
        head
    } else {
        // k + n + 1 - m >= 1 here
        head - Rational::new(&k1 * big(k + n + 1 - m), big(k + n + 1).pow(2))
    }
}

/// The same eigenvalue in binary64, for scans.
pub fn lambda_f64(m: u64, n: u64, k: u64) -> f64 {
    let (m, n, k) = (m as f64, n as f64, k as f64);
    let head = (k + 1.0) * (k + m - n + 1.0) / (k + m + 1.0).powi(2);
    if k < m - n {
        head
    } else {
        head - (k + 1.0) * (k + n - m + 1.0) / (k + n + 1.0).powi(2)
    }
}

/// A commutator eigenvalue tagged with its indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommutatorEigenvalue {
    pub k: u64,
    pub m: u64,
    pub n: u64,
    pub value: Rational,
}

impl CommutatorEigenvalue {
    pub fn new(m: u64, n: u64, k: u64) -> Result<Self> {
        Ok(CommutatorEigenvalue { k, m, n, value: lambda_eig(m, n, k)? })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SequenceKind {
    Sigma,
    Omega,
    Delta,
}

/// Large-`k` leading terms: `n(n+2s)/k^3`, `-2mt/(k+t)^3` and `nt/(k(k+t)^2)`.
///
/// Returns `None` for `k = 0` (all three forms are singular or meaningless
/// there).
pub fn asymptotic_leading<T: Scalar>(kind: SequenceKind, p: &SymbolParams<T>, k: u64) -> Option<f64> {
    if k == 0 {
        return None;
    }
    let (n, m, s, t, k) = (p.n as f64, p.m as f64, p.s.to_f64(), p.t.to_f64(), k as f64);
    Some(match kind {
        SequenceKind::Sigma => n * (n + 2.0 * s) / k.powi(3),
        SequenceKind::Omega => -2.0 * m * t / (k + t).powi(3),
        SequenceKind::Delta => n * t / (k * (k + t).powi(2)),
    })
}

/// `inf_k sigma_k / (-omega_k)` as `k -> inf`, i.e. `n(n+2s) / (m(m+2t))`.
pub fn sigma_omega_ratio_limit<T: Scalar>(p: &SymbolParams<T>) -> T {
    let (n, m) = (c::<T>(p.n), c::<T>(p.m));
    let two = c::<T>(2);
    n.clone() * (n + two.clone() * p.s.clone()) / (m.clone() * (m + two * p.t.clone()))
}
