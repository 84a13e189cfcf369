use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::numerics::{Rational, Scalar};
use crate::sequences::{delta, omega, sigma, SymbolParams};

/// Truncation of the hyponormality form to indices `0..size`.
///
/// `diag[k] = sigma_k + |a|^2 omega_k` and `band[k] = -|a| |delta_k|` couples
/// `k` to `k + offset`, with `offset = n + m`. For nonnegative `u` the form value
/// is `sum diag[k] u_k^2 + 2 sum band[k] u_k u_{k+offset}`.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticFormBand<T> {
    pub params: SymbolParams<T>,
    pub size: usize,
    pub diag: Vec<T>,
    pub band: Vec<T>,
    pub offset: usize,
}

pub fn assemble_form<T: Scalar>(params: &SymbolParams<T>, size: usize) -> Result<QuadraticFormBand<T>> {
    let offset = params.offset();
    if size <= offset {
        return Err(Error::TruncationTooSmall { k: size, offset });
    }
    let a = params.a.clone();
    let a2 = a.square();
    let diag: Vec<T> = (0..size as u64)
        .into_par_iter()
        .map(|k| sigma(params, k) + a2.clone() * omega(params, k))
        .collect();
    let band: Vec<T> = (0..(size - offset) as u64)
        .into_par_iter()
        .map(|k| -(a.clone() * delta(params, k).abs()))
        .collect();
    Ok(QuadraticFormBand { params: params.clone(), size, diag, band, offset })
}

impl<T: Scalar> QuadraticFormBand<T> {
    /// Value of the form on `u` (indices beyond `size` must not be present).
    /// Cross terms use `|u_k| |u_{k+offset}|`, matching the worst-case pairing.
    pub fn evaluate(&self, u: &[T]) -> T {
        assert!(u.len() <= self.size, "vector longer than the truncation");
        let mut acc = T::zero();
        for (k, uk) in u.iter().enumerate() {
            acc = acc + self.diag[k].clone() * uk.square();
        }
        let two = T::from_i64(2);
        for k in 0..u.len().saturating_sub(self.offset) {
            acc = acc + two.clone() * self.band[k].clone() * u[k].abs() * u[k + self.offset].abs();
        }
        acc
    }

    pub fn is_identically_zero(&self) -> bool {
        self.diag.iter().chain(&self.band).all(Zero::is_zero)
    }
}

/// Exact value of the form on the vector with `u_{start+i} = values[i]`.
///
/// Computed without assembling the full band, so `start` can be very large.
/// Terms are summed pairwise.
pub fn form_value(params: &SymbolParams<Rational>, start: u64, values: &[Rational]) -> Rational {
    let p = params.offset();
    let a = &params.a;
    let a2 = a * a;
    let len = values.len();
    (0..len)
        .into_par_iter()
        .map(|i| {
            let k = start + i as u64;
            let ui = &values[i];
            let mut term = Rational::zero();
            if !ui.is_zero() {
                term = (sigma(params, k) + &a2 * omega(params, k)) * ui * ui;
                if i + p < len && !values[i + p].is_zero() && !a.is_zero() {
                    let cross = a * delta(params, k).abs() * ui.abs() * values[i + p].abs();
                    term -= cross * Rational::from_integer(2.into());
                }
            }
            term
        })
        .reduce(Rational::zero, |x, y| x + y)
}
