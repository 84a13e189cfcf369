//! Smallest eigenpair of a symmetric matrix with a single off-diagonal band.
//!
//! An entry at offset `p` couples index `k` only to `k ± p`, so the matrix is a
//! direct sum of `p` symmetric tridiagonal chains (one per residue class mod
//! `p`). Each chain is handled with Sturm-count bisection on the LDL^T inertia
//! followed by shifted inverse iteration for the eigenvector.

use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct BandEigen {
    pub value: f64,
    /// Unit 2-norm eigenvector for `value`.
    pub vector: Vec<f64>,
}

/// Smallest eigenvalue of the `K x K` symmetric matrix with diagonal `diag` and
/// entries `offdiag[k]` at positions `(k, k + offset)` and `(k + offset, k)`.
///
/// `offdiag.len()` must equal `max(0, K - offset)`.
pub fn banded_min_eigenvalue(diag: &[f64], offdiag: &[f64], offset: usize) -> Result<BandEigen> {
    let k = diag.len();
    if offset == 0 {
        return Err(Error::DimensionMismatch("band offset must be positive".into()));
    }
    if k == 0 {
        return Err(Error::DimensionMismatch("empty matrix".into()));
    }
    let expected = k.saturating_sub(offset);
    if offdiag.len() != expected {
        return Err(Error::DimensionMismatch(format!(
            "offdiag has length {}, expected {expected} for K = {k}, offset = {offset}",
            offdiag.len()
        )));
    }
    if diag.iter().chain(offdiag).any(|v| !v.is_finite()) {
        return Err(Error::DimensionMismatch("non-finite matrix entry".into()));
    }

    let mut best: Option<(f64, usize, Vec<f64>)> = None;
    for r in 0..offset.min(k) {
        let d: Vec<f64> = (r..k).step_by(offset).map(|i| diag[i]).collect();
        let e: Vec<f64> = (r..k).step_by(offset).take(d.len() - 1).map(|i| offdiag[i]).collect();
        let lam = tridiag_min_eigenvalue(&d, &e);
        if best.as_ref().map_or(true, |b| lam < b.0) {
            let v = tridiag_eigenvector(&d, &e, lam);
            best = Some((lam, r, v));
        }
    }
    let (value, r, chain_vec) = best.expect("at least one chain");
    let mut vector = vec![0.0; k];
    for (j, i) in (r..k).step_by(offset).enumerate() {
        vector[i] = chain_vec[j];
    }
    Ok(BandEigen { value, vector })
}

/// Number of eigenvalues of the tridiagonal `(d, e)` strictly below `x`.
fn sturm_count(d: &[f64], e: &[f64], x: f64, pivmin: f64) -> usize {
    let mut count = 0;
    let mut q = d[0] - x;
    if q.abs() < pivmin {
        q = -pivmin;
    }
    if q < 0.0 {
        count += 1;
    }
    for i in 1..d.len() {
        q = d[i] - x - e[i - 1] * e[i - 1] / q;
        if q.abs() < pivmin {
            q = -pivmin;
        }
        if q < 0.0 {
            count += 1;
        }
    }
    count
}

fn tridiag_min_eigenvalue(d: &[f64], e: &[f64]) -> f64 {
    if d.len() == 1 {
        return d[0];
    }
    let n = d.len();
    let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
    for i in 0..n {
        let r = if i > 0 { e[i - 1].abs() } else { 0.0 } + if i + 1 < n { e[i].abs() } else { 0.0 };
        lo = lo.min(d[i] - r);
        hi = hi.max(d[i] + r);
    }
    let norm = lo.abs().max(hi.abs()).max(f64::MIN_POSITIVE);
    let emax2 = e.iter().fold(0.0f64, |m, v| m.max(v * v));
    let pivmin = f64::MIN_POSITIVE * emax2.max(1.0);
    lo -= 2.0 * f64::EPSILON * norm;
    hi += 2.0 * f64::EPSILON * norm;
    // Invariant: count(lo) == 0, count(hi) >= 1.
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi || hi - lo <= 2.0 * f64::EPSILON * (lo.abs().max(hi.abs())) + pivmin {
            break;
        }
        if sturm_count(d, e, mid, pivmin) >= 1 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    0.5 * (lo + hi)
}

/// Inverse iteration with shift just below `lambda`, so that `T - shift I` is
/// positive definite and LDL^T without pivoting is stable.
fn tridiag_eigenvector(d: &[f64], e: &[f64], lambda: f64) -> Vec<f64> {
    let n = d.len();
    if n == 1 {
        return vec![1.0];
    }
    let scale = d
        .iter()
        .map(|v| v.abs())
        .chain(e.iter().map(|v| 2.0 * v.abs()))
        .fold(0.0f64, f64::max)
        .max(f64::MIN_POSITIVE);
    let mut best: Option<(f64, Vec<f64>)> = None;
    for &rel in &[1e-14, 1e-12, 1e-10] {
        let shift = lambda - rel * scale;
        let mut x = vec![1.0 / (n as f64).sqrt(); n];
        for _ in 0..4 {
            x = solve_shifted(d, e, shift, &x, scale);
            let nrm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
            if !nrm.is_finite() || nrm == 0.0 {
                break;
            }
            x.iter_mut().for_each(|v| *v /= nrm);
        }
        let res = residual(d, e, lambda, &x);
        if res.is_finite() && best.as_ref().map_or(true, |b| res < b.0) {
            best = Some((res, x));
        }
        if res <= 1e-12 * scale {
            break;
        }
    }
    best.map(|b| b.1).unwrap_or_else(|| vec![1.0 / (n as f64).sqrt(); n])
}

fn solve_shifted(d: &[f64], e: &[f64], shift: f64, b: &[f64], scale: f64) -> Vec<f64> {
    let n = d.len();
    let tiny = f64::EPSILON * scale;
    let mut piv = vec![0.0; n];
    let mut y = vec![0.0; n];
    piv[0] = d[0] - shift;
    if piv[0].abs() < tiny {
        piv[0] = tiny;
    }
    y[0] = b[0];
    for i in 1..n {
        let l = e[i - 1] / piv[i - 1];
        piv[i] = d[i] - shift - l * e[i - 1];
        if piv[i].abs() < tiny {
            piv[i] = tiny;
        }
        y[i] = b[i] - l * y[i - 1];
    }
    let mut x = vec![0.0; n];
    x[n - 1] = y[n - 1] / piv[n - 1];
    for i in (0..n - 1).rev() {
        x[i] = (y[i] - e[i] * x[i + 1]) / piv[i];
    }
    x
}

fn residual(d: &[f64], e: &[f64], lambda: f64, x: &[f64]) -> f64 {
    let n = d.len();
    let mut acc = 0.0f64;
    for i in 0..n {
        let mut r = (d[i] - lambda) * x[i];
        if i > 0 {
            r += e[i - 1] * x[i - 1];
        }
        if i + 1 < n {
            r += e[i] * x[i + 1];
        }
        acc = acc.max(r.abs());
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decoupled_identity() {
        let r = banded_min_eigenvalue(&[1.0, 1.0], &[], 3).unwrap();
        assert_eq!(r.value, 1.0);
    }

    #[test]
    fn two_by_two() {
        let r = banded_min_eigenvalue(&[2.0, 2.0], &[-1.0], 1).unwrap();
        assert!((r.value - 1.0).abs() < 1e-14);
        let s = std::f64::consts::FRAC_1_SQRT_2;
        assert!((r.vector[0].abs() - s).abs() < 1e-12 && (r.vector[1].abs() - s).abs() < 1e-12);
    }

    #[test]
    fn dimension_errors() {
        assert!(banded_min_eigenvalue(&[1.0, 2.0, 3.0], &[1.0, 1.0], 2).is_err());
        assert!(banded_min_eigenvalue(&[1.0, 2.0, 3.0], &[1.0], 0).is_err());
        assert!(banded_min_eigenvalue(&[], &[], 1).is_err());
    }

    #[test]
    fn chain_split_picks_smallest() {
        // offset 2: chains {0, 2} and {1, 3}
        let diag = [5.0, 0.0, 5.0, 0.0];
        let off = [0.0, 3.0];
        let r = banded_min_eigenvalue(&diag, &off, 2).unwrap();
        assert!((r.value + 3.0).abs() < 1e-13);
        assert_eq!(r.vector[0], 0.0);
        assert_eq!(r.vector[2], 0.0);
    }
}
