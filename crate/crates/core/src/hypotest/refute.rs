use num_bigint::BigInt;
use num_traits::{Signed, Zero};
use rayon::prelude::*;

use super::form::form_value;
use super::{HypoVerdict, TestVector, VectorKind, Witness, DEGENERATE};
use crate::numerics::{banded_min_eigenvalue, Rational};
use crate::sequences::{delta, omega, sigma, SymbolParams};

/// Number of exact checks spent on the most negative basis-vector candidates.
const BASIS_CANDIDATES: usize = 8;

/// Looks for a vector supported in `0..size` on which the form is negative.
///
/// First scans basis vectors `e_k` (form value `sigma_k + |a|^2 omega_k`), then
/// takes the eigenvector of the smallest eigenvalue of the truncated form after
/// the congruence `D^{-1/2} A D^{-1/2}` with `D = diag(sigma)`, which keeps all
/// entries of order one. The eigenvector is rounded to rationals with
/// denominator `2^53` and re-evaluated exactly. A witness is accepted only when
/// its exact value is strictly negative; an exact zero is reported as the
/// degenerate boundary.
pub fn refute_truncated(params: &SymbolParams<Rational>, size: usize) -> HypoVerdict {
    let offset = params.offset();
    if size <= offset {
        return HypoVerdict::inconclusive(size, format!("truncation {size} does not exceed n + m = {offset}"));
    }
    let fp = params.to_f64();
    let a2 = fp.a * fp.a;

    let sig: Vec<f64> = (0..size as u64).into_par_iter().map(|k| sigma(&fp, k)).collect();
    let diag: Vec<f64> = (0..size as u64)
        .into_par_iter()
        .map(|k| sig[k as usize] + a2 * omega(&fp, k))
        .collect();

    // basis vectors, most negative relative value first
    let mut cands: Vec<(f64, usize)> = diag
        .iter()
        .zip(&sig)
        .enumerate()
        .filter(|(_, (d, s))| **d <= 1e-9 * **s)
        .map(|(k, (d, s))| (d / s, k))
        .collect();
    cands.sort_by(|x, y| x.0.total_cmp(&y.0).then(x.1.cmp(&y.1)));
    let a2_exact = &params.a * &params.a;
    let mut saw_zero = false;
    for &(_, k) in cands.iter().take(BASIS_CANDIDATES) {
        let k = k as u64;
        let value = sigma(params, k) + &a2_exact * omega(params, k);
        if value.is_negative() {
            let w = Witness { vector: TestVector::basis(k), value, a: params.a.clone(), t: params.t.clone() };
            return HypoVerdict::refuted(size, w);
        }
        if value.is_zero() {
            saw_zero = true;
        }
    }

    let band: Vec<f64> = (0..(size - offset) as u64)
        .into_par_iter()
        .map(|k| {
            let k = k as usize;
            -fp.a * delta(&fp, k as u64).abs() / (sig[k] * sig[k + offset]).sqrt()
        })
        .collect();
    let scaled: Vec<f64> = diag.iter().zip(&sig).map(|(d, s)| d / s).collect();
    if scaled.iter().all(|v| *v == 0.0) && band.iter().all(|v| *v == 0.0) {
        if form_is_zero(params, size) {
            return HypoVerdict::inconclusive(size, format!("{DEGENERATE}: the truncated form vanishes identically"));
        }
    }
    let eig = match banded_min_eigenvalue(&scaled, &band, offset) {
        Ok(e) => e,
        Err(e) => return HypoVerdict::inconclusive(size, format!("eigen solve failed: {e}")),
    };
    if eig.value >= 0.0 {
        let note = if saw_zero {
            format!("{DEGENERATE}: a basis vector gives form value exactly 0")
        } else {
            format!("smallest eigenvalue of the scaled truncation is {:e} >= 0", eig.value)
        };
        return HypoVerdict::inconclusive(size, note);
    }

    let u: Vec<f64> = eig.vector.iter().zip(&sig).map(|(v, s)| v.abs() / s.sqrt()).collect();
    for drop_below in [0.0, 1e-12, 1e-8, 1e-5] {
        if let Some(w) = rounded_witness(params, &u, drop_below) {
            if w.value.is_negative() {
                return HypoVerdict::refuted(size, w);
            }
        }
    }
    HypoVerdict::inconclusive(
        size,
        format!("rounded eigenvector (eigenvalue {:e}) did not give a negative exact value", eig.value),
    )
}

fn form_is_zero(params: &SymbolParams<Rational>, size: usize) -> bool {
    let a2 = &params.a * &params.a;
    (0..size as u64).into_par_iter().all(|k| {
        (sigma(params, k) + &a2 * omega(params, k)).is_zero() && (params.a.is_zero() || delta(params, k).is_zero())
    })
}

/// Rounds `u / max|u|` to the grid `2^-53`, zeroing entries below
/// `drop_below`, trims the support and evaluates the form exactly.
fn rounded_witness(params: &SymbolParams<Rational>, u: &[f64], drop_below: f64) -> Option<Witness> {
    let max = u.iter().fold(0.0f64, |m, v| m.max(*v));
    if !(max > 0.0) || !max.is_finite() {
        return None;
    }
    let scale = (1u64 << 53) as f64;
    let den = BigInt::from(1u64 << 53);
    let grid: Vec<i64> = u
        .iter()
        .map(|v| {
            let r = v / max;
            if r < drop_below {
                0
            } else {
                (r * scale).round() as i64
            }
        })
        .collect();
    let first = grid.iter().position(|&g| g != 0)?;
    let last = grid.iter().rposition(|&g| g != 0)?;
    let values: Vec<Rational> = grid[first..=last]
        .iter()
        .map(|&g| Rational::new(BigInt::from(g), den.clone()))
        .collect();
    let value = form_value(params, first as u64, &values);
    Some(Witness {
        vector: TestVector { support_start: first as u64, values, kind: VectorKind::Eigenvector },
        value,
        a: params.a.clone(),
        t: params.t.clone(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypotest::Status;
    use crate::numerics::{int, rat};

    #[test]
    fn large_coefficient_has_basis_witness() {
        let p = SymbolParams::new(1, 1, int(1), int(1), int(2)).unwrap();
        let v = refute_truncated(&p, 10);
        assert_eq!(v.status, Status::CertifiedNotHyponormal);
        let w = v.witness.unwrap();
        assert_eq!(w.vector.kind, VectorKind::Basis);
        // sigma + 4 omega = -3 sigma
        let k = w.vector.support_start;
        assert_eq!(w.value, -int(3) * sigma(&p, k));
    }

    #[test]
    fn unit_coefficient_symmetric_is_degenerate() {
        let p = SymbolParams::new(1, 1, int(1), int(1), int(1)).unwrap();
        for size in [10, 100] {
            let v = refute_truncated(&p, size);
            assert_eq!(v.status, Status::Inconclusive);
            assert!(v.is_degenerate(), "{:?}", v.diagnostics);
        }
    }

    #[test]
    fn above_threshold_eigen_witness() {
        // t = 16, a = 2 (n + 2s)/(2t) = 3/16
        let p = SymbolParams::new(1, 1, int(1), int(16), rat(3, 16)).unwrap();
        let mut found = None;
        for size in [256, 1024, 4096, 10_000] {
            let v = refute_truncated(&p, size);
            if v.status == Status::CertifiedNotHyponormal {
                found = Some(v);
                break;
            }
        }
        let v = found.expect("a witness within K <= 10^4");
        let w = v.witness.unwrap();
        assert!(w.value.is_negative());
        assert_eq!(form_value(&p, w.vector.support_start, &w.vector.values), w.value);
    }
}
