use num_traits::{Signed, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::numerics::{int, Rational};
use crate::sequences::{lambda_unchecked, omega, sigma, sigma_omega_ratio_limit, SymbolParams};

/// Necessary condition `|a|^2 <= sigma_k / (-omega_k)` from basis test vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct BasisBound {
    /// Smallest ratio found for `k <= scanned`.
    pub min_value: Rational,
    pub argmin_k: u64,
    /// `lim_{k -> inf} sigma_k / (-omega_k) = n(n+2s) / (m(m+2t))`.
    pub limit: Rational,
    /// `min(min_value, limit)`.
    pub bound: Rational,
    /// `min(ratio at k = 0, limit)`. For `t = 0` this is
    /// `min{(m+1)(n+1)/(n+s+1)^2, n(n+2s)/m^2}`, which can exceed `bound`
    /// when an interior `k` gives a smaller ratio.
    pub endpoint_bound: Rational,
    pub scanned: u64,
}

/// Scans `sigma_k / (-omega_k)` over `0 <= k <= scan` in binary64, confirms the
/// best candidates exactly, and combines them with the limit value.
pub fn basis_vector_bound(params: &SymbolParams<Rational>, scan: u64) -> BasisBound {
    let fp = params.to_f64();
    let ratios: Vec<f64> = (0..=scan).into_par_iter().map(|k| sigma(&fp, k) / -omega(&fp, k)).collect();
    let mut order: Vec<u64> = (0..=scan).collect();
    order.sort_by(|&x, &y| ratios[x as usize].total_cmp(&ratios[y as usize]).then(x.cmp(&y)));
    let mut cands: Vec<u64> = order.into_iter().take(4).collect();
    cands.push(0);
    let exact = |k: u64| sigma(params, k) / -omega(params, k);
    let at_zero = exact(0);
    let (argmin_k, min_value) = cands
        .into_iter()
        .map(|k| (k, exact(k)))
        .min_by(|x, y| x.1.cmp(&y.1).then(x.0.cmp(&y.0)))
        .expect("nonempty");
    let limit = sigma_omega_ratio_limit(params);
    let bound = if limit < min_value { limit.clone() } else { min_value.clone() };
    let endpoint_bound = if limit < at_zero { limit.clone() } else { at_zero };
    BasisBound { min_value, argmin_k, limit, bound, endpoint_bound, scanned: scan }
}

/// Result of the ratio bound for `z^m zbar^{m-1} + a zbar^{m-q} z^{m-q-1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct KlBound {
    /// `((m-q+1)/(m+1))^2`
    pub first_term: Rational,
    /// `(3/(m+2)^2 - 1/(m+1)^2) / (3/(m-q+2)^2 - 1/(m-q+1)^2)`
    pub second_term: Rational,
    /// Bound on `|a|^2`: the smaller of the two.
    pub bound: Rational,
    pub first_is_min: bool,
}

/// Upper bound on `|a|^2` for hyponormality of
/// `z^m zbar^{m-1} + a zbar^{m-q} z^{m-q-1}`; requires `m >= q + 1`.
pub fn kl_ratio_bound(m: u64, q: u64) -> Result<KlBound> {
    if m < q + 1 {
        return Err(Error::InvalidParams(format!("kl bound needs m >= q + 1 (got m = {m}, q = {q})")));
    }
    let r = |v: u64| int(v as i64);
    let first = (r(m - q + 1) / r(m + 1)).pow(2);
    let num = r(3) / r(m + 2).pow(2) - r(1) / r(m + 1).pow(2);
    let den = r(3) / r(m - q + 2).pow(2) - r(1) / r(m - q + 1).pow(2);
    let second = num / den;
    let first_is_min = first <= second;
    let bound = if first_is_min { first.clone() } else { second.clone() };
    Ok(KlBound { first_term: first, second_term: second, bound, first_is_min })
}

/// `lambda_k(m, m-1) / lambda_k(m-q, m-q-1)` for `k >= 1`, `m - q - 1 >= 1`.
pub fn lambda_ratio(m: u64, q: u64, k: u64) -> Result<Rational> {
    if m < q + 2 {
        return Err(Error::InvalidParams(format!("lambda ratio needs m - q - 1 >= 1 (got m = {m}, q = {q})")));
    }
    if k == 0 {
        return Err(Error::InvalidParams("lambda ratio is defined for k >= 1".into()));
    }
    let den = lambda_unchecked(m - q, m - q - 1, k);
    debug_assert!(!den.is_zero() && den.is_positive());
    Ok(lambda_unchecked(m, m - 1, k) / den)
}

/// `lim_{k -> inf}` of [`lambda_ratio`]: since `lambda_k(m, m-1) ~ (2m-1)/k^2`,
/// the limit is `(2m-1)/(2(m-q)-1)`.
pub fn lambda_ratio_limit(m: u64, q: u64) -> Rational {
    Rational::new((2 * m - 1).into(), (2 * (m - q) - 1).into())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rat;

    fn p(n: u64, m: u64, s: Rational, t: Rational) -> SymbolParams<Rational> {
        SymbolParams::new(n, m, s, t, int(0)).unwrap()
    }

    #[test]
    fn t_zero_examples() {
        let b = basis_vector_bound(&p(1, 1, int(1), int(0)), 10_000);
        assert_eq!(b.bound, rat(4, 9));
        assert_eq!(b.limit, int(3));
        assert_eq!(b.argmin_k, 0);
        // min{12/12.25, 2/3}
        let b = basis_vector_bound(&p(2, 3, rat(1, 2), int(0)), 10_000);
        assert_eq!(b.limit, rat(2, 3));
        assert_eq!(b.endpoint_bound, rat(2, 3));
        // the ratio dips at k = n = 2, below both endpoint values
        assert_eq!(b.argmin_k, 2);
        assert_eq!(b.bound, rat(2976, 5929));
        assert_eq!(sigma(&p(2, 3, rat(1, 2), int(0)), 0) / -omega(&p(2, 3, rat(1, 2), int(0)), 0), rat(48, 49));
    }

    #[test]
    fn t_zero_matches_closed_form() {
        for n in 1..5u64 {
            for m in 1..5u64 {
                for s in [int(0), rat(1, 2), int(2)] {
                    let b = basis_vector_bound(&p(n, m, s.clone(), int(0)), 5000);
                    let head = r(m + 1) * r(n + 1) / (r(n + 1) + s.clone()).pow(2);
                    let tail = r(n) * (r(n) + int(2) * s.clone()) / r(m * m);
                    let formula = if head < tail { head } else { tail };
                    assert_eq!(b.endpoint_bound, formula);
                    assert!(b.bound <= formula);
                }
            }
        }
    }

    fn r(v: u64) -> Rational {
        int(v as i64)
    }

    #[test]
    fn mirror_symmetry_gives_one() {
        let b = basis_vector_bound(&p(3, 3, rat(5, 2), rat(5, 2)), 1000);
        assert_eq!(b.bound, int(1));
        assert_eq!(b.limit, int(1));
    }

    #[test]
    fn kl_examples() {
        let b = kl_ratio_bound(3, 1).unwrap();
        assert_eq!(b.bound, rat(9, 16));
        assert!(b.first_is_min && b.second_term >= rat(9, 16));
        for q in 1..10 {
            assert_eq!(kl_ratio_bound(q + 1, q).unwrap().bound, (rat(2, 1) / r(q + 2)).pow(2));
        }
        let b = kl_ratio_bound(10, 3).unwrap();
        assert_eq!(b.bound, rat(64, 121));
        assert!(b.first_is_min);
        assert!(kl_ratio_bound(3, 3).is_err());
    }

    #[test]
    fn kl_first_term_is_always_min() {
        for q in 1..40 {
            for m in q + 1..q + 80 {
                assert!(kl_ratio_bound(m, q).unwrap().first_is_min, "m = {m}, q = {q}");
            }
        }
    }

    #[test]
    fn ratio_examples() {
        for k in 1..50 {
            assert_eq!(lambda_ratio(2, 0, k).unwrap(), int(1));
        }
        // The sequence increases with k (the opposite of "decreasing").
        assert!(lambda_ratio(3, 1, 2).unwrap() > lambda_ratio(3, 1, 1).unwrap());
        let lim = lambda_ratio_limit(5, 2);
        assert_eq!(lim, rat(9, 5));
        let v = lambda_ratio(5, 2, 100_000).unwrap();
        assert!((v - lim).abs() < rat(1, 1000));
        assert!(lambda_ratio(3, 2, 1).is_err());
    }
}
