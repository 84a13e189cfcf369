use num_integer::Roots;
use num_traits::{One, Signed, ToPrimitive};
use rayon::prelude::*;

use super::form::form_value;
use super::{Diagnostics, HypoVerdict, Mode, Status, TestVector, Witness};
use crate::error::{Error, Result};
use crate::numerics::{fmt_rational, int, Rational};
use crate::sequences::SymbolParams;

/// Parameters of the window-vector search for the family `a(t) = c / t`.
///
/// Holds the margin `eta`, the slack `epsilon`, the window length `k2` and the
/// start indices `k1`. The stored values must satisfy
/// `2 eta (k2 - n - m + 1)(1 - epsilon) / ((k2 + 1)(1 + epsilon)) > 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct WindowSearchConfig {
    pub eta: Rational,
    pub epsilon: Rational,
    pub k2: u64,
    pub k1_grid: Vec<u64>,
}

impl WindowSearchConfig {
    /// Default configuration for `(n, m, s)` and coefficient `c`:
    /// `eta = |c| / (n + 2s)`, `epsilon = (2 eta - 1)/(6 eta + 1)`, the least
    /// `k2 >= n + m` meeting the margin inequality, and `k1 = 2^8, ..., 2^24`.
    pub fn for_family(n: u64, m: u64, s: &Rational, c: &Rational) -> Result<Self> {
        let eta = c.abs() / (int(n as i64) + s * int(2));
        let half = Rational::new(1.into(), 2.into());
        if eta <= half {
            return Err(Error::ConfigViolatesEpsdef(format!(
                "eta = |c|/(n+2s) = {} must exceed 1/2",
                fmt_rational(&eta)
            )));
        }
        let two_eta = &eta * int(2);
        let epsilon = (&two_eta - int(1)) / (&eta * int(6) + int(1));
        let half_cap = Rational::new(1.into(), 2.into());
        let epsilon = if epsilon > half_cap { half_cap } else { epsilon };
        let gain = &two_eta * (int(1) - &epsilon);
        let loss = int(1) + &epsilon;
        // gain (k2 - p + 1) > loss (k2 + 1)  <=>  k2 > (loss + gain (p - 1)) / (gain - loss)
        let p = (n + m) as i64;
        let bound = (&loss + &gain * int(p - 1)) / (&gain - &loss);
        let k2 = (bound.floor().to_integer() + 1u32).to_u64().unwrap_or(u64::MAX);
        let k2 = k2.max(n + m);
        let k1_grid = (8..=24).map(|e| 1u64 << e).collect();
        let cfg = WindowSearchConfig { eta, epsilon, k2, k1_grid };
        cfg.check_margin(n, m)?;
        Ok(cfg)
    }

    /// Checks `eta > 1/2`, `0 < epsilon < 1` and the margin inequality exactly.
    pub fn check_margin(&self, n: u64, m: u64) -> Result<()> {
        let half = Rational::new(1.into(), 2.into());
        if self.eta <= half {
            return Err(Error::ConfigViolatesEpsdef(format!("eta = {} <= 1/2", fmt_rational(&self.eta))));
        }
        if !self.epsilon.is_positive() || self.epsilon >= Rational::one() {
            return Err(Error::ConfigViolatesEpsdef("epsilon must lie in (0, 1)".into()));
        }
        let p = n + m;
        if self.k2 + 1 < p {
            return Err(Error::ConfigViolatesEpsdef(format!("k2 = {} leaves no cross terms", self.k2)));
        }
        let lhs = &self.eta
            * int(2)
            * int((self.k2 + 1 - p) as i64)
            * (int(1) - &self.epsilon);
        let rhs = int((self.k2 + 1) as i64) * (int(1) + &self.epsilon);
        if lhs <= rhs {
            return Err(Error::ConfigViolatesEpsdef(format!(
                "2 eta (k2-n-m+1)(1-eps) / ((k2+1)(1+eps)) = {} is not > 1",
                fmt_rational(&(lhs / rhs))
            )));
        }
        Ok(())
    }
}

/// Exact form value on the window `u_k = 1` for `k1 <= k <= k1 + k2`.
pub fn window_value(params: &SymbolParams<Rational>, k1: u64, k2: u64) -> Rational {
    form_value(params, k1, &vec![int(1); (k2 + 1) as usize])
}

/// Searches the start grid with `t = floor(sqrt(k1))` and `|a| = |c| / t` for a
/// window on which the form is negative.
///
/// Every grid point is evaluated (in parallel); the first negative one in grid
/// order is reported, so the result does not depend on scheduling.
pub fn refute_window(n: u64, m: u64, s: &Rational, c: &Rational, config: &WindowSearchConfig) -> Result<HypoVerdict> {
    config.check_margin(n, m)?;
    let actual_eta = c.abs() / (int(n as i64) + s * int(2));
    if config.eta > actual_eta {
        return Err(Error::ConfigViolatesEpsdef(format!(
            "configured eta {} exceeds |c|/(n+2s) = {}",
            fmt_rational(&config.eta),
            fmt_rational(&actual_eta)
        )));
    }
    let base = SymbolParams::new(n, m, s.clone(), int(1), int(0))?;
    let k2 = config.k2;
    let results: Vec<Option<Witness>> = config
        .k1_grid
        .par_iter()
        .map(|&k1| {
            let t = int(k1.sqrt() as i64);
            let a = c.abs() / &t;
            let params = base.with_t(t.clone()).with_a(a.clone());
            let value = window_value(&params, k1, k2);
            value.is_negative().then(|| Witness { vector: TestVector::window(k1, k2), value, a, t })
        })
        .collect();
    let last_k1 = config.k1_grid.last().copied().unwrap_or(0);
    Ok(match results.into_iter().flatten().next() {
        Some(w) => {
            let size = (w.vector.support_end() + 1) as usize;
            HypoVerdict {
                status: Status::CertifiedNotHyponormal,
                witness: Some(w),
                certificate: None,
                diagnostics: Diagnostics { truncation: size, mode: Mode::Exact, note: None },
            }
        }
        None => HypoVerdict::inconclusive(
            (last_k1 + k2 + 1) as usize,
            format!("no negative window value on the grid (k2 = {k2})"),
        ),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::rat;
    use crate::sequences::{omega, sigma};

    #[test]
    fn above_threshold_family_is_refuted() {
        let cfg = WindowSearchConfig::for_family(1, 1, &int(1), &int(2)).unwrap();
        assert_eq!(cfg.eta, rat(2, 3));
        let v = refute_window(1, 1, &int(1), &int(2), &cfg).unwrap();
        assert_eq!(v.status, Status::CertifiedNotHyponormal);
        let w = v.witness.unwrap();
        assert!(w.value.is_negative());
        assert_eq!(w.a, int(2) / &w.t);
    }

    #[test]
    fn below_half_margin_is_rejected() {
        assert!(matches!(
            WindowSearchConfig::for_family(1, 1, &int(1), &int(1)),
            Err(Error::ConfigViolatesEpsdef(_))
        ));
    }

    #[test]
    fn violating_config_is_rejected() {
        let mut cfg = WindowSearchConfig::for_family(1, 1, &int(1), &int(2)).unwrap();
        cfg.k2 = 2;
        assert!(refute_window(1, 1, &int(1), &int(2), &cfg).is_err());
    }

    #[test]
    fn single_point_window_has_no_cross_terms() {
        let p = SymbolParams::new(1, 2, int(1), int(4), rat(1, 3)).unwrap();
        for k1 in [0, 5, 1000] {
            assert_eq!(window_value(&p, k1, 0), sigma(&p, k1) + rat(1, 9) * omega(&p, k1));
        }
    }
}
