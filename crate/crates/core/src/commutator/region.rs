//! Grid scan of the sign of `d(m, n)` and the figure outputs built from it.

use std::fmt::Write as _;
use std::io::{self, Write};

use rayon::prelude::*;
use serde::Serialize;

use super::d_sign;

/// Sign of `d` over `1 <= n < m <= m_max`, `n <= n_max`. Column `m` stores
/// one bit per `n` with bit set when `d(m, n) > 0` (the shaded cells).
#[derive(Clone, Debug)]
pub struct RegionScan {
    pub m_max: u64,
    pub n_max: u64,
    columns: Vec<Vec<u64>>,
    /// `(m, least n with d > 0)` for every `m` that has a shaded cell.
    pub boundary_samples: Vec<(u64, u64)>,
    /// Pairs with `d = 0`.
    pub degenerate: Vec<(u64, u64)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundaryFit {
    /// Least-squares slope of `m` against the boundary `n` over the upper half of the grid.
    pub slope: f64,
    pub intercept: f64,
    pub samples_used: usize,
    /// `m / n_low(m)` at the largest `m` with a shaded cell.
    pub ratio_at_max: f64,
    pub m_at_max: u64,
}

fn column(m: u64, n_max: u64) -> (Vec<u64>, Vec<u64>) {
    let top = (m - 1).min(n_max);
    let mut bits = vec![0u64; (n_max as usize).div_ceil(64)];
    let mut zeros = Vec::new();
    for n in 1..=top {
        match d_sign(m, n) {
            1 => {
                let i = (n - 1) as usize;
                bits[i / 64] |= 1 << (i % 64);
            }
            0 => zeros.push(n),
            _ => {}
        }
    }
    (bits, zeros)
}

/// Exact sign of `d` at every cell, computed in parallel over `m` and
/// assembled in ascending `m`.
pub fn scan_region(m_max: u64, n_max: u64) -> RegionScan {
    assert!(m_max >= 2, "m_max must be at least 2");
    let n_max = n_max.min(m_max - 1);
    let cols: Vec<(Vec<u64>, Vec<u64>)> = (1..=m_max).into_par_iter().map(|m| column(m, n_max)).collect();
    let mut columns = Vec::with_capacity(cols.len());
    let mut degenerate = Vec::new();
    for (m, (bits, zeros)) in (1..=m_max).zip(cols) {
        degenerate.extend(zeros.into_iter().map(|n| (m, n)));
        columns.push(bits);
    }
    let mut scan = RegionScan { m_max, n_max, columns, boundary_samples: Vec::new(), degenerate };
    scan.boundary_samples = (2..=m_max).filter_map(|m| scan.lowest_shaded(m).map(|n| (m, n))).collect();
    scan
}

impl RegionScan {
    pub fn is_shaded(&self, m: u64, n: u64) -> bool {
        if m == 0 || n == 0 || m > self.m_max || n > self.n_max || n >= m {
            return false;
        }
        let i = (n - 1) as usize;
        self.columns[(m - 1) as usize][i / 64] >> (i % 64) & 1 == 1
    }

    fn lowest_shaded(&self, m: u64) -> Option<u64> {
        let col = &self.columns[(m - 1) as usize];
        col.iter()
            .enumerate()
            .find(|(_, w)| **w != 0)
            .map(|(i, w)| (i * 64) as u64 + u64::from(w.trailing_zeros()) + 1)
    }

    pub fn shaded_count(&self) -> u64 {
        self.columns.iter().flatten().map(|w| u64::from(w.count_ones())).sum()
    }

    /// Values of `m` whose shaded cells do not form the single run
    /// `n_low(m) ..= min(m - 1, n_max)`.
    pub fn non_contiguous_columns(&self) -> Vec<u64> {
        self.boundary_samples
            .iter()
            .filter(|&&(m, low)| (low..=(m - 1).min(self.n_max)).any(|n| !self.is_shaded(m, n)))
            .map(|&(m, _)| m)
            .collect()
    }

    /// Fits `m = slope * n_low + intercept` over samples with `m >= m_max / 2`.
    pub fn fit_boundary(&self) -> Option<BoundaryFit> {
        let pts: Vec<(f64, f64)> = self
            .boundary_samples
            .iter()
            .filter(|(m, _)| *m >= self.m_max / 2)
            .map(|&(m, n)| (n as f64, m as f64))
            .collect();
        let &(m_at_max, n_low) = self.boundary_samples.last()?;
        if pts.len() < 2 {
            return None;
        }
        let len = pts.len() as f64;
        let mx = pts.iter().map(|p| p.0).sum::<f64>() / len;
        let my = pts.iter().map(|p| p.1).sum::<f64>() / len;
        let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
        let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
        if sxx == 0.0 {
            return None;
        }
        let slope = sxy / sxx;
        Some(BoundaryFit {
            slope,
            intercept: my - slope * mx,
            samples_used: pts.len(),
            ratio_at_max: m_at_max as f64 / n_low as f64,
            m_at_max,
        })
    }

    /// Plain P1 bitmap: `m_max` columns (m = 1 at the left) by `n_max` rows
    /// (n = 1 at the top), 1 for shaded cells.
    pub fn write_pbm<W: Write>(&self, mut w: W) -> io::Result<()> {
        writeln!(w, "P1")?;
        writeln!(w, "# shaded cells (m,n) with d(m,n) > 0")?;
        writeln!(w, "# column j is m = j + 1, row i is n = i + 1")?;
        writeln!(w, "# origin (m,n) = (1,1) at the top left")?;
        writeln!(w, "{} {}", self.m_max, self.n_max)?;
        let mut line = String::with_capacity(72);
        for n in 1..=self.n_max {
            for m in 1..=self.m_max {
                if line.len() >= 70 {
                    writeln!(w, "{line}")?;
                    line.clear();
                }
                line.push(if self.is_shaded(m, n) { '1' } else { '0' });
            }
            writeln!(w, "{line}")?;
            line.clear();
        }
        Ok(())
    }

    /// `m,n,d_sign` for every cell `n < m`, ordered by `m` then `n`.
    pub fn write_csv<W: Write>(&self, w: W) -> csv::Result<()> {
        let mut out = csv::Writer::from_writer(w);
        out.write_record(["m", "n", "d_sign"])?;
        for m in 2..=self.m_max {
            for n in 1..=(m - 1).min(self.n_max) {
                let sign = if self.is_shaded(m, n) {
                    "1"
                } else if self.degenerate.binary_search(&(m, n)).is_ok() {
                    "0"
                } else {
                    "-1"
                };
                out.write_record([m.to_string(), n.to_string(), sign.to_string()])?;
            }
        }
        out.flush()?;
        Ok(())
    }

    /// SVG with `m` to the right and `n` upward; each shaded run in a column
    /// becomes one rectangle.
    pub fn to_svg(&self) -> String {
        let (w, h) = (self.m_max, self.n_max);
        let mut s = String::new();
        let _ = writeln!(
            s,
            r#"<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 {w} {h}" width="{w}" height="{h}" shape-rendering="crispEdges">"#
        );
        let _ = writeln!(s, r#"<rect width="{w}" height="{h}" fill="white"/>"#);
        for m in 2..=self.m_max {
            let mut n = 1;
            let top = (m - 1).min(self.n_max);
            while n <= top {
                if !self.is_shaded(m, n) {
                    n += 1;
                    continue;
                }
                let start = n;
                while n <= top && self.is_shaded(m, n) {
                    n += 1;
                }
                let y = h - (n - 1);
                let _ = writeln!(s, r#"<rect x="{}" y="{y}" width="1" height="{}" fill="black"/>"#, m - 1, n - start);
            }
        }
        s.push_str("</svg>\n");
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::commutator::{classify_monotonicity, Classification};

    #[test]
    fn small_grid_matches_classification() {
        let scan = scan_region(40, 40);
        assert!(!scan.is_shaded(2, 1));
        assert!(scan.is_shaded(8, 7));
        assert!(!scan.is_shaded(5, 5));
        assert!(!scan.is_shaded(4, 6));
        for m in 2..=40 {
            for n in 1..m {
                let c = classify_monotonicity(m, n).unwrap().classification;
                assert_eq!(scan.is_shaded(m, n), c == Classification::UniqueInteriorMax, "({m},{n})");
            }
        }
        assert!(scan.degenerate.is_empty());
        assert!(scan.non_contiguous_columns().is_empty());
        assert_eq!(scan.boundary_samples[0].0, 5);
    }

    #[test]
    fn pbm_layout() {
        let scan = scan_region(10, 10);
        let mut buf = Vec::new();
        scan.write_pbm(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines().filter(|l| !l.starts_with('#'));
        assert_eq!(lines.next(), Some("P1"));
        assert_eq!(lines.next(), Some("10 9"));
        let rows: Vec<&str> = lines.collect();
        assert_eq!(rows.len(), 9);
        // row n = 7, column m = 8
        assert_eq!(rows[6].as_bytes()[7], b'1');
        assert_eq!(rows[0].as_bytes()[1], b'0');
    }

    #[test]
    fn csv_counts() {
        let scan = scan_region(12, 12);
        let mut buf = Vec::new();
        scan.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 1 + 11 * 12 / 2);
        assert!(text.contains("\n8,7,1\n"));
        assert!(text.contains("\n2,1,-1\n"));
    }

    #[test]
    fn svg_has_shaded_rects() {
        let svg = scan_region(12, 12).to_svg();
        assert!(svg.starts_with("<svg"));
        assert!(svg.matches("fill=\"black\"").count() >= 1);
    }
}
