//! Uniform parameter grids and order statistics shared by the profile sweeps.

use serde::{Deserialize, Serialize};

use crate::error::Error;

/// Default number of grid points per closed curve or profile sweep.
///
/// The example bodies carry harmonics up to order 7, so 2048 points resolve
/// every profile far beyond Nyquist.
pub const DEFAULT_GRID: usize = 2048;

/// Uniform grid `t_i = 2*pi*i/n` over one period, endpoint excluded.
pub fn uniform_grid(n: usize) -> Vec<f64> {
    let step = std::f64::consts::TAU / n as f64;
    (0..n).map(|i| i as f64 * step).collect()
}

/// Order statistics of a sampled scalar function.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpreadStats {
    pub min: f64,
    pub max: f64,
    pub mean: f64,
    /// `(max - min) / mean`; zero when every value is identical.
    pub relative_spread: f64,
}

impl SpreadStats {
    /// Statistics accumulated in index order so results do not depend on any
    /// parallel evaluation schedule upstream.
    pub fn from_values(values: &[f64]) -> Result<Self, Error> {
        if values.is_empty() {
            return Err(Error::EmptySamples);
        }
        let mut min = f64::INFINITY;
        let mut max = f64::NEG_INFINITY;
        let mut sum = 0.0;
        for &v in values {
            min = min.min(v);
            max = max.max(v);
            sum += v;
        }
        let mean = sum / values.len() as f64;
        let relative_spread = if max == min { 0.0 } else { (max - min) / mean };
        Ok(Self {
            min,
            max,
            mean,
            relative_spread,
        })
    }
}

/// Format with 17 significant digits, enough to reproduce any f64 exactly.
pub fn fmt_sig17(x: f64) -> String {
    format!("{x:.16e}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_is_uniform_and_excludes_endpoint() {
        let g = uniform_grid(8);
        assert_eq!(g.len(), 8);
        assert_eq!(g[0], 0.0);
        assert!((g[4] - std::f64::consts::PI).abs() < 1e-15);
        assert!(g[7] < std::f64::consts::TAU);
    }

    #[test]
    fn spread_of_single_sample_is_zero() {
        let s = SpreadStats::from_values(&[3.5]).unwrap();
        assert_eq!(s.relative_spread, 0.0);
        assert_eq!(s.min, 3.5);
        assert_eq!(s.max, 3.5);
    }

    #[test]
    fn spread_rejects_empty_input() {
        assert!(matches!(
            SpreadStats::from_values(&[]),
            Err(Error::EmptySamples)
        ));
    }

    #[test]
    fn seventeen_digit_format_round_trips() {
        for &x in &[1.0, -0.1, 242.4871130596428, 1e-300, 6.02e23] {
            assert_eq!(fmt_sig17(x).parse::<f64>().unwrap(), x);
        }
    }
}
