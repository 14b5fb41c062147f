//! Hartigans' dip test of unimodality.
//!
//! [`dip_statistic`] computes the dip of the empirical distribution of a
//! sample together with its modal interval. [`dip_pvalue`] calibrates a dip
//! against samples drawn from the uniform distribution, the least favourable
//! unimodal null. [`dip_test`] composes the two.
//!
//! Samples with fewer than four observations, or with a single distinct
//! value, are unimodal by convention: dip 0, p-value 1, modal interval
//! `[min, max]`.

mod bootstrap;
mod hartigan;
mod oracle;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use bootstrap::dip_pvalue;
pub use oracle::dip_oracle;

/// Outcome of a dip computation on one sample.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DipResult {
    pub dip: f64,
    /// Present only when the result came from [`dip_test`].
    pub p_value: Option<f64>,
    pub modal_low: f64,
    pub modal_high: f64,
    /// Positions of the modal interval ends in the ascending-sorted sample.
    pub modal_index_low: usize,
    pub modal_index_high: usize,
}

impl DipResult {
    /// Unimodality verdict at significance level `alpha`. A result without a
    /// p-value is never called unimodal.
    pub fn is_unimodal(&self, alpha: f64) -> bool {
        self.p_value.is_some_and(|p| p > alpha)
    }
}

/// Settings of the bootstrap p-value.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DipConfig {
    /// Significance level; a sample is unimodal when `p > alpha`.
    pub alpha: f64,
    /// Number of uniform replicates.
    pub bootstrap_b: usize,
    pub rng_seed: u64,
}

impl Default for DipConfig {
    fn default() -> Self {
        Self {
            alpha: 0.05,
            bootstrap_b: 1000,
            rng_seed: 0,
        }
    }
}

impl DipConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.alpha > 0.0 && self.alpha < 1.0) {
            return Err(Error::config(format!(
                "alpha must lie in (0, 1), got {}",
                self.alpha
            )));
        }
        if self.bootstrap_b == 0 {
            return Err(Error::config("bootstrap_b must be at least 1"));
        }
        Ok(())
    }
}

pub(crate) fn validate(values: &[f64]) -> Result<()> {
    if values.is_empty() {
        return Err(Error::input("dip needs at least one observation"));
    }
    if let Some(pos) = values.iter().position(|v| !v.is_finite()) {
        return Err(Error::input(format!(
            "non-finite value {} at position {pos}",
            values[pos]
        )));
    }
    Ok(())
}

/// Dip assigned to degenerate samples (n < 4 or constant).
pub(crate) const DEGENERATE_DIP: f64 = 0.0;

pub(crate) fn is_degenerate(sorted: &[f64]) -> bool {
    sorted.len() < 4 || sorted[0] == sorted[sorted.len() - 1]
}

/// Dip statistic and modal interval of `values` (any order).
pub fn dip_statistic(values: &[f64]) -> Result<DipResult> {
    validate(values)?;
    let mut sorted = values.to_vec();
    sorted.sort_by(f64::total_cmp);
    Ok(dip_sorted(&sorted))
}

/// `sorted` must be ascending and finite.
pub(crate) fn dip_sorted(sorted: &[f64]) -> DipResult {
    let n = sorted.len();
    if is_degenerate(sorted) {
        return DipResult {
            dip: DEGENERATE_DIP,
            p_value: None,
            modal_low: sorted[0],
            modal_high: sorted[n - 1],
            modal_index_low: 0,
            modal_index_high: n - 1,
        };
    }
    let fit = hartigan::fit(sorted);
    DipResult {
        dip: fit.dip,
        p_value: None,
        modal_low: sorted[fit.low],
        modal_high: sorted[fit.high],
        modal_index_low: fit.low,
        modal_index_high: fit.high,
    }
}

/// Dip statistic plus bootstrap p-value.
pub fn dip_test(values: &[f64], cfg: &DipConfig) -> Result<DipResult> {
    cfg.validate()?;
    let mut res = dip_statistic(values)?;
    // Every replicate dip is >= 0, so the degenerate case needs no bootstrap.
    let p = if res.dip == DEGENERATE_DIP {
        1.0
    } else {
        dip_pvalue(res.dip, values.len(), cfg)?
    };
    res.p_value = Some(p);
    Ok(res)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_point_masses() {
        let r = dip_statistic(&[0.0, 0.0, 0.0, 1.0, 1.0, 1.0]).unwrap();
        assert_eq!(r.dip, 0.25);
    }

    #[test]
    fn equally_spaced_is_one_over_2n() {
        for n in [4usize, 7, 20, 101] {
            let xs: Vec<f64> = (1..=n).map(|i| i as f64).collect();
            let r = dip_statistic(&xs).unwrap();
            assert!((r.dip - 1.0 / (2.0 * n as f64)).abs() < 1e-15, "n={n}");
        }
    }

    #[test]
    fn constant_sample_is_degenerate() {
        let r = dip_statistic(&[5.0; 4]).unwrap();
        assert_eq!(r.dip, 0.0);
        assert_eq!((r.modal_low, r.modal_high), (5.0, 5.0));
        let t = dip_test(&[5.0; 4], &DipConfig::default()).unwrap();
        assert_eq!(t.p_value, Some(1.0));
    }

    #[test]
    fn tiny_samples_are_unimodal() {
        let cfg = DipConfig::default();
        let r = dip_test(&[3.0, -1.0], &cfg).unwrap();
        assert_eq!(r.p_value, Some(1.0));
        assert!(r.is_unimodal(cfg.alpha));
        assert_eq!((r.modal_low, r.modal_high), (-1.0, 3.0));
    }

    #[test]
    fn rejects_non_finite() {
        assert!(matches!(
            dip_statistic(&[1.0, f64::NAN, 2.0]),
            Err(Error::InvalidInput(_))
        ));
        assert!(dip_statistic(&[]).is_err());
        assert!(dip_statistic(&[f64::INFINITY]).is_err());
    }

    #[test]
    fn modal_interval_values_come_from_sample() {
        let xs = [0.3, 2.2, 2.1, 2.0, 1.9, 5.0, 5.1, 4.9, 2.05];
        let r = dip_statistic(&xs).unwrap();
        assert!(r.modal_low <= r.modal_high);
        assert!(xs.contains(&r.modal_low) && xs.contains(&r.modal_high));
        let mut sorted = xs.to_vec();
        sorted.sort_by(f64::total_cmp);
        assert_eq!(sorted[r.modal_index_low], r.modal_low);
        assert_eq!(sorted[r.modal_index_high], r.modal_high);
    }

    #[test]
    fn config_validation() {
        let bad = DipConfig {
            bootstrap_b: 0,
            ..DipConfig::default()
        };
        assert!(matches!(bad.validate(), Err(Error::InvalidConfig(_))));
        let bad = DipConfig {
            alpha: 1.0,
            ..DipConfig::default()
        };
        assert!(bad.validate().is_err());
    }
}
