//! Monte Carlo p-value of a dip against the uniform null.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{dip_sorted, DipConfig};
use crate::error::{Error, Result};

/// Fraction of `cfg.bootstrap_b` uniform(0,1) samples of size `n` whose dip is
/// at least `dip`.
///
/// Replicate `q` draws from its own ChaCha stream keyed by `(rng_seed, q)`, so
/// the result does not depend on how rayon schedules the replicates.
pub fn dip_pvalue(dip: f64, n: usize, cfg: &DipConfig) -> Result<f64> {
    cfg.validate()?;
    if n == 0 {
        return Err(Error::input("sample size must be at least 1"));
    }
    if !dip.is_finite() {
        return Err(Error::input(format!("dip must be finite, got {dip}")));
    }
    let hits: usize = (0..cfg.bootstrap_b)
        .into_par_iter()
        .map_init(
            || vec![0.0f64; n],
            |buf, q| usize::from(replicate_dip(cfg.rng_seed, q as u64, buf) >= dip),
        )
        .sum();
    Ok(hits as f64 / cfg.bootstrap_b as f64)
}

fn replicate_dip(seed: u64, replicate: u64, buf: &mut [f64]) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(replicate);
    for v in buf.iter_mut() {
        *v = rng.random::<f64>();
    }
    buf.sort_unstable_by(f64::total_cmp);
    dip_sorted(buf).dip
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_dip_has_p_one() {
        let cfg = DipConfig {
            bootstrap_b: 50,
            ..DipConfig::default()
        };
        assert_eq!(dip_pvalue(0.0, 30, &cfg).unwrap(), 1.0);
    }

    #[test]
    fn huge_dip_has_p_zero() {
        let cfg = DipConfig {
            bootstrap_b: 50,
            ..DipConfig::default()
        };
        assert_eq!(dip_pvalue(0.3, 30, &cfg).unwrap(), 0.0);
    }

    #[test]
    fn deterministic_for_seed() {
        let cfg = DipConfig {
            bootstrap_b: 200,
            rng_seed: 42,
            ..DipConfig::default()
        };
        let a = dip_pvalue(0.04, 100, &cfg).unwrap();
        let b = dip_pvalue(0.04, 100, &cfg).unwrap();
        assert_eq!(a.to_bits(), b.to_bits());
    }

    #[test]
    fn same_under_any_thread_count() {
        let cfg = DipConfig {
            bootstrap_b: 300,
            rng_seed: 7,
            ..DipConfig::default()
        };
        let serial = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .unwrap()
            .install(|| dip_pvalue(0.035, 120, &cfg).unwrap());
        let parallel = rayon::ThreadPoolBuilder::new()
            .num_threads(4)
            .build()
            .unwrap()
            .install(|| dip_pvalue(0.035, 120, &cfg).unwrap());
        assert_eq!(serial.to_bits(), parallel.to_bits());
    }

    #[test]
    fn rejects_empty_bootstrap() {
        let cfg = DipConfig {
            bootstrap_b: 0,
            ..DipConfig::default()
        };
        assert!(matches!(
            dip_pvalue(0.1, 10, &cfg),
            Err(Error::InvalidConfig(_))
        ));
    }
}
