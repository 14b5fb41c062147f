//! Early-stopped power iteration with the random-walk matrix `W = D⁻¹A`.
//!
//! Run to convergence the iteration would collapse onto the constant
//! eigenvector. Stopped while the iterate is still "accelerating" towards it,
//! the iterate is a blend of the leading non-trivial eigenvectors and its
//! values group by cluster.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PowerIterConfig {
    /// Stop once the largest entry of the acceleration drops to this value.
    pub epsilon_hat: f64,
    pub max_iter: usize,
    pub rng_seed: u64,
}

impl Default for PowerIterConfig {
    fn default() -> Self {
        Self {
            epsilon_hat: 0.001,
            max_iter: 1000,
            rng_seed: 0,
        }
    }
}

impl PowerIterConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.epsilon_hat > 0.0 && self.epsilon_hat.is_finite()) {
            return Err(Error::config(format!(
                "epsilon_hat must be positive, got {}",
                self.epsilon_hat
            )));
        }
        if self.max_iter == 0 {
            return Err(Error::config("max_iter must be at least 1"));
        }
        Ok(())
    }
}

/// The iterate at the stopping point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EmbeddingVector {
    pub values: Vec<f64>,
    pub iterations: usize,
}

/// `out = W v`. An isolated vertex transitions to itself, so it keeps its
/// value.
pub fn transition_apply(graph: &Graph, v: &[f64]) -> Result<Vec<f64>> {
    if v.len() != graph.num_vertices() {
        return Err(Error::input(format!(
            "vector has length {}, graph has {} vertices",
            v.len(),
            graph.num_vertices()
        )));
    }
    let mut out = vec![0.0; v.len()];
    apply_into(graph, v, &mut out);
    Ok(out)
}

fn apply_into(graph: &Graph, v: &[f64], out: &mut [f64]) {
    for (i, o) in out.iter_mut().enumerate() {
        let nb = graph.neighbors(i);
        *o = if nb.is_empty() {
            v[i]
        } else {
            nb.iter().map(|&j| v[j as usize]).sum::<f64>() / nb.len() as f64
        };
    }
}

fn l1_normalize(v: &mut [f64]) {
    let norm: f64 = v.iter().map(|x| x.abs()).sum();
    if norm > 0.0 {
        v.iter_mut().for_each(|x| *x /= norm);
    }
}

/// Power iteration from a standard-normal start drawn with `cfg.rng_seed`.
pub fn power_iteration(graph: &Graph, cfg: &PowerIterConfig) -> Result<EmbeddingVector> {
    let n = graph.num_vertices();
    if n == 0 {
        return Err(Error::input("graph has no vertices"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.rng_seed);
    let start: Vec<f64> = (0..n).map(|_| StandardNormal.sample(&mut rng)).collect();
    power_iteration_from(graph, start, cfg)
}

/// Power iteration from a caller-supplied start vector.
///
/// The start is scaled to unit L1 norm so that the first velocity measures a
/// change of direction rather than of scale. The acceleration needs two
/// velocities, so at least two steps are taken unless `max_iter` is 1.
pub fn power_iteration_from(
    graph: &Graph,
    v: Vec<f64>,
    cfg: &PowerIterConfig,
) -> Result<EmbeddingVector> {
    power_iteration_observed(graph, v, cfg, |_, _| {})
}

/// Like [`power_iteration_from`], calling `observe(t, v)` on the normalised
/// start (`t = 0`) and on every iterate after it.
pub fn power_iteration_observed(
    graph: &Graph,
    mut v: Vec<f64>,
    cfg: &PowerIterConfig,
    mut observe: impl FnMut(usize, &[f64]),
) -> Result<EmbeddingVector> {
    cfg.validate()?;
    let n = graph.num_vertices();
    if n == 0 {
        return Err(Error::input("graph has no vertices"));
    }
    if v.len() != n {
        return Err(Error::input(format!(
            "start vector has length {}, graph has {n} vertices",
            v.len()
        )));
    }
    if v.iter().any(|x| !x.is_finite()) {
        return Err(Error::input("start vector must be finite"));
    }
    l1_normalize(&mut v);
    observe(0, &v);

    let mut next = vec![0.0; n];
    let mut velocity = vec![0.0; n];
    let mut t = 0;
    loop {
        apply_into(graph, &v, &mut next);
        l1_normalize(&mut next);
        let mut accel = 0.0f64;
        for i in 0..n {
            let d = (next[i] - v[i]).abs();
            accel = accel.max((d - velocity[i]).abs());
            velocity[i] = d;
        }
        std::mem::swap(&mut v, &mut next);
        t += 1;
        observe(t, &v);
        if (t >= 2 && accel <= cfg.epsilon_hat) || t >= cfg.max_iter {
            break;
        }
    }
    Ok(EmbeddingVector {
        values: v,
        iterations: t,
    })
}
