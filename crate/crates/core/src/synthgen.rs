//! Planted-partition attributed graphs with known ground truth.
//!
//! Vertices are laid out block by block. Edges fall inside a block with
//! probability `p_in` and between blocks with `p_out`. Each block is then cut
//! in half by vertex order; the halves are the ground-truth clusters. Relevant
//! attributes are tight Gaussians around a per-(cluster, attribute) mean, so
//! they tell the two halves of a block apart. Irrelevant attributes are wide
//! Gaussians assigned through a shuffled copy of the labels, so they carry no
//! information about the truth.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};

use crate::attributes::AttributeMatrix;
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SyntheticSpec {
    /// Graph block sizes, before bisection. Each must be at least 2.
    pub cluster_sizes: Vec<usize>,
    pub p_in: f64,
    pub p_out: f64,
    pub d: usize,
    pub relevant_ratio: f64,
    pub relevant_mean_range: (f64, f64),
    pub relevant_variance: f64,
    pub irrelevant_mean_range: (f64, f64),
    pub irrelevant_variance: f64,
    /// When set, relevant means of different clusters in the same column are
    /// at least this far apart.
    pub min_mean_separation: Option<f64>,
    pub rng_seed: u64,
}

impl Default for SyntheticSpec {
    fn default() -> Self {
        Self {
            cluster_sizes: vec![500, 500],
            p_in: 0.35,
            p_out: 0.01,
            d: 20,
            relevant_ratio: 0.5,
            relevant_mean_range: (0.0, 10.0),
            relevant_variance: 0.001,
            irrelevant_mean_range: (10.0, 20.0),
            irrelevant_variance: 1.0,
            min_mean_separation: None,
            rng_seed: 0,
        }
    }
}

impl SyntheticSpec {
    pub fn num_vertices(&self) -> usize {
        self.cluster_sizes.iter().sum()
    }

    pub fn num_clusters(&self) -> usize {
        2 * self.cluster_sizes.len()
    }

    /// Indexes of the relevant columns: the first `ceil(relevant_ratio · d)`.
    pub fn relevant_columns(&self) -> std::ops::Range<usize> {
        0..((self.relevant_ratio * self.d as f64).ceil() as usize).min(self.d)
    }

    pub fn validate(&self) -> Result<()> {
        if self.cluster_sizes.is_empty() {
            return Err(Error::input("need at least one cluster"));
        }
        if let Some(s) = self.cluster_sizes.iter().find(|&&s| s < 2) {
            return Err(Error::input(format!("cluster size {s} cannot be bisected")));
        }
        if self.num_vertices() < 4 {
            return Err(Error::input("need at least 4 vertices"));
        }
        if !(0.0 <= self.p_out && self.p_out < self.p_in && self.p_in <= 1.0) {
            return Err(Error::input(format!(
                "need 0 <= p_out < p_in <= 1, got p_out = {}, p_in = {}",
                self.p_out, self.p_in
            )));
        }
        if !(0.0..=1.0).contains(&self.relevant_ratio) {
            return Err(Error::input("relevant_ratio must lie in [0, 1]"));
        }
        if !(self.relevant_variance > 0.0 && self.irrelevant_variance > 0.0)
            || !self.relevant_variance.is_finite()
            || !self.irrelevant_variance.is_finite()
        {
            return Err(Error::input("variances must be positive and finite"));
        }
        for (lo, hi) in [self.relevant_mean_range, self.irrelevant_mean_range] {
            if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
                return Err(Error::input(format!("bad mean range [{lo}, {hi}]")));
            }
        }
        if let Some(sep) = self.min_mean_separation {
            let (lo, hi) = self.relevant_mean_range;
            let k = self.num_clusters();
            if sep.is_nan() || sep < 0.0 || sep * (k - 1) as f64 > hi - lo {
                return Err(Error::input(format!(
                    "{k} means cannot be {sep} apart within [{lo}, {hi}]"
                )));
            }
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SyntheticInstance {
    pub graph: Graph,
    pub x: AttributeMatrix,
    /// Ground-truth cluster per vertex: block `b` yields labels `2b`, `2b + 1`.
    pub truth: Vec<usize>,
}

pub fn generate(spec: &SyntheticSpec) -> Result<SyntheticInstance> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.rng_seed);
    let n = spec.num_vertices();

    let mut starts = Vec::with_capacity(spec.cluster_sizes.len());
    let mut truth = Vec::with_capacity(n);
    for (b, &size) in spec.cluster_sizes.iter().enumerate() {
        starts.push(truth.len());
        let half = size / 2;
        truth.extend((0..size).map(|i| 2 * b + usize::from(i >= half)));
    }

    let edges = planted_edges(
        &spec.cluster_sizes,
        &starts,
        spec.p_in,
        spec.p_out,
        &mut rng,
    );
    let graph = Graph::from_edges(n, &edges)?;

    let k = spec.num_clusters();
    let relevant = spec.relevant_columns();
    let mut shuffled = truth.clone();
    shuffled.shuffle(&mut rng);

    let mut data = vec![0.0; n * spec.d];
    for col in 0..spec.d {
        let is_relevant = relevant.contains(&col);
        let (range, variance, labels) = if is_relevant {
            (spec.relevant_mean_range, spec.relevant_variance, &truth)
        } else {
            (
                spec.irrelevant_mean_range,
                spec.irrelevant_variance,
                &shuffled,
            )
        };
        let separation = if is_relevant {
            spec.min_mean_separation
        } else {
            None
        };
        let means = draw_means(k, range, separation, &mut rng);
        let sd = variance.sqrt();
        let dists: Vec<Normal<f64>> = means
            .iter()
            .map(|&m| Normal::new(m, sd).expect("finite mean and positive sd"))
            .collect();
        for v in 0..n {
            data[v * spec.d + col] = dists[labels[v]].sample(&mut rng);
        }
    }
    let x = AttributeMatrix::from_row_major(n, spec.d, data)?;
    Ok(SyntheticInstance { graph, x, truth })
}

fn planted_edges(
    sizes: &[usize],
    starts: &[usize],
    p_in: f64,
    p_out: f64,
    rng: &mut ChaCha8Rng,
) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for (a, (&sa, &oa)) in sizes.iter().zip(starts).enumerate() {
        for i in 0..sa {
            for j in (i + 1)..sa {
                if rng.random_bool(p_in) {
                    edges.push((oa + i, oa + j));
                }
            }
        }
        for (&sb, &ob) in sizes.iter().zip(starts).skip(a + 1) {
            // Between blocks edges are sparse: jump straight to the next hit.
            let total = sa * sb;
            let mut m = next_hit(rng, p_out, 0);
            while m < total {
                edges.push((oa + m / sb, ob + m % sb));
                m = next_hit(rng, p_out, m + 1);
            }
        }
    }
    edges
}

/// Index of the next success in a Bernoulli(p) sequence starting at `from`.
fn next_hit(rng: &mut ChaCha8Rng, p: f64, from: usize) -> usize {
    if p <= 0.0 {
        return usize::MAX;
    }
    if p >= 1.0 {
        return from;
    }
    let u: f64 = rng.random();
    let skip = ((1.0 - u).ln() / (1.0 - p).ln()).floor();
    if skip >= usize::MAX as f64 {
        usize::MAX
    } else {
        from.saturating_add(skip as usize)
    }
}

fn draw_means(
    k: usize,
    (lo, hi): (f64, f64),
    separation: Option<f64>,
    rng: &mut ChaCha8Rng,
) -> Vec<f64> {
    let draw = |rng: &mut ChaCha8Rng| {
        if hi > lo {
            rng.random_range(lo..=hi)
        } else {
            lo
        }
    };
    let Some(sep) = separation else {
        return (0..k).map(|_| draw(rng)).collect();
    };
    // Sorted uniforms on the range shortened by the gaps, then spread apart:
    // uniform over all placements that respect the separation.
    let slack = hi - lo - sep * (k - 1) as f64;
    let mut means: Vec<f64> = (0..k)
        .map(|_| {
            if slack > 0.0 {
                rng.random_range(0.0..=slack)
            } else {
                0.0
            }
        })
        .collect();
    means.sort_by(f64::total_cmp);
    for (i, m) in means.iter_mut().enumerate() {
        *m += lo + sep * i as f64;
    }
    means.shuffle(rng);
    means
}

/// Default spec with `k` block sizes drawn uniformly from `[low, high]`.
pub fn variable_size_spec(
    low: usize,
    high: usize,
    k: usize,
    rng_seed: u64,
) -> Result<SyntheticSpec> {
    if low < 4 || low > high {
        return Err(Error::input(format!("bad size range [{low}, {high}]")));
    }
    if k == 0 {
        return Err(Error::input("need at least one cluster"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(rng_seed);
    Ok(SyntheticSpec {
        cluster_sizes: (0..k).map(|_| rng.random_range(low..=high)).collect(),
        rng_seed,
        ..SyntheticSpec::default()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn small() -> SyntheticSpec {
        SyntheticSpec {
            cluster_sizes: vec![20, 21],
            d: 4,
            rng_seed: 9,
            ..SyntheticSpec::default()
        }
    }

    #[test]
    fn labels_bisect_blocks() {
        let inst = generate(&small()).unwrap();
        let count = |l| inst.truth.iter().filter(|&&t| t == l).count();
        assert_eq!([count(0), count(1), count(2), count(3)], [10, 10, 10, 11]);
        assert_eq!(inst.truth[0], 0);
        assert_eq!(inst.truth[40], 3);
    }

    #[test]
    fn deterministic() {
        assert_eq!(generate(&small()).unwrap(), generate(&small()).unwrap());
        let other = SyntheticSpec {
            rng_seed: 10,
            ..small()
        };
        assert_ne!(generate(&small()).unwrap().x, generate(&other).unwrap().x);
    }

    #[test]
    fn degenerate_probabilities_give_cliques() {
        let spec = SyntheticSpec {
            p_in: 1.0,
            p_out: 0.0,
            ..small()
        };
        let g = generate(&spec).unwrap().graph;
        assert_eq!(g.num_edges(), 20 * 19 / 2 + 21 * 20 / 2);
        assert!(g.has_edge(0, 19) && !g.has_edge(19, 20));
    }

    #[test]
    fn relevant_columns_round_up() {
        let spec = SyntheticSpec { d: 5, ..small() };
        assert_eq!(spec.relevant_columns(), 0..3);
        let none = SyntheticSpec {
            relevant_ratio: 0.0,
            ..small()
        };
        assert_eq!(none.relevant_columns(), 0..0);
    }

    #[test]
    fn separation_enforced() {
        let spec = SyntheticSpec {
            min_mean_separation: Some(1.0),
            relevant_variance: 1e-12,
            ..small()
        };
        let inst = generate(&spec).unwrap();
        for col in spec.relevant_columns() {
            let mut means: Vec<f64> = (0..4)
                .map(|l| {
                    let v = inst.truth.iter().position(|&t| t == l).unwrap();
                    inst.x.get(v, col)
                })
                .collect();
            means.sort_by(f64::total_cmp);
            assert!(means.windows(2).all(|w| w[1] - w[0] >= 1.0 - 1e-4));
        }
    }

    #[test]
    fn invalid_specs() {
        assert!(generate(&SyntheticSpec {
            p_in: 0.01,
            p_out: 0.01,
            ..small()
        })
        .is_err());
        assert!(generate(&SyntheticSpec {
            cluster_sizes: vec![1, 5],
            ..small()
        })
        .is_err());
        assert!(generate(&SyntheticSpec {
            relevant_variance: 0.0,
            ..small()
        })
        .is_err());
        let crowded = SyntheticSpec {
            cluster_sizes: vec![4; 10],
            min_mean_separation: Some(1.0),
            ..small()
        };
        assert!(generate(&crowded).is_err());
    }

    #[test]
    fn variable_sizes() {
        let spec = variable_size_spec(100, 100, 5, 1).unwrap();
        assert_eq!(spec.cluster_sizes, vec![100; 5]);
        let spec = variable_size_spec(50, 150, 10, 2).unwrap();
        assert!(spec.cluster_sizes.iter().all(|s| (50..=150).contains(s)));
        assert_eq!(spec, variable_size_spec(50, 150, 10, 2).unwrap());
        assert!(variable_size_spec(3, 10, 2, 0).is_err());
        assert!(variable_size_spec(10, 9, 2, 0).is_err());
    }
}
