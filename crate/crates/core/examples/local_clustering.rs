//! Recursive dipping on one attribute: two Gaussian clusters and a uniform
//! one, with the seed in the leftmost Gaussian. Prints every shrink step.
//!
//!     cargo run --release --example local_clustering

use loclu::localclust::local_clustering_traced;
use loclu::{f1, AttributeMatrix, CandidateSet, DipConfig};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

fn main() -> loclu::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let left = Normal::new(0.0, 0.6).unwrap();
    let middle = Normal::new(6.0, 0.6).unwrap();
    let mut xs: Vec<f64> = (0..150).map(|_| left.sample(&mut rng)).collect();
    xs.extend((0..150).map(|_| middle.sample(&mut rng)));
    xs.extend((0..400).map(|_| rng.random_range(12.0..20.0)));
    let x = AttributeMatrix::from_rows(xs.iter().map(|&v| vec![v]).collect())?;

    let seed = 17;
    let candidates = CandidateSet::full(xs.len(), seed)?;
    let (found, steps) = local_clustering_traced(&candidates, &x, 0, &DipConfig::default())?;
    for (i, s) in steps.iter().enumerate() {
        println!(
            "step {i}: {:>3} vertices, dip {:.4}, p {:.3}, modal [{:.2}, {:.2}], kept {:?}",
            s.size, s.dip, s.p_value, s.modal_low, s.modal_high, s.branch
        );
    }
    let truth: Vec<usize> = (0..150).collect();
    println!(
        "found {} vertices, F1 vs seed cluster {:.3}",
        found.len(),
        f1(found.members(), &truth)?
    );
    Ok(())
}
