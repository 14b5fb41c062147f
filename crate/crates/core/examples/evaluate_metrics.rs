//! Cluster quality (GU, AU, compactness) and accuracy (F1, NMI) of a few
//! candidate clusters on a small planted-partition graph.
//!
//!     cargo run --release --example evaluate_metrics

use loclu::{
    attribute_unimodality, compactness, f1, generate, graph_unimodality, nmi, power_iteration,
    PowerIterConfig, SyntheticSpec,
};

fn main() -> loclu::Result<()> {
    let inst = generate(&SyntheticSpec {
        cluster_sizes: vec![100, 100],
        d: 4,
        min_mean_separation: Some(1.0),
        rng_seed: 3,
        ..SyntheticSpec::default()
    })?;
    let n = inst.graph.num_vertices();
    let emb = power_iteration(&inst.graph, &PowerIterConfig::default())?;
    let embedding = std::slice::from_ref(&emb.values);
    let truth: Vec<usize> = (0..n).filter(|&v| inst.truth[v] == 0).collect();

    let candidates: [(&str, Vec<usize>); 3] = [
        ("truth cluster", truth.clone()),
        ("whole graph block", (0..100).collect()),
        ("everything", (0..n).collect()),
    ];
    println!(
        "{:<18} {:>6} {:>6} {:>8} {:>6} {:>6}",
        "candidate", "GU", "AU", "compact", "F1", "NMI"
    );
    for (name, c) in &candidates {
        let gu = graph_unimodality(embedding, c)?;
        let au = attribute_unimodality(&inst.x, c, &[0, 1])?;
        println!(
            "{name:<18} {gu:>6.3} {au:>6.3} {:>8.3} {:>6.3} {:>6.3}",
            compactness(gu, au),
            f1(c, &truth)?,
            nmi(c, &truth, n)?
        );
    }
    Ok(())
}
