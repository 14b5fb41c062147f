//! Writes a planted-partition instance in the formats the `loclu` binary
//! reads, then loads it back.
//!
//!     cargo run --release --example generate_benchmark -- [out_dir]

use std::path::PathBuf;

use loclu::{generate, io, variable_size_spec};

fn main() -> loclu::Result<()> {
    let dir = std::env::args()
        .nth(1)
        .map_or_else(|| std::env::temp_dir().join("loclu-bench"), PathBuf::from);
    std::fs::create_dir_all(&dir).map_err(|source| loclu::Error::Io {
        path: dir.display().to_string(),
        source,
    })?;

    let mut spec = variable_size_spec(100, 300, 4, 11)?;
    spec.min_mean_separation = Some(1.0);
    let inst = generate(&spec)?;
    println!("block sizes {:?}", spec.cluster_sizes);
    println!(
        "{} vertices, {} edges, {} attributes",
        inst.graph.num_vertices(),
        inst.graph.num_edges(),
        inst.x.num_cols()
    );

    let (g, a, l) = (
        dir.join("graph.txt"),
        dir.join("attrs.csv"),
        dir.join("labels.txt"),
    );
    io::write_graph(&g, &inst.graph)?;
    io::write_attributes(&a, &inst.x)?;
    io::write_ids(&l, &inst.truth)?;

    let (back, _) = io::load_graph(&g)?;
    let attrs = io::load_attributes(&a, Some(back.num_vertices()))?;
    assert_eq!(back, inst.graph);
    assert_eq!(attrs.matrix, inst.x);
    println!("wrote and re-read {}", dir.display());
    println!(
        "try: loclu cluster --graph {} --attrs {} --labels {} --seed-vertex 0 --designated auto",
        g.display(),
        a.display(),
        l.display()
    );
    Ok(())
}
