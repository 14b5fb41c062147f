//! Early-stopped power iteration on two cliques joined by a single edge. The
//! embedding puts each clique in its own tight group of values.
//!
//!     cargo run --release --example power_embedding

use loclu::{exact_second_eigenvector, power_iteration, Graph, PowerIterConfig};

fn main() -> loclu::Result<()> {
    let m = 8;
    let mut edges = Vec::new();
    for base in [0, m] {
        for i in 0..m {
            for j in (i + 1)..m {
                edges.push((base + i, base + j));
            }
        }
    }
    edges.push((m - 1, m));
    let g = Graph::from_edges(2 * m, &edges)?;

    let e = power_iteration(&g, &PowerIterConfig::default())?;
    let exact = exact_second_eigenvector(&g)?;
    println!("stopped after {} iterations", e.iterations);
    println!("vertex  embedding     second eigenvector");
    for (v, (a, b)) in e.values.iter().zip(&exact).enumerate() {
        println!("{v:>6}  {a:+.6e}  {b:+.4}");
    }
    Ok(())
}
