//! Undirected, unweighted graphs and the random-walk embedding.

mod power;
mod spectral;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use power::{
    power_iteration, power_iteration_from, power_iteration_observed, transition_apply,
    EmbeddingVector, PowerIterConfig,
};
pub use spectral::{exact_second_eigenvector, MAX_EXACT_VERTICES};

/// Simple undirected graph in compressed sparse row form.
///
/// Neighbour lists are sorted and free of self-loops and duplicates.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Graph {
    offsets: Vec<usize>,
    neighbors: Vec<u32>,
}

/// What [`Graph::from_edges_with_report`] had to clean up.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BuildReport {
    pub self_loops_dropped: usize,
    pub duplicates_merged: usize,
}

impl Graph {
    /// Builds a graph on `n` vertices. Edge direction is ignored; self-loops
    /// and repeated edges are dropped.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        Self::from_edges_with_report(n, edges).map(|(g, _)| g)
    }

    pub fn from_edges_with_report(
        n: usize,
        edges: &[(usize, usize)],
    ) -> Result<(Self, BuildReport)> {
        if n > u32::MAX as usize {
            return Err(Error::input(format!("too many vertices: {n}")));
        }
        let mut report = BuildReport::default();
        let mut pairs: Vec<(u32, u32)> = Vec::with_capacity(edges.len());
        for &(a, b) in edges {
            if a >= n || b >= n {
                return Err(Error::input(format!(
                    "edge ({a}, {b}) references a vertex >= n = {n}"
                )));
            }
            if a == b {
                report.self_loops_dropped += 1;
                continue;
            }
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            pairs.push((lo as u32, hi as u32));
        }
        pairs.sort_unstable();
        let before = pairs.len();
        pairs.dedup();
        report.duplicates_merged = before - pairs.len();

        let mut degree = vec![0usize; n];
        for &(a, b) in &pairs {
            degree[a as usize] += 1;
            degree[b as usize] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        offsets.push(0);
        for d in &degree {
            offsets.push(offsets.last().unwrap() + d);
        }
        let mut fill = offsets[..n].to_vec();
        let mut neighbors = vec![0u32; offsets[n]];
        for &(a, b) in &pairs {
            neighbors[fill[a as usize]] = b;
            fill[a as usize] += 1;
            neighbors[fill[b as usize]] = a;
            fill[b as usize] += 1;
        }
        for v in 0..n {
            neighbors[offsets[v]..offsets[v + 1]].sort_unstable();
        }
        Ok((Self { offsets, neighbors }, report))
    }

    pub fn num_vertices(&self) -> usize {
        self.offsets.len() - 1
    }

    pub fn num_edges(&self) -> usize {
        self.neighbors.len() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.offsets[v + 1] - self.offsets[v]
    }

    pub fn neighbors(&self, v: usize) -> &[u32] {
        &self.neighbors[self.offsets[v]..self.offsets[v + 1]]
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.neighbors(a).binary_search(&(b as u32)).is_ok()
    }

    /// Each undirected edge once, as `(low, high)` in ascending order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.num_vertices()).flat_map(move |v| {
            self.neighbors(v)
                .iter()
                .map(move |&u| (v, u as usize))
                .filter(|&(v, u)| v < u)
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cleans_input() {
        let (g, report) =
            Graph::from_edges_with_report(4, &[(0, 1), (1, 0), (2, 2), (1, 2), (0, 1)]).unwrap();
        assert_eq!(g.num_edges(), 2);
        assert_eq!(report.self_loops_dropped, 1);
        assert_eq!(report.duplicates_merged, 2);
        assert_eq!(g.degree(1), 2);
        assert_eq!(g.degree(3), 0);
        assert!(g.has_edge(2, 1));
        assert!(!g.has_edge(0, 2));
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn rejects_out_of_range() {
        assert!(matches!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(Error::InvalidInput(_))
        ));
    }

    #[test]
    fn adjacency_is_symmetric() {
        let g = Graph::from_edges(5, &[(0, 4), (3, 1), (2, 4), (0, 3)]).unwrap();
        for v in 0..5 {
            for &u in g.neighbors(v) {
                assert!(g.has_edge(u as usize, v));
            }
            assert_eq!(g.degree(v), g.neighbors(v).len());
        }
    }
}
