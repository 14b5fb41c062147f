//! Dense eigenvector of the random-walk Laplacian, for small graphs.
//!
//! `W = D⁻¹A` is similar to the symmetric `S = D^{-1/2} A D^{-1/2}`; if
//! `S u = λ u` then `W (D^{-1/2} u) = λ D^{-1/2} u`. We diagonalise `S` with
//! cyclic Jacobi rotations and map back. The second largest eigenvalue of `W`
//! is the second smallest of `L = I − W`.

use super::Graph;
use crate::error::{Error, Result};

/// Size limit for [`exact_second_eigenvector`]; the solver is cubic per sweep.
pub const MAX_EXACT_VERTICES: usize = 2000;

/// Eigenvector of `L = I − W` for its second smallest eigenvalue, scaled to
/// unit Euclidean norm with its first non-zero entry positive.
///
/// Isolated vertices are treated as carrying a self-loop, matching
/// [`super::transition_apply`].
pub fn exact_second_eigenvector(graph: &Graph) -> Result<Vec<f64>> {
    let n = graph.num_vertices();
    if n > MAX_EXACT_VERTICES {
        return Err(Error::input(format!(
            "exact eigenvector limited to {MAX_EXACT_VERTICES} vertices, got {n}"
        )));
    }
    if n < 2 {
        return Err(Error::input("need at least two vertices"));
    }

    let inv_sqrt_deg: Vec<f64> = (0..n)
        .map(|v| 1.0 / (graph.degree(v).max(1) as f64).sqrt())
        .collect();
    let mut s = vec![0.0; n * n];
    for v in 0..n {
        if graph.degree(v) == 0 {
            s[v * n + v] = 1.0;
        }
        for &u in graph.neighbors(v) {
            let u = u as usize;
            s[v * n + u] = inv_sqrt_deg[v] * inv_sqrt_deg[u];
        }
    }

    let (eigenvalues, eigenvectors) = jacobi_eigen(s, n);
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| eigenvalues[b].total_cmp(&eigenvalues[a]));
    let col = order[1];

    let mut e: Vec<f64> = (0..n)
        .map(|i| eigenvectors[i * n + col] * inv_sqrt_deg[i])
        .collect();
    let norm = e.iter().map(|x| x * x).sum::<f64>().sqrt();
    let sign = e
        .iter()
        .find(|x| x.abs() > 1e-12)
        .map_or(1.0, |x| x.signum());
    e.iter_mut().for_each(|x| *x *= sign / norm);
    Ok(e)
}

/// Eigen-decomposition of a dense symmetric row-major matrix. Returns the
/// eigenvalues and a row-major matrix whose columns are the eigenvectors.
fn jacobi_eigen(mut a: Vec<f64>, n: usize) -> (Vec<f64>, Vec<f64>) {
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let scale: f64 = a
        .iter()
        .map(|x| x * x)
        .sum::<f64>()
        .sqrt()
        .max(f64::MIN_POSITIVE);

    for _sweep in 0..100 {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i * n + j] * a[i * n + j])
            .sum::<f64>()
            .sqrt();
        if off <= 1e-15 * scale {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p * n + q];
                if apq.abs() <= 1e-300 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let theta = (aqq - app) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let t = if theta == 0.0 { 1.0 } else { t };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;

                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    ((0..n).map(|i| a[i * n + i]).collect(), v)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        let mut e = Vec::new();
        for i in 0..n {
            for j in (i + 1)..n {
                e.push((i, j));
            }
        }
        Graph::from_edges(n, &e).unwrap()
    }

    #[test]
    fn jacobi_diagonalises() {
        let m = vec![2.0, 1.0, 0.0, 1.0, 2.0, 1.0, 0.0, 1.0, 2.0];
        let (mut vals, _) = jacobi_eigen(m, 3);
        vals.sort_by(f64::total_cmp);
        let r2 = 2.0f64.sqrt();
        for (got, want) in vals.iter().zip([2.0 - r2, 2.0, 2.0 + r2]) {
            assert!((got - want).abs() < 1e-12);
        }
    }

    #[test]
    fn k4_orthogonal_to_constant_in_degree_metric() {
        let g = complete(4);
        let e = exact_second_eigenvector(&g).unwrap();
        let dot: f64 = (0..4).map(|i| g.degree(i) as f64 * e[i]).sum();
        assert!(dot.abs() < 1e-12);
    }

    #[test]
    fn p3_is_monotone() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let e = exact_second_eigenvector(&g).unwrap();
        assert!(e[0] > e[1] && e[1] > e[2] || e[0] < e[1] && e[1] < e[2]);
    }

    #[test]
    fn refuses_oversize() {
        let g = Graph::from_edges(MAX_EXACT_VERTICES + 1, &[]).unwrap();
        assert!(exact_second_eigenvector(&g).is_err());
    }
}
