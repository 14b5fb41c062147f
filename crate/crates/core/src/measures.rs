//! Cluster quality (GU, AU, compactness) and accuracy metrics (NMI, F1).
//!
//! GU and AU are mean dips of the embedding columns and of the designated
//! attribute columns over a cluster; lower means more unimodal. NMI and F1
//! compare a detected cluster with a ground-truth cluster, both taken as
//! binary memberships over all `n` vertices.

use std::collections::HashSet;

use crate::attributes::AttributeMatrix;
use crate::dip::dip_statistic;
use crate::error::{Error, Result};

/// Graph unimodality: mean dip of each embedding column restricted to
/// `members`.
pub fn graph_unimodality(embedding: &[Vec<f64>], members: &[usize]) -> Result<f64> {
    if members.is_empty() {
        return Err(Error::input("cluster is empty"));
    }
    if embedding.is_empty() {
        return Err(Error::input("embedding has no columns"));
    }
    let n = embedding[0].len();
    if embedding.iter().any(|c| c.len() != n) {
        return Err(Error::input("embedding columns differ in length"));
    }
    if let Some(&m) = members.iter().find(|&&m| m >= n) {
        return Err(Error::input(format!("member {m} out of range")));
    }
    let mut total = 0.0;
    for col in embedding {
        let values: Vec<f64> = members.iter().map(|&m| col[m]).collect();
        total += dip_statistic(&values)?.dip;
    }
    Ok(total / embedding.len() as f64)
}

/// Attribute unimodality: mean dip of the designated columns restricted to
/// `members`.
pub fn attribute_unimodality(
    x: &AttributeMatrix,
    members: &[usize],
    designated: &[usize],
) -> Result<f64> {
    if members.is_empty() {
        return Err(Error::input("cluster is empty"));
    }
    if designated.is_empty() {
        return Err(Error::input(
            "attribute unimodality needs at least one designated attribute",
        ));
    }
    if let Some(&a) = designated.iter().find(|&&a| a >= x.num_cols()) {
        return Err(Error::input(format!("attribute {a} out of range")));
    }
    if let Some(&m) = members.iter().find(|&&m| m >= x.num_rows()) {
        return Err(Error::input(format!("member {m} out of range")));
    }
    let mut total = 0.0;
    for &a in designated {
        total += dip_statistic(&x.column_at(a, members))?.dip;
    }
    Ok(total / designated.len() as f64)
}

pub fn compactness(gu: f64, au: f64) -> f64 {
    gu + au
}

fn membership(set: &[usize], n: usize) -> Result<Vec<bool>> {
    let mut mask = vec![false; n];
    for &v in set {
        if v >= n {
            return Err(Error::input(format!("vertex {v} out of range for n = {n}")));
        }
        mask[v] = true;
    }
    Ok(mask)
}

fn entropy(counts: &[f64], n: f64) -> f64 {
    counts
        .iter()
        .filter(|&&c| c > 0.0)
        .map(|&c| {
            let p = c / n;
            -p * p.ln()
        })
        .sum()
}

/// Normalised mutual information `2 I(C*; C) / (H(C*) + H(C))` between the
/// membership labelings of `detected` and `truth` over `n` vertices.
///
/// Identical labelings score 1. If either labeling is constant (empty or
/// full set) and they differ, the score is 0.
pub fn nmi(detected: &[usize], truth: &[usize], n: usize) -> Result<f64> {
    if n == 0 {
        return Err(Error::input("n must be positive"));
    }
    let a = membership(detected, n)?;
    let b = membership(truth, n)?;
    if a == b {
        return Ok(1.0);
    }
    // table[i][j]: vertices with detected == i and truth == j.
    let mut table = [[0.0f64; 2]; 2];
    for (&x, &y) in a.iter().zip(&b) {
        table[usize::from(x)][usize::from(y)] += 1.0;
    }
    let nf = n as f64;
    let rows = [table[0][0] + table[0][1], table[1][0] + table[1][1]];
    let cols = [table[0][0] + table[1][0], table[0][1] + table[1][1]];
    let h_detected = entropy(&rows, nf);
    let h_truth = entropy(&cols, nf);
    if h_detected == 0.0 || h_truth == 0.0 {
        return Ok(0.0);
    }
    let mut mi = 0.0;
    for i in 0..2 {
        for j in 0..2 {
            let c = table[i][j];
            if c > 0.0 {
                mi += c / nf * (c * nf / (rows[i] * cols[j])).ln();
            }
        }
    }
    Ok((2.0 * mi / (h_detected + h_truth)).clamp(0.0, 1.0))
}

/// Harmonic mean of precision `|C ∩ C*| / |C|` and recall `|C ∩ C*| / |C*|`.
pub fn f1(detected: &[usize], truth: &[usize]) -> Result<f64> {
    let detected: HashSet<usize> = detected.iter().copied().collect();
    let truth: HashSet<usize> = truth.iter().copied().collect();
    if detected.is_empty() || truth.is_empty() {
        return Err(Error::input("F1 needs non-empty detected and truth sets"));
    }
    let hits = detected.intersection(&truth).count() as f64;
    if hits == 0.0 {
        return Ok(0.0);
    }
    let precision = hits / detected.len() as f64;
    let recall = hits / truth.len() as f64;
    Ok(2.0 * precision * recall / (precision + recall))
}

/// Vertices sharing the label of `vertex`.
pub fn cluster_of(labels: &[usize], vertex: usize) -> Vec<usize> {
    let target = labels[vertex];
    (0..labels.len()).filter(|&i| labels[i] == target).collect()
}

/// Best F1 and best NMI of `detected` against every ground-truth cluster.
pub fn best_match(detected: &[usize], labels: &[usize]) -> Result<(f64, f64)> {
    let mut distinct: Vec<usize> = labels.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    let mut best = (0.0f64, 0.0f64);
    for label in distinct {
        let truth: Vec<usize> = (0..labels.len()).filter(|&i| labels[i] == label).collect();
        best.0 = best.0.max(f1(detected, &truth)?);
        best.1 = best.1.max(nmi(detected, &truth, labels.len())?);
    }
    Ok(best)
}
