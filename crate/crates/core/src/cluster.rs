//! The full LOCLU pipeline.
//!
//! The graph is reduced to one extra attribute column, the early-stopped
//! power-iteration embedding. Designated columns and the embedding are ranked
//! by their dip over the whole graph, most multimodal first, and the
//! candidate set is narrowed by [`crate::local_clustering`] on each column in turn.
//! Narrowing on a later column can break unimodality in an earlier one, so
//! the sweep repeats until a full pass changes nothing. The result is then
//! unimodal in every swept column.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::attributes::AttributeMatrix;
use crate::dip::{dip_statistic, dip_test, DipConfig};
use crate::error::{Error, Result};
use crate::graph::{power_iteration, EmbeddingVector, Graph, PowerIterConfig};
use crate::localclust::{local_clustering_traced, CandidateSet};
use crate::measures::{attribute_unimodality, compactness, graph_unimodality};

/// The user's query: a seed vertex and the attributes the cluster must be
/// unimodal in.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Preference {
    pub seed: usize,
    pub designated: Vec<usize>,
}

impl Preference {
    pub fn new(seed: usize, designated: Vec<usize>) -> Self {
        Self { seed, designated }
    }

    fn validate(&self, n: usize, d: usize) -> Result<()> {
        if self.seed >= n {
            return Err(Error::input(format!(
                "seed {} out of range for {n} vertices",
                self.seed
            )));
        }
        let mut seen = vec![false; d];
        for &a in &self.designated {
            if a >= d {
                return Err(Error::input(format!(
                    "designated attribute {a} out of range ({d} attributes)"
                )));
            }
            if std::mem::replace(&mut seen[a], true) {
                return Err(Error::input(format!("attribute {a} designated twice")));
            }
        }
        Ok(())
    }
}

/// Dip of one swept column. `attribute` is `None` for the embedding.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ColumnDip {
    pub attribute: Option<usize>,
    pub dip: f64,
    /// `None` where only the statistic was computed.
    pub p_value: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ClusterResult {
    /// Ascending vertex ids; always contains the seed.
    pub members: Vec<usize>,
    pub gu: f64,
    /// Zero when no attribute is designated.
    pub au: f64,
    pub compactness: f64,
    pub embedding: EmbeddingVector,
    /// Sweep order with each column's dip over the whole graph.
    pub sweep_order: Vec<ColumnDip>,
    /// Dip test of each swept column restricted to `members`, in sweep order.
    pub per_attribute_dips: Vec<ColumnDip>,
    /// Full passes over the columns, including the final unchanged one.
    pub passes: usize,
}

pub fn run_loclu(
    graph: &Graph,
    x: &AttributeMatrix,
    pref: &Preference,
    picfg: &PowerIterConfig,
    dipcfg: &DipConfig,
) -> Result<ClusterResult> {
    let n = graph.num_vertices();
    if n == 0 {
        return Err(Error::input("graph has no vertices"));
    }
    if x.num_rows() != n {
        return Err(Error::input(format!(
            "graph has {n} vertices but attribute matrix has {} rows",
            x.num_rows()
        )));
    }
    pref.validate(n, x.num_cols())?;
    picfg.validate()?;
    dipcfg.validate()?;

    let embedding = power_iteration(graph, picfg)?;
    let augmented = x.with_column(&embedding.values)?;
    let emb_col = x.num_cols();

    let mut columns: Vec<usize> = pref.designated.clone();
    columns.push(emb_col);
    let whole: Vec<f64> = columns
        .par_iter()
        .map(|&c| dip_statistic(&augmented.column(c)).map(|r| r.dip))
        .collect::<Result<_>>()?;
    // Highest dip first; ties by attribute index, embedding last.
    let mut order: Vec<usize> = (0..columns.len()).collect();
    order.sort_by(|&a, &b| {
        whole[b]
            .total_cmp(&whole[a])
            .then_with(|| columns[a].cmp(&columns[b]))
    });
    let label = |c: usize| (c != emb_col).then_some(c);
    let sweep_order: Vec<ColumnDip> = order
        .iter()
        .map(|&i| ColumnDip {
            attribute: label(columns[i]),
            dip: whole[i],
            p_value: None,
        })
        .collect();

    let mut candidates = CandidateSet::full(n, pref.seed)?;
    let mut passes = 0;
    let per_attribute_dips = loop {
        passes += 1;
        let before = candidates.len();
        let mut finals = Vec::with_capacity(order.len());
        for &i in &order {
            let (next, steps) =
                local_clustering_traced(&candidates, &augmented, columns[i], dipcfg)?;
            let last = steps.last().expect("at least one dip evaluation");
            finals.push(ColumnDip {
                attribute: label(columns[i]),
                dip: last.dip,
                p_value: Some(last.p_value),
            });
            candidates = next;
        }
        if candidates.len() == before {
            // Sets only shrink, so equal size means nothing changed, and the
            // last evaluation of every column was on the final set.
            break finals;
        }
    };

    let members = candidates.into_members();
    let gu = graph_unimodality(std::slice::from_ref(&embedding.values), &members)?;
    let au = if pref.designated.is_empty() {
        0.0
    } else {
        attribute_unimodality(x, &members, &pref.designated)?
    };
    Ok(ClusterResult {
        members,
        gu,
        au,
        compactness: compactness(gu, au),
        embedding,
        sweep_order,
        per_attribute_dips,
        passes,
    })
}

/// Re-tests every designated column and the embedding on `result.members`.
/// True iff all are judged unimodal. Any inconsistency between the result
/// and the inputs counts as false.
pub fn verify_unimodality(
    result: &ClusterResult,
    x: &AttributeMatrix,
    pref: &Preference,
    dipcfg: &DipConfig,
) -> bool {
    let n = x.num_rows();
    if result.members.is_empty()
        || result.embedding.values.len() != n
        || result.members.iter().any(|&m| m >= n)
        || pref.designated.iter().any(|&a| a >= x.num_cols())
    {
        return false;
    }
    let mut columns: Vec<Vec<f64>> = pref
        .designated
        .iter()
        .map(|&a| x.column_at(a, &result.members))
        .collect();
    columns.push(
        result
            .members
            .iter()
            .map(|&m| result.embedding.values[m])
            .collect(),
    );
    columns
        .iter()
        .all(|values| dip_test(values, dipcfg).is_ok_and(|r| r.is_unimodal(dipcfg.alpha)))
}

/// The attribute with the largest dip over all vertices; ties go to the
/// lowest index. `None` when there are no attributes.
pub fn most_multimodal_attribute(x: &AttributeMatrix) -> Result<Option<usize>> {
    let dips: Vec<f64> = (0..x.num_cols())
        .into_par_iter()
        .map(|c| dip_statistic(&x.column(c)).map(|r| r.dip))
        .collect::<Result<_>>()?;
    Ok((0..dips.len()).reduce(|best, c| if dips[c] > dips[best] { c } else { best }))
}
