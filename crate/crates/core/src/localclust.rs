//! Recursive dipping over one attribute around a seed vertex.
//!
//! While the attribute restricted to the candidate set is multimodal, keep
//! only the part that holds the seed: everything strictly left of the modal
//! interval, everything strictly right of it, or the interval itself
//! (inclusive). The unimodality check runs before each restriction, so a set
//! that already tests unimodal comes back untouched.

use serde::{Deserialize, Serialize};

use crate::attributes::AttributeMatrix;
use crate::dip::{dip_test, DipConfig};
use crate::error::{Error, Result};

/// Candidate vertices (ascending, distinct) and the seed they must contain.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CandidateSet {
    members: Vec<usize>,
    seed: usize,
}

impl CandidateSet {
    pub fn new(mut members: Vec<usize>, seed: usize) -> Result<Self> {
        members.sort_unstable();
        members.dedup();
        if members.binary_search(&seed).is_err() {
            return Err(Error::input(format!("seed {seed} is not a candidate")));
        }
        Ok(Self { members, seed })
    }

    /// All of `0..n`.
    pub fn full(n: usize, seed: usize) -> Result<Self> {
        if seed >= n {
            return Err(Error::input(format!(
                "seed {seed} out of range for {n} vertices"
            )));
        }
        Ok(Self {
            members: (0..n).collect(),
            seed,
        })
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn seed(&self) -> usize {
        self.seed
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn into_members(self) -> Vec<usize> {
        self.members
    }
}

/// Which part of the candidate set a shrink step kept.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Branch {
    LeftOfInterval,
    RightOfInterval,
    ModalInterval,
}

/// One dip evaluation of the loop.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ShrinkStep {
    pub size: usize,
    pub dip: f64,
    pub p_value: f64,
    pub modal_low: f64,
    pub modal_high: f64,
    /// `None` on the terminating evaluation.
    pub branch: Option<Branch>,
}

pub fn local_clustering(
    candidates: &CandidateSet,
    x: &AttributeMatrix,
    attr: usize,
    cfg: &DipConfig,
) -> Result<CandidateSet> {
    local_clustering_traced(candidates, x, attr, cfg).map(|(c, _)| c)
}

/// Like [`local_clustering`], also returning every dip evaluation in order.
pub fn local_clustering_traced(
    candidates: &CandidateSet,
    x: &AttributeMatrix,
    attr: usize,
    cfg: &DipConfig,
) -> Result<(CandidateSet, Vec<ShrinkStep>)> {
    cfg.validate()?;
    if attr >= x.num_cols() {
        return Err(Error::input(format!(
            "attribute {attr} out of range ({} columns)",
            x.num_cols()
        )));
    }
    if let Some(&last) = candidates.members.last() {
        if last >= x.num_rows() {
            return Err(Error::input(format!(
                "candidate {last} out of range ({} rows)",
                x.num_rows()
            )));
        }
    }

    let seed = candidates.seed;
    let seed_value = x.get(seed, attr);
    let mut members = candidates.members.clone();
    let mut steps = Vec::new();
    loop {
        let values = x.column_at(attr, &members);
        let res = dip_test(&values, cfg)?;
        let p_value = res.p_value.unwrap_or(1.0);
        let mut step = ShrinkStep {
            size: members.len(),
            dip: res.dip,
            p_value,
            modal_low: res.modal_low,
            modal_high: res.modal_high,
            branch: None,
        };
        if res.is_unimodal(cfg.alpha) {
            steps.push(step);
            break;
        }

        let (lo, hi) = (res.modal_low, res.modal_high);
        let branch = if seed_value < lo {
            Branch::LeftOfInterval
        } else if seed_value > hi {
            Branch::RightOfInterval
        } else {
            Branch::ModalInterval
        };
        let kept: Vec<usize> = members
            .iter()
            .zip(&values)
            .filter(|&(_, &v)| match branch {
                Branch::LeftOfInterval => v < lo,
                Branch::RightOfInterval => v > hi,
                Branch::ModalInterval => lo <= v && v <= hi,
            })
            .map(|(&m, _)| m)
            .collect();
        if kept.len() == members.len() {
            // Heavy ties can leave the set unchanged; stop rather than loop.
            steps.push(step);
            break;
        }
        step.branch = Some(branch);
        steps.push(step);
        members = kept;
    }
    Ok((CandidateSet { members, seed }, steps))
}
