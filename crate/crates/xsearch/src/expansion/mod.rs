//! Expansion arithmetic over vertex samples.
//!
//! For a sample S of a graph G = (V, E), the neighborhood N(S) is the set
//! of nodes outside S adjacent to at least one node of S. The *expansion*
//! of S is |N(S)| / |S| and its *expansion quality* is |N(S)| / |V − S|,
//! the fraction of the best possible expansion achieved. Quality 1 means S
//! touches every other node (a dominating set).

mod brute;
mod greedy;
mod signature;

pub use brute::{brute_force_max_expansion, brute_force_with_budget, DEFAULT_ENUMERATION_BUDGET};
pub use greedy::{greedy_apx, GreedyMode, GreedyRun, TrajectoryPoint};
pub use signature::{
    build_signature, default_fraction_grid, ExpansionSignature, SignaturePoint,
};

use thiserror::Error;

use crate::graph::{Graph, NodeId};
use crate::ratio::Ratio;

#[derive(Debug, Error)]
pub enum ExpansionError {
    #[error("sample is empty")]
    EmptySample,
    #[error("sample must be a proper subset of the vertex set")]
    SampleIsEntireGraph,
    #[error("node {0} out of range")]
    NodeOutOfRange(NodeId),
    #[error("sample size {k} out of range, expected 1 <= k < {n}")]
    SampleSizeOutOfRange { k: usize, n: usize },
    #[error("no fractions given")]
    EmptyFractions,
    #[error("fractions must lie in (0, 1) and be sorted ascending")]
    InvalidFractions,
    #[error("signature invariant violated: {0}")]
    SignatureInvariant(String),
    #[error("{combinations} combinations exceed the enumeration budget of {budget}")]
    BudgetExceeded { combinations: u128, budget: u64 },
}

/// A sample S with its incrementally maintained coverage N(S) ∪ S.
///
/// Inserting node v extends the coverage by {v} ∪ adjacency[v]; the
/// neighborhood is always `covered − sample`, so
/// `covered_len == neighborhood_len + sample_len` holds throughout.
#[derive(Debug, Clone)]
pub struct FrontierState {
    in_sample: Vec<bool>,
    covered: Vec<bool>,
    sample_len: usize,
    covered_len: usize,
}

impl FrontierState {
    pub fn new(g: &Graph) -> Self {
        FrontierState {
            in_sample: vec![false; g.node_count()],
            covered: vec![false; g.node_count()],
            sample_len: 0,
            covered_len: 0,
        }
    }

    /// Adds `v` to the sample; returns false if it was already present.
    pub fn insert(&mut self, g: &Graph, v: NodeId) -> bool {
        let vi = v as usize;
        if self.in_sample[vi] {
            return false;
        }
        self.in_sample[vi] = true;
        self.sample_len += 1;
        if !self.covered[vi] {
            self.covered[vi] = true;
            self.covered_len += 1;
        }
        for &w in g.neighbors(v) {
            if !self.covered[w as usize] {
                self.covered[w as usize] = true;
                self.covered_len += 1;
            }
        }
        true
    }

    pub fn sample_len(&self) -> usize {
        self.sample_len
    }

    pub fn covered_len(&self) -> usize {
        self.covered_len
    }

    pub fn neighborhood_len(&self) -> usize {
        self.covered_len - self.sample_len
    }

    pub fn in_sample(&self, v: NodeId) -> bool {
        self.in_sample[v as usize]
    }

    pub fn covers(&self, v: NodeId) -> bool {
        self.covered[v as usize]
    }

    /// Sample node ids, ascending.
    pub fn sample(&self) -> Vec<NodeId> {
        collect_flags(&self.in_sample)
    }

    /// Neighborhood node ids (covered minus sample), ascending.
    pub fn neighborhood(&self) -> Vec<NodeId> {
        (0..self.in_sample.len())
            .filter(|&i| self.covered[i] && !self.in_sample[i])
            .map(|i| i as NodeId)
            .collect()
    }
}

fn collect_flags(flags: &[bool]) -> Vec<NodeId> {
    flags
        .iter()
        .enumerate()
        .filter_map(|(i, &set)| set.then_some(i as NodeId))
        .collect()
}

fn frontier_for_sample(g: &Graph, sample: &[NodeId]) -> Result<FrontierState, ExpansionError> {
    if sample.is_empty() {
        return Err(ExpansionError::EmptySample);
    }
    let mut state = FrontierState::new(g);
    for &v in sample {
        if !g.contains(v) {
            return Err(ExpansionError::NodeOutOfRange(v));
        }
        state.insert(g, v);
    }
    if state.sample_len() == g.node_count() {
        return Err(ExpansionError::SampleIsEntireGraph);
    }
    Ok(state)
}

/// Expansion of a sample: |N(S)| / |S|. Duplicate ids in `sample` are
/// ignored; the sample must be a nonempty proper subset of V.
pub fn expansion(g: &Graph, sample: &[NodeId]) -> Result<Ratio, ExpansionError> {
    let state = frontier_for_sample(g, sample)?;
    Ok(Ratio::new(state.neighborhood_len(), state.sample_len()))
}

/// Expansion quality of a sample: |N(S)| / |V − S|, in [0, 1].
pub fn expansion_quality(g: &Graph, sample: &[NodeId]) -> Result<Ratio, ExpansionError> {
    let state = frontier_for_sample(g, sample)?;
    Ok(Ratio::new(
        state.neighborhood_len(),
        g.node_count() - state.sample_len(),
    ))
}
