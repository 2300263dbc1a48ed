//! Immutable undirected simple graphs with dense integer node ids.

mod generate;
mod io;
mod stats;

pub use generate::{generate_ba, generate_er};
pub use io::{load_edge_list, write_edge_list};
pub use stats::{compute_stats, largest_connected_component, GraphStats};

use thiserror::Error;

/// Dense node identifier in `[0, node_count)`.
pub type NodeId = u32;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("line {line}: malformed edge line ({detail})")]
    MalformedLine { line: usize, detail: String },
    #[error("empty input: no edge lines found")]
    EmptyInput,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("graph invariant violated: {0}")]
    InvariantViolation(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// An undirected simple graph, immutable after construction.
///
/// Node ids are dense integers `0..node_count`. Each adjacency list is
/// sorted and duplicate-free; edges appear in both endpoint lists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adjacency: Vec<Vec<NodeId>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph on `n` nodes from an arbitrary edge iterator.
    ///
    /// Edges are symmetrized; self-loops and duplicates are dropped. Node
    /// ids must already lie in `[0, n)`.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Graph, GraphError>
    where
        I: IntoIterator<Item = (NodeId, NodeId)>,
    {
        let mut adjacency: Vec<Vec<NodeId>> = vec![Vec::new(); n];
        for (u, v) in edges {
            let (ui, vi) = (u as usize, v as usize);
            if ui >= n || vi >= n {
                return Err(GraphError::InvalidArgument(format!(
                    "edge ({u}, {v}) out of range for {n} nodes"
                )));
            }
            if u == v {
                continue;
            }
            adjacency[ui].push(v);
            adjacency[vi].push(u);
        }
        let mut edge_count = 0;
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
            edge_count += list.len();
        }
        Ok(Graph {
            adjacency,
            edge_count: edge_count / 2,
        })
    }

    pub fn node_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn nodes(&self) -> impl Iterator<Item = NodeId> + '_ {
        0..self.adjacency.len() as NodeId
    }

    /// Sorted, duplicate-free neighbor list of `v`.
    pub fn neighbors(&self, v: NodeId) -> &[NodeId] {
        &self.adjacency[v as usize]
    }

    pub fn degree(&self, v: NodeId) -> usize {
        self.adjacency[v as usize].len()
    }

    pub fn has_edge(&self, u: NodeId, v: NodeId) -> bool {
        self.adjacency[u as usize].binary_search(&v).is_ok()
    }

    pub fn contains(&self, v: NodeId) -> bool {
        (v as usize) < self.adjacency.len()
    }

    pub fn max_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Checks the structural invariants: sorted duplicate-free adjacency,
    /// no self-loops, symmetry, and a consistent edge count.
    pub fn validate(&self) -> Result<(), GraphError> {
        let mut half_edges = 0usize;
        for (u, list) in self.adjacency.iter().enumerate() {
            let u = u as NodeId;
            half_edges += list.len();
            for pair in list.windows(2) {
                if pair[0] >= pair[1] {
                    return Err(GraphError::InvariantViolation(format!(
                        "adjacency of {u} not sorted/distinct"
                    )));
                }
            }
            for &v in list {
                if v == u {
                    return Err(GraphError::InvariantViolation(format!("self-loop at {u}")));
                }
                if !self.contains(v) {
                    return Err(GraphError::InvariantViolation(format!(
                        "neighbor {v} of {u} out of range"
                    )));
                }
                if !self.has_edge(v, u) {
                    return Err(GraphError::InvariantViolation(format!(
                        "edge ({u}, {v}) not symmetric"
                    )));
                }
            }
        }
        if half_edges != 2 * self.edge_count {
            return Err(GraphError::InvariantViolation(format!(
                "edge count {} inconsistent with adjacency total {half_edges}",
                self.edge_count
            )));
        }
        Ok(())
    }
}
