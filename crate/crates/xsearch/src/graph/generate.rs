//! Synthetic graph generators, deterministic per seed.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Graph, GraphError, NodeId};

/// Samples an Erdős–Rényi G(n, p) graph: each of the C(n, 2) possible
/// edges is included independently with probability `p`.
///
/// Uses geometric skip sampling, so the cost is proportional to the number
/// of edges produced rather than the number of candidate pairs.
pub fn generate_er(n: usize, p: f64, seed: u64) -> Result<Graph, GraphError> {
    if n < 1 {
        return Err(GraphError::InvalidArgument("n must be at least 1".into()));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(GraphError::InvalidArgument(format!(
            "edge probability {p} outside [0, 1]"
        )));
    }
    if n > NodeId::MAX as usize {
        return Err(GraphError::InvalidArgument(format!("n = {n} too large")));
    }

    let mut edges: Vec<(NodeId, NodeId)> = Vec::new();
    if p >= 1.0 {
        for u in 0..n {
            for v in (u + 1)..n {
                edges.push((u as NodeId, v as NodeId));
            }
        }
    } else if p > 0.0 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let log_q = (1.0 - p).ln();
        // Walk pair indices (w, v) with w < v, jumping geometric gaps.
        let mut v: usize = 1;
        let mut w: i64 = -1;
        while v < n {
            let r: f64 = rng.gen();
            let skip = ((1.0 - r).ln() / log_q).floor() as i64;
            w += 1 + skip;
            while w >= v as i64 && v < n {
                w -= v as i64;
                v += 1;
            }
            if v < n {
                edges.push((w as NodeId, v as NodeId));
            }
        }
    }
    Graph::from_edges(n, edges)
}

/// Grows a Barabási–Albert preferential-attachment graph.
///
/// Starts from a complete graph on `m + 1` nodes; each subsequent node
/// attaches to `m` distinct existing nodes chosen with probability
/// proportional to current degree (repeated draws, duplicates rejected).
pub fn generate_ba(n: usize, m: usize, seed: u64) -> Result<Graph, GraphError> {
    if m < 1 {
        return Err(GraphError::InvalidArgument("m must be at least 1".into()));
    }
    if n <= m {
        return Err(GraphError::InvalidArgument(format!(
            "n = {n} must exceed m = {m}"
        )));
    }
    if n > NodeId::MAX as usize {
        return Err(GraphError::InvalidArgument(format!("n = {n} too large")));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(NodeId, NodeId)> = Vec::new();
    // One entry per edge endpoint; uniform draws from it are
    // degree-proportional draws over existing nodes.
    let mut endpoints: Vec<NodeId> = Vec::with_capacity(2 * m * n);

    for u in 0..=m {
        for v in (u + 1)..=m {
            edges.push((u as NodeId, v as NodeId));
            endpoints.push(u as NodeId);
            endpoints.push(v as NodeId);
        }
    }

    let mut targets: Vec<NodeId> = Vec::with_capacity(m);
    for new in (m + 1)..n {
        let new = new as NodeId;
        // Degrees are frozen as of this node's arrival: draw all m targets
        // before appending the new endpoints.
        targets.clear();
        while targets.len() < m {
            let t = endpoints[rng.gen_range(0..endpoints.len())];
            if !targets.contains(&t) {
                targets.push(t);
            }
        }
        for &t in &targets {
            edges.push((new, t));
            endpoints.push(new);
            endpoints.push(t);
        }
    }
    Graph::from_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn er_p_zero_is_edgeless() {
        let g = generate_er(5, 0.0, 1).unwrap();
        assert_eq!(g.node_count(), 5);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn er_p_one_is_complete() {
        let g = generate_er(5, 1.0, 1).unwrap();
        assert_eq!(g.edge_count(), 10);
        g.validate().unwrap();
    }

    #[test]
    fn er_rejects_bad_probability() {
        assert!(generate_er(5, -0.1, 1).is_err());
        assert!(generate_er(5, 1.5, 1).is_err());
        assert!(generate_er(5, f64::NAN, 1).is_err());
        assert!(generate_er(0, 0.5, 1).is_err());
    }

    #[test]
    fn er_is_reproducible() {
        let a = generate_er(200, 0.05, 77).unwrap();
        let b = generate_er(200, 0.05, 77).unwrap();
        assert_eq!(a, b);
        let c = generate_er(200, 0.05, 78).unwrap();
        assert_ne!(a, c);
    }

    #[test]
    fn er_edge_count_tracks_expectation() {
        // Mean degree p*(n-1) = 6.0; averaged over seeds the estimate is tight.
        let n = 10_000;
        let p = 0.0006;
        let mut total_edges = 0usize;
        for seed in 0..10 {
            total_edges += generate_er(n, p, seed).unwrap().edge_count();
        }
        let avg_degree = 2.0 * (total_edges as f64 / 10.0) / n as f64;
        assert!(
            (avg_degree - 6.0).abs() < 0.2,
            "avg degree {avg_degree} out of range"
        );
    }

    #[test]
    fn ba_minimal_is_complete() {
        let g = generate_ba(4, 3, 9).unwrap();
        assert_eq!(g.edge_count(), 6);
        assert!(g.nodes().all(|v| g.degree(v) == 3));
    }

    #[test]
    fn ba_rejects_bad_sizes() {
        assert!(generate_ba(3, 3, 1).is_err());
        assert!(generate_ba(5, 0, 1).is_err());
    }

    #[test]
    fn ba_degrees_and_reproducibility() {
        let g = generate_ba(3000, 3, 5).unwrap();
        g.validate().unwrap();
        assert!(g.nodes().all(|v| g.degree(v) >= 3));
        let avg_degree = 2.0 * g.edge_count() as f64 / 3000.0;
        assert!((avg_degree - 6.0).abs() < 0.05);
        assert_eq!(g, generate_ba(3000, 3, 5).unwrap());
    }

    #[test]
    fn ba_degree_distribution_is_heavy_tailed() {
        let g = generate_ba(10_000, 3, 11).unwrap();
        let mut degrees: Vec<usize> = g.nodes().map(|v| g.degree(v)).collect();
        degrees.sort_unstable();
        let median = degrees[degrees.len() / 2];
        let max = *degrees.last().unwrap();
        assert!(
            max > 20 * median,
            "max degree {max} vs median {median}: tail too light"
        );
        let avg_degree = 2.0 * g.edge_count() as f64 / 10_000.0;
        assert!((avg_degree - 6.0).abs() < 0.05);
    }
}
