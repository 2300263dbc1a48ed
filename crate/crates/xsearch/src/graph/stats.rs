//! Network statistics: density, clustering, characteristic path length.

use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use super::{Graph, GraphError, NodeId};

/// Summary statistics of a network.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphStats {
    pub n: usize,
    /// |E| / C(|V|, 2).
    pub density: f64,
    /// 2|E| / |V|.
    pub avg_degree: f64,
    /// Mean local clustering coefficient; nodes of degree < 2 contribute 0.
    pub clustering_coefficient: f64,
    /// Mean shortest-path distance over sampled sources within the largest
    /// connected component.
    pub characteristic_path_length: f64,
}

/// Node ids of the largest connected component, ascending. Ties go to the
/// component containing the smallest node id.
pub fn largest_connected_component(g: &Graph) -> Vec<NodeId> {
    let n = g.node_count();
    let mut component = vec![u32::MAX; n];
    let mut best: (usize, u32) = (0, u32::MAX); // (size, component id)
    let mut next_component = 0u32;
    let mut queue = Vec::new();
    for start in 0..n {
        if component[start] != u32::MAX {
            continue;
        }
        let id = next_component;
        next_component += 1;
        component[start] = id;
        queue.clear();
        queue.push(start as NodeId);
        let mut size = 0usize;
        while let Some(v) = queue.pop() {
            size += 1;
            for &w in g.neighbors(v) {
                if component[w as usize] == u32::MAX {
                    component[w as usize] = id;
                    queue.push(w);
                }
            }
        }
        if size > best.0 {
            best = (size, id);
        }
    }
    (0..n as NodeId)
        .filter(|&v| component[v as usize] == best.1)
        .collect()
}

fn local_clustering(g: &Graph, v: NodeId) -> f64 {
    let neighbors = g.neighbors(v);
    let d = neighbors.len();
    if d < 2 {
        return 0.0;
    }
    // Count edges among neighbors by merging sorted adjacency lists.
    let mut links = 0usize;
    for &u in neighbors {
        let (mut i, mut j) = (0, 0);
        let other = g.neighbors(u);
        while i < neighbors.len() && j < other.len() {
            match neighbors[i].cmp(&other[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    links += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
    }
    // Each neighbor-neighbor edge was counted twice.
    links as f64 / (d * (d - 1)) as f64
}

/// BFS distances from `source`; returns (sum of distances, reached count)
/// over nodes other than the source.
fn bfs_distance_sum(g: &Graph, source: NodeId) -> (u64, usize) {
    let mut dist = vec![u32::MAX; g.node_count()];
    dist[source as usize] = 0;
    let mut frontier = vec![source];
    let mut next = Vec::new();
    let mut level = 0u32;
    let mut sum = 0u64;
    let mut reached = 0usize;
    while !frontier.is_empty() {
        level += 1;
        for &v in &frontier {
            for &w in g.neighbors(v) {
                if dist[w as usize] == u32::MAX {
                    dist[w as usize] = level;
                    sum += level as u64;
                    reached += 1;
                    next.push(w);
                }
            }
        }
        std::mem::swap(&mut frontier, &mut next);
        next.clear();
    }
    (sum, reached)
}

/// Computes exact density, average degree, and clustering, plus a
/// characteristic path length estimated by full BFS from
/// `path_length_sample` sources drawn from the largest connected component.
pub fn compute_stats(
    g: &Graph,
    path_length_sample: usize,
    seed: u64,
) -> Result<GraphStats, GraphError> {
    let n = g.node_count();
    if n == 0 {
        return Err(GraphError::InvalidArgument("graph is empty".into()));
    }
    if path_length_sample == 0 {
        return Err(GraphError::InvalidArgument(
            "path_length_sample must be at least 1".into(),
        ));
    }

    let density = if n < 2 {
        0.0
    } else {
        g.edge_count() as f64 / (n as f64 * (n as f64 - 1.0) / 2.0)
    };
    let avg_degree = 2.0 * g.edge_count() as f64 / n as f64;

    let local: Vec<f64> = (0..n as NodeId)
        .into_par_iter()
        .map(|v| local_clustering(g, v))
        .collect();
    let clustering_coefficient = local.iter().sum::<f64>() / n as f64;

    let lcc = largest_connected_component(g);
    let sources: Vec<NodeId> = if path_length_sample >= lcc.len() {
        lcc.clone()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut chosen: Vec<NodeId> = index::sample(&mut rng, lcc.len(), path_length_sample)
            .into_iter()
            .map(|i| lcc[i])
            .collect();
        chosen.sort_unstable();
        chosen
    };

    // Distances are integers, so the parallel sum is schedule-independent.
    let (total, pairs) = sources
        .par_iter()
        .map(|&s| bfs_distance_sum(g, s))
        .collect::<Vec<_>>()
        .into_iter()
        .fold((0u64, 0usize), |(ts, tp), (s, p)| (ts + s, tp + p));
    let characteristic_path_length = if pairs == 0 {
        0.0
    } else {
        total as f64 / pairs as f64
    };

    Ok(GraphStats {
        n,
        density,
        avg_degree,
        clustering_coefficient,
        characteristic_path_length,
    })
}
