//! Greedy approximation of maximum (and minimum) expansion samples.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use crate::graph::{Graph, NodeId};
use crate::ratio::Ratio;

use super::ExpansionError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GreedyMode {
    Maximize,
    Minimize,
}

/// Sample state after one greedy selection.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrajectoryPoint {
    /// |S| after this selection.
    pub size: usize,
    /// |N(S) ∪ S| after this selection.
    pub covered: usize,
    /// |N(S)| / |S|.
    pub expansion: Ratio,
    /// |N(S)| / |V − S|.
    pub quality: Ratio,
}

/// Result of a greedy run: the selected sample in selection order and the
/// per-step trajectory, so a single run to `k` serves every `k' <= k`.
#[derive(Debug, Clone)]
pub struct GreedyRun {
    pub sample: Vec<NodeId>,
    pub trajectory: Vec<TrajectoryPoint>,
}

/// Greedily builds a sample of exactly `k` nodes.
///
/// The first node is the one with the largest (maximize) or smallest
/// (minimize) neighborhood; each subsequent node is chosen by marginal
/// coverage gain |({v} ∪ N(v)) − (N(S) ∪ S)|, ties broken toward the
/// lowest node id. Gains are maintained incrementally and consumed through
/// a lazy-deletion heap, so a run costs O((|E| + k) log |V|).
pub fn greedy_apx(g: &Graph, k: usize, mode: GreedyMode) -> Result<GreedyRun, ExpansionError> {
    let n = g.node_count();
    if k < 1 || k >= n {
        return Err(ExpansionError::SampleSizeOutOfRange { k, n });
    }

    // gain[v] = |({v} ∪ N(v)) − covered|; it only decreases as the run
    // progresses, so stale heap entries are never better than fresh ones.
    let mut gain: Vec<usize> = (0..n as NodeId).map(|v| g.degree(v) + 1).collect();
    let mut selected = vec![false; n];
    let mut covered = vec![false; n];
    let mut covered_len = 0usize;

    // Heap entries order by (gain, lowest id wins); entries are stale when
    // their gain no longer matches `gain[v]`.
    let mut max_heap: BinaryHeap<(usize, Reverse<NodeId>)> = BinaryHeap::new();
    let mut min_heap: BinaryHeap<(Reverse<usize>, Reverse<NodeId>)> = BinaryHeap::new();
    match mode {
        GreedyMode::Maximize => {
            max_heap.extend((0..n as NodeId).map(|v| (gain[v as usize], Reverse(v))))
        }
        GreedyMode::Minimize => {
            min_heap.extend((0..n as NodeId).map(|v| (Reverse(gain[v as usize]), Reverse(v))))
        }
    }

    let mut sample = Vec::with_capacity(k);
    let mut trajectory = Vec::with_capacity(k);

    for step in 0..k {
        let chosen = loop {
            let (entry_gain, v) = match mode {
                GreedyMode::Maximize => {
                    let (gain, Reverse(v)) = max_heap.pop().expect("candidates remain");
                    (gain, v)
                }
                GreedyMode::Minimize => {
                    let (Reverse(gain), Reverse(v)) = min_heap.pop().expect("candidates remain");
                    (gain, v)
                }
            };
            if !selected[v as usize] && entry_gain == gain[v as usize] {
                break v;
            }
        };

        selected[chosen as usize] = true;
        let mut newly_covered: Vec<NodeId> = Vec::new();
        if !covered[chosen as usize] {
            covered[chosen as usize] = true;
            covered_len += 1;
            newly_covered.push(chosen);
        }
        for &w in g.neighbors(chosen) {
            if !covered[w as usize] {
                covered[w as usize] = true;
                covered_len += 1;
                newly_covered.push(w);
            }
        }
        // A node leaving the uncovered set lowers the gain of itself and of
        // every node adjacent to it.
        for w in newly_covered {
            gain[w as usize] -= 1;
            if !selected[w as usize] {
                match mode {
                    GreedyMode::Maximize => max_heap.push((gain[w as usize], Reverse(w))),
                    GreedyMode::Minimize => min_heap.push((Reverse(gain[w as usize]), Reverse(w))),
                }
            }
            for &x in g.neighbors(w) {
                gain[x as usize] -= 1;
                if !selected[x as usize] {
                    match mode {
                        GreedyMode::Maximize => max_heap.push((gain[x as usize], Reverse(x))),
                        GreedyMode::Minimize => {
                            min_heap.push((Reverse(gain[x as usize]), Reverse(x)))
                        }
                    }
                }
            }
        }

        sample.push(chosen);
        let size = step + 1;
        trajectory.push(TrajectoryPoint {
            size,
            covered: covered_len,
            expansion: Ratio::new(covered_len - size, size),
            quality: Ratio::new(covered_len - size, n - size),
        });
    }

    Ok(GreedyRun { sample, trajectory })
}
