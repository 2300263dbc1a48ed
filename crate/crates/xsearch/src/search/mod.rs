//! Decentralized search strategies over an immutable graph.
//!
//! All four strategies forward a query from node to node using only local
//! information (a node's neighbors and its neighbors' neighbors):
//!
//! - **XS** (expansion search): hop to the unvisited neighbor contributing
//!   the most nodes not yet seen.
//! - **DS** (degree search): hop to the unvisited neighbor of highest degree.
//! - **RW**: self-avoiding random walk, uniform over unvisited neighbors.
//! - **BFS**: idealized flooding with no redundant forwards; every copy's
//!   hop counts as one step.
//!
//! When a single-copy strategy finds all neighbors of the current node
//! visited, it falls back to a uniformly random visited neighbor; the
//! fallback hop consumes a step and discovers nothing.

mod run;

pub use run::{run_search, steps_to_coverage, SearchTrace, StopRule, Termination, TraceRecord};

use std::collections::VecDeque;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, NodeId};

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("source node {0} out of range")]
    SourceOutOfRange(NodeId),
    #[error("current node {0} has no neighbors")]
    DeadEnd(NodeId),
    #[error("query frontier exhausted before reaching the stop condition")]
    Exhausted,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("strategy {0} requires a {1} search state")]
    StrategyMismatch(Strategy, &'static str),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    Xs,
    Ds,
    Rw,
    Bfs,
}

impl Strategy {
    pub const ALL: [Strategy; 4] = [Strategy::Xs, Strategy::Ds, Strategy::Rw, Strategy::Bfs];

    pub fn name(self) -> &'static str {
        match self {
            Strategy::Xs => "xs",
            Strategy::Ds => "ds",
            Strategy::Rw => "rw",
            Strategy::Bfs => "bfs",
        }
    }
}

impl std::fmt::Display for Strategy {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Strategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "xs" => Ok(Strategy::Xs),
            "ds" => Ok(Strategy::Ds),
            "rw" => Ok(Strategy::Rw),
            "bfs" => Ok(Strategy::Bfs),
            other => Err(format!("unknown strategy {other:?}")),
        }
    }
}

#[derive(Debug, Clone)]
enum CopyState {
    /// One query message; `current` is its holder.
    Single { current: NodeId },
    /// BFS: FIFO of active holders, each with a cursor into its sorted
    /// neighbor list marking the next delivery candidate.
    Frontier { queue: VecDeque<(NodeId, usize)> },
}

/// What one step changed.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StepEvent {
    /// Step index, counted from 1.
    pub step: u64,
    /// The node the query was handed to.
    pub node: NodeId,
    /// False for a fallback hop to an already-visited node.
    pub new_visit: bool,
}

/// Mutable state of one search run.
#[derive(Debug, Clone)]
pub struct SearchState {
    strategy: Strategy,
    visited: Vec<NodeId>,
    is_visited: Vec<bool>,
    covered: Vec<bool>,
    covered_len: usize,
    steps: u64,
    copies: CopyState,
    rng: ChaCha8Rng,
}

impl SearchState {
    /// Starts a search at `source`: visited = {source}, coverage =
    /// {source} ∪ N(source), zero steps taken.
    pub fn new(
        g: &Graph,
        strategy: Strategy,
        source: NodeId,
        seed: u64,
    ) -> Result<Self, SearchError> {
        if !g.contains(source) {
            return Err(SearchError::SourceOutOfRange(source));
        }
        let n = g.node_count();
        let mut is_visited = vec![false; n];
        is_visited[source as usize] = true;
        let mut covered = vec![false; n];
        covered[source as usize] = true;
        let mut covered_len = 1;
        for &w in g.neighbors(source) {
            if !covered[w as usize] {
                covered[w as usize] = true;
                covered_len += 1;
            }
        }
        let copies = match strategy {
            Strategy::Bfs => CopyState::Frontier {
                queue: VecDeque::from([(source, 0)]),
            },
            _ => CopyState::Single { current: source },
        };
        Ok(SearchState {
            strategy,
            visited: vec![source],
            is_visited,
            covered,
            covered_len,
            steps: 0,
            copies,
            rng: ChaCha8Rng::seed_from_u64(seed),
        })
    }

    pub fn strategy(&self) -> Strategy {
        self.strategy
    }

    pub fn steps(&self) -> u64 {
        self.steps
    }

    /// Visited nodes in visit order.
    pub fn visited(&self) -> &[NodeId] {
        &self.visited
    }

    pub fn covered_len(&self) -> usize {
        self.covered_len
    }

    pub fn covers(&self, v: NodeId) -> bool {
        self.covered[v as usize]
    }

    pub fn coverage_fraction(&self, g: &Graph) -> f64 {
        self.covered_len as f64 / g.node_count() as f64
    }

    /// Most recent holder of the query (single-copy strategies only).
    pub fn current(&self) -> Option<NodeId> {
        match &self.copies {
            CopyState::Single { current } => Some(*current),
            CopyState::Frontier { .. } => None,
        }
    }

    /// Applies one step of this state's own strategy.
    pub fn step(&mut self, g: &Graph) -> Result<StepEvent, SearchError> {
        match self.strategy {
            Strategy::Xs => step_xs(g, self),
            Strategy::Ds => step_ds(g, self),
            Strategy::Rw => step_rw(g, self),
            Strategy::Bfs => step_bfs(g, self),
        }
    }

    fn visit(&mut self, g: &Graph, v: NodeId) {
        debug_assert!(!self.is_visited[v as usize]);
        self.is_visited[v as usize] = true;
        self.visited.push(v);
        if !self.covered[v as usize] {
            self.covered[v as usize] = true;
            self.covered_len += 1;
        }
        for &w in g.neighbors(v) {
            if !self.covered[w as usize] {
                self.covered[w as usize] = true;
                self.covered_len += 1;
            }
        }
    }

    /// Hands the query to `next` (a neighbor of the current holder),
    /// counting one step.
    fn hop_single(&mut self, g: &Graph, next: NodeId) -> StepEvent {
        let new_visit = !self.is_visited[next as usize];
        if new_visit {
            self.visit(g, next);
        }
        self.copies = CopyState::Single { current: next };
        self.steps += 1;
        StepEvent {
            step: self.steps,
            node: next,
            new_visit,
        }
    }
}

enum HopRule {
    MaxCoverageGain,
    MaxDegree,
    Uniform,
}

/// Picks the argmax candidate by `score`, breaking ties uniformly at
/// random. Candidates must be nonempty.
fn argmax_with_rng<F>(candidates: &[NodeId], rng: &mut ChaCha8Rng, mut score: F) -> NodeId
where
    F: FnMut(NodeId) -> usize,
{
    let mut best_score = 0usize;
    let mut tied: Vec<NodeId> = Vec::new();
    for &v in candidates {
        let s = score(v);
        if tied.is_empty() || s > best_score {
            best_score = s;
            tied.clear();
            tied.push(v);
        } else if s == best_score {
            tied.push(v);
        }
    }
    if tied.len() == 1 {
        tied[0]
    } else {
        tied[rng.gen_range(0..tied.len())]
    }
}

fn single_copy_step(
    g: &Graph,
    st: &mut SearchState,
    strategy: Strategy,
    rule: HopRule,
) -> Result<StepEvent, SearchError> {
    let c = match st.copies {
        CopyState::Single { current } => current,
        CopyState::Frontier { .. } => {
            return Err(SearchError::StrategyMismatch(strategy, "single-copy"))
        }
    };
    let mut unvisited = Vec::new();
    let mut visited = Vec::new();
    for &w in g.neighbors(c) {
        if st.is_visited[w as usize] {
            visited.push(w);
        } else {
            unvisited.push(w);
        }
    }

    let next = if !unvisited.is_empty() {
        let SearchState { rng, covered, .. } = st;
        match rule {
            HopRule::MaxCoverageGain => argmax_with_rng(&unvisited, rng, |v| {
                g.neighbors(v)
                    .iter()
                    .filter(|&&w| !covered[w as usize])
                    .count()
            }),
            HopRule::MaxDegree => argmax_with_rng(&unvisited, rng, |v| g.degree(v)),
            HopRule::Uniform => unvisited[rng.gen_range(0..unvisited.len())],
        }
    } else if !visited.is_empty() {
        // All neighbors already hold or held the query: fall back to a
        // uniformly random visited neighbor.
        visited[st.rng.gen_range(0..visited.len())]
    } else {
        return Err(SearchError::DeadEnd(c));
    };
    Ok(st.hop_single(g, next))
}

/// Expansion-search step: hop to the unvisited neighbor `v` of the current
/// node maximizing |N({v}) − (N(S) ∪ S)|, ties broken by rng.
pub fn step_xs(g: &Graph, st: &mut SearchState) -> Result<StepEvent, SearchError> {
    single_copy_step(g, st, Strategy::Xs, HopRule::MaxCoverageGain)
}

/// Degree-search step: hop to the unvisited neighbor of highest degree,
/// ties broken by rng.
pub fn step_ds(g: &Graph, st: &mut SearchState) -> Result<StepEvent, SearchError> {
    single_copy_step(g, st, Strategy::Ds, HopRule::MaxDegree)
}

/// Self-avoiding random-walk step: uniform over unvisited neighbors.
pub fn step_rw(g: &Graph, st: &mut SearchState) -> Result<StepEvent, SearchError> {
    single_copy_step(g, st, Strategy::Rw, HopRule::Uniform)
}

/// BFS step: the FIFO head holder forwards one copy to its next
/// not-yet-reached neighbor in ascending id order. Holders with no
/// deliveries left retire without consuming a step.
pub fn step_bfs(g: &Graph, st: &mut SearchState) -> Result<StepEvent, SearchError> {
    if matches!(st.copies, CopyState::Single { .. }) {
        return Err(SearchError::StrategyMismatch(Strategy::Bfs, "frontier"));
    }
    loop {
        let (holder, cursor) = {
            let CopyState::Frontier { queue } = &st.copies else {
                unreachable!()
            };
            match queue.front() {
                Some(&front) => front,
                None => return Err(SearchError::Exhausted),
            }
        };
        let neighbors = g.neighbors(holder);
        let mut cursor = cursor;
        let mut delivered = None;
        while cursor < neighbors.len() {
            let w = neighbors[cursor];
            cursor += 1;
            if !st.is_visited[w as usize] {
                delivered = Some(w);
                break;
            }
        }
        let CopyState::Frontier { queue } = &mut st.copies else {
            unreachable!()
        };
        match delivered {
            Some(w) => {
                queue.front_mut().expect("nonempty").1 = cursor;
                queue.push_back((w, 0));
                st.visit(g, w);
                st.steps += 1;
                return Ok(StepEvent {
                    step: st.steps,
                    node: w,
                    new_visit: true,
                });
            }
            None => {
                // Holder has delivered to every neighbor; retire it
                // without consuming a step.
                queue.pop_front();
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::test_graphs::*;

    fn state(g: &Graph, strategy: Strategy, source: NodeId, seed: u64) -> SearchState {
        SearchState::new(g, strategy, source, seed).unwrap()
    }

    #[test]
    fn initial_coverage_includes_source_neighborhood() {
        let g = star(9);
        let st = state(&g, Strategy::Xs, 0, 1);
        assert_eq!(st.covered_len(), 10);
        assert_eq!(st.visited(), &[0]);
        assert_eq!(st.steps(), 0);
    }

    #[test]
    fn xs_from_star_center_hops_to_some_leaf() {
        let g = star(9);
        let mut st = state(&g, Strategy::Xs, 0, 7);
        let ev = step_xs(&g, &mut st).unwrap();
        assert!(ev.node >= 1);
        assert!(ev.new_visit);
        assert_eq!(st.covered_len(), 10);
    }

    #[test]
    fn xs_forced_move_on_path() {
        let g = path(5);
        let mut st = state(&g, Strategy::Xs, 0, 0);
        step_xs(&g, &mut st).unwrap(); // to 1, the only unvisited neighbor
        assert_eq!(st.visited(), &[0, 1]);
        let ev = step_xs(&g, &mut st).unwrap();
        assert_eq!(ev.node, 2);
    }

    #[test]
    fn xs_prefers_the_bridge_side() {
        let g = two_triangles_bridge();
        for seed in 0..20 {
            let mut st = state(&g, Strategy::Xs, 0, seed);
            let ev = step_xs(&g, &mut st).unwrap();
            // gain(2) = |{3}| = 1 beats gain(1) = 0 regardless of seed
            assert_eq!(ev.node, 2);
        }
    }

    #[test]
    fn ds_hops_to_highest_degree() {
        let g = star(9);
        let mut st = state(&g, Strategy::Ds, 1, 0);
        let ev = step_ds(&g, &mut st).unwrap();
        assert_eq!(ev.node, 0);

        // Path 0-1-2 plus hub 3 on node 1, with five pendant leaves on 3.
        let g = Graph::from_edges(
            9,
            [(0, 1), (1, 2), (1, 3), (3, 4), (3, 5), (3, 6), (3, 7), (3, 8)],
        )
        .unwrap();
        let mut st = state(&g, Strategy::Ds, 0, 0);
        assert_eq!(step_ds(&g, &mut st).unwrap().node, 1);
        // deg(3) = 6 beats deg(2) = 1
        assert_eq!(step_ds(&g, &mut st).unwrap().node, 3);
    }

    #[test]
    fn rw_is_self_avoiding_and_balanced() {
        let g = path(5);
        let mut left = 0usize;
        for seed in 0..10_000 {
            let mut st = state(&g, Strategy::Rw, 2, seed);
            let ev = step_rw(&g, &mut st).unwrap();
            assert!(ev.node == 1 || ev.node == 3);
            if ev.node == 1 {
                left += 1;
            }
        }
        let share = left as f64 / 10_000.0;
        assert!((share - 0.5).abs() < 0.02, "left share {share}");
    }

    #[test]
    fn rw_forced_by_self_avoidance_on_cycle() {
        let g = cycle(4);
        let mut checked = false;
        for seed in 0..32 {
            let mut st = state(&g, Strategy::Rw, 0, seed);
            if step_rw(&g, &mut st).unwrap().node != 1 {
                continue;
            }
            // From c = 1 with S = {0, 1}, self-avoidance forces node 2.
            assert_eq!(step_rw(&g, &mut st).unwrap().node, 2);
            checked = true;
        }
        assert!(checked, "no seed walked 0 -> 1 first");
    }

    #[test]
    fn fallback_is_uniform_over_visited_neighbors() {
        let g = complete(4);
        let mut seen = [0usize; 4];
        let mut qualifying = 0usize;
        for seed in 0..6_000 {
            let mut st = state(&g, Strategy::Rw, 0, seed);
            while st.visited().len() < 4 {
                st.step(&g).unwrap();
            }
            // Condition on the walk ending at node 3, the spec's scenario.
            if st.current() != Some(3) {
                continue;
            }
            qualifying += 1;
            let ev = st.step(&g).unwrap();
            assert!(!ev.new_visit);
            assert_ne!(ev.node, 3);
            seen[ev.node as usize] += 1;
        }
        assert!(qualifying > 500);
        assert_eq!(seen[3], 0);
        for dest in 0..3 {
            let share = seen[dest] as f64 / qualifying as f64;
            assert!(
                (share - 1.0 / 3.0).abs() < 0.05,
                "destination {dest} share {share}"
            );
        }
    }

    #[test]
    fn fallback_consumes_steps_without_discovering() {
        let g = complete(3);
        let mut st = state(&g, Strategy::Xs, 0, 3);
        st.step(&g).unwrap();
        st.step(&g).unwrap();
        let covered_before = st.covered_len();
        let visited_before = st.visited().len();
        let ev = st.step(&g).unwrap();
        assert!(!ev.new_visit);
        assert_eq!(st.covered_len(), covered_before);
        assert_eq!(st.visited().len(), visited_before);
        assert_eq!(st.steps(), 3);
    }

    #[test]
    fn dead_end_on_isolated_source() {
        let g = Graph::from_edges(3, [(0, 1)]).unwrap();
        let mut st = state(&g, Strategy::Xs, 2, 0);
        assert!(matches!(
            step_xs(&g, &mut st),
            Err(SearchError::DeadEnd(2))
        ));
    }

    #[test]
    fn bfs_star_floods_in_nine_steps() {
        let g = star(9);
        let mut st = state(&g, Strategy::Bfs, 0, 0);
        assert_eq!(st.covered_len(), 10);
        for expected in 1..=9u64 {
            let ev = step_bfs(&g, &mut st).unwrap();
            assert_eq!(ev.step, expected);
            assert!(ev.new_visit);
        }
        assert_eq!(st.visited().len(), 10);
        assert!(matches!(
            step_bfs(&g, &mut st),
            Err(SearchError::Exhausted)
        ));
    }

    #[test]
    fn bfs_path_takes_exactly_four_steps() {
        let g = path(5);
        let mut st = state(&g, Strategy::Bfs, 0, 0);
        let order: Vec<NodeId> = (0..4)
            .map(|_| step_bfs(&g, &mut st).unwrap().node)
            .collect();
        assert_eq!(order, vec![1, 2, 3, 4]);
        assert_eq!(st.steps(), 4);
        assert_eq!(st.visited().len(), 5);
    }

    #[test]
    fn bfs_delivers_in_ascending_id_order_per_holder() {
        // 0 connects to 3, 1, 2; deliveries must go 1, 2, 3.
        let g = Graph::from_edges(4, [(0, 3), (0, 1), (0, 2)]).unwrap();
        let mut st = state(&g, Strategy::Bfs, 0, 0);
        let order: Vec<NodeId> = (0..3)
            .map(|_| step_bfs(&g, &mut st).unwrap().node)
            .collect();
        assert_eq!(order, vec![1, 2, 3]);
    }

    #[test]
    fn bfs_never_redelivers() {
        let g = crate::graph::generate_er(60, 0.1, 9).unwrap();
        let mut st = state(&g, Strategy::Bfs, 0, 0);
        let mut seen = vec![false; 60];
        seen[0] = true;
        while let Ok(ev) = step_bfs(&g, &mut st) {
            assert!(!seen[ev.node as usize], "node {} delivered twice", ev.node);
            seen[ev.node as usize] = true;
        }
        // steps = |visited| - 1 for BFS
        assert_eq!(st.steps() as usize, st.visited().len() - 1);
    }

    #[test]
    fn strategy_parsing_round_trips() {
        for s in Strategy::ALL {
            assert_eq!(s.name().parse::<Strategy>().unwrap(), s);
        }
        assert!("flood".parse::<Strategy>().is_err());
    }

    #[test]
    fn mismatched_state_is_rejected() {
        let g = path(3);
        let mut bfs_state = state(&g, Strategy::Bfs, 0, 0);
        assert!(matches!(
            step_xs(&g, &mut bfs_state),
            Err(SearchError::StrategyMismatch(..))
        ));
        let mut xs_state = state(&g, Strategy::Xs, 0, 0);
        assert!(matches!(
            step_bfs(&g, &mut xs_state),
            Err(SearchError::StrategyMismatch(..))
        ));
    }
}
