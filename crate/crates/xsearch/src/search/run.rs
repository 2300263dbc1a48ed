//! Whole-run simulation: stop rules, per-step traces, coverage accounting.

use std::io::Write;

use crate::graph::{Graph, NodeId};

use super::{SearchError, SearchState, Strategy};

/// When to stop a search run. At least one condition must be set; the run
/// stops at the first condition met (target node, then coverage, then
/// step budget, checked after every step).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StopRule {
    /// Stop once |N(S) ∪ S| / |V| reaches this fraction, in (0, 1].
    pub coverage: Option<f64>,
    /// Stop after this many steps.
    pub max_steps: Option<u64>,
    /// Stop once this node enters the coverage (the query is one hop away).
    pub target_node: Option<NodeId>,
}

impl StopRule {
    pub fn coverage(fraction: f64) -> Self {
        StopRule {
            coverage: Some(fraction),
            max_steps: None,
            target_node: None,
        }
    }

    pub fn steps(budget: u64) -> Self {
        StopRule {
            coverage: None,
            max_steps: Some(budget),
            target_node: None,
        }
    }

    pub fn target(node: NodeId) -> Self {
        StopRule {
            coverage: None,
            max_steps: None,
            target_node: Some(node),
        }
    }

    pub fn with_max_steps(mut self, budget: u64) -> Self {
        self.max_steps = Some(budget);
        self
    }

    fn validate(&self, g: &Graph) -> Result<(), SearchError> {
        if self.coverage.is_none() && self.max_steps.is_none() && self.target_node.is_none() {
            return Err(SearchError::InvalidArgument(
                "stop rule needs a coverage target, step budget, or target node".into(),
            ));
        }
        if let Some(f) = self.coverage {
            if !(f > 0.0 && f <= 1.0) {
                return Err(SearchError::InvalidArgument(format!(
                    "coverage target {f} outside (0, 1]"
                )));
            }
        }
        if self.max_steps == Some(0) {
            return Err(SearchError::InvalidArgument(
                "step budget must be at least 1".into(),
            ));
        }
        if let Some(t) = self.target_node {
            if !g.contains(t) {
                return Err(SearchError::InvalidArgument(format!(
                    "target node {t} out of range"
                )));
            }
        }
        Ok(())
    }
}

/// Why a run ended.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Termination {
    CoverageReached,
    TargetCovered,
    StepBudgetExhausted,
    /// The strategy ran out of moves (disconnected remainder or isolated
    /// source) before any stop condition was met.
    Exhausted,
}

impl Termination {
    pub fn name(self) -> &'static str {
        match self {
            Termination::CoverageReached => "coverage-reached",
            Termination::TargetCovered => "target-covered",
            Termination::StepBudgetExhausted => "step-budget-exhausted",
            Termination::Exhausted => "exhausted",
        }
    }
}

/// One counted step of a run.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TraceRecord {
    /// Step index, contiguous from 1.
    pub step: u64,
    /// Node the query was handed to on this step.
    pub node: NodeId,
    /// |S| after the step.
    pub visited: usize,
    /// |N(S) ∪ S| after the step.
    pub covered: usize,
}

/// Full record of one search run.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchTrace {
    pub strategy: Strategy,
    pub source: NodeId,
    pub graph_nodes: usize,
    /// |{source} ∪ N(source)|, the coverage before any hop.
    pub initial_covered: usize,
    pub records: Vec<TraceRecord>,
    pub termination: Termination,
}

impl SearchTrace {
    pub fn steps(&self) -> u64 {
        self.records.len() as u64
    }

    pub fn final_covered(&self) -> usize {
        self.records
            .last()
            .map_or(self.initial_covered, |r| r.covered)
    }

    pub fn final_coverage_fraction(&self) -> f64 {
        self.final_covered() as f64 / self.graph_nodes as f64
    }

    /// Coverage fraction after `step` counted steps (step 0 = initial).
    pub fn coverage_at_step(&self, step: u64) -> f64 {
        let covered = if step == 0 {
            self.initial_covered
        } else {
            match self.records.get(step as usize - 1) {
                Some(r) => r.covered,
                None => self.final_covered(),
            }
        };
        covered as f64 / self.graph_nodes as f64
    }

    /// CSV serialization: `step,node,visited,covered,coverage_fraction`,
    /// beginning with the step-0 initialization row.
    pub fn write_csv<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "step,node,visited,covered,coverage_fraction")?;
        let n = self.graph_nodes as f64;
        writeln!(
            w,
            "0,{},1,{},{:.6}",
            self.source,
            self.initial_covered,
            self.initial_covered as f64 / n
        )?;
        for r in &self.records {
            writeln!(
                w,
                "{},{},{},{},{:.6}",
                r.step,
                r.node,
                r.visited,
                r.covered,
                r.covered as f64 / n
            )?;
        }
        Ok(())
    }
}

/// Smallest step index at which the trace's coverage fraction reaches
/// `fraction`; 0 when the source's own neighborhood suffices, `None` when
/// never reached.
pub fn steps_to_coverage(trace: &SearchTrace, fraction: f64) -> Option<u64> {
    assert!(
        fraction > 0.0 && fraction <= 1.0,
        "coverage fraction {fraction} outside (0, 1]"
    );
    let n = trace.graph_nodes as f64;
    if trace.initial_covered as f64 / n >= fraction {
        return Some(0);
    }
    trace
        .records
        .iter()
        .find(|r| r.covered as f64 / n >= fraction)
        .map(|r| r.step)
}

/// Runs one search to completion under `stop`, deterministically for a
/// fixed (graph, strategy, source, seed).
///
/// Running out of moves is not an error: the trace comes back with
/// [`Termination::Exhausted`].
pub fn run_search(
    g: &Graph,
    strategy: Strategy,
    source: NodeId,
    stop: &StopRule,
    seed: u64,
) -> Result<SearchTrace, SearchError> {
    stop.validate(g)?;
    let n = g.node_count();
    let mut st = SearchState::new(g, strategy, source, seed)?;
    let mut records = Vec::new();
    let initial_covered = st.covered_len();

    let met = |covered: usize, st: &SearchState| -> Option<Termination> {
        if let Some(t) = stop.target_node {
            if st.covers(t) {
                return Some(Termination::TargetCovered);
            }
        }
        if let Some(f) = stop.coverage {
            if covered as f64 / n as f64 >= f {
                return Some(Termination::CoverageReached);
            }
        }
        None
    };

    let mut termination = met(initial_covered, &st);
    while termination.is_none() {
        if stop.max_steps.is_some_and(|budget| st.steps() >= budget) {
            termination = Some(Termination::StepBudgetExhausted);
            break;
        }
        match st.step(g) {
            Ok(ev) => {
                records.push(TraceRecord {
                    step: ev.step,
                    node: ev.node,
                    visited: st.visited().len(),
                    covered: st.covered_len(),
                });
                termination = met(st.covered_len(), &st);
            }
            Err(SearchError::Exhausted) | Err(SearchError::DeadEnd(_)) => {
                termination = Some(Termination::Exhausted);
            }
            Err(other) => return Err(other),
        }
    }

    Ok(SearchTrace {
        strategy,
        source,
        graph_nodes: n,
        initial_covered,
        records,
        termination: termination.expect("loop exits with a termination"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::test_graphs::*;

    #[test]
    fn clique_target_met_at_initialization() {
        let g = complete(10);
        for strategy in Strategy::ALL {
            let trace = run_search(&g, strategy, 4, &StopRule::coverage(1.0), 1).unwrap();
            assert_eq!(trace.steps(), 0);
            assert_eq!(trace.termination, Termination::CoverageReached);
            assert_eq!(trace.final_coverage_fraction(), 1.0);
        }
    }

    #[test]
    fn path_xs_from_center_needs_five_steps_at_best() {
        // From source 2, XS must visit one arm's dead end before the
        // fallback walk can carry it across to the other arm; enumerating
        // every tie-break and fallback branch shows the best run covers
        // everything in exactly 5 steps.
        let g = path(5);
        let mut best = u64::MAX;
        for seed in 0..50 {
            let trace = run_search(&g, Strategy::Xs, 2, &StopRule::coverage(1.0), seed).unwrap();
            assert_eq!(trace.termination, Termination::CoverageReached);
            assert_eq!(trace.final_coverage_fraction(), 1.0);
            assert!(trace.steps() >= 5, "impossible run of {} steps", trace.steps());
            best = best.min(trace.steps());
        }
        assert_eq!(best, 5);
    }

    #[test]
    fn steps_to_coverage_finds_first_crossing() {
        let trace = SearchTrace {
            strategy: Strategy::Xs,
            source: 0,
            graph_nodes: 20,
            initial_covered: 2,
            records: vec![
                TraceRecord { step: 1, node: 1, visited: 2, covered: 2 },
                TraceRecord { step: 2, node: 2, visited: 3, covered: 5 },
                TraceRecord { step: 3, node: 3, visited: 4, covered: 8 },
            ],
            termination: Termination::CoverageReached,
        };
        assert_eq!(steps_to_coverage(&trace, 0.2), Some(2));
        assert_eq!(steps_to_coverage(&trace, 0.5), None);
        assert_eq!(steps_to_coverage(&trace, 0.1), Some(0));
    }

    #[test]
    fn budget_stops_the_run() {
        let g = path(50);
        let trace = run_search(
            &g,
            Strategy::Rw,
            0,
            &StopRule::coverage(1.0).with_max_steps(5),
            3,
        )
        .unwrap();
        assert_eq!(trace.steps(), 5);
        assert_eq!(trace.termination, Termination::StepBudgetExhausted);
    }

    #[test]
    fn disconnected_graph_exhausts_bfs() {
        let g = crate::graph::Graph::from_edges(6, [(0, 1), (1, 2), (3, 4), (4, 5)]).unwrap();
        let trace = run_search(&g, Strategy::Bfs, 0, &StopRule::coverage(0.9), 0).unwrap();
        assert_eq!(trace.termination, Termination::Exhausted);
        assert_eq!(trace.final_covered(), 3);
    }

    #[test]
    fn isolated_source_exhausts_single_copy() {
        let g = crate::graph::Graph::from_edges(3, [(0, 1)]).unwrap();
        let trace = run_search(&g, Strategy::Rw, 2, &StopRule::coverage(0.9), 0).unwrap();
        assert_eq!(trace.termination, Termination::Exhausted);
        assert_eq!(trace.steps(), 0);
    }

    #[test]
    fn target_node_mode_succeeds_when_target_is_covered() {
        let g = path(6);
        let trace = run_search(&g, Strategy::Xs, 0, &StopRule::target(5), 0).unwrap();
        assert_eq!(trace.termination, Termination::TargetCovered);
        // Node 5 enters coverage when node 4 is visited, 4 hops from 0.
        assert_eq!(trace.steps(), 4);
    }

    #[test]
    fn identical_invocations_give_byte_identical_csv() {
        let g = crate::graph::generate_ba(300, 3, 6).unwrap();
        let mut runs = Vec::new();
        for _ in 0..2 {
            let trace =
                run_search(&g, Strategy::Xs, 17, &StopRule::coverage(0.5), 99).unwrap();
            let mut out = Vec::new();
            trace.write_csv(&mut out).unwrap();
            runs.push(out);
        }
        assert_eq!(runs[0], runs[1]);
        assert!(!runs[0].is_empty());
    }

    #[test]
    fn rejects_empty_and_invalid_stop_rules() {
        let g = path(4);
        let empty = StopRule {
            coverage: None,
            max_steps: None,
            target_node: None,
        };
        assert!(run_search(&g, Strategy::Xs, 0, &empty, 0).is_err());
        assert!(run_search(&g, Strategy::Xs, 0, &StopRule::coverage(0.0), 0).is_err());
        assert!(run_search(&g, Strategy::Xs, 0, &StopRule::coverage(1.5), 0).is_err());
        assert!(run_search(&g, Strategy::Xs, 0, &StopRule::steps(0), 0).is_err());
        assert!(run_search(&g, Strategy::Xs, 0, &StopRule::target(9), 0).is_err());
        assert!(run_search(&g, Strategy::Xs, 9, &StopRule::coverage(0.5), 0).is_err());
    }

    #[test]
    fn trace_csv_has_initial_row() {
        let g = star(3);
        let trace = run_search(&g, Strategy::Bfs, 0, &StopRule::coverage(1.0), 0).unwrap();
        let mut out = Vec::new();
        trace.write_csv(&mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "step,node,visited,covered,coverage_fraction");
        assert_eq!(lines[1], "0,0,1,4,1.000000");
        assert_eq!(lines.len(), 2); // coverage met at initialization
    }
}
