//! Steps-to-coverage experiments across networks, strategies, and targets.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::graph::{largest_connected_component, Graph, NodeId};
use crate::search::{run_search, steps_to_coverage, SearchTrace, StopRule, Strategy};

use super::{mix_seed, HarnessError};

/// Configuration of a search-table run.
#[derive(Debug, Clone)]
pub struct SearchTableConfig {
    /// Coverage fractions to report, ascending.
    pub targets: Vec<f64>,
    /// Trials per (network, strategy); sources are shared across
    /// strategies within a trial for paired comparison.
    pub trials: usize,
    pub master_seed: u64,
    /// Safety cap per run; runs hitting it count as unreached.
    pub max_steps: u64,
}

impl Default for SearchTableConfig {
    fn default() -> Self {
        SearchTableConfig {
            targets: vec![0.20, 0.35, 0.50],
            trials: 30,
            master_seed: 42,
            max_steps: 10_000_000,
        }
    }
}

/// Aggregated steps-to-coverage for one (network, strategy, target) cell.
#[derive(Debug, Clone, PartialEq)]
pub struct CellResult {
    pub network: String,
    pub strategy: Strategy,
    pub target: f64,
    /// Mean steps over trials that reached the target; `None` if none did.
    pub mean_steps: Option<f64>,
    /// Standard error of that mean (0 with fewer than two reached trials).
    pub stderr: f64,
    pub trials: usize,
    pub unreached: usize,
}

#[derive(Debug, Clone, Default)]
pub struct ExperimentReport {
    pub cells: Vec<CellResult>,
    /// Networks that failed to load, with the error text.
    pub failures: Vec<(String, String)>,
}

fn mean_and_stderr(values: &[f64]) -> (f64, f64) {
    let n = values.len() as f64;
    let mean = values.iter().sum::<f64>() / n;
    if values.len() < 2 {
        return (mean, 0.0);
    }
    let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (n - 1.0);
    (mean, (var / n).sqrt())
}

/// Draws `trials` sources uniformly from the largest connected component.
pub fn sample_sources(g: &Graph, trials: usize, seed: u64) -> Vec<NodeId> {
    let lcc = largest_connected_component(g);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..trials).map(|_| lcc[rng.gen_range(0..lcc.len())]).collect()
}

/// Runs every (strategy, trial) for one network and aggregates per-target
/// cells. Trials run in parallel; results are deterministic for a fixed
/// master seed.
pub fn run_search_table_cell(
    g: &Graph,
    network: &str,
    strategies: &[Strategy],
    cfg: &SearchTableConfig,
) -> Result<Vec<CellResult>, HarnessError> {
    if cfg.trials == 0 {
        return Err(HarnessError::Search(
            crate::search::SearchError::InvalidArgument("trials must be at least 1".into()),
        ));
    }
    let max_target = cfg
        .targets
        .iter()
        .copied()
        .fold(f64::MIN, f64::max)
        .clamp(0.0, 1.0);
    let sources = sample_sources(g, cfg.trials, mix_seed(cfg.master_seed, u64::MAX));
    let stop = StopRule::coverage(max_target).with_max_steps(cfg.max_steps);

    let jobs: Vec<(Strategy, usize)> = strategies
        .iter()
        .flat_map(|&s| (0..cfg.trials).map(move |t| (s, t)))
        .collect();
    let traces: Vec<Result<SearchTrace, HarnessError>> = jobs
        .par_iter()
        .map(|&(strategy, trial)| {
            run_search(
                g,
                strategy,
                sources[trial],
                &stop,
                mix_seed(cfg.master_seed, trial as u64),
            )
            .map_err(HarnessError::from)
        })
        .collect();

    let mut by_strategy: Vec<Vec<SearchTrace>> = vec![Vec::new(); strategies.len()];
    for ((strategy, _), trace) in jobs.iter().zip(traces) {
        let idx = strategies.iter().position(|s| s == strategy).expect("known");
        by_strategy[idx].push(trace?);
    }

    let mut cells = Vec::with_capacity(strategies.len() * cfg.targets.len());
    for (strategy, traces) in strategies.iter().zip(&by_strategy) {
        for &target in &cfg.targets {
            let mut reached: Vec<f64> = Vec::with_capacity(cfg.trials);
            let mut unreached = 0usize;
            for trace in traces {
                match steps_to_coverage(trace, target) {
                    Some(steps) => reached.push(steps as f64),
                    None => unreached += 1,
                }
            }
            let (mean_steps, stderr) = if reached.is_empty() {
                (None, 0.0)
            } else {
                let (m, se) = mean_and_stderr(&reached);
                (Some(m), se)
            };
            cells.push(CellResult {
                network: network.to_string(),
                strategy: *strategy,
                target,
                mean_steps,
                stderr,
                trials: cfg.trials,
                unreached,
            });
        }
    }
    Ok(cells)
}

impl ExperimentReport {
    /// CSV serialization:
    /// `network,strategy,target,mean_steps,stderr,trials,unreached_count`.
    pub fn write_csv<W: std::io::Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(
            w,
            "network,strategy,target,mean_steps,stderr,trials,unreached_count"
        )?;
        for c in &self.cells {
            let mean = c
                .mean_steps
                .map_or(String::new(), |m| format!("{m:.6}"));
            writeln!(
                w,
                "{},{},{:.6},{},{:.6},{},{}",
                c.network, c.strategy, c.target, mean, c.stderr, c.trials, c.unreached
            )?;
        }
        Ok(())
    }

    /// Mean steps for one cell, when present.
    pub fn mean_for(&self, network: &str, strategy: Strategy, target: f64) -> Option<f64> {
        self.cells
            .iter()
            .find(|c| c.network == network && c.strategy == strategy && c.target == target)
            .and_then(|c| c.mean_steps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate_ba;

    #[test]
    fn table_has_full_cross_product() {
        let g = generate_ba(200, 3, 1).unwrap();
        let cfg = SearchTableConfig {
            targets: vec![0.2, 0.5],
            trials: 4,
            master_seed: 7,
            max_steps: 100_000,
        };
        let cells = run_search_table_cell(&g, "ba-small", &Strategy::ALL, &cfg).unwrap();
        assert_eq!(cells.len(), 4 * 2);
        for cell in &cells {
            assert_eq!(cell.trials, 4);
            assert!(cell.mean_steps.is_some());
            assert!(cell.stderr >= 0.0);
        }
    }

    #[test]
    fn deterministic_given_master_seed() {
        let g = generate_ba(150, 2, 3).unwrap();
        let cfg = SearchTableConfig {
            targets: vec![0.35],
            trials: 3,
            master_seed: 11,
            max_steps: 100_000,
        };
        let a = run_search_table_cell(&g, "x", &[Strategy::Rw], &cfg).unwrap();
        let b = run_search_table_cell(&g, "x", &[Strategy::Rw], &cfg).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn unreachable_targets_are_counted() {
        // Two components; coverage 0.9 unreachable from the small one.
        let g = crate::graph::Graph::from_edges(10, [(0, 1), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (7, 8), (8, 9), (9, 2)])
            .unwrap();
        let cfg = SearchTableConfig {
            targets: vec![0.95],
            trials: 2,
            master_seed: 1,
            max_steps: 10_000,
        };
        let cells = run_search_table_cell(&g, "split", &[Strategy::Bfs], &cfg).unwrap();
        assert_eq!(cells[0].unreached, 2);
        assert_eq!(cells[0].mean_steps, None);
    }

    #[test]
    fn csv_formatting() {
        let report = ExperimentReport {
            cells: vec![CellResult {
                network: "x".into(),
                strategy: Strategy::Xs,
                target: 0.2,
                mean_steps: Some(12.5),
                stderr: 0.25,
                trials: 4,
                unreached: 0,
            }],
            failures: vec![],
        };
        let mut out = Vec::new();
        report.write_csv(&mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert!(text.contains("x,xs,0.200000,12.500000,0.250000,4,0"));
    }

    #[test]
    fn mean_and_stderr_basics() {
        let (m, se) = mean_and_stderr(&[2.0, 4.0, 6.0]);
        assert_eq!(m, 4.0);
        assert!((se - (4.0f64 / 3.0).sqrt()).abs() < 1e-12);
        let (m1, se1) = mean_and_stderr(&[5.0]);
        assert_eq!((m1, se1), (5.0, 0.0));
    }
}
