//! Command implementations behind the CLI: each writes a CSV plus a JSON
//! metadata sidecar and returns its outcome for programmatic use.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::{Path, PathBuf};
use std::time::{SystemTime, UNIX_EPOCH};

use serde::Serialize;

use crate::expansion::{build_signature, greedy_apx, ExpansionSignature, GreedyMode};
use crate::graph::{compute_stats, GraphStats};
use crate::search::{run_search, StopRule, Strategy};

use super::dataset::{fetch_dataset, lookup};
use super::experiment::{
    run_search_table_cell, sample_sources, ExperimentReport, SearchTableConfig,
};
use super::{mix_seed, HarnessError, NetworkSource};

/// BFS sources used for the sampled characteristic path length.
const PATH_LENGTH_SOURCES: usize = 200;

/// Shared command inputs.
#[derive(Debug, Clone)]
pub struct CommandContext {
    pub cache_dir: PathBuf,
    pub master_seed: u64,
    pub trials: usize,
}

impl CommandContext {
    pub fn new(cache_dir: impl Into<PathBuf>) -> Self {
        CommandContext {
            cache_dir: cache_dir.into(),
            master_seed: 42,
            trials: 30,
        }
    }

    fn resolve(&self, network: &NetworkSource) -> Result<crate::graph::Graph, HarnessError> {
        network.resolve(self.master_seed, &self.cache_dir)
    }
}

/// Reproducibility metadata written next to every CSV output.
#[derive(Debug, Clone, Serialize)]
pub struct RunMetadata {
    pub command: String,
    pub networks: Vec<String>,
    pub master_seed: u64,
    pub trials: usize,
    pub artifact_version: String,
    pub unix_timestamp: u64,
}

impl RunMetadata {
    fn new(command: &str, networks: &[NetworkSource], ctx: &CommandContext) -> Self {
        RunMetadata {
            command: command.to_string(),
            networks: networks.iter().map(NetworkSource::label).collect(),
            master_seed: ctx.master_seed,
            trials: ctx.trials,
            artifact_version: env!("CARGO_PKG_VERSION").to_string(),
            unix_timestamp: SystemTime::now()
                .duration_since(UNIX_EPOCH)
                .map_or(0, |d| d.as_secs()),
        }
    }

    fn write_sidecar(&self, out: &Path) -> Result<(), HarnessError> {
        let mut name = out.file_name().unwrap_or_default().to_os_string();
        name.push(".meta.json");
        let sidecar = out.with_file_name(name);
        let file = File::create(sidecar)?;
        serde_json::to_writer_pretty(BufWriter::new(file), self)
            .map_err(|e| HarnessError::Io(e.into()))?;
        Ok(())
    }
}

fn create_out(out: &Path) -> Result<BufWriter<File>, HarnessError> {
    if let Some(parent) = out.parent() {
        if !parent.as_os_str().is_empty() {
            std::fs::create_dir_all(parent)?;
        }
    }
    Ok(BufWriter::new(File::create(out)?))
}

/// Table-1-style statistics for each network.
#[derive(Debug, Default)]
pub struct StatsOutcome {
    pub rows: Vec<(String, GraphStats)>,
    pub failures: Vec<(String, String)>,
}

pub fn cmd_stats(
    networks: &[NetworkSource],
    ctx: &CommandContext,
    out: &Path,
) -> Result<StatsOutcome, HarnessError> {
    let mut outcome = StatsOutcome::default();
    for network in networks {
        let label = network.label();
        let stats = ctx.resolve(network).and_then(|g| {
            compute_stats(&g, PATH_LENGTH_SOURCES, mix_seed(ctx.master_seed, 0))
                .map_err(HarnessError::from)
        });
        match stats {
            Ok(stats) => outcome.rows.push((label, stats)),
            Err(err) => outcome.failures.push((label, err.to_string())),
        }
    }

    let mut w = create_out(out)?;
    writeln!(
        w,
        "network,n,density,path_length,clustering_coefficient,avg_degree"
    )?;
    for (label, s) in &outcome.rows {
        writeln!(
            w,
            "{},{},{:.6},{:.6},{:.6},{:.6}",
            label, s.n, s.density, s.characteristic_path_length, s.clustering_coefficient,
            s.avg_degree
        )?;
    }
    w.flush()?;
    RunMetadata::new("stats", networks, ctx).write_sidecar(out)?;
    Ok(outcome)
}

/// Signature CSV plus the smallest fraction reaching quality 1 on the grid.
#[derive(Debug)]
pub struct SignatureOutcome {
    pub signature: ExpansionSignature,
    pub quality_one_threshold: Option<f64>,
}

pub fn cmd_signature(
    network: &NetworkSource,
    fractions: &[f64],
    ctx: &CommandContext,
    out: &Path,
) -> Result<SignatureOutcome, HarnessError> {
    let g = ctx.resolve(network)?;
    let signature = build_signature(&g, &network.label(), fractions)?;
    let mut w = create_out(out)?;
    signature.write_csv(&mut w)?;
    w.flush()?;
    RunMetadata::new("signature", std::slice::from_ref(network), ctx).write_sidecar(out)?;
    Ok(SignatureOutcome {
        quality_one_threshold: signature.quality_one_threshold(),
        signature,
    })
}

pub fn cmd_search_table(
    networks: &[NetworkSource],
    strategies: &[Strategy],
    targets: &[f64],
    ctx: &CommandContext,
    out: &Path,
) -> Result<ExperimentReport, HarnessError> {
    let cfg = SearchTableConfig {
        targets: targets.to_vec(),
        trials: ctx.trials,
        master_seed: ctx.master_seed,
        ..SearchTableConfig::default()
    };
    let mut report = ExperimentReport::default();
    for network in networks {
        let label = network.label();
        match ctx.resolve(network) {
            Ok(g) => {
                let cells = run_search_table_cell(&g, &label, strategies, &cfg)?;
                report.cells.extend(cells);
            }
            Err(err) => report.failures.push((label, err.to_string())),
        }
    }

    let mut w = create_out(out)?;
    report.write_csv(&mut w)?;
    w.flush()?;
    RunMetadata::new("search-table", networks, ctx).write_sidecar(out)?;
    Ok(report)
}

/// Paired coverage curves: greedy selections vs mean XS steps.
#[derive(Debug)]
pub struct GreedyVsXsOutcome {
    /// (i, greedy coverage after i selections, mean XS coverage after i steps).
    pub rows: Vec<(usize, f64, f64)>,
}

impl GreedyVsXsOutcome {
    pub fn final_gap(&self) -> Option<f64> {
        self.rows.last().map(|(_, g, x)| g - x)
    }
}

pub fn cmd_greedy_vs_xs(
    network: &NetworkSource,
    steps: usize,
    ctx: &CommandContext,
    out: &Path,
) -> Result<GreedyVsXsOutcome, HarnessError> {
    let g = ctx.resolve(network)?;
    let n = g.node_count();
    let k = steps.min(n.saturating_sub(1)).max(1);
    let greedy = greedy_apx(&g, k, GreedyMode::Maximize)?;

    let sources = sample_sources(&g, ctx.trials, mix_seed(ctx.master_seed, u64::MAX));
    let stop = StopRule::coverage(1.0).with_max_steps(steps as u64);
    let mut traces = Vec::with_capacity(ctx.trials);
    for (trial, &source) in sources.iter().enumerate() {
        traces.push(run_search(
            &g,
            Strategy::Xs,
            source,
            &stop,
            mix_seed(ctx.master_seed, trial as u64),
        )?);
    }

    let mut rows = Vec::with_capacity(steps);
    for i in 1..=steps {
        let greedy_cov = greedy.trajectory[(i - 1).min(k - 1)].covered as f64 / n as f64;
        let xs_mean = traces
            .iter()
            .map(|t| t.coverage_at_step(i as u64))
            .sum::<f64>()
            / traces.len() as f64;
        rows.push((i, greedy_cov, xs_mean));
    }

    let mut w = create_out(out)?;
    writeln!(w, "i,greedy_coverage,xs_mean_coverage")?;
    for (i, greedy_cov, xs_mean) in &rows {
        writeln!(w, "{i},{greedy_cov:.6},{xs_mean:.6}")?;
    }
    w.flush()?;
    RunMetadata::new("greedy-vs-xs", std::slice::from_ref(network), ctx).write_sidecar(out)?;
    Ok(GreedyVsXsOutcome { rows })
}

/// Fetches datasets into the cache; returns per-dataset outcomes.
pub fn cmd_fetch(
    names: &[String],
    cache_dir: &Path,
) -> (Vec<(String, PathBuf)>, Vec<(String, String)>) {
    let mut fetched = Vec::new();
    let mut failures = Vec::new();
    for name in names {
        match lookup(name).and_then(|spec| fetch_dataset(spec, cache_dir)) {
            Ok(path) => fetched.push((name.clone(), path)),
            Err(err) => failures.push((name.clone(), err.to_string())),
        }
    }
    (fetched, failures)
}
