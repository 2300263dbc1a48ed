//! Thin CLI over the `xsearch` library; all logic lives in
//! [`xsearch::harness`].

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};

use xsearch::expansion::default_fraction_grid;
use xsearch::harness::{
    cmd_fetch, cmd_greedy_vs_xs, cmd_search_table, cmd_signature, cmd_stats, CommandContext,
    NetworkSource,
};
use xsearch::search::Strategy;

#[derive(Parser)]
#[command(
    name = "xsearch",
    version,
    about = "Expansion signatures and decentralized search experiments on networks"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonArgs {
    /// Registered dataset name (repeatable): celegans, power, condmat,
    /// enron, hepph, gnutella, epinions, slashdot; `er` and `ba` pick the
    /// bundled synthetic instances.
    #[arg(long = "network")]
    networks: Vec<String>,
    /// Inline generator spec (repeatable): er:n=10000,p=0.0006 or
    /// ba:n=10000,m=3.
    #[arg(long = "generator")]
    generators: Vec<String>,
    /// Master seed for generators, trial sources, and tie-breaking.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Trials per experiment cell.
    #[arg(long, default_value_t = 30)]
    trials: usize,
    /// Dataset cache directory.
    #[arg(long, env = "XSEARCH_CACHE_DIR", default_value = ".xsearch-cache")]
    cache_dir: PathBuf,
}

impl CommonArgs {
    fn sources(&self) -> Result<Vec<NetworkSource>> {
        let mut out = Vec::new();
        for spec in self.networks.iter().chain(&self.generators) {
            out.push(
                spec.parse::<NetworkSource>()
                    .with_context(|| format!("bad network spec {spec:?}"))?,
            );
        }
        anyhow::ensure!(
            !out.is_empty(),
            "give at least one --network or --generator"
        );
        Ok(out)
    }

    fn context(&self) -> CommandContext {
        CommandContext {
            cache_dir: self.cache_dir.clone(),
            master_seed: self.seed,
            trials: self.trials,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Network statistics (nodes, density, path length, clustering,
    /// average degree) for each network.
    Stats {
        #[command(flatten)]
        common: CommonArgs,
        /// Output CSV path.
        #[arg(long)]
        out: PathBuf,
    },
    /// Expansion signature of one network over a fraction grid.
    Signature {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long)]
        out: PathBuf,
        /// Comma-separated sample-size fractions in (0, 1), ascending;
        /// defaults to 0.01..0.50 step 0.01.
        #[arg(long, value_delimiter = ',')]
        fractions: Vec<f64>,
    },
    /// Mean steps to reach coverage targets for each network x strategy.
    SearchTable {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long)]
        out: PathBuf,
        /// Strategies to run.
        #[arg(long, value_delimiter = ',', default_values = ["xs", "ds", "rw", "bfs"])]
        strategies: Vec<Strategy>,
        /// Coverage targets.
        #[arg(long, value_delimiter = ',', default_values_t = [0.20, 0.35, 0.50])]
        targets: Vec<f64>,
    },
    /// Coverage of greedy sample construction vs the XS strategy, step by
    /// step.
    GreedyVsXs {
        #[command(flatten)]
        common: CommonArgs,
        #[arg(long)]
        out: PathBuf,
        /// Number of steps / selections to compare.
        #[arg(long, default_value_t = 1000)]
        steps: usize,
    },
    /// Download datasets into the cache.
    Fetch {
        #[command(flatten)]
        common: CommonArgs,
    },
}

fn report_failures(failures: &[(String, String)]) -> bool {
    for (network, error) in failures {
        eprintln!("xsearch: {network}: {error}");
    }
    !failures.is_empty()
}

fn single_source(common: &CommonArgs) -> Result<NetworkSource> {
    let sources = common.sources()?;
    anyhow::ensure!(
        sources.len() == 1,
        "this command takes exactly one network, got {}",
        sources.len()
    );
    Ok(sources.into_iter().next().unwrap())
}

fn run() -> Result<bool> {
    match Cli::parse().command {
        Command::Stats { common, out } => {
            let outcome = cmd_stats(&common.sources()?, &common.context(), &out)?;
            for (label, stats) in &outcome.rows {
                println!(
                    "{label}: n={} density={:.6} pl={:.2} cc={:.3} ad={:.2}",
                    stats.n,
                    stats.density,
                    stats.characteristic_path_length,
                    stats.clustering_coefficient,
                    stats.avg_degree
                );
            }
            println!("wrote {}", out.display());
            Ok(report_failures(&outcome.failures))
        }
        Command::Signature {
            common,
            out,
            fractions,
        } => {
            let network = single_source(&common)?;
            let grid = if fractions.is_empty() {
                default_fraction_grid()
            } else {
                fractions
            };
            let outcome = cmd_signature(&network, &grid, &common.context(), &out)?;
            match outcome.quality_one_threshold {
                Some(f) => println!(
                    "{network}: smallest fraction with max quality 1 is {f:.6}"
                ),
                None => println!("{network}: max quality 1 not reached on the grid"),
            }
            println!("wrote {}", out.display());
            Ok(false)
        }
        Command::SearchTable {
            common,
            out,
            strategies,
            targets,
        } => {
            let report = cmd_search_table(
                &common.sources()?,
                &strategies,
                &targets,
                &common.context(),
                &out,
            )?;
            println!(
                "{} cells over {} networks; wrote {}",
                report.cells.len(),
                common.sources()?.len(),
                out.display()
            );
            Ok(report_failures(&report.failures))
        }
        Command::GreedyVsXs { common, out, steps } => {
            let network = single_source(&common)?;
            let outcome = cmd_greedy_vs_xs(&network, steps, &common.context(), &out)?;
            if let Some(gap) = outcome.final_gap() {
                println!("{network}: greedy-minus-xs coverage gap at step {steps}: {gap:.6}");
            }
            println!("wrote {}", out.display());
            Ok(false)
        }
        Command::Fetch { common } => {
            let mut names = common.networks.clone();
            if names.is_empty() {
                anyhow::bail!("give at least one --network to fetch");
            }
            names.extend(common.generators.iter().cloned());
            let (fetched, failures) = cmd_fetch(&names, &common.cache_dir);
            for (name, path) in &fetched {
                println!("{name}: cached at {}", path.display());
            }
            Ok(report_failures(&failures))
        }
    }
}

fn main() -> ExitCode {
    match run() {
        Ok(false) => ExitCode::SUCCESS,
        Ok(true) => ExitCode::FAILURE,
        Err(err) => {
            eprintln!("xsearch: {err:#}");
            ExitCode::FAILURE
        }
    }
}
