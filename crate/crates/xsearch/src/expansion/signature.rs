//! Expansion signatures: greedy-max and greedy-min quality curves over
//! increasing sample sizes.

use std::io::Write;

use crate::graph::Graph;
use crate::ratio::Ratio;

use super::{greedy_apx, ExpansionError, GreedyMode};

/// One sample size on the signature: qualities and expansions of the
/// greedy-max and greedy-min samples of size `k`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SignaturePoint {
    pub k: usize,
    /// k / |V|.
    pub fraction: f64,
    pub max_expansion: Ratio,
    pub max_quality: Ratio,
    pub min_expansion: Ratio,
    pub min_quality: Ratio,
}

#[derive(Debug, Clone)]
pub struct ExpansionSignature {
    pub graph_id: String,
    pub points: Vec<SignaturePoint>,
}

impl ExpansionSignature {
    /// Smallest fraction whose greedy-max quality reaches 1, if any point
    /// on the grid does.
    pub fn quality_one_threshold(&self) -> Option<f64> {
        self.points
            .iter()
            .find(|p| p.max_quality.is_one())
            .map(|p| p.fraction)
    }

    /// Checks the signature invariants: strictly increasing sample sizes,
    /// qualities in [0, 1] with max >= min, and max quality non-decreasing.
    pub fn validate(&self) -> Result<(), ExpansionError> {
        let fail = |msg: String| Err(ExpansionError::SignatureInvariant(msg));
        for pair in self.points.windows(2) {
            if pair[1].k <= pair[0].k {
                return fail(format!("ks not strictly increasing at k={}", pair[1].k));
            }
            if pair[1].max_quality < pair[0].max_quality {
                return fail(format!(
                    "max quality dropped from {} to {} at k={}",
                    pair[0].max_quality, pair[1].max_quality, pair[1].k
                ));
            }
        }
        for p in &self.points {
            let unit = |r: Ratio| r.numer <= r.denom;
            if !unit(p.max_quality) || !unit(p.min_quality) || p.max_quality < p.min_quality {
                return fail(format!("qualities out of range at k={}", p.k));
            }
        }
        Ok(())
    }

    /// CSV serialization: one row per point, floats with six decimals.
    pub fn write_csv<W: Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(
            w,
            "k,fraction,max_expansion,max_quality,min_expansion,min_quality"
        )?;
        for p in &self.points {
            writeln!(
                w,
                "{},{:.6},{:.6},{:.6},{:.6},{:.6}",
                p.k,
                p.fraction,
                p.max_expansion.to_f64(),
                p.max_quality.to_f64(),
                p.min_expansion.to_f64(),
                p.min_quality.to_f64()
            )?;
        }
        Ok(())
    }
}

/// The default signature grid: fractions 0.01 through 0.50 in steps of 0.01.
pub fn default_fraction_grid() -> Vec<f64> {
    (1..=50).map(|i| i as f64 / 100.0).collect()
}

/// Builds the expansion signature of `g` at the given sample-size
/// fractions (each must lie in (0, 1), sorted strictly ascending).
///
/// Runs greedy-max and greedy-min once to the largest requested size and
/// reads every point off those trajectories.
pub fn build_signature(
    g: &Graph,
    graph_id: &str,
    fractions: &[f64],
) -> Result<ExpansionSignature, ExpansionError> {
    if fractions.is_empty() {
        return Err(ExpansionError::EmptyFractions);
    }
    if fractions.iter().any(|f| !(*f > 0.0 && *f < 1.0))
        || fractions.windows(2).any(|p| p[0] >= p[1])
    {
        return Err(ExpansionError::InvalidFractions);
    }
    let n = g.node_count();
    let mut ks: Vec<usize> = fractions
        .iter()
        .map(|f| ((f * n as f64).ceil() as usize).clamp(1, n.saturating_sub(1)))
        .collect();
    ks.dedup();

    let k_max = *ks.last().expect("nonempty");
    let max_run = greedy_apx(g, k_max, GreedyMode::Maximize)?;
    let min_run = greedy_apx(g, k_max, GreedyMode::Minimize)?;

    let points = ks
        .into_iter()
        .map(|k| {
            let hi = &max_run.trajectory[k - 1];
            let lo = &min_run.trajectory[k - 1];
            SignaturePoint {
                k,
                fraction: k as f64 / n as f64,
                max_expansion: hi.expansion,
                max_quality: hi.quality,
                min_expansion: lo.expansion,
                min_quality: lo.quality,
            }
        })
        .collect();

    Ok(ExpansionSignature {
        graph_id: graph_id.to_string(),
        points,
    })
}
