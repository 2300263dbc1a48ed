//! Network references: registered datasets or inline generator specs.

use std::path::Path;
use std::str::FromStr;

use crate::graph::{generate_ba, generate_er, load_edge_list, Graph};

use super::dataset::{fetch_dataset, lookup};
use super::HarnessError;

/// Where a network comes from: a registered dataset or a synthetic
/// generator with inline parameters (`er:n=10000,p=0.0006`,
/// `ba:n=10000,m=3`).
///
/// The bare names `er` and `ba` resolve to the 10,000-node instances with
/// average degree 6 used throughout the bundled experiments.
#[derive(Debug, Clone, PartialEq)]
pub enum NetworkSource {
    Dataset(String),
    Er { n: usize, p: f64 },
    Ba { n: usize, m: usize },
}

fn parse_params<'a>(
    spec: &str,
    body: &'a str,
    expected: &[&str],
) -> Result<Vec<(&'a str, &'a str)>, HarnessError> {
    let mut out = Vec::new();
    for piece in body.split(',') {
        let (key, value) = piece.split_once('=').ok_or_else(|| {
            HarnessError::BadNetworkSpec(spec.to_string(), format!("expected key=value, got {piece:?}"))
        })?;
        if !expected.contains(&key) {
            return Err(HarnessError::BadNetworkSpec(
                spec.to_string(),
                format!("unknown parameter {key:?}, expected {expected:?}"),
            ));
        }
        out.push((key, value));
    }
    for want in expected {
        if !out.iter().any(|(k, _)| k == want) {
            return Err(HarnessError::BadNetworkSpec(
                spec.to_string(),
                format!("missing parameter {want:?}"),
            ));
        }
    }
    Ok(out)
}

fn parse_value<T: FromStr>(spec: &str, key: &str, value: &str) -> Result<T, HarnessError> {
    value.parse().map_err(|_| {
        HarnessError::BadNetworkSpec(spec.to_string(), format!("cannot parse {key}={value:?}"))
    })
}

impl FromStr for NetworkSource {
    type Err = HarnessError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some(body) = s.strip_prefix("er:") {
            let mut n = 0usize;
            let mut p = 0f64;
            for (key, value) in parse_params(s, body, &["n", "p"])? {
                match key {
                    "n" => n = parse_value(s, key, value)?,
                    _ => p = parse_value(s, key, value)?,
                }
            }
            return Ok(NetworkSource::Er { n, p });
        }
        if let Some(body) = s.strip_prefix("ba:") {
            let mut n = 0usize;
            let mut m = 0usize;
            for (key, value) in parse_params(s, body, &["n", "m"])? {
                match key {
                    "n" => n = parse_value(s, key, value)?,
                    _ => m = parse_value(s, key, value)?,
                }
            }
            return Ok(NetworkSource::Ba { n, m });
        }
        match s {
            "er" => Ok(NetworkSource::Er { n: 10_000, p: 0.0006 }),
            "ba" => Ok(NetworkSource::Ba { n: 10_000, m: 3 }),
            name if !name.is_empty() && !name.contains(':') => {
                Ok(NetworkSource::Dataset(name.to_string()))
            }
            other => Err(HarnessError::BadNetworkSpec(
                other.to_string(),
                "expected a dataset name, er:n=..,p=.. or ba:n=..,m=..".into(),
            )),
        }
    }
}

impl NetworkSource {
    /// Stable CSV-safe label for reports.
    pub fn label(&self) -> String {
        match self {
            NetworkSource::Dataset(name) => name.clone(),
            NetworkSource::Er { n, p } => format!("er_n{n}_p{p}"),
            NetworkSource::Ba { n, m } => format!("ba_n{n}_m{m}"),
        }
    }

    /// Loads or generates the graph. Generators use `seed` directly;
    /// datasets are fetched through the cache.
    pub fn resolve(&self, seed: u64, cache_dir: &Path) -> Result<Graph, HarnessError> {
        match self {
            NetworkSource::Dataset(name) => {
                let spec = lookup(name)?;
                let path = fetch_dataset(spec, cache_dir)?;
                let file = std::fs::File::open(path)?;
                Ok(load_edge_list(std::io::BufReader::new(file))?)
            }
            NetworkSource::Er { n, p } => Ok(generate_er(*n, *p, seed)?),
            NetworkSource::Ba { n, m } => Ok(generate_ba(*n, *m, seed)?),
        }
    }
}

impl std::fmt::Display for NetworkSource {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.label())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_generator_specs() {
        assert_eq!(
            "er:n=500,p=0.01".parse::<NetworkSource>().unwrap(),
            NetworkSource::Er { n: 500, p: 0.01 }
        );
        assert_eq!(
            "ba:n=200,m=3".parse::<NetworkSource>().unwrap(),
            NetworkSource::Ba { n: 200, m: 3 }
        );
        assert_eq!(
            "gnutella".parse::<NetworkSource>().unwrap(),
            NetworkSource::Dataset("gnutella".into())
        );
    }

    #[test]
    fn bare_synthetic_names_use_paper_scale_defaults() {
        assert_eq!(
            "er".parse::<NetworkSource>().unwrap(),
            NetworkSource::Er { n: 10_000, p: 0.0006 }
        );
        assert_eq!(
            "ba".parse::<NetworkSource>().unwrap(),
            NetworkSource::Ba { n: 10_000, m: 3 }
        );
    }

    #[test]
    fn rejects_malformed_specs() {
        assert!("er:n=500".parse::<NetworkSource>().is_err());
        assert!("er:n=500,q=0.1".parse::<NetworkSource>().is_err());
        assert!("ba:n=x,m=3".parse::<NetworkSource>().is_err());
        assert!("zz:n=1".parse::<NetworkSource>().is_err());
    }

    #[test]
    fn labels_are_csv_safe() {
        for spec in ["er:n=500,p=0.01", "ba:n=200,m=3", "power"] {
            let label = spec.parse::<NetworkSource>().unwrap().label();
            assert!(!label.contains(','), "label {label} unsafe");
        }
    }

    #[test]
    fn generators_resolve_deterministically() {
        let src: NetworkSource = "er:n=100,p=0.05".parse().unwrap();
        let dir = std::env::temp_dir();
        let a = src.resolve(7, &dir).unwrap();
        let b = src.resolve(7, &dir).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn unknown_dataset_is_reported() {
        let src: NetworkSource = "nosuch".parse().unwrap();
        let err = src.resolve(0, &std::env::temp_dir()).unwrap_err();
        assert!(matches!(err, HarnessError::UnknownDataset(..)));
    }
}
