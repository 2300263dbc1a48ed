//! Dataset registry and cached HTTP fetching.
//!
//! Every dataset is cached as a normalized whitespace-separated edge list
//! under `<cache_dir>/<name>.edges`, whatever the upstream packaging.

use std::fs;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::time::Duration;

use flate2::read::GzDecoder;
use sha2::{Digest, Sha256};

use super::HarnessError;

/// Upstream packaging of a dataset source.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DatasetFormat {
    /// Plain whitespace-separated edge list.
    EdgeList,
    /// Gzip-compressed edge list (SNAP distribution style).
    EdgeListGz,
    /// Zip archive containing an `edges.csv` with comma-separated pairs.
    CsvZip,
}

#[derive(Debug, Clone)]
pub struct DatasetSpec {
    pub name: &'static str,
    pub url: &'static str,
    /// Expected sha256 of the normalized cached edge list, when pinned.
    pub checksum: Option<&'static str>,
    pub format: DatasetFormat,
}

/// The built-in dataset registry.
///
/// The six SNAP-hosted networks point at their public snapshots. The
/// C. elegans neural network and the western US power grid are not
/// distributed as edge lists by their original source, so they point at
/// the netzschleuder mirrors and are normalized on ingest. `netscience`
/// is an optional extra for search-trace demonstrations.
pub fn registry() -> &'static [DatasetSpec] {
    const REGISTRY: &[DatasetSpec] = &[
        DatasetSpec {
            name: "celegans",
            url: "https://networks.skewed.de/net/celegansneural/files/celegansneural.csv.zip",
            checksum: None,
            format: DatasetFormat::CsvZip,
        },
        DatasetSpec {
            name: "power",
            url: "https://networks.skewed.de/net/power/files/power.csv.zip",
            checksum: None,
            format: DatasetFormat::CsvZip,
        },
        DatasetSpec {
            name: "condmat",
            url: "https://snap.stanford.edu/data/ca-CondMat.txt.gz",
            checksum: None,
            format: DatasetFormat::EdgeListGz,
        },
        DatasetSpec {
            name: "enron",
            url: "https://snap.stanford.edu/data/email-Enron.txt.gz",
            checksum: None,
            format: DatasetFormat::EdgeListGz,
        },
        DatasetSpec {
            name: "hepph",
            url: "https://snap.stanford.edu/data/cit-HepPh.txt.gz",
            checksum: None,
            format: DatasetFormat::EdgeListGz,
        },
        DatasetSpec {
            name: "gnutella",
            url: "https://snap.stanford.edu/data/p2p-Gnutella31.txt.gz",
            checksum: None,
            format: DatasetFormat::EdgeListGz,
        },
        DatasetSpec {
            name: "epinions",
            url: "https://snap.stanford.edu/data/soc-Epinions1.txt.gz",
            checksum: None,
            format: DatasetFormat::EdgeListGz,
        },
        DatasetSpec {
            name: "slashdot",
            url: "https://snap.stanford.edu/data/soc-Slashdot0902.txt.gz",
            checksum: None,
            format: DatasetFormat::EdgeListGz,
        },
        DatasetSpec {
            name: "netscience",
            url: "https://networks.skewed.de/net/netscience/files/netscience.csv.zip",
            checksum: None,
            format: DatasetFormat::CsvZip,
        },
    ];
    REGISTRY
}

pub fn lookup(name: &str) -> Result<&'static DatasetSpec, HarnessError> {
    registry().iter().find(|d| d.name == name).ok_or_else(|| {
        let known: Vec<&str> = registry().iter().map(|d| d.name).collect();
        HarnessError::UnknownDataset(name.to_string(), known.join(", "))
    })
}

fn sha256_hex(bytes: &[u8]) -> String {
    let mut hasher = Sha256::new();
    hasher.update(bytes);
    format!("{:x}", hasher.finalize())
}

fn cache_path(spec: &DatasetSpec, cache_dir: &Path) -> PathBuf {
    cache_dir.join(format!("{}.edges", spec.name))
}

fn quarantine(path: &Path) -> PathBuf {
    let quarantined = path.with_extension("edges.quarantined");
    let _ = fs::rename(path, &quarantined);
    quarantined
}

fn verify_checksum(spec: &DatasetSpec, path: &Path) -> Result<(), HarnessError> {
    let Some(expected) = spec.checksum else {
        return Ok(());
    };
    let actual = sha256_hex(&fs::read(path)?);
    if actual == expected {
        return Ok(());
    }
    let quarantined = quarantine(path);
    Err(HarnessError::ChecksumMismatch {
        name: spec.name.to_string(),
        expected: expected.to_string(),
        actual,
        quarantine: quarantined.display().to_string(),
    })
}

fn fetch_error(spec: &DatasetSpec, detail: impl ToString) -> HarnessError {
    HarnessError::FetchFailed {
        name: spec.name.to_string(),
        url: spec.url.to_string(),
        detail: detail.to_string(),
    }
}

fn download(spec: &DatasetSpec) -> Result<Vec<u8>, HarnessError> {
    let agent = ureq::AgentBuilder::new()
        .timeout_connect(Duration::from_secs(15))
        .timeout(Duration::from_secs(300))
        .build();
    let response = agent
        .get(spec.url)
        .call()
        .map_err(|e| fetch_error(spec, e))?;
    let mut bytes = Vec::new();
    response
        .into_reader()
        .take(512 * 1024 * 1024)
        .read_to_end(&mut bytes)
        .map_err(|e| fetch_error(spec, e))?;
    Ok(bytes)
}

/// Converts comma-separated rows to whitespace-separated ones, commenting
/// out a leading header row if present.
fn normalize_csv(text: &str) -> String {
    let mut out = String::with_capacity(text.len());
    let mut first_data_line = true;
    for line in text.lines() {
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            out.push_str(line);
        } else {
            let translated = trimmed.replace(',', "\t");
            if first_data_line
                && translated
                    .split_whitespace()
                    .any(|tok| tok.parse::<u64>().is_err())
            {
                out.push_str("# ");
            }
            first_data_line = false;
            out.push_str(&translated);
        }
        out.push('\n');
    }
    out
}

fn decode(spec: &DatasetSpec, bytes: Vec<u8>) -> Result<Vec<u8>, HarnessError> {
    match spec.format {
        DatasetFormat::EdgeList => Ok(bytes),
        DatasetFormat::EdgeListGz => {
            let mut out = Vec::new();
            GzDecoder::new(bytes.as_slice())
                .read_to_end(&mut out)
                .map_err(|e| fetch_error(spec, format!("gzip decode: {e}")))?;
            Ok(out)
        }
        DatasetFormat::CsvZip => {
            let cursor = std::io::Cursor::new(bytes);
            let mut archive = zip::ZipArchive::new(cursor)
                .map_err(|e| fetch_error(spec, format!("zip open: {e}")))?;
            let entry_name = (0..archive.len())
                .filter_map(|i| archive.by_index(i).ok().map(|f| f.name().to_string()))
                .find(|n| n.ends_with("edges.csv"))
                .ok_or_else(|| fetch_error(spec, "no edges.csv entry in archive"))?;
            let mut text = String::new();
            archive
                .by_name(&entry_name)
                .map_err(|e| fetch_error(spec, format!("zip entry: {e}")))?
                .read_to_string(&mut text)
                .map_err(|e| fetch_error(spec, format!("zip read: {e}")))?;
            Ok(normalize_csv(&text).into_bytes())
        }
    }
}

/// Ensures the dataset is present in the cache, downloading and
/// normalizing it if needed, and returns the cached edge-list path.
///
/// Idempotent: a cached file with a matching checksum (or no pinned
/// checksum) is reused without network access. A checksum mismatch
/// quarantines the cache entry and reports an integrity error.
pub fn fetch_dataset(spec: &DatasetSpec, cache_dir: &Path) -> Result<PathBuf, HarnessError> {
    let path = cache_path(spec, cache_dir);
    if path.is_file() {
        verify_checksum(spec, &path)?;
        return Ok(path);
    }

    fs::create_dir_all(cache_dir)?;
    let edges = decode(spec, download(spec)?)?;
    let tmp = path.with_extension("edges.partial");
    fs::write(&tmp, &edges)?;
    fs::rename(&tmp, &path)?;
    verify_checksum(spec, &path)?;
    Ok(path)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn temp_spec(url: &'static str, checksum: Option<&'static str>) -> DatasetSpec {
        DatasetSpec {
            name: "testnet",
            url,
            checksum,
            format: DatasetFormat::EdgeList,
        }
    }

    #[test]
    fn cached_hit_with_matching_checksum_skips_network() {
        let dir = tempfile::tempdir().unwrap();
        let body = "0 1\n1 2\n";
        // sha256 of the body above
        let sum = sha256_hex(body.as_bytes());
        let sum: &'static str = Box::leak(sum.into_boxed_str());
        let spec = temp_spec("http://127.0.0.1:1/unreachable", Some(sum));
        fs::write(dir.path().join("testnet.edges"), body).unwrap();
        let path = fetch_dataset(&spec, dir.path()).unwrap();
        assert_eq!(fs::read_to_string(path).unwrap(), body);
    }

    #[test]
    fn missing_cache_with_unreachable_url_is_retriable() {
        let dir = tempfile::tempdir().unwrap();
        let spec = temp_spec("http://127.0.0.1:1/unreachable", None);
        let err = fetch_dataset(&spec, dir.path()).unwrap_err();
        match err {
            HarnessError::FetchFailed { url, .. } => {
                assert_eq!(url, "http://127.0.0.1:1/unreachable")
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn checksum_mismatch_quarantines_the_cache_entry() {
        let dir = tempfile::tempdir().unwrap();
        let spec = temp_spec("http://127.0.0.1:1/unreachable", Some("00deadbeef"));
        fs::write(dir.path().join("testnet.edges"), "0 1\n").unwrap();
        let err = fetch_dataset(&spec, dir.path()).unwrap_err();
        assert!(matches!(err, HarnessError::ChecksumMismatch { .. }));
        assert!(!dir.path().join("testnet.edges").exists());
        assert!(dir.path().join("testnet.edges.quarantined").exists());
    }

    #[test]
    fn registry_names_are_unique_and_resolvable() {
        let mut names: Vec<&str> = registry().iter().map(|d| d.name).collect();
        let total = names.len();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), total);
        assert!(lookup("gnutella").is_ok());
        assert!(lookup("does-not-exist").is_err());
    }

    #[test]
    fn csv_normalization_handles_headers_and_commas() {
        let text = "source,target\n0,1\n1,2\n# comment\n";
        let normalized = normalize_csv(text);
        let expected = "# source\ttarget\n0\t1\n1\t2\n# comment\n";
        assert_eq!(normalized, expected);
        let g = crate::graph::load_edge_list(normalized.as_bytes()).unwrap();
        assert_eq!(g.node_count(), 3);
    }

    #[test]
    fn gzip_decode_roundtrip() {
        use flate2::write::GzEncoder;
        use flate2::Compression;
        use std::io::Write;

        let mut enc = GzEncoder::new(Vec::new(), Compression::default());
        enc.write_all(b"0 1\n2 1\n").unwrap();
        let gz = enc.finish().unwrap();
        let spec = DatasetSpec {
            name: "gz",
            url: "unused",
            checksum: None,
            format: DatasetFormat::EdgeListGz,
        };
        let decoded = decode(&spec, gz).unwrap();
        assert_eq!(decoded, b"0 1\n2 1\n");
    }
}
