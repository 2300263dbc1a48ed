//! Edge-list ingestion and export (SNAP-compatible ASCII format).

use std::collections::HashMap;
use std::io::{BufRead, Write};

use super::{Graph, GraphError, NodeId};

/// Loads a whitespace-separated edge list, treating every link as
/// bidirectional.
///
/// Lines beginning with `#` are comments; blank lines are skipped. Raw ids
/// may be arbitrary integers and are remapped to dense ids in order of
/// first appearance. Self-loops and duplicate edges are dropped.
pub fn load_edge_list<R: BufRead>(reader: R) -> Result<Graph, GraphError> {
    let mut ids: HashMap<u64, NodeId> = HashMap::new();
    let mut edges: Vec<(NodeId, NodeId)> = Vec::new();
    let mut saw_data = false;

    for (idx, line) in reader.lines().enumerate() {
        let line_no = idx + 1;
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        saw_data = true;
        let mut tokens = trimmed.split_whitespace();
        let (a, b) = match (tokens.next(), tokens.next(), tokens.next()) {
            (Some(a), Some(b), None) => (a, b),
            _ => {
                return Err(GraphError::MalformedLine {
                    line: line_no,
                    detail: "expected exactly two node ids".into(),
                })
            }
        };
        let parse = |tok: &str| -> Result<u64, GraphError> {
            tok.parse().map_err(|_| GraphError::MalformedLine {
                line: line_no,
                detail: format!("non-integer token {tok:?}"),
            })
        };
        let (raw_u, raw_v) = (parse(a)?, parse(b)?);
        let mut intern = |raw: u64| -> NodeId {
            let next = ids.len() as NodeId;
            *ids.entry(raw).or_insert(next)
        };
        let u = intern(raw_u);
        let v = intern(raw_v);
        edges.push((u, v));
    }

    if !saw_data {
        return Err(GraphError::EmptyInput);
    }
    Graph::from_edges(ids.len(), edges)
}

/// Writes the graph as an edge list, each undirected edge once as
/// `u<TAB>v` with `u < v`, in ascending order.
pub fn write_edge_list<W: Write>(g: &Graph, mut writer: W) -> std::io::Result<()> {
    for u in g.nodes() {
        for &v in g.neighbors(u) {
            if u < v {
                writeln!(writer, "{u}\t{v}")?;
            }
        }
    }
    Ok(())
}
