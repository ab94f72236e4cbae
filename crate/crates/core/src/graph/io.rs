use std::collections::HashMap;
use std::io::{BufRead, Write};

use super::{Graph, Vertex};
use crate::{Error, Result};

/// A graph together with the original label of every vertex.
#[derive(Clone, Debug)]
pub struct LabeledGraph {
    pub graph: Graph,
    pub labels: Vec<String>,
}

impl LabeledGraph {
    /// Labels a generated graph with its own vertex ids.
    pub fn from_ids(graph: Graph) -> Self {
        let labels = graph.vertices().map(|v| v.to_string()).collect();
        Self { graph, labels }
    }

    pub fn label(&self, v: Vertex) -> &str {
        &self.labels[v as usize]
    }

    /// Restricts to the vertices in `map` (new id -> id in `self`).
    pub fn relabel(&self, graph: Graph, map: &[Vertex]) -> Self {
        let labels = map
            .iter()
            .map(|&v| self.labels[v as usize].clone())
            .collect();
        Self { graph, labels }
    }
}

/// Reads a whitespace-separated edge list. Lines starting with `#` or `%`
/// and blank lines are skipped. Labels are numbered in order of first
/// appearance; direction, self-loops and repeated edges are discarded.
pub fn parse_edge_list<R: BufRead>(reader: R) -> Result<LabeledGraph> {
    let mut ids: HashMap<String, Vertex> = HashMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut edges = Vec::new();

    let mut intern = |label: &str, labels: &mut Vec<String>| -> Vertex {
        if let Some(&id) = ids.get(label) {
            return id;
        }
        let id = labels.len() as Vertex;
        ids.insert(label.to_owned(), id);
        labels.push(label.to_owned());
        id
    };

    for (idx, line) in reader.lines().enumerate() {
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') || trimmed.starts_with('%') {
            continue;
        }
        let mut tokens = trimmed.split_whitespace();
        match (tokens.next(), tokens.next(), tokens.next()) {
            (Some(a), Some(b), None) => {
                let u = intern(a, &mut labels);
                let v = intern(b, &mut labels);
                edges.push((u, v));
            }
            _ => {
                return Err(Error::Parse {
                    line: idx + 1,
                    msg: format!("expected two vertex labels, got {trimmed:?}"),
                })
            }
        }
    }
    if labels.is_empty() {
        return Err(Error::EmptyInput);
    }
    let graph = Graph::from_edges(labels.len(), edges)?;
    Ok(LabeledGraph { graph, labels })
}

/// Writes one `u v` line per edge, using the graph's labels.
pub fn write_edge_list<W: Write>(lg: &LabeledGraph, mut out: W) -> std::io::Result<()> {
    for (u, v) in lg.graph.edges() {
        writeln!(out, "{} {}", lg.label(u), lg.label(v))?;
    }
    Ok(())
}
