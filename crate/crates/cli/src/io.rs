//! Graph input and output in graph6, edge-list and JSON form.

use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};

use clap::ValueEnum;
use clockfree::graph::{decode_graph6, encode_graph6, parse_edge_list, write_edge_list};
use clockfree::{Error, Graph, Result};
use serde_json::{json, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    G6,
    Edgelist,
    Json,
}

/// Reads `path`, or stdin for `None` and `-`.
pub fn read_text(path: Option<&Path>) -> Result<String> {
    let mut text = String::new();
    match path {
        Some(p) if p != Path::new("-") => text = fs::read_to_string(p)?,
        _ => {
            io::stdin().read_to_string(&mut text)?;
        }
    }
    Ok(text)
}

fn sniff(text: &str) -> GraphFormat {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty() && !l.starts_with('#')).unwrap_or("");
    if first.starts_with('{') || first.starts_with('[') {
        GraphFormat::Json
    } else if first.chars().all(|c| c.is_ascii_digit()) && !first.is_empty() {
        // graph6 never uses digits
        GraphFormat::Edgelist
    } else {
        GraphFormat::G6
    }
}

fn graph_from_json(v: &Value) -> Result<Graph> {
    let bad = || Error::InvalidParameter("JSON graphs look like {\"n\": 3, \"edges\": [[0, 1], [1, 2]]}".into());
    let n = v.get("n").and_then(Value::as_u64).ok_or_else(bad)? as usize;
    let mut edges = Vec::new();
    for e in v.get("edges").and_then(Value::as_array).ok_or_else(bad)? {
        match e.as_array().map(Vec::as_slice) {
            Some([a, b]) => edges.push((
                a.as_u64().ok_or_else(bad)? as usize,
                b.as_u64().ok_or_else(bad)? as usize,
            )),
            _ => return Err(bad()),
        }
    }
    Graph::from_edges(n, &edges)
}

/// Parses one or more graphs. graph6 input holds one graph per line, JSON
/// input a graph object or an array of them, edge-list input one graph.
pub fn parse_graphs(text: &str, format: Option<GraphFormat>) -> Result<Vec<Graph>> {
    let graphs = match format.unwrap_or_else(|| sniff(text)) {
        GraphFormat::G6 => text
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty())
            .map(decode_graph6)
            .collect::<Result<Vec<_>>>()?,
        GraphFormat::Edgelist => vec![parse_edge_list(text)?],
        GraphFormat::Json => match serde_json::from_str::<Value>(text)? {
            Value::Array(items) => items.iter().map(graph_from_json).collect::<Result<Vec<_>>>()?,
            v => vec![graph_from_json(&v)?],
        },
    };
    if graphs.is_empty() {
        return Err(Error::InvalidParameter("no graph in the input".into()));
    }
    Ok(graphs)
}

pub fn read_graphs(path: Option<&Path>, format: Option<GraphFormat>) -> Result<Vec<Graph>> {
    parse_graphs(&read_text(path)?, format)
}

pub fn read_one_graph(path: Option<&Path>, format: Option<GraphFormat>) -> Result<Graph> {
    let mut graphs = read_graphs(path, format)?;
    if graphs.len() != 1 {
        return Err(Error::InvalidParameter(format!("expected one graph, found {}", graphs.len())));
    }
    Ok(graphs.remove(0))
}

pub fn graph_json(g: &Graph) -> Value {
    json!({ "n": g.n(), "edges": g.edges() })
}

pub fn render_graph(g: &Graph, format: GraphFormat) -> String {
    match format {
        GraphFormat::G6 => encode_graph6(g) + "\n",
        GraphFormat::Edgelist => write_edge_list(g),
        GraphFormat::Json => graph_json(g).to_string() + "\n",
    }
}

/// Destination for the main output: a file or stdout.
pub struct Output {
    path: Option<PathBuf>,
    buf: Vec<u8>,
}

impl Output {
    pub fn new(path: Option<PathBuf>) -> Self {
        Output { path: path.filter(|p| p != Path::new("-")), buf: Vec::new() }
    }

    pub fn line(&mut self, s: impl AsRef<str>) {
        self.buf.extend_from_slice(s.as_ref().as_bytes());
        self.buf.push(b'\n');
    }

    pub fn raw(&mut self, s: impl AsRef<str>) {
        self.buf.extend_from_slice(s.as_ref().as_bytes());
    }

    pub fn finish(self) -> Result<()> {
        match self.path {
            Some(p) => fs::write(p, &self.buf)?,
            None => {
                let mut out = io::stdout().lock();
                out.write_all(&self.buf)?;
                out.flush()?;
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formats_are_sniffed() {
        assert_eq!(sniff("Bw\n"), GraphFormat::G6);
        assert_eq!(sniff("# c\n3\n0 1\n"), GraphFormat::Edgelist);
        assert_eq!(sniff("{\"n\": 2, \"edges\": []}"), GraphFormat::Json);
        let gs = parse_graphs("[{\"n\": 2, \"edges\": [[0, 1]]}, {\"n\": 1, \"edges\": []}]", None).unwrap();
        assert_eq!(gs.len(), 2);
        assert_eq!(gs[0].edge_count(), 1);
        assert!(parse_graphs("\n\n", None).is_err());
    }
}
