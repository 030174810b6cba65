use super::Graph;
use crate::error::{Error, Result};

/// Parses the edge-list text format: a first non-comment line holding `n`,
/// then one `u v` pair per line. Lines starting with `#` are ignored.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (first, header) = lines
        .next()
        .ok_or(Error::EdgeList { line: 1, message: "missing vertex count".into() })?;
    let n: usize = header.parse().map_err(|_| Error::EdgeList {
        line: first,
        message: format!("bad vertex count `{header}`"),
    })?;
    let mut edges = Vec::new();
    for (line, l) in lines {
        let mut it = l.split_whitespace();
        let parse = |tok: Option<&str>| -> Result<usize> {
            tok.and_then(|t| t.parse().ok()).ok_or_else(|| Error::EdgeList {
                line,
                message: format!("expected `u v`, found `{l}`"),
            })
        };
        let u = parse(it.next())?;
        let v = parse(it.next())?;
        if it.next().is_some() {
            return Err(Error::EdgeList { line, message: format!("trailing tokens in `{l}`") });
        }
        edges.push((u, v));
    }
    Graph::from_edges(n, &edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_write() {
        let g = parse_edge_list("# triangle\n3\n0 1\n1 2\n\n2 0\n").unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert!(matches!(parse_edge_list("3\n0 x\n"), Err(Error::EdgeList { line: 2, .. })));
        assert!(matches!(parse_edge_list("three\n"), Err(Error::EdgeList { line: 1, .. })));
        assert!(matches!(parse_edge_list("2\n0 5\n"), Err(Error::VertexOutOfRange { .. })));
    }
}
