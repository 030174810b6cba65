use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

const HEADER: &str = ">>graph6<<";

fn err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 { offset, message: message.into() }
}

/// Decodes one graph6 line (an optional `>>graph6<<` header and trailing
/// newline are accepted).
pub fn decode_graph6(line: &str) -> Result<Graph> {
    let trimmed = line.trim_end_matches(['\n', '\r']);
    let (base, body) = match trimmed.strip_prefix(HEADER) {
        Some(rest) => (HEADER.len(), rest.as_bytes()),
        None => (0, trimmed.as_bytes()),
    };
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(base + i, format!("byte {b:#04x} outside the printable range 63..=126")));
        }
    }
    let (n, mut pos) = match body {
        [] => return Err(err(base, "empty input")),
        [126, 126, ..] => {
            if body.len() < 8 {
                return Err(err(base + body.len(), "truncated 8-byte vertex count"));
            }
            let n = body[2..8].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, 8)
        }
        [126, ..] => {
            if body.len() < 4 {
                return Err(err(base + body.len(), "truncated 4-byte vertex count"));
            }
            let n = body[1..4].iter().fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            if n < 63 {
                return Err(err(base, format!("non-canonical long vertex count {n}")));
            }
            (n, 4)
        }
        [b, ..] => ((b - 63) as usize, 1),
    };
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
    }
    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() - pos != need {
        return Err(err(
            base + body.len().min(pos + need),
            format!("expected {need} edge bytes for n = {n}, found {}", body.len() - pos),
        ));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[pos + k / 6] - 63;
            if byte & (1 << (5 - k % 6)) != 0 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    pos += need;
    if bits % 6 != 0 {
        let last = body[pos - 1] - 63;
        let pad = 6 - bits % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(base + pos - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

/// Encodes a graph in graph6, without header or newline.
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.adjacent(i, j) as u8;
            k += 1;
            if k == 6 {
                out.push(acc + 63);
                acc = 0;
                k = 0;
            }
        }
    }
    if k > 0 {
        out.push((acc << (6 - k)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn known_strings() {
        assert_eq!(decode_graph6("Bw").unwrap(), named::complete(3));
        assert_eq!(decode_graph6("B?").unwrap(), Graph::empty(3));
        let p3 = decode_graph6("Bg").unwrap();
        assert_eq!(p3.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(encode_graph6(&p3), "Bg");
        assert_eq!(decode_graph6(">>graph6<<Bw\n").unwrap(), named::complete(3));
        assert_eq!(encode_graph6(&Graph::empty(0)), "?");
        assert_eq!(decode_graph6("?").unwrap().n(), 0);
    }

    #[test]
    fn long_vertex_count() {
        let g = named::cycle(100);
        let s = encode_graph6(&g);
        assert!(s.starts_with('~'));
        assert_eq!(decode_graph6(&s).unwrap(), g);
    }

    #[test]
    fn malformed_inputs_report_offsets() {
        match decode_graph6("B ") {
            Err(Error::Graph6 { offset: 1, .. }) => {}
            other => panic!("{other:?}"),
        }
        // three edge bits for n=3 leave three padding bits; 'x' sets one of them
        match decode_graph6("Bx") {
            Err(Error::Graph6 { offset: 1, message }) => assert!(message.contains("padding")),
            other => panic!("{other:?}"),
        }
        assert!(matches!(decode_graph6("Bww"), Err(Error::Graph6 { .. })));
        assert!(matches!(decode_graph6(""), Err(Error::Graph6 { offset: 0, .. })));
    }
}
