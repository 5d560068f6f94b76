//! Text formats: the native edge-list format (bit-exact round-trips) and
//! graph6 ingestion for importing simple graphs from standard tooling.

use crate::graph::{GraphError, MultiGraph, VertexId};
use std::fs;
use std::path::Path;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    EdgeList,
    Graph6,
}

impl Format {
    pub fn by_name(name: &str) -> Result<Format, IoError> {
        match name.to_ascii_uppercase().as_str() {
            "EDGELIST" => Ok(Format::EdgeList),
            "GRAPH6" => Ok(Format::Graph6),
            other => Err(IoError::Parse {
                line: 0,
                msg: format!("unknown format {other:?}; expected EDGELIST or GRAPH6"),
            }),
        }
    }
}

pub fn read_graph(path: &Path, format: Format) -> Result<MultiGraph, IoError> {
    let text = fs::read_to_string(path)?;
    match format {
        Format::EdgeList => parse_edge_list(&text),
        Format::Graph6 => parse_graph6(text.trim()),
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> IoError {
    IoError::Parse {
        line,
        msg: msg.into(),
    }
}

/// Lines that carry content: 1-based line number plus the trimmed text.
/// '#' comments and blank lines are skipped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_pair(line: usize, text: &str) -> Result<(usize, usize), IoError> {
    let mut it = text.split_whitespace();
    let a = it
        .next()
        .ok_or_else(|| parse_err(line, "expected two integers"))?;
    let b = it
        .next()
        .ok_or_else(|| parse_err(line, "expected two integers"))?;
    if it.next().is_some() {
        return Err(parse_err(
            line,
            format!("trailing tokens after {a:?} {b:?}"),
        ));
    }
    let a = a
        .parse()
        .map_err(|_| parse_err(line, format!("bad integer {a:?}")))?;
    let b = b
        .parse()
        .map_err(|_| parse_err(line, format!("bad integer {b:?}")))?;
    Ok((a, b))
}

/// One record: header "n m", then m lines "u v".
pub fn parse_edge_list(text: &str) -> Result<MultiGraph, IoError> {
    let mut lines = content_lines(text);
    let g = parse_record(&mut lines)?;
    if let Some((line, _)) = lines.next() {
        return Err(parse_err(line, "trailing content after the edge list"));
    }
    Ok(g)
}

/// A concatenated stream of records; comments may separate them.
pub fn parse_edge_list_many(text: &str) -> Result<Vec<MultiGraph>, IoError> {
    let mut lines = content_lines(text).peekable();
    let mut out = Vec::new();
    while lines.peek().is_some() {
        out.push(parse_record(&mut lines)?);
    }
    Ok(out)
}

fn parse_record<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
) -> Result<MultiGraph, IoError> {
    let (header_line, header) = lines
        .next()
        .ok_or_else(|| parse_err(0, "empty input; expected an \"n m\" header"))?;
    let (n, m) = parse_pair(header_line, header)?;
    let mut edges: Vec<(VertexId, VertexId)> = Vec::with_capacity(m);
    let mut edge_lines: Vec<usize> = Vec::with_capacity(m);
    for k in 0..m {
        let (line, text) = lines.next().ok_or_else(|| {
            parse_err(header_line, format!("header promises {m} edges, found {k}"))
        })?;
        edges.push(parse_pair(line, text)?);
        edge_lines.push(line);
    }
    MultiGraph::build(n, &edges).map_err(|e| match e {
        GraphError::Loop { index, vertex } => parse_err(
            edge_lines[index],
            format!("edge {index} is a loop at vertex {vertex}"),
        ),
        GraphError::EndpointOutOfRange { index, endpoint, n } => parse_err(
            edge_lines[index],
            format!("edge {index} endpoint {endpoint} is out of range for n = {n}"),
        ),
        other => IoError::Graph(other),
    })
}

/// Canonical edge list: header, then edges sorted by (min, max) endpoints.
/// Parallel edges appear as repeated lines.
pub fn write_edge_list(g: &MultiGraph) -> String {
    let mut edges: Vec<(VertexId, VertexId)> = g.edges().to_vec();
    edges.sort_unstable();
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// graph6 decoding (ingestion only). Simple graphs only by construction,
/// so the result never has parallel edges.
pub fn parse_graph6(text: &str) -> Result<MultiGraph, IoError> {
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.trim().as_bytes();
    if bytes.is_empty() {
        return Err(parse_err(1, "empty graph6 input"));
    }
    let check = |b: u8, at: usize| -> Result<u64, IoError> {
        if (63..=126).contains(&b) {
            Ok(u64::from(b - 63))
        } else {
            Err(parse_err(
                1,
                format!("byte {at}: {b} outside graph6 range 63..=126"),
            ))
        }
    };
    let (n, mut pos) = if bytes[0] == 126 {
        if bytes.len() < 4 || bytes[1] == 126 {
            return Err(parse_err(1, "unsupported graph6 size prefix (n ≥ 2^18)"));
        }
        let n = (check(bytes[1], 1)? << 12) | (check(bytes[2], 2)? << 6) | check(bytes[3], 3)?;
        (n as usize, 4)
    } else {
        (check(bytes[0], 0)? as usize, 1)
    };
    let bit_count = n * n.saturating_sub(1) / 2;
    let byte_count = bit_count.div_ceil(6);
    if bytes.len() != pos + byte_count {
        return Err(parse_err(
            1,
            format!(
                "graph6 body for n = {n} needs {byte_count} bytes, found {}",
                bytes.len() - pos
            ),
        ));
    }
    let mut edges: Vec<(VertexId, VertexId)> = Vec::new();
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let group = check(bytes[pos], pos)?;
            if group >> (5 - bit) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
            if bit == 6 {
                bit = 0;
                pos += 1;
            }
        }
    }
    Ok(MultiGraph::build(n, &edges)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon;
    use crate::iso::are_isomorphic;

    /// Reference encoder used only to cross-check the decoder.
    fn encode_graph6(g: &MultiGraph) -> String {
        let n = g.vertex_count();
        assert!(n < 63, "test encoder handles the short form only");
        let mut bits: Vec<bool> = Vec::new();
        for j in 1..n {
            for i in 0..j {
                bits.push(g.multiplicity(i, j) > 0);
            }
        }
        let mut out = String::new();
        out.push((63 + n as u8) as char);
        for chunk in bits.chunks(6) {
            let mut v = 0u8;
            for (k, &b) in chunk.iter().enumerate() {
                if b {
                    v |= 1 << (5 - k);
                }
            }
            out.push((63 + v) as char);
        }
        out
    }

    #[test]
    fn triple_edge_parses() {
        let g = parse_edge_list("2 3\n0 1\n0 1\n0 1").unwrap();
        assert!(are_isomorphic(&g, &canon::theta()));
        assert_eq!(g.multiplicity(0, 1), 3);
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let g = parse_edge_list("# a theta\n\n2 3\n0 1\n# middle\n0 1\n0 1\n# end\n").unwrap();
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn loops_are_reported_with_their_line() {
        let err = parse_edge_list("2 1\n0 0").unwrap_err();
        match err {
            IoError::Parse { line, msg } => {
                assert_eq!(line, 2);
                assert!(msg.contains("loop"), "{msg}");
            }
            other => panic!("expected a parse error, got {other:?}"),
        }
    }

    #[test]
    fn truncated_and_trailing_inputs_are_rejected() {
        assert!(parse_edge_list("2 3\n0 1\n0 1").is_err());
        assert!(parse_edge_list("2 1\n0 1\n0 1").is_err());
        assert!(parse_edge_list("2 x\n0 1").is_err());
        assert!(parse_edge_list("").is_err());
    }

    #[test]
    fn record_streams_parse_in_order() {
        let text = format!(
            "# first\n{}# second\n{}",
            write_edge_list(&canon::theta()),
            write_edge_list(&canon::k4())
        );
        let graphs = parse_edge_list_many(&text).unwrap();
        assert_eq!(graphs.len(), 2);
        assert!(are_isomorphic(&graphs[0], &canon::theta()));
        assert!(are_isomorphic(&graphs[1], &canon::k4()));
    }

    #[test]
    fn round_trips_are_bit_exact() {
        for g in [
            canon::theta(),
            canon::k4(),
            canon::k33(),
            canon::petersen(),
            canon::tight_pair(),
        ] {
            let text = write_edge_list(&g);
            let back = parse_edge_list(&text).unwrap();
            assert_eq!(write_edge_list(&back), text);
            assert!(are_isomorphic(&back, &g));
        }
        // The pair gadget keeps both parallel classes through the trip.
        let back = parse_edge_list(&write_edge_list(&canon::tight_pair())).unwrap();
        assert_eq!(back.multiplicity(0, 1), 2);
        assert_eq!(back.multiplicity(3, 4), 2);
    }

    #[test]
    fn graph6_k4_decodes() {
        let g = parse_graph6("C~").unwrap();
        assert!(are_isomorphic(&g, &canon::k4()));
        let g = parse_graph6(">>graph6<<C~").unwrap();
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn graph6_matches_the_reference_encoder() {
        for g in [canon::k4(), canon::k33(), canon::petersen()] {
            let decoded = parse_graph6(&encode_graph6(&g)).unwrap();
            assert_eq!(write_edge_list(&decoded), write_edge_list(&g));
        }
    }

    #[test]
    fn graph6_rejects_malformed_bodies() {
        assert!(parse_graph6("").is_err());
        assert!(parse_graph6("C").is_err());
        assert!(parse_graph6("C~~").is_err());
        assert!(parse_graph6("C\x1f").is_err());
    }
}
