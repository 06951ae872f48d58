//! Edge-list and graph6 formats, and DOT export.
//!
//! The edge-list document is a header `cubmatch v1 n=<n>` followed by one
//! `u v` line per edge in edge-id order. Blank lines and lines starting with
//! `#` are ignored. Serializing and parsing reproduces the graph exactly.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Multigraph;

const HEADER: &str = "cubmatch v1 n=";

pub fn parse_edge_list(text: &str) -> Result<Multigraph> {
    let mut n = None;
    let mut edges = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line_no = i + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: String| Error::Parse {
            line: line_no,
            message,
        };
        let Some(order) = n else {
            let rest = line
                .strip_prefix(HEADER)
                .ok_or_else(|| err(format!("expected header \"{HEADER}<n>\", found {line:?}")))?;
            n = Some(
                rest.parse::<usize>()
                    .map_err(|e| err(format!("bad vertex count: {e}")))?,
            );
            continue;
        };
        let mut fields = line.split_whitespace().map(str::parse::<usize>);
        let (u, v) = match (fields.next(), fields.next(), fields.next()) {
            (Some(Ok(u)), Some(Ok(v)), None) => (u, v),
            _ => return Err(err(format!("expected \"u v\", found {line:?}"))),
        };
        if u == v {
            return Err(err(format!("loop at vertex {u}")));
        }
        if u >= order || v >= order {
            return Err(err(format!(
                "vertex {} out of range for n={order}",
                u.max(v)
            )));
        }
        edges.push((u, v));
    }
    let n = n.ok_or(Error::Parse {
        line: 1,
        message: "missing header".into(),
    })?;
    Multigraph::new(n, edges)
}

pub fn serialize_edge_list(g: &Multigraph) -> String {
    let mut out = format!("{HEADER}{}\n", g.order());
    for &(u, v) in g.edge_list() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

/// Decodes one graph6 line; an optional `>>graph6<<` header is accepted.
pub fn parse_graph6(line: &str) -> Result<Multigraph> {
    let line = line.trim();
    let body = line.strip_prefix(">>graph6<<").unwrap_or(line).as_bytes();
    if let Some(&b) = body.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!(
            "byte {b} outside the printable range"
        )));
    }
    let (n, rest) = match body {
        [] => return Err(Error::Graph6("empty string".into())),
        [126, 126, r @ ..] => (take_bits(r, 6)?, &r[6..]),
        [126, r @ ..] => (take_bits(r, 3)?, &r[3..]),
        [b, r @ ..] => ((b - 63) as usize, r),
    };
    let needed = (n * n.saturating_sub(1) / 2).div_ceil(6);
    if rest.len() != needed {
        return Err(Error::Graph6(format!(
            "expected {needed} adjacency bytes for n={n}, found {}",
            rest.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if (rest[k / 6] - 63) >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Multigraph::new(n, edges)
}

fn take_bits(bytes: &[u8], count: usize) -> Result<usize> {
    if bytes.len() < count {
        return Err(Error::Graph6("truncated vertex count".into()));
    }
    Ok(bytes[..count]
        .iter()
        .fold(0, |acc, &b| acc << 6 | (b - 63) as usize))
}

/// Encodes a simple graph; parallel edges cannot be represented and are refused.
pub fn to_graph6(g: &Multigraph) -> Result<String> {
    if !g.is_simple() {
        return Err(Error::Graph6(
            "graph6 encodes simple graphs only; this graph has parallel edges".into(),
        ));
    }
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    let push_wide = |out: &mut Vec<u8>, groups: usize| {
        for s in (0..groups).rev() {
            out.push((n >> (6 * s) & 63) as u8 + 63);
        }
    };
    match n {
        0..=62 => out.push(n as u8 + 63),
        63..=258_047 => {
            out.push(126);
            push_wide(&mut out, 3);
        }
        _ => {
            out.extend([126, 126]);
            push_wide(&mut out, 6);
        }
    }
    let mut bits = Vec::with_capacity(n * n.saturating_sub(1) / 2);
    for j in 1..n {
        for i in 0..j {
            bits.push(g.multiplicity(i, j) > 0);
        }
    }
    for chunk in bits.chunks(6) {
        let mut byte = 0u8;
        for (k, &b) in chunk.iter().enumerate() {
            byte |= (b as u8) << (5 - k);
        }
        out.push(byte + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Undirected DOT; parallel edges are drawn separately and labelled by edge id.
pub fn graph_to_dot(g: &Multigraph, name: &str) -> String {
    let mut out = format!("graph \"{name}\" {{\n");
    for v in 0..g.order() {
        let _ = writeln!(out, "  {v};");
    }
    for (e, u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v} [label=\"{}\"];", e.0);
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::canon::are_isomorphic;
    use crate::constructions::{k4, named, petersen, theta, NAMES};

    #[test]
    fn theta_document() {
        let g = parse_edge_list("cubmatch v1 n=2\n0 1\n0 1\n0 1").unwrap();
        assert_eq!(g, theta());
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_edge_list("# theta\n\ncubmatch v1 n=2\n0 1\n# middle\n1 0\n0 1\n").unwrap();
        assert_eq!(g.size(), 3);
    }

    #[test]
    fn loop_reports_line() {
        let err = parse_edge_list("cubmatch v1 n=4\n0 1\n0 0\n").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 3,
                message: "loop at vertex 0".into()
            }
        );
        assert!(matches!(
            parse_edge_list("cubmatch v1 n=2\n0 2\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("0 1\n"),
            Err(Error::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_edge_list("cubmatch v1 n=2\n0\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn fixtures_round_trip() {
        for name in NAMES {
            let g = named(name).unwrap();
            assert_eq!(
                parse_edge_list(&serialize_edge_list(&g)).unwrap(),
                g,
                "{name}"
            );
            if g.is_simple() {
                let back = parse_graph6(&to_graph6(&g).unwrap()).unwrap();
                assert!(are_isomorphic(&back, &g), "{name}");
            }
        }
    }

    #[test]
    fn graph6_known_strings() {
        assert_eq!(to_graph6(&k4()).unwrap(), "C~");
        assert!(are_isomorphic(&parse_graph6("C~").unwrap(), &k4()));
        assert!(are_isomorphic(
            &parse_graph6(">>graph6<<IheA@GUAo").unwrap(),
            &petersen()
        ));
        assert!(to_graph6(&theta()).is_err());
        assert!(parse_graph6("C").is_err());
        assert!(parse_graph6("").is_err());
    }

    #[test]
    fn dot_lists_every_edge() {
        let dot = graph_to_dot(&theta(), "theta");
        assert_eq!(dot.matches(" -- ").count(), 3);
    }
}
