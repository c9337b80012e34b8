//! graph6 and DIMACS edge-list interchange.
//!
//! graph6 follows the format description shipped with nauty: a size header
//! followed by the upper triangle of the adjacency matrix, column by column
//! (`(0,1), (0,2), (1,2), (0,3), ...`), six bits per printable byte.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

const BIAS: u8 = 63;
const LONG: u8 = 126;
const HEADER: &str = ">>graph6<<";
const MAX_ORDER: usize = (1 << 36) - 1;

fn g6_err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        message: message.into(),
    }
}

/// Encodes `g` as one graph6 line (no trailing newline).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    assert!(n <= MAX_ORDER, "graph6 cannot encode {n} vertices");
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(LONG);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + BIAS));
    } else {
        out.extend([LONG, LONG]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 63) as u8 + BIAS));
    }
    let mut word = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            word = word << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(word + BIAS);
                word = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((word << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Decodes one graph6 line. A leading `>>graph6<<` and a trailing line
/// break are accepted; anything else out of place is an error carrying the
/// byte offset within `text`.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.strip_suffix('\n').unwrap_or(text);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let skip = if line.starts_with(HEADER) {
        HEADER.len()
    } else {
        0
    };
    let bytes = line.as_bytes();
    for (i, &b) in bytes.iter().enumerate().skip(skip) {
        if !(BIAS..=LONG).contains(&b) {
            return Err(g6_err(
                i,
                format!("byte 0x{b:02x} outside the graph6 alphabet"),
            ));
        }
    }
    let body = &bytes[skip..];
    let digits = |from: usize, count: usize| -> Result<usize> {
        let chunk = body
            .get(from..from + count)
            .ok_or_else(|| g6_err(skip + body.len(), "truncated size header"))?;
        Ok(chunk
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | usize::from(b - BIAS)))
    };
    let (n, header_len) = match body {
        [] => return Err(g6_err(skip, "empty graph6 string")),
        [LONG, LONG, ..] => (digits(2, 6)?, 8),
        [LONG, ..] => (digits(1, 3)?, 4),
        [b, ..] => (usize::from(b - BIAS), 1),
    };
    let canonical_header = match n {
        0..=62 => 1,
        63..=258_047 => 4,
        _ => 8,
    };
    if header_len != canonical_header {
        return Err(g6_err(
            skip,
            format!("non-canonical size header for n = {n}"),
        ));
    }
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let data = &body[header_len..];
    if data.len() != expected {
        return Err(g6_err(
            skip + header_len + data.len().min(expected),
            format!(
                "expected {expected} data bytes for n = {n}, found {}",
                data.len()
            ),
        ));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - BIAS;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if let Some(&last) = data.last() {
        let pad = expected * 6 - bits;
        if (last - BIAS) & ((1 << pad) - 1) != 0 {
            return Err(g6_err(
                skip + header_len + expected - 1,
                "nonzero padding bits",
            ));
        }
    }
    Graph::from_edges(n, edges)
}

/// `p edge n m` followed by one `e u v` line per edge, 1-indexed, `u < v`.
pub fn write_dimacs(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "p edge {} {}", g.n(), g.edge_count()).expect("writing to a String");
    for (u, v) in g.edges() {
        writeln!(out, "e {} {}", u + 1, v + 1).expect("writing to a String");
    }
    out
}

/// Parses a DIMACS edge file. Comment lines start with `c`; the problem
/// line must precede every edge and its edge count must match.
pub fn parse_dimacs(text: &str) -> Result<Graph> {
    let err = |line: usize, message: String| Error::Dimacs { line, message };
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let mut fields = raw.split_whitespace();
        let Some(tag) = fields.next() else { continue };
        let rest: Vec<&str> = fields.collect();
        let number = |s: &str| {
            s.parse::<usize>().map_err(|_| {
                err(
                    line_no,
                    format!("expected a non-negative integer, found {s:?}"),
                )
            })
        };
        match tag {
            "c" => {}
            "p" => {
                if header.is_some() {
                    return Err(err(line_no, "second problem line".into()));
                }
                match rest.as_slice() {
                    [kind, n, m] if *kind == "edge" || *kind == "col" => {
                        header = Some((number(n)?, number(m)?, line_no));
                    }
                    _ => return Err(err(line_no, "expected `p edge <n> <m>`".into())),
                }
            }
            "e" => {
                let Some((n, _, _)) = header else {
                    return Err(err(line_no, "edge before the problem line".into()));
                };
                let [u, v] = rest.as_slice() else {
                    return Err(err(line_no, "expected `e <u> <v>`".into()));
                };
                let (u, v) = (number(u)?, number(v)?);
                for w in [u, v] {
                    if w == 0 || w > n {
                        return Err(err(line_no, format!("vertex {w} outside 1..={n}")));
                    }
                }
                if u == v {
                    return Err(err(line_no, format!("loop at vertex {u}")));
                }
                let key = (u.min(v) - 1, u.max(v) - 1);
                if !seen.insert(key) {
                    return Err(err(line_no, format!("duplicate edge {u}-{v}")));
                }
                edges.push(key);
            }
            other => return Err(err(line_no, format!("unknown line type {other:?}"))),
        }
    }
    let Some((n, m, header_line)) = header else {
        return Err(err(
            text.lines().count().max(1),
            "missing problem line".into(),
        ));
    };
    if edges.len() != m {
        return Err(err(
            header_line,
            format!("problem line declares {m} edges, found {}", edges.len()),
        ));
    }
    Graph::from_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::atlas;

    #[test]
    fn graph6_small_values() {
        assert_eq!(write_graph6(&atlas::complete(4).unwrap()), "C~");
        assert_eq!(write_graph6(&Graph::empty(1)), "@");
        assert_eq!(write_graph6(&Graph::empty(0)), "?");
        assert_eq!(parse_graph6("C~\n").unwrap(), atlas::complete(4).unwrap());
        assert_eq!(
            parse_graph6(">>graph6<<C~").unwrap(),
            atlas::complete(4).unwrap()
        );
    }

    #[test]
    fn graph6_long_header() {
        let g = atlas::cycle(100).unwrap();
        let s = write_graph6(&g);
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 64, 99]);
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn graph6_errors_carry_offsets() {
        assert_eq!(
            parse_graph6("C~~"),
            Err(Error::Graph6 {
                offset: 2,
                message: "expected 1 data bytes for n = 4, found 2".into()
            })
        );
        // n = 2 has one data bit; '@' - 63 = 0b000001 sets a padding bit.
        assert!(matches!(
            parse_graph6("A@"),
            Err(Error::Graph6 { offset: 1, .. })
        ));
        assert!(matches!(
            parse_graph6("C ~"),
            Err(Error::Graph6 { offset: 1, .. })
        ));
        assert!(matches!(
            parse_graph6(""),
            Err(Error::Graph6 { offset: 0, .. })
        ));
        assert!(matches!(parse_graph6("~?"), Err(Error::Graph6 { .. })));
        // n = 5 written in the long form is not canonical.
        assert!(matches!(parse_graph6("~??D"), Err(Error::Graph6 { .. })));
    }

    #[test]
    fn dimacs_examples() {
        let g = parse_dimacs("p edge 2 1\ne 1 2\n").unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        let k4 = write_dimacs(&atlas::complete(4).unwrap());
        let mut lines = k4.lines();
        assert_eq!(lines.next(), Some("p edge 4 6"));
        assert_eq!(lines.filter(|l| l.starts_with("e ")).count(), 6);
        assert!(k4.ends_with('\n'));
        let g = parse_dimacs("c hello\n\np edge 3 2\ne 1 2\ne 3 2\n").unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn dimacs_errors_carry_lines() {
        let line_of = |text: &str| match parse_dimacs(text) {
            Err(Error::Dimacs { line, .. }) => line,
            other => panic!("expected a DIMACS error, got {other:?}"),
        };
        assert_eq!(line_of("p edge 2 1\ne 1 1\n"), 2);
        assert_eq!(line_of("e 1 2\np edge 2 1\n"), 1);
        assert_eq!(line_of("p edge 2 1\ne 1 3\n"), 2);
        assert_eq!(line_of("p edge 3 2\ne 1 2\ne 2 1\n"), 3);
        assert_eq!(line_of("p edge 3 2\ne 1 2\n"), 1);
        assert_eq!(line_of("p edge 3 x\n"), 1);
        assert_eq!(line_of("c only\n"), 1);
    }
}
