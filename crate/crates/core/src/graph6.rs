//! graph6 records: 6 bits per byte, offset 63, upper triangle in
//! column order x(0,1), x(0,2), x(1,2), x(0,3), ...

use crate::graph::{Graph, GraphError, MAX_VERTICES};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 record")]
    EmptyRecord,
    #[error("sparse6 record (':' header at byte {offset}) is not supported; supply graph6")]
    Sparse6 { offset: usize },
    #[error("directed-graph record ('&' header at byte {offset}) is not supported")]
    Digraph { offset: usize },
    #[error("malformed length header at byte {offset}: {reason}")]
    BadHeader { offset: usize, reason: String },
    #[error("byte {value:#x} at offset {offset} outside graph6 range 63..=126")]
    OutOfRangeByte { offset: usize, value: u8 },
    #[error(
        "truncated bit payload: record ends at byte {offset}, expected {expected} payload bytes"
    )]
    Truncated { offset: usize, expected: usize },
    #[error("trailing data at byte {offset} beyond the bit payload")]
    TrailingData { offset: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

const OPTIONAL_PREFIX: &[u8] = b">>graph6<<";

fn sextet(bytes: &[u8], offset: usize) -> Result<u64, Graph6Error> {
    match bytes.get(offset) {
        None => Err(Graph6Error::BadHeader {
            offset,
            reason: "record ends inside the length header".into(),
        }),
        Some(&b) if !(63..=126).contains(&b) => {
            Err(Graph6Error::OutOfRangeByte { offset, value: b })
        }
        Some(&b) => Ok((b - 63) as u64),
    }
}

/// Reads the length header, returning `(n, payload_start)`.
fn parse_order(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let first = *bytes.first().ok_or(Graph6Error::EmptyRecord)?;
    if first == b':' {
        return Err(Graph6Error::Sparse6 { offset: 0 });
    }
    if first == b'&' {
        return Err(Graph6Error::Digraph { offset: 0 });
    }
    if first != 126 {
        return Ok((sextet(bytes, 0)? as usize, 1));
    }
    // '~' escape: 3-sextet order, '~~' escape: 6-sextet order.
    let (fields, start) = if bytes.get(1) == Some(&126) {
        (6, 2)
    } else {
        (3, 1)
    };
    let mut n: u64 = 0;
    for k in 0..fields {
        n = (n << 6) | sextet(bytes, start + k)?;
    }
    if n > MAX_VERTICES as u64 {
        return Err(Graph6Error::Graph(GraphError::TooLarge { n: n as usize }));
    }
    Ok((n as usize, start + fields))
}

/// Parses a single graph6 record (one line, no trailing newline).
///
/// The optional `>>graph6<<` prefix emitted by some tools is accepted and
/// stripped; sparse6 and digraph6 headers are rejected.
pub fn parse_graph6(line: &[u8]) -> Result<Graph, Graph6Error> {
    let bytes = line.strip_prefix(OPTIONAL_PREFIX).unwrap_or(line);
    let (n, payload_start) = parse_order(bytes)?;
    if n == 0 {
        return Err(Graph6Error::Graph(GraphError::Empty));
    }
    let pairs = n * (n - 1) / 2;
    let payload_bytes = pairs.div_ceil(6);
    let available = bytes.len() - payload_start;
    if available < payload_bytes {
        return Err(Graph6Error::Truncated {
            offset: bytes.len(),
            expected: payload_bytes,
        });
    }
    if available > payload_bytes {
        return Err(Graph6Error::TrailingData {
            offset: payload_start + payload_bytes,
        });
    }

    let mut g = Graph::empty(n)?;
    let mut bit = 0usize;
    // Pair order: column by column, (i, j) for j in 1..n, i in 0..j.
    let mut col = 1usize;
    let mut row = 0usize;
    for k in 0..payload_bytes {
        let offset = payload_start + k;
        let value = bytes[offset];
        if !(63..=126).contains(&value) {
            return Err(Graph6Error::OutOfRangeByte { offset, value });
        }
        let v = value - 63;
        for shift in (0..6).rev() {
            if bit >= pairs {
                break;
            }
            if v >> shift & 1 == 1 {
                g.add_edge(row, col)?;
            }
            bit += 1;
            row += 1;
            if row == col {
                row = 0;
                col += 1;
            }
        }
    }
    Ok(g)
}

/// Encodes a graph as a graph6 record (no trailing newline).
pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    } else {
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0u8;
    for col in 1..n {
        for row in 0..col {
            acc = (acc << 1) | g.has_edge(row, col) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are ascii")
}
