//! graph6 encoding (McKay's format), one graph per line.
//!
//! Header `N(n)` is one byte `63 + n` for `n <= 62`, otherwise `126` followed
//! by three 6-bit bytes. The body packs the upper triangle column by column,
//! `(0,1), (0,2), (1,2), (0,3), ...`, six bits per byte, high bit first,
//! zero-padded.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte} at offset {offset} outside 63..=126")]
    ByteOutOfRange { offset: usize, byte: u8 },
    #[error("expected {expected} body bytes, found {found}")]
    BadLength { expected: usize, found: usize },
    #[error("padding bits in the final byte are not zero")]
    NonzeroPadding,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes one graph6 line. A trailing `\n` or `\r\n` is ignored.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if let Some((offset, &byte)) = bytes
        .iter()
        .enumerate()
        .find(|(_, &b)| !(63..=126).contains(&b))
    {
        return Err(Graph6Error::ByteOutOfRange { offset, byte });
    }
    let six = |b: u8| (b - 63) as usize;
    let (n, body) = if bytes[0] != 126 {
        (six(bytes[0]), &bytes[1..])
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(Graph6Error::BadLength {
                expected: 8,
                found: bytes.len(),
            });
        }
        let n = bytes[2..8].iter().fold(0, |acc, &b| (acc << 6) | six(b));
        (n, &bytes[8..])
    } else {
        if bytes.len() < 4 {
            return Err(Graph6Error::BadLength {
                expected: 4,
                found: bytes.len(),
            });
        }
        let n = bytes[1..4].iter().fold(0, |acc, &b| (acc << 6) | six(b));
        (n, &bytes[4..])
    };
    if n > crate::graph::MAX_VERTICES {
        return Err(GraphError::TooManyVertices(n).into());
    }
    let expected = body_len(n);
    if body.len() != expected {
        return Err(Graph6Error::BadLength {
            expected,
            found: body.len(),
        });
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let bit = |k: usize| (six(body[k / 6]) >> (5 - k % 6)) & 1 == 1;
    if (pairs..expected * 6).any(bit) {
        return Err(Graph6Error::NonzeroPadding);
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::new(n, edges)?)
}

/// Encodes `g` without a trailing newline.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::with_capacity(4 + body_len(n));
    if n <= 62 {
        out.push(63 + n as u8);
    } else {
        out.push(126);
        out.extend([12, 6, 0].iter().map(|s| 63 + ((n >> s) & 63) as u8));
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(63 + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses a multi-line graph6 document, skipping blank lines. Errors carry
/// the 1-based line number.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, (usize, Graph6Error)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse_graph6(l.trim()).map_err(|e| (i + 1, e)))
        .collect()
}
