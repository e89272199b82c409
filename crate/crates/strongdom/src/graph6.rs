//! Bit-exact graph6 encoding and decoding (header-less short form, n ≤ 62).
//!
//! The token is `N(n)` followed by the upper triangle of the adjacency
//! matrix read column by column — bit (i, j) for j = 1..n, i = 0..j — packed
//! into 6-bit groups, each group printed as `value + 63`. Groups are padded
//! with zero bits to a multiple of six.

use thiserror::Error;

use crate::graph::{Graph, VertexSet, MAX_ORDER};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 token")]
    Empty,
    #[error("long-form graph6 (order > 62) is not supported")]
    LongForm,
    #[error("byte {byte:#04x} at position {pos} outside the graph6 range 63..=126")]
    InvalidByte { pos: usize, byte: u8 },
    #[error("token has {actual} bytes but order {order} requires {expected}")]
    WrongLength { order: usize, expected: usize, actual: usize },
    #[error("nonzero padding bit in final group at position {pos}")]
    BadPadding { pos: usize },
    #[error("graph order {0} exceeds the graph6 short-form maximum 62")]
    OrderTooLarge(usize),
}

fn body_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

/// Encodes a graph as a short-form graph6 token.
pub fn to_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(Graph6Error::OrderTooLarge(n));
    }
    let mut out = String::with_capacity(1 + body_len(n));
    out.push((n as u8 + 63) as char);
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group <<= 1;
            if g.has_edge(i, j) {
                group |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push((group + 63) as char);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        group <<= 6 - filled;
        out.push((group + 63) as char);
    }
    Ok(out)
}

/// Decodes a short-form graph6 token. Rejects malformed input with the
/// offending byte position; `parse_graph6(to_graph6(g)) == g` bit-exactly.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.as_bytes();
    let first = *bytes.first().ok_or(Graph6Error::Empty)?;
    if first == b'~' {
        return Err(Graph6Error::LongForm);
    }
    if !(63..=126).contains(&first) {
        return Err(Graph6Error::InvalidByte { pos: 0, byte: first });
    }
    let n = (first - 63) as usize;
    let expected = 1 + body_len(n);
    if bytes.len() != expected {
        return Err(Graph6Error::WrongLength { order: n, expected, actual: bytes.len() });
    }
    for (pos, &b) in bytes.iter().enumerate().skip(1) {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte { pos, byte: b });
        }
    }

    let mut adj = vec![VertexSet::EMPTY; n];
    let nbits = n * (n - 1) / 2;
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + idx / 6] - 63;
            if byte >> (5 - idx % 6) & 1 == 1 {
                adj[i].insert(j);
                adj[j].insert(i);
            }
            idx += 1;
        }
    }
    // Padding bits beyond the triangle must be zero.
    for idx in nbits..body_len(n) * 6 {
        let pos = 1 + idx / 6;
        if (bytes[pos] - 63) >> (5 - idx % 6) & 1 == 1 {
            return Err(Graph6Error::BadPadding { pos });
        }
    }
    Ok(Graph::from_adjacency(adj))
}
