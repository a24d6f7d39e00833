//! graph6 codec, single-byte size header only (n <= 62).
//!
//! Layout: one header byte `63 + n`, then the upper triangle of the adjacency
//! matrix in column order `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed six
//! bits per byte (most significant first), each byte offset by 63, with the
//! final byte zero-padded.

use thiserror::Error;

use crate::graph::{Graph, GraphError};

/// Largest order expressible with a one-byte header.
pub const GRAPH6_MAX_ORDER: usize = 62;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("unsupported size: multi-byte graph6 headers (n > {GRAPH6_MAX_ORDER}) are not handled")]
    UnsupportedSize,
    #[error("byte {byte} at position {position} is outside the graph6 range 63..=126")]
    BadCharacter { position: usize, byte: u8 },
    #[error("expected {expected} data bytes, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("padding bits in the final byte are not zero")]
    NonzeroPadding,
    #[error("graph of order {0} cannot be written with a one-byte header")]
    TooLarge(usize),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn data_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Decodes one graph6 line. A trailing line terminator is ignored.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let (&header, data) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    if header == 126 {
        return Err(Graph6Error::UnsupportedSize);
    }
    if !(63..=126).contains(&header) {
        return Err(Graph6Error::BadCharacter {
            position: 0,
            byte: header,
        });
    }
    let n = (header - 63) as usize;
    if let Some(pos) = data.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Graph6Error::BadCharacter {
            position: pos + 1,
            byte: data[pos],
        });
    }
    let expected = data_len(n);
    if data.len() != expected {
        return Err(Graph6Error::WrongLength {
            expected,
            found: data.len(),
        });
    }

    let total = n * n.saturating_sub(1) / 2;
    let bit = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (total..expected * 6).any(bit) {
        return Err(Graph6Error::NonzeroPadding);
    }

    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                adj[i] |= 1 << j;
                adj[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Ok(Graph::from_adjacency(adj)?)
}

/// Encodes the graph under its current labeling.
pub fn to_graph6(g: &Graph) -> Result<String, Graph6Error> {
    let n = g.order();
    if n > GRAPH6_MAX_ORDER {
        return Err(Graph6Error::TooLarge(n));
    }
    let mut out = Vec::with_capacity(1 + data_len(n));
    out.push(63 + n as u8);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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
    // every byte is in 63..=126
    Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
}
