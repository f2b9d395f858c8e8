//! graph6 codec for graphs of order at most 62.
//!
//! Layout: one size byte `n + 63`, then the upper-triangle adjacency bits
//! x(0,1), x(0,2), x(1,2), x(0,3), ... packed six per byte (most significant
//! bit first), each payload byte offset by 63, zero-padded to a byte boundary.

use thiserror::Error;

use crate::graph::{Graph, MAX_ORDER};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 record")]
    Empty,
    #[error("byte {byte:#04x} at index {index} outside graph6 range 63..=126")]
    ByteOutOfRange { index: usize, byte: u8 },
    #[error("graph6 order prefix encodes n > {MAX_ORDER}, which is unsupported")]
    UnsupportedOrder,
    #[error("record has {got} payload bytes, expected {expected} for order {n}")]
    WrongLength {
        n: usize,
        expected: usize,
        got: usize,
    },
    #[error("nonzero padding bits in final payload byte")]
    BadPadding,
}

fn payload_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

/// Decodes a single graph6 record (no trailing newline, no `>>graph6<<` header).
pub fn decode(record: &str) -> Result<Graph, Graph6Error> {
    let bytes = record.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (index, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::ByteOutOfRange { index, byte });
        }
    }
    if bytes[0] == 126 {
        // multi-byte order prefix, i.e. n >= 63
        return Err(Graph6Error::UnsupportedOrder);
    }
    let n = (bytes[0] - 63) as usize;
    if n == 0 {
        // '?' prefix: graph6 allows n = 0 but nothing downstream does
        return Err(Graph6Error::UnsupportedOrder);
    }
    let expected = payload_len(n);
    let payload = &bytes[1..];
    if payload.len() != expected {
        return Err(Graph6Error::WrongLength {
            n,
            expected,
            got: payload.len(),
        });
    }

    let mut adj = vec![0u64; n];
    let mut bit_index = 0usize;
    let total_bits = n * (n - 1) / 2;
    for &byte in payload {
        let chunk = byte - 63;
        for k in 0..6 {
            let bit = chunk >> (5 - k) & 1;
            if bit_index >= total_bits {
                if bit != 0 {
                    return Err(Graph6Error::BadPadding);
                }
            } else if bit != 0 {
                let (u, v) = pair_at(bit_index);
                adj[u] |= 1 << v;
                adj[v] |= 1 << u;
            }
            bit_index += 1;
        }
    }
    Ok(Graph::from_adjacency(adj).expect("decoded adjacency is valid by construction"))
}

/// Encodes a graph as its canonical graph6 record.
pub fn encode(g: &Graph) -> String {
    let n = g.order();
    debug_assert!(n <= MAX_ORDER);
    let total_bits = n * (n - 1) / 2;
    let mut out = Vec::with_capacity(1 + payload_len(n));
    out.push(n as u8 + 63);
    let mut chunk = 0u8;
    let mut filled = 0u8;
    for bit_index in 0..total_bits {
        let (u, v) = pair_at(bit_index);
        chunk = chunk << 1 | u8::from(g.has_edge(u, v));
        filled += 1;
        if filled == 6 {
            out.push(chunk + 63);
            chunk = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push((chunk << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// The `k`-th pair in graph6 bit order: (0,1), (0,2), (1,2), (0,3), ...
/// Bits are grouped by the larger endpoint `v`, with `u` running over `0..v`.
fn pair_at(bit_index: usize) -> (usize, usize) {
    let mut v = 1usize;
    let mut base = 0usize;
    while base + v <= bit_index {
        base += v;
        v += 1;
    }
    (bit_index - base, v)
}

impl Graph {
    pub fn from_graph6(record: &str) -> Result<Self, Graph6Error> {
        decode(record)
    }

    pub fn to_graph6(&self) -> String {
        encode(self)
    }
}
