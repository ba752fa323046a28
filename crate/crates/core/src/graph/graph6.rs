//! graph6 text encoding, single-byte header form only.
//!
//! Layout: one header byte `63 + n`, then the upper triangle of the adjacency
//! matrix in column order `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed six
//! bits per byte (most significant first), each byte offset by 63, with the
//! final byte zero-padded.

use super::Graph;
use crate::error::{Error, Result};

/// Largest order representable with a one-byte header.
pub const MAX_GRAPH6_ORDER: usize = 62;

const OFFSET: u8 = 63;

fn err(offset: usize, message: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        message: message.into(),
    }
}

fn data_len(n: usize) -> usize {
    (n * (n - 1) / 2).div_ceil(6)
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.order();
    assert!(
        n <= MAX_GRAPH6_ORDER,
        "graph6 encoding supports n <= {MAX_GRAPH6_ORDER}"
    );
    let mut out = Vec::with_capacity(1 + data_len(n));
    out.push(OFFSET + n as u8);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(OFFSET + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(OFFSET + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let bytes = text.as_bytes();
    let &header = bytes.first().ok_or_else(|| err(0, "empty input"))?;
    if !(OFFSET..=126).contains(&header) {
        return Err(err(
            0,
            format!("byte {header:#04x} is not a graph6 character"),
        ));
    }
    if header == 126 {
        return Err(err(
            0,
            format!("multi-byte headers (n > {MAX_GRAPH6_ORDER}) are not supported"),
        ));
    }
    let n = (header - OFFSET) as usize;
    if n == 0 {
        return Err(err(0, "graph has no vertices"));
    }
    let expected = 1 + data_len(n);
    for (offset, &b) in bytes.iter().enumerate().skip(1) {
        if offset >= expected {
            return Err(err(
                offset,
                format!("trailing data; expected {expected} bytes for n = {n}"),
            ));
        }
        if !(OFFSET..=126).contains(&b) {
            return Err(err(
                offset,
                format!("byte {b:#04x} is not a graph6 character"),
            ));
        }
    }
    if bytes.len() < expected {
        return Err(err(
            bytes.len(),
            format!("input ends early; expected {expected} bytes for n = {n}"),
        ));
    }

    let mut g = Graph::empty(n)?;
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + bit / 6] - OFFSET;
            if byte >> (5 - bit % 6) & 1 == 1 {
                g.add_edge_unchecked(i, j);
            }
            bit += 1;
        }
    }
    if !bit.is_multiple_of(6) {
        let last = bytes[expected - 1] - OFFSET;
        if last & ((1 << (6 - bit % 6)) - 1) != 0 {
            return Err(err(expected - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}
