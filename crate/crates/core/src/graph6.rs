//! graph6 encoding for graphs of order at most 62.
//!
//! Header byte `63 + n`, then the upper triangle of the adjacency matrix in
//! column order `(0,1), (0,2), (1,2), (0,3), ...`, zero-padded to a multiple
//! of six bits, each six-bit group written as `value + 63`.

use thiserror::Error;

use crate::graph::{Graph, MAX_ORDER};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("malformed graph6 header byte {0:#04x}")]
    Header(u8),
    #[error("graph6 body has {found} bytes, expected {expected}")]
    Length { expected: usize, found: usize },
    #[error("non-printable graph6 byte {byte:#04x} at offset {offset}")]
    Byte { byte: u8, offset: usize },
    #[error("non-zero padding bits in graph6 body")]
    Padding,
}

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    debug_assert!(n <= MAX_ORDER);
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push(63 + n as u8);
    let mut acc = 0u8;
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            acc <<= 1;
            if g.has_edge(u, v) {
                acc |= 1;
            }
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
    String::from_utf8(out).expect("graph6 is ASCII")
}

pub fn decode(s: &str) -> Result<Graph, Graph6Error> {
    decode_bytes(s.trim_end_matches(['\n', '\r']).as_bytes())
}

pub fn decode_bytes(bytes: &[u8]) -> Result<Graph, Graph6Error> {
    let (&header, body) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    if !(63..=63 + MAX_ORDER as u8).contains(&header) {
        return Err(Graph6Error::Header(header));
    }
    let n = (header - 63) as usize;
    let expected = body_len(n);
    if body.len() != expected {
        return Err(Graph6Error::Length {
            expected,
            found: body.len(),
        });
    }
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::Byte {
                byte: b,
                offset: i + 1,
            });
        }
    }
    let mut rows = vec![0u64; n];
    let mut idx = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = body[idx / 6] - 63;
            if byte & (1 << (5 - idx % 6)) != 0 {
                rows[u] |= 1 << v;
                rows[v] |= 1 << u;
            }
            idx += 1;
        }
    }
    if !idx.is_multiple_of(6) {
        let last = body[idx / 6] - 63;
        if last & ((1u8 << (6 - idx % 6)) - 1) != 0 {
            return Err(Graph6Error::Padding);
        }
    }
    Ok(Graph::from_rows_unchecked(rows))
}
