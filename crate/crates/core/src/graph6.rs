//! graph6 short-form codec (orders 0..=62).
//!
//! Encoding follows the published format: a header byte `n + 63`, then the
//! upper-triangle adjacency bits in column order packed big-endian into
//! 6-bit groups, each offset by 63. The encoder always emits zero padding;
//! the parser tolerates nonzero padding bits, which some writers in the
//! wild produce.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_ORDER};

pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.order();
    if n > MAX_ORDER {
        return Err(Error::UnsupportedOrder {
            order: n,
            max: MAX_ORDER,
        });
    }
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    let bits = if n == 0 {
        Vec::new()
    } else {
        g.triangle_bits()
    };
    let mut group = 0u8;
    let mut filled = 0;
    for b in bits {
        group = (group << 1) | b as u8;
        filled += 1;
        if filled == 6 {
            out.push((group + 63) as char);
            group = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        group <<= 6 - filled;
        out.push((group + 63) as char);
    }
    Ok(out)
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    // optional header some tools prepend
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Parse("empty line".into()));
    }
    let head = bytes[0];
    if head == b'~' {
        // long-form order marker: order is at least 63
        return Err(Error::UnsupportedOrder {
            order: 63,
            max: MAX_ORDER,
        });
    }
    if !(63..=125).contains(&head) {
        return Err(Error::Parse(format!("malformed header byte {head}")));
    }
    let n = (head - 63) as usize;
    let nbits = n * n.saturating_sub(1) / 2;
    let nbytes = nbits.div_ceil(6);
    if bytes.len() != 1 + nbytes {
        return Err(Error::Parse(format!(
            "expected {} data bytes for order {n}, found {}",
            nbytes,
            bytes.len() - 1
        )));
    }
    let mut edges = Vec::new();
    let mut bit_index = 0usize;
    'outer: for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + bit_index / 6];
            if !(63..=126).contains(&byte) {
                return Err(Error::Parse(format!("data byte {byte} out of range")));
            }
            let group = byte - 63;
            if (group >> (5 - bit_index % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            bit_index += 1;
            if bit_index == nbits {
                break 'outer;
            }
        }
    }
    // validate any bytes we did not fully consume are still in range
    for &byte in &bytes[1..] {
        if !(63..=126).contains(&byte) {
            return Err(Error::Parse(format!("data byte {byte} out of range")));
        }
    }
    Graph::from_edges(n, &edges)
}
