// Licensed under the Apache License, Version 2.0 (the "License"); you may
// not use this file except in compliance with the License. You may obtain
// a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS, WITHOUT
// WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. See the
// License for the specific language governing permissions and limitations
// under the License.

//! graph6 encoding for graphs on at most 62 vertices.
//!
//! The first byte is `n + 63`; the upper triangle follows column by column,
//! `x(0,1), x(0,2), x(1,2), x(0,3), ...`, packed six bits per byte (most
//! significant first) and offset by 63. Padding bits must be zero.

use super::ParseError;
use crate::graph::Graph;

/// Largest vertex count representable by the short graph6 form.
pub const MAX_VERTICES: usize = 62;

const HEADER: &str = ">>graph6<<";

fn err(reason: impl Into<String>) -> ParseError {
    ParseError::Graph6(reason.into())
}

pub fn emit_graph6(g: &Graph) -> Result<String, ParseError> {
    let n = g.n();
    if n > MAX_VERTICES {
        return Err(err(format!(
            "{n} vertices needs the long graph6 form, which is unsupported (max {MAX_VERTICES})"
        )));
    }
    let mut out = String::with_capacity(1 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    out.push((n as u8 + 63) as char);
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = (chunk << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push((chunk + 63) as char);
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((chunk << (6 - filled)) + 63) as char);
    }
    Ok(out)
}

pub fn parse_graph6(text: &str) -> Result<Graph, ParseError> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let (&first, body) = bytes.split_first().ok_or_else(|| err("empty input"))?;
    if first == 126 {
        return Err(err(format!(
            "long form (n > {MAX_VERTICES}) is unsupported"
        )));
    }
    if !(63..126).contains(&first) {
        return Err(err(format!("invalid size byte 0x{first:02x}")));
    }
    let n = usize::from(first - 63);
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(err(format!(
            "expected {expected} data bytes for {n} vertices, found {}",
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut bit = 0;
    for (pos, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(err(format!(
                "invalid data byte 0x{b:02x} at offset {}",
                pos + 1
            )));
        }
        let value = b - 63;
        for shift in (0..6).rev() {
            let set = (value >> shift) & 1 == 1;
            if bit >= bits {
                if set {
                    return Err(err("nonzero padding bits"));
                }
            } else if set {
                edges.push(pair_of(bit));
            }
            bit += 1;
        }
    }
    Ok(Graph::from_edges(n, edges).expect("decoded pairs are in range and loop-free"))
}

/// Column-major upper-triangle position back to `(i, j)` with `i < j`.
fn pair_of(index: usize) -> (usize, usize) {
    let mut j = 1;
    let mut start = 0;
    while start + j <= index {
        start += j;
        j += 1;
    }
    (index - start, j)
}
