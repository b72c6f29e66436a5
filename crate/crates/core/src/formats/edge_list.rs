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

//! Plain edge lists: one `u v` pair per line, 0-indexed.
//!
//! An optional leading `n <count>` line fixes the vertex count so trailing
//! isolated vertices survive a round trip; otherwise `n` is one more than the
//! largest index seen. `#` starts a comment.

use super::{content_lines, ParseError};
use crate::graph::Graph;

/// Vertex indices above this are rejected to bound allocation on hostile input.
pub const MAX_VERTICES: usize = 1 << 16;

fn parse_index(token: &str, line: usize) -> Result<usize, ParseError> {
    let v: usize = token
        .parse()
        .map_err(|_| ParseError::line(line, format!("`{token}` is not a vertex index")))?;
    if v >= MAX_VERTICES {
        return Err(ParseError::line(
            line,
            format!("vertex {v} exceeds {MAX_VERTICES}"),
        ));
    }
    Ok(v)
}

pub fn parse_edge_list(text: &str) -> Result<Graph, ParseError> {
    let mut declared = None;
    let mut edges = Vec::new();
    for (line, content) in content_lines(text) {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        match tokens.as_slice() {
            ["n", count] if declared.is_none() && edges.is_empty() => {
                let n: usize = count
                    .parse()
                    .map_err(|_| ParseError::line(line, "bad vertex count"))?;
                if n > MAX_VERTICES {
                    return Err(ParseError::line(line, "vertex count too large"));
                }
                declared = Some(n);
            }
            [u, v] => {
                let (u, v) = (parse_index(u, line)?, parse_index(v, line)?);
                if u == v {
                    return Err(ParseError::line(line, format!("self-loop at {u}")));
                }
                edges.push((u, v));
            }
            _ => return Err(ParseError::line(line, "expected `u v`")),
        }
    }
    let seen = edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0);
    let n = match declared {
        Some(n) if n < seen => {
            return Err(ParseError::Structure(format!(
                "edge endpoint {} outside declared n = {n}",
                seen - 1
            )))
        }
        Some(n) => n,
        None => seen,
    };
    Graph::from_edges(n, edges).map_err(|e| ParseError::Structure(e.to_string()))
}

pub fn emit_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
