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

//! Coloring text: `u v color` per edge, or `edge_index color` per hyperedge.
//! A leading `colors <c>` line records the palette size; without it the
//! palette is one more than the largest color used.

use super::{content_lines, ParseError};
use crate::coloring::{EdgeColoring, HyperedgeColoring};
use crate::graph::{Graph, Hypergraph};

fn number(token: &str, line: usize) -> Result<usize, ParseError> {
    token
        .parse()
        .map_err(|_| ParseError::line(line, format!("`{token}` is not a non-negative integer")))
}

/// Palette sizes above this are rejected as implausible.
const MAX_COLORS: usize = 1 << 12;

fn rows(text: &str, width: usize) -> Result<(Option<usize>, Vec<Vec<usize>>), ParseError> {
    let mut palette = None;
    let mut out = Vec::new();
    for (line, content) in content_lines(text) {
        let tokens: Vec<&str> = content.split_whitespace().collect();
        if let ["colors", c] = tokens.as_slice() {
            if palette.is_some() || !out.is_empty() {
                return Err(ParseError::line(line, "`colors` must come first"));
            }
            let c = number(c, line)?;
            if c > MAX_COLORS {
                return Err(ParseError::line(line, "palette too large"));
            }
            palette = Some(c);
            continue;
        }
        if tokens.len() != width {
            return Err(ParseError::line(line, format!("expected {width} fields")));
        }
        let row = tokens
            .iter()
            .map(|t| number(t, line))
            .collect::<Result<Vec<_>, _>>()?;
        if row[width - 1] >= MAX_COLORS {
            return Err(ParseError::line(line, "color too large"));
        }
        out.push(row);
    }
    Ok((palette, out))
}

fn palette_of(declared: Option<usize>, colors: impl Iterator<Item = usize>) -> usize {
    declared.unwrap_or_else(|| colors.map(|c| c + 1).max().unwrap_or(0))
}

pub fn parse_edge_coloring(text: &str, g: &Graph) -> Result<EdgeColoring, ParseError> {
    let (declared, rows) = rows(text, 3)?;
    let triples: Vec<(usize, usize, usize)> = rows.iter().map(|r| (r[0], r[1], r[2])).collect();
    let palette = palette_of(declared, triples.iter().map(|t| t.2));
    EdgeColoring::from_assignments(g, &triples, palette)
        .map_err(|e| ParseError::Structure(e.to_string()))
}

pub fn emit_edge_coloring(c: &EdgeColoring) -> String {
    let mut out = format!("colors {}\n", c.num_colors());
    for (&(u, v), &col) in c.edges().iter().zip(c.colors()) {
        out.push_str(&format!("{u} {v} {col}\n"));
    }
    out
}

pub fn parse_hyperedge_coloring(
    text: &str,
    h: &Hypergraph,
) -> Result<HyperedgeColoring, ParseError> {
    let (declared, rows) = rows(text, 2)?;
    let mut colors: Vec<Option<usize>> = vec![None; h.edges().len()];
    for r in &rows {
        let slot = colors
            .get_mut(r[0])
            .ok_or_else(|| ParseError::Structure(format!("no hyperedge {}", r[0])))?;
        if slot.replace(r[1]).is_some() {
            return Err(ParseError::Structure(format!(
                "hyperedge {} colored twice",
                r[0]
            )));
        }
    }
    let colors = colors
        .into_iter()
        .enumerate()
        .map(|(i, c)| c.ok_or_else(|| ParseError::Structure(format!("hyperedge {i} uncolored"))))
        .collect::<Result<Vec<_>, _>>()?;
    let palette = palette_of(declared, colors.iter().copied());
    HyperedgeColoring::new(h, colors, palette).map_err(|e| ParseError::Structure(e.to_string()))
}

pub fn emit_hyperedge_coloring(c: &HyperedgeColoring) -> String {
    let mut out = format!("colors {}\n", c.num_colors());
    for (i, col) in c.colors().iter().enumerate() {
        out.push_str(&format!("{i} {col}\n"));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{vizing_color, HyperedgeColoring};
    use crate::generators::{petersen, rook_hypergraph};

    #[test]
    fn edge_round_trip() {
        let g = petersen();
        let c = vizing_color(&g).unwrap();
        assert_eq!(parse_edge_coloring(&emit_edge_coloring(&c), &g).unwrap(), c);
    }

    #[test]
    fn hyperedge_round_trip() {
        let h = rook_hypergraph(3).unwrap();
        let c = HyperedgeColoring::new(&h, vec![0, 0, 0, 1, 1, 1], 3).unwrap();
        let text = emit_hyperedge_coloring(&c);
        assert!(text.ends_with("5 1\n"));
        assert_eq!(parse_hyperedge_coloring(&text, &h).unwrap(), c);
    }

    #[test]
    fn rejects_bad_input() {
        let g = petersen();
        assert!(parse_edge_coloring("0 1\n", &g).is_err());
        assert!(parse_edge_coloring("0 1 0\n", &g).is_err(), "missing edges");
        let h = rook_hypergraph(3).unwrap();
        assert!(parse_hyperedge_coloring("0 0\n1 0\n", &h).is_err());
        assert!(parse_hyperedge_coloring("9 0\n", &h).is_err());
        assert!(parse_hyperedge_coloring("0 0\n0 1\n", &h).is_err());
        assert!(parse_hyperedge_coloring("0 0\n1 0\n2 0\n3 0\n4 1\n5 1\n", &h).is_err());
    }
}
