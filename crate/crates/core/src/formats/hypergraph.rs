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

//! Hypergraph files: `{"n": <int>, "edges": [[<int>, ...], ...]}`.

use serde::{Deserialize, Serialize};

use super::ParseError;
use crate::graph::Hypergraph;

/// Upper bound on `n` accepted from files.
pub const MAX_VERTICES: usize = 1 << 16;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct HypergraphFile {
    n: usize,
    edges: Vec<Vec<usize>>,
}

pub fn parse_hypergraph(text: &str) -> Result<Hypergraph, ParseError> {
    let file: HypergraphFile =
        serde_json::from_str(text).map_err(|e| ParseError::Structure(e.to_string()))?;
    if file.n > MAX_VERTICES {
        return Err(ParseError::Structure(format!(
            "n = {} exceeds {MAX_VERTICES}",
            file.n
        )));
    }
    Hypergraph::new(file.n, file.edges).map_err(|e| ParseError::Structure(e.to_string()))
}

pub fn emit_hypergraph(h: &Hypergraph) -> String {
    let file = HypergraphFile {
        n: h.n(),
        edges: h.edges().to_vec(),
    };
    let mut out = serde_json::to_string(&file).expect("plain integers always serialize");
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::rook_hypergraph;

    #[test]
    fn round_trip() {
        let h = rook_hypergraph(3).unwrap();
        let text = emit_hypergraph(&h);
        assert!(text.starts_with("{\"n\":9,\"edges\":[[0,1,2]"));
        assert_eq!(parse_hypergraph(&text).unwrap(), h);
    }

    #[test]
    fn rejects_bad_files() {
        assert!(parse_hypergraph("{\"n\": 3, \"edges\": [[0, 5]]}").is_err());
        assert!(parse_hypergraph("{\"n\": 3, \"edges\": [[0]]}").is_err());
        assert!(parse_hypergraph("{\"n\": 3}").is_err());
        assert!(parse_hypergraph("{\"n\": 3, \"edges\": [], \"x\": 1}").is_err());
        assert!(parse_hypergraph("[1,2]").is_err());
    }
}
