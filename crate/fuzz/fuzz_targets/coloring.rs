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

#![no_main]
use libfuzzer_sys::fuzz_target;
use twoeig_core::formats::coloring::{
    emit_edge_coloring, emit_hyperedge_coloring, parse_edge_coloring, parse_hyperedge_coloring,
};
use twoeig_core::generators::{petersen, rook_hypergraph};

fuzz_target!(|data: &str| {
    let g = petersen();
    if let Ok(c) = parse_edge_coloring(data, &g) {
        assert_eq!(parse_edge_coloring(&emit_edge_coloring(&c), &g).unwrap(), c);
    }
    let h = rook_hypergraph(3).unwrap();
    if let Ok(c) = parse_hyperedge_coloring(data, &h) {
        assert_eq!(
            parse_hyperedge_coloring(&emit_hyperedge_coloring(&c), &h).unwrap(),
            c
        );
    }
});
