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

//! Runs the fuzz corpus seeds and random text through every parser with the
//! same round-trip properties the fuzz targets assert.

use std::fs;
use std::path::PathBuf;

use proptest::prelude::*;
use twoeig_core::formats::coloring::{
    emit_edge_coloring, emit_hyperedge_coloring, parse_edge_coloring, parse_hyperedge_coloring,
};
use twoeig_core::formats::edge_list::{emit_edge_list, parse_edge_list};
use twoeig_core::formats::graph6::{emit_graph6, parse_graph6};
use twoeig_core::formats::hypergraph::{emit_hypergraph, parse_hypergraph};
use twoeig_core::formats::matrix::{emit_matrix, parse_matrix, parse_raw_matrix};
use twoeig_core::generators::{petersen, rook_hypergraph};
use twoeig_core::oracle::eigensolve_symmetric;
use twoeig_core::witness::{emit_certificate, parse_certificate, verify_certificate};

/// Number of parsers that accept the input.
fn all_parsers(data: &str) -> usize {
    let mut parsed = 0;
    if let Ok(g) = parse_graph6(data) {
        assert_eq!(parse_graph6(&emit_graph6(&g).unwrap()).unwrap(), g);
        parsed += 1;
    }
    if let Ok(g) = parse_edge_list(data) {
        assert_eq!(parse_edge_list(&emit_edge_list(&g)).unwrap(), g);
        parsed += 1;
    }
    if let Ok(h) = parse_hypergraph(data) {
        assert_eq!(parse_hypergraph(&emit_hypergraph(&h)).unwrap(), h);
        parsed += 1;
    }
    if let Ok(m) = parse_matrix(data) {
        assert_eq!(parse_matrix(&emit_matrix(&m)).unwrap(), m);
        parsed += 1;
    }
    if let Ok(m) = parse_raw_matrix(data) {
        if m.len() <= 16 {
            let _ = eigensolve_symmetric(&m, 20);
        }
        parsed += 1;
    }
    let g = petersen();
    if let Ok(c) = parse_edge_coloring(data, &g) {
        assert_eq!(parse_edge_coloring(&emit_edge_coloring(&c), &g).unwrap(), c);
        parsed += 1;
    }
    let h = rook_hypergraph(3).unwrap();
    if let Ok(c) = parse_hyperedge_coloring(data, &h) {
        assert_eq!(
            parse_hyperedge_coloring(&emit_hyperedge_coloring(&c), &h).unwrap(),
            c
        );
        parsed += 1;
    }
    if let Ok(cert) = parse_certificate(data) {
        let text = emit_certificate(&cert).unwrap();
        assert_eq!(parse_certificate(&text).unwrap(), cert);
        let _ = verify_certificate(&cert);
        parsed += 1;
    }
    parsed
}

#[test]
fn corpus_seeds() {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus");
    let mut seeds = 0;
    for dir in fs::read_dir(&root).unwrap() {
        let dir = dir.unwrap().path();
        for file in fs::read_dir(&dir).unwrap() {
            let bytes = fs::read(file.unwrap().path()).unwrap();
            let text = String::from_utf8_lossy(&bytes);
            assert!(
                all_parsers(&text) > 0,
                "seed in {} parses nowhere",
                dir.display()
            );
            seeds += 1;
        }
    }
    assert!(seeds >= 7);
}

#[test]
fn certificate_mutations_never_panic() {
    let root = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fuzz/corpus/certificate/c4");
    let text = fs::read_to_string(root).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    for skip in 0..lines.len() {
        let mut mutated: Vec<&str> = lines.clone();
        mutated.remove(skip);
        all_parsers(&mutated.join("\n"));
        let mut swapped = lines.clone();
        swapped.swap(skip, (skip + 1) % lines.len());
        all_parsers(&swapped.join("\n"));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn arbitrary_text_never_panics(data in "\\PC{0,64}") {
        all_parsers(&data);
    }

    #[test]
    fn structured_noise_never_panics(data in "[0-9 /\\-\\n\\[\\]{}\":,a-z>~?@]{0,96}") {
        all_parsers(&data);
    }
}
