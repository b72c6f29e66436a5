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

use twoeig_core::coloring::{bipartite_delta_color, color_hyperedges, Search, DEFAULT_NODE_BUDGET};
use twoeig_core::generators::{bowtie, bowtie_hypergraph, complete, cycle, path};
use twoeig_core::graph::{modified_strong_product, representing_graph, strong_product};
use twoeig_core::witness::{
    witness_hypergraph, witness_signed_diagonal, DiagonalVariant, HypergraphCase, WitnessError,
};

#[test]
fn bowtie_needs_the_extra_color() {
    let h = bowtie_hypergraph();
    assert_eq!(representing_graph(&h), bowtie());
    let Search::Found(c) = color_hyperedges(&h, 2, DEFAULT_NODE_BUDGET) else {
        panic!("two triangles sharing a vertex are 2-colorable");
    };
    let w = witness_hypergraph(&h, &c, HypergraphCase::B, DiagonalVariant::Corrected).unwrap();
    assert!(w.certificate.is_valid());
    assert_eq!(
        w.certificate.target,
        strong_product(&bowtie(), &complete(3).unwrap()).unwrap()
    );
    // With only the two hyperedge colors, the shared vertex has zero diagonal
    // block, so bowtie ⊠ K2 is out of reach of this construction.
    assert!(matches!(
        witness_hypergraph(&h, &c, HypergraphCase::A, DiagonalVariant::Corrected),
        Err(WitnessError::Hypotheses(_))
    ));
}

#[test]
fn signed_diagonal_on_paths() {
    for k in 3..8 {
        let g = path(k).unwrap();
        let c = bipartite_delta_color(&g).unwrap();
        let w = witness_signed_diagonal(&g, &c).unwrap();
        let v = w.certificate.verdicts;
        // Spectrum is fine; the endpoint diagonal blocks are nowhere zero,
        // which the modified product does not allow.
        assert!(v.annihilation_ok && v.both_attained, "P{k}");
        assert!(!v.pattern_ok, "P{k}");
        assert_eq!(
            w.certificate.target,
            modified_strong_product(&g, &complete(2).unwrap()).unwrap()
        );
    }
}

#[test]
fn signed_diagonal_on_regular_graphs_is_one_factor() {
    let g = cycle(6).unwrap();
    let c = bipartite_delta_color(&g).unwrap();
    let w = witness_signed_diagonal(&g, &c).unwrap();
    assert!(w.certificate.is_valid());
}
