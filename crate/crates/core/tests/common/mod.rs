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

#![allow(dead_code)]

use twoeig_core::graph::Graph;
use twoeig_core::linalg::{Rational, RationalMatrix};

/// Heap's algorithm over `0..n`.
fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k <= 1 {
            out.push(p.clone());
            return;
        }
        for i in 0..k {
            go(k - 1, p, out);
            let j = if k.is_multiple_of(2) { i } else { 0 };
            p.swap(j, k - 1);
        }
    }
    let mut out = Vec::new();
    go(n, &mut (0..n).collect(), &mut out);
    out
}

fn canonical(g: &Graph, perms: &[Vec<usize>]) -> Vec<(usize, usize)> {
    perms
        .iter()
        .map(|p| g.relabel(p).unwrap().edges())
        .min()
        .unwrap_or_default()
}

/// One representative of every isomorphism class of graphs on `n` vertices.
pub fn nonisomorphic(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| ((u + 1)..n).map(move |v| (u, v)))
        .collect();
    let perms = permutations(n);
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u32..(1 << pairs.len()) {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        let g = Graph::from_edges(n, edges).unwrap();
        if seen.insert(canonical(&g, &perms)) {
            out.push(g);
        }
    }
    out
}

pub fn adjacency(g: &Graph) -> RationalMatrix {
    RationalMatrix::from_fn(g.n(), g.n(), |i, j| {
        Rational::from_integer(g.adjacency()[i][j].into())
    })
}

pub fn plus_identity(m: &RationalMatrix) -> RationalMatrix {
    m + &RationalMatrix::identity(m.rows())
}
