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

//! Named graph and hypergraph families with canonical labelings.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::graph::{cartesian_product, Graph, Hypergraph};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GenerateError {
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("family `{family}`: {reason}")]
    InvalidParameter { family: Family, reason: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Path,
    Cycle,
    Complete,
    CompleteBipartite,
    Hypercube,
    Rook,
    Octahedron,
    Bowtie,
    Petersen,
    RookHypergraph,
    OctahedronTriangleHypergraph,
    BowtieHypergraph,
}

impl Family {
    pub const ALL: [Family; 12] = [
        Family::Path,
        Family::Cycle,
        Family::Complete,
        Family::CompleteBipartite,
        Family::Hypercube,
        Family::Rook,
        Family::Octahedron,
        Family::Bowtie,
        Family::Petersen,
        Family::RookHypergraph,
        Family::OctahedronTriangleHypergraph,
        Family::BowtieHypergraph,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Path => "path",
            Family::Cycle => "cycle",
            Family::Complete => "complete",
            Family::CompleteBipartite => "complete_bipartite",
            Family::Hypercube => "hypercube",
            Family::Rook => "rook",
            Family::Octahedron => "octahedron",
            Family::Bowtie => "bowtie",
            Family::Petersen => "petersen",
            Family::RookHypergraph => "rook_hypergraph",
            Family::OctahedronTriangleHypergraph => "octahedron_triangle_hypergraph",
            Family::BowtieHypergraph => "bowtie_hypergraph",
        }
    }

    /// Number of integer parameters the family takes.
    pub fn arity(self) -> usize {
        match self {
            Family::CompleteBipartite => 2,
            Family::Octahedron
            | Family::Bowtie
            | Family::Petersen
            | Family::OctahedronTriangleHypergraph
            | Family::BowtieHypergraph => 0,
            _ => 1,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = GenerateError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.name() == s)
            .ok_or_else(|| GenerateError::UnknownFamily(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Generated {
    Graph(Graph),
    Hypergraph(Hypergraph),
}

fn invalid(family: Family, reason: impl Into<String>) -> GenerateError {
    GenerateError::InvalidParameter {
        family,
        reason: reason.into(),
    }
}

/// Generates a family member by name. `params` must match the family's arity.
pub fn generate(family: &str, params: &[usize]) -> Result<Generated, GenerateError> {
    let family: Family = family.parse()?;
    if params.len() != family.arity() {
        return Err(invalid(
            family,
            format!(
                "expected {} parameter(s), got {}",
                family.arity(),
                params.len()
            ),
        ));
    }
    let p = |i: usize| params[i];
    Ok(match family {
        Family::Path => Generated::Graph(path(p(0))?),
        Family::Cycle => Generated::Graph(cycle(p(0))?),
        Family::Complete => Generated::Graph(complete(p(0))?),
        Family::CompleteBipartite => Generated::Graph(complete_bipartite(p(0), p(1))?),
        Family::Hypercube => Generated::Graph(hypercube(p(0))?),
        Family::Rook => Generated::Graph(rook(p(0))?),
        Family::Octahedron => Generated::Graph(octahedron()),
        Family::Bowtie => Generated::Graph(bowtie()),
        Family::Petersen => Generated::Graph(petersen()),
        Family::RookHypergraph => Generated::Hypergraph(rook_hypergraph(p(0))?),
        Family::OctahedronTriangleHypergraph => {
            Generated::Hypergraph(octahedron_triangle_hypergraph())
        }
        Family::BowtieHypergraph => Generated::Hypergraph(bowtie_hypergraph()),
    })
}

/// Path `0 - 1 - ... - (n-1)`.
pub fn path(n: usize) -> Result<Graph, GenerateError> {
    if n < 1 {
        return Err(invalid(Family::Path, "need n >= 1"));
    }
    Ok(Graph::from_edges(n, (1..n).map(|i| (i - 1, i))).unwrap())
}

pub fn cycle(n: usize) -> Result<Graph, GenerateError> {
    if n < 3 {
        return Err(invalid(Family::Cycle, "need n >= 3"));
    }
    Ok(Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap())
}

pub fn complete(n: usize) -> Result<Graph, GenerateError> {
    if n < 1 {
        return Err(invalid(Family::Complete, "need n >= 1"));
    }
    Ok(Graph::from_fn(n, |_, _| true))
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GenerateError> {
    if a < 1 || b < 1 {
        return Err(invalid(Family::CompleteBipartite, "need both parts >= 1"));
    }
    Ok(Graph::from_fn(a + b, |u, v| u < a && v >= a))
}

/// `Q_d`: vertices are bit strings, adjacent when they differ in one bit.
pub fn hypercube(d: usize) -> Result<Graph, GenerateError> {
    if !(1..=12).contains(&d) {
        return Err(invalid(Family::Hypercube, "need 1 <= d <= 12"));
    }
    Ok(Graph::from_fn(1 << d, |u, v| (u ^ v).count_ones() == 1))
}

/// Rook's graph `K_m □ K_m`; vertex `r * m + c` sits in row `r`, column `c`.
pub fn rook(m: usize) -> Result<Graph, GenerateError> {
    if m < 2 {
        return Err(invalid(Family::Rook, "need m >= 2"));
    }
    let k = complete(m).unwrap();
    Ok(cartesian_product(&k, &k).unwrap())
}

/// `K_6` minus the antipodal matching `(0,3), (1,4), (2,5)`.
pub fn octahedron() -> Graph {
    Graph::from_fn(6, |u, v| v != u + 3)
}

/// Two triangles sharing vertex 0.
pub fn bowtie() -> Graph {
    Graph::from_edges(5, [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)]).unwrap()
}

/// Petersen graph: outer 5-cycle `0..5`, inner pentagram `5..10`, spokes `i ~ i+5`.
pub fn petersen() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner)).unwrap()
}

/// Rows then columns of an `m x m` grid as `m`-uniform hyperedges.
pub fn rook_hypergraph(m: usize) -> Result<Hypergraph, GenerateError> {
    if m < 2 {
        return Err(invalid(Family::RookHypergraph, "need m >= 2"));
    }
    let rows = (0..m).map(|r| (0..m).map(|c| r * m + c).collect());
    let cols = (0..m).map(|c| (0..m).map(|r| r * m + c).collect());
    Ok(Hypergraph::new(m * m, rows.chain(cols).collect()).unwrap())
}

/// The octahedron's edge set split into four triangles, no two sharing an edge.
pub fn octahedron_triangle_hypergraph() -> Hypergraph {
    Hypergraph::new(
        6,
        vec![vec![0, 1, 2], vec![0, 4, 5], vec![3, 1, 5], vec![3, 4, 2]],
    )
    .unwrap()
}

/// The bowtie's two triangles.
pub fn bowtie_hypergraph() -> Hypergraph {
    Hypergraph::new(5, vec![vec![0, 1, 2], vec![0, 3, 4]]).unwrap()
}
