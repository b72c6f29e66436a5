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

//! Proper edge colorings of graphs and hyperedge colorings of hypergraphs.
//!
//! Every coloring constructor re-checks properness before returning, so an
//! [`EdgeColoring`] or [`HyperedgeColoring`] in hand is always proper.

mod bipartite;
mod exact;
mod misra_gries;

pub use bipartite::bipartite_delta_color;
pub use exact::{
    chromatic_index, color_hyperedges, exact_edge_color, hypergraph_chromatic_index, one_factorize,
    Factorization,
};
pub use misra_gries::vizing_color;

use thiserror::Error;

use crate::graph::{Graph, Hypergraph};

/// Default cap on backtracking search nodes.
pub const DEFAULT_NODE_BUDGET: u64 = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("graph is not regular")]
    NotRegular,
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("graph has no edges")]
    NoEdges,
    #[error("no proper coloring with {colors} colors exists")]
    Infeasible { colors: usize },
    #[error("search undecided after {nodes} nodes")]
    Undecided { nodes: u64 },
    #[error("edge ({0}, {1}) is not in the graph")]
    UnknownEdge(usize, usize),
    #[error("edge ({0}, {1}) is uncolored")]
    Uncolored(usize, usize),
    #[error("color {color} out of range for {num_colors} colors")]
    ColorOutOfRange { color: usize, num_colors: usize },
    #[error("edges sharing vertex {vertex} both have color {color}")]
    Improper { vertex: usize, color: usize },
    #[error("hyperedges {0} and {1} intersect and share a color")]
    ImproperHyperedges(usize, usize),
    #[error("expected {expected} hyperedge colors, got {got}")]
    WrongLength { expected: usize, got: usize },
}

/// Three-valued result of an exhaustive search with a node budget.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Search<T> {
    Found(T),
    /// The search space was exhausted: no solution exists.
    Infeasible,
    /// The node budget ran out before the search finished.
    Undecided {
        nodes: u64,
    },
}

impl<T> Search<T> {
    pub fn found(self) -> Option<T> {
        match self {
            Search::Found(t) => Some(t),
            _ => None,
        }
    }

    pub fn is_infeasible(&self) -> bool {
        matches!(self, Search::Infeasible)
    }
}

/// A proper edge coloring. Edges follow the graph's canonical order
/// (`Graph::edges`), and `colors[i]` colors `edges[i]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeColoring {
    n: usize,
    edges: Vec<(usize, usize)>,
    colors: Vec<usize>,
    num_colors: usize,
}

impl EdgeColoring {
    /// Validates `colors` (parallel to `g.edges()`) and wraps them.
    pub fn new(g: &Graph, colors: Vec<usize>, num_colors: usize) -> Result<Self, ColoringError> {
        let edges = g.edges();
        if colors.len() != edges.len() {
            return Err(ColoringError::WrongLength {
                expected: edges.len(),
                got: colors.len(),
            });
        }
        if let Some(&color) = colors.iter().find(|&&c| c >= num_colors) {
            return Err(ColoringError::ColorOutOfRange { color, num_colors });
        }
        let mut seen = vec![vec![false; num_colors]; g.n()];
        for (&(u, v), &c) in edges.iter().zip(&colors) {
            for w in [u, v] {
                if std::mem::replace(&mut seen[w][c], true) {
                    return Err(ColoringError::Improper {
                        vertex: w,
                        color: c,
                    });
                }
            }
        }
        Ok(EdgeColoring {
            n: g.n(),
            edges,
            colors,
            num_colors,
        })
    }

    /// Builds a coloring from `(u, v, color)` triples covering every edge of `g`.
    pub fn from_assignments(
        g: &Graph,
        assignments: &[(usize, usize, usize)],
        num_colors: usize,
    ) -> Result<Self, ColoringError> {
        let edges = g.edges();
        let mut colors: Vec<Option<usize>> = vec![None; edges.len()];
        for &(u, v, c) in assignments {
            let key = (u.min(v), u.max(v));
            let idx = edges
                .binary_search(&key)
                .map_err(|_| ColoringError::UnknownEdge(u, v))?;
            colors[idx] = Some(c);
        }
        let colors = colors
            .into_iter()
            .zip(&edges)
            .map(|(c, &(u, v))| c.ok_or(ColoringError::Uncolored(u, v)))
            .collect::<Result<Vec<_>, _>>()?;
        EdgeColoring::new(g, colors, num_colors)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    /// Number of distinct colors actually used.
    pub fn colors_used(&self) -> usize {
        let mut used = vec![false; self.num_colors];
        for &c in &self.colors {
            used[c] = true;
        }
        used.into_iter().filter(|&u| u).count()
    }

    pub fn color_of(&self, u: usize, v: usize) -> Option<usize> {
        let key = (u.min(v), u.max(v));
        self.edges.binary_search(&key).ok().map(|i| self.colors[i])
    }

    /// Edges of each color, indexed by color.
    pub fn classes(&self) -> Vec<Vec<(usize, usize)>> {
        let mut classes = vec![Vec::new(); self.num_colors];
        for (&e, &c) in self.edges.iter().zip(&self.colors) {
            classes[c].push(e);
        }
        classes
    }

    /// `hit[v][c]` is true when an edge of color `c` meets `v`.
    pub fn incidence(&self) -> Vec<Vec<bool>> {
        let mut hit = vec![vec![false; self.num_colors]; self.n];
        for (&(u, v), &c) in self.edges.iter().zip(&self.colors) {
            hit[u][c] = true;
            hit[v][c] = true;
        }
        hit
    }

    /// Same coloring over a larger palette; the extra colors stay unused.
    pub fn with_palette(&self, num_colors: usize) -> Result<Self, ColoringError> {
        if let Some(&color) = self.colors.iter().find(|&&c| c >= num_colors) {
            return Err(ColoringError::ColorOutOfRange { color, num_colors });
        }
        Ok(EdgeColoring {
            num_colors,
            ..self.clone()
        })
    }
}

/// A proper coloring of hyperedges: intersecting hyperedges get distinct colors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HyperedgeColoring {
    colors: Vec<usize>,
    num_colors: usize,
}

impl HyperedgeColoring {
    pub fn new(
        h: &Hypergraph,
        colors: Vec<usize>,
        num_colors: usize,
    ) -> Result<Self, ColoringError> {
        if colors.len() != h.edges().len() {
            return Err(ColoringError::WrongLength {
                expected: h.edges().len(),
                got: colors.len(),
            });
        }
        if let Some(&color) = colors.iter().find(|&&c| c >= num_colors) {
            return Err(ColoringError::ColorOutOfRange { color, num_colors });
        }
        let mut owner: Vec<Vec<Option<usize>>> = vec![vec![None; num_colors]; h.n()];
        for (i, (e, &c)) in h.edges().iter().zip(&colors).enumerate() {
            for &v in e {
                if let Some(j) = owner[v][c].replace(i) {
                    return Err(ColoringError::ImproperHyperedges(j, i));
                }
            }
        }
        Ok(HyperedgeColoring { colors, num_colors })
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn num_colors(&self) -> usize {
        self.num_colors
    }

    pub fn with_palette(&self, num_colors: usize) -> Result<Self, ColoringError> {
        if let Some(&color) = self.colors.iter().find(|&&c| c >= num_colors) {
            return Err(ColoringError::ColorOutOfRange { color, num_colors });
        }
        Ok(HyperedgeColoring {
            colors: self.colors.clone(),
            num_colors,
        })
    }
}
