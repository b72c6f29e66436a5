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

//! Simple undirected graphs, uniform hypergraphs and the two product
//! constructions used by the witness builders.
//!
//! Vertices are `0..n`. Product graphs index the pair `(a, b)` as
//! `a * n_h + b`, so the first factor is the major coordinate and the
//! Kronecker block structure of witness matrices lines up with vertex
//! blocks of the first factor.

use std::collections::VecDeque;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("hyperedge {index} has {size} vertices, need at least 2")]
    HyperedgeTooSmall { index: usize, size: usize },
    #[error("hyperedge {index} repeats vertex {vertex}")]
    RepeatedVertex { index: usize, vertex: usize },
}

/// A simple undirected graph stored as sorted adjacency lists.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut adj = vec![Vec::new(); n];
        for (u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, n });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
            list.dedup();
        }
        Ok(Graph { adj })
    }

    /// Builds a graph from a symmetric predicate on vertex pairs `u < v`.
    pub fn from_fn(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> Self {
        let mut adj = vec![Vec::new(); n];
        for u in 0..n {
            for v in (u + 1)..n {
                if adjacent(u, v) {
                    adj[u].push(v);
                    adj[v].push(u);
                }
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Graph { adj }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order. This order is
    /// the canonical edge indexing used by colorings.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.adj.iter().map(Vec::len).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn min_degree(&self) -> usize {
        self.adj.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// `Some(k)` when every vertex has degree `k`.
    pub fn regular_degree(&self) -> Option<usize> {
        let first = self.adj.first().map(Vec::len)?;
        self.adj.iter().all(|l| l.len() == first).then_some(first)
    }

    pub fn is_connected(&self) -> bool {
        if self.n() == 0 {
            return true;
        }
        let mut seen = vec![false; self.n()];
        let mut queue = VecDeque::from([0]);
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    queue.push_back(v);
                }
            }
        }
        count == self.n()
    }

    /// Two-coloring of the vertices if the graph is bipartite.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let mut side: Vec<Option<bool>> = vec![None; self.n()];
        for start in 0..self.n() {
            if side[start].is_some() {
                continue;
            }
            side[start] = Some(false);
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                let su = side[u].unwrap();
                for &v in &self.adj[u] {
                    match side[v] {
                        None => {
                            side[v] = Some(!su);
                            queue.push_back(v);
                        }
                        Some(sv) if sv == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }

    /// 0-1 adjacency matrix as nested rows.
    pub fn adjacency(&self) -> Vec<Vec<u8>> {
        let n = self.n();
        let mut rows = vec![vec![0u8; n]; n];
        for (u, list) in self.adj.iter().enumerate() {
            for &v in list {
                rows[u][v] = 1;
            }
        }
        rows
    }

    /// Image of the graph under `perm`, where vertex `v` becomes `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Self, GraphError> {
        Graph::from_edges(
            self.n(),
            self.edges().into_iter().map(|(u, v)| (perm[u], perm[v])),
        )
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges())
            .finish()
    }
}

fn require_nonempty(g: &Graph) -> Result<(), GraphError> {
    if g.n() == 0 {
        Err(GraphError::Empty)
    } else {
        Ok(())
    }
}

/// Strong product `G ⊠ H`: `(a,b) ~ (a',b')` when the pairs are distinct and
/// each coordinate is equal or adjacent.
pub fn strong_product(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    require_nonempty(g)?;
    require_nonempty(h)?;
    let nh = h.n();
    let close = |x: &Graph, a: usize, b: usize| a == b || x.has_edge(a, b);
    Ok(Graph::from_fn(g.n() * nh, |p, q| {
        let (a, b) = (p / nh, p % nh);
        let (c, d) = (q / nh, q % nh);
        close(g, a, c) && close(h, b, d)
    }))
}

/// Modified strong product `G ⋈ H`: `(a,b) ~ (a',b')` iff `aa'` is an edge of
/// `G` and `b = b'` or `bb'` is an edge of `H`. Adjacency is `A_G ⊗ (A_H + I)`.
pub fn modified_strong_product(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    require_nonempty(g)?;
    require_nonempty(h)?;
    let nh = h.n();
    Ok(Graph::from_fn(g.n() * nh, |p, q| {
        let (a, b) = (p / nh, p % nh);
        let (c, d) = (q / nh, q % nh);
        g.has_edge(a, c) && (b == d || h.has_edge(b, d))
    }))
}

/// Cartesian product `G □ H`.
pub fn cartesian_product(g: &Graph, h: &Graph) -> Result<Graph, GraphError> {
    require_nonempty(g)?;
    require_nonempty(h)?;
    let nh = h.n();
    Ok(Graph::from_fn(g.n() * nh, |p, q| {
        let (a, b) = (p / nh, p % nh);
        let (c, d) = (q / nh, q % nh);
        (a == c && h.has_edge(b, d)) || (b == d && g.has_edge(a, c))
    }))
}

/// A hypergraph whose hyperedges are vertex sets of size at least two.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Each hyperedge is stored sorted; the hyperedge order is preserved and
    /// is the index used by hyperedge colorings.
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self, GraphError> {
        let mut out = Vec::with_capacity(edges.len());
        for (index, mut e) in edges.into_iter().enumerate() {
            if let Some(&vertex) = e.iter().find(|&&v| v >= n) {
                return Err(GraphError::VertexOutOfRange { vertex, n });
            }
            e.sort_unstable();
            if let Some(w) = e.windows(2).find(|w| w[0] == w[1]) {
                return Err(GraphError::RepeatedVertex {
                    index,
                    vertex: w[0],
                });
            }
            if e.len() < 2 {
                return Err(GraphError::HyperedgeTooSmall {
                    index,
                    size: e.len(),
                });
            }
            out.push(e);
        }
        Ok(Hypergraph { n, edges: out })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    /// `Some(l)` when every hyperedge has exactly `l` vertices.
    pub fn uniformity(&self) -> Option<usize> {
        let l = self.edges.first()?.len();
        self.edges.iter().all(|e| e.len() == l).then_some(l)
    }

    pub fn is_uniform(&self, l: usize) -> bool {
        self.edges.iter().all(|e| e.len() == l)
    }

    fn shared(a: &[usize], b: &[usize]) -> usize {
        let (mut i, mut j, mut count) = (0, 0, 0);
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    count += 1;
                    i += 1;
                    j += 1;
                }
            }
        }
        count
    }

    /// Every pair of hyperedges shares at most one vertex.
    pub fn is_linear(&self) -> bool {
        self.edges
            .iter()
            .enumerate()
            .all(|(i, a)| self.edges[i + 1..].iter().all(|b| Self::shared(a, b) <= 1))
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        for e in &self.edges {
            for &v in e {
                deg[v] += 1;
            }
        }
        deg
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn regular_degree(&self) -> Option<usize> {
        let deg = self.degrees();
        let first = *deg.first()?;
        deg.iter().all(|&d| d == first).then_some(first)
    }

    /// Vertices contained in no hyperedge.
    pub fn uncovered_vertices(&self) -> Vec<usize> {
        self.degrees()
            .into_iter()
            .enumerate()
            .filter_map(|(v, d)| (d == 0).then_some(v))
            .collect()
    }

    /// Graph on hyperedge indices, adjacent when the hyperedges intersect.
    pub fn intersection_graph(&self) -> Graph {
        Graph::from_fn(self.edges.len(), |i, j| {
            Self::shared(&self.edges[i], &self.edges[j]) > 0
        })
    }
}

/// Representing graph: `u ~ v` iff some hyperedge contains both.
pub fn representing_graph(h: &Hypergraph) -> Graph {
    let mut pairs = Vec::new();
    for e in h.edges() {
        for (i, &u) in e.iter().enumerate() {
            for &v in &e[i + 1..] {
                pairs.push((u, v));
            }
        }
    }
    Graph::from_edges(h.n(), pairs).expect("hyperedges are validated on construction")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{bowtie, complete, path, rook_hypergraph};

    #[test]
    fn rejects_loops_and_range() {
        assert_eq!(Graph::from_edges(2, [(0, 0)]), Err(GraphError::SelfLoop(0)));
        assert_eq!(
            Graph::from_edges(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        );
    }

    #[test]
    fn edge_count_is_half_degree_sum() {
        let g = crate::generators::petersen();
        assert_eq!(2 * g.edge_count(), g.degrees().iter().sum::<usize>());
        assert_eq!(g.edges().len(), 15);
    }

    #[test]
    fn k1_is_identity_factor() {
        let h = path(4).unwrap();
        let k1 = Graph::empty(1);
        assert_eq!(strong_product(&k1, &h).unwrap(), h);
        assert_eq!(strong_product(&h, &k1).unwrap(), h);
        assert_eq!(modified_strong_product(&h, &k1).unwrap(), h);
    }

    #[test]
    fn complete_factors() {
        let k2 = complete(2).unwrap();
        assert_eq!(strong_product(&k2, &k2).unwrap(), complete(4).unwrap());
    }

    #[test]
    fn bowtie_times_k2_by_edge_rules() {
        let g = bowtie();
        let h = complete(2).unwrap();
        let product = strong_product(&g, &h).unwrap();
        let mut expected = Vec::new();
        for p in 0..10 {
            for q in (p + 1)..10 {
                let (a, b, c, d) = (p / 2, p % 2, q / 2, q % 2);
                let same_g = a == c && h.has_edge(b, d);
                let same_h = g.has_edge(a, c) && b == d;
                let both = g.has_edge(a, c) && h.has_edge(b, d);
                if same_g || same_h || both {
                    expected.push((p, q));
                }
            }
        }
        assert_eq!(product.edges(), expected);
        // 6 bowtie edges * 4 + 5 vertical rungs
        assert_eq!(product.edge_count(), 29);
    }

    #[test]
    fn modified_product_is_not_commutative() {
        let k2 = complete(2).unwrap();
        let p3 = path(3).unwrap();
        let a = modified_strong_product(&k2, &p3).unwrap();
        let b = modified_strong_product(&p3, &k2).unwrap();
        // K2 ⋈ P3: vertices (0,j) and (1,j'); joined when |j - j'| <= 1.
        assert_eq!(
            a.edges(),
            vec![(0, 3), (0, 4), (1, 3), (1, 4), (1, 5), (2, 4), (2, 5)]
        );
        // P3 ⋈ K2: layers 0,1,2 of two vertices each, consecutive layers complete.
        assert_eq!(
            b.edges(),
            vec![
                (0, 2),
                (0, 3),
                (1, 2),
                (1, 3),
                (2, 4),
                (2, 5),
                (3, 4),
                (3, 5)
            ]
        );
        let mut da = a.degrees();
        let mut db = b.degrees();
        da.sort_unstable();
        db.sort_unstable();
        assert_ne!(da, db);
    }

    #[test]
    fn bowtie_and_rook_representing_graphs() {
        let h = Hypergraph::new(5, vec![vec![0, 1, 2], vec![0, 3, 4]]).unwrap();
        assert_eq!(representing_graph(&h), bowtie());
        let rook = rook_hypergraph(3).unwrap();
        let k3 = complete(3).unwrap();
        assert_eq!(
            representing_graph(&rook),
            cartesian_product(&k3, &k3).unwrap()
        );
    }

    #[test]
    fn single_hyperedge_is_clique() {
        let h = Hypergraph::new(6, vec![vec![0, 1, 2, 3]]).unwrap();
        let g = representing_graph(&h);
        assert_eq!(g.edge_count(), 6);
        assert_eq!(g.degree(4), 0);
        assert_eq!(g.degree(5), 0);
    }

    #[test]
    fn hypergraph_validation() {
        assert!(matches!(
            Hypergraph::new(3, vec![vec![0]]),
            Err(GraphError::HyperedgeTooSmall { .. })
        ));
        assert!(matches!(
            Hypergraph::new(3, vec![vec![0, 1, 1]]),
            Err(GraphError::RepeatedVertex { .. })
        ));
        assert!(matches!(
            Hypergraph::new(3, vec![vec![0, 3]]),
            Err(GraphError::VertexOutOfRange { .. })
        ));
        let h = Hypergraph::new(4, vec![vec![0, 1, 2], vec![1, 2, 3]]).unwrap();
        assert!(!h.is_linear());
        assert_eq!(h.uniformity(), Some(3));
        assert_eq!(h.uncovered_vertices(), Vec::<usize>::new());
    }

    #[test]
    fn bipartition_detects_odd_cycle() {
        assert!(crate::generators::cycle(5).unwrap().bipartition().is_none());
        assert!(crate::generators::cycle(6).unwrap().bipartition().is_some());
    }
}
