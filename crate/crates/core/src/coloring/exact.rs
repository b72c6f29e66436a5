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

//! Exhaustive backtracking colorers for the line graph of a graph and the
//! intersection graph of a hypergraph.
//!
//! The search colors the most saturated uncolored item first (ties broken
//! by lowest index), tries colors lowest first, and never opens more than one
//! fresh color per node. Running out of budget yields [`Search::Undecided`],
//! never a guess.

use super::{ColoringError, EdgeColoring, HyperedgeColoring, Search};
use crate::graph::{Graph, Hypergraph};

struct Backtracker<'a> {
    adj: &'a [Vec<usize>],
    k: usize,
    color: Vec<Option<usize>>,
    /// `blocked[v][c]`: number of colored neighbors of `v` with color `c`.
    blocked: Vec<Vec<u32>>,
    nodes: u64,
    budget: u64,
}

enum Step {
    Done,
    Dead,
    OutOfBudget,
}

impl<'a> Backtracker<'a> {
    fn new(adj: &'a [Vec<usize>], k: usize, budget: u64) -> Self {
        Backtracker {
            adj,
            k,
            color: vec![None; adj.len()],
            blocked: vec![vec![0; k]; adj.len()],
            nodes: 0,
            budget,
        }
    }

    fn saturation(&self, v: usize) -> usize {
        self.blocked[v].iter().filter(|&&b| b > 0).count()
    }

    fn pick(&self) -> Option<usize> {
        let mut best: Option<(usize, usize)> = None;
        for v in 0..self.adj.len() {
            if self.color[v].is_some() {
                continue;
            }
            let s = self.saturation(v);
            if best.is_none_or(|(_, bs)| s > bs) {
                best = Some((v, s));
            }
        }
        best.map(|(v, _)| v)
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.color[v] = Some(c);
        for &w in &self.adj[v] {
            self.blocked[w][c] += 1;
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.color[v] = None;
        for &w in &self.adj[v] {
            self.blocked[w][c] -= 1;
        }
    }

    fn search(&mut self, colors_open: usize) -> Step {
        self.nodes += 1;
        if self.nodes > self.budget {
            return Step::OutOfBudget;
        }
        let Some(v) = self.pick() else {
            return Step::Done;
        };
        let limit = (colors_open + 1).min(self.k);
        for c in 0..limit {
            if self.blocked[v][c] > 0 {
                continue;
            }
            self.assign(v, c);
            match self.search(colors_open.max(c + 1)) {
                Step::Dead => self.unassign(v, c),
                other => return other,
            }
        }
        Step::Dead
    }

    fn run(mut self) -> Search<Vec<usize>> {
        if self.adj.is_empty() {
            return Search::Found(Vec::new());
        }
        if self.k == 0 {
            return Search::Infeasible;
        }
        match self.search(0) {
            Step::Done => Search::Found(self.color.into_iter().map(Option::unwrap).collect()),
            Step::Dead => Search::Infeasible,
            Step::OutOfBudget => Search::Undecided {
                nodes: self.nodes - 1,
            },
        }
    }
}

fn adjacency_lists(g: &Graph) -> Vec<Vec<usize>> {
    (0..g.n()).map(|v| g.neighbors(v).to_vec()).collect()
}

/// Line graph adjacency over `g.edges()` indices.
fn line_graph(g: &Graph) -> Vec<Vec<usize>> {
    let edges = g.edges();
    let mut incident: Vec<Vec<usize>> = vec![Vec::new(); g.n()];
    for (i, &(u, v)) in edges.iter().enumerate() {
        incident[u].push(i);
        incident[v].push(i);
    }
    let mut adj = vec![Vec::new(); edges.len()];
    for list in &incident {
        for &a in list {
            for &b in list {
                if a != b {
                    adj[a].push(b);
                }
            }
        }
    }
    for l in &mut adj {
        l.sort_unstable();
        l.dedup();
    }
    adj
}

/// Decides whether `g` has a proper `k`-edge-coloring, searching at most
/// `budget` nodes.
pub fn exact_edge_color(g: &Graph, k: usize, budget: u64) -> Search<EdgeColoring> {
    let adj = line_graph(g);
    match Backtracker::new(&adj, k, budget).run() {
        Search::Found(colors) => Search::Found(
            EdgeColoring::new(g, colors, k).expect("backtracker only emits proper colorings"),
        ),
        Search::Infeasible => Search::Infeasible,
        Search::Undecided { nodes } => Search::Undecided { nodes },
    }
}

/// Chromatic index: `Δ` if the exact search finds a `Δ`-coloring, otherwise
/// `Δ + 1` via Misra–Gries.
pub fn chromatic_index(g: &Graph, budget: u64) -> Search<EdgeColoring> {
    if g.edge_count() == 0 {
        return Search::Found(EdgeColoring::new(g, Vec::new(), 0).unwrap());
    }
    match exact_edge_color(g, g.max_degree(), budget) {
        Search::Infeasible => match super::vizing_color(g) {
            Ok(c) => Search::Found(c),
            Err(_) => unreachable!("graph has edges"),
        },
        other => other,
    }
}

/// The perfect matchings of a 1-factorization, in color order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub factors: Vec<Vec<(usize, usize)>>,
}

/// Splits a `k`-regular graph into `k` perfect matchings using the exact
/// `k`-edge-colorer.
pub fn one_factorize(g: &Graph, budget: u64) -> Result<Factorization, ColoringError> {
    let k = g.regular_degree().ok_or(ColoringError::NotRegular)?;
    if k == 0 {
        return Ok(Factorization {
            factors: Vec::new(),
        });
    }
    if g.n() % 2 == 1 {
        return Err(ColoringError::Infeasible { colors: k });
    }
    let coloring = match exact_edge_color(g, k, budget) {
        Search::Found(c) => c,
        Search::Infeasible => return Err(ColoringError::Infeasible { colors: k }),
        Search::Undecided { nodes } => return Err(ColoringError::Undecided { nodes }),
    };
    let factors = coloring.classes();
    for f in &factors {
        assert_eq!(f.len(), g.n() / 2, "color class of a k-regular k-coloring");
    }
    Ok(Factorization { factors })
}

/// Decides whether the hyperedges of `h` can be properly colored with `k`
/// colors.
pub fn color_hyperedges(h: &Hypergraph, k: usize, budget: u64) -> Search<HyperedgeColoring> {
    let adj = adjacency_lists(&h.intersection_graph());
    match Backtracker::new(&adj, k, budget).run() {
        Search::Found(colors) => Search::Found(
            HyperedgeColoring::new(h, colors, k).expect("backtracker only emits proper colorings"),
        ),
        Search::Infeasible => Search::Infeasible,
        Search::Undecided { nodes } => Search::Undecided { nodes },
    }
}

/// Exact hyperedge chromatic index by descending search from a greedy
/// upper bound; `budget` caps each descent step. The returned coloring has a
/// palette of exactly `χ'` colors.
pub fn hypergraph_chromatic_index(h: &Hypergraph, budget: u64) -> Search<HyperedgeColoring> {
    let inter = h.intersection_graph();
    let adj = adjacency_lists(&inter);
    // Greedy in index order gives an upper bound.
    let mut greedy = vec![0usize; adj.len()];
    for v in 0..adj.len() {
        let taken: Vec<usize> = adj[v]
            .iter()
            .filter(|&&w| w < v)
            .map(|&w| greedy[w])
            .collect();
        greedy[v] = (0..).find(|c| !taken.contains(c)).unwrap();
    }
    let upper = greedy.iter().map(|&c| c + 1).max().unwrap_or(0);
    let mut best = HyperedgeColoring::new(h, greedy, upper).expect("greedy coloring is proper");
    for k in (0..upper).rev() {
        match color_hyperedges(h, k, budget) {
            Search::Found(c) => best = c,
            Search::Infeasible => return Search::Found(best),
            Search::Undecided { nodes } => return Search::Undecided { nodes },
        }
    }
    Search::Found(best)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::testing::is_proper_brute;
    use crate::coloring::DEFAULT_NODE_BUDGET as B;
    use crate::generators::*;

    #[test]
    fn even_cycle_alternates() {
        let c4 = cycle(4).unwrap();
        let c = exact_edge_color(&c4, 2, B).found().unwrap();
        assert_eq!(c.edges(), &[(0, 1), (0, 3), (1, 2), (2, 3)]);
        assert_eq!(c.colors(), &[0, 1, 1, 0]);
    }

    #[test]
    fn odd_cycle_needs_three() {
        let c5 = cycle(5).unwrap();
        assert!(exact_edge_color(&c5, 2, B).is_infeasible());
        assert!(is_proper_brute(
            &exact_edge_color(&c5, 3, B).found().unwrap()
        ));
    }

    #[test]
    fn petersen_is_class_two() {
        let p = petersen();
        assert!(exact_edge_color(&p, 3, B).is_infeasible());
        assert_eq!(chromatic_index(&p, B).found().unwrap().colors_used(), 4);
        assert_eq!(
            one_factorize(&p, B),
            Err(ColoringError::Infeasible { colors: 3 })
        );
    }

    #[test]
    fn k4_has_three_coloring() {
        let k4 = complete(4).unwrap();
        let c = exact_edge_color(&k4, 3, B).found().unwrap();
        assert!(is_proper_brute(&c));
        let f = one_factorize(&k4, B).unwrap();
        assert_eq!(f.factors.len(), 3);
        let mut all: Vec<_> = f.factors.concat();
        all.sort();
        assert_eq!(all, k4.edges());
    }

    #[test]
    fn k33_factorization() {
        let f = one_factorize(&complete_bipartite(3, 3).unwrap(), B).unwrap();
        assert_eq!(f.factors.len(), 3);
        assert!(f.factors.iter().all(|m| m.len() == 3));
    }

    #[test]
    fn factorize_errors() {
        assert_eq!(
            one_factorize(&path(3).unwrap(), B),
            Err(ColoringError::NotRegular)
        );
        assert_eq!(
            one_factorize(&complete(5).unwrap(), B),
            Err(ColoringError::Infeasible { colors: 4 })
        );
    }

    #[test]
    fn tiny_budget_is_undecided() {
        assert!(matches!(
            exact_edge_color(&petersen(), 3, 5),
            Search::Undecided { .. }
        ));
    }

    #[test]
    fn monotone_in_k() {
        for g in [
            cycle(5).unwrap(),
            complete(4).unwrap(),
            petersen(),
            complete(5).unwrap(),
        ] {
            let mut prev = false;
            for k in 0..=g.max_degree() + 1 {
                let ok = exact_edge_color(&g, k, B).found().is_some();
                assert!(!prev || ok, "k-1 colorable but not k");
                prev = ok;
            }
            assert!(prev);
        }
    }

    #[test]
    fn rook_rows_and_columns() {
        let h = rook_hypergraph(3).unwrap();
        let c = color_hyperedges(&h, 2, B).found().unwrap();
        assert_eq!(c.colors(), &[0, 0, 0, 1, 1, 1]);
    }

    #[test]
    fn hyperedge_indices() {
        assert!(color_hyperedges(&bowtie_hypergraph(), 1, B).is_infeasible());
        let oct = hypergraph_chromatic_index(&octahedron_triangle_hypergraph(), B)
            .found()
            .unwrap();
        assert_eq!(oct.num_colors(), 4);
        let inter = octahedron_triangle_hypergraph().intersection_graph();
        assert_eq!(inter, complete(4).unwrap());
        let rook = hypergraph_chromatic_index(&rook_hypergraph(4).unwrap(), B)
            .found()
            .unwrap();
        assert_eq!(rook.num_colors(), 2);
    }

    #[test]
    fn regular_classes_are_perfect() {
        for g in [
            hypercube(3).unwrap(),
            cycle(8).unwrap(),
            complete(6).unwrap(),
        ] {
            let k = g.regular_degree().unwrap();
            let c = exact_edge_color(&g, k, B).found().unwrap();
            for class in c.classes() {
                assert_eq!(class.len(), g.n() / 2);
                let mut covered: Vec<usize> = class.iter().flat_map(|&(u, v)| [u, v]).collect();
                covered.sort();
                assert_eq!(covered, (0..g.n()).collect::<Vec<_>>());
            }
        }
    }
}
