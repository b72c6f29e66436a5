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

use super::{ColoringError, EdgeColoring};
use crate::graph::Graph;

/// König-style `Δ`-edge-coloring of a bipartite graph by alternating-path
/// recoloring.
pub fn bipartite_delta_color(g: &Graph) -> Result<EdgeColoring, ColoringError> {
    if g.bipartition().is_none() {
        return Err(ColoringError::NotBipartite);
    }
    let delta = g.max_degree();
    let mut at: Vec<Vec<Option<usize>>> = vec![vec![None; delta]; g.n()];
    let free = |at: &Vec<Vec<Option<usize>>>, v: usize| {
        (0..delta)
            .find(|&c| at[v][c].is_none())
            .expect("an uncolored edge leaves a free color at both ends")
    };

    for (u, v) in g.edges() {
        let a = free(&at, u);
        if at[v][a].is_some() {
            let b = free(&at, v);
            // Flip the a/b path that leaves v along its a-edge; in a bipartite
            // graph it cannot end at u.
            let mut path = Vec::new();
            let (mut cur, mut col) = (v, a);
            while let Some(next) = at[cur][col] {
                path.push((cur, next, col));
                cur = next;
                col = if col == a { b } else { a };
            }
            for &(x, y, col) in &path {
                at[x][col] = None;
                at[y][col] = None;
            }
            for &(x, y, col) in &path {
                let new = if col == a { b } else { a };
                at[x][new] = Some(y);
                at[y][new] = Some(x);
            }
        }
        debug_assert!(at[u][a].is_none() && at[v][a].is_none());
        at[u][a] = Some(v);
        at[v][a] = Some(u);
    }

    let colors = g
        .edges()
        .into_iter()
        .map(|(u, v)| at[u].iter().position(|&w| w == Some(v)).unwrap())
        .collect();
    EdgeColoring::new(g, colors, delta)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::testing::is_proper_brute;
    use crate::generators::{complete, complete_bipartite, cycle, hypercube, path};

    #[test]
    fn delta_colors() {
        for (g, delta) in [
            (complete_bipartite(3, 3).unwrap(), 3),
            (path(4).unwrap(), 2),
            (cycle(6).unwrap(), 2),
            (hypercube(4).unwrap(), 4),
            (complete_bipartite(2, 5).unwrap(), 5),
        ] {
            let c = bipartite_delta_color(&g).unwrap();
            assert!(is_proper_brute(&c));
            assert_eq!(c.num_colors(), delta);
            assert_eq!(c.colors_used(), delta);
        }
    }

    #[test]
    fn rejects_odd_cycle() {
        assert_eq!(
            bipartite_delta_color(&complete(3).unwrap()),
            Err(ColoringError::NotBipartite)
        );
    }
}
