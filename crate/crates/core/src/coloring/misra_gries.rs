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

//! Misra–Gries edge coloring with at most `Δ + 1` colors.
//!
//! Reference: J. Misra and D. Gries, "A constructive proof of Vizing's
//! theorem", Information Processing Letters 41 (1992).

use super::{ColoringError, EdgeColoring};
use crate::graph::Graph;

/// Partial coloring state: `at[v][c]` is the neighbor joined to `v` by the
/// edge of color `c`, if any.
struct Palette {
    at: Vec<Vec<Option<usize>>>,
}

impl Palette {
    fn new(n: usize, colors: usize) -> Self {
        Palette {
            at: vec![vec![None; colors]; n],
        }
    }

    fn is_free(&self, v: usize, c: usize) -> bool {
        self.at[v][c].is_none()
    }

    fn free_color(&self, v: usize) -> usize {
        (0..self.at[v].len())
            .find(|&c| self.is_free(v, c))
            .expect("a vertex of degree <= Δ always misses a color of Δ + 1")
    }

    fn color_of(&self, u: usize, v: usize) -> Option<usize> {
        self.at[u].iter().position(|&w| w == Some(v))
    }

    fn set(&mut self, u: usize, v: usize, c: usize) {
        debug_assert!(self.is_free(u, c) && self.is_free(v, c));
        self.at[u][c] = Some(v);
        self.at[v][c] = Some(u);
    }

    fn clear(&mut self, u: usize, v: usize) {
        if let Some(c) = self.color_of(u, v) {
            self.at[u][c] = None;
            self.at[v][c] = None;
        }
    }

    /// Maximal fan of `u` starting at the uncolored edge `(u, v)`.
    fn maximal_fan(&self, g: &Graph, u: usize, v: usize) -> Vec<usize> {
        let mut fan = vec![v];
        loop {
            let last = *fan.last().unwrap();
            let next = g.neighbors(u).iter().copied().find(|&w| {
                !fan.contains(&w) && self.color_of(u, w).is_some_and(|c| self.is_free(last, c))
            });
            match next {
                Some(w) => fan.push(w),
                None => return fan,
            }
        }
    }

    /// Swaps colors `c` and `d` along the alternating path leaving `u` by its
    /// `d`-edge.
    fn invert_path(&mut self, u: usize, c: usize, d: usize) {
        let mut path = Vec::new();
        let (mut cur, mut col) = (u, d);
        while let Some(next) = self.at[cur][col] {
            path.push((cur, next, col));
            cur = next;
            col = if col == d { c } else { d };
        }
        for &(x, y, col) in &path {
            self.at[x][col] = None;
            self.at[y][col] = None;
        }
        for &(x, y, col) in &path {
            self.set(x, y, if col == d { c } else { d });
        }
    }
}

/// Colors the edges of `g` with at most `Δ(g) + 1` colors, processing edges
/// in canonical order. The returned palette has exactly `Δ(g) + 1` colors.
pub fn vizing_color(g: &Graph) -> Result<EdgeColoring, ColoringError> {
    if g.edge_count() == 0 {
        return Err(ColoringError::NoEdges);
    }
    let palette_size = g.max_degree() + 1;
    let mut p = Palette::new(g.n(), palette_size);

    for (u, v) in g.edges() {
        let fan = p.maximal_fan(g, u, v);
        let c = p.free_color(u);
        let d = p.free_color(*fan.last().unwrap());
        if c != d {
            p.invert_path(u, c, d);
        }

        // Longest prefix that is still a fan; stop at the first vertex missing d.
        let mut w = None;
        for i in 0..fan.len() {
            if i > 0 {
                let still_fan = p
                    .color_of(u, fan[i])
                    .is_some_and(|col| p.is_free(fan[i - 1], col));
                if !still_fan {
                    break;
                }
            }
            if p.is_free(fan[i], d) {
                w = Some(i);
                break;
            }
        }
        let w = w.expect("Misra–Gries invariant: some fan prefix ends at a vertex missing d");

        let shifted: Vec<usize> = (0..w).map(|i| p.color_of(u, fan[i + 1]).unwrap()).collect();
        for &x in &fan[..=w] {
            p.clear(u, x);
        }
        for (i, &col) in shifted.iter().enumerate() {
            p.set(u, fan[i], col);
        }
        p.set(u, fan[w], d);
    }

    let colors = g
        .edges()
        .into_iter()
        .map(|(u, v)| p.color_of(u, v).expect("every edge colored"))
        .collect();
    let coloring = EdgeColoring::new(g, colors, palette_size)?;
    assert!(coloring.colors_used() <= g.max_degree() + 1);
    Ok(coloring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::testing::is_proper_brute;
    use crate::generators::{complete, hypercube, path, petersen};
    use proptest::prelude::*;

    #[test]
    fn small_graphs() {
        for g in [path(3).unwrap(), complete(4).unwrap(), complete(7).unwrap()] {
            let c = vizing_color(&g).unwrap();
            assert!(is_proper_brute(&c));
            assert!(c.colors_used() <= g.max_degree() + 1);
        }
        assert!(vizing_color(&Graph::empty(3)).is_err());
    }

    #[test]
    fn petersen_uses_four() {
        let c = vizing_color(&petersen()).unwrap();
        assert!(is_proper_brute(&c));
        // Class 2: three colors are impossible (see exact search tests).
        assert_eq!(c.colors_used(), 4);
    }

    #[test]
    fn deterministic() {
        let g = hypercube(4).unwrap();
        assert_eq!(vizing_color(&g).unwrap(), vizing_color(&g).unwrap());
    }

    proptest! {
        #[test]
        fn random_graphs_stay_within_bound(n in 2usize..14, bits in proptest::collection::vec(any::<bool>(), 91)) {
            let mut it = bits.into_iter();
            let g = Graph::from_fn(n, |_, _| it.next().unwrap_or(false));
            prop_assume!(g.edge_count() > 0);
            let c = vizing_color(&g).unwrap();
            prop_assert!(is_proper_brute(&c));
            prop_assert!(c.colors_used() <= g.max_degree() + 1);
        }
    }
}
