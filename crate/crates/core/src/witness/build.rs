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

//! The witness constructions.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};

use super::certificate::{compute_verdicts, ColoringRecord, Construction, WitnessCertificate};
use super::{assemble, Hypothesis, SummandFamily, WitnessError};
use crate::coloring::{EdgeColoring, Factorization, HyperedgeColoring};
use crate::formats::ParseError;
use crate::generators::complete;
use crate::graph::{
    modified_strong_product, representing_graph, strong_product, Graph, Hypergraph,
};
use crate::linalg::{rat, ProjectorFamily, Rational, RationalMatrix};

/// What goes on the diagonal of a summand at a vertex its color class misses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DiagonalVariant {
    /// The construction's only choice (graph cases).
    Standard,
    /// `l - 1`, matching the top eigenvalue of the `K_l` blocks.
    Corrected,
    /// `1`, whatever the uniformity. Only works for `l = 2`.
    Literal,
}

impl DiagonalVariant {
    pub fn tag(self) -> &'static str {
        match self {
            DiagonalVariant::Standard => "standard",
            DiagonalVariant::Corrected => "corrected",
            DiagonalVariant::Literal => "literal",
        }
    }
}

impl fmt::Display for DiagonalVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for DiagonalVariant {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "standard" => Ok(DiagonalVariant::Standard),
            "corrected" => Ok(DiagonalVariant::Corrected),
            "literal" => Ok(DiagonalVariant::Literal),
            other => Err(ParseError::Structure(format!("unknown variant `{other}`"))),
        }
    }
}

/// Which hypergraph case to build.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HypergraphCase {
    /// More colors than the maximum degree; target `G ⊠ K_c`.
    A,
    /// Exactly maximum-degree many colors; one empty color class is added
    /// and the target is `G ⊠ K_{c+1}`.
    B,
    /// Regular hypergraph colored with degree many colors; target `G ⋈ K_c`.
    C,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct MaxDegreeOptions {
    /// Reject disconnected graphs. When off, only isolated vertices are
    /// rejected, which is all the block pattern needs.
    pub require_connected: bool,
}

impl Default for MaxDegreeOptions {
    fn default() -> Self {
        MaxDegreeOptions {
            require_connected: true,
        }
    }
}

/// A built witness together with its summands.
#[derive(Debug, Clone)]
pub struct Witness {
    pub certificate: WitnessCertificate,
    pub summands: SummandFamily,
    pub projectors: ProjectorFamily,
}

fn check(violations: Vec<Hypothesis>) -> Result<(), WitnessError> {
    if violations.is_empty() {
        Ok(())
    } else {
        Err(WitnessError::Hypotheses(violations))
    }
}

fn matching_summand(
    n: usize,
    edges: &[(usize, usize)],
    diagonal: &[(usize, Rational)],
) -> RationalMatrix {
    let mut a = RationalMatrix::zeros(n, n);
    for &(u, v) in edges {
        a.set(u, v, Rational::one());
        a.set(v, u, Rational::one());
    }
    for (v, x) in diagonal {
        a.set(*v, *v, x.clone());
    }
    a
}

fn finish(
    target: Graph,
    construction: Construction,
    variant: DiagonalVariant,
    summands: SummandFamily,
    coloring: ColoringRecord,
) -> Result<Witness, WitnessError> {
    let projectors = ProjectorFamily::new(summands.k())?;
    let matrix = assemble(&summands, &projectors)?;
    let (subsets, uniform) = summands.block_subsets();
    // Every construction here puts one value on all contributing summands of
    // a cell, so each block is a multiple of a partial projector sum.
    assert!(uniform, "construction produced a non-uniform cell");
    let k = summands.k();
    let subsets: Vec<Vec<usize>> = subsets.into_iter().filter(|s| s.len() < k).collect();
    let (l1, l2) = summands.lambdas();
    let verdicts = compute_verdicts(&target, &matrix, l1, l2, k, &subsets)?;
    let certificate = WitnessCertificate {
        target,
        construction,
        variant,
        k,
        lambda1: l1.clone(),
        lambda2: l2.clone(),
        coloring,
        subsets,
        matrix,
        verdicts,
    };
    Ok(Witness {
        certificate,
        summands,
        projectors,
    })
}

fn edge_record(coloring: &EdgeColoring) -> ColoringRecord {
    ColoringRecord::Edges {
        assignments: coloring
            .edges()
            .iter()
            .zip(coloring.colors())
            .map(|(&(u, v), &c)| (u, v, c))
            .collect(),
        palette: coloring.num_colors(),
    }
}

fn coloring_matches(g: &Graph, coloring: &EdgeColoring) -> bool {
    coloring.n() == g.n() && coloring.edges() == g.edges().as_slice()
}

/// `G ⋈ K_k` for a `k`-regular graph from a 1-factorization.
pub fn witness_onefactor(g: &Graph, factors: &Factorization) -> Result<Witness, WitnessError> {
    let mut violations = Vec::new();
    if g.edge_count() == 0 {
        violations.push(Hypothesis::NoEdges);
    }
    if g.regular_degree().is_none() {
        violations.push(Hypothesis::NotRegular);
    }
    let edges = g.edges();
    let mut seen: Vec<Option<usize>> = vec![None; edges.len()];
    for (i, f) in factors.factors.iter().enumerate() {
        let mut covered = vec![false; g.n()];
        for &(u, v) in f {
            let (u, v) = (u.min(v), u.max(v));
            match edges.binary_search(&(u, v)) {
                Ok(idx) => {
                    if let Some(j) = seen[idx].replace(i) {
                        violations.push(Hypothesis::NotPartition(format!(
                            "edge ({u}, {v}) in factors {j} and {i}"
                        )));
                    }
                }
                Err(_) => violations.push(Hypothesis::NotPartition(format!(
                    "({u}, {v}) is not an edge"
                ))),
            }
            for w in [u, v] {
                if w < g.n() {
                    if covered[w] {
                        violations.push(Hypothesis::NotPerfectMatching(i));
                    }
                    covered[w] = true;
                }
            }
        }
        if covered.iter().any(|c| !c) {
            violations.push(Hypothesis::NotPerfectMatching(i));
        }
    }
    if let Some(idx) = seen.iter().position(Option::is_none) {
        let (u, v) = edges[idx];
        violations.push(Hypothesis::NotPartition(format!(
            "edge ({u}, {v}) in no factor"
        )));
    }
    violations.dedup();
    check(violations)?;

    let n = g.n();
    let k = factors.factors.len();
    let summands = factors
        .factors
        .iter()
        .map(|f| matching_summand(n, f, &[]))
        .collect();
    let summands = SummandFamily::new(summands, rat(-1, 1), rat(1, 1))?;
    let target =
        modified_strong_product(g, &complete(k).expect("k >= 1")).expect("product of valid graphs");
    let mut assignments: Vec<(usize, usize, usize)> = factors
        .factors
        .iter()
        .enumerate()
        .flat_map(|(i, f)| f.iter().map(move |&(u, v)| (u.min(v), u.max(v), i)))
        .collect();
    assignments.sort();
    let record = ColoringRecord::Edges {
        assignments,
        palette: k,
    };
    finish(
        target,
        Construction::OneFactor,
        DiagonalVariant::Standard,
        summands,
        record,
    )
}

/// `G ⊠ K_{Δ+1}` from a proper edge coloring with at most `Δ + 1` colors.
pub fn witness_maxdeg(
    g: &Graph,
    coloring: &EdgeColoring,
    options: MaxDegreeOptions,
) -> Result<Witness, WitnessError> {
    let mut violations = Vec::new();
    if g.edge_count() == 0 {
        violations.push(Hypothesis::NoEdges);
    } else if options.require_connected && !g.is_connected() {
        violations.push(Hypothesis::Disconnected);
    }
    if !options.require_connected || g.is_connected() {
        violations.extend(
            (0..g.n())
                .filter(|&v| g.degree(v) == 0)
                .map(Hypothesis::IsolatedVertex),
        );
    }
    if !coloring_matches(g, coloring) {
        violations.push(Hypothesis::ForeignColoring);
    }
    let c = g.max_degree() + 1;
    if coloring.colors().iter().any(|&x| x >= c) {
        violations.push(Hypothesis::ColorCount {
            expected: "at most max degree + 1",
            colors: coloring.colors_used(),
            degree: g.max_degree(),
        });
    }
    check(violations)?;

    let coloring = coloring.with_palette(c)?;
    let summands = summands_with_diagonal(g, &coloring, Rational::one());
    let summands = SummandFamily::new(summands, rat(-1, 1), rat(1, 1))?;
    let target = strong_product(g, &complete(c).expect("c >= 1")).expect("product of valid graphs");
    finish(
        target,
        Construction::MaxDegree,
        DiagonalVariant::Standard,
        summands,
        edge_record(&coloring),
    )
}

/// Matching of each color class, plus `fill` on the diagonal wherever the
/// color is missing.
fn summands_with_diagonal(
    g: &Graph,
    coloring: &EdgeColoring,
    fill: Rational,
) -> Vec<RationalMatrix> {
    let n = g.n();
    let incidence = coloring.incidence();
    coloring
        .classes()
        .iter()
        .enumerate()
        .map(|(i, class)| {
            let diagonal: Vec<(usize, Rational)> = (0..n)
                .filter(|&v| !incidence[v][i])
                .map(|v| (v, fill.clone()))
                .collect();
            matching_summand(n, class, &diagonal)
        })
        .collect()
}

/// `G ⋈ K_Δ` from a `Δ`-edge-coloring, with `+1` on the diagonal wherever a
/// color is missing. Exploratory: for non-regular graphs the diagonal blocks
/// of deficient vertices are nonzero, which the `⋈` pattern forbids.
pub fn witness_signed_diagonal(
    g: &Graph,
    coloring: &EdgeColoring,
) -> Result<Witness, WitnessError> {
    let mut violations = Vec::new();
    if g.edge_count() == 0 {
        violations.push(Hypothesis::NoEdges);
    }
    if !coloring_matches(g, coloring) {
        violations.push(Hypothesis::ForeignColoring);
    }
    let delta = g.max_degree();
    if coloring.num_colors() != delta {
        violations.push(Hypothesis::ColorCount {
            expected: "exactly max degree",
            colors: coloring.num_colors(),
            degree: delta,
        });
    }
    check(violations)?;

    let summands = summands_with_diagonal(g, coloring, Rational::one());
    let summands = SummandFamily::new(summands, rat(-1, 1), rat(1, 1))?;
    let target = modified_strong_product(g, &complete(delta).expect("delta >= 1"))
        .expect("product of valid graphs");
    finish(
        target,
        Construction::SignedDiagonal,
        DiagonalVariant::Standard,
        summands,
        edge_record(coloring),
    )
}

/// Witness on the representing graph of an `l`-uniform linear hypergraph.
///
/// Each color class contributes `J - I` on every hyperedge it contains, so a
/// summand has eigenvalues `-1` and `l - 1`. Vertices a class misses get the
/// diagonal fill given by `variant`.
pub fn witness_hypergraph(
    h: &Hypergraph,
    coloring: &HyperedgeColoring,
    case: HypergraphCase,
    variant: DiagonalVariant,
) -> Result<Witness, WitnessError> {
    let mut violations = Vec::new();
    if h.edges().is_empty() {
        violations.push(Hypothesis::NoEdges);
    }
    let l = h.uniformity();
    if l.is_none() && !h.edges().is_empty() {
        violations.push(Hypothesis::NotUniform);
    }
    if !h.is_linear() {
        violations.push(Hypothesis::NotLinear);
    }
    let uncovered = h.uncovered_vertices();
    if !uncovered.is_empty() {
        violations.push(Hypothesis::UncoveredVertices(uncovered));
    }
    if coloring.colors().len() != h.edges().len() {
        violations.push(Hypothesis::ForeignColoring);
    }
    let c = coloring.num_colors();
    let delta = h.max_degree();
    let count = |expected| Hypothesis::ColorCount {
        expected,
        colors: c,
        degree: delta,
    };
    match case {
        HypergraphCase::A if c <= delta => violations.push(count("more colors than max degree")),
        HypergraphCase::B if c != delta => violations.push(count("exactly max degree colors")),
        HypergraphCase::C => {
            if h.regular_degree().is_none() {
                violations.push(Hypothesis::NotRegular);
            }
            if c != delta {
                violations.push(count("exactly degree colors"));
            }
        }
        _ => {}
    }
    check(violations)?;

    let l = l.expect("checked uniform");
    let variant = match variant {
        DiagonalVariant::Standard => DiagonalVariant::Corrected,
        v => v,
    };
    let fill = match variant {
        DiagonalVariant::Literal => Rational::one(),
        _ => rat(l as i64 - 1, 1),
    };
    let palette = match case {
        HypergraphCase::B => c + 1,
        _ => c,
    };
    let n = h.n();
    let mut summands = vec![RationalMatrix::zeros(n, n); palette];
    let mut covered = vec![vec![false; palette]; n];
    for (e, &color) in h.edges().iter().zip(coloring.colors()) {
        for &u in e {
            covered[u][color] = true;
            for &v in e {
                if u != v {
                    summands[color].set(u, v, Rational::one());
                }
            }
        }
    }
    for (i, a) in summands.iter_mut().enumerate() {
        for (v, cov) in covered.iter().enumerate() {
            if !cov[i] {
                debug_assert!(a.get(v, v).is_zero());
                a.set(v, v, fill.clone());
            }
        }
    }
    let summands = SummandFamily::new(summands, rat(-1, 1), rat(l as i64 - 1, 1))?;
    let g = representing_graph(h);
    let kc = complete(palette).expect("palette >= 1");
    let target = match case {
        HypergraphCase::C => modified_strong_product(&g, &kc),
        _ => strong_product(&g, &kc),
    }
    .expect("product of valid graphs");
    let record = ColoringRecord::Hyperedges {
        assignments: h
            .edges()
            .iter()
            .cloned()
            .zip(coloring.colors().iter().copied())
            .collect(),
        palette,
    };
    finish(
        target,
        Construction::Hypergraph(case),
        variant,
        summands,
        record,
    )
}
