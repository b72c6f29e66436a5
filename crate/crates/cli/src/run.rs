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

//! Witness construction with automatic colorings.

use clap::ValueEnum;
use twoeig_core::coloring::{
    bipartite_delta_color, color_hyperedges, exact_edge_color, hypergraph_chromatic_index,
    one_factorize, vizing_color, EdgeColoring, Factorization, HyperedgeColoring, Search,
};
use twoeig_core::formats::coloring::{parse_edge_coloring, parse_hyperedge_coloring};
use twoeig_core::generators::Generated;
use twoeig_core::graph::{Graph, Hypergraph};
use twoeig_core::linalg::{verify_nowhere_zero, NowhereZeroMode, ProjectorFamily};
use twoeig_core::witness::{
    witness_hypergraph, witness_maxdeg, witness_onefactor, witness_signed_diagonal,
    DiagonalVariant, HypergraphCase, MaxDegreeOptions, Witness,
};

use crate::fail::{Failure, Kind, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Theorem {
    /// k-regular graph and a 1-factorization; target G ⋈ K_k.
    #[value(name = "one-factor", alias = "3.1")]
    OneFactor,
    /// Connected graph and a (Δ+1)-edge-coloring; target G ⊠ K_{Δ+1}.
    #[value(name = "max-degree", alias = "3.2")]
    MaxDegree,
    /// Hypergraph colored with more than Δ colors; target G ⊠ K_c.
    #[value(name = "hyper-a", alias = "3.4a")]
    HyperA,
    /// Hypergraph colored with Δ colors plus an empty class; target G ⊠ K_{c+1}.
    #[value(name = "hyper-b", alias = "3.4b")]
    HyperB,
    /// Regular hypergraph colored with Δ colors; target G ⋈ K_c.
    #[value(name = "hyper-c", alias = "3.4c")]
    HyperC,
    /// Δ-edge-coloring with +1 fill on missed colors; target G ⋈ K_Δ.
    #[value(name = "signed-diagonal")]
    SignedDiagonal,
}

#[derive(Debug, Clone, Default)]
pub struct Options {
    pub coloring: Option<String>,
    pub literal: bool,
    pub relax_connectivity: bool,
    pub search_nodes: u64,
}

fn found<T>(search: Search<T>, what: &str) -> Result<T> {
    match search {
        Search::Found(x) => Ok(x),
        Search::Infeasible => Err(Failure::new(
            Kind::Coloring,
            format!("{what}: no such coloring exists"),
        )),
        Search::Undecided { nodes } => Err(Failure::new(
            Kind::Coloring,
            format!("{what}: undecided after {nodes} search nodes"),
        )),
    }
}

fn need_graph(input: Generated) -> Result<Graph> {
    match input {
        Generated::Graph(g) => Ok(g),
        Generated::Hypergraph(_) => {
            Err(Failure::new(Kind::Parse, "this construction takes a graph"))
        }
    }
}

fn need_hypergraph(input: Generated) -> Result<Hypergraph> {
    match input {
        Generated::Hypergraph(h) => Ok(h),
        Generated::Graph(_) => Err(Failure::new(
            Kind::Parse,
            "this construction takes a hypergraph",
        )),
    }
}

fn edge_coloring(
    g: &Graph,
    opts: &Options,
    fallback: impl FnOnce() -> Result<EdgeColoring>,
) -> Result<EdgeColoring> {
    match &opts.coloring {
        Some(text) => Ok(parse_edge_coloring(text, g)?),
        None => fallback(),
    }
}

fn delta_coloring(g: &Graph, budget: u64) -> Result<EdgeColoring> {
    if g.bipartition().is_some() {
        return Ok(bipartite_delta_color(g)?);
    }
    found(
        exact_edge_color(g, g.max_degree(), budget),
        "Δ-edge-coloring",
    )
}

fn hyper_coloring(h: &Hypergraph, theorem: Theorem, opts: &Options) -> Result<HyperedgeColoring> {
    if let Some(text) = &opts.coloring {
        return Ok(parse_hyperedge_coloring(text, h)?);
    }
    let delta = h.max_degree();
    match theorem {
        Theorem::HyperA => {
            let c = found(
                hypergraph_chromatic_index(h, opts.search_nodes),
                "hyperedge coloring",
            )?;
            if c.num_colors() > delta {
                Ok(c)
            } else {
                Ok(c.with_palette(delta + 1)?)
            }
        }
        _ => found(
            color_hyperedges(h, delta, opts.search_nodes),
            "Δ-hyperedge-coloring",
        ),
    }
}

pub fn build(theorem: Theorem, input: Generated, opts: &Options) -> Result<Witness> {
    let variant = if opts.literal {
        DiagonalVariant::Literal
    } else {
        DiagonalVariant::Corrected
    };
    let case = match theorem {
        Theorem::HyperA => HypergraphCase::A,
        Theorem::HyperB => HypergraphCase::B,
        Theorem::HyperC => HypergraphCase::C,
        Theorem::OneFactor => {
            let g = need_graph(input)?;
            let factors = match &opts.coloring {
                Some(text) => Factorization {
                    factors: parse_edge_coloring(text, &g)?.classes(),
                },
                None => one_factorize(&g, opts.search_nodes)?,
            };
            return Ok(witness_onefactor(&g, &factors)?);
        }
        Theorem::MaxDegree => {
            let g = need_graph(input)?;
            let c = edge_coloring(&g, opts, || Ok(vizing_color(&g)?))?;
            let options = MaxDegreeOptions {
                require_connected: !opts.relax_connectivity,
            };
            return Ok(witness_maxdeg(&g, &c, options)?);
        }
        Theorem::SignedDiagonal => {
            let g = need_graph(input)?;
            let c = edge_coloring(&g, opts, || delta_coloring(&g, opts.search_nodes))?;
            return Ok(witness_signed_diagonal(&g, &c)?);
        }
    };
    let h = need_hypergraph(input)?;
    let c = hyper_coloring(&h, theorem, opts)?;
    Ok(witness_hypergraph(&h, &c, case, variant)?)
}

/// Runs the exhaustive partial-sum check for the witness's projector size.
pub fn exhaustive_nowhere_zero(k: usize) -> Result<bool> {
    let fam = ProjectorFamily::new(k)?;
    Ok(verify_nowhere_zero(&fam, &NowhereZeroMode::Exhaustive)?.is_clean())
}
