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

//! Graph and hypergraph sources: named families or files.

use std::fs;
use std::path::{Path, PathBuf};

use clap::Args;
use twoeig_core::formats::edge_list::parse_edge_list;
use twoeig_core::formats::graph6::parse_graph6;
use twoeig_core::formats::hypergraph::parse_hypergraph;
use twoeig_core::generators::{generate, Generated};
use twoeig_core::graph::Graph;

use crate::fail::{io, Failure, Kind, Result};

#[derive(Debug, Clone, Args)]
pub struct Source {
    /// Named family, e.g. `cycle`, `rook_hypergraph`, `petersen`.
    #[arg(long, conflicts_with_all = ["graph", "hypergraph"])]
    pub family: Option<String>,
    /// First family parameter.
    #[arg(long)]
    pub n: Option<usize>,
    /// Second family parameter.
    #[arg(long)]
    pub m: Option<usize>,
    /// Graph file: graph6 (`.g6`) or edge list.
    #[arg(long, conflicts_with = "hypergraph")]
    pub graph: Option<PathBuf>,
    /// Hypergraph file (`{"n": .., "edges": [[..], ..]}`).
    #[arg(long)]
    pub hypergraph: Option<PathBuf>,
}

pub fn read(path: &Path) -> Result<String> {
    fs::read_to_string(path).map_err(|e| io(path, e))
}

fn graph_file(path: &Path) -> Result<Graph> {
    let text = read(path)?;
    let g6 = matches!(
        path.extension().and_then(|e| e.to_str()),
        Some("g6" | "graph6")
    );
    if g6 {
        return Ok(parse_graph6(&text)?);
    }
    match parse_edge_list(&text) {
        Ok(g) => Ok(g),
        // A lone token is most likely graph6 without the extension.
        Err(e) => match text.split_whitespace().collect::<Vec<_>>().as_slice() {
            [token] => parse_graph6(token).map_err(|_| e.into()),
            _ => Err(e.into()),
        },
    }
}

impl Source {
    fn params(&self) -> Vec<usize> {
        self.n.into_iter().chain(self.m).collect()
    }

    pub fn load(&self) -> Result<Generated> {
        if let Some(f) = &self.family {
            return Ok(generate(f, &self.params())?);
        }
        if let Some(p) = &self.graph {
            return Ok(Generated::Graph(graph_file(p)?));
        }
        if let Some(p) = &self.hypergraph {
            return Ok(Generated::Hypergraph(parse_hypergraph(&read(p)?)?));
        }
        Err(Failure::new(
            Kind::Parse,
            "no input: pass --family, --graph or --hypergraph",
        ))
    }

    pub fn graph(&self) -> Result<Graph> {
        match self.load()? {
            Generated::Graph(g) => Ok(g),
            Generated::Hypergraph(_) => Err(Failure::new(
                Kind::Parse,
                "expected a graph, got a hypergraph",
            )),
        }
    }
}

/// `name[:p1[,p2]]` or a path to a graph file.
pub fn graph_spec(spec: &str) -> Result<Graph> {
    let (name, params) = spec.split_once(':').unwrap_or((spec, ""));
    if name.parse::<twoeig_core::generators::Family>().is_ok() {
        let params = params
            .split(',')
            .filter(|s| !s.is_empty())
            .map(|s| {
                s.parse::<usize>().map_err(|_| {
                    Failure::new(Kind::Generate, format!("bad parameter `{s}` in `{spec}`"))
                })
            })
            .collect::<Result<Vec<_>>>()?;
        return match generate(name, &params)? {
            Generated::Graph(g) => Ok(g),
            Generated::Hypergraph(_) => Err(Failure::new(
                Kind::Parse,
                format!("`{name}` is a hypergraph"),
            )),
        };
    }
    graph_file(Path::new(spec))
}
