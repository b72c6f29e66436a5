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

mod fail;
mod input;
mod run;
mod suite;

use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use twoeig_core::coloring::{
    bipartite_delta_color, chromatic_index, color_hyperedges, exact_edge_color,
    hypergraph_chromatic_index, one_factorize, vizing_color, Search, DEFAULT_NODE_BUDGET,
};
use twoeig_core::formats::coloring::{emit_edge_coloring, emit_hyperedge_coloring};
use twoeig_core::formats::dot::emit_dot;
use twoeig_core::formats::edge_list::emit_edge_list;
use twoeig_core::formats::graph6::emit_graph6;
use twoeig_core::formats::hypergraph::emit_hypergraph;
use twoeig_core::formats::matrix::{parse_matrix, parse_raw_matrix};
use twoeig_core::generators::Generated;
use twoeig_core::graph::{cartesian_product, modified_strong_product, strong_product, Graph};
use twoeig_core::oracle::{eigensolve_symmetric, DEFAULT_CLUSTER_GAP, DEFAULT_MAX_SWEEPS};
use twoeig_core::witness::{emit_certificate, parse_certificate, verify_certificate, Verdicts};

use fail::{Failure, Kind, Result};
use input::{graph_spec, read, Source};
use run::{Options, Theorem};

#[derive(Debug, Parser)]
#[command(
    name = "twoeig",
    version,
    about = "Exact two-eigenvalue witnesses for graph products"
)]
struct Cli {
    /// Node budget for exact coloring searches.
    #[arg(long, global = true, env = "TWOEIG_SEARCH_NODES", default_value_t = DEFAULT_NODE_BUDGET)]
    search_nodes: u64,
    /// Sweep cap for the Jacobi eigensolver.
    #[arg(long, global = true, env = "TWOEIG_JACOBI_SWEEPS", default_value_t = DEFAULT_MAX_SWEEPS)]
    jacobi_sweeps: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum GraphFormat {
    Graph6,
    Edges,
    Dot,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ProductKind {
    Strong,
    Modified,
    Cartesian,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Strategy {
    /// At most Δ+1 colors.
    Vizing,
    /// Δ colors, bipartite graphs only.
    Bipartite,
    /// Backtracking: `--colors` if given, else the minimum.
    Exact,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a named family.
    Gen {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "graph6")]
        format: GraphFormat,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build a graph product. Operands are `family[:p1[,p2]]` or graph files.
    Product {
        #[arg(long, value_enum)]
        kind: ProductKind,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        #[arg(long, value_enum, default_value = "graph6")]
        format: GraphFormat,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Edge-color a graph or hyperedge-color a hypergraph.
    Color {
        #[command(flatten)]
        source: Source,
        #[arg(long, value_enum, default_value = "vizing")]
        strategy: Strategy,
        #[arg(long)]
        colors: Option<usize>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Split a regular graph into perfect matchings.
    Factorize {
        #[command(flatten)]
        source: Source,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build and check a witness certificate.
    Witness {
        #[arg(long, value_enum)]
        theorem: Theorem,
        #[command(flatten)]
        source: Source,
        /// Coloring file to use instead of computing one.
        #[arg(long)]
        coloring: Option<PathBuf>,
        /// Required size of the complete factor of the target.
        #[arg(long)]
        h_size: Option<usize>,
        /// Fill missed colors with 1 instead of l - 1 (hypergraph cases).
        #[arg(long)]
        literal: bool,
        /// Accept disconnected graphs without isolated vertices (max-degree).
        #[arg(long)]
        relax_connectivity: bool,
        /// Also check every partial projector sum for this k.
        #[arg(long)]
        exhaustive_nowhere_zero: bool,
        /// Cross-check the spectrum in floating point.
        #[arg(long)]
        oracle: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Recompute a certificate's verdicts.
    Verify {
        #[arg(long)]
        cert: PathBuf,
        #[arg(long)]
        oracle: bool,
    },
    /// Floating-point spectrum of a certificate or matrix file.
    Oracle {
        #[arg(long, conflicts_with_all = ["matrix", "raw"])]
        cert: Option<PathBuf>,
        /// Exact matrix file.
        #[arg(long, conflicts_with = "raw")]
        matrix: Option<PathBuf>,
        /// Raw float matrix file.
        #[arg(long)]
        raw: Option<PathBuf>,
        #[arg(long, default_value_t = DEFAULT_CLUSTER_GAP)]
        gap: f64,
    },
    /// Certify every standard fixture into a directory.
    Suite {
        #[arg(long)]
        out: PathBuf,
        #[arg(long, default_value_t = 4)]
        jobs: usize,
    },
}

/// Writes via a temporary sibling and a rename.
pub(crate) fn write_atomic(path: &Path, contents: &str) -> Result<()> {
    let name = path
        .file_name()
        .ok_or_else(|| Failure::new(Kind::Io, format!("{}: not a file path", path.display())))?;
    let tmp = path.with_file_name(format!(".{}.tmp", name.to_string_lossy()));
    std::fs::write(&tmp, contents).map_err(|e| fail::io(&tmp, e))?;
    std::fs::rename(&tmp, path).map_err(|e| fail::io(path, e))
}

fn emit(output: Option<&Path>, contents: &str) -> Result<()> {
    match output {
        Some(p) => write_atomic(p, contents),
        None => {
            let mut out = std::io::stdout().lock();
            out.write_all(contents.as_bytes())
                .and_then(|_| out.flush())
                .map_err(|e| Failure::new(Kind::Io, format!("stdout: {e}")))
        }
    }
}

fn format_graph(g: &Graph, format: GraphFormat) -> Result<String> {
    Ok(match format {
        GraphFormat::Graph6 => emit_graph6(g)? + "\n",
        GraphFormat::Edges => emit_edge_list(g),
        GraphFormat::Dot => emit_dot(g, "G"),
    })
}

fn search<T>(s: Search<T>, what: &str) -> Result<T> {
    match s {
        Search::Found(x) => Ok(x),
        Search::Infeasible => Err(Failure::new(Kind::Coloring, format!("{what}: infeasible"))),
        Search::Undecided { nodes } => Err(Failure::new(
            Kind::Coloring,
            format!("{what}: undecided after {nodes} nodes"),
        )),
    }
}

fn verdict_lines(v: &Verdicts) -> String {
    format!(
        "pattern_ok {}\nannihilation_ok {}\nboth_attained {}\nnowhere_zero_ok {}\n",
        v.pattern_ok, v.annihilation_ok, v.both_attained, v.nowhere_zero_ok
    )
}

fn invalid(v: &Verdicts, extra: &str) -> Failure {
    Failure::new(
        Kind::Invalid,
        format!(
            "pattern_ok={} annihilation_ok={} both_attained={} nowhere_zero_ok={}{extra}",
            v.pattern_ok, v.annihilation_ok, v.both_attained, v.nowhere_zero_ok
        ),
    )
}

fn execute(cli: Cli) -> Result<()> {
    let opts = Options {
        search_nodes: cli.search_nodes,
        ..Options::default()
    };
    match cli.command {
        Command::Gen {
            source,
            format,
            output,
        } => {
            let text = match source.load()? {
                Generated::Graph(g) => format_graph(&g, format)?,
                Generated::Hypergraph(h) => emit_hypergraph(&h),
            };
            emit(output.as_deref(), &text)
        }
        Command::Product {
            kind,
            left,
            right,
            format,
            output,
        } => {
            let (g, h) = (graph_spec(&left)?, graph_spec(&right)?);
            let p = match kind {
                ProductKind::Strong => strong_product(&g, &h),
                ProductKind::Modified => modified_strong_product(&g, &h),
                ProductKind::Cartesian => cartesian_product(&g, &h),
            }?;
            emit(output.as_deref(), &format_graph(&p, format)?)
        }
        Command::Color {
            source,
            strategy,
            colors,
            output,
        } => {
            let text = match source.load()? {
                Generated::Graph(g) => {
                    let c = match (strategy, colors) {
                        (Strategy::Vizing, _) => vizing_color(&g)?,
                        (Strategy::Bipartite, _) => bipartite_delta_color(&g)?,
                        (Strategy::Exact, Some(k)) => {
                            search(exact_edge_color(&g, k, cli.search_nodes), "edge coloring")?
                        }
                        (Strategy::Exact, None) => {
                            search(chromatic_index(&g, cli.search_nodes), "edge coloring")?
                        }
                    };
                    emit_edge_coloring(&c)
                }
                Generated::Hypergraph(h) => {
                    let c = match colors {
                        Some(k) => search(
                            color_hyperedges(&h, k, cli.search_nodes),
                            "hyperedge coloring",
                        )?,
                        None => search(
                            hypergraph_chromatic_index(&h, cli.search_nodes),
                            "hyperedge coloring",
                        )?,
                    };
                    emit_hyperedge_coloring(&c)
                }
            };
            emit(output.as_deref(), &text)
        }
        Command::Factorize { source, output } => {
            let g = source.graph()?;
            let f = one_factorize(&g, cli.search_nodes)?;
            let mut text = format!("colors {}\n", f.factors.len());
            for (i, factor) in f.factors.iter().enumerate() {
                for (u, v) in factor {
                    text.push_str(&format!("{u} {v} {i}\n"));
                }
            }
            emit(output.as_deref(), &text)
        }
        Command::Witness {
            theorem,
            source,
            coloring,
            h_size,
            literal,
            relax_connectivity,
            exhaustive_nowhere_zero,
            oracle,
            output,
        } => {
            let opts = Options {
                coloring: coloring.as_deref().map(read).transpose()?,
                literal,
                relax_connectivity,
                ..opts
            };
            let w = run::build(theorem, source.load()?, &opts)?;
            let cert = &w.certificate;
            if let Some(h) = h_size {
                if h != cert.k {
                    return Err(Failure::new(
                        Kind::Hypothesis,
                        format!("--h-size {h} but the construction uses K_{}", cert.k),
                    ));
                }
            }
            let text = emit_certificate(cert)?;
            emit(output.as_deref(), &text)?;
            if output.is_some() {
                println!("{}valid {}", verdict_lines(&cert.verdicts), cert.is_valid());
            }
            let mut extra = String::new();
            let mut ok = cert.is_valid();
            if exhaustive_nowhere_zero {
                let clean = run::exhaustive_nowhere_zero(cert.k)?;
                ok &= clean;
                extra.push_str(&format!(" exhaustive_nowhere_zero={clean}"));
            }
            if oracle {
                let check = cert.oracle_check(DEFAULT_CLUSTER_GAP, cli.jacobi_sweeps)?;
                ok &= check.agrees(1e-8);
                extra.push_str(&format!(" oracle_distinct={}", check.distinct));
            }
            if ok {
                Ok(())
            } else {
                Err(invalid(&cert.verdicts, &extra))
            }
        }
        Command::Verify { cert, oracle } => {
            let parsed = parse_certificate(&read(&cert)?)?;
            let report = verify_certificate(&parsed)?;
            let mut text = verdict_lines(&report.recomputed);
            text.push_str(&format!(
                "stored_verdicts_match {}\n",
                report.matches_stored
            ));
            let mut ok = report.is_valid();
            let mut extra = format!(" stored_verdicts_match={}", report.matches_stored);
            // An asymmetric matrix has already failed; the float solver would
            // only reject it.
            if oracle && parsed.matrix.is_symmetric() {
                let check = parsed.oracle_check(DEFAULT_CLUSTER_GAP, cli.jacobi_sweeps)?;
                text.push_str(&format!("oracle_distinct {}\n", check.distinct));
                ok &= check.agrees(1e-8);
                extra.push_str(&format!(" oracle_distinct={}", check.distinct));
            }
            text.push_str(&format!("valid {ok}\n"));
            emit(None, &text)?;
            if ok {
                Ok(())
            } else {
                Err(invalid(&report.recomputed, &extra))
            }
        }
        Command::Oracle {
            cert,
            matrix,
            raw,
            gap,
        } => {
            let m = if let Some(p) = &cert {
                parse_certificate(&read(p)?)?.matrix.to_f64()
            } else if let Some(p) = &matrix {
                parse_matrix(&read(p)?)?.to_f64()
            } else if let Some(p) = &raw {
                parse_raw_matrix(&read(p)?)?
            } else {
                return Err(Failure::new(
                    Kind::Parse,
                    "no input: pass --cert, --matrix or --raw",
                ));
            };
            let spectrum = eigensolve_symmetric(&m, cli.jacobi_sweeps)?;
            let clusters = spectrum.clusters(gap)?;
            let mut text = format!(
                "dimension {}\nsweeps {}\ndistinct {}\n",
                m.len(),
                spectrum.sweeps,
                clusters.len()
            );
            for (centroid, size) in &clusters {
                text.push_str(&format!("cluster {centroid:.12} {size}\n"));
            }
            emit(None, &text)
        }
        Command::Suite { out, jobs } => {
            if suite::suite(&out, jobs, &opts, cli.jacobi_sweeps)? {
                Ok(())
            } else {
                Err(Failure::new(
                    Kind::Invalid,
                    "suite: some rows did not meet expectations",
                ))
            }
        }
    }
}

fn main() -> ExitCode {
    match execute(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => f.report(),
    }
}
