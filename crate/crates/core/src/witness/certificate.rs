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

//! Witness certificates: the exact matrix, the data it was built from, and
//! the verdicts, in a line-oriented text form with a fixed field order.
//!
//! ```text
//! twoeig-certificate 1
//! target <graph6>
//! construction <one-factor|max-degree|hypergraph-a|hypergraph-b|hypergraph-c|signed-diagonal>
//! variant <standard|corrected|literal>
//! k <projector size>
//! lambda1 <num/den>
//! lambda2 <num/den>
//! coloring edges <count> <palette>        (or: coloring hyperedges ...)
//! <u> <v> <color>                          (or: <index> <color> <v1> <v2> ...)
//! subsets <count>
//! <i> <j> ...                              (one block color subset per line)
//! matrix <rows> <cols> symmetric
//! <row of num/den>
//! pattern_ok <bool>
//! annihilation_ok <bool>
//! both_attained <bool>
//! nowhere_zero_ok <bool>
//! valid <bool>
//! end
//! ```

use std::fmt;
use std::str::FromStr;

use super::{check_pattern_membership, WitnessError};
use crate::formats::graph6::{emit_graph6, parse_graph6};
use crate::formats::matrix::{emit_matrix, parse_matrix_lines};
use crate::formats::{content_lines, ParseError};
use crate::graph::Graph;
use crate::linalg::{
    annihilates, format_rational, parse_rational, verify_nowhere_zero, NowhereZeroMode,
    ProjectorFamily, Rational, RationalMatrix,
};
use crate::oracle::{eigensolve_symmetric, OracleError};

const MAGIC: &str = "twoeig-certificate 1";

/// Largest projector size accepted from a certificate file.
const MAX_K: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Construction {
    /// `G ⋈ K_k` from a 1-factorization of a `k`-regular graph.
    OneFactor,
    /// `G ⊠ K_{Δ+1}` from a `(Δ+1)`-edge-coloring.
    MaxDegree,
    /// Representing graph of an `l`-uniform linear hypergraph, case a/b/c.
    Hypergraph(super::HypergraphCase),
    /// `G ⋈ K_Δ` from a `Δ`-edge-coloring of a non-regular graph, with
    /// diagonal entries filling vertices a color misses.
    SignedDiagonal,
}

impl Construction {
    pub fn tag(self) -> &'static str {
        use super::HypergraphCase::*;
        match self {
            Construction::OneFactor => "one-factor",
            Construction::MaxDegree => "max-degree",
            Construction::Hypergraph(A) => "hypergraph-a",
            Construction::Hypergraph(B) => "hypergraph-b",
            Construction::Hypergraph(C) => "hypergraph-c",
            Construction::SignedDiagonal => "signed-diagonal",
        }
    }
}

impl fmt::Display for Construction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Construction {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        use super::HypergraphCase::*;
        Ok(match s {
            "one-factor" => Construction::OneFactor,
            "max-degree" => Construction::MaxDegree,
            "hypergraph-a" => Construction::Hypergraph(A),
            "hypergraph-b" => Construction::Hypergraph(B),
            "hypergraph-c" => Construction::Hypergraph(C),
            "signed-diagonal" => Construction::SignedDiagonal,
            other => {
                return Err(ParseError::Structure(format!(
                    "unknown construction `{other}`"
                )))
            }
        })
    }
}

/// The coloring a witness was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ColoringRecord {
    /// `(u, v, color)` per edge, and the palette size.
    Edges {
        assignments: Vec<(usize, usize, usize)>,
        palette: usize,
    },
    /// `(hyperedge, color)` per hyperedge, and the palette size.
    Hyperedges {
        assignments: Vec<(Vec<usize>, usize)>,
        palette: usize,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Verdicts {
    pub pattern_ok: bool,
    pub annihilation_ok: bool,
    pub both_attained: bool,
    pub nowhere_zero_ok: bool,
}

impl Verdicts {
    pub fn valid(&self) -> bool {
        self.pattern_ok && self.annihilation_ok && self.both_attained && self.nowhere_zero_ok
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessCertificate {
    pub target: Graph,
    pub construction: Construction,
    pub variant: super::DiagonalVariant,
    pub k: usize,
    pub lambda1: Rational,
    pub lambda2: Rational,
    pub coloring: ColoringRecord,
    /// Distinct color subsets of the nonzero blocks of the witness.
    pub subsets: Vec<Vec<usize>>,
    pub matrix: RationalMatrix,
    pub verdicts: Verdicts,
}

impl WitnessCertificate {
    pub fn is_valid(&self) -> bool {
        self.verdicts.valid()
    }

    /// A valid certificate shows `q(target) <= 2`; with at least one edge the
    /// target cannot have a single eigenvalue, so `q(target) = 2`.
    pub fn proves_q_equals_two(&self) -> bool {
        self.is_valid() && self.target.edge_count() > 0
    }
}

/// Computes the four verdicts from scratch. An asymmetric matrix fails the
/// pattern and spectral verdicts rather than raising an error.
pub(crate) fn compute_verdicts(
    target: &Graph,
    matrix: &RationalMatrix,
    lambda1: &Rational,
    lambda2: &Rational,
    k: usize,
    subsets: &[Vec<usize>],
) -> Result<Verdicts, WitnessError> {
    let fam = ProjectorFamily::new(k)?;
    let report = verify_nowhere_zero(&fam, &NowhereZeroMode::Targeted(subsets.to_vec()))?;
    let mut verdicts = Verdicts {
        nowhere_zero_ok: report.is_clean(),
        ..Verdicts::default()
    };
    if matrix.is_square() && matrix.is_symmetric() {
        verdicts.pattern_ok = check_pattern_membership(matrix, target)?;
        let ann = annihilates(matrix, lambda1, lambda2)?;
        verdicts.annihilation_ok = ann.annihilates;
        verdicts.both_attained = ann.annihilates && ann.both_attained();
    } else if matrix.rows() != target.n() || matrix.cols() != target.n() {
        return Err(WitnessError::DimensionMismatch {
            rows: matrix.rows(),
            cols: matrix.cols(),
            n: target.n(),
        });
    }
    Ok(verdicts)
}

/// Result of re-verifying a certificate.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct VerifyReport {
    pub recomputed: Verdicts,
    pub matches_stored: bool,
}

impl VerifyReport {
    pub fn is_valid(&self) -> bool {
        self.recomputed.valid() && self.matches_stored
    }
}

pub fn verify_certificate(cert: &WitnessCertificate) -> Result<VerifyReport, WitnessError> {
    let recomputed = compute_verdicts(
        &cert.target,
        &cert.matrix,
        &cert.lambda1,
        &cert.lambda2,
        cert.k,
        &cert.subsets,
    )?;
    Ok(VerifyReport {
        recomputed,
        matches_stored: recomputed == cert.verdicts,
    })
}

/// Floating-point cross-check of a certificate's spectrum.
#[derive(Debug, Clone, PartialEq)]
pub struct OracleCheck {
    pub distinct: usize,
    /// Cluster centroids in ascending order.
    pub centroids: Vec<f64>,
    /// Largest distance from a centroid to the nearest claimed eigenvalue.
    pub max_centroid_error: f64,
}

impl OracleCheck {
    pub fn agrees(&self, tolerance: f64) -> bool {
        self.distinct == 2 && self.max_centroid_error <= tolerance
    }
}

impl WitnessCertificate {
    pub fn oracle_check(&self, gap: f64, max_sweeps: usize) -> Result<OracleCheck, OracleError> {
        use num_traits::ToPrimitive;
        let spectrum = eigensolve_symmetric(&self.matrix.to_f64(), max_sweeps)?;
        let clusters = spectrum.clusters(gap)?;
        let claimed = [
            self.lambda1.to_f64().unwrap_or(f64::NAN),
            self.lambda2.to_f64().unwrap_or(f64::NAN),
        ];
        let centroids: Vec<f64> = clusters.iter().map(|&(c, _)| c).collect();
        let max_centroid_error = centroids
            .iter()
            .map(|c| {
                claimed
                    .iter()
                    .map(|l| (c - l).abs())
                    .fold(f64::INFINITY, f64::min)
            })
            .fold(0.0, f64::max);
        Ok(OracleCheck {
            distinct: clusters.len(),
            centroids,
            max_centroid_error,
        })
    }
}

pub fn emit_certificate(cert: &WitnessCertificate) -> Result<String, WitnessError> {
    let mut out = String::new();
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    line(MAGIC.to_string());
    line(format!("target {}", emit_graph6(&cert.target)?));
    line(format!("construction {}", cert.construction));
    line(format!("variant {}", cert.variant));
    line(format!("k {}", cert.k));
    line(format!("lambda1 {}", format_rational(&cert.lambda1)));
    line(format!("lambda2 {}", format_rational(&cert.lambda2)));
    match &cert.coloring {
        ColoringRecord::Edges {
            assignments,
            palette,
        } => {
            line(format!("coloring edges {} {palette}", assignments.len()));
            for (u, v, c) in assignments {
                line(format!("{u} {v} {c}"));
            }
        }
        ColoringRecord::Hyperedges {
            assignments,
            palette,
        } => {
            line(format!(
                "coloring hyperedges {} {palette}",
                assignments.len()
            ));
            for (i, (e, c)) in assignments.iter().enumerate() {
                let verts: Vec<String> = e.iter().map(usize::to_string).collect();
                line(format!("{i} {c} {}", verts.join(" ")));
            }
        }
    }
    line(format!("subsets {}", cert.subsets.len()));
    for s in &cert.subsets {
        let items: Vec<String> = s.iter().map(usize::to_string).collect();
        line(items.join(" "));
    }
    out.push_str(&emit_matrix(&cert.matrix));
    let v = cert.verdicts;
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };
    line(format!("pattern_ok {}", v.pattern_ok));
    line(format!("annihilation_ok {}", v.annihilation_ok));
    line(format!("both_attained {}", v.both_attained));
    line(format!("nowhere_zero_ok {}", v.nowhere_zero_ok));
    line(format!("valid {}", v.valid()));
    line("end".to_string());
    Ok(out)
}

struct Lines<'a, I: Iterator<Item = (usize, &'a str)>> {
    inner: I,
    last: usize,
}

impl<'a, I: Iterator<Item = (usize, &'a str)>> Lines<'a, I> {
    fn next_line(&mut self, what: &str) -> Result<(usize, &'a str), ParseError> {
        let (n, l) = self.inner.next().ok_or_else(|| {
            ParseError::Structure(format!("unexpected end of input, expected {what}"))
        })?;
        self.last = n;
        Ok((n, l))
    }

    /// Reads `key value` and returns `value`.
    fn field(&mut self, key: &str) -> Result<(usize, &'a str), ParseError> {
        let (n, l) = self.next_line(key)?;
        match l.split_once(' ') {
            Some((k, v)) if k == key => Ok((n, v.trim())),
            _ => Err(ParseError::line(n, format!("expected `{key} ...`"))),
        }
    }
}

fn num(token: &str, line: usize, cap: usize) -> Result<usize, ParseError> {
    token
        .parse::<usize>()
        .ok()
        .filter(|&x| x <= cap)
        .ok_or_else(|| ParseError::line(line, format!("bad number `{token}`")))
}

fn boolean(token: &str, line: usize) -> Result<bool, ParseError> {
    match token {
        "true" => Ok(true),
        "false" => Ok(false),
        _ => Err(ParseError::line(
            line,
            format!("expected true/false, got `{token}`"),
        )),
    }
}

const MAX_ITEMS: usize = 1 << 20;

pub fn parse_certificate(text: &str) -> Result<WitnessCertificate, ParseError> {
    let mut lines = Lines {
        inner: content_lines(text),
        last: 0,
    };
    let (n, magic) = lines.next_line("header")?;
    if magic != MAGIC {
        return Err(ParseError::line(n, "not a twoeig certificate"));
    }
    let (_, target) = lines.field("target")?;
    let target = parse_graph6(target)?;
    let (n, construction) = lines.field("construction")?;
    let construction: Construction = construction
        .parse()
        .map_err(|e: ParseError| ParseError::line(n, e.to_string()))?;
    let (n, variant) = lines.field("variant")?;
    let variant = variant
        .parse()
        .map_err(|e: ParseError| ParseError::line(n, e.to_string()))?;
    let (n, k) = lines.field("k")?;
    let k = num(k, n, MAX_K)?;
    if k == 0 {
        return Err(ParseError::line(n, "k must be positive"));
    }
    let mut lambda = |key: &str| -> Result<Rational, ParseError> {
        let (n, v) = lines.field(key)?;
        parse_rational(v).ok_or_else(|| ParseError::line(n, format!("bad rational `{v}`")))
    };
    let lambda1 = lambda("lambda1")?;
    let lambda2 = lambda("lambda2")?;

    let (n, header) = lines.field("coloring")?;
    let parts: Vec<&str> = header.split_whitespace().collect();
    let coloring = match parts.as_slice() {
        [kind @ ("edges" | "hyperedges"), count, palette] => {
            let count = num(count, n, MAX_ITEMS)?;
            let palette = num(palette, n, MAX_K)?;
            if *kind == "edges" {
                let mut assignments = Vec::with_capacity(count.min(1024));
                for _ in 0..count {
                    let (n, l) = lines.next_line("edge coloring row")?;
                    let f: Vec<&str> = l.split_whitespace().collect();
                    if f.len() != 3 {
                        return Err(ParseError::line(n, "expected `u v color`"));
                    }
                    assignments.push((
                        num(f[0], n, MAX_ITEMS)?,
                        num(f[1], n, MAX_ITEMS)?,
                        num(f[2], n, MAX_K)?,
                    ));
                }
                ColoringRecord::Edges {
                    assignments,
                    palette,
                }
            } else {
                let mut assignments = Vec::with_capacity(count.min(1024));
                for i in 0..count {
                    let (n, l) = lines.next_line("hyperedge coloring row")?;
                    let f: Vec<&str> = l.split_whitespace().collect();
                    if f.len() < 3 || num(f[0], n, MAX_ITEMS)? != i {
                        return Err(ParseError::line(n, "expected `index color v1 v2 ...`"));
                    }
                    let color = num(f[1], n, MAX_K)?;
                    let verts = f[2..]
                        .iter()
                        .map(|t| num(t, n, MAX_ITEMS))
                        .collect::<Result<Vec<_>, _>>()?;
                    assignments.push((verts, color));
                }
                ColoringRecord::Hyperedges {
                    assignments,
                    palette,
                }
            }
        }
        _ => {
            return Err(ParseError::line(
                n,
                "expected `coloring <edges|hyperedges> <count> <palette>`",
            ))
        }
    };

    let (n, count) = lines.field("subsets")?;
    let count = num(count, n, MAX_ITEMS)?;
    let mut subsets = Vec::with_capacity(count.min(1024));
    for _ in 0..count {
        let (n, l) = lines.next_line("subset row")?;
        let s = l
            .split_whitespace()
            .map(|t| num(t, n, MAX_K))
            .collect::<Result<Vec<_>, _>>()?;
        if s.iter().any(|&i| i >= k) {
            return Err(ParseError::line(n, "subset index out of range"));
        }
        subsets.push(s);
    }

    let matrix = parse_matrix_lines(&mut lines.inner, false)?;
    let mut verdict = |key: &str| -> Result<bool, ParseError> {
        let (n, v) = lines.field(key)?;
        boolean(v, n)
    };
    let verdicts = Verdicts {
        pattern_ok: verdict("pattern_ok")?,
        annihilation_ok: verdict("annihilation_ok")?,
        both_attained: verdict("both_attained")?,
        nowhere_zero_ok: verdict("nowhere_zero_ok")?,
    };
    let valid = verdict("valid")?;
    if valid != verdicts.valid() {
        return Err(ParseError::line(
            lines.last,
            "`valid` disagrees with the verdicts",
        ));
    }
    let (n, end) = lines.next_line("end")?;
    if end != "end" {
        return Err(ParseError::line(n, "expected `end`"));
    }
    if let Some((n, _)) = lines.inner.next() {
        return Err(ParseError::line(n, "content after `end`"));
    }
    Ok(WitnessCertificate {
        target,
        construction,
        variant,
        k,
        lambda1,
        lambda2,
        coloring,
        subsets,
        matrix,
        verdicts,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coloring::{one_factorize, DEFAULT_NODE_BUDGET};
    use crate::generators::cycle;
    use crate::linalg::rat;
    use crate::oracle::{DEFAULT_CLUSTER_GAP, DEFAULT_MAX_SWEEPS};
    use crate::witness::witness_onefactor;
    use num_traits::Zero;

    fn c4() -> WitnessCertificate {
        let g = cycle(4).unwrap();
        let f = one_factorize(&g, DEFAULT_NODE_BUDGET).unwrap();
        witness_onefactor(&g, &f).unwrap().certificate
    }

    #[test]
    fn round_trip() {
        let cert = c4();
        let text = emit_certificate(&cert).unwrap();
        assert!(text.starts_with("twoeig-certificate 1\n"));
        assert!(text.ends_with("valid true\nend\n"));
        let back = parse_certificate(&text).unwrap();
        assert_eq!(back, cert);
        assert_eq!(emit_certificate(&back).unwrap(), text);
        assert!(verify_certificate(&back).unwrap().is_valid());
    }

    #[test]
    fn tampered_matrix_fails() {
        let mut cert = c4();
        let x = cert.matrix.get(0, 2).clone() + rat(1, 3);
        cert.matrix.set(0, 2, x.clone());
        cert.matrix.set(2, 0, x);
        let report = verify_certificate(&cert).unwrap();
        assert!(!report.recomputed.annihilation_ok);
        assert!(!report.matches_stored);
        assert!(!report.is_valid());
    }

    #[test]
    fn zeroed_entry_fails_pattern() {
        let cert = c4();
        let (i, j) = (0..8)
            .flat_map(|i| (0..8).map(move |j| (i, j)))
            .find(|&(i, j)| i != j && !cert.matrix.get(i, j).is_zero())
            .unwrap();
        let mut bad = cert.clone();
        bad.matrix.set(i, j, rat(0, 1));
        let text = emit_certificate(&bad).unwrap();
        let parsed = parse_certificate(&text).unwrap();
        let report = verify_certificate(&parsed).unwrap();
        assert!(!report.recomputed.pattern_ok);
        assert!(!report.is_valid());
    }

    #[test]
    fn parse_rejects_inconsistent_valid() {
        let text = emit_certificate(&c4())
            .unwrap()
            .replace("valid true", "valid false");
        assert!(parse_certificate(&text).is_err());
        let text = emit_certificate(&c4())
            .unwrap()
            .replace("end\n", "end\nmore\n");
        assert!(parse_certificate(&text).is_err());
        assert!(parse_certificate("").is_err());
        assert!(parse_certificate("twoeig-certificate 1\ntarget C~\n").is_err());
    }

    #[test]
    fn oracle_agrees() {
        let check = c4()
            .oracle_check(DEFAULT_CLUSTER_GAP, DEFAULT_MAX_SWEEPS)
            .unwrap();
        assert!(check.agrees(1e-8), "{check:?}");
        assert!(c4().proves_q_equals_two());
    }
}
