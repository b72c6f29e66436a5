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

//! Batch run over the standard fixture families.

use std::fmt::Write as _;
use std::path::Path;
use std::time::Instant;

use rayon::prelude::*;
use twoeig_core::formats::graph6::emit_graph6;
use twoeig_core::generators::{generate, Generated};
use twoeig_core::linalg::format_rational;
use twoeig_core::oracle::DEFAULT_CLUSTER_GAP;
use twoeig_core::witness::emit_certificate;

use crate::fail::{Failure, Kind, Result};
use crate::run::{build, Options, Theorem};
use crate::write_atomic;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Expect {
    Valid,
    /// Documented failure; the run succeeds only if it stays invalid.
    Invalid,
    /// Reported but never fails the run.
    Explore,
}

impl Expect {
    fn tag(self) -> &'static str {
        match self {
            Expect::Valid => "valid",
            Expect::Invalid => "expected-failure",
            Expect::Explore => "exploratory",
        }
    }
}

struct Row {
    name: String,
    theorem: Theorem,
    family: &'static str,
    params: Vec<usize>,
    literal: bool,
    expect: Expect,
}

fn row(
    name: &str,
    theorem: Theorem,
    family: &'static str,
    params: &[usize],
    expect: Expect,
) -> Row {
    Row {
        name: name.to_string(),
        theorem,
        family,
        params: params.to_vec(),
        literal: false,
        expect,
    }
}

fn rows() -> Vec<Row> {
    use Expect::*;
    use Theorem::*;
    let mut rows = vec![
        row("k4-modified-k3", OneFactor, "complete", &[4], Valid),
        row(
            "k33-modified-k3",
            OneFactor,
            "complete_bipartite",
            &[3, 3],
            Valid,
        ),
        row("q3-modified-k3", OneFactor, "hypercube", &[3], Valid),
    ];
    for n in [4, 6, 8, 10] {
        rows.push(row(
            &format!("c{n}-modified-k2"),
            OneFactor,
            "cycle",
            &[n],
            Valid,
        ));
    }
    rows.extend([
        row("p4-strong-k3", MaxDegree, "path", &[4], Valid),
        row(
            "k13-strong-k4",
            MaxDegree,
            "complete_bipartite",
            &[1, 3],
            Valid,
        ),
        row("petersen-strong-k4", MaxDegree, "petersen", &[], Valid),
        row("rook3-modified-k2", HyperC, "rook_hypergraph", &[3], Valid),
        row("rook3-strong-k3", HyperB, "rook_hypergraph", &[3], Valid),
        row("rook4-modified-k2", HyperC, "rook_hypergraph", &[4], Valid),
        row(
            "octahedron-strong-k4",
            HyperA,
            "octahedron_triangle_hypergraph",
            &[],
            Valid,
        ),
        row("bowtie-strong-k3", HyperB, "bowtie_hypergraph", &[], Valid),
        Row {
            literal: true,
            ..row(
                "octahedron-strong-k4-literal",
                HyperA,
                "octahedron_triangle_hypergraph",
                &[],
                Invalid,
            )
        },
    ]);
    for k in 3..=6 {
        rows.push(row(
            &format!("p{k}-modified-k2-signed"),
            SignedDiagonal,
            "path",
            &[k],
            Explore,
        ));
    }
    rows
}

struct Outcome {
    line: String,
    ok: bool,
}

fn run_row(row: &Row, dir: &Path, opts: &Options, sweeps: usize) -> Outcome {
    let start = Instant::now();
    let result = (|| -> Result<(String, bool)> {
        let input: Generated = generate(row.family, &row.params)?;
        let opts = Options {
            literal: row.literal,
            ..opts.clone()
        };
        let w = build(row.theorem, input, &opts)?;
        let cert = &w.certificate;
        let text = emit_certificate(cert)?;
        write_atomic(&dir.join(format!("{}.cert", row.name)), &text)?;
        let distinct = cert
            .oracle_check(DEFAULT_CLUSTER_GAP, sweeps)
            .map(|o| o.distinct.to_string())
            .unwrap_or_else(|e| format!("error({e})"));
        let v = cert.verdicts;
        let cols = [
            emit_graph6(&cert.target)?,
            cert.k.to_string(),
            format_rational(&cert.lambda1),
            format_rational(&cert.lambda2),
            v.pattern_ok.to_string(),
            v.annihilation_ok.to_string(),
            v.both_attained.to_string(),
            v.nowhere_zero_ok.to_string(),
            cert.is_valid().to_string(),
            distinct,
        ];
        Ok((cols.join("\t"), cert.is_valid()))
    })();
    let ms = start.elapsed().as_millis();
    let (cols, ok, status) = match result {
        Ok((cols, valid)) => {
            let ok = match row.expect {
                Expect::Valid => valid,
                Expect::Invalid => !valid,
                Expect::Explore => true,
            };
            (cols, ok, if ok { "ok" } else { "UNEXPECTED" }.to_string())
        }
        Err(f) => {
            let blank = ["-"; 10].join("\t");
            (
                blank,
                row.expect == Expect::Explore,
                format!("error:{}", f.message),
            )
        }
    };
    Outcome {
        line: format!("{}\t{}\t{status}\t{cols}\t{ms}", row.name, row.expect.tag()),
        ok,
    }
}

pub fn suite(dir: &Path, jobs: usize, opts: &Options, sweeps: usize) -> Result<bool> {
    std::fs::create_dir_all(dir).map_err(|e| crate::fail::io(dir, e))?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Failure::new(Kind::Internal, e.to_string()))?;
    let rows = rows();
    let outcomes: Vec<Outcome> = pool.install(|| {
        rows.par_iter()
            .map(|r| run_row(r, dir, opts, sweeps))
            .collect()
    });
    let mut table = String::from(
        "family\texpect\tstatus\ttarget_graph6\tk\tlambda1\tlambda2\tpattern_ok\tannihilation_ok\tboth_attained\tnowhere_zero_ok\tvalid\toracle_distinct\tms\n",
    );
    for o in &outcomes {
        writeln!(table, "{}", o.line).expect("writing to a String");
    }
    write_atomic(&dir.join("summary.tsv"), &table)?;
    print!("{table}");
    Ok(outcomes.iter().all(|o| o.ok))
}
