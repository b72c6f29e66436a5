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

//! Acceptance gate. Prints one `PASS` or `FAIL` line per criterion and exits
//! nonzero if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use twoeig_core::coloring::{
    exact_edge_color, one_factorize, vizing_color, HyperedgeColoring, Search, DEFAULT_NODE_BUDGET,
};
use twoeig_core::generators::{
    complete, complete_bipartite, cycle, hypercube, octahedron_triangle_hypergraph, path, petersen,
    rook_hypergraph,
};
use twoeig_core::graph::{modified_strong_product, strong_product, Graph, Hypergraph};
use twoeig_core::linalg::{
    kron, rat, verify_nowhere_zero, NowhereZeroMode, ProjectorFamily, RationalMatrix,
};
use twoeig_core::oracle::{eigensolve_symmetric, DEFAULT_CLUSTER_GAP, DEFAULT_MAX_SWEEPS};
use twoeig_core::witness::{
    eigvec_structure_check, matching_eigenpairs, witness_hypergraph, witness_maxdeg,
    witness_onefactor, DiagonalVariant, HypergraphCase, MaxDegreeOptions, Witness,
};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !($cond) {
            return Err(format!($($msg)+));
        }
    };
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<(), String> {
    let took = start.elapsed();
    ensure!(took < limit, "{what} took {took:.2?}, limit {limit:?}");
    Ok(())
}

/// Exact validity, `(-1, 1)` or the given pair, and oracle agreement.
fn check_witness(name: &str, w: &Witness, lambdas: (i64, i64)) -> Result<(), String> {
    let c = &w.certificate;
    ensure!(c.is_valid(), "{name}: verdicts {:?}", c.verdicts);
    ensure!(c.proves_q_equals_two(), "{name}: target has no edges");
    ensure!(
        (c.lambda1.clone(), c.lambda2.clone()) == (rat(lambdas.0, 1), rat(lambdas.1, 1)),
        "{name}: eigenvalues {} and {}",
        c.lambda1,
        c.lambda2
    );
    let oracle = c
        .oracle_check(DEFAULT_CLUSTER_GAP, DEFAULT_MAX_SWEEPS)
        .map_err(|e| format!("{name}: oracle {e}"))?;
    ensure!(oracle.agrees(1e-8), "{name}: oracle {oracle:?}");
    Ok(())
}

fn projectors() -> Outcome {
    let start = Instant::now();
    let mut subsets = 0u64;
    for k in 1..=12 {
        let fam = ProjectorFamily::new(k).map_err(|e| e.to_string())?;
        let q = fam.q();
        ensure!(
            q * &q.transpose() == RationalMatrix::identity(k),
            "k={k}: Q is not orthogonal"
        );
        let mut sum = RationalMatrix::zeros(k, k);
        for i in 0..k {
            let ji = fam.j(i);
            ensure!(ji * ji == *ji, "k={k}: J_{i} is not idempotent");
            for j in (i + 1)..k {
                ensure!((ji * fam.j(j)).is_zero(), "k={k}: J_{i} J_{j} != 0");
            }
            sum = &sum + ji;
        }
        ensure!(
            sum == RationalMatrix::identity(k),
            "k={k}: projectors do not sum to I"
        );
        let report =
            verify_nowhere_zero(&fam, &NowhereZeroMode::Exhaustive).map_err(|e| e.to_string())?;
        ensure!(
            report.is_clean(),
            "k={k}: {} violations",
            report.violations.len()
        );
        ensure!(
            report.subsets_checked == (1u64 << k) - 2,
            "k={k}: checked {}",
            report.subsets_checked
        );
        subsets += report.subsets_checked;
    }
    within(start, Duration::from_secs(30), "projector checks")?;
    Ok(format!(
        "k = 1..12, {subsets} partial sums nowhere zero, {:.2?}",
        start.elapsed()
    ))
}

fn one_factor_fixtures() -> Outcome {
    let fixtures: Vec<(&str, Graph)> = vec![
        ("K4 ⋈ K3", complete(4).unwrap()),
        ("K3,3 ⋈ K3", complete_bipartite(3, 3).unwrap()),
        ("C4 ⋈ K2", cycle(4).unwrap()),
        ("C6 ⋈ K2", cycle(6).unwrap()),
        ("C8 ⋈ K2", cycle(8).unwrap()),
        ("C10 ⋈ K2", cycle(10).unwrap()),
        ("Q3 ⋈ K3", hypercube(3).unwrap()),
    ];
    let mut slowest = Duration::ZERO;
    for (name, g) in &fixtures {
        let start = Instant::now();
        let f = one_factorize(g, DEFAULT_NODE_BUDGET).map_err(|e| format!("{name}: {e}"))?;
        let w = witness_onefactor(g, &f).map_err(|e| format!("{name}: {e}"))?;
        let k = g.regular_degree().unwrap();
        ensure!(
            w.certificate.target == modified_strong_product(g, &complete(k).unwrap()).unwrap(),
            "{name}: wrong target"
        );
        check_witness(name, &w, (-1, 1))?;
        within(start, Duration::from_secs(10), name)?;
        slowest = slowest.max(start.elapsed());
    }
    Ok(format!(
        "{} fixtures valid, slowest {slowest:.2?}",
        fixtures.len()
    ))
}

fn max_degree_fixtures() -> Outcome {
    let fixtures: Vec<(&str, Graph)> = vec![
        ("P4 ⊠ K3", path(4).unwrap()),
        ("K1,3 ⊠ K4", complete_bipartite(1, 3).unwrap()),
        ("Petersen ⊠ K4", petersen()),
    ];
    for (name, g) in &fixtures {
        let c = vizing_color(g).map_err(|e| format!("{name}: {e}"))?;
        let w = witness_maxdeg(g, &c, MaxDegreeOptions::default())
            .map_err(|e| format!("{name}: {e}"))?;
        let kc = complete(g.max_degree() + 1).unwrap();
        ensure!(
            w.certificate.target == strong_product(g, &kc).unwrap(),
            "{name}: wrong target"
        );
        check_witness(name, &w, (-1, 1))?;
    }
    let start = Instant::now();
    match exact_edge_color(&petersen(), 3, DEFAULT_NODE_BUDGET) {
        Search::Infeasible => {}
        other => {
            return Err(format!(
                "Petersen 3-edge-coloring: expected infeasible, got {other:?}"
            ))
        }
    }
    Ok(format!(
        "3 fixtures valid; Petersen has no 3-edge-coloring (exhausted in {:.2?})",
        start.elapsed()
    ))
}

fn hyper(
    name: &str,
    h: &Hypergraph,
    colors: Vec<usize>,
    palette: usize,
    case: HypergraphCase,
    variant: DiagonalVariant,
) -> Result<Witness, String> {
    let c = HyperedgeColoring::new(h, colors, palette).map_err(|e| format!("{name}: {e}"))?;
    witness_hypergraph(h, &c, case, variant).map_err(|e| format!("{name}: {e}"))
}

fn hypergraph_fixtures() -> Outcome {
    let start = Instant::now();
    let rook3 = rook_hypergraph(3).unwrap();
    let rook4 = rook_hypergraph(4).unwrap();
    let lines = |m: usize| [vec![0; m], vec![1; m]].concat();
    let fixtures = [
        ("(K3□K3) ⋈ K2", &rook3, lines(3), 2, HypergraphCase::C, 2),
        ("(K3□K3) ⊠ K3", &rook3, lines(3), 2, HypergraphCase::B, 3),
        (
            "Octahedron ⊠ K4",
            &octahedron_triangle_hypergraph(),
            vec![0, 1, 2, 3],
            4,
            HypergraphCase::A,
            4,
        ),
        ("(K4□K4) ⋈ K2", &rook4, lines(4), 2, HypergraphCase::C, 2),
    ];
    for (name, h, colors, palette, case, expected_k) in fixtures {
        let w = hyper(name, h, colors, palette, case, DiagonalVariant::Corrected)?;
        ensure!(
            w.certificate.k == expected_k,
            "{name}: k = {}",
            w.certificate.k
        );
        let l = h.uniformity().unwrap() as i64;
        check_witness(name, &w, (-1, l - 1))?;
    }
    within(start, Duration::from_secs(60), "hypergraph fixtures")?;
    Ok(format!("4 fixtures valid in {:.2?}", start.elapsed()))
}

fn literal_variant_fails() -> Outcome {
    let h = octahedron_triangle_hypergraph();
    let w = hyper(
        "literal octahedron",
        &h,
        vec![0, 1, 2, 3],
        4,
        HypergraphCase::A,
        DiagonalVariant::Literal,
    )?;
    let v = w.certificate.verdicts;
    ensure!(
        !v.annihilation_ok,
        "literal variant is annihilated by (M+I)(M-2I)"
    );
    ensure!(
        !w.certificate.is_valid(),
        "literal variant unexpectedly valid"
    );
    let spectrum = eigensolve_symmetric(&w.certificate.matrix.to_f64(), DEFAULT_MAX_SWEEPS)
        .map_err(|e| e.to_string())?;
    let clusters = spectrum
        .clusters(DEFAULT_CLUSTER_GAP)
        .map_err(|e| e.to_string())?;
    let centroids: Vec<f64> = clusters.iter().map(|c| c.0).collect();
    ensure!(
        clusters.len() == 3,
        "expected 3 clusters, got {centroids:?}"
    );
    for (c, e) in centroids.iter().zip([-1.0, 1.0, 2.0]) {
        let close = (c - e).abs() < 1e-8;
        ensure!(close, "centroids {centroids:?}");
    }
    Ok(format!(
        "expected failure reproduced: clusters near -1, 1, 2 with sizes {:?}",
        clusters.iter().map(|c| c.1).collect::<Vec<_>>()
    ))
}

fn eigenvectors() -> Outcome {
    let g = cycle(6).unwrap();
    let f = one_factorize(&g, DEFAULT_NODE_BUDGET).map_err(|e| e.to_string())?;
    let w = witness_onefactor(&g, &f).map_err(|e| e.to_string())?;
    let samples: Vec<_> = f
        .factors
        .iter()
        .enumerate()
        .flat_map(|(i, m)| matching_eigenpairs(i, g.n(), m))
        .collect();
    let report =
        eigvec_structure_check(&w.summands, &w.projectors, &samples).map_err(|e| e.to_string())?;
    ensure!(report.checked == 12, "{} eigenpairs", report.checked);
    ensure!(report.is_clean(), "failing samples {:?}", report.failures);
    ensure!(
        report.lifted_rank == 12,
        "lifted rank {}",
        report.lifted_rank
    );
    Ok("12 lifted eigenpairs of C6 ⋈ K2 exact, spanning R^12".into())
}

fn product_identities() -> Outcome {
    let graphs: Vec<Graph> = (1..=4).flat_map(common::nonisomorphic).collect();
    ensure!(graphs.len() == 18, "{} isomorphism classes", graphs.len());
    for g in &graphs {
        let ag = common::adjacency(g);
        for h in &graphs {
            let ah = common::adjacency(h);
            let strong = common::adjacency(&strong_product(g, h).unwrap());
            ensure!(
                common::plus_identity(&strong)
                    == kron(&common::plus_identity(&ag), &common::plus_identity(&ah)),
                "strong product identity fails for {g:?} and {h:?}"
            );
            let modified = common::adjacency(&modified_strong_product(g, h).unwrap());
            ensure!(
                modified == kron(&ag, &common::plus_identity(&ah)),
                "modified product identity fails for {g:?} and {h:?}"
            );
        }
    }
    Ok(format!("{} ordered pairs", graphs.len() * graphs.len()))
}

fn out_of_scope() -> Outcome {
    Ok("informational: every construction is finite, nothing excluded".into())
}

fn main() {
    let criteria: [Criterion; 8] = [
        ("projector family", projectors),
        ("one-factor witnesses", one_factor_fixtures),
        ("max-degree witnesses", max_degree_fixtures),
        ("hypergraph witnesses", hypergraph_fixtures),
        ("literal diagonal variant fails", literal_variant_fails),
        ("lifted eigenvectors", eigenvectors),
        ("product adjacency identities", product_identities),
        ("desk-scale coverage", out_of_scope),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        match run() {
            Ok(detail) => println!("criterion {}: PASS {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {}: FAIL {name}: {why}", i + 1);
            }
        }
    }
    println!(
        "acceptance: {} of {} criteria pass",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
