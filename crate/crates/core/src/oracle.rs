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

//! Floating-point cross-check: cyclic Jacobi eigenvalues for symmetric
//! matrices and distinct-eigenvalue counting by single-linkage clustering.
//!
//! This path shares no code with the exact pipeline beyond the conversion of
//! rationals to the nearest `f64`.

use thiserror::Error;

pub const DEFAULT_MAX_SWEEPS: usize = 100;
pub const DEFAULT_CLUSTER_GAP: f64 = 1e-6;
const SYMMETRY_TOLERANCE: f64 = 1e-12;
const OFF_DIAGONAL_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is not symmetric: |a[{i}][{j}] - a[{j}][{i}]| = {diff:e}")]
    NotSymmetric { i: usize, j: usize, diff: f64 },
    #[error("Jacobi did not converge in {sweeps} sweeps (off-diagonal norm {off:e})")]
    NoConvergence { sweeps: usize, off: f64 },
    #[error("cluster gap must be positive")]
    BadGap,
}

/// Sorted eigenvalues of a symmetric matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct FloatSpectrum {
    eigenvalues: Vec<f64>,
    pub sweeps: usize,
}

impl FloatSpectrum {
    pub fn eigenvalues(&self) -> &[f64] {
        &self.eigenvalues
    }

    pub fn from_values(mut eigenvalues: Vec<f64>) -> Self {
        eigenvalues.sort_by(f64::total_cmp);
        FloatSpectrum {
            eigenvalues,
            sweeps: 0,
        }
    }

    /// Clusters of values chained by gaps `<= gap`, as `(centroid, size)`.
    pub fn clusters(&self, gap: f64) -> Result<Vec<(f64, usize)>, OracleError> {
        if gap.is_nan() || gap <= 0.0 {
            return Err(OracleError::BadGap);
        }
        let mut out: Vec<(f64, usize)> = Vec::new();
        let mut prev: Option<f64> = None;
        for &x in &self.eigenvalues {
            match (prev, out.last_mut()) {
                (Some(p), Some((sum, count))) if x - p <= gap => {
                    *sum += x;
                    *count += 1;
                }
                _ => out.push((x, 1)),
            }
            prev = Some(x);
        }
        Ok(out
            .into_iter()
            .map(|(sum, count)| (sum / count as f64, count))
            .collect())
    }

    pub fn distinct_count(&self, gap: f64) -> Result<usize, OracleError> {
        Ok(self.clusters(gap)?.len())
    }
}

fn frobenius_off(a: &[Vec<f64>]) -> f64 {
    let mut s = 0.0;
    for (i, row) in a.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            if i != j {
                s += x * x;
            }
        }
    }
    s.sqrt()
}

/// Cyclic Jacobi with a fixed row-by-row sweep order.
#[allow(clippy::needless_range_loop)]
pub fn eigensolve_symmetric(
    m: &[Vec<f64>],
    max_sweeps: usize,
) -> Result<FloatSpectrum, OracleError> {
    let n = m.len();
    if m.iter().any(|row| row.len() != n) {
        return Err(OracleError::NotSquare);
    }
    for i in 0..n {
        for j in 0..i {
            let diff = (m[i][j] - m[j][i]).abs();
            if diff > SYMMETRY_TOLERANCE {
                return Err(OracleError::NotSymmetric { i, j, diff });
            }
        }
    }
    let mut a: Vec<Vec<f64>> = m.to_vec();
    let norm = m.iter().flatten().map(|x| x * x).sum::<f64>().sqrt();
    let target = OFF_DIAGONAL_TOLERANCE * norm.max(f64::MIN_POSITIVE);

    let mut sweeps = 0;
    while frobenius_off(&a) > target {
        if sweeps == max_sweeps {
            return Err(OracleError::NoConvergence {
                sweeps,
                off: frobenius_off(&a),
            });
        }
        sweeps += 1;
        for p in 0..n {
            for q in (p + 1)..n {
                let apq = a[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (a[q][q] - a[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt());
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k][p];
                    let akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p][k];
                    let aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    let mut spectrum = FloatSpectrum::from_values((0..n).map(|i| a[i][i]).collect());
    spectrum.sweeps = sweeps;
    Ok(spectrum)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Graph;
    use crate::linalg::ProjectorFamily;
    use proptest::prelude::*;

    fn adjacency(g: &Graph) -> Vec<Vec<f64>> {
        g.adjacency()
            .into_iter()
            .map(|r| r.into_iter().map(f64::from).collect())
            .collect()
    }

    #[test]
    fn diagonal() {
        let m = vec![
            vec![3.0, 0.0, 0.0],
            vec![0.0, 1.0, 0.0],
            vec![0.0, 0.0, 2.0],
        ];
        let s = eigensolve_symmetric(&m, DEFAULT_MAX_SWEEPS).unwrap();
        assert_eq!(s.eigenvalues(), &[1.0, 2.0, 3.0]);
    }

    #[test]
    fn complete_graph_spectrum() {
        let k4 = crate::generators::complete(4).unwrap();
        let s = eigensolve_symmetric(&adjacency(&k4), DEFAULT_MAX_SWEEPS).unwrap();
        let expected = [-1.0, -1.0, -1.0, 3.0];
        for (x, e) in s.eigenvalues().iter().zip(expected) {
            assert!((x - e).abs() < 1e-9);
        }
        assert_eq!(s.distinct_count(DEFAULT_CLUSTER_GAP).unwrap(), 2);
    }

    #[test]
    fn clustering() {
        let s = FloatSpectrum::from_values(vec![1.0, 1.0 + 1e-9, -1.0]);
        assert_eq!(s.distinct_count(1e-6).unwrap(), 2);
        let s = FloatSpectrum::from_values(vec![0.0, 1.0, 2.0, 3.0]);
        assert_eq!(s.distinct_count(0.5).unwrap(), 4);
        assert_eq!(s.distinct_count(0.0), Err(OracleError::BadGap));
        let clusters = FloatSpectrum::from_values(vec![2.0, -1.0, -1.0 + 2e-7, 2.0 - 4e-7])
            .clusters(1e-6)
            .unwrap();
        assert_eq!(clusters.len(), 2);
        assert_eq!(clusters[0].1, 2);
        assert!((clusters[1].0 - (2.0 - 2e-7)).abs() < 1e-15);
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(
            eigensolve_symmetric(&[vec![0.0, 1.0], vec![0.0, 0.0]], 10),
            Err(OracleError::NotSymmetric { .. })
        ));
        assert_eq!(
            eigensolve_symmetric(&[vec![0.0, 1.0]], 10),
            Err(OracleError::NotSquare)
        );
        let m = vec![
            vec![1.0, 2.0, 3.0],
            vec![2.0, 5.0, 1.0],
            vec![3.0, 1.0, -4.0],
        ];
        assert!(matches!(
            eigensolve_symmetric(&m, 0),
            Err(OracleError::NoConvergence { .. })
        ));
        assert!(eigensolve_symmetric(&[], 10)
            .unwrap()
            .eigenvalues()
            .is_empty());
    }

    #[allow(clippy::needless_range_loop)]
    fn symmetric(n: usize, seed: &[f64]) -> Vec<Vec<f64>> {
        let mut m = vec![vec![0.0; n]; n];
        let mut it = seed.iter().cycle();
        for i in 0..n {
            for j in 0..=i {
                let x = *it.next().unwrap();
                m[i][j] = x;
                m[j][i] = x;
            }
        }
        m
    }

    fn matmul(a: &[Vec<f64>], b: &[Vec<f64>]) -> Vec<Vec<f64>> {
        let n = a.len();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| (0..n).map(|k| a[i][k] * b[k][j]).sum())
                    .collect()
            })
            .collect()
    }

    proptest! {
        #[test]
        fn trace_preserved(n in 1usize..9, seed in proptest::collection::vec(-10.0f64..10.0, 45)) {
            let m = symmetric(n, &seed);
            let s = eigensolve_symmetric(&m, DEFAULT_MAX_SWEEPS).unwrap();
            let trace: f64 = (0..n).map(|i| m[i][i]).sum();
            let sum: f64 = s.eigenvalues().iter().sum();
            prop_assert!((trace - sum).abs() < 1e-9 * n as f64 * (1.0 + trace.abs()));
            prop_assert!(s.eigenvalues().windows(2).all(|w| w[0] <= w[1]));
        }

        #[test]
        fn householder_conjugation_invariant(n in 1usize..9, seed in proptest::collection::vec(-5.0f64..5.0, 45)) {
            let m = symmetric(n, &seed);
            let q = ProjectorFamily::new(n).unwrap().q().to_f64();
            // Q is symmetric, so Qᵀ M Q = Q M Q.
            let conj = matmul(&matmul(&q, &m), &q);
            let conj: Vec<Vec<f64>> = (0..n)
                .map(|i| (0..n).map(|j| 0.5 * (conj[i][j] + conj[j][i])).collect())
                .collect();
            let a = eigensolve_symmetric(&m, DEFAULT_MAX_SWEEPS).unwrap();
            let b = eigensolve_symmetric(&conj, DEFAULT_MAX_SWEEPS).unwrap();
            for (x, y) in a.eigenvalues().iter().zip(b.eigenvalues()) {
                prop_assert!((x - y).abs() < 1e-8, "{} vs {}", x, y);
            }
        }
    }
}
