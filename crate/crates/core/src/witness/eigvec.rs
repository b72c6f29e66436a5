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

//! Explicit eigenvectors of a witness: an eigenvector `v` of `A_i` lifts to
//! the eigenvector `v ⊗ q_i` of `M` with the same eigenvalue.

use num_traits::{One, Zero};

use super::{assemble, SummandFamily, WitnessError};
use crate::linalg::{rat, ProjectorFamily, Rational, RationalMatrix};

/// An eigenpair `(vector, lambda)` of summand `summand`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigenSample {
    pub summand: usize,
    pub vector: Vec<Rational>,
    pub lambda: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EigvecReport {
    pub checked: usize,
    /// Indices of samples failing either the summand or the lifted equation.
    pub failures: Vec<usize>,
    /// Rank of the lifted vectors.
    pub lifted_rank: usize,
}

impl EigvecReport {
    pub fn is_clean(&self) -> bool {
        self.failures.is_empty()
    }
}

fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}

/// `e_u + e_v` for `1` and `e_u - e_v` for `-1`, per matching edge.
pub fn matching_eigenpairs(
    summand: usize,
    n: usize,
    matching: &[(usize, usize)],
) -> Vec<EigenSample> {
    let mut out = Vec::with_capacity(2 * matching.len());
    for &(u, v) in matching {
        for sign in [1, -1] {
            let mut vector = unit(n, u);
            vector[v] = rat(sign, 1);
            out.push(EigenSample {
                summand,
                vector,
                lambda: rat(sign, 1),
            });
        }
    }
    out
}

/// The all-ones vector on the clique for `l - 1` and `e_c0 - e_cj` for `-1`.
pub fn clique_eigenpairs(summand: usize, n: usize, clique: &[usize]) -> Vec<EigenSample> {
    let Some((&first, rest)) = clique.split_first() else {
        return Vec::new();
    };
    let mut ones = vec![Rational::zero(); n];
    for &v in clique {
        ones[v] = Rational::one();
    }
    let mut out = vec![EigenSample {
        summand,
        vector: ones,
        lambda: rat(clique.len() as i64 - 1, 1),
    }];
    for &v in rest {
        let mut vector = unit(n, first);
        vector[v] = rat(-1, 1);
        out.push(EigenSample {
            summand,
            vector,
            lambda: rat(-1, 1),
        });
    }
    out
}

fn is_eigenpair(m: &RationalMatrix, v: &[Rational], lambda: &Rational) -> bool {
    match m.apply(v) {
        Ok(mv) => v.iter().any(|x| !x.is_zero()) && mv.iter().zip(v).all(|(a, b)| *a == lambda * b),
        Err(_) => false,
    }
}

fn rank(mut rows: Vec<Vec<Rational>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let pivot = rows[r][c].clone();
        for i in (r + 1)..rows.len() {
            if rows[i][c].is_zero() {
                continue;
            }
            let f = &rows[i][c] / &pivot;
            let (top, bottom) = rows.split_at_mut(i);
            for (x, p) in bottom[0][c..].iter_mut().zip(&top[r][c..]) {
                *x -= &f * p;
            }
        }
        r += 1;
    }
    r
}

/// Checks each sample against its summand and its lift against `M`.
pub fn eigvec_structure_check(
    fam: &SummandFamily,
    proj: &ProjectorFamily,
    samples: &[EigenSample],
) -> Result<EigvecReport, WitnessError> {
    let m = assemble(fam, proj)?;
    let mut failures = Vec::new();
    let mut lifted = Vec::with_capacity(samples.len());
    for (idx, s) in samples.iter().enumerate() {
        if s.summand >= fam.k() || s.vector.len() != fam.n() {
            failures.push(idx);
            continue;
        }
        let q = proj.column(s.summand);
        let lift: Vec<Rational> = s
            .vector
            .iter()
            .flat_map(|a| q.iter().map(move |b| a * b))
            .collect();
        if !is_eigenpair(fam.summand(s.summand), &s.vector, &s.lambda)
            || !is_eigenpair(&m, &lift, &s.lambda)
        {
            failures.push(idx);
        }
        lifted.push(lift);
    }
    Ok(EigvecReport {
        checked: samples.len(),
        failures,
        lifted_rank: rank(lifted),
    })
}
