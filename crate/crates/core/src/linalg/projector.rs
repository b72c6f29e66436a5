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

//! The Householder projector family `J_i = Q D_i Qᵀ`.
//!
//! `Q = I - 2uuᵀ` for a unit vector `u` whose squared entries are rational:
//! for odd `k`, `u = (1, ..., 1) / √k`; for even `k`,
//! `u = (2, 1, ..., 1) / √(k+3)`. Writing `u = p / √d` with an integer
//! profile `p`, `uuᵀ = ppᵀ / d` and every entry of `Q` is an integer over `d`.
//! Partial sums `Σ_{i∈K} J_i` are nowhere zero for every nonempty proper `K`.

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use super::{LinalgError, Rational, RationalMatrix};

/// Largest `k` accepted by the exhaustive subset scan.
pub const MAX_EXHAUSTIVE_K: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProjectorFamily {
    k: usize,
    profile: Vec<i64>,
    denom: i64,
    q: RationalMatrix,
    j: Vec<RationalMatrix>,
}

impl ProjectorFamily {
    pub fn new(k: usize) -> Result<Self, LinalgError> {
        if k == 0 {
            return Err(LinalgError::BadSize(k));
        }
        let (profile, denom): (Vec<i64>, i64) = if k % 2 == 1 {
            (vec![1; k], k as i64)
        } else {
            let mut p = vec![1; k];
            p[0] = 2;
            (p, k as i64 + 3)
        };
        // Unit norm: Σ p_a² = d (for even k: 4 + (k - 1) = k + 3).
        assert_eq!(profile.iter().map(|x| x * x).sum::<i64>(), denom);

        let q = RationalMatrix::from_fn(k, k, |a, b| {
            let delta = if a == b { denom } else { 0 };
            Rational::new(
                BigInt::from(delta - 2 * profile[a] * profile[b]),
                BigInt::from(denom),
            )
        });
        let j = (0..k)
            .map(|i| {
                let col = q.column(i);
                RationalMatrix::from_fn(k, k, |a, b| &col[a] * &col[b])
            })
            .collect();
        Ok(ProjectorFamily {
            k,
            profile,
            denom,
            q,
            j,
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn q(&self) -> &RationalMatrix {
        &self.q
    }

    /// `J_i`, the rank-one projector onto column `i` of `Q`.
    pub fn j(&self, i: usize) -> &RationalMatrix {
        &self.j[i]
    }

    pub fn projectors(&self) -> &[RationalMatrix] {
        &self.j
    }

    /// Column `q_i` of `Q`.
    pub fn column(&self, i: usize) -> Vec<Rational> {
        self.q.column(i)
    }

    /// Integer profile `p` with `u = p / √d`.
    pub fn profile(&self) -> &[i64] {
        &self.profile
    }

    /// `d = Σ p_a²`.
    pub fn denom(&self) -> i64 {
        self.denom
    }

    /// `Q D_K Qᵀ = Σ_{i∈K} J_i`. Repeated indices count once.
    pub fn subset_projector(&self, subset: &[usize]) -> Result<RationalMatrix, LinalgError> {
        let mut idx = subset.to_vec();
        idx.sort_unstable();
        idx.dedup();
        if let Some(&index) = idx.iter().find(|&&i| i >= self.k) {
            return Err(LinalgError::IndexOutOfRange { index, k: self.k });
        }
        let mut acc = RationalMatrix::zeros(self.k, self.k);
        for i in idx {
            acc = &acc + &self.j[i];
        }
        Ok(acc)
    }

    /// `d · Q` as integers.
    fn scaled_q(&self) -> Vec<Vec<i64>> {
        (0..self.k)
            .map(|a| {
                (0..self.k)
                    .map(|b| {
                        let delta = if a == b { self.denom } else { 0 };
                        delta - 2 * self.profile[a] * self.profile[b]
                    })
                    .collect()
            })
            .collect()
    }

    /// Checks the two scalar conditions that make `Q D_K Qᵀ` nowhere zero:
    /// `u_Kᵀu_K ≠ 1/2`, and no `(1 - u_Kᵀu_K) u_a²` with `a ∈ K` equals `1/4`.
    /// Returns `(norm_ok, diagonal_ok)`.
    fn scalar_conditions(&self, members: impl Iterator<Item = usize> + Clone) -> (bool, bool) {
        let d = self.denom;
        let mass: i64 = members.clone().map(|a| self.profile[a].pow(2)).sum();
        // u_Kᵀu_K = mass / d.
        let norm_ok = 2 * mass != d;
        // (1 - mass/d) p_a²/d = 1/4  <=>  4 (d - mass) p_a² = d².
        let diagonal_ok = members
            .into_iter()
            .all(|a| 4 * (d - mass) * self.profile[a].pow(2) != d * d);
        (norm_ok, diagonal_ok)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NowhereZeroMode {
    /// All `2^k - 2` nonempty proper subsets; requires `k <= MAX_EXHAUSTIVE_K`.
    Exhaustive,
    /// Only the listed subsets.
    Targeted(Vec<Vec<usize>>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubsetViolation {
    pub subset: Vec<usize>,
    /// Positions `(a, b)` where `Σ_{i∈K} J_i` vanishes.
    pub zero_entries: Vec<(usize, usize)>,
    pub norm_condition_ok: bool,
    pub diagonal_condition_ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NowhereZeroReport {
    pub subsets_checked: u64,
    /// Subsets whose partial sum has a zero entry or that fail a scalar condition.
    pub violations: Vec<SubsetViolation>,
    /// Targeted subsets that were empty or the full index set, hence skipped.
    pub skipped: Vec<Vec<usize>>,
}

impl NowhereZeroReport {
    pub fn is_clean(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Scans partial projector sums for zero entries. Targeted mode uses exact
/// rational sums; exhaustive mode walks each chunk of subsets in Gray-code
/// order over the integer matrix `d² Σ J_i`, which has the same zero pattern.
pub fn verify_nowhere_zero(
    fam: &ProjectorFamily,
    mode: &NowhereZeroMode,
) -> Result<NowhereZeroReport, LinalgError> {
    match mode {
        NowhereZeroMode::Targeted(subsets) => targeted(fam, subsets),
        NowhereZeroMode::Exhaustive => exhaustive(fam),
    }
}

fn targeted(
    fam: &ProjectorFamily,
    subsets: &[Vec<usize>],
) -> Result<NowhereZeroReport, LinalgError> {
    let mut report = NowhereZeroReport::default();
    for subset in subsets {
        let mut members = subset.clone();
        members.sort_unstable();
        members.dedup();
        if let Some(&index) = members.iter().find(|&&i| i >= fam.k) {
            return Err(LinalgError::IndexOutOfRange { index, k: fam.k });
        }
        if members.is_empty() || members.len() == fam.k {
            report.skipped.push(members);
            continue;
        }
        report.subsets_checked += 1;
        let sum = fam.subset_projector(&members)?;
        let zero_entries: Vec<(usize, usize)> = (0..fam.k)
            .flat_map(|a| (0..fam.k).map(move |b| (a, b)))
            .filter(|&(a, b)| sum.get(a, b).is_zero())
            .collect();
        let (norm_ok, diag_ok) = fam.scalar_conditions(members.iter().copied());
        if !zero_entries.is_empty() || !norm_ok || !diag_ok {
            report.violations.push(SubsetViolation {
                subset: members,
                zero_entries,
                norm_condition_ok: norm_ok,
                diagonal_condition_ok: diag_ok,
            });
        }
    }
    Ok(report)
}

fn exhaustive(fam: &ProjectorFamily) -> Result<NowhereZeroReport, LinalgError> {
    let k = fam.k;
    if k > MAX_EXHAUSTIVE_K {
        return Err(LinalgError::TooLargeForExhaustive {
            k,
            max: MAX_EXHAUSTIVE_K,
        });
    }
    let sq = fam.scaled_q();
    // d² J_i as flat integer matrices.
    let jint: Vec<Vec<i64>> = (0..k)
        .map(|i| {
            (0..k * k)
                .map(|pos| sq[pos / k][i] * sq[pos % k][i])
                .collect()
        })
        .collect();
    let high_bits = k.min(6);
    let low_bits = k - high_bits;
    let full: u64 = (1u64 << k) - 1;

    let violations: Vec<SubsetViolation> = (0u64..1 << high_bits)
        .into_par_iter()
        .flat_map_iter(|hi| {
            let mut acc = vec![0i64; k * k];
            for i in 0..high_bits {
                if hi >> i & 1 == 1 {
                    add_into(&mut acc, &jint[low_bits + i], 1);
                }
            }
            let mut found = Vec::new();
            let mut gray = 0u64;
            for t in 0u64..1 << low_bits {
                if t > 0 {
                    let bit = t.trailing_zeros() as usize;
                    let sign = if gray >> bit & 1 == 1 { -1 } else { 1 };
                    gray ^= 1 << bit;
                    add_into(&mut acc, &jint[bit], sign);
                }
                let mask = (hi << low_bits) | gray;
                if mask == 0 || mask == full {
                    continue;
                }
                let members = (0..k).filter(move |&i| mask >> i & 1 == 1);
                let (norm_ok, diag_ok) = fam.scalar_conditions(members.clone());
                let zeros: Vec<(usize, usize)> = acc
                    .iter()
                    .enumerate()
                    .filter(|(_, &x)| x == 0)
                    .map(|(pos, _)| (pos / k, pos % k))
                    .collect();
                if !zeros.is_empty() || !norm_ok || !diag_ok {
                    found.push(SubsetViolation {
                        subset: members.collect(),
                        zero_entries: zeros,
                        norm_condition_ok: norm_ok,
                        diagonal_condition_ok: diag_ok,
                    });
                }
            }
            found
        })
        .collect();

    Ok(NowhereZeroReport {
        subsets_checked: full - 1,
        violations,
        skipped: Vec::new(),
    })
}

fn add_into(acc: &mut [i64], m: &[i64], sign: i64) {
    for (a, b) in acc.iter_mut().zip(m) {
        *a += sign * b;
    }
}
