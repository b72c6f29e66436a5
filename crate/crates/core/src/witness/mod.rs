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

//! Witness matrices `M = Σ A_i ⊗ J_i` and their verification.
//!
//! If every summand `A_i` is symmetric with spectrum inside `{λ1, λ2}`, then
//! `M` has spectrum inside `{λ1, λ2}` (the vectors `v ⊗ q_i` diagonalize it),
//! and the zero pattern of each `k x k` block of `M` depends only on which
//! summands are nonzero in the corresponding cell.

mod build;
mod certificate;
mod eigvec;

pub use build::{
    witness_hypergraph, witness_maxdeg, witness_onefactor, witness_signed_diagonal,
    DiagonalVariant, HypergraphCase, MaxDegreeOptions, Witness,
};
pub use certificate::{
    emit_certificate, parse_certificate, verify_certificate, ColoringRecord, Construction,
    OracleCheck, Verdicts, VerifyReport, WitnessCertificate,
};
pub use eigvec::{
    clique_eigenpairs, eigvec_structure_check, matching_eigenpairs, EigenSample, EigvecReport,
};

use num_traits::Zero;
use thiserror::Error;

use crate::coloring::ColoringError;
use crate::formats::ParseError;
use crate::graph::Graph;
use crate::linalg::{
    annihilates, kron, Annihilation, LinalgError, ProjectorFamily, Rational, RationalMatrix,
};

/// A single violated hypothesis of a witness construction.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Hypothesis {
    #[error("graph has no edges")]
    NoEdges,
    #[error("graph is disconnected")]
    Disconnected,
    #[error("vertex {0} has no incident edge")]
    IsolatedVertex(usize),
    #[error("hypergraph is not uniform")]
    NotUniform,
    #[error("hypergraph is not linear")]
    NotLinear,
    #[error("vertices {0:?} lie in no hyperedge")]
    UncoveredVertices(Vec<usize>),
    #[error("hypergraph is not regular")]
    NotRegular,
    #[error("case needs {expected}, but the coloring has {colors} colors and max degree {degree}")]
    ColorCount {
        expected: &'static str,
        colors: usize,
        degree: usize,
    },
    #[error("factors do not partition the edge set: {0}")]
    NotPartition(String),
    #[error("factor {0} is not a perfect matching")]
    NotPerfectMatching(usize),
    #[error("coloring does not belong to this graph")]
    ForeignColoring,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("hypotheses violated: {}", .0.iter().map(|h| h.to_string()).collect::<Vec<_>>().join("; "))]
    Hypotheses(Vec<Hypothesis>),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error(transparent)]
    Coloring(#[from] ColoringError),
    #[error(transparent)]
    Format(#[from] ParseError),
    #[error("summands must be equal-size symmetric square matrices")]
    BadSummands,
    #[error("{summands} summands but projector family of size {k}")]
    SizeMismatch { summands: usize, k: usize },
    #[error("matrix is {rows}x{cols} but the target has {n} vertices")]
    DimensionMismatch { rows: usize, cols: usize, n: usize },
}

/// The summands `A_1, ..., A_k` and the eigenvalue pair each must realize.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SummandFamily {
    summands: Vec<RationalMatrix>,
    lambda1: Rational,
    lambda2: Rational,
}

impl SummandFamily {
    pub fn new(
        summands: Vec<RationalMatrix>,
        lambda1: Rational,
        lambda2: Rational,
    ) -> Result<Self, WitnessError> {
        let n = summands.first().map_or(0, RationalMatrix::rows);
        if summands.is_empty()
            || summands
                .iter()
                .any(|a| a.rows() != n || a.cols() != n || !a.is_symmetric())
        {
            return Err(WitnessError::BadSummands);
        }
        if lambda1 == lambda2 {
            return Err(LinalgError::EqualEigenvalues.into());
        }
        Ok(SummandFamily {
            summands,
            lambda1,
            lambda2,
        })
    }

    pub fn k(&self) -> usize {
        self.summands.len()
    }

    /// Dimension `n` of each summand.
    pub fn n(&self) -> usize {
        self.summands[0].rows()
    }

    pub fn summand(&self, i: usize) -> &RationalMatrix {
        &self.summands[i]
    }

    pub fn summands(&self) -> &[RationalMatrix] {
        &self.summands
    }

    pub fn lambdas(&self) -> (&Rational, &Rational) {
        (&self.lambda1, &self.lambda2)
    }

    /// Exact spectral check of every summand against `{λ1, λ2}`.
    pub fn certify_each(&self) -> Vec<Annihilation> {
        self.summands
            .iter()
            .map(|a| annihilates(a, &self.lambda1, &self.lambda2).expect("summands are symmetric"))
            .collect()
    }

    /// `B[l][m]`: number of summands nonzero at `(l, m)`.
    pub fn count_matrix(&self) -> Vec<Vec<usize>> {
        let n = self.n();
        (0..n)
            .map(|l| {
                (0..n)
                    .map(|m| {
                        self.summands
                            .iter()
                            .filter(|a| !a.get(l, m).is_zero())
                            .count()
                    })
                    .collect()
            })
            .collect()
    }

    /// Indices of summands nonzero at `(l, m)`.
    pub fn cell_subset(&self, l: usize, m: usize) -> Vec<usize> {
        (0..self.k())
            .filter(|&i| !self.summands[i].get(l, m).is_zero())
            .collect()
    }

    /// Whether all summands nonzero at `(l, m)` carry the same value, so the
    /// block is a scalar multiple of a partial projector sum.
    pub fn cell_is_uniform(&self, l: usize, m: usize) -> bool {
        let mut values = self
            .summands
            .iter()
            .map(|a| a.get(l, m))
            .filter(|x| !x.is_zero());
        match values.next() {
            None => true,
            Some(first) => values.all(|x| x == first),
        }
    }

    /// Distinct nonempty cell subsets, sorted, each paired with whether every
    /// cell carrying it is uniform.
    pub fn block_subsets(&self) -> (Vec<Vec<usize>>, bool) {
        let n = self.n();
        let mut subsets = Vec::new();
        let mut uniform = true;
        for l in 0..n {
            for m in 0..n {
                let s = self.cell_subset(l, m);
                if s.is_empty() {
                    continue;
                }
                uniform &= self.cell_is_uniform(l, m);
                subsets.push(s);
            }
        }
        subsets.sort();
        subsets.dedup();
        (subsets, uniform)
    }
}

/// `Σ A_i ⊗ J_i`.
pub fn assemble(
    fam: &SummandFamily,
    proj: &ProjectorFamily,
) -> Result<RationalMatrix, WitnessError> {
    if fam.k() != proj.k() {
        return Err(WitnessError::SizeMismatch {
            summands: fam.k(),
            k: proj.k(),
        });
    }
    let size = fam.n() * proj.k();
    let mut m = RationalMatrix::zeros(size, size);
    for (a, j) in fam.summands().iter().zip(proj.projectors()) {
        m = &m + &kron(a, j);
    }
    debug_assert!(m.is_symmetric());
    Ok(m)
}

/// Zero pattern of one `k x k` block of `M`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockClass {
    /// No summand contributes.
    Zero,
    /// A nonempty proper partial sum: every entry nonzero.
    Full,
    /// All `k` summands contribute: the identity pattern.
    Identity,
}

/// Classifies each block from the summand-count matrix.
pub fn block_pattern(
    counts: &[Vec<usize>],
    k: usize,
) -> Result<Vec<Vec<BlockClass>>, WitnessError> {
    counts
        .iter()
        .map(|row| {
            row.iter()
                .map(|&c| match c {
                    0 => Ok(BlockClass::Zero),
                    c if c < k => Ok(BlockClass::Full),
                    c if c == k => Ok(BlockClass::Identity),
                    _ => Err(WitnessError::BadSummands),
                })
                .collect()
        })
        .collect()
}

/// Whether the off-diagonal support of `m` is exactly the edge set of
/// `target`. The diagonal is unconstrained.
pub fn check_pattern_membership(m: &RationalMatrix, target: &Graph) -> Result<bool, WitnessError> {
    let n = target.n();
    if m.rows() != n || m.cols() != n {
        return Err(WitnessError::DimensionMismatch {
            rows: m.rows(),
            cols: m.cols(),
            n,
        });
    }
    if !m.is_symmetric() {
        return Err(LinalgError::NotSymmetric.into());
    }
    Ok((0..n).all(|i| (0..i).all(|j| !m.get(i, j).is_zero() == target.has_edge(i, j))))
}
