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

//! Exact rational linear algebra: dense matrices, Kronecker products, the
//! Householder projector family, and spectral annihilation checks.

mod matrix;
mod projector;
mod rational;

pub use matrix::{
    annihilated_by, annihilates, kron, Annihilation, RationalMatrix, SpectrumVerdict,
};
pub use projector::{
    verify_nowhere_zero, NowhereZeroMode, NowhereZeroReport, ProjectorFamily, SubsetViolation,
    MAX_EXHAUSTIVE_K,
};
pub use rational::{format_rational, parse_rational, rat, Rational};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinalgError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("eigenvalues must be distinct")]
    EqualEigenvalues,
    #[error("projector size must be at least 1, got {0}")]
    BadSize(usize),
    #[error("index {index} out of range for size {k}")]
    IndexOutOfRange { index: usize, k: usize },
    #[error("exhaustive subset scan needs k <= {max}, got {k}")]
    TooLargeForExhaustive { k: usize, max: usize },
}
