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

//! Exact witnesses that a graph admits a symmetric matrix with only two
//! distinct eigenvalues.
//!
//! The pipeline builds summand matrices from a coloring of a graph or
//! hypergraph, glues them together with a family of orthogonal rank-one
//! projectors, and checks the result in exact rational arithmetic. A
//! floating-point eigensolver in [`oracle`] provides an independent check.

pub mod coloring;
pub mod formats;
pub mod generators;
pub mod graph;
pub mod linalg;
pub mod oracle;
pub mod witness;
