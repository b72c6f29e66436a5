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

//! Exit codes and the one-line error report written to stderr.

use std::fmt;
use std::process::ExitCode;

use twoeig_core::coloring::ColoringError;
use twoeig_core::formats::ParseError;
use twoeig_core::generators::GenerateError;
use twoeig_core::graph::GraphError;
use twoeig_core::linalg::LinalgError;
use twoeig_core::oracle::OracleError;
use twoeig_core::witness::WitnessError;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Kind {
    /// A certificate or check came out invalid.
    Invalid,
    Io,
    Parse,
    Hypothesis,
    Coloring,
    Oracle,
    Generate,
    Internal,
}

impl Kind {
    pub fn code(self) -> u8 {
        // 2 is left to clap for usage errors.
        match self {
            Kind::Invalid => 1,
            Kind::Io => 3,
            Kind::Parse => 4,
            Kind::Hypothesis => 5,
            Kind::Coloring => 6,
            Kind::Oracle => 7,
            Kind::Generate => 8,
            Kind::Internal => 9,
        }
    }

    fn tag(self) -> &'static str {
        match self {
            Kind::Invalid => "invalid",
            Kind::Io => "io",
            Kind::Parse => "parse",
            Kind::Hypothesis => "hypothesis",
            Kind::Coloring => "coloring",
            Kind::Oracle => "oracle",
            Kind::Generate => "generate",
            Kind::Internal => "internal",
        }
    }
}

#[derive(Debug)]
pub struct Failure {
    pub kind: Kind,
    pub message: String,
}

impl Failure {
    pub fn new(kind: Kind, message: impl Into<String>) -> Self {
        Failure {
            kind,
            message: message.into(),
        }
    }

    /// Prints `error kind=<tag> code=<n> msg="<message>"` and returns the code.
    pub fn report(&self) -> ExitCode {
        eprintln!("{self}");
        ExitCode::from(self.kind.code())
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "error kind={} code={} msg={:?}",
            self.kind.tag(),
            self.kind.code(),
            self.message.replace('\n', " ")
        )
    }
}

pub type Result<T> = std::result::Result<T, Failure>;

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        Failure::new(Kind::Parse, e.to_string())
    }
}

impl From<GenerateError> for Failure {
    fn from(e: GenerateError) -> Self {
        Failure::new(Kind::Generate, e.to_string())
    }
}

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        Failure::new(Kind::Parse, e.to_string())
    }
}

impl From<ColoringError> for Failure {
    fn from(e: ColoringError) -> Self {
        let kind = match e {
            ColoringError::NoEdges | ColoringError::NotRegular | ColoringError::NotBipartite => {
                Kind::Hypothesis
            }
            ColoringError::Infeasible { .. } | ColoringError::Undecided { .. } => Kind::Coloring,
            _ => Kind::Parse,
        };
        Failure::new(kind, e.to_string())
    }
}

impl From<LinalgError> for Failure {
    fn from(e: LinalgError) -> Self {
        Failure::new(Kind::Internal, e.to_string())
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        Failure::new(Kind::Oracle, e.to_string())
    }
}

impl From<WitnessError> for Failure {
    fn from(e: WitnessError) -> Self {
        match e {
            WitnessError::Hypotheses(_) => Failure::new(Kind::Hypothesis, e.to_string()),
            WitnessError::Format(p) => p.into(),
            WitnessError::Coloring(c) => c.into(),
            WitnessError::DimensionMismatch { .. } => Failure::new(Kind::Parse, e.to_string()),
            other => Failure::new(Kind::Internal, other.to_string()),
        }
    }
}

pub fn io(path: &std::path::Path, e: std::io::Error) -> Failure {
    Failure::new(Kind::Io, format!("{}: {e}", path.display()))
}
