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

//! Matrix text formats.
//!
//! Exact matrices:
//!
//! ```text
//! matrix 2 2 symmetric
//! 1/1 -1/2
//! -1/2 3/1
//! ```
//!
//! The flag is `symmetric` or `general`; a `symmetric` header is checked.
//! Raw float matrices are a `rows cols` header followed by `rows * cols`
//! whitespace-separated numbers.

use super::{content_lines, ParseError};
use crate::linalg::{format_rational, parse_rational, RationalMatrix};

/// Dimension cap for parsed matrices.
pub const MAX_DIM: usize = 4096;

pub fn emit_matrix(m: &RationalMatrix) -> String {
    let flag = if m.is_symmetric() {
        "symmetric"
    } else {
        "general"
    };
    let mut out = format!("matrix {} {} {flag}\n", m.rows(), m.cols());
    for i in 0..m.rows() {
        let row: Vec<String> = m.row(i).iter().map(format_rational).collect();
        out.push_str(&row.join(" "));
        out.push('\n');
    }
    out
}

fn dims(rows: &str, cols: &str, line: usize) -> Result<(usize, usize), ParseError> {
    let parse = |t: &str| {
        t.parse::<usize>()
            .ok()
            .filter(|&d| d <= MAX_DIM)
            .ok_or_else(|| ParseError::line(line, format!("bad dimension `{t}`")))
    };
    Ok((parse(rows)?, parse(cols)?))
}

/// Parses an exact matrix from an iterator of numbered content lines,
/// consuming exactly the header plus `rows` lines. With `check_flag` off, a
/// `symmetric` header is taken on trust so callers can judge the matrix.
pub(crate) fn parse_matrix_lines<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    check_flag: bool,
) -> Result<RationalMatrix, ParseError> {
    let (line, header) = lines
        .next()
        .ok_or_else(|| ParseError::Structure("missing matrix header".into()))?;
    let tokens: Vec<&str> = header.split_whitespace().collect();
    let (rows, cols, symmetric) = match tokens.as_slice() {
        ["matrix", r, c, flag] => {
            let (r, c) = dims(r, c, line)?;
            let symmetric = match *flag {
                "symmetric" => true,
                "general" => false,
                other => return Err(ParseError::line(line, format!("unknown flag `{other}`"))),
            };
            (r, c, symmetric)
        }
        _ => {
            return Err(ParseError::line(
                line,
                "expected `matrix <rows> <cols> <flag>`",
            ))
        }
    };
    let mut data = Vec::with_capacity(rows.min(64));
    for _ in 0..rows {
        let (line, text) = lines
            .next()
            .ok_or_else(|| ParseError::Structure(format!("expected {rows} matrix rows")))?;
        let row = text
            .split_whitespace()
            .map(|t| {
                parse_rational(t)
                    .ok_or_else(|| ParseError::line(line, format!("bad rational `{t}`")))
            })
            .collect::<Result<Vec<_>, _>>()?;
        if row.len() != cols {
            return Err(ParseError::line(
                line,
                format!("expected {cols} entries, found {}", row.len()),
            ));
        }
        data.push(row);
    }
    let m = if rows == 0 {
        RationalMatrix::zeros(0, cols)
    } else {
        RationalMatrix::from_rows(data).expect("row lengths checked")
    };
    if check_flag && symmetric && !m.is_symmetric() {
        return Err(ParseError::Structure(
            "matrix flagged symmetric is not symmetric".into(),
        ));
    }
    Ok(m)
}

pub fn parse_matrix(text: &str) -> Result<RationalMatrix, ParseError> {
    let mut lines = content_lines(text);
    let m = parse_matrix_lines(&mut lines, true)?;
    if let Some((line, _)) = lines.next() {
        return Err(ParseError::line(line, "trailing content after matrix"));
    }
    Ok(m)
}

pub fn parse_raw_matrix(text: &str) -> Result<Vec<Vec<f64>>, ParseError> {
    let mut tokens =
        content_lines(text).flat_map(|(line, l)| l.split_whitespace().map(move |t| (line, t)));
    let (line, r) = tokens
        .next()
        .ok_or_else(|| ParseError::Structure("missing dimension header".into()))?;
    let (_, c) = tokens
        .next()
        .ok_or_else(|| ParseError::Structure("missing column count".into()))?;
    let (rows, cols) = dims(r, c, line)?;
    let mut out = Vec::with_capacity(rows.min(64));
    for _ in 0..rows {
        let mut row = Vec::with_capacity(cols.min(64));
        for _ in 0..cols {
            let (line, t) = tokens.next().ok_or_else(|| {
                ParseError::Structure(format!("expected {} numbers", rows * cols))
            })?;
            let x: f64 = t
                .parse()
                .map_err(|_| ParseError::line(line, format!("bad number `{t}`")))?;
            if !x.is_finite() {
                return Err(ParseError::line(line, "non-finite entry"));
            }
            row.push(x);
        }
        out.push(row);
    }
    if let Some((line, _)) = tokens.next() {
        return Err(ParseError::line(line, "extra entries"));
    }
    Ok(out)
}

pub fn emit_raw_matrix(m: &[Vec<f64>]) -> String {
    let cols = m.first().map_or(0, Vec::len);
    let mut out = format!("{} {cols}\n", m.len());
    for row in m {
        let cells: Vec<String> = row.iter().map(|x| format!("{x:e}")).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{rat, ProjectorFamily};
    use proptest::prelude::*;

    #[test]
    fn exact_round_trip() {
        let fam = ProjectorFamily::new(4).unwrap();
        let text = emit_matrix(fam.q());
        assert!(text.starts_with("matrix 4 4 symmetric\n-1/7 -4/7"));
        assert_eq!(&parse_matrix(&text).unwrap(), fam.q());
    }

    #[test]
    fn exact_errors() {
        assert!(parse_matrix("matrix 1 2 symmetric\n1 2\n").is_err());
        assert!(parse_matrix("matrix 2 2 symmetric\n1 2\n3 4\n").is_err());
        assert!(parse_matrix("matrix 2 2 general\n1 2\n").is_err());
        assert!(parse_matrix("matrix 1 1 general\n1/0\n").is_err());
        assert!(parse_matrix("matrix 1 1 general\n1\n2\n").is_err());
        assert!(parse_matrix("matrix 99999 1 general\n").is_err());
        let m = parse_matrix("matrix 1 2 general\n1 -2/4\n").unwrap();
        assert_eq!(m.get(0, 1), &rat(-1, 2));
    }

    #[test]
    fn raw_parse() {
        let m = parse_raw_matrix("2 2\n1 0.5\n0.5 -3e0\n").unwrap();
        assert_eq!(m, vec![vec![1.0, 0.5], vec![0.5, -3.0]]);
        assert!(parse_raw_matrix("2 2\n1 2 3\n").is_err());
        assert!(parse_raw_matrix("1 1\n1 2\n").is_err());
        assert!(parse_raw_matrix("1 1\nNaN\n").is_err());
    }

    proptest! {
        #[test]
        fn raw_round_trip(rows in 1usize..5, cols in 1usize..5, seed in proptest::collection::vec(-1e6f64..1e6, 16)) {
            let m: Vec<Vec<f64>> = (0..rows).map(|i| (0..cols).map(|j| seed[i * 4 + j]).collect()).collect();
            prop_assert_eq!(parse_raw_matrix(&emit_raw_matrix(&m)).unwrap(), m);
        }
    }
}
