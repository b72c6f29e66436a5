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

use std::ops::{Add, Mul, Sub};

use num_traits::{ToPrimitive, Zero};

use super::{LinalgError, Rational};

/// Dense row-major matrix of exact rationals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self::from_fn(n, n, |i, j| {
            if i == j {
                Rational::from_integer(1.into())
            } else {
                Rational::zero()
            }
        })
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rational) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        RationalMatrix { rows, cols, data }
    }

    /// Builds from nested rows; all rows must have equal length.
    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Result<Self, LinalgError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(LinalgError::Dimension("ragged rows".into()));
        }
        Ok(RationalMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let c = rows.first().map_or(0, |r| r.len());
        assert!(rows.iter().all(|r| r.len() == c), "ragged rows");
        Self::from_fn(rows.len(), c, |i, j| {
            Rational::from_integer(rows[i][j].into())
        })
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Rational {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Rational) {
        self.data[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Rational] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Rational> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i))
            .fold(Rational::zero(), |acc, x| acc + x)
    }

    pub fn scale(&self, s: &Rational) -> Self {
        RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    /// `self - s * I`.
    pub fn shift(&self, s: &Rational) -> Self {
        let mut out = self.clone();
        for i in 0..self.rows.min(self.cols) {
            out.data[i * self.cols + i] -= s;
        }
        out
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, LinalgError> {
        self.same_shape(other)?;
        Ok(RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, LinalgError> {
        self.same_shape(other)?;
        Ok(RationalMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::Dimension(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for (l, a) in self.row(i).iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for (j, b) in other.row(l).iter().enumerate() {
                    if !b.is_zero() {
                        out.data[i * other.cols + j] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Rational]) -> Result<Vec<Rational>, LinalgError> {
        if v.len() != self.cols {
            return Err(LinalgError::Dimension(format!(
                "{}x{} times vector of length {}",
                self.rows,
                self.cols,
                v.len()
            )));
        }
        Ok((0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .fold(Rational::zero(), |acc, (a, b)| acc + a * b)
            })
            .collect())
    }

    fn same_shape(&self, other: &Self) -> Result<(), LinalgError> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(LinalgError::Dimension(format!(
                "{}x{} vs {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        Ok(())
    }

    /// Nearest-float copy as nested rows.
    pub fn to_f64(&self) -> Vec<Vec<f64>> {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|x| x.to_f64().unwrap_or(f64::NAN))
                    .collect()
            })
            .collect()
    }

    /// Zero/nonzero mask.
    pub fn support(&self) -> Vec<Vec<bool>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|x| !x.is_zero()).collect())
            .collect()
    }
}

impl Add for &RationalMatrix {
    type Output = RationalMatrix;
    fn add(self, rhs: Self) -> RationalMatrix {
        self.checked_add(rhs).expect("matrix add shape mismatch")
    }
}

impl Sub for &RationalMatrix {
    type Output = RationalMatrix;
    fn sub(self, rhs: Self) -> RationalMatrix {
        self.checked_sub(rhs).expect("matrix sub shape mismatch")
    }
}

impl Mul for &RationalMatrix {
    type Output = RationalMatrix;
    fn mul(self, rhs: Self) -> RationalMatrix {
        self.checked_mul(rhs).expect("matrix mul shape mismatch")
    }
}

/// Kronecker product: an `(m p) x (n q)` matrix whose `(i, j)` block is
/// `a[i][j] * b`.
pub fn kron(a: &RationalMatrix, b: &RationalMatrix) -> RationalMatrix {
    let (p, q) = (b.rows, b.cols);
    RationalMatrix::from_fn(a.rows * p, a.cols * q, |r, c| {
        let x = a.get(r / p, c / q);
        if x.is_zero() {
            Rational::zero()
        } else {
            x * b.get(r % p, c % q)
        }
    })
}

/// Outcome of testing `(M - λ1 I)(M - λ2 I) = 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Annihilation {
    pub annihilates: bool,
    /// `M - λ1 I != 0`, so `λ2` is an eigenvalue when annihilation holds.
    pub first_shift_nonzero: bool,
    /// `M - λ2 I != 0`, so `λ1` is an eigenvalue when annihilation holds.
    pub second_shift_nonzero: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpectrumVerdict {
    /// Spectrum is exactly `{λ1, λ2}`.
    TwoEigenvalues,
    /// Spectrum is a single one of the two values.
    OneEigenvalue,
    /// Some eigenvalue lies outside `{λ1, λ2}`.
    NotAnnihilated,
}

impl Annihilation {
    /// Both values attained (meaningful only together with `annihilates`).
    pub fn both_attained(&self) -> bool {
        self.first_shift_nonzero && self.second_shift_nonzero
    }

    pub fn verdict(&self) -> SpectrumVerdict {
        if !self.annihilates {
            SpectrumVerdict::NotAnnihilated
        } else if self.both_attained() {
            SpectrumVerdict::TwoEigenvalues
        } else {
            SpectrumVerdict::OneEigenvalue
        }
    }
}

/// Exact certificate that a symmetric matrix has spectrum inside
/// `{λ1, λ2}`, plus which of the two values are attained. Symmetric matrices
/// are diagonalizable, so the minimal polynomial divides
/// `(x - λ1)(x - λ2)` exactly when the product vanishes.
pub fn annihilates(
    m: &RationalMatrix,
    lambda1: &Rational,
    lambda2: &Rational,
) -> Result<Annihilation, LinalgError> {
    if !m.is_symmetric() {
        return Err(LinalgError::NotSymmetric);
    }
    if lambda1 == lambda2 {
        return Err(LinalgError::EqualEigenvalues);
    }
    let a = m.shift(lambda1);
    let b = m.shift(lambda2);
    Ok(Annihilation {
        annihilates: (&a * &b).is_zero(),
        first_shift_nonzero: !a.is_zero(),
        second_shift_nonzero: !b.is_zero(),
    })
}

/// Whether `Π (M - λ I)` over the given values is the zero matrix.
pub fn annihilated_by(m: &RationalMatrix, lambdas: &[Rational]) -> Result<bool, LinalgError> {
    if !m.is_square() {
        return Err(LinalgError::Dimension(
            "annihilation needs a square matrix".into(),
        ));
    }
    let mut acc = RationalMatrix::identity(m.rows());
    for l in lambdas {
        acc = acc.checked_mul(&m.shift(l))?;
    }
    Ok(acc.is_zero())
}
