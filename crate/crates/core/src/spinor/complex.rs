//! Minimal complex arithmetic as explicit (re, im) pairs.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Complex {
    pub re: f64,
    pub im: f64,
}

impl Complex {
    pub const ZERO: Complex = Complex { re: 0.0, im: 0.0 };
    pub const ONE: Complex = Complex { re: 1.0, im: 0.0 };
    pub const I: Complex = Complex { re: 0.0, im: 1.0 };

    pub const fn new(re: f64, im: f64) -> Self {
        Complex { re, im }
    }

    pub const fn real(re: f64) -> Self {
        Complex { re, im: 0.0 }
    }

    pub fn conj(self) -> Self {
        Complex::new(self.re, -self.im)
    }

    pub fn norm_sqr(self) -> f64 {
        self.re * self.re + self.im * self.im
    }

    pub fn abs(self) -> f64 {
        self.re.hypot(self.im)
    }

    pub fn scale(self, s: f64) -> Self {
        Complex::new(self.re * s, self.im * s)
    }
}

impl fmt::Display for Complex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im < 0.0 {
            write!(f, "{}-{}i", self.re, -self.im)
        } else {
            write!(f, "{}+{}i", self.re, self.im)
        }
    }
}

impl Add for Complex {
    type Output = Complex;
    fn add(self, o: Complex) -> Complex {
        Complex::new(self.re + o.re, self.im + o.im)
    }
}

impl AddAssign for Complex {
    fn add_assign(&mut self, o: Complex) {
        self.re += o.re;
        self.im += o.im;
    }
}

impl Sub for Complex {
    type Output = Complex;
    fn sub(self, o: Complex) -> Complex {
        Complex::new(self.re - o.re, self.im - o.im)
    }
}

impl Mul for Complex {
    type Output = Complex;
    fn mul(self, o: Complex) -> Complex {
        Complex::new(
            self.re * o.re - self.im * o.im,
            self.re * o.im + self.im * o.re,
        )
    }
}

impl Neg for Complex {
    type Output = Complex;
    fn neg(self) -> Complex {
        Complex::new(-self.re, -self.im)
    }
}

/// Column spinor of length 2 or 4.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "Vec<Complex>", into = "Vec<Complex>")]
pub struct ComplexColumn(Vec<Complex>);

impl ComplexColumn {
    pub fn new(entries: Vec<Complex>) -> Result<Self> {
        match entries.len() {
            2 | 4 => Ok(ComplexColumn(entries)),
            n => Err(Error::BadLength {
                expected: 4,
                found: n,
            }),
        }
    }

    /// From `[re0, im0, re1, im1, ...]`.
    pub fn from_pairs(pairs: &[(f64, f64)]) -> Result<Self> {
        Self::new(pairs.iter().map(|&(re, im)| Complex::new(re, im)).collect())
    }

    pub fn entries(&self) -> &[Complex] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `<self|other> = sum conj(self_i) other_i`.
    pub fn inner(&self, other: &ComplexColumn) -> Result<Complex> {
        if self.len() != other.len() {
            return Err(Error::BadLength {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(self
            .0
            .iter()
            .zip(&other.0)
            .fold(Complex::ZERO, |acc, (a, b)| acc + a.conj() * *b))
    }

    pub fn scale(&self, c: Complex) -> ComplexColumn {
        ComplexColumn(self.0.iter().map(|&z| c * z).collect())
    }

    pub fn max_diff(&self, other: &ComplexColumn) -> f64 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (*a - *b).abs())
            .fold(0.0, f64::max)
    }
}

impl TryFrom<Vec<Complex>> for ComplexColumn {
    type Error = Error;
    fn try_from(v: Vec<Complex>) -> Result<Self> {
        ComplexColumn::new(v)
    }
}

impl From<ComplexColumn> for Vec<Complex> {
    fn from(c: ComplexColumn) -> Self {
        c.0
    }
}

/// Dense row-major complex matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct ComplexMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Complex>,
}

impl ComplexMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        ComplexMatrix {
            rows,
            cols,
            data: vec![Complex::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Complex::ONE);
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Complex>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::BadLength {
                expected: cols,
                found: bad.len(),
            });
        }
        Ok(ComplexMatrix {
            rows: rows.len(),
            cols,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Real matrix from rows.
    pub fn from_real(rows: &[&[f64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Complex::real(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> Complex {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, z: Complex) {
        self.data[r * self.cols + c] = z;
    }

    pub fn scale(&self, z: Complex) -> ComplexMatrix {
        ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|&x| z * x).collect(),
        }
    }

    pub fn add(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::BadLength {
                expected: self.data.len(),
                found: other.data.len(),
            });
        }
        Ok(ComplexMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| *a + *b)
                .collect(),
        })
    }

    pub fn mul(&self, other: &ComplexMatrix) -> Result<ComplexMatrix> {
        if self.cols != other.rows {
            return Err(Error::BadLength {
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = ComplexMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = Complex::ZERO;
                for k in 0..self.cols {
                    acc += self.get(i, k) * other.get(k, j);
                }
                out.set(i, j, acc);
            }
        }
        Ok(out)
    }

    pub fn apply(&self, v: &ComplexColumn) -> Result<ComplexColumn> {
        if self.cols != v.len() {
            return Err(Error::BadLength {
                expected: self.cols,
                found: v.len(),
            });
        }
        let out = (0..self.rows)
            .map(|i| {
                (0..self.cols).fold(Complex::ZERO, |acc, k| {
                    acc + self.get(i, k) * v.entries()[k]
                })
            })
            .collect();
        ComplexColumn::new(out)
    }

    /// Kronecker product `self (x) other`.
    pub fn kron(&self, other: &ComplexMatrix) -> ComplexMatrix {
        let mut out = ComplexMatrix::zeros(self.rows * other.rows, self.cols * other.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        out.set(i * other.rows + k, j * other.cols + l, a * other.get(k, l));
                    }
                }
            }
        }
        out
    }

    pub fn adjoint(&self) -> ComplexMatrix {
        let mut out = ComplexMatrix::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                out.set(j, i, self.get(i, j).conj());
            }
        }
        out
    }

    pub fn max_diff(&self, other: &ComplexMatrix) -> f64 {
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (*a - *b).abs())
            .fold(0.0, f64::max)
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.rows == self.cols && self.max_diff(&self.adjoint()) <= tol
    }

    /// Real symmetric embedding `[[A, -B], [B, A]]` of `A + iB`.
    pub fn realify(&self) -> Vec<Vec<f64>> {
        let (r, c) = (self.rows, self.cols);
        let mut out = vec![vec![0.0; 2 * c]; 2 * r];
        for i in 0..r {
            for j in 0..c {
                let z = self.get(i, j);
                out[i][j] = z.re;
                out[i][j + c] = -z.im;
                out[i + r][j] = z.im;
                out[i + r][j + c] = z.re;
            }
        }
        out
    }
}
