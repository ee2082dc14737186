//! Small dense eigensolvers: cyclic Jacobi for real symmetric matrices and
//! hermitian matrices through their real symmetric embedding.

use crate::error::{Error, Result};
use crate::spinor::ComplexMatrix;

pub const MAX_SWEEPS: usize = 64;

/// Eigen-decomposition of a real symmetric matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct SymmetricEigen {
    /// Ascending.
    pub values: Vec<f64>,
    /// `vectors[i]` belongs to `values[i]`; unit length.
    pub vectors: Vec<Vec<f64>>,
}

fn frobenius(a: &[Vec<f64>]) -> f64 {
    a.iter().flatten().map(|x| x * x).sum::<f64>().sqrt()
}

fn off_diagonal(a: &[Vec<f64>]) -> f64 {
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

/// Largest `|a_ij - a_ji|`.
pub fn asymmetry(a: &[Vec<f64>]) -> f64 {
    let mut worst: f64 = 0.0;
    for (i, row) in a.iter().enumerate() {
        for (j, x) in row.iter().enumerate() {
            worst = worst.max((x - a[j][i]).abs());
        }
    }
    worst
}

/// Cyclic Jacobi rotations until the off-diagonal mass is negligible.
#[allow(clippy::needless_range_loop)]
pub fn jacobi(a: &[Vec<f64>]) -> Result<SymmetricEigen> {
    let n = a.len();
    if a.iter().any(|r| r.len() != n) {
        return Err(Error::BadLength {
            expected: n,
            found: a.first().map_or(0, Vec::len),
        });
    }
    let scale = frobenius(a);
    let asym = asymmetry(a);
    if asym > 1e-12 * scale.max(1.0) {
        return Err(Error::NotSymmetric(asym));
    }
    let mut m = a.to_vec();
    let mut v: Vec<Vec<f64>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { 1.0 } else { 0.0 }).collect())
        .collect();
    let target = 1e-15 * scale;
    let mut converged = off_diagonal(&m) <= target;
    let mut sweep = 0;
    while !converged {
        if sweep == MAX_SWEEPS {
            return Err(Error::NoConvergence(MAX_SWEEPS));
        }
        sweep += 1;
        for p in 0..n {
            for q in p + 1..n {
                let apq = m[p][q];
                if apq == 0.0 {
                    continue;
                }
                let theta = (m[q][q] - m[p][p]) / (2.0 * apq);
                let t = theta.signum() / (theta.abs() + theta.hypot(1.0));
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let (mkp, mkq) = (m[k][p], m[k][q]);
                    m[k][p] = c * mkp - s * mkq;
                    m[k][q] = s * mkp + c * mkq;
                }
                for k in 0..n {
                    let (mpk, mqk) = (m[p][k], m[q][k]);
                    m[p][k] = c * mpk - s * mqk;
                    m[q][k] = s * mpk + c * mqk;
                }
                m[p][q] = 0.0;
                m[q][p] = 0.0;
                for row in v.iter_mut() {
                    let (vp, vq) = (row[p], row[q]);
                    row[p] = c * vp - s * vq;
                    row[q] = s * vp + c * vq;
                }
            }
        }
        converged = off_diagonal(&m) <= target;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| m[i][i].total_cmp(&m[j][j]));
    Ok(SymmetricEigen {
        values: order.iter().map(|&i| m[i][i]).collect(),
        vectors: order
            .iter()
            .map(|&i| v.iter().map(|row| row[i]).collect())
            .collect(),
    })
}

/// Eigenvalues of a real symmetric matrix, ascending.
pub fn eig_symmetric(a: &[Vec<f64>]) -> Result<Vec<f64>> {
    Ok(jacobi(a)?.values)
}

/// Collapses a sorted list in which every value appears twice.
pub fn halve_pairs(values: &[f64], tol: f64) -> Result<Vec<f64>> {
    if !values.len().is_multiple_of(2) {
        return Err(Error::BadLength {
            expected: values.len() + 1,
            found: values.len(),
        });
    }
    values
        .chunks(2)
        .map(|pair| {
            let gap = (pair[0] - pair[1]).abs();
            if gap > tol * pair[0].abs().max(1.0) {
                Err(Error::Validation(format!(
                    "eigenvalues {} and {} should form a pair",
                    pair[0], pair[1]
                )))
            } else {
                Ok(0.5 * (pair[0] + pair[1]))
            }
        })
        .collect()
}

/// Closed form for 2x2 hermitian matrices.
pub fn eig_hermitian_2x2(m: &ComplexMatrix) -> Result<[f64; 2]> {
    if m.rows() != 2 || !m.is_hermitian(1e-14) {
        return Err(Error::NotSymmetric(m.max_diff(&m.adjoint())));
    }
    let (a, d, b) = (m.get(0, 0).re, m.get(1, 1).re, m.get(0, 1));
    let mean = 0.5 * (a + d);
    let r = (0.5 * (a - d)).hypot(b.abs());
    Ok([mean - r, mean + r])
}

/// Eigenvalues of a hermitian matrix via Jacobi on `[[A, -B], [B, A]]`.
pub fn eig_hermitian(m: &ComplexMatrix) -> Result<Vec<f64>> {
    if !m.is_hermitian(1e-12) {
        return Err(Error::NotSymmetric(m.max_diff(&m.adjoint())));
    }
    let doubled = eig_symmetric(&m.realify())?;
    halve_pairs(&doubled, 1e-10)
}
