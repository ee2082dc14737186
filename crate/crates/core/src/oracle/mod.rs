//! Matrix-side verification of the rotor method.
//!
//! Hilbert-space matrices are built directly from their textbook form and
//! diagonalized with the hand-rolled solvers in [`eigen`]; GA Hamiltonians are
//! linearized column by column into a [`RealOperator`]. Nothing here calls
//! the rotor solvers except [`cross_check`], which compares against them.

pub mod eigen;

use serde::{Deserialize, Serialize};

pub use eigen::{
    eig_hermitian, eig_hermitian_2x2, eig_symmetric, halve_pairs, jacobi, SymmetricEigen,
};

use crate::algebra::Multivector;
use crate::error::{Error, Result};
use crate::models::ModelParams;
use crate::spinor::{
    pauli_matrix, spinor_to_column, Complex, ComplexMatrix, Spinor, SpinorAlgebra,
};

/// Default agreement tolerance between rotor and oracle energies.
pub const MATCH_TOL: f64 = 1e-10;
/// Largest acceptable eigen-residual of a rotor solution.
pub const RESIDUAL_TOL: f64 = 1e-10;

/// `[[0, kx - i ky], [kx + i ky, 0]]`.
pub fn matrix_monolayer(k: [f64; 2]) -> ComplexMatrix {
    let z = Complex::ZERO;
    ComplexMatrix::from_rows(vec![
        vec![z, Complex::new(k[0], -k[1])],
        vec![Complex::new(k[0], k[1]), z],
    ])
    .expect("2x2")
}

/// `(k^2/2) 1 + alpha (ky sigma_x - kx sigma_y)`.
pub fn matrix_qw(k: [f64; 2], alpha: f64) -> ComplexMatrix {
    let k2 = k[0] * k[0] + k[1] * k[1];
    let sx = pauli_matrix(1).expect("valid index");
    let sy = pauli_matrix(2).expect("valid index");
    let rashba = sx
        .scale(Complex::real(alpha * k[1]))
        .add(&sy.scale(Complex::real(-alpha * k[0])))
        .expect("same shape");
    ComplexMatrix::identity(2)
        .scale(Complex::real(k2 / 2.0))
        .add(&rashba)
        .expect("same shape")
}

/// `(w/2)(sigma_z (x) 1 + 1 (x) sigma_z) + G sigma_x (x) sigma_x`.
pub fn matrix_two_atoms(omega: f64, gamma: f64) -> ComplexMatrix {
    let sx = pauli_matrix(1).expect("valid index");
    let sz = pauli_matrix(3).expect("valid index");
    let id = ComplexMatrix::identity(2);
    let zeeman = sz.kron(&id).add(&id.kron(&sz)).expect("same shape");
    zeeman
        .scale(Complex::real(omega / 2.0))
        .add(&sx.kron(&sx).scale(Complex::real(gamma)))
        .expect("same shape")
}

/// Hilbert-space matrix of a model, where one exists in closed form.
pub fn hilbert_matrix(model: &ModelParams) -> Option<ComplexMatrix> {
    match *model {
        ModelParams::Monolayer { kx, ky } => Some(matrix_monolayer([kx, ky])),
        ModelParams::Qw { kx, ky, alpha } => Some(matrix_qw([kx, ky], alpha)),
        ModelParams::Atoms { omega, gamma } => Some(matrix_two_atoms(omega, gamma)),
        ModelParams::Bilayer { .. } => None,
    }
}

/// Real matrix of a real-linear map on spinor coefficients.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RealOperator {
    pub algebra: SpinorAlgebra,
    pub rows: Vec<Vec<f64>>,
}

impl RealOperator {
    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn apply(&self, x: &[f64]) -> Vec<f64> {
        self.rows
            .iter()
            .map(|r| r.iter().zip(x).map(|(a, b)| a * b).sum())
            .collect()
    }

    pub fn eigenvalues(&self) -> Result<Vec<f64>> {
        eig_symmetric(&self.rows)
    }
}

/// Column `j` holds the coefficients of `h(basis_j)`. Fails if `h` leaves the
/// spinor subspace by more than `1e-12`.
pub fn ga_operator_matrix<F>(h: F, algebra: SpinorAlgebra) -> Result<RealOperator>
where
    F: Fn(&Spinor) -> Result<Multivector>,
{
    let n = algebra.dim();
    let mut rows = vec![vec![0.0; n]; n];
    for j in 0..n {
        let mut unit = vec![0.0; n];
        unit[j] = 1.0;
        let out = h(&Spinor::from_coeffs(algebra, &unit)?)?;
        let image = Spinor::project(out, 1e-12)?.coeffs();
        for (row, v) in rows.iter_mut().zip(image) {
            row[j] = v;
        }
    }
    Ok(RealOperator { algebra, rows })
}

/// Real operator of a model Hamiltonian.
pub fn model_operator(model: &ModelParams) -> Result<RealOperator> {
    let m = *model;
    ga_operator_matrix(
        move |psi| m.apply(psi).map(Spinor::into_value),
        model.algebra(),
    )
}

/// Oracle energies, ascending: Hilbert matrix when available, otherwise the
/// real operator with its doubled eigenvalues collapsed.
pub fn oracle_energies(model: &ModelParams) -> Result<Vec<f64>> {
    match hilbert_matrix(model) {
        Some(m) if m.rows() == 2 => Ok(eig_hermitian_2x2(&m)?.to_vec()),
        Some(m) => eig_hermitian(&m),
        None => halve_pairs(&model_operator(model)?.eigenvalues()?, MATCH_TOL),
    }
}

/// `|a - b|` for `|b| <= 1`, `|a - b|/|b|` otherwise.
pub fn scaled_delta(a: f64, b: f64) -> f64 {
    (a - b).abs() / b.abs().max(1.0)
}

/// Rotor method against oracle for one parameter point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CrossCheck {
    pub model: String,
    pub params: ModelParams,
    pub rotor_energies: Vec<f64>,
    pub oracle_energies: Vec<f64>,
    /// Largest [`scaled_delta`] over sorted pairs.
    pub max_delta: f64,
    pub pass: bool,
    /// `|H(psi) - E psi|` per solution; `None` where flagged degenerate.
    pub residuals: Vec<Option<f64>>,
    /// Each spinor, mapped to a column, is an eigenvector of the matrix side.
    pub mapping_ok: bool,
}

/// Cross-check with the default tolerance.
pub fn cross_check(model: &ModelParams) -> Result<CrossCheck> {
    cross_check_with_tol(model, MATCH_TOL)
}

pub fn cross_check_with_tol(model: &ModelParams, tol: f64) -> Result<CrossCheck> {
    model.validate()?;
    let solutions = match model.solve() {
        Ok(s) => s,
        Err(Error::Degenerate { energies, .. }) => energies
            .into_iter()
            .map(crate::models::EigenSolution::flagged)
            .collect(),
        Err(e) => return Err(e),
    };
    let rotor_energies: Vec<f64> = solutions.iter().map(|s| s.energy).collect();
    let oracle_energies = oracle_energies(model)?;
    if rotor_energies.len() != oracle_energies.len() {
        return Err(Error::BadLength {
            expected: oracle_energies.len(),
            found: rotor_energies.len(),
        });
    }
    let max_delta = rotor_energies
        .iter()
        .zip(&oracle_energies)
        .map(|(a, b)| scaled_delta(*a, *b))
        .fold(0.0, f64::max);

    let residuals: Vec<Option<f64>> = solutions
        .iter()
        .map(|s| s.spinor.as_ref().map(|_| s.residual))
        .collect();
    let mut mapping_ok = true;
    let hilbert = hilbert_matrix(model);
    let operator = if hilbert.is_none() {
        Some(model_operator(model)?)
    } else {
        None
    };
    for s in &solutions {
        let Some(psi) = &s.spinor else { continue };
        let err = match (&hilbert, &operator) {
            (Some(m), _) => {
                let col = spinor_to_column(psi)?;
                m.apply(&col)?.max_diff(&col.scale(Complex::real(s.energy)))
            }
            (None, Some(op)) => {
                let c = psi.coeffs();
                op.apply(&c)
                    .iter()
                    .zip(&c)
                    .map(|(a, b)| (a - s.energy * b).abs())
                    .fold(0.0, f64::max)
            }
            (None, None) => unreachable!("operator built when no Hilbert matrix exists"),
        };
        mapping_ok &= err <= RESIDUAL_TOL;
    }

    let residuals_ok = residuals.iter().flatten().all(|r| *r <= RESIDUAL_TOL);
    let pass = max_delta <= tol && residuals_ok && mapping_ok;
    Ok(CrossCheck {
        model: model.name().to_string(),
        params: *model,
        rotor_energies,
        oracle_energies,
        max_delta,
        pass,
        residuals,
        mapping_ok,
    })
}
