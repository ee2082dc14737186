//! Two coupled two-level atoms:
//! `H(psi) = (w/2) e34 psi e34 - G e2 psi e3 + (w/2) e3 psi e3`.
//!
//! The inversion-even part `{1, e23, e31, e12}` obeys
//! `(w e3 - G e2) psi e3 = E psi`, giving `E = +-sqrt(w^2 + G^2)`.
//! The odd part is carried by `X = e34 psi` (so `psi = e34 X`), which obeys
//! `-G e2 X e3 = E X` and gives `E = +-G`.

use super::{embed, residual, rotor_equation, Band, EigenSolution, ModelParams};
use crate::algebra::{spatial_inversion, Multivector, Signature};
use crate::error::{Error, Result};
use crate::spinor::{Spinor, SpinorAlgebra};

/// Couplings at or below this are treated as zero.
pub const COUPLING_TOL: f64 = 1e-12;

pub fn h_two_atoms(psi: &Spinor, omega: f64, gamma: f64) -> Result<Spinor> {
    if psi.algebra() != SpinorAlgebra::Cl31 {
        return Err(Error::WrongSignature {
            expected: Signature::CL31,
            found: psi.algebra().signature(),
        });
    }
    let sig = Signature::CL31;
    let p = psi.value();
    let e2 = Multivector::basis(sig, &[2]);
    let e3 = Multivector::basis(sig, &[3]);
    let e34 = Multivector::basis(sig, &[3, 4]);
    let first = e34.sandwich(p, &e34);
    debug_assert!(first.approx_eq(&e3.sandwich(&spatial_inversion(p)?, &e3), 1e-12));
    let out =
        first * (omega / 2.0) - e2.sandwich(p, &e3) * gamma + e3.sandwich(p, &e3) * (omega / 2.0);
    Spinor::new(out)
}

/// Four levels: `+-G` (odd sector) and `+-sqrt(w^2 + G^2)` (even sector).
pub fn solve_two_atoms(omega: f64, gamma: f64) -> Result<Vec<EigenSolution>> {
    let params = ModelParams::Atoms { omega, gamma };
    let even_norm = omega.hypot(gamma);
    if even_norm <= COUPLING_TOL {
        return Err(Error::Degenerate {
            reason: "omega = gamma = 0: all four levels coincide".into(),
            energies: vec![-even_norm, -gamma.abs(), gamma.abs(), even_norm],
        });
    }
    let sig = Signature::CL31;
    let mut sols = Vec::with_capacity(4);

    let even = rotor_equation([0.0, -gamma, omega], 0.0)?.expect("checked above");
    for b in even {
        let psi = Spinor::new(embed(b.rotor.as_multivector(), sig))?;
        sols.push(EigenSolution {
            energy: b.energy,
            band: Band::of(b.energy),
            residual: residual(&params, &psi, b.energy)?,
            spinor: Some(psi),
            target: Some(b.target),
            average: None,
            degenerate: false,
        });
    }

    if gamma.abs() <= COUPLING_TOL {
        sols.push(EigenSolution::flagged(-gamma.abs()));
        sols.push(EigenSolution::flagged(gamma.abs()));
    } else {
        let e34 = Multivector::basis(sig, &[3, 4]);
        let odd = rotor_equation([0.0, -gamma, 0.0], 0.0)?.expect("checked above");
        for b in odd {
            let carrier = embed(b.rotor.as_multivector(), sig);
            let psi = Spinor::new(e34.geometric(&carrier))?;
            sols.push(EigenSolution {
                energy: b.energy,
                band: Band::of(b.energy),
                residual: residual(&params, &psi, b.energy)?,
                spinor: Some(psi),
                target: Some(b.target),
                average: None,
                degenerate: false,
            });
        }
    }
    Ok(super::sort_solutions(sols))
}
