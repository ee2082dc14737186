//! Monolayer graphene near a K point: `H(psi) = k psi e3`.

use super::{coords3, embed, k_vector, residual, rotor_equation, EigenSolution, ModelParams};
use crate::algebra::{Multivector, Signature};
use crate::error::{Error, Result};
use crate::spinor::{Spinor, SpinorAlgebra};

/// Below this `|k|` the Dirac point makes the rotor undefined.
pub const DIRAC_TOL: f64 = 1e-10;

pub fn h_monolayer(psi: &Spinor, k: [f64; 2]) -> Result<Spinor> {
    if psi.algebra() != SpinorAlgebra::Cl30 {
        return Err(Error::WrongSignature {
            expected: Signature::CL30,
            found: psi.algebra().signature(),
        });
    }
    let sig = Signature::CL30;
    let e3 = Multivector::basis(sig, &[3]);
    Spinor::new(k_vector(sig, k).sandwich(psi.value(), &e3))
}

/// `E = +-|k|` with `psi = (1 +- k^ e3)/sqrt(2)`.
pub fn solve_monolayer(k: [f64; 2]) -> Result<Vec<EigenSolution>> {
    let norm = k[0].hypot(k[1]);
    if norm <= DIRAC_TOL {
        return Err(Error::Degenerate {
            reason: "degenerate Dirac point: rotor undefined".into(),
            energies: vec![-norm, norm],
        });
    }
    let params = ModelParams::Monolayer { kx: k[0], ky: k[1] };
    let bands = rotor_equation([k[0], k[1], 0.0], 0.0)?.expect("|k| checked above");
    bands
        .into_iter()
        .map(|b| {
            let psi = Spinor::new(embed(b.rotor.as_multivector(), Signature::CL30))?;
            let e3 = Multivector::basis(Signature::CL30, &[3]);
            let average = coords3(&psi.value().sandwich(&e3, &psi.value().reverse()));
            Ok(EigenSolution {
                energy: b.energy,
                band: super::Band::of(b.energy),
                residual: residual(&params, &psi, b.energy)?,
                spinor: Some(psi),
                target: Some(b.target),
                average: Some(average),
                degenerate: false,
            })
        })
        .collect()
}
