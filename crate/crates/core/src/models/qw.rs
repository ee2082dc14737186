//! Quantum well with Rashba coupling: `H(psi) = (k^2/2) psi + alpha e12 k psi e3`.

use super::{coords3, embed, k_vector, residual, rotor_equation, Band, EigenSolution, ModelParams};
use crate::algebra::{Multivector, Signature};
use crate::error::{Error, Result};
use crate::spinor::{Spinor, SpinorAlgebra};

pub const K_TOL: f64 = 1e-10;
pub const ALPHA_TOL: f64 = 1e-12;

pub fn h_qw(psi: &Spinor, k: [f64; 2], alpha: f64) -> Result<Spinor> {
    if psi.algebra() != SpinorAlgebra::Cl30 {
        return Err(Error::WrongSignature {
            expected: Signature::CL30,
            found: psi.algebra().signature(),
        });
    }
    let sig = Signature::CL30;
    let kv = k_vector(sig, k);
    let e3 = Multivector::basis(sig, &[3]);
    let a = Multivector::basis(sig, &[1, 2]).geometric(&kv) * alpha;
    let k2 = k[0] * k[0] + k[1] * k[1];
    Spinor::new(psi.value() * (k2 / 2.0) + a.sandwich(psi.value(), &e3))
}

/// `E = k^2/2 +- alpha k`; target `+-(ky e1 - kx e2)/k` for `alpha > 0`.
pub fn solve_qw(k: [f64; 2], alpha: f64) -> Result<Vec<EigenSolution>> {
    let norm = k[0].hypot(k[1]);
    let offset = norm * norm / 2.0;
    if norm <= K_TOL || alpha.abs() <= ALPHA_TOL {
        let split = (alpha * norm).abs();
        return Err(Error::Degenerate {
            reason: "spin-degenerate: rotor undetermined".into(),
            energies: vec![offset - split, offset + split],
        });
    }
    let params = ModelParams::Qw {
        kx: k[0],
        ky: k[1],
        alpha,
    };
    // alpha e12 k = alpha (ky e1 - kx e2)
    let a = [alpha * k[1], -alpha * k[0], 0.0];
    let bands = rotor_equation(a, offset)?.expect("alpha k checked above");
    bands
        .into_iter()
        .map(|b| {
            let psi = Spinor::new(embed(b.rotor.as_multivector(), Signature::CL30))?;
            let e3 = Multivector::basis(Signature::CL30, &[3]);
            let average = coords3(&psi.value().sandwich(&e3, &psi.value().reverse()));
            Ok(EigenSolution {
                energy: b.energy,
                band: Band::of(b.energy),
                residual: residual(&params, &psi, b.energy)?,
                spinor: Some(psi),
                target: Some(b.target),
                average: Some(average),
                degenerate: false,
            })
        })
        .collect()
}
