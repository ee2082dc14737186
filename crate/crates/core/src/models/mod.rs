//! GA Hamiltonians and rotor-equation eigensolvers.
//!
//! Monolayer graphene, the Rashba quantum well and both sectors of the
//! two-atom model reduce to `H(psi) = c psi + A psi e3` with `A` a vector.
//! For a rotor `psi` this gives `psi e3 reverse(psi) = (E - c) A / A^2`, and
//! the target must be a unit vector, so `E = c +- |A|`.

mod atoms;
mod bilayer;
mod monolayer;
mod qw;

use serde::{Deserialize, Serialize};

pub use atoms::{h_two_atoms, solve_two_atoms};
pub use bilayer::{
    bilayer_operator, bilayer_quantization_residual, bilayer_spectrum, h_bilayer, solve_bilayer,
};
pub use monolayer::{h_monolayer, solve_monolayer};
pub use qw::{h_qw, solve_qw};

use crate::algebra::{dagger, Multivector, Signature};
use crate::error::{Error, Result};
use crate::rotor::{compose, rotor_exp, rotor_from_vectors, Rotor};
use crate::spinor::{Spinor, SpinorAlgebra};

/// Model tag plus parameters, in natural units.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "lowercase")]
pub enum ModelParams {
    Monolayer {
        kx: f64,
        ky: f64,
    },
    Qw {
        kx: f64,
        ky: f64,
        alpha: f64,
    },
    Atoms {
        omega: f64,
        gamma: f64,
    },
    Bilayer {
        kx: f64,
        ky: f64,
        u: f64,
        gamma1: f64,
        eta: f64,
    },
}

impl ModelParams {
    pub fn name(&self) -> &'static str {
        match self {
            ModelParams::Monolayer { .. } => "monolayer",
            ModelParams::Qw { .. } => "qw",
            ModelParams::Atoms { .. } => "atoms",
            ModelParams::Bilayer { .. } => "bilayer",
        }
    }

    pub fn algebra(&self) -> SpinorAlgebra {
        match self {
            ModelParams::Monolayer { .. } | ModelParams::Qw { .. } => SpinorAlgebra::Cl30,
            ModelParams::Atoms { .. } | ModelParams::Bilayer { .. } => SpinorAlgebra::Cl31,
        }
    }

    /// Number of energy levels.
    pub fn levels(&self) -> usize {
        match self.algebra() {
            SpinorAlgebra::Cl30 => 2,
            SpinorAlgebra::Cl31 => 4,
        }
    }

    pub fn validate(&self) -> Result<()> {
        let values: &[f64] = match self {
            ModelParams::Monolayer { kx, ky } => &[*kx, *ky],
            ModelParams::Qw { kx, ky, alpha } => &[*kx, *ky, *alpha],
            ModelParams::Atoms { omega, gamma } => &[*omega, *gamma],
            ModelParams::Bilayer {
                kx,
                ky,
                u,
                gamma1,
                eta,
            } => {
                if *eta != 1.0 && *eta != -1.0 {
                    return Err(Error::InvalidParams(format!(
                        "eta must be +1 or -1, got {eta}"
                    )));
                }
                &[*kx, *ky, *u, *gamma1]
            }
        };
        if values.iter().all(|v| v.is_finite()) {
            Ok(())
        } else {
            Err(Error::InvalidParams(format!(
                "non-finite parameter in {self:?}"
            )))
        }
    }

    /// `H(psi)`.
    pub fn apply(&self, psi: &Spinor) -> Result<Spinor> {
        match *self {
            ModelParams::Monolayer { kx, ky } => h_monolayer(psi, [kx, ky]),
            ModelParams::Qw { kx, ky, alpha } => h_qw(psi, [kx, ky], alpha),
            ModelParams::Atoms { omega, gamma } => h_two_atoms(psi, omega, gamma),
            ModelParams::Bilayer { .. } => h_bilayer(psi, self),
        }
    }

    /// Rotor-method eigensolutions, ascending in energy.
    pub fn solve(&self) -> Result<Vec<EigenSolution>> {
        self.validate()?;
        match *self {
            ModelParams::Monolayer { kx, ky } => solve_monolayer([kx, ky]),
            ModelParams::Qw { kx, ky, alpha } => solve_qw([kx, ky], alpha),
            ModelParams::Atoms { omega, gamma } => solve_two_atoms(omega, gamma),
            ModelParams::Bilayer { .. } => solve_bilayer(self),
        }
    }

    /// Energies only, ascending. Degenerate points still report their levels.
    pub fn energies(&self) -> Result<Vec<f64>> {
        match self.solve() {
            Ok(sols) => Ok(sols.iter().map(|s| s.energy).collect()),
            Err(Error::Degenerate { energies, .. }) => Ok(energies),
            Err(e) => Err(e),
        }
    }
}

/// Conduction/valence by the sign of the energy.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Band {
    Valence,
    Midgap,
    Conduction,
}

impl Band {
    pub fn of(energy: f64) -> Band {
        if energy > ZERO_ENERGY {
            Band::Conduction
        } else if energy < -ZERO_ENERGY {
            Band::Valence
        } else {
            Band::Midgap
        }
    }
}

/// Energies closer than this to zero are labelled midgap.
pub const ZERO_ENERGY: f64 = 1e-12;

/// One eigenvalue with its rotor-form spinor.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EigenSolution {
    pub energy: f64,
    pub band: Band,
    /// `None` at degenerate points where the rotor is undefined.
    pub spinor: Option<Spinor>,
    /// Unit vector `a` with `psi e3 reverse(psi) = a` (on the rotor carrier).
    pub target: Option<[f64; 3]>,
    /// `psi e3 reverse(psi)` for Cl(3,0) models: pseudospin or spin average.
    pub average: Option<[f64; 3]>,
    /// Largest component of `H(psi) - E psi`.
    pub residual: f64,
    pub degenerate: bool,
}

impl EigenSolution {
    pub(crate) fn flagged(energy: f64) -> Self {
        EigenSolution {
            energy,
            band: Band::of(energy),
            spinor: None,
            target: None,
            average: None,
            residual: 0.0,
            degenerate: true,
        }
    }
}

pub(crate) fn sort_solutions(mut sols: Vec<EigenSolution>) -> Vec<EigenSolution> {
    sols.sort_by(|a, b| a.energy.total_cmp(&b.energy));
    sols
}

pub(crate) fn residual(params: &ModelParams, psi: &Spinor, energy: f64) -> Result<f64> {
    let h = params.apply(psi)?;
    Ok((h.value() - psi.value() * energy).max_abs())
}

pub(crate) fn vector3(sig: Signature, v: [f64; 3]) -> Multivector {
    Multivector::vector(sig, &v)
}

pub(crate) fn coords3(m: &Multivector) -> [f64; 3] {
    let c = m.vector_coords();
    [c[0] + 0.0, c[1] + 0.0, c[2] + 0.0]
}

pub(crate) fn k_vector(sig: Signature, k: [f64; 2]) -> Multivector {
    Multivector::vector(sig, &[k[0], k[1]])
}

/// Copies a multivector over `e1, e2, e3` into a larger signature.
pub(crate) fn embed(m: &Multivector, sig: Signature) -> Multivector {
    let mut out = Multivector::zero(sig);
    for (blade, c) in m.terms() {
        out.coeffs_mut()[blade.mask()] = c;
    }
    out
}

/// Rotor in Cl(3,0) taking `e3` onto the unit vector `target`.
///
/// Near `-e3` the plane of `e3 ^ target` is ill-defined, so the rotation
/// goes through `-e3` by a half turn in the e23 plane.
pub(crate) fn rotor_to(target: &Multivector) -> Result<Rotor> {
    let sig = target.signature();
    let e3 = Multivector::basis(sig, &[3]);
    match rotor_from_vectors(&e3, target) {
        Err(Error::Antiparallel) => {
            let flip = rotor_exp(&Multivector::basis(sig, &[2, 3]), std::f64::consts::PI)?;
            let rest = rotor_from_vectors(&-e3, target)?;
            Rotor::new(compose(&rest, &flip), 1e-12)
        }
        other => other,
    }
}

/// Solution of `psi e3 reverse(psi) = (E - offset) A / A^2` for one sign.
pub(crate) struct RotorBand {
    pub energy: f64,
    pub rotor: Rotor,
    pub target: [f64; 3],
}

/// Both bands `E = offset +- |A|`, lower first. `None` when `|A|` vanishes.
pub(crate) fn rotor_equation(a: [f64; 3], offset: f64) -> Result<Option<[RotorBand; 2]>> {
    let norm = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    if norm < f64::MIN_POSITIVE.sqrt() {
        return Ok(None);
    }
    let band = |s: f64| -> Result<RotorBand> {
        let target = a.map(|x| s * x / norm + 0.0);
        let rotor = rotor_to(&vector3(Signature::CL30, target))?;
        Ok(RotorBand {
            energy: offset + s * norm,
            rotor,
            target,
        })
    };
    Ok(Some([band(-1.0)?, band(1.0)?]))
}

/// Grade-1 part of `psi e3 reverse(psi)` for a normalized Cl(3,0) spinor.
pub fn pseudospin_average(psi: &Spinor) -> Result<Multivector> {
    if psi.algebra() != SpinorAlgebra::Cl30 {
        return Err(Error::WrongSignature {
            expected: Signature::CL30,
            found: psi.algebra().signature(),
        });
    }
    let v = psi.value();
    let norm = v.geometric(&v.reverse());
    let one = Multivector::scalar(Signature::CL30, 1.0);
    let dev = norm.max_diff(&one);
    if dev > 1e-10 {
        return Err(Error::NotNormalized(norm.scalar_part()));
    }
    let e3 = Multivector::basis(Signature::CL30, &[3]);
    Ok(v.sandwich(&e3, &v.reverse()).grade_part(1))
}

/// Rayleigh quotient `<psi^+ H(psi)> / <psi^+ psi>`, with `+` the dagger in
/// Cl(3,1) and reversion in Cl(3,0). For a normalized spinor this is
/// `<reverse(psi) H(psi)>` whenever `psi` is inversion-even.
pub fn expectation_energy(psi: &Spinor, model: &ModelParams) -> Result<f64> {
    if psi.algebra() != model.algebra() {
        return Err(Error::SignatureMismatch(
            psi.algebra().signature(),
            model.algebra().signature(),
        ));
    }
    let h = model.apply(psi)?;
    let adj = match psi.algebra() {
        SpinorAlgebra::Cl30 => psi.value().reverse(),
        SpinorAlgebra::Cl31 => dagger(psi.value())?,
    };
    let norm = adj.geometric(psi.value()).scalar_part();
    if norm <= 0.0 {
        return Err(Error::NotNormalized(norm));
    }
    Ok(adj.geometric(h.value()).scalar_part() / norm)
}
