//! Rotors: normalized even multivectors acting by `x -> R x reverse(R)`.
//!
//! Sign convention: the rotor taking unit `a` to unit `b` is
//! `R = (1 + b a) / |a + b| = exp((b^a)/|b^a| * theta/2)` with `cos(theta) = a.b`,
//! so that `R a reverse(R) = b`.

use crate::algebra::{Multivector, TOL};
use crate::error::{Error, Result};

/// Distance from `a . b = -1` below which the rotation plane is undefined.
pub const ANTIPARALLEL_TOL: f64 = 1e-10;

/// An even multivector with `R reverse(R) = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct Rotor(Multivector);

impl Rotor {
    /// Validates `m` as a rotor within `tol`.
    pub fn new(m: Multivector, tol: f64) -> Result<Self> {
        if is_rotor(&m, tol) {
            Ok(Rotor(m))
        } else {
            Err(Error::NotRotor)
        }
    }

    pub fn identity(sig: crate::algebra::Signature) -> Self {
        Rotor(Multivector::scalar(sig, 1.0))
    }

    pub fn as_multivector(&self) -> &Multivector {
        &self.0
    }

    pub fn into_multivector(self) -> Multivector {
        self.0
    }

    pub fn reverse(&self) -> Rotor {
        Rotor(self.0.reverse())
    }

    pub fn rotate(&self, m: &Multivector) -> Multivector {
        rotate(self, m)
    }
}

impl From<Rotor> for Multivector {
    fn from(r: Rotor) -> Self {
        r.0
    }
}

/// True iff `m` is even and `m reverse(m) = 1` componentwise within `tol`.
pub fn is_rotor(m: &Multivector, tol: f64) -> bool {
    if !m.is_even(tol) {
        return false;
    }
    let one = Multivector::scalar(m.signature(), 1.0);
    m.geometric(&m.reverse()).approx_eq(&one, tol)
}

fn require_unit_vector(v: &Multivector) -> Result<()> {
    if !v.is_vector(TOL) {
        return Err(Error::NotVector);
    }
    let square = v.geometric(v).scalar_part();
    if (square - 1.0).abs() > TOL {
        return Err(Error::NotUnit { square });
    }
    Ok(())
}

/// Product of two reflections, `R = m n`.
pub fn rotor_from_reflections(m: &Multivector, n: &Multivector) -> Result<Rotor> {
    require_unit_vector(m)?;
    require_unit_vector(n)?;
    Ok(Rotor(m.geometric(n)))
}

/// `cos(theta/2) + B sin(theta/2)` for a unit bivector `B` (`B^2 = -1`).
pub fn rotor_exp(plane: &Multivector, theta: f64) -> Result<Rotor> {
    let sig = plane.signature();
    if !plane.is_grade(2, TOL) {
        return Err(Error::NotUnitBivector);
    }
    let square = plane.geometric(plane);
    if !square.approx_eq(&Multivector::scalar(sig, -1.0), TOL) {
        return Err(Error::NotUnitBivector);
    }
    let half = theta / 2.0;
    Ok(Rotor(
        Multivector::scalar(sig, half.cos()) + plane * half.sin(),
    ))
}

/// Rotor taking unit vector `from` onto unit vector `to`.
pub fn rotor_from_vectors(from: &Multivector, to: &Multivector) -> Result<Rotor> {
    require_unit_vector(from)?;
    require_unit_vector(to)?;
    let cos = from.inner(to).scalar_part();
    if 1.0 + cos < ANTIPARALLEL_TOL {
        return Err(Error::Antiparallel);
    }
    // (1 + b a)/|a + b| = h a with h the unit bisector; this form stays
    // normalized when a and b are nearly opposite.
    let sum = from + to;
    let half = &sum * (1.0 / sum.magnitude());
    Ok(Rotor(half.geometric(from)))
}

/// `R M reverse(R)`.
pub fn rotate(rotor: &Rotor, m: &Multivector) -> Multivector {
    rotor.0.sandwich(m, &rotor.0.reverse())
}

/// Composite `R2 R1`: rotate by `R1` first, then `R2`.
///
/// The product is returned as a plain multivector; wrap it with
/// [`Rotor::new`] when it should be treated as a rotor.
pub fn compose(second: &Rotor, first: &Rotor) -> Multivector {
    second.0.geometric(&first.0)
}
