//! Hilbert-space columns versus GA spinors.
//!
//! Cl(3,0): `psi = a0 + a1 e23 + a2 e31 + a3 e12` and
//! `|psi> = [a0 + i a3, -a2 + i a1]`, so that `sigma_i |psi> <-> e_i psi e3`.
//!
//! Cl(3,1): `psi = a0 + a1 e23 - a2 e31 + a3 e12 - b0 I - b1 e14 + b2 e24 + b3 e34`
//! with `I = e1234` and
//! `|psi> = [a0 + i a3, -b3 + i b0, -b2 - i b1, -a1 + i a2]`.
//! The spinor subspace is exactly the even subalgebra of Cl(3,1).

mod complex;

use serde::{Deserialize, Serialize};

pub use complex::{Complex, ComplexColumn, ComplexMatrix};

use crate::algebra::{dagger, pseudoscalar, spatial_inversion, BasisBlade, Multivector, Signature};
use crate::error::{Error, Result};

/// Which algebra a spinor lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SpinorAlgebra {
    Cl30,
    Cl31,
}

impl SpinorAlgebra {
    pub fn signature(self) -> Signature {
        match self {
            SpinorAlgebra::Cl30 => Signature::CL30,
            SpinorAlgebra::Cl31 => Signature::CL31,
        }
    }

    /// Real dimension of the spinor subspace.
    pub fn dim(self) -> usize {
        match self {
            SpinorAlgebra::Cl30 => 4,
            SpinorAlgebra::Cl31 => 8,
        }
    }

    /// Basis spinors in coefficient order (`a0..a3` then `b0..b3`).
    pub fn basis(self) -> Vec<Multivector> {
        let sig = self.signature();
        let e = |idx: &[usize]| Multivector::basis(sig, idx);
        match self {
            SpinorAlgebra::Cl30 => vec![
                Multivector::scalar(sig, 1.0),
                e(&[2, 3]),
                e(&[3, 1]),
                e(&[1, 2]),
            ],
            SpinorAlgebra::Cl31 => vec![
                Multivector::scalar(sig, 1.0),
                e(&[2, 3]),
                -e(&[3, 1]),
                e(&[1, 2]),
                -pseudoscalar(sig),
                -e(&[1, 4]),
                e(&[2, 4]),
                e(&[3, 4]),
            ],
        }
    }
}

/// Signed blade and sign for each coefficient slot.
fn slots(alg: SpinorAlgebra) -> Vec<(BasisBlade, f64)> {
    alg.basis()
        .iter()
        .map(|m| m.terms().next().expect("basis spinors are single blades"))
        .collect()
}

/// Multivector restricted to the spinor subspace.
#[derive(Debug, Clone, PartialEq)]
pub struct Spinor {
    algebra: SpinorAlgebra,
    value: Multivector,
}

impl Spinor {
    /// Wraps an even multivector of Cl(3,0) or Cl(3,1).
    pub fn new(value: Multivector) -> Result<Self> {
        let algebra = match value.signature() {
            Signature::CL30 => SpinorAlgebra::Cl30,
            Signature::CL31 => SpinorAlgebra::Cl31,
            other => {
                return Err(Error::WrongSignature {
                    expected: Signature::CL31,
                    found: other,
                })
            }
        };
        let leak = value.odd_part().max_abs();
        if leak > 0.0 {
            return Err(Error::LeavesSpinorSpace(leak));
        }
        Ok(Spinor { algebra, value })
    }

    /// Projects onto the spinor subspace, failing if the discarded part exceeds `tol`
    /// relative to the largest coefficient.
    pub fn project(value: Multivector, tol: f64) -> Result<Self> {
        let leak = value.odd_part().max_abs();
        if leak > tol * value.max_abs().max(1.0) {
            return Err(Error::LeavesSpinorSpace(leak));
        }
        Spinor::new(value.even_part())
    }

    /// From coefficients `a0..a3` (and `b0..b3` for Cl(3,1)).
    pub fn from_coeffs(algebra: SpinorAlgebra, coeffs: &[f64]) -> Result<Self> {
        if coeffs.len() != algebra.dim() {
            return Err(Error::BadLength {
                expected: algebra.dim(),
                found: coeffs.len(),
            });
        }
        let mut value = Multivector::zero(algebra.signature());
        for ((blade, sign), c) in slots(algebra).into_iter().zip(coeffs) {
            value.coeffs_mut()[blade.mask()] = sign * c;
        }
        Ok(Spinor { algebra, value })
    }

    pub fn zero(algebra: SpinorAlgebra) -> Self {
        Spinor {
            algebra,
            value: Multivector::zero(algebra.signature()),
        }
    }

    pub fn one(algebra: SpinorAlgebra) -> Self {
        Spinor {
            algebra,
            value: Multivector::scalar(algebra.signature(), 1.0),
        }
    }

    pub fn algebra(&self) -> SpinorAlgebra {
        self.algebra
    }

    pub fn value(&self) -> &Multivector {
        &self.value
    }

    pub fn into_value(self) -> Multivector {
        self.value
    }

    /// `[a0, a1, a2, a3]` or `[a0..a3, b0..b3]`.
    pub fn coeffs(&self) -> Vec<f64> {
        slots(self.algebra)
            .into_iter()
            // + 0.0 turns -0.0 into 0.0
            .map(|(blade, sign)| sign * self.value.coeff(blade) + 0.0)
            .collect()
    }

    /// `sum a_i^2 + sum b_i^2`.
    pub fn module_square(&self) -> f64 {
        self.coeffs().iter().map(|c| c * c).sum()
    }

    pub fn scale(&self, s: f64) -> Spinor {
        Spinor {
            algebra: self.algebra,
            value: &self.value * s,
        }
    }

    pub fn max_diff(&self, other: &Spinor) -> f64 {
        self.value.max_diff(&other.value)
    }
}

#[derive(Serialize, Deserialize)]
struct SpinorJson {
    algebra: SpinorAlgebra,
    a: [f64; 4],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    b: Option<[f64; 4]>,
}

impl Serialize for Spinor {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let c = self.coeffs();
        let a = [c[0], c[1], c[2], c[3]];
        let b = (self.algebra == SpinorAlgebra::Cl31).then(|| [c[4], c[5], c[6], c[7]]);
        SpinorJson {
            algebra: self.algebra,
            a,
            b,
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Spinor {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = SpinorJson::deserialize(d)?;
        let mut coeffs = raw.a.to_vec();
        match (raw.algebra, raw.b) {
            (SpinorAlgebra::Cl30, None) => {}
            (SpinorAlgebra::Cl31, Some(b)) => coeffs.extend(b),
            (SpinorAlgebra::Cl30, Some(_)) => {
                return Err(D::Error::custom("cl30 spinor has no b part"))
            }
            (SpinorAlgebra::Cl31, None) => {
                return Err(D::Error::custom("cl31 spinor needs a b part"))
            }
        }
        Spinor::from_coeffs(raw.algebra, &coeffs).map_err(D::Error::custom)
    }
}

fn require(psi: &Spinor, algebra: SpinorAlgebra) -> Result<()> {
    if psi.algebra != algebra {
        return Err(Error::WrongSignature {
            expected: algebra.signature(),
            found: psi.algebra.signature(),
        });
    }
    Ok(())
}

fn require_len(c: &ComplexColumn, n: usize) -> Result<()> {
    if c.len() != n {
        return Err(Error::BadLength {
            expected: n,
            found: c.len(),
        });
    }
    Ok(())
}

pub fn column_to_spinor_cl30(c: &ComplexColumn) -> Result<Spinor> {
    require_len(c, 2)?;
    let [c0, c1] = [c.entries()[0], c.entries()[1]];
    Spinor::from_coeffs(SpinorAlgebra::Cl30, &[c0.re, c1.im, -c1.re, c0.im])
}

pub fn spinor_to_column_cl30(psi: &Spinor) -> Result<ComplexColumn> {
    require(psi, SpinorAlgebra::Cl30)?;
    let a = psi.coeffs();
    ComplexColumn::new(vec![Complex::new(a[0], a[3]), Complex::new(-a[2], a[1])])
}

pub fn column_to_spinor_cl31(c: &ComplexColumn) -> Result<Spinor> {
    require_len(c, 4)?;
    let e = c.entries();
    let (a0, a3) = (e[0].re, e[0].im);
    let (b3, b0) = (-e[1].re, e[1].im);
    let (b2, b1) = (-e[2].re, -e[2].im);
    let (a1, a2) = (-e[3].re, e[3].im);
    Spinor::from_coeffs(SpinorAlgebra::Cl31, &[a0, a1, a2, a3, b0, b1, b2, b3])
}

pub fn spinor_to_column_cl31(psi: &Spinor) -> Result<ComplexColumn> {
    require(psi, SpinorAlgebra::Cl31)?;
    let c = psi.coeffs();
    let (a, b) = (&c[..4], &c[4..]);
    ComplexColumn::new(vec![
        Complex::new(a[0], a[3]),
        Complex::new(-b[3], b[0]),
        Complex::new(-b[2], -b[1]),
        Complex::new(-a[1], a[2]),
    ])
}

/// Dispatches on the spinor's algebra.
pub fn spinor_to_column(psi: &Spinor) -> Result<ComplexColumn> {
    match psi.algebra {
        SpinorAlgebra::Cl30 => spinor_to_column_cl30(psi),
        SpinorAlgebra::Cl31 => spinor_to_column_cl31(psi),
    }
}

/// Dispatches on the column length.
pub fn column_to_spinor(c: &ComplexColumn) -> Result<Spinor> {
    match c.len() {
        2 => column_to_spinor_cl30(c),
        _ => column_to_spinor_cl31(c),
    }
}

/// Pauli matrix `sigma_i`, `i` in 1..=3.
pub fn pauli_matrix(i: usize) -> Result<ComplexMatrix> {
    let (o, z, j) = (Complex::ONE, Complex::ZERO, Complex::I);
    let rows = match i {
        1 => vec![vec![z, o], vec![o, z]],
        2 => vec![vec![z, -j], vec![j, z]],
        3 => vec![vec![o, z], vec![z, -o]],
        _ => return Err(Error::IndexOutOfRange { index: i, dim: 3 }),
    };
    ComplexMatrix::from_rows(rows)
}

/// `e_i psi e3`.
pub fn pauli_action_cl30(i: usize, psi: &Spinor) -> Result<Spinor> {
    require(psi, SpinorAlgebra::Cl30)?;
    let sig = Signature::CL30;
    let ei = Multivector::try_basis(sig, &[i])?;
    Spinor::new(ei.sandwich(&psi.value, &Multivector::basis(sig, &[3])))
}

fn block_diag(a: &ComplexMatrix, b: &ComplexMatrix) -> ComplexMatrix {
    let mut out = ComplexMatrix::zeros(4, 4);
    for i in 0..2 {
        for j in 0..2 {
            out.set(i, j, a.get(i, j));
            out.set(i + 2, j + 2, b.get(i, j));
        }
    }
    out
}

fn vector_matrix(i: usize) -> Result<ComplexMatrix> {
    let (o, z, j) = (Complex::ONE, Complex::ZERO, Complex::I);
    match i {
        1 => ComplexMatrix::from_rows(vec![
            vec![z, z, o, z],
            vec![z, z, z, o],
            vec![o, z, z, z],
            vec![z, o, z, z],
        ]),
        2 => ComplexMatrix::from_rows(vec![
            vec![z, z, -j, z],
            vec![z, z, z, -j],
            vec![j, z, z, z],
            vec![z, j, z, z],
        ]),
        3 => {
            let sy = pauli_matrix(2)?;
            Ok(block_diag(&sy, &sy.scale(-o)))
        }
        4 => {
            let sz = pauli_matrix(3)?;
            Ok(block_diag(&sz.scale(j), &sz.scale(-j)))
        }
        _ => Err(Error::IndexOutOfRange { index: i, dim: 4 }),
    }
}

/// 4x4 matrix of a Cl(3,1) basis blade: product of the vector matrices in
/// ascending index order.
pub fn cl31_matrix_rep(blade: BasisBlade) -> Result<ComplexMatrix> {
    if blade.mask() >= Signature::CL31.blade_count() {
        return Err(Error::IndexOutOfRange {
            index: blade.mask(),
            dim: 4,
        });
    }
    blade
        .indices()
        .into_iter()
        .try_fold(ComplexMatrix::identity(4), |acc, i| {
            acc.mul(&vector_matrix(i)?)
        })
}

/// Matrix of an arbitrary Cl(3,1) multivector.
pub fn cl31_matrix_of(m: &Multivector) -> Result<ComplexMatrix> {
    if m.signature() != Signature::CL31 {
        return Err(Error::WrongSignature {
            expected: Signature::CL31,
            found: m.signature(),
        });
    }
    m.terms()
        .try_fold(ComplexMatrix::zeros(4, 4), |acc, (blade, c)| {
            acc.add(&cl31_matrix_rep(blade)?.scale(Complex::real(c)))
        })
}

/// Generator actions on Cl(3,1) columns.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GaAction {
    /// `e_i |psi>  <->  e_i psi I e3`
    Vector(usize),
    /// `e_i e_j |psi>  <->  e_i e_j psi`
    Bivector(usize, usize),
    /// `I e_i |psi>  <->  I e_i psi I e3`
    PseudoVector(usize),
    /// `i |psi>  <->  I psi e34`
    ImaginaryUnit,
}

impl GaAction {
    /// Every generator action: four vectors, six bivectors, four pseudovectors, `i`.
    pub fn all() -> Vec<GaAction> {
        let mut out: Vec<GaAction> = (1..=4).map(GaAction::Vector).collect();
        for i in 1..=4 {
            for j in i + 1..=4 {
                out.push(GaAction::Bivector(i, j));
            }
        }
        out.extend((1..=4).map(GaAction::PseudoVector));
        out.push(GaAction::ImaginaryUnit);
        out
    }

    fn check(self) -> Result<()> {
        let ok = |i: usize| (1..=4).contains(&i);
        let valid = match self {
            GaAction::Vector(i) | GaAction::PseudoVector(i) => ok(i),
            GaAction::Bivector(i, j) => ok(i) && ok(j) && i != j,
            GaAction::ImaginaryUnit => true,
        };
        if valid {
            Ok(())
        } else {
            Err(Error::InvalidAction(format!("{self:?}")))
        }
    }

    /// Matrix acting on the column.
    pub fn matrix(self) -> Result<ComplexMatrix> {
        self.check()?;
        match self {
            GaAction::Vector(i) => vector_matrix(i),
            GaAction::Bivector(i, j) => vector_matrix(i)?.mul(&vector_matrix(j)?),
            GaAction::PseudoVector(i) => {
                cl31_matrix_rep(BasisBlade(0b1111))?.mul(&vector_matrix(i)?)
            }
            GaAction::ImaginaryUnit => Ok(ComplexMatrix::identity(4).scale(Complex::I)),
        }
    }
}

/// GA form of a generator action.
pub fn ga_action_cl31(action: GaAction, psi: &Spinor) -> Result<Spinor> {
    action.check()?;
    require(psi, SpinorAlgebra::Cl31)?;
    let sig = Signature::CL31;
    let e = |idx: &[usize]| Multivector::basis(sig, idx);
    let i4 = pseudoscalar(sig);
    let ie3 = i4.geometric(&e(&[3]));
    let out = match action {
        GaAction::Vector(i) => e(&[i]).sandwich(&psi.value, &ie3),
        GaAction::Bivector(i, j) => e(&[i]).geometric(&e(&[j])).geometric(&psi.value),
        GaAction::PseudoVector(i) => i4.geometric(&e(&[i])).sandwich(&psi.value, &ie3),
        GaAction::ImaginaryUnit => i4.sandwich(&psi.value, &e(&[3, 4])),
    };
    Spinor::new(out)
}

/// `(psi + inv(psi))/2` and `(psi - inv(psi))/2`.
pub fn even_odd_split(psi: &Spinor) -> Result<(Spinor, Spinor)> {
    require(psi, SpinorAlgebra::Cl31)?;
    let bar = spatial_inversion(&psi.value)?;
    let even = (&psi.value + &bar) * 0.5;
    let odd = (&psi.value - &bar) * 0.5;
    Ok((Spinor::new(even)?, Spinor::new(odd)?))
}

/// `(<phi^dagger psi>, -<phi^dagger psi e12>)`: real and imaginary parts of
/// `<phi|psi>`. Uses reversion in Cl(3,0).
pub fn inner_product_bracket(phi: &Spinor, psi: &Spinor) -> Result<(f64, f64)> {
    if phi.algebra != psi.algebra {
        return Err(Error::SignatureMismatch(
            phi.algebra.signature(),
            psi.algebra.signature(),
        ));
    }
    let adj = match phi.algebra {
        SpinorAlgebra::Cl30 => phi.value.reverse(),
        SpinorAlgebra::Cl31 => dagger(&phi.value)?,
    };
    let prod = adj.geometric(&psi.value);
    let e12 = Multivector::basis(phi.algebra.signature(), &[1, 2]);
    Ok((prod.scalar_part(), -prod.geometric(&e12).scalar_part()))
}
