use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use super::{BasisBlade, Signature};
use crate::error::{Error, Result};

/// Dense multivector over the basis blades of a signature.
///
/// `coeffs[mask]` is the coefficient of the blade with that bitmask. Values
/// are immutable once built; every product returns a fresh multivector.
#[derive(Debug, Clone, PartialEq)]
pub struct Multivector {
    sig: Signature,
    coeffs: Vec<f64>,
}

impl Multivector {
    pub fn zero(sig: Signature) -> Self {
        Multivector {
            sig,
            coeffs: vec![0.0; sig.blade_count()],
        }
    }

    pub fn scalar(sig: Signature, value: f64) -> Self {
        Self::blade(sig, BasisBlade::SCALAR, value)
    }

    pub fn blade(sig: Signature, blade: BasisBlade, value: f64) -> Self {
        let mut m = Self::zero(sig);
        m.coeffs[blade.mask()] = value;
        m
    }

    /// Unit blade from one-based indices, e.g. `basis(CL30, &[3, 1])` is `e31 = -e13`.
    ///
    /// Panics on repeated or out-of-range indices; see [`Multivector::try_basis`].
    pub fn basis(sig: Signature, indices: &[usize]) -> Self {
        Self::try_basis(sig, indices).expect("invalid basis blade indices")
    }

    pub fn try_basis(sig: Signature, indices: &[usize]) -> Result<Self> {
        let dim = sig.dim();
        if let Some(&bad) = indices.iter().find(|&&i| i == 0 || i > dim) {
            return Err(Error::IndexOutOfRange { index: bad, dim });
        }
        let (blade, sign) = BasisBlade::from_indices(indices)
            .ok_or_else(|| Error::Parse(format!("repeated index in {indices:?}")))?;
        Ok(Self::blade(sig, blade, sign))
    }

    /// Grade-1 multivector `sum_i components[i] e_{i+1}`.
    pub fn vector(sig: Signature, components: &[f64]) -> Self {
        assert!(components.len() <= sig.dim(), "too many vector components");
        let mut m = Self::zero(sig);
        for (i, &c) in components.iter().enumerate() {
            m.coeffs[1 << i] = c;
        }
        m
    }

    /// Builds from coefficients indexed by blade mask.
    pub fn from_coeffs(sig: Signature, coeffs: Vec<f64>) -> Result<Self> {
        if coeffs.len() != sig.blade_count() {
            return Err(Error::BadLength {
                expected: sig.blade_count(),
                found: coeffs.len(),
            });
        }
        Ok(Multivector { sig, coeffs })
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    /// Coefficients indexed by blade mask.
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub(crate) fn coeffs_mut(&mut self) -> &mut [f64] {
        &mut self.coeffs
    }

    pub fn coeff(&self, blade: BasisBlade) -> f64 {
        self.coeffs[blade.mask()]
    }

    /// Blades sorted by `(grade, mask)`, the order used for serialization.
    pub fn canonical_order(sig: Signature) -> Vec<BasisBlade> {
        let mut blades: Vec<_> = (0..sig.blade_count()).map(BasisBlade).collect();
        blades.sort_by_key(|b| (b.grade(), b.mask()));
        blades
    }

    pub fn canonical_coeffs(&self) -> Vec<f64> {
        Self::canonical_order(self.sig)
            .into_iter()
            .map(|b| self.coeff(b))
            .collect()
    }

    pub fn from_canonical(sig: Signature, values: &[f64]) -> Result<Self> {
        if values.len() != sig.blade_count() {
            return Err(Error::BadLength {
                expected: sig.blade_count(),
                found: values.len(),
            });
        }
        let mut m = Self::zero(sig);
        for (b, &v) in Self::canonical_order(sig).into_iter().zip(values) {
            m.coeffs[b.mask()] = v;
        }
        Ok(m)
    }

    /// Nonzero terms in canonical order.
    pub fn terms(&self) -> impl Iterator<Item = (BasisBlade, f64)> + '_ {
        Self::canonical_order(self.sig)
            .into_iter()
            .map(|b| (b, self.coeff(b)))
            .filter(|&(_, c)| c != 0.0)
    }

    pub fn scalar_part(&self) -> f64 {
        self.coeffs[0]
    }

    /// Grade-`k` part; zero when `k` exceeds the dimension.
    pub fn grade_part(&self, k: usize) -> Self {
        self.filter(|b| b.grade() == k)
    }

    pub fn even_part(&self) -> Self {
        self.filter(|b| b.grade() % 2 == 0)
    }

    pub fn odd_part(&self) -> Self {
        self.filter(|b| b.grade() % 2 == 1)
    }

    fn filter(&self, keep: impl Fn(BasisBlade) -> bool) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(mask, &c)| if keep(BasisBlade(mask)) { c } else { 0.0 })
            .collect();
        Multivector {
            sig: self.sig,
            coeffs,
        }
    }

    fn map_signs(&self, sign: impl Fn(BasisBlade) -> f64) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(mask, &c)| c * sign(BasisBlade(mask)))
            .collect();
        Multivector {
            sig: self.sig,
            coeffs,
        }
    }

    pub fn reverse(&self) -> Self {
        self.map_signs(BasisBlade::reverse_sign)
    }

    /// Vector coordinates `[x1, ..., xn]` of the grade-1 part.
    pub fn vector_coords(&self) -> Vec<f64> {
        (0..self.sig.dim()).map(|i| self.coeffs[1 << i]).collect()
    }

    /// Largest coefficient magnitude.
    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().fold(0.0, |m, c| m.max(c.abs()))
    }

    /// Euclidean norm of the coefficient vector.
    pub fn coeff_norm(&self) -> f64 {
        self.coeffs.iter().map(|c| c * c).sum::<f64>().sqrt()
    }

    /// `sqrt(|<M reverse(M)>|)`, signature agnostic.
    pub fn magnitude(&self) -> f64 {
        self.geometric(&self.reverse()).scalar_part().abs().sqrt()
    }

    /// True when every coefficient outside grade `k` is within `tol`.
    pub fn is_grade(&self, k: usize, tol: f64) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(mask, c)| BasisBlade(mask).grade() == k || c.abs() <= tol)
    }

    pub fn is_vector(&self, tol: f64) -> bool {
        self.is_grade(1, tol)
    }

    pub fn is_even(&self, tol: f64) -> bool {
        self.odd_part().max_abs() <= tol
    }

    pub fn approx_eq(&self, other: &Multivector, tol: f64) -> bool {
        self.sig == other.sig && self.max_diff(other) <= tol
    }

    /// Largest componentwise difference.
    pub fn max_diff(&self, other: &Multivector) -> f64 {
        assert_eq!(self.sig, other.sig, "signature mismatch");
        self.coeffs
            .iter()
            .zip(&other.coeffs)
            .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
    }

    fn check_same(&self, other: &Multivector) -> Result<()> {
        if self.sig != other.sig {
            return Err(Error::SignatureMismatch(self.sig, other.sig));
        }
        Ok(())
    }

    /// Bilinear product keeping only blade pairs accepted by `keep(a, b)`.
    fn product_where(
        &self,
        other: &Multivector,
        keep: impl Fn(BasisBlade, BasisBlade) -> bool,
    ) -> Self {
        let mut out = Self::zero(self.sig);
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0.0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b == 0.0 {
                    continue;
                }
                let (bi, bj) = (BasisBlade(i), BasisBlade(j));
                if keep(bi, bj) {
                    out.coeffs[i ^ j] += bi.product_sign(bj, self.sig) * a * b;
                }
            }
        }
        out
    }

    /// Geometric product. Panics on signature mismatch; see [`geometric_product`].
    pub fn geometric(&self, other: &Multivector) -> Self {
        geometric_product(self, other).expect("geometric product")
    }

    /// Outer product. Panics on signature mismatch; see [`outer_product`].
    pub fn wedge(&self, other: &Multivector) -> Self {
        outer_product(self, other).expect("outer product")
    }

    /// Inner product. Panics on signature mismatch; see [`inner_product`].
    pub fn inner(&self, other: &Multivector) -> Self {
        inner_product(self, other).expect("inner product")
    }

    /// Shorthand for `self * m * other`.
    pub fn sandwich(&self, m: &Multivector, other: &Multivector) -> Self {
        self.geometric(m).geometric(other)
    }
}

pub fn geometric_product(a: &Multivector, b: &Multivector) -> Result<Multivector> {
    a.check_same(b)?;
    Ok(a.product_where(b, |_, _| true))
}

/// Grade-`(r+s)` part of the product of grade-`r` and grade-`s` blades.
pub fn outer_product(a: &Multivector, b: &Multivector) -> Result<Multivector> {
    a.check_same(b)?;
    Ok(a.product_where(b, |x, y| x.mask() & y.mask() == 0))
}

/// Grade-`|r-s|` part of the product of grade-`r` and grade-`s` blades.
///
/// Scalars act by plain multiplication, which is the same rule at `r = 0`.
pub fn inner_product(a: &Multivector, b: &Multivector) -> Result<Multivector> {
    a.check_same(b)?;
    Ok(a.product_where(b, |x, y| {
        (x.mask() ^ y.mask()).count_ones() as usize == x.grade().abs_diff(y.grade())
    }))
}

pub fn reverse(m: &Multivector) -> Multivector {
    m.reverse()
}

pub fn grade_project(m: &Multivector, k: usize) -> Result<Multivector> {
    let dim = m.sig.dim();
    if k > dim {
        return Err(Error::GradeOutOfRange { grade: k, dim });
    }
    Ok(m.grade_part(k))
}

/// Unit top-grade blade `e_{12...n}`.
pub fn pseudoscalar(sig: Signature) -> Multivector {
    Multivector::blade(sig, BasisBlade(sig.blade_count() - 1), 1.0)
}

fn require(sig: Signature, expected: Signature) -> Result<()> {
    if sig != expected {
        return Err(Error::WrongSignature {
            expected,
            found: sig,
        });
    }
    Ok(())
}

/// `M -> -e4 M e4` in Cl(3,1): flips `e1, e2, e3`, keeps `e4`.
pub fn spatial_inversion(m: &Multivector) -> Result<Multivector> {
    require(m.sig, Signature::CL31)?;
    Ok(m.map_signs(|b| {
        if (b.mask() & 0b0111).count_ones() % 2 == 0 {
            1.0
        } else {
            -1.0
        }
    }))
}

/// `psi^dagger = -e4 reverse(psi) e4` in Cl(3,1).
pub fn dagger(m: &Multivector) -> Result<Multivector> {
    spatial_inversion(&m.reverse())
}

/// `reverse(V) / <V reverse(V)>` for a versor `V`.
pub fn versor_inverse(v: &Multivector) -> Result<Multivector> {
    let rev = v.reverse();
    let norm = v.geometric(&rev);
    let scale = v.max_abs().powi(2);
    let s = norm.scalar_part();
    if scale == 0.0 || s.abs() < 1e-14 * scale {
        return Err(Error::NotInvertible("null versor"));
    }
    let stray = norm.filter(|b| b.mask() != 0).max_abs();
    if stray > 1e-12 * scale {
        return Err(Error::NotInvertible("V reverse(V) is not a scalar"));
    }
    Ok(rev * (1.0 / s))
}

macro_rules! binop {
    ($tr:ident, $method:ident, $f:expr) => {
        impl $tr<&Multivector> for &Multivector {
            type Output = Multivector;
            fn $method(self, rhs: &Multivector) -> Multivector {
                let f: fn(&Multivector, &Multivector) -> Multivector = $f;
                f(self, rhs)
            }
        }
        impl $tr<Multivector> for Multivector {
            type Output = Multivector;
            fn $method(self, rhs: Multivector) -> Multivector {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Multivector> for Multivector {
            type Output = Multivector;
            fn $method(self, rhs: &Multivector) -> Multivector {
                (&self).$method(rhs)
            }
        }
        impl $tr<Multivector> for &Multivector {
            type Output = Multivector;
            fn $method(self, rhs: Multivector) -> Multivector {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add, |a, b| {
    let mut out = a.clone();
    out += b;
    out
});
binop!(Sub, sub, |a, b| {
    let mut out = a.clone();
    out -= b;
    out
});
binop!(Mul, mul, |a, b| a.geometric(b));

impl AddAssign<&Multivector> for Multivector {
    fn add_assign(&mut self, rhs: &Multivector) {
        assert_eq!(self.sig, rhs.sig, "signature mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a += b;
        }
    }
}

impl SubAssign<&Multivector> for Multivector {
    fn sub_assign(&mut self, rhs: &Multivector) {
        assert_eq!(self.sig, rhs.sig, "signature mismatch");
        for (a, b) in self.coeffs.iter_mut().zip(&rhs.coeffs) {
            *a -= b;
        }
    }
}

impl Mul<f64> for &Multivector {
    type Output = Multivector;
    fn mul(self, rhs: f64) -> Multivector {
        Multivector {
            sig: self.sig,
            coeffs: self.coeffs.iter().map(|c| c * rhs).collect(),
        }
    }
}

impl Mul<f64> for Multivector {
    type Output = Multivector;
    fn mul(self, rhs: f64) -> Multivector {
        &self * rhs
    }
}

impl Mul<Multivector> for f64 {
    type Output = Multivector;
    fn mul(self, rhs: Multivector) -> Multivector {
        &rhs * self
    }
}

impl Mul<&Multivector> for f64 {
    type Output = Multivector;
    fn mul(self, rhs: &Multivector) -> Multivector {
        rhs * self
    }
}

impl Neg for &Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        self * -1.0
    }
}

impl Neg for Multivector {
    type Output = Multivector;
    fn neg(self) -> Multivector {
        &self * -1.0
    }
}
