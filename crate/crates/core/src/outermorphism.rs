//! Linear vector maps extended to blades, determinants and the 3D secular
//! equation, all without matrices.

use crate::algebra::{pseudoscalar, versor_inverse, BasisBlade, Multivector, Signature, TOL};
use crate::error::{Error, Result};

/// Linear map on vectors stored as the images of the basis vectors.
#[derive(Debug, Clone, PartialEq)]
pub struct VectorMap {
    sig: Signature,
    images: Vec<Multivector>,
}

impl VectorMap {
    /// `images[i]` is the image of `e_{i+1}`; each must be a pure vector.
    pub fn new(sig: Signature, images: Vec<Multivector>) -> Result<Self> {
        if images.len() != sig.dim() {
            return Err(Error::BadLength {
                expected: sig.dim(),
                found: images.len(),
            });
        }
        for img in &images {
            if img.signature() != sig {
                return Err(Error::SignatureMismatch(sig, img.signature()));
            }
            if !img.is_vector(0.0) {
                return Err(Error::NotVector);
            }
        }
        Ok(VectorMap { sig, images })
    }

    pub fn identity(sig: Signature) -> Self {
        let images = (1..=sig.dim())
            .map(|i| Multivector::basis(sig, &[i]))
            .collect();
        VectorMap { sig, images }
    }

    /// From a coordinate matrix: column `j` holds the coordinates of `F(e_{j+1})`.
    pub fn from_matrix(sig: Signature, rows: &[Vec<f64>]) -> Result<Self> {
        let n = sig.dim();
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(Error::BadLength {
                expected: n,
                found: rows.len(),
            });
        }
        let images = (0..n)
            .map(|j| {
                let col: Vec<f64> = rows.iter().map(|r| r[j]).collect();
                Multivector::vector(sig, &col)
            })
            .collect();
        Ok(VectorMap { sig, images })
    }

    pub fn diagonal(sig: Signature, scales: &[f64]) -> Result<Self> {
        let n = sig.dim();
        let rows: Vec<Vec<f64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| if i == j { scales[i] } else { 0.0 })
                    .collect()
            })
            .collect();
        Self::from_matrix(sig, &rows)
    }

    pub fn signature(&self) -> Signature {
        self.sig
    }

    pub fn images(&self) -> &[Multivector] {
        &self.images
    }

    /// Coordinate matrix, `m[i][j] = e_{i+1} component of F(e_{j+1})`.
    pub fn matrix(&self) -> Vec<Vec<f64>> {
        let n = self.sig.dim();
        (0..n)
            .map(|i| (0..n).map(|j| self.images[j].vector_coords()[i]).collect())
            .collect()
    }

    /// `(self o other)(x) = self(other(x))`.
    pub fn compose(&self, other: &VectorMap) -> Result<VectorMap> {
        if self.sig != other.sig {
            return Err(Error::SignatureMismatch(self.sig, other.sig));
        }
        let images = other
            .images
            .iter()
            .map(|img| apply_vector(self, img))
            .collect::<Result<_>>()?;
        Ok(VectorMap {
            sig: self.sig,
            images,
        })
    }
}

pub fn apply_vector(map: &VectorMap, x: &Multivector) -> Result<Multivector> {
    if x.signature() != map.sig {
        return Err(Error::SignatureMismatch(map.sig, x.signature()));
    }
    if !x.is_vector(0.0) {
        return Err(Error::NotVector);
    }
    let mut out = Multivector::zero(map.sig);
    for (c, img) in x.vector_coords().into_iter().zip(&map.images) {
        out += &(img * c);
    }
    Ok(out)
}

/// Outermorphism: `F(e_i ^ e_j ^ ...) = F(e_i) ^ F(e_j) ^ ...`, extended linearly.
pub fn apply_outermorphism(map: &VectorMap, m: &Multivector) -> Result<Multivector> {
    let sig = map.sig;
    if m.signature() != sig {
        return Err(Error::SignatureMismatch(sig, m.signature()));
    }
    let mut out = Multivector::zero(sig);
    for (blade, c) in m.terms() {
        let image = blade
            .indices()
            .into_iter()
            .fold(Multivector::scalar(sig, 1.0), |acc, i| {
                acc.wedge(&map.images[i - 1])
            });
        out += &(image * c);
    }
    Ok(out)
}

/// `<F(I) I^-1>`.
pub fn determinant(map: &VectorMap) -> f64 {
    let i = pseudoscalar(map.sig);
    let i_inv = versor_inverse(&i).expect("pseudoscalar of a nondegenerate metric is invertible");
    let fi = apply_outermorphism(map, &i).expect("same signature");
    fi.geometric(&i_inv).scalar_part()
}

/// Coefficients `(a2, a1, a0)` of `l^3 + a2 l^2 + a1 l + a0 = 0` in Cl(3,0).
///
/// With `f_i = F(e_i)` and `I = e123`:
/// `a0 = (f1^f2^f3).I`,
/// `a1 = -(f1^f2^e3 + f1^e2^f3 + e1^f2^f3).I`,
/// `a2 = (f1^e2^e3 + e1^f2^e3 + e1^e2^f3).I`.
pub fn secular_cubic(map: &VectorMap) -> Result<(f64, f64, f64)> {
    let sig = Signature::CL30;
    if map.sig != sig {
        return Err(Error::WrongSignature {
            expected: sig,
            found: map.sig,
        });
    }
    let e: Vec<Multivector> = (1..=3).map(|i| Multivector::basis(sig, &[i])).collect();
    let f = &map.images;
    let i3 = pseudoscalar(sig);
    let dot_i = |m: Multivector| m.inner(&i3).scalar_part();
    let wedge3 = |a: &Multivector, b: &Multivector, c: &Multivector| a.wedge(b).wedge(c);

    let a0 = dot_i(wedge3(&f[0], &f[1], &f[2]));
    let a1 = -dot_i(
        wedge3(&f[0], &f[1], &e[2]) + wedge3(&f[0], &e[1], &f[2]) + wedge3(&e[0], &f[1], &f[2]),
    );
    let a2 = dot_i(
        wedge3(&f[0], &e[1], &e[2]) + wedge3(&e[0], &f[1], &e[2]) + wedge3(&e[0], &e[1], &f[2]),
    );
    Ok((a2, a1, a0))
}

/// Real roots of a monic cubic.
#[derive(Debug, Clone, PartialEq)]
pub enum CubicRoots {
    /// Three real roots (with multiplicity), ascending.
    Real([f64; 3]),
    /// One real root; the other two form a complex pair with no real eigenvalue.
    OneReal { root: f64, complex_pair: (f64, f64) },
}

/// Roots of `l^3 + a2 l^2 + a1 l + a0`.
pub fn cubic_roots(a2: f64, a1: f64, a0: f64) -> CubicRoots {
    // Depressed cubic t^3 + p t + q with l = t - a2/3.
    let shift = a2 / 3.0;
    let p = a1 - a2 * a2 / 3.0;
    let q = 2.0 * a2.powi(3) / 27.0 - a2 * a1 / 3.0 + a0;
    let scale = 1.0 + a2.abs() + a1.abs().sqrt() + a0.abs().cbrt();
    let disc = (q / 2.0).powi(2) + (p / 3.0).powi(3);
    let poly = |l: f64| ((l + a2) * l + a1) * l + a0;
    let dpoly = |l: f64| (3.0 * l + 2.0 * a2) * l + a1;
    let polish = |mut l: f64| {
        for _ in 0..4 {
            let d = dpoly(l);
            if d.abs() < 1e-300 {
                break;
            }
            let next = l - poly(l) / d;
            if !next.is_finite() || poly(next).abs() >= poly(l).abs() {
                break;
            }
            l = next;
        }
        l
    };

    if disc > 1e-14 * scale.powi(6) {
        let sq = disc.sqrt();
        let t = (-q / 2.0 + sq).cbrt() + (-q / 2.0 - sq).cbrt();
        let root = polish(t - shift);
        // Deflate: l^2 + b l + c with b = a2 + root, c = a1 + b root.
        let b = a2 + root;
        let c = a1 + b * root;
        let re = -b / 2.0;
        let im = (c - re * re).max(0.0).sqrt();
        return CubicRoots::OneReal {
            root,
            complex_pair: (re, im),
        };
    }
    let mut roots = if p.abs() < 1e-300 {
        [-shift; 3]
    } else {
        let m = 2.0 * (-p / 3.0).max(0.0).sqrt();
        let arg = if m == 0.0 {
            0.0
        } else {
            (3.0 * q / (p * m)).clamp(-1.0, 1.0)
        };
        let theta = arg.acos() / 3.0;
        let two_pi_3 = 2.0 * std::f64::consts::PI / 3.0;
        [0.0, 1.0, 2.0].map(|k| m * (theta - k * two_pi_3).cos() - shift)
    };
    roots.sort_by(f64::total_cmp);
    // Newton stalls on a repeated root, so polish only the most isolated
    // root and recover the other two from the deflated quadratic.
    let iso = if roots[1] - roots[0] >= roots[2] - roots[1] {
        0
    } else {
        2
    };
    let root = polish(roots[iso]);
    let b = a2 + root;
    let c = a1 + b * root;
    // All three roots are real here. A discriminant at the rounding level of
    // its terms cannot tell a double root from two close ones; call it double.
    let mut disc = b * b - 4.0 * c;
    if disc <= 4.0 * f64::EPSILON * (b * b + 4.0 * c.abs()) {
        disc = 0.0;
    }
    let q = -0.5 * (b + b.signum() * disc.sqrt());
    let (x, y) = if q == 0.0 { (0.0, 0.0) } else { (q, c / q) };
    roots = [root, polish(x.min(y)), polish(x.max(y))];
    roots.sort_by(f64::total_cmp);
    CubicRoots::Real(roots)
}

/// Eigenvalues of a Cl(3,0) map from its secular cubic.
pub fn secular_eigenvalues(map: &VectorMap) -> Result<CubicRoots> {
    let (a2, a1, a0) = secular_cubic(map)?;
    Ok(cubic_roots(a2, a1, a0))
}

/// Coefficient norm of `F(A) - lambda A`.
pub fn eigenblade_residual(map: &VectorMap, blade: &Multivector, lambda: f64) -> Result<f64> {
    let image = apply_outermorphism(map, blade)?;
    Ok((image - blade * lambda).coeff_norm())
}

/// True when `blade` is a single basis blade or a sum of same-grade terms.
pub fn is_homogeneous(m: &Multivector) -> bool {
    let mut grades = m.terms().map(|(b, _): (BasisBlade, f64)| b.grade());
    match grades.next() {
        None => true,
        Some(g) => grades.all(|h| h == g) && m.is_grade(g, TOL),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const C30: Signature = Signature::CL30;

    fn e(idx: &[usize]) -> Multivector {
        Multivector::basis(C30, idx)
    }

    fn swap12() -> VectorMap {
        VectorMap::new(C30, vec![e(&[2]), e(&[1]), e(&[3])]).unwrap()
    }

    #[test]
    fn apply_vector_examples() {
        let id = VectorMap::identity(C30);
        assert_eq!(apply_vector(&id, &e(&[1])).unwrap(), e(&[1]));
        let d = VectorMap::diagonal(C30, &[2.0, 3.0, 1.0]).unwrap();
        assert_eq!(apply_vector(&d, &e(&[2])).unwrap(), e(&[2]) * 3.0);
        let x = e(&[1]) + e(&[2]);
        assert_eq!(apply_vector(&swap12(), &x).unwrap(), x);
        assert_eq!(apply_vector(&id, &e(&[1, 2])), Err(Error::NotVector));
    }

    #[test]
    fn outermorphism_examples() {
        let id = VectorMap::identity(C30);
        assert_eq!(apply_outermorphism(&id, &e(&[1, 2])).unwrap(), e(&[1, 2]));
        assert_eq!(
            apply_outermorphism(&swap12(), &e(&[1, 2])).unwrap(),
            -e(&[1, 2])
        );
        let d = VectorMap::diagonal(C30, &[2.0, 3.0, 1.0]).unwrap();
        assert_eq!(
            apply_outermorphism(&d, &e(&[1, 2, 3])).unwrap(),
            e(&[1, 2, 3]) * 6.0
        );
        let s = Multivector::scalar(C30, 4.5);
        assert_eq!(apply_outermorphism(&d, &s).unwrap(), s);
    }

    #[test]
    fn determinants() {
        assert_eq!(determinant(&VectorMap::identity(C30)), 1.0);
        assert_eq!(
            determinant(&VectorMap::diagonal(C30, &[2.0, 3.0, 1.0]).unwrap()),
            6.0
        );
        assert_eq!(determinant(&swap12()), -1.0);
        let r = crate::rotor::rotor_exp(&(e(&[1, 2]) * 0.8 - e(&[1, 3]) * 0.6), 2.2).unwrap();
        let images = (1..=3).map(|i| r.rotate(&e(&[i]))).collect();
        let rot = VectorMap::new(C30, images).unwrap();
        assert!((determinant(&rot) - 1.0).abs() < TOL);
        // Cl(3,1) diagonal map
        let d4 = VectorMap::diagonal(Signature::CL31, &[2.0, 1.0, 1.0, -3.0]).unwrap();
        assert!((determinant(&d4) + 6.0).abs() < TOL);
    }

    #[test]
    fn secular_examples() {
        let id = VectorMap::identity(C30);
        assert_eq!(secular_cubic(&id).unwrap(), (-3.0, 3.0, -1.0));
        assert_eq!(
            secular_eigenvalues(&id).unwrap(),
            CubicRoots::Real([1.0; 3])
        );
        let d = VectorMap::diagonal(C30, &[2.0, 3.0, 1.0]).unwrap();
        assert_eq!(secular_cubic(&d).unwrap(), (-6.0, 11.0, -6.0));
        let CubicRoots::Real(r) = secular_eigenvalues(&d).unwrap() else {
            panic!("expected real roots")
        };
        for (got, want) in r.iter().zip([1.0, 2.0, 3.0]) {
            assert!((got - want).abs() < 1e-10);
        }
        let CubicRoots::Real(r) = secular_eigenvalues(&swap12()).unwrap() else {
            panic!("expected real roots")
        };
        for (got, want) in r.iter().zip([-1.0, 1.0, 1.0]) {
            assert!((got - want).abs() < 1e-10, "{r:?}");
        }
        let c31 = VectorMap::identity(Signature::CL31);
        assert!(matches!(
            secular_cubic(&c31),
            Err(Error::WrongSignature { .. })
        ));
    }

    #[test]
    fn rotation_about_e3_has_complex_pair() {
        let (c, s) = (0.3f64.cos(), 0.3f64.sin());
        let m = VectorMap::from_matrix(
            C30,
            &[vec![c, -s, 0.0], vec![s, c, 0.0], vec![0.0, 0.0, 1.0]],
        )
        .unwrap();
        match secular_eigenvalues(&m).unwrap() {
            CubicRoots::OneReal {
                root,
                complex_pair: (re, im),
            } => {
                assert!((root - 1.0).abs() < 1e-10);
                assert!((re - c).abs() < 1e-10 && (im - s).abs() < 1e-10);
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn repeated_roots_are_resolved() {
        let m = VectorMap::from_matrix(
            C30,
            &[
                vec![2.0, 1.0, 0.0],
                vec![1.0, 2.0, 0.0],
                vec![0.0, 0.0, 3.0],
            ],
        )
        .unwrap();
        match secular_eigenvalues(&m).unwrap() {
            CubicRoots::Real(r) => {
                for (x, y) in r.iter().zip([1.0, 3.0, 3.0]) {
                    assert!((x - y).abs() < 1e-12, "{r:?}");
                }
            }
            other => panic!("unexpected {other:?}"),
        }
        // (l - 2)^3
        match cubic_roots(-6.0, 12.0, -8.0) {
            CubicRoots::Real(r) => assert!(r.iter().all(|x| (x - 2.0).abs() < 1e-12), "{r:?}"),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn eigenblade_residuals() {
        let id = VectorMap::identity(C30);
        assert_eq!(eigenblade_residual(&id, &e(&[1, 2]), 1.0).unwrap(), 0.0);
        assert_eq!(
            eigenblade_residual(&swap12(), &e(&[1, 2]), -1.0).unwrap(),
            0.0
        );
        let d = VectorMap::diagonal(C30, &[2.0, 3.0, 1.0]).unwrap();
        assert_eq!(eigenblade_residual(&d, &e(&[1, 2]), 6.0).unwrap(), 0.0);
        assert!(eigenblade_residual(&d, &e(&[1, 2]), 5.0).unwrap() > 0.5);
        assert!(is_homogeneous(&e(&[1, 2])));
        assert!(!is_homogeneous(&(e(&[1]) + e(&[1, 2]))));
    }
}
