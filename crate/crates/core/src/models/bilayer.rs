//! Bilayer graphene with interlayer bias:
//! `H(psi) = eta k psi I e3 - (g1/2) e2 (psi - inv(psi)) e3 + eta U e3 psi e3`.
//!
//! The spectrum is closed-form. Eigenspinors come from the null space of
//! the real 8x8 operator at each root, then are checked for the rotor
//! structure: `psi+ e3 reverse(psi+)` is a multiple of a unit vector.

use super::{coords3, residual, Band, EigenSolution, ModelParams};
use crate::algebra::{pseudoscalar, spatial_inversion, Multivector, Signature};
use crate::error::{Error, Result};
use crate::spinor::{
    column_to_spinor_cl31, even_odd_split, spinor_to_column_cl31, Complex, Spinor, SpinorAlgebra,
};

/// Roots closer than this (relative) are treated as coinciding.
pub const ROOT_SEPARATION: f64 = 1e-9;
/// Below this `E^2 (4U^2 + g1^2)` the quantization condition is indeterminate.
pub const QUANTIZATION_FLOOR: f64 = 1e-14;

fn unpack(params: &ModelParams) -> Result<(f64, f64, f64, f64, f64)> {
    match *params {
        ModelParams::Bilayer {
            kx,
            ky,
            u,
            gamma1,
            eta,
        } => Ok((kx, ky, u, gamma1, eta)),
        other => Err(Error::InvalidParams(format!(
            "expected bilayer params, got {}",
            other.name()
        ))),
    }
}

pub fn h_bilayer(psi: &Spinor, params: &ModelParams) -> Result<Spinor> {
    let (kx, ky, u, gamma1, eta) = unpack(params)?;
    if psi.algebra() != SpinorAlgebra::Cl31 {
        return Err(Error::WrongSignature {
            expected: Signature::CL31,
            found: psi.algebra().signature(),
        });
    }
    let sig = Signature::CL31;
    let p = psi.value();
    let k = Multivector::vector(sig, &[kx, ky]);
    let e2 = Multivector::basis(sig, &[2]);
    let e3 = Multivector::basis(sig, &[3]);
    let ie3 = pseudoscalar(sig).geometric(&e3);
    let odd2 = p - spatial_inversion(p)?;
    let out = k.sandwich(p, &ie3) * eta - e2.sandwich(&odd2, &e3) * (gamma1 / 2.0)
        + e3.sandwich(p, &e3) * (eta * u);
    Spinor::new(out)
}

/// Real 8x8 matrix of `h_bilayer` on spinor coefficients.
pub fn bilayer_operator(params: &ModelParams) -> Result<Vec<Vec<f64>>> {
    unpack(params)?;
    let alg = SpinorAlgebra::Cl31;
    let n = alg.dim();
    let mut m = vec![vec![0.0; n]; n];
    for j in 0..n {
        let mut unit = vec![0.0; n];
        unit[j] = 1.0;
        let h = h_bilayer(&Spinor::from_coeffs(alg, &unit)?, params)?.coeffs();
        for (i, row) in m.iter_mut().enumerate() {
            row[j] = h[i];
        }
    }
    Ok(m)
}

/// `E = +-sqrt(k^2 + U^2 + g1^2/2 +- sqrt(g1^4 + 4k^2(4U^2 + g1^2))/2)`, ascending.
pub fn bilayer_spectrum(k: f64, u: f64, gamma1: f64) -> [f64; 4] {
    let (k2, u2, g2) = (k * k, u * u, gamma1 * gamma1);
    let s = k2 + u2 + g2 / 2.0;
    let half_root = 0.5 * (g2 * g2 + 4.0 * k2 * (4.0 * u2 + g2)).sqrt();
    let big = s + half_root;
    // s^2 - half_root^2 = (k^2 - U^2)^2 + U^2 g1^2, which avoids cancellation
    let small = if big > 0.0 {
        ((k2 - u2).powi(2) + u2 * g2) / big
    } else {
        0.0
    };
    debug_assert!(small >= 0.0 && big >= 0.0);
    let (hi, lo) = (big.sqrt(), small.sqrt());
    [-hi, -lo, lo, hi]
}

/// `a^2 - 1` with `a^2 = ((E^2 - k^2 + U^2)^2 + U^2 g1^2) / (E^2 (4U^2 + g1^2))`.
pub fn bilayer_quantization_residual(e: f64, k: f64, u: f64, gamma1: f64) -> Result<f64> {
    let den = e * e * (4.0 * u * u + gamma1 * gamma1);
    if den <= QUANTIZATION_FLOOR {
        return Err(Error::Degenerate {
            reason: "quantization condition indeterminate (E≈0 or U=γ₁=0)".into(),
            energies: vec![e],
        });
    }
    let num = (e * e - k * k + u * u).powi(2) + u * u * gamma1 * gamma1;
    Ok(num / den - 1.0)
}

/// Basis of the null space of `a` assuming its rank is `a.len() - nullity`.
fn null_space(mut a: Vec<Vec<f64>>, nullity: usize) -> Vec<Vec<f64>> {
    let n = a.len();
    let rank = n - nullity;
    let mut perm: Vec<usize> = (0..n).collect();
    for step in 0..rank {
        let (mut pr, mut pc, mut best) = (step, step, -1.0);
        for (r, row) in a.iter().enumerate().skip(step) {
            for (c, v) in row.iter().enumerate().skip(step) {
                if v.abs() > best {
                    (pr, pc, best) = (r, c, v.abs());
                }
            }
        }
        a.swap(step, pr);
        for row in a.iter_mut() {
            row.swap(step, pc);
        }
        perm.swap(step, pc);
        let pivot = a[step][step];
        let pivot_row = a[step].clone();
        for (r, row) in a.iter_mut().enumerate() {
            if r != step {
                let f = row[step] / pivot;
                for (x, p) in row.iter_mut().zip(&pivot_row) {
                    *x -= f * p;
                }
            }
        }
    }
    (rank..n)
        .map(|free| {
            let mut x = vec![0.0; n];
            x[free] = 1.0;
            for i in 0..rank {
                x[i] = -a[i][free] / a[i][i];
            }
            let mut out = vec![0.0; n];
            for (slot, &col) in perm.iter().enumerate() {
                out[col] = x[slot];
            }
            out
        })
        .collect()
}

/// Fixes the complex phase so the first non-negligible column entry is real
/// and positive, then normalizes the module square to one.
fn canonical(psi: &Spinor) -> Result<Spinor> {
    let col = spinor_to_column_cl31(psi)?;
    let big = col.entries().iter().map(|z| z.abs()).fold(0.0, f64::max);
    let lead = col
        .entries()
        .iter()
        .find(|z| z.abs() > 1e-8 * big)
        .copied()
        .unwrap_or(Complex::ONE);
    let phase = lead.conj().scale(1.0 / lead.abs());
    let fixed = column_to_spinor_cl31(&col.scale(phase))?;
    Ok(fixed.scale(1.0 / fixed.module_square().sqrt()))
}

/// Four solutions. Coinciding or zero-energy roots are flagged without a spinor.
pub fn solve_bilayer(params: &ModelParams) -> Result<Vec<EigenSolution>> {
    let (kx, ky, u, gamma1, _) = unpack(params)?;
    let k = kx.hypot(ky);
    let roots = bilayer_spectrum(k, u, gamma1);
    let op = bilayer_operator(params)?;
    let sig = Signature::CL31;
    let e3 = Multivector::basis(sig, &[3]);
    let i4 = pseudoscalar(sig);

    let mut sols = Vec::with_capacity(4);
    for (idx, &energy) in roots.iter().enumerate() {
        let clash = roots.iter().enumerate().any(|(j, &other)| {
            j != idx && (other - energy).abs() <= ROOT_SEPARATION * (1.0 + energy.abs())
        });
        if clash || bilayer_quantization_residual(energy, k, u, gamma1).is_err() {
            sols.push(EigenSolution::flagged(energy));
            continue;
        }
        let mut shifted = op.clone();
        for (i, row) in shifted.iter_mut().enumerate() {
            row[i] -= energy;
        }
        let null = null_space(shifted, 2);
        let psi = canonical(&Spinor::from_coeffs(SpinorAlgebra::Cl31, &null[0])?)?;
        let res = residual(params, &psi, energy)?;

        let (plus, minus) = even_odd_split(&psi)?;
        let (plus, minus) = (plus.into_value(), minus.into_value());
        let plus_sq = plus.geometric(&plus.reverse());
        let weight = plus_sq.scalar_part();
        let carrier = i4.geometric(&minus);
        let carrier_sq = carrier.geometric(&carrier.reverse());
        let scalar_only =
            |m: &Multivector| (m - Multivector::scalar(sig, m.scalar_part())).max_abs();

        let mut checks = vec![
            (res, "residual"),
            (scalar_only(&plus_sq), "psi+ reverse(psi+) not scalar"),
            (
                scalar_only(&carrier_sq),
                "I psi- reverse(I psi-) not scalar",
            ),
        ];
        // psi+ vanishes when the layers decouple from the even sector (k = U = 0)
        let target = (weight > 1e-12).then(|| plus.sandwich(&e3, &plus.reverse()) * (1.0 / weight));
        if let Some(t) = &target {
            checks.push((
                (t.magnitude() - 1.0).abs(),
                "psi+ e3 reverse(psi+) not a unit vector",
            ));
            checks.push(((t.grade_part(1) - t).max_abs(), "target not a vector"));
        }
        if let Some((v, what)) = checks.iter().find(|(v, _)| v.is_nan() || *v > 1e-10) {
            return Err(Error::Validation(format!("{what} ({v:e}) at E = {energy}")));
        }
        sols.push(EigenSolution {
            energy,
            band: Band::of(energy),
            spinor: Some(psi),
            target: target.as_ref().map(coords3),
            average: None,
            residual: res,
            degenerate: false,
        });
    }
    Ok(sols)
}
