//! Clifford algebra Cl(p,q) for small `p + q`.
//!
//! Multivectors are stored densely: one coefficient per basis blade, indexed
//! by the blade's bitmask. With `p + q <= 4` in practice the 16-entry array is
//! cheaper than any sparse map.

mod blade;
mod multivector;
mod signature;
mod text;

pub use blade::BasisBlade;
pub use multivector::{
    dagger, geometric_product, grade_project, inner_product, outer_product, pseudoscalar, reverse,
    spatial_inversion, versor_inverse, Multivector,
};
pub use signature::Signature;

/// Componentwise tolerance for unit-magnitude quantities.
pub const TOL: f64 = 1e-12;
