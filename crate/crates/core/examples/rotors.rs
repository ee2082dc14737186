//! Rotors from two vectors, from an exponential and by composition.

use std::f64::consts::FRAC_PI_2;

use rotor_eigen::algebra::{Multivector, Signature};
use rotor_eigen::rotor::{compose, is_rotor, rotor_exp, rotor_from_vectors};

fn main() -> rotor_eigen::Result<()> {
    let sig = Signature::CL30;
    let e = |i: usize| Multivector::basis(sig, &[i]);

    let r = rotor_from_vectors(&e(3), &e(1))?;
    println!("R taking e3 to e1: {}", r.as_multivector());
    println!("R e3 R~ = {}", r.rotate(&e(3)));

    let q = rotor_exp(&Multivector::basis(sig, &[1, 2]), FRAC_PI_2)?;
    println!("exp quarter turn in e12: {}", q.as_multivector());
    println!("rotates e1 to {}", q.rotate(&e(1)));

    let both = compose(&q, &r);
    println!("composite rotor is a rotor: {}", is_rotor(&both, 1e-12));
    println!(
        "composite sends e3 to {}",
        both.sandwich(&e(3), &both.reverse())
    );
    Ok(())
}
