//! Geometric, outer and inner products in Cl(3,0) and Cl(3,1).

use rotor_eigen::algebra::{pseudoscalar, Multivector, Signature};

fn main() -> rotor_eigen::Result<()> {
    let sig = Signature::CL30;
    let a = Multivector::parse(sig, "e1 + 2e2")?;
    let b = Multivector::parse(sig, "3e1 - e3")?;
    println!("a       = {a}");
    println!("b       = {b}");
    println!("ab      = {}", a.geometric(&b));
    println!("a ^ b   = {}", a.wedge(&b));
    println!("a . b   = {}", a.inner(&b));
    println!("rev(ab) = {}", a.geometric(&b).reverse());

    let i = pseudoscalar(sig);
    println!("I^2 in Cl(3,0) = {}", i.geometric(&i));

    let sig = Signature::CL31;
    let e4 = Multivector::basis(sig, &[4]);
    let i = pseudoscalar(sig);
    println!("e4^2 in Cl(3,1) = {}", e4.geometric(&e4));
    println!("I^2 in Cl(3,1)  = {}", i.geometric(&i));
    Ok(())
}
