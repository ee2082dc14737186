//! Determinant and eigenvalues of a linear map without matrices.

use rotor_eigen::algebra::{Multivector, Signature};
use rotor_eigen::outermorphism::{
    apply_outermorphism, determinant, secular_eigenvalues, VectorMap,
};

fn main() -> rotor_eigen::Result<()> {
    let sig = Signature::CL30;
    let f = VectorMap::from_matrix(
        sig,
        &[
            vec![2.0, 1.0, 0.0],
            vec![1.0, 2.0, 0.0],
            vec![0.0, 0.0, 3.0],
        ],
    )?;
    let e12 = Multivector::basis(sig, &[1, 2]);
    println!("F(e12) = {}", apply_outermorphism(&f, &e12)?);
    println!("det F = F(I) I^-1 = {}", determinant(&f));
    println!(
        "eigenvalues from the secular cubic: {:?}",
        secular_eigenvalues(&f)?
    );
    Ok(())
}
