//! Columns versus GA spinors, and matrix actions versus GA actions.

use rotor_eigen::spinor::{
    ga_action_cl31, pauli_action_cl30, pauli_matrix, spinor_to_column, GaAction, Spinor,
    SpinorAlgebra,
};

fn main() -> rotor_eigen::Result<()> {
    let psi = Spinor::from_coeffs(SpinorAlgebra::Cl30, &[0.5, 0.1, -0.3, 0.8])?;
    let col = spinor_to_column(&psi)?;
    println!("psi = {}", psi.value());
    println!("|psi> = {:?}", col.entries());
    for i in 1..=3 {
        let ga = spinor_to_column(&pauli_action_cl30(i, &psi)?)?;
        let mat = pauli_matrix(i)?.apply(&col)?;
        println!("sigma_{i}: |GA - matrix| = {:e}", ga.max_diff(&mat));
    }

    let phi = Spinor::from_coeffs(
        SpinorAlgebra::Cl31,
        &[0.2, -0.4, 0.1, 0.7, 0.3, 0.0, -0.5, 0.9],
    )?;
    let col = spinor_to_column(&phi)?;
    let worst = GaAction::all()
        .into_iter()
        .map(|a| {
            let ga = spinor_to_column(&ga_action_cl31(a, &phi)?)?;
            Ok(ga.max_diff(&a.matrix()?.apply(&col)?))
        })
        .collect::<rotor_eigen::Result<Vec<f64>>>()?
        .into_iter()
        .fold(0.0, f64::max);
    println!("Cl(3,1): worst mismatch over all 4x4 generators = {worst:e}");
    Ok(())
}
