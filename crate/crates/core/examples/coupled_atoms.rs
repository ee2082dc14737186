//! Two dipole-coupled two-level atoms in Cl(3,1).

use rotor_eigen::models::ModelParams;

fn main() -> rotor_eigen::Result<()> {
    let model = ModelParams::Atoms {
        omega: 3.0,
        gamma: 4.0,
    };
    for s in model.solve()? {
        println!(
            "E = {:+}  target = {:?}  psi = {}",
            s.energy,
            s.target.expect("nondegenerate"),
            s.spinor.as_ref().expect("nondegenerate").value()
        );
    }
    Ok(())
}
