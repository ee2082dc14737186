//! Monolayer graphene: E = +-|k| with pseudospin along +-k.

use rotor_eigen::models::ModelParams;

fn main() -> rotor_eigen::Result<()> {
    let model = ModelParams::Monolayer { kx: 0.6, ky: 0.8 };
    for s in model.solve()? {
        println!(
            "E = {:+.3}  psi = {}  <P> = {:?}",
            s.energy,
            s.spinor.as_ref().expect("nondegenerate").value(),
            s.average.expect("Cl(3,0) model")
        );
    }
    Ok(())
}
