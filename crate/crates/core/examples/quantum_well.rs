//! Rashba quantum well: two parabolas k^2/2 +- alpha k, spin perpendicular to k.

use rotor_eigen::models::ModelParams;

fn main() -> rotor_eigen::Result<()> {
    let model = ModelParams::Qw {
        kx: 0.0,
        ky: 1.0,
        alpha: 0.1,
    };
    for s in model.solve()? {
        println!(
            "E = {:.3}  <s> = {:?}",
            s.energy,
            s.average.expect("Cl(3,0) model")
        );
    }
    Ok(())
}
