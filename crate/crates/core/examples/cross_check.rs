//! Rotor-method energies against the matrix oracle for each model.

use rotor_eigen::models::ModelParams;
use rotor_eigen::oracle::cross_check;

fn main() -> rotor_eigen::Result<()> {
    let models = [
        ModelParams::Monolayer { kx: 1.2, ky: -0.4 },
        ModelParams::Qw {
            kx: 0.7,
            ky: 0.2,
            alpha: 0.5,
        },
        ModelParams::Atoms {
            omega: 1.0,
            gamma: 0.3,
        },
        ModelParams::Bilayer {
            kx: 0.3,
            ky: 0.0,
            u: 0.2,
            gamma1: 0.4,
            eta: -1.0,
        },
    ];
    for m in &models {
        let r = cross_check(m)?;
        println!("{:9} pass={} max_delta={:e}", r.model, r.pass, r.max_delta);
    }
    Ok(())
}
