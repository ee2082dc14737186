//! Biased bilayer graphene: four bands and the shifted conduction-band minimum.

use rotor_eigen::models::{bilayer_spectrum, ModelParams};

fn main() -> rotor_eigen::Result<()> {
    let (u, gamma1) = (0.3, 0.4);
    let model = ModelParams::Bilayer {
        kx: 0.2,
        ky: 0.1,
        u,
        gamma1,
        eta: 1.0,
    };
    for s in model.solve()? {
        println!("E = {:+.6}  residual = {:e}", s.energy, s.residual);
    }

    let k_star =
        (2.0 * u * u * (2.0 * u * u + gamma1 * gamma1) / (4.0 * u * u + gamma1 * gamma1)).sqrt();
    println!(
        "conduction minimum at k* = {k_star:.6}, E = {:.6}",
        bilayer_spectrum(k_star, u, gamma1)[2]
    );
    println!(
        "at k = 0 the gap edge is E = {:.6}",
        bilayer_spectrum(0.0, u, gamma1)[2]
    );
    Ok(())
}
