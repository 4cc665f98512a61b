//! Periodic Gaussians on the lattice and the normalised ground state.

use finosc::thetagauss::{fourier_gauss_residual, ground_state, theta_gaussian, DEFAULT_TOL};
use finosc::Lattice;

fn main() -> finosc::Result<()> {
    let lat = Lattice::new(21)?;
    let g1 = theta_gaussian(lat, 1.0, DEFAULT_TOL)?;
    println!("{:>4} {:>22} {:>22}", "n", "g_1(n)", "exp(-x^2/2)");
    for n in lat.indices() {
        let x = lat.point(n);
        println!("{n:>4} {:>22.15e} {:>22.15e}", g1.at(n), (-0.5 * x * x).exp());
    }
    let g = ground_state(lat);
    println!("norm N = {:.15}, (d/2)^(1/4) = {:.15}", g.norm(), (lat.d() as f64 / 2.0).powf(0.25));
    for kappa in [0.25, 1.0, 10.0] {
        println!("F g_k = k^(-1/2) g_(1/k) residual at k = {kappa}: {:.2e}", fourier_gauss_residual(lat, kappa)?);
    }
    Ok(())
}
