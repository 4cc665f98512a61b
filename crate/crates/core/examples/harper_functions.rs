//! Harper functions: eigenvectors of the finite-difference oscillator.

use finosc::spectral::{eigen_residual, harper_basis, harper_hamiltonian};
use finosc::Lattice;

fn main() -> finosc::Result<()> {
    let lat = Lattice::new(21)?;
    let h = harper_hamiltonian(lat);
    let basis = harper_basis(lat)?;
    println!("Gram deviation {:.2e}", basis.gram_deviation());
    println!("max |F v_m - (-i)^m v_m| {:.2e}", basis.fourier_eigen_deviation());
    println!("eigen-residual {:.2e}", eigen_residual(&h.h, &basis));
    for (m, v) in basis.values().iter().enumerate() {
        let f = basis.vector(m);
        println!("m = {m:>2}  lambda = {v:>10.6}  v(0) = {:>9.6}", f.at(0).re);
    }
    Ok(())
}
