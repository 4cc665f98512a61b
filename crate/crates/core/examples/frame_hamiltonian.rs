//! The Fourier-invariant Hamiltonian obtained by quantizing (a^2 + b^2)/2.

use std::f64::consts::PI;

use finosc::fourier::dft_operator;
use finosc::quantize::{frame_basis, frame_hamiltonian, trace_law, trace_ratio, wielandt_hoffman_gap};
use finosc::Lattice;

fn main() -> finosc::Result<()> {
    let d = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(21);
    let lat = Lattice::new(d)?;
    let fh = frame_hamiltonian(lat);
    println!("tau_0..tau_3 = {:?}", &fh.tau()[..4]);
    println!("trace H_d = {:.12} (law {:.12})", fh.trace(), trace_law(lat));
    println!("trace ratio = {:.6} (limit pi/3 = {:.6})", trace_ratio(lat), PI / 3.0);
    let comm = fh.h().commutator(&dft_operator(lat, false))?.max_abs();
    println!("max |[H_d, F]| = {comm:.2e}");
    let (lhs, rhs) = wielandt_hoffman_gap(&fh)?;
    println!("(1/d) sum |n - lambda_n| = {lhs:.4} <= {rhs:.4}");
    let basis = frame_basis(lat)?;
    println!("{:>3} {:>14} {:>5} {:>6}", "m", "A_f eigenvalue", "alt", "parity");
    for (m, (v, l)) in basis.values().iter().zip(basis.labels()).enumerate() {
        println!("{m:>3} {v:>14.8} {:>5} {:>6}", l.alternations, l.parity.name());
    }
    Ok(())
}
