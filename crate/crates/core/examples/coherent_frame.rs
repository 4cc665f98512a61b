//! The d^2 discrete coherent states: tightness, Fourier rotation and the
//! distance to their continuous counterparts.

use finosc::phasespace::{coherent_frame, PhasePoint};
use finosc::report::table1;
use finosc::{Lattice, Operator};

fn main() -> finosc::Result<()> {
    let lat = Lattice::new(21)?;
    let frame = coherent_frame(lat);
    let tight = frame.frame_operator().frobenius_distance(&Operator::identity(lat));
    println!("||(1/d) sum |a,b><a,b| - I||_F = {tight:.2e}");
    println!("max |F |a,b> - |b,-a>|  = {:.2e}", frame.fourier_covariance_deviation(false));
    println!("max |F+ |a,b> - |-b,a>| = {:.2e}", frame.fourier_covariance_deviation(true));
    let p = PhasePoint::new(lat, 2, -1)?;
    let q = PhasePoint::new(lat, 3, 0)?;
    println!("<(2,-1)|(3,0)> = {:.6}", frame.overlap(p, q));
    println!();
    print!("{}", table1(lat)?.to_csv());
    Ok(())
}
