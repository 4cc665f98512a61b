//! The quantized raising operator and the states it generates from the ground state.

use finosc::phasespace::coherent_frame;
use finosc::quantize::{ladder_states, raising_operator};
use finosc::Lattice;

fn main() -> finosc::Result<()> {
    let lat = Lattice::new(21)?;
    let frame = coherent_frame(lat);
    let a_plus = raising_operator(&frame);
    println!("max |Im a+| = {:.2e}", a_plus.max_imag());
    let states = ladder_states(&frame, 8)?;
    for (n, s) in states.iter().enumerate() {
        println!("n = {n}  ||f_n|| = {:.10}", s.norm());
    }
    Ok(())
}
