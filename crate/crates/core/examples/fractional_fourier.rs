//! Half-order fractional Fourier transforms of the test signals, against the
//! continuous transform sampled on the grid.

use finosc::frft::SignalSpec;
use finosc::report::{frft_run, Method};
use finosc::Lattice;

fn main() -> finosc::Result<()> {
    let lat = Lattice::new(21)?;
    let alpha = std::env::args().nth(1).and_then(|a| a.parse().ok()).unwrap_or(0.5);
    for spec in [SignalSpec::Gauss(10.0), SignalSpec::Rect] {
        let run = frft_run(lat, alpha, spec, Method::Both, true)?;
        for (kind, err) in run.errors().unwrap_or_default() {
            println!("{spec:<8} {kind:<6} max-abs error {err:.5}");
        }
    }
    Ok(())
}
