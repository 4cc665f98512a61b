//! Writes the spectrum as CSV and SVG into a directory (default: the system temp dir).

use std::path::PathBuf;

use finosc::quantize::frame_basis;
use finosc::report::{spectrum, write_atomic};
use finosc::Lattice;

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let dir = std::env::args().nth(1).map(PathBuf::from).unwrap_or_else(std::env::temp_dir);
    let table = spectrum(&frame_basis(Lattice::new(21)?)?);
    let csv = dir.join("frame_spectrum.csv");
    let svg = dir.join("frame_spectrum.svg");
    write_atomic(&csv, &table.to_csv())?;
    write_atomic(&svg, &table.plot("frame spectrum", "m", &["eigenvalue"], false)?.to_svg())?;
    println!("wrote {} and {}", csv.display(), svg.display());
    Ok(())
}
