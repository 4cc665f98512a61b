//! How closely the frame, Harper, Mehta and ladder bases follow the
//! sampled Hermite-Gaussians.

use finosc::report::compare;
use finosc::Lattice;

fn main() -> finosc::Result<()> {
    let lat = Lattice::new(21)?;
    let t = compare(lat, false)?;
    let f = t.column("delta_f").unwrap_or_default();
    let h = t.column("delta_h").unwrap_or_default();
    let m = t.column("delta_m").unwrap_or_default();
    let r = t.column("delta_r").unwrap_or_default();
    println!("{:>3} {:>12} {:>12} {:>12} {:>12}", "m", "frame", "harper", "mehta", "ladder");
    for i in 0..f.len() {
        println!("{i:>3} {:>12.4e} {:>12.4e} {:>12.4e} {:>12.4e}", f[i], h[i], m[i], r[i]);
    }
    let wins = f.iter().zip(&h).filter(|(a, b)| a < b).count();
    println!("frame closer than Harper for {wins} of {}", f.len());
    Ok(())
}
