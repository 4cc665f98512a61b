//! The finite quantum oscillator from coherent-state frame quantization.
//!
//! On the grid `{n sqrt(2 pi / d) : |n| <= s}`, `d = 2s + 1`, the `d^2`
//! displaced periodic Gaussians form a tight frame. Quantizing the energy
//! `(alpha^2 + beta^2)/2` against that frame gives a Fourier-invariant
//! Hamiltonian whose eigenvectors approximate the Hermite-Gaussians. The crate
//! builds that Hamiltonian, the Harper finite-difference oscillator, both
//! eigenbases, and the discrete fractional Fourier transforms they define.
//!
//! ```
//! use finosc::{lattice::Lattice, quantize::frame_hamiltonian};
//!
//! let lat = Lattice::new(21).unwrap();
//! let h = frame_hamiltonian(lat);
//! let lowest = h.a_f_eigenvalues().unwrap()[0];
//! assert!((lowest - 1.0).abs() < 1e-4);
//! ```

pub mod error;
pub mod fourier;
pub mod frft;
pub mod lattice;
pub mod phasespace;
pub mod quantize;
pub mod reference;
pub mod report;
pub mod spectral;
pub mod thetagauss;
pub mod verify;

pub use error::{Error, Result};
pub use lattice::{Lattice, Operator, Signal};
