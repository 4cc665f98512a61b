//! Discrete fractional Fourier transforms built on an oscillator eigenbasis.
//!
//! For an ordered basis `b_m` with `F b_m = (-i)^m b_m`, the transform of order
//! `alpha` has kernel `K(u, v) = sum_m exp(-i pi m alpha / 2) b_m(u) b_m(v)`.

use std::collections::hash_map::Entry;
use std::collections::HashMap;
use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::lattice::{Lattice, Operator, Signal};
use crate::reference::{GaussianSignal, RealLineSignal, RectSignal};
use crate::spectral::{BasisKind, SpectralBasis};
use crate::thetagauss::{theta_gaussian, DEFAULT_TOL};

#[derive(Clone, Debug)]
pub struct FrftKernel {
    kind: BasisKind,
    alpha: f64,
    k: Operator,
}

impl FrftKernel {
    pub fn kind(&self) -> BasisKind {
        self.kind
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn matrix(&self) -> &Operator {
        &self.k
    }

    /// `||K K+ - I||_F`.
    pub fn unitarity_deviation(&self) -> f64 {
        let lat = self.k.lattice();
        self.k
            .matmul(&self.k.adjoint())
            .expect("same lattice")
            .frobenius_distance(&Operator::identity(lat))
    }

    /// `max |K(u, v) - K(v, u)|`.
    pub fn symmetry_deviation(&self) -> f64 {
        self.k.max_abs_diff(&self.k.transpose())
    }
}

pub fn frft_kernel(basis: &SpectralBasis, alpha: f64) -> Result<FrftKernel> {
    let lat = basis.lattice();
    let d = lat.d();
    if basis.len() != d {
        return Err(Error::IncompleteBasis {
            expected: d,
            got: basis.len(),
        });
    }
    let mut k = Operator::zeros(lat);
    for (m, (v, label)) in basis.vectors().iter().zip(basis.labels()).enumerate() {
        if label.fourier_index != m || label.alternations != m {
            return Err(Error::Ordering {
                m,
                reason: "basis labels are inconsistent".into(),
            });
        }
        // Vectors are real, so |v><v| equals v v^T.
        k.add_projector(v, Complex64::from_polar(1.0, -PI * m as f64 * alpha / 2.0));
    }
    Ok(FrftKernel {
        kind: basis.kind(),
        alpha,
        k,
    })
}

pub fn apply_frft(kernel: &FrftKernel, phi: &Signal) -> Result<Signal> {
    kernel.k.apply(phi)
}

/// `1` on `{-sqrt(delta), 0, sqrt(delta)}`, `0` elsewhere.
pub fn rectangular_signal(lat: Lattice) -> Signal {
    Signal::from_real_fn(lat, |n| if n.abs() <= 1 { 1.0 } else { 0.0 })
}

/// Kernels memoised by basis kind and order.
#[derive(Default)]
pub struct KernelCache {
    kernels: HashMap<(BasisKind, usize, u64), FrftKernel>,
}

impl KernelCache {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, basis: &SpectralBasis, alpha: f64) -> Result<&FrftKernel> {
        let key = (basis.kind(), basis.lattice().d(), alpha.to_bits());
        Ok(match self.kernels.entry(key) {
            Entry::Occupied(e) => e.into_mut(),
            Entry::Vacant(e) => e.insert(frft_kernel(basis, alpha)?),
        })
    }

    pub fn len(&self) -> usize {
        self.kernels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.kernels.is_empty()
    }
}

/// A test input: the rectangle or a Gaussian of width parameter `kappa`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum SignalSpec {
    Rect,
    Gauss(f64),
}

impl SignalSpec {
    /// The discrete input: [`rectangular_signal`] or the periodic Gaussian `g_kappa`.
    pub fn discrete(&self, lat: Lattice) -> Result<Signal> {
        match *self {
            SignalSpec::Rect => Ok(rectangular_signal(lat)),
            SignalSpec::Gauss(kappa) => Ok(theta_gaussian(lat, kappa, DEFAULT_TOL)?.to_signal()),
        }
    }

    /// The continuous counterpart on the line.
    pub fn continuous(&self, lat: Lattice) -> Box<dyn RealLineSignal> {
        match *self {
            SignalSpec::Rect => Box::new(RectSignal {
                half_width: lat.spacing(),
            }),
            SignalSpec::Gauss(kappa) => Box::new(GaussianSignal { kappa }),
        }
    }
}

impl FromStr for SignalSpec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "rect" {
            return Ok(SignalSpec::Rect);
        }
        if let Some(k) = s.strip_prefix("gauss:") {
            if let Ok(kappa) = k.parse::<f64>() {
                if kappa > 0.0 && kappa.is_finite() {
                    return Ok(SignalSpec::Gauss(kappa));
                }
            }
        }
        Err(Error::UnknownSignal(s.to_string()))
    }
}

impl fmt::Display for SignalSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SignalSpec::Rect => f.write_str("rect"),
            SignalSpec::Gauss(k) => write!(f, "gauss:{k}"),
        }
    }
}
