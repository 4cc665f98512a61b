//! Periodic Gaussians on the lattice and the finite ground state.
//!
//! `g_kappa(n sqrt(delta)) = sum_l exp(-(kappa pi / d)(l d + n)^2)` is a
//! Zak-type periodisation of `exp(-kappa x^2 / 2)`. It also has the frequency
//! form `(kappa d)^{-1/2} sum_l exp(2 pi i l n / d) exp(-pi l^2 / (kappa d))`,
//! which converges faster when `kappa d` is small.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fourier::dft;
use crate::lattice::{Lattice, Signal};

/// Default truncation tolerance for every series in this module.
pub const DEFAULT_TOL: f64 = 1e-18;

/// A sampled periodic Gaussian `g_kappa`.
#[derive(Clone, Debug, PartialEq)]
pub struct ThetaGaussian {
    lattice: Lattice,
    kappa: f64,
    amp: Vec<f64>,
    truncation: usize,
    tail_bound: f64,
}

impl ThetaGaussian {
    pub fn lattice(&self) -> Lattice {
        self.lattice
    }

    pub fn kappa(&self) -> f64 {
        self.kappa
    }

    /// Number of periodic images kept on each side.
    pub fn truncation(&self) -> usize {
        self.truncation
    }

    /// Bound on the discarded part of the series at any grid point.
    pub fn tail_bound(&self) -> f64 {
        self.tail_bound
    }

    /// Values in index order `-s..=s`.
    pub fn values(&self) -> &[f64] {
        &self.amp
    }

    /// `g_kappa(n sqrt(delta))`, periodic in `n`.
    pub fn at(&self, n: i64) -> f64 {
        self.amp[self.lattice.slot(n)]
    }

    pub fn to_signal(&self) -> Signal {
        Signal::from_real(self.lattice, &self.amp).expect("length is d")
    }
}

fn check_params(kappa: f64, tol: f64) -> Result<()> {
    if !(kappa > 0.0 && kappa.is_finite()) {
        return Err(Error::InvalidParameter {
            name: "kappa",
            reason: format!("must be positive and finite, got {kappa}"),
        });
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidParameter {
            name: "tol",
            reason: format!("must be positive, got {tol}"),
        });
    }
    Ok(())
}

/// Spatial series: returns the samples, the number of images `L` and a tail bound.
pub fn spatial_series(lat: Lattice, kappa: f64, tol: f64) -> Result<(Vec<f64>, usize, f64)> {
    check_params(kappa, tol)?;
    let d = lat.d() as f64;
    let s = lat.s() as f64;
    let c = kappa * PI / d;
    // The first omitted image at the worst grid point n = +-s.
    let omitted = |l: usize| (-c * ((l as f64 + 1.0) * d - s).powi(2)).exp();
    let mut l = 0;
    while omitted(l) >= tol {
        l += 1;
    }
    let q = (-kappa * PI * d).exp();
    let tail = 2.0 * omitted(l) / (1.0 - q);
    let li = l as i64;
    let di = lat.d() as i64;
    let amp = lat
        .indices()
        .map(|n| {
            // Smallest terms first.
            let mut acc = 0.0;
            for k in (1..=li).rev() {
                acc += (-c * ((k * di + n) as f64).powi(2)).exp();
                acc += (-c * ((-k * di + n) as f64).powi(2)).exp();
            }
            acc + (-c * (n as f64).powi(2)).exp()
        })
        .collect();
    Ok((amp, l, tail))
}

/// Frequency series: returns the samples, the number of frequencies `L` and a tail bound.
pub fn frequency_series(lat: Lattice, kappa: f64, tol: f64) -> Result<(Vec<f64>, usize, f64)> {
    check_params(kappa, tol)?;
    let d = lat.d() as f64;
    let c = PI / (kappa * d);
    let omitted = |l: usize| (-c * (l as f64 + 1.0).powi(2)).exp();
    let mut l = 0;
    while omitted(l) >= tol {
        l += 1;
    }
    let q = (-c * (2.0 * l as f64 + 3.0)).exp();
    let pref = 1.0 / (kappa * d).sqrt();
    let tail = pref * 2.0 * omitted(l) / (1.0 - q);
    let amp = lat
        .indices()
        .map(|n| {
            let mut acc = 0.0;
            for k in (1..=l).rev() {
                let kf = k as f64;
                acc += 2.0 * (2.0 * PI * kf * n as f64 / d).cos() * (-c * kf * kf).exp();
            }
            pref * (1.0 + acc)
        })
        .collect();
    Ok((amp, l, tail))
}

/// `g_kappa` sampled on the lattice, using whichever series decays faster.
pub fn theta_gaussian(lat: Lattice, kappa: f64, tol: f64) -> Result<ThetaGaussian> {
    let (amp, truncation, tail_bound) = if kappa * lat.d() as f64 >= 1.0 {
        spatial_series(lat, kappa, tol)?
    } else {
        frequency_series(lat, kappa, tol)?
    };
    Ok(ThetaGaussian {
        lattice: lat,
        kappa,
        amp,
        truncation,
        tail_bound,
    })
}

/// `theta_3(z, i t) = sum_a exp(-pi t a^2) exp(2 pi i a z)` for real `z` and `t > 0`.
pub fn jacobi_theta3(z: f64, tau_imag: f64, tol: f64) -> Result<f64> {
    if !(tau_imag > 0.0) {
        return Err(Error::InvalidParameter {
            name: "tau_imag",
            reason: format!("must be positive, got {tau_imag}"),
        });
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidParameter {
            name: "tol",
            reason: format!("must be positive, got {tol}"),
        });
    }
    let mut l = 0usize;
    while (-PI * tau_imag * ((l + 1) as f64).powi(2)).exp() >= tol {
        l += 1;
    }
    let mut acc = 0.0;
    for a in (1..=l).rev() {
        let af = a as f64;
        acc += 2.0 * (-PI * tau_imag * af * af).exp() * (2.0 * PI * af * z).cos();
    }
    Ok(1.0 + acc)
}

/// The normalised finite ground state `g = g_1 / N`.
#[derive(Clone, Debug, PartialEq)]
pub struct GroundState {
    lattice: Lattice,
    norm: f64,
    norm_series: f64,
    amp: Vec<f64>,
}

impl GroundState {
    pub fn lattice(&self) -> Lattice {
        self.lattice
    }

    /// `N = ||g_1||` by direct summation.
    pub fn norm(&self) -> f64 {
        self.norm
    }

    /// `N` from the double series `N^2 = sum_r exp(-pi r^2/d) sum_l exp(-pi (l d - r)^2 / d)`.
    pub fn norm_series(&self) -> f64 {
        self.norm_series
    }

    pub fn values(&self) -> &[f64] {
        &self.amp
    }

    /// `g(n sqrt(delta))`, periodic in `n`.
    #[inline]
    pub fn at(&self, n: i64) -> f64 {
        self.amp[self.lattice.slot(n)]
    }

    pub fn to_signal(&self) -> Signal {
        Signal::from_real(self.lattice, &self.amp).expect("length is d")
    }

    /// `g^2` as a signal.
    pub fn squared(&self) -> Signal {
        Signal::from_real_fn(self.lattice, |n| self.at(n).powi(2))
    }
}

fn norm_double_series(lat: Lattice, tol: f64) -> f64 {
    let d = lat.d() as f64;
    let g1 = theta_gaussian(lat, 1.0, tol).expect("kappa = 1 is valid");
    let mut r = 0i64;
    while (-PI * ((r + 1) as f64).powi(2) / d).exp() >= tol {
        r += 1;
    }
    // The inner sum over l is g_1 at index -r.
    let mut acc = 0.0;
    for k in (1..=r).rev() {
        let w = (-PI * (k as f64).powi(2) / d).exp();
        acc += w * (g1.at(-k) + g1.at(k));
    }
    acc += g1.at(0);
    acc.sqrt()
}

pub fn ground_state(lat: Lattice) -> GroundState {
    let g1 = theta_gaussian(lat, 1.0, DEFAULT_TOL).expect("kappa = 1 is valid");
    let norm = g1.values().iter().map(|x| x * x).sum::<f64>().sqrt();
    let norm_series = norm_double_series(lat, DEFAULT_TOL);
    GroundState {
        lattice: lat,
        norm,
        norm_series,
        amp: g1.values().iter().map(|x| x / norm).collect(),
    }
}

/// Largest residual of `g_1^2 = (2 g_2(0) - g_{1/2}(0)) g_2 - (g_2(0) - g_{1/2}(0)) g_{1/2}(2 .)`.
pub fn square_identity_residual(lat: Lattice) -> f64 {
    let g1 = theta_gaussian(lat, 1.0, DEFAULT_TOL).expect("valid");
    let g2 = theta_gaussian(lat, 2.0, DEFAULT_TOL).expect("valid");
    let gh = theta_gaussian(lat, 0.5, DEFAULT_TOL).expect("valid");
    let a = 2.0 * g2.at(0) - gh.at(0);
    let b = g2.at(0) - gh.at(0);
    lat.indices()
        .map(|n| (g1.at(n).powi(2) - (a * g2.at(n) - b * gh.at(2 * n))).abs())
        .fold(0.0, f64::max)
}

/// Largest residual of `d^{-1/2} sum_a g(n-a) g(m-a) = F[g^2](n-m)` over all pairs.
pub fn autocorrelation_identity_residual(ground: &GroundState) -> f64 {
    let lat = ground.lattice();
    let fg2 = dft(&ground.squared(), false);
    let scale = 1.0 / (lat.d() as f64).sqrt();
    let mut worst: f64 = 0.0;
    for n in lat.indices() {
        for m in lat.indices() {
            let lhs: f64 = lat.indices().map(|a| ground.at(n - a) * ground.at(m - a)).sum::<f64>() * scale;
            worst = worst.max((Complex64::new(lhs, 0.0) - fg2.at(n - m)).norm());
        }
    }
    worst
}

/// Largest residual of `F[g_kappa] = kappa^{-1/2} g_{1/kappa}`.
pub fn fourier_gauss_residual(lat: Lattice, kappa: f64) -> Result<f64> {
    let g = theta_gaussian(lat, kappa, DEFAULT_TOL)?;
    let gi = theta_gaussian(lat, 1.0 / kappa, DEFAULT_TOL)?;
    let fg = dft(&g.to_signal(), false);
    let c = kappa.powf(-0.5);
    Ok(lat
        .indices()
        .map(|n| (fg.at(n) - Complex64::new(c * gi.at(n), 0.0)).norm())
        .fold(0.0, f64::max))
}
