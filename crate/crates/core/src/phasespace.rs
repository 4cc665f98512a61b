//! Position and momentum, displacement operators and the coherent-state frame.

use num_complex::Complex64;

use crate::error::Result;
use crate::fourier::{dft, dft_operator};
use crate::lattice::{Lattice, Operator, Signal};
use crate::thetagauss::{ground_state, GroundState};

/// A point `(alpha, beta) = (a sqrt(delta), b sqrt(delta))` of the finite phase space.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PhasePoint {
    pub a_idx: i64,
    pub b_idx: i64,
    pub alpha: f64,
    pub beta: f64,
}

impl PhasePoint {
    pub fn new(lat: Lattice, a_idx: i64, b_idx: i64) -> Result<Self> {
        lat.check_index(a_idx)?;
        lat.check_index(b_idx)?;
        Ok(Self {
            a_idx,
            b_idx,
            alpha: lat.point(a_idx),
            beta: lat.point(b_idx),
        })
    }

    /// All `d^2` points in row-major order over `(a_idx, b_idx)`.
    pub fn all(lat: Lattice) -> impl Iterator<Item = PhasePoint> {
        lat.indices().flat_map(move |a| {
            lat.indices()
                .map(move |b| PhasePoint::new(lat, a, b).expect("indices are in range"))
        })
    }
}

/// `Q = sum_n n sqrt(delta) |e_n><e_n|`.
pub fn position_operator(lat: Lattice) -> Operator {
    Operator::diagonal(lat, |n| Complex64::new(lat.point(n), 0.0))
}

/// `P = F+ Q F`.
pub fn momentum_operator(lat: Lattice) -> Operator {
    let f = dft_operator(lat, false);
    f.adjoint()
        .matmul(&position_operator(lat))
        .and_then(|x| x.matmul(&f))
        .expect("same lattice")
}

/// `exp(-i t P) = F+ exp(-i t Q) F`.
pub fn momentum_exponential(lat: Lattice, t: f64) -> Operator {
    let f = dft_operator(lat, false);
    let phase = Operator::diagonal(lat, |n| Complex64::from_polar(1.0, -t * lat.point(n)));
    f.adjoint()
        .matmul(&phase)
        .and_then(|x| x.matmul(&f))
        .expect("same lattice")
}

/// `D(alpha, beta)` for arbitrary integer indices, without reducing them into range.
///
/// `(D phi)(n) = exp(-i a b delta / 2) exp(i b delta n) phi(n - a)`.
pub fn displacement_unreduced(lat: Lattice, a_idx: i64, b_idx: i64) -> Operator {
    let delta = lat.delta();
    let mut out = Operator::zeros(lat);
    let base = -0.5 * (a_idx as f64) * (b_idx as f64) * delta;
    for n in lat.indices() {
        let phase = base + (b_idx as f64) * delta * n as f64;
        out.set(n, n - a_idx, Complex64::from_polar(1.0, phase));
    }
    out
}

pub fn displacement(lat: Lattice, p: PhasePoint) -> Operator {
    displacement_unreduced(lat, p.a_idx, p.b_idx)
}

/// `|alpha, beta>_d` sampled directly from the ground state.
pub fn coherent_state(ground: &GroundState, p: PhasePoint) -> Signal {
    let lat = ground.lattice();
    let delta = lat.delta();
    let base = -0.5 * (p.a_idx * p.b_idx) as f64 * delta;
    Signal::from_fn(lat, |n| {
        let phase = base + (p.b_idx * n) as f64 * delta;
        Complex64::from_polar(ground.at(n - p.a_idx), phase)
    })
}

/// The `d^2` states `D(alpha, beta) g`.
#[derive(Clone, Debug)]
pub struct CoherentFrame {
    lattice: Lattice,
    ground: GroundState,
    states: Vec<Signal>,
}

pub fn coherent_frame(lat: Lattice) -> CoherentFrame {
    let ground = ground_state(lat);
    let states = PhasePoint::all(lat).map(|p| coherent_state(&ground, p)).collect();
    CoherentFrame {
        lattice: lat,
        ground,
        states,
    }
}

impl CoherentFrame {
    pub fn lattice(&self) -> Lattice {
        self.lattice
    }

    pub fn ground(&self) -> &GroundState {
        &self.ground
    }

    fn position(&self, p: PhasePoint) -> usize {
        self.lattice.slot(p.a_idx) * self.lattice.d() + self.lattice.slot(p.b_idx)
    }

    pub fn state(&self, p: PhasePoint) -> &Signal {
        &self.states[self.position(p)]
    }

    /// Points and states in row-major order over `(a_idx, b_idx)`.
    pub fn iter(&self) -> impl Iterator<Item = (PhasePoint, &Signal)> {
        PhasePoint::all(self.lattice).zip(self.states.iter())
    }

    /// `(1/d) sum_{alpha, beta} w(alpha, beta) |alpha, beta><alpha, beta|`.
    pub fn weighted_sum(&self, w: impl Fn(PhasePoint) -> Complex64) -> Operator {
        let mut out = Operator::zeros(self.lattice);
        let scale = 1.0 / self.lattice.d() as f64;
        for (p, v) in self.iter() {
            out.add_projector(v, w(p) * scale);
        }
        out
    }

    /// `(1/d) sum |alpha, beta><alpha, beta|`, which equals the identity.
    pub fn frame_operator(&self) -> Operator {
        self.weighted_sum(|_| Complex64::new(1.0, 0.0))
    }

    /// `(1/d) sum |<alpha, beta | phi>|^2`.
    pub fn frame_energy(&self, phi: &Signal) -> Result<f64> {
        let mut acc = 0.0;
        for v in &self.states {
            acc += v.inner(phi)?.norm_sqr();
        }
        Ok(acc / self.lattice.d() as f64)
    }

    /// `<p1 | p2>` from the closed sum over the grid.
    pub fn overlap(&self, p1: PhasePoint, p2: PhasePoint) -> Complex64 {
        let lat = self.lattice;
        let delta = lat.delta();
        let pre = Complex64::from_polar(
            1.0,
            0.5 * ((p1.a_idx * p1.b_idx) as f64 - (p2.a_idx * p2.b_idx) as f64) * delta,
        );
        let sum: Complex64 = lat
            .indices()
            .map(|n| {
                let amp = self.ground.at(n - p1.a_idx) * self.ground.at(n - p2.a_idx);
                Complex64::from_polar(amp, ((p2.b_idx - p1.b_idx) * n) as f64 * delta)
            })
            .sum();
        pre * sum
    }

    /// Largest deviation of a transformed frame state from the frame state at
    /// the rotated point, over all states.
    ///
    /// `F |alpha, beta> = |beta, -alpha>` and `F+ |alpha, beta> = |-beta, alpha>`;
    /// `inverse` selects which of the two is measured.
    pub fn fourier_covariance_deviation(&self, inverse: bool) -> f64 {
        self.rotation_deviation(inverse, |p| {
            if inverse {
                (-p.b_idx, p.a_idx)
            } else {
                (p.b_idx, -p.a_idx)
            }
        })
    }

    /// Largest `|(F^(+) |alpha, beta>)(n) - |target(alpha, beta)>(n)|` for an
    /// arbitrary index map `target`.
    pub fn rotation_deviation(&self, inverse: bool, target: impl Fn(PhasePoint) -> (i64, i64)) -> f64 {
        let lat = self.lattice;
        self.iter()
            .map(|(p, v)| {
                let (a, b) = target(p);
                let q = PhasePoint::new(lat, a, b).expect("in range");
                dft(v, inverse).max_abs_diff(self.state(q))
            })
            .fold(0.0, f64::max)
    }
}
