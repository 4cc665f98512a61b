//! Frame quantization of phase-space symbols.
//!
//! A symbol `f(alpha, beta)` becomes `A_f = (1/d) sum f(alpha, beta) |alpha, beta><alpha, beta|`.
//! For the oscillator energy `(alpha^2 + beta^2)/2` the operator has a circulant
//! structure, which [`frame_hamiltonian`] assembles in `O(d^2)`.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fourier::{closed_form_coordinate_transforms, dft, equidistant_circulant};
use crate::lattice::{Lattice, Operator, Signal};
use crate::phasespace::{CoherentFrame, PhasePoint};
use crate::spectral::{eigh, oscillator_basis, BasisKind, SpectralBasis};
use crate::thetagauss::{ground_state, GroundState};

type SymbolFn = dyn Fn(f64, f64) -> Complex64 + Send + Sync;

/// A named function on phase space.
pub struct PhaseSymbol {
    name: String,
    f: Box<SymbolFn>,
}

impl PhaseSymbol {
    pub fn new(name: impl Into<String>, f: impl Fn(f64, f64) -> Complex64 + Send + Sync + 'static) -> Self {
        Self {
            name: name.into(),
            f: Box::new(f),
        }
    }

    pub fn constant(c: f64) -> Self {
        Self::new(format!("{c}"), move |_, _| Complex64::new(c, 0.0))
    }

    /// `(alpha^2 + beta^2) / 2`.
    pub fn energy() -> Self {
        Self::new("(a^2+b^2)/2", |a, b| Complex64::new(0.5 * (a * a + b * b), 0.0))
    }

    /// `(alpha - i beta) / sqrt(2)`.
    pub fn raising() -> Self {
        Self::new("(a-ib)/sqrt2", |a, b| Complex64::new(a, -b) / 2f64.sqrt())
    }

    /// `(alpha + i beta) / sqrt(2)`.
    pub fn lowering() -> Self {
        Self::new("(a+ib)/sqrt2", |a, b| Complex64::new(a, b) / 2f64.sqrt())
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn eval(&self, alpha: f64, beta: f64) -> Complex64 {
        (self.f)(alpha, beta)
    }
}

impl fmt::Debug for PhaseSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PhaseSymbol").field("name", &self.name).finish()
    }
}

/// `A_f` by direct summation over all `d^2` frame states.
pub fn frame_quantize(frame: &CoherentFrame, f: &PhaseSymbol) -> Operator {
    frame.weighted_sum(|p| f.eval(p.alpha, p.beta))
}

/// The frame Hamiltonian `H_d = A_f - 1/2` for `f = (alpha^2 + beta^2)/2`.
#[derive(Clone, Debug)]
pub struct FrameHamiltonian {
    lattice: Lattice,
    h: Operator,
    tau: Vec<f64>,
    omega: Vec<f64>,
    conv: Signal,
}

impl FrameHamiltonian {
    pub fn lattice(&self) -> Lattice {
        self.lattice
    }

    pub fn h(&self) -> &Operator {
        &self.h
    }

    /// `A_f = H_d + 1/2`.
    pub fn a_f(&self) -> Operator {
        &self.h + &Operator::identity(self.lattice).scale(Complex64::new(0.5, 0.0))
    }

    /// Off-diagonal values `tau_0 ..= tau_s`.
    pub fn tau(&self) -> &[f64] {
        &self.tau
    }

    /// Diagonal values of `A_f`, `omega_0 ..= omega_s`.
    pub fn omega(&self) -> &[f64] {
        &self.omega
    }

    /// `tau_{min(|k|, d - |k|)}` for any integer `k`.
    pub fn tau_at(&self, k: i64) -> f64 {
        self.tau[self.lattice.reduce(k).unsigned_abs() as usize]
    }

    /// The cyclic convolution `q^2 * g^2`.
    pub fn conv(&self) -> &Signal {
        &self.conv
    }

    pub fn trace(&self) -> f64 {
        self.h.trace().re
    }

    /// Eigenvalues of `A_f` in ascending order.
    pub fn a_f_eigenvalues(&self) -> Result<Vec<f64>> {
        Ok(eigh(&self.a_f())?.0)
    }
}

/// `(q^2 * g^2)(k) = sum_a (a sqrt(delta))^2 g^2((k - a) sqrt(delta))`.
pub fn coordinate_square_convolution(ground: &GroundState) -> Signal {
    let lat = ground.lattice();
    Signal::from_real_fn(lat, |k| {
        lat.indices()
            .map(|a| lat.point(a).powi(2) * ground.at(k - a).powi(2))
            .sum()
    })
}

/// Assembles `H_d` from `tau_k` and `omega_k`.
pub fn frame_hamiltonian(lat: Lattice) -> FrameHamiltonian {
    frame_hamiltonian_from(&ground_state(lat))
}

pub fn frame_hamiltonian_from(ground: &GroundState) -> FrameHamiltonian {
    let lat = ground.lattice();
    let d = lat.d() as f64;
    let s = lat.s() as f64;
    let conv = coordinate_square_convolution(ground);
    let fc = dft(&conv, false);
    let mut tau: Vec<f64> = (0..=lat.s()).map(|k| fc.at(k).re / (2.0 * d.sqrt())).collect();
    tau[0] = PI / d * s * (s + 1.0) / 3.0;
    let omega: Vec<f64> = (0..=lat.s()).map(|k| tau[0] + 0.5 * conv.at(k).re).collect();
    let h = Operator::from_fn(lat, |n, m| {
        let v = if n == m {
            omega[n.unsigned_abs() as usize] - 0.5
        } else {
            tau[lat.reduce(n - m).unsigned_abs() as usize]
        };
        Complex64::new(v, 0.0)
    });
    FrameHamiltonian {
        lattice: lat,
        h,
        tau,
        omega,
        conv,
    }
}

/// `tr H_d = -d/2 + 2 pi s (s + 1) / 3`.
pub fn trace_law(lat: Lattice) -> f64 {
    let s = lat.s() as f64;
    -(lat.d() as f64) / 2.0 + 2.0 * PI * s * (s + 1.0) / 3.0
}

/// `tr H_d / (d^2 / 2)`, which tends to `pi / 3`.
pub fn trace_ratio(lat: Lattice) -> f64 {
    let fh = frame_hamiltonian(lat);
    fh.trace() / (lat.d() as f64).powi(2) * 2.0
}

/// `<alpha, beta| H_d |alpha, beta>` from its closed form.
pub fn coherent_expectation(fh: &FrameHamiltonian, frame: &CoherentFrame, p: PhasePoint) -> f64 {
    let lat = fh.lattice();
    let g = frame.ground();
    let sum: f64 = lat
        .indices()
        .map(|u| fh.conv.at(u).re * (g.at(u - p.a_idx).powi(2) + g.at(u - p.b_idx).powi(2)))
        .sum();
    -0.5 + 0.5 * sum
}

/// Both sides of `(1/d) sum |n - lambda_n| <= rhs`, comparing `A_f` with the circulant `C_d`.
pub fn wielandt_hoffman_gap(fh: &FrameHamiltonian) -> Result<(f64, f64)> {
    let lat = fh.lattice();
    let d = lat.d();
    let lambda = fh.a_f_eigenvalues()?;
    let lhs = lambda
        .iter()
        .enumerate()
        .map(|(k, l)| ((k + 1) as f64 - l).abs())
        .sum::<f64>()
        / d as f64;
    let c = equidistant_circulant(lat);
    let off: f64 = (1..d as i64)
        .map(|k| (Complex64::new(fh.tau_at(k), 0.0) - c.coefficient(k)).norm_sqr())
        .sum();
    let diag: f64 = lat
        .indices()
        .map(|k| (Complex64::new(fh.omega[k.unsigned_abs() as usize], 0.0) - c.coefficient(0)).norm_sqr())
        .sum();
    Ok((lhs, (off + diag / d as f64).sqrt()))
}

/// `a_d^+ = (1/d) sum (alpha - i beta)/sqrt(2) |alpha, beta><alpha, beta|`, evaluated in `O(d^3)`
/// by summing over `beta` in closed form.
pub fn raising_operator(frame: &CoherentFrame) -> Operator {
    let lat = frame.lattice();
    let g = frame.ground();
    let d = lat.d() as f64;
    let (fq, _) = closed_form_coordinate_transforms(lat);
    // sum_b b exp(2 pi i b k / d) = -F[q](k) sqrt(d / delta)
    let sb = |k: i64| -fq.at(k) * (d / lat.delta()).sqrt();
    let pref = (PI / d).sqrt() / d;
    Operator::from_fn(lat, |n, m| {
        let corr: f64 = lat.indices().map(|a| g.at(n - a) * g.at(m - a)).sum();
        let mut v = -Complex64::i() * sb(n - m) * corr;
        if n == m {
            let first: f64 = lat.indices().map(|a| a as f64 * g.at(n - a).powi(2)).sum();
            v += Complex64::new(d * first, 0.0);
        }
        v * pref
    })
}

/// The eigenbasis `f_m` of `A_f`, ordered by quantum number.
pub fn frame_basis(lat: Lattice) -> Result<SpectralBasis> {
    oscillator_basis(&frame_hamiltonian(lat).a_f(), BasisKind::Frame)
}

/// `f_0 = g`, `f_{n+1} = a^+ f_n / sqrt(n + 1)`; not normalised.
pub fn ladder_states_with(a_plus: &Operator, ground: &GroundState, count: usize) -> Result<Vec<Signal>> {
    let lat = ground.lattice();
    if count == 0 || count > lat.d() {
        return Err(Error::InvalidParameter {
            name: "count",
            reason: format!("must be in 1..={}, got {count}", lat.d()),
        });
    }
    let mut out = Vec::with_capacity(count);
    out.push(ground.to_signal());
    for n in 1..count {
        let next = a_plus.apply(&out[n - 1])?.scale(Complex64::new(1.0 / (n as f64).sqrt(), 0.0));
        out.push(next);
    }
    Ok(out)
}

pub fn ladder_states(frame: &CoherentFrame, count: usize) -> Result<Vec<Signal>> {
    ladder_states_with(&raising_operator(frame), frame.ground(), count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fourier::dft_operator;
    use crate::phasespace::coherent_frame;
    use rand::{Rng, SeedableRng};

    fn lat(d: usize) -> Lattice {
        Lattice::new(d).unwrap()
    }

    #[test]
    fn constant_symbol_quantizes_to_identity() {
        let l = lat(7);
        let frame = coherent_frame(l);
        let a = frame_quantize(&frame, &PhaseSymbol::constant(1.0));
        assert!(a.frobenius_distance(&Operator::identity(l)) < 1e-11);
    }

    #[test]
    fn fast_path_matches_brute_force() {
        for d in [5, 7, 21] {
            let l = lat(d);
            let frame = coherent_frame(l);
            let brute = &frame_quantize(&frame, &PhaseSymbol::energy())
                - &Operator::identity(l).scale(Complex64::new(0.5, 0.0));
            let fh = frame_hamiltonian(l);
            assert!(fh.h().max_abs_diff(&brute) < 1e-11, "d = {d}: {}", fh.h().max_abs_diff(&brute));
        }
    }

    #[test]
    fn fast_path_matches_circulant_form() {
        let l = lat(21);
        let fh = frame_hamiltonian(l);
        let f = dft_operator(l, false);
        let dfm = Operator::diagonal(l, |n| fh.conv().at(n) * 0.5);
        let rebuilt = &(&Operator::identity(l).scale(Complex64::new(-0.5, 0.0)) + &dfm)
            + &f.adjoint().matmul(&dfm).unwrap().matmul(&f).unwrap();
        assert!(fh.h().max_abs_diff(&rebuilt) < 1e-12);
        let fc = dft(fh.conv(), false);
        assert!((fc.at(0).re / (2.0 * 21f64.sqrt()) - fh.tau()[0]).abs() < 1e-12);
    }

    #[test]
    fn matrix_structure() {
        let l = lat(21);
        let fh = frame_hamiltonian(l);
        let h = fh.h();
        assert!(h.max_imag() < 1e-12);
        assert!(h.hermitian_deviation() < 1e-12);
        for n in l.indices() {
            for m in l.indices() {
                assert!((h.get(n, m) - h.get(-n, -m)).norm() < 1e-12);
            }
        }
        assert!((h.get(0, 0).re - (fh.omega()[0] - 0.5)).abs() < 1e-15);
        assert!((h.get(3, -9).re - fh.tau()[9]).abs() < 1e-15);
        assert!((h.get(-10, 10).re - fh.tau()[1]).abs() < 1e-15);
    }

    #[test]
    fn off_diagonals_factor_through_fourier_transforms() {
        let l = lat(21);
        let fh = frame_hamiltonian(l);
        let (_, fq2) = closed_form_coordinate_transforms(l);
        let fg2 = dft(&ground_state(l).squared(), false);
        for n in l.indices() {
            for m in l.indices() {
                if n != m {
                    let expect = 0.5 * fq2.at(n - m) * fg2.at(n - m);
                    assert!((fh.h().get(n, m) - expect).norm() < 1e-11);
                }
            }
        }
    }

    #[test]
    fn fourier_invariance() {
        for d in [5, 7, 21, 51] {
            let l = lat(d);
            let f = dft_operator(l, false);
            assert!(frame_hamiltonian(l).h().commutator(&f).unwrap().frobenius_norm() < 1e-10);
        }
    }

    #[test]
    fn trace_law_and_ratio() {
        let l = lat(21);
        let fh = frame_hamiltonian(l);
        assert!((fh.trace() - trace_law(l)).abs() < 1e-10);
        assert!((fh.trace() - (-10.5 + 220.0 * PI / 3.0)).abs() < 1e-10);
        let frame = coherent_frame(l);
        let af = frame_quantize(&frame, &PhaseSymbol::energy());
        assert!((af.trace().re - 220.0 * PI / 3.0).abs() < 1e-9);
        let r101 = trace_ratio(lat(101));
        let r201 = trace_ratio(lat(201));
        // The ratio is (pi/3)(1 - 1/d^2) - 1/d, so it approaches pi/3 like 1/d.
        for (d, r) in [(101.0, r101), (201.0, r201)] {
            let asym = PI / 3.0 * (1.0 - 1.0 / (d * d)) - 1.0 / d;
            assert!((r - asym).abs() < 1e-12);
        }
        assert!((r101 - PI / 3.0).abs() > (r201 - PI / 3.0).abs());
        assert!((r201 - trace_law(lat(201)) / (201.0f64.powi(2) / 2.0)).abs() < 1e-12);
    }

    #[test]
    fn energy_quantization_is_positive() {
        let l = lat(21);
        let vals = frame_hamiltonian(l).a_f_eigenvalues().unwrap();
        assert!(vals[0] >= -1e-10);
        assert!((vals.iter().sum::<f64>() - 220.0 * PI / 3.0).abs() < 1e-8);
    }

    #[test]
    fn coherent_expectations() {
        let l = lat(21);
        let frame = coherent_frame(l);
        let fh = frame_hamiltonian(l);
        let mut rng = rand::rngs::StdRng::seed_from_u64(4);
        for _ in 0..50 {
            let p = PhasePoint::new(l, rng.gen_range(-10..=10), rng.gen_range(-10..=10)).unwrap();
            let v = frame.state(p);
            let sandwich = v.inner(&fh.h().apply(v).unwrap()).unwrap();
            let closed = coherent_expectation(&fh, &frame, p);
            assert!((sandwich.re - closed).abs() < 1e-11);
            assert!(sandwich.im.abs() < 1e-11);
            let swapped = PhasePoint::new(l, p.b_idx, p.a_idx).unwrap();
            let negated = PhasePoint::new(l, -p.a_idx, -p.b_idx).unwrap();
            assert!((coherent_expectation(&fh, &frame, swapped) - closed).abs() < 1e-12);
            assert!((coherent_expectation(&fh, &frame, negated) - closed).abs() < 1e-12);
        }
    }

    #[test]
    fn wielandt_hoffman_bound() {
        for d in [5, 7, 21, 51] {
            let l = lat(d);
            let fh = frame_hamiltonian(l);
            let (lhs, rhs) = wielandt_hoffman_gap(&fh).unwrap();
            assert!(rhs >= 0.0);
            assert!(lhs <= rhs, "d = {d}: {lhs} > {rhs}");
            // rhs^2 = ||A_f - C_d||_F^2 / d
            let c = equidistant_circulant(l).materialize();
            let frob = fh.a_f().frobenius_distance(&c);
            assert!((rhs - frob / (d as f64).sqrt()).abs() < 1e-10 * rhs.max(1.0));
        }
    }

    #[test]
    fn raising_operator_factorisation() {
        for d in [5, 7, 21] {
            let l = lat(d);
            let frame = coherent_frame(l);
            let brute = frame_quantize(&frame, &PhaseSymbol::raising());
            let fast = raising_operator(&frame);
            assert!(fast.max_abs_diff(&brute) < 1e-12, "d = {d}");
            let lowering = frame_quantize(&frame, &PhaseSymbol::lowering());
            assert!(brute.adjoint().max_abs_diff(&lowering) < 1e-12);
        }
    }

    #[test]
    fn raising_operator_symmetries() {
        let l = lat(21);
        let a = raising_operator(&coherent_frame(l));
        assert!(a.max_imag() < 1e-11);
        for n in l.indices() {
            for m in l.indices() {
                assert!((a.get(n, m) + a.get(-n, -m)).norm() < 1e-11);
            }
        }
    }

    #[test]
    fn ladder_recurrence() {
        let l = lat(21);
        let frame = coherent_frame(l);
        let a = raising_operator(&frame);
        let states = ladder_states_with(&a, frame.ground(), 21).unwrap();
        assert_eq!(states[0], frame.ground().to_signal());
        for n in 0..20 {
            let lhs = a.apply(&states[n]).unwrap();
            let rhs = states[n + 1].scale(Complex64::new(((n + 1) as f64).sqrt(), 0.0));
            assert!(lhs.max_abs_diff(&rhs) <= 1e-14 * rhs.max_abs().max(1.0));
        }
        assert!(ladder_states(&frame, 0).is_err());
        assert!(ladder_states(&frame, 22).is_err());
    }
}
