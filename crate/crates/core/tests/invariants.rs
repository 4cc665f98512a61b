//! Property tests over random odd dimensions, orders and phase-space points.

use num_complex::Complex64;
use proptest::prelude::*;

use finosc::fourier::{dft, dft_operator};
use finosc::frft::{apply_frft, frft_kernel};
use finosc::lattice::{Lattice, Signal};
use finosc::phasespace::{coherent_frame, PhasePoint};
use finosc::quantize::{coherent_expectation, frame_basis, frame_hamiltonian};
use finosc::spectral::harper_basis;
use finosc::thetagauss::{fourier_gauss_residual, theta_gaussian, DEFAULT_TOL};

fn odd_dim() -> impl Strategy<Value = usize> {
    (2usize..12).prop_map(|s| 2 * s + 1)
}

fn signal(lat: Lattice, re: &[f64], im: &[f64]) -> Signal {
    Signal::from_fn(lat, |n| {
        let k = lat.slot(n);
        Complex64::new(re[k], im[k])
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn frft_preserves_norm(d in odd_dim(), alpha in -4.0f64..4.0, seed in prop::collection::vec(-1.0f64..1.0, 50)) {
        let lat = Lattice::new(d).unwrap();
        let v = signal(lat, &seed[..d], &seed[25..25 + d]);
        for b in [frame_basis(lat).unwrap(), harper_basis(lat).unwrap()] {
            let out = apply_frft(&frft_kernel(&b, alpha).unwrap(), &v).unwrap();
            prop_assert!((out.norm() - v.norm()).abs() < 1e-10);
        }
    }

    #[test]
    fn frft_composes(d in odd_dim(), a in -2.0f64..2.0, b in -2.0f64..2.0, seed in prop::collection::vec(-1.0f64..1.0, 25)) {
        let lat = Lattice::new(d).unwrap();
        let v = signal(lat, &seed[..d], &vec![0.0; d]);
        let basis = frame_basis(lat).unwrap();
        let step = apply_frft(&frft_kernel(&basis, b).unwrap(), &v).unwrap();
        let two = apply_frft(&frft_kernel(&basis, a).unwrap(), &step).unwrap();
        let one = apply_frft(&frft_kernel(&basis, a + b).unwrap(), &v).unwrap();
        prop_assert!(two.max_abs_diff(&one) < 1e-10);
    }

    #[test]
    fn order_one_is_the_dft(d in odd_dim(), seed in prop::collection::vec(-1.0f64..1.0, 50)) {
        let lat = Lattice::new(d).unwrap();
        let v = signal(lat, &seed[..d], &seed[25..25 + d]);
        let k1 = frft_kernel(&harper_basis(lat).unwrap(), 1.0).unwrap();
        prop_assert!(apply_frft(&k1, &v).unwrap().max_abs_diff(&dft(&v, false)) < 1e-10);
    }

    #[test]
    fn fourier_gauss_law(d in odd_dim(), kappa in 0.05f64..20.0) {
        prop_assert!(fourier_gauss_residual(Lattice::new(d).unwrap(), kappa).unwrap() < 1e-11);
    }

    #[test]
    fn theta_gaussians_are_even_and_positive(d in odd_dim(), kappa in 0.05f64..20.0) {
        let lat = Lattice::new(d).unwrap();
        let g = theta_gaussian(lat, kappa, DEFAULT_TOL).unwrap();
        for n in lat.indices() {
            prop_assert!(g.at(n) > 0.0);
            prop_assert!((g.at(n) - g.at(-n)).abs() < 1e-14 * g.at(0));
        }
    }

    #[test]
    fn coherent_expectation_is_rotation_invariant(s in 2i64..11, a in -10i64..=10, b in -10i64..=10) {
        let d = (2 * s + 1) as usize;
        let lat = Lattice::new(d).unwrap();
        let (a, b) = (a.clamp(-s, s), b.clamp(-s, s));
        let frame = coherent_frame(lat);
        let fh = frame_hamiltonian(lat);
        let e = coherent_expectation(&fh, &frame, PhasePoint::new(lat, a, b).unwrap());
        let r = coherent_expectation(&fh, &frame, PhasePoint::new(lat, b, -a).unwrap());
        prop_assert!((e - r).abs() < 1e-11);
        let v = frame.state(PhasePoint::new(lat, a, b).unwrap());
        let direct = v.inner(&fh.h().apply(v).unwrap()).unwrap();
        prop_assert!((direct.re - e).abs() < 1e-10);
    }
}

#[test]
fn frame_hamiltonian_commutes_with_dft_across_dimensions() {
    for d in (5..=41).step_by(2) {
        let lat = Lattice::new(d).unwrap();
        let f = dft_operator(lat, false);
        let c = frame_hamiltonian(lat).h().commutator(&f).unwrap();
        assert!(c.max_abs() < 1e-10, "d = {d}");
    }
}

#[test]
fn both_bases_are_consistent_up_to_d_61() {
    for d in (5..=61).step_by(4) {
        let lat = Lattice::new(d).unwrap();
        let fb = frame_basis(lat).unwrap();
        let hb = harper_basis(lat).unwrap();
        let s = lat.s() as usize;
        assert_eq!(fb.parity_counts(), (s + 1, s), "d = {d}");
        assert_eq!(hb.parity_counts(), (s + 1, s), "d = {d}");
        assert!(fb.gram_deviation() < 1e-10 && hb.gram_deviation() < 1e-10);
    }
}
