//! The centred finite Fourier transform, its spectral projectors and circulant matrices.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::lattice::{Lattice, Operator, Signal};

/// `exp(-2 pi i j / d)` for `j = 0..d`.
fn twiddles(d: usize) -> Vec<Complex64> {
    (0..d)
        .map(|j| Complex64::from_polar(1.0, -2.0 * PI * j as f64 / d as f64))
        .collect()
}

/// The unitary matrix `d^{-1/2} exp(-+ 2 pi i n m / d)`; `inverse` selects the `+` sign.
pub fn dft_operator(lat: Lattice, inverse: bool) -> Operator {
    let d = lat.d() as i64;
    let w = twiddles(lat.d());
    let norm = 1.0 / (d as f64).sqrt();
    Operator::from_fn(lat, |n, m| {
        let k = (n * m).rem_euclid(d) as usize;
        let z = if inverse { w[k].conj() } else { w[k] };
        z * norm
    })
}

/// `F phi` (or `F+ phi`) without materialising the matrix.
pub fn dft(phi: &Signal, inverse: bool) -> Signal {
    let lat = phi.lattice();
    let d = lat.d() as i64;
    let w = twiddles(lat.d());
    let norm = 1.0 / (d as f64).sqrt();
    Signal::from_fn(lat, |n| {
        let acc: Complex64 = lat
            .indices()
            .map(|m| {
                let k = (n * m).rem_euclid(d) as usize;
                let z = if inverse { w[k].conj() } else { w[k] };
                z * phi.at(m)
            })
            .sum();
        acc * norm
    })
}

/// `F^k` for `k = 0..4`, reduced mod 4.
pub fn dft_power(lat: Lattice, k: i64) -> Operator {
    match k.rem_euclid(4) {
        0 => Operator::identity(lat),
        1 => dft_operator(lat, false),
        2 => Operator::from_fn(lat, |n, m| {
            if lat.reduce(n + m) == 0 {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::new(0.0, 0.0)
            }
        }),
        _ => dft_operator(lat, true),
    }
}

/// `(-i)^m`, the eigenvalue of `F` on the `m`-th spectral subspace.
pub fn fourier_eigenvalue(m: usize) -> Complex64 {
    match m % 4 {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, -1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, 1.0),
    }
}

/// The orthogonal projectors onto the four eigenspaces of `F`.
#[derive(Clone, Debug)]
pub struct FourierProjectors {
    pub pi: [Operator; 4],
}

impl FourierProjectors {
    /// `sum_m (-i)^m pi_m`.
    pub fn recompose(&self) -> Operator {
        let lat = self.pi[0].lattice();
        let mut out = Operator::zeros(lat);
        for (m, p) in self.pi.iter().enumerate() {
            out = &out + &p.scale(fourier_eigenvalue(m));
        }
        out
    }

    /// Dimension of each eigenspace, read from the projector traces.
    pub fn multiplicities(&self) -> [usize; 4] {
        let mut out = [0; 4];
        for (m, p) in self.pi.iter().enumerate() {
            out[m] = p.trace().re.round() as usize;
        }
        out
    }
}

/// `pi_m = (1/4) sum_k i^{mk} F^k`.
pub fn fourier_projectors(lat: Lattice) -> FourierProjectors {
    let powers: Vec<Operator> = (0..4).map(|k| dft_power(lat, k)).collect();
    let i = Complex64::new(0.0, 1.0);
    let pi = std::array::from_fn(|m| {
        let mut acc = Operator::zeros(lat);
        for (k, fk) in powers.iter().enumerate() {
            acc = &acc + &fk.scale(i.powu((m * k) as u32) * 0.25);
        }
        acc
    });
    FourierProjectors { pi }
}

/// Closed forms of `F[q]` and `F[q^2]` for the coordinate function `q`.
pub fn closed_form_coordinate_transforms(lat: Lattice) -> (Signal, Signal) {
    let d = lat.d() as f64;
    let s = lat.s() as f64;
    let fq = Signal::from_fn(lat, |n| {
        if n == 0 {
            return Complex64::new(0.0, 0.0);
        }
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let x = PI * n as f64 / d;
        Complex64::new(0.0, sign * PI.sqrt() / (2f64.sqrt() * x.sin()))
    });
    let fq2 = Signal::from_real_fn(lat, |n| {
        if n == 0 {
            return 2.0 * PI / d.sqrt() * s * (s + 1.0) / 3.0;
        }
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        let x = PI * n as f64 / d;
        sign * PI * x.cos() / (d.sqrt() * x.sin().powi(2))
    });
    (fq, fq2)
}

/// `sum_{a=-s..s} exp(2 pi i a n / d)`, which is `d` when `d | n` and `0` otherwise.
pub fn root_of_unity_sum(lat: Lattice, n: i64) -> Complex64 {
    let d = lat.d() as i64;
    lat.indices()
        .map(|a| Complex64::from_polar(1.0, 2.0 * PI * ((a * n).rem_euclid(d)) as f64 / d as f64))
        .sum()
}

/// A circulant matrix described by its first column `c_k`, `k = -s..=s`.
#[derive(Clone, Debug, PartialEq)]
pub struct CirculantSpec {
    lattice: Lattice,
    first_column: Vec<Complex64>,
}

impl CirculantSpec {
    pub fn lattice(&self) -> Lattice {
        self.lattice
    }

    /// `c_k` with `k` reduced modulo `d`.
    pub fn coefficient(&self, k: i64) -> Complex64 {
        self.first_column[self.lattice.slot(k)]
    }

    /// Entry `(n, m) = c_{(n - m) mod d}`.
    pub fn materialize(&self) -> Operator {
        Operator::from_fn(self.lattice, |n, m| self.coefficient(n - m))
    }

    /// `lambda_k = sum_n c_n exp(2 pi i k n / d)` for `k = -s..=s`.
    pub fn eigenvalues(&self) -> Vec<Complex64> {
        let d = self.lattice.d() as i64;
        let w = twiddles(self.lattice.d());
        self.lattice
            .indices()
            .map(|k| {
                self.lattice
                    .indices()
                    .map(|n| w[(k * n).rem_euclid(d) as usize].conj() * self.coefficient(n))
                    .sum()
            })
            .collect()
    }

    /// The diagonal `D` with `C = F+ D F`; `D_k` is the eigenvalue for `-k`.
    pub fn fourier_diagonal(&self) -> Signal {
        let col = Signal::from_fn(self.lattice, |k| self.coefficient(k));
        dft(&col, false).scale(Complex64::new((self.lattice.d() as f64).sqrt(), 0.0))
    }
}

pub fn circulant(lat: Lattice, first_column: Vec<Complex64>) -> Result<CirculantSpec> {
    if first_column.len() != lat.d() {
        return Err(Error::LengthMismatch {
            expected: lat.d(),
            got: first_column.len(),
        });
    }
    Ok(CirculantSpec {
        lattice: lat,
        first_column,
    })
}

/// The circulant `C_d` whose eigenvalues are exactly `1, 2, ..., d`.
pub fn equidistant_circulant(lat: Lattice) -> CirculantSpec {
    let d = lat.d() as f64;
    let col = lat
        .indices()
        .map(|k| {
            if k == 0 {
                Complex64::new((d + 1.0) / 2.0, 0.0)
            } else {
                let z = Complex64::from_polar(1.0, 2.0 * PI * k as f64 / d);
                z / (z - 1.0)
            }
        })
        .collect();
    CirculantSpec {
        lattice: lat,
        first_column: col,
    }
}

/// The cyclic shift `epsilon_n -> epsilon_{n+1}`.
pub fn cyclic_shift(lat: Lattice) -> Operator {
    Operator::from_fn(lat, |n, m| {
        if lat.reduce(m + 1) == n {
            Complex64::new(1.0, 0.0)
        } else {
            Complex64::new(0.0, 0.0)
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::coordinate_signal;
    use crate::spectral::hermitian_eigenvalues;
    use proptest::prelude::*;
    use rand::{Rng, SeedableRng};

    fn lat(d: usize) -> Lattice {
        Lattice::new(d).unwrap()
    }

    fn random_signal(lat: Lattice, rng: &mut impl Rng) -> Signal {
        Signal::from_fn(lat, |_| Complex64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
    }

    #[test]
    fn dft_is_unitary() {
        let l = lat(21);
        let f = dft_operator(l, false);
        let fi = dft_operator(l, true);
        assert!(f.matmul(&fi).unwrap().frobenius_distance(&Operator::identity(l)) < 1e-13);
        assert!(fi.max_abs_diff(&f.adjoint()) < 1e-15);
    }

    #[test]
    fn dft_squared_reflects() {
        let l = lat(21);
        let mut rng = rand::rngs::StdRng::seed_from_u64(7);
        let f = dft_operator(l, false);
        let f2 = f.matmul(&f).unwrap();
        for _ in 0..10 {
            let phi = random_signal(l, &mut rng);
            assert!(f2.apply(&phi).unwrap().max_abs_diff(&phi.reflect()) < 1e-13);
        }
        assert!(f2.max_abs_diff(&dft_power(l, 2)) < 1e-13);
    }

    #[test]
    fn dft_of_centre_basis_vector_is_flat() {
        let l = lat(21);
        let out = dft(&Signal::basis(l, 0), false);
        let c = 1.0 / 21f64.sqrt();
        for n in l.indices() {
            assert!((out.at(n) - Complex64::new(c, 0.0)).norm() < 1e-15);
        }
    }

    #[test]
    fn vector_dft_matches_matrix() {
        let l = lat(11);
        let mut rng = rand::rngs::StdRng::seed_from_u64(1);
        let phi = random_signal(l, &mut rng);
        for inv in [false, true] {
            let a = dft(&phi, inv);
            let b = dft_operator(l, inv).apply(&phi).unwrap();
            assert!(a.max_abs_diff(&b) < 1e-14);
        }
    }

    #[test]
    fn fourth_power_is_identity() {
        for d in [5, 7, 21, 51] {
            let l = lat(d);
            let f = dft_operator(l, false);
            let f2 = f.matmul(&f).unwrap();
            let f4 = f2.matmul(&f2).unwrap();
            assert!(f4.frobenius_distance(&Operator::identity(l)) < 1e-12, "d = {d}");
        }
    }

    #[test]
    fn projectors_resolve_and_recompose() {
        let l = lat(21);
        let p = fourier_projectors(l);
        let id = Operator::identity(l);
        let mut sum = Operator::zeros(l);
        for (j, pj) in p.pi.iter().enumerate() {
            assert!(pj.hermitian_deviation() < 1e-12);
            assert!(pj.matmul(pj).unwrap().frobenius_distance(pj) < 1e-12);
            for (k, pk) in p.pi.iter().enumerate() {
                if j != k {
                    assert!(pj.matmul(pk).unwrap().frobenius_norm() < 1e-12);
                }
            }
            sum = &sum + pj;
        }
        assert!(sum.frobenius_distance(&id) < 1e-12);
        assert!((sum.trace().re - 21.0).abs() < 1e-12);
        assert!(p.recompose().frobenius_distance(&dft_operator(l, false)) < 1e-12);
    }

    #[test]
    fn odd_projector_kills_even_signals() {
        let l = lat(21);
        let p = fourier_projectors(l);
        let mut rng = rand::rngs::StdRng::seed_from_u64(3);
        let phi = random_signal(l, &mut rng);
        let even = (&phi + &phi.reflect()).scale(Complex64::new(0.5, 0.0));
        assert!(p.pi[1].apply(&even).unwrap().max_abs() < 1e-12);
        assert!(p.pi[3].apply(&even).unwrap().max_abs() < 1e-12);
    }

    #[test]
    fn multiplicities_match_eigensolver() {
        for d in [5, 7, 9, 21] {
            let l = lat(d);
            let f = dft_operator(l, false);
            let fi = f.adjoint();
            let re_part = (&f + &fi).scale(Complex64::new(0.5, 0.0));
            let im_part = (&f - &fi).scale(Complex64::new(0.0, -0.5));
            // F is normal, so cos and sin of its eigenphases come from the two Hermitian parts.
            let c = hermitian_eigenvalues(&re_part).unwrap();
            let s = hermitian_eigenvalues(&im_part).unwrap();
            let ones = c.iter().filter(|&&x| (x - 1.0).abs() < 1e-8).count();
            let minus_ones = c.iter().filter(|&&x| (x + 1.0).abs() < 1e-8).count();
            let plus_i = s.iter().filter(|&&x| (x - 1.0).abs() < 1e-8).count();
            let minus_i = s.iter().filter(|&&x| (x + 1.0).abs() < 1e-8).count();
            let counts = [ones, minus_i, minus_ones, plus_i];
            assert_eq!(counts.iter().sum::<usize>(), d);
            assert_eq!(fourier_projectors(l).multiplicities(), counts, "d = {d}");
        }
    }

    #[test]
    fn closed_forms_match_matrix_transform() {
        let l = lat(21);
        let q = coordinate_signal(l);
        let q2 = q.hadamard(&q).unwrap();
        let f = dft_operator(l, false);
        let (fq, fq2) = closed_form_coordinate_transforms(l);
        assert_eq!(fq.at(0), Complex64::new(0.0, 0.0));
        assert!((fq2.at(0).re - 2.0 * PI / 21f64.sqrt() * 10.0 * 11.0 / 3.0).abs() < 1e-13);
        assert!(fq.max_abs_diff(&f.apply(&q).unwrap()) < 1e-12);
        assert!(fq2.max_abs_diff(&f.apply(&q2).unwrap()) < 1e-12);
    }

    #[test]
    fn root_of_unity_sums() {
        for d in [5, 7, 21] {
            let l = lat(d);
            let di = d as i64;
            for n in -2 * di..=2 * di {
                let expect = if n % di == 0 { d as f64 } else { 0.0 };
                assert!((root_of_unity_sum(l, n) - Complex64::new(expect, 0.0)).norm() < 1e-10);
            }
        }
    }

    #[test]
    fn circulant_of_delta_is_identity() {
        let l = lat(7);
        let c = circulant(l, Signal::basis(l, 0).amplitudes().to_vec()).unwrap();
        assert_eq!(c.materialize(), Operator::identity(l));
        assert!(circulant(l, vec![Complex64::new(0.0, 0.0); 6]).is_err());
    }

    #[test]
    fn circulant_diagonalised_by_dft() {
        let l = lat(9);
        let mut rng = rand::rngs::StdRng::seed_from_u64(11);
        let col = random_signal(l, &mut rng).amplitudes().to_vec();
        let c = circulant(l, col).unwrap();
        let m = c.materialize();
        let shift = cyclic_shift(l);
        assert!(m.commutator(&shift).unwrap().frobenius_norm() < 1e-12);

        let diag = c.fourier_diagonal();
        let rebuilt = dft_operator(l, true)
            .matmul(&Operator::diagonal(l, |k| diag.at(k)))
            .unwrap()
            .matmul(&dft_operator(l, false))
            .unwrap();
        assert!(rebuilt.frobenius_distance(&m) < 1e-12);

        // Each stated eigenvalue belongs to the plane wave exp(-2 pi i k m / d).
        let eig = c.eigenvalues();
        for (pos, k) in l.indices().enumerate() {
            let v = Signal::from_fn(l, |n| Complex64::from_polar(1.0, -2.0 * PI * (k * n) as f64 / 9.0));
            let res = &m.apply(&v).unwrap() - &v.scale(eig[pos]);
            assert!(res.max_abs() < 1e-12);
        }
    }

    #[test]
    fn equidistant_circulant_spectrum() {
        let l = lat(21);
        let c = equidistant_circulant(l);
        assert_eq!(c.coefficient(0), Complex64::new(11.0, 0.0));
        let m = c.materialize();
        assert!((m.trace().re - 21.0 * 22.0 / 2.0).abs() < 1e-10);
        assert!(m.hermitian_deviation() < 1e-12);

        let l5 = lat(5);
        let vals = hermitian_eigenvalues(&equidistant_circulant(l5).materialize()).unwrap();
        for (k, v) in vals.iter().enumerate() {
            assert!((v - (k + 1) as f64).abs() < 1e-11, "{vals:?}");
        }
        let mut eig: Vec<f64> = equidistant_circulant(l).eigenvalues().iter().map(|z| z.re).collect();
        eig.sort_by(f64::total_cmp);
        for (k, v) in eig.iter().enumerate() {
            assert!((v - (k + 1) as f64).abs() < 1e-10);
        }
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]
        #[test]
        fn dft_preserves_norm(seed in any::<u64>(), pick in 0usize..4) {
            let l = lat([5, 7, 21, 51][pick]);
            let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
            let phi = random_signal(l, &mut rng);
            let out = dft(&phi, false);
            prop_assert!((out.norm() - phi.norm()).abs() <= 1e-13 * phi.norm());
        }
    }
}
