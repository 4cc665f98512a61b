//! Real symmetric eigensolver, the Harper Hamiltonian and ordered oscillator eigenbases.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::fourier::{dft, fourier_eigenvalue};
use crate::lattice::{Lattice, Operator, Signal};
use crate::reference::hermite_gaussian_all;

/// Maximum number of cyclic Jacobi sweeps.
pub const MAX_SWEEPS: usize = 100;

/// Cyclic Jacobi eigensolver for a dense real symmetric `n x n` matrix (row-major).
///
/// Returns eigenvalues in ascending order and the matching orthonormal eigenvectors.
pub fn jacobi_eigh(n: usize, mut a: Vec<f64>) -> Result<(Vec<f64>, Vec<Vec<f64>>)> {
    if a.len() != n * n {
        return Err(Error::LengthMismatch {
            expected: n * n,
            got: a.len(),
        });
    }
    let norm = a.iter().map(|x| x * x).sum::<f64>().sqrt();
    let mut v = vec![0.0; n * n];
    for i in 0..n {
        v[i * n + i] = 1.0;
    }
    let off_norm = |a: &[f64]| {
        let mut acc = 0.0;
        for i in 0..n {
            for j in 0..n {
                if i != j {
                    acc += a[i * n + j] * a[i * n + j];
                }
            }
        }
        acc.sqrt()
    };

    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        if off_norm(&a) <= 1e-14 * norm {
            converged = true;
            break;
        }
        for p in 0..n.saturating_sub(1) {
            for q in p + 1..n {
                let apq = a[p * n + q];
                if apq == 0.0 {
                    continue;
                }
                let app = a[p * n + p];
                let aqq = a[q * n + q];
                let g = 100.0 * apq.abs();
                if app.abs() + g == app.abs() && aqq.abs() + g == aqq.abs() {
                    a[p * n + q] = 0.0;
                    a[q * n + p] = 0.0;
                    continue;
                }
                let theta = (aqq - app) / (2.0 * apq);
                let t = if theta.abs() > 1e150 {
                    0.5 / theta
                } else {
                    theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
                };
                let c = 1.0 / (t * t + 1.0).sqrt();
                let s = t * c;
                for k in 0..n {
                    let akp = a[k * n + p];
                    let akq = a[k * n + q];
                    a[k * n + p] = c * akp - s * akq;
                    a[k * n + q] = s * akp + c * akq;
                }
                for k in 0..n {
                    let apk = a[p * n + k];
                    let aqk = a[q * n + k];
                    a[p * n + k] = c * apk - s * aqk;
                    a[q * n + k] = s * apk + c * aqk;
                }
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
                for k in 0..n {
                    let vkp = v[k * n + p];
                    let vkq = v[k * n + q];
                    v[k * n + p] = c * vkp - s * vkq;
                    v[k * n + q] = s * vkp + c * vkq;
                }
            }
        }
    }
    if !converged {
        let off = off_norm(&a);
        if off > 1e-14 * norm {
            return Err(Error::NoConvergence {
                sweeps: MAX_SWEEPS,
                off_norm: off,
            });
        }
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[i * n + i].total_cmp(&a[j * n + j]));
    let values = order.iter().map(|&i| a[i * n + i]).collect();
    let vectors = order
        .iter()
        .map(|&j| (0..n).map(|i| v[i * n + j]).collect())
        .collect();
    Ok((values, vectors))
}

/// Eigen-decomposition of an operator that is real symmetric up to `1e-10`.
pub fn eigh(sym: &Operator) -> Result<(Vec<f64>, Vec<Signal>)> {
    let deviation = sym.max_imag().max(sym.hermitian_deviation());
    if deviation > 1e-10 {
        return Err(Error::NotSymmetric { deviation });
    }
    let lat = sym.lattice();
    let d = lat.d();
    // Symmetrise so rounding in the input does not leak into the rotations.
    let re = sym.real_matrix();
    let mut a = vec![0.0; d * d];
    for i in 0..d {
        for j in 0..d {
            a[i * d + j] = 0.5 * (re[i * d + j] + re[j * d + i]);
        }
    }
    let (values, vectors) = jacobi_eigh(d, a)?;
    let vectors = vectors
        .into_iter()
        .map(|v| Signal::from_real(lat, &v).expect("length is d"))
        .collect();
    Ok((values, vectors))
}

/// Ascending eigenvalues of a Hermitian operator.
///
/// Uses the real symmetric embedding `[[Re A, -Im A], [Im A, Re A]]`, whose
/// spectrum is that of `A` with every eigenvalue doubled.
pub fn hermitian_eigenvalues(a: &Operator) -> Result<Vec<f64>> {
    let deviation = a.hermitian_deviation();
    if deviation > 1e-10 {
        return Err(Error::NotSymmetric { deviation });
    }
    let d = a.lattice().d();
    let n = 2 * d;
    let mut m = vec![0.0; n * n];
    for (i, row) in a.as_slice().chunks_exact(d).enumerate() {
        for (j, z) in row.iter().enumerate() {
            m[i * n + j] = z.re;
            m[(i + d) * n + j + d] = z.re;
            m[i * n + j + d] = -z.im;
            m[(i + d) * n + j] = z.im;
        }
    }
    let (vals, _) = jacobi_eigh(n, m)?;
    Ok(vals.chunks_exact(2).map(|p| 0.5 * (p[0] + p[1])).collect())
}

/// The finite-difference oscillator whose eigenvectors are the Harper functions.
#[derive(Clone, Debug, PartialEq)]
pub struct HarperHamiltonian {
    pub lattice: Lattice,
    pub h: Operator,
}

/// Diagonal `2(cos(2 pi n / d) - 2)`, unit first off-diagonals and unit corners.
pub fn harper_hamiltonian(lat: Lattice) -> HarperHamiltonian {
    let d = lat.d() as f64;
    let h = Operator::from_fn(lat, |n, m| {
        let v = if n == m {
            2.0 * ((2.0 * PI * n as f64 / d).cos() - 2.0)
        } else if lat.reduce(n - m).abs() == 1 {
            1.0
        } else {
            0.0
        };
        Complex64::new(v, 0.0)
    });
    HarperHamiltonian { lattice: lat, h }
}

/// Which Hamiltonian a basis diagonalises.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BasisKind {
    Frame,
    Harper,
}

impl BasisKind {
    /// Sign that turns the eigenvalue into an energy increasing with `m`.
    fn energy_sign(self) -> f64 {
        match self {
            BasisKind::Frame => 1.0,
            BasisKind::Harper => -1.0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            BasisKind::Frame => "frame",
            BasisKind::Harper => "harper",
        }
    }
}

impl fmt::Display for BasisKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn name(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }
}

/// Labels attached to each basis vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct VectorLabels {
    pub alternations: usize,
    pub parity: Parity,
    pub fourier_index: usize,
    /// Position of the eigenvalue in ascending order.
    pub rank: usize,
}

/// A Fourier-invariant orthonormal eigenbasis ordered by quantum number `m`.
#[derive(Clone, Debug)]
pub struct SpectralBasis {
    lattice: Lattice,
    kind: BasisKind,
    values: Vec<f64>,
    vectors: Vec<Signal>,
    labels: Vec<VectorLabels>,
}

impl SpectralBasis {
    pub fn lattice(&self) -> Lattice {
        self.lattice
    }

    pub fn kind(&self) -> BasisKind {
        self.kind
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    /// Eigenvalues listed by `m`, the order of the basis vectors.
    pub fn values(&self) -> &[f64] {
        &self.values
    }

    /// Eigenvalues in ascending order.
    pub fn ascending_values(&self) -> Vec<f64> {
        let mut v = self.values.clone();
        v.sort_by(f64::total_cmp);
        v
    }

    pub fn vectors(&self) -> &[Signal] {
        &self.vectors
    }

    pub fn vector(&self, m: usize) -> &Signal {
        &self.vectors[m]
    }

    pub fn labels(&self) -> &[VectorLabels] {
        &self.labels
    }

    /// Largest deviation of the Gram matrix from the identity, in Frobenius norm.
    pub fn gram_deviation(&self) -> f64 {
        let mut acc = 0.0;
        for (i, a) in self.vectors.iter().enumerate() {
            for (j, b) in self.vectors.iter().enumerate() {
                let g = a.inner(b).expect("same lattice");
                let target = if i == j { 1.0 } else { 0.0 };
                acc += (g - Complex64::new(target, 0.0)).norm_sqr();
            }
        }
        acc.sqrt()
    }

    /// `max_m max_n |(F v_m)(n) - (-i)^m v_m(n)|`.
    pub fn fourier_eigen_deviation(&self) -> f64 {
        self.vectors
            .iter()
            .enumerate()
            .map(|(m, v)| dft(v, false).max_abs_diff(&v.scale(fourier_eigenvalue(m))))
            .fold(0.0, f64::max)
    }

    /// `(even, odd)` vector counts.
    pub fn parity_counts(&self) -> (usize, usize) {
        let even = self.labels.iter().filter(|l| l.parity == Parity::Even).count();
        (even, self.labels.len() - even)
    }

    /// Smallest gap between consecutive ascending eigenvalues.
    pub fn min_gap(&self) -> f64 {
        self.ascending_values()
            .windows(2)
            .map(|w| w[1] - w[0])
            .fold(f64::INFINITY, f64::min)
    }
}

/// Index of the fourth root of unity `(-i)^c` within `0.1` of `z`.
pub fn fourier_class(z: Complex64) -> Option<usize> {
    (0..4).find(|&c| (z - fourier_eigenvalue(c)).norm() < 0.1)
}

/// Parity of a real vector under `n -> -n`, if it has one.
pub fn parity_of(v: &Signal, tol: f64) -> Option<Parity> {
    let lat = v.lattice();
    let even = lat.indices().map(|n| (v.at(n) - v.at(-n)).norm()).fold(0.0, f64::max);
    let odd = lat.indices().map(|n| (v.at(n) + v.at(-n)).norm()).fold(0.0, f64::max);
    if even <= tol {
        Some(Parity::Even)
    } else if odd <= tol {
        Some(Parity::Odd)
    } else {
        None
    }
}

/// Number of sign changes along the real parts of `v` in grid order.
///
/// Entries below `1e-9 max|v|` are treated as zero. A run of such entries
/// between two significant values continues the local pattern: inside an
/// alternating stretch every skipped step counts (adjusted to the observed end
/// signs), otherwise only a sign difference across the gap counts.
pub fn sign_alternations(v: &Signal) -> usize {
    let x = v.real_parts();
    let mx = x.iter().fold(0.0f64, |a, b| a.max(b.abs()));
    if mx == 0.0 {
        return 0;
    }
    let th = 1e-9 * mx;
    let significant = |i: usize| x[i].abs() > th;
    let idx: Vec<usize> = (0..x.len()).filter(|&i| significant(i)).collect();
    let mut count = 0;
    for w in idx.windows(2) {
        let (a, b) = (w[0], w[1]);
        let (sa, sb) = (x[a].signum(), x[b].signum());
        let gap = b - a;
        if gap == 1 {
            count += usize::from(sa != sb);
            continue;
        }
        let alternating = if a >= 1 && significant(a - 1) {
            x[a - 1].signum() != sa
        } else if b + 1 < x.len() && significant(b + 1) {
            x[b + 1].signum() != sb
        } else {
            false
        };
        if alternating {
            let expected = if gap % 2 == 0 { sa } else { -sa };
            count += if sb == expected { gap } else { gap - 1 };
        } else {
            count += usize::from(sa != sb);
        }
    }
    count
}

/// Eigenbasis of a Fourier-invariant real symmetric Hamiltonian, labelled by `m`.
///
/// Eigenvectors are grouped by their Fourier class `c` (`F v = (-i)^c v`) and
/// ordered by energy within each class; the `j`-th vector of class `c` gets
/// `m = 4j + c`. The sign of each vector makes its overlap with the sampled
/// Hermite-Gaussian `Psi_m` positive. Construction fails unless the sign
/// alternation count and the parity agree with `m`.
pub fn oscillator_basis(h: &Operator, kind: BasisKind) -> Result<SpectralBasis> {
    let lat = h.lattice();
    let d = lat.d();
    let f = crate::fourier::dft_operator(lat, false);
    let comm = h.commutator(&f)?.frobenius_norm();
    if comm > 1e-9 * h.frobenius_norm().max(1.0) {
        return Err(Error::InvalidParameter {
            name: "h",
            reason: format!("does not commute with F (deviation {comm:.3e})"),
        });
    }
    let (values, vectors) = eigh(h)?;
    if vectors.len() != d {
        return Err(Error::IncompleteBasis {
            expected: d,
            got: vectors.len(),
        });
    }
    for k in 0..d - 1 {
        let gap = values[k + 1] - values[k];
        if gap < 1e-10 {
            return Err(Error::DegenerateSpectrum {
                index: k,
                next: k + 1,
                gap,
            });
        }
    }

    let mut classes: [Vec<usize>; 4] = Default::default();
    for (k, v) in vectors.iter().enumerate() {
        let z = v.inner(&dft(v, false))?;
        let c = fourier_class(z).ok_or(Error::AmbiguousFourierClass {
            index: k,
            value: format!("{z}"),
        })?;
        classes[c].push(k);
    }
    let sign = kind.energy_sign();
    let mut slots: Vec<Option<usize>> = vec![None; d];
    for (c, members) in classes.iter_mut().enumerate() {
        members.sort_by(|&i, &j| (sign * values[i]).total_cmp(&(sign * values[j])));
        for (j, &k) in members.iter().enumerate() {
            let m = 4 * j + c;
            if m >= d {
                return Err(Error::Ordering {
                    m,
                    reason: format!("Fourier class {c} has too many members for d = {d}"),
                });
            }
            slots[m] = Some(k);
        }
    }

    let x: Vec<f64> = lat.indices().map(|n| lat.point(n)).collect();
    let psi = hermite_gaussian_all(d - 1, &x)?;
    let mut out_values = Vec::with_capacity(d);
    let mut out_vectors = Vec::with_capacity(d);
    let mut labels = Vec::with_capacity(d);
    for (m, slot) in slots.iter().enumerate() {
        let k = slot.ok_or(Error::Ordering {
            m,
            reason: "no eigenvector has this Fourier class position".into(),
        })?;
        let v = &vectors[k];
        let overlap: f64 = v.real_parts().iter().zip(&psi[m]).map(|(a, b)| a * b).sum();
        let v = if overlap < 0.0 {
            v.scale(Complex64::new(-1.0, 0.0))
        } else {
            v.clone()
        };
        let alternations = sign_alternations(&v);
        let parity = parity_of(&v, 1e-10).ok_or(Error::Ordering {
            m,
            reason: "vector is neither even nor odd".into(),
        })?;
        if alternations != m {
            return Err(Error::Ordering {
                m,
                reason: format!("{alternations} sign alternations"),
            });
        }
        let expected = if m % 2 == 0 { Parity::Even } else { Parity::Odd };
        if parity != expected {
            return Err(Error::Ordering {
                m,
                reason: format!("parity is {}", parity.name()),
            });
        }
        out_values.push(values[k]);
        out_vectors.push(v);
        labels.push(VectorLabels {
            alternations,
            parity,
            fourier_index: m,
            rank: k,
        });
    }
    Ok(SpectralBasis {
        lattice: lat,
        kind,
        values: out_values,
        vectors: out_vectors,
        labels,
    })
}

/// The Harper basis `h_m`.
pub fn harper_basis(lat: Lattice) -> Result<SpectralBasis> {
    oscillator_basis(&harper_hamiltonian(lat).h, BasisKind::Harper)
}

/// Largest `||H v - lambda v|| / ||H||_F` over a basis.
pub fn eigen_residual(h: &Operator, basis: &SpectralBasis) -> f64 {
    let norm = h.frobenius_norm();
    basis
        .vectors()
        .iter()
        .zip(basis.values())
        .map(|(v, &l)| (&h.apply(v).expect("same lattice") - &v.scale(Complex64::new(l, 0.0))).norm() / norm)
        .fold(0.0, f64::max)
}
