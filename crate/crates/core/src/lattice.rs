//! The discrete configuration space and the Hilbert space of functions on it.
//!
//! A [`Lattice`] of odd dimension `d = 2s + 1` is the centred grid
//! `{ n sqrt(delta) : n = -s..=s }` with `delta = 2 pi / d`. Functions on the grid
//! are [`Signal`]s and linear maps between them are [`Operator`]s. Every public
//! index uses the symmetric range `-s..=s`; indices outside it are reduced
//! modulo `d`, so signals behave as `d`-periodic functions on `Z sqrt(delta)`.

use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_complex::Complex64;

use crate::error::{Error, Result};

/// The grid `R_d` of `d = 2s + 1` points spaced `sqrt(2 pi / d)` apart.
#[derive(Clone, Copy)]
pub struct Lattice {
    d: usize,
    s: i64,
    delta: f64,
}

impl Lattice {
    pub fn new(d: usize) -> Result<Self> {
        if d % 2 == 0 {
            return Err(Error::EvenDimension(d));
        }
        if d < 5 {
            return Err(Error::DimensionTooSmall(d));
        }
        Ok(Self {
            d,
            s: ((d - 1) / 2) as i64,
            delta: 2.0 * PI / d as f64,
        })
    }

    #[inline]
    pub fn d(&self) -> usize {
        self.d
    }

    #[inline]
    pub fn s(&self) -> i64 {
        self.s
    }

    /// Squared grid spacing, `2 pi / d`.
    #[inline]
    pub fn delta(&self) -> f64 {
        self.delta
    }

    #[inline]
    pub fn spacing(&self) -> f64 {
        self.delta.sqrt()
    }

    /// Grid coordinate `n sqrt(delta)`.
    #[inline]
    pub fn point(&self, n: i64) -> f64 {
        n as f64 * self.spacing()
    }

    /// The symmetric index range `-s..=s`.
    pub fn indices(&self) -> impl DoubleEndedIterator<Item = i64> + Clone {
        -self.s..=self.s
    }

    /// Reduces any integer to its representative in `-s..=s`.
    #[inline]
    pub fn reduce(&self, n: i64) -> i64 {
        (n + self.s).rem_euclid(self.d as i64) - self.s
    }

    /// Storage position of index `n` after periodic reduction.
    #[inline]
    pub fn slot(&self, n: i64) -> usize {
        (n + self.s).rem_euclid(self.d as i64) as usize
    }

    /// Symmetric index stored at position `slot`.
    #[inline]
    pub fn index_of(&self, slot: usize) -> i64 {
        slot as i64 - self.s
    }

    pub fn check_index(&self, n: i64) -> Result<()> {
        if n.abs() > self.s {
            return Err(Error::IndexOutOfRange { index: n, s: self.s });
        }
        Ok(())
    }

    pub fn ensure_same(&self, other: &Lattice) -> Result<()> {
        if self.d != other.d {
            return Err(Error::LatticeMismatch {
                left: self.d,
                right: other.d,
            });
        }
        Ok(())
    }
}

impl PartialEq for Lattice {
    fn eq(&self, other: &Self) -> bool {
        self.d == other.d
    }
}

impl Eq for Lattice {}

impl fmt::Debug for Lattice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Lattice {{ d: {}, s: {}, delta: {} }}", self.d, self.s, self.delta)
    }
}

/// A complex function on the lattice, stored as `d` amplitudes.
#[derive(Clone, Debug, PartialEq)]
pub struct Signal {
    lattice: Lattice,
    amp: Vec<Complex64>,
}

impl Signal {
    pub fn zeros(lattice: Lattice) -> Self {
        Self {
            lattice,
            amp: vec![Complex64::new(0.0, 0.0); lattice.d()],
        }
    }

    /// Builds a signal from amplitudes listed in index order `-s..=s`.
    pub fn from_amplitudes(lattice: Lattice, amp: Vec<Complex64>) -> Result<Self> {
        if amp.len() != lattice.d() {
            return Err(Error::LengthMismatch {
                expected: lattice.d(),
                got: amp.len(),
            });
        }
        Ok(Self { lattice, amp })
    }

    pub fn from_real(lattice: Lattice, values: &[f64]) -> Result<Self> {
        Self::from_amplitudes(
            lattice,
            values.iter().map(|&x| Complex64::new(x, 0.0)).collect(),
        )
    }

    /// Samples `f(n)` for every index `n` in `-s..=s`.
    pub fn from_fn(lattice: Lattice, mut f: impl FnMut(i64) -> Complex64) -> Self {
        Self {
            lattice,
            amp: lattice.indices().map(&mut f).collect(),
        }
    }

    pub fn from_real_fn(lattice: Lattice, mut f: impl FnMut(i64) -> f64) -> Self {
        Self::from_fn(lattice, |n| Complex64::new(f(n), 0.0))
    }

    /// The basis vector `epsilon_n`.
    pub fn basis(lattice: Lattice, n: i64) -> Self {
        let mut out = Self::zeros(lattice);
        out.amp[lattice.slot(n)] = Complex64::new(1.0, 0.0);
        out
    }

    #[inline]
    pub fn lattice(&self) -> Lattice {
        self.lattice
    }

    /// Amplitudes in index order `-s..=s`.
    #[inline]
    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amp
    }

    #[inline]
    pub fn amplitudes_mut(&mut self) -> &mut [Complex64] {
        &mut self.amp
    }

    /// Value at index `n`, reduced periodically.
    #[inline]
    pub fn at(&self, n: i64) -> Complex64 {
        self.amp[self.lattice.slot(n)]
    }

    #[inline]
    pub fn set(&mut self, n: i64, value: Complex64) {
        let slot = self.lattice.slot(n);
        self.amp[slot] = value;
    }

    pub fn real_parts(&self) -> Vec<f64> {
        self.amp.iter().map(|z| z.re).collect()
    }

    pub fn imag_parts(&self) -> Vec<f64> {
        self.amp.iter().map(|z| z.im).collect()
    }

    /// `sum_n conj(self[n]) other[n]`.
    pub fn inner(&self, other: &Signal) -> Result<Complex64> {
        self.lattice.ensure_same(&other.lattice)?;
        Ok(self
            .amp
            .iter()
            .zip(&other.amp)
            .map(|(a, b)| a.conj() * b)
            .sum())
    }

    pub fn norm(&self) -> f64 {
        self.amp.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    pub fn scale(&self, factor: Complex64) -> Signal {
        Signal {
            lattice: self.lattice,
            amp: self.amp.iter().map(|z| z * factor).collect(),
        }
    }

    pub fn map(&self, f: impl Fn(Complex64) -> Complex64) -> Signal {
        Signal {
            lattice: self.lattice,
            amp: self.amp.iter().map(|&z| f(z)).collect(),
        }
    }

    /// Pointwise product.
    pub fn hadamard(&self, other: &Signal) -> Result<Signal> {
        self.lattice.ensure_same(&other.lattice)?;
        Ok(Signal {
            lattice: self.lattice,
            amp: self.amp.iter().zip(&other.amp).map(|(a, b)| a * b).collect(),
        })
    }

    /// `phi(-n)`.
    pub fn reflect(&self) -> Signal {
        Signal::from_fn(self.lattice, |n| self.at(-n))
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Signal) -> f64 {
        self.amp
            .iter()
            .zip(&other.amp)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.amp.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }
}

impl Add for &Signal {
    type Output = Signal;

    fn add(self, rhs: &Signal) -> Signal {
        assert_eq!(self.lattice, rhs.lattice, "lattice mismatch");
        Signal {
            lattice: self.lattice,
            amp: self.amp.iter().zip(&rhs.amp).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Signal {
    type Output = Signal;

    fn sub(self, rhs: &Signal) -> Signal {
        assert_eq!(self.lattice, rhs.lattice, "lattice mismatch");
        Signal {
            lattice: self.lattice,
            amp: self.amp.iter().zip(&rhs.amp).map(|(a, b)| a - b).collect(),
        }
    }
}

/// The coordinate function `q(n sqrt(delta)) = n sqrt(delta)`.
pub fn coordinate_signal(lattice: Lattice) -> Signal {
    Signal::from_real_fn(lattice, |n| lattice.point(n))
}

/// A dense `d x d` complex matrix in the `{epsilon_n}` basis.
///
/// Entry `(n, m)` is `<epsilon_n | A | epsilon_m>` with `n, m` in `-s..=s`.
#[derive(Clone, Debug, PartialEq)]
pub struct Operator {
    lattice: Lattice,
    data: Vec<Complex64>,
}

impl Operator {
    pub fn zeros(lattice: Lattice) -> Self {
        let d = lattice.d();
        Self {
            lattice,
            data: vec![Complex64::new(0.0, 0.0); d * d],
        }
    }

    pub fn identity(lattice: Lattice) -> Self {
        Self::diagonal(lattice, |_| Complex64::new(1.0, 0.0))
    }

    pub fn diagonal(lattice: Lattice, f: impl Fn(i64) -> Complex64) -> Self {
        let mut out = Self::zeros(lattice);
        for n in lattice.indices() {
            out.set(n, n, f(n));
        }
        out
    }

    /// Fills entry `(n, m)` with `f(n, m)`.
    pub fn from_fn(lattice: Lattice, f: impl Fn(i64, i64) -> Complex64) -> Self {
        let mut data = Vec::with_capacity(lattice.d() * lattice.d());
        for n in lattice.indices() {
            for m in lattice.indices() {
                data.push(f(n, m));
            }
        }
        Self { lattice, data }
    }

    /// Builds an operator from a row-major list of `d * d` entries in index order.
    pub fn from_row_major(lattice: Lattice, data: Vec<Complex64>) -> Result<Self> {
        let expected = lattice.d() * lattice.d();
        if data.len() != expected {
            return Err(Error::LengthMismatch {
                expected,
                got: data.len(),
            });
        }
        Ok(Self { lattice, data })
    }

    /// `|a><b|`.
    pub fn outer(a: &Signal, b: &Signal) -> Result<Self> {
        a.lattice().ensure_same(&b.lattice())?;
        let lattice = a.lattice();
        let mut data = Vec::with_capacity(lattice.d() * lattice.d());
        for x in a.amplitudes() {
            for y in b.amplitudes() {
                data.push(x * y.conj());
            }
        }
        Ok(Self { lattice, data })
    }

    #[inline]
    pub fn lattice(&self) -> Lattice {
        self.lattice
    }

    #[inline]
    fn offset(&self, n: i64, m: i64) -> usize {
        self.lattice.slot(n) * self.lattice.d() + self.lattice.slot(m)
    }

    /// Entry `(n, m)`; indices are reduced periodically.
    #[inline]
    pub fn get(&self, n: i64, m: i64) -> Complex64 {
        self.data[self.offset(n, m)]
    }

    #[inline]
    pub fn set(&mut self, n: i64, m: i64, value: Complex64) {
        let k = self.offset(n, m);
        self.data[k] = value;
    }

    /// Row-major entries in storage order.
    #[inline]
    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    /// Adds `weight |v><v|` in place.
    pub fn add_projector(&mut self, v: &Signal, weight: Complex64) {
        let d = self.lattice.d();
        let amp = v.amplitudes();
        for (i, x) in amp.iter().enumerate() {
            let wx = weight * x;
            let row = &mut self.data[i * d..(i + 1) * d];
            for (entry, y) in row.iter_mut().zip(amp) {
                *entry += wx * y.conj();
            }
        }
    }

    pub fn apply(&self, v: &Signal) -> Result<Signal> {
        self.lattice.ensure_same(&v.lattice())?;
        let d = self.lattice.d();
        let amp = v.amplitudes();
        let out = self
            .data
            .chunks_exact(d)
            .map(|row| row.iter().zip(amp).map(|(a, b)| a * b).sum())
            .collect();
        Signal::from_amplitudes(self.lattice, out)
    }

    pub fn matmul(&self, rhs: &Operator) -> Result<Operator> {
        self.lattice.ensure_same(&rhs.lattice)?;
        let d = self.lattice.d();
        let mut data = vec![Complex64::new(0.0, 0.0); d * d];
        for i in 0..d {
            let out_row = &mut data[i * d..(i + 1) * d];
            for k in 0..d {
                let a = self.data[i * d + k];
                if a == Complex64::new(0.0, 0.0) {
                    continue;
                }
                let rhs_row = &rhs.data[k * d..(k + 1) * d];
                for (o, b) in out_row.iter_mut().zip(rhs_row) {
                    *o += a * b;
                }
            }
        }
        Ok(Operator {
            lattice: self.lattice,
            data,
        })
    }

    pub fn adjoint(&self) -> Operator {
        let d = self.lattice.d();
        let mut data = vec![Complex64::new(0.0, 0.0); d * d];
        for i in 0..d {
            for j in 0..d {
                data[j * d + i] = self.data[i * d + j].conj();
            }
        }
        Operator {
            lattice: self.lattice,
            data,
        }
    }

    pub fn transpose(&self) -> Operator {
        let d = self.lattice.d();
        let mut data = vec![Complex64::new(0.0, 0.0); d * d];
        for i in 0..d {
            for j in 0..d {
                data[j * d + i] = self.data[i * d + j];
            }
        }
        Operator {
            lattice: self.lattice,
            data,
        }
    }

    pub fn scale(&self, factor: Complex64) -> Operator {
        Operator {
            lattice: self.lattice,
            data: self.data.iter().map(|z| z * factor).collect(),
        }
    }

    pub fn trace(&self) -> Complex64 {
        let d = self.lattice.d();
        (0..d).map(|i| self.data[i * d + i]).sum()
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Frobenius norm of `self - other`.
    pub fn frobenius_distance(&self, other: &Operator) -> f64 {
        assert_eq!(self.lattice, other.lattice, "lattice mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm_sqr())
            .sum::<f64>()
            .sqrt()
    }

    /// Largest entrywise modulus of `self - other`.
    pub fn max_abs_diff(&self, other: &Operator) -> f64 {
        assert_eq!(self.lattice, other.lattice, "lattice mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn max_imag(&self) -> f64 {
        self.data.iter().map(|z| z.im.abs()).fold(0.0, f64::max)
    }

    /// Largest `|A(n,m) - conj(A(m,n))|`.
    pub fn hermitian_deviation(&self) -> f64 {
        self.max_abs_diff(&self.adjoint())
    }

    /// `AB - BA`.
    pub fn commutator(&self, other: &Operator) -> Result<Operator> {
        Ok(&self.matmul(other)? - &other.matmul(self)?)
    }

    /// The real part as a row-major `d x d` array.
    pub fn real_matrix(&self) -> Vec<f64> {
        self.data.iter().map(|z| z.re).collect()
    }

    /// Columns of the matrix as signals.
    pub fn column(&self, m: i64) -> Signal {
        Signal::from_fn(self.lattice, |n| self.get(n, m))
    }
}

impl Add for &Operator {
    type Output = Operator;

    fn add(self, rhs: &Operator) -> Operator {
        assert_eq!(self.lattice, rhs.lattice, "lattice mismatch");
        Operator {
            lattice: self.lattice,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a + b).collect(),
        }
    }
}

impl Sub for &Operator {
    type Output = Operator;

    fn sub(self, rhs: &Operator) -> Operator {
        assert_eq!(self.lattice, rhs.lattice, "lattice mismatch");
        Operator {
            lattice: self.lattice,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a - b).collect(),
        }
    }
}

impl Mul for &Operator {
    type Output = Operator;

    fn mul(self, rhs: &Operator) -> Operator {
        self.matmul(rhs).expect("lattice mismatch")
    }
}

impl Mul<&Signal> for &Operator {
    type Output = Signal;

    fn mul(self, rhs: &Signal) -> Signal {
        self.apply(rhs).expect("lattice mismatch")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    #[test]
    fn make_lattice_examples() {
        let lat = Lattice::new(21).unwrap();
        assert_eq!(lat.d(), 21);
        assert_eq!(lat.s(), 10);
        assert!((lat.delta() - 2.0 * PI / 21.0).abs() < 1e-16);
        assert!((lat.delta() * 21.0 / (2.0 * PI) - 1.0).abs() < 1e-15);

        let lat = Lattice::new(5).unwrap();
        assert_eq!((lat.d(), lat.s()), (5, 2));
        assert!((lat.delta() - 2.0 * PI / 5.0).abs() < 1e-16);

        assert_eq!(Lattice::new(4), Err(Error::EvenDimension(4)));
        assert_eq!(Lattice::new(3), Err(Error::DimensionTooSmall(3)));
        assert_eq!(Lattice::new(1), Err(Error::DimensionTooSmall(1)));
    }

    #[test]
    fn lattices_compare_by_dimension() {
        assert_eq!(Lattice::new(7).unwrap(), Lattice::new(7).unwrap());
        assert_ne!(Lattice::new(7).unwrap(), Lattice::new(9).unwrap());
    }

    #[test]
    fn basis_is_orthonormal() {
        let lat = Lattice::new(21).unwrap();
        let e3 = Signal::basis(lat, 3);
        let e4 = Signal::basis(lat, 4);
        assert_eq!(e3.inner(&e3).unwrap(), c(1.0, 0.0));
        assert_eq!(e3.inner(&e4).unwrap(), c(0.0, 0.0));
        for n in lat.indices() {
            assert_eq!(Signal::basis(lat, n).norm(), 1.0);
        }
    }

    #[test]
    fn inner_product_rejects_mismatched_lattices() {
        let a = Signal::zeros(Lattice::new(5).unwrap());
        let b = Signal::zeros(Lattice::new(7).unwrap());
        assert_eq!(
            a.inner(&b),
            Err(Error::LatticeMismatch { left: 5, right: 7 })
        );
    }

    #[test]
    fn coordinate_signal_values() {
        let lat = Lattice::new(21).unwrap();
        let q = coordinate_signal(lat);
        assert_eq!(q.at(0), c(0.0, 0.0));
        assert_eq!(q.at(10).re, 10.0 * (2.0 * PI / 21.0).sqrt());
        let total: Complex64 = q.amplitudes().iter().sum();
        assert!(total.norm() < 1e-14);
    }

    #[test]
    fn from_amplitudes_checks_length() {
        let lat = Lattice::new(5).unwrap();
        assert!(Signal::from_real(lat, &[1.0; 4]).is_err());
        assert!(Operator::from_row_major(lat, vec![c(0.0, 0.0); 24]).is_err());
    }

    #[test]
    fn index_reduction_round_trips() {
        let lat = Lattice::new(9).unwrap();
        for slot in 0..9 {
            assert_eq!(lat.slot(lat.index_of(slot)), slot);
        }
        assert_eq!(lat.reduce(5), -4);
        assert_eq!(lat.reduce(-5), 4);
        assert_eq!(lat.reduce(-13), -4);
    }

    fn signal_strategy(d: usize) -> impl Strategy<Value = Vec<(f64, f64)>> {
        prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0), d)
    }

    fn build(lat: Lattice, v: &[(f64, f64)]) -> Signal {
        Signal::from_amplitudes(lat, v.iter().map(|&(a, b)| c(a, b)).collect()).unwrap()
    }

    proptest! {
        #[test]
        fn inner_product_is_sesquilinear(
            a in signal_strategy(7),
            b in signal_strategy(7),
            cc in signal_strategy(7),
            zr in -2.0f64..2.0,
            zi in -2.0f64..2.0,
        ) {
            let lat = Lattice::new(7).unwrap();
            let (a, b, cc) = (build(lat, &a), build(lat, &b), build(lat, &cc));
            let z = c(zr, zi);
            let lhs = a.inner(&(&b + &cc.scale(z))).unwrap();
            let rhs = a.inner(&b).unwrap() + z * a.inner(&cc).unwrap();
            let scale = 1.0 + lhs.norm().max(rhs.norm());
            prop_assert!((lhs - rhs).norm() <= 1e-14 * scale);
            let ab = a.inner(&b).unwrap();
            let ba = b.inner(&a).unwrap();
            prop_assert!((ab - ba.conj()).norm() <= 1e-14 * (1.0 + ab.norm()));
        }

        #[test]
        fn periodic_access_is_exact(v in signal_strategy(11), n in -40i64..40) {
            let lat = Lattice::new(11).unwrap();
            let sig = build(lat, &v);
            prop_assert_eq!(sig.at(n), sig.at(n + 11));
            prop_assert_eq!(sig.at(n), sig.at(n - 11));
        }
    }
}
