//! Continuous-side references sampled on the lattice.
//!
//! Hermite-Gaussians, continuous coherent states, Mehta functions, the
//! deviation metrics between finite bases and `delta^{1/4} Psi_m`, and two
//! independent routes to the continuous fractional Fourier transform.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::lattice::{Lattice, Signal};
use crate::phasespace::{coherent_state, PhasePoint};
use crate::spectral::SpectralBasis;
use crate::thetagauss::GroundState;

/// Highest Hermite-Gaussian order the normalised recurrence is used for.
pub const MAX_HERMITE_ORDER: usize = 300;

/// Default number of Hermite terms in [`continuous_frft_oracle`].
pub const DEFAULT_ORACLE_TERMS: usize = 300;

/// Default number of number-state terms for the continuous coherent state in the coherent-state table.
pub const DEFAULT_EXPANSION_TERMS: usize = 51;

/// Integration window for the oracles.
pub const QUADRATURE_WINDOW: f64 = 12.0;

/// Largest quadrature step used by the oracles.
pub const QUADRATURE_STEP: f64 = 1e-3;

fn check_order(m: usize) -> Result<()> {
    if m > MAX_HERMITE_ORDER {
        return Err(Error::InvalidParameter {
            name: "m",
            reason: format!("Hermite order {m} exceeds {MAX_HERMITE_ORDER}"),
        });
    }
    Ok(())
}

/// `Psi_m(x) = (m! 2^m sqrt(pi))^{-1/2} H_m(x) exp(-x^2/2)`.
pub fn hermite_gaussian(m: usize, x: f64) -> Result<f64> {
    check_order(m)?;
    let mut prev = 0.0;
    let mut cur = PI.powf(-0.25) * (-0.5 * x * x).exp();
    for k in 0..m {
        let kf = k as f64;
        let next = x * (2.0 / (kf + 1.0)).sqrt() * cur - (kf / (kf + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// `Psi_0 ..= Psi_max_m` at every point of `xs`; row `m` holds `Psi_m`.
pub fn hermite_gaussian_all(max_m: usize, xs: &[f64]) -> Result<Vec<Vec<f64>>> {
    check_order(max_m)?;
    let mut rows = Vec::with_capacity(max_m + 1);
    rows.push(xs.iter().map(|x| PI.powf(-0.25) * (-0.5 * x * x).exp()).collect::<Vec<_>>());
    let mut prev = vec![0.0; xs.len()];
    for k in 0..max_m {
        let kf = k as f64;
        let a = (2.0 / (kf + 1.0)).sqrt();
        let b = (kf / (kf + 1.0)).sqrt();
        let cur = &rows[k];
        let next: Vec<f64> = xs
            .iter()
            .zip(cur.iter().zip(&prev))
            .map(|(x, (c, p))| x * a * c - b * p)
            .collect();
        prev = cur.clone();
        rows.push(next);
    }
    Ok(rows)
}

/// `delta^{1/4} Psi_m(n sqrt(delta))` on the lattice.
pub fn hermite_sample(lat: Lattice, m: usize) -> Result<Signal> {
    let scale = lat.delta().powf(0.25);
    let xs: Vec<f64> = lat.indices().map(|n| lat.point(n)).collect();
    let rows = hermite_gaussian_all(m, &xs)?;
    Signal::from_real(lat, &rows[m].iter().map(|v| scale * v).collect::<Vec<_>>())
}

/// The continuous coherent state `e^{-i a b/2} e^{i b x} Psi_0(x - a)`.
pub fn continuous_coherent_state(alpha: f64, beta: f64, x: f64) -> Complex64 {
    let psi0 = PI.powf(-0.25) * (-0.5 * (x - alpha).powi(2)).exp();
    Complex64::from_polar(psi0, -0.5 * alpha * beta + beta * x)
}

/// The same state from its number-state expansion
/// `e^{-|z|^2/2} sum_{m < terms} z^m / sqrt(m!) Psi_m(x)` with `z = (alpha + i beta)/sqrt(2)`.
pub fn continuous_coherent_expansion(alpha: f64, beta: f64, xs: &[f64], terms: usize) -> Result<Vec<Complex64>> {
    if terms == 0 {
        return Err(Error::InvalidParameter {
            name: "terms",
            reason: "must be at least 1".into(),
        });
    }
    let psi = hermite_gaussian_all(terms - 1, xs)?;
    let z = Complex64::new(alpha, beta) / 2f64.sqrt();
    let mut coef = Complex64::new((-0.5 * z.norm_sqr()).exp(), 0.0);
    let mut out = vec![Complex64::new(0.0, 0.0); xs.len()];
    for (m, row) in psi.iter().enumerate() {
        if m > 0 {
            coef *= z / (m as f64).sqrt();
        }
        for (o, p) in out.iter_mut().zip(row) {
            *o += coef * p;
        }
    }
    Ok(out)
}

/// `delta^{1/4} D(alpha, beta) Psi_0` sampled on the lattice.
pub fn displaced_ground_sample(lat: Lattice, p: PhasePoint) -> Signal {
    let scale = lat.delta().powf(0.25);
    Signal::from_fn(lat, |n| continuous_coherent_state(p.alpha, p.beta, lat.point(n)) * scale)
}

/// `delta^{1/4}` times the truncated number-state expansion, sampled on the lattice.
pub fn displaced_ground_expansion(lat: Lattice, p: PhasePoint, terms: usize) -> Result<Signal> {
    let scale = lat.delta().powf(0.25);
    let xs: Vec<f64> = lat.indices().map(|n| lat.point(n)).collect();
    let vals = continuous_coherent_expansion(p.alpha, p.beta, &xs, terms)?;
    Signal::from_amplitudes(lat, vals.into_iter().map(|v| v * scale).collect())
}

/// How the continuous coherent state is evaluated when comparing with `|alpha, beta>_d`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoherentReference {
    ClosedForm,
    NumberExpansion(usize),
}

/// `max_{|n| <= n_max} | |alpha, beta>_d (n) - delta^{1/4} |alpha, beta>(n sqrt(delta)) |`.
pub fn coherent_state_deviation(
    ground: &GroundState,
    p: PhasePoint,
    reference: CoherentReference,
    n_max: i64,
) -> Result<f64> {
    let lat = ground.lattice();
    let discrete = coherent_state(ground, p);
    let continuous = match reference {
        CoherentReference::ClosedForm => displaced_ground_sample(lat, p),
        CoherentReference::NumberExpansion(terms) => displaced_ground_expansion(lat, p, terms)?,
    };
    Ok((-n_max.min(lat.s())..=n_max.min(lat.s()))
        .map(|n| (discrete.at(n) - continuous.at(n)).norm())
        .fold(0.0, f64::max))
}

/// Mehta function `Phi_m(n) = sum_l Psi_m((l d + n) sqrt(delta))`, unscaled.
pub fn mehta_function(lat: Lattice, m: usize, tol: f64) -> Result<Signal> {
    if m >= lat.d() {
        return Err(Error::InvalidParameter {
            name: "m",
            reason: format!("must be below d = {}, got {m}", lat.d()),
        });
    }
    if !(tol > 0.0) {
        return Err(Error::InvalidParameter {
            name: "tol",
            reason: format!("must be positive, got {tol}"),
        });
    }
    // Beyond the turning point sqrt(2m + 1) the Hermite-Gaussian decays monotonically.
    let turning = (2.0 * m as f64 + 1.0).sqrt() + 1.0;
    let di = lat.d() as i64;
    let mut out = Vec::with_capacity(lat.d());
    for n in lat.indices() {
        let mut acc = hermite_gaussian(m, lat.point(n))?;
        let mut l = 1i64;
        loop {
            let a = hermite_gaussian(m, lat.point(l * di + n))?;
            let b = hermite_gaussian(m, lat.point(-l * di + n))?;
            acc += a + b;
            let nearest = lat.point(l * di - n.abs()).abs();
            if nearest > turning && a.abs().max(b.abs()) < tol {
                break;
            }
            l += 1;
        }
        out.push(acc);
    }
    Signal::from_real(lat, &out)
}

/// Per-`m` deviations of four candidate finite Hermite bases from `delta^{1/4} Psi_m`.
#[derive(Clone, Debug, PartialEq)]
pub struct DeviationReport {
    pub delta_f: Vec<f64>,
    pub delta_h: Vec<f64>,
    pub delta_m: Vec<f64>,
    pub delta_r: Vec<f64>,
}

impl DeviationReport {
    pub fn len(&self) -> usize {
        self.delta_f.len()
    }

    pub fn is_empty(&self) -> bool {
        self.delta_f.is_empty()
    }

    /// Number of indices where the frame basis is closer than the Harper basis.
    pub fn frame_wins(&self) -> usize {
        self.delta_f.iter().zip(&self.delta_h).filter(|(f, h)| f < h).count()
    }
}

/// Builds the deviation report.
///
/// Mehta functions are scaled by `delta^{1/4}` like the continuous reference.
/// Ladder states are compared as given unless `normalize_ladder` is set.
pub fn deviation_report(
    lat: Lattice,
    frame_basis: &SpectralBasis,
    harper_basis: &SpectralBasis,
    ladder_states: &[Signal],
    normalize_ladder: bool,
) -> Result<DeviationReport> {
    let d = lat.d();
    for b in [frame_basis, harper_basis] {
        lat.ensure_same(&b.lattice())?;
        if b.len() != d {
            return Err(Error::IncompleteBasis {
                expected: d,
                got: b.len(),
            });
        }
    }
    if ladder_states.len() != d {
        return Err(Error::IncompleteBasis {
            expected: d,
            got: ladder_states.len(),
        });
    }
    let scale = lat.delta().powf(0.25);
    let xs: Vec<f64> = lat.indices().map(|n| lat.point(n)).collect();
    let psi = hermite_gaussian_all(d - 1, &xs)?;
    let dev = |v: &Signal, m: usize, factor: f64| -> f64 {
        v.amplitudes()
            .iter()
            .zip(&psi[m])
            .map(|(a, p)| (a * factor - Complex64::new(scale * p, 0.0)).norm())
            .fold(0.0, f64::max)
    };
    let mut report = DeviationReport {
        delta_f: Vec::with_capacity(d),
        delta_h: Vec::with_capacity(d),
        delta_m: Vec::with_capacity(d),
        delta_r: Vec::with_capacity(d),
    };
    for m in 0..d {
        report.delta_f.push(dev(frame_basis.vector(m), m, 1.0));
        report.delta_h.push(dev(harper_basis.vector(m), m, 1.0));
        let phi = mehta_function(lat, m, 1e-18)?;
        report.delta_m.push(dev(&phi, m, scale));
        let r = &ladder_states[m];
        lat.ensure_same(&r.lattice())?;
        let factor = if normalize_ladder { 1.0 / r.norm() } else { 1.0 };
        report.delta_r.push(dev(r, m, factor));
    }
    Ok(report)
}

/// A real function on the line, described by the intervals where it is smooth and nonzero.
pub trait RealLineSignal {
    /// Value at `x`, taken as the limit from inside a piece at piece boundaries.
    fn eval(&self, x: f64) -> f64;

    /// Intervals covering the support; the function is smooth on each closed interval.
    fn pieces(&self) -> Vec<(f64, f64)>;

    fn label(&self) -> String;
}

/// `g_kappa(x) = exp(-kappa x^2 / 2)`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GaussianSignal {
    pub kappa: f64,
}

impl RealLineSignal for GaussianSignal {
    fn eval(&self, x: f64) -> f64 {
        (-0.5 * self.kappa * x * x).exp()
    }

    fn pieces(&self) -> Vec<(f64, f64)> {
        vec![(-QUADRATURE_WINDOW, QUADRATURE_WINDOW)]
    }

    fn label(&self) -> String {
        format!("gauss:{}", self.kappa)
    }
}

/// The indicator of `[-half_width, half_width]`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RectSignal {
    pub half_width: f64,
}

impl RealLineSignal for RectSignal {
    fn eval(&self, x: f64) -> f64 {
        if x.abs() <= self.half_width {
            1.0
        } else {
            0.0
        }
    }

    fn pieces(&self) -> Vec<(f64, f64)> {
        vec![(-self.half_width, self.half_width)]
    }

    fn label(&self) -> String {
        format!("rect:{}", self.half_width)
    }
}

/// Composite Simpson nodes and weights on `[a, b]` with step at most `h`.
fn simpson_nodes(a: f64, b: f64, h: f64) -> (Vec<f64>, Vec<f64>) {
    let mut k = ((b - a) / h).ceil() as usize;
    k = k.max(2);
    if k % 2 == 1 {
        k += 1;
    }
    let step = (b - a) / k as f64;
    let mut xs = Vec::with_capacity(k + 1);
    let mut ws = Vec::with_capacity(k + 1);
    for i in 0..=k {
        xs.push(a + step * i as f64);
        let w = if i == 0 || i == k {
            1.0
        } else if i % 2 == 1 {
            4.0
        } else {
            2.0
        };
        ws.push(w * step / 3.0);
    }
    (xs, ws)
}

/// Hermite coefficients `<Psi_m, psi>` for `m < terms`.
pub fn hermite_coefficients(psi: &dyn RealLineSignal, terms: usize) -> Result<Vec<f64>> {
    if terms == 0 || terms > MAX_HERMITE_ORDER + 1 {
        return Err(Error::InvalidParameter {
            name: "M",
            reason: format!("must be in 1..={}, got {terms}", MAX_HERMITE_ORDER + 1),
        });
    }
    let mut coef = vec![0.0; terms];
    for (a, b) in psi.pieces() {
        let a = a.max(-QUADRATURE_WINDOW);
        let b = b.min(QUADRATURE_WINDOW);
        if b <= a {
            continue;
        }
        let (xs, ws) = simpson_nodes(a, b, QUADRATURE_STEP);
        let fw: Vec<f64> = xs.iter().zip(&ws).map(|(&x, &w)| w * psi.eval(x)).collect();
        let rows = hermite_gaussian_all(terms - 1, &xs)?;
        for (c, row) in coef.iter_mut().zip(&rows) {
            *c += row.iter().zip(&fw).map(|(p, f)| p * f).sum::<f64>();
        }
    }
    Ok(coef)
}

/// `F^alpha[psi]` at the lattice points from the Hermite series
/// `sum_{m < terms} exp(-i pi m alpha / 2) <Psi_m, psi> Psi_m(x)`. Values are unscaled.
pub fn continuous_frft_oracle(psi: &dyn RealLineSignal, alpha: f64, terms: usize, grid: Lattice) -> Result<Signal> {
    let coef = hermite_coefficients(psi, terms)?;
    let xs: Vec<f64> = grid.indices().map(|n| grid.point(n)).collect();
    let rows = hermite_gaussian_all(terms - 1, &xs)?;
    let mut out = vec![Complex64::new(0.0, 0.0); xs.len()];
    for (m, (c, row)) in coef.iter().zip(&rows).enumerate() {
        let ph = Complex64::from_polar(*c, -PI * m as f64 * alpha / 2.0);
        for (o, p) in out.iter_mut().zip(row) {
            *o += ph * p;
        }
    }
    Signal::from_amplitudes(grid, out)
}

/// `F^alpha[psi]` at the lattice points by direct quadrature of the integral kernel
/// `sqrt((1 - i cot phi) / (2 pi)) exp((i/2) cot phi (x^2 + t^2) - i x t csc phi)`,
/// `phi = alpha pi / 2`. Orders `alpha = 0, 2 (mod 4)` return `psi(x)` and `psi(-x)`.
pub fn continuous_frft_direct(psi: &dyn RealLineSignal, alpha: f64, grid: Lattice, step: f64) -> Result<Signal> {
    if !(step > 0.0) {
        return Err(Error::InvalidParameter {
            name: "step",
            reason: format!("must be positive, got {step}"),
        });
    }
    let r = alpha.rem_euclid(4.0);
    let near = |v: f64| (r - v).abs() < 1e-12 || (r - v - 4.0).abs() < 1e-12;
    if near(0.0) {
        return Ok(Signal::from_real_fn(grid, |n| psi.eval(grid.point(n))));
    }
    if near(2.0) {
        return Ok(Signal::from_real_fn(grid, |n| psi.eval(-grid.point(n))));
    }
    let phi = alpha * PI / 2.0;
    let cot = phi.cos() / phi.sin();
    let csc = 1.0 / phi.sin();
    let pref = (Complex64::new(1.0, -cot) / (2.0 * PI)).sqrt();
    let mut nodes = Vec::new();
    for (a, b) in psi.pieces() {
        let a = a.max(-QUADRATURE_WINDOW);
        let b = b.min(QUADRATURE_WINDOW);
        if b <= a {
            continue;
        }
        let (xs, ws) = simpson_nodes(a, b, step);
        for (&t, &w) in xs.iter().zip(&ws) {
            let f = psi.eval(t);
            if f != 0.0 {
                nodes.push((t, w * f * (0.5 * cot * t * t).cos(), w * f * (0.5 * cot * t * t).sin()));
            }
        }
    }
    let out = grid
        .indices()
        .map(|n| {
            let x = grid.point(n);
            let mut acc = Complex64::new(0.0, 0.0);
            for &(t, wr, wi) in &nodes {
                let e = Complex64::from_polar(1.0, -x * t * csc);
                acc += e * Complex64::new(wr, wi);
            }
            pref * Complex64::from_polar(1.0, 0.5 * cot * x * x) * acc
        })
        .collect();
    Signal::from_amplitudes(grid, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spectral::harper_basis;
    use crate::thetagauss::{ground_state, theta_gaussian, DEFAULT_TOL};

    fn lat(d: usize) -> Lattice {
        Lattice::new(d).unwrap()
    }

    #[test]
    fn hermite_values() {
        assert_eq!(hermite_gaussian(0, 0.0).unwrap(), PI.powf(-0.25));
        assert_eq!(hermite_gaussian(1, 0.0).unwrap(), 0.0);
        assert!(hermite_gaussian(301, 0.0).is_err());
        // Psi_2 = (2x^2 - 1) / sqrt(2 sqrt(pi)) e^{-x^2/2}
        let x: f64 = 0.7;
        let exact = (2.0 * x * x - 1.0) / (2.0 * PI.sqrt()).sqrt() * (-x * x / 2.0).exp();
        assert!((hermite_gaussian(2, x).unwrap() - exact).abs() < 1e-15);
    }

    #[test]
    fn hermite_norm_by_trapezoid() {
        let h = 1e-3;
        let n = 20_000;
        let mut acc = 0.0;
        for i in 0..=n {
            let x = -10.0 + h * i as f64;
            let w = if i == 0 || i == n { 0.5 } else { 1.0 };
            acc += w * hermite_gaussian(2, x).unwrap().powi(2);
        }
        assert!((acc * h - 1.0).abs() < 1e-8);
    }

    #[test]
    fn hermite_batch_matches_scalar_and_stays_bounded() {
        let xs: Vec<f64> = (0..=240).map(|i| -12.0 + 0.1 * i as f64).collect();
        let rows = hermite_gaussian_all(300, &xs).unwrap();
        for m in [0, 1, 7, 150, 300] {
            for (x, v) in xs.iter().zip(&rows[m]) {
                assert_eq!(*v, hermite_gaussian(m, *x).unwrap());
            }
        }
        for row in &rows {
            assert!(row.iter().all(|v| v.is_finite() && v.abs() < 1.0));
        }
    }

    #[test]
    fn ground_state_approximates_hermite_ground() {
        let l = lat(21);
        let g = ground_state(l).to_signal();
        assert!(g.max_abs_diff(&hermite_sample(l, 0).unwrap()) < 1e-7);
    }

    #[test]
    fn table_anchor_values() {
        let l = lat(21);
        let g = ground_state(l);
        let cases = [(1, 1, 2.44895e-10), (3, 6, 1.76877e-7), (6, 6, 0.000364047), (9, 3, 0.0507198)];
        for (a, b, expect) in cases {
            let p = PhasePoint::new(l, a, b).unwrap();
            let dev = coherent_state_deviation(&g, p, CoherentReference::ClosedForm, 8).unwrap();
            assert!((dev / expect - 1.0).abs() < 0.01, "({a},{b}): {dev}");
        }
    }

    #[test]
    fn number_expansion_reproduces_beta_dependence() {
        let l = lat(21);
        let g = ground_state(l);
        let r = CoherentReference::NumberExpansion(DEFAULT_EXPANSION_TERMS);
        let cases = [(1, 9, 2.43229e-9), (3, 9, 1.70238e-7), (6, 9, 0.000364667), (9, 9, 0.0507748)];
        for (a, b, expect) in cases {
            let p = PhasePoint::new(l, a, b).unwrap();
            let dev = coherent_state_deviation(&g, p, r, 8).unwrap();
            assert!((dev / expect - 1.0).abs() < 0.01, "({a},{b}): {dev}");
        }
        // Converged expansion equals the closed form.
        let xs = [-1.3, 0.0, 2.2];
        let full = continuous_coherent_expansion(1.0, -0.5, &xs, 120).unwrap();
        for (x, v) in xs.iter().zip(full) {
            assert!((v - continuous_coherent_state(1.0, -0.5, *x)).norm() < 1e-14);
        }
    }

    #[test]
    fn mehta_ground_is_periodic_gaussian() {
        let l = lat(21);
        let phi0 = mehta_function(l, 0, 1e-18).unwrap();
        let g1 = theta_gaussian(l, 1.0, DEFAULT_TOL).unwrap();
        for n in l.indices() {
            assert!((phi0.at(n).re - PI.powf(-0.25) * g1.at(n)).abs() < 1e-12);
        }
        assert!(mehta_function(l, 21, 1e-18).is_err());
    }

    #[test]
    fn mehta_functions_are_near_fourier_eigenvectors() {
        let l = lat(21);
        for m in 0..=5 {
            let phi = mehta_function(l, m, 1e-18).unwrap();
            let f = crate::fourier::dft(&phi, false);
            let target = phi.scale(crate::fourier::fourier_eigenvalue(m));
            assert!(f.max_abs_diff(&target) < 1e-3, "m = {m}");
        }
    }

    #[test]
    fn deviation_report_rejects_short_inputs() {
        let l = lat(7);
        let h = harper_basis(l).unwrap();
        assert!(deviation_report(l, &h, &h, &[], false).is_err());
    }

    #[test]
    fn oracle_low_orders() {
        let l = lat(21);
        let gauss = GaussianSignal { kappa: 10.0 };
        let id = continuous_frft_oracle(&gauss, 0.0, DEFAULT_ORACLE_TERMS, l).unwrap();
        let ft = continuous_frft_oracle(&gauss, 1.0, DEFAULT_ORACLE_TERMS, l).unwrap();
        let par = continuous_frft_oracle(&gauss, 2.0, DEFAULT_ORACLE_TERMS, l).unwrap();
        for n in l.indices() {
            let x = l.point(n);
            assert!((id.at(n) - Complex64::new(gauss.eval(x), 0.0)).norm() < 1e-6);
            let exact = (-x * x / 20.0).exp() / 10f64.sqrt();
            assert!((ft.at(n) - Complex64::new(exact, 0.0)).norm() < 1e-6);
            assert!((par.at(n) - Complex64::new(gauss.eval(-x), 0.0)).norm() < 1e-6);
        }
        assert!(continuous_frft_oracle(&gauss, 0.5, 0, l).is_err());
        assert!(continuous_frft_oracle(&gauss, 0.5, 302, l).is_err());
    }

    #[test]
    fn oracle_routes_agree() {
        let l = lat(21);
        let gauss = GaussianSignal { kappa: 10.0 };
        for alpha in [0.3, 0.5, 1.0, 1.5] {
            let a = continuous_frft_oracle(&gauss, alpha, DEFAULT_ORACLE_TERMS, l).unwrap();
            let b = continuous_frft_direct(&gauss, alpha, l, 1e-4).unwrap();
            assert!(a.max_abs_diff(&b) < 1e-9, "alpha = {alpha}: {}", a.max_abs_diff(&b));
        }
    }

    #[test]
    fn rectangle_fourier_transform() {
        let l = lat(21);
        let rect = RectSignal { half_width: l.spacing() };
        let w = l.spacing();
        let exact = Signal::from_real_fn(l, |n| {
            let x = l.point(n);
            let v = if n == 0 { w } else { (w * x).sin() / x };
            (2.0 / PI).sqrt() * v
        });
        let direct = continuous_frft_direct(&rect, 1.0, l, 1e-4).unwrap();
        assert!(direct.max_abs_diff(&exact) < 1e-12);
        // The Hermite series of a jump converges slowly; the tolerance is calibrated at M = 300.
        let series = continuous_frft_oracle(&rect, 1.0, DEFAULT_ORACLE_TERMS, l).unwrap();
        assert!(series.max_abs_diff(&exact) < 2e-3, "{}", series.max_abs_diff(&exact));
    }
}
