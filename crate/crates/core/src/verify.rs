//! The self-certifying invariant suite: every module's identities evaluated
//! against independent oracles at a chosen dimension and at `d = 5, 7`.

use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;

use crate::error::Result;
use crate::fourier::{closed_form_coordinate_transforms, dft, dft_operator, fourier_projectors};
use crate::frft::{apply_frft, frft_kernel, SignalSpec};
use crate::lattice::{coordinate_signal, Lattice, Operator};
use crate::phasespace::{coherent_frame, displacement, displacement_unreduced, PhasePoint};
use crate::quantize::{
    frame_hamiltonian_from, frame_quantize, ladder_states_with, raising_operator, trace_law, trace_ratio,
    wielandt_hoffman_gap, PhaseSymbol,
};
use crate::report::{frft_run, table1, Method};
use crate::spectral::{eigen_residual, harper_basis, harper_hamiltonian, oscillator_basis, BasisKind, SpectralBasis};
use crate::thetagauss::{autocorrelation_identity_residual, fourier_gauss_residual, square_identity_residual};

/// Whether a failed check fails the suite.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Severity {
    Gate,
    Info,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Check {
    pub name: String,
    pub value: f64,
    pub bound: f64,
    /// `value < bound` when `true`, `value > bound` otherwise.
    pub below: bool,
    pub severity: Severity,
}

impl Check {
    pub fn below(name: impl Into<String>, value: f64, bound: f64) -> Self {
        Check {
            name: name.into(),
            value,
            bound,
            below: true,
            severity: Severity::Gate,
        }
    }

    pub fn above(name: impl Into<String>, value: f64, bound: f64) -> Self {
        Check {
            below: false,
            ..Check::below(name, value, bound)
        }
    }

    pub fn info(mut self) -> Self {
        self.severity = Severity::Info;
        self
    }

    pub fn passed(&self) -> bool {
        if self.below {
            self.value < self.bound
        } else {
            self.value > self.bound
        }
    }

    pub fn gating_failure(&self) -> bool {
        self.severity == Severity::Gate && !self.passed()
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = match (self.severity, self.passed()) {
            (Severity::Gate, true) => "PASS",
            (Severity::Gate, false) => "FAIL",
            (Severity::Info, true) => "INFO ok",
            (Severity::Info, false) => "INFO off",
        };
        let op = if self.below { "<" } else { ">" };
        write!(f, "{status:8} {:<58} {:.6e} {op} {:.1e}", self.name, self.value, self.bound)
    }
}

#[derive(Clone, Debug, Default)]
pub struct Suite {
    pub checks: Vec<Check>,
}

impl Suite {
    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn all_passed(&self) -> bool {
        !self.checks.iter().any(Check::gating_failure)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| c.gating_failure())
    }
}

fn flag(ok: bool) -> f64 {
    if ok {
        0.0
    } else {
        1.0
    }
}

/// Labels must read `m` everywhere: alternations, Fourier class, and parity.
fn label_mismatches(b: &SpectralBasis) -> f64 {
    b.labels()
        .iter()
        .enumerate()
        .filter(|(m, l)| l.alternations != *m || l.fourier_index != *m || (l.parity as usize) != m % 2)
        .count() as f64
}

fn basis_checks(suite: &mut Suite, tag: &str, h: &Operator, b: &SpectralBasis) {
    let lat = b.lattice();
    suite.push(Check::below(format!("{tag}: {} basis Gram deviation", b.kind()), b.gram_deviation(), 1e-11));
    suite.push(Check::below(
        format!("{tag}: {} basis F v_m = (-i)^m v_m", b.kind()),
        b.fourier_eigen_deviation(),
        1e-9,
    ));
    suite.push(Check::below(
        format!("{tag}: {} eigen-residual", b.kind()),
        eigen_residual(h, b),
        1e-9,
    ));
    suite.push(Check::below(
        format!("{tag}: {} label mismatches", b.kind()),
        label_mismatches(b) + flag(b.len() == lat.d()),
        0.5,
    ));
}

fn kernel_checks(suite: &mut Suite, tag: &str, b: &SpectralBasis) -> Result<()> {
    let lat = b.lattice();
    let f = dft_operator(lat, false);
    let k = |a: f64| frft_kernel(b, a);
    let k0 = k(0.0)?;
    let k1 = k(1.0)?;
    suite.push(Check::below(
        format!("{tag}: {} FrFT K(0) = I", b.kind()),
        k0.matrix().max_abs_diff(&Operator::identity(lat)),
        1e-9,
    ));
    suite.push(Check::below(
        format!("{tag}: {} FrFT K(1) = F", b.kind()),
        k1.matrix().max_abs_diff(&f),
        1e-9,
    ));
    let mut unitarity: f64 = 0.0;
    let mut additivity: f64 = 0.0;
    let mut period: f64 = 0.0;
    let grid = [-1.3, -0.5, 0.25, 0.5, 0.9, 2.7];
    for &a in &grid {
        let ka = k(a)?;
        unitarity = unitarity.max(ka.unitarity_deviation());
        period = period.max(ka.matrix().max_abs_diff(k(a + 4.0)?.matrix()));
        for &c in &grid {
            let prod = ka.matrix().matmul(k(c)?.matrix())?;
            additivity = additivity.max(prod.max_abs_diff(k(a + c)?.matrix()));
        }
    }
    suite.push(Check::below(format!("{tag}: {} FrFT unitarity", b.kind()), unitarity, 1e-10));
    suite.push(Check::below(format!("{tag}: {} FrFT additivity", b.kind()), additivity, 1e-9));
    suite.push(Check::below(format!("{tag}: {} FrFT period 4", b.kind()), period, 1e-9));
    Ok(())
}

/// Checks that hold at every odd `d >= 5`.
pub fn lattice_suite(lat: Lattice, suite: &mut Suite) -> Result<()> {
    let d = lat.d();
    let tag = format!("d={d}");
    let id = Operator::identity(lat);

    suite.push(Check::below(
        format!("{tag}: spacing^2 * d = 2 pi"),
        (lat.spacing().powi(2) * d as f64 - 2.0 * PI).abs(),
        1e-12,
    ));

    let f = dft_operator(lat, false);
    let fi = dft_operator(lat, true);
    suite.push(Check::below(format!("{tag}: F F+ = I"), f.matmul(&fi)?.max_abs_diff(&id), 1e-12));
    let f2 = f.matmul(&f)?;
    suite.push(Check::below(
        format!("{tag}: F^4 = I"),
        f2.matmul(&f2)?.max_abs_diff(&id),
        1e-11,
    ));
    let proj = fourier_projectors(lat);
    let mult = proj.multiplicities();
    suite.push(Check::below(
        format!("{tag}: Fourier projectors recompose F"),
        proj.recompose().max_abs_diff(&f),
        1e-12,
    ));
    suite.push(Check::below(
        format!("{tag}: Fourier multiplicities sum to d"),
        (mult.iter().sum::<usize>() as f64 - d as f64).abs(),
        0.5,
    ));
    let (fq, fq2) = closed_form_coordinate_transforms(lat);
    let q = coordinate_signal(lat);
    let q2 = q.hadamard(&q)?;
    suite.push(Check::below(
        format!("{tag}: closed-form F[q], F[q^2]"),
        fq.max_abs_diff(&dft(&q, false)).max(fq2.max_abs_diff(&dft(&q2, false))),
        1e-12,
    ));

    suite.push(Check::below(
        format!("{tag}: g_k^2 identity residual"),
        square_identity_residual(lat),
        1e-13,
    ));
    let frame = coherent_frame(lat);
    suite.push(Check::below(
        format!("{tag}: ground-state autocorrelation residual"),
        autocorrelation_identity_residual(frame.ground()),
        1e-12,
    ));
    let mut fg: f64 = 0.0;
    for kappa in [0.25, 0.5, 1.0, 2.0, 10.0] {
        fg = fg.max(fourier_gauss_residual(lat, kappa)?);
    }
    suite.push(Check::below(format!("{tag}: F g_k = k^(-1/2) g_(1/k)"), fg, 1e-11));
    suite.push(Check::below(
        format!("{tag}: ground-state norm series vs direct"),
        (frame.ground().norm() - frame.ground().norm_series()).abs() / frame.ground().norm(),
        1e-13,
    ));

    suite.push(Check::below(
        format!("{tag}: frame tightness"),
        frame.frame_operator().frobenius_distance(&id),
        1e-11,
    ));
    suite.push(Check::below(
        format!("{tag}: F |a,b> = |b,-a> and F+ |a,b> = |-b,a>"),
        frame.fourier_covariance_deviation(false).max(frame.fourier_covariance_deviation(true)),
        1e-11,
    ));
    let mut law: f64 = 0.0;
    let probes = [(1, 2), (-2, 1), (2, -2)];
    for &(a1, b1) in &probes {
        for &(a2, b2) in &probes {
            let p1 = PhasePoint::new(lat, a1, b1)?;
            let p2 = PhasePoint::new(lat, a2, b2)?;
            let lhs = displacement(lat, p1).matmul(&displacement(lat, p2))?;
            let phase = -0.5 * (p1.alpha * p2.beta - p2.alpha * p1.beta);
            let rhs = displacement_unreduced(lat, a1 + a2, b1 + b2).scale(Complex64::from_polar(1.0, phase));
            law = law.max(lhs.max_abs_diff(&rhs));
        }
    }
    suite.push(Check::below(format!("{tag}: displacement group law"), law, 1e-12));

    let fh = frame_hamiltonian_from(frame.ground());
    let brute = frame_quantize(&frame, &PhaseSymbol::energy());
    suite.push(Check::below(
        format!("{tag}: circulant H_d vs brute-force quantizer"),
        fh.a_f().max_abs_diff(&brute),
        1e-11,
    ));
    suite.push(Check::below(
        format!("{tag}: trace law"),
        (fh.trace() - trace_law(lat)).abs(),
        1e-10,
    ));
    suite.push(Check::below(
        format!("{tag}: [H_d, F] = 0"),
        fh.h().commutator(&f)?.max_abs(),
        1e-10,
    ));
    let (lhs, rhs) = wielandt_hoffman_gap(&fh)?;
    suite.push(Check::below(format!("{tag}: Wielandt-Hoffman lhs - rhs"), lhs - rhs, 0.0));

    let a_plus = raising_operator(&frame);
    suite.push(Check::below(
        format!("{tag}: raising operator vs brute force"),
        a_plus.max_abs_diff(&frame_quantize(&frame, &PhaseSymbol::raising())),
        1e-11,
    ));
    suite.push(Check::below(format!("{tag}: raising operator is real"), a_plus.max_imag(), 1e-11));
    let anti = lat
        .indices()
        .flat_map(|n| lat.indices().map(move |m| (n, m)))
        .map(|(n, m)| (a_plus.get(n, m) + a_plus.get(-n, -m)).norm())
        .fold(0.0, f64::max);
    suite.push(Check::below(format!("{tag}: a+(n,m) = -a+(-n,-m)"), anti, 1e-11));
    let ladder = ladder_states_with(&a_plus, frame.ground(), d)?;
    let rec = (0..d - 1)
        .map(|n| {
            let lhs = a_plus.apply(&ladder[n]).expect("same lattice");
            lhs.max_abs_diff(&ladder[n + 1].scale(Complex64::new(((n + 1) as f64).sqrt(), 0.0)))
        })
        .fold(0.0, f64::max);
    suite.push(Check::below(format!("{tag}: ladder recurrence"), rec, 1e-14));

    let harper = harper_hamiltonian(lat);
    suite.push(Check::below(
        format!("{tag}: [Harper, F] = 0"),
        harper.h.commutator(&f)?.max_abs(),
        1e-12,
    ));
    let fb = oscillator_basis(&fh.a_f(), BasisKind::Frame)?;
    let hb = harper_basis(lat)?;
    basis_checks(suite, &tag, &fh.a_f(), &fb);
    basis_checks(suite, &tag, &harper.h, &hb);
    let s = lat.s() as usize;
    suite.push(Check::below(
        format!("{tag}: frame parity counts = (s+1 even, s odd)"),
        flag(fb.parity_counts() == (s + 1, s)),
        0.5,
    ));
    suite.push(
        Check::below(
            format!("{tag}: frame parity counts = claimed as (s even, s+1 odd)"),
            flag(fb.parity_counts() == (s, s + 1)),
            0.5,
        )
        .info(),
    );
    kernel_checks(suite, &tag, &fb)?;
    kernel_checks(suite, &tag, &hb)?;
    Ok(())
}

/// Quantitative claims specific to `d = 21`.
pub fn reference_suite(suite: &mut Suite) -> Result<()> {
    let lat = Lattice::new(21)?;
    let tag = "d=21";
    let t = table1(lat)?;
    let dev = |a: i64, b: i64| {
        t.rows
            .iter()
            .find(|r| r[0].as_f64() == Some(a as f64) && r[1].as_f64() == Some(b as f64))
            .and_then(|r| r[2].as_f64())
            .unwrap_or(f64::NAN)
    };
    for (a, b, v) in [(1, 1, 2.44895e-10), (6, 6, 0.000364047), (9, 3, 0.0507198)] {
        suite.push(Check::below(
            format!("{tag}: coherent-state table ({a},{b}) relative error"),
            (dev(a, b) / v - 1.0).abs(),
            0.01,
        ));
    }
    let fh = crate::quantize::frame_hamiltonian(lat);
    let vals = fh.a_f_eigenvalues()?;
    suite.push(Check::below(format!("{tag}: lowest A_f eigenvalue - 1"), (vals[0] - 1.0).abs(), 1e-4));
    suite.push(Check::below(
        format!("{tag}: sixth A_f eigenvalue - 5.99911"),
        (vals[5] - 5.99911).abs(),
        5e-3,
    ));
    suite.push(Check::below(
        format!("{tag}: largest A_f eigenvalue - 24.7265"),
        (vals[20] - 24.7265).abs(),
        0.05,
    ));
    suite.push(Check::below(
        format!("{tag}: A_f eigenvalue sum - 220 pi/3"),
        (vals.iter().sum::<f64>() - 220.0 * PI / 3.0).abs(),
        1e-8,
    ));

    let cmp = crate::report::compare(lat, false)?;
    let df = cmp.column("delta_f").unwrap_or_default();
    let dh = cmp.column("delta_h").unwrap_or_default();
    let wins = df.iter().zip(&dh).filter(|(f, h)| f < h).count();
    suite.push(Check::above(format!("{tag}: indices with delta_f < delta_h"), wins as f64, 17.5));
    suite.push(Check::below(format!("{tag}: delta_f(0)"), df.first().copied().unwrap_or(f64::NAN), 1e-6));

    for (spec, severity) in [(SignalSpec::Gauss(10.0), Severity::Gate), (SignalSpec::Rect, Severity::Info)] {
        let run = frft_run(lat, 0.5, spec, Method::Both, true)?;
        let errs = run.errors().unwrap_or_default();
        let (ef, eh) = (errs[0].1, errs[1].1);
        let mut c = Check::below(format!("{tag}: FrFT(0.5) {spec} frame err - harper err"), ef - eh, 0.0);
        c.severity = severity;
        suite.push(c);
    }
    let gauss = SignalSpec::Gauss(10.0).discrete(lat)?;
    let k1 = frft_kernel(&crate::quantize::frame_basis(lat)?, 1.0)?;
    let target = SignalSpec::Gauss(0.1).discrete(lat)?.scale(Complex64::new(10f64.sqrt().recip(), 0.0));
    suite.push(Check::below(
        format!("{tag}: FrFT(1) g_10 = 10^(-1/2) g_(1/10)"),
        apply_frft(&k1, &gauss)?.max_abs_diff(&target),
        1e-10,
    ));
    Ok(())
}

/// Informational lines for limits that are approached only slowly.
pub fn asymptotic_suite(suite: &mut Suite) -> Result<()> {
    let r101 = trace_ratio(Lattice::new(101)?);
    let r201 = trace_ratio(Lattice::new(201)?);
    suite.push(Check::below(
        "d=201: |trace ratio - pi/3| decreases from d=101",
        (r201 - PI / 3.0).abs() - (r101 - PI / 3.0).abs(),
        0.0,
    ));
    suite.push(Check::below("d=201: |trace ratio - pi/3|", (r201 - PI / 3.0).abs(), 0.002).info());
    Ok(())
}

/// The full suite: `d`, then `5` and `7`, then the `d = 21` reference values.
pub fn run(d: usize) -> Result<Suite> {
    let mut suite = Suite::default();
    let mut dims = vec![d];
    for extra in [5, 7] {
        if !dims.contains(&extra) {
            dims.push(extra);
        }
    }
    for dim in dims {
        lattice_suite(Lattice::new(dim)?, &mut suite)?;
    }
    if d == 21 {
        reference_suite(&mut suite)?;
    }
    asymptotic_suite(&mut suite)?;
    Ok(suite)
}
