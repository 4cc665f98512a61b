//! Tabular output: CSV with round-trip precision, minimal SVG line plots, and
//! the tables behind the command-line front end.

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::frft::{apply_frft, frft_kernel, SignalSpec};
use crate::lattice::{Lattice, Signal};
use crate::phasespace::PhasePoint;
use crate::quantize::{frame_basis, ladder_states};
use crate::reference::{
    coherent_state_deviation, continuous_frft_direct, deviation_report, CoherentReference, DEFAULT_EXPANSION_TERMS,
};
use crate::spectral::{harper_basis, BasisKind, SpectralBasis};
use crate::thetagauss::ground_state;

/// Indices of the coherent-state grid: `alpha, beta in {1, 3, 6, 9} sqrt(delta)`.
pub const TABLE1_INDICES: [i64; 4] = [1, 3, 6, 9];

/// The comparison window `|n| <= 8`.
pub const TABLE1_WINDOW: i64 = 8;

/// Step of the direct kernel quadrature used as the continuous FrFT reference.
pub const ORACLE_STEP: f64 = 1e-4;

/// `17` significant digits, enough to round-trip any `f64`.
pub fn format_real(x: f64) -> String {
    format!("{x:.16e}")
}

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Int(i64),
    Real(f64),
    Text(String),
}

impl Cell {
    fn render(&self) -> String {
        match self {
            Cell::Int(i) => i.to_string(),
            Cell::Real(x) => format_real(*x),
            Cell::Text(s) => s.clone(),
        }
    }

    pub fn as_f64(&self) -> Option<f64> {
        match self {
            Cell::Int(i) => Some(*i as f64),
            Cell::Real(x) => Some(*x),
            Cell::Text(_) => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    pub headers: Vec<String>,
    pub rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(headers: &[&str]) -> Self {
        Table {
            headers: headers.iter().map(|h| h.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.headers.len(), "row width");
        self.rows.push(row);
    }

    pub fn column_index(&self, name: &str) -> Option<usize> {
        self.headers.iter().position(|h| h == name)
    }

    /// Numeric values of one column; text cells are skipped.
    pub fn column(&self, name: &str) -> Option<Vec<f64>> {
        let i = self.column_index(name)?;
        Some(self.rows.iter().filter_map(|r| r[i].as_f64()).collect())
    }

    pub fn to_csv(&self) -> String {
        let mut out = self.headers.join(",");
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::render).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    /// Plots every named column against `x`.
    pub fn plot(&self, title: &str, x: &str, ys: &[&str], log_y: bool) -> Result<Plot> {
        let missing = |c: &str| Error::InvalidParameter {
            name: "column",
            reason: format!("no column named {c}"),
        };
        let xs = self.column(x).ok_or_else(|| missing(x))?;
        let mut plot = Plot::new(title, x, log_y);
        for y in ys {
            let vs = self.column(y).ok_or_else(|| missing(y))?;
            plot.series.push(Series {
                name: y.to_string(),
                points: xs.iter().copied().zip(vs).collect(),
            });
        }
        Ok(plot)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Series {
    pub name: String,
    pub points: Vec<(f64, f64)>,
}

/// An 800 x 500 line plot, one polyline per series.
#[derive(Clone, Debug, PartialEq)]
pub struct Plot {
    pub title: String,
    pub x_label: String,
    pub log_y: bool,
    pub series: Vec<Series>,
}

const WIDTH: f64 = 800.0;
const HEIGHT: f64 = 500.0;
const MARGIN: f64 = 50.0;
const PALETTE: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];

impl Plot {
    pub fn new(title: &str, x_label: &str, log_y: bool) -> Self {
        Plot {
            title: title.to_string(),
            x_label: x_label.to_string(),
            log_y,
            series: Vec::new(),
        }
    }

    fn y_value(&self, y: f64) -> Option<f64> {
        if self.log_y {
            (y > 0.0).then(|| y.log10())
        } else {
            Some(y)
        }
    }

    pub fn to_svg(&self) -> String {
        let pts: Vec<(f64, f64)> = self
            .series
            .iter()
            .flat_map(|s| s.points.iter())
            .filter_map(|&(x, y)| self.y_value(y).map(|y| (x, y)))
            .filter(|(x, y)| x.is_finite() && y.is_finite())
            .collect();
        let bounds = |f: fn(&(f64, f64)) -> f64| {
            let lo = pts.iter().map(f).fold(f64::INFINITY, f64::min);
            let hi = pts.iter().map(f).fold(f64::NEG_INFINITY, f64::max);
            if !lo.is_finite() {
                (0.0, 1.0)
            } else if hi - lo < 1e-300 {
                (lo - 0.5, hi + 0.5)
            } else {
                (lo, hi)
            }
        };
        let (x0, x1) = bounds(|p| p.0);
        let (y0, y1) = bounds(|p| p.1);
        let sx = |x: f64| MARGIN + (x - x0) / (x1 - x0) * (WIDTH - 2.0 * MARGIN);
        let sy = |y: f64| HEIGHT - MARGIN - (y - y0) / (y1 - y0) * (HEIGHT - 2.0 * MARGIN);

        let mut svg = String::new();
        let _ = writeln!(
            svg,
            r#"<svg xmlns="http://www.w3.org/2000/svg" width="800" height="500" viewBox="0 0 800 500">"#
        );
        let _ = writeln!(svg, r#"<rect width="800" height="500" fill="white"/>"#);
        let _ = writeln!(
            svg,
            r#"<rect x="{MARGIN}" y="{MARGIN}" width="{}" height="{}" fill="none" stroke="black"/>"#,
            WIDTH - 2.0 * MARGIN,
            HEIGHT - 2.0 * MARGIN
        );
        let _ = writeln!(
            svg,
            r#"<text x="400" y="30" text-anchor="middle" font-size="16">{}</text>"#,
            escape(&self.title)
        );
        let y_label = if self.log_y { "log10" } else { "" };
        let _ = writeln!(
            svg,
            r#"<text x="400" y="490" text-anchor="middle" font-size="12">{} [{}, {}]</text>"#,
            escape(&self.x_label),
            format_tick(x0),
            format_tick(x1)
        );
        let _ = writeln!(
            svg,
            r#"<text x="10" y="{}" font-size="12">{y_label} [{}, {}]</text>"#,
            MARGIN - 8.0,
            format_tick(y0),
            format_tick(y1)
        );
        for (i, s) in self.series.iter().enumerate() {
            let colour = PALETTE[i % PALETTE.len()];
            let coords: Vec<String> = s
                .points
                .iter()
                .filter_map(|&(x, y)| self.y_value(y).map(|y| (x, y)))
                .filter(|(x, y)| x.is_finite() && y.is_finite())
                .map(|(x, y)| format!("{:.2},{:.2}", sx(x), sy(y)))
                .collect();
            let _ = writeln!(
                svg,
                r#"<polyline fill="none" stroke="{colour}" stroke-width="1.5" points="{}"/>"#,
                coords.join(" ")
            );
            let _ = writeln!(
                svg,
                r#"<text x="{}" y="{}" font-size="12" fill="{colour}">{}</text>"#,
                WIDTH - MARGIN - 120.0,
                MARGIN + 18.0 * (i as f64 + 1.0),
                escape(&s.name)
            );
        }
        svg.push_str("</svg>\n");
        svg
    }
}

fn format_tick(x: f64) -> String {
    format!("{x:.4}")
}

fn escape(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// Writes `contents` next to `path` under a temporary name, then renames it into place.
pub fn write_atomic(path: &Path, contents: &str) -> std::io::Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p.to_path_buf(),
        _ => std::path::PathBuf::from("."),
    };
    let name = path
        .file_name()
        .ok_or_else(|| std::io::Error::new(std::io::ErrorKind::InvalidInput, "output path has no file name"))?;
    let tmp = dir.join(format!(".{}.tmp-{}", name.to_string_lossy(), std::process::id()));
    let result = (|| {
        let mut f = fs::File::create(&tmp)?;
        f.write_all(contents.as_bytes())?;
        f.sync_all()?;
        fs::rename(&tmp, path)
    })();
    if result.is_err() {
        let _ = fs::remove_file(&tmp);
    }
    result
}

/// Deviations between discrete and continuous coherent states on the `4 x 4` grid.
pub fn table1(lat: Lattice) -> Result<Table> {
    let ground = ground_state(lat);
    let mut t = Table::new(&["alpha_idx", "beta_idx", "deviation"]);
    for a in TABLE1_INDICES {
        for b in TABLE1_INDICES {
            let p = PhasePoint::new(lat, a, b)?;
            let dev = coherent_state_deviation(
                &ground,
                p,
                CoherentReference::NumberExpansion(DEFAULT_EXPANSION_TERMS),
                TABLE1_WINDOW,
            )?;
            t.push(vec![Cell::Int(a), Cell::Int(b), Cell::Real(dev)]);
        }
    }
    Ok(t)
}

pub fn basis_for(lat: Lattice, kind: BasisKind) -> Result<SpectralBasis> {
    match kind {
        BasisKind::Frame => frame_basis(lat),
        BasisKind::Harper => harper_basis(lat),
    }
}

/// One row per basis vector in `m` order. Frame eigenvalues are those of
/// `H_d = A_f - 1/2`; Harper eigenvalues are those of the Harper matrix.
pub fn spectrum(basis: &SpectralBasis) -> Table {
    let shift = match basis.kind() {
        BasisKind::Frame => -0.5,
        BasisKind::Harper => 0.0,
    };
    let mut t = Table::new(&["m", "eigenvalue", "parity", "alternations", "fourier_index"]);
    for (m, (v, lab)) in basis.values().iter().zip(basis.labels()).enumerate() {
        t.push(vec![
            Cell::Int(m as i64),
            Cell::Real(v + shift),
            Cell::Text(lab.parity.name().to_string()),
            Cell::Int(lab.alternations as i64),
            Cell::Int(lab.fourier_index as i64),
        ]);
    }
    t
}

/// Deviations of the frame, Harper, Mehta and ladder bases from the sampled Hermite-Gaussians.
pub fn compare(lat: Lattice, normalize_ladder: bool) -> Result<Table> {
    let fb = frame_basis(lat)?;
    let hb = harper_basis(lat)?;
    let frame = crate::phasespace::coherent_frame(lat);
    let ladder = ladder_states(&frame, lat.d())?;
    let r = deviation_report(lat, &fb, &hb, &ladder, normalize_ladder)?;
    let mut t = Table::new(&["m", "delta_f", "delta_h", "delta_m", "delta_r"]);
    for m in 0..r.len() {
        t.push(vec![
            Cell::Int(m as i64),
            Cell::Real(r.delta_f[m]),
            Cell::Real(r.delta_h[m]),
            Cell::Real(r.delta_m[m]),
            Cell::Real(r.delta_r[m]),
        ]);
    }
    Ok(t)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Frame,
    Harper,
    Both,
}

impl Method {
    pub fn kinds(self) -> Vec<BasisKind> {
        match self {
            Method::Frame => vec![BasisKind::Frame],
            Method::Harper => vec![BasisKind::Harper],
            Method::Both => vec![BasisKind::Frame, BasisKind::Harper],
        }
    }
}

/// Discrete fractional transforms of a test signal, optionally with the continuous reference.
#[derive(Clone, Debug)]
pub struct FrftRun {
    pub input: Signal,
    pub outputs: Vec<(BasisKind, Signal)>,
    pub oracle: Option<Signal>,
}

impl FrftRun {
    /// Max-abs deviation of each output from the reference.
    pub fn errors(&self) -> Option<Vec<(BasisKind, f64)>> {
        let oracle = self.oracle.as_ref()?;
        Some(self.outputs.iter().map(|(k, v)| (*k, v.max_abs_diff(oracle))).collect())
    }

    pub fn table(&self) -> Table {
        let lat = self.input.lattice();
        let both = self.outputs.len() > 1;
        let mut headers = vec!["n".to_string(), "in_re".to_string()];
        for (k, _) in &self.outputs {
            let prefix = if both { format!("{}_", k.name()) } else { String::new() };
            headers.push(format!("{prefix}out_re"));
            headers.push(format!("{prefix}out_im"));
        }
        if self.oracle.is_some() {
            headers.push("oracle_re".into());
            headers.push("oracle_im".into());
        }
        let refs: Vec<&str> = headers.iter().map(String::as_str).collect();
        let mut t = Table::new(&refs);
        for n in lat.indices() {
            let mut row = vec![Cell::Int(n), Cell::Real(self.input.at(n).re)];
            for (_, v) in &self.outputs {
                row.push(Cell::Real(v.at(n).re));
                row.push(Cell::Real(v.at(n).im));
            }
            if let Some(o) = &self.oracle {
                row.push(Cell::Real(o.at(n).re));
                row.push(Cell::Real(o.at(n).im));
            }
            t.push(row);
        }
        t
    }
}

pub fn frft_run(lat: Lattice, alpha: f64, signal: SignalSpec, method: Method, oracle: bool) -> Result<FrftRun> {
    if !alpha.is_finite() {
        return Err(Error::InvalidParameter {
            name: "alpha",
            reason: format!("must be finite, got {alpha}"),
        });
    }
    let input = signal.discrete(lat)?;
    let mut outputs = Vec::new();
    for kind in method.kinds() {
        let k = frft_kernel(&basis_for(lat, kind)?, alpha)?;
        outputs.push((kind, apply_frft(&k, &input)?));
    }
    let oracle = if oracle {
        Some(continuous_frft_direct(signal.continuous(lat).as_ref(), alpha, lat, ORACLE_STEP)?)
    } else {
        None
    };
    Ok(FrftRun { input, outputs, oracle })
}
