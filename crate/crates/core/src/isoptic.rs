//! Isoptic curves and the chord functions attached to them.
//!
//! For a body with support function `p` and a fixed angle `alpha` in (0, pi),
//! the isoptic is the locus of points where two tangent lines meet at angle
//! `alpha`, parameterized by
//!
//! ```text
//! g_a(t) = p(t) u(t) + [p(t) cot a + p(t + pi - a) / sin a] u'(t).
//! ```
//!
//! Seven chord quantities are tracked at each parameter: the two tangent
//! segments `a`, `b` from the isoptic point to its tangency points, the full
//! tangent chord `c`, the origin-dependent projection chord `d`, the contact
//! chord `q`, the isoptic-to-isoptic chord `lambda`, and the support-foot
//! distance `h`. All are evaluated analytically from the support function;
//! the geometric recomputations live in the tests as an independent oracle.

use std::f64::consts::{PI, TAU};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::body::{FourierBody, PlanePoint};
use crate::error::Error;
use crate::sampling::{fmt_sig17, uniform_grid, SpreadStats};

/// Selector for one of the seven chord functions.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ChordKind {
    A,
    B,
    C,
    D,
    Q,
    Lambda,
    H,
}

impl ChordKind {
    pub const ALL: [ChordKind; 7] = [
        ChordKind::A,
        ChordKind::B,
        ChordKind::C,
        ChordKind::D,
        ChordKind::Q,
        ChordKind::Lambda,
        ChordKind::H,
    ];
}

impl fmt::Display for ChordKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ChordKind::A => "a",
            ChordKind::B => "b",
            ChordKind::C => "c",
            ChordKind::D => "d",
            ChordKind::Q => "q",
            ChordKind::Lambda => "lambda",
            ChordKind::H => "h",
        };
        f.write_str(s)
    }
}

impl FromStr for ChordKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.trim().to_ascii_lowercase().as_str() {
            "a" => Ok(ChordKind::A),
            "b" => Ok(ChordKind::B),
            "c" => Ok(ChordKind::C),
            "d" => Ok(ChordKind::D),
            "q" => Ok(ChordKind::Q),
            "lambda" | "l" => Ok(ChordKind::Lambda),
            "h" => Ok(ChordKind::H),
            other => Err(Error::Spec(format!(
                "unknown chord selector {other:?}; expected one of a, b, c, d, q, lambda, h"
            ))),
        }
    }
}

/// The seven chord values at one parameter.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct ChordSet {
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub q: f64,
    pub lambda: f64,
    pub h: f64,
}

/// One chord function sampled over a uniform parameter grid.
#[derive(Clone, Debug, Serialize)]
pub struct ChordProfile {
    pub which: ChordKind,
    pub alpha: f64,
    pub grid: Vec<f64>,
    pub values: Vec<f64>,
    pub stats: SpreadStats,
}

impl ChordProfile {
    /// CSV export: header `t,value`, 17 significant digits per field.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("t,value\n");
        for (t, v) in self.grid.iter().zip(&self.values) {
            out.push_str(&fmt_sig17(*t));
            out.push(',');
            out.push_str(&fmt_sig17(*v));
            out.push('\n');
        }
        out
    }
}

/// A sampled isoptic curve, retaining its source body for analytic resampling.
#[derive(Clone, Debug)]
pub struct IsopticCurve {
    alpha: f64,
    samples: Vec<(f64, PlanePoint)>,
    body: FourierBody,
}

impl IsopticCurve {
    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn samples(&self) -> &[(f64, PlanePoint)] {
        &self.samples
    }

    pub fn body(&self) -> &FourierBody {
        &self.body
    }

    /// Analytic evaluation at an arbitrary parameter (not a grid lookup).
    pub fn point_at(&self, t: f64) -> PlanePoint {
        Isoptic::new(&self.body, self.alpha)
            .expect("alpha was validated when the curve was built")
            .point(t)
    }

    /// CSV export: header `t,x,y`, 17 significant digits per field.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("t,x,y\n");
        for (t, p) in &self.samples {
            out.push_str(&fmt_sig17(*t));
            out.push(',');
            out.push_str(&fmt_sig17(p.x));
            out.push(',');
            out.push_str(&fmt_sig17(p.y));
            out.push('\n');
        }
        out
    }
}

/// A regular polygon circumscribed about a body at one rotation phase.
///
/// Side `k` lies on the support line with normal direction
/// `phase + 2*pi*k/N`; vertex `k` is the intersection of the side-`k` and
/// side-`k+1` lines, and as the phase varies the vertices sweep the isoptic
/// for the polygon's interior angle.
#[derive(Clone, Debug, Serialize)]
pub struct PolygonFrame {
    pub sides: u32,
    pub phase: f64,
    pub vertices: Vec<PlanePoint>,
    pub tangency_points: Vec<PlanePoint>,
    pub side_lengths: Vec<f64>,
}

/// Result of fitting `B ~ center + ratio * (A - center)` between two curves.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct HomothetyFit {
    pub ratio: f64,
    pub center: PlanePoint,
    /// RMS point distance divided by the mean radius of the second curve.
    pub residual: f64,
    /// Parameter shift of the first curve at the best alignment.
    pub parameter_shift: f64,
}

/// Evaluation context for one body at one isoptic angle.
#[derive(Clone, Copy, Debug)]
pub struct Isoptic<'a> {
    body: &'a FourierBody,
    alpha: f64,
    sin_alpha: f64,
    cos_alpha: f64,
}

impl<'a> Isoptic<'a> {
    pub fn new(body: &'a FourierBody, alpha: f64) -> Result<Self, Error> {
        if !(alpha > 0.0 && alpha < PI) {
            return Err(Error::AlphaOutOfRange(alpha));
        }
        Ok(Self {
            body,
            alpha,
            sin_alpha: alpha.sin(),
            cos_alpha: alpha.cos(),
        })
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn body(&self) -> &FourierBody {
        self.body
    }

    /// Isoptic point `g_a(t)`. It lies on the support lines at directions
    /// `t` and `t + pi - alpha` simultaneously.
    pub fn point(&self, t: f64) -> PlanePoint {
        let (s, c) = t.sin_cos();
        let p = self.body.support(t);
        let p_shift = self.body.support(t + PI - self.alpha);
        let along = p * self.cos_alpha / self.sin_alpha + p_shift / self.sin_alpha;
        PlanePoint::new(p * c - along * s, p * s + along * c)
    }

    /// Tangent segment from the isoptic point back to its own tangency point.
    pub fn chord_a(&self, t: f64) -> f64 {
        (self.body.support(t + PI - self.alpha) + self.body.support(t) * self.cos_alpha
            - self.body.support_deriv(t) * self.sin_alpha)
            / self.sin_alpha
    }

    /// Tangent segment from the isoptic point to the forward tangency point.
    pub fn chord_b(&self, t: f64) -> f64 {
        let shift = t + PI - self.alpha;
        (self.body.support(shift) * self.cos_alpha
            + self.body.support_deriv(shift) * self.sin_alpha
            + self.body.support(t))
            / self.sin_alpha
    }

    /// Full tangent chord of the isoptic: `c(t) = b(t) + a(t + pi - alpha)`.
    pub fn chord_c(&self, t: f64) -> f64 {
        (2.0 * self.body.support(t + PI - self.alpha) * self.cos_alpha
            + self.body.support(t)
            + self.body.support(t - 2.0 * self.alpha))
            / self.sin_alpha
    }

    /// Distance between the projections of the origin onto the two support
    /// lines. Origin dependent; centre the body for translation-invariant use.
    pub fn chord_d(&self, t: f64) -> f64 {
        let p = self.body.support(t);
        let ps = self.body.support(t + PI - self.alpha);
        (p * p + ps * ps + 2.0 * p * ps * self.cos_alpha).sqrt()
    }

    /// Contact chord between the two tangency points.
    pub fn chord_q(&self, t: f64) -> f64 {
        self.body
            .boundary_point(t)
            .distance(self.body.boundary_point(t + PI - self.alpha))
    }

    /// Chord between the two isoptic points at `t +/- (pi - alpha)`,
    /// evaluated analytically at the exact shifted parameters.
    pub fn chord_lambda(&self, t: f64) -> f64 {
        let shift = PI - self.alpha;
        self.point(t + shift).distance(self.point(t - shift))
    }

    /// Distance from the isoptic point to the projection of the origin onto
    /// the support line at direction `t`.
    pub fn h_value(&self, t: f64) -> f64 {
        (self.body.support(t) * self.cos_alpha + self.body.support(t + PI - self.alpha))
            / self.sin_alpha
    }

    /// Speed of the isoptic parametrization: `|g_a'(t)| = q(t)/sin alpha`.
    pub fn speed(&self, t: f64) -> f64 {
        self.chord_q(t) / self.sin_alpha
    }

    /// All seven chord values at one parameter.
    pub fn chords(&self, t: f64) -> ChordSet {
        ChordSet {
            a: self.chord_a(t),
            b: self.chord_b(t),
            c: self.chord_c(t),
            d: self.chord_d(t),
            q: self.chord_q(t),
            lambda: self.chord_lambda(t),
            h: self.h_value(t),
        }
    }

    pub fn chord(&self, which: ChordKind, t: f64) -> f64 {
        match which {
            ChordKind::A => self.chord_a(t),
            ChordKind::B => self.chord_b(t),
            ChordKind::C => self.chord_c(t),
            ChordKind::D => self.chord_d(t),
            ChordKind::Q => self.chord_q(t),
            ChordKind::Lambda => self.chord_lambda(t),
            ChordKind::H => self.h_value(t),
        }
    }

    /// Uniform-grid sweep of one chord function with its statistics.
    pub fn profile(&self, which: ChordKind, grid_size: usize) -> Result<ChordProfile, Error> {
        if grid_size < 256 {
            return Err(Error::GridTooSmall {
                min: 256,
                got: grid_size,
            });
        }
        let grid = uniform_grid(grid_size);
        let values: Vec<f64> = grid.iter().map(|&t| self.chord(which, t)).collect();
        let stats = SpreadStats::from_values(&values)?;
        Ok(ChordProfile {
            which,
            alpha: self.alpha,
            grid,
            values,
            stats,
        })
    }

    /// Sample the isoptic curve over a uniform parameter grid.
    pub fn curve(&self, grid_size: usize) -> Result<IsopticCurve, Error> {
        if grid_size < 8 {
            return Err(Error::GridTooSmall {
                min: 8,
                got: grid_size,
            });
        }
        let samples = uniform_grid(grid_size)
            .into_iter()
            .map(|t| (t, self.point(t)))
            .collect();
        Ok(IsopticCurve {
            alpha: self.alpha,
            samples,
            body: self.body.clone(),
        })
    }
}

/// Circumscribe a regular `sides`-gon whose side normals start at `phase`.
pub fn circumscribed_polygon(
    body: &FourierBody,
    sides: u32,
    phase: f64,
) -> Result<PolygonFrame, Error> {
    if sides < 3 {
        return Err(Error::TooFewSides(sides));
    }
    let n = sides as usize;
    let dirs: Vec<f64> = (0..n)
        .map(|k| phase + TAU * k as f64 / sides as f64)
        .collect();
    let tangency_points: Vec<PlanePoint> = dirs.iter().map(|&t| body.boundary_point(t)).collect();
    let vertices: Vec<PlanePoint> = (0..n)
        .map(|k| {
            let t1 = dirs[k];
            let t2 = dirs[(k + 1) % n];
            support_line_intersection(body, t1, t2)
        })
        .collect();
    let side_lengths: Vec<f64> = (0..n)
        .map(|k| vertices[(k + n - 1) % n].distance(vertices[k]))
        .collect();
    Ok(PolygonFrame {
        sides,
        phase,
        vertices,
        tangency_points,
        side_lengths,
    })
}

/// Intersection of the support lines with normal directions `t1`, `t2`.
fn support_line_intersection(body: &FourierBody, t1: f64, t2: f64) -> PlanePoint {
    let (s1, c1) = t1.sin_cos();
    let (s2, c2) = t2.sin_cos();
    let p1 = body.support(t1);
    let p2 = body.support(t2);
    let det = c1 * s2 - s1 * c2; // sin(t2 - t1)
    PlanePoint::new((p1 * s2 - p2 * s1) / det, (c1 * p2 - c2 * p1) / det)
}

/// Least-squares homothety between two sampled isoptics.
///
/// Searches every cyclic sample alignment, refines the parameter shift
/// continuously by resampling the first curve analytically, and allows a
/// negative ratio (point reflection composed with scaling).
pub fn homothety_fit(
    curve_a: &IsopticCurve,
    curve_b: &IsopticCurve,
) -> Result<HomothetyFit, Error> {
    let n = curve_a.samples.len();
    if n != curve_b.samples.len() {
        return Err(Error::SampleCountMismatch(n, curve_b.samples.len()));
    }
    if n == 0 {
        return Err(Error::EmptySamples);
    }
    let b_points: Vec<PlanePoint> = curve_b.samples.iter().map(|&(_, p)| p).collect();

    // Coarse scan over integer cyclic shifts: on a uniform grid a shift of k
    // samples is exactly a parameter shift of 2*pi*k/n.
    let a_points: Vec<PlanePoint> = curve_a.samples.iter().map(|&(_, p)| p).collect();
    let mut best_shift = 0usize;
    let mut best_residual = f64::INFINITY;
    for k in 0..n {
        let shifted: Vec<PlanePoint> = (0..n).map(|i| a_points[(i + k) % n]).collect();
        let fit = similarity_fit(&shifted, &b_points)?;
        if fit.residual < best_residual {
            best_residual = fit.residual;
            best_shift = k;
        }
    }

    // Continuous refinement of the shift by golden-section search around the
    // best grid alignment; the first curve is resampled analytically.
    let step = TAU / n as f64;
    let tau0 = best_shift as f64 * step;
    let residual_at = |tau: f64| -> f64 {
        let shifted: Vec<PlanePoint> = curve_a
            .samples
            .iter()
            .map(|&(t, _)| curve_a.point_at(t + tau))
            .collect();
        similarity_fit(&shifted, &b_points)
            .map(|f| f.residual)
            .unwrap_or(f64::INFINITY)
    };
    let tau = golden_section_min(residual_at, tau0 - step, tau0 + step, 120);

    let shifted: Vec<PlanePoint> = curve_a
        .samples
        .iter()
        .map(|&(t, _)| curve_a.point_at(t + tau))
        .collect();
    let fit = similarity_fit(&shifted, &b_points)?;
    Ok(HomothetyFit {
        ratio: fit.ratio,
        center: fit.center,
        residual: fit.residual,
        parameter_shift: tau.rem_euclid(TAU),
    })
}

struct SimilarityFit {
    ratio: f64,
    center: PlanePoint,
    residual: f64,
}

/// Closed-form least squares for `B_i ~ r * A_i + v` with scalar `r`.
fn similarity_fit(a: &[PlanePoint], b: &[PlanePoint]) -> Result<SimilarityFit, Error> {
    let n = a.len() as f64;
    let abar = centroid(a);
    let bbar = centroid(b);
    let mut sxx = 0.0;
    let mut sxy = 0.0;
    for (pa, pb) in a.iter().zip(b) {
        let da = *pa - abar;
        let db = *pb - bbar;
        sxx += da.dot(da);
        sxy += da.dot(db);
    }
    let scale = a.iter().map(|p| p.dot(*p)).sum::<f64>().max(1.0);
    if sxx <= scale * 1e-24 {
        return Err(Error::DegenerateFit);
    }
    let ratio = sxy / sxx;
    let v = bbar - abar * ratio;
    let mut rss = 0.0;
    let mut b_radius = 0.0;
    for (pa, pb) in a.iter().zip(b) {
        let err = *pb - (*pa * ratio + v);
        rss += err.dot(err);
        b_radius += (*pb - bbar).norm();
    }
    b_radius /= n;
    let rms = (rss / n).sqrt();
    let residual = if b_radius > 0.0 { rms / b_radius } else { rms };
    // With ratio 1 the map is a pure translation and no centre is defined;
    // report the target centroid in that case.
    let center = if (1.0 - ratio).abs() > 1e-9 {
        v * (1.0 / (1.0 - ratio))
    } else {
        bbar
    };
    Ok(SimilarityFit {
        ratio,
        center,
        residual,
    })
}

fn centroid(points: &[PlanePoint]) -> PlanePoint {
    let mut c = PlanePoint::ORIGIN;
    for p in points {
        c = c + *p;
    }
    c * (1.0 / points.len() as f64)
}

fn golden_section_min(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64, iters: usize) -> f64 {
    const INV_PHI: f64 = 0.618_033_988_749_894_9;
    let mut x1 = hi - INV_PHI * (hi - lo);
    let mut x2 = lo + INV_PHI * (hi - lo);
    let mut f1 = f(x1);
    let mut f2 = f(x2);
    for _ in 0..iters {
        if f1 < f2 {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - INV_PHI * (hi - lo);
            f1 = f(x1);
        } else {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + INV_PHI * (hi - lo);
            f2 = f(x2);
        }
    }
    0.5 * (lo + hi)
}
