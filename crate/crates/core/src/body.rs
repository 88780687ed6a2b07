//! Planar convex bodies represented by truncated Fourier support functions.
//!
//! A body is `p(t) = a0 + sum_n (a_n cos nt + b_n sin nt)` with finitely many
//! harmonics. Strict convexity requires `p(t) + p''(t) > 0` everywhere, which
//! the constructor certifies either through the coefficient bound
//! `a0 - sum (n^2 - 1) * sqrt(a_n^2 + b_n^2)` or, when that bound is not
//! conclusive, through a dense grid minimum (p + p'' is a trigonometric
//! polynomial, so grid refinement is reliable).

use std::f64::consts::{PI, TAU};
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::angle::gcd;
use crate::error::Error;
use crate::sampling::{uniform_grid, SpreadStats};

/// Relative spread below which a sampled profile counts as constant.
pub const CONSTANCY_TOL: f64 = 1e-9;

/// A point (or free vector) in the plane.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct PlanePoint {
    pub x: f64,
    pub y: f64,
}

impl PlanePoint {
    pub const ORIGIN: PlanePoint = PlanePoint { x: 0.0, y: 0.0 };

    pub fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }

    pub fn dot(self, other: Self) -> f64 {
        self.x * other.x + self.y * other.y
    }

    pub fn norm(self) -> f64 {
        self.x.hypot(self.y)
    }

    pub fn distance(self, other: Self) -> f64 {
        (self - other).norm()
    }

    /// Rotation about the origin by `theta`.
    pub fn rotated(self, theta: f64) -> Self {
        let (s, c) = theta.sin_cos();
        Self::new(c * self.x - s * self.y, s * self.x + c * self.y)
    }
}

impl Add for PlanePoint {
    type Output = PlanePoint;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl Sub for PlanePoint {
    type Output = PlanePoint;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl Mul<f64> for PlanePoint {
    type Output = PlanePoint;
    fn mul(self, s: f64) -> Self {
        Self::new(self.x * s, self.y * s)
    }
}

impl Neg for PlanePoint {
    type Output = PlanePoint;
    fn neg(self) -> Self {
        Self::new(-self.x, -self.y)
    }
}

/// One Fourier term `a_n cos nt + b_n sin nt` of a support function.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Harmonic {
    pub order: u32,
    pub cos_coeff: f64,
    pub sin_coeff: f64,
}

impl Harmonic {
    pub fn new(order: u32, cos_coeff: f64, sin_coeff: f64) -> Self {
        Self {
            order,
            cos_coeff,
            sin_coeff,
        }
    }

    pub fn amplitude(&self) -> f64 {
        self.cos_coeff.hypot(self.sin_coeff)
    }

    pub fn is_nonzero(&self) -> bool {
        self.cos_coeff != 0.0 || self.sin_coeff != 0.0
    }
}

/// Width samples `w(t) = p(t) + p(t + pi)` over one period.
#[derive(Clone, Debug)]
pub struct WidthProfile {
    pub samples: Vec<(f64, f64)>,
    /// Minimal width over the samples (omega_0).
    pub min_width: f64,
    pub is_constant: bool,
}

/// Structural symmetry facts read off the nonzero harmonics.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SymmetryPredicates {
    pub constant_width: bool,
    /// Central symmetry up to translation: order-1 terms only translate the
    /// body and are ignored.
    pub centrally_symmetric: bool,
    /// Smallest angle `2*pi/g` (g >= 2) with `p(t + angle) = p(t)`, if any.
    pub rotational_period: Option<f64>,
}

/// Strictly convex planar body with support function
/// `p(t) = a0 + sum (a_n cos nt + b_n sin nt)`.
#[derive(Clone, Debug, PartialEq)]
pub struct FourierBody {
    mean_term: f64,
    harmonics: Vec<Harmonic>,
}

/// Minimum of `p + p''` over a uniform grid, for a candidate coefficient set.
///
/// Positive results certify strict convexity at grid resolution; the
/// constructor rejects bodies whose margin is not positive.
pub fn convexity_margin(mean_term: f64, harmonics: &[Harmonic], grid_size: usize) -> f64 {
    let mut min = f64::INFINITY;
    for t in uniform_grid(grid_size) {
        let mut v = mean_term;
        for h in harmonics {
            let n = h.order as f64;
            let (s, c) = (n * t).sin_cos();
            v += (1.0 - n * n) * (h.cos_coeff * c + h.sin_coeff * s);
        }
        min = min.min(v);
    }
    min
}

/// Coefficient lower bound `a0 - sum (n^2 - 1) * amplitude_n` for `p + p''`.
fn analytic_margin_bound(mean_term: f64, harmonics: &[Harmonic]) -> f64 {
    let deficit: f64 = harmonics
        .iter()
        .map(|h| ((h.order as f64).powi(2) - 1.0) * h.amplitude())
        .sum();
    mean_term - deficit
}

impl FourierBody {
    /// Validates coefficients and certifies strict convexity.
    pub fn new(mean_term: f64, mut harmonics: Vec<Harmonic>) -> Result<Self, Error> {
        if !mean_term.is_finite() || mean_term <= 0.0 {
            return Err(Error::InvalidMeanTerm(mean_term));
        }
        harmonics.sort_by_key(|h| h.order);
        for (i, h) in harmonics.iter().enumerate() {
            if h.order < 1 {
                return Err(Error::InvalidOrder(h.order as i64));
            }
            if !h.cos_coeff.is_finite() || !h.sin_coeff.is_finite() {
                return Err(Error::NonFiniteCoefficient(h.order));
            }
            if i > 0 && harmonics[i - 1].order == h.order {
                return Err(Error::DuplicateOrder(h.order));
            }
        }
        if analytic_margin_bound(mean_term, &harmonics) <= 0.0 {
            let grid = convexity_check_grid(&harmonics);
            let margin = convexity_margin(mean_term, &harmonics, grid);
            if margin <= 0.0 {
                return Err(Error::NotConvex { margin });
            }
        }
        Ok(Self {
            mean_term,
            harmonics,
        })
    }

    /// Disc of the given radius centred at the origin.
    pub fn disc(radius: f64) -> Result<Self, Error> {
        Self::new(radius, Vec::new())
    }

    pub fn mean_term(&self) -> f64 {
        self.mean_term
    }

    pub fn harmonics(&self) -> &[Harmonic] {
        &self.harmonics
    }

    pub fn max_order(&self) -> u32 {
        self.harmonics.last().map_or(0, |h| h.order)
    }

    /// Support function `p(t)`.
    pub fn support(&self, t: f64) -> f64 {
        let mut p = self.mean_term;
        for h in &self.harmonics {
            let (s, c) = (h.order as f64 * t).sin_cos();
            p += h.cos_coeff * c + h.sin_coeff * s;
        }
        p
    }

    /// First derivative `p'(t)`.
    pub fn support_deriv(&self, t: f64) -> f64 {
        let mut d = 0.0;
        for h in &self.harmonics {
            let n = h.order as f64;
            let (s, c) = (n * t).sin_cos();
            d += n * (h.sin_coeff * c - h.cos_coeff * s);
        }
        d
    }

    /// Second derivative `p''(t)`.
    pub fn support_second_deriv(&self, t: f64) -> f64 {
        let mut d = 0.0;
        for h in &self.harmonics {
            let n = h.order as f64;
            let (s, c) = (n * t).sin_cos();
            d -= n * n * (h.cos_coeff * c + h.sin_coeff * s);
        }
        d
    }

    /// Boundary point `p(t) u(t) + p'(t) u'(t)` with `u(t) = (cos t, sin t)`.
    ///
    /// The support line with outward normal `u(t)` passes through this point.
    pub fn boundary_point(&self, t: f64) -> PlanePoint {
        let (s, c) = t.sin_cos();
        let p = self.support(t);
        let dp = self.support_deriv(t);
        PlanePoint::new(p * c - dp * s, p * s + dp * c)
    }

    /// Width `w(t) = p(t) + p(t + pi)`.
    pub fn width(&self, t: f64) -> f64 {
        self.support(t) + self.support(t + PI)
    }

    /// Width sampled over a uniform grid, with the minimal width omega_0.
    pub fn width_profile(&self, grid_size: usize) -> Result<WidthProfile, Error> {
        if grid_size < 8 {
            return Err(Error::GridTooSmall {
                min: 8,
                got: grid_size,
            });
        }
        let samples: Vec<(f64, f64)> = uniform_grid(grid_size)
            .into_iter()
            .map(|t| (t, self.width(t)))
            .collect();
        let values: Vec<f64> = samples.iter().map(|&(_, w)| w).collect();
        let stats = SpreadStats::from_values(&values)?;
        Ok(WidthProfile {
            samples,
            min_width: stats.min,
            is_constant: stats.relative_spread <= CONSTANCY_TOL,
        })
    }

    /// Perimeter by Cauchy's formula: the integral of `p` over one period,
    /// which every harmonic leaves untouched.
    pub fn perimeter(&self) -> f64 {
        TAU * self.mean_term
    }

    /// Minimum of `p + p''` over a uniform grid of the given size.
    pub fn convexity_margin(&self, grid_size: usize) -> f64 {
        convexity_margin(self.mean_term, &self.harmonics, grid_size)
    }

    /// Constant width, central symmetry, and rotational symmetry about the
    /// origin, decided structurally from the nonzero harmonics.
    pub fn symmetry(&self) -> SymmetryPredicates {
        let nonzero: Vec<u32> = self
            .harmonics
            .iter()
            .filter(|h| h.is_nonzero())
            .map(|h| h.order)
            .collect();
        let constant_width = nonzero.iter().all(|&n| n % 2 == 1);
        let centrally_symmetric = nonzero.iter().all(|&n| n == 1 || n % 2 == 0);
        let g = nonzero.iter().fold(0u64, |acc, &n| gcd(acc, n as u64));
        let rotational_period = if !nonzero.is_empty() && g >= 2 {
            Some(TAU / g as f64)
        } else {
            None
        };
        SymmetryPredicates {
            constant_width,
            centrally_symmetric,
            rotational_period,
        }
    }

    /// Body rotated by `theta` about the origin: `p_rot(t) = p(t - theta)`.
    pub fn rotated(&self, theta: f64) -> Self {
        let harmonics = self
            .harmonics
            .iter()
            .map(|h| {
                let (s, c) = (h.order as f64 * theta).sin_cos();
                Harmonic::new(
                    h.order,
                    h.cos_coeff * c - h.sin_coeff * s,
                    h.cos_coeff * s + h.sin_coeff * c,
                )
            })
            .collect();
        // Rotation preserves per-order amplitudes, hence convexity.
        Self {
            mean_term: self.mean_term,
            harmonics,
        }
    }

    /// Body scaled by `s > 0` about the origin.
    pub fn scaled(&self, s: f64) -> Result<Self, Error> {
        if !s.is_finite() || s <= 0.0 {
            return Err(Error::InvalidScale(s));
        }
        let harmonics = self
            .harmonics
            .iter()
            .map(|h| Harmonic::new(h.order, h.cos_coeff * s, h.sin_coeff * s))
            .collect();
        Ok(Self {
            mean_term: self.mean_term * s,
            harmonics,
        })
    }

    /// Body translated by `(dx, dy)`: adds `dx cos t + dy sin t` to `p`.
    pub fn translated(&self, dx: f64, dy: f64) -> Self {
        let mut harmonics = self.harmonics.clone();
        match harmonics.iter_mut().find(|h| h.order == 1) {
            Some(h) => {
                h.cos_coeff += dx;
                h.sin_coeff += dy;
            }
            None => harmonics.insert(0, Harmonic::new(1, dx, dy)),
        }
        // Order-1 terms do not enter p + p''.
        Self {
            mean_term: self.mean_term,
            harmonics,
        }
    }

    /// Body with order-1 harmonics removed. Chord quantities measured from
    /// the origin (d, h) are translation sensitive; centring first makes them
    /// comparable across translates.
    pub fn centered(&self) -> Self {
        Self {
            mean_term: self.mean_term,
            harmonics: self
                .harmonics
                .iter()
                .copied()
                .filter(|h| h.order != 1)
                .collect(),
        }
    }

    /// Human-readable support function, e.g. `30 + sin 4t`.
    pub fn descriptor(&self) -> String {
        let mut out = format!("{}", self.mean_term);
        for h in &self.harmonics {
            for (coeff, kind) in [(h.cos_coeff, "cos"), (h.sin_coeff, "sin")] {
                if coeff == 0.0 {
                    continue;
                }
                let sign = if coeff < 0.0 { " - " } else { " + " };
                let mag = coeff.abs();
                if mag == 1.0 {
                    out.push_str(&format!("{sign}{kind} {}t", h.order));
                } else {
                    out.push_str(&format!("{sign}{mag} {kind} {}t", h.order));
                }
            }
        }
        out
    }
}

/// Grid size used by the constructor's convexity certificate.
fn convexity_check_grid(harmonics: &[Harmonic]) -> usize {
    let max_order = harmonics.iter().map(|h| h.order).max().unwrap_or(0);
    64 * (1 + max_order as usize)
}

// ------------------------------------------------------------------------
// JSON body spec: {"a0": number, "harmonics": [{"n": int, "a": num, "b": num}]}
// ------------------------------------------------------------------------

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawBodySpec {
    a0: f64,
    #[serde(default)]
    harmonics: Vec<RawHarmonic>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub(crate) struct RawHarmonic {
    pub n: i64,
    #[serde(default)]
    pub a: f64,
    #[serde(default)]
    pub b: f64,
}

pub(crate) fn harmonics_from_raw(raw: &[RawHarmonic]) -> Result<Vec<Harmonic>, Error> {
    let mut seen = std::collections::BTreeSet::new();
    let mut harmonics = Vec::with_capacity(raw.len());
    for (i, h) in raw.iter().enumerate() {
        if h.n < 1 {
            return Err(Error::Spec(format!(
                "harmonics[{i}].n must be >= 1, got {}",
                h.n
            )));
        }
        if h.n > u32::MAX as i64 {
            return Err(Error::Spec(format!(
                "harmonics[{i}].n is out of range: {}",
                h.n
            )));
        }
        let order = h.n as u32;
        if !seen.insert(order) {
            return Err(Error::Spec(format!(
                "harmonics[{i}].n: duplicate order {order}"
            )));
        }
        if !h.a.is_finite() || !h.b.is_finite() {
            return Err(Error::Spec(format!(
                "harmonics[{i}]: coefficients must be finite"
            )));
        }
        harmonics.push(Harmonic::new(order, h.a, h.b));
    }
    Ok(harmonics)
}

impl FourierBody {
    /// Parse the JSON body spec, rejecting duplicate `n` and `n < 1`.
    pub fn from_spec_json(json: &str) -> Result<Self, Error> {
        let raw: RawBodySpec = serde_json::from_str(json)?;
        if !raw.a0.is_finite() {
            return Err(Error::Spec(format!("a0 must be finite, got {}", raw.a0)));
        }
        Self::new(raw.a0, harmonics_from_raw(&raw.harmonics)?)
    }

    /// Canonical JSON spec; parsing it back yields identical coefficients.
    pub fn to_spec_json(&self) -> String {
        let raw = RawBodySpec {
            a0: self.mean_term,
            harmonics: self
                .harmonics
                .iter()
                .map(|h| RawHarmonic {
                    n: h.order as i64,
                    a: h.cos_coeff,
                    b: h.sin_coeff,
                })
                .collect(),
        };
        let mut json = serde_json::to_string_pretty(&raw).expect("spec serializes");
        json.push('\n');
        json
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fig5() -> FourierBody {
        FourierBody::new(30.0, vec![Harmonic::new(4, 0.0, 1.0)]).unwrap()
    }

    fn fig6() -> FourierBody {
        FourierBody::new(80.0, vec![Harmonic::new(7, 1.0, 0.0)]).unwrap()
    }

    #[test]
    fn support_of_disc_is_constant() {
        let disc = FourierBody::disc(1.0).unwrap();
        assert_eq!(disc.support(0.7), 1.0);
        assert_eq!(disc.support_deriv(0.7), 0.0);
        assert_eq!(disc.support_second_deriv(0.7), 0.0);
    }

    #[test]
    fn support_derivative_of_fig5_at_zero() {
        // d/dt (30 + sin 4t) = 4 cos 4t = 4 at t = 0
        assert_eq!(fig5().support_deriv(0.0), 4.0);
    }

    #[test]
    fn support_of_fig6_at_pi_over_7() {
        // 80 + cos(pi) = 79
        let v = fig6().support(PI / 7.0);
        assert!((v - 79.0).abs() < 1e-12, "got {v}");
    }

    #[test]
    fn boundary_point_of_disc() {
        let disc = FourierBody::disc(1.0).unwrap();
        let p = disc.boundary_point(0.0);
        assert!((p.x - 1.0).abs() < 1e-15 && p.y.abs() < 1e-15);
        let q = disc.boundary_point(PI / 2.0);
        assert!(q.x.abs() < 1e-15 && (q.y - 1.0).abs() < 1e-15);
    }

    #[test]
    fn boundary_point_of_fig5_at_zero() {
        // p = 30, p' = 4 at t = 0
        let p = fig5().boundary_point(0.0);
        assert!((p.x - 30.0).abs() < 1e-12 && (p.y - 4.0).abs() < 1e-12);
    }

    #[test]
    fn widths() {
        let disc = FourierBody::disc(1.0).unwrap();
        let wp = disc.width_profile(64).unwrap();
        assert_eq!(wp.min_width, 2.0);
        assert!(wp.is_constant);

        // odd harmonic cancels in w
        let wp = fig6().width_profile(512).unwrap();
        assert!(wp.is_constant);
        assert!((wp.min_width - 160.0).abs() < 1e-9);

        // even harmonic doubles: w = 60 + 2 sin 4t
        let wp = fig5().width_profile(512).unwrap();
        assert!(!wp.is_constant);
        assert!((wp.min_width - 58.0).abs() < 1e-9);
    }

    #[test]
    fn width_profile_rejects_tiny_grid() {
        assert!(matches!(
            FourierBody::disc(1.0).unwrap().width_profile(7),
            Err(Error::GridTooSmall { min: 8, got: 7 })
        ));
    }

    #[test]
    fn perimeters() {
        assert!((FourierBody::disc(1.0).unwrap().perimeter() - TAU).abs() < 1e-15);
        let b = FourierBody::new(
            70.0,
            vec![Harmonic::new(4, 0.0, 1.0), Harmonic::new(5, 1.0, 0.0)],
        )
        .unwrap();
        assert!((b.perimeter() - 140.0 * PI).abs() < 1e-10);
        let b = FourierBody::new(60.0, vec![Harmonic::new(5, 1.0, 0.0)]).unwrap();
        assert!((b.perimeter() - 120.0 * PI).abs() < 1e-10);
    }

    #[test]
    fn convexity_margins() {
        assert_eq!(FourierBody::disc(1.0).unwrap().convexity_margin(64), 1.0);
        // 30 - 15 sin 4t has minimum 15
        assert!((fig5().convexity_margin(320) - 15.0).abs() < 1e-12);
        // 10 - 48 cos 7t dips to -38: rejected by the constructor
        let err = FourierBody::new(10.0, vec![Harmonic::new(7, 1.0, 0.0)]);
        match err {
            Err(Error::NotConvex { margin }) => assert!((margin - (-38.0)).abs() < 1e-12),
            other => panic!("expected NotConvex, got {other:?}"),
        }
        assert!(
            (convexity_margin(10.0, &[Harmonic::new(7, 1.0, 0.0)], 512) - (-38.0)).abs() < 1e-12
        );
    }

    #[test]
    fn symmetry_predicates() {
        let s = fig6().symmetry();
        assert!(s.constant_width);
        assert!(!s.centrally_symmetric);
        assert_eq!(s.rotational_period, Some(TAU / 7.0));

        let s = fig5().symmetry();
        assert!(!s.constant_width);
        assert!(s.centrally_symmetric);
        assert_eq!(s.rotational_period, Some(TAU / 4.0));

        let b = FourierBody::new(
            70.0,
            vec![Harmonic::new(4, 0.0, 1.0), Harmonic::new(5, 1.0, 0.0)],
        )
        .unwrap();
        let s = b.symmetry();
        assert!(!s.constant_width);
        assert!(!s.centrally_symmetric);
        assert_eq!(s.rotational_period, None);

        let disc = FourierBody::disc(2.0).unwrap();
        let s = disc.symmetry();
        assert!(s.constant_width && s.centrally_symmetric);
        assert_eq!(s.rotational_period, None);
    }

    #[test]
    fn constructor_validation() {
        assert!(FourierBody::new(0.0, vec![]).is_err());
        assert!(FourierBody::new(-1.0, vec![]).is_err());
        assert!(FourierBody::new(f64::NAN, vec![]).is_err());
        assert!(matches!(
            FourierBody::new(1.0, vec![Harmonic::new(0, 0.1, 0.0)]),
            Err(Error::InvalidOrder(0))
        ));
        assert!(matches!(
            FourierBody::new(
                10.0,
                vec![Harmonic::new(2, 0.1, 0.0), Harmonic::new(2, 0.0, 0.1)]
            ),
            Err(Error::DuplicateOrder(2))
        ));
        assert!(matches!(
            FourierBody::new(1.0, vec![Harmonic::new(2, f64::NAN, 0.0)]),
            Err(Error::NonFiniteCoefficient(2))
        ));
    }

    #[test]
    fn translation_merges_into_order_one() {
        let b = fig5().translated(3.0, -2.0);
        assert_eq!(b.harmonics()[0], Harmonic::new(1, 3.0, -2.0));
        let b2 = b.translated(-3.0, 2.0);
        assert_eq!(b2.harmonics()[0], Harmonic::new(1, 0.0, 0.0));
        assert_eq!(b2.centered().harmonics().len(), 1);
    }

    #[test]
    fn rotation_shifts_support() {
        let b = fig5();
        let theta = 0.37;
        let r = b.rotated(theta);
        for &t in &[0.0, 0.4, 1.9, 4.4] {
            assert!((r.support(t) - b.support(t - theta)).abs() < 1e-12);
        }
    }

    #[test]
    fn spec_json_round_trip() {
        let body = FourierBody::new(
            70.0,
            vec![Harmonic::new(4, 0.25, 1.0), Harmonic::new(5, 1.0, -0.5)],
        )
        .unwrap();
        let json = body.to_spec_json();
        let back = FourierBody::from_spec_json(&json).unwrap();
        assert_eq!(body, back);
    }

    #[test]
    fn spec_json_rejects_bad_harmonics() {
        let err = FourierBody::from_spec_json(r#"{"a0": 1, "harmonics": [{"n": 0, "a": 1}]}"#)
            .unwrap_err();
        assert!(err.to_string().contains("harmonics[0].n"));
        let err = FourierBody::from_spec_json(
            r#"{"a0": 10, "harmonics": [{"n": 2, "a": 0.1}, {"n": 2, "b": 0.1}]}"#,
        )
        .unwrap_err();
        assert!(err.to_string().contains("duplicate order 2"));
        assert!(FourierBody::from_spec_json("{").is_err());
        let err = FourierBody::from_spec_json(r#"{"a0": 1, "harmonic": []}"#).unwrap_err();
        assert!(err.to_string().contains("harmonic"));
    }

    #[test]
    fn descriptor_reads_like_a_support_function() {
        assert_eq!(fig5().descriptor(), "30 + sin 4t");
        assert_eq!(fig6().descriptor(), "80 + cos 7t");
        let b = FourierBody::new(60.0, vec![Harmonic::new(5, 1.0, 1.0)]).unwrap();
        assert_eq!(b.descriptor(), "60 + cos 5t + sin 5t");
        let b = FourierBody::new(10.0, vec![Harmonic::new(2, -0.5, 0.0)]).unwrap();
        assert_eq!(b.descriptor(), "10 - 0.5 cos 2t");
    }
}
