//! Numerical verification harness: constancy diagnostics, the mean-chord
//! identity, the lambda = 2d symmetry identity, the triangle bound, and the
//! two existence inequalities, each packaged as a deterministic report.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::body::{convexity_margin, FourierBody, Harmonic};
use crate::error::Error;
use crate::isoptic::{ChordKind, Isoptic};
use crate::rotor::{determinant_c, determinant_h};
use crate::sampling::uniform_grid;

/// Relative tolerance used by the pass/fail verdicts.
pub const REL_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Pass,
    Fail,
    Informational,
}

/// Outcome of one check: named measurements, the tolerances they were held
/// to, and a verdict derived deterministically from both.
#[derive(Clone, Debug, Serialize)]
pub struct VerificationReport {
    pub theorem: String,
    pub body: String,
    pub alpha: Option<f64>,
    pub measurements: BTreeMap<String, f64>,
    pub tolerances: BTreeMap<String, f64>,
    pub verdict: Verdict,
}

impl VerificationReport {
    pub fn new(theorem: &str, body: &str, alpha: Option<f64>) -> Self {
        Self {
            theorem: theorem.to_string(),
            body: body.to_string(),
            alpha,
            measurements: BTreeMap::new(),
            tolerances: BTreeMap::new(),
            verdict: Verdict::Informational,
        }
    }

    pub fn measure(&mut self, name: &str, value: f64) -> &mut Self {
        self.measurements.insert(name.to_string(), value);
        self
    }

    pub fn tolerance(&mut self, name: &str, value: f64) -> &mut Self {
        self.tolerances.insert(name.to_string(), value);
        self
    }

    pub fn passed(&self) -> bool {
        self.verdict == Verdict::Pass
    }

    pub fn to_json(&self) -> String {
        let mut json = serde_json::to_string_pretty(self).expect("report serializes");
        json.push('\n');
        json
    }
}

/// Closed-form chord values of a disc of radius `R`, the reference every
/// isoptic quantity is checked against.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct DiscReference {
    pub radius: f64,
    pub alpha: f64,
    pub a: f64,
    pub b: f64,
    pub c: f64,
    pub d: f64,
    pub q: f64,
    pub lambda: f64,
    pub h: f64,
    pub isoptic_radius: f64,
}

pub fn disc_reference(radius: f64, alpha: f64) -> Result<DiscReference, Error> {
    if !radius.is_finite() || radius <= 0.0 {
        return Err(Error::InvalidRadius(radius));
    }
    if !(alpha > 0.0 && alpha < PI) {
        return Err(Error::AlphaOutOfRange(alpha));
    }
    let half = 0.5 * alpha;
    let cot_half = half.cos() / half.sin();
    Ok(DiscReference {
        radius,
        alpha,
        a: radius * cot_half,
        b: radius * cot_half,
        c: 2.0 * radius * cot_half,
        d: 2.0 * radius * half.cos(),
        q: 2.0 * radius * half.cos(),
        lambda: 4.0 * radius * half.cos(),
        h: radius * cot_half,
        isoptic_radius: radius / half.sin(),
    })
}

/// Mean of the tangent chord `c` over one period: `cot(alpha/2) L(K) / pi`,
/// computed from the perimeter.
pub fn mean_chord_c(body: &FourierBody, alpha: f64) -> Result<f64, Error> {
    if !(alpha > 0.0 && alpha < PI) {
        return Err(Error::AlphaOutOfRange(alpha));
    }
    let half = 0.5 * alpha;
    Ok(half.cos() / half.sin() * body.perimeter() / PI)
}

/// Constancy diagnostic for the tangent chord `c`; the report carries the
/// chord-system determinant of every body harmonic at this angle.
pub fn check_constant_c(
    body: &FourierBody,
    alpha: f64,
    tolerance: f64,
    grid_size: usize,
) -> Result<VerificationReport, Error> {
    let iso = Isoptic::new(body, alpha)?;
    let profile = iso.profile(ChordKind::C, grid_size)?;
    let mut report = VerificationReport::new("1", &body.descriptor(), Some(alpha));
    report
        .measure("relative_spread", profile.stats.relative_spread)
        .measure("c_mean", profile.stats.mean)
        .measure("c_min", profile.stats.min)
        .measure("c_max", profile.stats.max)
        .tolerance("relative_spread", tolerance);
    for h in body.harmonics().iter().filter(|h| h.is_nonzero()) {
        if h.order >= 2 {
            let det = determinant_c(h.order, alpha)?;
            report.measure(&format!("det_c_n{}", h.order), det.det);
        }
    }
    report.verdict = if profile.stats.relative_spread <= tolerance {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(report)
}

/// Constancy diagnostic for the support-foot distance `h`. Its system
/// determinant never vanishes, so any nonzero harmonic must show up as
/// spread.
pub fn check_constant_h(
    body: &FourierBody,
    alpha: f64,
    tolerance: f64,
    grid_size: usize,
) -> Result<VerificationReport, Error> {
    let iso = Isoptic::new(body, alpha)?;
    let profile = iso.profile(ChordKind::H, grid_size)?;
    let mut report = VerificationReport::new("3", &body.descriptor(), Some(alpha));
    report
        .measure("relative_spread", profile.stats.relative_spread)
        .measure("h_mean", profile.stats.mean)
        .tolerance("relative_spread", tolerance);
    for h in body.harmonics().iter().filter(|h| h.is_nonzero()) {
        report.measure(
            &format!("det_h_n{}", h.order),
            determinant_h(h.order, alpha)?,
        );
    }
    report.verdict = if profile.stats.relative_spread <= tolerance {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(report)
}

/// Does `candidate` divide `period` (up to relative round-off)?
fn divides(period: f64, angle: f64) -> bool {
    let ratio = angle / period;
    (ratio - ratio.round()).abs() <= 1e-9 * ratio.abs().max(1.0) && ratio.round() >= 1.0
}

/// Pointwise identity `lambda(t) = 2 d(t)` for bodies whose rotational
/// symmetry period divides `pi - alpha` or `2 alpha`; when `lambda` is
/// constant the isoptic must in addition be the circle `|g_a| = lambda /
/// (2 sin alpha)` about the origin.
///
/// Bodies without the required symmetry get an informational report.
pub fn check_lambda_equals_2d(
    body: &FourierBody,
    alpha: f64,
    grid_size: usize,
) -> Result<VerificationReport, Error> {
    let iso = Isoptic::new(body, alpha)?;
    let symmetric = {
        let nonzero = body.harmonics().iter().any(|h| h.is_nonzero());
        if !nonzero {
            true // origin-centred disc
        } else {
            match body.symmetry().rotational_period {
                Some(period) => divides(period, PI - alpha) || divides(period, 2.0 * alpha),
                None => false,
            }
        }
    };

    let mut max_rel = 0.0f64;
    let mut lambdas = Vec::with_capacity(grid_size);
    for t in uniform_grid(grid_size) {
        let lambda = iso.chord_lambda(t);
        let rel = (lambda - 2.0 * iso.chord_d(t)).abs() / lambda.abs().max(f64::MIN_POSITIVE);
        max_rel = max_rel.max(rel);
        lambdas.push(lambda);
    }
    let lambda_stats = crate::sampling::SpreadStats::from_values(&lambdas)?;

    let mut report = VerificationReport::new("4", &body.descriptor(), Some(alpha));
    report
        .measure("max_rel_lambda_2d_error", max_rel)
        .measure("lambda_spread", lambda_stats.relative_spread)
        .measure("symmetry_precondition", if symmetric { 1.0 } else { 0.0 })
        .tolerance("max_rel_lambda_2d_error", REL_TOL);

    let mut ok = max_rel <= REL_TOL;
    if lambda_stats.relative_spread <= REL_TOL {
        // Constant lambda: the isoptic is a circle about the origin.
        let target = lambda_stats.mean / (2.0 * alpha.sin());
        let mut max_radius_err = 0.0f64;
        for t in uniform_grid(grid_size) {
            let r = iso.point(t).norm();
            max_radius_err = max_radius_err.max((r - target).abs() / target);
        }
        report
            .measure("isoptic_radius", target)
            .measure("max_rel_radius_error", max_radius_err)
            .tolerance("max_rel_radius_error", REL_TOL);
        ok = ok && max_radius_err <= REL_TOL;
    }

    report.verdict = if !symmetric {
        Verdict::Informational
    } else if ok {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(report)
}

/// Existence bound `max_t lambda(t) >= 2 omega_0 cos(alpha/2)`, the chained
/// perimeter bound at the grid point where `c(t) + c(t - pi + alpha)` is
/// closest to its mean, and detection of the equality-everywhere case.
pub fn check_lambda_inequality(
    body: &FourierBody,
    alpha: f64,
    grid_size: usize,
) -> Result<VerificationReport, Error> {
    let iso = Isoptic::new(body, alpha)?;
    let omega0 = body.width_profile(grid_size)?.min_width;
    let half = 0.5 * alpha;
    let bound = 2.0 * omega0 * half.cos();
    let one_sided = REL_TOL * body.mean_term();

    let grid = uniform_grid(grid_size);
    let lambdas: Vec<f64> = grid.iter().map(|&t| iso.chord_lambda(t)).collect();
    let lambda_max = lambdas.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let exists = lambda_max >= bound - one_sided;
    let equality_everywhere = lambdas.iter().all(|&l| (l - bound).abs() <= one_sided);

    // Chained bound from the mean of c(t) + c(t - pi + alpha): at the grid
    // point closest to the mean, lambda is at least 2 cos(alpha/2) L / pi up
    // to the grid's deviation from the exact mean.
    let mean_sum = 2.0 * mean_chord_c(body, alpha)?;
    let mut t0 = grid[0];
    let mut s_t0 = f64::INFINITY;
    for &t in &grid {
        let s = iso.chord_c(t) + iso.chord_c(t - PI + alpha);
        if (s - mean_sum).abs() < (s_t0 - mean_sum).abs() {
            s_t0 = s;
            t0 = t;
        }
    }
    let chained_bound = 2.0 * half.cos() * body.perimeter() / PI;
    let grid_slack = (s_t0 - mean_sum).abs() * half.sin();
    let lambda_t0 = iso.chord_lambda(t0);
    let chained_ok = lambda_t0 >= chained_bound - grid_slack - one_sided;

    let mut report = VerificationReport::new("5", &body.descriptor(), Some(alpha));
    report
        .measure("omega0", omega0)
        .measure("bound", bound)
        .measure("lambda_max", lambda_max)
        .measure("lambda_t0", lambda_t0)
        .measure("chained_bound", chained_bound)
        .measure("chained_grid_slack", grid_slack)
        .measure(
            "equality_everywhere",
            if equality_everywhere { 1.0 } else { 0.0 },
        )
        .tolerance("one_sided", one_sided);
    report.verdict = if exists && chained_ok {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(report)
}

/// Existence bound `max_t q(t) >= omega_0 cos(alpha/2)` with detection of the
/// disc's equality-everywhere case.
pub fn check_q_inequality(
    body: &FourierBody,
    alpha: f64,
    grid_size: usize,
) -> Result<VerificationReport, Error> {
    let iso = Isoptic::new(body, alpha)?;
    let omega0 = body.width_profile(grid_size)?.min_width;
    let bound = omega0 * (0.5 * alpha).cos();
    let one_sided = REL_TOL * body.mean_term();

    let qs: Vec<f64> = uniform_grid(grid_size)
        .into_iter()
        .map(|t| iso.chord_q(t))
        .collect();
    let q_max = qs.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    let exists = q_max >= bound - one_sided;
    let equality_everywhere = qs.iter().all(|&q| (q - bound).abs() <= one_sided);

    let mut report = VerificationReport::new("JY", &body.descriptor(), Some(alpha));
    report
        .measure("omega0", omega0)
        .measure("bound", bound)
        .measure("q_max", q_max)
        .measure(
            "equality_everywhere",
            if equality_everywhere { 1.0 } else { 0.0 },
        )
        .tolerance("one_sided", one_sided);
    report.verdict = if exists { Verdict::Pass } else { Verdict::Fail };
    Ok(report)
}

/// One instance of the triangle bound
/// `lambda(t) >= [c(t) + c(t - pi + alpha)] sin(alpha/2)` with its equality
/// condition `c(t) = c(t - pi + alpha)`.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct TriangleBound {
    pub lhs: f64,
    pub rhs: f64,
    pub ok: bool,
    pub equality: bool,
}

pub fn triangle_bound_check(
    body: &FourierBody,
    alpha: f64,
    t: f64,
) -> Result<TriangleBound, Error> {
    let iso = Isoptic::new(body, alpha)?;
    let c_here = iso.chord_c(t);
    let c_back = iso.chord_c(t - PI + alpha);
    let lhs = iso.chord_lambda(t);
    let rhs = (c_here + c_back) * (0.5 * alpha).sin();
    let tol = REL_TOL * body.mean_term();
    Ok(TriangleBound {
        lhs,
        rhs,
        ok: lhs >= rhs - tol,
        equality: (c_here - c_back).abs() <= tol,
    })
}

/// Deterministic corpus of admissible random bodies: `a0 = 1`, harmonics of
/// orders 2 through 7, amplitudes redrawn until the convexity margin reaches
/// 0.1.
pub fn random_corpus(seed: u64, count: usize) -> Vec<FourierBody> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| loop {
            let harmonics: Vec<Harmonic> = (2..=7)
                .map(|n| {
                    let u = 0.15 / ((n * n - 1) as f64);
                    Harmonic::new(n, rng.gen_range(-u..=u), rng.gen_range(-u..=u))
                })
                .collect();
            if convexity_margin(1.0, &harmonics, 512) >= 0.1 {
                return FourierBody::new(1.0, harmonics).expect("margin certified above");
            }
        })
        .collect()
}
