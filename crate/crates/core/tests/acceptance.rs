//! Acceptance suite: one test per criterion, each printing a single
//! PASS/FAIL line (visible under `cargo test -- --nocapture`).

use std::f64::consts::{PI, TAU};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use isoptic_core::analysis::{
    check_lambda_equals_2d, check_lambda_inequality, check_q_inequality, disc_reference,
    mean_chord_c, random_corpus,
};
use isoptic_core::chords3d::{alpha_chords, chord_spread, tangent_chord_lengths, ImplicitBody3D};
use isoptic_core::isoptic::{circumscribed_polygon, homothety_fit};
use isoptic_core::rotor::{determinant_c, determinant_h, is_admissible_exact, ADMISSIBILITY_TOL};
use isoptic_core::sampling::uniform_grid;
use isoptic_core::{
    ChordKind, FourierBody, Harmonic, Isoptic, RationalAngle, SpreadStats, DEFAULT_GRID,
};

struct Criterion {
    id: &'static str,
    name: &'static str,
    start: Instant,
    failures: Vec<String>,
}

impl Criterion {
    fn new(id: &'static str, name: &'static str) -> Self {
        Self {
            id,
            name,
            start: Instant::now(),
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, detail: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(detail());
        }
    }

    fn conclude(mut self, runtime_limit: Option<f64>, summary: String) {
        let elapsed = self.start.elapsed().as_secs_f64();
        if let Some(limit) = runtime_limit {
            if elapsed >= limit {
                self.failures.push(format!(
                    "runtime {elapsed:.2} s exceeds the {limit} s limit"
                ));
            }
        }
        let status = if self.failures.is_empty() {
            "PASS"
        } else {
            "FAIL"
        };
        println!(
            "ACCEPTANCE {:>2} {} {}: {} ({:.2} s)",
            self.id, status, self.name, summary, elapsed
        );
        assert!(
            self.failures.is_empty(),
            "criterion {} failed:\n  {}",
            self.id,
            self.failures.join("\n  ")
        );
    }
}

fn paper_rotors() -> Vec<(FourierBody, f64, u32)> {
    vec![
        (
            FourierBody::new(30.0, vec![Harmonic::new(4, 0.0, 1.0)]).unwrap(),
            PI / 3.0,
            3,
        ),
        (
            FourierBody::new(80.0, vec![Harmonic::new(7, 1.0, 0.0)]).unwrap(),
            2.0 * PI / 3.0,
            6,
        ),
        (
            FourierBody::new(
                70.0,
                vec![Harmonic::new(4, 0.0, 1.0), Harmonic::new(5, 1.0, 0.0)],
            )
            .unwrap(),
            PI / 3.0,
            3,
        ),
        (
            FourierBody::new(60.0, vec![Harmonic::new(5, 1.0, 0.0)]).unwrap(),
            PI / 2.0,
            4,
        ),
    ]
}

#[test]
fn criterion_1_disc_oracle_suite() {
    let mut c = Criterion::new("1", "disc oracle suite");
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut worst = 0.0f64;
    for _ in 0..20 {
        let radius = rng.gen_range(0.1..10.0);
        let alpha = rng.gen_range(0.05..PI - 0.05);
        let t = rng.gen_range(0.0..TAU);
        let reference = disc_reference(radius, alpha).unwrap();
        let disc = FourierBody::disc(radius).unwrap();
        let iso = Isoptic::new(&disc, alpha).unwrap();
        let ch = iso.chords(t);
        let pairs = [
            (ch.a, reference.a, "a"),
            (ch.b, reference.b, "b"),
            (ch.c, reference.c, "c"),
            (ch.d, reference.d, "d"),
            (ch.q, reference.q, "q"),
            (ch.lambda, reference.lambda, "lambda"),
            (ch.h, reference.h, "h"),
            (iso.point(t).norm(), reference.isoptic_radius, "radius"),
        ];
        for (got, expect, name) in pairs {
            let rel = (got - expect).abs() / expect.abs();
            worst = worst.max(rel);
            c.check(rel <= 1e-9, || {
                format!("{name} off by {rel:.3e} at R={radius} alpha={alpha}")
            });
        }
    }
    c.conclude(
        Some(1.0),
        format!("20 random (R, alpha) pairs, worst relative error {worst:.3e}"),
    );
}

#[test]
fn criterion_2_paper_rotor_reproduction() {
    let mut c = Criterion::new("2", "paper rotor reproduction");
    let mut worst_c_spread = 0.0f64;
    let mut worst_side_spread = 0.0f64;
    let mut worst_vertex = 0.0f64;
    for (body, alpha, sides) in paper_rotors() {
        let iso = Isoptic::new(&body, alpha).unwrap();
        let profile = iso.profile(ChordKind::C, DEFAULT_GRID).unwrap();
        worst_c_spread = worst_c_spread.max(profile.stats.relative_spread);
        c.check(profile.stats.relative_spread <= 1e-9, || {
            format!(
                "{}: c spread {:.3e}",
                body.descriptor(),
                profile.stats.relative_spread
            )
        });

        let mut side_lengths = Vec::new();
        for k in 0..16 {
            let phase = TAU * k as f64 / 16.0;
            let frame = circumscribed_polygon(&body, sides, phase).unwrap();
            side_lengths.extend(frame.side_lengths.iter().copied());
            for (j, v) in frame.vertices.iter().enumerate() {
                let t = phase + TAU * j as f64 / sides as f64;
                let miss = v.distance(iso.point(t)) / body.mean_term();
                worst_vertex = worst_vertex.max(miss);
                c.check(miss <= 1e-9, || {
                    format!("{}: vertex off isoptic by {miss:.3e}", body.descriptor())
                });
            }
        }
        let stats = SpreadStats::from_values(&side_lengths).unwrap();
        worst_side_spread = worst_side_spread.max(stats.relative_spread);
        c.check(stats.relative_spread <= 1e-9, || {
            format!(
                "{}: side-length spread {:.3e}",
                body.descriptor(),
                stats.relative_spread
            )
        });
    }
    c.conclude(
        Some(5.0),
        format!(
            "4 bodies at grid {DEFAULT_GRID}: c spread <= {worst_c_spread:.2e}, \
             side spread <= {worst_side_spread:.2e}, vertex miss <= {worst_vertex:.2e}"
        ),
    );
}

#[test]
fn criterion_3_admissibility_equivalence() {
    let mut c = Criterion::new(
        "3",
        "admissibility equivalence and h determinant positivity",
    );
    let mut pairs = 0usize;
    for n in 2..=50u32 {
        for q in 2..=30u32 {
            for s in 1..q {
                let angle = RationalAngle::new(s, q).unwrap();
                let exact = is_admissible_exact(n, angle);
                let det = determinant_c(n, angle.radians()).unwrap().det;
                let numeric = det <= ADMISSIBILITY_TOL;
                pairs += 1;
                c.check(exact == numeric, || {
                    format!("n={n} alpha={s}/{q}pi: parity formula {exact}, det {det:.3e}")
                });
            }
        }
    }
    let mut h_min = f64::INFINITY;
    for n in 1..=50u32 {
        for k in 0..1000 {
            let alpha = 0.01 + (PI - 0.02) * k as f64 / 999.0;
            let d = determinant_h(n, alpha).unwrap();
            h_min = h_min.min(d);
            c.check(d > 0.0, || format!("determinant_h({n}, {alpha}) = {d}"));
        }
    }
    c.conclude(
        Some(10.0),
        format!("{pairs} rational pairs agree; min determinant_h over sweep {h_min:.3e}"),
    );
}

#[test]
fn criterion_4_mean_chord_identity() {
    let mut c = Criterion::new("4", "mean-chord identity over the corpus");
    let corpus = random_corpus(0, 20);
    let mut worst = 0.0f64;
    for body in &corpus {
        for j in 1..=10 {
            let alpha = j as f64 * PI / 11.0;
            let iso = Isoptic::new(body, alpha).unwrap();
            let quadrature = iso.profile(ChordKind::C, DEFAULT_GRID).unwrap().stats.mean;
            let identity = mean_chord_c(body, alpha).unwrap();
            let rel = (quadrature - identity).abs() / identity;
            worst = worst.max(rel);
            c.check(rel <= 1e-9, || {
                format!(
                    "{} at alpha {alpha}: deviation {rel:.3e}",
                    body.descriptor()
                )
            });
        }
    }
    c.conclude(
        Some(10.0),
        format!("20 bodies x 10 angles, worst relative deviation {worst:.3e}"),
    );
}

#[test]
fn criterion_5_inequality_suites() {
    let mut c = Criterion::new("5", "lambda and q existence inequalities");
    let corpus = random_corpus(0, 20);
    for body in &corpus {
        for j in 1..=10 {
            let alpha = j as f64 * PI / 11.0;
            let lambda = check_lambda_inequality(body, alpha, DEFAULT_GRID).unwrap();
            c.check(lambda.passed(), || {
                format!("lambda bound failed: {} at {alpha}", body.descriptor())
            });
            let q = check_q_inequality(body, alpha, DEFAULT_GRID).unwrap();
            c.check(q.passed(), || {
                format!("q bound failed: {} at {alpha}", body.descriptor())
            });
        }
    }
    let disc = FourierBody::disc(1.5).unwrap();
    for &alpha in &[0.7, PI / 2.0, 2.4] {
        let lambda = check_lambda_inequality(&disc, alpha, DEFAULT_GRID).unwrap();
        c.check(
            lambda.passed() && lambda.measurements["equality_everywhere"] == 1.0,
            || format!("disc lambda equality-everywhere missing at {alpha}"),
        );
        let q = check_q_inequality(&disc, alpha, DEFAULT_GRID).unwrap();
        c.check(
            q.passed() && q.measurements["equality_everywhere"] == 1.0,
            || format!("disc q equality-everywhere missing at {alpha}"),
        );
    }
    c.conclude(
        None,
        "corpus existence bounds hold; disc is the equality case in both".to_string(),
    );
}

#[test]
fn criterion_6_symmetry_identity() {
    let mut c = Criterion::new("6", "lambda = 2d under rotational symmetry");
    // period 2pi/3 divides pi - pi/3
    let body = FourierBody::new(20.0, vec![Harmonic::new(3, 1.0, 0.0)]).unwrap();
    let alpha = PI / 3.0;
    let iso = Isoptic::new(&body, alpha).unwrap();
    let mut worst = 0.0f64;
    for t in uniform_grid(DEFAULT_GRID) {
        let lambda = iso.chord_lambda(t);
        let rel = (lambda - 2.0 * iso.chord_d(t)).abs() / lambda;
        worst = worst.max(rel);
        c.check(rel <= 1e-9, || {
            format!("lambda != 2d at t = {t}: {rel:.3e}")
        });
    }
    let report = check_lambda_equals_2d(&body, alpha, DEFAULT_GRID).unwrap();
    c.check(report.passed(), || {
        "harness report did not pass".to_string()
    });

    let disc = FourierBody::disc(2.0).unwrap();
    let iso = Isoptic::new(&disc, 1.1).unwrap();
    let mut worst_disc = 0.0f64;
    for t in uniform_grid(1024) {
        let target = iso.chord_lambda(t) / (2.0 * 1.1f64.sin());
        let rel = (iso.point(t).norm() - target).abs() / target;
        worst_disc = worst_disc.max(rel);
        c.check(rel <= 1e-9, || {
            format!("disc radius identity off by {rel:.3e} at t = {t}")
        });
    }
    c.conclude(
        None,
        format!(
            "pointwise error <= {worst:.2e} on 20 + cos 3t; disc radius identity <= {worst_disc:.2e}"
        ),
    );
}

#[test]
fn criterion_7_three_dimensional_probe() {
    let mut c = Criterion::new("7", "3-D equichordal and alpha-chord probe");
    let count = 500;

    let outer = ImplicitBody3D::ball([0.0; 3], 2.0).unwrap();
    let inner = ImplicitBody3D::ball([0.0; 3], 1.0).unwrap();
    let samples = tangent_chord_lengths(&outer, &inner, count, 0).unwrap();
    let expect = 2.0 * 3f64.sqrt();
    let constant = samples
        .iter()
        .filter(|s| (s.length - expect).abs() <= 1e-6)
        .count();
    c.check(constant == count, || {
        format!("only {constant}/{count} concentric-ball chords hit 2*sqrt(3) within 1e-6")
    });

    let ellipsoid = ImplicitBody3D::ellipsoid([0.0; 3], [1.5, 1.5, 2.0]).unwrap();
    let spread_tangent =
        chord_spread(&tangent_chord_lengths(&ellipsoid, &inner, count, 0).unwrap())
            .unwrap()
            .relative_spread;
    c.check(spread_tangent > 0.01, || {
        format!("ellipsoid tangent-chord spread {spread_tangent:.4} not > 0.01")
    });

    let ball = ImplicitBody3D::ball([0.0; 3], 1.0).unwrap();
    let chords = alpha_chords(&ball, PI / 2.0, count, 0).unwrap();
    let expect = 2f64.sqrt();
    let constant = chords
        .iter()
        .filter(|s| (s.length - expect).abs() <= 1e-6)
        .count();
    c.check(constant == count, || {
        format!("only {constant}/{count} ball pi/2-chords hit R*sqrt(2) within 1e-6")
    });

    let tall = ImplicitBody3D::ellipsoid([0.0; 3], [1.0, 1.0, 1.5]).unwrap();
    let spread_alpha = chord_spread(&alpha_chords(&tall, PI / 2.0, count, 0).unwrap())
        .unwrap()
        .relative_spread;
    c.check(spread_alpha > 0.01, || {
        format!("ellipsoid pi/2-chord spread {spread_alpha:.4} not > 0.01")
    });

    c.conclude(
        Some(30.0),
        format!(
            "balls constant, ellipsoid spreads {spread_tangent:.3} (tangent) / {spread_alpha:.3} (pi/2)"
        ),
    );
}

#[test]
fn criterion_8_contrapositive_spread() {
    let mut c = Criterion::new("8", "inadmissible harmonics force c spread");
    let pairs: [(u32, f64); 10] = [
        (2, PI / 2.0),
        (2, 2.0 * PI / 3.0),
        (3, PI / 3.0),
        (3, 2.0 * PI / 5.0),
        (4, PI / 2.0),
        (4, PI / 4.0),
        (5, PI / 4.0),
        (6, PI / 3.0),
        (6, 1.0),
        (7, PI / 5.0),
    ];
    let mut min_spread = f64::INFINITY;
    for (n, alpha) in pairs {
        let det = determinant_c(n, alpha).unwrap().det;
        c.check(det > 1e-6, || {
            format!("pair (n={n}, alpha={alpha}) is not inadmissible: det {det:.3e}")
        });
        let a0 = 2.0 * ((n * n - 1) as f64);
        let body = FourierBody::new(a0, vec![Harmonic::new(n, 1.0, 0.0)]).unwrap();
        let iso = Isoptic::new(&body, alpha).unwrap();
        let spread = iso
            .profile(ChordKind::C, DEFAULT_GRID)
            .unwrap()
            .stats
            .relative_spread;
        min_spread = min_spread.min(spread);
        c.check(spread > 1e-4, || {
            format!("(n={n}, alpha={alpha}): spread {spread:.3e} not > 1e-4")
        });
    }
    c.conclude(
        None,
        format!("10 inadmissible pairs, smallest c spread {min_spread:.3e}"),
    );
}

#[test]
fn criterion_9_pentagon_remark_audit() {
    // Informational: report the measured spreads and the homothety fit for
    // p = 60 + cos 5t + sin 5t at pi/5 and 3pi/5 without asserting the
    // claimed constancy.
    let mut c = Criterion::new("9", "pentagon-remark audit (informational)");
    let body = FourierBody::new(60.0, vec![Harmonic::new(5, 1.0, 1.0)]).unwrap();
    let alpha_1 = PI / 5.0;
    let alpha_2 = 3.0 * PI / 5.0;

    let iso_1 = Isoptic::new(&body, alpha_1).unwrap();
    let iso_2 = Isoptic::new(&body, alpha_2).unwrap();
    let spread_1 = iso_1
        .profile(ChordKind::C, DEFAULT_GRID)
        .unwrap()
        .stats
        .relative_spread;
    let spread_2 = iso_2
        .profile(ChordKind::C, DEFAULT_GRID)
        .unwrap()
        .stats
        .relative_spread;
    let det_1 = determinant_c(5, alpha_1).unwrap().det;
    let det_2 = determinant_c(5, alpha_2).unwrap().det;

    let curve_1 = iso_1.curve(DEFAULT_GRID).unwrap();
    let curve_2 = iso_2.curve(DEFAULT_GRID).unwrap();
    let fit = homothety_fit(&curve_1, &curve_2).unwrap();

    c.check(
        spread_1.is_finite() && spread_2.is_finite() && fit.ratio.is_finite(),
        || "audit produced non-finite measurements".to_string(),
    );
    c.conclude(
        None,
        format!(
            "c spreads {spread_1:.3e} (pi/5, det {det_1:.2e}) and {spread_2:.3e} \
             (3pi/5, det {det_2:.2e}); homothety ratio {:.6}, residual {:.3e}",
            fit.ratio, fit.residual
        ),
    );
}
