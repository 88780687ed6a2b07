//! Harmonic/angle admissibility and rotor construction for regular polygons.
//!
//! A harmonic of order `n` can survive in a body whose tangent chord `c` is
//! constant at angle `alpha` only when the 2x2 system coupling `a_n`, `b_n`
//! degenerates. Its determinant is `e1^2 + e2^2` with
//!
//! ```text
//! e1 = -2 sin n(pi - a) cos a + sin 2na
//! e2 =  2 cos n(pi - a) cos a + 1 + cos 2na
//! ```
//!
//! For rational `alpha = s/q * pi` the vanishing locus is a number-theoretic
//! condition on `n`, `s`, `q`, which this module evaluates exactly in integer
//! arithmetic; the floating determinant is kept as the cross-check and as the
//! only route for irrational angles.

use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::angle::{gcd, RationalAngle};
use crate::body::{harmonics_from_raw, FourierBody, Harmonic, RawHarmonic};
use crate::error::Error;

/// Determinants of true zeros land below 1e-14 at machine precision for
/// denominators up to 30, so this threshold separates them cleanly.
pub const ADMISSIBILITY_TOL: f64 = 1e-12;

/// The two bracketed expressions of the chord system and their determinant.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct DeterminantC {
    pub e1: f64,
    pub e2: f64,
    pub det: f64,
}

/// Determinant of the constant-`c` chord system for harmonic order `n`.
pub fn determinant_c(n: u32, alpha: f64) -> Result<DeterminantC, Error> {
    if n < 2 {
        return Err(Error::OrderTooSmall { min: 2, got: n });
    }
    if !(alpha > 0.0 && alpha < PI) {
        return Err(Error::AlphaOutOfRange(alpha));
    }
    let nf = n as f64;
    let e1 = -2.0 * (nf * (PI - alpha)).sin() * alpha.cos() + (2.0 * nf * alpha).sin();
    let e2 = 2.0 * (nf * (PI - alpha)).cos() * alpha.cos() + 1.0 + (2.0 * nf * alpha).cos();
    Ok(DeterminantC {
        e1,
        e2,
        det: e1 * e1 + e2 * e2,
    })
}

/// Determinant of the constant-`h` system,
/// `n^2 sin^2 n(pi - a) + n^2 (cos a + cos n(pi - a))^2`.
///
/// Never zero on (0, pi): constancy of `h` kills every harmonic.
pub fn determinant_h(n: u32, alpha: f64) -> Result<f64, Error> {
    if n < 1 {
        return Err(Error::OrderTooSmall { min: 1, got: n });
    }
    if !(alpha > 0.0 && alpha < PI) {
        return Err(Error::AlphaOutOfRange(alpha));
    }
    let nf = n as f64;
    let s = (nf * (PI - alpha)).sin();
    let c = alpha.cos() + (nf * (PI - alpha)).cos();
    Ok(nf * nf * s * s + nf * nf * c * c)
}

/// A (harmonic order, angle) pair with its chord-system determinant.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct AdmissiblePair {
    pub order: u32,
    pub alpha: f64,
    pub determinant: f64,
}

impl AdmissiblePair {
    pub fn classify(order: u32, alpha: f64) -> Result<Self, Error> {
        let det = determinant_c(order, alpha)?;
        Ok(Self {
            order,
            alpha,
            determinant: det.det,
        })
    }

    pub fn is_admissible(&self) -> bool {
        self.determinant <= ADMISSIBILITY_TOL
    }
}

/// Exact admissibility of harmonic order `n` at a rational angle.
///
/// The determinant vanishes iff `cos na = -cos a` (even n) or
/// `cos na = cos a` (odd n), i.e. iff `alpha` equals `(2r+1)pi/(n+1)` or
/// `(2r+1)pi/(n-1)` for even n, and `2r*pi/(n+1)` or `2r*pi/(n-1)` for odd n.
pub fn is_admissible_exact(n: u32, alpha: RationalAngle) -> bool {
    let s = alpha.numer() as u64;
    let q = alpha.denom() as u64;
    let matches = |m: u64, want_odd: bool| {
        let prod = s * m;
        prod.is_multiple_of(q) && (prod / q) % 2 == u64::from(want_odd)
    };
    let want_odd = n.is_multiple_of(2);
    matches(n as u64 + 1, want_odd) || matches(n as u64 - 1, want_odd)
}

/// All angles in (0, pi) at which harmonic order `n` is admissible,
/// deduplicated and sorted, as exact rationals of pi.
pub fn admissible_angles(n: u32) -> Result<Vec<RationalAngle>, Error> {
    if n < 2 {
        return Err(Error::OrderTooSmall { min: 2, got: n });
    }
    let mut out = Vec::new();
    for denom in [n + 1, n - 1] {
        // numerators of the right parity below the denominator
        let start = if n.is_multiple_of(2) { 1 } else { 2 };
        let mut numer = start;
        while numer < denom {
            out.push(RationalAngle::new(numer, denom).expect("0 < numer < denom"));
            numer += 2;
        }
    }
    out.sort_by(|a, b| a.fraction_cmp(*b).then(a.denom().cmp(&b.denom())));
    out.dedup();
    Ok(out)
}

/// All harmonic orders in `[2, n_max]` admissible at `alpha = s/q * pi`.
///
/// `s` and `q` must be coprime with `0 < s < q`; the rational form keeps the
/// admissibility decision exact.
pub fn admissible_harmonics(alpha_num: u32, alpha_den: u32, n_max: u32) -> Result<Vec<u32>, Error> {
    if alpha_num == 0 || alpha_num >= alpha_den {
        return Err(Error::RationalAngleOutOfRange {
            numer: alpha_num,
            denom: alpha_den,
        });
    }
    if gcd(alpha_num as u64, alpha_den as u64) != 1 {
        return Err(Error::RationalAngleNotCoprime {
            numer: alpha_num,
            denom: alpha_den,
        });
    }
    if n_max < 2 {
        return Err(Error::OrderTooSmall { min: 2, got: n_max });
    }
    let alpha = RationalAngle::new(alpha_num, alpha_den)?;
    Ok((2..=n_max)
        .filter(|&n| is_admissible_exact(n, alpha))
        .collect())
}

/// Requested mean term of a rotor body.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum MeanTerm {
    /// `max(1, 2 * sum (n^2 - 1) * amplitude)`: convexity margin of at least
    /// half the mean term.
    Auto,
    Fixed(f64),
}

/// Recipe for a rotor in a regular polygon.
#[derive(Clone, Debug, PartialEq)]
pub struct RotorSpec {
    pub sides: u32,
    pub harmonics: Vec<Harmonic>,
    pub mean_term: MeanTerm,
}

impl RotorSpec {
    /// Interior angle `(N - 2) pi / N` of the regular `N`-gon, in lowest terms.
    pub fn interior_angle(&self) -> Result<RationalAngle, Error> {
        if self.sides < 3 {
            return Err(Error::TooFewSides(self.sides));
        }
        RationalAngle::new(self.sides - 2, self.sides)
    }

    /// Parse the JSON rotor spec:
    /// `{"sides": N, "harmonics": [{"n": int, "a": num, "b": num}], "a0": number | "auto"}`.
    pub fn from_json(json: &str) -> Result<Self, Error> {
        #[derive(Deserialize)]
        #[serde(deny_unknown_fields)]
        struct Raw {
            sides: i64,
            #[serde(default)]
            harmonics: Vec<RawHarmonic>,
            a0: serde_json::Value,
        }
        let raw: Raw = serde_json::from_str(json)?;
        if raw.sides < 3 {
            return Err(Error::Spec(format!(
                "sides must be >= 3, got {}",
                raw.sides
            )));
        }
        let mean_term = match &raw.a0 {
            serde_json::Value::String(s) if s == "auto" => MeanTerm::Auto,
            serde_json::Value::Number(x) => {
                let v = x.as_f64().ok_or_else(|| {
                    Error::Spec(format!("a0 is not representable as a float: {x}"))
                })?;
                MeanTerm::Fixed(v)
            }
            other => {
                return Err(Error::Spec(format!(
                    "a0 must be a number or \"auto\", got {other}"
                )))
            }
        };
        Ok(Self {
            sides: raw.sides as u32,
            harmonics: harmonics_from_raw(&raw.harmonics)?,
            mean_term,
        })
    }
}

/// Build the rotor body for a spec, verifying every harmonic against the
/// interior-angle chord system and picking the mean term when asked to.
pub fn build_rotor(spec: &RotorSpec) -> Result<FourierBody, Error> {
    let interior = spec.interior_angle()?;
    for h in &spec.harmonics {
        if h.order < 2 {
            return Err(Error::OrderTooSmall {
                min: 2,
                got: h.order,
            });
        }
        if !is_admissible_exact(h.order, interior) {
            let det = determinant_c(h.order, interior.radians())?;
            return Err(Error::InadmissibleHarmonic {
                order: h.order,
                alpha_numer: interior.numer(),
                alpha_denom: interior.denom(),
                e1: det.e1,
                e2: det.e2,
                det: det.det,
            });
        }
    }
    let mean_term = match spec.mean_term {
        MeanTerm::Fixed(v) => v,
        MeanTerm::Auto => {
            let deficit: f64 = spec
                .harmonics
                .iter()
                .map(|h| ((h.order as f64).powi(2) - 1.0) * h.amplitude())
                .sum();
            (2.0 * deficit).max(1.0)
        }
    };
    FourierBody::new(mean_term, spec.harmonics.clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn angle(s: u32, q: u32) -> RationalAngle {
        RationalAngle::new(s, q).unwrap()
    }

    #[test]
    fn determinant_c_reference_values() {
        // (4, pi/3) solves the system
        let d = determinant_c(4, PI / 3.0).unwrap();
        assert!(d.det <= 1e-14, "det {}", d.det);

        // (2, pi/2): e1 = 0, e2 = 2, det = 4
        let d = determinant_c(2, PI / 2.0).unwrap();
        assert!(d.e1.abs() < 1e-14);
        assert!((d.e2 - 2.0).abs() < 1e-14);
        assert!((d.det - 4.0).abs() < 1e-13);

        // (5, pi/2): odd case, cos 5a = cos a = 0
        let d = determinant_c(5, PI / 2.0).unwrap();
        assert!(d.det <= 1e-14, "det {}", d.det);
    }

    #[test]
    fn determinant_c_rejects_small_order_and_bad_alpha() {
        assert!(determinant_c(1, 1.0).is_err());
        assert!(determinant_c(4, 0.0).is_err());
        assert!(determinant_c(4, PI).is_err());
    }

    #[test]
    fn determinant_h_reference_values() {
        assert!((determinant_h(1, PI / 2.0).unwrap() - 1.0).abs() < 1e-14);
        assert!((determinant_h(3, PI / 3.0).unwrap() - 20.25).abs() < 1e-12);
        assert!(determinant_h(4, PI / 5.0).unwrap() > 0.0);
        assert!(determinant_h(0, 1.0).is_err());
    }

    #[test]
    fn determinant_h_positive_over_sweep() {
        for n in 1..=50 {
            for k in 0..1000 {
                let alpha = 0.01 + (PI - 0.02) * k as f64 / 999.0;
                let d = determinant_h(n, alpha).unwrap();
                assert!(d > 0.0, "determinant_h({n}, {alpha}) = {d}");
            }
        }
    }

    #[test]
    fn admissible_angles_match_reference_sets() {
        let got = admissible_angles(4).unwrap();
        assert_eq!(got, vec![angle(1, 5), angle(1, 3), angle(3, 5)]);

        let got = admissible_angles(7).unwrap();
        assert_eq!(
            got,
            vec![
                angle(1, 4),
                angle(1, 3),
                angle(1, 2),
                angle(2, 3),
                angle(3, 4)
            ]
        );

        let got = admissible_angles(5).unwrap();
        assert_eq!(got, vec![angle(1, 3), angle(1, 2), angle(2, 3)]);
    }

    #[test]
    fn admissible_angles_pass_the_determinant() {
        for n in 2..=20 {
            for a in admissible_angles(n).unwrap() {
                let det = determinant_c(n, a.radians()).unwrap().det;
                assert!(det <= ADMISSIBILITY_TOL, "n={n} alpha={a} det={det}");
            }
        }
    }

    #[test]
    fn no_admissible_angle_missed_on_dense_grid() {
        // Any grid angle the determinant accepts must sit next to a listed
        // one. The trig condition also vanishes at the excluded endpoints
        // (alpha = pi for even n, alpha = 0 for odd n), so grid points within
        // det <= tol of an endpoint zero count as explained, not missing.
        for n in [2u32, 4, 5, 7, 12] {
            let listed = admissible_angles(n).unwrap();
            for k in 1..100_000u32 {
                let alpha = PI * k as f64 / 100_000.0;
                let det = determinant_c(n, alpha).unwrap().det;
                if det <= ADMISSIBILITY_TOL {
                    let near = listed
                        .iter()
                        .map(|a| (a.radians() - alpha).abs())
                        .fold(f64::INFINITY, f64::min)
                        .min(alpha.min(PI - alpha));
                    assert!(near < 1e-3, "n={n}: stray admissible angle {alpha}");
                }
            }
        }
    }

    #[test]
    fn admissible_harmonics_reference_sets() {
        let h = admissible_harmonics(1, 3, 10).unwrap();
        assert!(h.contains(&4) && h.contains(&5));
        assert_eq!(h, vec![2, 4, 5, 7, 8, 10]);

        let h = admissible_harmonics(2, 3, 10).unwrap();
        assert!(h.contains(&7));

        let h = admissible_harmonics(1, 2, 10).unwrap();
        assert!(h.contains(&3) && h.contains(&5));
        assert!(!h.contains(&2) && !h.contains(&4));
    }

    #[test]
    fn admissible_harmonics_rejects_bad_fractions() {
        assert!(matches!(
            admissible_harmonics(2, 4, 10),
            Err(Error::RationalAngleNotCoprime { numer: 2, denom: 4 })
        ));
        assert!(admissible_harmonics(0, 3, 10).is_err());
        assert!(admissible_harmonics(3, 3, 10).is_err());
        assert!(admissible_harmonics(1, 3, 1).is_err());
    }

    #[test]
    fn exact_rule_matches_determinant_threshold() {
        for n in 2..=50u32 {
            for q in 2..=30u32 {
                for s in 1..q {
                    if gcd(s as u64, q as u64) != 1 {
                        continue;
                    }
                    let a = angle(s, q);
                    let exact = is_admissible_exact(n, a);
                    let det = determinant_c(n, a.radians()).unwrap().det;
                    let numeric = det <= ADMISSIBILITY_TOL;
                    assert_eq!(
                        exact, numeric,
                        "n={n} alpha={s}/{q}pi: exact={exact} det={det:.3e}"
                    );
                }
            }
        }
    }

    #[test]
    fn build_rotor_reproduces_reference_bodies() {
        // Triangle rotor with b4 = 1, a0 = 30
        let body = build_rotor(&RotorSpec {
            sides: 3,
            harmonics: vec![Harmonic::new(4, 0.0, 1.0)],
            mean_term: MeanTerm::Fixed(30.0),
        })
        .unwrap();
        assert_eq!(body.mean_term(), 30.0);
        assert_eq!(body.harmonics(), &[Harmonic::new(4, 0.0, 1.0)]);

        // Hexagon rotor with a7 = 1, a0 = 80
        assert!(build_rotor(&RotorSpec {
            sides: 6,
            harmonics: vec![Harmonic::new(7, 1.0, 0.0)],
            mean_term: MeanTerm::Fixed(80.0),
        })
        .is_ok());

        // Square rotor with a5 = 1, a0 = 60
        assert!(build_rotor(&RotorSpec {
            sides: 4,
            harmonics: vec![Harmonic::new(5, 1.0, 0.0)],
            mean_term: MeanTerm::Fixed(60.0),
        })
        .is_ok());
    }

    #[test]
    fn build_rotor_rejects_inadmissible_harmonics() {
        // n = 3 is not admissible for the square's interior angle pi/2.
        let err = build_rotor(&RotorSpec {
            sides: 4,
            harmonics: vec![Harmonic::new(4, 1.0, 0.0)],
            mean_term: MeanTerm::Auto,
        })
        .unwrap_err();
        match err {
            Error::InadmissibleHarmonic {
                order,
                alpha_numer,
                alpha_denom,
                det,
                ..
            } => {
                assert_eq!((order, alpha_numer, alpha_denom), (4, 1, 2));
                assert!(det > 1e-6);
            }
            other => panic!("expected InadmissibleHarmonic, got {other}"),
        }
    }

    #[test]
    fn build_rotor_auto_mean_term_guarantees_convexity() {
        let body = build_rotor(&RotorSpec {
            sides: 3,
            harmonics: vec![Harmonic::new(4, 0.0, 1.0), Harmonic::new(5, 1.0, 0.0)],
            mean_term: MeanTerm::Auto,
        })
        .unwrap();
        // 2 * (15 + 24) = 78
        assert_eq!(body.mean_term(), 78.0);
        assert!(body.convexity_margin(512) >= 0.5 * body.mean_term() - 1e-9);

        // A tiny fixed mean term is rejected as non-convex.
        assert!(matches!(
            build_rotor(&RotorSpec {
                sides: 3,
                harmonics: vec![Harmonic::new(4, 0.0, 1.0)],
                mean_term: MeanTerm::Fixed(10.0),
            }),
            Err(Error::NotConvex { .. })
        ));
    }

    #[test]
    fn rotor_spec_json_forms() {
        let spec =
            RotorSpec::from_json(r#"{"sides": 3, "harmonics": [{"n": 4, "b": 1.0}], "a0": 30}"#)
                .unwrap();
        assert_eq!(spec.mean_term, MeanTerm::Fixed(30.0));
        assert_eq!(spec.interior_angle().unwrap(), angle(1, 3));

        let spec =
            RotorSpec::from_json(r#"{"sides": 4, "harmonics": [{"n": 5, "a": 1}], "a0": "auto"}"#)
                .unwrap();
        assert_eq!(spec.mean_term, MeanTerm::Auto);
        assert_eq!(spec.interior_angle().unwrap(), angle(1, 2));

        assert!(RotorSpec::from_json(r#"{"sides": 2, "harmonics": [], "a0": 1}"#).is_err());
        assert!(RotorSpec::from_json(r#"{"sides": 4, "harmonics": [], "a0": "big"}"#).is_err());
    }
}
