//! Angles as exact rational multiples of pi.
//!
//! Admissibility of a harmonic order at an angle is a number-theoretic
//! property, so rational angles are kept as integer pairs and only converted
//! to radians at evaluation time.

use std::fmt;
use std::str::FromStr;

use crate::error::Error;

pub(crate) fn gcd(mut a: u64, mut b: u64) -> u64 {
    while b != 0 {
        let r = a % b;
        a = b;
        b = r;
    }
    a
}

/// An angle `numer/denom * pi` with `0 < numer < denom`, stored in lowest terms.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalAngle {
    numer: u32,
    denom: u32,
}

impl RationalAngle {
    /// Build from any integer pair, reducing to lowest terms.
    pub fn new(numer: u32, denom: u32) -> Result<Self, Error> {
        if numer == 0 || numer >= denom {
            return Err(Error::RationalAngleOutOfRange { numer, denom });
        }
        let g = gcd(numer as u64, denom as u64) as u32;
        Ok(Self {
            numer: numer / g,
            denom: denom / g,
        })
    }

    pub fn numer(self) -> u32 {
        self.numer
    }

    pub fn denom(self) -> u32 {
        self.denom
    }

    pub fn radians(self) -> f64 {
        self.numer as f64 * std::f64::consts::PI / self.denom as f64
    }

    /// Ordering key that avoids floating point: numer/denom as a fraction.
    pub(crate) fn fraction_cmp(self, other: Self) -> std::cmp::Ordering {
        let lhs = self.numer as u64 * other.denom as u64;
        let rhs = other.numer as u64 * self.denom as u64;
        lhs.cmp(&rhs)
    }
}

impl fmt::Display for RationalAngle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}pi", self.numer, self.denom)
    }
}

/// Angle as accepted on the command line: an exact rational of pi, a decimal
/// multiple of pi, or plain radians.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum AngleSpec {
    Rational(RationalAngle),
    Radians(f64),
}

impl AngleSpec {
    pub fn radians(self) -> f64 {
        match self {
            AngleSpec::Rational(r) => r.radians(),
            AngleSpec::Radians(x) => x,
        }
    }

    pub fn as_rational(self) -> Option<RationalAngle> {
        match self {
            AngleSpec::Rational(r) => Some(r),
            AngleSpec::Radians(_) => None,
        }
    }
}

impl FromStr for AngleSpec {
    type Err = Error;

    /// Accepts `S/Qpi` (exact rational), `Xpi` (decimal multiple of pi), or a
    /// decimal number in radians.
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if let Some(head) = s.strip_suffix("pi") {
            if let Some((numer, denom)) = head.split_once('/') {
                let numer: u32 = numer
                    .trim()
                    .parse()
                    .map_err(|_| Error::AngleParse(s.to_string()))?;
                let denom: u32 = denom
                    .trim()
                    .parse()
                    .map_err(|_| Error::AngleParse(s.to_string()))?;
                return Ok(AngleSpec::Rational(RationalAngle::new(numer, denom)?));
            }
            let factor: f64 = head
                .trim()
                .parse()
                .map_err(|_| Error::AngleParse(s.to_string()))?;
            return Ok(AngleSpec::Radians(factor * std::f64::consts::PI));
        }
        let radians: f64 = s.parse().map_err(|_| Error::AngleParse(s.to_string()))?;
        Ok(AngleSpec::Radians(radians))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_angle_reduces() {
        let a = RationalAngle::new(2, 6).unwrap();
        assert_eq!((a.numer(), a.denom()), (1, 3));
        assert!((a.radians() - std::f64::consts::PI / 3.0).abs() < 1e-15);
        assert_eq!(a.to_string(), "1/3pi");
    }

    #[test]
    fn rational_angle_rejects_out_of_range() {
        assert!(RationalAngle::new(0, 3).is_err());
        assert!(RationalAngle::new(3, 3).is_err());
        assert!(RationalAngle::new(4, 3).is_err());
    }

    #[test]
    fn parse_angle_forms() {
        assert_eq!(
            "1/3pi".parse::<AngleSpec>().unwrap(),
            AngleSpec::Rational(RationalAngle::new(1, 3).unwrap())
        );
        let half = "0.5pi".parse::<AngleSpec>().unwrap();
        assert!((half.radians() - std::f64::consts::FRAC_PI_2).abs() < 1e-15);
        let raw = "1.25".parse::<AngleSpec>().unwrap();
        assert_eq!(raw, AngleSpec::Radians(1.25));
        assert!("pie".parse::<AngleSpec>().is_err());
        assert!("1/0pi".parse::<AngleSpec>().is_err());
    }

    #[test]
    fn fraction_ordering_matches_value() {
        let a = RationalAngle::new(1, 5).unwrap();
        let b = RationalAngle::new(1, 3).unwrap();
        let c = RationalAngle::new(3, 5).unwrap();
        assert_eq!(a.fraction_cmp(b), std::cmp::Ordering::Less);
        assert_eq!(c.fraction_cmp(b), std::cmp::Ordering::Greater);
    }
}
