//! Support-function calculus for planar convex bodies: isoptic curves, chord
//! functions, rotors in regular polygons, a verification harness for the
//! constancy/inequality results behind them, and a 3-D tangent-chord probe.

pub mod analysis;
pub mod angle;
pub mod body;
pub mod chords3d;
pub mod error;
pub mod isoptic;
pub mod rotor;
pub mod sampling;
pub mod svg;

pub use angle::{AngleSpec, RationalAngle};
pub use body::{FourierBody, Harmonic, PlanePoint, SymmetryPredicates, WidthProfile};
pub use error::Error;
pub use isoptic::{ChordKind, ChordProfile, ChordSet, Isoptic, IsopticCurve, PolygonFrame};
pub use sampling::{SpreadStats, DEFAULT_GRID};
