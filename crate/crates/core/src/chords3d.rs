//! Desk-scale 3-D chord probe: tangent chords of an outer body along lines
//! touching an inner body, and alpha-chords between boundary points whose
//! tangent planes meet at a fixed angle.
//!
//! Bodies are implicit surfaces `F(x) = 0` with closed-form gradients; chord
//! endpoints come from bracketed bisection along the line (robustness over
//! speed at these sample counts). Sampling is sequential per seed stream, so
//! identical seeds reproduce identical sample lists bit for bit.

use std::f64::consts::{PI, TAU};

use nalgebra::{Rotation3, Vector3};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Deserialize;

use crate::error::Error;
use crate::sampling::{fmt_sig17, SpreadStats};

type Vec3 = Vector3<f64>;

#[derive(Clone, Copy, Debug, PartialEq)]
enum BodyKind {
    Ball {
        radius: f64,
    },
    Ellipsoid {
        semi_axes: Vec3,
    },
    /// Radial surface `r(u) = radius * (1 + eps * P_m(u_z))` with `P_m` the
    /// degree-m Legendre polynomial of the z-component of the direction.
    PerturbedSphere {
        radius: f64,
        epsilon: f64,
        order: u32,
    },
}

/// A strictly convex implicit body: ball, ellipsoid, or radially perturbed
/// sphere, posed anywhere in space by a rotation and a centre.
#[derive(Clone, Debug, PartialEq)]
pub struct ImplicitBody3D {
    kind: BodyKind,
    center: Vec3,
    rotation: Rotation3<f64>,
}

impl ImplicitBody3D {
    pub fn ball(center: [f64; 3], radius: f64) -> Result<Self, Error> {
        if !radius.is_finite() || radius <= 0.0 {
            return Err(Error::InvalidRadius(radius));
        }
        Ok(Self {
            kind: BodyKind::Ball { radius },
            center: Vec3::from(center),
            rotation: Rotation3::identity(),
        })
    }

    pub fn ellipsoid(center: [f64; 3], semi_axes: [f64; 3]) -> Result<Self, Error> {
        if semi_axes.iter().any(|&s| !s.is_finite() || s <= 0.0) {
            return Err(Error::InvalidSemiAxes(semi_axes));
        }
        Ok(Self {
            kind: BodyKind::Ellipsoid {
                semi_axes: Vec3::from(semi_axes),
            },
            center: Vec3::from(center),
            rotation: Rotation3::identity(),
        })
    }

    /// Curvature-safe bound: `eps * m * (m + 1) < 0.1` keeps the radial
    /// perturbation strictly convex.
    pub fn perturbed_sphere(
        center: [f64; 3],
        radius: f64,
        epsilon: f64,
        order: u32,
    ) -> Result<Self, Error> {
        if !radius.is_finite() || radius <= 0.0 {
            return Err(Error::InvalidRadius(radius));
        }
        let curvature = epsilon.abs() * (order as f64) * (order as f64 + 1.0);
        if !curvature.is_finite() || curvature >= 0.1 {
            return Err(Error::CurvatureBound(curvature));
        }
        Ok(Self {
            kind: BodyKind::PerturbedSphere {
                radius,
                epsilon,
                order,
            },
            center: Vec3::from(center),
            rotation: Rotation3::identity(),
        })
    }

    /// The same body under the rigid motion `x -> R x + t`.
    pub fn rigid_transformed(&self, rotation: &Rotation3<f64>, translation: [f64; 3]) -> Self {
        Self {
            kind: self.kind,
            center: rotation * self.center + Vec3::from(translation),
            rotation: rotation * self.rotation,
        }
    }

    fn to_body_frame(&self, x: &Vec3) -> Vec3 {
        self.rotation.inverse() * (x - self.center)
    }

    /// Signed implicit value, negative inside. Ball and perturbed sphere use
    /// the distance-like form `|y| - r(y/|y|)`.
    pub fn implicit_value(&self, x: &Vec3) -> f64 {
        let y = self.to_body_frame(x);
        match self.kind {
            BodyKind::Ball { radius } => y.norm() - radius,
            BodyKind::Ellipsoid { semi_axes } => y.component_div(&semi_axes).norm_squared() - 1.0,
            BodyKind::PerturbedSphere {
                radius,
                epsilon,
                order,
            } => {
                let r = y.norm();
                let (p, _) = legendre(order, y.z / r);
                r - radius * (1.0 + epsilon * p)
            }
        }
    }

    /// Gradient of the implicit function (outward at the boundary).
    pub fn gradient(&self, x: &Vec3) -> Vec3 {
        let y = self.to_body_frame(x);
        let g = match self.kind {
            BodyKind::Ball { .. } => y / y.norm(),
            BodyKind::Ellipsoid { semi_axes } => {
                2.0 * y.component_div(&semi_axes).component_div(&semi_axes)
            }
            BodyKind::PerturbedSphere {
                radius,
                epsilon,
                order,
            } => {
                let r = y.norm();
                let v = y / r;
                let (_, dp) = legendre(order, v.z);
                let e_z = Vec3::z();
                v - (radius * epsilon * dp / r) * (e_z - v.z * v)
            }
        };
        self.rotation * g
    }

    /// Boundary point in the given world direction from the centre.
    pub fn radial_point(&self, direction: &Vec3) -> Vec3 {
        let v = (self.rotation.inverse() * direction).normalize();
        let rho = match self.kind {
            BodyKind::Ball { radius } => radius,
            BodyKind::Ellipsoid { semi_axes } => 1.0 / v.component_div(&semi_axes).norm(),
            BodyKind::PerturbedSphere {
                radius,
                epsilon,
                order,
            } => {
                let (p, _) = legendre(order, v.z);
                radius * (1.0 + epsilon * p)
            }
        };
        self.center + self.rotation * (rho * v)
    }

    /// Upper bound on the diameter, used to scale line marching.
    pub fn diameter_bound(&self) -> f64 {
        match self.kind {
            BodyKind::Ball { radius } => 2.0 * radius,
            BodyKind::Ellipsoid { semi_axes } => 2.0 * semi_axes.max(),
            BodyKind::PerturbedSphere {
                radius, epsilon, ..
            } => 2.0 * radius * (1.0 + epsilon.abs()),
        }
    }

    /// Boundary point whose outward unit normal is `normal`: closed form for
    /// balls and ellipsoids via the support mapping, damped Newton on the
    /// Gauss map for perturbed spheres.
    pub fn support_point(&self, normal: &Vec3) -> Result<Vec3, Error> {
        let u = (self.rotation.inverse() * normal).normalize();
        let body_point = match self.kind {
            BodyKind::Ball { radius } => radius * u,
            BodyKind::Ellipsoid { semi_axes } => {
                let du = semi_axes.component_mul(&u);
                semi_axes.component_mul(&du) / du.norm()
            }
            BodyKind::PerturbedSphere { .. } => self.support_point_newton(&u)?,
        };
        Ok(self.center + self.rotation * body_point)
    }

    /// Solve `N(v) = u` on the unit sphere for the radial parameter `v`,
    /// where `N` is the unit outward normal of the body-frame surface.
    fn support_point_newton(&self, u: &Vec3) -> Result<Vec3, Error> {
        let surface =
            |v: &Vec3| -> Vec3 { self.center + self.rotation * self.radial_body_point(v) };
        let unit_normal = |v: &Vec3| -> Vec3 {
            let x = surface(v);
            let g = self.gradient(&x);
            self.rotation.inverse() * g.normalize()
        };
        let mut v = *u;
        let mut residual = (unit_normal(&v) - u).norm();
        for _ in 0..60 {
            if residual <= 1e-12 {
                break;
            }
            let (e1, e2) = tangent_basis(&v);
            // 2x2 Jacobian of the tangential residual by central differences
            let h = 1e-6;
            let res_at = |dx: f64, dy: f64| -> (f64, f64) {
                let w = (v + dx * e1 + dy * e2).normalize();
                let r = unit_normal(&w) - u;
                (r.dot(&e1), r.dot(&e2))
            };
            let (r1, r2) = res_at(0.0, 0.0);
            let (a1, a2) = res_at(h, 0.0);
            let (b1, b2) = res_at(-h, 0.0);
            let (c1, c2) = res_at(0.0, h);
            let (d1, d2) = res_at(0.0, -h);
            let j11 = (a1 - b1) / (2.0 * h);
            let j21 = (a2 - b2) / (2.0 * h);
            let j12 = (c1 - d1) / (2.0 * h);
            let j22 = (c2 - d2) / (2.0 * h);
            let det = j11 * j22 - j12 * j21;
            if det.abs() < 1e-14 {
                break;
            }
            let step1 = -(j22 * r1 - j12 * r2) / det;
            let step2 = -(-j21 * r1 + j11 * r2) / det;
            // damping: halve until the residual decreases
            let mut scale = 1.0;
            let mut accepted = false;
            for _ in 0..20 {
                let w = (v + scale * (step1 * e1 + step2 * e2)).normalize();
                let r = (unit_normal(&w) - u).norm();
                if r < residual {
                    v = w;
                    residual = r;
                    accepted = true;
                    break;
                }
                scale *= 0.5;
            }
            if !accepted {
                break;
            }
        }
        if residual > 1e-9 {
            return Err(Error::NewtonStalled { index: 0, residual });
        }
        Ok(self.radial_body_point(&v))
    }

    fn radial_body_point(&self, v: &Vec3) -> Vec3 {
        match self.kind {
            BodyKind::Ball { radius } => radius * v,
            BodyKind::Ellipsoid { semi_axes } => v / v.component_div(&semi_axes).norm(),
            BodyKind::PerturbedSphere {
                radius,
                epsilon,
                order,
            } => {
                let (p, _) = legendre(order, v.z);
                radius * (1.0 + epsilon * p) * v
            }
        }
    }
}

/// Legendre polynomial `P_m(x)` and derivative by forward recurrence.
fn legendre(order: u32, x: f64) -> (f64, f64) {
    let mut p_prev = 1.0;
    let mut d_prev = 0.0;
    if order == 0 {
        return (p_prev, d_prev);
    }
    let mut p = x;
    let mut d = 1.0;
    for k in 1..order {
        let kf = k as f64;
        let p_next = ((2.0 * kf + 1.0) * x * p - kf * p_prev) / (kf + 1.0);
        let d_next = d_prev + (2.0 * kf + 1.0) * p;
        p_prev = p;
        d_prev = d;
        p = p_next;
        d = d_next;
    }
    (p, d)
}

/// Deterministic orthonormal basis of the plane orthogonal to `n`.
fn tangent_basis(n: &Vec3) -> (Vec3, Vec3) {
    let reference = if n.x.abs() <= n.y.abs() && n.x.abs() <= n.z.abs() {
        Vec3::x()
    } else if n.y.abs() <= n.z.abs() {
        Vec3::y()
    } else {
        Vec3::z()
    };
    let e1 = n.cross(&reference).normalize();
    let e2 = n.cross(&e1);
    (e1, e2)
}

/// One sampled chord: an anchor point (the tangency point for tangent
/// chords, the first endpoint for alpha-chords), the chord direction, and
/// the endpoints on the outer boundary.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ChordSample3D {
    pub tangency: Vec3,
    pub direction: Vec3,
    pub endpoints: [Vec3; 2],
    pub length: f64,
}

/// Both intersections of the line `origin + s * direction` with the body
/// boundary. `origin` must be strictly inside.
pub fn line_chord(
    body: &ImplicitBody3D,
    origin: &Vec3,
    direction: &Vec3,
    sample_index: usize,
) -> Result<(Vec3, Vec3), Error> {
    if body.implicit_value(origin) >= 0.0 {
        return Err(Error::RootFinding {
            index: sample_index,
            detail: "line origin is not strictly inside the body".into(),
        });
    }
    let dir = direction.normalize();
    let forward = boundary_crossing(body, origin, &dir, sample_index)?;
    let backward = boundary_crossing(body, origin, &(-dir), sample_index)?;
    Ok((backward, forward))
}

/// March outward in steps of a tenth of the diameter until the implicit sign
/// flips, then bisect the bracket down to round-off.
fn boundary_crossing(
    body: &ImplicitBody3D,
    origin: &Vec3,
    dir: &Vec3,
    sample_index: usize,
) -> Result<Vec3, Error> {
    let step = 0.1 * body.diameter_bound();
    let mut lo = 0.0;
    let mut hi = f64::NAN;
    for k in 1..=40 {
        let s = step * k as f64;
        if body.implicit_value(&(origin + s * dir)) > 0.0 {
            hi = s;
            break;
        }
        lo = s;
    }
    if hi.is_nan() {
        return Err(Error::RootFinding {
            index: sample_index,
            detail: format!(
                "no sign change within {} diameters along the chord direction",
                40.0 * 0.1
            ),
        });
    }
    let scale = body.diameter_bound();
    while hi - lo > 1e-13 * scale {
        let mid = 0.5 * (lo + hi);
        if body.implicit_value(&(origin + mid * dir)) > 0.0 {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    let x = origin + 0.5 * (lo + hi) * dir;
    let residual = body.implicit_value(&x).abs();
    if residual > 1e-9 {
        return Err(Error::RootFinding {
            index: sample_index,
            detail: format!("endpoint residual {residual:.3e} exceeds 1e-9"),
        });
    }
    Ok(x)
}

/// Uniform unit vector by rejection from the cube, from the seeded stream.
fn random_unit_vector(rng: &mut ChaCha8Rng) -> Vec3 {
    loop {
        let v = Vec3::new(
            rng.gen_range(-1.0..=1.0),
            rng.gen_range(-1.0..=1.0),
            rng.gen_range(-1.0..=1.0),
        );
        let n2 = v.norm_squared();
        if n2 > 1e-4 && n2 <= 1.0 {
            return v / n2.sqrt();
        }
    }
}

/// Verify strict containment by sweeping a deterministic direction lattice
/// over the inner boundary.
fn check_containment(outer: &ImplicitBody3D, inner: &ImplicitBody3D) -> Result<(), Error> {
    let n = 512;
    let golden = PI * (3.0 - 5f64.sqrt());
    for i in 0..n {
        let z = 1.0 - 2.0 * (i as f64 + 0.5) / n as f64;
        let r = (1.0 - z * z).sqrt();
        let phi = golden * i as f64;
        let dir = Vec3::new(r * phi.cos(), r * phi.sin(), z);
        let point = inner.radial_point(&dir);
        let value = outer.implicit_value(&point);
        if value >= 0.0 {
            return Err(Error::ContainmentViolation {
                x: point.x,
                y: point.y,
                z: point.z,
                value,
            });
        }
    }
    Ok(())
}

/// Chords of `outer` along random lines tangent to `inner`: a uniform random
/// point on the inner boundary and a uniform random direction in its tangent
/// plane, intersected with the outer boundary.
pub fn tangent_chord_lengths(
    outer: &ImplicitBody3D,
    inner: &ImplicitBody3D,
    count: usize,
    seed: u64,
) -> Result<Vec<ChordSample3D>, Error> {
    if count == 0 {
        return Err(Error::EmptyCount);
    }
    check_containment(outer, inner)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut samples = Vec::with_capacity(count);
    for index in 0..count {
        let dir = random_unit_vector(&mut rng);
        let z = inner.radial_point(&dir);
        let normal = inner.gradient(&z).normalize();
        let (e1, e2) = tangent_basis(&normal);
        let phi = rng.gen_range(0.0..TAU);
        let chord_dir = phi.cos() * e1 + phi.sin() * e2;
        let (a, b) = line_chord(outer, &z, &chord_dir, index)?;
        samples.push(ChordSample3D {
            tangency: z,
            direction: chord_dir,
            endpoints: [a, b],
            length: (b - a).norm(),
        });
    }
    Ok(samples)
}

/// Alpha-chords: pairs of boundary points whose outward normals meet at
/// `pi - alpha` (so their tangent planes meet at `alpha`), with the first
/// normal uniform on the sphere and the second uniform on the cone.
pub fn alpha_chords(
    body: &ImplicitBody3D,
    alpha: f64,
    count: usize,
    seed: u64,
) -> Result<Vec<ChordSample3D>, Error> {
    if !(alpha > 0.0 && alpha < PI) {
        return Err(Error::AlphaOutOfRange(alpha));
    }
    if count == 0 {
        return Err(Error::EmptyCount);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gap = PI - alpha;
    let (sin_gap, cos_gap) = gap.sin_cos();
    let mut samples = Vec::with_capacity(count);
    for index in 0..count {
        let u1 = random_unit_vector(&mut rng);
        let (e1, e2) = tangent_basis(&u1);
        let psi = rng.gen_range(0.0..TAU);
        let u2 = cos_gap * u1 + sin_gap * (psi.cos() * e1 + psi.sin() * e2);
        let z1 = body.support_point(&u1).map_err(|e| at_sample(e, index))?;
        let z2 = body.support_point(&u2).map_err(|e| at_sample(e, index))?;
        let chord = z2 - z1;
        let length = chord.norm();
        samples.push(ChordSample3D {
            tangency: z1,
            direction: chord / length,
            endpoints: [z1, z2],
            length,
        });
    }
    Ok(samples)
}

fn at_sample(err: Error, index: usize) -> Error {
    match err {
        Error::NewtonStalled { residual, .. } => Error::NewtonStalled { index, residual },
        other => other,
    }
}

/// Order statistics over the sampled chord lengths.
pub fn chord_spread(samples: &[ChordSample3D]) -> Result<SpreadStats, Error> {
    let lengths: Vec<f64> = samples.iter().map(|s| s.length).collect();
    SpreadStats::from_values(&lengths)
}

/// CSV export: `px,py,pz,dx,dy,dz,ax,ay,az,bx,by,bz,length`.
pub fn samples_to_csv(samples: &[ChordSample3D]) -> String {
    let mut out = String::from("px,py,pz,dx,dy,dz,ax,ay,az,bx,by,bz,length\n");
    for s in samples {
        let fields = [
            s.tangency.x,
            s.tangency.y,
            s.tangency.z,
            s.direction.x,
            s.direction.y,
            s.direction.z,
            s.endpoints[0].x,
            s.endpoints[0].y,
            s.endpoints[0].z,
            s.endpoints[1].x,
            s.endpoints[1].y,
            s.endpoints[1].z,
            s.length,
        ];
        let row: Vec<String> = fields.iter().map(|&f| fmt_sig17(f)).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

// ------------------------------------------------------------------------
// JSON spec for 3-D bodies
// ------------------------------------------------------------------------

#[derive(Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
enum Body3Spec {
    Ball {
        center: [f64; 3],
        radius: f64,
    },
    Ellipsoid {
        center: [f64; 3],
        semi_axes: [f64; 3],
    },
    PerturbedSphere {
        center: [f64; 3],
        radius: f64,
        epsilon: f64,
        order: u32,
    },
}

impl ImplicitBody3D {
    /// Parse a JSON body spec, e.g.
    /// `{"kind": "ball", "center": [0,0,0], "radius": 2.0}`.
    pub fn from_spec_json(json: &str) -> Result<Self, Error> {
        let spec: Body3Spec = serde_json::from_str(json)?;
        match spec {
            Body3Spec::Ball { center, radius } => Self::ball(center, radius),
            Body3Spec::Ellipsoid { center, semi_axes } => Self::ellipsoid(center, semi_axes),
            Body3Spec::PerturbedSphere {
                center,
                radius,
                epsilon,
                order,
            } => Self::perturbed_sphere(center, radius, epsilon, order),
        }
    }
}
