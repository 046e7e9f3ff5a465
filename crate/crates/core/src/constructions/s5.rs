//! The movable bridge Steiner point of the 3x3x3 check path.
//!
//! The point lies on the circle where the spheres of radius 2 around
//! `A = (0, 2, 2)` and `B = (4 - sqrt 3, 1, 1)` meet. For a chosen `x` the two
//! remaining coordinates are the roots of a quadratic; `y` takes the larger.

use serde::Serialize;

use super::radicals::radicals;
use crate::error::{Error, Result};
use crate::geom::Point;

/// Slack allowed on the closed-interval and range checks.
const BOUNDARY_TOL: f64 = 1e-12;
/// Maximum accepted sphere residual.
pub const RESIDUAL_TOL: f64 = 1e-9;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum S5Branch {
    /// `y` from `+sqrt`, `z` from `-sqrt`.
    Principal,
    /// The principal solution had `y = 2`; `y` and `z` are swapped.
    BoundarySwap,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct S5Solution {
    pub x: f64,
    pub y: f64,
    pub z: f64,
    pub branch: S5Branch,
}

impl S5Solution {
    pub fn point(&self) -> Point {
        Point::from([self.x, self.y, self.z])
    }
}

/// Closed x-interval on which an admissible Steiner point exists,
/// approximately `[0.346647, 0.918696]`.
pub fn s5_interval() -> (f64, f64) {
    let r = radicals();
    (r.s5_x_lo, r.s5_x_hi)
}

/// Radicand of the quadratic's root term:
/// `(32 sqrt 3 - 84) x^2 + (432 - 212 sqrt 3) x + 336 sqrt 3 - 601`.
pub fn s5_discriminant(x: f64) -> f64 {
    let s3 = radicals().sqrt3;
    (32.0 * s3 - 84.0) * x * x + (432.0 - 212.0 * s3) * x + 336.0 * s3 - 601.0
}

fn sphere_gaps(x: f64, y: f64, z: f64) -> (f64, f64) {
    let b = radicals().check_high;
    let first = x * x + (y - 2.0).powi(2) + (z - 2.0).powi(2) - 4.0;
    let second = (x - b).powi(2) + (y - 1.0).powi(2) + (z - 1.0).powi(2) - 4.0;
    (first, second)
}

pub fn s5_solve(x: f64) -> Result<S5Solution> {
    let r = radicals();
    let (lo, hi) = s5_interval();
    if !x.is_finite() || x < lo - BOUNDARY_TOL || x > hi + BOUNDARY_TOL {
        return Err(Error::Domain(format!(
            "Steiner x = {x} outside the admissible interval [{lo}, {hi}]"
        )));
    }
    let disc = s5_discriminant(x);
    if disc < -BOUNDARY_TOL {
        return Err(Error::Domain(format!(
            "negative discriminant {disc} at x = {x}"
        )));
    }
    let root = disc.max(0.0).sqrt();
    let base = (8.0 - 2.0 * r.sqrt3) * x + 8.0 * r.sqrt3 - 13.0;
    let y = (root + base) / 4.0;
    let z = (base - root) / 4.0;

    let solution = if (y - 2.0).abs() <= crate::geom::default_eps() {
        S5Solution {
            x,
            y: z,
            z: y,
            branch: S5Branch::BoundarySwap,
        }
    } else {
        S5Solution {
            x,
            y,
            z,
            branch: S5Branch::Principal,
        }
    };
    check_solution(&solution)?;
    Ok(solution)
}

fn check_solution(s: &S5Solution) -> Result<()> {
    let r = radicals();
    let (g1, g2) = sphere_gaps(s.x, s.y, s.z);
    if g1.abs() > RESIDUAL_TOL || g2.abs() > RESIDUAL_TOL {
        return Err(Error::Domain(format!(
            "sphere residuals {g1:e}, {g2:e} too large"
        )));
    }
    if s.y < r.s5_y_lo - BOUNDARY_TOL || s.y > r.check_high + BOUNDARY_TOL {
        return Err(Error::Domain(format!(
            "y = {} outside the admissible range",
            s.y
        )));
    }
    if s.z > 2.0 + BOUNDARY_TOL {
        return Err(Error::Domain(format!("z = {} exceeds 2", s.z)));
    }
    if s.branch == S5Branch::Principal && s.y < s.z {
        return Err(Error::Domain("principal branch needs y >= z".into()));
    }
    Ok(())
}

/// Geometry behind the no-collision argument for the moving Steiner point.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CollisionGeometry {
    /// Radius at which the two spheres first reach the middle layer's edges.
    pub radius: f64,
    /// The point where that happens.
    pub point: [f64; 3],
    /// Center of the circle of admissible Steiner points (midpoint of A, B).
    pub circle_center: [f64; 3],
    /// Radius of that circle.
    pub circle_radius: f64,
    /// y at which links 13 and 15 would collide; lies below 1.
    pub forbidden_y: f64,
}

pub fn collision_geometry() -> CollisionGeometry {
    let r = radicals();
    CollisionGeometry {
        radius: r.collision_r,
        point: [r.collision_x, r.collision_yz, r.collision_yz],
        circle_center: [r.check_high / 2.0, 1.5, 1.5],
        circle_radius: r.circle_radius,
        forbidden_y: r.forbidden_y,
    }
}

/// `sqrt(94725 - 21288 sqrt 3) / 122`, about 1.9715304811.
pub fn collision_radius() -> f64 {
    radicals().collision_r
}
