//! The 2x2x2 path family whose bounding-box volume is minimized at the
//! golden ratio.

use super::radicals::radicals;
use crate::chain::{Chain, ChainKind};
use crate::error::{Error, Result};
use crate::geom::Point;
use crate::grid::GridSpec;
use crate::oracle::bisect_root;

fn grid222() -> GridSpec {
    GridSpec::new(vec![2, 2, 2]).expect("valid grid")
}

/// Apex height `(1 - 2x) / (2 (1 - x))` that puts `(0, 1, 1)` and `(1, 1, 1)`
/// on the two links through the apex.
pub fn pbar_y(x_s1: f64) -> Result<f64> {
    if x_s1.is_nan() || x_s1 <= 0.0 {
        return Err(Error::Domain(format!("x_s1 must be positive, got {x_s1}")));
    }
    if (x_s1 - 1.0).abs() <= crate::geom::default_eps() {
        return Err(Error::Domain(
            "x_s1 = 1 makes the apex height undefined".into(),
        ));
    }
    Ok((1.0 - 2.0 * x_s1) / (2.0 * (1.0 - x_s1)))
}

/// Bounding-box volume `(2x - 1) * y(x) * x` of [`pbar_path`] for `x > 1`.
pub fn pbar_volume(x_s1: f64) -> Result<f64> {
    Ok((2.0 * x_s1 - 1.0) * pbar_y(x_s1)? * x_s1)
}

/// The stationarity condition `x^3 - 2x^2 + x - 1/8` of [`pbar_volume`].
pub fn volume_cubic(x: f64) -> f64 {
    x * x * x - 2.0 * x * x + x - 0.125
}

/// `(0,1,0)-(0,0,0)-(x,0,x)-(1/2,y,1/2)-(1-x,0,x)-(1,0,0)-(1,1,0)`.
pub fn pbar_path(x_s1: f64) -> Result<Chain> {
    let y = pbar_y(x_s1)?;
    let x = x_s1;
    let vertices = vec![
        Point::from([0.0, 1.0, 0.0]),
        Point::from([0.0, 0.0, 0.0]),
        Point::from([x, 0.0, x]),
        Point::from([0.5, y, 0.5]),
        Point::from([1.0 - x, 0.0, x]),
        Point::from([1.0, 0.0, 0.0]),
        Point::from([1.0, 1.0, 0.0]),
    ];
    Chain::new(
        ChainKind::Path,
        format!("pbar_path({x})"),
        grid222(),
        vertices,
    )
}

/// The root of [`volume_cubic`] with `x > 1`, found by bisection on `[1, 2]`.
/// Equals `(3 + sqrt 5) / 4`.
pub fn minimize_aabb_volume() -> f64 {
    bisect_root(volume_cubic, 1.0, 2.0, 1e-15).expect("the cubic changes sign on [1, 2]")
}

/// Perturbation size for [`pbarbar_path`], `0 < epsilon < (phi - 1) / 2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EpsilonPathParams {
    epsilon: f64,
}

impl EpsilonPathParams {
    pub fn new(epsilon: f64) -> Result<Self> {
        let upper = (radicals().phi - 1.0) / 2.0;
        if epsilon > 0.0 && epsilon < upper {
            Ok(EpsilonPathParams { epsilon })
        } else {
            Err(Error::Domain(format!(
                "epsilon must lie in (0, {upper}), got {epsilon}"
            )))
        }
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }
}

/// Uncrossing perturbation of `pbar_path((1 + phi) / 2)`: the fifth vertex
/// moves by `epsilon` and the sixth slides below `(1, 0, 0)` so the link
/// through `(0, 0, 1)` clears the link it used to cross.
pub fn pbarbar_path(p: EpsilonPathParams) -> Result<Chain> {
    let phi = radicals().phi;
    let e = p.epsilon;
    let h = (1.0 + phi) / 2.0;
    let vertices = vec![
        Point::from([0.0, 1.0, 0.0]),
        Point::from([0.0, 0.0, 0.0]),
        Point::from([h, 0.0, h]),
        Point::from([0.5, 1.0 + phi, 0.5]),
        Point::from([(1.0 - phi) / 2.0 + e, 2.0 * phi * e, h - e]),
        Point::from([1.0, 4.0 * phi * e / (1.0 - phi + 2.0 * e), 0.0]),
        Point::from([1.0, 1.0, 0.0]),
    ];
    Chain::new(
        ChainKind::Path,
        format!("pbarbar_path({e})"),
        grid222(),
        vertices,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::tight_aabb;

    #[test]
    fn optimum_matches_closed_form() {
        let x = minimize_aabb_volume();
        assert!((x - (3.0 + 5f64.sqrt()) / 4.0).abs() < 1e-12);
        assert!(volume_cubic(x).abs() < 1e-12);
        assert!((pbar_y(x).unwrap() - (3.0 + 5f64.sqrt()) / 2.0).abs() < 1e-9);
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        assert!(((1.0 + phi) / 2.0 - (3.0 + 5f64.sqrt()) / 4.0).abs() < 1e-15);
    }

    #[test]
    fn optimum_is_a_stationary_point_of_the_volume() {
        // central finite difference, independent of the cubic
        let x = minimize_aabb_volume();
        let h = 1e-6;
        let slope = (pbar_volume(x + h).unwrap() - pbar_volume(x - h).unwrap()) / (2.0 * h);
        assert!(slope.abs() < 1e-6);
        assert!(pbar_volume(x).unwrap() < pbar_volume(x - 0.05).unwrap());
        assert!(pbar_volume(x).unwrap() < pbar_volume(x + 0.05).unwrap());
    }

    #[test]
    fn midpoint_constraint_holds() {
        for x in [0.25, 0.75, 1.2, 1.5, 3.0] {
            let y = pbar_y(x).unwrap();
            assert!(((1.0 - x) * y + x - 0.5).abs() < 1e-12);
        }
    }

    #[test]
    fn pbar_volume_matches_tight_box() {
        for x in [1.1, 1.309, 1.6] {
            let c = pbar_path(x).unwrap();
            let v = tight_aabb(c.vertices()).unwrap().volume();
            assert!((v - pbar_volume(x).unwrap()).abs() < 1e-12);
        }
    }

    #[test]
    fn domain_checks() {
        assert!(pbar_path(0.0).is_err());
        assert!(pbar_path(-1.0).is_err());
        assert!(pbar_path(1.0).is_err());
        assert!(EpsilonPathParams::new(0.0).is_err());
        assert!(EpsilonPathParams::new(0.31).is_err());
        assert!(EpsilonPathParams::new(1e-7).is_ok());
    }

    #[test]
    fn sixth_vertex_distance() {
        let phi = (1.0 + 5f64.sqrt()) / 2.0;
        for e in [1e-3, 1e-5, 1e-7] {
            let c = pbarbar_path(EpsilonPathParams::new(e).unwrap()).unwrap();
            let y = c.vertices()[5].coords()[1];
            let d = -4.0 * phi * e / (1.0 - phi + 2.0 * e);
            assert!(d >= 0.0);
            assert!((-y - d).abs() < 1e-15);
        }
    }
}
