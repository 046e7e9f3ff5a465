//! Named fixed constructions on small grids.
//!
//! * [`m_path`]: self-intersecting covering paths of `3^k - 1` edges of length
//!   `sqrt 5` on the 3x3 and 3x3x3 grids.
//! * [`check_path`]: uncrossing paths with edges of length 2 that leave the
//!   minimum box by `2 - sqrt 3` along two axes.
//! * [`circuit_f222`]: two six-edge covering circuits of the 2x2x2 grid.
//! * [`pbar_path`], [`pbarbar_path`], [`minimize_aabb_volume`]: the
//!   golden-ratio family minimizing the bounding-box volume on 2x2x2.
//! * [`conclusion_path_222`]: six links of length `1 + sqrt 2` on 2x2x2.

mod golden;
pub mod radicals;
mod s5;

pub use golden::{
    minimize_aabb_volume, pbar_path, pbar_volume, pbar_y, pbarbar_path, volume_cubic,
    EpsilonPathParams,
};
pub use s5::{
    collision_geometry, collision_radius, s5_discriminant, s5_interval, s5_solve,
    CollisionGeometry, S5Branch, S5Solution, RESIDUAL_TOL,
};

use serde::{Deserialize, Serialize};

use crate::chain::{Chain, ChainKind};
use crate::error::{Error, Result};
use crate::geom::Point;
use crate::grid::GridSpec;
use radicals::radicals;

/// Default x of the bridge Steiner point in the 3x3x3 check path.
pub const DEFAULT_S5_X: f64 = 0.7;

fn cube(n: usize, k: usize) -> GridSpec {
    GridSpec::new(vec![n; k]).expect("valid grid")
}

fn points<const N: usize>(rows: &[[f64; N]]) -> Vec<Point> {
    rows.iter().map(|&r| Point::from(r)).collect()
}

pub fn m_path(k: usize) -> Result<Chain> {
    let r = radicals();
    let vertices = match k {
        2 => {
            let t = r.m33_tail;
            points(&[
                [1.0, 2.0],
                [2.0, 0.0],
                [0.0, 1.0],
                [2.0, 2.0],
                [1.0, 0.0],
                [0.0, 2.0],
                [2.0, 1.0],
                [0.0, 0.0],
                [t, t],
            ])
        }
        3 => {
            let t = r.m33_tail;
            let (xy, z) = (r.m333_tail_xy, r.m333_tail_z);
            points(&[
                [2.0, 0.0, 0.0],
                [0.0, 1.0, 0.0],
                [2.0, 2.0, 0.0],
                [1.0, 0.0, 0.0],
                [0.0, 2.0, 0.0],
                [1.0, 2.0, 2.0],
                [0.0, 0.0, 2.0],
                [2.0, 1.0, 2.0],
                [0.0, 2.0, 2.0],
                [1.0, 0.0, 2.0],
                [2.0, 2.0, 2.0],
                [0.0, 1.0, 2.0],
                [2.0, 0.0, 2.0],
                [2.0, 2.0, 1.0],
                [0.0, 1.0, 1.0],
                [2.0, 0.0, 1.0],
                [1.0, 2.0, 1.0],
                [0.0, 0.0, 1.0],
                [2.0, 1.0, 1.0],
                [0.0, 2.0, 1.0],
                [1.0, 0.0, 1.0],
                [1.0, 2.0, 0.0],
                [1.0, 1.0, 2.0],
                [2.0, 1.0, 0.0],
                [0.0, 0.0, 0.0],
                [t, t, 0.0],
                [xy, xy, z],
            ])
        }
        _ => {
            return Err(Error::Domain(format!(
                "m_path exists for k = 2 or 3, got {k}"
            )))
        }
    };
    Chain::new(
        ChainKind::Path,
        format!("m_path({k})"),
        cube(3, k),
        vertices,
    )
}

/// Uncrossing 3x3 / 3x3x3 paths with every edge of length 2. For `k = 3`
/// the bridge Steiner point is `s5_solve(s5_x)`; `s5_x` is ignored for `k = 2`.
pub fn check_path(k: usize, s5_x: f64) -> Result<Chain> {
    let r = radicals();
    let (lo, hi) = (r.check_low, r.check_high);
    let vertices = match k {
        2 => points(&[
            [0.0, 2.0],
            [0.0, 0.0],
            [2.0, 0.0],
            [2.0, 2.0],
            [1.0, lo],
            [1.0, hi],
        ]),
        3 => {
            let s = s5_solve(s5_x)?;
            points(&[
                [0.0, 2.0, 0.0],
                [0.0, 0.0, 0.0],
                [2.0, 0.0, 0.0],
                [2.0, 2.0, 0.0],
                [1.0, lo, 0.0],
                [1.0, hi, 0.0],
                [1.0, hi, 2.0],
                [1.0, lo, 2.0],
                [2.0, 2.0, 2.0],
                [2.0, 0.0, 2.0],
                [0.0, 0.0, 2.0],
                [0.0, 2.0, 2.0],
                [s.x, s.y, s.z],
                [hi, 1.0, 1.0],
                [lo, 1.0, 1.0],
                [2.0, 0.0, 1.0],
                [0.0, 0.0, 1.0],
                [0.0, 2.0, 1.0],
                [2.0, 2.0, 1.0],
            ])
        }
        _ => {
            return Err(Error::Domain(format!(
                "check_path exists for k = 2 or 3, got {k}"
            )))
        }
    };
    Chain::new(
        ChainKind::Path,
        format!("check_path({k})"),
        cube(3, k),
        vertices,
    )
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CircuitVariant {
    /// Edges of length `sqrt 2 (4 + sqrt 13) / 3`.
    F,
    /// Edges of length `4 - sqrt 2`.
    FPrime,
}

/// Six-edge covering circuits of the 2x2x2 grid starting at a Steiner point.
///
/// Both are reproduced vertex for vertex. The `FPrime` coordinates leave the
/// four grid points with `z = 1` about 0.0073 away from the chain, which the
/// verifier reports.
pub fn circuit_f222(variant: CircuitVariant) -> Result<Chain> {
    let r = radicals();
    let (label, vertices) = match variant {
        CircuitVariant::F => {
            let (lo, hi) = (r.f_lo, r.f_hi);
            (
                "circuit_f222(F)",
                points(&[
                    [lo, lo, 0.0],
                    [hi, hi, 0.0],
                    [r.f_apex_lo, 0.5, r.f_apex_z],
                    [hi, lo, 0.0],
                    [lo, hi, 0.0],
                    [r.f_apex_hi, 0.5, r.f_apex_z],
                    [lo, lo, 0.0],
                ]),
            )
        }
        CircuitVariant::FPrime => {
            let (lo, hi, z) = (r.fp_lo, r.fp_hi, r.fp_apex_z);
            (
                "circuit_f222(F')",
                points(&[
                    [lo, lo, 0.0],
                    [hi, hi, 0.0],
                    [0.5, 0.5, z],
                    [hi, lo, 0.0],
                    [lo, hi, 0.0],
                    [0.5, 0.5, z],
                    [lo, lo, 0.0],
                ]),
            )
        }
    };
    Chain::new(ChainKind::Cycle, label, cube(2, 3), vertices)
}

/// Self-intersecting 2x2x2 path with six links of length `1 + sqrt 2`.
pub fn conclusion_path_222() -> Result<Chain> {
    let r = radicals();
    let (a, c) = (r.inv_sqrt2, r.one_plus_inv_sqrt2);
    let vertices = points(&[
        [-a, 0.0, c],
        [1.0, 0.0, 0.0],
        [-a, c, 0.0],
        [0.5, 0.5, c],
        [c, c, 0.0],
        [0.0, 0.0, 0.0],
        [c, 0.0, c],
    ]);
    Chain::new(ChainKind::Path, "conclusion_path_222", cube(2, 3), vertices)
}
