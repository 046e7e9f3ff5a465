//! The MΛI layer/bridge generator.
//!
//! For a grid with `n_k >= 3` the path walks every "column" (the segment
//! `x_k in [0, n_k - 1]` above a fixed `(x_1, ..., x_{k-1})`) exactly once.
//! Columns are visited in boustrophedon order over `x_1, ..., x_{k-1}` with
//! `x_1` fastest, and their direction alternates. Two consecutive columns are
//! joined through one Steiner point halfway along the axis that changes:
//!
//! * top to top: a "V" dipping to height `L - sqrt(L^2 - 1/4)`,
//! * bottom to bottom: a "Λ" rising to height `sqrt(L^2 - 1/4)`,
//!
//! with `L = n_k - 1`, so both legs have length exactly `L`. Within a layer the
//! changing axis is `x_1`; between layers it is the axis that advances the
//! layer index, which makes the inter-layer bridges alternate between the two
//! shapes depending on where the previous layer ended.

use crate::chain::{Chain, ChainKind};
use crate::error::{Error, Result};
use crate::geom::Point;
use crate::grid::GridSpec;

fn check_domain(g: &GridSpec) -> Result<()> {
    if g.k() < 2 {
        return Err(Error::Domain(format!(
            "the layer generator needs k >= 2, got k = {}",
            g.k()
        )));
    }
    if g.dims()[0] < 2 {
        return Err(Error::Domain(format!(
            "every axis needs at least two points, got {g}"
        )));
    }
    Ok(())
}

/// Builds the uncrossing covering path for `g`.
///
/// Requires `k >= 2` and every `n_i >= 2`. With `n_k = 2` (so the grid is the
/// unit hypercube) the result is the reflected Gray-code path of `2^k - 1`
/// unit edges; otherwise it is the layer/bridge path with
/// `3 * prod_{i<k} n_i - 2` edges of length `n_k - 1`.
pub fn generate_mlai(g: &GridSpec) -> Result<Chain> {
    check_domain(g)?;
    let label = format!("mlai({g})");
    let vertices = if g.longest() == 2 {
        hypercube_vertices(g.k())?
    } else {
        column_vertices(g)
    };
    Chain::new(ChainKind::Path, label, g.clone(), vertices)
}

/// The single-segment covering path of a one-dimensional grid.
pub fn generate_line(g: &GridSpec) -> Result<Chain> {
    if g.k() != 1 || g.dims()[0] < 2 {
        return Err(Error::Domain(format!(
            "a line path needs k = 1 and n_1 >= 2, got {g}"
        )));
    }
    let end = (g.dims()[0] - 1) as f64;
    Chain::new(
        ChainKind::Path,
        format!("line({g})"),
        g.clone(),
        vec![Point::from([0.0]), Point::from([end])],
    )
}

/// `3 * prod_{i<k} n_i - 2`, the edge count of [`generate_mlai`] when `n_k >= 3`.
pub fn mlai_edge_count(g: &GridSpec) -> Result<u128> {
    check_domain(g)?;
    if g.longest() < 3 {
        return Err(Error::Domain(format!(
            "the edge-count formula needs n_k >= 3, got {g}"
        )));
    }
    let columns = column_count(g)?;
    columns
        .checked_mul(3)
        .and_then(|x| x.checked_sub(2))
        .ok_or(Error::Overflow("mlai_edge_count"))
}

pub(crate) fn column_count(g: &GridSpec) -> Result<u128> {
    let k = g.k();
    g.dims()[..k - 1]
        .iter()
        .try_fold(1u128, |acc, &n| acc.checked_mul(n as u128))
        .ok_or(Error::Overflow("column count"))
}

/// Boustrophedon order over `dims` with axis 0 fastest. Consecutive entries
/// differ by one unit in exactly one coordinate; the walk ends on a corner.
pub fn boustrophedon(dims: &[usize]) -> Vec<Vec<usize>> {
    let total: usize = dims.iter().product();
    let mut idx = vec![0usize; dims.len()];
    let mut forward = vec![true; dims.len()];
    let mut out = Vec::with_capacity(total);
    out.push(idx.clone());
    for _ in 1..total {
        for axis in 0..dims.len() {
            let can_move = if forward[axis] {
                idx[axis] + 1 < dims[axis]
            } else {
                idx[axis] > 0
            };
            if can_move {
                if forward[axis] {
                    idx[axis] += 1;
                } else {
                    idx[axis] -= 1;
                }
                break;
            }
            forward[axis] = !forward[axis];
        }
        out.push(idx.clone());
    }
    out
}

fn column_vertices(g: &GridSpec) -> Vec<Point> {
    let k = g.k();
    let top = (g.longest() - 1) as f64;
    let rise = (top * top - 0.25).sqrt();
    let order = boustrophedon(&g.dims()[..k - 1]);

    let at = |base: &[usize], height: f64| -> Point {
        let mut c: Vec<f64> = base.iter().map(|&i| i as f64).collect();
        c.push(height);
        Point::new(c).expect("finite")
    };

    let mut vertices = Vec::with_capacity(3 * order.len() - 1);
    let mut height = 0.0;
    for (n, base) in order.iter().enumerate() {
        if n > 0 {
            let prev = &order[n - 1];
            let axis = (0..k - 1)
                .find(|&a| prev[a] != base[a])
                .expect("consecutive columns differ");
            let mut steiner: Vec<f64> = prev.iter().map(|&i| i as f64).collect();
            steiner[axis] = (prev[axis] + base[axis]) as f64 / 2.0;
            // V between two tops, Λ between two bottoms
            steiner.push(if height == top { top - rise } else { rise });
            vertices.push(Point::new(steiner).expect("finite"));
        }
        let other = if height == 0.0 { top } else { 0.0 };
        vertices.push(at(base, height));
        vertices.push(at(base, other));
        height = other;
    }
    vertices
}

/// Reflected binary Gray code on `{0,1}^k`, last axis flipping first.
fn hypercube_vertices(k: usize) -> Result<Vec<Point>> {
    if k >= usize::BITS as usize {
        return Err(Error::Overflow("hypercube vertex count"));
    }
    Ok((0..1usize << k)
        .map(|i| {
            let code = i ^ (i >> 1);
            let coords = (0..k)
                .map(|axis| ((code >> (k - 1 - axis)) & 1) as f64)
                .collect();
            Point::new(coords).expect("finite")
        })
        .collect())
}
