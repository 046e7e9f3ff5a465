//! Grid specifications `n_1 x ... x n_k` and the boxes and corner sets derived
//! from them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{Aabb, Point};

/// The dimension tuple `(n_1, ..., n_k)` with `1 <= n_1 <= ... <= n_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct GridSpec {
    dims: Vec<usize>,
}

impl GridSpec {
    /// Rejects empty tuples, zero entries and unsorted tuples.
    pub fn new(dims: Vec<usize>) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::InvalidGrid("at least one axis is required".into()));
        }
        if dims.contains(&0) {
            return Err(Error::InvalidGrid(format!(
                "every axis needs a point: {dims:?}"
            )));
        }
        if dims.windows(2).any(|w| w[0] > w[1]) {
            return Err(Error::UnsortedDims(dims));
        }
        Ok(GridSpec { dims })
    }

    /// Sorts `dims` ascending. Returns the grid and the permutation `perm`
    /// with `sorted[i] = dims[perm[i]]`.
    pub fn from_unsorted(dims: &[usize]) -> Result<(Self, Vec<usize>)> {
        let mut perm: Vec<usize> = (0..dims.len()).collect();
        perm.sort_by_key(|&i| dims[i]);
        let sorted = perm.iter().map(|&i| dims[i]).collect();
        Ok((GridSpec::new(sorted)?, perm))
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// `k`, the number of axes.
    pub fn k(&self) -> usize {
        self.dims.len()
    }

    /// `n_k`, the longest axis.
    pub fn longest(&self) -> usize {
        *self.dims.last().expect("non-empty")
    }

    /// `prod n_i`, or `None` on overflow.
    pub fn point_count(&self) -> Option<usize> {
        self.dims
            .iter()
            .try_fold(1usize, |acc, &n| acc.checked_mul(n))
    }

    /// True iff every coordinate of `p` is within `eps` of an in-range integer.
    pub fn contains(&self, p: &Point, eps: f64) -> bool {
        p.dim() == self.k()
            && p.coords().iter().zip(&self.dims).all(|(&c, &n)| {
                let r = c.round();
                (c - r).abs() <= eps && r >= 0.0 && r <= (n - 1) as f64
            })
    }
}

impl TryFrom<Vec<usize>> for GridSpec {
    type Error = Error;

    fn try_from(dims: Vec<usize>) -> Result<Self> {
        GridSpec::new(dims)
    }
}

impl From<GridSpec> for Vec<usize> {
    fn from(g: GridSpec) -> Self {
        g.dims
    }
}

impl fmt::Display for GridSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.dims.iter().map(|n| n.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// All grid points in lexicographic order.
pub fn enumerate_points(g: &GridSpec) -> Vec<Point> {
    let mut out = Vec::with_capacity(g.point_count().unwrap_or(0));
    let mut idx = vec![0usize; g.k()];
    loop {
        out.push(Point::new(idx.iter().map(|&i| i as f64).collect()).expect("finite"));
        // odometer with the last axis fastest
        let mut axis = g.k();
        loop {
            if axis == 0 {
                return out;
            }
            axis -= 1;
            idx[axis] += 1;
            if idx[axis] < g.dims[axis] {
                break;
            }
            idx[axis] = 0;
        }
    }
}

/// The minimum axis-aligned bounding box `prod [0, n_i - 1]`.
pub fn maabb(g: &GridSpec) -> Aabb {
    let iv: Vec<(f64, f64)> = g.dims.iter().map(|&n| (0.0, (n - 1) as f64)).collect();
    Aabb::from_intervals(&iv).expect("valid intervals")
}

/// The regular axis-aligned bounding box `prod [0, n_i]`.
pub fn raabb(g: &GridSpec) -> Aabb {
    let iv: Vec<(f64, f64)> = g.dims.iter().map(|&n| (0.0, n as f64)).collect();
    Aabb::from_intervals(&iv).expect("valid intervals")
}

/// The extreme grid corners, deduplicated along axes with `n_i = 1`.
#[derive(Clone, Debug, PartialEq)]
pub struct CornerSet {
    points: Vec<Point>,
}

impl CornerSet {
    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &Point, eps: f64) -> bool {
        self.points
            .iter()
            .any(|c| c.dim() == p.dim() && c.max_abs_diff(p) <= eps)
    }
}

pub fn corner_set(g: &GridSpec) -> CornerSet {
    let mut points = vec![Vec::with_capacity(g.k())];
    for &n in &g.dims {
        let extremes: &[f64] = if n == 1 {
            &[0.0]
        } else {
            &[0.0, (n - 1) as f64]
        };
        points = points
            .into_iter()
            .flat_map(|prefix| {
                extremes.iter().map(move |&x| {
                    let mut v = prefix.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    CornerSet {
        points: points
            .into_iter()
            .map(|c| Point::new(c).expect("finite"))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(d: &[usize]) -> GridSpec {
        GridSpec::new(d.to_vec()).unwrap()
    }

    #[test]
    fn rejects_bad_dims() {
        assert!(matches!(
            GridSpec::new(vec![3, 2]),
            Err(Error::UnsortedDims(_))
        ));
        assert!(GridSpec::new(vec![]).is_err());
        assert!(GridSpec::new(vec![0, 2]).is_err());
    }

    #[test]
    fn from_unsorted_reports_permutation() {
        let (grid, perm) = GridSpec::from_unsorted(&[5, 2, 3]).unwrap();
        assert_eq!(grid.dims(), &[2, 3, 5]);
        assert_eq!(perm, vec![1, 2, 0]);
    }

    #[test]
    fn enumerate_examples() {
        let pts = enumerate_points(&g(&[2, 2]));
        let coords: Vec<Vec<f64>> = pts.into_iter().map(Point::into_coords).collect();
        assert_eq!(
            coords,
            vec![
                vec![0.0, 0.0],
                vec![0.0, 1.0],
                vec![1.0, 0.0],
                vec![1.0, 1.0]
            ]
        );
        assert_eq!(enumerate_points(&g(&[3, 3, 3])).len(), 27);
        let line = enumerate_points(&g(&[1, 5]));
        assert_eq!(line.len(), 5);
        assert!(line.iter().all(|p| p.coords()[0] == 0.0));
    }

    #[test]
    fn boxes() {
        let grid = g(&[3, 3]);
        assert_eq!(
            maabb(&grid),
            Aabb::from_intervals(&[(0.0, 2.0), (0.0, 2.0)]).unwrap()
        );
        assert_eq!(
            raabb(&grid),
            Aabb::from_intervals(&[(0.0, 3.0), (0.0, 3.0)]).unwrap()
        );
        assert_eq!(maabb(&g(&[2, 2, 2])).volume(), 1.0);
        assert!(maabb(&grid).is_inside(&raabb(&grid), 0.0).unwrap());
    }

    #[test]
    fn corners() {
        let c = corner_set(&g(&[3, 3]));
        let coords: Vec<Vec<f64>> = c.points().iter().map(|p| p.coords().to_vec()).collect();
        assert_eq!(
            coords,
            vec![
                vec![0.0, 0.0],
                vec![0.0, 2.0],
                vec![2.0, 0.0],
                vec![2.0, 2.0]
            ]
        );
        assert_eq!(corner_set(&g(&[3, 3, 3])).len(), 8);
        let collapsed = corner_set(&g(&[1, 3]));
        assert_eq!(collapsed.len(), 2);
        assert!(collapsed.contains(&Point::from([0.0, 2.0]), 1e-9));
    }

    #[test]
    fn grid_membership() {
        let grid = g(&[2, 3]);
        assert!(grid.contains(&Point::from([1.0, 2.0]), 1e-9));
        assert!(!grid.contains(&Point::from([1.0, 3.0]), 1e-9));
        assert!(!grid.contains(&Point::from([0.5, 1.0]), 1e-9));
    }

    #[test]
    fn serde_validates() {
        let parsed: std::result::Result<GridSpec, _> = serde_json::from_str("[3,2]");
        assert!(parsed.is_err());
        let ok: GridSpec = serde_json::from_str("[2,3]").unwrap();
        assert_eq!(ok.dims(), &[2, 3]);
    }
}
