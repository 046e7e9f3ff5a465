//! Dimension-generic geometric primitives.
//!
//! Everything here works for points of any dimension `k >= 1`. Coordinates are
//! plain `f64`; all incidence and intersection predicates take an absolute
//! tolerance `eps` in grid units. [`default_eps`] returns the process-wide
//! default, which starts at [`EPS_GEO`].

use std::cmp::Ordering;
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering as AtomicOrdering};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Default absolute tolerance, in grid units.
pub const EPS_GEO: f64 = 1e-9;

static DEFAULT_EPS_BITS: AtomicU64 = AtomicU64::new(EPS_GEO.to_bits());

/// The process-wide default tolerance.
pub fn default_eps() -> f64 {
    f64::from_bits(DEFAULT_EPS_BITS.load(AtomicOrdering::Relaxed))
}

/// Overrides the process-wide default tolerance.
pub fn set_default_eps(eps: f64) -> Result<()> {
    check_eps(eps)?;
    DEFAULT_EPS_BITS.store(eps.to_bits(), AtomicOrdering::Relaxed);
    Ok(())
}

pub(crate) fn check_eps(eps: f64) -> Result<()> {
    if eps.is_finite() && eps > 0.0 {
        Ok(())
    } else {
        Err(Error::InvalidTolerance(eps))
    }
}

/// A point in `R^k`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point(Vec<f64>);

impl Point {
    pub fn new(coords: Vec<f64>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::ZeroDimension);
        }
        if let Some(&bad) = coords.iter().find(|c| !c.is_finite()) {
            return Err(Error::NonFinite(bad));
        }
        Ok(Point(coords))
    }

    /// The origin of `R^dim`.
    pub fn origin(dim: usize) -> Self {
        assert!(dim > 0, "a point needs at least one coordinate");
        Point(vec![0.0; dim])
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[f64] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<f64> {
        self.0
    }

    pub fn scaled(&self, s: f64) -> Point {
        Point(self.0.iter().map(|c| c * s).collect())
    }

    /// Largest absolute coordinate difference.
    pub fn max_abs_diff(&self, other: &Point) -> f64 {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    fn check_dim(&self, other: &Point) -> Result<()> {
        if self.dim() == other.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch {
                expected: self.dim(),
                found: other.dim(),
            })
        }
    }
}

impl<const N: usize> From<[f64; N]> for Point {
    /// # Panics
    ///
    /// Panics if `N == 0` or a coordinate is not finite.
    fn from(coords: [f64; N]) -> Self {
        Point::new(coords.to_vec()).expect("point literal must be finite and non-empty")
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

fn lerp(a: &[f64], b: &[f64], t: f64) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + t * (y - x)).collect()
}

/// Euclidean distance.
pub fn distance(a: &Point, b: &Point) -> Result<f64> {
    a.check_dim(b)?;
    Ok(norm(&sub(&a.0, &b.0)))
}

/// A closed segment with distinct endpoints.
#[derive(Clone, Debug, PartialEq)]
pub struct Segment {
    a: Point,
    b: Point,
}

impl Segment {
    /// Builds a segment, rejecting endpoints closer than the default tolerance.
    pub fn new(a: Point, b: Point) -> Result<Self> {
        Self::with_eps(a, b, default_eps())
    }

    pub fn with_eps(a: Point, b: Point, eps: f64) -> Result<Self> {
        if distance(&a, &b)? <= eps {
            return Err(Error::DegenerateSegment { eps });
        }
        Ok(Segment { a, b })
    }

    pub fn a(&self) -> &Point {
        &self.a
    }

    pub fn b(&self) -> &Point {
        &self.b
    }

    pub fn dim(&self) -> usize {
        self.a.dim()
    }

    pub fn length(&self) -> f64 {
        norm(&sub(&self.b.0, &self.a.0))
    }

    /// The point at parameter `t` in `[0, 1]`.
    pub fn at(&self, t: f64) -> Point {
        Point(lerp(&self.a.0, &self.b.0, t))
    }

    pub fn reversed(&self) -> Segment {
        Segment {
            a: self.b.clone(),
            b: self.a.clone(),
        }
    }

    fn check_dim(&self, other: &Segment) -> Result<()> {
        self.a.check_dim(&other.a)
    }
}

/// Closest-point parameter of `p` on `s`, clamped to `[0, 1]`.
fn project_param(p: &[f64], s: &Segment) -> f64 {
    let d = sub(&s.b.0, &s.a.0);
    (dot(&sub(p, &s.a.0), &d) / dot(&d, &d)).clamp(0.0, 1.0)
}

/// Distance from `p` to the closed segment `s`.
pub fn point_segment_distance(p: &Point, s: &Segment) -> Result<f64> {
    p.check_dim(&s.a)?;
    let t = project_param(&p.0, s);
    Ok(norm(&sub(&p.0, &lerp(&s.a.0, &s.b.0, t))))
}

pub fn point_on_segment(p: &Point, s: &Segment, eps: f64) -> Result<bool> {
    Ok(point_segment_distance(p, s)? <= eps)
}

/// Closest points between two closed segments.
#[derive(Clone, Debug, PartialEq)]
pub struct ClosestPair {
    /// Parameter on the first segment.
    pub s: f64,
    /// Parameter on the second segment.
    pub t: f64,
    pub on_first: Point,
    pub on_second: Point,
    pub distance: f64,
}

/// Solves the two-parameter closest-point problem through its 2x2 normal
/// equations, with explicit branches for parallel segments and clamped
/// parameters.
pub fn closest_points(s1: &Segment, s2: &Segment) -> Result<ClosestPair> {
    s1.check_dim(s2)?;
    let d1 = sub(&s1.b.0, &s1.a.0);
    let d2 = sub(&s2.b.0, &s2.a.0);
    let r = sub(&s1.a.0, &s2.a.0);
    let a = dot(&d1, &d1);
    let e = dot(&d2, &d2);
    let f = dot(&d2, &r);
    let c = dot(&d1, &r);
    let b = dot(&d1, &d2);
    let denom = a * e - b * b;

    let mut s = if denom > f64::EPSILON * a * e {
        ((b * f - c * e) / denom).clamp(0.0, 1.0)
    } else {
        // parallel: any s works, the clamping below picks a valid pair
        0.0
    };
    let mut t = (b * s + f) / e;
    if t < 0.0 {
        t = 0.0;
        s = (-c / a).clamp(0.0, 1.0);
    } else if t > 1.0 {
        t = 1.0;
        s = ((b - c) / a).clamp(0.0, 1.0);
    }

    let on_first = Point(lerp(&s1.a.0, &s1.b.0, s));
    let on_second = Point(lerp(&s2.a.0, &s2.b.0, t));
    let distance = norm(&sub(&on_first.0, &on_second.0));
    Ok(ClosestPair {
        s,
        t,
        on_first,
        on_second,
        distance,
    })
}

/// Classification of the intersection of two closed segments.
#[derive(Clone, Debug, PartialEq)]
pub enum IntersectionResult {
    Disjoint,
    /// The segments meet in a single point (within tolerance).
    TouchAt(Point),
    /// The segments are collinear and share a piece longer than the tolerance.
    Overlap,
}

impl IntersectionResult {
    pub fn is_disjoint(&self) -> bool {
        matches!(self, IntersectionResult::Disjoint)
    }
}

fn lex_cmp(a: &[f64], b: &[f64]) -> Ordering {
    a.iter()
        .zip(b)
        .map(|(x, y)| x.total_cmp(y))
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

/// Canonical ordering so that the classification is exactly symmetric.
fn canonical<'a>(s1: &'a Segment, s2: &'a Segment) -> (&'a Segment, &'a Segment) {
    let key = |s: &Segment| s.length();
    let ord = key(s1)
        .total_cmp(&key(s2))
        .then_with(|| lex_cmp(&s1.a.0, &s2.a.0))
        .then_with(|| lex_cmp(&s1.b.0, &s2.b.0));
    if ord == Ordering::Less {
        (s2, s1)
    } else {
        (s1, s2)
    }
}

pub fn segments_intersect(s1: &Segment, s2: &Segment, eps: f64) -> Result<IntersectionResult> {
    s1.check_dim(s2)?;
    let (long, short) = canonical(s1, s2);
    let pair = closest_points(long, short)?;
    if pair.distance > eps {
        return Ok(IntersectionResult::Disjoint);
    }

    // Nearly parallel within tolerance over the whole length: look for a
    // shared stretch along the longer segment.
    let d1 = sub(&long.b.0, &long.a.0);
    let d2 = sub(&short.b.0, &short.a.0);
    let (l1, l2) = (norm(&d1), norm(&d2));
    let cos = dot(&d1, &d2) / (l1 * l2);
    let sin = (1.0 - cos * cos).max(0.0).sqrt();
    if sin * l1 <= eps {
        let u: Vec<f64> = d1.iter().map(|x| x / l1).collect();
        let tc = dot(&sub(&short.a.0, &long.a.0), &u);
        let td = dot(&sub(&short.b.0, &long.a.0), &u);
        let lo = tc.min(td).max(0.0);
        let hi = tc.max(td).min(l1);
        if hi - lo > eps {
            return Ok(IntersectionResult::Overlap);
        }
    }

    let mid = Point(lerp(&pair.on_first.0, &pair.on_second.0, 0.5));
    Ok(IntersectionResult::TouchAt(mid))
}

/// True iff every altitude of the triangle `a, b, c` is at most `eps`.
pub fn collinear(a: &Point, b: &Point, c: &Point, eps: f64) -> Result<bool> {
    a.check_dim(b)?;
    a.check_dim(c)?;
    let ab = sub(&b.0, &a.0);
    let ac = sub(&c.0, &a.0);
    let bc = sub(&c.0, &b.0);
    let (lab, lac, lbc) = (norm(&ab), norm(&ac), norm(&bc));
    let longest = lab.max(lac).max(lbc);
    if longest == 0.0 {
        return Ok(true);
    }
    // twice the area, from the component of ac orthogonal to ab
    let twice_area = if lab > 0.0 {
        let t = dot(&ac, &ab) / (lab * lab);
        let ortho: Vec<f64> = ac.iter().zip(&ab).map(|(x, y)| x - t * y).collect();
        norm(&ortho) * lab
    } else {
        0.0
    };
    // the largest altitude falls on the shortest side
    let shortest = lab.min(lac).min(lbc);
    if shortest == 0.0 {
        return Ok(true);
    }
    Ok(twice_area / shortest <= eps)
}

/// An axis-aligned box `[lo_1, hi_1] x ... x [lo_k, hi_k]`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Aabb {
    lo: Point,
    hi: Point,
}

impl Aabb {
    pub fn new(lo: Point, hi: Point) -> Result<Self> {
        lo.check_dim(&hi)?;
        for (axis, (&l, &h)) in lo.0.iter().zip(&hi.0).enumerate() {
            if l > h {
                return Err(Error::InvalidBox { axis, lo: l, hi: h });
            }
        }
        Ok(Aabb { lo, hi })
    }

    /// Builds a box from per-axis `(lo, hi)` intervals.
    pub fn from_intervals(intervals: &[(f64, f64)]) -> Result<Self> {
        let lo = Point::new(intervals.iter().map(|i| i.0).collect())?;
        let hi = Point::new(intervals.iter().map(|i| i.1).collect())?;
        Aabb::new(lo, hi)
    }

    pub fn lo(&self) -> &Point {
        &self.lo
    }

    pub fn hi(&self) -> &Point {
        &self.hi
    }

    pub fn dim(&self) -> usize {
        self.lo.dim()
    }

    pub fn extents(&self) -> Vec<f64> {
        sub(&self.hi.0, &self.lo.0)
    }

    pub fn volume(&self) -> f64 {
        self.extents().iter().product()
    }

    pub fn contains_point(&self, p: &Point, eps: f64) -> Result<bool> {
        self.lo.check_dim(p)?;
        Ok(p.0
            .iter()
            .zip(self.lo.0.iter().zip(&self.hi.0))
            .all(|(&x, (&l, &h))| x >= l - eps && x <= h + eps))
    }

    /// True iff `self` lies inside `other` expanded by `eps`.
    pub fn is_inside(&self, other: &Aabb, eps: f64) -> Result<bool> {
        Ok(other.contains_point(&self.lo, eps)? && other.contains_point(&self.hi, eps)?)
    }
}

pub fn box_volume(b: &Aabb) -> f64 {
    b.volume()
}

/// Per-axis min/max of `points`.
pub fn tight_aabb(points: &[Point]) -> Result<Aabb> {
    let first = points.first().ok_or(Error::EmptyInput)?;
    let mut lo = first.0.clone();
    let mut hi = first.0.clone();
    for p in &points[1..] {
        first.check_dim(p)?;
        for (i, &c) in p.0.iter().enumerate() {
            lo[i] = lo[i].min(c);
            hi[i] = hi[i].max(c);
        }
    }
    Ok(Aabb {
        lo: Point(lo),
        hi: Point(hi),
    })
}

/// Both endpoints inside `b` expanded by `eps`; convexity covers the rest.
pub fn contained_in(s: &Segment, b: &Aabb, eps: f64) -> Result<bool> {
    Ok(b.contains_point(&s.a, eps)? && b.contains_point(&s.b, eps)?)
}

#[cfg(test)]
mod tests {
    use super::*;

    const EPS: f64 = 1e-9;

    fn seg(a: &[f64], b: &[f64]) -> Segment {
        Segment::new(
            Point::new(a.to_vec()).unwrap(),
            Point::new(b.to_vec()).unwrap(),
        )
        .unwrap()
    }

    fn p(c: &[f64]) -> Point {
        Point::new(c.to_vec()).unwrap()
    }

    #[test]
    fn distance_examples() {
        assert_eq!(distance(&p(&[0.0, 0.0]), &p(&[0.0, 2.0])).unwrap(), 2.0);
        let s1 = p(&[0.5, 2.0 - 15f64.sqrt() / 2.0]);
        assert!((distance(&p(&[0.0, 2.0]), &s1).unwrap() - 2.0).abs() < EPS);
        let d = distance(&p(&[1.0, 2.0]), &p(&[2.0, 0.0])).unwrap();
        assert!((d - 5f64.sqrt()).abs() < EPS);
    }

    #[test]
    fn distance_dimension_mismatch() {
        assert!(matches!(
            distance(&p(&[0.0]), &p(&[0.0, 1.0])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn point_rejects_non_finite_and_empty() {
        assert!(Point::new(vec![f64::NAN]).is_err());
        assert!(Point::new(vec![]).is_err());
    }

    #[test]
    fn degenerate_segment_rejected() {
        assert!(matches!(
            Segment::new(p(&[1.0, 1.0]), p(&[1.0, 1.0])),
            Err(Error::DegenerateSegment { .. })
        ));
    }

    #[test]
    fn point_on_segment_examples() {
        let col = seg(&[0.0, 0.0], &[0.0, 2.0]);
        assert!(point_on_segment(&p(&[0.0, 1.0]), &col, EPS).unwrap());
        assert!(!point_on_segment(&p(&[1.0, 1.0]), &col, EPS).unwrap());
    }

    #[test]
    fn point_on_segment_matches_dense_scan() {
        let x = (3.0 + 5f64.sqrt()) / 4.0;
        let s = seg(&[x, 0.0, x], &[0.0, 0.0, 0.0]);
        let q = p(&[1.0, 0.0, 0.0]);
        // oracle: dense parametric scan
        let n = 100_000;
        let scanned = (0..=n)
            .map(|i| distance(&q, &s.at(i as f64 / n as f64)).unwrap())
            .fold(f64::INFINITY, f64::min);
        let exact = point_segment_distance(&q, &s).unwrap();
        assert!(scanned > 0.5);
        assert!((scanned - exact).abs() < 1e-4);
        assert!(!point_on_segment(&q, &s, EPS).unwrap());
    }

    #[test]
    fn intersect_examples() {
        let r = segments_intersect(
            &seg(&[0.0, 0.0], &[2.0, 2.0]),
            &seg(&[0.0, 2.0], &[2.0, 0.0]),
            EPS,
        )
        .unwrap();
        match r {
            IntersectionResult::TouchAt(q) => assert!(q.max_abs_diff(&p(&[1.0, 1.0])) < EPS),
            other => panic!("expected touch, got {other:?}"),
        }
        let r = segments_intersect(
            &seg(&[0.0, 0.0], &[0.0, 2.0]),
            &seg(&[1.0, 0.0], &[1.0, 2.0]),
            EPS,
        )
        .unwrap();
        assert_eq!(r, IntersectionResult::Disjoint);
    }

    #[test]
    fn intersect_shared_steiner_vertex() {
        let steiner = [0.5, 2.0 - 15f64.sqrt() / 2.0];
        let e2 = seg(&[0.0, 2.0], &steiner);
        let e3 = seg(&steiner, &[1.0, 2.0]);
        match segments_intersect(&e2, &e3, EPS).unwrap() {
            IntersectionResult::TouchAt(q) => assert!(q.max_abs_diff(&p(&steiner)) < EPS),
            other => panic!("expected touch, got {other:?}"),
        }
    }

    #[test]
    fn intersect_collinear_cases() {
        let a = seg(&[0.0, 0.0, 0.0], &[2.0, 0.0, 0.0]);
        let b = seg(&[1.0, 0.0, 0.0], &[3.0, 0.0, 0.0]);
        assert_eq!(
            segments_intersect(&a, &b, EPS).unwrap(),
            IntersectionResult::Overlap
        );
        let c = seg(&[2.0, 0.0, 0.0], &[3.0, 0.0, 0.0]);
        assert!(matches!(
            segments_intersect(&a, &c, EPS).unwrap(),
            IntersectionResult::TouchAt(_)
        ));
        let d = seg(&[2.5, 0.0, 0.0], &[3.0, 0.0, 0.0]);
        assert_eq!(
            segments_intersect(&a, &d, EPS).unwrap(),
            IntersectionResult::Disjoint
        );
    }

    #[test]
    fn skew_segments_in_3d_do_not_touch() {
        // projections onto z = 0 would cross
        let a = seg(&[0.0, 0.0, 0.0], &[2.0, 2.0, 0.0]);
        let b = seg(&[0.0, 2.0, 1.0], &[2.0, 0.0, 1.0]);
        assert_eq!(
            segments_intersect(&a, &b, EPS).unwrap(),
            IntersectionResult::Disjoint
        );
    }

    #[test]
    fn collinear_examples() {
        assert!(collinear(&p(&[0.0, 0.0]), &p(&[0.0, 1.0]), &p(&[0.0, 2.0]), EPS).unwrap());
        let s1 = p(&[0.5, 2.0 - 15f64.sqrt() / 2.0]);
        assert!(!collinear(&p(&[0.0, 0.0]), &p(&[0.0, 2.0]), &s1, EPS).unwrap());
        assert!(collinear(
            &p(&[0.0, 0.0]),
            &p(&[1.0, 1.0]),
            &p(&[2.0, 2.0 + 1e-12]),
            EPS
        )
        .unwrap());
    }

    #[test]
    fn tight_aabb_examples() {
        let b = tight_aabb(&[p(&[1.0, 2.0, 3.0])]).unwrap();
        assert_eq!(b.lo(), b.hi());
        assert_eq!(tight_aabb(&[]), Err(Error::EmptyInput));
    }

    #[test]
    fn volume_examples() {
        let b = Aabb::from_intervals(&[(0.0, 2.0); 3]).unwrap();
        assert_eq!(box_volume(&b), 8.0);
        let r = 1.0 / 2f64.sqrt();
        let c = Aabb::from_intervals(&[(-r, 1.0 + r), (0.0, 1.0 + r), (0.0, 1.0 + r)]).unwrap();
        let expected = (1.0 + 2f64.sqrt()).powi(3) / 2.0;
        assert!((c.volume() - expected).abs() < 1e-12);
        assert!(c.volume() < 7.035534);
    }

    #[test]
    fn contained_in_examples() {
        let b = Aabb::from_intervals(&[(0.0, 2.0), (0.0, 2.0)]).unwrap();
        assert!(!contained_in(&seg(&[0.0, 0.0], &[0.0, 2.1]), &b, EPS).unwrap());
        assert!(contained_in(&seg(&[0.5, 0.06], &[1.0, 2.0]), &b, EPS).unwrap());
    }

    #[test]
    fn invalid_box_rejected() {
        assert!(matches!(
            Aabb::from_intervals(&[(1.0, 0.0)]),
            Err(Error::InvalidBox { axis: 0, .. })
        ));
    }

    #[test]
    fn tolerance_must_be_positive() {
        assert!(check_eps(0.0).is_err());
        assert!(check_eps(f64::NAN).is_err());
        assert!(check_eps(1e-9).is_ok());
    }
}
