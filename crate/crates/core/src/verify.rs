//! Checks a chain against the covering-path definitions and measures it.
//!
//! A report records, for a chain, a grid and a box:
//!
//! * coverage: how many separate times the chain passes through each grid
//!   point (exactly once for paths and cycles, at least once for trails);
//! * repeated edges and collinear consecutive edges;
//! * uncrossing: non-adjacent edges share no point at all, adjacent edges
//!   share only their common vertex;
//! * containment of every edge in the box;
//! * link length `h`, the distinct edge lengths and the total length;
//! * for cycles, whether the start is a grid point (regular) or a Steiner
//!   point (smart).

use rayon::prelude::*;
use serde::Serialize;

use crate::chain::{Chain, ChainKind};
use crate::error::{Error, Result};
use crate::geom::{
    collinear, contained_in, default_eps, distance, point_segment_distance, segments_intersect,
    Aabb, IntersectionResult, Point, Segment,
};
use crate::grid::{enumerate_points, GridSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CycleClass {
    NotCycle,
    /// Starts and ends on a grid point.
    Regular,
    /// Starts and ends on a Steiner point.
    Smart,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VisitCount {
    pub point: Vec<i64>,
    pub count: usize,
}

/// Two edges (0-based indices, `edges.0 < edges.1`) that meet where they
/// should not.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CrossingWitness {
    pub edges: (usize, usize),
    /// A shared point, or `None` for a collinear overlap.
    pub point: Option<Vec<f64>>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct VerificationReport {
    pub label: String,
    pub kind: ChainKind,
    pub covers_all: bool,
    pub visit_counts: Vec<VisitCount>,
    pub repeated_edges: bool,
    pub noncollinear_ok: bool,
    pub uncrossing: bool,
    pub crossing_witnesses: Vec<CrossingWitness>,
    pub containment_ok: bool,
    /// False only for a cycle whose ends do not meet.
    pub closed_ok: bool,
    pub link_length_h: usize,
    pub length_classes: Vec<f64>,
    pub total_length_lambda: f64,
    pub cycle_class: CycleClass,
    pub tight_aabb: Aabb,
}

impl VerificationReport {
    /// Every structural predicate holds.
    pub fn passed(&self) -> bool {
        self.covers_all
            && !self.repeated_edges
            && self.noncollinear_ok
            && self.uncrossing
            && self.containment_ok
            && self.closed_ok
    }

    pub fn single_length_class(&self) -> Option<f64> {
        match self.length_classes.as_slice() {
            [l] => Some(*l),
            _ => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct VerifyOptions {
    pub eps: f64,
    /// Verify as this kind instead of the chain's own.
    pub mode: Option<ChainKind>,
    /// Grid spacing; grid point `i` sits at `i * lattice_scale`.
    pub lattice_scale: f64,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            eps: default_eps(),
            mode: None,
            lattice_scale: 1.0,
        }
    }
}

pub fn verify(c: &Chain, g: &GridSpec, bbox: &Aabb) -> Result<VerificationReport> {
    verify_with(c, g, bbox, &VerifyOptions::default())
}

pub fn verify_with(
    c: &Chain,
    g: &GridSpec,
    bbox: &Aabb,
    opts: &VerifyOptions,
) -> Result<VerificationReport> {
    crate::geom::check_eps(opts.eps)?;
    let eps = opts.eps;
    let kind = opts.mode.unwrap_or(c.kind());
    let verts = c.vertices();
    if verts.len() < 2 {
        return Err(Error::InvalidChain(format!(
            "{} vertices, need at least 2",
            verts.len()
        )));
    }
    for dim in std::iter::once(bbox.dim()).chain(verts.iter().map(Point::dim)) {
        if dim != g.k() {
            return Err(Error::DimensionMismatch {
                expected: g.k(),
                found: dim,
            });
        }
    }
    let edges = c.edges()?;

    let closed_ok =
        kind != ChainKind::Cycle || distance(&verts[0], &verts[verts.len() - 1])? <= eps;
    let noncollinear_ok = check_noncollinear(verts, kind, eps)?;
    let pairs = pair_checks(&edges, kind, eps)?;

    let mut containment_ok = true;
    for e in &edges {
        containment_ok &= contained_in(e, bbox, eps)?;
    }

    let visit_counts = coverage(&edges, g, kind, eps, opts.lattice_scale)?;
    let covers_all = visit_counts.iter().all(|v| match kind {
        ChainKind::Trail => v.count >= 1,
        ChainKind::Path | ChainKind::Cycle => v.count == 1,
    });

    let lengths: Vec<f64> = edges.iter().map(Segment::length).collect();
    let total_length_lambda = lengths.iter().sum();
    let length_classes = cluster_lengths(&lengths, eps);

    let cycle_class = if kind != ChainKind::Cycle {
        CycleClass::NotCycle
    } else if on_lattice(&verts[0], g, eps, opts.lattice_scale) {
        CycleClass::Regular
    } else {
        CycleClass::Smart
    };

    Ok(VerificationReport {
        label: c.label().to_string(),
        kind,
        covers_all,
        visit_counts,
        repeated_edges: pairs.repeated,
        noncollinear_ok,
        uncrossing: pairs.witnesses.is_empty(),
        crossing_witnesses: pairs.witnesses,
        containment_ok,
        closed_ok,
        link_length_h: edges.len(),
        length_classes,
        total_length_lambda,
        cycle_class,
        tight_aabb: crate::geom::tight_aabb(verts)?,
    })
}

fn on_lattice(p: &Point, g: &GridSpec, eps: f64, scale: f64) -> bool {
    p.coords().iter().zip(g.dims()).all(|(&c, &n)| {
        let r = (c / scale).round();
        (c - r * scale).abs() <= eps && r >= 0.0 && r <= (n - 1) as f64
    })
}

fn check_noncollinear(verts: &[Point], kind: ChainKind, eps: f64) -> Result<bool> {
    for w in verts.windows(3) {
        if collinear(&w[0], &w[1], &w[2], eps)? {
            return Ok(false);
        }
    }
    let n = verts.len();
    if kind == ChainKind::Cycle && n >= 3 && collinear(&verts[n - 2], &verts[0], &verts[1], eps)? {
        return Ok(false);
    }
    Ok(true)
}

/// Single-linkage clusters of the sorted lengths at gap `eps`; each class is
/// reported as its mean.
pub fn cluster_lengths(lengths: &[f64], eps: f64) -> Vec<f64> {
    let mut sorted = lengths.to_vec();
    sorted.sort_by(f64::total_cmp);
    let mut classes: Vec<Vec<f64>> = Vec::new();
    for l in sorted {
        match classes.last_mut() {
            Some(cls) if l - cls.last().copied().unwrap_or(l) <= eps => cls.push(l),
            _ => classes.push(vec![l]),
        }
    }
    classes
        .into_iter()
        .map(|c| c.iter().sum::<f64>() / c.len() as f64)
        .collect()
}

struct PairOutcome {
    repeated: bool,
    witnesses: Vec<CrossingWitness>,
}

fn same_edge(a: &Segment, b: &Segment, eps: f64) -> bool {
    let close = |p: &Point, q: &Point| p.max_abs_diff(q) <= eps;
    (close(a.a(), b.a()) && close(a.b(), b.b())) || (close(a.a(), b.b()) && close(a.b(), b.a()))
}

/// Adjacent edges share exactly one vertex. They are fine unless they fold
/// back onto each other or one's far end touches the other.
fn adjacent_witness(
    first: &Segment,
    second: &Segment,
    i: usize,
    j: usize,
    wrap: bool,
    eps: f64,
) -> Result<Option<CrossingWitness>> {
    let (far_first, far_second) = if wrap {
        // edge i = 0 starts and edge j = last ends at the shared vertex
        (first.b(), second.a())
    } else {
        (first.a(), second.b())
    };
    if segments_intersect(first, second, eps)? == IntersectionResult::Overlap {
        return Ok(Some(CrossingWitness {
            edges: (i, j),
            point: None,
        }));
    }
    for (p, other) in [(far_first, second), (far_second, first)] {
        if point_segment_distance(p, other)? <= eps {
            return Ok(Some(CrossingWitness {
                edges: (i, j),
                point: Some(p.coords().to_vec()),
            }));
        }
    }
    Ok(None)
}

fn pair_checks(edges: &[Segment], kind: ChainKind, eps: f64) -> Result<PairOutcome> {
    let m = edges.len();
    let boxes: Vec<(Vec<f64>, Vec<f64>)> = edges
        .iter()
        .map(|e| {
            let lo = e
                .a()
                .coords()
                .iter()
                .zip(e.b().coords())
                .map(|(a, b)| a.min(*b) - eps);
            let hi = e
                .a()
                .coords()
                .iter()
                .zip(e.b().coords())
                .map(|(a, b)| a.max(*b) + eps);
            (lo.collect(), hi.collect())
        })
        .collect();
    // sweep along axis 0
    let mut order: Vec<usize> = (0..m).collect();
    order.sort_by(|&a, &b| boxes[a].0[0].total_cmp(&boxes[b].0[0]));

    let overlap = |a: usize, b: usize| {
        boxes[a]
            .0
            .iter()
            .zip(&boxes[a].1)
            .zip(boxes[b].0.iter().zip(&boxes[b].1))
            .all(|((alo, ahi), (blo, bhi))| alo <= bhi && blo <= ahi)
    };

    let per_edge: Vec<Result<(bool, Vec<CrossingWitness>)>> = (0..m)
        .into_par_iter()
        .map(|pos| {
            let a = order[pos];
            let mut repeated = false;
            let mut found = Vec::new();
            for &b in &order[pos + 1..] {
                if boxes[b].0[0] > boxes[a].1[0] {
                    break;
                }
                if !overlap(a, b) {
                    continue;
                }
                let (i, j) = (a.min(b), a.max(b));
                let (ei, ej) = (&edges[i], &edges[j]);
                repeated |= same_edge(ei, ej, eps);
                let wrap = kind == ChainKind::Cycle && i == 0 && j == m - 1 && m > 2;
                let witness = if j == i + 1 || wrap {
                    adjacent_witness(ei, ej, i, j, wrap, eps)?
                } else {
                    match segments_intersect(ei, ej, eps)? {
                        IntersectionResult::Disjoint => None,
                        IntersectionResult::TouchAt(p) => Some(CrossingWitness {
                            edges: (i, j),
                            point: Some(p.into_coords()),
                        }),
                        IntersectionResult::Overlap => Some(CrossingWitness {
                            edges: (i, j),
                            point: None,
                        }),
                    }
                };
                found.extend(witness);
            }
            Ok((repeated, found))
        })
        .collect();

    let mut repeated = false;
    let mut witnesses = Vec::new();
    for r in per_edge {
        let (rep, w) = r?;
        repeated |= rep;
        witnesses.extend(w);
    }
    witnesses.sort_by_key(|w| w.edges);
    Ok(PairOutcome {
        repeated,
        witnesses,
    })
}

/// Number of separate passes through `p`, given the sorted indices of the
/// edges that contain it.
fn count_passes(p: &Point, hits: &[usize], edges: &[Segment], kind: ChainKind, eps: f64) -> usize {
    let at_vertex =
        |v: &Point| p.max_abs_diff(v) <= eps || distance(p, v).unwrap_or(f64::INFINITY) <= eps;
    let mut count = hits.len();
    for w in hits.windows(2) {
        if w[1] == w[0] + 1 && at_vertex(edges[w[0]].b()) {
            count -= 1;
        }
    }
    let m = edges.len();
    if kind == ChainKind::Cycle
        && m > 1
        && count > 1
        && hits.first() == Some(&0)
        && hits.last() == Some(&(m - 1))
        && at_vertex(edges[0].a())
    {
        count -= 1;
    }
    count
}

/// Passes of the chain through `p`.
pub fn visit_count(p: &Point, c: &Chain) -> Result<usize> {
    visit_count_with(p, c, default_eps())
}

pub fn visit_count_with(p: &Point, c: &Chain, eps: f64) -> Result<usize> {
    let edges = c.edges()?;
    let mut hits = Vec::new();
    for (i, e) in edges.iter().enumerate() {
        if point_segment_distance(p, e)? <= eps {
            hits.push(i);
        }
    }
    Ok(count_passes(p, &hits, &edges, c.kind(), eps))
}

/// Visit counts of every grid point. Each edge only probes the lattice
/// points inside its own bounding box.
fn coverage(
    edges: &[Segment],
    g: &GridSpec,
    kind: ChainKind,
    eps: f64,
    scale: f64,
) -> Result<Vec<VisitCount>> {
    let dims = g.dims();
    let k = g.k();
    let total = g.point_count().ok_or(Error::Overflow("grid point count"))?;
    // row-major strides, last axis fastest
    let mut strides = vec![1usize; k];
    for a in (0..k.saturating_sub(1)).rev() {
        strides[a] = strides[a + 1] * dims[a + 1];
    }

    let mut hits: Vec<Vec<usize>> = vec![Vec::new(); total];
    for (i, e) in edges.iter().enumerate() {
        let mut ranges = Vec::with_capacity(k);
        for (axis, &n) in dims.iter().enumerate() {
            let (a, b) = (e.a().coords()[axis], e.b().coords()[axis]);
            let lo = (((a.min(b) - eps) / scale).ceil()).max(0.0);
            let hi = (((a.max(b) + eps) / scale).floor()).min((n - 1) as f64);
            if lo > hi {
                break;
            }
            ranges.push((lo as usize, hi as usize));
        }
        if ranges.len() < k {
            continue;
        }
        let mut idx: Vec<usize> = ranges.iter().map(|r| r.0).collect();
        'cells: loop {
            let p = Point::new(idx.iter().map(|&x| x as f64 * scale).collect())?;
            if point_segment_distance(&p, e)? <= eps {
                let flat: usize = idx.iter().zip(&strides).map(|(x, s)| x * s).sum();
                hits[flat].push(i);
            }
            let mut axis = k;
            loop {
                if axis == 0 {
                    break 'cells;
                }
                axis -= 1;
                if idx[axis] < ranges[axis].1 {
                    idx[axis] += 1;
                    break;
                }
                idx[axis] = ranges[axis].0;
            }
        }
    }

    let points = enumerate_points(g);
    Ok(points
        .into_iter()
        .zip(hits)
        .map(|(p, h)| {
            let scaled = p.scaled(scale);
            let count = count_passes(&scaled, &h, edges, kind, eps);
            VisitCount {
                point: p.coords().iter().map(|&x| x as i64).collect(),
                count,
            }
        })
        .collect())
}
