//! Slow, independent numeric cross-checks.
//!
//! Nothing here reuses the analytic code paths of [`crate::geom`] or
//! [`crate::verify`]: distances are sampled on parametric lattices and roots
//! are bracketed by plain bisection.

use crate::chain::{Chain, ChainKind};
use crate::error::{Error, Result};
use crate::geom::{Point, Segment};

/// Default lattice resolution for disputed edge pairs.
pub const DEFAULT_SAMPLES: usize = 1001;

/// Bisection on `[lo, hi]`; stops once the bracket is narrower than `tol`.
pub fn bisect_root<F>(f: F, lo: f64, hi: f64, tol: f64) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    crate::geom::check_eps(tol)?;
    let (mut a, mut b) = (lo.min(hi), lo.max(hi));
    let (mut fa, fb) = (f(a), f(b));
    if fa == 0.0 {
        return Ok(a);
    }
    if fb == 0.0 {
        return Ok(b);
    }
    if fa.signum() == fb.signum() || fa.is_nan() || fb.is_nan() {
        return Err(Error::NoSignChange { lo, hi });
    }
    while b - a > tol {
        let mid = a + (b - a) / 2.0;
        if mid <= a || mid >= b {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return Ok(mid);
        }
        if fm.signum() == fa.signum() {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    Ok(a + (b - a) / 2.0)
}

/// Signed residuals of the two sphere equations
/// `x^2 + (y-2)^2 + (z-2)^2 = 4` and `(x - 4 + sqrt 3)^2 + (y-1)^2 + (z-1)^2 = 4`.
pub fn sphere_residuals(p: &Point) -> Result<(f64, f64)> {
    let [x, y, z] = match p.coords() {
        &[x, y, z] => [x, y, z],
        other => {
            return Err(Error::DimensionMismatch {
                expected: 3,
                found: other.len(),
            })
        }
    };
    let bx = 4.0 - 3f64.sqrt();
    Ok((
        x * x + (y - 2.0) * (y - 2.0) + (z - 2.0) * (z - 2.0) - 4.0,
        (x - bx) * (x - bx) + (y - 1.0) * (y - 1.0) + (z - 1.0) * (z - 1.0) - 4.0,
    ))
}

fn sample(a: &[f64], b: &[f64], t: f64) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + t * (y - x)).collect()
}

fn dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// Minimum point distance over a `samples x samples` parametric lattice.
/// Always an upper bound on the true distance.
pub fn dense_min_distance(s1: &Segment, s2: &Segment, samples: usize) -> f64 {
    let n = samples.max(2);
    let step = 1.0 / (n - 1) as f64;
    let second: Vec<Vec<f64>> = (0..n)
        .map(|j| sample(s2.a().coords(), s2.b().coords(), j as f64 * step))
        .collect();
    let mut best = f64::INFINITY;
    for i in 0..n {
        let p = sample(s1.a().coords(), s1.b().coords(), i as f64 * step);
        for q in &second {
            best = best.min(dist(&p, q));
        }
    }
    best
}

/// Counts contact runs of `p` with the chain by walking it in `samples`
/// steps per edge and flagging samples closer than one step of the longest
/// edge.
pub fn dense_visit_count(p: &Point, chain: &Chain, samples: usize) -> usize {
    let n = samples.max(2);
    let verts = chain.vertices();
    let longest = verts
        .windows(2)
        .map(|w| dist(w[0].coords(), w[1].coords()))
        .fold(0.0, f64::max);
    let radius = longest / (n - 1) as f64;

    let mut flags = Vec::with_capacity(verts.len() * n);
    for w in verts.windows(2) {
        for j in 0..n {
            let q = sample(w[0].coords(), w[1].coords(), j as f64 / (n - 1) as f64);
            flags.push(dist(&q, p.coords()) <= radius);
        }
    }
    let mut runs = 0;
    let mut prev = false;
    for &f in &flags {
        if f && !prev {
            runs += 1;
        }
        prev = f;
    }
    let wraps = chain.kind() == ChainKind::Cycle
        && flags.first() == Some(&true)
        && flags.last() == Some(&true);
    if wraps && runs > 1 {
        runs -= 1;
    }
    runs
}
