//! Closed-form link counts and bounds, in exact integer/rational arithmetic.

use std::fmt;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::GridSpec;
use crate::mlai::mlai_edge_count;

/// Two readings of the lower bound on the link length of a covering trail.
///
/// As typeset, the numerator is `prod n_i * sum_{i<=k-2} n_i + k - 3`
/// ([`LowerBoundParse::Literal`]); it exceeds the constructive upper bound on
/// the 3x3x3 grid (42 > 25), so the additive grouping
/// `prod n_i + sum_{i<=k-2} n_i + k - 3` ([`LowerBoundParse::Alt`]) is also
/// offered. Neither is used as a hard check.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LowerBoundParse {
    Literal,
    Alt,
}

fn checked_product(dims: &[usize]) -> Result<u128> {
    dims.iter()
        .try_fold(1u128, |acc, &n| acc.checked_mul(n as u128))
        .ok_or(Error::Overflow("grid point count"))
}

/// `ceil(3 * N / (2 n_k + n_{k-1} - 3)) + k - 2` with `N` per `parse`.
/// Defined for `k >= 3` and every `n_i >= 3`.
pub fn lower_bound(g: &GridSpec, parse: LowerBoundParse) -> Result<u128> {
    let k = g.k();
    let dims = g.dims();
    if k < 3 || dims[0] < 3 {
        return Err(Error::Domain(format!(
            "the lower bound needs k >= 3 and every n_i >= 3, got {g}"
        )));
    }
    let points = checked_product(dims)?;
    let partial: u128 = dims[..k - 2].iter().map(|&n| n as u128).sum();
    let shift = (k - 3) as u128;
    let numerator = match parse {
        LowerBoundParse::Literal => points.checked_mul(partial),
        LowerBoundParse::Alt => points.checked_add(partial),
    }
    .and_then(|x| x.checked_add(shift))
    .and_then(|x| x.checked_mul(3))
    .ok_or(Error::Overflow("lower bound numerator"))?;
    let denominator = 2 * dims[k - 1] as u128 + dims[k - 2] as u128 - 3;
    Ok(numerator.div_ceil(denominator) + (k - 2) as u128)
}

/// `h / prod n_i` for the layer generator, reduced.
pub fn efficiency_ratio(g: &GridSpec) -> Result<Ratio<u128>> {
    let h = mlai_edge_count(g)?;
    Ok(Ratio::new(h, checked_product(g.dims())?))
}

/// The same ratio written as `3 / n_k - 2 / prod n_i`.
pub fn efficiency_ratio_split(g: &GridSpec) -> Result<Ratio<u128>> {
    mlai_edge_count(g)?;
    let points = checked_product(g.dims())?;
    let first = Ratio::new(3, g.longest() as u128);
    let second = Ratio::new(2, points);
    Ok(first - second)
}

/// `3 prod_{i<k} n_i - 2 < prod n_i`, the generator beating one link per point.
pub fn mlai_beats_point_count(g: &GridSpec) -> Result<bool> {
    Ok(mlai_edge_count(g)? < checked_product(g.dims())?)
}

fn pow3(e: u32) -> Result<u128> {
    3u128
        .checked_pow(e)
        .ok_or(Error::Overflow("power of three"))
}

/// `ceil(20 * 3^(k-3)) - 2`, links of the check paths on `3^k` grids.
pub fn check_path_count(k: usize) -> Result<u128> {
    if k < 2 {
        return Err(Error::Domain(format!(
            "check-path count needs k >= 2, got {k}"
        )));
    }
    // ceil(20 * 3^k / 27) covers k = 2 as well
    let scaled = pow3(k as u32)?
        .checked_mul(20)
        .ok_or(Error::Overflow("check-path count"))?;
    Ok(scaled.div_ceil(27) - 2)
}

/// `18 * 3^(k-3) + sum_{j=0}^{k-4} 4 * 3^j`, the layer-by-layer count.
pub fn check_path_count_by_layers(k: usize) -> Result<u128> {
    if k < 3 {
        return Err(Error::Domain(format!("layer count needs k >= 3, got {k}")));
    }
    let mut total = 18 * pow3(k as u32 - 3)?;
    for j in 0..(k as u32).saturating_sub(3) {
        total += 4 * pow3(j)?;
    }
    Ok(total)
}

/// `(13 * 3^(k-2) - 3) / 2`, links of the covering trails on `3^k` grids.
pub fn trail_count(k: usize) -> Result<u128> {
    if k < 3 {
        return Err(Error::Domain(format!("trail count needs k >= 3, got {k}")));
    }
    let t = pow3(k as u32 - 2)?
        .checked_mul(13)
        .ok_or(Error::Overflow("trail count"))?;
    Ok((t - 3) / 2)
}

/// `18 * 3^(k-3) + sum_{j=1}^{k-3} 3^j`.
pub fn trail_count_by_layers(k: usize) -> Result<u128> {
    if k < 3 {
        return Err(Error::Domain(format!("trail count needs k >= 3, got {k}")));
    }
    let mut total = 18 * pow3(k as u32 - 3)?;
    for j in 1..=(k as u32 - 3) {
        total += pow3(j)?;
    }
    Ok(total)
}

/// Everything the bounds module knows about one grid.
#[derive(Clone, Debug, PartialEq)]
pub struct BoundReport {
    pub dims: GridSpec,
    /// `None` outside the domain `k >= 3`, `n_i >= 3`.
    pub literal_parse: Option<u128>,
    pub alt_parse: Option<u128>,
    /// `None` when `n_k < 3`.
    pub mlai_count: Option<u128>,
    pub ratio: Option<Ratio<u128>>,
    /// `alt_parse <= mlai_count`.
    pub consistent: Option<bool>,
    /// `literal_parse <= mlai_count`.
    pub literal_consistent: Option<bool>,
}

pub fn bound_report(g: &GridSpec) -> BoundReport {
    let literal_parse = lower_bound(g, LowerBoundParse::Literal).ok();
    let alt_parse = lower_bound(g, LowerBoundParse::Alt).ok();
    let mlai_count = mlai_edge_count(g).ok();
    let ratio = efficiency_ratio(g).ok();
    let cmp = |lb: Option<u128>| lb.zip(mlai_count).map(|(l, m)| l <= m);
    BoundReport {
        dims: g.clone(),
        literal_parse,
        alt_parse,
        mlai_count,
        ratio,
        consistent: cmp(alt_parse),
        literal_consistent: cmp(literal_parse),
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn opt<T: fmt::Display>(v: &Option<T>) -> String {
            v.as_ref()
                .map_or_else(|| "n/a".to_string(), |x| x.to_string())
        }
        writeln!(f, "dims={}", self.dims)?;
        writeln!(f, "literal_parse={}", opt(&self.literal_parse))?;
        writeln!(f, "alt_parse={}", opt(&self.alt_parse))?;
        writeln!(f, "mlai_count={}", opt(&self.mlai_count))?;
        writeln!(f, "ratio={}", opt(&self.ratio))?;
        writeln!(f, "consistent={}", opt(&self.consistent))?;
        writeln!(f, "literal_consistent={}", opt(&self.literal_consistent))
    }
}
