//! Directed polygonal chains: paths, trails and closed cycles.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{collinear, default_eps, distance, Point, Segment};
use crate::grid::GridSpec;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ChainKind {
    Path,
    Trail,
    Cycle,
}

impl ChainKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ChainKind::Path => "path",
            ChainKind::Trail => "trail",
            ChainKind::Cycle => "cycle",
        }
    }
}

impl fmt::Display for ChainKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for ChainKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "path" => Ok(ChainKind::Path),
            "trail" => Ok(ChainKind::Trail),
            "cycle" => Ok(ChainKind::Cycle),
            other => Err(Error::Parse(format!("unknown chain kind {other:?}"))),
        }
    }
}

/// An ordered vertex sequence covering the grid it was built for.
///
/// `steiner_flags[i]` is true when vertex `i` is not a grid point. A cycle
/// repeats its first vertex at the end.
#[derive(Clone, Debug, PartialEq)]
pub struct Chain {
    vertices: Vec<Point>,
    kind: ChainKind,
    label: String,
    steiner_flags: Vec<bool>,
    grid: GridSpec,
}

impl Chain {
    /// Builds a chain and checks its invariants against the default tolerance.
    /// Steiner flags are derived from `grid`.
    pub fn new(
        kind: ChainKind,
        label: impl Into<String>,
        grid: GridSpec,
        vertices: Vec<Point>,
    ) -> Result<Self> {
        let eps = default_eps();
        let steiner_flags = vertices.iter().map(|v| !grid.contains(v, eps)).collect();
        let chain = Chain {
            vertices,
            kind,
            label: label.into(),
            steiner_flags,
            grid,
        };
        chain.validate(eps)?;
        Ok(chain)
    }

    /// Assembles a chain without checking anything. The verifier reports on
    /// such chains instead of rejecting them.
    pub fn from_parts_unchecked(
        kind: ChainKind,
        label: impl Into<String>,
        grid: GridSpec,
        vertices: Vec<Point>,
        steiner_flags: Vec<bool>,
    ) -> Self {
        Chain {
            vertices,
            kind,
            label: label.into(),
            steiner_flags,
            grid,
        }
    }

    pub fn validate(&self, eps: f64) -> Result<()> {
        let n = self.vertices.len();
        if n < 2 {
            return Err(Error::InvalidChain(format!(
                "{n} vertices, need at least 2"
            )));
        }
        if self.steiner_flags.len() != n {
            return Err(Error::InvalidChain(format!(
                "{} steiner flags for {n} vertices",
                self.steiner_flags.len()
            )));
        }
        let k = self.grid.k();
        if let Some(v) = self.vertices.iter().find(|v| v.dim() != k) {
            return Err(Error::DimensionMismatch {
                expected: k,
                found: v.dim(),
            });
        }
        for (i, w) in self.vertices.windows(2).enumerate() {
            if distance(&w[0], &w[1])? <= eps {
                return Err(Error::InvalidChain(format!(
                    "vertices {i} and {} coincide",
                    i + 1
                )));
            }
        }
        match self.kind {
            ChainKind::Cycle => {
                if distance(&self.vertices[0], &self.vertices[n - 1])? > eps {
                    return Err(Error::InvalidChain("cycle is not closed".into()));
                }
            }
            ChainKind::Path | ChainKind::Trail => {
                for (i, w) in self.vertices.windows(3).enumerate() {
                    if collinear(&w[0], &w[1], &w[2], eps)? {
                        return Err(Error::InvalidChain(format!(
                            "edges {i} and {} are collinear",
                            i + 1
                        )));
                    }
                }
            }
        }
        for (i, (v, &flag)) in self.vertices.iter().zip(&self.steiner_flags).enumerate() {
            if flag == self.grid.contains(v, eps) {
                return Err(Error::InvalidChain(format!(
                    "steiner flag of vertex {i} disagrees with the grid"
                )));
            }
        }
        Ok(())
    }

    pub fn vertices(&self) -> &[Point] {
        &self.vertices
    }

    pub fn kind(&self) -> ChainKind {
        self.kind
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn steiner_flags(&self) -> &[bool] {
        &self.steiner_flags
    }

    pub fn grid(&self) -> &GridSpec {
        &self.grid
    }

    pub fn dim(&self) -> usize {
        self.grid.k()
    }

    /// Link length `h`, the number of edges.
    pub fn edge_count(&self) -> usize {
        self.vertices.len().saturating_sub(1)
    }

    /// Edges in traversal order.
    pub fn edges(&self) -> Result<Vec<Segment>> {
        self.vertices
            .windows(2)
            .map(|w| Segment::with_eps(w[0].clone(), w[1].clone(), 0.0))
            .collect()
    }

    pub fn edge_lengths(&self) -> Vec<f64> {
        self.vertices
            .windows(2)
            .map(|w| distance(&w[0], &w[1]).unwrap_or(f64::NAN))
            .collect()
    }

    /// The same chain traversed backwards.
    pub fn reversed(&self) -> Chain {
        let mut c = self.clone();
        c.vertices.reverse();
        c.steiner_flags.reverse();
        c
    }

    pub fn with_kind(mut self, kind: ChainKind) -> Chain {
        self.kind = kind;
        self
    }

    /// Every coordinate multiplied by `s`; flags and grid are kept.
    pub fn scaled(&self, s: f64) -> Chain {
        let mut c = self.clone();
        c.vertices = self.vertices.iter().map(|v| v.scaled(s)).collect();
        c
    }
}
