//! Chain documents (JSON) and SVG figures.
//!
//! A chain document has the fields `version`, `dims`, `kind`, `label`,
//! `vertices` and `steiner_flags`, always in that order. Coordinates are
//! written with 17 significant digits so that reading and writing again
//! reproduces the same bytes.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::Deserialize;

use crate::chain::{Chain, ChainKind};
use crate::error::{Error, Result};
use crate::geom::{default_eps, tight_aabb, Aabb, Point};
use crate::grid::{enumerate_points, maabb, GridSpec};

pub const FORMAT_VERSION: u32 = 1;

fn number(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn write_chain(c: &Chain) -> String {
    let mut out = String::new();
    out.push_str("{\n");
    let _ = writeln!(out, "  \"version\": {FORMAT_VERSION},");
    let dims: Vec<String> = c.grid().dims().iter().map(usize::to_string).collect();
    let _ = writeln!(out, "  \"dims\": [{}],", dims.join(", "));
    let _ = writeln!(out, "  \"kind\": \"{}\",", c.kind());
    let label = serde_json::to_string(c.label()).expect("strings always serialize");
    let _ = writeln!(out, "  \"label\": {label},");
    out.push_str("  \"vertices\": [\n");
    let n = c.vertices().len();
    for (i, v) in c.vertices().iter().enumerate() {
        let coords: Vec<String> = v.coords().iter().map(|&x| number(x)).collect();
        let sep = if i + 1 < n { "," } else { "" };
        let _ = writeln!(out, "    [{}]{sep}", coords.join(", "));
    }
    out.push_str("  ],\n");
    let flags: Vec<&str> = c
        .steiner_flags()
        .iter()
        .map(|&f| if f { "true" } else { "false" })
        .collect();
    let _ = writeln!(out, "  \"steiner_flags\": [{}]", flags.join(", "));
    out.push_str("}\n");
    out
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct ChainDocument {
    version: u32,
    dims: Vec<usize>,
    kind: String,
    label: String,
    vertices: Vec<Vec<f64>>,
    steiner_flags: Vec<bool>,
}

/// Parses a chain document and checks the chain invariants.
pub fn read_chain(doc: &str) -> Result<Chain> {
    let d: ChainDocument = serde_json::from_str(doc)?;
    if d.version != FORMAT_VERSION {
        return Err(Error::Parse(format!(
            "unsupported document version {}",
            d.version
        )));
    }
    let grid = GridSpec::new(d.dims)?;
    let kind = ChainKind::from_str(&d.kind)?;
    let vertices = d
        .vertices
        .into_iter()
        .map(Point::new)
        .collect::<Result<Vec<_>>>()?;
    let c = Chain::from_parts_unchecked(kind, d.label, grid, vertices, d.steiner_flags);
    c.validate(default_eps())?;
    Ok(c)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Projection {
    Xy,
    Xz,
    Yz,
    /// Isometric view of a 3-D chain.
    Iso,
}

impl Projection {
    pub fn as_str(self) -> &'static str {
        match self {
            Projection::Xy => "xy",
            Projection::Xz => "xz",
            Projection::Yz => "yz",
            Projection::Iso => "iso",
        }
    }

    fn supports(self, dim: usize) -> bool {
        match self {
            Projection::Xy => dim >= 2,
            Projection::Xz | Projection::Yz => dim >= 3,
            Projection::Iso => dim == 3,
        }
    }

    /// Drawing-plane coordinates, y pointing up.
    fn project(self, p: &[f64]) -> (f64, f64) {
        match self {
            Projection::Xy => (p[0], p[1]),
            Projection::Xz => (p[0], p[2]),
            Projection::Yz => (p[1], p[2]),
            Projection::Iso => {
                let c = 3f64.sqrt() / 2.0;
                ((p[0] - p[1]) * c, p[2] - (p[0] + p[1]) / 2.0)
            }
        }
    }

    /// Outline of an axis-aligned box as projected line segments.
    fn box_outline(self, b: &Aabb) -> Vec<Line> {
        let (lo, hi) = (b.lo().coords(), b.hi().coords());
        let corner = |mask: usize| -> Vec<f64> {
            (0..3)
                .map(|a| if mask >> a & 1 == 1 { hi[a] } else { lo[a] })
                .collect()
        };
        match self {
            Projection::Iso => {
                let mut lines = Vec::new();
                for m in 0..8usize {
                    for a in 0..3 {
                        if m >> a & 1 == 0 {
                            lines.push((
                                self.project(&corner(m)),
                                self.project(&corner(m | 1 << a)),
                            ));
                        }
                    }
                }
                lines
            }
            _ => {
                let (x0, y0) = self.project(lo);
                let (x1, y1) = self.project(hi);
                vec![
                    ((x0, y0), (x1, y0)),
                    ((x1, y0), (x1, y1)),
                    ((x1, y1), (x0, y1)),
                    ((x0, y1), (x0, y0)),
                ]
            }
        }
    }
}

impl FromStr for Projection {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "xy" => Ok(Projection::Xy),
            "xz" => Ok(Projection::Xz),
            "yz" => Ok(Projection::Yz),
            "iso" | "isometric" => Ok(Projection::Iso),
            other => Err(Error::Parse(format!("unknown projection {other:?}"))),
        }
    }
}

type Line = ((f64, f64), (f64, f64));

const CANVAS: f64 = 480.0;
const MARGIN: f64 = 40.0;

struct Frame {
    min: (f64, f64),
    scale: f64,
    height: f64,
}

impl Frame {
    fn fit(points: &[(f64, f64)]) -> Frame {
        let (mut x0, mut y0, mut x1, mut y1) = (f64::MAX, f64::MAX, f64::MIN, f64::MIN);
        for &(x, y) in points {
            x0 = x0.min(x);
            y0 = y0.min(y);
            x1 = x1.max(x);
            y1 = y1.max(y);
        }
        let span = (x1 - x0).max(y1 - y0).max(1e-12);
        let scale = CANVAS / span;
        Frame {
            min: (x0, y0),
            scale,
            height: (y1 - y0) * scale + 2.0 * MARGIN,
        }
    }

    fn map(&self, (x, y): (f64, f64)) -> (f64, f64) {
        (
            MARGIN + (x - self.min.0) * self.scale,
            self.height - MARGIN - (y - self.min.1) * self.scale,
        )
    }
}

fn outline_path(lines: &[Line], frame: &Frame) -> String {
    let mut d = String::new();
    for &(a, b) in lines {
        let (a, b) = (frame.map(a), frame.map(b));
        let _ = write!(d, "M{:.3} {:.3}L{:.3} {:.3}", a.0, a.1, b.0, b.1);
    }
    d
}

fn xml_escape(s: &str) -> String {
    s.replace('&', "&amp;")
        .replace('<', "&lt;")
        .replace('>', "&gt;")
        .replace('"', "&quot;")
}

/// Renders the chain as an SVG document: grid points as dots, Steiner points
/// as hollow squares, directed edges numbered from 1, and the tight box and
/// the minimum box outlined.
pub fn export_figure(c: &Chain, proj: Projection) -> Result<String> {
    let dim = c.dim();
    if !proj.supports(dim) {
        return Err(Error::UnsupportedProjection {
            projection: proj.as_str().to_string(),
            dim,
        });
    }
    let tight = tight_aabb(c.vertices())?;
    let minimal = maabb(c.grid());

    // distinct projected grid points
    let mut seen = BTreeSet::new();
    let mut grid_pts = Vec::new();
    for p in enumerate_points(c.grid()) {
        let q = proj.project(p.coords());
        if seen.insert(((q.0 * 1e6).round() as i64, (q.1 * 1e6).round() as i64)) {
            grid_pts.push(q);
        }
    }
    let verts: Vec<(f64, f64)> = c
        .vertices()
        .iter()
        .map(|v| proj.project(v.coords()))
        .collect();
    let tight_lines = proj.box_outline(&tight);
    let min_lines = proj.box_outline(&minimal);

    let mut all: Vec<(f64, f64)> = grid_pts.clone();
    all.extend(&verts);
    all.extend(tight_lines.iter().flat_map(|&(a, b)| [a, b]));
    let frame = Frame::fit(&all);
    let width = CANVAS + 2.0 * MARGIN;

    let mut s = String::new();
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" width="{width:.0}" height="{h:.0}" viewBox="0 0 {width:.0} {h:.0}">"#,
        h = frame.height
    );
    let _ = writeln!(
        s,
        "<title>{} ({})</title>",
        xml_escape(c.label()),
        proj.as_str()
    );
    s.push_str(concat!(
        "<defs><marker id=\"arrow\" viewBox=\"0 0 10 10\" refX=\"10\" refY=\"5\" ",
        "markerWidth=\"8\" markerHeight=\"8\" orient=\"auto-start-reverse\">",
        "<path d=\"M0 0L10 5L0 10z\" fill=\"#1f4e9c\"/></marker></defs>\n"
    ));
    let _ = writeln!(
        s,
        r##"<path class="maabb" d="{}" fill="none" stroke="#999" stroke-dasharray="4 3"/>"##,
        outline_path(&min_lines, &frame)
    );
    let _ = writeln!(
        s,
        r##"<path class="tight-aabb" d="{}" fill="none" stroke="#c33"/>"##,
        outline_path(&tight_lines, &frame)
    );
    for &p in &grid_pts {
        let (x, y) = frame.map(p);
        let _ = writeln!(
            s,
            r##"<circle class="grid-point" cx="{x:.3}" cy="{y:.3}" r="4" fill="#222"/>"##
        );
    }
    for (i, w) in verts.windows(2).enumerate() {
        let (a, b) = (frame.map(w[0]), frame.map(w[1]));
        let _ = writeln!(
            s,
            r##"<line class="edge" x1="{:.3}" y1="{:.3}" x2="{:.3}" y2="{:.3}" stroke="#1f4e9c" stroke-width="1.5" marker-end="url(#arrow)"/>"##,
            a.0, a.1, b.0, b.1
        );
        let mid = ((a.0 + b.0) / 2.0, (a.1 + b.1) / 2.0);
        let _ = writeln!(
            s,
            r##"<text class="edge-label" x="{:.3}" y="{:.3}" font-size="12" fill="#1f4e9c">{}</text>"##,
            mid.0 + 4.0,
            mid.1 - 4.0,
            i + 1
        );
    }
    for (&p, &steiner) in verts.iter().zip(c.steiner_flags()) {
        if steiner {
            let (x, y) = frame.map(p);
            let _ = writeln!(
                s,
                r##"<rect class="steiner-point" x="{:.3}" y="{:.3}" width="8" height="8" fill="none" stroke="#c60"/>"##,
                x - 4.0,
                y - 4.0
            );
        }
    }
    s.push_str("</svg>\n");
    Ok(s)
}
