//! SVG rendering of dual subdivisions.
//!
//! Triangles whose multiplicity has a rank-one summand (all edges odd) are
//! filled in one colour, pure multiples of `h` in another; parallelograms
//! are left white. The lattice path is drawn on top.

use std::fmt::Write as _;

use super::subdivision::MarkedSubdivision;
use crate::newton::{LatticePoint, LatticePolygon};

const ODD_FILL: &str = "#f2c14e";
const HYPERBOLIC_FILL: &str = "#7fb7d9";
const MARGIN: f64 = 20.0;

/// Rendering options.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct SvgOptions {
    /// Pixels per lattice unit. `None` fits the drawing into `fit` pixels.
    pub scale: Option<f64>,
    pub fit: f64,
    /// Gap between panels when several curves are drawn.
    pub gap: f64,
}

impl Default for SvgOptions {
    fn default() -> Self {
        SvgOptions { scale: None, fit: 240.0, gap: 30.0 }
    }
}

struct Frame {
    scale: f64,
    min: LatticePoint,
    max: LatticePoint,
}

impl Frame {
    fn new(poly: &LatticePolygon, opts: &SvgOptions) -> Self {
        let (min, max) = poly.bounds();
        let span = (max.x - min.x).max(max.y - min.y).max(1) as f64;
        Frame { scale: opts.scale.unwrap_or(opts.fit / span), min, max }
    }

    fn width(&self) -> f64 {
        (self.max.x - self.min.x) as f64 * self.scale + 2.0 * MARGIN
    }

    fn height(&self) -> f64 {
        (self.max.y - self.min.y) as f64 * self.scale + 2.0 * MARGIN
    }

    // lattice y grows upward, SVG y grows downward
    fn map(&self, p: LatticePoint, dx: f64) -> (f64, f64) {
        let x = dx + MARGIN + (p.x - self.min.x) as f64 * self.scale;
        let y = MARGIN + (self.max.y - p.y) as f64 * self.scale;
        (x, y)
    }

    fn points(&self, pts: &[LatticePoint], dx: f64) -> String {
        pts.iter()
            .map(|&p| {
                let (x, y) = self.map(p, dx);
                format!("{x:.2},{y:.2}")
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

fn panel(out: &mut String, poly: &LatticePolygon, sub: &MarkedSubdivision, frame: &Frame, dx: f64) {
    for cell in sub.cells() {
        let fill = match cell.vertex_mult() {
            None => "#ffffff",
            Some(m) if m.rank() % 2 == 1 => ODD_FILL,
            Some(_) => HYPERBOLIC_FILL,
        };
        let _ = writeln!(
            out,
            r##"  <polygon points="{}" fill="{fill}" stroke="#333333" stroke-width="1"/>"##,
            frame.points(cell.vertices(), dx)
        );
    }
    let _ = writeln!(
        out,
        r##"  <polygon points="{}" fill="none" stroke="#000000" stroke-width="2"/>"##,
        frame.points(poly.vertices(), dx)
    );
    let _ = writeln!(
        out,
        r##"  <polyline points="{}" fill="none" stroke="#c0392b" stroke-width="2" stroke-dasharray="4,3"/>"##,
        frame.points(sub.path().points(), dx)
    );
    for p in poly.lattice_points() {
        let (x, y) = frame.map(p, dx);
        let _ = writeln!(out, r##"  <circle cx="{x:.2}" cy="{y:.2}" r="2.5" fill="#000000"/>"##);
    }
}

/// Draws the given subdivisions of `poly` side by side.
pub fn render_subdivisions(poly: &LatticePolygon, subs: &[&MarkedSubdivision], opts: &SvgOptions) -> String {
    let frame = Frame::new(poly, opts);
    let n = subs.len().max(1) as f64;
    let width = n * frame.width() + (n - 1.0) * opts.gap;
    let height = frame.height();
    let mut out = String::new();
    let _ = writeln!(out, r##"<?xml version="1.0" encoding="UTF-8"?>"##);
    let _ = writeln!(
        out,
        r##"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{width:.2}" height="{height:.2}" viewBox="0 0 {width:.2} {height:.2}">"##
    );
    if subs.is_empty() {
        let _ = writeln!(
            out,
            r##"  <polygon points="{}" fill="none" stroke="#000000" stroke-width="2"/>"##,
            frame.points(poly.vertices(), 0.0)
        );
    }
    for (i, sub) in subs.iter().enumerate() {
        panel(&mut out, poly, sub, &frame, i as f64 * (frame.width() + opts.gap));
    }
    out.push_str("</svg>\n");
    out
}

/// Draws one subdivision.
pub fn render_subdivision(poly: &LatticePolygon, sub: &MarkedSubdivision, opts: &SvgOptions) -> String {
    render_subdivisions(poly, &[sub], opts)
}
