use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gw::{GwElement, SquareClass};
use crate::newton::LatticePoint;

/// Rotates a cyclic vertex list to counterclockwise order starting at its
/// smallest point.
fn canonical_cycle(mut v: Vec<LatticePoint>) -> Vec<LatticePoint> {
    let area: i64 = (0..v.len()).map(|i| v[i].cross(v[(i + 1) % v.len()])).sum();
    if area < 0 {
        v.reverse();
    }
    let start = (0..v.len()).min_by_key(|&i| v[i]).unwrap();
    v.rotate_left(start);
    v
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CellKind {
    Triangle,
    Parallelogram,
}

/// A cell of a dual subdivision: a lattice triangle (dual to a trivalent
/// vertex) or a lattice parallelogram (dual to a node).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Cell {
    kind: CellKind,
    vertices: Vec<LatticePoint>,
}

impl Cell {
    pub fn triangle(a: LatticePoint, b: LatticePoint, c: LatticePoint) -> Result<Self> {
        if (b - a).cross(c - a) == 0 {
            return Err(Error::BadPolygon(format!("degenerate triangle {a} {b} {c}")));
        }
        Ok(Cell { kind: CellKind::Triangle, vertices: canonical_cycle(vec![a, b, c]) })
    }

    /// The parallelogram with consecutive corners `a, v, b`; the fourth
    /// corner is `a + b - v`.
    pub fn parallelogram(a: LatticePoint, v: LatticePoint, b: LatticePoint) -> Result<Self> {
        if (v - a).cross(b - v) == 0 {
            return Err(Error::BadPolygon(format!("degenerate parallelogram at {v}")));
        }
        let opposite = a + b - v;
        Ok(Cell { kind: CellKind::Parallelogram, vertices: canonical_cycle(vec![a, v, b, opposite]) })
    }

    pub fn kind(&self) -> CellKind {
        self.kind
    }

    pub fn is_triangle(&self) -> bool {
        self.kind == CellKind::Triangle
    }

    /// Corners, counterclockwise from the smallest.
    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    pub fn edges(&self) -> Vec<(LatticePoint, LatticePoint)> {
        let n = self.vertices.len();
        (0..n).map(|i| (self.vertices[i], self.vertices[(i + 1) % n])).collect()
    }

    /// Twice the Euclidean area; for a triangle this is `|Δ_v|`.
    pub fn double_area(&self) -> i64 {
        let n = self.vertices.len();
        (0..n).map(|i| self.vertices[i].cross(self.vertices[(i + 1) % n])).sum()
    }

    pub fn edge_lengths(&self) -> Vec<i64> {
        self.edges().into_iter().map(|(a, b)| (b - a).lattice_length()).collect()
    }

    /// Interior lattice points, from Pick's formula.
    pub fn interior_count(&self) -> i64 {
        let boundary: i64 = self.edge_lengths().iter().sum();
        (self.double_area() - boundary + 2) / 2
    }

    /// Motivic multiplicity of the dual trivalent vertex; `None` for parallelograms.
    pub fn vertex_mult(&self) -> Option<GwElement> {
        if !self.is_triangle() {
            return None;
        }
        let area = self.double_area();
        let lengths = self.edge_lengths();
        if lengths.iter().all(|l| l % 2 == 1) {
            let sign = if self.interior_count() % 2 == 0 { 1 } else { -1 };
            let class = SquareClass::of_int(sign * lengths.iter().product::<i64>()).expect("nonzero");
            Some(GwElement::form(class) + GwElement::h().scale((area - 1) / 2))
        } else {
            Some(GwElement::h().scale(area / 2))
        }
    }
}

/// `m_v` of the triangle `abc`.
pub fn vertex_mult(a: LatticePoint, b: LatticePoint, c: LatticePoint) -> Result<GwElement> {
    Ok(Cell::triangle(a, b, c)?.vertex_mult().expect("triangle"))
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.kind {
            CellKind::Triangle => "T",
            CellKind::Parallelogram => "P",
        };
        write!(f, "{tag}[")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}
