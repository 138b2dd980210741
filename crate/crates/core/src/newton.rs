//! Convex lattice polygons: Newton polygons of (toric surface, curve class)
//! pairs, their lattice counts, and corner chopping (toric blow-ups).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub const fn new(x: i64, y: i64) -> Self {
        LatticePoint { x, y }
    }

    /// 2D cross product `self x other`.
    pub fn cross(self, other: LatticePoint) -> i64 {
        self.x * other.y - self.y * other.x
    }

    /// Number of lattice steps from the origin to `self` along a straight line.
    pub fn lattice_length(self) -> i64 {
        self.x.abs().gcd(&self.y.abs())
    }

    /// Primitive vector in the same direction.
    pub fn primitive(self) -> LatticePoint {
        let g = self.lattice_length();
        LatticePoint::new(self.x / g, self.y / g)
    }
}

impl Add for LatticePoint {
    type Output = LatticePoint;
    fn add(self, o: LatticePoint) -> LatticePoint {
        LatticePoint::new(self.x + o.x, self.y + o.y)
    }
}

impl Sub for LatticePoint {
    type Output = LatticePoint;
    fn sub(self, o: LatticePoint) -> LatticePoint {
        LatticePoint::new(self.x - o.x, self.y - o.y)
    }
}

impl Neg for LatticePoint {
    type Output = LatticePoint;
    fn neg(self) -> LatticePoint {
        LatticePoint::new(-self.x, -self.y)
    }
}

impl Mul<LatticePoint> for i64 {
    type Output = LatticePoint;
    fn mul(self, p: LatticePoint) -> LatticePoint {
        LatticePoint::new(self * p.x, self * p.y)
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Serialize for LatticePoint {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [self.x, self.y].serialize(s)
    }
}

impl<'de> Deserialize<'de> for LatticePoint {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let [x, y] = <[i64; 2]>::deserialize(d)?;
        Ok(LatticePoint::new(x, y))
    }
}

/// Convex hull, counterclockwise, without collinear points, starting at the
/// lexicographically smallest point.
fn convex_hull(points: &[LatticePoint]) -> Vec<LatticePoint> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() < 3 {
        return pts;
    }
    let mut hull: Vec<LatticePoint> = Vec::with_capacity(2 * pts.len());
    for pass in 0..2 {
        let start = hull.len();
        let iter: Box<dyn Iterator<Item = &LatticePoint>> =
            if pass == 0 { Box::new(pts.iter()) } else { Box::new(pts.iter().rev()) };
        for &p in iter {
            while hull.len() >= start + 2 {
                let a = hull[hull.len() - 2];
                let b = hull[hull.len() - 1];
                if (b - a).cross(p - b) > 0 {
                    break;
                }
                hull.pop();
            }
            hull.push(p);
        }
        hull.pop();
    }
    hull
}

/// A convex lattice polygon, vertices counterclockwise from the
/// lexicographically smallest one, no three consecutive vertices collinear.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LatticePolygon {
    vertices: Vec<LatticePoint>,
}

impl LatticePolygon {
    /// Validates a vertex list. Any order and starting point is accepted as
    /// long as every point is a corner of the convex hull.
    pub fn new(vertices: Vec<LatticePoint>) -> Result<Self> {
        let hull = convex_hull(&vertices);
        if hull.len() < 3 {
            return Err(Error::BadPolygon("fewer than three non-collinear vertices".into()));
        }
        let mut distinct = vertices.clone();
        distinct.sort();
        distinct.dedup();
        if distinct.len() != hull.len() {
            return Err(Error::BadPolygon("vertices must be in convex position with no three collinear".into()));
        }
        Ok(LatticePolygon { vertices: hull })
    }

    /// The convex hull of arbitrary lattice points.
    pub fn hull_of(points: &[LatticePoint]) -> Result<Self> {
        let hull = convex_hull(points);
        Self::new(hull)
    }

    pub fn from_coords(coords: &[(i64, i64)]) -> Result<Self> {
        Self::new(coords.iter().map(|&(x, y)| LatticePoint::new(x, y)).collect())
    }

    pub fn vertices(&self) -> &[LatticePoint] {
        &self.vertices
    }

    /// Edges as `(start, end)` in counterclockwise order.
    pub fn edges(&self) -> impl Iterator<Item = (LatticePoint, LatticePoint)> + '_ {
        let n = self.vertices.len();
        (0..n).map(move |i| (self.vertices[i], self.vertices[(i + 1) % n]))
    }

    /// Twice the Euclidean area.
    pub fn double_area(&self) -> i64 {
        self.edges().map(|(a, b)| a.cross(b)).sum()
    }

    pub fn boundary_count(&self) -> i64 {
        self.edges().map(|(a, b)| (b - a).lattice_length()).sum()
    }

    /// Interior lattice points by scanning the bounding box; checked against Pick.
    pub fn interior_count(&self) -> i64 {
        let interior = self.lattice_points().into_iter().filter(|&p| self.strictly_inside(p)).count() as i64;
        assert_eq!(self.double_area(), 2 * interior + self.boundary_count() - 2, "Pick identity failed for {self}");
        interior
    }

    /// Number of point conditions for rational curves: `#boundary - 1`.
    pub fn point_budget(&self) -> i64 {
        self.boundary_count() - 1
    }

    fn side(a: LatticePoint, b: LatticePoint, p: LatticePoint) -> i64 {
        (b - a).cross(p - a)
    }

    pub fn contains(&self, p: LatticePoint) -> bool {
        self.edges().all(|(a, b)| Self::side(a, b, p) >= 0)
    }

    pub fn strictly_inside(&self, p: LatticePoint) -> bool {
        self.edges().all(|(a, b)| Self::side(a, b, p) > 0)
    }

    pub fn on_boundary(&self, p: LatticePoint) -> bool {
        self.contains(p) && !self.strictly_inside(p)
    }

    /// True when the segment `ab` lies on a single edge of the polygon.
    pub fn segment_on_boundary(&self, a: LatticePoint, b: LatticePoint) -> bool {
        self.edges().any(|(u, v)| Self::side(u, v, a) == 0 && Self::side(u, v, b) == 0)
    }

    /// Bounding box `(min, max)`.
    pub fn bounds(&self) -> (LatticePoint, LatticePoint) {
        let xs = self.vertices.iter().map(|p| p.x);
        let ys = self.vertices.iter().map(|p| p.y);
        (
            LatticePoint::new(xs.clone().min().unwrap(), ys.clone().min().unwrap()),
            LatticePoint::new(xs.max().unwrap(), ys.max().unwrap()),
        )
    }

    /// All lattice points of the polygon, sorted by `(x, y)`.
    pub fn lattice_points(&self) -> Vec<LatticePoint> {
        let (lo, hi) = self.bounds();
        let mut out = Vec::new();
        for x in lo.x..=hi.x {
            for y in lo.y..=hi.y {
                let p = LatticePoint::new(x, y);
                if self.contains(p) {
                    out.push(p);
                }
            }
        }
        out
    }

    pub fn translate(&self, by: LatticePoint) -> LatticePolygon {
        LatticePolygon { vertices: convex_hull(&self.vertices.iter().map(|&p| p + by).collect::<Vec<_>>()) }
    }

    /// Cuts off the corner at `vertex`, replacing it by the two points at
    /// lattice distance `depth` along the incident edges.
    ///
    /// The corner has to be smooth (its primitive edge directions span Z^2),
    /// which is what makes the cut a toric blow-up with exceptional
    /// multiplicity `depth`.
    pub fn chop_corner(&self, vertex: LatticePoint, depth: i64) -> Result<LatticePolygon> {
        let n = self.vertices.len();
        let i =
            self.vertices.iter().position(|&v| v == vertex).ok_or(Error::NotAVertex { x: vertex.x, y: vertex.y })?;
        if depth < 1 {
            return Err(Error::EdgeTooShort { have: 0, want: depth });
        }
        let prev = self.vertices[(i + n - 1) % n];
        let next = self.vertices[(i + 1) % n];
        let (to_prev, to_next) = (prev - vertex, next - vertex);
        for e in [to_prev, to_next] {
            if e.lattice_length() < depth {
                return Err(Error::EdgeTooShort { have: e.lattice_length(), want: depth });
            }
        }
        let (u, w) = (to_prev.primitive(), to_next.primitive());
        if u.cross(w).abs() != 1 {
            return Err(Error::SingularCorner { x: vertex.x, y: vertex.y });
        }
        let mut pts: Vec<LatticePoint> = self.vertices.iter().copied().filter(|&v| v != vertex).collect();
        pts.push(vertex + depth * u);
        pts.push(vertex + depth * w);
        let hull = convex_hull(&pts);
        if hull.len() < 3 {
            return Err(Error::DegenerateChop);
        }
        Ok(LatticePolygon { vertices: hull })
    }

    /// Whether every corner is unimodular, i.e. the toric surface is smooth.
    pub fn is_smooth(&self) -> bool {
        let n = self.vertices.len();
        (0..n).all(|i| {
            let v = self.vertices[i];
            let u = (self.vertices[(i + n - 1) % n] - v).primitive();
            let w = (self.vertices[(i + 1) % n] - v).primitive();
            u.cross(w).abs() == 1
        })
    }

    /// Whether some `A` in GL(2, Z) and translation carry `self` onto `other`.
    pub fn is_lattice_equivalent(&self, other: &LatticePolygon) -> bool {
        let n = self.vertices.len();
        if n != other.vertices.len() || self.double_area() != other.double_area() {
            return false;
        }
        let edge = |v: &[LatticePoint], i: usize| v[(i + 1) % n] - v[i];
        let mine: Vec<LatticePoint> = (0..n).map(|i| edge(&self.vertices, i)).collect();
        for reversed in [false, true] {
            let theirs: Vec<LatticePoint> = if reversed {
                let r: Vec<LatticePoint> = other.vertices.iter().rev().copied().collect();
                (0..n).map(|i| edge(&r, i)).collect()
            } else {
                (0..n).map(|i| edge(&other.vertices, i)).collect()
            };
            for shift in 0..n {
                // solve A * mine[0] = theirs[shift], A * mine[1] = theirs[shift+1]
                let (e0, e1) = (mine[0], mine[1]);
                let (f0, f1) = (theirs[shift], theirs[(shift + 1) % n]);
                let det = e0.cross(e1);
                if det == 0 {
                    continue;
                }
                // A = F * E^{-1}, E = [e0 e1] as columns
                let a11 = f0.x * e1.y - f1.x * e0.y;
                let a12 = -f0.x * e1.x + f1.x * e0.x;
                let a21 = f0.y * e1.y - f1.y * e0.y;
                let a22 = -f0.y * e1.x + f1.y * e0.x;
                if [a11, a12, a21, a22].iter().any(|v| v % det != 0) {
                    continue;
                }
                let (a11, a12, a21, a22) = (a11 / det, a12 / det, a21 / det, a22 / det);
                if (a11 * a22 - a12 * a21).abs() != 1 {
                    continue;
                }
                let apply = |p: LatticePoint| LatticePoint::new(a11 * p.x + a12 * p.y, a21 * p.x + a22 * p.y);
                if (0..n).all(|k| apply(mine[k]) == theirs[(shift + k) % n]) {
                    return true;
                }
            }
        }
        false
    }
}

impl fmt::Display for LatticePolygon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "conv{{")?;
        for (i, v) in self.vertices.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

#[derive(Serialize, Deserialize)]
struct PolygonJson {
    vertices: Vec<LatticePoint>,
}

impl Serialize for LatticePolygon {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolygonJson { vertices: self.vertices.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LatticePolygon {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = PolygonJson::deserialize(d)?;
        LatticePolygon::new(raw.vertices).map_err(serde::de::Error::custom)
    }
}

/// `conv{(0,0), (d,0), (0,d)}`: plane curves of degree `d`.
pub fn p2(d: i64) -> Result<LatticePolygon> {
    if d < 1 {
        return Err(Error::BadDegree);
    }
    LatticePolygon::from_coords(&[(0, 0), (d, 0), (0, d)])
}

/// Names accepted by [`preset`].
pub const PRESET_NAMES: &[&str] = &["p2:<d>", "F1_4_2E", "BlF1", "Bl2F1"];

/// Named polygons: `p2:<d>`, the first Hirzebruch surface in class 4L-2E
/// (`F1_4_2E`), its blow-up in class 4L-2E-2E' (`BlF1`) and the double
/// blow-up in class 4L-2E-2E'-2E'' (`Bl2F1`). Names are case-insensitive.
pub fn preset(name: &str) -> Result<LatticePolygon> {
    let lower = name.trim().to_ascii_lowercase();
    if let Some(d) = lower.strip_prefix("p2:") {
        let d: i64 = d.parse().map_err(|_| Error::UnknownPreset(name.to_string()))?;
        return p2(d);
    }
    let coords: &[(i64, i64)] = match lower.as_str() {
        "f1_4_2e" => &[(0, 0), (4, 0), (2, 2), (0, 2)],
        "blf1" => &[(0, 0), (2, 0), (2, 2), (0, 2)],
        "bl2f1" => &[(0, 0), (2, 0), (0, 2)],
        _ => return Err(Error::UnknownPreset(name.to_string())),
    };
    LatticePolygon::from_coords(coords)
}
