//! Lattice paths and their completions to dual subdivisions.
//!
//! Points are ordered by `λ(x, y) = y + εx` for a tiny `ε > 0`, which on
//! lattice points is the lexicographic order on `(y, x)`. This is the order
//! in which a vertically stretched point configuration meets the dual
//! subdivision.

use std::cmp::Ordering;

use serde::{Deserialize, Serialize};

use super::cell::Cell;
use crate::newton::{LatticePoint, LatticePolygon};

/// Compares two lattice points by `λ`.
pub fn lambda_cmp(a: &LatticePoint, b: &LatticePoint) -> Ordering {
    (a.y, a.x).cmp(&(b.y, b.x))
}

/// A `λ`-increasing lattice path from the `λ`-minimal to the `λ`-maximal
/// vertex of a polygon.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct LatticePath {
    points: Vec<LatticePoint>,
}

impl LatticePath {
    pub fn new(points: Vec<LatticePoint>) -> Self {
        debug_assert!(points.windows(2).all(|w| lambda_cmp(&w[0], &w[1]) == Ordering::Less));
        LatticePath { points }
    }

    pub fn points(&self) -> &[LatticePoint] {
        &self.points
    }

    /// Number of steps.
    pub fn len(&self) -> usize {
        self.points.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn segments(&self) -> impl Iterator<Item = (LatticePoint, LatticePoint)> + '_ {
        self.points.windows(2).map(|w| (w[0], w[1]))
    }
}

/// Which side of the path a completion fills.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    /// The region to the left of the path, walking in increasing `λ`.
    Positive,
    /// The region to the right.
    Negative,
}

impl Side {
    fn turns(self, a: LatticePoint, v: LatticePoint, b: LatticePoint) -> bool {
        let turn = (v - a).cross(b - v);
        match self {
            Side::Positive => turn > 0,
            Side::Negative => turn < 0,
        }
    }
}

/// Which turning vertex the completion recursion resolves first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum TurnOrder {
    #[default]
    First,
    Last,
}

/// Lattice points of the polygon sorted by `λ`.
pub fn lambda_sorted_points(poly: &LatticePolygon) -> Vec<LatticePoint> {
    let mut pts = poly.lattice_points();
    pts.sort_by(lambda_cmp);
    pts
}

/// The boundary path on the given side, through every boundary lattice point.
pub fn boundary_path(poly: &LatticePolygon, side: Side) -> LatticePath {
    let verts = poly.vertices();
    let n = verts.len();
    let lo = (0..n).min_by(|&i, &j| lambda_cmp(&verts[i], &verts[j])).unwrap();
    let hi = (0..n).max_by(|&i, &j| lambda_cmp(&verts[i], &verts[j])).unwrap();
    // counterclockwise from lo to hi runs along the right-hand side
    let step = match side {
        Side::Negative => 1,
        Side::Positive => n - 1,
    };
    let mut points = vec![verts[lo]];
    let mut i = lo;
    while i != hi {
        let j = (i + step) % n;
        let (a, b) = (verts[i], verts[j]);
        let len = (b - a).lattice_length();
        let dir = (b - a).primitive();
        for k in 1..=len {
            points.push(a + k * dir);
        }
        i = j;
    }
    LatticePath::new(points)
}

/// Every `λ`-increasing path with `point_budget` steps between the extreme
/// vertices, in lexicographic order of the chosen lattice points.
pub fn enumerate_paths(poly: &LatticePolygon) -> Vec<LatticePath> {
    let pts = lambda_sorted_points(poly);
    let steps = poly.point_budget();
    let mut out = Vec::new();
    if steps < 1 || (pts.len() as i64) < steps + 1 {
        return out;
    }
    let inner = &pts[1..pts.len() - 1];
    let want = (steps - 1) as usize;
    let mut chosen = Vec::with_capacity(want);
    fn rec(
        inner: &[LatticePoint],
        start: usize,
        want: usize,
        chosen: &mut Vec<LatticePoint>,
        first: LatticePoint,
        last: LatticePoint,
        out: &mut Vec<LatticePath>,
    ) {
        if chosen.len() == want {
            let mut points = Vec::with_capacity(want + 2);
            points.push(first);
            points.extend_from_slice(chosen);
            points.push(last);
            out.push(LatticePath::new(points));
            return;
        }
        let remaining = want - chosen.len();
        for i in start..=inner.len() - remaining {
            chosen.push(inner[i]);
            rec(inner, i + 1, want, chosen, first, last, out);
            chosen.pop();
        }
    }
    rec(inner, 0, want, &mut chosen, pts[0], pts[pts.len() - 1], &mut out);
    out
}

/// All ways to fill the region between `path` and the boundary on `side`
/// with triangles and parallelograms.
///
/// Each returned vector is the cell set of one leaf of the recursion; an
/// empty result means the path has no completion on that side.
pub fn complete_path(path: &LatticePath, side: Side, poly: &LatticePolygon) -> Vec<Vec<Cell>> {
    complete_path_with(path, side, poly, TurnOrder::First)
}

pub fn complete_path_with(path: &LatticePath, side: Side, poly: &LatticePolygon, order: TurnOrder) -> Vec<Vec<Cell>> {
    let target = boundary_path(poly, side);
    let mut out = Vec::new();
    let mut cells = Vec::new();
    let mut work = path.points.clone();
    recurse(&mut work, side, order, poly, &target.points, &mut cells, &mut out);
    out
}

fn recurse(
    path: &mut Vec<LatticePoint>,
    side: Side,
    order: TurnOrder,
    poly: &LatticePolygon,
    target: &[LatticePoint],
    cells: &mut Vec<Cell>,
    out: &mut Vec<Vec<Cell>>,
) {
    if path.as_slice() == target {
        let mut leaf = cells.clone();
        leaf.sort();
        out.push(leaf);
        return;
    }
    // triangles shorten the path, parallelograms keep its length
    if path.len() < target.len() {
        return;
    }
    let turning = |&j: &usize| side.turns(path[j - 1], path[j], path[j + 1]);
    let j = match order {
        TurnOrder::First => (1..path.len() - 1).find(turning),
        TurnOrder::Last => (1..path.len() - 1).rev().find(turning),
    };
    let Some(j) = j else { return };
    let (a, v, b) = (path[j - 1], path[j], path[j + 1]);

    cells.push(Cell::triangle(a, v, b).expect("turning vertex"));
    let removed = path.remove(j);
    recurse(path, side, order, poly, target, cells, out);
    path.insert(j, removed);
    cells.pop();

    let opposite = a + b - v;
    if poly.contains(opposite)
        && lambda_cmp(&a, &opposite) == Ordering::Less
        && lambda_cmp(&opposite, &b) == Ordering::Less
    {
        cells.push(Cell::parallelogram(a, v, b).expect("turning vertex"));
        path[j] = opposite;
        recurse(path, side, order, poly, target, cells, out);
        path[j] = v;
        cells.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::newton::{p2, preset};

    fn pt(x: i64, y: i64) -> LatticePoint {
        LatticePoint::new(x, y)
    }

    #[test]
    fn path_counts() {
        assert_eq!(enumerate_paths(&p2(1).unwrap()).len(), 1);
        assert_eq!(enumerate_paths(&preset("Bl2F1").unwrap()).len(), 1);
        // 10 lattice points, 8 steps: choose 7 of the 8 middle points
        assert_eq!(enumerate_paths(&p2(3).unwrap()).len(), 8);
    }

    #[test]
    fn boundary_paths_of_triangle() {
        let t = p2(2).unwrap();
        assert_eq!(boundary_path(&t, Side::Positive).points(), &[pt(0, 0), pt(0, 1), pt(0, 2)]);
        assert_eq!(boundary_path(&t, Side::Negative).points(), &[pt(0, 0), pt(1, 0), pt(2, 0), pt(1, 1), pt(0, 2)]);
    }

    #[test]
    fn boundary_path_completes_to_nothing() {
        let t = p2(2).unwrap();
        for side in [Side::Positive, Side::Negative] {
            let b = boundary_path(&t, side);
            assert_eq!(complete_path(&b, side, &t), vec![Vec::<Cell>::new()]);
        }
    }

    #[test]
    fn conic_completions() {
        let t = p2(2).unwrap();
        let paths = enumerate_paths(&t);
        assert_eq!(paths.len(), 1);
        let pos = complete_path(&paths[0], Side::Positive, &t);
        let neg = complete_path(&paths[0], Side::Negative, &t);
        let total: i64 = pos
            .iter()
            .flat_map(|l| neg.iter().map(move |r| (l, r)))
            .map(|(l, r)| l.iter().chain(r).filter(|c| c.is_triangle()).map(|c| c.double_area()).product::<i64>())
            .sum();
        assert_eq!(total, 1);
    }

    fn leaf_mults(leaves: &[Vec<Cell>]) -> Vec<String> {
        let mut out: Vec<String> = leaves
            .iter()
            .map(|l| l.iter().filter_map(|c| c.vertex_mult()).product::<crate::gw::GwElement>().to_string())
            .collect();
        out.sort();
        out
    }

    #[test]
    fn turn_order_gives_same_completions_for_conics() {
        let poly = p2(2).unwrap();
        for path in enumerate_paths(&poly) {
            for side in [Side::Positive, Side::Negative] {
                let mut first = complete_path_with(&path, side, &poly, TurnOrder::First);
                let mut last = complete_path_with(&path, side, &poly, TurnOrder::Last);
                first.sort();
                last.sort();
                assert_eq!(first, last);
            }
        }
    }

    #[test]
    fn turn_order_preserves_completion_multiplicities() {
        for poly in [p2(3).unwrap(), preset("BlF1").unwrap(), preset("F1_4_2E").unwrap()] {
            for path in enumerate_paths(&poly) {
                for side in [Side::Positive, Side::Negative] {
                    let first = complete_path_with(&path, side, &poly, TurnOrder::First);
                    let last = complete_path_with(&path, side, &poly, TurnOrder::Last);
                    assert_eq!(leaf_mults(&first), leaf_mults(&last), "path {:?}", path.points());
                }
            }
        }
    }

    #[test]
    fn turn_order_can_change_cubic_leaves() {
        let poly = p2(3).unwrap();
        let differs = enumerate_paths(&poly).iter().any(|path| {
            let mut first = complete_path_with(path, Side::Positive, &poly, TurnOrder::First);
            let mut last = complete_path_with(path, Side::Positive, &poly, TurnOrder::Last);
            first.sort();
            last.sort();
            first != last
        });
        assert!(differs);
    }
}
