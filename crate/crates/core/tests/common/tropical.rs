//! Structural checks on emitted tropical curves.

use gwcurves::newton::LatticePolygon;
use gwcurves::tropical::{Cell, Curve, MarkedSubdivision};

/// Point-in-cell test at a non-lattice sample point, in coordinates scaled by `den`.
fn strictly_contains(cell: &Cell, px: i64, py: i64, den: i64) -> bool {
    let v = cell.vertices();
    (0..v.len()).all(|i| {
        let (a, b) = (v[i], v[(i + 1) % v.len()]);
        let cross = (b.x - a.x) * (py - a.y * den) - (b.y - a.y) * (px - a.x * den);
        cross > 0
    })
}

/// Every generic sample point of the polygon lies in exactly one cell.
pub fn check_tiling_by_sampling(poly: &LatticePolygon, sub: &MarkedSubdivision) {
    let den = 1009;
    let (lo, hi) = poly.bounds();
    for x in lo.x..hi.x {
        for y in lo.y..hi.y {
            for (fx, fy) in [(137, 421), (613, 89), (877, 555), (301, 950)] {
                let (px, py) = (x * den + fx, y * den + fy);
                let inside = poly.vertices().iter().enumerate().all(|(i, &a)| {
                    let b = poly.vertices()[(i + 1) % poly.vertices().len()];
                    (b.x - a.x) * (py - a.y * den) - (b.y - a.y) * (px - a.x * den) > 0
                });
                let hits = sub.cells().iter().filter(|c| strictly_contains(c, px, py, den)).count();
                assert_eq!(hits, usize::from(inside), "sample ({px}/{den}, {py}/{den})");
            }
        }
    }
}

pub fn check_curve(name: &str, poly: &LatticePolygon, curve: &Curve) {
    let sub = &curve.subdivision;
    sub.validate(poly).unwrap_or_else(|d| panic!("{name}: {d}"));
    check_tiling_by_sampling(poly, sub);
    let area: i64 = sub.cells().iter().map(|c| c.double_area()).sum();
    assert_eq!(area, poly.double_area());

    // a trivalent tree with #∂ weight-one ends has #∂ - 2 vertices
    let graph = sub.dual_graph();
    let boundary = poly.boundary_count() as usize;
    assert_eq!(graph.ends, boundary, "{name}: ends");
    assert_eq!(graph.vertices + 2, boundary, "{name}: vertices");
    assert_eq!(graph.bounded_edges + 1, graph.vertices, "{name}: bounded edges");
    assert_eq!(graph.components, 1);

    for cell in sub.cells() {
        if !cell.is_triangle() {
            let v = cell.vertices();
            assert_eq!(v[1] - v[0], v[2] - v[3], "{name}: parallelogram {cell}");
        }
    }

    let m = &curve.multiplicity;
    let triangles: Vec<&Cell> = sub.triangles().collect();
    assert_eq!(m.complex, m.motivic.rank());
    assert_eq!(m.welschinger, m.motivic.signature());
    assert_eq!(m.complex, triangles.iter().map(|t| t.double_area()).product::<i64>());
    let any_even = triangles.iter().any(|t| t.edge_lengths().iter().any(|l| l % 2 == 0));
    let want_sig =
        if any_even { 0 } else { triangles.iter().map(|t| if t.interior_count() % 2 == 0 { 1 } else { -1 }).product() };
    assert_eq!(m.welschinger, want_sig, "{name}: signature rule");
}
