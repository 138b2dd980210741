//! Marked subdivisions and their structural checks.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::cell::Cell;
use super::paths::LatticePath;
use crate::gw::GwElement;
use crate::newton::{LatticePoint, LatticePolygon};

/// A dual subdivision together with the lattice path that produced it.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct MarkedSubdivision {
    path: LatticePath,
    cells: Vec<Cell>,
}

/// Why a glued candidate is not a simple irreducible rational curve.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Defect {
    /// Cells overlap, leave gaps, or meet along partial edges.
    Tiling(String),
    /// A path step is not an edge of the subdivision.
    PathOffGrid,
    /// An end of the curve has weight greater than one.
    HeavyEnd { length: i64 },
    /// The dual graph has several connected components.
    Reducible { components: usize },
    /// The dual graph is connected but has cycles.
    PositiveGenus { betti: usize },
}

impl fmt::Display for Defect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Defect::Tiling(msg) => write!(f, "tiling: {msg}"),
            Defect::PathOffGrid => write!(f, "path step is not an edge of the subdivision"),
            Defect::HeavyEnd { length } => write!(f, "unbounded end of weight {length}"),
            Defect::Reducible { components } => write!(f, "reducible: {components} components"),
            Defect::PositiveGenus { betti } => write!(f, "first Betti number {betti}"),
        }
    }
}

/// Summary of the dual graph of a subdivision.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DualGraph {
    pub vertices: usize,
    pub bounded_edges: usize,
    pub ends: usize,
    pub components: usize,
}

impl DualGraph {
    pub fn betti(&self) -> usize {
        (self.bounded_edges + self.components).saturating_sub(self.vertices)
    }
}

fn seg(a: LatticePoint, b: LatticePoint) -> (LatticePoint, LatticePoint) {
    if a <= b {
        (a, b)
    } else {
        (b, a)
    }
}

struct UnionFind(Vec<usize>);

impl UnionFind {
    fn find(&mut self, i: usize) -> usize {
        let mut r = i;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut i = i;
        while self.0[i] != r {
            let next = self.0[i];
            self.0[i] = r;
            i = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.0[ra] = rb;
        }
    }
}

impl MarkedSubdivision {
    pub fn new(path: LatticePath, mut cells: Vec<Cell>) -> Self {
        cells.sort();
        MarkedSubdivision { path, cells }
    }

    pub fn path(&self) -> &LatticePath {
        &self.path
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn triangles(&self) -> impl Iterator<Item = &Cell> {
        self.cells.iter().filter(|c| c.is_triangle())
    }

    /// Every cell edge with the cells using it.
    fn edge_map(&self) -> BTreeMap<(LatticePoint, LatticePoint), Vec<(usize, usize)>> {
        let mut map: BTreeMap<_, Vec<(usize, usize)>> = BTreeMap::new();
        for (ci, cell) in self.cells.iter().enumerate() {
            for (ei, (a, b)) in cell.edges().into_iter().enumerate() {
                map.entry(seg(a, b)).or_default().push((ci, ei));
            }
        }
        map
    }

    /// Checks that the cells tile `poly` edge-to-edge.
    pub fn check_tiling(&self, poly: &LatticePolygon) -> Result<(), Defect> {
        let area: i64 = self.cells.iter().map(|c| c.double_area()).sum();
        if area != poly.double_area() {
            return Err(Defect::Tiling(format!("cell area {area} != polygon area {}", poly.double_area())));
        }
        for cell in &self.cells {
            if let Some(v) = cell.vertices().iter().find(|&&v| !poly.contains(v)) {
                return Err(Defect::Tiling(format!("corner {v} of {cell} lies outside")));
            }
        }
        for (&(a, b), users) in &self.edge_map() {
            let on_boundary = poly.segment_on_boundary(a, b);
            let expected = if on_boundary { 1 } else { 2 };
            if users.len() != expected {
                return Err(Defect::Tiling(format!("edge {a}-{b} used by {} cells, expected {expected}", users.len())));
            }
        }
        Ok(())
    }

    /// Builds the dual graph: triangles are vertices, chains of cell edges
    /// threaded straight through parallelograms are edges or ends.
    pub fn dual_graph(&self) -> DualGraph {
        let map = self.edge_map();
        let tri_index: BTreeMap<usize, usize> = self
            .cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.is_triangle())
            .enumerate()
            .map(|(k, (ci, _))| (ci, k))
            .collect();
        let n_tri = tri_index.len();
        // extra union-find slots for chains that never reach a triangle
        let mut uf = UnionFind((0..n_tri + map.len()).collect());
        let seg_ids: BTreeMap<_, usize> = map.keys().enumerate().map(|(i, s)| (*s, i)).collect();
        let mut bounded = 0usize;
        let mut ends = 0usize;
        let mut seen_chain = vec![false; map.len()];

        // walk from a segment through parallelograms until a triangle or the boundary
        let walk = |start_cell: usize, start_edge: usize| -> (Vec<usize>, Option<usize>) {
            let mut visited = Vec::new();
            let (mut ci, mut ei) = (start_cell, start_edge);
            loop {
                let (a, b) = self.cells[ci].edges()[ei];
                let s = seg(a, b);
                visited.push(seg_ids[&s]);
                let next = map[&s].iter().copied().find(|&(c, _)| c != ci);
                match next {
                    None => return (visited, None),
                    Some((nc, ne)) => {
                        if self.cells[nc].is_triangle() {
                            return (visited, Some(nc));
                        }
                        ci = nc;
                        ei = (ne + 2) % 4;
                    }
                }
            }
        };

        for (&ci, &k) in &tri_index {
            for ei in 0..3 {
                let (visited, end) = walk(ci, ei);
                match end {
                    None => ends += 1,
                    Some(other) => {
                        bounded += 1;
                        uf.union(k, tri_index[&other]);
                    }
                }
                for s in visited {
                    seen_chain[s] = true;
                }
            }
        }
        // every bounded edge was walked from both of its triangles
        bounded /= 2;

        // straight components made of parallelograms only
        let mut lone = 0usize;
        for (ci, cell) in self.cells.iter().enumerate() {
            if cell.is_triangle() {
                continue;
            }
            for ei in 0..4 {
                let (a, b) = cell.edges()[ei];
                let id = seg_ids[&seg(a, b)];
                if seen_chain[id] {
                    continue;
                }
                let (visited, _) = walk(ci, ei);
                let (back, _) = walk(ci, (ei + 2) % 4);
                for s in visited.into_iter().chain(back) {
                    seen_chain[s] = true;
                }
                lone += 1;
            }
        }

        let mut roots: Vec<usize> = (0..n_tri).map(|k| uf.find(k)).collect();
        roots.sort_unstable();
        roots.dedup();
        DualGraph { vertices: n_tri, bounded_edges: bounded, ends, components: roots.len() + lone }
    }

    /// Full structural check for a simple irreducible rational curve with
    /// weight-one ends.
    pub fn validate(&self, poly: &LatticePolygon) -> Result<DualGraph, Defect> {
        self.check_tiling(poly)?;
        let map = self.edge_map();
        if self.path.segments().any(|(a, b)| !map.contains_key(&seg(a, b))) {
            return Err(Defect::PathOffGrid);
        }
        for &(a, b) in map.keys() {
            if poly.segment_on_boundary(a, b) {
                let length = (b - a).lattice_length();
                if length != 1 {
                    return Err(Defect::HeavyEnd { length });
                }
            }
        }
        let graph = self.dual_graph();
        if graph.components != 1 {
            return Err(Defect::Reducible { components: graph.components });
        }
        if graph.betti() != 0 {
            return Err(Defect::PositiveGenus { betti: graph.betti() });
        }
        Ok(graph)
    }
}

/// Motivic, complex and real multiplicity of one curve.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct MultiplicityBundle {
    pub motivic: GwElement,
    pub complex: i64,
    pub welschinger: i64,
}

/// Product of the vertex multiplicities; complex and Welschinger
/// multiplicities are its rank and signature.
pub fn curve_mult(s: &MarkedSubdivision) -> MultiplicityBundle {
    let motivic: GwElement = s.triangles().map(|t| t.vertex_mult().expect("triangle")).product();
    let complex = motivic.rank();
    let welschinger = motivic.signature();
    debug_assert_eq!(complex, s.triangles().map(|t| t.double_area()).product::<i64>());
    debug_assert_eq!(welschinger, s.triangles().map(|t| t.vertex_mult().unwrap().signature()).product::<i64>());
    MultiplicityBundle { motivic, complex, welschinger }
}
