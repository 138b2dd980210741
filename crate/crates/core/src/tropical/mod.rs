//! Rational tropical curves through a vertically stretched configuration,
//! enumerated by lattice paths, with their motivic multiplicities.
//!
//! Each `λ`-increasing path of `#∂Δ - 1` steps is completed on both sides
//! by the triangle/parallelogram recursion; gluing a positive and a
//! negative completion along the path gives the dual subdivision of one
//! tropical curve through the configuration. The correspondence also
//! produces reducible curves of arithmetic genus zero (for instance a line
//! together with an elliptic cubic among the plane quartics); those are
//! recognized by their disconnected dual graph and set aside.

mod cell;
mod paths;
mod subdivision;
pub mod svg;

use std::collections::BTreeMap;

use log::{debug, warn};
use rayon::prelude::*;
use serde::Serialize;

pub use cell::{vertex_mult, Cell, CellKind};
pub use paths::{
    boundary_path, complete_path, complete_path_with, enumerate_paths, lambda_cmp, lambda_sorted_points, LatticePath,
    Side, TurnOrder,
};
pub use subdivision::{curve_mult, Defect, DualGraph, MarkedSubdivision, MultiplicityBundle};

use crate::error::{Error, Result};
use crate::gw::GwElement;
use crate::newton::LatticePolygon;

/// One enumerated curve.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Curve {
    #[serde(flatten)]
    pub subdivision: MarkedSubdivision,
    #[serde(flatten)]
    pub multiplicity: MultiplicityBundle,
}

/// Candidates that were glued but are not simple irreducible rational curves.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Rejections {
    /// Disconnected dual graphs: reducible curves whose component genera
    /// add up to arithmetic genus zero.
    pub reducible: Vec<(MarkedSubdivision, Defect)>,
    /// Anything else: tiling failures, cycles, heavy ends. These indicate a
    /// bug or a violated hypothesis and should never occur.
    pub anomalies: Vec<(MarkedSubdivision, Defect)>,
}

impl Rejections {
    pub fn total(&self) -> usize {
        self.reducible.len() + self.anomalies.len()
    }
}

/// All curves of a polygon, canonically ordered.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    pub polygon: LatticePolygon,
    pub paths: usize,
    pub curves: Vec<Curve>,
    pub rejected: Rejections,
}

/// How many worker threads enumeration may use; `None` means rayon's default.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct EnumerationOptions {
    pub threads: Option<usize>,
}

impl EnumerationOptions {
    /// Reads the `GWCURVES_THREADS` environment variable.
    pub fn from_env() -> Self {
        let threads = std::env::var("GWCURVES_THREADS").ok().and_then(|v| v.trim().parse().ok()).filter(|&n| n > 0);
        EnumerationOptions { threads }
    }

    pub fn single_threaded() -> Self {
        EnumerationOptions { threads: Some(1) }
    }
}

type Candidate = std::result::Result<Curve, (MarkedSubdivision, Defect)>;

fn glue_path(poly: &LatticePolygon, path: &LatticePath) -> Vec<Candidate> {
    let pos = complete_path(path, Side::Positive, poly);
    if pos.is_empty() {
        return Vec::new();
    }
    let neg = complete_path(path, Side::Negative, poly);
    let mut out = Vec::with_capacity(pos.len() * neg.len());
    for left in &pos {
        for right in &neg {
            let cells: Vec<Cell> = left.iter().chain(right).cloned().collect();
            let sub = MarkedSubdivision::new(path.clone(), cells);
            out.push(match sub.validate(poly) {
                Ok(_) => {
                    let multiplicity = curve_mult(&sub);
                    Ok(Curve { subdivision: sub, multiplicity })
                }
                Err(defect) => Err((sub, defect)),
            });
        }
    }
    out
}

fn enumerate_inner(poly: &LatticePolygon) -> Enumeration {
    let paths = enumerate_paths(poly);
    let candidates: Vec<Candidate> = paths.par_iter().flat_map_iter(|p| glue_path(poly, p)).collect();
    let mut curves = Vec::new();
    let mut rejected = Rejections::default();
    for c in candidates {
        match c {
            Ok(curve) => curves.push(curve),
            Err((sub, defect @ Defect::Reducible { .. })) => {
                debug!("set aside reducible candidate: {defect}");
                rejected.reducible.push((sub, defect));
            }
            Err((sub, defect)) => {
                warn!("filtered candidate with path {:?}: {defect}", sub.path().points());
                rejected.anomalies.push((sub, defect));
            }
        }
    }
    curves.sort_by(|a, b| a.subdivision.cmp(&b.subdivision));
    rejected.reducible.sort();
    rejected.anomalies.sort();
    Enumeration { polygon: poly.clone(), paths: paths.len(), curves, rejected }
}

/// Enumerates every simple irreducible rational tropical curve of degree
/// `poly` through a vertically stretched configuration of `#∂ - 1` points.
pub fn enumerate_curves(poly: &LatticePolygon) -> Enumeration {
    enumerate_curves_with(poly, EnumerationOptions::default())
}

pub fn enumerate_curves_with(poly: &LatticePolygon, opts: EnumerationOptions) -> Enumeration {
    match opts.threads {
        None => enumerate_inner(poly),
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build()
            .expect("thread pool")
            .install(|| enumerate_inner(poly)),
    }
}

/// The invariant `N^{A1}` of a polygon with its rank and signature.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TropicalCount {
    /// Sum of the curve multiplicities, as stored terms.
    pub motivic: GwElement,
    /// The same class written as `a<1> + b<-1>`.
    pub normal_form: GwElement,
    /// Rank: the complex count.
    pub complex: i64,
    /// Signature: the Welschinger count.
    pub welschinger: i64,
    pub curves: usize,
    pub reducible: usize,
}

impl Enumeration {
    /// Sums the multiplicities and checks that the total only involves
    /// `<1>` and `<-1>` up to equivalence.
    pub fn count(&self) -> Result<TropicalCount> {
        if let Some((sub, defect)) = self.rejected.anomalies.first() {
            return Err(Error::InvariantViolation(format!(
                "{} candidate(s) failed structural checks; first: path {:?}: {defect}",
                self.rejected.anomalies.len(),
                sub.path().points()
            )));
        }
        let motivic: GwElement = self.curves.iter().map(|c| c.multiplicity.motivic.clone()).sum();
        let complex = motivic.rank();
        let welschinger = motivic.signature();
        let normal_form = GwElement::from_rank_signature(complex, welschinger)
            .ok_or_else(|| Error::InvariantViolation("rank and signature differ in parity".into()))?;
        if !motivic.is_equivalent(&normal_form) {
            return Err(Error::InvariantViolation(format!("{motivic} is not of the form a<1> + b<-1>")));
        }
        Ok(TropicalCount {
            motivic,
            normal_form,
            complex,
            welschinger,
            curves: self.curves.len(),
            reducible: self.rejected.reducible.len(),
        })
    }

    /// Number of curves per multiplicity class, for diagnostics.
    pub fn multiplicity_histogram(&self) -> BTreeMap<String, usize> {
        let mut out = BTreeMap::new();
        for c in &self.curves {
            *out.entry(c.multiplicity.motivic.to_string()).or_insert(0) += 1;
        }
        out
    }
}

/// Enumerates and sums: `(motivic, N, W)` for a polygon.
pub fn count_invariants(poly: &LatticePolygon) -> Result<TropicalCount> {
    enumerate_curves(poly).count()
}

pub fn count_invariants_with(poly: &LatticePolygon, opts: EnumerationOptions) -> Result<TropicalCount> {
    enumerate_curves_with(poly, opts).count()
}
