//! Wall crossing: trading two rational point conditions for one conjugate
//! pair over `Q(√c)` changes the invariant by `(b - 2<1>)` times the
//! invariant of the blow-up in the class `D - 2E`.
//!
//! Starting from the tropical counts of a chain of corner chops, the
//! recursion fills one table per polygon with rows `s = 0, 1, ...`, where
//! row `s` is the invariant for a configuration with `s` conjugate pairs.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gw::GwElement;
use crate::newton::{self, LatticePolygon};
use crate::poly::BetaPolynomial;
use crate::tropical::{count_invariants, count_invariants_with, EnumerationOptions, TropicalCount};

/// The chain of polygons `Δ_0, ..., Δ_g` obtained by chopping a depth-2
/// corner at each step, ending at a polygon without interior points.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SurfaceChain {
    polygons: Vec<LatticePolygon>,
}

fn chops_to(from: &LatticePolygon, to: &LatticePolygon) -> bool {
    from.vertices().iter().filter_map(|&v| from.chop_corner(v, 2).ok()).any(|p| p.is_lattice_equivalent(to))
}

impl SurfaceChain {
    /// Validates an explicit chain.
    pub fn new(polygons: Vec<LatticePolygon>) -> Result<Self> {
        let first = polygons.first().ok_or_else(|| Error::BadChain("empty chain".into()))?;
        let g = first.interior_count();
        if polygons.len() as i64 != g + 1 {
            return Err(Error::BadChain(format!(
                "{} polygons given but the first has {g} interior points",
                polygons.len()
            )));
        }
        for (j, w) in polygons.windows(2).enumerate() {
            if w[1].point_budget() != w[0].point_budget() - 2 {
                return Err(Error::BadChain(format!("point budget does not drop by 2 at step {j}")));
            }
            if !chops_to(&w[0], &w[1]) {
                return Err(Error::BadChain(format!("step {j} is not a depth-2 corner chop")));
            }
        }
        if polygons.last().unwrap().interior_count() != 0 {
            return Err(Error::BadChain("last polygon has interior points".into()));
        }
        Ok(SurfaceChain { polygons })
    }

    /// Builds a chain from `start` by repeatedly chopping the first corner
    /// whose depth-2 chop leaves a smooth polygon.
    pub fn from_start(start: LatticePolygon) -> Result<Self> {
        fn extend(chain: &mut Vec<LatticePolygon>) -> bool {
            let last = chain.last().unwrap().clone();
            if last.interior_count() == 0 {
                return true;
            }
            for &v in last.vertices() {
                if let Some(next) = last.chop_corner(v, 2).ok().filter(LatticePolygon::is_smooth) {
                    chain.push(next);
                    if extend(chain) {
                        return true;
                    }
                    chain.pop();
                }
            }
            false
        }
        let mut polygons = vec![start];
        if !extend(&mut polygons) {
            return Err(Error::BadChain(format!("no chop sequence from {} reaches an empty interior", polygons[0])));
        }
        SurfaceChain::new(polygons)
    }

    /// The degree-4 plane chain through the named blow-up polygons:
    /// `p2:4`, `F1_4_2E`, `BlF1`, `Bl2F1`.
    pub fn quartic() -> Self {
        let polygons =
            ["p2:4", "F1_4_2E", "BlF1", "Bl2F1"].iter().map(|n| newton::preset(n).expect("preset")).collect();
        SurfaceChain::new(polygons).expect("quartic chain")
    }

    /// Parses a chain description: a comma-separated list of presets, or a
    /// single preset. A single preset on the quartic chain selects its tail;
    /// any other start is extended greedily.
    pub fn parse(text: &str) -> Result<Self> {
        let names: Vec<&str> = text.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
        match names.as_slice() {
            [] => Err(Error::BadChain("empty chain".into())),
            [one] => {
                let start = newton::preset(one)?;
                let quartic = SurfaceChain::quartic();
                match quartic.polygons.iter().position(|p| *p == start) {
                    Some(i) => Ok(SurfaceChain { polygons: quartic.polygons[i..].to_vec() }),
                    None => SurfaceChain::from_start(start),
                }
            }
            many => SurfaceChain::new(many.iter().map(|n| newton::preset(n)).collect::<Result<_>>()?),
        }
    }

    pub fn polygons(&self) -> &[LatticePolygon] {
        &self.polygons
    }

    pub fn len(&self) -> usize {
        self.polygons.len()
    }

    pub fn is_empty(&self) -> bool {
        self.polygons.is_empty()
    }
}

/// The table of invariants of one polygon, one row per number of conjugate pairs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantTable {
    pub polygon: LatticePolygon,
    pub rows: Vec<TableRow>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TableRow {
    pub s: u32,
    pub value: BetaPolynomial,
}

impl InvariantTable {
    pub fn row(&self, s: u32) -> Option<&BetaPolynomial> {
        self.rows.get(s as usize).map(|r| &r.value)
    }

    pub fn max_s(&self) -> u32 {
        self.rows.len().saturating_sub(1) as u32
    }

    /// Markdown rendering in `h`, `⟨1⟩`, `β_i` notation.
    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let title = polygon_label(&self.polygon);
        let _ = writeln!(out, "### {title}\n");
        let _ = writeln!(out, "| s | N |");
        let _ = writeln!(out, "|---|---|");
        for row in &self.rows {
            let _ = writeln!(out, "| {} | {} |", row.s, row.value.to_unicode());
        }
        out
    }
}

/// A readable name for a polygon: a matching preset name if there is one.
pub fn polygon_label(poly: &LatticePolygon) -> String {
    for name in ["F1_4_2E", "BlF1", "Bl2F1"] {
        if newton::preset(name).is_ok_and(|p| p == *poly) {
            return format!("{name} {poly}");
        }
    }
    let verts = poly.vertices();
    if verts.len() == 3 {
        let d = verts[1].x - verts[0].x;
        if newton::p2(d).is_ok_and(|p| p == *poly) {
            return format!("p2:{d} {poly}");
        }
    }
    poly.to_string()
}

/// The invariant of an all-rational configuration, from the tropical count.
pub fn base_invariant(poly: &LatticePolygon) -> Result<GwElement> {
    Ok(count_invariants(poly)?.motivic)
}

/// `N_X(P_{s+1}) = N_X(P_s) + (b_{next} - 2<1>) * N_blowup(P_s)`, with
/// hyperbolic multiples folded into the constant term.
pub fn wall_cross_step(n_x: &BetaPolynomial, n_blow: &BetaPolynomial, next_index: u32) -> Result<BetaPolynomial> {
    if n_x.indices().contains(&next_index) {
        return Err(Error::IndexCollision(next_index));
    }
    let step = n_blow.mul_step(next_index)?;
    Ok((n_x + &step).reduce_hyperbolic())
}

/// Runs the recursion over a chain whose base invariants are already known.
pub fn build_tables_from_bases(chain: &SurfaceChain, bases: &[GwElement]) -> Result<Vec<InvariantTable>> {
    if bases.len() != chain.len() {
        return Err(Error::BadChain(format!("{} base invariants for {} polygons", bases.len(), chain.len())));
    }
    let mut below: Option<Vec<BetaPolynomial>> = None;
    let mut tables = Vec::with_capacity(chain.len());
    for (poly, base) in chain.polygons.iter().zip(bases).rev() {
        let s_max = (poly.point_budget() / 2) as usize;
        let mut rows = vec![BetaPolynomial::constant(base.clone()).reduce_hyperbolic()];
        for s in 0..s_max {
            let next = match &below {
                None => rows[s].clone(),
                Some(b) => {
                    let blow =
                        b.get(s).ok_or_else(|| Error::BadChain(format!("blow-up table has no row {s} for {poly}")))?;
                    wall_cross_step(&rows[s], blow, s as u32 + 1)?
                }
            };
            rows.push(next);
        }
        tables.push(InvariantTable {
            polygon: poly.clone(),
            rows: rows.iter().enumerate().map(|(s, v)| TableRow { s: s as u32, value: v.clone() }).collect(),
        });
        below = Some(rows);
    }
    tables.reverse();
    Ok(tables)
}

/// Tropical base counts for every polygon of the chain, in parallel.
pub fn chain_counts(chain: &SurfaceChain) -> Result<Vec<TropicalCount>> {
    chain.polygons.par_iter().map(count_invariants).collect()
}

pub fn chain_counts_with(chain: &SurfaceChain, opts: EnumerationOptions) -> Result<Vec<TropicalCount>> {
    match opts.threads {
        None => chain_counts(chain),
        Some(_) => chain.polygons.iter().map(|p| count_invariants_with(p, opts)).collect(),
    }
}

/// All tables of a chain, first polygon first.
pub fn build_tables(chain: &SurfaceChain) -> Result<Vec<InvariantTable>> {
    build_tables_with(chain, EnumerationOptions::default())
}

pub fn build_tables_with(chain: &SurfaceChain, opts: EnumerationOptions) -> Result<Vec<InvariantTable>> {
    let bases: Vec<GwElement> = chain_counts_with(chain, opts)?.into_iter().map(|c| c.motivic).collect();
    build_tables_from_bases(chain, &bases)
}

fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Kontsevich's number of rational plane curves of degree `d` through
/// `3d - 1` general points.
pub fn kontsevich_nd(d: u32) -> Result<BigInt> {
    if d < 1 {
        return Err(Error::BadDegree);
    }
    let mut n: Vec<BigInt> = vec![BigInt::zero(), BigInt::one()];
    for d in 2..=d as i64 {
        let mut total = BigInt::zero();
        for a in 1..d {
            let b = d - a;
            let weight = BigInt::from(a * a * b)
                * (BigInt::from(b) * binomial(3 * d - 4, 3 * a - 2) - BigInt::from(a) * binomial(3 * d - 4, 3 * a - 1));
            total += &n[a as usize] * &n[b as usize] * weight;
        }
        n.push(total);
    }
    Ok(n.swap_remove(d as usize))
}
