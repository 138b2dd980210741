//! Writes the dual subdivisions of the rational cubics as an SVG file.
//!
//! `cargo run --example svg_figures -- out.svg`

use gwcurves::newton::preset;
use gwcurves::tropical::enumerate_curves;
use gwcurves::tropical::svg::{render_subdivisions, SvgOptions};

fn main() -> Result<(), Box<dyn std::error::Error>> {
    let out = std::env::args().nth(1).unwrap_or_else(|| "cubics.svg".into());
    let poly = preset("p2:3")?;
    let e = enumerate_curves(&poly);
    let subs: Vec<_> = e.curves.iter().map(|c| &c.subdivision).collect();
    std::fs::write(&out, render_subdivisions(&poly, &subs, &SvgOptions::default()))?;
    println!("wrote {} subdivisions to {out}", subs.len());
    Ok(())
}
