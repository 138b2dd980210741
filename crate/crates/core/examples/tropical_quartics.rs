//! Enumerates the tropical rational quartics through 11 stretched points.

use gwcurves::newton::preset;
use gwcurves::tropical::enumerate_curves;

fn main() -> gwcurves::Result<()> {
    let poly = preset("p2:4")?;
    let e = enumerate_curves(&poly);
    let count = e.count()?;
    println!("{poly}: {} curves, {} reducible completions set aside", e.curves.len(), e.rejected.reducible.len());
    println!("multiplicities:");
    for (mult, n) in e.multiplicity_histogram() {
        println!("  {n:>4} x {mult}");
    }
    println!("sum {}  =  {}", count.motivic, count.normal_form);
    println!("complex count {}, Welschinger count {}", count.complex, count.welschinger);
    Ok(())
}
