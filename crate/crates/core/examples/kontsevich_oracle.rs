//! Compares the tropical complex counts with Kontsevich's recursion.

use gwcurves::newton::p2;
use gwcurves::tropical::count_invariants;
use gwcurves::wallcross::kontsevich_nd;

fn main() -> gwcurves::Result<()> {
    for d in 1..=4 {
        let tropical = count_invariants(&p2(d)?)?.complex;
        println!("d={d}: tropical {tropical}, recursion {}", kontsevich_nd(d as u32)?);
    }
    for d in 5..=10 {
        println!("d={d}: recursion {}", kontsevich_nd(d)?);
    }
    Ok(())
}
