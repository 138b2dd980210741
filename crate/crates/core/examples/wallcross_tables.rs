//! Invariants of the quartic chain with any number of conjugate pairs.

use gwcurves::wallcross::{build_tables, SurfaceChain};

fn main() -> gwcurves::Result<()> {
    for table in build_tables(&SurfaceChain::quartic())? {
        println!("{}", table.to_markdown());
    }
    Ok(())
}
