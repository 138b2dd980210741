//! Real counts read off the tables: signatures for every sign pattern of the `c_i`.

use std::collections::BTreeMap;

use gwcurves::poly::ExtensionSign;
use gwcurves::wallcross::{build_tables, SurfaceChain};

fn main() -> gwcurves::Result<()> {
    let tables = build_tables(&SurfaceChain::quartic())?;
    let plane = &tables[0];
    println!("s  all c<0  all c>0  c_1<0 only");
    for row in &plane.rows {
        let with = |f: &dyn Fn(u32) -> ExtensionSign| -> gwcurves::Result<i64> {
            let signs: BTreeMap<u32, ExtensionSign> = row.value.indices().into_iter().map(|i| (i, f(i))).collect();
            row.value.signature_profile(&signs)
        };
        let neg = with(&|_| ExtensionSign::Negative)?;
        let pos = with(&|_| ExtensionSign::Positive)?;
        let first = with(&|i| if i == 1 { ExtensionSign::Negative } else { ExtensionSign::Positive })?;
        println!("{}  {neg:>8}  {pos:>7}  {first:>10}", row.s);
    }
    Ok(())
}
