//! A polygon given by coordinates: its invariant and a greedily chopped chain.

use gwcurves::newton::LatticePolygon;
use gwcurves::tropical::count_invariants;
use gwcurves::wallcross::{build_tables, SurfaceChain};

fn main() -> gwcurves::Result<()> {
    let hexagon = LatticePolygon::from_coords(&[(1, 0), (2, 0), (2, 1), (1, 2), (0, 2), (0, 1)])?;
    let square = LatticePolygon::from_coords(&[(0, 0), (2, 0), (2, 2), (0, 2)])?;
    for poly in [hexagon, square] {
        let c = count_invariants(&poly)?;
        println!("{poly}: {}  N={}  W={}", c.normal_form, c.complex, c.welschinger);
        match SurfaceChain::from_start(poly) {
            Ok(chain) => {
                for t in build_tables(&chain)? {
                    print!("{}", t.to_markdown());
                }
            }
            Err(e) => println!("no chain: {e}"),
        }
        println!();
    }
    Ok(())
}
