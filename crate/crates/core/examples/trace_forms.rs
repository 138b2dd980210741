//! Trace forms of quadratic extensions and the wall-crossing correction `delta`.

use gwcurves::gw::{beta, delta, trace_form, QuadraticElement};
use gwcurves::Rational;

fn main() -> gwcurves::Result<()> {
    let q = |n| Rational::from_integer(n);
    for (c, a, b) in [(-1, 1, 0), (5, 0, 1), (2, 3, 1), (-7, 1, 2)] {
        let alpha = QuadraticElement::new(c, q(a), q(b))?;
        let t = trace_form(&alpha);
        println!("Tr <{a} + {b}*sqrt({c})> = {t}   (rank {}, signature {})", t.rank(), t.signature());
    }
    for c in [-3, -1, 2, 5] {
        let d = delta(c)?;
        println!("c = {c:>2}: beta = {}, delta = {d}, signature {}", beta(c)?, d.signature());
    }
    Ok(())
}
