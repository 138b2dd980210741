//! Arithmetic in GW(Q): parsing, ring operations and deciding equality.

use gwcurves::gw::{gw_equal, hilbert_symbol, Place};
use gwcurves::notation::parse_gw_element;
use gwcurves::{GwElement, Rational};

fn main() -> gwcurves::Result<()> {
    let a = parse_gw_element("<2> + <3>")?;
    let b = parse_gw_element("<5> + <30>")?;
    println!("a = {a}, b = {b}");
    println!("a + b = {}", &a + &b);
    println!("a * b = {}", &a * &b);
    println!("rank {}  signature {}  discriminant {}", a.rank(), a.signature(), a.discriminant()?);
    println!("a == b in GW(Q): {}", gw_equal(&a, &b));

    // <1> + <1> and <2> + <2> are isometric, <1> + <1> and <3> + <3> are not
    let two = GwElement::one().scale(2);
    for other in ["<2> + <2>", "<3> + <3>", "<5> + <5>"] {
        let o = parse_gw_element(other)?;
        println!("2<1> == {other}: {}", gw_equal(&two, &o));
    }

    let three = parse_gw_element("<3> + <3>")?;
    for p in [2, 3, 5, 7] {
        let place = Place::prime(p)?;
        println!("Hasse invariant of <3> + <3> at {p}: {}", three.hasse_invariant(place)?);
    }
    let (x, y) = (Rational::from_integer(-1), Rational::from_integer(-1));
    println!("(-1, -1) at infinity: {}", hilbert_symbol(x, y, Place::Infinity)?);

    let v = parse_gw_element("<2> + <-2> + <5> + <5>")?;
    println!("{v} simplifies to {}", v.simplify());
    Ok(())
}
