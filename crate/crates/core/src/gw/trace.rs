//! Trace forms from quadratic extensions Q(sqrt c).

use num_traits::Zero;

use super::{GwElement, Rational, SquareClass};
use crate::error::{Error, Result};

/// A nonzero element `a + b*sqrt(c)` of Q(sqrt c).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct QuadraticElement {
    c: i64,
    a: Rational,
    b: Rational,
}

impl QuadraticElement {
    /// `c` must be squarefree and different from 0 and 1.
    pub fn new(c: i64, a: Rational, b: Rational) -> Result<Self> {
        match SquareClass::of_int(c) {
            Ok(class) if class.rep() == c && c != 1 => {}
            _ => return Err(Error::BadExtension(c)),
        }
        if a.is_zero() && b.is_zero() {
            return Err(Error::ZeroTrace);
        }
        Ok(QuadraticElement { c, a, b })
    }

    pub fn c(&self) -> i64 {
        self.c
    }

    pub fn a(&self) -> Rational {
        self.a
    }

    pub fn b(&self) -> Rational {
        self.b
    }

    /// `a^2 - b^2 c`, nonzero because `c` is not a square.
    pub fn norm(&self) -> Rational {
        self.a * self.a - self.b * self.b * Rational::from_integer(self.c)
    }
}

/// The trace form `x -> tr(alpha x^2)` of `alpha` over Q.
///
/// On the basis `{1, sqrt c}` the Gram matrix is `[[2a, 2bc], [2bc, 2ac]]`
/// with determinant `4c(a^2 - b^2 c)`. For `a != 0` it diagonalizes to
/// `<2a> + <2a * det>`; for `a = 0` the diagonal vanishes and the form is
/// hyperbolic.
pub fn trace_form(alpha: &QuadraticElement) -> GwElement {
    if alpha.a.is_zero() {
        return GwElement::h();
    }
    let two_a = alpha.a * Rational::from_integer(2);
    let det = Rational::from_integer(4 * alpha.c) * alpha.norm();
    let first = SquareClass::of(two_a).expect("a is nonzero");
    let second = SquareClass::of(two_a * det).expect("nondegenerate");
    GwElement::form(first) + GwElement::form(second)
}

/// `beta(c) = Tr<1> = <2> + <2c>`.
pub fn beta(c: i64) -> Result<GwElement> {
    let two = SquareClass::of_int(2)?;
    Ok(GwElement::form(two) + GwElement::form(two * SquareClass::of_int(c)?))
}

/// `delta(c) = 2<1> - beta(c)`, a rank-zero virtual form.
pub fn delta(c: i64) -> Result<GwElement> {
    Ok(GwElement::one().scale(2) - beta(c)?)
}
