//! Local invariants over Q and the Hasse-Minkowski equality test.

use std::collections::BTreeSet;
use std::fmt;

use super::{is_prime, prime_factors, GwElement, Rational, SquareClass};
use crate::error::{Error, Result};

/// A place of Q.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Infinity,
    Prime(u64),
}

impl Place {
    pub fn prime(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Place::Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Infinity => write!(f, "inf"),
            Place::Prime(p) => write!(f, "{p}"),
        }
    }
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1u64 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = (acc as u128 * base as u128 % m as u128) as u64;
        }
        base = (base as u128 * base as u128 % m as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// Legendre symbol of a unit `u` modulo an odd prime `p`, by Euler's criterion.
fn legendre(u: i64, p: u64) -> i8 {
    let r = u.rem_euclid(p as i64) as u64;
    debug_assert!(r != 0);
    if pow_mod(r, (p - 1) / 2, p) == 1 {
        1
    } else {
        -1
    }
}

/// Splits a squarefree integer as `p^v * u` with `v` in {0, 1}.
fn split_at(n: i64, p: u64) -> (u32, i64) {
    let p = p as i64;
    if n % p == 0 {
        (1, n / p)
    } else {
        (0, n)
    }
}

/// Hilbert symbol of two square classes.
pub(crate) fn hilbert_classes(a: SquareClass, b: SquareClass, place: Place) -> i8 {
    let (a, b) = (a.rep(), b.rep());
    match place {
        Place::Infinity => {
            if a < 0 && b < 0 {
                -1
            } else {
                1
            }
        }
        Place::Prime(2) => {
            let (alpha, u) = split_at(a, 2);
            let (beta, v) = split_at(b, 2);
            let eps = |x: i64| ((x.rem_euclid(4) - 1) / 2) as u32;
            let omega = |x: i64| {
                let r = x.rem_euclid(8);
                u32::from(r == 3 || r == 5)
            };
            let e = eps(u) * eps(v) + alpha * omega(v) + beta * omega(u);
            if e % 2 == 0 {
                1
            } else {
                -1
            }
        }
        Place::Prime(p) => {
            let (alpha, u) = split_at(a, p);
            let (beta, v) = split_at(b, p);
            let mut s: i8 = 1;
            if alpha * beta % 2 == 1 && (p - 1) / 2 % 2 == 1 {
                s = -s;
            }
            if beta == 1 {
                s *= legendre(u, p);
            }
            if alpha == 1 {
                s *= legendre(v, p);
            }
            s
        }
    }
}

/// Hilbert symbol `(a, b)_v`: `+1` iff `z^2 = a x^2 + b y^2` has a nontrivial
/// solution over the completion of Q at `place`.
pub fn hilbert_symbol(a: Rational, b: Rational, place: Place) -> Result<i8> {
    Ok(hilbert_classes(SquareClass::of(a)?, SquareClass::of(b)?, place))
}

fn hasse_unchecked(q: &GwElement, place: Place) -> i8 {
    let terms: Vec<(SquareClass, i64)> = q.terms().collect();
    let mut s: i8 = 1;
    for (i, &(a, ka)) in terms.iter().enumerate() {
        // pairs inside one class: C(ka, 2) copies of (a, a)
        if (ka * (ka - 1) / 2) % 2 == 1 {
            s *= hilbert_classes(a, a, place);
        }
        for &(b, kb) in &terms[i + 1..] {
            if (ka * kb) % 2 == 1 {
                s *= hilbert_classes(a, b, place);
            }
        }
    }
    s
}

/// Product of pairwise Hilbert symbols of the diagonal entries.
pub(crate) fn hasse_invariant(q: &GwElement, place: Place) -> Result<i8> {
    if let Some((class, coeff)) = q.terms().find(|&(_, k)| k < 0) {
        return Err(Error::VirtualForm { class: class.rep(), coeff });
    }
    Ok(hasse_unchecked(q, place))
}

/// Places where two effective forms might differ: infinity, 2, and every
/// odd prime dividing an entry.
fn relevant_places(a: &GwElement, b: &GwElement) -> BTreeSet<Place> {
    let mut out = BTreeSet::from([Place::Infinity, Place::Prime(2)]);
    for (class, _) in a.terms().chain(b.terms()) {
        for p in prime_factors(class.rep().unsigned_abs()) {
            out.insert(Place::Prime(p));
        }
    }
    out
}

/// Isometry of two effective forms of the same rank (Hasse-Minkowski).
fn isometric(a: &GwElement, b: &GwElement) -> bool {
    debug_assert!(a.is_effective() && b.is_effective());
    if a.rank() != b.rank() || a.signature() != b.signature() {
        return false;
    }
    if a.discriminant().ok() != b.discriminant().ok() {
        return false;
    }
    relevant_places(a, b).into_iter().all(|v| hasse_unchecked(a, v) == hasse_unchecked(b, v))
}

pub(crate) fn gw_equal(x: &GwElement, y: &GwElement) -> bool {
    if x.rank() != y.rank() {
        return false;
    }
    // x+ - x- = y+ - y-  <=>  x+ + y- = y+ + x-, both sides effective
    let (xp, xn) = x.split_signs();
    let (yp, yn) = y.split_signs();
    isometric(&(&xp + &yn), &(&yp + &xn))
}
