//! Arithmetic in the Grothendieck-Witt ring GW(Q).
//!
//! An element is stored as a finite integer combination of rank-one forms
//! `<a>`, one per square class. Coefficients may be negative, so virtual
//! forms such as `2<1> - <2> - <2c>` are ordinary values. Two elements with
//! different stored terms can still be equal in GW(Q); use
//! [`GwElement::is_equivalent`] to decide equality.

mod local;
mod trace;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use local::{hilbert_symbol, Place};
pub use trace::{beta, delta, trace_form, QuadraticElement};

/// Exact rationals used for form entries and extension elements.
pub type Rational = num_rational::Ratio<i64>;

/// Prime factors of `n` (with multiplicity), by trial division.
pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut p = 2u64;
    while p.saturating_mul(p) <= n {
        while n.is_multiple_of(p) {
            out.push(p);
            n /= p;
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push(n);
    }
    out
}

pub(crate) fn is_prime(n: u64) -> bool {
    n >= 2 && prime_factors(n).len() == 1
}

fn squarefree_part(n: i64) -> i64 {
    debug_assert!(n != 0);
    let mut part = 1i64;
    let factors = prime_factors(n.unsigned_abs());
    let mut i = 0;
    while i < factors.len() {
        let mut j = i;
        while j < factors.len() && factors[j] == factors[i] {
            j += 1;
        }
        if (j - i) % 2 == 1 {
            part *= factors[i] as i64;
        }
        i = j;
    }
    part * n.signum()
}

/// An element of Q*/(Q*)^2, represented by its unique squarefree integer.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct SquareClass(i64);

impl SquareClass {
    pub const ONE: SquareClass = SquareClass(1);
    pub const MINUS_ONE: SquareClass = SquareClass(-1);

    /// Square class of a nonzero integer.
    pub fn of_int(n: i64) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroSquareClass);
        }
        Ok(SquareClass(squarefree_part(n)))
    }

    /// Square class of a nonzero rational: `p/q` has the class of `p*q`.
    pub fn of(a: Rational) -> Result<Self> {
        if a.is_zero() {
            return Err(Error::ZeroSquareClass);
        }
        let num = Self::of_int(*a.numer())?;
        let den = Self::of_int(*a.denom())?;
        Ok(num * den)
    }

    /// The squarefree representative.
    pub fn rep(self) -> i64 {
        self.0
    }

    pub fn is_negative(self) -> bool {
        self.0 < 0
    }
}

impl Mul for SquareClass {
    type Output = SquareClass;

    fn mul(self, rhs: SquareClass) -> SquareClass {
        // Both sides squarefree: ab = g^2 (a/g)(b/g) with a/g, b/g coprime.
        let g = num_integer::gcd(self.0, rhs.0);
        SquareClass((self.0 / g).checked_mul(rhs.0 / g).expect("square class representative exceeds 64 bits"))
    }
}

impl<'de> Deserialize<'de> for SquareClass {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let n = i64::deserialize(d)?;
        match SquareClass::of_int(n) {
            Ok(c) if c.0 == n => Ok(c),
            _ => Err(serde::de::Error::custom(format!("{n} is not a squarefree nonzero integer"))),
        }
    }
}

impl fmt::Display for SquareClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// `sq_class`: the squarefree representative of `a` modulo squares.
pub fn sq_class(a: Rational) -> Result<SquareClass> {
    SquareClass::of(a)
}

/// A virtual diagonal form: integer-weighted multiset of square classes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GwElement {
    terms: BTreeMap<SquareClass, i64>,
}

impl GwElement {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `<1>`, the multiplicative identity.
    pub fn one() -> Self {
        Self::form(SquareClass::ONE)
    }

    /// The hyperbolic plane `h = <1> + <-1>`.
    pub fn h() -> Self {
        Self::from_terms([(SquareClass::ONE, 1), (SquareClass::MINUS_ONE, 1)])
    }

    /// The rank-one form `<a>`.
    pub fn form(class: SquareClass) -> Self {
        Self::from_terms([(class, 1)])
    }

    /// `<a>` for a nonzero rational `a`.
    pub fn diag(a: Rational) -> Result<Self> {
        Ok(Self::form(SquareClass::of(a)?))
    }

    /// `<n>` for a nonzero integer `n`.
    pub fn diag_int(n: i64) -> Result<Self> {
        Ok(Self::form(SquareClass::of_int(n)?))
    }

    pub fn from_terms<I: IntoIterator<Item = (SquareClass, i64)>>(terms: I) -> Self {
        let mut out = Self::zero();
        for (class, coeff) in terms {
            out.add_term(class, coeff);
        }
        out
    }

    fn add_term(&mut self, class: SquareClass, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let slot = self.terms.entry(class).or_insert(0);
        *slot += coeff;
        if *slot == 0 {
            self.terms.remove(&class);
        }
    }

    /// Stored terms in ascending class order; coefficients are never zero.
    pub fn terms(&self) -> impl Iterator<Item = (SquareClass, i64)> + '_ {
        self.terms.iter().map(|(&c, &k)| (c, k))
    }

    pub fn coeff(&self, class: SquareClass) -> i64 {
        self.terms.get(&class).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_effective(&self) -> bool {
        self.terms.values().all(|&k| k > 0)
    }

    pub fn scale(&self, k: i64) -> Self {
        if k == 0 {
            return Self::zero();
        }
        GwElement { terms: self.terms.iter().map(|(&c, &v)| (c, v * k)).collect() }
    }

    pub fn rank(&self) -> i64 {
        self.terms.values().sum()
    }

    /// Signature at the real place: negative classes count as -1.
    pub fn signature(&self) -> i64 {
        self.terms.iter().map(|(c, &k)| if c.is_negative() { -k } else { k }).sum()
    }

    /// Discriminant of an effective form: the class of the product of its entries.
    pub fn discriminant(&self) -> Result<SquareClass> {
        let mut disc = SquareClass::ONE;
        for (&class, &coeff) in &self.terms {
            if coeff < 0 {
                return Err(Error::VirtualForm { class: class.rep(), coeff });
            }
            if coeff % 2 == 1 {
                disc = disc * class;
            }
        }
        Ok(disc)
    }

    /// Splits the element into positive and negative parts, `self = pos - neg`.
    pub fn split_signs(&self) -> (GwElement, GwElement) {
        let mut pos = GwElement::zero();
        let mut neg = GwElement::zero();
        for (&c, &k) in &self.terms {
            if k > 0 {
                pos.terms.insert(c, k);
            } else {
                neg.terms.insert(c, -k);
            }
        }
        (pos, neg)
    }

    /// Greedy extraction of hyperbolic planes from the `<1>`/`<-1>` slots.
    ///
    /// Returns `(m, rest)` with `self = m*h + rest` as stored terms, where
    /// `rest` no longer has `<1>` and `<-1>` with the same sign.
    pub fn split_hyperbolic(&self) -> (i64, GwElement) {
        let a = self.coeff(SquareClass::ONE);
        let b = self.coeff(SquareClass::MINUS_ONE);
        let m = if a > 0 && b > 0 {
            a.min(b)
        } else if a < 0 && b < 0 {
            a.max(b)
        } else {
            0
        };
        (m, self - &GwElement::h().scale(m))
    }

    /// Moves every pair `<a> + <-a>` of equal sign into hyperbolic planes.
    ///
    /// Returns `(m, rest)` with `self = m*h + rest` in GW(Q). Unlike
    /// [`split_hyperbolic`](Self::split_hyperbolic) this uses the relation
    /// `<a> + <-a> = h` for every class, so it changes stored terms.
    pub fn extract_hyperbolic(&self) -> (i64, GwElement) {
        let mut rest = self.clone();
        let mut total = 0;
        for &class in self.terms.keys() {
            if class.is_negative() {
                continue;
            }
            let opposite = SquareClass(-class.rep());
            let a = rest.coeff(class);
            let b = rest.coeff(opposite);
            let m = if a > 0 && b > 0 {
                a.min(b)
            } else if a < 0 && b < 0 {
                a.max(b)
            } else {
                0
            };
            if m != 0 {
                rest.add_term(class, -m);
                rest.add_term(opposite, -m);
                total += m;
            }
        }
        (total, rest)
    }

    /// A shorter representative of the same class: `a<1> + b<-1>` when that
    /// is equivalent, otherwise hyperbolic pairs collected into `h`.
    pub fn simplify(&self) -> GwElement {
        if let Some(normal) = Self::from_rank_signature(self.rank(), self.signature()) {
            if self.is_equivalent(&normal) {
                return normal;
            }
        }
        let (m, rest) = self.extract_hyperbolic();
        GwElement::h().scale(m) + rest
    }

    /// The form `((n + w)/2)<1> + ((n - w)/2)<-1>` with rank `n` and signature `w`.
    ///
    /// Returns `None` when `n` and `w` have different parity.
    pub fn from_rank_signature(rank: i64, signature: i64) -> Option<Self> {
        if (rank + signature) % 2 != 0 {
            return None;
        }
        Some(Self::from_terms([
            (SquareClass::ONE, (rank + signature) / 2),
            (SquareClass::MINUS_ONE, (rank - signature) / 2),
        ]))
    }

    /// Equality in GW(Q).
    pub fn is_equivalent(&self, other: &GwElement) -> bool {
        local::gw_equal(self, other)
    }

    /// Hasse invariant at `place`; only defined for effective forms.
    pub fn hasse_invariant(&self, place: Place) -> Result<i8> {
        local::hasse_invariant(self, place)
    }
}

/// `gw_equal`: decides equality in GW(Q) through local invariants.
pub fn gw_equal(a: &GwElement, b: &GwElement) -> bool {
    a.is_equivalent(b)
}

impl From<SquareClass> for GwElement {
    fn from(c: SquareClass) -> Self {
        GwElement::form(c)
    }
}

impl Add<&GwElement> for &GwElement {
    type Output = GwElement;

    fn add(self, rhs: &GwElement) -> GwElement {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for GwElement {
    type Output = GwElement;

    fn add(mut self, rhs: GwElement) -> GwElement {
        self += &rhs;
        self
    }
}

impl AddAssign<&GwElement> for GwElement {
    fn add_assign(&mut self, rhs: &GwElement) {
        for (&c, &k) in &rhs.terms {
            self.add_term(c, k);
        }
    }
}

impl Sub<&GwElement> for &GwElement {
    type Output = GwElement;

    fn sub(self, rhs: &GwElement) -> GwElement {
        let mut out = self.clone();
        for (&c, &k) in &rhs.terms {
            out.add_term(c, -k);
        }
        out
    }
}

impl Sub for GwElement {
    type Output = GwElement;

    fn sub(self, rhs: GwElement) -> GwElement {
        &self - &rhs
    }
}

impl Neg for &GwElement {
    type Output = GwElement;

    fn neg(self) -> GwElement {
        self.scale(-1)
    }
}

impl Neg for GwElement {
    type Output = GwElement;

    fn neg(self) -> GwElement {
        self.scale(-1)
    }
}

impl Mul<&GwElement> for &GwElement {
    type Output = GwElement;

    fn mul(self, rhs: &GwElement) -> GwElement {
        let mut out = GwElement::zero();
        for (&a, &ka) in &self.terms {
            for (&b, &kb) in &rhs.terms {
                out.add_term(a * b, ka * kb);
            }
        }
        out
    }
}

impl Mul for GwElement {
    type Output = GwElement;

    fn mul(self, rhs: GwElement) -> GwElement {
        &self * &rhs
    }
}

impl std::iter::Sum for GwElement {
    fn sum<I: Iterator<Item = GwElement>>(iter: I) -> GwElement {
        iter.fold(GwElement::zero(), |acc, x| acc + x)
    }
}

impl std::iter::Product for GwElement {
    fn product<I: Iterator<Item = GwElement>>(iter: I) -> GwElement {
        iter.fold(GwElement::one(), |acc, x| acc * x)
    }
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    class: SquareClass,
    coeff: i64,
}

#[derive(Serialize, Deserialize)]
struct GwJson {
    terms: Vec<TermJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pretty: Option<String>,
}

impl Serialize for GwElement {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GwJson {
            terms: self.terms().map(|(class, coeff)| TermJson { class, coeff }).collect(),
            pretty: Some(self.to_string()),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for GwElement {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = GwJson::deserialize(d)?;
        let mut out = GwElement::zero();
        let mut last: Option<SquareClass> = None;
        for t in raw.terms {
            if last.is_some_and(|l| l >= t.class) {
                return Err(D::Error::custom("term classes must be strictly ascending"));
            }
            if t.coeff == 0 {
                return Err(D::Error::custom("zero coefficients are not stored"));
            }
            last = Some(t.class);
            out.terms.insert(t.class, t.coeff);
        }
        Ok(out)
    }
}
