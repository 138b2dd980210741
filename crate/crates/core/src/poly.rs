//! Multilinear polynomials in formal trace symbols `b1, b2, ...` with
//! coefficients in GW(Q).
//!
//! The symbol `b_i` stands for the trace form `<2> + <2c_i>` of the i-th
//! conjugate pair of point conditions. Monomials are index sets, so no
//! symbol is ever squared.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::ops::{Add, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gw::{beta, GwElement};

/// A squarefree monomial `b_{i1} * ... * b_{ik}`, indices ascending.
///
/// Ordered by degree first, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    /// Builds a monomial; fails on index 0 or repeated indices.
    pub fn new<I: IntoIterator<Item = u32>>(indices: I) -> Result<Self> {
        let mut v: Vec<u32> = indices.into_iter().collect();
        v.sort_unstable();
        for w in v.windows(2) {
            if w[0] == w[1] {
                return Err(Error::IndexCollision(w[0]));
            }
        }
        if v.first() == Some(&0) {
            return Err(Error::Parse { pos: 0, msg: "symbol index must be positive".into() });
        }
        Ok(Monomial(v))
    }

    pub fn indices(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, i: u32) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    fn with(&self, i: u32) -> Monomial {
        let mut v = self.0.clone();
        let pos = v.binary_search(&i).unwrap_err();
        v.insert(pos, i);
        Monomial(v)
    }

    fn times(&self, other: &Monomial) -> Result<Monomial> {
        if let Some(&i) = self.0.iter().find(|i| other.contains(**i)) {
            return Err(Error::IndexCollision(i));
        }
        Monomial::new(self.0.iter().chain(&other.0).copied())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

/// Sign of the extension parameter `c_i` at the real place.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExtensionSign {
    Negative,
    Positive,
}

impl ExtensionSign {
    /// Signature of `b_i = <2> + <2c>`.
    pub fn beta_signature(self) -> i64 {
        match self {
            ExtensionSign::Negative => 0,
            ExtensionSign::Positive => 2,
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct BetaPolynomial {
    monomials: BTreeMap<Monomial, GwElement>,
}

impl BetaPolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(g: GwElement) -> Self {
        Self::term(Monomial::one(), g)
    }

    /// The bare symbol `b_index`.
    pub fn symbol(index: u32) -> Result<Self> {
        Ok(Self::term(Monomial::new([index])?, GwElement::one()))
    }

    pub fn term(m: Monomial, g: GwElement) -> Self {
        let mut out = Self::zero();
        out.add_term(m, &g);
        out
    }

    fn add_term(&mut self, m: Monomial, g: &GwElement) {
        if g.is_zero() {
            return;
        }
        let slot = self.monomials.entry(m.clone()).or_default();
        *slot += g;
        if slot.is_zero() {
            self.monomials.remove(&m);
        }
    }

    /// Monomials in canonical order: constant first, then by degree and indices.
    pub fn monomials(&self) -> impl Iterator<Item = (&Monomial, &GwElement)> {
        self.monomials.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> GwElement {
        self.monomials.get(m).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> GwElement {
        self.coeff(&Monomial::one())
    }

    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }

    /// True when only the constant monomial occurs.
    pub fn is_constant(&self) -> bool {
        self.monomials.keys().all(|m| m.degree() == 0)
    }

    /// All symbol indices that occur.
    pub fn indices(&self) -> BTreeSet<u32> {
        self.monomials.keys().flat_map(|m| m.0.iter().copied()).collect()
    }

    /// Multiplies every coefficient by `g`.
    pub fn scale(&self, g: &GwElement) -> Self {
        let mut out = Self::zero();
        for (m, v) in &self.monomials {
            out.add_term(m.clone(), &(v * g));
        }
        out
    }

    /// Product of two polynomials; fails if a symbol would be squared.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        let mut out = Self::zero();
        for (m1, g1) in &self.monomials {
            for (m2, g2) in &other.monomials {
                out.add_term(m1.times(m2)?, &(g1 * g2));
            }
        }
        Ok(out)
    }

    /// `(b_index - 2<1>) * self`.
    pub fn mul_step(&self, index: u32) -> Result<Self> {
        if index == 0 {
            return Err(Error::Parse { pos: 0, msg: "symbol index must be positive".into() });
        }
        if self.indices().contains(&index) {
            return Err(Error::IndexCollision(index));
        }
        let mut out = Self::zero();
        for (m, g) in &self.monomials {
            out.add_term(m.with(index), g);
            out.add_term(m.clone(), &g.scale(-2));
        }
        Ok(out)
    }

    /// Substitutes `b_i := <2> + <2c_i>` and evaluates in GW(Q).
    pub fn specialize(&self, assignment: &BTreeMap<u32, i64>) -> Result<GwElement> {
        let mut betas = BTreeMap::new();
        for i in self.indices() {
            let c = *assignment.get(&i).ok_or(Error::MissingIndex(i))?;
            betas.insert(i, beta(c)?);
        }
        Ok(self
            .monomials
            .iter()
            .map(|(m, g)| m.0.iter().map(|i| betas[i].clone()).product::<GwElement>() * g.clone())
            .sum())
    }

    /// Rank after substituting rank 2 for every symbol.
    pub fn rank_profile(&self) -> i64 {
        self.monomials.iter().map(|(m, g)| g.rank() << m.degree()).sum()
    }

    /// Signature after substituting the signature of each `b_i` from the sign of `c_i`.
    pub fn signature_profile(&self, signs: &BTreeMap<u32, ExtensionSign>) -> Result<i64> {
        let mut total = 0;
        for (m, g) in &self.monomials {
            let mut factor = g.signature();
            for i in &m.0 {
                factor *= signs.get(i).ok_or(Error::MissingSign(*i))?.beta_signature();
            }
            total += factor;
        }
        Ok(total)
    }

    /// Rewrites `m*h*B` as `2^deg(B) * m*h` for every monomial `B`, after
    /// collecting each `<a> + <-a>` into `h`.
    ///
    /// This uses `h * <a> = h`, so `h * b_i = 2h` holds for every choice of
    /// `c_i`; every specialization of the result equals that of `self`.
    pub fn reduce_hyperbolic(&self) -> Self {
        let mut out = Self::zero();
        let mut moved = 0i64;
        for (m, g) in &self.monomials {
            let (k, rest) = g.extract_hyperbolic();
            moved += k << m.degree();
            out.add_term(m.clone(), &rest);
        }
        out.add_term(Monomial::one(), &GwElement::h().scale(moved));
        out
    }

    /// Coefficient-wise equality in GW(Q) after [`reduce_hyperbolic`](Self::reduce_hyperbolic).
    pub fn is_equivalent(&self, other: &Self) -> bool {
        let a = self.reduce_hyperbolic();
        let b = other.reduce_hyperbolic();
        let keys: BTreeSet<Monomial> = a.monomials.keys().chain(b.monomials.keys()).cloned().collect();
        keys.iter().all(|m| a.coeff(m).is_equivalent(&b.coeff(m)))
    }
}

impl From<GwElement> for BetaPolynomial {
    fn from(g: GwElement) -> Self {
        Self::constant(g)
    }
}

impl Add<&BetaPolynomial> for &BetaPolynomial {
    type Output = BetaPolynomial;

    fn add(self, rhs: &BetaPolynomial) -> BetaPolynomial {
        let mut out = self.clone();
        for (m, g) in &rhs.monomials {
            out.add_term(m.clone(), g);
        }
        out
    }
}

impl Add for BetaPolynomial {
    type Output = BetaPolynomial;

    fn add(self, rhs: BetaPolynomial) -> BetaPolynomial {
        &self + &rhs
    }
}

impl Sub<&BetaPolynomial> for &BetaPolynomial {
    type Output = BetaPolynomial;

    fn sub(self, rhs: &BetaPolynomial) -> BetaPolynomial {
        let mut out = self.clone();
        for (m, g) in &rhs.monomials {
            out.add_term(m.clone(), &g.scale(-1));
        }
        out
    }
}

#[derive(Serialize, Deserialize)]
struct MonomialJson {
    indices: Monomial,
    value: GwElement,
}

#[derive(Serialize, Deserialize)]
struct PolyJson {
    monomials: Vec<MonomialJson>,
}

impl Serialize for BetaPolynomial {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyJson {
            monomials: self
                .monomials
                .iter()
                .map(|(m, g)| MonomialJson { indices: m.clone(), value: g.clone() })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for BetaPolynomial {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = PolyJson::deserialize(d)?;
        let mut out = BetaPolynomial::zero();
        for entry in raw.monomials {
            let m = Monomial::new(entry.indices.0.iter().copied()).map_err(D::Error::custom)?;
            if out.monomials.contains_key(&m) {
                return Err(D::Error::custom("duplicate monomial"));
            }
            if entry.value.is_zero() {
                return Err(D::Error::custom("zero coefficients are not stored"));
            }
            out.monomials.insert(m, entry.value);
        }
        Ok(out)
    }
}
