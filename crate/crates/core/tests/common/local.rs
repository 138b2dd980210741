//! Brute-force Hilbert symbols from solvability of `z^2 = a x^2 + b y^2` mod p^k.

use std::collections::{BTreeMap, BTreeSet};

use gwcurves::gw::{hilbert_symbol, Place};
use gwcurves::Rational;
use num_integer::Integer;

pub fn r(n: i64, d: i64) -> Rational {
    Rational::new(n, d)
}

pub const PRIMES: [u64; 10] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29];

pub fn modulus(p: i64) -> i64 {
    if p == 2 {
        16
    } else {
        p * p * p
    }
}

pub fn squares_mod(m: i64) -> Vec<bool> {
    let mut sq = vec![false; m as usize];
    for x in 0..m {
        sq[(x * x % m) as usize] = true;
    }
    sq
}

/// Whether `z^2 = a x^2 + b y^2` has a solution mod `m` with some
/// coordinate a unit; a unit coordinate can be scaled to 1.
pub fn primitive_solution(a: i64, b: i64, p: i64) -> bool {
    let m = modulus(p);
    let sq = squares_mod(m);
    let md = |v: i64| v.rem_euclid(m);
    let mut a_times_square = vec![false; m as usize];
    for x in 0..m {
        a_times_square[md(a * (x * x % m)) as usize] = true;
    }
    for t in 0..m {
        let t2 = t * t % m;
        // x = 1: z^2 = a + b t^2
        if sq[md(a + b * t2) as usize] {
            return true;
        }
        // y = 1: z^2 = a t^2 + b
        if sq[md(a * t2 + b) as usize] {
            return true;
        }
        // z = 1: a x^2 = 1 - b t^2 for some x
        if a_times_square[md(1 - b * t2) as usize] {
            return true;
        }
    }
    false
}

pub fn local_reps(p: i64) -> Vec<i64> {
    if p == 2 {
        return vec![1, -1, 5, -5, 2, -2, 10, -10];
    }
    let n = (2..p).find(|&x| (1..p).all(|y| y * y % p != x)).unwrap();
    vec![1, n, p, n * p]
}

pub fn valuation(mut n: i64, p: i64) -> (u32, i64) {
    let mut v = 0;
    while n % p == 0 {
        n /= p;
        v += 1;
    }
    (v, n)
}

pub fn inverse_mod(a: i64, m: i64) -> i64 {
    let g = a.extended_gcd(&m);
    assert_eq!(g.gcd, 1);
    g.x.rem_euclid(m)
}

/// Whether `q` is a nonzero square in Q_p, tested on its unit part mod p^3 (mod 16 at 2).
pub fn is_local_square(q: Rational, p: i64, squares: &[bool]) -> bool {
    let (vn, un) = valuation(*q.numer(), p);
    let (vd, ud) = valuation(*q.denom(), p);
    if (vn + vd) % 2 == 1 {
        return false;
    }
    let m = modulus(p);
    let unit = (un.rem_euclid(m) * inverse_mod(ud.rem_euclid(m), m)).rem_euclid(m);
    squares[unit as usize]
}

pub struct LocalOracle {
    pub p: i64,
    pub reps: Vec<i64>,
    pub squares: Vec<bool>,
    pub table: BTreeMap<(i64, i64), i8>,
}

impl LocalOracle {
    pub fn new(p: i64) -> Self {
        let reps = local_reps(p);
        let mut table = BTreeMap::new();
        for &a in &reps {
            for &b in &reps {
                table.insert((a, b), if primitive_solution(a, b, p) { 1 } else { -1 });
            }
        }
        LocalOracle { p, reps, squares: squares_mod(modulus(p)), table }
    }

    pub fn class_of(&self, q: Rational) -> i64 {
        let found: Vec<i64> =
            self.reps.iter().copied().filter(|&rep| is_local_square(q / r(rep, 1), self.p, &self.squares)).collect();
        assert_eq!(found.len(), 1, "{q} at {}", self.p);
        found[0]
    }

    pub fn symbol(&self, a: Rational, b: Rational) -> i8 {
        self.table[&(self.class_of(a), self.class_of(b))]
    }
}

pub fn small_rationals() -> Vec<Rational> {
    let mut set = BTreeSet::new();
    for n in -30i64..=30 {
        for d in 1i64..=30 {
            if n != 0 {
                set.insert(r(n, d));
            }
        }
    }
    set.into_iter().collect()
}

/// Compares `hilbert_symbol` with the oracle on every pair of small rationals
/// at every listed prime and at infinity; returns the number of comparisons.
pub fn compare_all_hilbert_symbols() -> usize {
    let mut count = 0;
    let qs = small_rationals();
    // reduce both sides to local classes first, then compare every pair
    for &p in &PRIMES {
        let oracle = LocalOracle::new(p as i64);
        let place = Place::prime(p).unwrap();
        let n = oracle.reps.len();
        let pos = |c: i64| oracle.reps.iter().position(|&x| x == c).unwrap();
        let classes: Vec<usize> = qs.iter().map(|&q| pos(oracle.class_of(q))).collect();
        let table: Vec<i8> = (0..n * n).map(|k| oracle.table[&(oracle.reps[k / n], oracle.reps[k % n])]).collect();
        let mut reached = vec![false; n * n];
        for (i, &a) in qs.iter().enumerate() {
            for (j, &b) in qs.iter().enumerate() {
                let k = classes[i] * n + classes[j];
                let got = hilbert_symbol(a, b, place).unwrap();
                assert_eq!(got, table[k], "({a}, {b})_{p}");
                reached[k] = true;
                count += 1;
            }
        }
        assert!(reached.iter().all(|&x| x), "not every class pair reached at {p}");
    }
    for &a in &qs {
        for &b in &qs {
            let want = if a < r(0, 1) && b < r(0, 1) { -1 } else { 1 };
            assert_eq!(hilbert_symbol(a, b, Place::Infinity).unwrap(), want);
            count += 1;
        }
    }
    count
}
