//! Arithmetic in ℤ[ω], ω = e^{2πi/3}, cubic residue symbols and the index sets
//! Aᵢ, Bᵢ of Galois conjugates.
//!
//! Primary convention: a prime π coprime to 3 is primary when π ≡ 2 (mod 3),
//! i.e. π ≡ −1. Rational primes q ≡ 2 (mod 3) are primary as they stand.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::arith::{self, factorize, legendre3};
use crate::error::{Error, Result};
use crate::mp::BigComplex;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct EisensteinInt {
    pub a: i64,
    pub b: i64,
}

impl fmt::Display for EisensteinInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}ω", self.a, self.b)
    }
}

pub const UNITS: [EisensteinInt; 6] = [
    EisensteinInt { a: 1, b: 0 },
    EisensteinInt { a: 1, b: 1 },
    EisensteinInt { a: 0, b: 1 },
    EisensteinInt { a: -1, b: 0 },
    EisensteinInt { a: -1, b: -1 },
    EisensteinInt { a: 0, b: -1 },
];

impl EisensteinInt {
    pub const fn new(a: i64, b: i64) -> Self {
        EisensteinInt { a, b }
    }

    pub const fn int(a: i64) -> Self {
        EisensteinInt { a, b: 0 }
    }

    pub const fn omega() -> Self {
        EisensteinInt { a: 0, b: 1 }
    }

    pub fn omega_pow(k: i64) -> Self {
        match k.rem_euclid(3) {
            0 => EisensteinInt::int(1),
            1 => EisensteinInt::new(0, 1),
            _ => EisensteinInt::new(-1, -1),
        }
    }

    pub fn norm(&self) -> i64 {
        let (a, b) = (self.a as i128, self.b as i128);
        (a * a - a * b + b * b) as i64
    }

    pub fn conj(&self) -> Self {
        EisensteinInt::new(self.a - self.b, -self.b)
    }

    pub fn is_zero(&self) -> bool {
        self.a == 0 && self.b == 0
    }

    pub fn is_unit(&self) -> bool {
        self.norm() == 1
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = EisensteinInt::int(1);
        for _ in 0..e {
            acc = acc * *self;
        }
        acc
    }

    /// Exact quotient, `None` if `other` does not divide `self`.
    pub fn div_exact(&self, other: &EisensteinInt) -> Option<EisensteinInt> {
        let n = other.norm();
        if n == 0 {
            return None;
        }
        let t = *self * other.conj();
        if t.a % n == 0 && t.b % n == 0 {
            Some(EisensteinInt::new(t.a / n, t.b / n))
        } else {
            None
        }
    }

    pub fn divides(&self, x: &EisensteinInt) -> bool {
        x.div_exact(self).is_some()
    }

    /// Coordinates reduced into [0, m).
    pub fn reduce_mod(&self, m: i64) -> Self {
        EisensteinInt::new(self.a.rem_euclid(m), self.b.rem_euclid(m))
    }

    pub fn congruent_mod(&self, other: &EisensteinInt, m: i64) -> bool {
        (*self - *other).reduce_mod(m).is_zero()
    }

    /// Residue class mod 2 as ωⁱ, or `None` when x ≡ 0 mod 2 is reachable
    /// only for even elements.
    pub fn omega_class_mod2(&self) -> Option<i64> {
        (0..3).find(|&i| self.congruent_mod(&EisensteinInt::omega_pow(i), 2))
    }

    /// j with x ≡ ±ωʲ (mod 3), if any.
    pub fn omega_class_mod3(&self) -> Option<(i64, i64)> {
        for j in 0..3 {
            for s in [1, -1] {
                let u = EisensteinInt::omega_pow(j) * EisensteinInt::int(s);
                if self.congruent_mod(&u, 3) {
                    return Some((s, j));
                }
            }
        }
        None
    }

    pub fn to_complex(&self, prec: usize) -> BigComplex {
        let w = BigComplex::omega(prec);
        BigComplex::from_int(self.a, prec) + w.mul_int(self.b)
    }

    /// Associate ≡ 2 (mod 3), when the element is coprime to 3.
    pub fn primary(&self) -> Option<EisensteinInt> {
        UNITS.iter().map(|u| *u * *self).find(|y| y.a.rem_euclid(3) == 2 && y.b.rem_euclid(3) == 0)
    }
}

impl Add for EisensteinInt {
    type Output = EisensteinInt;
    fn add(self, o: EisensteinInt) -> EisensteinInt {
        EisensteinInt::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for EisensteinInt {
    type Output = EisensteinInt;
    fn sub(self, o: EisensteinInt) -> EisensteinInt {
        EisensteinInt::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for EisensteinInt {
    type Output = EisensteinInt;
    fn neg(self) -> EisensteinInt {
        EisensteinInt::new(-self.a, -self.b)
    }
}

impl Mul for EisensteinInt {
    type Output = EisensteinInt;
    fn mul(self, o: EisensteinInt) -> EisensteinInt {
        let bd = self.b * o.b;
        EisensteinInt::new(self.a * o.a - bd, self.a * o.b + self.b * o.a - bd)
    }
}

/// A cube root of unity ωᵏ.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CubeRoot(u8);

impl CubeRoot {
    pub const ONE: CubeRoot = CubeRoot(0);

    pub fn new(k: i64) -> Self {
        CubeRoot(k.rem_euclid(3) as u8)
    }

    pub fn exponent(&self) -> i64 {
        self.0 as i64
    }

    pub fn is_one(&self) -> bool {
        self.0 == 0
    }

    pub fn inv(&self) -> Self {
        CubeRoot::new(-(self.0 as i64))
    }

    pub fn pow(&self, e: i64) -> Self {
        CubeRoot::new(self.0 as i64 * e)
    }

    /// Real part: 1 or −1/2.
    pub fn re(&self) -> f64 {
        if self.0 == 0 {
            1.0
        } else {
            -0.5
        }
    }

    pub fn to_eisenstein(&self) -> EisensteinInt {
        EisensteinInt::omega_pow(self.0 as i64)
    }

    pub fn to_complex(&self, prec: usize) -> BigComplex {
        BigComplex::omega_pow(self.0 as i64, prec)
    }
}

impl Mul for CubeRoot {
    type Output = CubeRoot;
    fn mul(self, o: CubeRoot) -> CubeRoot {
        CubeRoot::new(self.0 as i64 + o.0 as i64)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Factorization {
    pub unit: EisensteinInt,
    pub factors: Vec<(EisensteinInt, u32)>,
}

impl Factorization {
    pub fn product(&self) -> EisensteinInt {
        self.factors.iter().fold(self.unit, |acc, (p, e)| acc * p.pow(*e))
    }
}

/// A prime of norm p ≡ 1 (mod 3), primary, by exhaustive search.
pub fn split_prime(p: i64) -> Option<EisensteinInt> {
    if p.rem_euclid(3) != 1 || !arith::is_prime(p) {
        return None;
    }
    let lim = (2.0 * (p as f64).sqrt()) as i64 + 2;
    for a in 0..=lim {
        for b in 0..=lim {
            let x = EisensteinInt::new(a, b);
            if x.norm() == p {
                return x.primary();
            }
        }
    }
    None
}

/// Factorization of x into primes of ℤ[ω]: 1−ω for the ramified prime,
/// primary associates otherwise; the leftover unit is reported separately.
pub fn factor(x: EisensteinInt) -> Result<Factorization> {
    if x.is_zero() {
        return Err(Error::InvalidInput("cannot factor 0".into()));
    }
    let mut rest = x;
    let mut factors = Vec::new();
    let mut take = |rest: &mut EisensteinInt, pi: EisensteinInt| {
        let mut e = 0;
        while let Some(q) = rest.div_exact(&pi) {
            *rest = q;
            e += 1;
        }
        if e > 0 {
            factors.push((pi, e));
        }
    };
    for (p, _) in factorize(x.norm()) {
        if p == 3 {
            take(&mut rest, EisensteinInt::new(1, -1));
        } else if legendre3(p) == -1 {
            take(&mut rest, EisensteinInt::int(p));
        } else {
            let pi = split_prime(p).expect("split prime exists");
            let pibar = pi.conj().primary().expect("coprime to 3");
            take(&mut rest, pi);
            take(&mut rest, pibar);
        }
    }
    debug_assert!(rest.is_unit());
    Ok(Factorization { unit: rest, factors })
}

fn fp2_mul(x: (i64, i64), y: (i64, i64), q: i64) -> (i64, i64) {
    let q = q as i128;
    let (a, b, c, d) = (x.0 as i128, x.1 as i128, y.0 as i128, y.1 as i128);
    let bd = b * d;
    (((a * c - bd).rem_euclid(q)) as i64, ((a * d + b * c - bd).rem_euclid(q)) as i64)
}

/// Cubic residue symbol (x/λ)₃ for a prime λ ∤ 3 with λ ∤ x.
pub fn cubic_residue_symbol(x: EisensteinInt, lambda: EisensteinInt) -> Result<CubeRoot> {
    let nl = lambda.norm();
    if nl == 3 || nl % 3 == 0 {
        return Err(Error::InvalidInput(format!("symbol modulo {lambda} divides 3")));
    }
    if lambda.divides(&x) {
        return Err(Error::InvalidInput(format!("{lambda} divides {x}")));
    }
    if arith::is_prime(nl) {
        let p = nl;
        let d_inv = arith::mod_inv(lambda.b, p).ok_or_else(|| Error::InvalidInput("not prime".into()))?;
        let r = (-lambda.a as i128 * d_inv as i128).rem_euclid(p as i128) as i64;
        let v = (x.a as i128 + x.b as i128 * r as i128).rem_euclid(p as i128) as i64;
        let s = arith::mod_pow(v, ((p - 1) / 3) as u64, p);
        if s == 1 {
            return Ok(CubeRoot::new(0));
        }
        if s == r {
            return Ok(CubeRoot::new(1));
        }
        if s == arith::mod_pow(r, 2, p) {
            return Ok(CubeRoot::new(2));
        }
        return Err(Error::InvalidInput(format!("{lambda} is not prime")));
    }
    let q = (nl as f64).sqrt().round() as i64;
    if q * q != nl || !arith::is_prime(q) || legendre3(q) != -1 {
        return Err(Error::InvalidInput(format!("{lambda} is not prime")));
    }
    let mut e = ((q * q - 1) / 3) as u64;
    let mut base = (x.a.rem_euclid(q), x.b.rem_euclid(q));
    let mut acc = (1 % q, 0);
    while e > 0 {
        if e & 1 == 1 {
            acc = fp2_mul(acc, base, q);
        }
        base = fp2_mul(base, base, q);
        e >>= 1;
    }
    for k in 0..3 {
        let w = EisensteinInt::omega_pow(k).reduce_mod(q);
        if (w.a, w.b) == acc {
            return Ok(CubeRoot::new(k));
        }
    }
    Err(Error::InvalidInput(format!("{lambda} is not prime")))
}

/// χ(z) = ∏ (z/λᵢ)₃^{cᵢ} for n = ∏ λᵢ^{cᵢ}.
#[derive(Clone, Debug)]
pub struct CubicCharacter {
    pub n: i64,
    pub modulus_primes: Vec<(EisensteinInt, u32)>,
}

impl CubicCharacter {
    pub fn new(n: i64) -> Result<Self> {
        if n <= 0 || n % 3 == 0 {
            return Err(Error::InvalidInput(format!("character modulus {n} must be positive and prime to 3")));
        }
        let f = factor(EisensteinInt::int(n))?;
        Ok(CubicCharacter { n, modulus_primes: f.factors })
    }

    /// `None` when x is not coprime to n.
    pub fn try_eval(&self, x: EisensteinInt) -> Option<CubeRoot> {
        let mut acc = CubeRoot::ONE;
        for (l, c) in &self.modulus_primes {
            acc = acc * cubic_residue_symbol(x, *l).ok()?.pow(*c as i64);
        }
        Some(acc)
    }

    pub fn eval(&self, x: EisensteinInt) -> Result<CubeRoot> {
        if num_integer::gcd(x.norm(), self.n) != 1 {
            return Err(Error::InvalidInput(format!("{x} is not coprime to {}", self.n)));
        }
        self.try_eval(x).ok_or_else(|| Error::InvalidInput(format!("{x} is not coprime to {}", self.n)))
    }
}

pub fn chi_n(x: EisensteinInt, n: i64) -> Result<CubeRoot> {
    CubicCharacter::new(n)?.eval(x)
}

pub fn f_of_n(n: i64) -> i64 {
    arith::f_of_n(n)
}

/// Canonical representative of the class of x in (O/n)/(ℤ/n)^× (optionally also
/// modulo ⟨ω⟩), as the lexicographically least (a mod n, b mod n).
fn class_key(x: EisensteinInt, n: i64, scalars: &[i64], with_omega: bool) -> (i64, i64) {
    let ks: &[i64] = if with_omega { &[0, 1, 2] } else { &[0] };
    let mut best = (i64::MAX, i64::MAX);
    for &k in ks {
        let y = x * EisensteinInt::omega_pow(k);
        for &c in scalars {
            let z = (y * EisensteinInt::int(c)).reduce_mod(n);
            if (z.a, z.b) < best {
                best = (z.a, z.b);
            }
        }
    }
    best
}

fn unit_scalars(n: i64) -> Vec<i64> {
    (1..=n.max(1)).filter(|c| num_integer::gcd(*c, n) == 1).map(|c| c % n.max(1)).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct ConjugateSet {
    pub n: i64,
    pub a: [Vec<EisensteinInt>; 3],
    pub b: [Vec<EisensteinInt>; 3],
}

impl ConjugateSet {
    /// B₀ ∪ B₁ ∪ B₂ sorted by (a, b).
    pub fn all_b(&self) -> Vec<EisensteinInt> {
        let mut v: Vec<EisensteinInt> = self.b.iter().flatten().copied().collect();
        v.sort();
        v
    }
}

pub fn validate_n(n: i64) -> Result<()> {
    if n < 2 {
        return Err(Error::Hypothesis(format!("n={n} must be at least 2")));
    }
    if num_integer::gcd(n, 6) != 1 {
        return Err(Error::Hypothesis(format!("n={n} is not coprime to 6")));
    }
    if !arith::is_cubefree(n) {
        return Err(Error::Hypothesis(format!("n={n} is not cube-free")));
    }
    let r = n.rem_euclid(9);
    if r == 1 || r == 8 {
        return Err(Error::Hypothesis(format!("n={n} ≡ ±1 (mod 9)")));
    }
    Ok(())
}

/// Aᵢ and Bᵢ with representatives in {a+bω : 0 ≤ a,b < 6n}, first in lexicographic order.
pub fn enumerate_conjugates(n: i64) -> Result<ConjugateSet> {
    validate_n(n)?;
    enumerate_conjugates_relaxed(n)
}

/// As [`enumerate_conjugates`] but only requiring n prime to 6 and cube-free;
/// the combinatorial lemmas on c_{α,β}(d) need nothing more.
pub fn enumerate_conjugates_relaxed(n: i64) -> Result<ConjugateSet> {
    if n < 2 || num_integer::gcd(n, 6) != 1 || !arith::is_cubefree(n) {
        return Err(Error::Hypothesis(format!("n={n} must be cube-free, prime to 6 and at least 2")));
    }
    let chi = CubicCharacter::new(n)?;
    let scalars = unit_scalars(n);
    let mut seen: [HashMap<(i64, i64), ()>; 3] = Default::default();
    let mut keys: HashMap<(i64, i64), (i64, i64)> = HashMap::new();
    let mut a_sets: [Vec<EisensteinInt>; 3] = Default::default();
    for a in 0..6 * n {
        for b in 0..6 * n {
            if a.rem_euclid(3) != 1 || b.rem_euclid(3) != 0 {
                continue;
            }
            let x = EisensteinInt::new(a, b);
            let Some(i) = x.omega_class_mod2() else { continue };
            if num_integer::gcd(x.norm(), n) != 1 {
                continue;
            }
            let r = x.reduce_mod(n);
            let key = *keys.entry((r.a, r.b)).or_insert_with(|| class_key(r, n, &scalars, false));
            if seen[i as usize].insert(key, ()).is_none() {
                a_sets[i as usize].push(x);
            }
        }
    }
    let mut b_sets: [Vec<EisensteinInt>; 3] = Default::default();
    for i in 0..3 {
        for x in &a_sets[i] {
            if chi.eval(*x)?.is_one() {
                b_sets[i].push(*x);
            }
        }
    }
    Ok(ConjugateSet { n, a: a_sets, b: b_sets })
}

/// Representatives of (O/n)^×/((ℤ/n)^×·⟨ω⟩), each ≡ 1 (mod 6), taken first in
/// lexicographic order from the parallelogram 0 ≤ a,b < 6n.
pub fn galois_representatives(n: i64) -> Result<Vec<EisensteinInt>> {
    validate_n(n)?;
    let scalars = unit_scalars(n);
    let mut seen = HashMap::new();
    let mut out = Vec::new();
    for a in (1..6 * n).step_by(6) {
        for b in (0..6 * n).step_by(6) {
            let x = EisensteinInt::new(a, b);
            if num_integer::gcd(x.norm(), n) != 1 {
                continue;
            }
            let key = class_key(x.reduce_mod(n), n, &scalars, true);
            if seen.insert(key, ()).is_none() {
                out.push(x);
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn norms() {
        assert_eq!(EisensteinInt::new(1, 0).norm(), 1);
        assert_eq!(EisensteinInt::new(1, 1).norm(), 1);
        assert_eq!(EisensteinInt::new(3, 1).norm(), 7);
        assert_eq!(EisensteinInt::new(0, 1) * EisensteinInt::new(0, 1), EisensteinInt::new(-1, -1));
    }

    #[test]
    fn factor_seven() {
        let f = factor(EisensteinInt::int(7)).unwrap();
        assert_eq!(f.product(), EisensteinInt::int(7));
        assert_eq!(f.factors.len(), 2);
        for (p, e) in &f.factors {
            assert_eq!(p.norm(), 7);
            assert_eq!(*e, 1);
        }
        let a = EisensteinInt::new(3, 1);
        let b = EisensteinInt::new(2, -1);
        assert!(f.factors.iter().any(|(p, _)| p.div_exact(&a).map_or(false, |u| u.is_unit())));
        assert!(f.factors.iter().any(|(p, _)| p.div_exact(&b).map_or(false, |u| u.is_unit())));
    }

    #[test]
    fn factor_units_and_inert() {
        let u = EisensteinInt::new(1, 1);
        let f = factor(u).unwrap();
        assert!(f.factors.is_empty());
        assert_eq!(f.unit, u);
        let f = factor(EisensteinInt::int(2)).unwrap();
        assert_eq!(f.factors, vec![(EisensteinInt::int(2), 1)]);
    }

    #[test]
    fn sets_for_five() {
        let s = enumerate_conjugates(5).unwrap();
        for i in 0..3 {
            assert_eq!(s.a[i].len(), 6);
            assert_eq!(s.b[i].len(), 2);
        }
    }
}
