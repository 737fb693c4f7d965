//! ℘-division values of level N, the level-6 functions A, B, C, D, X, Y, f±,
//! the parametrization φ = (X, Y) of y² = x³ + 1, and cusp analytics.
//!
//! Values are normalized as e^{(N)}_{α,β}/(2πi)²; every evaluation first reduces
//! τ into the standard fundamental domain and transports indices.

use std::collections::HashMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::mp::{self, BigComplex};
use crate::qseries::{combination_series, QOmega, QSeries};

pub const DEFAULT_GUARD: usize = 16;

/// Integer 2×2 matrix [[a, b], [c, d]].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Mat2Z {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

impl Mat2Z {
    pub const I: Mat2Z = Mat2Z { a: 1, b: 0, c: 0, d: 1 };
    pub const S: Mat2Z = Mat2Z { a: 0, b: -1, c: 1, d: 0 };
    pub const T: Mat2Z = Mat2Z { a: 1, b: 1, c: 0, d: 1 };

    pub const fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        Mat2Z { a, b, c, d }
    }

    pub fn t_pow(k: i64) -> Self {
        Mat2Z::new(1, k, 0, 1)
    }

    pub fn det(&self) -> i64 {
        self.a * self.d - self.b * self.c
    }

    pub fn mul(&self, o: &Mat2Z) -> Mat2Z {
        Mat2Z::new(
            self.a * o.a + self.b * o.c,
            self.a * o.b + self.b * o.d,
            self.c * o.a + self.d * o.c,
            self.c * o.b + self.d * o.d,
        )
    }

    /// Inverse of a determinant-one matrix.
    pub fn inv_sl2(&self) -> Mat2Z {
        Mat2Z::new(self.d, -self.b, -self.c, self.a)
    }

    pub fn neg(&self) -> Mat2Z {
        Mat2Z::new(-self.a, -self.b, -self.c, -self.d)
    }

    /// ±self with c > 0, or c = 0 and d > 0.
    pub fn sign_normalized(&self) -> Mat2Z {
        if self.c < 0 || (self.c == 0 && self.d < 0) {
            self.neg()
        } else {
            *self
        }
    }

    pub fn reduce_mod(&self, m: i64) -> Mat2Z {
        Mat2Z::new(self.a.rem_euclid(m), self.b.rem_euclid(m), self.c.rem_euclid(m), self.d.rem_euclid(m))
    }

    pub fn congruent_mod(&self, o: &Mat2Z, m: i64) -> bool {
        self.reduce_mod(m) == o.reduce_mod(m)
    }

    pub fn apply(&self, tau: &BigComplex) -> BigComplex {
        let p = tau.prec();
        let num = tau.mul_int(self.a) + BigComplex::from_int(self.b, p);
        let den = tau.mul_int(self.c) + BigComplex::from_int(self.d, p);
        num / den
    }

    pub fn apply_exact(&self, tau: &QOmega) -> QOmega {
        let num = &tau.scale(&ri(self.a)) + &QOmega::from_ints(self.b, 0);
        let den = &tau.scale(&ri(self.c)) + &QOmega::from_ints(self.d, 0);
        &num * &den.inv().expect("nonzero denominator in upper half plane")
    }

    /// cτ + d.
    pub fn automorphy(&self, tau: &BigComplex) -> BigComplex {
        tau.mul_int(self.c) + BigComplex::from_int(self.d, tau.prec())
    }
}

fn ri(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// A point of the upper half plane.
#[derive(Clone, Debug)]
pub struct UpperHalfPoint(BigComplex);

impl UpperHalfPoint {
    pub fn new(tau: BigComplex) -> Result<Self> {
        if !tau.im().is_positive() {
            return Err(Error::InvalidInput("τ must have positive imaginary part".into()));
        }
        Ok(UpperHalfPoint(tau))
    }

    pub fn tau(&self) -> &BigComplex {
        &self.0
    }
}

#[derive(Clone, Debug)]
pub struct ReductionResult {
    pub tau0: BigComplex,
    pub gamma: Mat2Z,
}

/// τ = γτ₀ with τ₀ in the standard domain |Re τ₀| ≤ 1/2, |τ₀| ≥ 1.
pub fn reduce_to_fundamental_domain(tau: &UpperHalfPoint) -> ReductionResult {
    let mut t = tau.tau().clone();
    let p = t.prec();
    let mut g = Mat2Z::I;
    let one = mp::real_int(1, p);
    for _ in 0..10_000 {
        let m = mp::round_bigint(t.re()).to_i64().expect("translation fits");
        if m != 0 {
            t = &t - &BigComplex::from_int(m, p);
            g = g.mul(&Mat2Z::t_pow(m));
        }
        if mp::cmp(&t.norm_sqr(), &one) == std::cmp::Ordering::Less {
            t = BigComplex::from_int(-1, p) / &t;
            g = g.mul(&Mat2Z::new(0, 1, -1, 0));
        } else {
            break;
        }
    }
    ReductionResult { tau0: t, gamma: g.sign_normalized() }
}

/// Exact reduction of τ = u + vω (v > 0).
pub fn reduce_exact(tau: &QOmega) -> (QOmega, Mat2Z) {
    assert!(tau.b.is_positive(), "τ must lie in the upper half plane");
    let mut t = tau.clone();
    let mut g = Mat2Z::I;
    let half = BigRational::new(1.into(), 2.into());
    loop {
        let m = (t.re() + &half).floor().to_integer();
        if !m.is_zero() {
            t = QOmega::new(&t.a - BigRational::from_integer(m.clone()), t.b.clone());
            g = g.mul(&Mat2Z::t_pow(m.to_i64().expect("translation fits")));
        }
        if t.norm() < BigRational::one() {
            t = &QOmega::from_ints(-1, 0) * &t.inv().expect("nonzero");
            g = g.mul(&Mat2Z::new(0, 1, -1, 0));
        } else {
            break;
        }
    }
    (t, g.sign_normalized())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct DivisionValueIndex {
    pub n: i64,
    pub alpha: i64,
    pub beta: i64,
}

impl DivisionValueIndex {
    pub fn new(n: i64, alpha: i64, beta: i64) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidInput(format!("level {n} must be positive")));
        }
        if alpha.rem_euclid(n) == 0 && beta.rem_euclid(n) == 0 {
            return Err(Error::InvalidInput("index (0,0) has no division value".into()));
        }
        Ok(DivisionValueIndex { n, alpha, beta }.normalized())
    }

    /// Representative of ±(α, β) with 0 ≤ α ≤ N/2 (and β minimal on ties).
    pub fn normalized(&self) -> Self {
        let n = self.n;
        let p = (self.alpha.rem_euclid(n), self.beta.rem_euclid(n));
        let q = ((-self.alpha).rem_euclid(n), (-self.beta).rem_euclid(n));
        let (alpha, beta) = p.min(q);
        DivisionValueIndex { n, alpha, beta }
    }
}

/// Index transport: e_{α,β}(γτ) = (cτ+d)² e_{aα+cβ, bα+dβ}(τ).
pub fn transform_index(idx: DivisionValueIndex, g: &Mat2Z) -> (DivisionValueIndex, (i64, i64)) {
    let t = DivisionValueIndex {
        n: idx.n,
        alpha: g.a * idx.alpha + g.c * idx.beta,
        beta: g.b * idx.alpha + g.d * idx.beta,
    }
    .normalized();
    (t, (g.c, g.d))
}

fn sqrt3_half() -> f64 {
    3f64.sqrt() / 2.0
}

/// Σ_{n≥1} t Xⁿ/(1 − t Xⁿ)² with a certified tail below 2^{−target}.
fn f_sum(t1: &BigComplex, x: &BigComplex, target: f64) -> BigComplex {
    let p = x.prec();
    let lx = x.log2_abs();
    let one_minus_x = 1.0 - 2f64.powf(lx);
    let mut acc = BigComplex::zero(p);
    let mut t = t1.clone();
    let mut lt = t1.log2_abs();
    let one = BigComplex::one(p);
    loop {
        let d = &one - &t;
        acc = &acc + &(&t / &(&d * &d));
        t = &t * x;
        lt += lx;
        let r = 2f64.powf(lt.max(-1e4));
        let bound = lt - one_minus_x.log2() - 2.0 * (1.0 - r).max(1e-300).log2();
        if r < 0.5 && bound < -target {
            break;
        }
    }
    acc
}

/// e^{(N)}_{α,β}(τ₀)/(2πi)² for τ₀ in the fundamental domain.
pub fn division_value(idx: DivisionValueIndex, tau0: &UpperHalfPoint, prec: usize) -> Result<BigComplex> {
    division_value_guarded(idx, tau0.tau(), prec, DEFAULT_GUARD)
}

fn division_value_guarded(idx: DivisionValueIndex, tau0: &BigComplex, prec: usize, guard: usize) -> Result<BigComplex> {
    if tau0.im_f64() < sqrt3_half() - 1e-9 || tau0.re_f64().abs() > 0.5 + 1e-9 {
        return Err(Error::InvalidInput("division_value expects a reduced point".into()));
    }
    let idx = idx.normalized();
    let n = idx.n;
    let wp = prec + guard + 16;
    let tau = tau0.with_prec(wp);
    let two_pi_i = BigComplex::new(mp::real_int(0, wp), mp::pi(wp).mul(&mp::real_int(2, wp), wp, mp::RM), wp);
    let q = (&two_pi_i * &tau).div_int(n).exp();
    let x = q.powi(n);
    let zeta = BigComplex::root_of_unity(idx.beta, n, wp);
    let t = &zeta * &q.powi(idx.alpha);
    let tinv_x = &zeta.conj() * &q.powi(n - idx.alpha);
    let target = (prec + guard) as f64 + 4.0;
    let one = BigComplex::one(wp);
    let d = &one - &t;
    let mut v = BigComplex::one(wp).div_int(12) + &t / &(&d * &d);
    v = &v + &f_sum(&(&t * &x), &x, target);
    v = &v + &f_sum(&tinv_x, &x, target);
    v = &v - &f_sum(&x, &x, target).mul_int(2);
    Ok(v.with_prec(prec + guard))
}

/// e^{(N)}_{α,β}(τ)/(2πi)² at any τ ∈ ℍ, via reduction and transport.
pub fn division_value_at(idx: DivisionValueIndex, tau: &UpperHalfPoint, prec: usize) -> Result<BigComplex> {
    let r = reduce_to_fundamental_domain(tau);
    let (j, _) = transform_index(idx, &r.gamma);
    let v = division_value_guarded(j, &r.tau0, prec, DEFAULT_GUARD)?;
    let f = r.gamma.automorphy(&r.tau0.with_prec(prec + DEFAULT_GUARD));
    Ok((&f * &f * v).with_prec(prec))
}

/// Linear combination Σ cᵢ e^{(6)}_{αᵢ,βᵢ} with coefficients ωᵏ·s.
#[derive(Clone, Copy, Debug)]
pub struct Term {
    pub omega_exp: i64,
    pub sign: i64,
    pub alpha: i64,
    pub beta: i64,
}

const fn term(omega_exp: i64, sign: i64, alpha: i64, beta: i64) -> Term {
    Term { omega_exp, sign, alpha, beta }
}

pub const A_TERMS: [Term; 3] = [term(0, 1, 2, 1), term(2, 1, 2, 3), term(1, 1, 2, 5)];
pub const B_TERMS: [Term; 3] = [term(0, 1, 2, 1), term(1, 1, 2, 3), term(2, 1, 2, 5)];
pub const C_TERMS: [Term; 2] = [term(0, 1, 0, 1), term(0, -1, 0, 4)];
pub const D_TERMS: [Term; 2] = [term(0, 1, 3, 1), term(0, -1, 3, 4)];

/// Evaluates level-6 combinations at τ = γτ₀ sharing one division-value cache.
struct Evaluator {
    tau0: BigComplex,
    gamma: Mat2Z,
    cache: HashMap<(DivisionValueIndex, usize), BigComplex>,
}

impl Evaluator {
    fn new(tau0: BigComplex, gamma: Mat2Z) -> Self {
        Evaluator { tau0, gamma, cache: HashMap::new() }
    }

    fn value(&mut self, idx: DivisionValueIndex, wp: usize) -> Result<BigComplex> {
        let key = (idx, wp);
        if let Some(v) = self.cache.get(&key) {
            return Ok(v.clone());
        }
        let v = division_value_guarded(idx, &self.tau0.with_prec(wp), wp, 0)?;
        self.cache.insert(key, v.clone());
        Ok(v)
    }

    /// (cτ₀+d)⁻² Σ cᵢ eᵢ(γτ₀), i.e. the transported combination at τ₀, with the
    /// working precision raised until cancellation leaves `prec` good bits.
    fn combination(&mut self, terms: &[Term], prec: usize) -> Result<BigComplex> {
        let mut wp = prec + 32;
        for _ in 0..6 {
            let mut acc = BigComplex::zero(wp);
            let mut biggest = f64::NEG_INFINITY;
            for t in terms {
                let idx = DivisionValueIndex { n: 6, alpha: t.alpha, beta: t.beta };
                let (j, _) = transform_index(idx, &self.gamma);
                let v = self.value(j, wp)?;
                let c = BigComplex::omega_pow(t.omega_exp, wp).mul_int(t.sign);
                let cv = &c * &v;
                biggest = biggest.max(cv.log2_abs());
                acc = &acc + &cv;
            }
            let lost = (biggest - acc.log2_abs()).max(0.0);
            if acc.is_zero() || !lost.is_finite() {
                wp *= 2;
                continue;
            }
            if (wp as f64) - lost >= (prec + 24) as f64 {
                return Ok(acc);
            }
            wp += lost.ceil() as usize + 64;
        }
        Err(Error::Precision("cancellation in level-6 combination exceeded budget".into()))
    }
}

fn evaluator_for(tau: &UpperHalfPoint) -> Evaluator {
    let r = reduce_to_fundamental_domain(tau);
    Evaluator::new(r.tau0, r.gamma)
}

fn x_from(ev: &mut Evaluator, prec: usize) -> Result<BigComplex> {
    let a = ev.combination(&A_TERMS, prec)?;
    let b = ev.combination(&B_TERMS, prec)?;
    if b.is_zero() {
        return Err(Error::Precision("B vanished".into()));
    }
    let w2 = BigComplex::omega_pow(2, prec + 32).neg();
    Ok((w2 * a / b).with_prec(prec))
}

fn y_from(ev: &mut Evaluator, prec: usize) -> Result<BigComplex> {
    let c = ev.combination(&C_TERMS, prec)?;
    let d = ev.combination(&D_TERMS, prec)?;
    if d.is_zero() {
        return Err(Error::Precision("D vanished".into()));
    }
    Ok((c.mul_int(-3) / d).with_prec(prec))
}

pub fn eval_x(tau: &UpperHalfPoint, prec: usize) -> Result<BigComplex> {
    x_from(&mut evaluator_for(tau), prec)
}

pub fn eval_y(tau: &UpperHalfPoint, prec: usize) -> Result<BigComplex> {
    y_from(&mut evaluator_for(tau), prec)
}

/// φ(τ) = (X(τ), Y(τ)).
pub fn eval_phi(tau: &UpperHalfPoint, prec: usize) -> Result<(BigComplex, BigComplex)> {
    let mut ev = evaluator_for(tau);
    Ok((x_from(&mut ev, prec)?, y_from(&mut ev, prec)?))
}

/// φ at a point of ℚ(ω) ∩ ℍ, reduced exactly before any numerics.
pub fn eval_phi_exact(tau: &QOmega, prec: usize) -> Result<(BigComplex, BigComplex)> {
    let (t0, g) = reduce_exact(tau);
    let mut ev = Evaluator::new(t0.to_complex(prec + 64), g);
    Ok((x_from(&mut ev, prec)?, y_from(&mut ev, prec)?))
}

pub fn eval_x_exact(tau: &QOmega, prec: usize) -> Result<BigComplex> {
    let (t0, g) = reduce_exact(tau);
    let mut ev = Evaluator::new(t0.to_complex(prec + 64), g);
    x_from(&mut ev, prec)
}

/// f±(τ) = (Y ± √−3)/(X√−3).
pub fn f_pm_from_xy(x: &BigComplex, y: &BigComplex) -> Result<(BigComplex, BigComplex)> {
    let p = x.prec().min(y.prec());
    if x.log2_abs() < -((p as f64) - 16.0) {
        return Err(Error::Precision("X(τ) vanishes at working precision".into()));
    }
    let s = BigComplex::sqrt_minus3(p);
    let den = x * &s;
    Ok(((y + &s) / &den, (y - &s) / &den))
}

/// (f₊(τ), f₋(τ)).
pub fn eval_f_pm(tau: &UpperHalfPoint, prec: usize) -> Result<(BigComplex, BigComplex)> {
    let (x, y) = eval_phi(tau, prec)?;
    f_pm_from_xy(&x, &y)
}

pub fn eval_f_pm_exact(tau: &QOmega, prec: usize) -> Result<(BigComplex, BigComplex)> {
    let (x, y) = eval_phi_exact(tau, prec)?;
    f_pm_from_xy(&x, &y)
}

/// A cusp α/β with gcd(α, β) = 1, β ≥ 0; ∞ = 1/0.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cusp {
    pub num: i64,
    pub den: i64,
}

impl Cusp {
    pub const INFINITY: Cusp = Cusp { num: 1, den: 0 };

    pub fn new(num: i64, den: i64) -> Result<Cusp> {
        let g = num.gcd(&den);
        if g == 0 {
            return Err(Error::InvalidInput("0/0 is not a cusp".into()));
        }
        let (mut a, mut b) = (num / g, den / g);
        if b < 0 || (b == 0 && a < 0) {
            a = -a;
            b = -b;
        }
        Ok(Cusp { num: a, den: b })
    }

    /// A matrix in SL₂(ℤ) sending ∞ to this cusp.
    pub fn matrix(&self) -> Mat2Z {
        if self.den == 0 {
            return Mat2Z::I;
        }
        let e = self.num.extended_gcd(&self.den);
        // num·x + den·y = 1  ⇒  [[num, −y], [den, x]]
        Mat2Z::new(self.num, -e.y, self.den, e.x)
    }
}

impl fmt::Display for Cusp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den == 0 {
            write!(f, "∞")
        } else if self.den == 1 {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", self.num, self.den)
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CongruenceGroup {
    Gamma(i64),
    Gamma0(i64),
}

impl CongruenceGroup {
    pub fn level(&self) -> i64 {
        match self {
            CongruenceGroup::Gamma(n) | CongruenceGroup::Gamma0(n) => *n,
        }
    }

    /// Index of the image in PSL₂(ℤ).
    pub fn index(&self) -> i64 {
        match *self {
            CongruenceGroup::Gamma(n) => {
                if n == 1 {
                    return 1;
                }
                if n == 2 {
                    return 6;
                }
                let mut num = n * n * n;
                for p in crate::arith::prime_divisors(n) {
                    num = num / (p * p) * (p * p - 1);
                }
                num / 2
            }
            CongruenceGroup::Gamma0(n) => {
                let mut r = n;
                for p in crate::arith::prime_divisors(n) {
                    r = r / p * (p + 1);
                }
                r
            }
        }
    }

    /// Width of the cusp.
    pub fn width(&self, c: &Cusp) -> i64 {
        match *self {
            CongruenceGroup::Gamma(n) => n,
            CongruenceGroup::Gamma0(n) => {
                if c.den == 0 {
                    1
                } else {
                    n / (c.den * c.den).gcd(&n)
                }
            }
        }
    }
}

fn lift_pair(l: i64, m: i64, n: i64) -> Cusp {
    if m.rem_euclid(n) == 0 && (l.rem_euclid(n) == 1 || l.rem_euclid(n) == n - 1) {
        return Cusp::INFINITY;
    }
    for s in 0..=2 * n {
        let shift = if s % 2 == 0 { s / 2 } else { -(s + 1) / 2 };
        let alpha = l + n * shift;
        if alpha.gcd(&m) == 1 {
            return Cusp::new(alpha, m).expect("nonzero");
        }
    }
    unreachable!("a coprime lift always exists")
}

/// Inequivalent cusps, in the parametrization (ℓ, m) of the standard enumeration.
pub fn cusp_catalog(group: CongruenceGroup) -> Vec<Cusp> {
    let mut out = Vec::new();
    match group {
        CongruenceGroup::Gamma(n) => {
            if n == 1 {
                return vec![Cusp::INFINITY];
            }
            for l in 0..=n / 2 {
                let edge = l == 0 || 2 * l == n;
                let ms: Vec<i64> = if edge { ((n + 1) / 2..=n).collect() } else { (1..=n).collect() };
                for m in ms {
                    if l.gcd(&m).gcd(&n) == 1 {
                        out.push(lift_pair(l, m, n));
                    }
                }
            }
        }
        CongruenceGroup::Gamma0(n) => {
            for m in crate::arith::divisors(n) {
                if m == n {
                    out.push(Cusp::INFINITY);
                    continue;
                }
                let g = m.gcd(&(n / m));
                for l in 0..g {
                    let mut alpha = l;
                    while alpha.gcd(&m) != 1 {
                        alpha += g;
                    }
                    out.push(Cusp::new(alpha, m).expect("nonzero"));
                }
            }
        }
    }
    out
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum FnId {
    ACubed,
    BCubed,
    C,
    DSquared,
    XCubed,
    YSquared,
    XPlusOne,
}

impl FnId {
    pub fn parse(s: &str) -> Result<FnId> {
        Ok(match s {
            "A3" | "A^3" | "A³" => FnId::ACubed,
            "B3" | "B^3" | "B³" => FnId::BCubed,
            "C" => FnId::C,
            "D2" | "D^2" | "D²" => FnId::DSquared,
            "X3" | "X^3" | "X³" => FnId::XCubed,
            "Y2" | "Y^2" | "Y²" => FnId::YSquared,
            "X+1" => FnId::XPlusOne,
            _ => return Err(Error::InvalidInput(format!("unknown function {s}"))),
        })
    }

    pub fn group(&self) -> CongruenceGroup {
        match self {
            FnId::XPlusOne => CongruenceGroup::Gamma(6),
            _ => CongruenceGroup::Gamma0(6),
        }
    }

    /// Weight of the modular form.
    pub fn weight(&self) -> i64 {
        match self {
            FnId::ACubed | FnId::BCubed => 6,
            FnId::C => 2,
            FnId::DSquared => 4,
            _ => 0,
        }
    }
}

fn transported_series(terms: &[Term], g: &Mat2Z, end: i64) -> QSeries {
    let t: Vec<(QOmega, i64, i64)> = terms
        .iter()
        .map(|t| {
            let idx = DivisionValueIndex { n: 6, alpha: t.alpha, beta: t.beta };
            let (j, _) = transform_index(idx, g);
            let c = if t.omega_exp.rem_euclid(3) == 0 {
                QOmega::one()
            } else if t.omega_exp.rem_euclid(3) == 1 {
                QOmega::omega()
            } else {
                QOmega::from_ints(-1, -1)
            };
            (c.scale(&ri(t.sign)), j.alpha, j.beta)
        })
        .collect();
    combination_series(&t, end)
}

/// Exact q-expansion (q = e^{2πiτ/6}) of the slash-transported function f|γ.
pub fn expansion_at(fid: FnId, g: &Mat2Z, end: i64) -> Result<QSeries> {
    let minus_w2 = QOmega::from_ints(1, 1);
    let xs = || -> Result<QSeries> {
        let a = transported_series(&A_TERMS, g, end);
        let b = transported_series(&B_TERMS, g, end);
        a.scale(&minus_w2).div(&b).ok_or_else(|| Error::Precision("B vanishes identically".into()))
    };
    Ok(match fid {
        FnId::ACubed => transported_series(&A_TERMS, g, end).pow(3),
        FnId::BCubed => transported_series(&B_TERMS, g, end).pow(3),
        FnId::C => transported_series(&C_TERMS, g, end),
        FnId::DSquared => transported_series(&D_TERMS, g, end).pow(2),
        FnId::XCubed => xs()?.pow(3),
        FnId::YSquared => {
            let c = transported_series(&C_TERMS, g, end);
            let d = transported_series(&D_TERMS, g, end);
            let y = c.scale(&QOmega::from_ints(-3, 0)).div(&d).ok_or_else(|| Error::Precision("D vanishes identically".into()))?;
            y.pow(2)
        }
        FnId::XPlusOne => {
            let x = xs()?;
            let mut one = QSeries::zero(0, x.end().max(1) as usize);
            one.coeffs[0] = QOmega::one();
            x.add(&one)
        }
    })
}

/// X and Y as exact Laurent series in q = e^{πiτ/3}, known below q^{end}.
pub fn x_series(end: i64) -> QSeries {
    let e = end + 8;
    let a = transported_series(&A_TERMS, &Mat2Z::I, e);
    let b = transported_series(&B_TERMS, &Mat2Z::I, e);
    a.scale(&QOmega::from_ints(1, 1)).div(&b).expect("B ≠ 0").truncate(end)
}

pub fn y_series(end: i64) -> QSeries {
    let e = end + 8;
    let c = transported_series(&C_TERMS, &Mat2Z::I, e);
    let d = transported_series(&D_TERMS, &Mat2Z::I, e);
    c.scale(&QOmega::from_ints(-3, 0)).div(&d).expect("D ≠ 0").truncate(end)
}

/// Order of a catalogued function at a cusp, in the local parameter of its group.
pub fn order_at_cusp(fid: FnId, cusp: &Cusp) -> Result<BigRational> {
    let g = cusp.matrix();
    let s = expansion_at(fid, &g, 48)?;
    let v = s.valuation().ok_or_else(|| Error::Precision("expansion vanished to working order".into()))?;
    let w = fid.group().width(cusp);
    Ok(BigRational::new(BigInt::from(v * w), BigInt::from(6)))
}

/// Leading coefficient of X + 1 in q = e^{2πiτ/6} at the cusp.
pub fn leading_coefficient_x_plus_one(cusp: &Cusp) -> Result<QOmega> {
    let s = expansion_at(FnId::XPlusOne, &cusp.matrix(), 48)?;
    s.leading().ok_or_else(|| Error::Precision("expansion vanished to working order".into()))
}

/// φ(s) at a cusp as the limit along γ(iH), H large. `None` is the point at infinity.
pub fn eval_phi_at_cusp(cusp: &Cusp, prec: usize) -> Result<Option<(BigComplex, BigComplex)>> {
    let wp = prec + 32;
    let h = ((prec + 40) as f64 * std::f64::consts::LN_2 * 6.0 / (2.0 * std::f64::consts::PI)).ceil() as i64 + 1;
    let tau0 = BigComplex::new(mp::real_int(0, wp), mp::real_int(h, wp), wp);
    let mut ev = Evaluator::new(tau0, cusp.matrix());
    let x = x_from(&mut ev, prec)?;
    let y = y_from(&mut ev, prec)?;
    if x.log2_abs() > (prec as f64) / 2.0 {
        return Ok(None);
    }
    Ok(Some((x, y)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_gamma0_6() {
        let mut c = cusp_catalog(CongruenceGroup::Gamma0(6));
        c.sort();
        let mut want = vec![Cusp::new(0, 1).unwrap(), Cusp::INFINITY, Cusp::new(1, 2).unwrap(), Cusp::new(1, 3).unwrap()];
        want.sort();
        assert_eq!(c, want);
        assert_eq!(cusp_catalog(CongruenceGroup::Gamma0(1)), vec![Cusp::INFINITY]);
        assert_eq!(cusp_catalog(CongruenceGroup::Gamma(6)).len(), 12);
    }

    #[test]
    fn index_transport() {
        let i = DivisionValueIndex::new(6, 2, 1).unwrap();
        assert_eq!(transform_index(i, &Mat2Z::I).0, i);
        assert_eq!(transform_index(i, &Mat2Z::T).0, DivisionValueIndex::new(6, 2, 3).unwrap());
        assert_eq!(transform_index(i, &Mat2Z::S).0, DivisionValueIndex::new(6, 1, -2).unwrap());
    }

    fn assert_series(s: &QSeries, want: &[(i64, i64)]) {
        let got = s.integer_terms().expect("integral coefficients");
        let got: Vec<(i64, i64)> = got.iter().map(|&(k, a, b)| {
            assert_eq!(b, 0, "rational coefficients expected at q^{k}");
            (k, a)
        }).collect();
        assert_eq!(got, want);
    }

    #[test]
    fn golden_x_expansion() {
        let x = x_series(41);
        assert_series(&x, &[(-2, 1), (4, 1), (10, 1), (16, -1), (22, -1), (34, 1), (40, 2)]);
    }

    #[test]
    fn golden_y_expansion() {
        let y = y_series(34);
        assert_series(&y, &[(-3, 1), (3, 2), (9, 1), (21, -2), (27, -2), (33, 2)]);
    }

    fn ord(f: FnId, c: Cusp) -> i64 {
        let r = order_at_cusp(f, &c).unwrap();
        assert!(r.is_integer());
        r.to_integer().to_i64().unwrap()
    }

    #[test]
    fn order_table() {
        let cusps = [Cusp::new(0, 1).unwrap(), Cusp::INFINITY, Cusp::new(1, 2).unwrap(), Cusp::new(1, 3).unwrap()];
        let table = [
            (FnId::ACubed, [3, 1, 0, 2]),
            (FnId::BCubed, [3, 2, 0, 1]),
            (FnId::C, [1, 0, 1, 0]),
            (FnId::DSquared, [2, 1, 1, 0]),
            (FnId::XCubed, [0, -1, 0, 1]),
            (FnId::YSquared, [0, -1, 1, 0]),
        ];
        for (f, want) in table {
            let got: Vec<i64> = cusps.iter().map(|c| ord(f, *c)).collect();
            assert_eq!(got, want, "{f:?}");
        }
    }

    #[test]
    fn x_plus_one_at_gamma6_cusps() {
        for c in cusp_catalog(CongruenceGroup::Gamma(6)) {
            let (a, b) = (c.num, c.den);
            let want = if b % 6 == 0 { -2 } else if a % 3 == 0 && b % 2 == 0 { 2 } else { 0 };
            assert_eq!(ord(FnId::XPlusOne, c), want, "{c}");
            let lead = leading_coefficient_x_plus_one(&c).unwrap();
            let n = lead.norm();
            let want_norm = if b % 3 == 0 { 1 } else if a % 3 == 0 { 9 } else { 3 };
            assert_eq!(n, ri(want_norm), "{c}");
        }
    }

    #[test]
    fn special_values_at_cusps() {
        let p = 128;
        let w = |k| BigComplex::omega_pow(k, p);
        let z = |x: i64| BigComplex::from_int(x, p);
        let cases = [
            ((1, 3), z(0), z(1)),
            ((1, 2), w(1).neg(), z(0)),
            ((-3, 2), z(-1), z(0)),
            ((-1, 1), w(1).mul_int(2), z(-3)),
            ((-1, 2), w(2).neg(), z(0)),
        ];
        for ((a, b), x, y) in cases {
            let (px, py) = eval_phi_at_cusp(&Cusp::new(a, b).unwrap(), p).unwrap().expect("finite");
            assert!(px.log2_dist(&x) < -100.0, "X({a}/{b})");
            assert!(py.log2_dist(&y) < -100.0, "Y({a}/{b})");
        }
        assert!(eval_phi_at_cusp(&Cusp::INFINITY, p).unwrap().is_none());
    }

    #[test]
    fn phi_lies_on_curve() {
        let p = 160;
        for (re, im) in [(0.1, 0.9), (-0.3, 1.7), (2.4, 0.05), (0.0, 3.0)] {
            let tau = UpperHalfPoint::new(BigComplex::from_f64(re, im, p + 32)).unwrap();
            let (x, y) = eval_phi(&tau, p).unwrap();
            let lhs = &y * &y;
            let rhs = &(&x * &x) * &x + BigComplex::one(p);
            let scale = lhs.log2_abs().max(0.0);
            assert!(lhs.log2_dist(&rhs) - scale < -140.0, "τ = {re}+{im}i");
        }
    }

    #[test]
    fn numeric_matches_series_high_in_cusp() {
        let p = 128;
        let tau = UpperHalfPoint::new(BigComplex::from_f64(0.125, 1.5, p + 32)).unwrap();
        let x = eval_x(&tau, p).unwrap();
        let s = x_series(160);
        let two_pi_i = BigComplex::new(mp::real_int(0, p + 32), mp::pi(p + 32).mul(&mp::real_int(2, p + 32), p + 32, mp::RM), p + 32);
        let q = (&two_pi_i * tau.tau()).div_int(6).exp();
        let mut acc = BigComplex::zero(p + 32);
        for k in s.val..s.end() {
            let c = s.coeff(k);
            if !c.is_zero() {
                acc = &acc + &(&c.to_complex(p + 32) * &q.powi(k));
            }
        }
        assert!(x.log2_dist(&acc) - x.log2_abs() < -110.0);
    }
}
