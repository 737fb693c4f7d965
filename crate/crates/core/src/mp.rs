//! Arbitrary-precision reals and complex numbers on top of `astro-float`.
//!
//! Every `BigComplex` carries its working precision in bits. Binary operations
//! return a value at the smaller of the two operand precisions, so precision is
//! never silently raised.

use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{BigFloat, Consts, RoundingMode, Sign, Word};
use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::Zero;

pub type BigReal = BigFloat;

pub const RM: RoundingMode = RoundingMode::ToEven;

thread_local! {
    static CONSTS: RefCell<Consts> = RefCell::new(Consts::new().expect("constant cache"));
}

pub fn with_consts<T>(f: impl FnOnce(&mut Consts) -> T) -> T {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

pub fn real(x: f64, p: usize) -> BigReal {
    BigFloat::from_f64(x, p)
}

pub fn real_int(x: i64, p: usize) -> BigReal {
    BigFloat::from_i64(x, p)
}

pub fn real_bigint(x: &BigInt, p: usize) -> BigReal {
    if x.is_zero() {
        return BigFloat::from_i64(0, p);
    }
    let (sign, digits) = x.to_u64_digits();
    let words: Vec<Word> = digits.iter().map(|&d| d as Word).collect();
    let s = if sign == num_bigint::Sign::Minus { Sign::Neg } else { Sign::Pos };
    let e = (64 * words.len()) as i32;
    let mut v = BigFloat::from_words(&words, s, e);
    v.set_precision(p, RM).expect("precision");
    v
}

pub fn real_ratio(x: &BigRational, p: usize) -> BigReal {
    let num = real_bigint(x.numer(), p + 64);
    let den = real_bigint(x.denom(), p + 64);
    num.div(&den, p, RM)
}

pub fn rneg(x: &BigReal) -> BigReal {
    BigFloat::neg(x)
}

pub fn pi(p: usize) -> BigReal {
    with_consts(|cc| cc.pi(p, RM))
}

pub fn ln(x: &BigReal, p: usize) -> BigReal {
    with_consts(|cc| x.ln(p, RM, cc))
}

pub fn exp(x: &BigReal, p: usize) -> BigReal {
    with_consts(|cc| x.exp(p, RM, cc))
}

pub fn sqrt(x: &BigReal, p: usize) -> BigReal {
    x.sqrt(p, RM)
}

/// Real cube root; negative inputs give the negative real root.
pub fn cbrt(x: &BigReal, p: usize) -> BigReal {
    x.cbrt(p, RM)
}

pub fn atan2(y: &BigReal, x: &BigReal, p: usize) -> BigReal {
    let wp = p + 32;
    if x.is_zero() {
        let h = pi(wp).div(&real_int(2, wp), p, RM);
        return if y.is_negative() { rneg(&h) } else if y.is_zero() { real_int(0, p) } else { h };
    }
    let t = with_consts(|cc| y.div(x, wp, RM).atan(wp, RM, cc));
    let r = if x.is_positive() {
        t
    } else if y.is_negative() {
        t.sub(&pi(wp), wp, RM)
    } else {
        t.add(&pi(wp), wp, RM)
    };
    let mut r = r;
    r.set_precision(p, RM).expect("precision");
    r
}

fn top_bits(x: &BigReal) -> Option<(f64, i64)> {
    if x.is_zero() {
        return None;
    }
    let e = x.exponent()? as i64;
    let m = x.mantissa_digits()?;
    let top = *m.last()? as f64 / 18446744073709551616.0;
    Some((top, e))
}

pub fn to_f64(x: &BigReal) -> f64 {
    match top_bits(x) {
        None => 0.0,
        Some((t, e)) => {
            let e = e.clamp(-2000, 2000) as i32;
            let v = t * 2f64.powi(e.clamp(-1000, 1000)) * 2f64.powi(e - e.clamp(-1000, 1000));
            if x.is_negative() {
                -v
            } else {
                v
            }
        }
    }
}

/// log₂|x|, `-inf` for zero.
pub fn log2_abs(x: &BigReal) -> f64 {
    match top_bits(x) {
        None => f64::NEG_INFINITY,
        Some((t, e)) => e as f64 + t.log2(),
    }
}

fn mantissa_uint(x: &BigReal) -> (BigUint, i64) {
    let m = x.mantissa_digits().expect("finite value");
    let digits: Vec<u64> = m.iter().map(|&w| w as u64).collect();
    let e = x.exponent().expect("finite value") as i64;
    (BigUint::from_slice(&digits.iter().flat_map(|d| [*d as u32, (*d >> 32) as u32]).collect::<Vec<_>>()), e - 64 * digits.len() as i64)
}

/// Exact value of a finite `BigReal` as a rational number.
pub fn to_ratio(x: &BigReal) -> BigRational {
    if x.is_zero() {
        return BigRational::zero();
    }
    let (m, shift) = mantissa_uint(x);
    let mut v = BigInt::from(m);
    if x.is_negative() {
        v = -v;
    }
    if shift >= 0 {
        BigRational::from_integer(v << (shift as usize))
    } else {
        BigRational::new(v, BigInt::from(1) << ((-shift) as usize))
    }
}

pub fn floor_bigint(x: &BigReal) -> BigInt {
    to_ratio(x).floor().to_integer()
}

pub fn round_bigint(x: &BigReal) -> BigInt {
    let r = to_ratio(x);
    (r + BigRational::new(1.into(), 2.into())).floor().to_integer()
}

pub fn cmp(a: &BigReal, b: &BigReal) -> Ordering {
    match a.cmp(b) {
        Some(c) if c < 0 => Ordering::Less,
        Some(0) => Ordering::Equal,
        Some(_) => Ordering::Greater,
        None => panic!("comparison with NaN"),
    }
}

#[derive(Clone)]
pub struct BigComplex {
    re: BigReal,
    im: BigReal,
    prec: usize,
}

impl fmt::Debug for BigComplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({:e} + {:e}i)@{}", self.re_f64(), self.im_f64(), self.prec)
    }
}

impl BigComplex {
    pub fn new(re: BigReal, im: BigReal, prec: usize) -> Self {
        let mut re = re;
        let mut im = im;
        re.set_precision(prec, RM).expect("precision");
        im.set_precision(prec, RM).expect("precision");
        BigComplex { re, im, prec }
    }

    pub fn from_f64(re: f64, im: f64, prec: usize) -> Self {
        BigComplex { re: real(re, prec), im: real(im, prec), prec }
    }

    pub fn from_int(x: i64, prec: usize) -> Self {
        BigComplex { re: real_int(x, prec), im: real_int(0, prec), prec }
    }

    pub fn from_real(x: BigReal, prec: usize) -> Self {
        BigComplex::new(x, real_int(0, prec), prec)
    }

    pub fn from_ratio(x: &BigRational, prec: usize) -> Self {
        BigComplex::from_real(real_ratio(x, prec), prec)
    }

    pub fn zero(prec: usize) -> Self {
        BigComplex::from_int(0, prec)
    }

    pub fn one(prec: usize) -> Self {
        BigComplex::from_int(1, prec)
    }

    pub fn i(prec: usize) -> Self {
        BigComplex { re: real_int(0, prec), im: real_int(1, prec), prec }
    }

    /// ω = e^{2πi/3}.
    pub fn omega(prec: usize) -> Self {
        let h = sqrt(&real_int(3, prec + 8), prec + 8).div(&real_int(2, prec), prec, RM);
        BigComplex { re: real(-0.5, prec), im: h, prec }
    }

    /// ωᵏ for any integer k.
    pub fn omega_pow(k: i64, prec: usize) -> Self {
        match k.rem_euclid(3) {
            0 => BigComplex::one(prec),
            1 => BigComplex::omega(prec),
            _ => BigComplex::omega(prec).conj(),
        }
    }

    /// √−3 with positive imaginary part.
    pub fn sqrt_minus3(prec: usize) -> Self {
        BigComplex { re: real_int(0, prec), im: sqrt(&real_int(3, prec), prec), prec }
    }

    /// e^{2πik/m}.
    pub fn root_of_unity(k: i64, m: i64, prec: usize) -> Self {
        let k = k.rem_euclid(m);
        let g = num_integer::gcd(k, m);
        let (k, m) = (k / g, m / g);
        match m {
            1 => return BigComplex::one(prec),
            2 => return BigComplex::from_int(-1, prec),
            3 => return BigComplex::omega_pow(k, prec),
            4 => {
                return if k == 1 { BigComplex::i(prec) } else { BigComplex::i(prec).neg() };
            }
            6 => return BigComplex::omega_pow(2 * k, prec).neg(),
            _ => {}
        }
        let wp = prec + 32;
        let t = pi(wp).mul(&real_int(2 * k, wp), wp, RM).div(&real_int(m, wp), wp, RM);
        let (c, s) = with_consts(|cc| (t.cos(prec, RM, cc), t.sin(prec, RM, cc)));
        BigComplex { re: c, im: s, prec }
    }

    pub fn prec(&self) -> usize {
        self.prec
    }

    pub fn re(&self) -> &BigReal {
        &self.re
    }

    pub fn im(&self) -> &BigReal {
        &self.im
    }

    pub fn re_f64(&self) -> f64 {
        to_f64(&self.re)
    }

    pub fn im_f64(&self) -> f64 {
        to_f64(&self.im)
    }

    pub fn with_prec(&self, prec: usize) -> Self {
        BigComplex::new(self.re.clone(), self.im.clone(), prec)
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        BigComplex { re: self.re.clone(), im: rneg(&self.im), prec: self.prec }
    }

    pub fn neg(&self) -> Self {
        BigComplex { re: rneg(&self.re), im: rneg(&self.im), prec: self.prec }
    }

    pub fn norm_sqr(&self) -> BigReal {
        let p = self.prec + 8;
        self.re.mul(&self.re, p, RM).add(&self.im.mul(&self.im, p, RM), self.prec, RM)
    }

    pub fn abs(&self) -> BigReal {
        sqrt(&self.norm_sqr(), self.prec)
    }

    pub fn abs_f64(&self) -> f64 {
        2f64.powf(self.log2_abs())
    }

    /// log₂|z|, `-inf` at zero.
    pub fn log2_abs(&self) -> f64 {
        let a = log2_abs(&self.re);
        let b = log2_abs(&self.im);
        let m = a.max(b);
        if m == f64::NEG_INFINITY {
            return m;
        }
        m + 0.5 * (2f64.powf(2.0 * (a - m)) + 2f64.powf(2.0 * (b - m))).log2()
    }

    pub fn arg(&self) -> BigReal {
        atan2(&self.im, &self.re, self.prec)
    }

    pub fn scale(&self, x: &BigReal) -> Self {
        let p = self.prec;
        BigComplex { re: self.re.mul(x, p, RM), im: self.im.mul(x, p, RM), prec: p }
    }

    pub fn mul_int(&self, k: i64) -> Self {
        self.scale(&real_int(k, self.prec))
    }

    pub fn div_int(&self, k: i64) -> Self {
        let d = real_int(k, self.prec);
        BigComplex { re: self.re.div(&d, self.prec, RM), im: self.im.div(&d, self.prec, RM), prec: self.prec }
    }

    pub fn recip(&self) -> Self {
        let p = self.prec;
        let n = self.norm_sqr();
        BigComplex { re: self.re.div(&n, p, RM), im: rneg(&self.im).div(&n, p, RM), prec: p }
    }

    pub fn sqr(&self) -> Self {
        self * self
    }

    pub fn powi(&self, k: i64) -> Self {
        if k < 0 {
            return self.recip().powi(-k);
        }
        let mut base = self.clone();
        let mut acc = BigComplex::one(self.prec);
        let mut e = k as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.sqr();
            }
        }
        acc
    }

    pub fn exp(&self) -> Self {
        let p = self.prec;
        let wp = p + 16;
        let r = exp(&self.re, wp);
        let (c, s) = with_consts(|cc| (self.im.cos(wp, RM, cc), self.im.sin(wp, RM, cc)));
        BigComplex { re: r.mul(&c, p, RM), im: r.mul(&s, p, RM), prec: p }
    }

    /// Principal logarithm.
    pub fn ln(&self) -> Self {
        let p = self.prec;
        let l = ln(&self.norm_sqr(), p + 8).div(&real_int(2, p), p, RM);
        BigComplex { re: l, im: self.arg(), prec: p }
    }

    /// Principal square root; negative reals map to the positive imaginary axis.
    pub fn sqrt(&self) -> Self {
        let p = self.prec;
        let wp = p + 16;
        let r = self.abs();
        let two = real_int(2, wp);
        let a = sqrt(&r.add(&self.re, wp, RM).div(&two, wp, RM), p);
        let mut b = sqrt(&r.sub(&self.re, wp, RM).div(&two, wp, RM), p);
        if self.im.is_negative() {
            b = rneg(&b);
        }
        BigComplex { re: a, im: b, prec: p }
    }

    /// Cube root, real for real inputs, principal otherwise.
    pub fn cbrt(&self) -> Self {
        if self.im.is_zero() {
            return BigComplex::from_real(cbrt(&self.re, self.prec), self.prec);
        }
        let l = self.ln().div_int(3);
        l.exp()
    }

    /// Distance |a − b| as log₂, `-inf` when equal.
    pub fn log2_dist(&self, other: &BigComplex) -> f64 {
        (self - other).log2_abs()
    }
}

macro_rules! binop {
    ($tr:ident, $f:ident, $body:expr) => {
        impl<'a, 'b> $tr<&'b BigComplex> for &'a BigComplex {
            type Output = BigComplex;
            fn $f(self, rhs: &'b BigComplex) -> BigComplex {
                $body(self, rhs)
            }
        }
        impl $tr<BigComplex> for BigComplex {
            type Output = BigComplex;
            fn $f(self, rhs: BigComplex) -> BigComplex {
                $body(&self, &rhs)
            }
        }
        impl<'b> $tr<&'b BigComplex> for BigComplex {
            type Output = BigComplex;
            fn $f(self, rhs: &'b BigComplex) -> BigComplex {
                $body(&self, rhs)
            }
        }
        impl<'a> $tr<BigComplex> for &'a BigComplex {
            type Output = BigComplex;
            fn $f(self, rhs: BigComplex) -> BigComplex {
                $body(self, &rhs)
            }
        }
    };
}

fn add_impl(a: &BigComplex, b: &BigComplex) -> BigComplex {
    let p = a.prec.min(b.prec);
    BigComplex { re: a.re.add(&b.re, p, RM), im: a.im.add(&b.im, p, RM), prec: p }
}

fn sub_impl(a: &BigComplex, b: &BigComplex) -> BigComplex {
    let p = a.prec.min(b.prec);
    BigComplex { re: a.re.sub(&b.re, p, RM), im: a.im.sub(&b.im, p, RM), prec: p }
}

fn mul_impl(a: &BigComplex, b: &BigComplex) -> BigComplex {
    let p = a.prec.min(b.prec);
    let wp = p + 16;
    let rr = a.re.mul(&b.re, wp, RM);
    let ii = a.im.mul(&b.im, wp, RM);
    let ri = a.re.mul(&b.im, wp, RM);
    let ir = a.im.mul(&b.re, wp, RM);
    BigComplex { re: rr.sub(&ii, p, RM), im: ri.add(&ir, p, RM), prec: p }
}

fn div_impl(a: &BigComplex, b: &BigComplex) -> BigComplex {
    let p = a.prec.min(b.prec);
    let wp = p + 16;
    let n = b.re.mul(&b.re, wp, RM).add(&b.im.mul(&b.im, wp, RM), wp, RM);
    let re = a.re.mul(&b.re, wp, RM).add(&a.im.mul(&b.im, wp, RM), wp, RM);
    let im = a.im.mul(&b.re, wp, RM).sub(&a.re.mul(&b.im, wp, RM), wp, RM);
    BigComplex { re: re.div(&n, p, RM), im: im.div(&n, p, RM), prec: p }
}

binop!(Add, add, add_impl);
binop!(Sub, sub, sub_impl);
binop!(Mul, mul, mul_impl);
binop!(Div, div, div_impl);

impl Neg for BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        BigComplex::neg(&self)
    }
}

impl Neg for &BigComplex {
    type Output = BigComplex;
    fn neg(self) -> BigComplex {
        BigComplex::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bigint_round_trip() {
        let x: BigInt = "-123456789012345678901234567890123".parse().unwrap();
        let r = real_bigint(&x, 256);
        assert_eq!(floor_bigint(&r), x);
        assert_eq!(real_bigint(&BigInt::from(5), 64).cmp(&real_int(5, 64)), Some(0));
    }

    #[test]
    fn f64_conversion() {
        assert_eq!(to_f64(&real(-3.25, 128)), -3.25);
        assert_eq!(to_f64(&real(1e-300, 128)), 1e-300);
        assert!((log2_abs(&real(1024.0, 128)) - 10.0).abs() < 1e-12);
    }

    #[test]
    fn floor_negative() {
        assert_eq!(floor_bigint(&real(-2.5, 128)), BigInt::from(-3));
        assert_eq!(round_bigint(&real(2.5, 128)), BigInt::from(3));
        assert_eq!(round_bigint(&real(-0.4, 128)), BigInt::from(0));
    }

    #[test]
    fn omega_cubed_is_one() {
        let w = BigComplex::omega(256);
        let d = &w.powi(3) - &BigComplex::one(256);
        assert!(d.log2_abs() < -250.0);
        let z = BigComplex::root_of_unity(1, 5, 256).powi(5);
        assert!(z.log2_dist(&BigComplex::one(256)) < -240.0);
    }

    #[test]
    fn exp_ln_inverse() {
        let z = BigComplex::from_f64(0.3, -2.7, 256);
        assert!(z.ln().exp().log2_dist(&z) < -245.0);
        let s = z.sqrt();
        assert!((&s * &s).log2_dist(&z) < -245.0);
        let c = BigComplex::from_int(-3, 256).sqrt();
        assert!(c.im_f64() > 1.7);
    }

    #[test]
    fn precision_is_min() {
        let a = BigComplex::one(128);
        let b = BigComplex::one(512);
        assert_eq!((&a + &b).prec(), 128);
    }
}
