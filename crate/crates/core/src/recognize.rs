//! Rational reconstruction of high-precision reals by continued fractions.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::mp::{self, BigComplex, BigReal};

/// Continued-fraction convergents of x until the denominator exceeds 10^max_digits.
pub fn convergents(x: &BigReal, max_digits: u32) -> Vec<BigRational> {
    let p = x.mantissa_max_bit_len().unwrap_or(64).max(64);
    let limit = BigInt::from(10).pow(max_digits);
    let (mut h0, mut h1) = (BigInt::zero(), BigInt::one());
    let (mut k0, mut k1) = (BigInt::one(), BigInt::zero());
    let mut r = x.clone();
    let mut out = Vec::new();
    for _ in 0..(max_digits as usize * 5 + 64) {
        let a = mp::floor_bigint(&r);
        let h2 = &a * &h1 + &h0;
        let k2 = &a * &k1 + &k0;
        if k2 > limit {
            break;
        }
        out.push(BigRational::new(h2.clone(), k2.clone()));
        let frac = r.sub(&mp::real_bigint(&a, p), p, mp::RM);
        if frac.is_zero() || mp::log2_abs(&frac) < -(p as f64 - 8.0) {
            break;
        }
        r = mp::real_int(1, p).div(&frac, p, mp::RM);
        h0 = h1;
        h1 = h2;
        k0 = k1;
        k1 = k2;
    }
    out
}

/// The first convergent reproducing x to 2^{-tol_bits}, relative to max(1, |x|).
pub fn recognize_real(x: &BigReal, max_digits: u32, tol_bits: usize) -> Result<BigRational> {
    let p = x.mantissa_max_bit_len().unwrap_or(64).max(64);
    let scale = mp::log2_abs(x).max(0.0);
    for c in convergents(x, max_digits) {
        let d = x.sub(&mp::real_ratio(&c, p), p, mp::RM);
        if d.is_zero() || mp::log2_abs(&d) - scale < -(tol_bits as f64) {
            return Ok(c);
        }
    }
    Err(Error::Precision(format!("no rational with at most {max_digits} denominator digits reproduces the value")))
}

/// Rational value of a complex number with negligible imaginary part.
pub fn recognize_rational(z: &BigComplex, max_digits: u32) -> Result<BigRational> {
    let p = z.prec();
    let tol = p / 2;
    let scale = z.log2_abs().max(0.0);
    if !z.im().is_zero() && mp::log2_abs(z.im()) - scale > -(tol as f64) {
        return Err(Error::Precision(format!("imaginary part 2^{:.1} is not negligible", mp::log2_abs(z.im()))));
    }
    recognize_real(z.re(), max_digits, tol)
}

pub fn is_negligible(x: &BigReal, scale_log2: f64, bits: f64) -> bool {
    x.is_zero() || mp::log2_abs(x) - scale_log2.max(0.0) < -bits
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn simple_values() {
        let half = BigComplex::from_f64(0.5, 0.0, 256);
        assert_eq!(recognize_rational(&half, 10).unwrap(), BigRational::new(1.into(), 2.into()));
        let p = 400;
        let x = mp::real_int(22, p).div(&mp::real_int(7, p), p, mp::RM);
        assert_eq!(recognize_real(&x, 100, 200).unwrap(), BigRational::new(22.into(), 7.into()));
        let x = mp::real_int(-355, p).div(&mp::real_int(113, p), p, mp::RM);
        assert_eq!(recognize_real(&x, 100, 200).unwrap(), BigRational::new((-355).into(), 113.into()));
    }

    #[test]
    fn irrational_is_unrecognized() {
        let p = 256;
        let x = mp::sqrt(&mp::real_int(2, p), p);
        assert!(recognize_real(&x, 20, 200).is_err());
        let z = BigComplex::from_f64(1.0, 0.25, 256);
        assert!(recognize_rational(&z, 10).is_err());
    }
}
