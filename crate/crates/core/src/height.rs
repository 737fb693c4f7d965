//! Canonical height on y² = x³ + D as a sum of Néron local heights.
//!
//! Normalized so that ĥ(P) = ½·lim h(x(2ᵏP))/4ᵏ with h(p/q) = log max(|p|, |q|).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::arith;
use crate::curve::ProjPoint;
use crate::mp::{self, BigReal, RM};

const WP: usize = 192;

pub fn canonical_height(p: &ProjPoint<BigRational>, d: &BigInt) -> f64 {
    if !p.is_affine() {
        return 0.0;
    }
    let q = p.normalized();
    archimedean(&q.x, d) + nonarchimedean(&q.x, &q.y, d)
}

fn r(v: i64) -> BigReal {
    mp::real_int(v, WP)
}

/// Tate's series on the model shifted so that x ≥ 1 on E(ℝ).
pub fn archimedean(x: &BigRational, d: &BigInt) -> f64 {
    let df = mp::real_bigint(d, WP);
    let cb = mp::cbrt(&df.abs(), WP);
    // the real 2-torsion point has x = −∛D
    let e = if d.is_positive() { mp::rneg(&cb) } else { cb };
    let s = r(1).sub(&e, WP, RM);
    // (x − s)³ + D = x³ + a2 x² + a4 x + a6
    let s2 = s.mul(&s, WP, RM);
    let a2 = s.mul(&r(-3), WP, RM);
    let a4 = s2.mul(&r(3), WP, RM);
    let a6 = df.sub(&s2.mul(&s, WP, RM), WP, RM);
    let b2 = a2.mul(&r(4), WP, RM);
    let b4 = a4.mul(&r(2), WP, RM);
    let b6 = a6.mul(&r(4), WP, RM);
    let b8 = a2.mul(&a6, WP, RM).mul(&r(4), WP, RM).sub(&a4.mul(&a4, WP, RM), WP, RM);
    let two_b4 = b4.mul(&r(2), WP, RM);
    let two_b6 = b6.mul(&r(2), WP, RM);

    let mut xv = mp::real_ratio(x, WP).add(&s, WP, RM);
    let mut acc = mp::ln(&xv.abs(), WP).div(&r(2), WP, RM);
    let mut weight = r(8);
    for _ in 0..80 {
        let t = r(1).div(&xv, WP, RM);
        let t2 = t.mul(&t, WP, RM);
        let t3 = t2.mul(&t, WP, RM);
        let t4 = t3.mul(&t, WP, RM);
        let z = r(1).sub(&b4.mul(&t2, WP, RM), WP, RM).sub(&two_b6.mul(&t3, WP, RM), WP, RM).sub(&b8.mul(&t4, WP, RM), WP, RM);
        let w = t.mul(&r(4), WP, RM).add(&b2.mul(&t2, WP, RM), WP, RM).add(&two_b4.mul(&t3, WP, RM), WP, RM).add(&b6.mul(&t4, WP, RM), WP, RM);
        acc = acc.add(&mp::ln(&z.abs(), WP).div(&weight, WP, RM), WP, RM);
        weight = weight.mul(&r(4), WP, RM);
        xv = z.div(&w, WP, RM);
    }
    mp::to_f64(&acc)
}

fn ord(v: &BigInt, p: &BigInt) -> Option<u64> {
    if v.is_zero() {
        return None;
    }
    let mut k = 0;
    let mut v = v.clone();
    while v.is_multiple_of(p) {
        v /= p;
        k += 1;
    }
    Some(k)
}

fn ord_q(v: &BigRational, p: &BigInt) -> Option<i64> {
    let a = ord(v.numer(), p)? as i64;
    Some(a - ord(v.denom(), p).unwrap_or(0) as i64)
}

/// Sum of the p-adic local heights, with the additive-reduction correction at
/// primes where P reduces to the singular point.
pub fn nonarchimedean(x: &BigRational, y: &BigRational, d: &BigInt) -> f64 {
    let den = x.denom();
    let mut acc = if den.is_one() { 0.0 } else { mp::to_f64(&mp::ln(&mp::real_bigint(den, WP), WP)) / 2.0 };
    let six_d: i64 = (d * BigInt::from(6)).abs().try_into().unwrap_or(0);
    let bad = if six_d > 0 { arith::prime_divisors(six_d) } else { vec![2, 3] };
    let psi2 = y * BigRational::from_integer(2.into());
    let psi3 = x.pow(4) * BigRational::from_integer(3.into()) + x * BigRational::from_integer(d * 12);
    let dx = x * x * BigRational::from_integer(3.into());
    for p in bad {
        let pb = BigInt::from(p);
        if den.is_multiple_of(&pb) {
            continue;
        }
        let singular = ord_q(&psi2, &pb).map_or(true, |v| v > 0) && ord_q(&dx, &pb).map_or(true, |v| v > 0);
        if !singular {
            continue;
        }
        let a = ord_q(&psi2, &pb).unwrap_or(i64::MAX / 8) as f64;
        let lam = match ord_q(&psi3, &pb) {
            Some(b) if (b as f64) < 3.0 * a => -(b as f64) / 8.0,
            _ => -a / 3.0,
        };
        acc += lam * (p as f64).ln();
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::curve::{rational_point, w_add, w_mul};

    fn pt(x: (i64, i64), y: (i64, i64)) -> ProjPoint<BigRational> {
        rational_point(BigRational::new(x.0.into(), x.1.into()), BigRational::new(y.0.into(), y.1.into()))
    }

    fn naive_limit(p: &ProjPoint<BigRational>, k: u32) -> f64 {
        let mut q = p.clone();
        for _ in 0..k {
            q = w_add(&q, &q);
        }
        let x = q.normalized().x;
        let m = x.numer().abs().max(x.denom().clone());
        mp::to_f64(&mp::ln(&mp::real_bigint(&m, WP), WP)) / 2.0 / 4f64.powi(k as i32)
    }

    #[test]
    fn quadratic_in_multiples() {
        for (d, g) in [(5i64, pt((-1, 1), (2, 1))), (41, pt((2, 1), (7, 1))), (-7, pt((2, 1), (1, 1))), (-2, pt((3, 1), (5, 1))), (17, pt((-2, 1), (3, 1)))] {
            let db = BigInt::from(d);
            let h1 = canonical_height(&g, &db);
            assert!(h1 > 0.0);
            for m in 2..=7 {
                let hm = canonical_height(&w_mul(m, &g), &db);
                assert!((hm / h1 - (m * m) as f64).abs() < 1e-9, "D={d} m={m}: {}", hm / h1);
            }
            assert!((naive_limit(&g, 6) - h1).abs() < 0.01, "D={d}");
        }
    }

    #[test]
    fn torsion_has_zero_height() {
        // (0, 3) has order 3 on y² = x³ + 9, (2, 3) has order 6 on y² = x³ + 1
        assert!(canonical_height(&pt((0, 1), (3, 1)), &BigInt::from(9)).abs() < 1e-12);
        assert!(canonical_height(&pt((2, 1), (3, 1)), &BigInt::from(1)).abs() < 1e-12);
        assert!(canonical_height(&pt((-1, 1), (0, 1)), &BigInt::from(1)).abs() < 1e-12);
    }
}
