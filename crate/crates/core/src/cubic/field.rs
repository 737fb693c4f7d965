//! Exact arithmetic in K = ℚ(θ), θ³ = n = hk², on the integral basis {1, θ, φ}
//! with φ = θ²/k.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith;
use crate::eisenstein::validate_n;
use crate::error::{Error, Result};
use crate::mp::{self, BigComplex, BigReal};

/// The pure cubic field ℚ(∛n) for admissible n.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct CubicField {
    pub n: i64,
    pub h: i64,
    pub k: i64,
}

/// Description of the ring of integers.
#[derive(Clone, Debug, Serialize)]
pub struct IntegralBasis {
    pub n: i64,
    pub h: i64,
    pub k: i64,
    /// Human-readable basis elements.
    pub basis: [String; 3],
    pub discriminant: i64,
}

impl CubicField {
    pub fn new(n: i64) -> Result<Arc<CubicField>> {
        validate_n(n)?;
        let (mut h, mut k) = (1, 1);
        for (p, e) in arith::factorize(n) {
            match e {
                1 => h *= p,
                2 => k *= p,
                _ => return Err(Error::Hypothesis(format!("n={n} is not cube-free"))),
            }
        }
        Ok(Arc::new(CubicField { n, h, k }))
    }

    /// Largest squarefree divisor n′ = hk.
    pub fn n_prime(&self) -> i64 {
        self.h * self.k
    }

    /// −27(hk)².
    pub fn discriminant(&self) -> i64 {
        -27 * self.n_prime() * self.n_prime()
    }

    /// (8/9π)·√|d|.
    pub fn minkowski_bound(&self) -> f64 {
        8.0 / (9.0 * std::f64::consts::PI) * (self.discriminant().abs() as f64).sqrt()
    }

    pub fn integral_basis(&self) -> IntegralBasis {
        let third = if self.k == 1 { format!("∛{}", self.n * self.n) } else { format!("∛{}/{}", self.n * self.n, self.k) };
        IntegralBasis {
            n: self.n,
            h: self.h,
            k: self.k,
            basis: ["1".into(), format!("∛{}", self.n), third],
            discriminant: self.discriminant(),
        }
    }

    /// Real cube root of n.
    pub fn theta_real(&self, prec: usize) -> BigReal {
        mp::cbrt(&mp::real_int(self.n, prec + 16), prec)
    }
}

fn r(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// c₀ + c₁θ + c₂φ with rational cᵢ.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct CubicFieldElem {
    pub field: Arc<CubicField>,
    pub c: [BigRational; 3],
}

impl fmt::Debug for CubicFieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for CubicFieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} + {}·θ + {}·φ", self.c[0], self.c[1], self.c[2])
    }
}

impl CubicFieldElem {
    pub fn new(field: &Arc<CubicField>, c: [BigRational; 3]) -> Self {
        CubicFieldElem { field: field.clone(), c }
    }

    pub fn from_ints(field: &Arc<CubicField>, c0: i64, c1: i64, c2: i64) -> Self {
        CubicFieldElem::new(field, [r(c0), r(c1), r(c2)])
    }

    pub fn from_bigints(field: &Arc<CubicField>, c: &[BigInt; 3]) -> Self {
        CubicFieldElem::new(field, [BigRational::from_integer(c[0].clone()), BigRational::from_integer(c[1].clone()), BigRational::from_integer(c[2].clone())])
    }

    pub fn from_rational(field: &Arc<CubicField>, q: BigRational) -> Self {
        CubicFieldElem::new(field, [q, BigRational::zero(), BigRational::zero()])
    }

    pub fn zero(field: &Arc<CubicField>) -> Self {
        CubicFieldElem::from_ints(field, 0, 0, 0)
    }

    pub fn one(field: &Arc<CubicField>) -> Self {
        CubicFieldElem::from_ints(field, 1, 0, 0)
    }

    pub fn theta(field: &Arc<CubicField>) -> Self {
        CubicFieldElem::from_ints(field, 0, 1, 0)
    }

    pub fn is_zero(&self) -> bool {
        self.c.iter().all(|x| x.is_zero())
    }

    /// Coordinates a + bθ + cθ² in the power basis.
    pub fn power_coords(&self) -> [BigRational; 3] {
        [self.c[0].clone(), self.c[1].clone(), &self.c[2] / r(self.field.k)]
    }

    pub fn from_power_coords(field: &Arc<CubicField>, p: [BigRational; 3]) -> Self {
        let [a, b, c] = p;
        CubicFieldElem::new(field, [a, b, c * r(field.k)])
    }

    pub fn add(&self, o: &Self) -> Self {
        CubicFieldElem::new(&self.field, [&self.c[0] + &o.c[0], &self.c[1] + &o.c[1], &self.c[2] + &o.c[2]])
    }

    pub fn sub(&self, o: &Self) -> Self {
        CubicFieldElem::new(&self.field, [&self.c[0] - &o.c[0], &self.c[1] - &o.c[1], &self.c[2] - &o.c[2]])
    }

    pub fn neg(&self) -> Self {
        CubicFieldElem::new(&self.field, [-&self.c[0], -&self.c[1], -&self.c[2]])
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        CubicFieldElem::new(&self.field, [&self.c[0] * q, &self.c[1] * q, &self.c[2] * q])
    }

    /// θ² = kφ, θφ = hk, φ² = hθ.
    pub fn mul(&self, o: &Self) -> Self {
        let (h, k) = (r(self.field.h), r(self.field.k));
        let [x0, x1, x2] = &self.c;
        let [y0, y1, y2] = &o.c;
        let c0 = x0 * y0 + &h * &k * (x1 * y2 + x2 * y1);
        let c1 = x0 * y1 + x1 * y0 + &h * (x2 * y2);
        let c2 = x0 * y2 + x2 * y0 + &k * (x1 * y1);
        CubicFieldElem::new(&self.field, [c0, c1, c2])
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = CubicFieldElem::one(&self.field);
        let mut b = self.clone();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            b = b.mul(&b);
            e >>= 1;
        }
        acc
    }

    /// N(a + bθ + cθ²) = a³ + nb³ + n²c³ − 3nabc.
    pub fn norm(&self) -> BigRational {
        let n = r(self.field.n);
        let [a, b, c] = self.power_coords();
        &a * &a * &a + &n * &b * &b * &b + &n * &n * &c * &c * &c - r(3) * &n * &a * &b * &c
    }

    pub fn trace(&self) -> BigRational {
        r(3) * &self.c[0]
    }

    /// Product of the two other conjugates, so that x·adj(x) = N(x).
    pub fn adjugate(&self) -> Self {
        let n = r(self.field.n);
        let [a, b, c] = self.power_coords();
        let p = [&a * &a - &n * &b * &c, &n * &c * &c - &a * &b, &b * &b - &a * &c];
        CubicFieldElem::from_power_coords(&self.field, p)
    }

    pub fn inv(&self) -> Option<Self> {
        let nm = self.norm();
        if nm.is_zero() {
            return None;
        }
        Some(self.adjugate().scale(&(BigRational::one() / nm)))
    }

    pub fn div(&self, o: &Self) -> Option<Self> {
        Some(self.mul(&o.inv()?))
    }

    /// Coefficients (e₂, e₁, e₀) of x³ + e₂x² + e₁x + e₀.
    pub fn char_poly(&self) -> [BigRational; 3] {
        let t = self.trace();
        let t2 = self.mul(self).trace();
        let s2 = (&t * &t - t2) / r(2);
        [-t, s2, -self.norm()]
    }

    pub fn is_integral(&self) -> bool {
        self.char_poly().iter().all(|c| c.is_integer())
    }

    /// Integer coordinates on the integral basis.
    pub fn int_coords(&self) -> Option<[BigInt; 3]> {
        if self.c.iter().all(|x| x.is_integer()) {
            Some([self.c[0].to_integer(), self.c[1].to_integer(), self.c[2].to_integer()])
        } else {
            None
        }
    }

    /// Least common denominator of the coordinates.
    pub fn denominator(&self) -> BigInt {
        self.c.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
    }

    /// Bits needed to hold the largest numerator or denominator.
    pub fn height_bits(&self) -> u64 {
        self.c.iter().map(|x| x.numer().bits().max(x.denom().bits())).max().unwrap_or(0)
    }

    /// Real embedding θ ↦ ∛n.
    pub fn real_embedding(&self, prec: usize) -> BigReal {
        let wp = prec + self.height_bits() as usize + 32;
        let t = self.field.theta_real(wp);
        let [a, b, c] = self.power_coords();
        let t2 = t.mul(&t, wp, mp::RM);
        let v = mp::real_ratio(&a, wp)
            .add(&mp::real_ratio(&b, wp).mul(&t, wp, mp::RM), wp, mp::RM)
            .add(&mp::real_ratio(&c, wp).mul(&t2, wp, mp::RM), wp, mp::RM);
        let mut v = v;
        v.set_precision(prec, mp::RM).expect("precision");
        v
    }

    /// Complex embedding θ ↦ ω∛n.
    pub fn complex_embedding(&self, prec: usize) -> BigComplex {
        let wp = prec + self.height_bits() as usize + 32;
        let t = BigComplex::from_real(self.field.theta_real(wp), wp) * BigComplex::omega(wp);
        let [a, b, c] = self.power_coords();
        let v = BigComplex::from_ratio(&a, wp) + &t * &BigComplex::from_ratio(&b, wp) + &(&t * &t) * &BigComplex::from_ratio(&c, wp);
        v.with_prec(prec)
    }

    pub fn is_rational(&self) -> bool {
        self.c[1].is_zero() && self.c[2].is_zero()
    }

    pub fn is_positive_real(&self, prec: usize) -> bool {
        self.real_embedding(prec).is_positive()
    }
}

/// Brute-force check that no (x₀ + x₁θ + x₂φ)/p with 0 ≤ xᵢ < p, not all zero, is integral,
/// for every p dividing the discriminant of ℤ[θ].
pub fn integral_basis_oracle(field: &Arc<CubicField>) -> bool {
    let mut ps = arith::prime_divisors(3 * field.n);
    ps.sort_unstable();
    ps.dedup();
    for p in ps {
        let pr = BigRational::from_integer(BigInt::from(p));
        for x0 in 0..p {
            for x1 in 0..p {
                for x2 in 0..p {
                    if x0 == 0 && x1 == 0 && x2 == 0 {
                        continue;
                    }
                    let e = CubicFieldElem::from_ints(field, x0, x1, x2).scale(&(BigRational::one() / &pr));
                    if e.is_integral() {
                        return false;
                    }
                }
            }
        }
    }
    // and the basis itself is integral
    [CubicFieldElem::from_ints(field, 0, 1, 0), CubicFieldElem::from_ints(field, 0, 0, 1)].iter().all(|e| e.is_integral())
}

/// Discriminant of the basis {1, θ, φ} from the trace form.
pub fn trace_form_discriminant(field: &Arc<CubicField>) -> BigRational {
    let basis = [CubicFieldElem::from_ints(field, 1, 0, 0), CubicFieldElem::from_ints(field, 0, 1, 0), CubicFieldElem::from_ints(field, 0, 0, 1)];
    let mut m = vec![vec![BigRational::zero(); 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            m[i][j] = basis[i].mul(&basis[j]).trace();
        }
    }
    det3(&m)
}

pub fn det3(m: &[Vec<BigRational>]) -> BigRational {
    &m[0][0] * (&m[1][1] * &m[2][2] - &m[1][2] * &m[2][1]) - &m[0][1] * (&m[1][0] * &m[2][2] - &m[1][2] * &m[2][0])
        + &m[0][2] * (&m[1][0] * &m[2][1] - &m[1][1] * &m[2][0])
}

impl CubicFieldElem {
    /// log |x| in the real embedding, as f64.
    pub fn log_abs_real(&self) -> f64 {
        let v = self.real_embedding(128);
        mp::log2_abs(&v) * std::f64::consts::LN_2
    }

    pub fn abs_real_gt_one(&self) -> bool {
        let v = self.real_embedding(128);
        mp::cmp(&v.abs(), &mp::real_int(1, 128)) == std::cmp::Ordering::Greater
    }

    pub fn signum_real(&self) -> i32 {
        let v = self.real_embedding(128);
        if v.is_zero() {
            0
        } else if v.is_positive() {
            1
        } else {
            -1
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basis_and_discriminant() {
        for n in [5, 7, 11, 13, 25, 49, 77] {
            let Ok(f) = CubicField::new(n) else { continue };
            assert!(integral_basis_oracle(&f), "n={n}");
            assert_eq!(trace_form_discriminant(&f), r(f.discriminant()), "n={n}");
        }
        let f = CubicField::new(5).unwrap();
        assert_eq!(f.discriminant(), -675);
        let f = CubicField::new(25).unwrap();
        assert_eq!((f.h, f.k), (1, 5));
    }

    #[test]
    fn norm_multiplicative_and_inverse() {
        let f = CubicField::new(25).unwrap();
        let x = CubicFieldElem::from_ints(&f, 3, -2, 5);
        let y = CubicFieldElem::from_ints(&f, -1, 4, 1);
        assert_eq!(x.mul(&y).norm(), x.norm() * y.norm());
        assert_eq!(x.mul(&x.inv().unwrap()), CubicFieldElem::one(&f));
        let t = CubicFieldElem::theta(&f);
        assert_eq!(t.pow(3), CubicFieldElem::from_ints(&f, 25, 0, 0));
    }

    #[test]
    fn embeddings_multiply() {
        let f = CubicField::new(7).unwrap();
        let x = CubicFieldElem::from_ints(&f, 4, 2, 1);
        let n = x.norm();
        assert_eq!(n, r(1));
        let re = x.real_embedding(128);
        let c = x.complex_embedding(128);
        let prod = re.mul(&c.norm_sqr(), 128, mp::RM);
        assert!((mp::to_f64(&prod) - 1.0).abs() < 1e-30);
    }
}
