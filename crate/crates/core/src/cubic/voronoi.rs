//! Fundamental unit of ℚ(∛n) by walking the chain of relative minima of O.
//!
//! With one real place r and one complex place c, the minima of a lattice
//! containing 1 as a minimum are ordered by |·|_r. The successor of 1 in
//! L = θ⁻¹O is the β ∈ L with |β_c| < 1 and the least |β_r| > 1. The chain
//! θ₀ = 1, θ_{j+1} = θ_j·β_j meets its first unit at the fundamental unit.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use super::field::{CubicField, CubicFieldElem};
use super::lattice;
use crate::error::{Error, Result};
use crate::mp;

/// Evidence that the unit search ran to completion.
#[derive(Clone, Debug, Serialize)]
pub struct UnitCertificate {
    /// Number of minima visited before the first unit.
    pub chain_length: usize,
    /// Real-place box sizes needed at each step.
    pub box_sizes: Vec<f64>,
    /// Norms of the minima on the chain, starting with 1.
    pub minima_norms: Vec<i64>,
    /// |d| < 4ε³ + 24 holds for the unit returned.
    pub artin_bound_ok: bool,
    /// Exponents k for which the unit was checked not to be a k-th power.
    pub root_checks: Vec<u32>,
}

#[derive(Clone, Debug)]
pub struct FundamentalUnit {
    pub unit: CubicFieldElem,
    /// log ε in the real embedding (ε_r > 1).
    pub regulator: f64,
    pub certificate: UnitCertificate,
}

const PREC: usize = 256;

/// (β_r, Re β_c, Im β_c).
pub fn embed_f64(x: &CubicFieldElem) -> [f64; 3] {
    let r = mp::to_f64(&x.real_embedding(PREC));
    let c = x.complex_embedding(PREC);
    [r, c.re_f64(), c.im_f64()]
}

pub(crate) fn combine(basis: &[CubicFieldElem], coeffs: &[i64]) -> CubicFieldElem {
    let f = &basis[0].field;
    let mut acc = CubicFieldElem::zero(f);
    for (b, &c) in basis.iter().zip(coeffs) {
        if c != 0 {
            acc = acc.add(&b.scale(&BigRational::from_integer(BigInt::from(c))));
        }
    }
    acc
}

/// Reduce an exact basis by LLL on its embedding vectors, iterating until stable.
pub fn reduce_basis(basis: &[CubicFieldElem]) -> Vec<CubicFieldElem> {
    let mut b = basis.to_vec();
    for _ in 0..32 {
        let rows: Vec<Vec<f64>> = b.iter().map(|x| embed_f64(x).to_vec()).collect();
        let (_, u) = lattice::lll(&rows);
        if u == lattice::identity(3) {
            break;
        }
        b = u.iter().map(|row| combine(&b, row)).collect();
    }
    b
}

/// The next minimum after 1 in the lattice spanned by `basis`, and the box size used.
pub(crate) fn successor(basis: &[CubicFieldElem]) -> Result<(CubicFieldElem, f64)> {
    let mut t = 2.0f64;
    let one = mp::real_int(1, PREC);
    for _ in 0..200 {
        let rows: Vec<Vec<f64>> = basis
            .iter()
            .map(|x| {
                let e = embed_f64(x);
                vec![e[0] / t, e[1], e[2]]
            })
            .collect();
        let cands = lattice::fincke_pohst(&lattice::gram(&rows), 2.0);
        let mut best: Option<(CubicFieldElem, mp::BigReal)> = None;
        for v in cands {
            let beta = combine(basis, &v);
            if beta.is_rational() {
                continue;
            }
            let c = beta.complex_embedding(PREC);
            if mp::cmp(&c.norm_sqr(), &one) != std::cmp::Ordering::Less {
                continue;
            }
            let mut beta = beta;
            let mut r = beta.real_embedding(PREC);
            if r.is_negative() {
                beta = beta.neg();
                r = mp::rneg(&r);
            }
            if mp::to_f64(&r) > t * (1.0 + 1e-9) {
                continue;
            }
            match &best {
                Some((_, br)) if mp::cmp(&r, br) != std::cmp::Ordering::Less => {}
                _ => best = Some((beta, r)),
            }
        }
        if let Some((b, r)) = best {
            if mp::to_f64(&r) <= t {
                return Ok((b, t));
            }
        }
        t *= 2.0;
    }
    Err(Error::Precision("relative minimum search did not terminate".into()))
}

/// Positive fundamental unit ε > 1 of the maximal order.
pub fn fundamental_unit(field: &Arc<CubicField>) -> Result<FundamentalUnit> {
    let f = field;
    let basis_o = vec![CubicFieldElem::from_ints(f, 1, 0, 0), CubicFieldElem::from_ints(f, 0, 1, 0), CubicFieldElem::from_ints(f, 0, 0, 1)];
    let mut theta = CubicFieldElem::one(f);
    let mut lat = reduce_basis(&basis_o);
    let mut box_sizes = Vec::new();
    let mut norms = vec![1i64];
    for step in 0..100_000 {
        let (mu, t) = successor(&lat)?;
        box_sizes.push(t);
        theta = theta.mul(&mu);
        let nm = theta.norm();
        norms.push(nm.to_integer().to_i64().unwrap_or(i64::MAX));
        if nm.abs().is_one() {
            let unit = if theta.signum_real() < 0 { theta.neg() } else { theta };
            let regulator = unit.log_abs_real();
            let mut cert = UnitCertificate { chain_length: step + 1, box_sizes, minima_norms: norms, artin_bound_ok: false, root_checks: Vec::new() };
            let d = f.discriminant().unsigned_abs() as f64;
            cert.artin_bound_ok = d < 4.0 * (3.0 * regulator).exp() + 24.0;
            // if ε = η^k then |d| < 4η³+24 bounds k
            let kmax = if d > 28.0 { (3.0 * regulator / ((d - 24.0) / 4.0).ln()).floor() as u32 } else { 1 };
            for k in 2..=kmax.max(1) {
                if crate::arith::is_prime(k as i64) {
                    if kth_root(&unit, k).is_some() {
                        return Err(Error::Check(format!("unit found is a {k}-th power")));
                    }
                    cert.root_checks.push(k);
                }
            }
            return Ok(FundamentalUnit { unit, regulator, certificate: cert });
        }
        let inv = mu.inv().ok_or_else(|| Error::Precision("zero minimum".into()))?;
        let next: Vec<CubicFieldElem> = lat.iter().map(|b| b.mul(&inv)).collect();
        lat = reduce_basis(&next);
    }
    Err(Error::Precision("unit chain too long".into()))
}

/// γ ∈ O with γᵏ = x, if one exists.
pub fn kth_root(x: &CubicFieldElem, k: u32) -> Option<CubicFieldElem> {
    let f = &x.field;
    let p = PREC + x.height_bits() as usize;
    let r = x.real_embedding(p);
    let sign = if r.is_negative() { -1 } else { 1 };
    if sign < 0 && k % 2 == 0 {
        return None;
    }
    let rr = mp::exp(&mp::ln(&r.abs(), p).div(&mp::real_int(k as i64, p), p, mp::RM), p);
    let rr = if sign < 0 { mp::rneg(&rr) } else { rr };
    let c = x.complex_embedding(p);
    let base = c.ln().div_int(k as i64).exp();
    let theta = f.theta_real(p);
    let t2 = theta.mul(&theta, p, mp::RM);
    let kk = mp::real_int(f.k, p);
    for j in 0..k as i64 {
        let cj = &base * &mp::BigComplex::root_of_unity(j, k as i64, p);
        // γ = a + bθ + cθ² ; γ_r = a+bt+ct², γ_c = a+bωt+cω²t²
        // trace-type recovery: a = (γ_r + 2 Re γ_c)/3, etc.
        let re_c = cj.re().clone();
        let a = rr.add(&re_c.mul(&mp::real_int(2, p), p, mp::RM), p, mp::RM).div(&mp::real_int(3, p), p, mp::RM);
        let w = cj.clone() * mp::BigComplex::omega(p).conj();
        let b = rr.add(&w.re().mul(&mp::real_int(2, p), p, mp::RM), p, mp::RM).div(&mp::real_int(3, p).mul(&theta, p, mp::RM), p, mp::RM);
        let w2 = cj * mp::BigComplex::omega(p);
        let c2 = rr.add(&w2.re().mul(&mp::real_int(2, p), p, mp::RM), p, mp::RM).div(&mp::real_int(3, p).mul(&t2, p, mp::RM), p, mp::RM);
        // integral-basis coordinates: x₀ = a, x₁ = b, x₂ = k·c
        let x0 = mp::round_bigint(&a);
        let x1 = mp::round_bigint(&b);
        let x2 = mp::round_bigint(&c2.mul(&kk, p, mp::RM));
        let g = CubicFieldElem::from_bigints(f, &[x0, x1, x2]);
        if g.pow(k) == *x {
            return Some(g);
        }
    }
    None
}

/// Units of O with all coordinates in a box, by brute force. Test oracle.
pub fn brute_units(field: &Arc<CubicField>, bound: i64) -> Vec<CubicFieldElem> {
    let mut out = Vec::new();
    for a in -bound..=bound {
        for b in -bound..=bound {
            for c in -bound..=bound {
                let e = CubicFieldElem::from_ints(field, a, b, c);
                if e.norm().abs().is_one() {
                    out.push(e);
                }
            }
        }
    }
    out
}

impl FundamentalUnit {
    /// Power-basis coordinates (a, b, c) of ε = a + b∛n + c∛n².
    pub fn power_coords(&self) -> [BigRational; 3] {
        self.unit.power_coords()
    }

    pub fn is_zero(&self) -> bool {
        self.unit.c.iter().all(|c| c.is_zero())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn known_units() {
        for (n, p, lg) in [(5, [41, 24, 14], 4.812), (7, [4, 2, 1], 2.441), (11, [89, 40, 18], 5.587), (13, [94, 40, 17], 5.642)] {
            let f = CubicField::new(n).unwrap();
            let u = fundamental_unit(&f).unwrap();
            assert_eq!(u.power_coords(), [r(p[0]), r(p[1]), r(p[2])], "n={n}");
            assert!((u.regulator - lg).abs() < 1e-3);
            assert!(u.certificate.artin_bound_ok);
        }
    }

    #[test]
    fn brute_oracle_agrees() {
        for n in [5i64, 7, 11, 13, 25] {
            let f = CubicField::new(n).unwrap();
            let u = fundamental_unit(&f).unwrap();
            // every unit in the box is ±εᵏ
            for e in brute_units(&f, 30) {
                let l = e.log_abs_real() / u.regulator;
                let k = l.round();
                assert!((l - k).abs() < 1e-9, "n={n} {e}");
                let pw = if k >= 0.0 { u.unit.pow(k as u32) } else { u.unit.inv().unwrap().pow((-k) as u32) };
                assert!(pw == e || pw.neg() == e);
            }
        }
    }
}
