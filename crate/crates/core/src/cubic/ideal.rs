//! Fractional ideals of O as ℤ-lattices in Hermite normal form, and the
//! prime ideals above small rational primes.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::field::{CubicField, CubicFieldElem};
use crate::arith;

/// Upper-triangular row HNF of an integer lattice of full rank 3.
pub fn hnf(rows: &[[BigInt; 3]]) -> Option<[[BigInt; 3]; 3]> {
    let mut m: Vec<[BigInt; 3]> = rows.to_vec();
    let mut out: Vec<[BigInt; 3]> = Vec::new();
    for col in 0..3 {
        // gcd-combine all rows into one with a pivot in this column
        let mut pivot: Option<[BigInt; 3]> = None;
        let mut rest = Vec::new();
        for r in m.drain(..) {
            if r[col].is_zero() {
                rest.push(r);
                continue;
            }
            match pivot.take() {
                None => pivot = Some(r),
                Some(p) => {
                    let g = p[col].extended_gcd(&r[col]);
                    let (a, b) = (&p[col] / &g.gcd, &r[col] / &g.gcd);
                    let np: [BigInt; 3] = std::array::from_fn(|i| &g.x * &p[i] + &g.y * &r[i]);
                    let nr: [BigInt; 3] = std::array::from_fn(|i| &a * &r[i] - &b * &p[i]);
                    pivot = Some(np);
                    rest.push(nr);
                }
            }
        }
        let mut p = pivot?;
        if p[col].is_negative() {
            p = std::array::from_fn(|i| -&p[i]);
        }
        out.push(p);
        m = rest;
    }
    let mut h: [[BigInt; 3]; 3] = [out[0].clone(), out[1].clone(), out[2].clone()];
    for col in 1..3 {
        for r in 0..col {
            let q = h[r][col].div_floor(&h[col][col]);
            if !q.is_zero() {
                let sub = h[col].clone();
                for i in 0..3 {
                    h[r][i] -= &q * &sub[i];
                }
            }
        }
    }
    Some(h)
}

/// A nonzero fractional ideal (1/d)·H with H in HNF and gcd(d, content(H)) = 1.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Ideal {
    pub field_n: i64,
    pub den: BigInt,
    pub hnf: [[BigInt; 3]; 3],
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(1/{})[{:?}]", self.den, self.hnf)
    }
}

impl Ideal {
    /// The ℤ-span of the given elements, which must have rank 3.
    pub fn from_span(gens: &[CubicFieldElem]) -> Option<Ideal> {
        let n = gens.first()?.field.n;
        let d = gens.iter().fold(BigInt::one(), |acc, g| acc.lcm(&g.denominator()));
        let dr = BigRational::from_integer(d.clone());
        let rows: Vec<[BigInt; 3]> = gens.iter().map(|g| std::array::from_fn(|i| (&g.c[i] * &dr).to_integer())).collect();
        let h = hnf(&rows)?;
        let g = h.iter().flatten().fold(d.clone(), |acc, x| acc.gcd(x));
        Some(Ideal { field_n: n, den: &d / &g, hnf: std::array::from_fn(|i| std::array::from_fn(|j| &h[i][j] / &g)) })
    }

    pub fn unit(field: &Arc<CubicField>) -> Ideal {
        Ideal::from_span(&basis(field)).expect("O has rank 3")
    }

    /// Ideal generated as an O-module by the given elements.
    pub fn generated(field: &Arc<CubicField>, gens: &[CubicFieldElem]) -> Option<Ideal> {
        let b = basis(field);
        let span: Vec<CubicFieldElem> = gens.iter().flat_map(|g| b.iter().map(move |w| g.mul(w))).collect();
        Ideal::from_span(&span)
    }

    pub fn principal(x: &CubicFieldElem) -> Option<Ideal> {
        Ideal::generated(&x.field, std::slice::from_ref(x))
    }

    /// ℤ-basis as field elements.
    pub fn z_basis(&self, field: &Arc<CubicField>) -> Vec<CubicFieldElem> {
        let dr = BigRational::from_integer(self.den.clone());
        self.hnf
            .iter()
            .map(|row| CubicFieldElem::new(field, std::array::from_fn(|i| BigRational::from_integer(row[i].clone()) / &dr)))
            .collect()
    }

    pub fn mul(&self, o: &Ideal, field: &Arc<CubicField>) -> Ideal {
        let a = self.z_basis(field);
        let b = o.z_basis(field);
        let prods: Vec<CubicFieldElem> = a.iter().flat_map(|x| b.iter().map(move |y| x.mul(y))).collect();
        Ideal::from_span(&prods).expect("product of nonzero ideals")
    }

    pub fn scale(&self, x: &CubicFieldElem) -> Ideal {
        let prods: Vec<CubicFieldElem> = self.z_basis(&x.field).iter().map(|b| b.mul(x)).collect();
        Ideal::from_span(&prods).expect("nonzero scalar")
    }

    pub fn is_integral(&self) -> bool {
        self.den.is_one()
    }

    /// Absolute norm [O : I] (for fractional I, the quotient of norms).
    pub fn norm(&self) -> BigRational {
        let idx = &self.hnf[0][0] * &self.hnf[1][1] * &self.hnf[2][2];
        BigRational::new(idx, self.den.pow(3))
    }

    pub fn contains(&self, x: &CubicFieldElem) -> bool {
        // solve v·(H/d) = x with v integral, H upper triangular
        let d = BigRational::from_integer(self.den.clone());
        let mut rem: [BigRational; 3] = std::array::from_fn(|i| &x.c[i] * &d);
        for col in 0..3 {
            let piv = BigRational::from_integer(self.hnf[col][col].clone());
            let v = &rem[col] / &piv;
            if !v.is_integer() {
                return false;
            }
            for j in col..3 {
                rem[j] = &rem[j] - &v * BigRational::from_integer(self.hnf[col][j].clone());
            }
        }
        true
    }

    pub fn contains_ideal(&self, o: &Ideal, field: &Arc<CubicField>) -> bool {
        o.z_basis(field).iter().all(|x| self.contains(x))
    }

    pub fn pow(&self, e: u32, field: &Arc<CubicField>) -> Ideal {
        let mut acc = Ideal::unit(field);
        for _ in 0..e {
            acc = acc.mul(self, field);
        }
        acc
    }

    /// v_P(x) for x ≠ 0 integral, by membership in successive powers.
    pub fn valuation_of(&self, x: &CubicFieldElem, field: &Arc<CubicField>) -> u32 {
        let mut k = 0;
        let mut pk = self.clone();
        while pk.contains(x) {
            k += 1;
            pk = pk.mul(self, field);
            if k > 200 {
                break;
            }
        }
        k
    }
}

pub fn basis(field: &Arc<CubicField>) -> Vec<CubicFieldElem> {
    vec![CubicFieldElem::from_ints(field, 1, 0, 0), CubicFieldElem::from_ints(field, 0, 1, 0), CubicFieldElem::from_ints(field, 0, 0, 1)]
}

/// A prime ideal with its residue degree and ramification index.
#[derive(Clone, Debug)]
pub struct PrimeIdeal {
    pub p: i64,
    pub f: u32,
    pub e: u32,
    /// Second generator alongside p, in integral-basis coordinates.
    pub generator: [i64; 3],
    pub ideal: Ideal,
}

impl PrimeIdeal {
    pub fn norm(&self) -> i64 {
        self.p.pow(self.f)
    }
}

/// All prime ideals above p.
pub fn primes_above(field: &Arc<CubicField>, p: i64) -> Vec<PrimeIdeal> {
    let pe = CubicFieldElem::from_ints(field, p, 0, 0);
    let mk = |g: [i64; 3], f: u32, e: u32| {
        let gen = CubicFieldElem::from_ints(field, g[0], g[1], g[2]);
        let ideal = Ideal::generated(field, &[pe.clone(), gen]).expect("rank 3");
        PrimeIdeal { p, f, e, generator: g, ideal }
    };
    if field.k % p == 0 {
        // φ³ = h²k
        return vec![mk([0, 0, 1], 1, 3)];
    }
    // p ∤ [O : ℤ[θ]] = k, so x³ − n mod p describes the splitting
    let nm = field.n.rem_euclid(p);
    let roots: Vec<i64> = (0..p).filter(|r| (r * r % p * r - nm).rem_euclid(p) == 0).collect();
    match roots.len() {
        0 => vec![mk([p, 0, 0], 3, 1)],
        1 => {
            let r = roots[0];
            if p == 3 || field.h % p == 0 {
                return vec![mk([-r, 1, 0], 1, 3)];
            }
            // x³ − n = (x − r)(x² + rx + r²)
            let quad = [r * r, r, field.k]; // θ² + rθ + r² in basis coordinates
            vec![mk([-r, 1, 0], 1, 1), mk([quad[0], quad[1], quad[2]], 2, 1)]
        }
        _ => roots.iter().map(|&r| mk([-r, 1, 0], 1, 1)).collect(),
    }
}

/// Prime ideals of norm at most `bound`.
pub fn factor_base(field: &Arc<CubicField>, bound: f64) -> Vec<PrimeIdeal> {
    arith::primes_up_to(bound.floor() as i64)
        .into_iter()
        .flat_map(|p| primes_above(field, p))
        .filter(|pr| (pr.norm() as f64) <= bound)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn hnf_basic() {
        let h = hnf(&[[int(2), int(4), int(6)], [int(0), int(3), int(9)], [int(1), int(1), int(1)], [int(0), int(0), int(5)]]).unwrap();
        assert_eq!(&h[0][0] * &h[1][1] * &h[2][2], int(1));
    }

    #[test]
    fn primes_multiply_to_p() {
        for n in [5i64, 7, 11, 13, 25, 49, 77] {
            let f = CubicField::new(n).unwrap();
            for p in arith::primes_up_to(40) {
                let ps = primes_above(&f, p);
                let sum_ef: u32 = ps.iter().map(|q| q.e * q.f).sum();
                assert_eq!(sum_ef, 3, "n={n} p={p}");
                let mut prod = Ideal::unit(&f);
                for q in &ps {
                    assert_eq!(q.ideal.norm(), BigRational::from_integer(int(q.norm())), "n={n} p={p}");
                    prod = prod.mul(&q.ideal.pow(q.e, &f), &f);
                }
                assert_eq!(prod, Ideal::principal(&CubicFieldElem::from_ints(&f, p, 0, 0)).unwrap(), "n={n} p={p}");
            }
        }
    }

    #[test]
    fn principal_norm_matches_element_norm() {
        let f = CubicField::new(25).unwrap();
        let x = CubicFieldElem::from_ints(&f, 3, 1, -2);
        let i = Ideal::principal(&x).unwrap();
        assert_eq!(i.norm(), x.norm().abs());
        assert!(i.contains(&x));
        let inv = Ideal::principal(&x.inv().unwrap()).unwrap();
        assert_eq!(i.mul(&inv, &f), Ideal::unit(&f));
    }
}
