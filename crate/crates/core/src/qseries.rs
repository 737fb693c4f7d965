//! Exact arithmetic in ℚ(ω) and truncated Laurent series over ℚ(ω), used to
//! extract q-expansions of the level-6 functions symbolically.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

use crate::mp::BigComplex;

/// a + bω with rational a, b.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QOmega {
    pub a: BigRational,
    pub b: BigRational,
}

impl fmt::Debug for QOmega {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} + {}ω)", self.a, self.b)
    }
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

impl QOmega {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        QOmega { a, b }
    }

    pub fn from_ints(a: i64, b: i64) -> Self {
        QOmega { a: rat(a), b: rat(b) }
    }

    pub fn from_rational(a: BigRational) -> Self {
        QOmega { a, b: BigRational::zero() }
    }

    pub fn zero() -> Self {
        QOmega::from_ints(0, 0)
    }

    pub fn one() -> Self {
        QOmega::from_ints(1, 0)
    }

    pub fn omega() -> Self {
        QOmega::from_ints(0, 1)
    }

    /// ζ₆ᵏ with ζ₆ = e^{πi/3} = 1 + ω.
    pub fn zeta6_pow(k: i64) -> Self {
        match k.rem_euclid(6) {
            0 => QOmega::from_ints(1, 0),
            1 => QOmega::from_ints(1, 1),
            2 => QOmega::from_ints(0, 1),
            3 => QOmega::from_ints(-1, 0),
            4 => QOmega::from_ints(-1, -1),
            _ => QOmega::from_ints(0, -1),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn conj(&self) -> Self {
        QOmega { a: &self.a - &self.b, b: -&self.b }
    }

    pub fn norm(&self) -> BigRational {
        &self.a * &self.a - &self.a * &self.b + &self.b * &self.b
    }

    pub fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        let c = self.conj();
        Some(QOmega { a: c.a / &n, b: c.b / &n })
    }

    pub fn scale(&self, r: &BigRational) -> Self {
        QOmega { a: &self.a * r, b: &self.b * r }
    }

    /// Real part a − b/2.
    pub fn re(&self) -> BigRational {
        &self.a - &self.b / rat(2)
    }

    /// Imaginary part divided by √3/2, i.e. b.
    pub fn im_over_sqrt3_half(&self) -> &BigRational {
        &self.b
    }

    /// Integer coordinates when both are integral.
    pub fn as_ints(&self) -> Option<(i64, i64)> {
        if self.a.is_integer() && self.b.is_integer() {
            Some((self.a.to_integer().to_i64()?, self.b.to_integer().to_i64()?))
        } else {
            None
        }
    }

    pub fn to_complex(&self, prec: usize) -> BigComplex {
        let w = BigComplex::omega(prec + 16);
        let a = BigComplex::from_ratio(&self.a, prec + 16);
        let b = BigComplex::from_ratio(&self.b, prec + 16);
        (a + w * b).with_prec(prec)
    }

    /// |z|² as a float.
    pub fn abs_f64(&self) -> f64 {
        self.norm().to_f64().unwrap_or(f64::INFINITY).sqrt()
    }
}

impl Add for &QOmega {
    type Output = QOmega;
    fn add(self, o: &QOmega) -> QOmega {
        QOmega { a: &self.a + &o.a, b: &self.b + &o.b }
    }
}

impl Sub for &QOmega {
    type Output = QOmega;
    fn sub(self, o: &QOmega) -> QOmega {
        QOmega { a: &self.a - &o.a, b: &self.b - &o.b }
    }
}

impl Mul for &QOmega {
    type Output = QOmega;
    fn mul(self, o: &QOmega) -> QOmega {
        let bd = &self.b * &o.b;
        QOmega { a: &self.a * &o.a - &bd, b: &self.a * &o.b + &self.b * &o.a - bd }
    }
}

impl Neg for &QOmega {
    type Output = QOmega;
    fn neg(self) -> QOmega {
        QOmega { a: -&self.a, b: -&self.b }
    }
}

/// Σ_{k ≥ val} c_k q^k known modulo q^{val + coeffs.len()}.
#[derive(Clone, Debug, PartialEq)]
pub struct QSeries {
    pub val: i64,
    pub coeffs: Vec<QOmega>,
}

impl QSeries {
    pub fn zero(val: i64, len: usize) -> Self {
        QSeries { val, coeffs: vec![QOmega::zero(); len] }
    }

    /// Exponent bound: coefficients are known for exponents < `end`.
    pub fn end(&self) -> i64 {
        self.val + self.coeffs.len() as i64
    }

    pub fn coeff(&self, k: i64) -> QOmega {
        if k < self.val || k >= self.end() {
            QOmega::zero()
        } else {
            self.coeffs[(k - self.val) as usize].clone()
        }
    }

    /// Index of the first nonzero coefficient.
    pub fn valuation(&self) -> Option<i64> {
        self.coeffs.iter().position(|c| !c.is_zero()).map(|i| self.val + i as i64)
    }

    pub fn leading(&self) -> Option<QOmega> {
        self.valuation().map(|v| self.coeff(v))
    }

    /// Drop leading zeros.
    pub fn normalized(&self) -> QSeries {
        match self.coeffs.iter().position(|c| !c.is_zero()) {
            Some(i) => QSeries { val: self.val + i as i64, coeffs: self.coeffs[i..].to_vec() },
            None => QSeries { val: self.end(), coeffs: Vec::new() },
        }
    }

    pub fn truncate(&self, end: i64) -> QSeries {
        let len = (end - self.val).clamp(0, self.coeffs.len() as i64) as usize;
        QSeries { val: self.val, coeffs: self.coeffs[..len].to_vec() }
    }

    pub fn scale(&self, c: &QOmega) -> QSeries {
        QSeries { val: self.val, coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    pub fn add(&self, o: &QSeries) -> QSeries {
        let val = self.val.min(o.val);
        let end = self.end().min(o.end());
        let coeffs = (val..end).map(|k| &self.coeff(k) + &o.coeff(k)).collect();
        QSeries { val, coeffs }
    }

    pub fn sub(&self, o: &QSeries) -> QSeries {
        self.add(&o.scale(&QOmega::from_ints(-1, 0)))
    }

    pub fn mul(&self, o: &QSeries) -> QSeries {
        let a = self.normalized();
        let b = o.normalized();
        let val = a.val + b.val;
        let len = a.coeffs.len().min(b.coeffs.len());
        let mut coeffs = vec![QOmega::zero(); len];
        for i in 0..len {
            if a.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..len - i {
                let t = &a.coeffs[i] * &b.coeffs[j];
                coeffs[i + j] = &coeffs[i + j] + &t;
            }
        }
        QSeries { val, coeffs }
    }

    pub fn inv(&self) -> Option<QSeries> {
        let a = self.normalized();
        let lead_inv = a.coeffs.first()?.inv()?;
        let len = a.coeffs.len();
        let mut out: Vec<QOmega> = Vec::with_capacity(len);
        out.push(lead_inv.clone());
        for k in 1..len {
            let mut s = QOmega::zero();
            for j in 1..=k {
                s = &s + &(&a.coeffs[j] * &out[k - j]);
            }
            out.push(&(-&s) * &lead_inv);
        }
        Some(QSeries { val: -a.val, coeffs: out })
    }

    pub fn div(&self, o: &QSeries) -> Option<QSeries> {
        Some(self.mul(&o.inv()?))
    }

    pub fn pow(&self, e: u32) -> QSeries {
        let mut acc = QSeries { val: 0, coeffs: vec![QOmega::one(); 1] };
        acc.coeffs.resize(self.normalized().coeffs.len(), QOmega::zero());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Integer coefficients as (exponent, a, b) for nonzero terms.
    pub fn integer_terms(&self) -> Option<Vec<(i64, i64, i64)>> {
        let mut out = Vec::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                let (a, b) = c.as_ints()?;
                out.push((self.val + i as i64, a, b));
            }
        }
        Some(out)
    }
}

/// e^{(6)}_{α,β}/(2πi)² as a series in q = e^{2πiτ/6}, exact modulo q^{end}.
pub fn division_value_series(alpha: i64, beta: i64, end: i64) -> QSeries {
    let n = 6i64;
    let alpha = alpha.rem_euclid(n);
    let beta = beta.rem_euclid(n);
    assert!(alpha != 0 || beta != 0, "index (0,0) is not a division value");
    assert!(end > 0);
    let mut s = QSeries::zero(0, end as usize);
    let add = |s: &mut QSeries, k: i64, c: QOmega| {
        if k < end {
            let idx = (k - s.val) as usize;
            s.coeffs[idx] = &s.coeffs[idx] + &c;
        }
    };
    add(&mut s, 0, QOmega::from_rational(BigRational::new(1.into(), 12.into())));
    if alpha == 0 {
        let z = QOmega::zeta6_pow(beta);
        let d = &QOmega::one() - &z;
        let c = &z * &(&d * &d).inv().expect("ζ ≠ 1");
        add(&mut s, 0, c);
    } else {
        let mut m = 1;
        while alpha * m < end {
            add(&mut s, alpha * m, QOmega::zeta6_pow(beta * m).scale(&rat(m)));
            m += 1;
        }
    }
    let mut k = 1;
    while n * k - alpha < end {
        let mut m = 1;
        while (alpha + n * k) * m < end {
            add(&mut s, (alpha + n * k) * m, QOmega::zeta6_pow(beta * m).scale(&rat(m)));
            m += 1;
        }
        let mut m = 1;
        while (n * k - alpha) * m < end {
            add(&mut s, (n * k - alpha) * m, QOmega::zeta6_pow(-beta * m).scale(&rat(m)));
            m += 1;
        }
        let mut m = 1;
        while n * k * m < end {
            add(&mut s, n * k * m, QOmega::from_ints(-2 * m, 0));
            m += 1;
        }
        k += 1;
    }
    s
}

/// Σ cᵢ e^{(6)}_{αᵢ,βᵢ}.
pub fn combination_series(terms: &[(QOmega, i64, i64)], end: i64) -> QSeries {
    let mut acc = QSeries::zero(0, end as usize);
    for (c, a, b) in terms {
        acc = acc.add(&division_value_series(*a, *b, end).scale(c));
    }
    acc
}
