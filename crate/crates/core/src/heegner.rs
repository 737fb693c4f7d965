//! Heegner-point construction of a rational point on y² = x³ + ρn, transported
//! to y² = x³ + εD.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::arith;
use crate::conjugates::matrix_s;
use crate::cubic::{self, CubicField};
use crate::curve::{self, fermat_add, lambda_ab, phi, phi_inv, sextic_twist, w_add, w_mul, w_neg, CurveId, ProjPoint};
use crate::eisenstein::{chi_n, galois_representatives, validate_n, EisensteinInt};
use crate::error::{Error, Result};
use crate::height::canonical_height;
use crate::modular::eval_f_pm_exact;
use crate::mp::{self, BigComplex};
use crate::qseries::QOmega;
use crate::recognize::recognize_rational;

/// Input pair (a, b) with the derived quantities.
#[derive(Clone, Debug, Serialize)]
pub struct HeegnerJob {
    pub a: i64,
    pub b: i64,
    pub n: i64,
    pub rho: i64,
    pub eps: i64,
    pub prec: usize,
    pub max_digits: u32,
    pub max_prec: usize,
    /// Generator search box: x = u/w² with w ≤ search_w, |x| ≤ search_x.
    pub search_w: i64,
    pub search_x: i64,
}

impl HeegnerJob {
    pub fn new(a: i64, b: i64, prec: usize) -> Result<HeegnerJob> {
        let bad = |m: &str| Err(Error::Hypothesis(format!("(a, b) = ({a}, {b}): {m}")));
        if a == 0 || b == 0 {
            return bad("a and b must be nonzero");
        }
        if !arith::is_squarefree(a.abs()) || !arith::is_squarefree(b.abs()) {
            return bad("a and b must be squarefree");
        }
        if a.gcd(&6) != 1 || b.gcd(&6) != 1 || a.gcd(&b) != 1 {
            return bad("6, a and b must be pairwise coprime");
        }
        if (a - b).rem_euclid(4) != 0 {
            return bad("a ≢ b (mod 4)");
        }
        let r = (a.abs() * modinv9(b.abs())).rem_euclid(9);
        if r != 5 && r != 7 {
            return bad("|a|·|b|⁻¹ ≢ 5, 7 (mod 9)");
        }
        let n = b.abs().checked_pow(5).and_then(|b5| b5.checked_mul(a.abs())).ok_or_else(|| Error::InvalidInput("n = |ab⁵| overflows".into()))?;
        let rho = if ((n - 1) / 2) % 2 == 0 { 1 } else { -1 };
        let eps = if ((a - b) / 2).rem_euclid(2) == 0 { 1 } else { -1 };
        // ρn = εD·b⁶ = ε·a·b⁵
        if rho * n != eps * a * b.pow(5) {
            return Err(Error::Check("ρn ≠ εab⁵".into()));
        }
        if !arith::is_cubefree(n) {
            return Err(Error::Hypothesis(format!("n = |ab⁵| = {n} is not cube-free; only |b| = 1 is supported")));
        }
        validate_n(n)?;
        Ok(HeegnerJob { a, b, n, rho, eps, prec, max_digits: 80, max_prec: 16384, search_w: 40, search_x: 2000 })
    }

    /// εD = εa/b.
    pub fn twisted_d(&self) -> BigRational {
        BigRational::new(BigInt::from(self.eps * self.a), BigInt::from(self.b))
    }
}

fn modinv9(b: i64) -> i64 {
    (1..9).find(|k| (b * k) % 9 == 1).unwrap_or(1)
}

/// Legendre symbol (n/3).
pub fn leg3(n: i64) -> i64 {
    arith::legendre3(n)
}

fn c(v: i64, p: usize) -> BigComplex {
    BigComplex::from_int(v, p)
}

fn real_cbrt(v: i64, p: usize) -> BigComplex {
    let r = mp::cbrt(&mp::real_int(v.abs(), p + 16), p);
    let r = if v < 0 { mp::rneg(&r) } else { r };
    BigComplex::from_real(r, p)
}

/// √(ρn): positive real for ρ = 1, i√n for ρ = −1.
pub fn sqrt_rho_n(rho: i64, n: i64, p: usize) -> BigComplex {
    let s = mp::sqrt(&mp::real_int(n, p + 16), p);
    if rho > 0 {
        BigComplex::from_real(s, p)
    } else {
        BigComplex::new(mp::real_int(0, p), s, p)
    }
}

/// The point (f₋(τ), −f₊(τ)) on X³ + Y³ = 2 at τ = nω.
pub fn tilde_point(n: i64, prec: usize) -> Result<ProjPoint<BigComplex>> {
    let tau = QOmega::from_ints(0, n);
    let (fp, fm) = eval_f_pm_exact(&tau, prec)?;
    Ok(ProjPoint { x: fm, y: fp.neg(), z: c(1, prec) })
}

/// (a_n, b_n) from f₊, f₋ with ∛n and √(ρn) supplied (possibly Galois-twisted).
pub fn an_bn(fp: &BigComplex, fm: &BigComplex, rho: i64, cbrt_n: &BigComplex, sqrt_rn: &BigComplex) -> Result<(BigComplex, BigComplex)> {
    let p = fp.prec().min(fm.prec());
    let pm = fp * fm;
    let pm2 = pm.sqr();
    let pm3 = &pm2 * &pm;
    if pm.is_zero() || pm.log2_abs() < -(p as f64 - 16.0) {
        return Err(Error::Precision("f₊f₋ vanishes".into()));
    }
    let a = (cbrt_n.mul_int(-rho) / c(3, p)) * ((c(4, p) + &pm3) / pm2);
    let s3 = BigComplex::sqrt_minus3(p);
    let f3 = fp.sqr() * fp + fm.sqr() * fm;
    let b = (sqrt_rn / (s3.mul_int(6))) * ((f3 * (c(8, p) - &pm3)) / pm3);
    Ok((a, b))
}

/// The translation point (−ω^{−(n/3)}ρ∛n, 0), with ∛n supplied.
pub fn translation_point(n: i64, rho: i64, cbrt_n: &BigComplex) -> ProjPoint<BigComplex> {
    let p = cbrt_n.prec();
    let w = BigComplex::omega_pow(-leg3(n), p);
    ProjPoint { x: (w * cbrt_n).mul_int(-rho), y: c(0, p), z: c(1, p) }
}

/// A point together with the curve it should lie on.
pub type Stage = (CurveId<BigComplex>, ProjPoint<BigComplex>);

/// The diagram from X³ + Y³ = 2 onward: add A, move to C_{A,B}, then λ, φ⁻¹ and two twists.
fn chain_tail(n: i64, rho: i64, tilde: &ProjPoint<BigComplex>, out: &mut Vec<Stage>) -> Result<()> {
    let p = tilde.x.prec();
    let two = c(2, p);
    let n2 = n * n;
    let (shift, ca, cb, a_coef, b_coef) = match n.rem_euclid(9) {
        5 => (BigComplex::omega_pow(-1, p), real_cbrt(2 * n2, p), real_cbrt(4, p), n2, 2),
        7 => (BigComplex::omega_pow(1, p), real_cbrt(2, p), real_cbrt(4 * n2, p), 1, 2 * n2),
        _ => return Err(Error::Hypothesis(format!("n = {n} ≢ 5, 7 (mod 9)"))),
    };
    let sh = ProjPoint { x: shift.clone(), y: shift, z: c(1, p) };
    let q = fermat_add(tilde, &sh, &two);
    out.push((CurveId::Fermat { n: two.clone() }, q.clone()));
    let on_c = ProjPoint { x: &q.x / &ca, y: &q.y / &cb, z: q.z.clone() };
    out.push((CurveId::Cubic { a: c(a_coef, p), b: c(b_coef, p), cbrt_a: ca.clone(), cbrt_b: cb.clone() }, on_c.clone()));
    let l = lambda_ab(&on_c, &c(a_coef, p), &c(b_coef, p))?;
    out.push((CurveId::Fermat { n: c(2 * n2, p) }, l.clone()));
    let w = phi_inv(&l, &c(n2, p));
    out.push((CurveId::Weierstrass { d: c(-27 * n2 * n2, p) }, w.clone()));
    let t1 = sqrt_rho_n(rho, n, p) / c(n, p);
    let w = sextic_twist(&w, &t1);
    out.push((CurveId::Weierstrass { d: c(-27 * rho * n, p) }, w.clone()));
    let t2 = c(1, p) / BigComplex::sqrt_minus3(p);
    out.push((CurveId::Weierstrass { d: c(rho * n, p) }, sextic_twist(&w, &t2)));
    Ok(())
}

/// All eight maps E₁ → E₋₂₇ → X³ + Y³ = 2 → (+A) → C_{A,B} → X³ + Y³ = AB → E₋₂₇ₙ⁴ → E₋₂₇ρₙ → E_{ρn},
/// starting from a point on y² = x³ + 1. The first entry is the input.
pub fn chain_trace(n: i64, rho: i64, start: &ProjPoint<BigComplex>) -> Result<Vec<Stage>> {
    let p = start.x.prec();
    let mut out = vec![(CurveId::Weierstrass { d: c(1, p) }, start.clone())];
    let t = BigComplex::sqrt_minus3(p).neg();
    let w = sextic_twist(start, &t);
    out.push((CurveId::Weierstrass { d: c(-27, p) }, w.clone()));
    let f = phi(&w, &c(1, p));
    out.push((CurveId::Fermat { n: c(2, p) }, f.clone()));
    chain_tail(n, rho, &f, &mut out)?;
    Ok(out)
}

/// The diagram applied to (f₋, −f₊) + A on X³ + Y³ = 2.
pub fn chain_point(n: i64, rho: i64, tilde: &ProjPoint<BigComplex>) -> Result<ProjPoint<BigComplex>> {
    let mut out = Vec::new();
    chain_tail(n, rho, tilde, &mut out)?;
    Ok(out.pop().expect("nonempty chain").1)
}

/// One Galois conjugate over k of the base point on E_{ρn}, for x ≡ 1 (mod 6).
#[derive(Clone, Debug)]
pub struct ConjugatePoint {
    pub x: EisensteinInt,
    pub point: ProjPoint<BigComplex>,
    pub residual_log2: f64,
}

pub fn conjugate_point(x: EisensteinInt, n: i64, rho: i64, prec: usize) -> Result<ConjugatePoint> {
    let s = matrix_s(x, n)?;
    let tau = s.apply_exact(&QOmega::from_ints(0, n)).ok_or_else(|| Error::Check("Möbius denominator vanished".into()))?;
    let chi = chi_n(x, n)?;
    let sgn = arith::jacobi(rho * n, x.norm());
    let at = |wp: usize| -> Result<ProjPoint<BigComplex>> {
        let (fp, fm) = eval_f_pm_exact(&tau, wp)?;
        let cbrt = real_cbrt(n, wp) * chi.to_complex(wp);
        let sq = sqrt_rho_n(rho, n, wp).mul_int(sgn);
        let (a, b) = an_bn(&fp, &fm, rho, &cbrt, &sq)?;
        let base = ProjPoint { x: a, y: b, z: c(1, wp) };
        Ok(w_add(&base, &translation_point(n, rho, &cbrt)))
    };
    // adding T cancels the size of (a_n, b_n); guard against it
    let (fp, fm) = eval_f_pm_exact(&tau, 64)?;
    let big = (&fp * &fm).log2_abs().abs();
    let guard = (6.0 * big) as usize + 64;
    let pt = at(prec + guard)?.map(|z| z.with_prec(prec + 32));
    let e = CurveId::Weierstrass { d: c(rho * n, prec + 32) };
    let res = e.residual(&pt);
    let residual_log2 = if res.is_zero() { f64::NEG_INFINITY } else { res.log2_abs() - pt.x.log2_abs().max(0.0) * 3.0 };
    if pt.is_affine() && residual_log2 > -(prec as f64 - 40.0) {
        return Err(Error::Check(format!("conjugate for x = {x} is off the curve (2^{residual_log2:.1})")));
    }
    Ok(ConjugatePoint { x, point: pt, residual_log2 })
}

/// S* as a numeric point: the sum over Gal(R_n/k) plus its complex conjugate.
pub fn trace_point(n: i64, rho: i64, prec: usize) -> Result<(ProjPoint<BigComplex>, Vec<ConjugatePoint>)> {
    let reps = galois_representatives(n)?;
    let conj: Vec<ConjugatePoint> = reps.par_iter().map(|&x| conjugate_point(x, n, rho, prec)).collect::<Result<_>>()?;
    let id = CurveId::Weierstrass { d: c(rho * n, prec) }.identity();
    let sum = conj.iter().fold(id, |acc, cp| w_add(&acc, &cp.point));
    let bar = sum.map(|z| z.conj());
    Ok((w_add(&sum, &bar), conj))
}

/// Same sum in the reverse order, for the order-independence check.
pub fn trace_point_reversed(conj: &[ConjugatePoint], rho: i64, n: i64, prec: usize) -> ProjPoint<BigComplex> {
    let id = CurveId::Weierstrass { d: c(rho * n, prec) }.identity();
    let sum = conj.iter().rev().fold(id, |acc, cp| w_add(&acc, &cp.point));
    let bar = sum.map(|z| z.conj());
    w_add(&bar, &sum)
}

/// Relative tolerance for ĥ(S*)/ĥ(G) against m².
pub const HEIGHT_RATIO_TOLERANCE: f64 = 1e-6;

/// Exact rational point with evidence.
#[derive(Clone, Debug, Serialize)]
pub struct RationalPointCertificate {
    pub a: i64,
    pub b: i64,
    pub n: i64,
    pub rho: i64,
    pub eps: i64,
    /// Curve y² = x³ + εD, with εD as a reduced fraction.
    pub curve_d: String,
    /// S on y² = x³ + εD; `None` when S is the identity.
    pub x: Option<String>,
    pub y: Option<String>,
    /// S* on y² = x³ + ρn.
    pub x_star: Option<String>,
    pub y_star: Option<String>,
    pub on_curve: bool,
    /// Not O and not torsion: x non-integral (Nagell–Lutz) or ĥ > 0.
    pub nontrivial: bool,
    pub naive_height: f64,
    /// log₂ of the largest imaginary part in the numeric trace.
    pub trace_imag_log2: f64,
    /// log₂ of |numeric − exact| for the x-coordinate.
    pub residual_log2: f64,
    pub prec_used: usize,
    pub conjugates: usize,
    pub class_number: usize,
    pub generator: Option<(String, String)>,
    /// m with S* = ±m·G, when the search found G.
    pub multiple_of_generator: Option<i64>,
    /// ĥ(S*) on y² = x³ + ρn.
    pub canonical_height: f64,
    /// ĥ(S*)/ĥ(G) for the lowest-height point G found by the search.
    pub height_ratio: Option<f64>,
    /// c such that c·u·r([3]S*) is a square in ℚ(∛n), if found among the tested classes.
    pub descent_square_class: Option<i64>,
}

fn rat_str(q: &BigRational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Naive logarithmic height of x = p/q: log max(|p|, |q|).
pub fn naive_height(x: &BigRational) -> f64 {
    let m = x.numer().abs().max(x.denom().clone());
    m.bits() as f64 * std::f64::consts::LN_2 + (mp::log2_abs(&mp::real_bigint(&m, 64)) - m.bits() as f64) * std::f64::consts::LN_2
}

/// Rational points x = u/w² on y² = x³ + D with w in the given range and |x| ≤ xmax.
pub fn small_points(d: i64, ws: std::ops::RangeInclusive<i64>, xmax: i64) -> Vec<ProjPoint<BigRational>> {
    let found: Vec<Vec<(i64, i64, i128)>> = ws
        .into_par_iter()
        .map(|w| {
            let w2 = w * w;
            let w6 = (w2 as i128).pow(3);
            let mut out = Vec::new();
            for u in -xmax * w2..=xmax * w2 {
                if u.gcd(&w) != 1 {
                    continue;
                }
                // y² w⁶ = u³ + D w⁶
                let rhs = (u as i128).pow(3) + d as i128 * w6;
                if rhs < 0 {
                    continue;
                }
                let s = isqrt_i128(rhs);
                if s * s == rhs {
                    out.push((u, w, s));
                }
            }
            out
        })
        .collect();
    found
        .into_iter()
        .flatten()
        .map(|(u, w, s)| {
            let x = BigRational::new(BigInt::from(u), BigInt::from(w * w));
            let y = BigRational::new(BigInt::from(s), BigInt::from(w * w * w));
            curve::rational_point(x, y)
        })
        .collect()
}

fn isqrt_i128(v: i128) -> i128 {
    let mut r = (v as f64).sqrt() as i128;
    while r * r > v {
        r -= 1;
    }
    while (r + 1) * (r + 1) <= v {
        r += 1;
    }
    r
}

fn rational_sqrt(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let (a, b) = (q.numer().sqrt(), q.denom().sqrt());
    (&a * &a == *q.numer() && &b * &b == *q.denom()).then(|| BigRational::new(a, b))
}

/// x by continued fractions, then y as the square root of x³ + D with the sign of the numeric y.
fn to_rational_point(p: &ProjPoint<BigComplex>, d: &BigRational, max_digits: u32) -> Result<ProjPoint<BigRational>> {
    if !p.is_affine() {
        return Ok(ProjPoint { x: BigRational::zero(), y: BigRational::one(), z: BigRational::zero() });
    }
    let p = p.normalized();
    let x = recognize_rational(&p.x, max_digits)?;
    let y = rational_sqrt(&(&x * &x * &x + d)).ok_or_else(|| Error::Precision("x³ + ρn is not a rational square at the recognized x".into()))?;
    let y = if p.y.re().is_negative() { -y } else { y };
    let prec = p.y.prec();
    let dy = &p.y - &BigComplex::from_ratio(&y, prec);
    if !dy.is_zero() && dy.log2_abs() - p.y.log2_abs().max(0.0) > -((prec / 4) as f64) {
        return Err(Error::Precision("numeric y disagrees with the recovered square root".into()));
    }
    Ok(curve::rational_point(x, y))
}

fn imag_log2(p: &ProjPoint<BigComplex>) -> f64 {
    if !p.is_affine() {
        return f64::NEG_INFINITY;
    }
    let p = p.normalized();
    [p.x.im(), p.y.im()].iter().map(|v| if v.is_zero() { f64::NEG_INFINITY } else { mp::log2_abs(v) }).fold(f64::NEG_INFINITY, f64::max)
}

/// Run the construction, escalating precision on recognition failure.
pub fn finalize(job: &HeegnerJob) -> Result<RationalPointCertificate> {
    let mut prec = job.prec;
    loop {
        match finalize_at(job, prec) {
            Err(Error::Precision(_)) if prec * 2 <= job.max_prec => prec *= 2,
            r => return r,
        }
    }
}

fn finalize_at(job: &HeegnerJob, prec: usize) -> Result<RationalPointCertificate> {
    let (n, rho) = (job.n, job.rho);
    let (s_num, conj) = trace_point(n, rho, prec)?;
    let trace_imag_log2 = imag_log2(&s_num);
    // a convergent p/q is pinned down by about 2·log₂ max(|p|, q) bits, half the precision is checked
    let digits = job.max_digits.max((prec as f64 * 0.15) as u32);
    let d_star = BigRational::from_integer(BigInt::from(rho * n));
    let s_star = to_rational_point(&s_num, &d_star, digits)?;
    let e_star = CurveId::Weierstrass { d: d_star.clone() };
    if s_star.is_affine() && !e_star.contains(&s_star) {
        return Err(Error::Precision("recognized S* is not on y² = x³ + ρn".into()));
    }
    let residual_log2 = if s_star.is_affine() {
        let sx = s_num.normalized().x;
        let ex = BigComplex::from_ratio(&s_star.x, prec);
        let d = &sx - &ex;
        if d.is_zero() {
            f64::NEG_INFINITY
        } else {
            d.log2_abs()
        }
    } else {
        f64::NEG_INFINITY
    };
    // transport (x, y) ↦ (x/b², y/b³)
    let bq = BigRational::from_integer(BigInt::from(job.b));
    let s = if s_star.is_affine() {
        curve::rational_point(&s_star.x / (&bq * &bq), &s_star.y / (&bq * &bq * &bq))
    } else {
        s_star.clone()
    };
    let e = CurveId::Weierstrass { d: job.twisted_d() };
    let on_curve = !s.is_affine() || e.contains(&s);
    let nontrivial = s.is_affine();
    let field = CubicField::new(n)?;
    let cg = cubic::class_group(&field)?;

    let mut cert = RationalPointCertificate {
        a: job.a,
        b: job.b,
        n,
        rho,
        eps: job.eps,
        curve_d: rat_str(&job.twisted_d()),
        x: None,
        y: None,
        x_star: None,
        y_star: None,
        on_curve,
        nontrivial,
        naive_height: 0.0,
        trace_imag_log2,
        residual_log2,
        prec_used: prec,
        conjugates: conj.len(),
        class_number: cg.class_number,
        generator: None,
        multiple_of_generator: None,
        canonical_height: 0.0,
        height_ratio: None,
        descent_square_class: None,
    };
    if !nontrivial {
        return Ok(cert);
    }
    cert.x = Some(rat_str(&s.x));
    cert.y = Some(rat_str(&s.y));
    cert.x_star = Some(rat_str(&s_star.x));
    cert.y_star = Some(rat_str(&s_star.y));
    cert.naive_height = naive_height(&s.x);

    // generator search on the integral model y² = x³ + ρn
    let d_int = BigInt::from(rho * n);
    let hs = canonical_height(&s_star, &d_int);
    cert.canonical_height = hs;
    cert.nontrivial = !s_star.x.is_integer() || hs > 1e-6;
    let mut pts: Vec<(f64, ProjPoint<BigRational>)> = Vec::new();
    let mut w = 1;
    while w <= job.search_w {
        let hi = (w + 7).min(job.search_w);
        pts.extend(small_points(rho * n, w..=hi, job.search_x).into_iter().map(|g| (canonical_height(&g, &d_int), g)).filter(|(h, _)| *h > 1e-6));
        w = hi + 1;
        pts.sort_by(|p, q| p.0.total_cmp(&q.0));
        if let Some((hg, g)) = pts.first() {
            if let Some(m) = multiple_of(&s_star, hs, g, *hg) {
                cert.multiple_of_generator = Some(m);
                break;
            }
        }
    }
    if let Some((hg, g)) = pts.first() {
        cert.height_ratio = Some(hs / hg);
        let gb = curve::rational_point(&g.x / (&bq * &bq), &g.y / (&bq * &bq * &bq));
        cert.generator = Some((rat_str(&gb.x), rat_str(&gb.y)));
    }

    // u·r([3]S*) mod squares, up to classes that become squares higher up
    let unit = cubic::fundamental_unit(&field)?;
    let s3 = w_mul(3, &s_star);
    let r3 = curve::descent_r(&s3, &field, rho);
    let base = unit.unit.mul(&r3);
    for cand in square_class_candidates(n) {
        let z = base.scale(&BigRational::from_integer(BigInt::from(cand)));
        if curve::is_square(&z) {
            cert.descent_square_class = Some(cand);
            break;
        }
    }
    Ok(cert)
}

/// m with ĥ(S)/ĥ(G) = m² to tolerance and m·G = ±S exactly.
pub fn multiple_of(s: &ProjPoint<BigRational>, hs: f64, g: &ProjPoint<BigRational>, hg: f64) -> Option<i64> {
    let ratio = hs / hg;
    let m = ratio.sqrt().round() as i64;
    if m < 1 || ((ratio - (m * m) as f64) / ratio).abs() >= HEIGHT_RATIO_TOLERANCE {
        return None;
    }
    let mg = w_mul(m, g);
    (mg.same_as(s) || w_neg(&mg).same_as(s)).then_some(m)
}

/// Products of −3 and p* = ±p ≡ 1 (mod 4) over p | n.
pub fn square_class_candidates(n: i64) -> Vec<i64> {
    let mut gens = vec![-3i64];
    for p in arith::prime_divisors(n) {
        gens.push(if p % 4 == 1 { p } else { -p });
    }
    let mut out = vec![1i64];
    for g in gens {
        let more: Vec<i64> = out.iter().map(|x| x * g).collect();
        out.extend(more);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn job_validation() {
        let j = HeegnerJob::new(5, 1, 384).unwrap();
        assert_eq!((j.n, j.rho, j.eps), (5, 1, 1));
        assert!(HeegnerJob::new(7, 1, 384).is_err());
        assert!(HeegnerJob::new(5, 3, 384).is_err());
        assert!(HeegnerJob::new(-5, 1, 384).is_err());
        let j = HeegnerJob::new(41, 1, 384).unwrap();
        assert_eq!(j.n, 41);
    }
}
