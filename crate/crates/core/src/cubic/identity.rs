//! End-to-end check of the norm identity |N(U)|² = 3^{f(n)}·u^{3hσ(n/n′)}.

use serde::Serialize;

use super::classgroup::{class_group, class_number_estimate};
use super::field::CubicField;
use super::voronoi::fundamental_unit;
use crate::arith;
use crate::conjugates::norm_u;
use crate::error::Result;
use crate::mp;

#[derive(Clone, Debug, Serialize)]
pub struct UnitIdentityReport {
    pub n: i64,
    pub prec: usize,
    pub f: i64,
    pub class_number: usize,
    pub sigma: i64,
    /// Power-basis coordinates of u.
    pub unit: [String; 3],
    pub log_unit: f64,
    pub log_abs_norm: f64,
    pub norm_arg: f64,
    pub recovered_exponent: f64,
    pub expected_exponent: i64,
    pub exponent_error: f64,
    /// Euler-product estimate of h, shown for comparison only.
    pub class_number_estimate: f64,
    pub pass: bool,
}

pub const EXPONENT_TOLERANCE: f64 = 1e-8;

pub fn verify_unit_identity(n: i64, prec: usize) -> Result<UnitIdentityReport> {
    let field = CubicField::new(n)?;
    let unit = fundamental_unit(&field)?;
    let cg = class_group(&field)?;
    let h = cg.class_number;
    let f = arith::f_of_n(n);
    let sigma = arith::sigma(n / field.n_prime());
    let nu = norm_u(n, prec)?;

    let wp = prec + 32;
    let log_u = mp::ln(&unit.unit.real_embedding(wp), wp);
    let log3 = mp::ln(&mp::real_int(3, wp), wp);
    let num = nu.log_abs.mul(&mp::real_int(2, wp), wp, mp::RM).sub(&log3.mul(&mp::real_int(f, wp), wp, mp::RM), wp, mp::RM);
    let e = num.div(&log_u, wp, mp::RM);
    let rounded = mp::round_bigint(&e);
    let err = e.sub(&mp::real_bigint(&rounded, wp), wp, mp::RM);
    let expected = 3 * h as i64 * sigma;
    let recovered = mp::to_f64(&e);
    let exponent_error = mp::to_f64(&err).abs();
    let pass = exponent_error < EXPONENT_TOLERANCE && rounded == expected.into();
    let pc = unit.power_coords();
    Ok(UnitIdentityReport {
        n,
        prec,
        f,
        class_number: h,
        sigma,
        unit: [pc[0].to_string(), pc[1].to_string(), pc[2].to_string()],
        log_unit: unit.regulator,
        log_abs_norm: nu.log_abs_f64(),
        norm_arg: nu.arg_f64(),
        recovered_exponent: recovered,
        expected_exponent: expected,
        exponent_error,
        class_number_estimate: class_number_estimate(&field, &unit, 5000),
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn n5_identity() {
        let r = verify_unit_identity(5, 192).unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(r.expected_exponent, 3);
    }
}
