use std::time::Instant;

use heegner_core::cubic::verify_unit_identity;
use heegner_core::eisenstein::validate_n;
use heegner_core::heegner::{finalize, HeegnerJob};
use heegner_core::{Error, Result};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::config::RunConfig;
use crate::record::{Record, Status};

fn timed(cfg: &RunConfig, start: Instant, mut r: Record) -> Record {
    r.wall_time_ms = if cfg.reproducible { 0 } else { start.elapsed().as_millis() as u64 };
    r
}

pub fn unit_identity(n: i64, cfg: &RunConfig) -> Record {
    let start = Instant::now();
    let prec = cfg.working_precision();
    let rec = Record::new("unit-identity", json!({ "n": n }), prec);
    let out = validate_n(n).and_then(|_| verify_unit_identity(n, prec));
    let rec = match out {
        Err(e) => rec.error(&e),
        Ok(rep) => {
            let mut rec = rec;
            rec.status = if rep.pass { Status::Pass } else { Status::Fail };
            if !rep.pass {
                rec.reason = Some(format!("recovered exponent {} vs expected {}", rep.recovered_exponent, rep.expected_exponent));
            }
            rec.result = Some(json!({
                "n": rep.n,
                "f_n": rep.f,
                "sigma": rep.sigma,
                "h_K": rep.class_number,
                "log_u": rep.log_unit,
                "unit": rep.unit,
                "log_abs_norm_U": rep.log_abs_norm,
                "recovered_exponent": rep.recovered_exponent,
                "expected_exponent": rep.expected_exponent,
                "error": rep.exponent_error,
                "class_number_estimate": rep.class_number_estimate,
                "pass": rep.pass,
            }));
            rec
        }
    };
    timed(cfg, start, rec)
}

pub fn job(a: i64, b: i64, cfg: &RunConfig) -> Result<HeegnerJob> {
    let mut job = HeegnerJob::new(a, b, cfg.working_precision())?;
    job.max_digits = cfg.max_digits;
    job.max_prec = cfg.max_precision_bits.max(job.prec);
    Ok(job)
}

pub fn construct(a: i64, b: i64, cfg: &RunConfig) -> Record {
    let start = Instant::now();
    let rec = Record::new("construct", json!({ "a": a, "b": b }), cfg.working_precision());
    let rec = match job(a, b, cfg).and_then(|j| finalize(&j)) {
        Err(Error::Precision(m)) => {
            let e = Error::Precision(format!("{m} (gave up at {} bits)", cfg.max_precision_bits));
            rec.error(&e)
        }
        Err(e) => rec.error(&e),
        Ok(cert) => {
            let mut rec = rec;
            rec.precision_used = cert.prec_used;
            let ok = cert.on_curve && cert.nontrivial;
            rec.status = if ok { Status::Pass } else { Status::Fail };
            if !cert.on_curve {
                rec.reason = Some("point is not on y² = x³ + εD".into());
            } else if !cert.nontrivial {
                rec.reason = Some("trace is the identity or torsion".into());
            }
            rec.result = Some(serde_json::to_value(&cert).unwrap_or(Value::Null));
            rec
        }
    };
    timed(cfg, start, rec)
}

/// Admissible n in [lo, hi].
pub fn unit_range(lo: i64, hi: i64) -> Vec<i64> {
    (lo.max(2)..=hi).filter(|&n| validate_n(n).is_ok()).collect()
}

/// Admissible a with lo ≤ |a| ≤ hi for the given b, in increasing order of a.
pub fn point_range(lo: i64, hi: i64, b: i64) -> Vec<i64> {
    (-hi..=hi).filter(|a| a.abs() >= lo.max(1) && HeegnerJob::new(*a, b, 128).is_ok()).collect()
}

pub fn scan_units(lo: i64, hi: i64, cfg: &RunConfig) -> Vec<Record> {
    unit_range(lo, hi).par_iter().map(|&n| unit_identity(n, cfg)).collect()
}

pub fn scan_points(lo: i64, hi: i64, b: i64, cfg: &RunConfig) -> Vec<Record> {
    point_range(lo, hi, b).par_iter().map(|&a| construct(a, b, cfg)).collect()
}

/// The exit code for a batch: the worst status seen.
pub fn batch_exit(records: &[Record]) -> i32 {
    records.iter().map(|r| r.status).max().map_or(0, |s| s.exit_code())
}
