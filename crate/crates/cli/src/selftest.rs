use std::time::Instant;

use heegner_core::conjugates::{c_coeff, c_coeff_closed, check_s_congruence, check_s_invariants, degree_identity, half_degree_u};
use heegner_core::cubic::voronoi::brute_units;
use heegner_core::cubic::{class_group, fundamental_unit, CubicField};
use heegner_core::eisenstein::{galois_representatives, validate_n};
use heegner_core::modular::{eval_phi, x_series, y_series, UpperHalfPoint};
use heegner_core::qseries::QSeries;
use heegner_core::{arith, BigComplex};
use num_traits::{One, Signed, ToPrimitive};
use serde_json::json;

use crate::config::RunConfig;
use crate::record::{Record, Status};

pub const GOLDEN: &str = include_str!("../golden/qexp.txt");

/// One golden line: name, truncation point and the nonzero (exponent, coefficient) terms.
#[derive(Clone, Debug, PartialEq)]
pub struct GoldenSeries {
    pub name: String,
    pub end: i64,
    pub terms: Vec<(i64, i64)>,
}

pub fn parse_golden(text: &str) -> Result<Vec<GoldenSeries>, String> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let bad = || format!("golden line {}: cannot parse {line:?}", i + 1);
        let mut it = line.split_whitespace();
        let name = it.next().ok_or_else(bad)?.to_string();
        let end = it.next().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
        let mut terms = Vec::new();
        for t in it {
            let (k, c) = t.split_once(':').ok_or_else(bad)?;
            terms.push((k.parse().map_err(|_| bad())?, c.parse().map_err(|_| bad())?));
        }
        out.push(GoldenSeries { name, end, terms });
    }
    Ok(out)
}

fn integer_terms(s: &QSeries) -> Option<Vec<(i64, i64)>> {
    s.integer_terms()?.into_iter().map(|(k, a, b)| (b == 0).then_some((k, a))).collect()
}

struct Outcome {
    pass: bool,
    detail: serde_json::Value,
}

fn golden_check(g: &GoldenSeries) -> Outcome {
    let series = match g.name.as_str() {
        "X" => x_series(g.end),
        "Y" => y_series(g.end),
        other => return Outcome { pass: false, detail: json!({ "error": format!("unknown series {other}") }) },
    };
    let got = integer_terms(&series);
    let pass = got.as_ref() == Some(&g.terms);
    Outcome { pass, detail: json!({ "expected": g.terms, "computed": got }) }
}

fn parametrization() -> Outcome {
    let p = 256;
    let mut worst = f64::NEG_INFINITY;
    for (re, im) in [(0.1, 0.25), (-0.37, 0.6), (0.5, 1.0), (0.02, 2.5), (-0.49, 0.9)] {
        let tau = UpperHalfPoint::new(BigComplex::from_f64(re, im, p)).expect("upper half plane");
        match eval_phi(&tau, p) {
            Ok((x, y)) => {
                let r = y.sqr() - x.sqr() * &x - BigComplex::one(p);
                worst = worst.max(if r.is_zero() { f64::NEG_INFINITY } else { r.log2_abs() });
            }
            Err(e) => return Outcome { pass: false, detail: json!({ "error": e.to_string() }) },
        }
    }
    Outcome { pass: worst < -(p as f64 - 32.0), detail: json!({ "worst_log2_residual": worst }) }
}

fn matrix_invariants() -> Outcome {
    let mut checked = 0;
    for n in (2..=50).filter(|&n| validate_n(n).is_ok()) {
        let reps = match galois_representatives(n) {
            Ok(r) => r,
            Err(e) => return Outcome { pass: false, detail: json!({ "n": n, "error": e.to_string() }) },
        };
        for x in reps {
            let inv = check_s_invariants(x, n).map(|i| i.all()).unwrap_or(false);
            let cong = check_s_congruence(x, n).unwrap_or(false);
            if !(inv && cong) {
                return Outcome { pass: false, detail: json!({ "n": n, "x": x.to_string(), "invariants": inv, "congruence": cong }) };
            }
            checked += 1;
        }
    }
    Outcome { pass: true, detail: json!({ "representatives_checked": checked }) }
}

const AB: [(i64, i64); 8] = [(1, 0), (0, 1), (1, 1), (1, 2), (3, 1), (5, 7), (2, 9), (7, 4)];

fn c_coefficients() -> Outcome {
    for n in [5i64, 7, 25, 35] {
        for d in arith::divisors(n) {
            for &(a, b) in &AB {
                let (brute, closed) = (c_coeff(a, b, d, n), c_coeff_closed(a, b, d, n));
                match (brute, closed) {
                    (Ok(x), Ok(y)) if x == y => {}
                    (Err(_), Err(_)) => {}
                    (x, y) => {
                        return Outcome { pass: false, detail: json!({ "n": n, "d": d, "alpha": a, "beta": b, "brute": format!("{x:?}"), "closed": format!("{y:?}") }) }
                    }
                }
            }
        }
    }
    Outcome { pass: true, detail: json!({ "n": [5, 7, 25, 35] }) }
}

fn degree_counts() -> Outcome {
    let mut rows = Vec::new();
    let mut pass = true;
    for n in [5i64, 7, 25, 35] {
        let (lhs, rhs) = match degree_identity(n) {
            Ok(v) => v,
            Err(e) => return Outcome { pass: false, detail: json!({ "n": n, "error": e.to_string() }) },
        };
        let half = half_degree_u(n).unwrap_or(-1);
        let target = rhs.to_integer().to_i64().unwrap_or(0);
        // each residue pair mod 3n stands for three cusps of X(6n)
        let ok = lhs * num_rational::BigRational::from_integer(3.into()) == rhs && half == target;
        pass &= ok;
        rows.push(json!({ "n": n, "half_degree": half, "target": target, "ok": ok }));
    }
    Outcome { pass, detail: json!(rows) }
}

fn class_groups() -> Outcome {
    let mut rows = Vec::new();
    let mut pass = true;
    for n in [5i64, 7, 11, 13, 25] {
        let field = match CubicField::new(n) {
            Ok(f) => f,
            Err(e) => return Outcome { pass: false, detail: json!({ "n": n, "error": e.to_string() }) },
        };
        let (unit, cg) = match (fundamental_unit(&field), class_group(&field)) {
            (Ok(u), Ok(c)) => (u, c),
            (u, c) => return Outcome { pass: false, detail: json!({ "n": n, "unit": u.err().map(|e| e.to_string()), "class_group": c.err().map(|e| e.to_string()) }) },
        };
        // every unit in a small box is ±εᵏ
        let units_ok = brute_units(&field, 12).iter().all(|e| {
            let l = e.log_abs_real() / unit.regulator;
            let k = l.round();
            if (l - k).abs() > 1e-9 {
                return false;
            }
            let pw = if k >= 0.0 { unit.unit.pow(k as u32) } else { unit.unit.inv().map_or(unit.unit.clone(), |v| v.pow((-k) as u32)) };
            pw == *e || pw.neg() == *e
        });
        let est = heegner_core::cubic::classgroup::class_number_estimate(&field, &unit, 3000);
        let h = cg.class_number;
        let est_ok = (est / h as f64 - 1.0).abs() < 0.15;
        let ok = units_ok && est_ok && unit.unit.norm().abs().is_one();
        pass &= ok;
        rows.push(json!({ "n": n, "h": h, "estimate": est, "units_ok": units_ok, "ok": ok }));
    }
    Outcome { pass, detail: json!(rows) }
}

/// Runs every check; with `quick`, the class-group and unit oracles are skipped.
pub fn run(cfg: &RunConfig, quick: bool, golden_text: &str) -> Vec<Record> {
    let mut checks: Vec<(String, Box<dyn Fn() -> Outcome>)> = Vec::new();
    match parse_golden(golden_text) {
        Ok(gs) => {
            for g in gs {
                let name = format!("golden-{}", g.name);
                checks.push((name, Box::new(move || golden_check(&g))));
            }
        }
        Err(e) => checks.push(("golden-parse".into(), Box::new(move || Outcome { pass: false, detail: json!({ "error": e.clone() }) }))),
    }
    checks.push(("parametrization".into(), Box::new(parametrization)));
    checks.push(("matrix-invariants".into(), Box::new(matrix_invariants)));
    checks.push(("c-coefficients".into(), Box::new(c_coefficients)));
    checks.push(("cusp-degree".into(), Box::new(degree_counts)));
    if !quick {
        checks.push(("class-group".into(), Box::new(class_groups)));
    }
    checks
        .into_iter()
        .map(|(name, f)| {
            let start = Instant::now();
            let o = f();
            let mut r = Record::new("selftest", json!({ "test": name, "quick": quick }), cfg.working_precision());
            r.status = if o.pass { Status::Pass } else { Status::Fail };
            if !o.pass {
                r.reason = Some(format!("{name} failed"));
            }
            r.result = Some(o.detail);
            r.wall_time_ms = if cfg.reproducible { 0 } else { start.elapsed().as_millis() as u64 };
            r
        })
        .collect()
}
