//! One line per acceptance criterion. Lines listed in `KNOWN_DEVIATIONS` are expected to
//! fail; the run fails if any other line fails or if a listed line starts passing.

use std::process::Command;
use std::time::{Duration, Instant};

use heegner_cli::commands::{unit_identity, unit_range};
use heegner_cli::RunConfig;
use heegner_core::arith::divisors;
use heegner_core::conjugates::{c_coeff, c_coeff_closed, check_s_congruence, check_s_invariants, degree_identity, gamma_pm, gamma_prime, half_degree_u};
use heegner_core::curve::{w_add, w_mul, w_neg, CurveId, ProjPoint};
use heegner_core::eisenstein::{galois_representatives, validate_n};
use heegner_core::heegner::chain_trace;
use heegner_core::modular::{eval_phi, eval_phi_at_cusp, x_series, y_series, Cusp, UpperHalfPoint};
use heegner_core::BigComplex;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::Value;

/// h_K is even for n = 61 (h = 6) and the point comes out as 6·G.
const KNOWN_DEVIATIONS: [&str; 3] = [
    "6 degree identity as stated",
    "8 (61,1) class number odd",
    "8 (61,1) odd square height ratio",
];

struct Report {
    lines: Vec<(String, bool)>,
}

impl Report {
    fn line(&mut self, name: &str, pass: bool, detail: String) {
        let tag = match (pass, KNOWN_DEVIATIONS.contains(&name)) {
            (true, false) => "PASS",
            (false, false) => "FAIL",
            (true, true) => "PASS (unexpected)",
            (false, true) => "FAIL (known)",
        };
        println!("[{tag}] {name}: {detail}");
        self.lines.push((name.to_string(), pass));
    }

    fn timed(&mut self, name: &str, budget: Option<Duration>, f: impl FnOnce() -> (bool, String)) {
        let start = Instant::now();
        let (pass, detail) = f();
        let t = start.elapsed();
        let in_time = budget.map_or(true, |b| t < b);
        let budget = budget.map(|b| format!(" / {} s", b.as_secs())).unwrap_or_default();
        self.line(name, pass && in_time, format!("{detail} ({:.2} s{budget})", t.as_secs_f64()));
    }
}

fn terms(s: &heegner_core::qseries::QSeries) -> Option<Vec<(i64, i64)>> {
    s.integer_terms()?.into_iter().map(|(k, a, b)| (b == 0).then_some((k, a))).collect()
}

fn golden() -> (bool, String) {
    let x = [(-2, 1), (4, 1), (10, 1), (16, -1), (22, -1), (34, 1), (40, 2)];
    let y = [(-3, 1), (3, 2), (9, 1), (21, -2), (27, -2), (33, 2)];
    let (gx, gy) = (terms(&x_series(41)), terms(&y_series(34)));
    let ok = gx.as_deref() == Some(&x[..]) && gy.as_deref() == Some(&y[..]);
    (ok, format!("X through q^40, Y through q^33 ({} + {} terms)", x.len(), y.len()))
}

fn random_tau(rng: &mut ChaCha8Rng, prec: usize) -> UpperHalfPoint {
    let re = rng.gen_range(-1.0..1.0);
    let im = rng.gen_range(0.2..3.0);
    UpperHalfPoint::new(BigComplex::from_f64(re, im, prec)).unwrap()
}

fn log2_or_neg_inf(z: &BigComplex) -> f64 {
    if z.is_zero() {
        f64::NEG_INFINITY
    } else {
        z.log2_abs()
    }
}

fn parametrization() -> (bool, String) {
    let p = 256;
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut worst = f64::NEG_INFINITY;
    for _ in 0..100 {
        let (x, y) = eval_phi(&random_tau(&mut rng, p + 32), p).unwrap();
        worst = worst.max(log2_or_neg_inf(&(y.sqr() - x.sqr() * &x - BigComplex::one(p))));
    }
    (worst < -(p as f64 - 32.0), format!("100 τ at P={p}, worst log2 residual {worst:.1}"))
}

fn cusps() -> (bool, String) {
    let p = 256;
    let w = |k| BigComplex::omega_pow(k, p);
    let z = |x: i64| BigComplex::from_int(x, p);
    let cases = [((1, 3), z(0), z(1)), ((1, 2), w(1).neg(), z(0)), ((-3, 2), z(-1), z(0)), ((-1, 1), w(1).mul_int(2), z(-3)), ((-1, 2), w(2).neg(), z(0))];
    let mut worst = f64::NEG_INFINITY;
    for ((a, b), x, y) in cases {
        match eval_phi_at_cusp(&Cusp::new(a, b).unwrap(), p) {
            Ok(Some((px, py))) => worst = worst.max(log2_or_neg_inf(&(px - &x))).max(log2_or_neg_inf(&(py - &y))),
            _ => return (false, format!("no finite value at {a}/{b}")),
        }
    }
    (worst < -(p as f64 - 32.0), format!("5 cusps at P={p}, worst log2 error {worst:.1}"))
}

fn point(x: BigComplex, y: BigComplex) -> ProjPoint<BigComplex> {
    let z = BigComplex::one(x.prec());
    ProjPoint { x, y, z }
}

fn transformations() -> (bool, String) {
    let p = 256;
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    let mut worst = f64::NEG_INFINITY;
    let mut check = |lhs: &ProjPoint<BigComplex>, rhs: &ProjPoint<BigComplex>| {
        let (l, r) = (lhs.normalized(), rhs.normalized());
        let scale = l.x.log2_abs().max(l.y.log2_abs()).max(0.0);
        worst = worst.max(log2_or_neg_inf(&(&l.x - &r.x)).max(log2_or_neg_inf(&(&l.y - &r.y))) - scale);
    };
    for sign in [1i64, -1] {
        let g = gamma_pm(sign);
        // ζ = ω^{∓1} acts by (x, y) ↦ (ζx, y)
        let zeta = BigComplex::omega_pow(-sign, p);
        for _ in 0..10 {
            let tau = random_tau(&mut rng, p + 32);
            let (x, y) = eval_phi(&tau, p).unwrap();
            let moved = UpperHalfPoint::new(g.apply(tau.tau())).unwrap();
            let (gx, gy) = eval_phi(&moved, p).unwrap();
            let rhs = w_add(&point(&zeta * &x, y), &point(zeta.neg(), BigComplex::zero(p)));
            check(&point(gx, gy), &rhs);
        }
    }
    let g = gamma_prime();
    for _ in 0..10 {
        let tau = random_tau(&mut rng, p + 32);
        let (x, y) = eval_phi(&tau, p).unwrap();
        let (gx, gy) = eval_phi(&UpperHalfPoint::new(g.apply(tau.tau())).unwrap(), p).unwrap();
        let rhs = w_add(&point(x, y), &point(BigComplex::zero(p), BigComplex::one(p)));
        check(&point(gx, gy), &rhs);
    }
    (worst < -(p as f64 - 40.0), format!("γ₊, γ₋, γ′ on 10 τ each, worst relative log2 error {worst:.1}"))
}

fn units() -> (bool, String) {
    let cfg = RunConfig { precision_bits: 384, ..RunConfig::default() };
    let ns = unit_range(1, 50);
    let mut bad = Vec::new();
    let mut worst: f64 = 0.0;
    for &n in &ns {
        let r = unit_identity(n, &cfg);
        let res = r.result.unwrap_or(Value::Null);
        let err = res["error"].as_f64().unwrap_or(f64::INFINITY);
        worst = worst.max(err);
        let exact = res["recovered_exponent"].as_f64().map(f64::round) == res["expected_exponent"].as_f64();
        if !(err < 1e-8 && exact && res["pass"] == true) {
            bad.push(n);
        }
    }
    (bad.is_empty(), format!("n ∈ {ns:?}, worst |e − round(e)| = {worst:.1e}, failing {bad:?}"))
}

const COMBINATORIAL_N: [i64; 4] = [5, 7, 25, 35];

fn c_coefficients() -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut pairs = Vec::new();
    while pairs.len() < 20 {
        let (a, b): (i64, i64) = (rng.gen_range(-60..60), rng.gen_range(-60..60));
        if a.gcd(&b) == 1 {
            pairs.push((a, b));
        }
    }
    let mut compared = 0;
    for n in COMBINATORIAL_N {
        for d in divisors(n) {
            for &(a, b) in &pairs {
                match (c_coeff(a, b, d, n), c_coeff_closed(a, b, d, n)) {
                    (Ok(x), Ok(y)) if x == y => compared += 1,
                    (Err(_), Err(_)) => {}
                    (x, y) => return (false, format!("n={n} d={d} ({a},{b}): brute {x:?}, closed {y:?}")),
                }
            }
        }
    }
    (compared > 0, format!("{compared} (n, d, α, β) agree"))
}

fn degree_lines(report: &mut Report) {
    let mut stated = true;
    let mut counted = true;
    let mut rows = Vec::new();
    for n in COMBINATORIAL_N {
        let (lhs, rhs) = degree_identity(n).unwrap();
        let half = half_degree_u(n).unwrap();
        stated &= lhs == rhs;
        counted &= BigRational::from_integer(half.into()) == rhs && lhs.clone() * BigRational::from_integer(3.into()) == rhs;
        rows.push(format!("n={n}: ΣC={lhs} f·n·J₂={rhs} ½deg U={half}"));
    }
    let rows = rows.join("; ");
    report.line("6 degree identity as stated", stated, rows.clone());
    report.line("6 degree identity via ½ deg U = 3·ΣC", counted, rows);
}

fn matrices() -> (bool, String) {
    let mut checked = 0;
    for n in (2..=50).filter(|&n| validate_n(n).is_ok()) {
        for x in galois_representatives(n).unwrap() {
            let inv = check_s_invariants(x, n).map(|i| i.all()).unwrap_or(false);
            if !(inv && check_s_congruence(x, n).unwrap_or(false)) {
                return (false, format!("n={n} x={x}"));
            }
            checked += 1;
        }
    }
    (true, format!("{checked} representatives, n ≤ 50"))
}

fn rational(v: &Value) -> Option<BigRational> {
    v.as_str()?.parse().ok()
}

fn rpoint(x: BigRational, y: BigRational) -> ProjPoint<BigRational> {
    ProjPoint { x, y, z: BigRational::one() }
}

fn construct_lines(report: &mut Report, a: i64, b: i64) {
    let tag = format!("8 ({a},{b})");
    let start = Instant::now();
    let out = Command::new(env!("CARGO_BIN_EXE_heegner")).args(["construct", "--a", &a.to_string(), "--b", &b.to_string()]).env_remove("HEEGNER_PRECISION").output().unwrap();
    let secs = start.elapsed().as_secs_f64();
    let rec: Value = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    let r = &rec["result"];
    let h = r["class_number"].as_u64().unwrap_or(0);
    report.line(&format!("{tag} class number odd"), h % 2 == 1, format!("h_K = {h}"));

    let (Some(x), Some(y), Some(d), Some(xs), Some(ys)) = (rational(&r["x"]), rational(&r["y"]), rational(&r["curve_d"]), rational(&r["x_star"]), rational(&r["y_star"])) else {
        report.line(&format!("{tag} exact point"), false, format!("status {} {}", rec["status"], rec["reason"]));
        return;
    };
    let rho_n = BigRational::from_integer(BigInt::from(r["rho"].as_i64().unwrap() * r["n"].as_i64().unwrap()));
    let on = &y * &y == &x * &x * &x + &d && &ys * &ys == &xs * &xs * &xs + &rho_n;
    // Nagell–Lutz: torsion points of y² = x³ + D have integral coordinates
    let non_torsion = !x.is_integer() || !xs.is_integer();
    report.line(
        &format!("{tag} exact point"),
        on && non_torsion && rec["status"] == "pass",
        format!("on curve {on}, non-integral {non_torsion}, x has {} digit denominator, {} bits, {secs:.0} s", x.denom().to_string().len(), rec["precision_used"]),
    );

    let generator = r["generator"].as_array().and_then(|g| Some(rpoint(rational(&g[0])?, rational(&g[1])?)));
    match (generator, r["multiple_of_generator"].as_i64()) {
        (Some(g), Some(m)) => {
            let s = rpoint(xs, ys);
            let mg = w_mul(m, &g);
            let exact = mg.same_as(&s) || w_neg(&mg).same_as(&s);
            let ratio = r["height_ratio"].as_f64().unwrap_or(f64::NAN);
            let close = ((ratio - (m * m) as f64) / (m * m) as f64).abs() < 1e-6;
            report.line(
                &format!("{tag} odd square height ratio"),
                exact && close && m % 2 == 1,
                format!("G = ({}, {}), S* = ±{m}·G exactly: {exact}, ĥ ratio {ratio:.9}", g.x, g.y),
            );
        }
        _ => {
            let descent = r["descent_square_class"].as_i64();
            report.line(&format!("{tag} odd square height ratio"), on && non_torsion && descent.is_some(), format!("no generator found; descent class {descent:?}"));
        }
    }
}

fn chain() -> (bool, String) {
    let prec = 256;
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut worst = f64::NEG_INFINITY;
    let mut count = 0;
    for (n, rho) in [(5i64, 1i64), (7, -1), (23, -1), (25, 1), (41, 1), (43, -1)] {
        for _ in 0..3 {
            let x = BigComplex::from_f64(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0), prec);
            let y = (x.sqr() * &x + BigComplex::one(prec)).sqrt();
            let stages = chain_trace(n, rho, &point(x, y)).unwrap();
            let (curve, p) = stages.last().unwrap();
            let target = matches!(curve, CurveId::Weierstrass { d } if (d - &BigComplex::from_int(rho * n, prec)).is_zero());
            if !target || stages.len() != 9 {
                return (false, format!("n={n}: chain ends on {} after {} maps", curve.name(), stages.len() - 1));
            }
            let q = p.normalized();
            let scale = q.x.log2_abs().max(q.y.log2_abs()).max(0.0);
            worst = worst.max(log2_or_neg_inf(&curve.residual(p)) - 3.0 * scale);
            count += 1;
        }
    }
    (worst < -(prec as f64 - 40.0), format!("{count} points through 8 maps onto E_ρn, worst log2 residual {worst:.1} (relative to height³)"))
}

fn main() {
    let mut report = Report { lines: Vec::new() };
    report.timed("1 golden q-expansions", Some(Duration::from_secs(5)), golden);
    report.timed("2 parametrization identity", Some(Duration::from_secs(30)), parametrization);
    report.timed("3 special values at cusps", None, cusps);
    report.timed("4 transformation laws", None, transformations);
    report.timed("5 unit identity", Some(Duration::from_secs(600)), units);
    let start = Instant::now();
    report.timed("6 c closed form vs brute force", Some(Duration::from_secs(60)), c_coefficients);
    degree_lines(&mut report);
    println!("       combinatorial oracles took {:.2} s", start.elapsed().as_secs_f64());
    report.timed("7 matrix invariants", None, matrices);
    for (a, b) in [(5, 1), (41, 1), (61, 1), (77, 1)] {
        construct_lines(&mut report, a, b);
    }
    report.timed("9 isogeny chain", None, chain);

    let unexpected: Vec<&str> = report.lines.iter().filter(|(n, p)| *p == KNOWN_DEVIATIONS.contains(&n.as_str())).map(|(n, _)| n.as_str()).collect();
    let passed = report.lines.iter().filter(|(_, p)| *p).count();
    println!("{passed}/{} lines pass; {} known deviations", report.lines.len(), KNOWN_DEVIATIONS.len());
    if !unexpected.is_empty() {
        println!("unexpected outcome: {unexpected:?}");
        std::process::exit(1);
    }
}
