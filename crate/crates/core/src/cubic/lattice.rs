//! Small-dimension LLL and Fincke–Pohst enumeration over f64 Gram data.
//! Callers apply the returned integer transforms to exact bases.

pub type IMat = Vec<Vec<i64>>;

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn identity(n: usize) -> IMat {
    (0..n).map(|i| (0..n).map(|j| i64::from(i == j)).collect()).collect()
}

/// LLL-reduce the rows of `b` (δ = 0.99). Returns the reduced rows and the
/// unimodular U with reduced = U·b.
pub fn lll(b: &[Vec<f64>]) -> (Vec<Vec<f64>>, IMat) {
    let n = b.len();
    let mut b: Vec<Vec<f64>> = b.to_vec();
    let mut u = identity(n);
    let delta = 0.99;
    let gso = |b: &Vec<Vec<f64>>| {
        let mut bs: Vec<Vec<f64>> = Vec::with_capacity(n);
        let mut mu = vec![vec![0.0; n]; n];
        for i in 0..n {
            let mut v = b[i].clone();
            for j in 0..i {
                mu[i][j] = dot(&b[i], &bs[j]) / dot(&bs[j], &bs[j]);
                for (vk, bk) in v.iter_mut().zip(&bs[j]) {
                    *vk -= mu[i][j] * bk;
                }
            }
            bs.push(v);
        }
        (bs, mu)
    };
    let mut k = 1;
    let mut guard = 0;
    while k < n && guard < 10_000 {
        guard += 1;
        for j in (0..k).rev() {
            let (_, mu) = gso(&b);
            let q = mu[k][j].round();
            if q != 0.0 {
                let qi = q as i64;
                for c in 0..b[k].len() {
                    b[k][c] -= q * b[j][c];
                }
                for c in 0..n {
                    u[k][c] -= qi * u[j][c];
                }
            }
        }
        let (bs, mu) = gso(&b);
        let lhs = dot(&bs[k], &bs[k]);
        let rhs = (delta - mu[k][k - 1] * mu[k][k - 1]) * dot(&bs[k - 1], &bs[k - 1]);
        if lhs >= rhs {
            k += 1;
        } else {
            b.swap(k, k - 1);
            u.swap(k, k - 1);
            k = (k - 1).max(1);
        }
    }
    (b, u)
}

/// All nonzero integer vectors x with xᵀGx ≤ bound, one of each ±x pair.
pub fn fincke_pohst(gram: &[Vec<f64>], bound: f64) -> Vec<Vec<i64>> {
    let n = gram.len();
    // q_ii and q_ij (i < j) of the completed-square form
    let mut q = gram.to_vec();
    for i in 0..n {
        for j in i + 1..n {
            q[j][i] = q[i][j];
            q[i][j] /= q[i][i];
        }
        for k in i + 1..n {
            for l in k..n {
                q[k][l] -= q[k][i] * q[i][l];
            }
        }
    }
    let mut out = Vec::new();
    let mut x = vec![0i64; n];
    let slack = bound * (1.0 + 1e-9) + 1e-12;
    enumerate(&q, n, n - 1, slack, 0.0, &mut x, &mut out);
    out.retain(|v| {
        let first = v.iter().find(|&&c| c != 0);
        matches!(first, Some(&c) if c > 0)
    });
    out
}

fn enumerate(q: &[Vec<f64>], n: usize, i: usize, bound: f64, partial: f64, x: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
    let center: f64 = -(i + 1..n).map(|j| q[i][j] * x[j] as f64).sum::<f64>();
    let rem = bound - partial;
    if rem < 0.0 {
        return;
    }
    let r = (rem / q[i][i]).sqrt();
    let lo = (center - r).ceil() as i64;
    let hi = (center + r).floor() as i64;
    for v in lo..=hi {
        x[i] = v;
        let d = v as f64 - center;
        let p = partial + q[i][i] * d * d;
        if p > bound {
            continue;
        }
        if i == 0 {
            if x.iter().any(|&c| c != 0) {
                out.push(x.clone());
            }
        } else {
            enumerate(q, n, i - 1, bound, p, x, out);
        }
    }
    x[i] = 0;
}

pub fn gram(rows: &[Vec<f64>]) -> Vec<Vec<f64>> {
    rows.iter().map(|a| rows.iter().map(|b| dot(a, b)).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn det3i(u: &IMat) -> i64 {
        u[0][0] * (u[1][1] * u[2][2] - u[1][2] * u[2][1]) - u[0][1] * (u[1][0] * u[2][2] - u[1][2] * u[2][0])
            + u[0][2] * (u[1][0] * u[2][1] - u[1][1] * u[2][0])
    }

    #[test]
    fn lll_is_unimodular_and_shortens() {
        let b = vec![vec![1.0, 0.0, 0.0], vec![1000.0, 1.0, 0.0], vec![3001.0, 17.0, 1.0]];
        let (r, u) = lll(&b);
        assert_eq!(det3i(&u).abs(), 1);
        for row in &r {
            assert!(dot(row, row) < 4.0);
        }
    }

    #[test]
    fn enumeration_matches_brute_force() {
        let g = vec![vec![2.0, 0.5, 0.1], vec![0.5, 1.5, -0.3], vec![0.1, -0.3, 3.0]];
        let got = fincke_pohst(&g, 6.0);
        let mut brute = 0;
        for a in -5i64..=5 {
            for b in -5i64..=5 {
                for c in -5i64..=5 {
                    let x = [a as f64, b as f64, c as f64];
                    let v: f64 = (0..3).map(|i| (0..3).map(|j| x[i] * g[i][j] * x[j]).sum::<f64>()).sum();
                    if (a, b, c) != (0, 0, 0) && v <= 6.0 {
                        brute += 1;
                    }
                }
            }
        }
        assert_eq!(got.len() * 2, brute);
    }
}
