//! Class number of ℚ(∛n).
//!
//! Every class contains finitely many reduced fractional ideals (lattices J
//! with 1 a relative minimum), and they form one cycle under the minima walk,
//! of period log ε. The least one in a fixed total order is a canonical label
//! for the class, so the class group is the closure of the trivial class under
//! multiplication by prime ideals below the Minkowski bound.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Serialize;

use super::field::{CubicField, CubicFieldElem};
use super::ideal::{factor_base, Ideal};
use super::lattice;
use super::voronoi::{embed_f64, fundamental_unit, reduce_basis, successor, FundamentalUnit};
use crate::arith;
use crate::error::{Error, Result};

#[derive(Clone, Debug, Serialize)]
pub struct ClassGroupReport {
    pub n: i64,
    pub class_number: usize,
    pub minkowski_bound: f64,
    pub factor_base_size: usize,
    /// Order of each factor-base prime in the class group.
    pub generator_orders: Vec<(i64, u32, usize)>,
    /// Reduced ideals per class (cycle lengths), in discovery order.
    pub cycle_lengths: Vec<usize>,
}

/// A relative minimum of the lattice: its shortest vector in the embedding norm.
fn shortest(basis: &[CubicFieldElem]) -> CubicFieldElem {
    let rows: Vec<Vec<f64>> = basis.iter().map(|x| embed_f64(x).to_vec()).collect();
    let g = lattice::gram(&rows);
    let b0: f64 = g[0][0];
    let cands = lattice::fincke_pohst(&g, b0);
    let mut best = basis[0].clone();
    let mut best_len = b0;
    for v in cands {
        let x = super::voronoi::combine(basis, &v);
        let e = embed_f64(&x);
        let l = e.iter().map(|t| t * t).sum::<f64>();
        if l < best_len * (1.0 - 1e-12) {
            best = x;
            best_len = l;
        }
    }
    best
}

/// The reduced ideals in the class of `j`, one full period.
pub fn reduced_cycle(field: &Arc<CubicField>, j: &Ideal, max_len: usize) -> Result<Vec<Ideal>> {
    let red = reduce_basis(&j.z_basis(field));
    let g0 = shortest(&red);
    let inv = g0.inv().ok_or_else(|| Error::Check("zero vector in ideal".into()))?;
    let start = j.scale(&inv);
    let mut cycle = vec![start.clone()];
    let mut cur = start.clone();
    loop {
        let basis = reduce_basis(&cur.z_basis(field));
        let (mu, _) = successor(&basis)?;
        let next = cur.scale(&mu.inv().expect("nonzero"));
        if next == start {
            return Ok(cycle);
        }
        if cycle.len() >= max_len {
            return Err(Error::Budget(format!("reduced cycle longer than {max_len}")));
        }
        cycle.push(next.clone());
        cur = next;
    }
}

/// Canonical label of the class of `j`.
pub fn class_label(field: &Arc<CubicField>, j: &Ideal, max_len: usize) -> Result<(Ideal, usize)> {
    let cyc = reduced_cycle(field, j, max_len)?;
    let len = cyc.len();
    Ok((cyc.into_iter().min().expect("nonempty"), len))
}

pub fn is_principal(field: &Arc<CubicField>, j: &Ideal) -> Result<bool> {
    let (a, _) = class_label(field, j, 100_000)?;
    let (b, _) = class_label(field, &Ideal::unit(field), 100_000)?;
    Ok(a == b)
}

pub fn class_group(field: &Arc<CubicField>) -> Result<ClassGroupReport> {
    let bound = field.minkowski_bound();
    let fb = factor_base(field, bound);
    let max_len = 100_000;
    let (l0, len0) = class_label(field, &Ideal::unit(field), max_len)?;
    let mut classes: BTreeMap<Ideal, usize> = BTreeMap::new();
    let mut reps = vec![l0.clone()];
    let mut lens = vec![len0];
    classes.insert(l0, 0);
    // mult[i][g] = class of reps[i]·P_g
    let mut mult: Vec<Vec<usize>> = Vec::new();
    let mut i = 0;
    while i < reps.len() {
        let mut row = Vec::with_capacity(fb.len());
        for p in &fb {
            let prod = reps[i].mul(&p.ideal, field);
            let (lab, len) = class_label(field, &prod, max_len)?;
            let idx = match classes.get(&lab) {
                Some(&k) => k,
                None => {
                    let k = reps.len();
                    classes.insert(lab.clone(), k);
                    reps.push(lab);
                    lens.push(len);
                    k
                }
            };
            row.push(idx);
        }
        mult.push(row);
        i += 1;
        if reps.len() > 10_000 {
            return Err(Error::Budget("class group larger than 10000".into()));
        }
    }
    let generator_orders = fb
        .iter()
        .enumerate()
        .map(|(g, p)| {
            let mut c = mult[0][g];
            let mut ord = 1;
            while c != 0 {
                c = mult[c][g];
                ord += 1;
            }
            (p.p, p.f, ord)
        })
        .collect();
    Ok(ClassGroupReport { n: field.n, class_number: reps.len(), minkowski_bound: bound, factor_base_size: fb.len(), generator_orders, cycle_lengths: lens })
}

pub fn class_number(n: i64) -> Result<usize> {
    Ok(class_group(&CubicField::new(n)?)?.class_number)
}

/// Truncated Euler product for Res_{s=1} ζ_K(s). Display only.
pub fn residue_estimate(field: &Arc<CubicField>, prime_bound: i64) -> f64 {
    let mut res = 1.0;
    for p in arith::primes_up_to(prime_bound) {
        let mut local = 1.0 - 1.0 / p as f64;
        for q in super::ideal::primes_above(field, p) {
            local /= 1.0 - 1.0 / (q.norm() as f64);
        }
        res *= local;
    }
    res
}

/// h ≈ 3√3·n′·Res/(2π log ε). Display only.
pub fn class_number_estimate(field: &Arc<CubicField>, unit: &FundamentalUnit, prime_bound: i64) -> f64 {
    let res = residue_estimate(field, prime_bound);
    3.0 * 3f64.sqrt() * field.n_prime() as f64 * res / (2.0 * std::f64::consts::PI * unit.regulator)
}

/// Class number and fundamental unit together.
pub fn class_number_and_unit(n: i64) -> Result<(usize, FundamentalUnit)> {
    let f = CubicField::new(n)?;
    Ok((class_group(&f)?.class_number, fundamental_unit(&f)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cubic::ideal::basis;

    #[test]
    fn small_class_numbers() {
        assert_eq!(class_number(5).unwrap(), 1);
        assert_eq!(class_number(7).unwrap(), 3);
    }

    #[test]
    fn principal_ideals_are_principal() {
        let f = CubicField::new(11).unwrap();
        let x = CubicFieldElem::from_ints(&f, 7, -3, 2);
        assert!(is_principal(&f, &Ideal::principal(&x).unwrap()).unwrap());
        let _ = basis(&f);
    }
}
