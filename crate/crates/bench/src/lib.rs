//! Fixtures shared by the benchmarks.

use heegner_core::modular::UpperHalfPoint;
use heegner_core::BigComplex;

/// A point well inside the upper half plane, away from the cusps.
pub fn sample_tau(prec: usize) -> UpperHalfPoint {
    UpperHalfPoint::new(BigComplex::from_f64(0.137, 0.81, prec)).expect("im > 0")
}

/// Admissible n for the cubic-field benchmarks, small to large class number.
pub const FIELD_N: [i64; 3] = [5, 31, 43];
