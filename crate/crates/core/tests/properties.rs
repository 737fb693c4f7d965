use heegner_core::cubic::{CubicField, CubicFieldElem};
use heegner_core::curve::{w_add, w_mul, w_neg, ProjPoint};
use heegner_core::height::canonical_height;
use heegner_core::modular::Cusp;
use heegner_core::recognize::recognize_real;
use heegner_core::{mp, CubicCharacter, EisensteinInt};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn eis() -> impl Strategy<Value = EisensteinInt> {
    (-300i64..300, -300i64..300).prop_map(|(a, b)| EisensteinInt::new(a, b))
}

fn rpoint(x: i64, y: i64) -> ProjPoint<BigRational> {
    ProjPoint { x: BigRational::from_integer(x.into()), y: BigRational::from_integer(y.into()), z: BigRational::one() }
}

fn elem(f: &std::sync::Arc<CubicField>, c: [i64; 3]) -> CubicFieldElem {
    CubicFieldElem::from_power_coords(f, c.map(|v| BigRational::from_integer(v.into())))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn eisenstein_norm_is_multiplicative(x in eis(), y in eis()) {
        prop_assert_eq!((x * y).norm(), x.norm() * y.norm());
        prop_assert_eq!(x.conj().norm(), x.norm());
    }

    #[test]
    fn eisenstein_exact_division_undoes_product(x in eis(), y in eis()) {
        prop_assume!(!y.is_zero());
        prop_assert_eq!((x * y).div_exact(&y), Some(x));
    }

    #[test]
    fn cubic_character_is_multiplicative(n in prop::sample::select(vec![5i64, 7, 13, 25, 35]), x in eis(), y in eis()) {
        let chi = CubicCharacter::new(n).unwrap();
        if let (Some(a), Some(b)) = (chi.try_eval(x), chi.try_eval(y)) {
            prop_assert_eq!(chi.try_eval(x * y), Some(a * b));
        }
    }

    #[test]
    fn cubic_norm_is_multiplicative(n in prop::sample::select(vec![5i64, 7, 11, 25, 41, 49]), a in prop::array::uniform3(-20i64..20), b in prop::array::uniform3(-20i64..20)) {
        let f = CubicField::new(n).unwrap();
        let (x, y) = (elem(&f, a), elem(&f, b));
        prop_assert_eq!(x.mul(&y).norm(), x.norm() * y.norm());
        if !y.is_zero() {
            prop_assert_eq!(x.mul(&y).div(&y), Some(x.clone()));
        }
    }

    #[test]
    fn group_law_is_associative(i in -4i64..5, j in -4i64..5, k in -4i64..5) {
        // (−1, 2) has infinite order on y² = x³ + 5
        let g = rpoint(-1, 2);
        let (p, q, r) = (w_mul(i, &g), w_mul(j, &g), w_mul(k, &g));
        prop_assert!(w_add(&w_add(&p, &q), &r).same_as(&w_add(&p, &w_add(&q, &r))));
        prop_assert!(w_add(&p, &q).same_as(&w_mul(i + j, &g)));
        prop_assert!(w_add(&p, &w_neg(&p)).same_as(&w_mul(0, &g)));
    }

    #[test]
    fn canonical_height_is_quadratic(m in 1i64..7) {
        let d = BigInt::from(5);
        let g = rpoint(-1, 2);
        let h = canonical_height(&g, &d);
        let hm = canonical_height(&w_mul(m, &g), &d);
        prop_assert!((hm / h - (m * m) as f64).abs() < 1e-8 * (m * m) as f64);
    }

    #[test]
    fn rationals_are_recognized(p in -1_000_000_000i64..1_000_000_000, q in 1i64..1_000_000_000) {
        let r = BigRational::new(p.into(), q.into());
        let x = mp::real_ratio(&r, 256);
        prop_assert_eq!(recognize_real(&x, 40, 128).unwrap(), r);
    }

    #[test]
    fn cusps_are_scale_invariant(a in -50i64..50, b in -50i64..50, k in prop::sample::select(vec![-3i64, -1, 2, 7])) {
        prop_assume!(!(a.is_zero() && b.is_zero()));
        prop_assert_eq!(Cusp::new(a * k, b * k).unwrap(), Cusp::new(a, b).unwrap());
    }
}
