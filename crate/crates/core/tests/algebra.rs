use num_bigint::BigInt;
use proptest::prelude::*;
use skein_core::{LaurentA, LaurentVZ, UnitFlag, VZ};

fn poly_a() -> impl Strategy<Value = LaurentA> {
    prop::collection::vec((-6i64..=6, -5i64..=5), 0..6)
        .prop_map(|ts| LaurentA::from_terms(ts.into_iter().map(|(e, c)| (e, BigInt::from(c)))))
}

fn poly_vz() -> impl Strategy<Value = LaurentVZ> {
    prop::collection::vec((-4i64..=4, -3i64..=3, -5i64..=5), 0..6).prop_map(|ts| {
        LaurentVZ::from_terms(ts.into_iter().map(|(a, b, c)| (VZ(a, b), BigInt::from(c))))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn ring_axioms_a(x in poly_a(), y in poly_a(), z in poly_a()) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x * &y, &y * &x);
        prop_assert_eq!(&x + &y, &y + &x);
        prop_assert_eq!((&x - &x).len(), 0);
    }

    #[test]
    fn ring_axioms_vz(x in poly_vz(), y in poly_vz(), z in poly_vz()) {
        prop_assert_eq!(&(&x + &y) + &z, &x + &(&y + &z));
        prop_assert_eq!(&(&x * &y) * &z, &x * &(&y * &z));
        prop_assert_eq!(&x * &(&y + &z), &(&x * &y) + &(&x * &z));
        prop_assert_eq!(&x * &y, &y * &x);
    }

    #[test]
    fn serialization_is_canonical(x in poly_a(), y in poly_a()) {
        let lhs = (&x + &y) * (&x - &y);
        let rhs = &(&x * &x) - &(&y * &y);
        prop_assert_eq!(lhs.to_string(), rhs.to_string());
        prop_assert_eq!(lhs.to_json(), rhs.to_json());
        prop_assert_eq!(lhs.to_string().parse::<LaurentA>().unwrap(), lhs.clone());
        prop_assert_eq!(LaurentA::from_json(&lhs.to_json()).unwrap(), lhs);
    }

    #[test]
    fn vz_text_round_trip(x in poly_vz()) {
        prop_assert_eq!(x.to_string().parse::<LaurentVZ>().unwrap(), x.clone());
        prop_assert_eq!(LaurentVZ::from_json(&x.to_json()).unwrap(), x);
    }
}

#[test]
fn cancellation() {
    let x = LaurentA::term(1, 2) + LaurentA::term(1, -2);
    assert_eq!(x + LaurentA::term(-1, 2), LaurentA::term(1, -2));
}

#[test]
fn square_of_loop_value() {
    let d = LaurentA::delta();
    let expected = LaurentA::term(1, 4) + LaurentA::term(2, 0) + LaurentA::term(1, -4);
    assert_eq!(&d * &d, expected);
}

#[test]
fn v_times_inverse() {
    assert_eq!(LaurentVZ::v_pow(1) * LaurentVZ::v_pow(-1), LaurentVZ::term(1, 0, 0));
}

#[test]
fn unit_detection() {
    assert_eq!(LaurentA::term(-1, 4).is_unit(), UnitFlag::Unit { sign: -1, exponent: 4 });
    assert_eq!((LaurentA::term(1, 2) + LaurentA::term(1, 0)).is_unit(), UnitFlag::NotUnit);
    assert!(LaurentVZ::term(1, 3, -1).is_unit().is_unit());
    assert_eq!(LaurentA::term(2, 0).is_unit(), UnitFlag::NotUnit);
    let u = LaurentA::term(-1, 5);
    assert_eq!(&u * &u.inverse().unwrap(), LaurentA::term(1, 0));
}

#[test]
fn text_and_json_forms() {
    let d = LaurentA::delta();
    assert_eq!(d.to_string(), "-1*A^2 + -1*A^-2");
    assert_eq!(d.to_json().to_string(), "[[2,-1],[-2,-1]]");
    let t = LaurentVZ::trivial_circle();
    assert_eq!(t.to_string(), "-1*v^1*z^-1 + 1*v^-1*z^-1");
    assert_eq!(t.to_json().to_string(), "[[1,-1,-1],[-1,-1,1]]");
}
