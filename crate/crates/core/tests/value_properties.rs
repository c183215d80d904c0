use proptest::prelude::*;
use qualdom::model::{value_compare, Direction, OrderingOutcome, Value, ValueDomain};

fn direction() -> impl Strategy<Value = Direction> {
    prop_oneof![Just(Direction::Maximize), Just(Direction::Minimize)]
}

/// Small grid so that equal endpoints and exact ties are common.
fn range() -> impl Strategy<Value = Value> {
    (0..8i32, 0..4i32).prop_map(|(lo, width)| Value::range(lo as f64, (lo + width) as f64))
}

fn number() -> impl Strategy<Value = Value> {
    prop_oneof![
        (-5..5i32).prop_map(|x| Value::Number(x as f64)),
        any::<f64>().prop_filter("finite", |x| x.is_finite()).prop_map(Value::Number)
    ]
}

fn better(d: &ValueDomain, a: &Value, b: &Value) -> bool {
    value_compare(d, a, b).unwrap() == OrderingOutcome::Better
}

fn assert_strict_order(d: &ValueDomain, a: &Value, b: &Value, c: &Value) -> Result<(), TestCaseError> {
    prop_assert!(!better(d, a, a));
    prop_assert!(!(better(d, a, b) && better(d, b, a)));
    if better(d, a, b) && better(d, b, c) {
        prop_assert!(better(d, a, c));
    }
    Ok(())
}

fn assert_mirror(d: &ValueDomain, a: &Value, b: &Value) -> Result<(), TestCaseError> {
    let forward = value_compare(d, a, b).unwrap();
    let backward = value_compare(d, b, a).unwrap();
    prop_assert_eq!(forward.mirror(), backward);
    prop_assert_eq!(forward == OrderingOutcome::Equal, a == b);
    Ok(())
}

#[test]
fn ordinal_better_is_a_strict_total_order() {
    let d = ValueDomain::ordinal(["low", "mid", "high", "max"]);
    let levels = ["low", "mid", "high", "max"].map(Value::level);
    for a in &levels {
        for b in &levels {
            for c in &levels {
                assert_strict_order(&d, a, b, c).unwrap();
            }
            assert_mirror(&d, a, b).unwrap();
            let outcome = value_compare(&d, a, b).unwrap();
            assert_ne!(outcome, OrderingOutcome::Incomparable);
        }
    }
}

proptest! {
    #[test]
    fn numeric_better_is_a_strict_order(dir in direction(), a in number(), b in number(), c in number()) {
        let d = ValueDomain::Numeric { direction: dir };
        assert_strict_order(&d, &a, &b, &c)?;
        assert_mirror(&d, &a, &b)?;
        prop_assert_ne!(value_compare(&d, &a, &b).unwrap(), OrderingOutcome::Incomparable);
    }

    #[test]
    fn interval_better_is_a_strict_order(dir in direction(), a in range(), b in range(), c in range()) {
        let d = ValueDomain::Interval { direction: dir };
        assert_strict_order(&d, &a, &b, &c)?;
        assert_mirror(&d, &a, &b)?;
    }

    #[test]
    fn interval_better_is_an_interval_order(dir in direction(), v in proptest::array::uniform4(range())) {
        let d = ValueDomain::Interval { direction: dir };
        let [a, b, c, e] = &v;
        if better(&d, a, b) && better(&d, c, e) {
            prop_assert!(better(&d, a, e) || better(&d, c, b));
        }
    }

    #[test]
    fn minimize_mirrors_maximize(a in range(), b in range()) {
        let max = value_compare(&ValueDomain::Interval { direction: Direction::Maximize }, &a, &b).unwrap();
        let min = value_compare(&ValueDomain::Interval { direction: Direction::Minimize }, &a, &b).unwrap();
        prop_assert_eq!(max.mirror(), min);
    }
}

#[test]
fn mismatched_values_are_rejected() {
    let d = ValueDomain::Numeric { direction: Direction::Maximize };
    assert!(value_compare(&d, &Value::Number(1.0), &Value::level("low")).is_err());
    let o = ValueDomain::ordinal(["low", "high"]);
    assert!(value_compare(&o, &Value::level("low"), &Value::level("medium")).is_err());
}
