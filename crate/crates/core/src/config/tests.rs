use proptest::prelude::*;

use super::*;

type C = Configuration<i64>;

fn fin(v: &[i64]) -> Vec<ExtendedHeight<i64>> {
    v.iter().copied().map(Finite).collect()
}

#[test]
fn get_height_examples() {
    let c = C::finite(&[(0, 2)]);
    assert_eq!(c.get(0), Finite(2));
    assert_eq!(c.get(10), Finite(0));
    let y = C::affine(&[0, 2], 1);
    assert_eq!(y.get(5), Finite(4));
    for i in -6..6 {
        assert_eq!(y.get(2 * i), Finite(i));
        assert_eq!(y.get(2 * i + 1), Finite(i + 2));
    }
}

#[test]
fn shift_examples() {
    let c = C::finite(&[(0, 2)]);
    assert_eq!(c.shift(1), C::finite(&[(-1, 2)]));
    assert_eq!(c.shift(0), c);
    let p = C::periodic(&[0, 1]);
    assert_eq!(p.shift(2), p);
    assert_ne!(p.shift(1), p);
    assert_eq!(p.shift(1), C::periodic(&[1, 0]));
}

#[test]
fn raise_examples() {
    let c = C::zero().raise(3);
    assert!(c.core().is_empty());
    assert_eq!(c.right_tail().period(), &fin(&[3])[..]);
    assert_eq!(c, C::constant(Finite(3)));
    let c = C::finite(&[(1, 4)]);
    assert_eq!(c.raise(0), c);
    let inf = C::finite_extended([(0, PosInf), (1, Finite(1))]);
    let up = inf.raise(5);
    assert_eq!(up.get(0), PosInf);
    assert_eq!(up.get(1), Finite(6));
    assert_eq!(up.get(-9), Finite(5));
}

#[test]
fn equals_examples() {
    assert!(C::zero().equals(&C::periodic(&[0])));
    assert!(!C::periodic(&[0, 1]).equals(&C::periodic(&[0, 2])));
    assert!(!C::affine(&[0, 2], 1).equals(&C::affine(&[0, 3], 1)));
    assert!(C::periodic(&[0, 1, 0, 1]).equals(&C::periodic(&[0, 1])));
}

#[test]
fn sum_grains_examples() {
    assert_eq!(C::zero().sum_grains(), Ok(0));
    assert_eq!(C::finite(&[(0, 4), (1, 2)]).sum_grains(), Ok(6));
    assert_eq!(C::finite(&[(0, 1), (1, -1)]).sum_grains(), Ok(0));
    assert_eq!(
        C::periodic(&[0, 1]).sum_grains(),
        Err(ConfigError::NotFinite)
    );
    assert_eq!(
        C::finite_extended([(3, NegInf)]).sum_grains(),
        Err(ConfigError::InfiniteColumn(3))
    );
}

#[test]
fn canonical_form_is_minimal() {
    // zero padding is trimmed
    let c = C::from_window(-3, fin(&[0, 0, 5, 0, 7, 0]));
    assert_eq!((c.core_start(), c.core()), (-1, &fin(&[5, 0, 7])[..]));
    // a core that continues the right law is absorbed
    let c = C::general(
        0,
        fin(&[9, 0, 1, 0, 1]),
        Tail::constant(Finite(9)),
        Tail::new(fin(&[0, 1]), 0).unwrap(),
    );
    assert_eq!(c.core(), &[] as &[ExtendedHeight<i64>]);
    assert_eq!(c.core_start(), 1);
    assert_eq!(c.get(0), Finite(9));
    assert_eq!(c.get(1), Finite(0));
    assert!(!c.is_periodic());
}

#[test]
fn pure_affine_detected_from_general_parts() {
    let y = C::affine(&[0, 2], 1);
    assert!(y.is_affine_periodic() && !y.is_periodic());
    let same = C::general(
        7,
        y.window(7, 12),
        Tail::new(y.window(3, 6), 2).unwrap(),
        Tail::new(y.window(13, 14), 1).unwrap(),
    );
    assert_eq!(same, y);
    assert_eq!(C::periodic(&[2, 0, 2, 0]).period(), Some(2));
}

#[test]
fn finite_class_membership() {
    let c = C::finite(&[(2, 1), (-4, -3)]);
    assert!(c.is_finite_class());
    assert!(c.shift(5).is_finite_class());
    assert!(!c.raise(1).is_finite_class());
    assert_eq!(c.support_radius(), Some(4));
    assert_eq!(C::zero().support_radius(), None);
    assert_eq!(C::finite(&[(-1, 1), (2, 1)]).support_radius(), Some(2));
}

#[test]
fn infinite_columns_inside_finite_core() {
    let c = C::finite_extended([(0, PosInf), (2, NegInf)]);
    assert!(c.is_finite_class() && c.has_infinity());
    assert_eq!(c.first_infinite_column(), Some(0));
    assert_eq!(c.get(1), Finite(0));
}

fn height() -> impl Strategy<Value = ExtendedHeight<i64>> {
    prop_oneof![
        8 => (-6i64..=6).prop_map(Finite),
        1 => Just(PosInf),
        1 => Just(NegInf),
    ]
}

fn tail() -> impl Strategy<Value = Tail<i64>> {
    (prop::collection::vec(height(), 1..4), -2i64..=2).prop_map(|(p, s)| Tail::new(p, s).unwrap())
}

fn config() -> impl Strategy<Value = C> {
    (
        -5i64..5,
        prop::collection::vec(height(), 0..6),
        tail(),
        tail(),
    )
        .prop_map(|(a, core, l, r)| C::general(a, core, l, r))
}

proptest! {
    #[test]
    fn shift_and_raise_round_trip(c in config(), k in -7i64..7) {
        prop_assert_eq!(c.shift(k).shift(-k), c.clone());
        prop_assert_eq!(c.raise(k).raise(-k), c.clone());
        for i in -12..12 {
            prop_assert_eq!(c.shift(k).get(i), c.get(i + k));
        }
    }

    #[test]
    fn canonicalize_is_idempotent(c in config()) {
        prop_assert_eq!(c.canonicalize(), c.clone());
    }

    #[test]
    fn canonical_form_preserves_every_column(
        a in -5i64..5,
        core in prop::collection::vec(height(), 0..6),
        l in tail(),
        r in tail(),
    ) {
        let c = C::general(a, core.clone(), l.clone(), r.clone());
        let b = a + core.len() as i64;
        for i in -20..20 {
            let expect = if i < a {
                l.eval(a - l.len() as i64, i)
            } else if i < b {
                core[(i - a) as usize]
            } else {
                r.eval(b, i)
            };
            prop_assert_eq!(c.get(i), expect);
        }
    }

    #[test]
    fn three_constructions_of_one_sequence_agree(
        values in prop::collection::vec(-4i64..=4, 1..5),
        start in -6i64..6,
        reps in 1usize..3,
    ) {
        // a periodic sequence built periodically, as a general window, and
        // with a repeated period must be the same configuration
        let p = values.len() as i64;
        let periodic = C::periodic(&values);
        let repeated: Vec<i64> = values.iter().copied().cycle().take(values.len() * reps).collect();
        let via_repeat = C::periodic(&repeated);
        let window = periodic.window(start, start + 2 * p);
        let via_general = C::general(
            start,
            window,
            Tail::new(periodic.window(start - p, start - 1), 0).unwrap(),
            Tail::new(periodic.window(start + 2 * p + 1, start + 3 * p), 0).unwrap(),
        );
        prop_assert_eq!(&periodic, &via_repeat);
        prop_assert_eq!(&via_repeat, &via_general);
        prop_assert_eq!(&periodic, &via_general);
    }

    #[test]
    fn finite_sequences_equal_across_constructors(
        cols in prop::collection::btree_map(-6i64..6, -3i64..=3, 0..5),
    ) {
        let pairs: Vec<(i64, i64)> = cols.into_iter().collect();
        let a = C::finite(&pairs);
        let b = C::from_window(-6, (-6..6).map(|i| a.get(i)).collect());
        let c = C::general(
            -6,
            (-6..6).map(|i| a.get(i)).collect(),
            Tail::new(vec![Finite(0), Finite(0)], 0).unwrap(),
            Tail::constant(Finite(0)),
        );
        prop_assert_eq!(&a, &b);
        prop_assert_eq!(&b, &c);
        prop_assert!(a.is_finite_class());
    }
}
