use super::*;
use crate::zoo::{make_l, make_s, make_sr, make_x, make_y};

fn opts() -> SearchOptions {
    SearchOptions::default()
}

#[test]
fn s_collision_in_small_window() {
    let s = make_s();
    let rep = check_injective_bounded(&s, SearchClass::F, 1, 1, &opts()).unwrap();
    assert_eq!(rep.verdict, Verdict::WitnessFound);
    let (a, b) = rep.pair().unwrap();
    assert_eq!(a, &Config::zero());
    assert_eq!(b, &Config::finite(&[(0, 1), (1, -1)]));
    assert!(verify_witness_pair(&s, a, b));
}

#[test]
fn sr_has_no_small_collision() {
    let rep = check_injective_bounded(&make_sr(), SearchClass::F, 2, 2, &opts()).unwrap();
    assert_eq!(rep.verdict, Verdict::ExhaustedNoWitness);
    assert_eq!(rep.grade, Some(Grade::Proof));
    assert_eq!(rep.candidates, 5u64.pow(5));
}

#[test]
fn x_periodic_collision() {
    let x = make_x();
    let rep = check_injective_bounded(&x, SearchClass::P, 2, 2, &opts()).unwrap();
    let (a, b) = rep.pair().unwrap();
    assert_eq!(a, &Config::periodic(&[0, 1]));
    assert_eq!(b, &Config::periodic(&[0, 2]));
    assert!(verify_witness_pair(&x, a, b));
}

#[test]
fn enumeration_count_is_exact() {
    let id = SandAutomaton::identity(1);
    for (n, h) in [(1u64, 1u64), (1, 2), (2, 1)] {
        let rep = check_injective_bounded(&id, SearchClass::F, n, h, &opts()).unwrap();
        assert_eq!(rep.candidates, (2 * h + 1).pow(2 * n as u32 + 1));
    }
    let with_inf = SearchOptions {
        with_infinities: true,
        ..opts()
    };
    let rep = check_injective_bounded(&id, SearchClass::F, 1, 1, &with_inf).unwrap();
    assert_eq!(rep.candidates, 5u64.pow(3));
    let rep = check_injective_bounded(&id, SearchClass::P, 3, 1, &opts()).unwrap();
    assert_eq!(rep.candidates, 3 + 9 + 27);
}

#[test]
fn enumeration_guard() {
    let small = SearchOptions {
        max_candidates: 100,
        ..opts()
    };
    let err = check_injective_bounded(&make_s(), SearchClass::F, 3, 3, &small);
    assert!(matches!(err, Err(AnalysisError::TooManyCandidates { .. })));
    assert_eq!(
        check_injective_bounded(&make_s(), SearchClass::F, 0, 3, &opts()),
        Err(AnalysisError::ZeroBound)
    );
}

#[test]
fn sr_spike_has_no_preimage() {
    let target = Config::finite(&[(0, 2)]);
    let rep = check_preimage_bounded(&make_sr(), &target, SearchClass::F, 4, 6, &opts()).unwrap();
    assert_eq!(rep.verdict, Verdict::ExhaustedNoWitness);
    assert_eq!(rep.grade, Some(Grade::Proof));
    let spikes = Config::periodic(&[0, 2, 0, 0]).shift(3);
    let rep = check_preimage_bounded(&make_sr(), &spikes, SearchClass::P, 8, 4, &opts()).unwrap();
    assert_eq!(rep.verdict, Verdict::ExhaustedNoWitness);
    assert_eq!(rep.grade, Some(Grade::Proof));
}

#[test]
fn l_spike_has_no_finite_preimage() {
    let target = Config::finite(&[(0, 2)]);
    let rep = check_preimage_bounded(&make_l(), &target, SearchClass::F, 3, 4, &opts()).unwrap();
    assert_eq!(rep.verdict, Verdict::ExhaustedNoWitness);
    assert_eq!(rep.grade, Some(Grade::Proof));
}

#[test]
fn s_preimages_are_found_in_ec() {
    let s = make_s();
    let sr = make_sr();
    let sampler = ConfigSampler::default();
    let mut rng = Lcg64::new(3);
    let mut tried = 0;
    while tried < 20 {
        let c = sampler.sample(&mut rng);
        let constant = c.left_tail().len() == 1
            && c.right_tail().len() == 1
            && c.left_tail().slope() == 0
            && c.right_tail().slope() == 0;
        if !constant {
            continue;
        }
        tried += 1;
        let via_sr = sr.apply(&c);
        assert_eq!(s.apply(&via_sr), c);
        let n = c.core_start().abs().max(c.core_end().abs()) as u64 + 2;
        let rep = check_preimage_bounded(&s, &c, SearchClass::EC, n, 8, &opts()).unwrap();
        let Some(Witness::Preimage { config }) = rep.witness else {
            panic!("no pre-image for {c:?}");
        };
        assert_eq!(s.apply(&config), c);
    }
}

#[test]
fn periodic_preimage_search() {
    let l = make_l();
    let target = Config::periodic(&[0, 0, 1, 1]);
    let rep = check_preimage_bounded(&l, &target, SearchClass::P, 8, 3, &opts()).unwrap();
    let Some(Witness::Preimage { config }) = &rep.witness else {
        panic!("expected a periodic pre-image");
    };
    assert!(config.is_periodic());
    assert_eq!(l.apply(config), target);
    // an aperiodic target has no periodic pre-image
    let rep = check_preimage_bounded(
        &l,
        &Config::finite(&[(0, 1)]),
        SearchClass::P,
        4,
        3,
        &opts(),
    )
    .unwrap();
    assert_eq!(rep.verdict, Verdict::ExhaustedNoWitness);
    assert_eq!(rep.candidates, 0);
}

#[test]
fn nilpotency_semi_decision() {
    let limits = IterateLimits::default();
    let s = make_s();
    let rep = check_nilpotent_bounded(&s, &Config::zero(), 0, &limits).unwrap();
    assert_eq!(rep.witness, Some(Witness::ZeroAt { step: 0 }));
    let rep = check_nilpotent_bounded(&s, &Config::finite(&[(0, 3)]), 100, &limits).unwrap();
    assert_eq!(rep.verdict, Verdict::BoundExceeded);
    let id = SandAutomaton::identity(1);
    let rep = check_nilpotent_bounded(&id, &Config::finite(&[(0, 1)]), 50, &limits).unwrap();
    assert_eq!(rep.verdict, Verdict::BoundExceeded);
    // the dipole flattens in one step
    let rep = check_nilpotent_bounded(&s, &Config::finite(&[(0, 1), (1, -1)]), 5, &limits).unwrap();
    assert_eq!(rep.witness, Some(Witness::ZeroAt { step: 1 }));
}

#[test]
fn witness_pair_examples() {
    let y = make_y();
    assert!(verify_witness_pair(
        &y,
        &Config::affine(&[0, 2], 1),
        &Config::affine(&[0, 3], 1)
    ));
    let s = make_s();
    let c = Config::finite(&[(0, 3)]);
    assert!(!verify_witness_pair(&s, &c, &c));
    let x = make_x();
    assert!(!verify_witness_pair(
        &x,
        &Config::periodic(&[0, 1]),
        &Config::periodic(&[0, 3])
    ));
}

#[test]
fn right_inverse_examples() {
    let sampler = ConfigSampler::default();
    let rep = verify_right_inverse(&make_s(), &make_sr(), 500, 11, &sampler);
    assert_eq!(rep.verdict, Verdict::ExhaustedNoWitness);
    let rep = verify_right_inverse(&make_sr(), &make_s(), 500, 11, &sampler);
    assert_eq!(rep.verdict, Verdict::WitnessFound);
    let id = SandAutomaton::identity(1);
    let rep = verify_right_inverse(&id, &id, 10, 5, &sampler);
    assert_eq!(rep.verdict, Verdict::ExhaustedNoWitness);
    assert_eq!(rep.grade, Some(Grade::Evidence));
}

#[test]
fn reports_serialize_stably() {
    let run = || {
        let rep = check_injective_bounded(&make_s(), SearchClass::F, 1, 1, &opts()).unwrap();
        serde_json::to_string(&rep).unwrap()
    };
    let json = run();
    assert_eq!(json, run());
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["verdict"], "WITNESS_FOUND");
    assert_eq!(v["witness"]["kind"], "pair");
    assert_eq!(
        v["bounds"],
        serde_json::json!({"class": "F", "window": 1, "height": 1})
    );
    assert_eq!(v["witness"]["second"]["core"], serde_json::json!([1, -1]));

    let sampler = ConfigSampler::default();
    let a = serde_json::to_string(&verify_right_inverse(
        &make_sr(),
        &make_s(),
        50,
        4,
        &sampler,
    ))
    .unwrap();
    let b = serde_json::to_string(&verify_right_inverse(
        &make_sr(),
        &make_s(),
        50,
        4,
        &sampler,
    ))
    .unwrap();
    assert_eq!(a, b);
    let inf = serde_json::to_value(Config::finite_extended([(0, crate::config::PosInf)])).unwrap();
    assert_eq!(inf["core"], serde_json::json!(["+inf"]));
}
