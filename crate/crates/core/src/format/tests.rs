use super::*;
use crate::analysis::{ConfigSampler, Lcg64};
use crate::automaton::{PatternAtom, Rule, SandAutomaton};
use crate::config::{Finite, NegInf, PosInf};
use crate::zoo::ZooName;
use crate::Config;

#[test]
fn zoo_rules_round_trip() {
    for name in ZooName::ALL {
        let a = name.automaton();
        let text = emit_rule(&a);
        assert_eq!(parse_rule(&text).unwrap(), a, "{name}:\n{text}");
    }
}

#[test]
fn s_rule_file() {
    let text = "sand-rule v1\n# the sandpile rule\nradius: 1\ndefault: 0\n\
                rule: (+inf, -inf) -> 0\nrule: (+inf, *) -> 1\nrule: (*, -inf) -> -1\n";
    assert_eq!(parse_rule(text).unwrap(), crate::zoo::make_s());
}

#[test]
fn rule_atoms() {
    let text = "sand-rule v1\nradius: 2\ndefault: 0\nrule: (pos, neg, 2, -inf) -> -2\n";
    let a = parse_rule(text).unwrap();
    let want = Rule::new(
        [
            PatternAtom::Pos,
            PatternAtom::Neg,
            PatternAtom::from(2),
            PatternAtom::Exact(NegInf),
        ],
        -2,
    );
    assert_eq!(a.rules(), &[want]);
}

#[test]
fn rule_diagnostics() {
    let arity =
        parse_rule("sand-rule v1\nradius: 2\ndefault: 0\nrule: (+inf) -> -1\n").unwrap_err();
    assert_eq!(arity.line, 4);
    assert_eq!(
        arity.kind,
        ParseErrorKind::Arity {
            expected: 4,
            found: 1
        }
    );

    let atom =
        parse_rule("sand-rule v1\nradius: 1\ndefault: 0\n\nrule: (x, 0) -> 0\n").unwrap_err();
    assert_eq!(atom.line, 5);
    assert_eq!(atom.kind, ParseErrorKind::UnknownAtom("x".into()));

    let range =
        parse_rule("sand-rule v1\nradius: 1\ndefault: 0\nrule: (0, 0) -> 0\nrule: (1, 1) -> 2\n")
            .unwrap_err();
    assert_eq!(range.line, 5);
    assert!(matches!(range.kind, ParseErrorKind::Range(_)));

    let default = parse_rule("sand-rule v1\nradius: 1\ndefault: 3\n").unwrap_err();
    assert_eq!(default.line, 3);

    let header = parse_rule("sand-rule v2\nradius: 1\n").unwrap_err();
    assert_eq!(header.kind, ParseErrorKind::Header("sand-rule v1"));

    let early = parse_rule("sand-rule v1\nrule: (0, 0) -> 0\nradius: 1\n").unwrap_err();
    assert_eq!(
        (early.line, early.kind),
        (2, ParseErrorKind::Missing("radius"))
    );
}

#[test]
fn affine_config_file() {
    let c = parse_config("sand-config v1\nkind: affine\nperiod: 0 2\nslope: 1\n").unwrap();
    assert_eq!(c, Config::affine(&[0, 2], 1));
    assert_eq!(c.get(5), Finite(4));
}

#[test]
fn config_kinds() {
    let f = parse_config("sand-config v1\nkind: finite\nat 0 1\nat 1 -1\nat -4 +inf\n").unwrap();
    assert_eq!(
        f,
        Config::finite_extended([(0, Finite(1)), (1, Finite(-1)), (-4, PosInf)])
    );
    let p = parse_config("sand-config v1\nkind: periodic\nperiod: 0 2 0 0\n").unwrap();
    assert_eq!(p, Config::periodic(&[0, 2, 0, 0]));
    let g = parse_config(
        "sand-config v1\nkind: general\ncore-start: -1\ncore: 5 6\n\
         left-period: 1 -1\nright-period: 0\nright-slope: 2\n",
    )
    .unwrap();
    assert_eq!(g.get(-2), Finite(-1));
    assert_eq!(g.get(-3), Finite(1));
    assert_eq!(g.get(0), Finite(6));
    assert_eq!(g.get(3), Finite(4));
    let empty = parse_config("sand-config v1\nkind: finite\n").unwrap();
    assert_eq!(empty, Config::zero());
}

#[test]
fn config_diagnostics() {
    let cases: &[(&str, usize)] = &[
        ("sand-config v1\nkind: finite\nat 0 1\nat 0 2\n", 4),
        ("sand-config v1\nkind: periodic\nperiod:\n", 3),
        ("sand-config v1\nkind: blob\n", 2),
        ("sand-config v1\nkind: periodic\nperiod: 1 x\n", 3),
        ("sand-config v1\nkind: periodic\nslope: 1\nperiod: 1\n", 3),
        ("sand-config v1\nkind: affine\nperiod: 1\n", 3),
        ("sand-config v1\nkind: affine\nperiod: 1\nslope: +inf\n", 4),
        ("sand-config v1\nkind: periodic\nat 0 1\nperiod: 1\n", 3),
        ("sand-config v1\ncolour: red\n", 2),
        ("sandconfig v1\n", 1),
    ];
    for &(text, line) in cases {
        let e = parse_config(text).unwrap_err();
        assert_eq!(e.line, line, "{text:?}: {e}");
    }
}

#[test]
fn emitted_configs_round_trip() {
    let sampler = ConfigSampler {
        with_infinities: true,
        ..ConfigSampler::default()
    };
    let mut rng = Lcg64::new(42);
    for _ in 0..2000 {
        let c = sampler.sample(&mut rng);
        let text = emit_config(&c);
        assert_eq!(parse_config(&text).unwrap(), c, "{text}");
    }
    for c in [
        Config::periodic(&[3]),
        Config::affine(&[0, 2], 1),
        Config::constant(NegInf),
    ] {
        let text = emit_config(&c);
        assert!(!text.contains("general"), "{text}");
        assert_eq!(parse_config(&text).unwrap(), c);
    }
}

#[test]
fn render_shapes() {
    let zero = render_ascii(&Config::zero(), 0, 4, &RenderOptions::default());
    assert_eq!(zero, "-----\n");
    let c = Config::finite_extended([(0, Finite(2)), (1, Finite(-1)), (2, PosInf), (3, NegInf)]);
    let r = render_ascii(&c, 0, 3, &RenderOptions::default());
    assert_eq!(r, "# ^\n# ^\n----\n # v\n");
    let tall = render_ascii(
        &Config::finite(&[(0, 100)]),
        0,
        0,
        &RenderOptions {
            max_rows: 2,
            dump: false,
        },
    );
    assert_eq!(tall, "+\n#\n-\n");
}

#[test]
fn dump_round_trip() {
    let mut rng = Lcg64::new(7);
    let sampler = ConfigSampler {
        with_infinities: true,
        ..ConfigSampler::default()
    };
    let opts = RenderOptions {
        max_rows: 4,
        dump: true,
    };
    for _ in 0..300 {
        let c = sampler.sample(&mut rng);
        let (lo, hi) = (-6 - rng.below(5) as i64, 6);
        let text = render_ascii(&c, lo, hi, &opts);
        assert_eq!(parse_dump(&text).unwrap(), (lo, c.window(lo, hi)));
    }
    assert!(parse_dump("----\n").is_err());
    assert!(parse_dump("dump 0 2\n1 2\nend\n").is_err());
}

#[test]
fn identity_file() {
    let a = SandAutomaton::identity(2);
    assert_eq!(parse_rule(&emit_rule(&a)).unwrap(), a);
}
