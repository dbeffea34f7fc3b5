use proptest::prelude::*;

use dtm::lambda::{gen_term, parse_ln, parse_named, AnyTerm, Mode};

fn mode() -> impl Strategy<Value = Mode> {
    prop_oneof![Just(Mode::LocallyNameless), Just(Mode::Named)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(2000))]

    #[test]
    fn print_then_parse_is_identity(seed in any::<u64>(), depth in 1usize..=8, mode in mode()) {
        let t = gen_term(seed, depth, mode);
        let printed = t.to_string();
        let back = AnyTerm::parse(&printed, mode).unwrap();
        prop_assert_eq!(&back, &t);
        prop_assert_eq!(back.to_string(), printed);
    }

    #[test]
    fn json_round_trips(seed in any::<u64>(), mode in mode()) {
        let t = gen_term(seed, 8, mode);
        prop_assert_eq!(AnyTerm::from_json(&t.to_json(), mode).unwrap(), t);
    }

    #[test]
    fn whitespace_is_insignificant(seed in any::<u64>(), mode in mode()) {
        let t = gen_term(seed, 6, mode);
        let spaced = t.to_string().replace(' ', "  \n ").replace('(', "( ").replace(')', " )");
        prop_assert_eq!(AnyTerm::parse(&spaced, mode).unwrap(), t);
    }
}

#[test]
fn canonical_forms() {
    let cases = [
        ("\\.#0", "\\ . #0"),
        ("(a b) c", "a b c"),
        ("a (b c)", "a (b c)"),
        ("(\\ . #0) a", "(\\ . #0) a"),
        ("a (\\ . #0) b", "a (\\ . #0) b"),
        ("a \\ . #0 b", "a \\ . #0 b"),
        ("((a))", "a"),
    ];
    for (input, want) in cases {
        assert_eq!(parse_ln(input).unwrap().to_string(), want, "{input}");
    }
    assert_eq!(parse_named("\\x.\\y.(y x)").unwrap().to_string(), "\\x. \\y. y x");
}

#[test]
fn errors_report_position() {
    let e = parse_ln("a\n  )").unwrap_err();
    assert_eq!((e.line, e.column), (2, 3));
    assert_eq!(
        parse_ln("((").unwrap_err().to_string(),
        "parse error at line 1, column 3: expected identifier or '#' or '(' or '\\', found end of input"
    );
    assert!(parse_named("#0").is_err());
    assert!(parse_ln("\\x. x").is_err());
}
