mod common;

use common::{fuzz_cli, run_bin};
use proptest::prelude::*;
use ternion::Ternion;
use ternion_calc::{eval_str, format_result, EvalResult, OutputMode};

const EXPRS: &[&str] = &[
    "u*u",
    "inv((1,2,3))",
    "split(iG)",
    "norm(j)",
    "one/(1,1,0)",
    "(1,2",
    "3 @ 4",
    "projD((4,-1,0.5))*projG((4,-1,0.5))",
    "1e-5*u + delta^2",
];

fn args(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

#[test]
fn eval_file_and_repl_are_byte_identical() {
    let file = tempfile::NamedTempFile::new().unwrap();
    std::fs::write(file.path(), EXPRS.join("\n")).unwrap();
    let path = file.path().to_str().unwrap();
    for mode in ["tuple", "split", "json"] {
        let (mut out, mut err, mut code) = (String::new(), String::new(), 0);
        for e in EXPRS {
            let r = run_bin(&args(&["--mode", mode, "--eval", e]), None);
            out += &r.stdout;
            err += &r.stderr;
            code = code.max(r.code);
        }
        let f = run_bin(&args(&["--mode", mode, "--file", path]), None);
        let repl = run_bin(&args(&["--mode", mode]), Some(&(EXPRS.join("\n") + "\n")));
        assert_eq!(
            (&f.stdout, &f.stderr, f.code),
            (&out, &err, code),
            "file vs eval, mode {mode}"
        );
        assert_eq!(
            (&repl.stdout, &repl.stderr, repl.code),
            (&out, &err, code),
            "repl vs eval, mode {mode}"
        );
    }
}

#[test]
fn repl_mode_switch_matches_flag() {
    for mode in ["tuple", "split", "json"] {
        let flagged = run_bin(&args(&["--mode", mode]), Some("inv(u)\n"));
        let switched = run_bin(&[], Some(&format!(":mode {mode}\ninv(u)\n")));
        assert_eq!(flagged.stdout, switched.stdout);
    }
}

#[test]
fn spec_example_u_squared() {
    let r = run_bin(&args(&["--eval", "u*u"]), None);
    assert_eq!((r.stdout.as_str(), r.code), ("(0, 0, 1)\n", 0));
}

#[test]
fn fuzz_ten_thousand_inputs() {
    assert_eq!(fuzz_cli(10_000, 0x5eed), 0);
}

fn finite() -> impl Strategy<Value = f64> {
    prop_oneof![
        -1e6..1e6f64,
        -1.0..1.0f64,
        Just(0.0),
        (-300i32..300).prop_map(|e| 10f64.powi(e))
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(512))]

    #[test]
    fn tuple_output_round_trips(a in finite(), b in finite(), c in finite()) {
        let x = Ternion::new(a, b, c);
        let text = format_result(&EvalResult::TernionValue(x), OutputMode::Tuple);
        let EvalResult::TernionValue(y) = eval_str(&text, 1e-9).unwrap() else { panic!("{text}") };
        let scale = x.max_abs();
        prop_assert!((x - y).max_abs() <= 1e-11 * scale, "{text}: {x:?} vs {y:?}");
    }

    #[test]
    fn real_output_round_trips(a in finite()) {
        let text = format_result(&EvalResult::RealValue(a), OutputMode::Tuple);
        let EvalResult::RealValue(b) = eval_str(&text, 1e-9).unwrap() else { panic!("{text}") };
        prop_assert!((a - b).abs() <= 1e-11 * a.abs(), "{text}");
    }
}
