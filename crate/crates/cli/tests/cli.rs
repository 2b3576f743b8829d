use std::path::PathBuf;
use std::process::Command;

use inseparable::funcfield::{Monomial, Poly, PolyRing, RatFunc};
use inseparable_cli::{parse_expression, print_ratfunc, run, CliError, ProblemSpec};
use proptest::prelude::*;

fn spec_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("specs").join(name)
}

fn load(name: &str) -> ProblemSpec {
    ProblemSpec::from_json(&std::fs::read_to_string(spec_path(name)).unwrap()).unwrap()
}

fn insep(args: &[&str], stdin: Option<&str>) -> (i32, String, String) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_insep"));
    cmd.args(args);
    let out = match stdin {
        Some(text) => {
            use std::io::Write;
            let mut child = cmd
                .stdin(std::process::Stdio::piped())
                .stdout(std::process::Stdio::piped())
                .stderr(std::process::Stdio::piped())
                .spawn()
                .unwrap();
            child.stdin.take().unwrap().write_all(text.as_bytes()).unwrap();
            child.wait_with_output().unwrap()
        }
        None => cmd.output().unwrap(),
    };
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn analyze_sweedler_report() {
    let r = run("analyze", &load("sweedler_p2.json")).unwrap();
    let res = &r.json["result"];
    assert_eq!(res["degree"], 8);
    assert_eq!(res["exponent"], 2);
    assert_eq!(res["min_generators"], 2);
    assert_eq!(res["cotangent"]["pi0_dim"], 2);
    assert_eq!(res["cotangent"]["pi1_dim"], 2);
    assert_eq!(res["modularity"]["verdict"], "NotModular");
    let mut els: Vec<String> = res["modularity"]["certificate"]["elements"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap().to_string())
        .collect();
    els.sort();
    assert_eq!(els, ["1", "x^2*z^2 + y^2", "z^2"]);
}

#[test]
fn analyze_frobenius_report() {
    let r = run("analyze", &load("frobenius_x4.json")).unwrap();
    let res = &r.json["result"];
    assert_eq!(res["degree"], 4);
    assert_eq!(res["exponent"], 2);
    assert_eq!(res["simplicity"]["simple"], true);
    assert_eq!(res["modularity"]["verdict"], "Modular");
    assert_eq!(res["modularity"]["degrees"], serde_json::json!([4]));
}

#[test]
fn cotangent_of_exponent_one() {
    let r = run("cotangent", &load("exponent_one.json")).unwrap();
    let res = &r.json["result"];
    assert_eq!(res["jacobian"], serde_json::json!([["0", "0"], ["0", "0"]]));
    assert_eq!((res["pi0_dim"].as_u64(), res["pi1_dim"].as_u64()), (Some(2), Some(2)));
}

#[test]
fn fixed_field_and_six_term() {
    let spec = load("exponent_one.json");
    let r = run("fixed-field", &spec).unwrap();
    assert_eq!(r.json["result"]["closure_dim"], 2);
    assert_eq!(r.json["result"]["fixed_field"]["degree_over_K"], 1);
    let r = run("six-term", &spec).unwrap();
    assert_eq!(r.json["result"]["exact"], true);
    assert_eq!(r.json["result"]["dims"], serde_json::json!([1, 2, 1, 1, 2, 1]));
}

#[test]
fn every_printed_expression_reparses() {
    let spec = load("sweedler_p2.json");
    let r = run("analyze", &spec).unwrap();
    let payload = &r.json["result"]["modularity"]["certificate"];
    for key in ["elements", "coefficients"] {
        for v in payload[key].as_array().unwrap() {
            let s = v.as_str().unwrap();
            let f = parse_expression(s, spec.ambient.ring(), spec.names()).unwrap();
            assert_eq!(print_ratfunc(&f, spec.names()), s);
        }
    }
}

#[test]
fn unknown_command_and_missing_inputs() {
    let spec = load("sweedler_p2.json");
    assert_eq!(run("bogus", &spec).unwrap_err(), CliError::UnknownCommand("bogus".into()));
    assert!(matches!(run("six-term", &spec), Err(CliError::Schema(_))));
    assert!(matches!(run("fixed-field", &spec), Err(CliError::Schema(_))));
    let e = run("roundtrip", &spec).unwrap_err();
    assert_eq!(e.exit_code(), 3);
}

#[test]
fn binary_exit_codes() {
    let p = spec_path("sweedler_p2.json");
    let (code, out, _) = insep(&["modularity", "--spec", p.to_str().unwrap()], None);
    assert_eq!(code, 0);
    assert!(out.contains("NotModular"));
    let (code, _, _) = insep(&["analyze"], Some("{not json"));
    assert_eq!(code, 2);
    let (code, _, err) = insep(
        &["analyze"],
        Some(r#"{"p":2,"variables":["x"],"exponent_bound":2,"F":{"generators":[],"over":"base"},"K":{"generators":["x"]}}"#),
    );
    assert_eq!(code, 3);
    assert!(err.contains("`x`"));
    let (code, _, _) = insep(&["roundtrip", "--spec", p.to_str().unwrap()], None);
    assert_eq!(code, 3);
    let (code, _, _) = insep(&["nonsense"], Some("{}"));
    assert_eq!(code, 2);
    // budget 0 leaves the decomposition search nothing to try
    let m = spec_path("modular_x2_y4.json");
    let (code, out, _) = insep(&["modularity", "--budget", "0", "--spec", m.to_str().unwrap()], None);
    assert_eq!(code, 4);
    assert!(out.contains("Inconclusive"));
    let (code, out, _) = insep(&["modularity", "--text", "--spec", m.to_str().unwrap()], None);
    assert_eq!(code, 0);
    assert!(out.contains("result.degrees: [2, 4]"));
}

fn term_strategy() -> impl Strategy<Value = Vec<(Vec<u32>, u32)>> {
    prop::collection::vec((prop::collection::vec(0u32..4, 3), 0u32..3), 0..5)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn print_parse_round_trip(num in term_strategy(), den in term_strategy()) {
        let ring = PolyRing::new(3, 3).unwrap();
        let names: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
        let build = |t: &[(Vec<u32>, u32)]| Poly::from_terms(ring, t.iter().map(|(e, c)| (Monomial::from_slice(e), *c)).collect());
        let d = build(&den);
        prop_assume!(!d.is_zero());
        let f = RatFunc::normalize(build(&num), d).unwrap();
        let s = print_ratfunc(&f, &names);
        let g = parse_expression(&s, ring, &names).unwrap();
        prop_assert_eq!(&g, &f);
        prop_assert_eq!(print_ratfunc(&g, &names), s);
    }

    #[test]
    fn whitespace_is_insignificant(num in term_strategy()) {
        let ring = PolyRing::new(3, 3).unwrap();
        let names: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
        let f = RatFunc::from_poly(Poly::from_terms(ring, num.iter().map(|(e, c)| (Monomial::from_slice(e), *c)).collect()));
        let s = print_ratfunc(&f, &names);
        let packed: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        prop_assert_eq!(parse_expression(&packed, ring, &names).unwrap(), f);
    }
}
