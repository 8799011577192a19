use std::process::{Command, Output};

use negabeta::word::parse_word;
use serde_json::Value;

fn negabeta(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_negabeta")).args(args).env_remove("NEGABETA_PRECISION_BITS").output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn documented_examples() {
    let o = negabeta(&["admissible", "(2)"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "admissible: yes, beta=[2,2]\n"));
    let o = negabeta(&["cmp", "(10)", "(01)"]);
    assert_eq!((o.status.code(), stdout(&o).as_str()), (Some(0), "LESS (k=1)\n"));
    let o = negabeta(&["beta", "(1)"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("zero-entropy word: no beta > 1 exists"));
}

#[test]
fn exit_codes() {
    assert_eq!(negabeta(&["nosuchcommand"]).status.code(), Some(2));
    assert_eq!(negabeta(&["lyndon", "1(2"]).status.code(), Some(2));
    assert_eq!(negabeta(&["hn", "(01)", "4"]).status.code(), Some(1));
    assert_eq!(negabeta(&["enum", "(2)", "30", "--enum-cap", "1000"]).status.code(), Some(1));
    assert_eq!(negabeta(&["--help"]).status.code(), Some(0));
}

#[test]
fn every_subcommand_runs() {
    let runs: &[&[&str]] = &[
        &["cmp", "1(0)", "(10)"],
        &["lyndon", "100(11)"],
        &["dstar", "(201)"],
        &["lyn", "(10)"],
        &["lyn", "--bounds", "(21)"],
        &["admissible", "(201)"],
        &["hn", "(2)", "6"],
        &["gamma", "22", "00", "--system", "(2)"],
        &["enum", "1(0)", "5", "--limit", "3"],
        &["beta", "100(11)", "--bits", "80"],
        &["expand", "l", "--beta", "1(0)", "-n", "8"],
        &["expand", "-1/5", "--beta", "2"],
        &["feval", "(2)", "--beta", "2"],
        &["phi", "4"],
        &["phi", "3", "--kind", "witness"],
        &["gfcheck", "(10)", "--z", "1/4"],
        &["omegacheck", "3"],
        &["verify", "--criterion", "4"],
    ];
    for args in runs {
        let o = negabeta(args);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        let o = negabeta(&[&["--json"], *args].concat());
        let v: Value = serde_json::from_slice(&o.stdout).unwrap();
        for key in ["command", "input", "result", "certificates"] {
            assert!(v.get(key).is_some(), "{args:?} lacks {key}");
        }
        assert_eq!(v["command"], args[0]);
    }
}

#[test]
fn json_carries_exact_values() {
    let o = negabeta(&["--json", "hn", "(10)", "70"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["result"]["values"][70], "1180591620717411303424");
    let o = negabeta(&["--json", "beta", "(10)"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!((v["result"]["lo"].as_str(), v["result"]["hi"].as_str()), (Some("2"), Some("2")));
    assert_eq!(v["certificates"].as_array().unwrap().len(), 1);
}

#[test]
fn output_is_deterministic() {
    for args in
        [&["--json", "admissible", "100(11)"][..], &["verify", "--criterion", "3"], &["expand", "l", "--beta", "(21)"]]
    {
        assert_eq!(negabeta(args).stdout, negabeta(args).stdout, "{args:?}");
    }
}

#[test]
fn printed_words_parse_back() {
    let o = negabeta(&["enum", "(21)", "4"]);
    for line in stdout(&o).lines() {
        let w = parse_word(line).unwrap();
        assert_eq!(w.to_string(), line);
    }
    let o = negabeta(&["dstar", "(201)"]);
    for line in stdout(&o).lines() {
        let text = line.split(" = ").nth(1).unwrap();
        assert_eq!(parse_word(text).unwrap().to_string(), text);
    }
}

#[test]
fn precision_from_environment() {
    let narrow = Command::new(env!("CARGO_BIN_EXE_negabeta"))
        .args(["--json", "beta", "1(0)"])
        .env("NEGABETA_PRECISION_BITS", "8")
        .output()
        .unwrap();
    let wide = negabeta(&["--json", "beta", "1(0)"]);
    let width = |o: &Output| {
        let v: Value = serde_json::from_slice(&o.stdout).unwrap();
        v["result"]["hi"].as_str().unwrap().len()
    };
    assert!(width(&narrow) < width(&wide));
    let flag = negabeta(&["--json", "--bits", "8", "beta", "1(0)"]);
    assert_eq!(width(&flag), width(&narrow));
}
