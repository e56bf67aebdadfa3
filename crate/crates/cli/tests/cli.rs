use std::path::PathBuf;
use std::process::{Command, Output};

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/data")
        .join(name)
        .display()
        .to_string()
}

fn ahopf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ahopf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn verify_group_exit_codes() {
    for ok in ["z2.agrp", "constant.agrp", "absorbing.agrp", "pair_z3.agrp"] {
        let out = ahopf(&["verify-group", &data(ok)]);
        assert_eq!(code(&out), 0, "{ok}: {}", stdout(&out));
    }
    let out = ahopf(&["verify-group", &data("bad_assoc.agrp")]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("associativity at (1, 1, 2)"));
    assert_eq!(code(&ahopf(&["verify-group", &data("malformed.agrp")])), 2);
    assert_eq!(code(&ahopf(&["verify-group", &data("missing.agrp")])), 2);
}

#[test]
fn verify_hopf_exit_codes() {
    assert_eq!(
        code(&ahopf(&[
            "verify-hopf",
            &data("z2.agrp"),
            "--construction",
            "fn"
        ])),
        0
    );
    assert_eq!(
        code(&ahopf(&[
            "verify-hopf",
            &data("pair_z3.agrp"),
            "--construction",
            "grp"
        ])),
        0
    );
    assert_eq!(code(&ahopf(&["verify-hopf", &data("constant.agrp")])), 0);
    let out = ahopf(&["verify-hopf", &data("bad_i.agrp")]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("almost group axioms: FAIL"));
    assert_eq!(
        code(&ahopf(&[
            "verify-hopf",
            &data("z2.agrp"),
            "--construction",
            "other"
        ])),
        2
    );
}

#[test]
fn bicross_checks() {
    let mp = data("z2_trivial.mpair");
    for args in [
        vec!["bicross", &mp],
        vec!["bicross", &mp, "--dual"],
        vec!["bicross", &mp, "--check", "selfdual"],
        vec!["bicross", &mp, "--check", "duality"],
        vec!["bicross", &mp, "--check", "star", "--dual"],
    ] {
        let out = ahopf(&args);
        assert_eq!(code(&out), 0, "{args:?}: {}", stdout(&out));
    }
    let out = ahopf(&[
        "bicross",
        &data("z2_unmatched.mpair"),
        "--check",
        "selfdual",
    ]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("matched pair rules: FAIL"));
}

#[test]
fn bicross_structure_export() {
    let out = ahopf(&["bicross", &data("z2_trivial.mpair"), "--emit", "structure"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["construction"], "bicross");
    assert_eq!(v["basis"].as_array().unwrap().len(), 4);
    for key in ["jBasis", "mul", "comul", "counit", "unit", "antipode"] {
        assert!(v[key].is_array(), "{key}");
    }
    assert_eq!(v["mul"][0]["terms"][0]["c"], "1/1");
    assert_eq!(
        stdout(&out),
        stdout(&ahopf(&[
            "bicross",
            &data("z2_trivial.mpair"),
            "--emit",
            "structure"
        ]))
    );
}

#[test]
fn loop_commands() {
    let (s1, u1, s2, u2) = (
        data("s1.json"),
        data("u1.json"),
        data("s2.json"),
        data("u2.json"),
    );
    let out = ahopf(&["loop", "act", &s1, &u1, "--samples", "10", "--tol", "1e-8"]);
    assert_eq!(code(&out), 0, "{}", stdout(&out));
    assert_eq!(code(&ahopf(&["loop", "reverse", &s1, &u1])), 0);
    let out = ahopf(&["loop", "verify-mutinv", &s2, &u2, "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let names: Vec<&str> = v["report"]["identities"]
        .as_array()
        .unwrap()
        .iter()
        .map(|i| i["name"].as_str().unwrap())
        .collect();
    assert!(names.contains(&"inverse-right") && names.contains(&"inverse-left"));
    assert_eq!(
        code(&ahopf(&["loop", "verify-matched", &s1, &s2, &u1, &u2])),
        0
    );
    assert_eq!(
        code(&ahopf(&[
            "loop",
            "verify-matched",
            "--random",
            "2",
            "--dim",
            "3"
        ])),
        0
    );
}

#[test]
fn loop_input_errors_exit_2() {
    let out = ahopf(&["loop", "act", &data("s1.json"), &data("conj.json")]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("conjugate"));
    // both loops above the axis
    assert_eq!(
        code(&ahopf(&["loop", "act", &data("s1.json"), &data("s2.json")])),
        2
    );
    assert_eq!(
        code(&ahopf(&[
            "loop",
            "reverse",
            &data("s2.json"),
            &data("u1.json")
        ])),
        2
    );
    assert_eq!(
        code(&ahopf(&["loop", "act", &data("z2.agrp"), &data("u1.json")])),
        2
    );
    assert_eq!(
        code(&ahopf(&["loop", "verify-matched", &data("s1.json")])),
        2
    );
    assert_eq!(
        code(&ahopf(&["loop", "verify-matched", "--samples", "0"])),
        2
    );
}

#[test]
fn tolerance_decides_exit_code() {
    // residuals are around 1e-16, so an absurdly tight tolerance must fail
    let out = ahopf(&[
        "loop",
        "act",
        &data("s1.json"),
        &data("u1.json"),
        "--tol",
        "1e-300",
    ]);
    assert_eq!(code(&out), 1);
}

#[test]
fn json_reports_are_deterministic() {
    let args = [
        "loop",
        "verify-matched",
        "--random",
        "3",
        "--seed",
        "11",
        "--format",
        "json",
    ];
    let a = ahopf(&args);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, ahopf(&args).stdout);
    let other = ahopf(&[
        "loop",
        "verify-matched",
        "--random",
        "3",
        "--seed",
        "12",
        "--format",
        "json",
    ]);
    assert_ne!(a.stdout, other.stdout);
    let b = [
        "bicross",
        &data("z2_trivial.mpair"),
        "--check",
        "selfdual",
        "--format",
        "json",
    ];
    assert_eq!(ahopf(&b).stdout, ahopf(&b).stdout);
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = ahopf(&[
        "verify-group",
        &data("z2.agrp"),
        "--format",
        "json",
        "-o",
        path.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
    assert_eq!(v["passed"], true);
}
