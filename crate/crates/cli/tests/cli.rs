use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn qlat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qlat"))
        .args(args)
        .env_remove("QLAT_EPS")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn report(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("json report")
}

fn scratch(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("qlat-cli-{}-{name}", std::process::id()))
}

#[test]
fn eval_reports_verdict_and_trace() {
    let o = qlat(&[
        "eval",
        "--state",
        "builtin:psi[1,3]",
        "--formula",
        "P[1,3]",
        "--semantics",
        "hilbert",
    ]);
    assert_eq!(code(&o), 0);
    let r = report(&o);
    assert_eq!(r["schema"], "qlat-report/1");
    assert_eq!(r["verdict"], "true");
    assert!(!r["trace"].as_array().unwrap().is_empty());
}

#[test]
fn super_mode_reports_classification() {
    let o = qlat(&[
        "eval",
        "--state",
        "builtin:psi[1,1]",
        "--formula",
        "P[1,3] | !P[1,3]",
        "--semantics",
        "super",
        "--expect",
        "verdict=true",
        "--expect",
        "classification=SuperTrue",
    ]);
    assert_eq!(code(&o), 0);
    assert_eq!(report(&o)["classification"], "SuperTrue");
}

#[test]
fn counterfactual_joins_fill_cross_block_gaps() {
    let args = [
        "eval",
        "--state",
        "builtin:psi[1,3]",
        "--formula",
        "P[1,3] | P[1,1]",
        "--semantics",
        "super",
    ];
    assert_eq!(report(&qlat(&args))["verdict"], "gap");
    let mut with = args.to_vec();
    with.push("--counterfactual-joins");
    assert_ne!(report(&qlat(&with))["verdict"], "gap");
}

#[test]
fn exit_codes() {
    assert_eq!(
        code(&qlat(&[
            "eval",
            "--state",
            "builtin:psi[1,1]",
            "--formula",
            "P[1,3]",
            "--semantics",
            "hilbert",
            "--expect",
            "verdict=true"
        ])),
        4
    );
    assert_eq!(
        code(&qlat(&[
            "eval",
            "--state",
            "builtin:psi[1,1]",
            "--formula",
            "(P[1,3]",
            "--semantics",
            "hilbert"
        ])),
        3
    );
    assert_eq!(
        code(&qlat(&[
            "eval",
            "--state",
            "builtin:psi[1,1]",
            "--formula",
            "Q",
            "--semantics",
            "hilbert"
        ])),
        3
    );
    assert_eq!(
        code(&qlat(&[
            "eval",
            "--state",
            "missing.json",
            "--formula",
            "P[1,3]",
            "--semantics",
            "hilbert"
        ])),
        3
    );
    assert_eq!(
        code(&qlat(&[
            "eval",
            "--state",
            "builtin:psi[9,9]",
            "--formula",
            "P[1,3]",
            "--semantics",
            "hilbert"
        ])),
        3
    );
    assert_eq!(
        code(&qlat(&[
            "eval",
            "--state",
            "builtin:psi[1,1]",
            "--formula",
            "P[1,3]",
            "--semantics",
            "hilbert",
            "--expect",
            "mood=happy"
        ])),
        2
    );
    assert_eq!(code(&qlat(&["lattice", "frobnicate"])), 2);
    assert_eq!(code(&qlat(&["--eps", "1.5", "lattice", "build"])), 2);
    assert_eq!(code(&qlat(&["--eps-eig", "-1", "lattice", "build"])), 2);
    assert_eq!(
        code(&qlat(&[
            "lattice",
            "check",
            "--law",
            "distributive",
            "--expect",
            "holds=true"
        ])),
        4
    );
    assert_eq!(
        code(&qlat(&[
            "heyting",
            "check",
            "--lattice",
            "builtin:qubit",
            "--expect",
            "feasible=false"
        ])),
        0
    );
    assert_eq!(
        code(&qlat(&[
            "heyting",
            "check",
            "--lattice",
            "builtin:block:P[1,2]",
            "--expect",
            "feasible=true"
        ])),
        0
    );
}

#[test]
fn env_tolerance_is_validated() {
    let o = Command::new(env!("CARGO_BIN_EXE_qlat"))
        .args(["lattice", "build"])
        .env("QLAT_EPS", "7")
        .output()
        .unwrap();
    assert_eq!(code(&o), 2);
}

#[test]
fn lattice_build_lists_the_eight_elements_in_canonical_order() {
    let r = report(&qlat(&["lattice", "build"]));
    let names: Vec<&str> = r["elements"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e["name"].as_str().unwrap())
        .collect();
    assert_eq!(
        names,
        ["{0}", "P[2,3]", "P[2,1]", "P[1,2]", "P[2,2]", "P[1,1]", "P[1,3]", "C^2"]
    );
    let laws = r["laws"].as_array().unwrap();
    assert_eq!(laws[0]["holds"], true);
    assert_eq!(laws[1]["holds"], false);
}

#[test]
fn generated_projector_file_round_trips() {
    let path = scratch("projectors.json");
    let p = path.to_str().unwrap();
    assert_eq!(code(&qlat(&["gen-projectors", "--out", p])), 0);
    let from_file = report(&qlat(&["lattice", "build", "--projectors", p]));
    let builtin = report(&qlat(&["lattice", "build"]));
    assert_eq!(from_file, builtin);
    let blocks = report(&qlat(&["blocks", "--projectors", p]));
    assert_eq!(blocks["blocks"].as_array().unwrap().len(), 3);
    assert_eq!(blocks["commutation_graph"]["edges"].as_array().unwrap().len(), 3);
    std::fs::remove_file(path).ok();
}

#[test]
fn state_files_and_inline_states_agree() {
    let path = scratch("state.json");
    let json = r#"{"amplitudes": [[0.6, 0.0], [0.0, 0.8]], "label": "tilted"}"#;
    std::fs::write(&path, json).unwrap();
    let args = |s: &str| {
        report(&qlat(&[
            "eval",
            "--state",
            s,
            "--formula",
            "P[2,3]",
            "--semantics",
            "mv",
            "--expect",
            "degree=0.64",
        ]))
    };
    let a = args(path.to_str().unwrap());
    let b = args(json);
    assert_eq!(a["degree"], b["degree"]);
    assert_eq!(a["state"], "tilted");
    std::fs::remove_file(path).ok();
}

#[test]
fn reports_are_byte_deterministic() {
    for args in [
        &["demo", "all"][..],
        &["lattice", "build"],
        &["blocks"],
        &["--format", "text", "demo", "all"],
    ] {
        assert_eq!(qlat(args).stdout, qlat(args).stdout);
    }
}

#[test]
fn schroedinger_variants() {
    let r = report(&qlat(&["demo", "schroedinger"]));
    let evals = r["sections"][0]["details"]["evaluations"].as_array().unwrap();
    let verdicts: Vec<&str> = evals.iter().map(|e| e["verdict"].as_str().unwrap()).collect();
    assert_eq!(verdicts, ["true", "gap", "gap"]);
    assert_eq!(evals[0]["classification"], "SuperTrue");
    for (state, sem) in [
        ("builtin:psi[1,3]", "super"),
        ("builtin:psi[1,1]", "hilbert"),
        ("builtin:psi[2,2]", "mv"),
    ] {
        assert_eq!(
            code(&qlat(&[
                "demo",
                "schroedinger",
                "--state",
                state,
                "--semantics",
                sem
            ])),
            0
        );
    }
}

#[test]
fn many_valued_mode_rejects_binary_connectives() {
    let o = qlat(&[
        "eval",
        "--state",
        "builtin:psi[1,1]",
        "--formula",
        "P[1,3] & P[1,1]",
        "--semantics",
        "mv",
    ]);
    assert_eq!(code(&o), 3);
    assert!(!o.stderr.is_empty());
}

#[test]
fn every_demo_passes_alone() {
    for d in [
        "projectors",
        "lattice",
        "pem-failure",
        "heyting",
        "super",
        "mv",
        "parser",
        "schroedinger",
        "all",
    ] {
        let o = qlat(&["demo", d]);
        assert_eq!(code(&o), 0, "{d}");
        assert_eq!(report(&o)["failed"], 0, "{d}");
    }
}
