use std::path::{Path, PathBuf};
use std::process::Command;

use contracta::cli::{self, EXIT_INFINITE, EXIT_INPUT, EXIT_OK};
use contracta::Report;

fn data_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/data")
}

fn contracta(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_contracta"))
        .args(args)
        .current_dir(data_dir())
        .env_remove("CONTRACTA_DEGREE_CEILING")
        .output()
        .expect("binary runs");
    (
        out.status.code().expect("exit code"),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn golden(name: &str) -> serde_json::Value {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn json_reports_match_golden_files() {
    let cases: &[(&str, &[&str], i32)] = &[
        ("width_cusp.json", &["width", "cusp.quiver"], EXIT_OK),
        ("cwidth_laufer1.json", &["cwidth", "--builtin", "laufer:1", "--kill", "R"], EXIT_OK),
        ("gb_pagoda2.json", &["gb", "--builtin", "pagoda:2", "--kill", "R"], EXIT_OK),
        ("commute_cusp2.json", &["commute", "--builtin", "quantum_cusp:2"], EXIT_OK),
        ("selfinj_francia.json", &["selfinj", "--builtin", "francia", "--kill", "R"], EXIT_OK),
        ("tangent_cusp1.json", &["tangent", "--builtin", "quantum_cusp:1"], EXIT_OK),
        ("knit_e7.json", &["knit", "--type", "E7"], EXIT_OK),
        ("width_free2.json", &["width", "--builtin", "free2"], EXIT_INFINITE),
        ("error_unknown.json", &["width", "--builtin", "nope"], EXIT_INPUT),
        (
            "checkhom_table.json",
            &["checkhom", "--builtin", "quantum_cusp:1", "--gamma-table", "dual_table.json", "--map", "x=e;y=3*e"],
            EXIT_OK,
        ),
        ("table.json", &["table"], EXIT_OK),
    ];
    for (file, args, code) in cases {
        let mut full: Vec<&str> = args.to_vec();
        full.extend(["--format", "json"]);
        let (got_code, stdout, _) = contracta(&full);
        assert_eq!(got_code, *code, "{file}");
        let got: serde_json::Value = serde_json::from_str(&stdout).unwrap();
        assert_eq!(got, golden(file), "{file}");
    }
}

#[test]
fn every_report_has_the_same_required_keys() {
    for entry in std::fs::read_dir(Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")).unwrap() {
        let path = entry.unwrap().path();
        let value: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
        let items = match value {
            serde_json::Value::Array(items) => items,
            other => vec![other],
        };
        for item in items {
            let r: Report = serde_json::from_value(item.clone()).unwrap();
            for key in ["command", "input", "order", "verdict"] {
                assert!(item.get(key).is_some(), "{}: {key}", path.display());
            }
            assert!(!r.command.is_empty());
        }
    }
}

#[test]
fn text_examples() {
    assert_eq!(contracta(&["width", "--builtin", "laufer:1", "--kill", "R"]).1, "9\n");
    let (code, out, _) = contracta(&["knit", "--type", "E7"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "total 24\nsequence 1,2,3,4,4,4,3,2,1\n");
    let (code, out, _) = contracta(&["width", "--builtin", "free2"]);
    assert_eq!(code, EXIT_INFINITE);
    assert!(out.starts_with("infinite_or_unknown"));
}

#[test]
fn input_errors_exit_with_one() {
    let (code, _, err) = contracta(&["width", "bad_path.quiver"]);
    assert_eq!(code, EXIT_INPUT);
    assert!(err.contains("bad_path.quiver:4:14"), "{err}");
    assert_eq!(contracta(&["width", "missing.quiver"]).0, EXIT_INPUT);
    assert_eq!(contracta(&["frobnicate"]).0, EXIT_INPUT);
    assert_eq!(contracta(&["width", "--builtin", "pagoda:0", "--kill", "R"]).0, EXIT_INPUT);
    assert_eq!(contracta(&["width", "--builtin", "pagoda:2", "--kill", "R,N"]).0, EXIT_INPUT);
    assert_eq!(contracta(&["commute", "--builtin", "pagoda:2"]).0, EXIT_INPUT);
    assert_eq!(contracta(&["knit", "--type", "F4"]).0, EXIT_INPUT);
    assert_eq!(
        contracta(&["checkhom", "--builtin", "quantum_cusp:1", "--gamma", "dual", "--map", "x=e"]).0,
        EXIT_INPUT
    );
    assert_eq!(
        contracta(&["checkhom", "--builtin", "quantum_cusp:1", "--gamma", "dual", "--map", "x=1+e;y=e"]).0,
        EXIT_INPUT
    );
}

#[test]
fn help_exits_cleanly() {
    let (code, out, _) = contracta(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("Usage"));
}

#[test]
fn ceiling_comes_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_contracta"))
        .args(["width", "--builtin", "free2", "--format", "json"])
        .env("CONTRACTA_DEGREE_CEILING", "12")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_INFINITE));
    let r: Report = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(r.degree_cap, Some(12));
    let o = cli::run(["contracta", "width", "--builtin", "free2", "--ceiling", "10"]);
    assert_eq!(o.code, EXIT_INFINITE);
}

#[test]
fn checkhom_against_presented_gamma() {
    let dir = tempfile::tempdir().unwrap();
    let gamma = dir.path().join("gamma.quiver");
    std::fs::write(&gamma, "algebra g { vertices: v; arrows: e: v->v; relations: e^3; }").unwrap();
    let g = gamma.to_str().unwrap();
    let accept = contracta(&["checkhom", "--builtin", "quantum_cusp:1", "--gamma", g, "--map", "x=e^2;y=0*e"]);
    assert_eq!((accept.0, accept.1.as_str()), (EXIT_OK, "accepted\n"));
    let reject = contracta(&["checkhom", "--builtin", "quantum_cusp:1", "--gamma", g, "--map", "x=e;y=e"]);
    assert_eq!((reject.0, reject.1.as_str()), (EXIT_OK, "rejected\n"));
}

#[test]
fn contract_prints_a_parseable_presentation() {
    let (code, out, _) = contracta(&["contract", "--builtin", "laufer:2", "--kill", "R"]);
    assert_eq!(code, EXIT_OK);
    let p = contracta::parse_presentation(&out).unwrap();
    assert_eq!(p.alphabet().names(), ["x", "y"]);
    assert_eq!(p.relations().len(), 2);
}
