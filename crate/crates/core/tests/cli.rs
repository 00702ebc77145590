mod common;

use std::path::Path;
use std::process::{Command, Output};

use common::mobius_sieve;
use lacunary::io::{AnySeries, BezoutJson, PolyJson};
use lacunary::scalar::exact_int;
use lacunary::semigroup::DEFAULT_MAX_N;
use serde_json::Value;

fn lacunary(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lacunary"))
        .args(args)
        .current_dir(dir)
        .env_remove(lacunary::cli::MAX_N_ENV)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn error_kind(out: &Output) -> String {
    let v: Value = serde_json::from_slice(&out.stderr).expect("stderr is JSON");
    v["error"].as_str().unwrap().to_string()
}

#[test]
fn invert_zeta_gives_mobius() {
    let dir = tempfile::tempdir().unwrap();
    let out = lacunary(&["zeta-s", "--spec", "full", "--n", "100", "--out", "zeta.json"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let out = lacunary(&["invert", "--in", "zeta.json", "--out", "mu.json"], dir.path());
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let text = std::fs::read_to_string(dir.path().join("mu.json")).unwrap();
    let AnySeries::Rational(mu) = AnySeries::parse(&text, DEFAULT_MAX_N).unwrap() else { panic!("backend") };
    let oracle = mobius_sieve(100);
    for (k, &m) in oracle.iter().enumerate().skip(1) {
        assert_eq!(mu.coeff(k as u64), exact_int(m));
    }
}

#[test]
fn bezout_small_system() {
    let dir = tempfile::tempdir().unwrap();
    let out = lacunary(&["bezout", "--n", "1", "--gens", "2,3"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let json: BezoutJson = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(json.verification.holds);
    assert_eq!(json.generators, vec![2, 3]);
    assert_eq!(json.truncation, 6);

    // feeding a corrupted system back reports failure with exit 1
    let mut bad = json.clone();
    bad.gs[0].coeffs[0].re = Value::String("2".into());
    std::fs::write(dir.path().join("bad.json"), serde_json::to_string(&bad).unwrap()).unwrap();
    let out = lacunary(&["bezout", "--in", "bad.json"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(error_kind(&out), "verification_failed");
    let report: BezoutJson = serde_json::from_str(&stdout(&out)).unwrap();
    assert!(!report.verification.holds);
}

#[test]
fn closure_report_on_adhoc_set() {
    let dir = tempfile::tempdir().unwrap();
    let out = lacunary(&["closure", "--spec", "{1,2,3}", "--n", "10"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let v: Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["closed"], Value::Bool(false));
    assert!(v["violations"].as_array().unwrap().contains(&serde_json::json!([2, 3, 6])));
}

#[test]
fn exit_codes_and_error_json() {
    let dir = tempfile::tempdir().unwrap();
    let out = lacunary(&["sieve", "--spec", "squares", "--n", "10"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(error_kind(&out), "parse");

    let out = lacunary(&["invert", "--in", "missing.json"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(error_kind(&out), "io");

    std::fs::write(dir.path().join("f.json"), r#"{"N":4,"backend":"rational","coeffs":[{"n":2,"re":"1","im":"0"}]}"#)
        .unwrap();
    let out = lacunary(&["invert", "--in", "f.json"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(error_kind(&out), "non_unit_constant_term");

    let out = lacunary(&["atoms", "--spec", "{1,2,3}", "--n", "10"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(error_kind(&out), "closure_violation");

    let out = lacunary(&["frobnicate"], dir.path());
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(error_kind(&out), "usage");

    let out = Command::new(env!("CARGO_BIN_EXE_lacunary"))
        .args(["sieve", "--spec", "full", "--n", "1000"])
        .env(lacunary::cli::MAX_N_ENV, "100")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(error_kind(&out), "resource_limit");
}

#[test]
fn backends_do_not_mix() {
    let dir = tempfile::tempdir().unwrap();
    lacunary(&["zeta-s", "--spec", "full", "--n", "20", "--out", "r.json"], dir.path());
    lacunary(&["zeta-s", "--spec", "full", "--n", "20", "--backend", "float", "--out", "f.json"], dir.path());
    let out = lacunary(&["conv", "--in", "r.json", "--in", "f.json"], dir.path());
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(error_kind(&out), "backend_mismatch");
    // an explicit float conversion makes them compatible
    let out = lacunary(&["conv", "--in", "r.json", "--in", "f.json", "--backend", "float"], dir.path());
    assert_eq!(out.status.code(), Some(0));
    let AnySeries::Float(d) = AnySeries::parse(&stdout(&out), DEFAULT_MAX_N).unwrap() else { panic!("backend") };
    assert_eq!(d.coeff(12).re, 6.0);
}

#[test]
fn seeded_output_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    lacunary(&["lseries", "--m", "6", "--n", "200", "--out", "l.json"], dir.path());
    let a = lacunary(&["norms", "--in", "l.json", "--seed", "42"], dir.path());
    let b = lacunary(&["norms", "--in", "l.json", "--seed", "42"], dir.path());
    let c = lacunary(&["norms", "--in", "l.json", "--seed", "43"], dir.path());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_ne!(a.stdout, c.stdout);
}

#[test]
fn emitted_json_reparses() {
    let dir = tempfile::tempdir().unwrap();
    let d = dir.path();
    for args in [
        vec!["zeta-s", "--spec", "sum2sq", "--n", "300", "--out", "z.json"],
        vec!["fejer", "--in", "z.json", "--m", "3", "--out", "fz.json"],
        vec!["lift", "--in", "z.json", "--out", "p.json"],
        vec!["drop", "--in", "p.json", "--n", "300", "--out", "back.json"],
        vec!["homog", "--in", "p.json", "--out", "h.json"],
        vec!["sieve", "--spec", "gen(2,3)", "--n", "50", "--out", "s.json"],
        vec!["closure", "--in", "s.json", "--out", "c.json"],
        vec!["abscissa", "--in", "z.json", "--out", "a.json"],
    ] {
        let out = lacunary(&args, d);
        assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
    let read = |name: &str| std::fs::read_to_string(d.join(name)).unwrap();
    let z = AnySeries::parse(&read("z.json"), DEFAULT_MAX_N).unwrap();
    assert_eq!(serde_json::to_string_pretty(&z.to_json()).unwrap() + "\n", read("z.json"));
    let back = AnySeries::parse(&read("back.json"), DEFAULT_MAX_N).unwrap();
    assert_eq!(back.to_json().coeffs, z.to_json().coeffs);
    let p: PolyJson = serde_json::from_str(&read("p.json")).unwrap();
    assert_eq!(serde_json::to_string_pretty(&p).unwrap() + "\n", read("p.json"));
    let AnySeries::Float(fz) = AnySeries::parse(&read("fz.json"), DEFAULT_MAX_N).unwrap() else { panic!() };
    assert!(fz.degree() as f64 <= 3f64.exp());
    let c: Value = serde_json::from_str(&read("c.json")).unwrap();
    assert_eq!(c["closed"], Value::Bool(true));
    let h: Value = serde_json::from_str(&read("h.json")).unwrap();
    assert!(h["parts"].as_array().unwrap().len() > 1);
}

#[test]
fn csv_exports() {
    let dir = tempfile::tempdir().unwrap();
    lacunary(&["zeta-s", "--spec", "coprime(2)", "--n", "9", "--out", "z.json"], dir.path());
    let out = lacunary(&["invert", "--in", "z.json", "--format", "csv"], dir.path());
    assert_eq!(stdout(&out), "n,abs\n1,1\n3,1\n5,1\n7,1\n");
    let out = lacunary(&["eval", "--in", "z.json", "--sigma", "1,2", "--t=-1,1", "--format", "csv"], dir.path());
    let lines: Vec<_> = stdout(&out).lines().map(String::from).collect();
    assert_eq!(lines[0], "sigma,t,abs");
    assert_eq!(lines.len(), 5);
    assert!(lines[1].starts_with("1,-1,"));
    let out = lacunary(&["atoms", "--spec", "full", "--n", "9", "--format", "csv"], dir.path());
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn in_process_run() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = lacunary::cli::run(["lacunary", "atoms", "--spec", "gen(4,6,9)", "--n", "100"], &mut out, &mut err);
    assert_eq!(code, 0, "{}", String::from_utf8_lossy(&err));
    let v: Value = serde_json::from_slice(&out).unwrap();
    assert_eq!(v["counterexample"], 36);
    assert_eq!(v["atoms"], serde_json::json!([4, 6, 9]));
    let mut help = Vec::new();
    assert_eq!(lacunary::cli::run(["lacunary", "--help"], &mut help, &mut err), 0);
    assert!(String::from_utf8(help).unwrap().contains("bezout"));
}
