use std::process::{Command, Output};

use hkl_core::borcherds::Relation;

const RANKS: [u64; 18] = [1, 2, 1, 1, 1, 1, 1, 1, 2, 3, 2, 2, 2, 3, 2, 2, 3, 4];
const MU: [u64; 23] = [46, 1, 0, 0, 0, 0, 0, 0, 30, 1, 0, 0, 0, 0, 0, 0, 78, 33, 16, 8, 4, 2, 1];

fn hkl(args: &[&str]) -> Output {
    hkl_env(args, None)
}

fn hkl_env(args: &[&str], format: Option<&str>) -> Output {
    let mut c = Command::new(env!("CARGO_BIN_EXE_hkl"));
    c.args(args).env_remove("HKL_FORMAT");
    if let Some(f) = format {
        c.env("HKL_FORMAT", f);
    }
    c.output().expect("run hkl")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exit code")
}

fn json_lines(o: &Output) -> Vec<serde_json::Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).expect("json line")).collect()
}

#[test]
fn rank_table() {
    let o = hkl(&["rank", "--min", "3", "--max", "20"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    let rows: Vec<&str> = out.lines().skip(1).collect();
    assert_eq!(rows.len(), 18);
    let ranks: Vec<u64> = rows.iter().map(|r| r.split_whitespace().last().unwrap().parse().unwrap()).collect();
    assert_eq!(ranks, RANKS);
}

#[test]
fn rank_json_and_tsv() {
    let o = hkl(&["rank", "--min", "19", "--max", "19", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v = json_lines(&o);
    assert_eq!(v.len(), 1);
    assert_eq!(v[0]["N"], 19);
    assert_eq!(v[0]["rank"], 3);
    let o = hkl(&["rank", "--min", "19", "--max", "20", "--format", "tsv"]);
    let out = stdout(&o);
    assert!(out.lines().all(|l| l.split('\t').count() == 8));
}

#[test]
fn usage_errors_exit_64() {
    for args in [
        &["rank", "--min", "5", "--max", "3"][..],
        &["rank", "--min", "2", "--max", "3"],
        &["relation", "--n", "26", "--which", "first"],
        &["relation", "--n", "18", "--which", "second"],
        &["relation", "--n", "19", "--decoration", "zeta"],
        &["mu", "--min", "3", "--max", "26"],
        &["pullback", "--map", "f", "--n", "19", "--class", "2*lambda + * Hn"],
        &["pullback", "--map", "x", "--n", "19", "--class", "Hn"],
        &["pullback", "--map", "l", "--n", "12", "--class", "Hn"],
        &["audit", "--n", "19", "--beta", "1/0"],
        &["check"],
        &["frobnicate"],
        &["rank", "--min"],
    ] {
        let o = hkl(args);
        assert_eq!(code(&o), 64, "{args:?}");
        assert!(o.stdout.is_empty(), "{args:?}");
        assert!(!o.stderr.is_empty(), "{args:?}");
    }
    assert_eq!(code(&hkl(&["--help"])), 0);
    assert_eq!(code(&hkl(&["--version"])), 0);
}

#[test]
fn relation_examples() {
    let o = hkl(&["relation", "--n", "19", "--which", "first"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "108 λ = 1 Hn + 14 Hh + 78 Hu\n");
    let o = hkl(&["relation", "--n", "10", "--which", "gritsenko"]);
    assert_eq!(stdout(&o), "Hh = 8 λ\n");
    let o = hkl(&["relation", "--n", "14", "--which", "gritsenko"]);
    assert_eq!(stdout(&o), "Hh = 1 Hu\n");
    let o = hkl(&["relation", "--n", "17", "--which", "second"]);
    assert_eq!(stdout(&o), "264 λ = 1 Hn + 2 Hh + 2 Hu\n");
    let o = hkl(&["relation", "--n", "14", "--decoration", "zeta"]);
    assert_eq!(stdout(&o), "288 λ = 1 Hn + 24 Hu\n");
}

#[test]
fn relation_json_round_trips() {
    for args in [
        &["relation", "--n", "19"][..],
        &["relation", "--n", "13", "--which", "gritsenko"],
        &["relation", "--n", "18", "--group", "stable"],
        &["relation", "--n", "12", "--which", "second"],
    ] {
        let o = hkl_env(args, Some("json"));
        assert_eq!(code(&o), 0);
        let line = stdout(&o);
        let r = Relation::from_json(line.trim()).expect("relation json");
        assert_eq!(r.to_json().to_string(), line.trim());
    }
}

#[test]
fn walls_and_mu() {
    let o = hkl(&["walls", "--n", "19"]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 8);
    assert!(out.lines().last().unwrap().contains("Im(f_{11,19}∘l_{11})"));
    let v = json_lines(&hkl(&["walls", "--n", "18", "--format", "json"]));
    let betas: Vec<&str> = v[0]["walls"].as_array().unwrap().iter().map(|w| w["beta"].as_str().unwrap()).collect();
    assert_eq!(betas, ["1", "1/2", "1/3", "1/4", "1/5", "1/6", "1/8"]);
    let o = hkl(&["walls", "--n", "12"]);
    assert!(stdout(&o).starts_with("note:"));

    let o = hkl(&["mu", "--format", "tsv"]);
    assert_eq!(code(&o), 0);
    let mus: Vec<u64> = stdout(&o).lines().map(|l| l.split('\t').nth(1).unwrap().parse().unwrap()).collect();
    assert_eq!(mus, MU);
}

#[test]
fn pullback_examples() {
    let o = hkl(&["pullback", "--map", "f", "--n", "19", "--class", "1*Hh"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "-2 λ + 1 Hh on F(18)\n");
    let o = hkl(&["pullback", "--map", "q", "--n", "13", "--class", "Hh"]);
    assert_eq!(stdout(&o), "2 Hu on FIIA2(1)\n");
    let v = json_lines(&hkl(&["pullback", "--map", "rho", "--n", "20", "--class", "Hu", "--format", "json"]));
    assert_eq!(v[0]["space"], "FStable(20)");
}

#[test]
fn audit_output() {
    let o = hkl(&["audit", "--n", "19", "--beta", "1/10"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).lines().all(|l| l.ends_with("ok")));
    let o = hkl(&["audit", "--n", "19", "--beta", "1/9"]);
    assert!(stdout(&o).lines().any(|l| l.ends_with("no")));
}

#[test]
fn format_env_and_flag() {
    let a = hkl_env(&["mu", "--min", "19", "--max", "20"], Some("json"));
    let v = json_lines(&a);
    assert_eq!(v[0]["mu"], 78);
    let b = hkl_env(&["mu", "--min", "19", "--max", "20", "--format", "table"], Some("json"));
    assert_eq!(stdout(&b), "19  78\n20  33\n");
    assert_eq!(code(&hkl_env(&["mu"], Some("bogus"))), 64);
}

#[test]
fn deterministic_output() {
    for args in [&["walls", "--n", "23", "--format", "json"][..], &["rank", "--min", "3", "--max", "30"], &["relation", "--n", "22"]] {
        let a = hkl(args);
        let b = hkl(args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert_eq!(code(&a), 0);
    }
}
