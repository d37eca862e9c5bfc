//! Behavior of the compiled binary: documented examples, exit codes, and
//! the cache file layout.  Every invocation points `KW_CACHE` at a private
//! temporary directory so nothing leaks into the user's cache.

use std::path::Path;
use std::process::{Command, Output};

fn run_kw(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kw"))
        .args(args)
        .env("KW_CACHE", cache)
        .output()
        .expect("binary spawns")
}

fn stdout(out: &Output) -> String {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn phi_at_one_lists_the_two_expansion_coefficients() {
    let cache = tempfile::tempdir().unwrap();
    let out = stdout(&run_kw(cache.path(), &["phi", "--n", "1"]));
    let value: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(value["n"], 1);
    assert_eq!(value["idiot_coefficients"]["-1"], "1");
    assert_eq!(value["idiot_coefficients"]["1"], "1/x");
    assert_eq!(value["jordan_type"], serde_json::json!([2]));
}

#[test]
fn hilbert_a1_matches_the_monomial_count() {
    let cache = tempfile::tempdir().unwrap();
    let out = stdout(&run_kw(
        cache.path(),
        &["hilbert", "--type", "A1", "--max", "8", "--format", "csv"],
    ));
    assert_eq!(out, "0,1\n2,2\n4,4\n6,6\n8,9\n");
}

#[test]
fn negative_weight_is_a_domain_error() {
    let cache = tempfile::tempdir().unwrap();
    let out = run_kw(cache.path(), &["phi", "--n", "-1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(!out.stderr.is_empty());
}

#[test]
fn bad_usage_exits_with_two() {
    let cache = tempfile::tempdir().unwrap();
    let unknown = run_kw(cache.path(), &["frobenius"]);
    assert_eq!(unknown.status.code(), Some(2));
    let missing_flag = run_kw(cache.path(), &["hilbert", "--type", "A1"]);
    assert_eq!(missing_flag.status.code(), Some(2));
}

#[test]
fn unknown_root_system_is_a_domain_error() {
    let cache = tempfile::tempdir().unwrap();
    let out = run_kw(cache.path(), &["graph", "--type", "Z9", "--hw", "1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn graph_csv_rows_sum_to_the_dimension() {
    let cache = tempfile::tempdir().unwrap();
    let out = stdout(&run_kw(
        cache.path(),
        &["graph", "--type", "A2", "--hw", "1,0", "--format", "csv", "--no-cache"],
    ));
    let total: u64 = out
        .lines()
        .map(|line| line.rsplit(',').next().unwrap().parse::<u64>().unwrap())
        .sum();
    assert_eq!(total, 3);
}

#[test]
fn levi_blocks_cover_the_module() {
    let cache = tempfile::tempdir().unwrap();
    let out = stdout(&run_kw(
        cache.path(),
        &["levi", "--type", "A2", "--hw", "1,1", "--roots", "0"],
    ));
    let value: serde_json::Value = serde_json::from_str(&out).unwrap();
    let total: u64 = value["cosets"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|entry| entry["model"]["weights"].as_array().unwrap())
        .map(|w| w["mult"].as_u64().unwrap())
        .sum();
    assert_eq!(total, 8);
}

#[test]
fn toda_output_reproduces_the_frozen_vector() {
    let cache = tempfile::tempdir().unwrap();
    let out = stdout(&run_kw(cache.path(), &["toda", "casimir", "--no-cache"]));
    let frozen = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../core/testdata/toda_casimir.json"
    ))
    .unwrap();
    assert_eq!(out, frozen);
}

#[test]
fn cache_entries_land_in_the_configured_directory() {
    let cache = tempfile::tempdir().unwrap();
    stdout(&run_kw(cache.path(), &["phi", "--n", "0"]));
    let entries: Vec<_> = std::fs::read_dir(cache.path())
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    assert_eq!(entries.len(), 1);
    assert!(entries[0].ends_with(".out"));
}
