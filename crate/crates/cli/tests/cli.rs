use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn sawlab(cache: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sawlab"))
        .args(args)
        .env("SAWLAB_CACHE", cache)
        .env_remove("RUST_LOG")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).expect("JSON output")
}

fn csv_rows(o: &Output) -> Vec<Vec<String>> {
    stdout(o)
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect()
}

#[test]
fn count_bridges_csv() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c.jsonl");
    let o = sawlab(&cache, &["count", "--group", "Z!^2", "--max-len", "8", "--bridges"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert!(text.starts_with("n,c_n,b_n,h_n\n"));
    let rows = csv_rows(&o);
    assert_eq!(rows.len(), 8);
    assert_eq!(rows[3], ["4", "100", "17", "19"]);
    assert_eq!(rows[7][1], "5916");
}

#[test]
fn line_counts_are_two() {
    let dir = tempfile::tempdir().unwrap();
    let o = sawlab(&dir.path().join("c.jsonl"), &["count", "--group", "Z!", "--max-len", "20"]);
    assert!(o.status.success());
    let rows = csv_rows(&o);
    assert_eq!(rows.len(), 20);
    assert!(rows.iter().all(|r| r[1] == "2"));
}

#[test]
fn cache_hit_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("nested").join("c.jsonl");
    let args = ["count", "--group", "Z! * Z[5]", "--max-len", "7", "--bridges", "--format", "json"];
    let first = sawlab(&cache, &args);
    assert!(cache.exists());
    let size = std::fs::metadata(&cache).unwrap().len();
    let second = sawlab(&cache, &args);
    assert_eq!(std::fs::metadata(&cache).unwrap().len(), size, "hit appends nothing");
    let mut fresh_args = args.to_vec();
    fresh_args.push("--no-cache");
    let fresh = sawlab(&cache, &fresh_args);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(first.stdout, fresh.stdout);

    // a shorter request is answered from the longer cached table
    let short = sawlab(&cache, &["count", "--group", "Z! * Z[5]", "--max-len", "4", "--bridges"]);
    let short_fresh = sawlab(
        &cache,
        &["--no-cache", "count", "--group", "Z! * Z[5]", "--max-len", "4", "--bridges"],
    );
    assert_eq!(short.stdout, short_fresh.stdout);
    assert_eq!(std::fs::metadata(&cache).unwrap().len(), size);
}

#[test]
fn stale_engine_entries_are_ignored() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c.jsonl");
    std::fs::write(
        &cache,
        "{\"engine\":\"old\",\"group\":\"Z!\",\"distinguished\":0,\"n\":0,\"c\":\"7\",\"b\":null,\"h\":null}\nnot json\n",
    )
    .unwrap();
    let o = sawlab(&cache, &["count", "--group", "Z!", "--max-len", "3"]);
    assert!(o.status.success());
    assert!(csv_rows(&o).iter().all(|r| r[1] == "2"));
}

#[test]
fn output_does_not_depend_on_threads() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c.jsonl");
    let run = |t: &str| {
        sawlab(
            &cache,
            &["--no-cache", "--threads", t, "count", "--group", "Z! x Z[5]", "--max-len", "8", "--bridges"],
        )
        .stdout
    };
    let one = run("1");
    assert_eq!(one, run("3"));
    assert_eq!(one, run("8"));
}

#[test]
fn verify_passes_on_test_groups() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c.jsonl");
    let o = sawlab(&cache, &["verify", "--group", "Z!^2", "--max-len", "8", "--B", "3.0"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["verdict"], "PASS");
    assert_eq!(v["class_check"]["verdict"], "PASS");
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["verdict"] != "FAIL"));
    assert_eq!(v["hammersley_welsh"]["holds_for_all"], true);

    let o = sawlab(&cache, &["verify", "--group", "Z! x Z[5]", "--max-len", "8"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c.jsonl");
    let o = sawlab(&cache, &["verify", "--group", "Z[6]"]);
    assert_eq!(o.status.code(), Some(2));

    let o = sawlab(&cache, &["verify", "--group", "Z!^2", "--B", "2.5"]);
    assert_eq!(o.status.code(), Some(2));

    // a^6 = 1 puts the group outside the class
    let o = sawlab(&cache, &["verify", "--group", "<a!,b | a^6, a b a^-1 b^-1>", "--max-len", "4"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["class_check"]["verdict"], "FAIL");
    assert!(v["class_check"]["witnesses"].to_string().contains("a^6"));

    let o = sawlab(&cache, &["count", "--group", "<a!,b | a^6, a b a^-1 b^-1>", "--max-len", "6", "--bridges"]);
    assert_eq!(o.status.code(), Some(2));

    let o = sawlab(&cache, &["count", "--group", "Z x (", "--max-len", "4"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn locality_tables() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c.jsonl");
    let o = sawlab(
        &cache,
        &["locality", "--base", "Z!^2", "--relator", "b^m", "--m", "3..8", "--max-len", "8"],
    );
    assert!(o.status.success());
    let rows = csv_rows(&o);
    assert_eq!(rows.len(), 6);
    for (r, m) in rows.iter().zip(3..) {
        assert_eq!(r[0], m.to_string());
        assert_eq!(r[1], m.to_string());
        let (lo, up): (f64, f64) = (r[3].parse().unwrap(), r[4].parse().unwrap());
        assert!(lo <= up);
    }

    let o = sawlab(
        &cache,
        &["locality", "--base", "Z! * Z", "--relator", "b^m", "--m", "3..6", "--max-len", "7"],
    );
    assert_eq!(csv_rows(&o).len(), 4);

    let o = sawlab(
        &cache,
        &["locality", "--base", "Z!^2", "--relator", "b^m", "--m", "12..12", "--max-len", "8"],
    );
    let rows = csv_rows(&o);
    assert_eq!(rows.len(), 1);
    assert_eq!(rows[0][3], rows[0][5]);
    assert_eq!(rows[0][4], rows[0][6]);

    let o = sawlab(
        &cache,
        &["locality", "--base", "Z!^2", "--relator", "b^4", "--m", "3..4", "--max-len", "4"],
    );
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn girth_and_fingerprint() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c.jsonl");
    let o = sawlab(&cache, &["girth", "--base", "Z!^2", "--quotient", "Z! x Z[6]", "--cutoff", "10"]);
    assert!(o.status.success());
    assert_eq!(json(&o), serde_json::json!({"value": 6, "witness": "b^6"}));

    let o = sawlab(&cache, &["girth", "--base", "Z! x Z[6]", "--quotient", "Z!^2"]);
    assert_eq!(o.status.code(), Some(4));

    let o = sawlab(&cache, &["fingerprint", "--group", "F2!", "--cutoff", "10"]);
    assert!(o.status.success());
    assert_eq!(json(&o)["words"], serde_json::json!([""]));

    let o = sawlab(&cache, &["fingerprint", "--group", "Z^2", "--compare", "F2", "--cutoff", "4"]);
    let v = json(&o);
    assert_eq!(v["first_disagreement"], 4);
    assert_eq!(v["fingerprint"]["words"].as_array().unwrap().len(), 9);
}

#[test]
fn estimate_outputs() {
    let dir = tempfile::tempdir().unwrap();
    let cache = dir.path().join("c.jsonl");
    let o = sawlab(&cache, &["estimate", "--lattice", "honeycomb", "--max-len", "10"]);
    assert!(o.status.success());
    let v = json(&o);
    assert_eq!(v["lower_flagged"], true);
    let up = v["upper"].as_f64().unwrap();
    assert!(up > 1.8477590650225735 && up < 2.1);

    let o = sawlab(&cache, &["estimate", "--group", "Z!^2", "--max-len", "8"]);
    let v = json(&o);
    let (lo, up) = (v["lower"].as_f64().unwrap(), v["upper"].as_f64().unwrap());
    assert!(lo < 2.638 && 2.638 < up);

    let o = sawlab(&cache, &["estimate", "--lattice", "triangular", "--max-len", "4"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn output_file() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("out.csv");
    let o = sawlab(
        &dir.path().join("c.jsonl"),
        &["count", "--group", "Z!^2", "--max-len", "3", "--output", out.to_str().unwrap()],
    );
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(out).unwrap(), "n,c_n\n1,4\n2,12\n3,36\n");
}
