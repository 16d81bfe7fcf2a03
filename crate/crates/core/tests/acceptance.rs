//! Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
//! failure. Each criterion also returns a serialized artifact so that the
//! determinism criterion can compare runs at different worker counts.

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use serde_json::json;

use sawlab::cayley::{
    check_quotient_relation, fingerprint_distance, fingerprint_with, Girth,
};
use sawlab::estimate::{
    lattice_counts, locality_experiment, Lattice, LatticeAdapter, LocalityTable, MuBracket,
    QuotientFamily, HONEYCOMB_MU,
};
use sawlab::presentation::{check_rank_condition, exponent_matrix};
use sawlab::saw::{
    count_bridges, count_saws, verify_hw_inequality, verify_quotient_counts, verify_reflection,
    verify_step2_inequality, CountsTable,
};
use sawlab::{Counts, EnumOptions, GroupSpec};

type Outcome = Result<(String, String), String>;

const STEP2_GROUPS: [&str; 4] = ["Z!^2", "Z! x Z[5]", "Z! * Z[5]", "F2!"];

fn spec(t: &str) -> GroupSpec {
    GroupSpec::parse(t).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn naive_square_counts(max: usize) -> Vec<u64> {
    fn go(at: (i64, i64), seen: &mut HashSet<(i64, i64)>, len: usize, max: usize, c: &mut [u64]) {
        c[len] += 1;
        if len == max {
            return;
        }
        for (dx, dy) in [(1, 0), (-1, 0), (0, 1), (0, -1)] {
            let p = (at.0 + dx, at.1 + dy);
            if seen.insert(p) {
                go(p, seen, len + 1, max, c);
                seen.remove(&p);
            }
        }
    }
    let mut c = vec![0; max + 1];
    go((0, 0), &mut HashSet::from([(0, 0)]), 0, max, &mut c);
    c
}

fn exact_counts(opts: &EnumOptions) -> Outcome {
    let oracle = naive_square_counts(10);
    let z2: CountsTable<u64> = count_saws(&spec("Z^2"), 10, opts).map_err(|e| e.to_string())?;
    ensure(z2.c_all() == oracle.as_slice(), || format!("Z^2 counts {:?} vs oracle {oracle:?}", z2.c_all()))?;
    ensure(oracle[4] == 100 && oracle[10] == 44100, || "oracle anchors c_4, c_10".into())?;
    let z: CountsTable<u64> = count_saws(&spec("Z"), 20, opts).map_err(|e| e.to_string())?;
    ensure(z.c_all()[1..].iter().all(|&c| c == 2), || "Z counts".into())?;
    let f2: CountsTable<BigUint> = count_saws(&spec("F2"), 10, opts).map_err(|e| e.to_string())?;
    for n in 1..=10u32 {
        ensure(*f2.c(n as usize) == BigUint::from(4 * 3u64.pow(n - 1)), || format!("F2 c_{n}"))?;
    }
    Ok((
        format!("Z^2 c_10 = {}, Z c_20 = 2, F2 c_10 = {}", z2.c(10), f2.c(10)),
        json!([z2.to_json(), z.to_json(), f2.to_json()]).to_string(),
    ))
}

fn honeycomb_floor(opts: &EnumOptions) -> Outcome {
    let mu = (2f64 + 2f64.sqrt()).sqrt();
    ensure((mu - HONEYCOMB_MU).abs() < 1e-15, || "reference constant".into())?;
    let t: CountsTable<BigUint> =
        lattice_counts(&LatticeAdapter::new(Lattice::Honeycomb), 16, opts).map_err(|e| e.to_string())?;
    let roots: Vec<f64> = (1..=16).map(|n| sawlab::scalar::nth_root(t.c(n), n)).collect();
    for (i, r) in roots.iter().enumerate() {
        ensure(*r >= mu - 1e-12, || format!("c_{}^(1/{}) = {r} below the floor", i + 1, i + 1))?;
    }
    let (gap8, gap16) = (roots[7] - mu, roots[15] - mu);
    ensure(gap16 < gap8, || format!("no tightening: {gap16} vs {gap8}"))?;
    let bracket = MuBracket::<f64>::from_table(&t).map_err(|e| e.to_string())?;
    ensure(bracket.lower_flagged && bracket.lower <= bracket.upper, || "flagged bracket".into())?;
    Ok((
        format!("c_16 = {}, gap at 8 = {gap8:.4}, gap at 16 = {gap16:.4}", t.c(16)),
        json!([t.to_json(), bracket.to_json()]).to_string(),
    ))
}

fn step2_suite(opts: &EnumOptions) -> Outcome {
    let mut artifacts = Vec::new();
    for g in STEP2_GROUPS {
        let t: Counts = count_bridges(&spec(g), 8, opts).map_err(|e| e.to_string())?;
        let r = verify_step2_inequality(&t).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("{g}: {:?}", r.failures().next()))?;
        artifacts.push(r.to_json());
    }
    Ok((
        format!("{} groups, N <= 8, all inequalities hold", STEP2_GROUPS.len()),
        json!(artifacts).to_string(),
    ))
}

fn reflection_suite(opts: &EnumOptions) -> Outcome {
    let mut artifacts = Vec::new();
    let mut checks = 0;
    for g in STEP2_GROUPS {
        let r = verify_reflection(&spec(g), 7, opts).map_err(|e| e.to_string())?;
        ensure(r.passed() && r.witnesses.is_empty(), || {
            format!("{g}: {:?} {:?}", r.failures().next(), r.witnesses.first())
        })?;
        checks += r.checks.len();
        artifacts.push(r.to_json());
    }
    Ok((format!("{checks} checks over lengths 1..=7"), json!(artifacts).to_string()))
}

fn hammersley_welsh(opts: &EnumOptions) -> Outcome {
    let mut artifacts = Vec::new();
    let mut notes = Vec::new();
    for (g, strict) in [("Z!^2", true), ("Z!", true), ("Z! x Z[5]", false), ("Z! * Z[5]", false), ("F2!", false)] {
        let t: Counts = count_bridges(&spec(g), 10, opts).map_err(|e| e.to_string())?;
        let r = verify_hw_inequality(&t, 3.0f64).map_err(|e| e.to_string())?;
        if strict {
            ensure(r.holds_for_all && r.beta.len() == 9, || format!("{g}: beta {:?}", r.beta))?;
        } else if !r.holds_for_all {
            notes.push(format!("{g} exceptions below N* = {:?}", r.n_star));
        }
        artifacts.push(r.to_json());
    }
    let max_beta = |v: &serde_json::Value| {
        v["checks"]
            .as_array()
            .unwrap()
            .iter()
            .map(|c| c["lhs"].as_f64().unwrap())
            .fold(f64::MIN, f64::max)
    };
    let detail = format!(
        "max beta Z^2 = {:.4}, Z = {:.4}; {}",
        max_beta(&artifacts[0]),
        max_beta(&artifacts[1]),
        if notes.is_empty() { "no exceptions elsewhere".to_string() } else { notes.join("; ") }
    );
    Ok((detail, json!(artifacts).to_string()))
}

fn locality_table(opts: &EnumOptions) -> Outcome {
    let mut artifacts = Vec::new();
    for (base, ms, n) in [("Z!^2", 3..=8u64, 8usize), ("Z! * Z", 3..=6u64, 7usize)] {
        let family = QuotientFamily::new(spec(base), "b^m").map_err(|e| e.to_string())?;
        let params: Vec<u64> = ms.collect();
        let table: LocalityTable<f64> =
            locality_experiment(&family, &params, n, n, opts).map_err(|e| e.to_string())?;
        for row in &table.rows {
            let m = row.m as usize;
            ensure(row.rel_girth == Girth::Finite(m), || format!("{base} m={m}: girth {:?}", row.rel_girth))?;
            ensure(row.eq_horizon == m - 1, || format!("{base} m={m}: horizon {}", row.eq_horizon))?;
            ensure(row.bracket.upper <= row.base_bracket.upper, || format!("{base} m={m}: upper"))?;
            let quot = family.member(row.m).map_err(|e| e.to_string())?;
            let r = verify_quotient_counts(&family.base, &quot, m, opts).map_err(|e| e.to_string())?;
            let equal = r.checks.iter().filter(|c| c.name.ends_with("_equal")).count();
            let drops = r.checks.iter().any(|c| c.name == "quotient_c_drops" && c.n == m);
            ensure(r.passed() && drops && equal == 2 * (m - 1), || format!("{base} m={m}: {r:?}"))?;
            artifacts.push(r.to_json());
        }
        artifacts.push(table.to_json());
    }
    Ok((
        "Z x Z/m (m = 3..8) and Z * Z/m (m = 3..6): girth m, counts equal below m, c_m drops".into(),
        json!(artifacts).to_string(),
    ))
}

fn fingerprint_convergence(opts: &EnumOptions) -> Outcome {
    let base = spec("Z!^2");
    let fb = fingerprint_with(&base, 10, opts).map_err(|e| e.to_string())?;
    let mut distances = Vec::new();
    for m in 3..=12u64 {
        let q = spec(&format!("Z! x Z[{m}]"));
        let fq = fingerprint_with(&q, 10, opts).map_err(|e| e.to_string())?;
        let d = fingerprint_distance(&fq, &fb).map_err(|e| e.to_string())?;
        let expected = if m <= 10 {
            BigRational::new(BigInt::from(1), BigInt::from(1) << (m - 1))
        } else {
            BigRational::from_integer(BigInt::from(0))
        };
        ensure(d == expected, || format!("m={m}: distance {d}, expected {expected}"))?;
        let rel = check_quotient_relation(&base, &q, 10).map_err(|e| e.to_string())?;
        ensure(rel, || format!("m={m}: not a quotient"))?;
        distances.push(d.to_string());
    }
    Ok((format!("distances {}", distances.join(", ")), json!(distances).to_string()))
}

fn bracket_sanity(opts: &EnumOptions) -> Outcome {
    let mut artifacts = Vec::new();
    for g in ["Z!", "Z!^2", "Z! x Z[5]", "Z! * Z[5]", "F2!"] {
        let t: Counts = count_bridges(&spec(g), 10, opts).map_err(|e| e.to_string())?;
        for n in 1..=10 {
            let b = MuBracket::<f64>::from_table(&t.truncated(n)).map_err(|e| e.to_string())?;
            ensure(b.lower <= b.upper, || format!("{g} N={n}: {b}"))?;
        }
        artifacts.push(MuBracket::<f64>::from_table(&t).unwrap().to_json());
    }
    let t: Counts = count_bridges(&spec("Z!^2"), 10, opts).map_err(|e| e.to_string())?;
    let b = MuBracket::<f64>::from_table(&t).map_err(|e| e.to_string())?;
    let b10: f64 = sawlab::scalar::nth_root(&t.b(10).unwrap(), 10);
    let c10: f64 = sawlab::scalar::nth_root(t.c(10), 10);
    ensure(b.lower <= b10 && b10 <= c10 && c10 <= b.upper, || {
        format!("bracket {b} does not contain [{b10}, {c10}]")
    })?;
    ensure((c10 - 44100f64.powf(0.1)).abs() < 1e-12, || format!("c_10 root {c10}"))?;
    ensure((c10 - 2.9145).abs() < 1e-3, || format!("c_10 root {c10} far from 2.9145"))?;
    ensure(b.width() < 1.0, || format!("width {}", b.width()))?;
    Ok((
        format!("Z^2 N=10 bracket {b}, width {:.4}", b.width()),
        json!(artifacts).to_string(),
    ))
}

fn rank_diagnostic(_opts: &EnumOptions) -> Outcome {
    let mut out = Vec::new();
    for m in 2..=12u64 {
        let pres = spec(&format!("Z! x Z[{m}]")).presentation();
        let mat = exponent_matrix(&pres);
        let r = sawlab::presentation::integer_rank(&mat);
        ensure(mat.columns == 2 && r == 1 && check_rank_condition(&mat), || {
            format!("Z x Z/{m}: p = {}, r = {r}", mat.columns)
        })?;
        out.push(r);
    }
    let pres = spec("Z[6]").presentation();
    let mat = exponent_matrix(&pres);
    ensure(!check_rank_condition(&mat), || "Z[6] should fail the rank condition".into())?;
    Ok(("Z x Z/m: p = 2, r = 1; Z[6]: condition false".into(), json!(out).to_string()))
}

type Criterion = (&'static str, fn(&EnumOptions) -> Outcome, Duration);

const CRITERIA: [Criterion; 9] = [
    ("exact counts vs oracles", exact_counts, Duration::from_secs(60)),
    ("honeycomb floor", honeycomb_floor, Duration::from_secs(60)),
    ("step-2 inequality suite", step2_suite, Duration::from_secs(600)),
    ("reflection-map property suite", reflection_suite, Duration::from_secs(600)),
    ("Hammersley-Welsh check", hammersley_welsh, Duration::from_secs(600)),
    ("quotient locality table", locality_table, Duration::from_secs(600)),
    ("fingerprint convergence", fingerprint_convergence, Duration::from_secs(600)),
    ("bracket sanity", bracket_sanity, Duration::from_secs(600)),
    ("rank diagnostic", rank_diagnostic, Duration::from_secs(600)),
];

fn main() -> ExitCode {
    let mut failed = 0;
    let mut artifacts = Vec::new();
    let opts = EnumOptions::with_threads(4);
    for (i, (name, run, limit)) in CRITERIA.iter().enumerate() {
        let start = Instant::now();
        let outcome = run(&opts);
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(_) if elapsed > *limit => Err(format!("took {elapsed:?}, limit {limit:?}")),
            other => other,
        };
        match outcome {
            Ok((detail, artifact)) => {
                println!("criterion {:>2} PASS  {name}: {detail} ({elapsed:.2?})", i + 1);
                artifacts.push(Some(artifact));
            }
            Err(why) => {
                println!("criterion {:>2} FAIL  {name}: {why} ({elapsed:.2?})", i + 1);
                artifacts.push(None);
                failed += 1;
            }
        }
    }

    let start = Instant::now();
    let mut mismatch = Vec::new();
    for threads in [1, 8] {
        let opts = EnumOptions::with_threads(threads);
        for (i, (name, run, _)) in CRITERIA.iter().enumerate() {
            let again = run(&opts).ok().map(|(_, a)| a);
            if again != artifacts[i] {
                mismatch.push(format!("{name} at {threads} threads"));
            }
        }
    }
    if mismatch.is_empty() {
        println!(
            "criterion 10 PASS  determinism: criteria 1-9 byte-identical at 1, 4 and 8 threads ({:.2?})",
            start.elapsed()
        );
    } else {
        println!("criterion 10 FAIL  determinism: differs for {}", mismatch.join(", "));
        failed += 1;
    }

    if failed == 0 {
        println!("acceptance: all 10 criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failed} criteria failed");
        ExitCode::FAILURE
    }
}
