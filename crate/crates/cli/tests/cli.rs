use std::process::{Command, Output};

use serde_json::Value;

fn resdet(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_resdet"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout)
        .lines()
        .map(|l| serde_json::from_str(l).expect("each line is JSON"))
        .collect()
}

fn single(args: &[&str]) -> Value {
    let out = resdet(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    let mut lines = json_lines(&out);
    assert_eq!(lines.len(), 1);
    lines.pop().unwrap()
}

#[test]
fn det_small_cases() {
    let v = single(&["det", "--p", "5", "--k", "2", "--n", "3", "--d", "-1", "--exact", "--pfaffian"]);
    assert_eq!(v["det_mod_p"], 4);
    assert_eq!(v["det_exact"], "729");
    let pf = v["pfaffian"].as_u64().unwrap();
    assert!(pf == 2 || pf == 3);

    // Cubes mod 7 are {1, 6}: (2)(12) - (7)(7) = -25.
    let v = single(&["det", "--p", "7", "--k", "3", "--n", "1", "--d", "1"]);
    assert_eq!(v["det_mod_p"], 3);

    let v = single(&["det", "--p", "5", "--k", "2", "--n", "0", "--d", "1"]);
    assert_eq!(v["det_mod_p"], 0);
    assert_eq!(v["legendre_of_det"], 0);
}

#[test]
fn det_rejects_bad_input() {
    for args in [
        &["det", "--p", "9", "--k", "2", "--n", "1", "--d", "1"][..],
        &["det", "--p", "7", "--k", "4", "--n", "1", "--d", "1"],
        &["det", "--p", "7", "--k", "2", "--n", "1", "--d", "14"],
        &["det", "--p", "13", "--k", "2", "--n", "2", "--d", "-1", "--pfaffian"],
    ] {
        let out = resdet(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8_lossy(&out.stderr);
        assert_eq!(err.trim().lines().count(), 1, "{err}");
    }
}

#[test]
fn verify_emits_records_then_summary() {
    let out = resdet(&["verify", "T1", "--pmax", "60"]);
    assert!(out.status.success());
    let lines = json_lines(&out);
    let (summary, records) = lines.split_last().unwrap();
    assert_eq!(summary["summary"]["violated"], 0);
    assert_eq!(summary["summary"]["holds"].as_u64().unwrap() as usize, records.len());
    let keys: Vec<(u64, u64, u64, i64)> = records
        .iter()
        .map(|r| {
            (
                r["p"].as_u64().unwrap(),
                r["k"].as_u64().unwrap(),
                r["n"].as_u64().unwrap(),
                r["d"].as_i64().unwrap(),
            )
        })
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn verify_is_deterministic_across_job_counts() {
    let a = resdet(&["--jobs", "1", "verify", "L26", "--pmax", "50"]);
    let b = resdet(&["verify", "L26", "--pmax", "50", "--jobs", "3"]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn verify_lists_and_unknown_id() {
    let out = resdet(&["verify", "t2", "--pmax", "41", "--klist", "2,4", "--dlist", "1,-1,3"]);
    assert!(out.status.success());
    for r in json_lines(&out).iter().filter(|r| r.get("p").is_some()) {
        assert!([2, 4].contains(&r["k"].as_u64().unwrap()));
        assert!([1, -1, 3].contains(&r["d"].as_i64().unwrap()));
    }
    assert_eq!(resdet(&["verify", "T9"]).status.code(), Some(2));
}

#[test]
fn square_root_symbol_sweep_holds() {
    let out = resdet(&["verify", "C63", "--pmax", "300"]);
    assert!(out.status.success());
    let lines = json_lines(&out);
    let summary = &lines.last().unwrap()["summary"];
    assert_eq!(summary["violated"], 0);
    // 29 primes ≡ 1 (mod 4) up to 300.
    assert_eq!(summary["holds"], 29);
}

#[test]
fn ekm_sets() {
    let v = single(&["ekm", "--k", "2", "--m", "5"]);
    assert_eq!(v["members"], serde_json::json!([29]));
    assert_eq!(v["routes_agree"], true);

    let v = single(&["ekm", "--k", "2", "--m", "1"]);
    assert_eq!(v["members"], serde_json::json!([]));

    let v = single(&["ekm", "--k", "2", "--m", "13", "--criterion-only"]);
    assert_eq!(v["members"], serde_json::json!([17, 109, 401, 29629, 924397]));
    assert_eq!(v["members_below_bound"], serde_json::json!([17, 109, 401]));
    let head = &v["report"]["criterion"][0];
    assert_eq!(head["value"], "58917607974225");

    assert_eq!(resdet(&["ekm", "--k", "2", "--m", "4"]).status.code(), Some(2));
}

#[test]
fn char_values() {
    let v = single(&["char", "--p", "7", "--d", "6", "--k", "3"]);
    assert_eq!(v["chi_k"]["class"], "one");
    assert_eq!(v["legendre"], -1);
    let v = single(&["char", "--p", "5", "--d", "2"]);
    assert_eq!(v["legendre"], -1);
    assert!(v.get("chi_k").is_none());
}

#[test]
fn selftest_single_suite_and_table() {
    let out = resdet(&["selftest", "--suite", "residue-product"]);
    assert!(out.status.success());
    let lines = json_lines(&out);
    assert_eq!(lines[0]["name"], "residue-product");
    assert_eq!(lines[1]["summary"]["failed"], 0);

    let out = resdet(&["--format", "table", "selftest", "--suite", "sqrt-mod"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.starts_with("name"));
    assert!(text.contains("sqrt-mod"));

    assert_eq!(resdet(&["selftest", "--suite", "nope"]).status.code(), Some(2));
}
