use std::process::{Command, Output};

use serde_json::Value;

fn cptgroup(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cptgroup")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn verify_json(dir: &tempfile::TempDir, name: &str, strict: bool) -> (i32, String) {
    let path = dir.path().join(name);
    let mut args = vec!["verify", "--json-out", path.to_str().unwrap()];
    if strict {
        args.push("--strict");
    }
    let out = cptgroup(&args);
    (out.status.code().unwrap(), std::fs::read_to_string(path).unwrap())
}

#[test]
fn verify_passes_and_report_follows_schema() {
    let dir = tempfile::tempdir().unwrap();
    let (code, text) = verify_json(&dir, "report.json", false);
    assert_eq!(code, 0);
    let report: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(report["schema"], "cptgroup-report/1");
    assert_eq!(report["overall"], "pass");
    let sections = report["sections"].as_array().unwrap();
    assert!(sections.len() >= 60);
    let mut ids: Vec<&str> = sections.iter().map(|s| s["claim_id"].as_str().unwrap()).collect();
    for s in sections {
        assert!(["pass", "fail", "mismatch"].contains(&s["status"].as_str().unwrap()));
        assert!(s["details"].is_object());
    }
    for id in ["table-44", "cycles-45", "iso-53", "ses-74-no-split", "iso-55", "select-69", "chain-73"] {
        assert!(ids.contains(&id), "{id}");
    }
    ids.sort_unstable();
    let n = ids.len();
    ids.dedup();
    assert_eq!(ids.len(), n, "claim ids are unique");
    let groups = report["groups"].as_array().unwrap();
    assert_eq!(groups.len(), 3);
    for g in groups {
        for key in ["group", "order", "profile", "table", "cycles", "isomorphisms_checked"] {
            assert!(!g[key].is_null(), "{key}");
        }
    }
}

#[test]
fn strict_mode_fails_on_printed_mismatches() {
    let dir = tempfile::tempdir().unwrap();
    let (code, text) = verify_json(&dir, "strict.json", true);
    assert_eq!(code, 1);
    let report: Value = serde_json::from_str(&text).unwrap();
    assert_eq!(report["overall"], "fail");
    let out = cptgroup(&["verify", "--strict"]);
    let text = stdout(&out);
    assert!(text.contains("MISMATCH iso-55"));
    assert!(text.contains("\"printed\":\"-an\""));
}

#[test]
fn verify_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let (_, a) = verify_json(&dir, "a.json", false);
    let (_, b) = verify_json(&dir, "b.json", false);
    assert_eq!(a, b);
}

#[test]
fn table_entries() {
    let g2 = stdout(&cptgroup(&["table", "--group", "g2", "--format", "json"]));
    let t: Value = serde_json::from_str(&g2).unwrap();
    let labels: Vec<&str> = t["labels"].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect();
    let at = |r: &str, c: &str| {
        let (i, j) = (labels.iter().position(|l| *l == r).unwrap(), labels.iter().position(|l| *l == c).unwrap());
        t["entries"][i][j].as_str().unwrap().to_string()
    };
    assert_eq!(at("C", "T"), "CT");

    let g1: Value = serde_json::from_str(&stdout(&cptgroup(&["table", "--group", "g1", "--format", "json"]))).unwrap();
    assert_eq!(g1["entries"][4][4], "1");

    let text = stdout(&cptgroup(&["table", "--group", "gtheta"]));
    let header: Vec<&str> = text.lines().next().unwrap().split_whitespace().collect();
    let row_p: Vec<&str> =
        text.lines().find(|l| l.split_whitespace().next() == Some("P")).unwrap().split_whitespace().collect();
    let col_t = header.iter().position(|h| *h == "T").unwrap();
    assert_eq!(row_p[col_t + 1], "P*T");
}

#[test]
fn solve_outputs_closed_forms() {
    let c: Value = serde_json::from_str(&stdout(&cptgroup(&["solve", "--symmetry", "c", "--rep", "dp"]))).unwrap();
    assert_eq!(c["dimension"], 1);
    assert_eq!(c["closed_form_name"], "g2g0");
    assert_eq!(c["representation"], "dirac_pauli");
    let t: Value = serde_json::from_str(&stdout(&cptgroup(&["solve", "--symmetry", "t", "--rep", "dp"]))).unwrap();
    assert_eq!(t["closed_form_name"], "g3g1");
    let p: Value = serde_json::from_str(&stdout(&cptgroup(&["solve", "--symmetry", "p", "--rep", "weyl"]))).unwrap();
    assert_eq!(p["dimension"], 1);
    let basis = &p["basis"][0]["entries"];
    let zero = Value::from(vec!["0", "0", "0", "0"]);
    for i in 0..4 {
        for j in 0..4 {
            let diagonal_block = (i < 2) == (j < 2);
            assert_eq!(basis[i][j] == zero, diagonal_block || (i % 2 != j % 2), "entry {i}{j}");
        }
    }
}

#[test]
fn cycles_listing() {
    let g1 = stdout(&cptgroup(&["cycles", "--group", "g1"]));
    assert!(
        g1.lines()
            .any(|l| l.trim_start().starts_with("theta")
                && l.ends_with("(1 8)(2 14)(3 13)(4 5)(6 10)(7 9)(11 12)(15 16)"))
    );
    let g2 = stdout(&cptgroup(&["cycles", "--group", "g2"]));
    assert!(g2
        .lines()
        .any(|l| l.trim_start().starts_with("-1 ") && l.ends_with("(1 16)(2 9)(3 10)(4 11)(5 12)(6 13)(7 14)(8 15)")));
    let gt = stdout(&cptgroup(&["cycles", "--group", "gtheta"]));
    assert!(gt
        .lines()
        .any(|l| l.trim_start().starts_with("C ") && l.ends_with("(1 2)(3 5)(4 6)(7 8)(9 16)(10 12)(11 13)(14 15)")));
}

#[test]
fn identify_reports_isomorphism_types() {
    let v: Value = serde_json::from_str(&stdout(&cptgroup(&["identify"]))).unwrap();
    let found = |g: usize, target: &str| {
        v[g]["isomorphisms_checked"].as_array().unwrap().iter().any(|c| c["target"] == target && c["found"] == true)
    };
    assert!(found(0, "DH8xZ2") && !found(0, "16E"));
    assert!(found(1, "16E") && !found(1, "DH8xZ2"));
    assert!(found(2, "DC8xZ2") && found(2, "QxS0") && !found(2, "G1") && !found(2, "G2"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(cptgroup(&["table", "--group", "g7"]).status.code(), Some(2));
    assert_eq!(cptgroup(&["solve", "--symmetry", "x"]).status.code(), Some(2));
    assert_eq!(cptgroup(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn every_claim_is_catalogued() {
    let readme = std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/../../README.md")).unwrap();
    let report = cptgroup::report::run_verification(false).unwrap();
    for c in &report.sections {
        let row = format!("| `{}` |", c.claim_id);
        assert_eq!(readme.matches(&row).count(), 1, "{}", c.claim_id);
    }
}
