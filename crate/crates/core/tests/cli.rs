//! End-to-end tests of the gwlocal binary: exit codes, output formats, and
//! byte-determinism across runs and thread settings.

use std::process::{Command, Output};

fn gwlocal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gwlocal"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

#[test]
fn invariants_csv_has_exact_rationals() {
    let out = gwlocal(&[
        "invariants",
        "--geometry",
        "P3/O(-1,-3)",
        "--max-degree",
        "3",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("# geometry=P3/O(-1,-3) kind=genus1_gw"));
    assert!(text.contains("d,value,integral"));
    assert!(text.contains("1,3/8,false"));
    assert!(text.contains("2,153/16,false"));
    assert!(text.contains("3,1713/8,false"));
}

#[test]
fn invariants_kp4_degree_one() {
    let out = gwlocal(&[
        "invariants",
        "--geometry",
        "kp4",
        "--max-degree",
        "1",
        "--kind",
        "genus1",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("1,1515/8,false"));
}

#[test]
fn invalid_geometry_exits_2_citing_the_constraint() {
    let out = gwlocal(&["invariants", "--geometry", "P3/O(-1,-2)"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(
        err.contains("Calabi-Yau condition violated"),
        "stderr: {err}"
    );
}

#[test]
fn genus0_request_on_unsupported_geometry_exits_3() {
    let out = gwlocal(&["invariants", "--geometry", "kp2", "--kind", "genus0"]);
    assert_eq!(out.status.code(), Some(3));
    // but the default kind still works there (genus-1 only)
    let out = gwlocal(&["invariants", "--geometry", "kp2", "--max-degree", "2"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("genus1_gw"));
}

#[test]
fn bps_tables_match_published_rows() {
    let out = gwlocal(&[
        "bps",
        "--geometry",
        "P3/O(-1,-3)",
        "--max-degree",
        "4",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    for row in ["1,2,true", "2,7,true", "3,62,true", "4,720,true"] {
        assert!(text.contains(row), "missing onepoint row {row} in:\n{text}");
    }
    for row in ["1,5,true", "2,53,true", "3,888,true", "4,16578,true"] {
        assert!(text.contains(row), "missing twopoint row {row} in:\n{text}");
    }
}

#[test]
fn bps_o2x2_onepoint_column() {
    let out = gwlocal(&[
        "bps",
        "--geometry",
        "P3/O(-2,-2)",
        "--max-degree",
        "5",
        "--format",
        "csv",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    for row in [
        "1,1,true",
        "2,2,true",
        "3,11,true",
        "4,76,true",
        "5,635,true",
    ] {
        assert!(text.contains(row), "missing row {row} in:\n{text}");
    }
}

#[test]
fn bps_unsupported_geometry_exits_3() {
    let out = gwlocal(&["bps", "--geometry", "o1cubed_p2"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn bps_json_schema_and_divisibility() {
    let out = gwlocal(&[
        "bps",
        "--geometry",
        "kp4",
        "--max-degree",
        "2",
        "--moduli",
        "5",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    let tables = parsed.as_array().expect("array of tables");
    assert_eq!(tables.len(), 2);
    for t in tables {
        assert_eq!(t["geometry"], "P4/O(-5)");
        assert!(t["kind"].as_str().unwrap().starts_with("bps0_"));
        assert_eq!(t["degrees"], serde_json::json!([1, 2]));
        assert!(t["values"]
            .as_array()
            .unwrap()
            .iter()
            .all(|v| v.is_string()));
        assert!(t["integral"]
            .as_array()
            .unwrap()
            .iter()
            .all(|b| b.as_bool() == Some(true)));
        assert_eq!(t["divisible"]["5"], serde_json::json!([true, true]));
    }
    let one = tables
        .iter()
        .find(|t| t["kind"] == "bps0_onepoint")
        .unwrap();
    assert_eq!(one["values"], serde_json::json!(["130", "-58345"]));
}

#[test]
fn verify_subset_lemma72() {
    let out = gwlocal(&["verify", "--only", "lemma72", "--max", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("PASS lemma72 [d=1] (4 = 4)"));
    assert!(text.contains("PASS lemma72 [d=2] (16 = 16)"));
}

#[test]
fn verify_json_report_shape() {
    let out = gwlocal(&[
        "verify",
        "--only",
        "localization",
        "--max",
        "4",
        "--seeds",
        "2",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).expect("valid json");
    let checks = parsed.as_array().unwrap();
    assert!(!checks.is_empty());
    for c in checks {
        assert_eq!(c["name"], "degree_one_localization");
        assert_eq!(c["passed"], true);
        assert!(c["lhs"].is_string() && c["rhs"].is_string());
    }
}

#[test]
fn reproduce_full_and_filtered() {
    let out = gwlocal(&["reproduce"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.contains("120 derivable cells checked, 0 mismatches"));
    assert!(text.contains("reference-only"));

    let out = gwlocal(&["reproduce", "--geometry", "P3/O(-2,-2)"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("40 derivable cells checked"));

    let out = gwlocal(&["reproduce", "--geometry", "kp2"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn output_is_byte_identical_across_runs_and_thread_counts() {
    let args = [
        "bps",
        "--geometry",
        "P3/O(-1,-3)",
        "--max-degree",
        "8",
        "--format",
        "json",
    ];
    let a = gwlocal(&args);
    let b = gwlocal(&args);
    assert_eq!(a.stdout, b.stdout);
    let single = Command::new(env!("CARGO_BIN_EXE_gwlocal"))
        .args(args)
        .env("GWLOCAL_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(a.stdout, single.stdout);
    // the verify report is also canonical under thread settings
    let verify_args = ["verify", "--only", "prop66", "--max", "6"];
    let v1 = gwlocal(&verify_args);
    let v2 = Command::new(env!("CARGO_BIN_EXE_gwlocal"))
        .args(verify_args)
        .env("GWLOCAL_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(v1.stdout, v2.stdout);
}
