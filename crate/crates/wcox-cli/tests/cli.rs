//! End-to-end checks of the binary: exit statuses, JSON shape, element
//! echoing and config validation messages.

use std::process::Command;

fn wcox(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_wcox"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

const CASE2: [&str; 12] = [
    "--m-sr", "0", "--m-st", "0", "--m-rt", "2", "--w-r", "1", "--w-s", "5", "--w-t", "2",
];

#[test]
fn bound_reports_n() {
    let (code, stdout, _) = wcox(&[&["bound"], &CASE2[..]].concat());
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["bound"]["n"], 5);
    assert_eq!(v["bound"]["m_set"][0], "s");
}

#[test]
fn mult_echoes_canonical_elements() {
    let mut args = vec!["mult", "tst", "s"];
    let case5 = [
        "--m-sr", "8", "--m-st", "3", "--m-rt", "2", "--w-r", "2", "--w-s", "1", "--w-t", "1",
    ];
    args.extend_from_slice(&case5);
    let (code, stdout, _) = wcox(&args);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    // "tst" normalizes to "sts"; the ascent product is a single basis term
    assert_eq!(v["x"], "sts");
    assert_eq!(v["group_product"], "st");
}

#[test]
fn classify_affine_special() {
    let (code, stdout, _) = wcox(&[
        "classify", "--m-sr", "6", "--m-st", "3", "--m-rt", "2", "--w-r", "1", "--w-s", "1",
        "--w-t", "1",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["case"]["kind"], "AFFINE_SPECIAL");
    assert!(v["case"]["detail"].as_str().unwrap().contains("G~2"));
}

#[test]
fn invalid_config_exits_2_naming_the_bond() {
    let (code, _, stderr) = wcox(&[
        "bound", "--m-sr", "5", "--m-st", "4", "--m-rt", "2", "--w-r", "1", "--w-s", "2", "--w-t",
        "3",
    ]);
    assert_eq!(code, 2);
    assert!(stderr.contains("m_sr=5"), "{stderr}");
}

#[test]
fn malformed_element_exits_2() {
    let mut args = vec!["f", "sq", "s", "s"];
    args.extend_from_slice(&CASE2);
    let (code, _, stderr) = wcox(&args);
    assert_eq!(code, 2);
    assert!(stderr.contains("unknown generator"), "{stderr}");
}

#[test]
fn verify_small_ball_exits_0() {
    let mut args = vec!["verify", "--max-len", "3"];
    args.extend_from_slice(&CASE2);
    let (code, stdout, _) = wcox(&args);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["schema"], "wcox/verify/1");
}

#[test]
fn lemmas_unknown_section_exits_2() {
    let mut args = vec!["lemmas", "7"];
    args.extend_from_slice(&CASE2);
    let (code, _, _) = wcox(&args);
    assert_eq!(code, 2);
}

#[test]
fn lemmas_case4_exit_0() {
    let args = [
        "lemmas",
        "5",
        "--max-len",
        "4",
        "--m-sr",
        "5",
        "--m-st",
        "4",
        "--m-rt",
        "2",
        "--w-r",
        "2",
        "--w-s",
        "2",
        "--w-t",
        "1",
    ];
    let (code, stdout, _) = wcox(&args);
    assert_eq!(code, 0, "{stdout}");
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    let suites: Vec<&str> = v["suites"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["suite"].as_str().unwrap())
        .collect();
    assert!(suites.contains(&"L5.1"));
    assert!(suites.contains(&"L5.6"));
    assert!(suites.iter().all(|s| s.starts_with("L5")));
}

#[test]
fn campaign_custom_battery_roundtrip() {
    let dir = std::env::temp_dir().join(format!("wcox-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let config = dir.join("battery.json");
    let report = dir.join("report.json");
    std::fs::write(
        &config,
        r#"{"battery": [{
            "bonds": {"m_sr": 0, "m_st": 0, "m_rt": 2},
            "weights": {"r": 1, "s": 5, "t": 2},
            "radii": {"verify_x": 3, "verify_y": 3, "word_ball": 3,
                      "hecke_ball": 3, "lambda_ball": 2, "witness_ball": 3}
        }]}"#,
    )
    .unwrap();
    let (code, stdout, _) = wcox(&[
        "campaign",
        "--config",
        config.to_str().unwrap(),
        "--out",
        report.to_str().unwrap(),
        "--threads",
        "1",
    ]);
    assert_eq!(code, 0, "{stdout}");
    assert!(stdout.contains("1 configs, 1 passed, 0 failed"), "{stdout}");
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    assert_eq!(v["schema"], "wcox/campaign/1");
    assert_eq!(v["pass"], true);
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn cells_writes_edge_list() {
    let dir = std::env::temp_dir().join(format!("wcox-edges-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let edges = dir.join("edges.txt");
    let mut args = vec![
        "cells",
        "--max-len",
        "2",
        "--edges",
        edges.to_str().unwrap(),
    ];
    let a3 = [
        "--m-sr", "3", "--m-st", "3", "--m-rt", "2", "--w-r", "1", "--w-s", "1", "--w-t", "1",
    ];
    args.extend_from_slice(&a3);
    let (code, stdout, _) = wcox(&args);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&stdout).unwrap();
    assert_eq!(v["schema"], "wcox/cellgraph/1");
    let text = std::fs::read_to_string(&edges).unwrap();
    for line in text.lines() {
        let parts: Vec<&str> = line.split(' ').collect();
        assert_eq!(parts.len(), 3);
        assert!(["L", "R", "LR"].contains(&parts[2]));
    }
    std::fs::remove_dir_all(&dir).ok();
}
