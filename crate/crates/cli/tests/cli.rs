use std::process::{Command, Output};

fn quintrunc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_quintrunc"))
        .args(args)
        .env("RUST_BACKTRACE", "0")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json_lines(out: &Output) -> Vec<serde_json::Value> {
    stdout(out).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

#[test]
fn expand_negative_offset() {
    let out = quintrunc(&["expand", "(q^-1; q^3)_inf", "--N", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["valuation"], -1);
    assert_eq!(v["bound"], 4);
    assert_eq!(v["coeffs"], serde_json::json!(["-1", "1", "1", "-1", "0", "1"]));
}

#[test]
fn expand_euler_product_is_one() {
    let out = quintrunc(&["expand", "(-q; q)_inf * (q; q^2)_inf", "--N", "30"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(v["valuation"], 0);
    let coeffs = v["coeffs"].as_array().unwrap();
    assert_eq!(coeffs.len(), 31);
    assert_eq!(coeffs[0], "1");
    assert!(coeffs[1..].iter().all(|c| c == "0"));
}

#[test]
fn malformed_expression_exits_2() {
    let out = quintrunc(&["expand", "(q;q"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("parse error"));
}

#[test]
fn verify_examples() {
    let out = quintrunc(&["verify", "thm17", "--a=-2", "--b=3", "--N=200"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_lines(&out)[0]["status"], "pass");

    let out = quintrunc(&["verify", "thm13", "--R=2", "--S=1", "--a=0", "--b=1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stdout(&out).is_empty());

    let out = quintrunc(&["verify", "quintuple", "--R=7", "--S=3", "--N=300"]);
    assert_eq!(out.status.code(), Some(0));
    let r = &json_lines(&out)[0];
    assert_eq!(r["status"], "pass");
    assert_eq!(r["first_violation"], serde_json::Value::Null);
}

#[test]
fn check_flag_and_positional_agree() {
    let a = quintrunc(&["verify", "thm14", "--k", "2", "--N", "40"]);
    let b = quintrunc(&["verify", "--check", "thm14", "--k", "2", "--N", "40"]);
    let strip = |o: &Output| {
        let mut v = json_lines(o).remove(0);
        v["elapsed_ms"] = 0.into();
        v
    };
    assert_eq!(strip(&a), strip(&b));
}

#[test]
fn unknown_check_and_missing_params_exit_2() {
    assert_eq!(quintrunc(&["verify", "thm99"]).status.code(), Some(2));
    assert_eq!(quintrunc(&["verify", "thm14"]).status.code(), Some(2));
    assert_eq!(quintrunc(&["verify", "thm12", "--R", "5", "--S", "2", "--k", "0"]).status.code(), Some(2));
}

#[test]
fn large_n_needs_opt_in() {
    assert_eq!(quintrunc(&["verify", "thm14", "--k", "0", "--N", "1001"]).status.code(), Some(2));
    let out = quintrunc(&["verify", "thm14", "--k", "0", "--N", "1001", "--allow-large-n"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn scan_is_ordered_and_deterministic() {
    let args = ["scan", "thm13", "--R", "3..5", "--S", "1,2", "--a", "-2..0", "--b", "0..1", "--N", "60"];
    let one = quintrunc(&[&args[..], &["--jobs", "1"]].concat());
    let four = quintrunc(&[&args[..], &["--jobs", "4"]].concat());
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(one.stdout, four.stdout);

    let lines = json_lines(&one);
    let (reports, summary) = lines.split_at(lines.len() - 1);
    assert_eq!(reports.len(), 3 * 2 * 3 * 2);
    let keys: Vec<(i64, i64, i64, i64)> = reports
        .iter()
        .map(|r| {
            let p = &r["params"];
            (p["R"].as_i64().unwrap(), p["S"].as_i64().unwrap(), p["a"].as_i64().unwrap(), p["b"].as_i64().unwrap())
        })
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
    // S = 2 is inadmissible for R = 3 and R = 4
    let skipped = reports.iter().filter(|r| r["status"] == "skipped").count();
    assert_eq!(skipped, 12);
    assert_eq!(summary[0]["summary"]["skipped"], 12);
    assert_eq!(summary[0]["summary"]["pass"], 24);
    assert_eq!(summary[0]["summary"]["fail"], 0);
}

#[test]
fn empty_grid_is_not_an_error() {
    let out = quintrunc(&["scan", "thm13", "--R", "5..3", "--S", "1", "--a", "0", "--b", "0"]);
    assert_eq!(out.status.code(), Some(0));
    let lines = json_lines(&out);
    assert_eq!(lines.len(), 1);
    assert_eq!(lines[0]["summary"]["total"], 0);
}

#[test]
fn lemma21_scan_over_seeds() {
    let out = quintrunc(&["scan", "lemma21", "--seed", "0..499", "--K", "1..4"]);
    assert_eq!(out.status.code(), Some(0));
    let lines = json_lines(&out);
    assert_eq!(lines.last().unwrap()["summary"]["pass"], 2000);
}

#[test]
fn part_sign_scan() {
    let out = quintrunc(&["scan", "partsign", "--part", "A,B,A1,A2,A3,C,D,C1,C2,C3,C4", "--k", "1..3", "--N", "60"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json_lines(&out).last().unwrap()["summary"]["pass"], 33);
}

#[test]
fn oracle_csv() {
    let out = quintrunc(&["oracle", "--N", "3"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "n,p,op,ppp\n0,1,1,1\n1,1,2,5\n2,2,4,18\n3,3,8,55\n");
}

#[test]
fn out_writes_to_file() {
    let dir = std::env::temp_dir().join(format!("quintrunc-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.json");
    let out = quintrunc(&["verify", "thm15", "--k", "1", "--N", "50", "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    let v: serde_json::Value = serde_json::from_str(written.trim()).unwrap();
    assert_eq!(v["check"], "thm15");
    assert_eq!(v["status"], "pass");
    std::fs::remove_dir_all(&dir).unwrap();
}
