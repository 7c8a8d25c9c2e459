use std::process::{Command, Output};

fn fsind(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fsind"))
        .args(args)
        .env_remove("FSIND_CONFIG")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn census_text() {
    let o = fsind(&["census", "--l", "3", "--n", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "34,20\n");
}

#[test]
fn census_formats() {
    let o = fsind(&["census", "--l", "2", "--n", "4", "--csv"]);
    assert_eq!(stdout(&o), "l,n,total,null\n2,4,7,2\n");
    let o = fsind(&["census", "--l", "2", "--n", "4", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["total"], 7);
    assert_eq!(v["null"], 2);
}

#[test]
fn indicators_json_and_csv_agree() {
    let args = ["indicators", "--G", "sym:6", "--H", "alt:6", "--m", "2"];
    let text = fsind(&args);
    assert_eq!(text.status.code(), Some(0));
    assert!(stdout(&text).contains("summary 0:2 1:12"));
    assert!(!stdout(&text).contains("-1"));

    let json = fsind(&[&args[..], &["--json"]].concat());
    let v: serde_json::Value = serde_json::from_str(&stdout(&json)).unwrap();
    let entries = v["entries"].as_array().unwrap();
    assert_eq!(v["category"]["G_spec"], "sym:6");
    assert_eq!(v["category"]["H_spec"], "alt:6");
    assert_eq!(v["m"], 2);

    let csv = fsind(&[&args[..], &["--csv"]].concat());
    let csv = stdout(&csv);
    assert_eq!(csv.lines().next(), Some("rep,stab_order,chi_degree,nu"));
    assert_eq!(csv.lines().count(), entries.len() + 1);
}

#[test]
fn output_is_reproducible() {
    let args = ["indicators", "--G", "sym:6", "--H", "cyclic:6", "--json"];
    let a = fsind(&args);
    let b = fsind(&args);
    let c = fsind(&[&args[..], &["--seed", "77", "--threads", "1"]].concat());
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(a.stdout, c.stdout);
    let args = ["verify-all", "--profile", "quick", "--json"];
    assert_eq!(fsind(&args).stdout, fsind(&args).stdout);
}

#[test]
fn example_minus_one() {
    let o = fsind(&["example", "--id", "ex-minus-one"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("g = (1,2,7,8)(3,11,9,5)(4,12,10,6)"));
    assert!(s.contains("|S(g)| = 2"));
    assert!(s.contains("chi_1 = [1, -1]: nu_2 = -1"));
}

#[test]
fn example_nu_p() {
    let o = fsind(&["example", "--id", "ex-nu-p"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("vanishing witness for m = 7: false"));
    assert_eq!(s.matches("nu_7 = 0").count(), 5);
}

#[test]
fn double_cosets_formats() {
    let o = fsind(&["double-cosets", "--G", "sym:5", "--H", "sym-embed:3,5", "--csv"]);
    let s = stdout(&o);
    assert_eq!(s.lines().next(), Some("representative,size,stabilizer_order"));
    assert_eq!(s.lines().count(), 8);
    let o = fsind(&["double-cosets", "--G", "sym:5", "--H", "sym-embed:3,5", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let total: u64 = v.as_array().unwrap().iter().map(|r| r["size"].as_u64().unwrap()).sum();
    assert_eq!(total, 120);
}

#[test]
fn verify_pass_and_fail_exit_codes() {
    let o = fsind(&["verify", "--claim", "thm-An", "--n", "6"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("pass"));

    let o = fsind(&["verify", "--claim", "thm-tilde", "--n", "4", "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["status"], "fail");
    assert!(!v[0]["evidence"]["offending"].as_array().unwrap().is_empty());
}

#[test]
fn bound_exceeded_reports_skip() {
    let o = fsind(&[
        "verify",
        "--claim",
        "thm-Cn",
        "--n",
        "7",
        "--index-bound",
        "100",
        "--json",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v[0]["status"], "skipped");
    assert!(v[0]["bound"].as_str().unwrap().contains("100"));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["census", "--l", "3"][..],
        &["indicators", "--G", "sim:6", "--H", "alt:6"],
        &["indicators", "--G", "alt:5", "--H", "sym:5"],
        &["verify", "--claim", "no-such-claim"],
        &["verify-all", "--profile", "huge"],
        &["example", "--id", "ex-other"],
        &["census", "--l", "3", "--n", "6", "--json", "--csv"],
    ] {
        let o = fsind(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn bound_error_names_the_limit() {
    let o = fsind(&[
        "double-cosets",
        "--G",
        "sym:9",
        "--H",
        "cyclic:9",
        "--index-bound",
        "1000",
    ]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("1000"), "{err}");
}

#[test]
fn config_file_and_flag_precedence() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("fsind.toml");
    std::fs::write(&cfg, "index_bound = 10\nseed = 3\n").unwrap();
    let args = ["double-cosets", "--G", "sym:5", "--H", "sym-embed:3,5"];

    let o = Command::new(env!("CARGO_BIN_EXE_fsind"))
        .args(args)
        .env("FSIND_CONFIG", &cfg)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(2));

    let o = Command::new(env!("CARGO_BIN_EXE_fsind"))
        .args(args)
        .args(["--index-bound", "1000"])
        .env("FSIND_CONFIG", &cfg)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));

    let o = fsind(&[&args[..], &["--config", cfg.to_str().unwrap()]].concat());
    assert_eq!(o.status.code(), Some(2));

    std::fs::write(&cfg, "unknown_key = 1\n").unwrap();
    let o = fsind(&[&args[..], &["--config", cfg.to_str().unwrap()]].concat());
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("census.csv");
    let o = fsind(&[
        "census",
        "--l",
        "3",
        "--n",
        "6",
        "--csv",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(path).unwrap(), "l,n,total,null\n3,6,34,20\n");
}
