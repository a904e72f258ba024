use std::process::{Command, Output};

fn pqml(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pqml")).args(args).env_remove("PQML_REL_TOL").output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn eval_prints_e() {
    let o =
        pqml(&["eval", "--alpha", "1", "--beta", "1", "--gamma", "1", "--c", "2", "--p", "0", "--q", "0", "--z", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("2.718281828459045 "), "{}", stdout(&o));
}

#[test]
fn beta_prints_one_sixth() {
    let o = pqml(&["beta", "--x", "2", "--y", "2", "--p", "0", "--q", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("0.166666666666667 "));
}

#[test]
fn table_has_41_rows_and_fixed_columns() {
    let o = pqml(&[
        "table", "--alpha", "0.8", "--beta", "1", "--gamma", "1.2", "--c", "2.5", "--p", "0.3", "--q", "0.6",
        "--z-from", "-1", "--z-to", "1", "--steps", "41",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(!text.contains('\r'));
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "z,value,abs_err_est,terms");
    assert_eq!(lines.len(), 42);
    for l in &lines[1..] {
        let cols: Vec<&str> = l.split(',').collect();
        assert_eq!(cols.len(), 4);
        cols[1].parse::<f64>().unwrap();
    }
}

#[test]
fn csv_values_round_trip() {
    let o = pqml(&[
        "eval", "--alpha", "0.8", "--beta", "1.3", "--gamma", "1.2", "--c", "2.5", "--p", "0.3", "--z", "0.1,0.7",
        "--output", "csv",
    ]);
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("z,value,abs_err_est,terms,status"));
    let plain = pqml(&[
        "eval",
        "--alpha",
        "0.8",
        "--beta",
        "1.3",
        "--gamma",
        "1.2",
        "--c",
        "2.5",
        "--p",
        "0.3",
        "--z",
        "0.7",
        "--output",
        "structured",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&plain)).unwrap();
    let csv_value: f64 = lines.nth(1).unwrap().split(',').nth(1).unwrap().parse().unwrap();
    assert_eq!(v[0]["value"].as_f64().unwrap().to_bits(), csv_value.to_bits());
}

#[test]
fn other_subcommands() {
    let o = pqml(&["wright", "--upper", "1,1", "--lower", "1,1", "--z", "2"]);
    assert!(stdout(&o).starts_with("7.38905609893"));
    let o = pqml(&[
        "mellin", "--alpha", "1", "--beta", "1", "--gamma", "1.2", "--c", "2.5", "--s", "1.5", "--r", "2", "--z", "0.5",
    ]);
    assert!(stdout(&o).starts_with("0.0846425984646"), "{}", stdout(&o));
    let o = pqml(&["fracderiv", "--integrand", "monomial", "--a", "2", "--lambda", "-0.5", "--x", "1"]);
    assert!(stdout(&o).starts_with("0.60180222245"), "{}", stdout(&o));
    let o = pqml(&[
        "fracderiv",
        "--delta",
        "1.2",
        "--lambda",
        "2.5",
        "--beta",
        "1.5",
        "--p",
        "0.3",
        "--q",
        "0.7",
        "--z",
        "0.8",
        "--output",
        "csv",
    ]);
    assert_eq!(stdout(&o).lines().next(), Some("z,delta,lambda,lhs,rhs,rel_gap"));
}

#[test]
fn argument_errors_exit_2() {
    for args in [
        &["eval", "--alpha", "1"][..],
        &["frobnicate"],
        &["eval", "--alpha", "-1", "--beta", "1", "--gamma", "1", "--c", "2", "--z", "1"],
        &["beta", "--x", "2", "--y", "2", "--p", "-0.5"],
        &["fracderiv", "--integrand", "cosine", "--lambda", "-0.5"],
        &["verify", "--config", "/definitely/missing.toml"],
        &["verify", "--identity", "no-such-identity"],
    ] {
        let o = pqml(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn env_tolerance_is_read_and_validated() {
    let run = |tol: &str| {
        Command::new(env!("CARGO_BIN_EXE_pqml"))
            .args(["beta", "--x", "1.5", "--y", "2.5", "--p", "0.3", "--q", "0.8", "--output", "structured"])
            .env("PQML_REL_TOL", tol)
            .output()
            .unwrap()
    };
    let loose = run("1e-4");
    let tight = run("1e-12");
    let effort =
        |o: &Output| serde_json::from_slice::<serde_json::Value>(&o.stdout).unwrap()[0]["effort"].as_u64().unwrap();
    assert!(effort(&loose) < effort(&tight));
    assert_eq!(run("lots").status.code(), Some(2));
}

#[test]
fn verify_config_handling_and_exit_status() {
    let dir = tempfile::tempdir().unwrap();
    let empty = dir.path().join("empty.toml");
    std::fs::write(&empty, "").unwrap();
    let report = dir.path().join("report.json");
    let o = pqml(&[
        "verify",
        "--config",
        empty.to_str().unwrap(),
        "--identity",
        "wright-exponential",
        "--report",
        report.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let json: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    let rec = &json.as_array().unwrap()[0];
    for key in ["identity_id", "grid_size", "max_rel_err", "median_rel_err", "tolerance", "pass", "notes"] {
        assert!(rec.get(key).is_some(), "{key}");
    }
    assert_eq!(json.as_array().unwrap().len(), 1);

    // an unattainable tolerance on a corrected identity fails the run
    let strict = dir.path().join("strict.toml");
    std::fs::write(&strict, "identities = [\"wright-exponential\"]\n[tolerances]\nwright_exponential = 1e-30\n")
        .unwrap();
    assert_eq!(pqml(&["verify", "--config", strict.to_str().unwrap()]).status.code(), Some(1));

    // informational variants never fail the run
    let printed = dir.path().join("printed.toml");
    std::fs::write(&printed, "identities = [\"derivative-shift-as-printed\"]\n").unwrap();
    let o = pqml(&["verify", "--config", printed.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("differs (informational)"));

    let bad = dir.path().join("bad.toml");
    std::fs::write(&bad, "[grid]\nalpha = \"one\"\n").unwrap();
    let o = pqml(&["verify", "--config", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("alpha"), "{err}");
}
