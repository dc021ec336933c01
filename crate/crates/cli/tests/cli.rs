use std::process::{Command, Output};

fn latcount(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_latcount"))
        .args(args)
        .env_remove("LATCOUNT_TRIAL_DIVISION_BOUND")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn count_single_method() {
    let o = latcount(&["count", "--n", "1", "--m", "12"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "1\n");
    for method in [
        "factorization-sum",
        "recursion",
        "gruber",
        "dirichlet",
        "hnf",
    ] {
        let o = latcount(&["count", "--n", "3", "--m", "4", "--method", method]);
        assert_eq!(stdout(&o), "35\n", "{method}");
    }
}

#[test]
fn invalid_arguments_exit_2() {
    for args in [
        &["count", "--n", "0", "--m", "5"][..],
        &["count", "--n", "2", "--m", "0"],
        &["count", "--n", "2", "--m", "-4"],
        &["count", "--n", "2", "--m", "5", "--method", "bogus"],
        &["euler-factor", "--p", "4", "--n", "2", "--k-max", "1"],
        &["euler-factor", "--p", "1", "--n", "2", "--k-max", "1"],
        &["table", "--n", "2", "--max-m", "0"],
    ] {
        assert_eq!(latcount(args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn capacity_errors_exit_3() {
    let o = latcount(&["enumerate", "--n", "5", "--m", "720720"]);
    assert_eq!(o.status.code(), Some(3));
    assert!(o.stdout.is_empty());

    let o = Command::new(env!("CARGO_BIN_EXE_latcount"))
        .args(["count", "--n", "2", "--m", "143"])
        .env("LATCOUNT_TRIAL_DIVISION_BOUND", "10")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("bound 10"));

    let o = latcount(&[
        "count",
        "--n",
        "2",
        "--m",
        "100000000",
        "--method",
        "dirichlet",
    ]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn enumerate_limit_and_formats() {
    let o = latcount(&["enumerate", "--n", "3", "--m", "2"]);
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines.len(), 8);
    assert_eq!(lines[7], "count: 7");

    let o = latcount(&["enumerate", "--n", "1", "--m", "9"]);
    assert_eq!(stdout(&o), "9\ncount: 1\n");

    let o = latcount(&["enumerate", "--n", "5", "--m", "720720", "--limit", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "1,0,0,0,0;0,1,0,0,0;0,0,1,0,0;0,0,0,1,0;0,0,0,0,720720\n\
         1,0,0,0,0;0,1,0,0,0;0,0,1,0,0;0,0,0,1,0;0,0,0,1,720720\ncount: 2\n"
    );

    let o = latcount(&[
        "enumerate",
        "--n",
        "2",
        "--m",
        "2",
        "--format",
        "json-lines",
    ]);
    assert_eq!(
        stdout(&o),
        "{\"matrix\":\"1,0;0,2\"}\n{\"matrix\":\"1,0;1,2\"}\n{\"matrix\":\"2,0;0,1\"}\n{\"count\":\"3\"}\n"
    );
}

#[test]
fn json_lines_count_records() {
    let o = latcount(&[
        "count",
        "--n",
        "2",
        "--m",
        "6",
        "--all",
        "--format",
        "json-lines",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<&str> = std::str::from_utf8(&o.stdout).unwrap().lines().collect();
    assert_eq!(lines.len(), 5);
    assert_eq!(
        lines[0],
        r#"{"n":2,"m":"6","method":"dirichlet","value":"12"}"#
    );
    for line in lines {
        let v: serde_json::Value = serde_json::from_str(line).unwrap();
        assert_eq!(v["value"], "12");
    }
}

#[test]
fn big_values_are_exact_strings() {
    let o = latcount(&[
        "count",
        "--n",
        "6",
        "--m",
        "1152921504606846976",
        "--format",
        "csv",
    ]);
    // 2^60: [65 choose 60]_2
    let line = stdout(&o);
    let value = line.trim().rsplit(',').next().unwrap();
    assert!(value.len() > 30, "{value}");
    let o2 = latcount(&[
        "count",
        "--n",
        "6",
        "--m",
        "1152921504606846976",
        "--method",
        "recursion",
    ]);
    assert_eq!(stdout(&o2).trim(), value);
}

#[test]
fn count_all_without_enumeration() {
    let o = latcount(&[
        "count",
        "--n",
        "4",
        "--m",
        "12",
        "--all",
        "--no-enumeration",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o),
        "dirichlet: 6200\nfactorization-sum: 6200\ngruber: 6200\nrecursion: 6200\n"
    );
}

#[test]
fn table_examples() {
    let o = latcount(&["table", "--n", "1", "--max-m", "3"]);
    assert_eq!(stdout(&o), "1 1\n2 1\n3 1\n");
    let o = latcount(&["table", "--n", "3", "--max-m", "4", "--format", "csv"]);
    assert_eq!(stdout(&o), "1,1\n2,7\n3,13\n4,35\n");
}

#[test]
fn verify_passes_and_reports_faults() {
    let o = latcount(&["verify", "--n-max", "3", "--m-max", "100", "--t-order", "6"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 7);
    assert!(out.lines().all(|l| l.starts_with("PASS ")));

    let o = latcount(&["verify", "--n-max", "1", "--m-max", "1", "--t-order", "0"]);
    assert_eq!(o.status.code(), Some(0));

    let o = latcount(&[
        "verify",
        "--n-max",
        "2",
        "--m-max",
        "20",
        "--t-order",
        "2",
        "--inject-fault",
        "6",
    ]);
    assert_eq!(o.status.code(), Some(4));
    let out = stdout(&o);
    assert!(out.contains(
        "FAIL cross-method agreement (n<=2, m<=20): counterexample n=1 m=6: dirichlet=1 factorization-sum=1 gruber=2 recursion=1"
    ), "{out}");
}

#[test]
fn series_mismatch_free_and_formats() {
    let o = latcount(&["series", "--n", "3", "--t-order", "1", "--format", "csv"]);
    assert_eq!(
        stdout(&o),
        "lhs,0,1\nlhs,1,1 + q + q^2\nrhs,0,1\nrhs,1,1 + q + q^2\nverdict,match\n"
    );
}
