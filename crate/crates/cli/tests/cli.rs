use std::process::{Command, Output};

use serde_json::Value;

fn goeritz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_goeritz"))
        .args(args)
        .env_remove("GOERITZ_MAX_STEPS")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn braid_equality_of_x_forms() {
    let o = goeritz(&["braid", "eq", "-n", "5", "2 3 2 3 2 3", "3 3 2 3 3 2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "equal");
}

#[test]
fn braid_inequality_exits_one() {
    let o = goeritz(&["braid", "eq", "-n", "3", "1 2", "2 1"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o).trim(), "not equal");
}

#[test]
fn normalize_prints_handle_free_word() {
    let o = goeritz(&["braid", "normalize", "-n", "3", "1 2 -1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "-2 1 2");
    let o = goeritz(&["braid", "normalize", "-n", "3", "1 -1"]);
    assert_eq!(stdout(&o).trim(), "(identity)");
}

#[test]
fn trivial_link_goeritz_member() {
    let o = goeritz(&[
        "goeritz",
        "member",
        "--bridge",
        "3",
        "--top",
        "",
        "--bottom",
        "",
        "--word",
        "3 3 2 3 3 2",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "member");
}

#[test]
fn clasp_is_not_in_standard_wicket_group() {
    let o = goeritz(&["wicket", "member", "-n", "2", "--word", "2 2"]);
    assert_eq!(o.status.code(), Some(1));
    let text = stdout(&o);
    assert!(text.contains("not a member"));
    assert!(text.contains("witness: loop 1 maps to g2 g1^-1 g2^-1 g1"));
}

#[test]
fn pair_membership_accepts_two_tangles() {
    let o = goeritz(&[
        "wicket", "member", "-n", "2", "--word", "1 1", "--tangle", "A", "--tangle", "B",
    ]);
    assert!(matches!(o.status.code(), Some(0) | Some(1)));
    let o = goeritz(&[
        "wicket", "member", "-n", "2", "--word", "", "--tangle", "A", "--tangle", "C",
    ]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn json_round_trips() {
    let o = goeritz(&["wicket", "member", "-n", "2", "--word", "2 2", "--json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"], Value::Bool(false));
    assert_eq!(v["witness"]["image"], "g2 g1^-1 g2^-1 g1");
    assert_eq!(v["strands"], 4);
    let back: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(back, v);

    let o = goeritz(&[
        "braid",
        "eq",
        "-n",
        "5",
        "2 3 2 3 2 3",
        "3 3 2 3 3 2",
        "--json",
    ]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["equal"], Value::Bool(true));
}

#[test]
fn output_is_deterministic() {
    for args in [
        &["sweep", "--family", "unknot", "--from", "2", "--to", "3"][..],
        &["entropy", "-n", "4", "--word", "1 -2 3", "--json"][..],
        &[
            "wicket", "member", "-n", "3", "--word", "2 4 -3 1", "--json",
        ][..],
    ] {
        let a = goeritz(args);
        let b = goeritz(args);
        assert_eq!(a.stdout, b.stdout);
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(goeritz(&["nope"]).status.code(), Some(2));
    assert_eq!(
        goeritz(&["braid", "eq", "-n", "3", "1 9", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        goeritz(&["braid", "eq", "-n", "3", "1 x", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        goeritz(&["wicket", "member", "-n", "2", "--word", "1", "--tangle", "Q"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        goeritz(&["sweep", "--family", "trefoil"]).status.code(),
        Some(2)
    );
}

#[test]
fn step_cap_from_environment_exits_three() {
    let o = Command::new(env!("CARGO_BIN_EXE_goeritz"))
        .args(["braid", "eq", "-n", "3", "1 2 1", "2 1 2"])
        .env("GOERITZ_MAX_STEPS", "0")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("resource exhausted"));
}

#[test]
fn plat_info_of_hopf_plat() {
    let o = goeritz(&["plat", "info", "--bridge", "2", "--bottom", "2 2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "components: 2\nlinking: 1\ncrossings: 2\n");
    let o = goeritz(&["plat", "info", "--bridge", "2", "--bottom", "2 2 2"]);
    assert_eq!(stdout(&o), "components: 1\nlinking: -\ncrossings: 3\n");
}

#[test]
fn constants_report() {
    let o = goeritz(&["constants"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("R(h): 896.19797"));
    assert!(text.contains("ceil R(h): 897"));
    assert!(text.contains("2R+2: 1794.39595"));
    assert!(text.contains("N: 3796"));
    let o = goeritz(&["constants", "--json"]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["r_ceil"].as_f64(), Some(897.0));
    assert_eq!(v["n"].as_f64(), Some(3796.0));
}

#[test]
fn sweep_tsv_layout() {
    let o = goeritz(&[
        "sweep", "--family", "hopf", "--from", "2", "--to", "3", "--tsv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines[0].starts_with("# "));
    assert_eq!(
        lines[1],
        "family\tn\tstrands\tlogLambda\tnormalized\tpennerBound\tconverged"
    );
    assert!(lines[2].starts_with("hopf\t2\t15\t0.382245\t5.73368\t"));
    assert!(lines[3].starts_with("hopf\t3\t19\t"));
    assert!(lines[4].starts_with("# empirical P = "));
}

#[test]
fn entropy_of_golden_braid() {
    let o = goeritz(&["entropy", "-n", "3", "--word", "1 -2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("log lambda: 0.962424"));
    assert!(text.contains("classification: exponential"));
}
