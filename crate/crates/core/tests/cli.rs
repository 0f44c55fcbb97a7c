//! End-to-end runs of the command line front end.

use std::process::Command;

use serde_json::Value;

fn go(args: &[&str]) -> g2hopf::cli::Output {
    g2hopf::cli::run(std::iter::once("g2hopf").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let out = go(&[&["--json"], args].concat());
    serde_json::from_str(&out.stdout).unwrap_or_else(|e| panic!("{args:?}: {e}\n{}", out.stdout))
}

#[test]
fn kernel_commands() {
    assert_eq!(go(&["dims"]).stdout, "1 2 4 7 12 19 29 42 60\n");
    assert_eq!(
        go(&["mul", "e1", "e2"]).stdout,
        go(&["normalize", "e1*e2"]).stdout
    );
    let conf = json(&["confluence"]);
    assert_eq!(conf["confluent"], true);
    let x5x2 = go(&["normalize", "X5*X2"]);
    assert_eq!(x5x2.code, 0);
    assert!(x5x2.stdout.contains("X2*X5"), "{}", x5x2.stdout);
}

#[test]
fn checks_report_through_exit_codes() {
    assert_eq!(go(&["check-hopf-axioms", "--max-degree", "2"]).code, 0);
    assert_eq!(
        go(&[
            "check-hopf-axioms",
            "--max-degree",
            "1",
            "--antipode",
            "printed"
        ])
        .code,
        1
    );
    assert_eq!(go(&["solve-constraints"]).code, 0);
    let good =
        r#"{"sigma":[1,2],"lambda":["l1","l2"],"gamma":["g1","g2"],"exp1":[-3,1],"exp2":[3,0]}"#;
    let bad =
        r#"{"sigma":[1,2],"lambda":["l1","l2"],"gamma":["g1","g2"],"exp1":[1,0],"exp2":[0,0]}"#;
    assert_eq!(go(&["check-endo", good]).code, 0);
    assert_eq!(go(&["check-endo", bad]).code, 1);
    assert_eq!(go(&["check-hopf-aut", good]).code, 1);
    let identity =
        r#"{"sigma":[1,2],"lambda":["1","1"],"gamma":["g1","g2"],"exp1":[0,0],"exp2":[0,0]}"#;
    assert_eq!(go(&["check-hopf-aut", identity]).code, 0);
    assert_eq!(go(&["gl-perm-check", "[[2,0],[0,1]]"]).code, 1);
}

#[test]
fn binary_runs() {
    let out = Command::new(env!("CARGO_BIN_EXE_g2hopf"))
        .args(["counit", "2*k1 + e2"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout), "2\n");
    let bad = Command::new(env!("CARGO_BIN_EXE_g2hopf"))
        .arg("normalize")
        .arg("e1 +")
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(2));
}
