use std::process::{Command, Output};


fn vircalc(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_vircalc"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8").trim_end().to_string()
}

fn ok(args: &[&str]) -> String {
    let out = vircalc(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    stdout(&out)
}

#[test]
fn documented_examples() {
    assert_eq!(
        ok(&["canon", "--b", "0", "--h", "t", "--f", "s*t^2 + t^3"]),
        r#"{"variant":"B0_SsF","F":"t^2"}"#
    );
    assert_eq!(ok(&["irreducible", "--b", "-1", "--alpha", "1", "--h", "t"]), "true");
    assert_eq!(ok(&["irreducible", "--b", "-1", "--alpha", "1", "--h", "t^2"]), "false");
}

#[test]
fn exit_codes() {
    assert_eq!(vircalc(&["canon", "--h", "t"]).status.code(), Some(2));
    assert_eq!(vircalc(&["canon", "--h", "t", "--f", "(t-1)^2"]).status.code(), Some(2));
    assert_eq!(vircalc(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(vircalc(&["selftest", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(vircalc(&["tensor-act", "--slot", "1,1,t", "--slot", "1,1,t", "--m", "1", "--f", "1"]).status.code(), Some(2));
    let anomaly = vircalc(&["maximal-psi", "--b", "-1", "--alpha", "1", "--h", "t^2", "--f", "1"]);
    assert_eq!(anomaly.status.code(), Some(1));
    assert!(stdout(&anomaly).starts_with("violation"));
    let fine = vircalc(&["bracket-check", "--b", "2", "--alpha", "1", "--h", "t^2", "--n", "-1", "--m", "2", "--f", "s*t"]);
    assert_eq!(fine.status.code(), Some(0));
}

#[test]
fn selftest_exit_codes() {
    assert_eq!(vircalc(&["selftest", "--suite", "specialization"]).status.code(), Some(0));
    assert_eq!(vircalc(&["selftest", "--suite", "brackets", "--inject-fault"]).status.code(), Some(1));
}
