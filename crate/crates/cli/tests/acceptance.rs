//! Acceptance run: one line per criterion, non-zero exit if any is red.
//!
//! Criteria 1-10 come from a single `vircalc --json selftest` run, so the
//! same process also exercises the aggregation checked by criterion 11.

use std::process::{Command, ExitCode};
use std::time::Instant;

use serde_json::Value;
use vircalc::BiPoly;
use vircalc_cli::random;

fn limit_secs(criterion: u64) -> Option<f64> {
    match criterion {
        1 => Some(60.0),
        2 => Some(30.0),
        4 | 8 => Some(120.0),
        10 => Some(60.0),
        _ => None,
    }
}

struct Line {
    criterion: u64,
    passed: bool,
    summary: String,
    details: Vec<String>,
}

fn vircalc(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_vircalc"))
        .args(args)
        .output()
        .expect("the vircalc binary runs")
}

fn suite_line(report: &Value) -> Line {
    let criterion = report["criterion"].as_u64().unwrap_or(0);
    let secs = report["elapsed_ms"].as_f64().unwrap_or(f64::INFINITY) / 1000.0;
    let limit = limit_secs(criterion);
    let in_time = limit.map_or(true, |l| secs < l);
    let passed = report["passed"] == Value::Bool(true) && in_time;
    let mut details = Vec::new();
    if !in_time {
        details.push(format!("runtime {secs:.1} s exceeds {:.0} s", limit.unwrap_or(0.0)));
    }
    for check in report["checks"].as_array().into_iter().flatten() {
        let failures = check["failures"].as_u64().unwrap_or(0);
        let cases = check["cases"].as_u64().unwrap_or(0);
        if failures > 0 || cases == 0 {
            details.push(format!("{}: {failures}/{cases} failed", check["name"].as_str().unwrap_or("?")));
            for e in check["examples"].as_array().into_iter().flatten().take(3) {
                details.push(format!("  {}", e.as_str().unwrap_or("?")));
            }
        }
    }
    Line {
        criterion,
        passed,
        summary: format!(
            "{}: {} cases, {} failures, {secs:.1} s{}",
            report["name"].as_str().unwrap_or("?"),
            report["cases"],
            report["failures"],
            limit.map_or(String::new(), |l| format!(" (limit {l:.0} s)"))
        ),
        details,
    }
}

fn criterion_11(selftest_code: Option<i32>, red_suites: &[u64]) -> Line {
    let mut details = Vec::new();
    let mut rng = random::rng(random::env_seed(), 11);
    let mut round_trip_failures = 0;
    for _ in 0..1000 {
        let p = random::bipoly_wide(&mut rng);
        if p.to_string().parse::<BiPoly>().ok() != Some(p.clone()) {
            round_trip_failures += 1;
            if details.len() < 3 {
                details.push(format!("round trip failed for {p}"));
            }
        }
    }
    if selftest_code != Some(0) {
        details.push(format!(
            "selftest exit code {selftest_code:?}, because suites {red_suites:?} are red"
        ));
    }
    let fault = vircalc(&["selftest", "--suite", "brackets", "--inject-fault"]).status.code();
    if fault != Some(1) {
        details.push(format!("fault injection gave exit code {fault:?}, expected 1"));
    }
    Line {
        criterion: 11,
        passed: round_trip_failures == 0 && selftest_code == Some(0) && fault == Some(1),
        summary: format!(
            "cli: 1000 round trips ({round_trip_failures} failures), selftest exit {}, injected fault exit {}",
            selftest_code.map_or("none".into(), |c| c.to_string()),
            fault.map_or("none".into(), |c| c.to_string())
        ),
        details,
    }
}

fn main() -> ExitCode {
    let start = Instant::now();
    let out = vircalc(&["--json", "selftest"]);
    let reports: Vec<Value> = match serde_json::from_slice::<Value>(&out.stdout) {
        Ok(Value::Array(items)) => items,
        _ => {
            eprintln!("selftest produced no report: {}", String::from_utf8_lossy(&out.stderr));
            Vec::new()
        }
    };
    let mut lines: Vec<Line> = (1..=10)
        .map(|c| match reports.iter().find(|r| r["criterion"].as_u64() == Some(c)) {
            Some(r) => suite_line(r),
            None => Line {
                criterion: c,
                passed: false,
                summary: "no report".into(),
                details: Vec::new(),
            },
        })
        .collect();
    let red: Vec<u64> = lines.iter().filter(|l| !l.passed).map(|l| l.criterion).collect();
    lines.push(criterion_11(out.status.code(), &red));

    for l in &lines {
        println!("criterion {:>2}  {}  {}", l.criterion, if l.passed { "PASS" } else { "FAIL" }, l.summary);
    }
    let failed: Vec<&Line> = lines.iter().filter(|l| !l.passed).collect();
    for l in &failed {
        println!("\ncriterion {} details:", l.criterion);
        for d in &l.details {
            println!("  {d}");
        }
    }
    println!(
        "\nacceptance: {}/{} criteria pass ({:.1} s)",
        lines.len() - failed.len(),
        lines.len(),
        start.elapsed().as_secs_f64()
    );
    if failed.is_empty() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
