use std::process::Command;

use thl_cli::{emit_machine, parse_config, parse_machine, run, CliError, Format, JobConfig};

const EXPLICIT: &str = include_str!("data/trunc_poly_z2.toml");

fn thl(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_thl")).args(args).output().unwrap()
}

#[test]
fn explicit_config_matches_builtin_fixture() {
    let explicit = parse_config(EXPLICIT).unwrap();
    let builtin = JobConfig::from_fixture("trunc-poly-z2").unwrap();
    assert_eq!(explicit.name, "explicit-z2");
    assert_eq!(explicit.twist.as_deref(), Some("s"));
    let a = run("hc-coinv", &explicit).unwrap();
    let b = run("hc-coinv", &builtin).unwrap();
    assert_eq!(a.table("HC(A⋊G) coinvariant"), vec![2, 1, 2, 1]);
    assert_eq!(a.table("HC(A⋊G) coinvariant"), b.table("HC(A⋊G) coinvariant"));
    assert_eq!(run("hc-twisted", &explicit).unwrap().table("HC^s"), vec![1, 1, 1, 1]);
}

#[test]
fn fixture_config_and_task_overrides() {
    let job = parse_config("fixture = \"diag3-s3\"\n[task]\nmax_degree = 1\nformat = \"machine\"\n").unwrap();
    assert_eq!(job.max_degree, 1);
    assert_eq!(job.format, Format::Machine);
    assert_eq!(job.group.order(), 6);
}

#[test]
fn malformed_rational_reports_line() {
    let bad = EXPLICIT.replace("[\"0\", \"-1\"]]", "[\"0\", \"1/0\"]]");
    match parse_config(&bad) {
        Err(CliError::Parse { line, field, .. }) => {
            assert_eq!(line, Some(17));
            assert_eq!(field, "group.action.s[1][1]");
        }
        other => panic!("expected a parse error, got {other:?}"),
    }
}

#[test]
fn non_associative_table_is_rejected() {
    // x·1 = 0 and x·x = 1
    let bad = EXPLICIT.replace("[[\"0\", \"1\"], [\"0\", \"0\"]]", "[[\"0\", \"0\"], [\"1\", \"0\"]]");
    let err = parse_config(&bad).unwrap_err();
    assert!(matches!(err, CliError::Core(_)), "{err}");
    assert!(err.to_string().contains("unit") || err.to_string().contains("associat"), "{err}");
}

#[test]
fn syntax_error_has_line() {
    match parse_config("fixture = \n") {
        Err(CliError::Parse { line, .. }) => assert_eq!(line, Some(1)),
        other => panic!("{other:?}"),
    }
}

#[test]
fn machine_report_round_trips() {
    let job = JobConfig::from_fixture("ground-field").unwrap();
    let report = run("all", &job).unwrap();
    assert_eq!(report.table("HC(A⋊G) coinvariant"), vec![1, 0, 1, 0]);
    let text = emit_machine(&report);
    assert_eq!(parse_machine(&text).unwrap(), report);
    assert_eq!(report.exit_code(), 0);
}

#[test]
fn binary_exit_codes() {
    assert_eq!(thl(&["validate", "--fixture", "trunc-poly-z2"]).status.code(), Some(0));
    assert_eq!(thl(&["verify-sbi", "--fixture", "trunc-poly-z2", "--format", "machine"]).status.code(), Some(0));
    // the dimension count of the comparison theorem fails on this fixture
    assert_eq!(thl(&["verify-theorem", "--fixture", "trunc-poly-z2"]).status.code(), Some(1));
    assert_eq!(thl(&["nonsense", "--fixture", "trunc-poly-z2"]).status.code(), Some(2));
    assert_eq!(thl(&["validate"]).status.code(), Some(2));
    assert_eq!(thl(&["validate", "--fixture", "nope"]).status.code(), Some(2));
    assert_eq!(thl(&["hc-twisted", "--fixture", "trunc-poly-z2", "--twist", "h"]).status.code(), Some(2));
    assert_eq!(thl(&["validate", "--config", "/nonexistent.toml"]).status.code(), Some(2));
}

#[test]
fn binary_reads_config_and_flags() {
    let dir = std::env::temp_dir().join(format!("thl-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("job.toml");
    std::fs::write(&path, EXPLICIT).unwrap();
    let p = path.to_str().unwrap();
    let out = thl(&["hc-lambda", "--config", p, "--max-degree", "2", "--lambda-coinv", "off", "--format", "machine"]);
    assert_eq!(out.status.code(), Some(0));
    let report = parse_machine(std::str::from_utf8(&out.stdout).unwrap()).unwrap();
    assert_eq!(report.max_degree, 2);
    assert_eq!(report.table("HC^G λ without coinvariants"), vec![3, 1, 3]);
    let bad = dir.join("bad.toml");
    std::fs::write(&bad, EXPLICIT.replace("\"-1\"", "\"1/0\"")).unwrap();
    let out = thl(&["validate", "--config", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 17"));
    std::fs::remove_dir_all(&dir).unwrap();
}
