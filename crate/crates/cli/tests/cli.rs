use std::path::PathBuf;
use std::process::Command;

use bowley_cli::{run, EXIT_DIVERGED, EXIT_IDENTITY_FAILURE, EXIT_INFEASIBLE, EXIT_OK, EXIT_USAGE};

fn fixture(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("fixtures")
        .join(name)
        .display()
        .to_string()
}

fn bowley(args: &[&str]) -> (i32, String) {
    let mut out = Vec::new();
    let mut full = vec!["bowley"];
    full.extend_from_slice(args);
    let code = run(full, &mut out);
    (code, String::from_utf8(out).unwrap())
}

#[test]
fn identities_exit_codes() {
    let (code, out) = bowley(&["identities", "--C", "1.25", "--Y", "1.25", "--e", "1", "--pi", "0.25", "--W", "5"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("all 7 identities pass"));

    let (code, out) = bowley(&["identities", "--C", "1", "--Y", "2", "--e", "1", "--pi", "1", "--W", "10", "--format", "csv"]);
    assert_eq!(code, EXIT_IDENTITY_FAILURE);
    assert!(out.contains("1,C = Y,1.000000,2.000000,1.000e0,FAIL"));
    assert!(out.contains("2,Y = e + pi,2.000000,2.000000,0.000e0,pass"));

    let (code, _) = bowley(&["identities", "--C", "1", "--Y", "2"]);
    assert_eq!(code, EXIT_USAGE);
    let (code, _) = bowley(&["identities", "--C", "1", "--Y", "1", "--e", "1", "--pi", "0", "--W", "0"]);
    assert_eq!(code, EXIT_USAGE);
    let (code, _) = bowley(&["identities", "--C", "-1", "--Y", "1", "--e", "1", "--pi", "0", "--W", "1"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn identities_from_csv_row() {
    let (code, out) = bowley(&["identities", "--csv", &fixture("steady_state.csv"), "--period", "1959"]);
    assert_eq!(code, EXIT_OK, "{out}");
    let (code, _) = bowley(&["identities", "--csv", &fixture("steady_state.csv"), "--period", "2020"]);
    assert_eq!(code, EXIT_USAGE);
    let (code, _) = bowley(&["identities", "--csv", &fixture("national_share.csv")]);
    // Income rate 0.25 and profit rate 0.0775 give 1 - r/omega = 0.69, matching e/Y.
    assert_eq!(code, EXIT_OK);
}

#[test]
fn simulate_summary_and_exit_codes() {
    let (code, out) = bowley(&["simulate", "e=1", "r=0.05", "omega=0.25"]);
    assert_eq!(code, EXIT_OK);
    let summary = out.lines().last().unwrap();
    assert!(summary.starts_with("converged β=0.800000 predicted=0.800000"), "{summary}");
    assert!(out.starts_with("step,time,W,C,pi,e,Y,gamma,beta\n0,0.000000,1.000000,0.250000,0.050000,1.000000,1.050000,1.050000,0.952381\n"));

    let (code, out) = bowley(&["simulate", "r=0.3", "omega=0.25"]);
    assert_eq!(code, EXIT_DIVERGED);
    assert!(out.ends_with("diverged: omega <= r\n"));

    let (code, out) = bowley(&["simulate", "dt=10"]);
    assert_eq!(code, EXIT_DIVERGED);
    assert!(out.contains("numerical instability"));

    let (code, out) = bowley(&["simulate", "max_steps=5"]);
    assert_eq!(code, EXIT_DIVERGED);
    assert!(out.contains("not converged"));

    let (code, _) = bowley(&["simulate", "lambda=3"]);
    assert_eq!(code, EXIT_USAGE);
    let (code, _) = bowley(&["simulate", "r"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn simulate_summary_is_recomputable_from_csv() {
    let (_, out) = bowley(&["simulate", "e=2", "r=0.03", "omega=0.2"]);
    let lines: Vec<&str> = out.lines().collect();
    let summary = lines.last().unwrap();
    let last_row = lines[lines.len() - 2];
    let beta = last_row.rsplit(',').next().unwrap();
    let steps = last_row.split(',').next().unwrap();
    assert!(summary.contains(&format!("β={beta} ")));
    assert!(summary.ends_with(&format!("steps={steps}")));
    assert!(summary.contains("predicted=0.850000"));
}

#[test]
fn simulate_writes_file_and_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    let (c1, s1) = bowley(&["simulate", "--out", a.to_str().unwrap()]);
    let (c2, s2) = bowley(&["simulate", "--out", b.to_str().unwrap()]);
    assert_eq!((c1, c2), (EXIT_OK, EXIT_OK));
    assert_eq!(s1, s2);
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());
    assert_eq!(s1.lines().count(), 1);
}

#[test]
fn simulate_reads_config_file() {
    let dir = tempfile::tempdir().unwrap();
    let cfg = dir.path().join("run.cfg");
    std::fs::write(&cfg, "# test\ne = 2\nr = 0.05\nomega = 0.25\n").unwrap();
    let (code, out) = bowley(&["simulate", "--config", cfg.to_str().unwrap(), "w0=10"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("\n0,0.000000,10.000000,"));
    std::fs::write(&cfg, "colour = red\n").unwrap();
    let (code, _) = bowley(&["simulate", "--config", cfg.to_str().unwrap()]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn sweep_commands() {
    let (code, out) = bowley(&["sweep", "--config", &fixture("reference_box.sweep")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.ends_with("rows=14 converged=14 beta_min=0.600000 beta_max=0.920000 max_residual=0.000000\n"), "{out}");

    let (code, out) = bowley(&["sweep", "--grid", "r=0,omega=0.2"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.lines().count(), 3);
    assert!(out.contains("converged"));

    for spec in ["r=0.1:0.2", "q=1", "r=1:0:0.1", ""] {
        let (code, _) = bowley(&["sweep", "--grid", spec]);
        assert_eq!(code, EXIT_USAGE, "{spec}");
    }
    let (code, _) = bowley(&["sweep"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn sweep_marks_diverged_rows_without_failing() {
    let (code, out) = bowley(&["sweep", "--grid", "r=0.05:0.3:0.25,omega=0.25"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains(",converged,"));
    assert!(out.contains("0.300000,0.250000,diverged,0,,"));
}

#[test]
fn sectors_commands() {
    let (code, out) = bowley(&["sectors", &fixture("young_us.scenario")]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("sector agriculture: β 0.800000 -> 0.600000 (target 0.600000)"), "{out}");
    assert!(out.contains("sector manufacturing: β 0.750000 -> 0.666667 (target 0.666667)"));

    let (code, out) = bowley(&["sectors", &fixture("infeasible.scenario")]);
    assert_eq!(code, EXIT_INFEASIBLE);
    assert!(out.starts_with("infeasible: absorber services wage bill went negative"), "{out}");
    assert!(out.contains("at step 4 "));

    let (code, _) = bowley(&["sectors", "/nonexistent.scenario"]);
    assert_eq!(code, EXIT_USAGE);
}

#[test]
fn single_absorber_scenario_matches_simulate() {
    let (code, sectors) = bowley(&["sectors", &fixture("single_absorber.scenario")]);
    assert_eq!(code, EXIT_OK);
    let (code, simulate) = bowley(&["simulate", "e=1", "r=0.05", "omega=0.25", "w0=5"]);
    assert_eq!(code, EXIT_OK);
    assert!(simulate.contains("converged β=0.800000 predicted=0.800000"));
    assert!(sectors.contains("sector economy: β 0.800000 -> 0.800000"));
    assert!(sectors.contains("min=0.800000 max=0.800000"));
    // Same snapshot at t=0: W=5, C=1.25, Y=1.25.
    assert!(simulate.contains("\n0,0.000000,5.000000,1.250000,0.250000,1.000000,1.250000,0.250000,0.800000\n"));
    assert!(sectors.contains("\n0,0.000000,aggregate,1.000000,0.250000,1.250000,0.800000,1.250000,5.000000\n"));
}

#[test]
fn empirical_commands() {
    let (code, out) = bowley(&["empirical", "--r", "0.02:0.08", "--omega", "0.20:0.25"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("beta in [0.60, 0.92]\n"));

    let (code, out) = bowley(&["empirical", "--c-share", "0.6", "--k-gdp", "3.0"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "omega=0.20\n");

    let (code, out) = bowley(&["empirical", "--c-share", "0.6", "--k-gdp", "2.5"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "omega=0.24\n");

    for args in [
        vec!["empirical"],
        vec!["empirical", "--r", "0.02:0.08"],
        vec!["empirical", "--omega", "0.2"],
        vec!["empirical", "--c-share", "0.6"],
        vec!["empirical", "--r", "0.08:0.02", "--omega", "0.2"],
        vec!["empirical", "--r", "x", "--omega", "0.2"],
    ] {
        assert_eq!(bowley(&args).0, EXIT_USAGE, "{args:?}");
    }
}

#[test]
fn empirical_csv_is_byte_stable() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    let input = fixture("national_share.csv");
    assert_eq!(bowley(&["empirical", "--csv", &input, "--out", a.to_str().unwrap()]).0, EXIT_OK);
    assert_eq!(bowley(&["empirical", "--csv", &input, "--out", b.to_str().unwrap()]).0, EXIT_OK);
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
    let betas: Vec<&str> = text.lines().skip(1).map(|l| l.split(',').nth(1).unwrap()).collect();
    assert_eq!(betas, ["0.690000", "0.680000", "0.670000", "0.660000"]);

    let bad = dir.path().join("bad.csv");
    std::fs::write(&bad, "period,C,Y,e,pi,W\n1958,1,1,1,0,0\n").unwrap();
    assert_eq!(bowley(&["empirical", "--csv", bad.to_str().unwrap()]).0, EXIT_USAGE);
}

#[test]
fn binary_exit_codes() {
    let exe = env!("CARGO_BIN_EXE_bowley");
    let status = |args: &[&str]| Command::new(exe).args(args).output().unwrap().status.code();
    assert_eq!(status(&["empirical", "--r", "0.02:0.08", "--omega", "0.20:0.25"]), Some(0));
    assert_eq!(status(&["identities", "--C", "1", "--Y", "2", "--e", "1", "--pi", "1", "--W", "10"]), Some(1));
    assert_eq!(status(&["identities"]), Some(2));
    assert_eq!(status(&["bogus"]), Some(2));
    assert_eq!(status(&["simulate", "r=0.3"]), Some(3));
    assert_eq!(status(&["sectors", &fixture("infeasible.scenario")]), Some(4));
    assert_eq!(status(&["--help"]), Some(0));
}
