//! End-to-end checks of the binary: flag handling, output determinism, and
//! exit codes.

use std::process::{Command, Output};

fn etaforms(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_etaforms"))
        .args(args)
        .env_remove("ETAFORMS_ORDER")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn coeff_level_47() {
    let out = etaforms(&["coeff", "--level", "47", "--n", "49"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).lines().next().unwrap(), "-1");
    let out = etaforms(&["coeff", "--level", "47", "--n", "49", "--check"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("PASS"));
}

#[test]
fn coeff_check_across_levels() {
    for (level, n) in [
        ("71", "74"),
        ("135", "31"),
        ("648", "19"),
        ("1024", "41"),
        ("1872", "91"),
    ] {
        let out = etaforms(&["coeff", "--level", level, "--n", n, "--check"]);
        assert!(out.status.success(), "level {level}");
        assert!(
            stdout(&out).contains("PASS"),
            "level {level}: {}",
            stdout(&out)
        );
    }
}

#[test]
fn classgroup_table_47() {
    let out = etaforms(&["classgroup", "--disc", "-47"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("structure=C5"));
    assert_eq!(text.lines().filter(|l| l.starts_with("form=")).count(), 5);
    let out = etaforms(&["classgroup", "--disc", "-1872"]);
    assert!(stdout(&out).contains("structure=C4xC4"));
}

#[test]
fn classify_prints_witness() {
    let out = etaforms(&["classify", "--disc", "-47", "--p", "53"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("(2,1,6)"));
    assert!(text.contains("witness"));
    let out = etaforms(&["classify", "--disc", "-47", "--p", "5"]);
    assert!(stdout(&out).contains("inert"));
}

#[test]
fn expand_formats() {
    let out = etaforms(&[
        "expand",
        "--eta",
        "0:2^2,1^-1",
        "--order",
        "6",
        "--format",
        "records",
    ]);
    assert!(out.status.success());
    let text = stdout(&out);
    // psi(q) = 1 + q + q^3 + q^6
    for line in ["n=0 c=1", "n=1 c=1", "n=3 c=1", "n=6 c=1", "order=6"] {
        assert!(text.contains(line), "missing {line} in {text}");
    }
    let out = etaforms(&["expand", "--form", "1,1,12", "--order", "4"]);
    assert!(stdout(&out).contains("discriminant -47"));
}

#[test]
fn hecke_image_and_eigen() {
    let out = etaforms(&[
        "hecke", "--disc", "-648", "--p", "2", "--form", "1,0,162", "--order", "40",
    ]);
    assert!(out.status.success());
    // T_2 B(1,0,162) = B(2,0,81): coefficients 1, 0, 2 at q^0..q^2
    let text = stdout(&out);
    assert!(text.contains("T_2 B(1,0,162)"));
    let out = etaforms(&["hecke", "--level", "47", "--p", "53", "--order", "400"]);
    let text = stdout(&out);
    assert!(text.contains("A1: eigenform of T_53"));
    assert!(text.contains("A2: eigenform of T_53"));
}

#[test]
fn verify_suite_exit_codes_and_determinism() {
    let a = etaforms(&["verify", "--suite", "thm1", "--order", "60"]);
    assert!(a.status.success());
    let text = stdout(&a);
    assert!(text.contains("thm1 m=1,s=1 60 PASS"));
    assert!(text.contains("total=144 failures=0"));
    // byte-identical on identical argv
    let b = etaforms(&["verify", "--suite", "thm1", "--order", "60"]);
    assert_eq!(a.stdout, b.stdout);
    // parallel run produces the same bytes
    let c = etaforms(&["verify", "--suite", "thm1", "--order", "60", "--jobs", "4"]);
    assert_eq!(a.stdout, c.stdout);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(
        etaforms(&["verify", "--suite", "nonsense"]).status.code(),
        Some(2)
    );
    assert_eq!(etaforms(&["expand"]).status.code(), Some(2));
    assert_eq!(
        etaforms(&["expand", "--eta", "junk"]).status.code(),
        Some(2)
    );
    assert_eq!(
        etaforms(&["coeff", "--level", "48", "--n", "1"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        etaforms(&["definitely-not-a-subcommand"]).status.code(),
        Some(2)
    );
}

#[test]
fn order_env_override() {
    let out = Command::new(env!("CARGO_BIN_EXE_etaforms"))
        .args(["expand", "--eta", "0:1^1", "--format", "records"])
        .env("ETAFORMS_ORDER", "7")
        .output()
        .unwrap();
    assert!(stdout(&out).contains("order=7"));
}

#[test]
fn out_flag_writes_file() {
    let path = std::env::temp_dir().join("etaforms-cli-test.txt");
    let _ = std::fs::remove_file(&path);
    let out = etaforms(&[
        "coeff",
        "--level",
        "47",
        "--n",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    assert!(stdout(&out).is_empty());
    assert_eq!(
        std::fs::read_to_string(&path)
            .unwrap()
            .lines()
            .next()
            .unwrap(),
        "1"
    );
    let _ = std::fs::remove_file(&path);
}
