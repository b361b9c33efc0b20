use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../core/fixtures")
        .join(name)
}

fn z4u(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_z4u"))
        .args(args)
        .output()
        .expect("run z4u")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn analyze_u() {
    let path = fixture("u.gen");
    let o = z4u(&["analyze", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("min Lee distance: 2 (exact)"), "{s}");
    assert!(s.contains("self-duality: self-dual"), "{s}");
    assert!(s.contains("W^4 + 2W^2X^2 + X^4"), "{s}");
}

#[test]
fn verify_small_tables() {
    for table in ["2", "3"] {
        let o = z4u(&["verify-tables", "--table", table, "--max-length", "12"]);
        assert_eq!(o.status.code(), Some(0));
        let s = stdout(&o);
        let pass = s.lines().filter(|l| l.starts_with("PASS length=")).count();
        assert_eq!(pass, 5, "{s}");
    }
}

#[test]
fn self_check_passes() {
    let o = z4u(&["self-check"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(!s.contains("FAIL"), "{s}");
    assert!(s.contains("3 entries differ"), "{s}");
}

#[test]
fn lift_check_default_budget() {
    let [c, d, e] = ["example_c.gen", "example_d.z4", "example_e.f2u"].map(fixture);
    let o = z4u(&[
        "lift-check",
        c.to_str().unwrap(),
        d.to_str().unwrap(),
        e.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("d' = 8 (exact)"), "{s}");
    assert!(s.contains("d'' = 8 (exact)"), "{s}");
    assert!(s.contains("d = 12 (upper-bound)"), "{s}");
}

#[test]
fn exit_codes() {
    assert_eq!(
        z4u(&["analyze", "/nonexistent/x.gen"]).status.code(),
        Some(1)
    );
    assert_eq!(
        z4u(&["verify-tables", "--table", "4"]).status.code(),
        Some(1)
    );
    assert_eq!(z4u(&["no-such-command"]).status.code(), Some(1));
    assert_eq!(z4u(&["--help"]).status.code(), Some(0));

    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let bad = dir.join("bad.gen");
    std::fs::write(&bad, "10 01\n10\n").unwrap();
    let o = z4u(&["analyze", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 2"));
}

#[test]
fn search_is_deterministic() {
    let args = ["search", "--kind", "dc", "--n", "2", "--threshold", "4"];
    let one = z4u(&[&args[..], &["--threads", "1"]].concat());
    let two = z4u(&[&args[..], &["--threads", "2"]].concat());
    assert_eq!(one.status.code(), Some(0));
    assert_eq!(stdout(&one), stdout(&two));
    assert!(stdout(&one).contains("M=(0,1+2u) d=4"), "{}", stdout(&one));
    assert!(stdout(&one).contains("M=(2,1+2u) d=4"));
}
