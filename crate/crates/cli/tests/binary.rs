use std::io::Write;
use std::process::{Command, Output, Stdio};

fn vfilt(args: &[&str], stdin: Option<&str>, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_vfilt"));
    cmd.args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped());
    for key in ["VFILT_INPUT", "VFILT_FORMAT", "VFILT_SEED", "VFILT_FUZZ", "VFILT_DEG_CAP"] {
        cmd.env_remove(key);
    }
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().expect("binary runs");
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    child.wait_with_output().unwrap()
}

const SESSION: &str = "ring A = [x]; ideal I in A = (x^2); vnum I;";

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn reads_stdin_by_default() {
    let o = vfilt(&[], Some(SESSION), &[]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "v(I) = 1, prime = (x), witness = x\n");
    let o = vfilt(&["--input", "-"], Some(SESSION), &[]);
    assert_eq!(stdout(&o), "v(I) = 1, prime = (x), witness = x\n");
}

#[test]
fn reads_files_and_reports_missing_ones() {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/corpus/good/01-vnum-pure-power.vf");
    let o = vfilt(&["--input", path], None, &[]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("v(I) = 1"));
    let o = vfilt(&["--input", "/nonexistent/session.vf"], None, &[]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("cannot read"));
}

#[test]
fn json_format_from_flag_or_environment() {
    for o in [vfilt(&["--format", "json"], Some(SESSION), &[]), vfilt(&[], Some(SESSION), &[("VFILT_FORMAT", "json")])] {
        let line: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
        assert_eq!(line["command"], "vnum");
        assert_eq!(line["result"]["v"], 1);
    }
}

#[test]
fn deg_cap_sets_default_property_cap() {
    let src = "ring A = [x, y]; ideal I in A = (x*y); check-property kind=ordinary k=1 I;";
    let o = vfilt(&["--deg-cap", "3"], Some(src), &[]);
    assert!(stdout(&o).contains("(degree <= 3)"));
    let o = vfilt(&[], Some(src), &[("VFILT_DEG_CAP", "2")]);
    assert!(stdout(&o).contains("(degree <= 2)"));
}

#[test]
fn exit_codes() {
    let fails = "ring A = [x, y, z]; ring B = [u]; ideal I in A = (x*y, y*z, x*z); ideal J in B = (u^2);
                 verify-theorem kind=intclos k=2 I J;";
    assert_eq!(vfilt(&[], Some(fails), &[]).status.code(), Some(1));
    assert_eq!(vfilt(&[], Some("ring A = ;"), &[]).status.code(), Some(2));
    assert_eq!(vfilt(&["--format", "yaml"], Some(SESSION), &[]).status.code(), Some(2));
    assert_eq!(vfilt(&["--no-such-flag"], Some(SESSION), &[]).status.code(), Some(2));
}

#[test]
fn fuzz_is_seeded_and_reproducible() {
    let a = vfilt(&["--fuzz", "8", "--seed", "5", "--format", "json"], None, &[]);
    assert_eq!(a.status.code(), Some(0));
    let b = vfilt(&["--format", "json"], None, &[("VFILT_FUZZ", "8"), ("VFILT_SEED", "5")]);
    assert_eq!(stdout(&a), stdout(&b));
    let rec: serde_json::Value = serde_json::from_str(stdout(&a).trim()).unwrap();
    assert_eq!(rec["report"]["holds"], true);
    assert_eq!(rec["report"]["kinds"].as_array().unwrap().len(), 4);
}
