//! Golden-file tests for the CLI: byte-identical output and exact exit
//! codes for a corpus of scripts, including a failing check (exit 1) and
//! a parse error (exit 2). Also covers stdin input, repeat-run
//! determinism, and the parse-print-parse fixpoint.

use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};
use std::time::Instant;

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_orient-rr")
}

fn golden_dir() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden")
}

fn run_script(name: &str, extra: &[&str]) -> (String, String, i32) {
    let out = Command::new(bin())
        .arg(golden_dir().join(name))
        .args(extra)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).expect("utf8 stdout"),
        String::from_utf8(out.stderr).expect("utf8 stderr"),
        out.status.code().expect("exit code"),
    )
}

fn read(name: &str) -> String {
    std::fs::read_to_string(golden_dir().join(name)).expect("golden file")
}

// (script, expected output file, extra flags, expected exit code)
const CASES: &[(&str, &str, &[&str], i32)] = &[
    ("01_eval_basic.orr", "01_eval_basic.out", &[], 0),
    ("02_theory_mult.orr", "02_theory_mult.out", &[], 0),
    ("03_bundles.orr", "03_bundles.out", &[], 0),
    ("04_thom_zerosection.orr", "04_thom_zerosection.out", &[], 0),
    ("05_push_pull.orr", "05_push_pull.out", &[], 0),
    ("06_check_fgl.orr", "06_check_fgl.out", &[], 0),
    ("07_check_duality.orr", "07_check_duality.out", &[], 0),
    ("08_universal.orr", "08_universal.out", &[], 0),
    ("09_embeddings.orr", "09_embeddings.out", &[], 0),
    ("10_check_hrr.orr", "10_check_hrr.out", &[], 0),
    ("11_fail_assert.orr", "11_fail_assert.out", &[], 1),
    ("13_check_gysin.orr", "13_check_gysin.out", &[], 0),
    ("14_error_truncation.orr", "14_error_truncation.out", &["--truncation", "2"], 1),
];

#[test]
fn criterion_12_golden_corpus_byte_identical() {
    let t0 = Instant::now();
    for (script, expected, flags, code) in CASES {
        let (stdout, _, exit) = run_script(script, flags);
        assert_eq!(exit, *code, "{script}: exit code");
        assert_eq!(stdout, read(expected), "{script}: stdout bytes");
    }
    // parse error: diagnostic on stderr, exit 2
    let (stdout, stderr, exit) = run_script("12_parse_error.orr", &[]);
    assert_eq!(exit, 2);
    assert!(stdout.is_empty());
    assert_eq!(stderr, read("12_parse_error.err"));
    let elapsed = t0.elapsed().as_secs_f64();
    println!("criterion 12 (CLI golden corpus): pass ({} scripts, {elapsed:.2}s, budget 5s)", CASES.len() + 1);
    assert!(elapsed < 5.0, "golden corpus took {elapsed:.2}s");
}

#[test]
fn repeat_runs_are_byte_identical() {
    for script in ["05_push_pull.orr", "06_check_fgl.orr"] {
        let a = run_script(script, &[]);
        let b = run_script(script, &[]);
        assert_eq!(a, b, "{script} not deterministic");
    }
}

#[test]
fn stdin_input_works() {
    use std::io::Write;
    let mut child = Command::new(bin())
        .arg("-")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .expect("spawn");
    child
        .stdin
        .as_mut()
        .expect("stdin")
        .write_all(b"space P1 = proj 1; eval h@P1;")
        .expect("write");
    let out = child.wait_with_output().expect("wait");
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(String::from_utf8_lossy(&out.stdout), "eval h@P1 => h\n");
}

#[test]
fn direct_check_subcommand() {
    let out = Command::new(bin())
        .args(["check", "hrr"])
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("\"check\": \"hrr[n=3,d=5]\""));
    // golden: the subcommand output equals the script-form output
    let (script_out, _, _) = run_script("10_check_hrr.orr", &[]);
    assert_eq!(String::from_utf8_lossy(&out.stdout), script_out);
}

#[test]
fn parallel_sweep_output_matches_single_threaded() {
    // ORIENT_RR_THREADS only changes the execution strategy; verdict order
    // and bytes are identical
    let single = Command::new(bin())
        .args(["check", "grr", "--theory", "multiplicative", "--max-dim", "2"])
        .env("ORIENT_RR_THREADS", "1")
        .output()
        .expect("binary runs");
    let parallel = Command::new(bin())
        .args(["check", "grr", "--theory", "multiplicative", "--max-dim", "2"])
        .env("ORIENT_RR_THREADS", "4")
        .output()
        .expect("binary runs");
    assert_eq!(single.status.code(), Some(0));
    assert_eq!(parallel.status.code(), Some(0));
    assert_eq!(single.stdout, parallel.stdout);
}

#[test]
fn usage_errors_exit_2() {
    let out = Command::new(bin()).output().expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(bin())
        .args(["check", "nonsense"])
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
    let out = Command::new(bin())
        .args(["--theory", "elliptic", "check", "fgl"])
        .output()
        .expect("binary runs");
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn pretty_printed_scripts_reparse_identically() {
    for (script, _, _, _) in CASES {
        let text = read(script);
        let ast1 = orient_rr::cli::parse(&text).expect(script);
        let printed = ast1.to_string();
        let ast2 = orient_rr::cli::parse(&printed).expect(script);
        assert_eq!(ast1, ast2, "{script}: parse-print-parse fixpoint");
    }
}
