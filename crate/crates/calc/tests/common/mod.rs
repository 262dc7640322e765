//! Golden-file harness shared by the CLI and acceptance tests.
//!
//! Cases live in `tests/golden/cases.json`. Run with `UPDATE_GOLDEN=1` to
//! rewrite the expected outputs from the current binary.

#![allow(dead_code)]

use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use ternion_calc::cli::run_with_io;

#[derive(Clone, Debug, Deserialize, Serialize)]
pub struct Case {
    pub name: String,
    pub args: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stdin: Option<String>,
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

pub fn crate_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
}

fn cases_path() -> PathBuf {
    crate_dir().join("tests/golden/cases.json")
}

pub fn load_cases() -> Vec<Case> {
    let text = std::fs::read_to_string(cases_path()).expect("read cases.json");
    serde_json::from_str(&text).expect("parse cases.json")
}

/// Run the built `ternion` binary from the crate directory.
pub fn run_bin(args: &[String], stdin: Option<&str>) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_ternion"))
        .args(args)
        .current_dir(crate_dir())
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn ternion");
    let mut pipe = child.stdin.take().unwrap();
    pipe.write_all(stdin.unwrap_or("").as_bytes()).unwrap();
    drop(pipe);
    let out = child.wait_with_output().expect("wait for ternion");
    Output {
        stdout: String::from_utf8(out.stdout).expect("utf-8 stdout"),
        stderr: String::from_utf8(out.stderr).expect("utf-8 stderr"),
        code: out.status.code().expect("exit code"),
    }
}

/// Check every case; returns the names of mismatches.
pub fn check_golden() -> Vec<String> {
    let mut cases = load_cases();
    let update = std::env::var_os("UPDATE_GOLDEN").is_some();
    let mut failures = Vec::new();
    for case in &mut cases {
        let got = run_bin(&case.args, case.stdin.as_deref());
        if update {
            case.stdout = got.stdout;
            case.stderr = got.stderr;
            case.code = got.code;
        } else if (got.stdout.as_str(), got.stderr.as_str(), got.code)
            != (case.stdout.as_str(), case.stderr.as_str(), case.code)
        {
            failures.push(format!(
                "{}: got code {} stdout {:?} stderr {:?}",
                case.name, got.code, got.stdout, got.stderr
            ));
        }
    }
    if update {
        write_cases(&cases_path(), &cases);
    }
    failures
}

fn write_cases(path: &Path, cases: &[Case]) {
    let mut text = serde_json::to_string_pretty(cases).unwrap();
    text.push('\n');
    std::fs::write(path, text).expect("write cases.json");
}

const FRAGMENTS: &[&str] = &[
    "u",
    "v",
    "one",
    "zero",
    "delta",
    "j",
    "oneD",
    "oneG",
    "iG",
    "conj(",
    "norm(",
    "A(",
    "B(",
    "projD(",
    "projG(",
    "inv(",
    "reduce(",
    "split(",
    "(",
    ")",
    ",",
    "+",
    "-",
    "*",
    "/",
    "^",
    "1",
    "0",
    "2.5",
    "1e308",
    "1e-320",
    "999999999999999999999",
    " ",
    "((((((((",
    "))))",
    "^99999999999999999999",
];

fn fuzz_input(rng: &mut ChaCha8Rng) -> String {
    let target = rng.gen_range(0..=4096usize);
    let mut s = String::with_capacity(target);
    let grammar = rng.gen_bool(0.5);
    while s.len() < target {
        if grammar && rng.gen_bool(0.9) {
            s.push_str(FRAGMENTS[rng.gen_range(0..FRAGMENTS.len())]);
        } else {
            s.push(rng.gen_range(0u8..128) as char);
        }
    }
    s.truncate(target);
    s
}

/// Runs `n` random ASCII inputs of up to 4096 bytes through the CLI in
/// process. Returns the number of panics and bad exit codes.
pub fn fuzz_cli(n: usize, seed: u64) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut crashes = 0;
    for i in 0..n {
        let input = fuzz_input(&mut rng);
        let (mut out, mut err) = (Vec::new(), Vec::new());
        let argv: Vec<&str> = if i % 2 == 0 {
            vec!["ternion", "--json", "--eval", &input]
        } else {
            vec!["ternion"]
        };
        let outcome = catch_unwind(AssertUnwindSafe(|| {
            run_with_io(argv, &mut input.as_bytes(), &mut out, &mut err, false)
        }));
        match outcome {
            Ok(code) if (0..=3).contains(&code) => {}
            _ => crashes += 1,
        }
    }
    crashes
}
