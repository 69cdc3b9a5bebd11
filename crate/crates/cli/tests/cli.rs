use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

const REFERENCE_ENUM: &str = "1 4\n2 6\n3 8\n4 2\ntail 6 4\n";
const VARIANT_ENUM: &str = "1 3\n2 1\n3 7\n5 2\ntail 5 5\n";
const APPROX: &str = "0: 0=1 5=0 11=1 20=0\n1: 0=0 6=1 13=0\n2: 0=0 1=1 8=0 40=1\n3: 0=1 10=0 25=1\n4: 0=0 3=1 17=0\ndefault 1\nhorizon 6\n";

fn hindman(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hindman"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    assert!(
        out.status.success(),
        "exit {:?}: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn workspace() -> TempDir {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("f.txt"), REFERENCE_ENUM).unwrap();
    std::fs::write(dir.path().join("g.txt"), VARIANT_ENUM).unwrap();
    std::fs::write(dir.path().join("a.txt"), APPROX).unwrap();
    dir
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

/// `(y, member)` pairs from a CSV with a `y,member,...` header.
fn memberships(csv: &str) -> Vec<(u64, u8)> {
    csv.lines()
        .filter(|l| !l.starts_with('#') && !l.starts_with('y'))
        .map(|l| {
            let mut cols = l.split(',');
            (
                cols.next().unwrap().parse().unwrap(),
                cols.next().unwrap().parse().unwrap(),
            )
        })
        .collect()
}

#[test]
fn decompose_example() {
    let dir = workspace();
    let text = stdout(&hindman(dir.path(), &["decompose", "--base", "7", "17199"]));
    assert_eq!(
        text,
        "17199 = 1*7^2 + 1*7^3 + 1*7^5\n  lambda=2 mu=5 i=1 class=O[2,1]_7\n  gaps=(2,3),(3,5)\n"
    );
    let text = stdout(&hindman(
        dir.path(),
        &["decompose", "--enum", "f.txt", "36", "279"],
    ));
    assert!(text.contains("36 = 1*3^2 + 1*3^3\n"));
    assert!(text.contains("  sg=1 vsg=0\n"));
    assert!(text.contains("  sg=1 vsg=1\n"));
}

#[test]
fn synth_verify_decode_roundtrip() {
    let dir = workspace();
    for (f, base, scheme) in [
        ("f.txt", "7", "three"),
        ("g.txt", "7", "three"),
        ("f.txt", "3", "four"),
        ("g.txt", "3", "four"),
    ] {
        let x = stdout(&hindman(
            dir.path(),
            &["synth", "--enum", f, "--base", base, "--size", "5"],
        ));
        write(&dir, "X.txt", &x);
        let verdict = stdout(&hindman(
            dir.path(),
            &[
                "verify",
                "--scheme",
                scheme,
                "--enum",
                f,
                "--set",
                "X.txt",
                "--sum-len",
                "3",
            ],
        ));
        assert!(verdict.starts_with("monochromatic color="), "{verdict}");

        let decoded = stdout(&hindman(
            dir.path(),
            &[
                "decode-range",
                "--enum",
                f,
                "--set",
                "X.txt",
                "--base",
                base,
            ],
        ));
        let truth = stdout(&hindman(
            dir.path(),
            &[
                "range-oracle",
                "--enum",
                f,
                "--set",
                "X.txt",
                "--base",
                base,
            ],
        ));
        assert!(decoded.contains("certified=yes"));
        assert!(truth.starts_with("# PRIVILEGED"));
        assert!(!memberships(&decoded).is_empty());
        assert_eq!(memberships(&decoded), memberships(&truth));
    }
}

#[test]
fn verify_reference_chain_is_red() {
    let dir = workspace();
    write(&dir, "X.txt", "7\n49\n2401\n16807\n");
    let out = hindman(
        dir.path(),
        &[
            "verify",
            "--scheme",
            "three",
            "--enum",
            "f.txt",
            "--set",
            "X.txt",
            "--sum-len",
            "3",
        ],
    );
    assert_eq!(stdout(&out), "monochromatic color=R\n");
}

#[test]
fn decode_range_reference_table() {
    let dir = workspace();
    write(&dir, "X.txt", "7\n49\n2401\n16807\n");
    let text = stdout(&hindman(
        dir.path(),
        &[
            "decode-range",
            "--enum",
            "f.txt",
            "--set",
            "X.txt",
            "--base",
            "7",
        ],
    ));
    let rows: Vec<&str> = text.lines().skip(2).collect();
    assert_eq!(
        rows,
        [
            "1,0,7,49,2",
            "2,1,49,2401,4",
            "3,0,2401,16807,5",
            "4,1,2401,16807,5"
        ]
    );
    assert!(text.starts_with("# decode-range enum=f.txt set=X.txt"));
}

#[test]
fn color_dump_format() {
    let dir = workspace();
    let text = stdout(&hindman(
        dir.path(),
        &["color", "--scheme", "parity", "--range", "1..4"],
    ));
    assert_eq!(text, "# scheme=parity\nn,color\n1,1\n2,0\n3,1\n4,0\n");
    let text = stdout(&hindman(
        dir.path(),
        &[
            "color", "--scheme", "delta2", "--approx", "a.txt", "--range", "30..40",
        ],
    ));
    assert_eq!(text.lines().count(), 2 + 11);
}

#[test]
fn search_examples_and_jobs() {
    let dir = workspace();
    let text = stdout(&hindman(
        dir.path(),
        &[
            "search",
            "--scheme",
            "parity",
            "--N",
            "10",
            "--sum-len",
            "2",
            "--size",
            "3",
        ],
    ));
    assert!(text.ends_with("2\n4\n6\n"));
    let text = stdout(&hindman(
        dir.path(),
        &[
            "search",
            "--scheme",
            "parity",
            "--N",
            "3",
            "--sum-len",
            "2",
            "--size",
            "3",
        ],
    ));
    assert!(text.ends_with("# no monochromatic set found\n"));

    let args = [
        "search",
        "--scheme",
        "three",
        "--enum",
        "f.txt",
        "--N",
        "60",
        "--sum-len",
        "3",
        "--size",
        "4",
    ];
    let single = stdout(&hindman(dir.path(), &args));
    for jobs in ["2", "4"] {
        let mut with_jobs = args.to_vec();
        with_jobs.extend(["--jobs", jobs]);
        assert_eq!(stdout(&hindman(dir.path(), &with_jobs)), single);
    }
}

#[test]
fn search_output_verifies() {
    let dir = workspace();
    let found = stdout(&hindman(
        dir.path(),
        &[
            "search",
            "--scheme",
            "three",
            "--enum",
            "f.txt",
            "--N",
            "40",
            "--sum-len",
            "2",
            "--size",
            "3",
            "--out",
            "S.txt",
        ],
    ));
    assert!(found.is_empty());
    let verdict = stdout(&hindman(
        dir.path(),
        &[
            "verify",
            "--scheme",
            "three",
            "--enum",
            "f.txt",
            "--set",
            "S.txt",
            "--sum-len",
            "2",
        ],
    ));
    assert!(verdict.starts_with("monochromatic"));
}

#[test]
fn thin_modes() {
    let dir = workspace();
    write(&dir, "T.txt", "1\n9\n90\n");
    let text = stdout(&hindman(
        dir.path(),
        &["thin", "--set", "T.txt", "--base", "3"],
    ));
    assert!(text.ends_with("1\n9\n"));
    write(&dir, "U.txt", "1\n2\n8\n");
    let text = stdout(&hindman(
        dir.path(),
        &["thin", "--set", "U.txt", "--base", "7", "--mode", "digit"],
    ));
    assert!(text.ends_with("1\n8\n"));
    let text = stdout(&hindman(
        dir.path(),
        &["thin", "--set", "U.txt", "--base", "7", "--mode", "both"],
    ));
    assert!(text.ends_with("# thin mode=both base=7 kept=1/3\n1\n"));
}

#[test]
fn delta2_synth_and_decode() {
    let dir = workspace();
    let w = stdout(&hindman(
        dir.path(),
        &["synth", "--approx", "a.txt", "--size", "4"],
    ));
    write(&dir, "W.txt", &w);
    let verdict = stdout(&hindman(
        dir.path(),
        &[
            "verify",
            "--scheme",
            "delta2",
            "--approx",
            "a.txt",
            "--set",
            "W.txt",
            "--sum-len",
            "2",
        ],
    ));
    assert_eq!(verdict, "monochromatic color=1\n");
    let decoded = stdout(&hindman(
        dir.path(),
        &["decode-delta2", "--approx", "a.txt", "--set", "W.txt"],
    ));
    assert!(decoded.ends_with("# B0={}\n# B1={2,3,5,6}\n"), "{decoded}");
}

#[test]
fn demos_pass() {
    let dir = workspace();
    for args in [
        vec!["demo-range"],
        vec!["demo-range", "--base", "3", "--enum", "g.txt"],
        vec!["demo-delta2"],
        vec!["demo-delta2", "--approx", "a.txt"],
    ] {
        let text = stdout(&hindman(dir.path(), &args));
        assert!(!text.contains("[FAIL]"), "{text}");
        assert!(text.contains("[ok]"));
    }
}

#[test]
fn outputs_are_byte_identical_across_runs() {
    let dir = workspace();
    write(&dir, "X.txt", "7\n49\n2401\n16807\n");
    let commands: [&[&str]; 4] = [
        &["demo-range"],
        &["demo-delta2"],
        &[
            "color", "--scheme", "four", "--enum", "f.txt", "--range", "1..200",
        ],
        &["decode-range", "--enum", "f.txt", "--set", "X.txt"],
    ];
    for args in commands {
        let first = hindman(dir.path(), args);
        let second = hindman(dir.path(), args);
        assert_eq!(first.stdout, second.stdout);
        assert!(!first.stdout.contains(&b'\r'));
    }
}

#[test]
fn out_flag_writes_file() {
    let dir = workspace();
    let printed = stdout(&hindman(
        dir.path(),
        &["color", "--scheme", "const", "--range", "1..3"],
    ));
    let silent = stdout(&hindman(
        dir.path(),
        &[
            "color", "--scheme", "const", "--range", "1..3", "--out", "c.csv",
        ],
    ));
    assert!(silent.is_empty());
    assert_eq!(
        std::fs::read_to_string(dir.path().join("c.csv")).unwrap(),
        printed
    );
}

#[test]
fn exit_codes() {
    let dir = workspace();
    let code = |args: &[&str]| hindman(dir.path(), args).status.code();
    // usage errors
    assert_eq!(code(&["frobnicate"]), Some(2));
    assert_eq!(
        code(&["color", "--scheme", "rainbow", "--range", "1..3"]),
        Some(2)
    );
    assert_eq!(
        code(&["color", "--scheme", "three", "--range", "1..3"]),
        Some(2)
    );
    assert_eq!(
        code(&["color", "--scheme", "parity", "--range", "3..1"]),
        Some(2)
    );
    assert_eq!(code(&["synth", "--base", "7"]), Some(2));
    assert_eq!(
        code(&[
            "decode-range",
            "--enum",
            "f.txt",
            "--set",
            "X.txt",
            "--base",
            "5"
        ]),
        Some(2)
    );
    // domain and structure errors
    write(&dir, "bad.txt", "1 4\n2 4\ntail 6 4\n");
    assert_eq!(
        code(&["color", "--scheme", "three", "--enum", "bad.txt", "--range", "1..3"]),
        Some(1)
    );
    write(&dir, "T.txt", "1\n9\n90\n");
    assert_eq!(
        code(&[
            "decode-range",
            "--enum",
            "f.txt",
            "--set",
            "T.txt",
            "--base",
            "3"
        ]),
        Some(1)
    );
    assert_eq!(
        code(&["decode-range", "--enum", "f.txt", "--set", "missing.txt"]),
        Some(1)
    );
    write(&dir, "desc.txt", "9\n3\n");
    assert_eq!(
        code(&["verify", "--scheme", "parity", "--set", "desc.txt"]),
        Some(1)
    );
    assert_eq!(code(&["synth", "--enum", "f.txt", "--size", "40"]), Some(1));
    assert_eq!(code(&["decompose", "0"]), Some(1));
    assert_eq!(code(&["decompose", "--base", "3", "5"]), Some(0));
}
