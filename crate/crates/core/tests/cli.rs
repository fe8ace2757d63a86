use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_coxrestrict"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(args: &[&str]) -> String {
    let out = run(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["zeta", "A3"]).status.code(), Some(0));
    assert_eq!(run(&["zeta", "nosuch"]).status.code(), Some(2));
    assert_eq!(run(&["dpk", "D:2:7"]).status.code(), Some(2));
    assert_eq!(run(&["--max-chambers", "10", "chambers", "A3"]).status.code(), Some(3));
    assert_eq!(run(&["--max-hyperplanes", "5", "exponents", "A4"]).status.code(), Some(3));
}

#[test]
fn output_is_identical_across_thread_counts() {
    for args in [
        &["table", "--format", "rows", "A4/A2", "D4/A1", "E6/A3"][..],
        &["zeta", "B3", "--base", "all"],
        &["chambers", "D4/A2", "--list"],
        &["dpk", "D:4:2"],
    ] {
        let one = stdout(&[&["--threads", "1"], args].concat());
        let four = stdout(&[&["--threads", "4"], args].concat());
        assert_eq!(one, four, "{args:?}");
        assert_eq!(one, stdout(args), "{args:?}");
    }
}

#[test]
fn restriction_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("e6a3.arr");
    let path = path.to_str().unwrap();
    stdout(&["restrict", "E6/A3", "-o", path]);
    let from_file = stdout(&["check", path]);
    let from_name = stdout(&["check", "E6/A3"]);
    // The file has no root system, so its search is exhaustive and the
    // witness may differ; the invariants and the verdict may not.
    let keep = |s: &str| {
        s.lines()
            .filter(|l| !l.starts_with("arrangement") && !l.starts_with("bases") && !l.starts_with("witness"))
            .map(str::to_string)
            .collect::<Vec<_>>()
    };
    assert_eq!(keep(&from_file), keep(&from_name));
    assert!(from_file.contains("factors: yes; exponents 1 3 4"));
    assert_eq!(stdout(&["exponents", path]), stdout(&["exponents", "E6/A3"]));
}

#[test]
fn table_rows_and_mismatch() {
    let rows = stdout(&["table", "--format", "rows", "B4/B2", "E8/A2A3"]);
    let lines: Vec<&str> = rows.lines().collect();
    assert_eq!(lines[0].split('\t').count(), lines[1].split('\t').count());
    assert!(lines[2].starts_with("E8/A2A3\t3\t17\t1 7 9\t160\tno\t-\t-\tno\tok"));

    let dir = tempfile::tempdir().unwrap();
    let corpus = dir.path().join("corpus.toml");
    std::fs::write(&corpus, "[[preset]]\nname = \"A3/A1\"\nsimple = [1]\nexpected = \"no\"\n").unwrap();
    let out = run(&["--corpus", corpus.to_str().unwrap(), "table"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stdout).contains("MISMATCH"));
}

#[test]
fn zeta_for_every_base_of_a_coxeter_arrangement() {
    // Every base of A(W) gives the same ζ: W acts simply transitively.
    let out = stdout(&["zeta", "A3", "--base", "all"]);
    assert!(out.contains("bases: 24"));
    assert!(out.contains("identical for all bases"));
    assert!(!out.contains("not identical"));
}
