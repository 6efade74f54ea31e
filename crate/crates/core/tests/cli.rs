mod common;

use std::path::Path;

use common::SAMPLE_FILE;
use fpm_core::cli::{run, EXIT_DATA, EXIT_OK, EXIT_USAGE};

struct Output {
    code: i32,
    stdout: String,
    stderr: String,
}

fn fpm(args: &[&str]) -> Output {
    let mut argv = vec!["fpm"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(argv, &mut out, &mut err, false);
    Output {
        code,
        stdout: String::from_utf8(out).unwrap(),
        stderr: String::from_utf8(err).unwrap(),
    }
}

fn sample_file(dir: &Path) -> String {
    let path = dir.join("sample.txt");
    std::fs::write(&path, SAMPLE_FILE).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn compare_prints_sample_table() {
    let dir = tempfile::tempdir().unwrap();
    let input = sample_file(dir.path());
    let out = fpm(&[
        "compare",
        "--min-support",
        "2",
        "--input",
        &input,
        "--format",
        "text",
    ]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    let c2 = out.stdout.lines().find(|l| l.starts_with("2  C2")).unwrap();
    assert!(c2.contains("| 6 - itemsets for C2"), "{c2}");
    assert!(c2.contains("| 4 - itemsets for C2"), "{c2}");
    assert!(c2.trim_end().ends_with('2'), "{c2}");
    assert!(!out.stdout.contains('\x1b'));
}

#[test]
fn mine_lists_itemsets() {
    let dir = tempfile::tempdir().unwrap();
    let input = sample_file(dir.path());
    let out = fpm(&[
        "mine",
        "--algo",
        "apriori",
        "--min-support",
        "2",
        "--input",
        &input,
        "--list-itemsets",
    ]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert!(out.stdout.contains("B,C,E / 2"), "{}", out.stdout);

    let out = fpm(&[
        "mine",
        "--algo",
        "dhp",
        "--min-support",
        "2",
        "--input",
        &input,
        "--format",
        "json",
    ]);
    let json: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    assert_eq!(json["algorithm"], "dhp");
    assert_eq!(json["levels"][1]["candidates"], 4);
    assert_eq!(json["levels"][2]["db_rows_after"], 0);
    assert!(json["levels"][0].get("frequent_itemsets").is_none());
}

#[test]
fn oracle_enumerates_nine_itemsets() {
    let dir = tempfile::tempdir().unwrap();
    let input = sample_file(dir.path());
    let out = fpm(&["oracle", "--min-support", "2", "--input", &input]);
    assert_eq!(out.code, EXIT_OK);
    assert_eq!(out.stdout.lines().count(), 9);
    assert_eq!(out.stdout.lines().last(), Some("B,C,E / 2"));
    let capped = fpm(&[
        "oracle",
        "--min-support",
        "2",
        "--input",
        &input,
        "--max-k",
        "1",
    ]);
    assert_eq!(capped.stdout.lines().count(), 4);
}

#[test]
fn ratio_matches_ceiling_count() {
    let dir = tempfile::tempdir().unwrap();
    let input = sample_file(dir.path());
    // ceil(0.3 * 4) = 2
    let by_ratio = fpm(&[
        "compare",
        "--min-support-ratio",
        "0.3",
        "--input",
        &input,
        "--format",
        "json",
    ]);
    let by_count = fpm(&[
        "compare",
        "--min-support",
        "2",
        "--input",
        &input,
        "--format",
        "json",
    ]);
    assert_eq!(by_ratio.code, EXIT_OK);
    assert_eq!(by_ratio.stdout, by_count.stdout);
}

#[test]
fn gen_writes_reparsable_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("synthetic.txt");
    let path_str = path.to_string_lossy().into_owned();
    let args = [
        "gen",
        "--items",
        "10",
        "--txns",
        "30",
        "--mean-size",
        "4",
        "--seed",
        "42",
        "--output",
        &path_str,
    ];
    assert_eq!(fpm(&args).code, EXIT_OK);
    let first = std::fs::read_to_string(&path).unwrap();
    assert_eq!(first.lines().count(), 30);
    assert_eq!(fpm(&args).code, EXIT_OK);
    assert_eq!(std::fs::read_to_string(&path).unwrap(), first);

    let out = fpm(&["compare", "--min-support", "3", "--input", &path_str]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);

    let stdout = fpm(&[
        "gen",
        "--items",
        "10",
        "--txns",
        "30",
        "--mean-size",
        "4",
        "--seed",
        "42",
        "--output",
        "-",
    ]);
    assert_eq!(stdout.stdout, first);
}

#[test]
fn usage_errors_exit_one() {
    let dir = tempfile::tempdir().unwrap();
    let input = sample_file(dir.path());
    let both = fpm(&[
        "compare",
        "--min-support",
        "2",
        "--min-support-ratio",
        "0.5",
        "--input",
        &input,
    ]);
    assert_eq!(both.code, EXIT_USAGE);
    assert!(!both.stderr.is_empty());
    assert_eq!(fpm(&["compare", "--min-support", "2"]).code, EXIT_USAGE);
    assert_eq!(fpm(&["compare", "--input", &input]).code, EXIT_USAGE);
    assert_eq!(
        fpm(&["mine", "--min-support", "2", "--input", &input]).code,
        EXIT_USAGE
    );
    assert_eq!(
        fpm(&["compare", "--min-support", "0", "--input", &input]).code,
        EXIT_USAGE
    );
    assert_eq!(
        fpm(&[
            "compare",
            "--min-support",
            "2",
            "--input",
            &input,
            "--buckets",
            "0"
        ])
        .code,
        EXIT_USAGE
    );
    assert_eq!(
        fpm(&[
            "gen",
            "--items",
            "3",
            "--txns",
            "1",
            "--mean-size",
            "4",
            "--seed",
            "1",
            "--output",
            "-"
        ])
        .code,
        EXIT_USAGE
    );
    assert_eq!(fpm(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(fpm(&["--help"]).code, EXIT_OK);
}

#[test]
fn data_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("nope.txt");
    let out = fpm(&[
        "compare",
        "--min-support",
        "2",
        "--input",
        &missing.to_string_lossy(),
    ]);
    assert_eq!(out.code, EXIT_DATA);

    let bad = dir.path().join("bad.txt");
    std::fs::write(&bad, "A,B\nA,,C\n").unwrap();
    let out = fpm(&[
        "mine",
        "--algo",
        "dhp",
        "--min-support",
        "1",
        "--input",
        &bad.to_string_lossy(),
    ]);
    assert_eq!(out.code, EXIT_DATA);
    assert!(out.stderr.contains("line 2"), "{}", out.stderr);

    let wide = dir.path().join("wide.txt");
    let row: Vec<String> = (0..21).map(|i| format!("x{i}")).collect();
    std::fs::write(&wide, row.join(",")).unwrap();
    let out = fpm(&[
        "oracle",
        "--min-support",
        "1",
        "--input",
        &wide.to_string_lossy(),
    ]);
    assert_eq!(out.code, EXIT_DATA);
}

#[test]
fn whitespace_files_and_custom_buckets() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("ws.txt");
    std::fs::write(&path, "# sample database\nA C D\nB C E\n\nA B C E\nB E\n").unwrap();
    let input = path.to_string_lossy().into_owned();
    let out = fpm(&[
        "compare",
        "--min-support",
        "2",
        "--input",
        &input,
        "--buckets",
        "64",
        "--format",
        "csv",
    ]);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    assert_eq!(out.stdout.lines().count(), 7);
    let no_hash = fpm(&[
        "mine",
        "--algo",
        "dhp",
        "--min-support",
        "2",
        "--input",
        &input,
        "--hash-until-level",
        "0",
        "--format",
        "csv",
    ]);
    let c2 = no_hash.stdout.lines().nth(2).unwrap();
    assert!(c2.starts_with("2,dhp,6,4,2"), "{c2}");
}
