//! End-to-end tests of the `gallai` binary: golden stdout shapes, exit
//! codes, and determinism across thread budgets.

use std::io::Write as _;
use std::process::{Command, Output};

use gallai_cli::golden;

fn gallai(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gallai"))
        .args(args)
        .output()
        .expect("the binary spawns")
}

fn stdout_lines(output: &Output) -> Vec<String> {
    String::from_utf8(output.stdout.clone())
        .expect("stdout is UTF-8")
        .lines()
        .map(str::to_string)
        .collect()
}

/// Splits a one-record CSV body into header and fields.
fn csv_record(output: &Output) -> (Vec<String>, Vec<String>) {
    let lines = stdout_lines(output);
    assert_eq!(lines.len(), 2, "expected header plus one record, got {lines:?}");
    let split = |line: &str| line.split(',').map(str::to_string).collect::<Vec<_>>();
    (split(&lines[0]), split(&lines[1]))
}

#[test]
fn count_reports_the_census_row_as_csv() {
    let output = gallai(&["count", "--n", "4"]);
    assert!(output.status.success());
    let (header, fields) = csv_record(&output);
    assert_eq!(
        header,
        ["n", "c1", "c2", "c3", "total", "matches_expected", "elapsed_ms", "workers"]
    );
    assert_eq!(fields[..6], ["4", "3", "186", "90", "279", "true"]);
    assert_eq!(fields[7], "1");
}

#[test]
fn count_reports_the_census_row_as_an_enveloped_json_object() {
    let output = gallai(&["count", "--n", "5", "--format", "json"]);
    assert!(output.status.success());
    let value: serde_json::Value =
        serde_json::from_slice(&output.stdout).expect("stdout is one JSON document");
    let envelope = value.as_object().unwrap();
    assert_eq!(envelope.len(), 2, "payload key plus timestamp");
    let stamp = envelope["timestamp"].as_str().unwrap();
    chrono::DateTime::parse_from_rfc3339(stamp).expect("RFC 3339 timestamp");
    let payload = &envelope["count"];
    assert_eq!(payload["n"], 5);
    assert_eq!(payload["c1"], 3);
    assert_eq!(payload["c2"], 3066);
    assert_eq!(payload["c3"], 3060);
    assert_eq!(payload["total"], 6129);
    assert_eq!(payload["matches_expected"], true);
}

#[test]
fn count_output_is_identical_across_thread_budgets_modulo_timing() {
    let strip_timing = |output: &Output| {
        let (header, fields) = csv_record(output);
        assert_eq!(header[6], "elapsed_ms");
        assert_eq!(header[7], "workers");
        fields[..6].to_vec()
    };
    let serial = gallai(&["count", "--n", "6", "--threads", "1"]);
    let parallel = gallai(&["count", "--n", "6", "--threads", "4"]);
    assert!(serial.status.success() && parallel.status.success());
    assert_eq!(strip_timing(&serial), strip_timing(&parallel));
}

#[test]
fn oversized_requests_exit_with_the_size_code() {
    let no_deep = gallai(&["count", "--n", "8"]);
    assert_eq!(no_deep.status.code(), Some(4));
    let stderr = String::from_utf8_lossy(&no_deep.stderr).to_string();
    assert!(stderr.contains("--deep"), "stderr should point at --deep: {stderr}");

    assert_eq!(gallai(&["count", "--n", "9", "--deep"]).status.code(), Some(4));
    assert_eq!(gallai(&["classes", "--n", "7"]).status.code(), Some(4));
    assert_eq!(gallai(&["bounds", "--max-n", "2000"]).status.code(), Some(4));
}

#[test]
fn bad_inputs_exit_with_the_usage_code() {
    // Rainbow triangle {0, 1, 2}: edges rg b.
    assert_eq!(gallai(&["extend", "--inline", "3\nrgb"]).status.code(), Some(2));
    // Bad color character.
    assert_eq!(gallai(&["extend", "--inline", "3\nrgx"]).status.code(), Some(2));
    // Too few edges.
    assert_eq!(gallai(&["classify", "--inline", "4\nrrr"]).status.code(), Some(2));
    // Missing input source and conflicting filters are clap usage errors.
    assert_eq!(gallai(&["extend"]).status.code(), Some(2));
    assert_eq!(
        gallai(&["classes", "--n", "4", "--special", "--non-special"]).status.code(),
        Some(2)
    );
    assert_eq!(gallai(&["classes", "--n", "4", "--colors", "5"]).status.code(), Some(2));
}

#[test]
fn extend_list_streams_one_star_per_line() {
    let output = gallai(&["extend", "--inline", "2\nr", "--list"]);
    assert!(output.status.success());
    assert_eq!(stdout_lines(&output), ["rr", "rg", "rb", "gr", "gg", "br", "bb"]);
    let stderr = String::from_utf8_lossy(&output.stderr).to_string();
    assert!(stderr.contains("7 extensions"), "summary goes to stderr: {stderr}");
}

#[test]
fn extend_reads_colorings_from_files() {
    let mut file = tempfile::NamedTempFile::new().expect("temp file");
    write!(file, "5\nrrrbbbbbbb\n").unwrap();
    let path = file.path().to_str().unwrap();
    let output = gallai(&["extend", "--coloring", path]);
    assert!(output.status.success());
    let (_, fields) = csv_record(&output);
    // Any of the 2^5 red/blue stars extends this red/blue base without
    // rainbow risk; the other 13 extensions bring in green.
    assert_eq!(fields[..4], ["5", "rrrbbbbbbb", "45", "13"]);
}

#[test]
fn extend_json_includes_the_star_color_profile() {
    let output = gallai(&["extend", "--inline", "4\nrbrbbr", "--format", "json"]);
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    let payload = &value["extend"];
    assert_eq!(payload["total"], 21);
    let profile = payload["star_color_profile"].as_array().unwrap();
    let by_green: u64 = profile
        .iter()
        .filter(|entry| entry["green"] == 1)
        .map(|entry| entry["stars"].as_u64().unwrap())
        .sum();
    assert_eq!(by_green, 4, "four extensions use exactly one green star edge");
    let total: u64 = profile.iter().map(|entry| entry["stars"].as_u64().unwrap()).sum();
    assert_eq!(total, 21, "the profile partitions the extension count");
}

#[test]
fn classify_names_the_shape_and_its_witness() {
    let output = gallai(&["classify", "--inline", "4\nrrgbrr", "--format", "json"]);
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    let payload = &value["classify"];
    assert_eq!(payload["kind"], "three-color-edge-special");
    assert_eq!(payload["special"], true);
    assert_eq!(payload["colors_used"], 3);
    assert_eq!(payload["witness"], "edges {1, 2} and {0, 3}");
}

#[test]
fn classes_catalogs_the_three_colored_k4_and_plain_k5() {
    let output = gallai(&["classes", "--n", "4", "--colors", "3"]);
    assert!(output.status.success());
    let lines = stdout_lines(&output);
    assert_eq!(lines.len(), 3, "header plus the two special classes: {lines:?}");
    let members: u64 = lines[1..]
        .iter()
        .map(|line| line.split(',').nth(4).unwrap().parse::<u64>().unwrap())
        .sum();
    assert_eq!(members, 90, "the classes partition the three-colored census");

    let output = gallai(&[
        "classes", "--n", "5", "--colors", "3", "--non-special", "--no-mono-vertex",
    ]);
    assert!(output.status.success());
    let lines = stdout_lines(&output);
    assert_eq!(lines.len(), 6, "header plus five classes: {lines:?}");
    let mut extensions: Vec<u64> = lines[1..]
        .iter()
        .map(|line| line.split(',').nth(5).unwrap().parse::<u64>().unwrap())
        .collect();
    extensions.sort_unstable();
    assert_eq!(extensions, [25, 25, 29, 29, 31]);
}

#[test]
fn bounds_reproduces_the_frozen_ratio_columns() {
    let output = gallai(&["bounds", "--max-n", "8"]);
    assert!(output.status.success());
    let lines = stdout_lines(&output);
    assert_eq!(lines[0], "n,lower,exact,upper,upper_over_exact,exact_over_lower");
    assert_eq!(lines.len(), 1 + golden::BOUND_RATIOS.len());
    for (line, (n, upper_ratio, lower_ratio)) in lines[1..].iter().zip(golden::BOUND_RATIOS) {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields[0], n.to_string());
        assert_eq!(fields[4], upper_ratio);
        assert_eq!(fields[5], lower_ratio);
    }
}

#[test]
fn bounds_leaves_unknown_census_columns_empty() {
    let output = gallai(&["bounds", "--max-n", "10"]);
    assert!(output.status.success());
    let lines = stdout_lines(&output);
    let last: Vec<&str> = lines.last().unwrap().split(',').collect();
    assert_eq!(last[0], "10");
    assert_eq!(last[2], "-", "no exact census total beyond the computed range");
    assert_eq!(last[4], "-");
}

#[test]
fn verify_reports_every_check_and_exits_clean() {
    let output = gallai(&["verify"]);
    assert!(output.status.success(), "verification suite should pass");
    let lines = stdout_lines(&output);
    let (summary, checks) = lines.split_last().unwrap();
    assert!(!checks.is_empty());
    for line in checks {
        assert!(line.starts_with("ok"), "every check passes: {line}");
    }
    assert!(summary.contains(&format!("{} of {} checks passed", checks.len(), checks.len())));
}

#[test]
fn verify_json_nests_the_check_outcomes() {
    let output = gallai(&["verify", "--format", "json"]);
    assert!(output.status.success());
    let value: serde_json::Value = serde_json::from_slice(&output.stdout).unwrap();
    let payload = &value["verify"];
    assert_eq!(payload["passed"], true);
    assert_eq!(payload["deep"], false);
    let checks = payload["checks"].as_array().unwrap();
    assert!(checks.iter().all(|check| check["passed"] == true));
    assert!(checks.iter().any(|check| check["name"] == "census-table"));
}
