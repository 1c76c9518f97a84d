//! End-to-end tests of the binary: exit codes, report contents, format
//! equivalence, byte stability, the resource guard, and the cache file.

use std::process::{Command, Output};

use serde_json::Value;

fn gkdim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gkdim"))
        .args(args)
        .env_remove("GKDIM_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is valid JSON")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn am_both_routes_match_and_exit_zero() {
    let out = gkdim(&[
        "am", "--family", "sl2-z2", "--k", "1", "--m-max", "6", "--method", "both",
    ]);
    assert_eq!(code(&out), 0);
    let report = stdout_json(&out);
    let rows = report["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 6);
    let brute: Vec<&str> = rows.iter().map(|r| r[1].as_str().unwrap()).collect();
    assert_eq!(brute, ["2", "1", "2", "2", "4", "3"]);
    for row in rows {
        assert_eq!(row[1], row[2], "routes differ in {row}");
        assert_eq!(row[3], "true");
    }
}

#[test]
fn am_single_degree_counts_generators() {
    for (family, expected) in [("sl2-z", "3"), ("sl2-z2xz2", "3"), ("sl2-z2", "2")] {
        let out = gkdim(&["am", "--family", family, "--k", "1", "--m-max", "1"]);
        assert_eq!(code(&out), 0);
        let report = stdout_json(&out);
        let rows = report["rows"].as_array().unwrap();
        assert_eq!(rows.len(), 1);
        assert_eq!(rows[0][1], expected);
        assert_eq!(rows[0][3], "true");
    }
}

#[test]
fn am_formula_for_cyclic_family_is_usage_error() {
    let out = gkdim(&[
        "am", "--family", "sln", "--n", "3", "--k", "2", "--m-max", "3", "--method", "formula",
    ]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("no closed form"), "stderr: {err}");
}

#[test]
fn schur_reports_closed_forms_where_they_exist() {
    let out = gkdim(&["schur", "--shape", "2,1", "--k", "3"]);
    assert_eq!(code(&out), 0);
    let row = &stdout_json(&out)["rows"][0];
    assert_eq!(row[2], "8");
    assert_eq!(row[3], "8");
    assert_eq!(row[4], "true");

    let out = gkdim(&["schur", "--shape", "1,1,1", "--k", "2"]);
    assert_eq!(code(&out), 0);
    let report = stdout_json(&out);
    let row = &report["rows"][0];
    assert_eq!(row[2], "0");
    assert_eq!(row[3], "");
    assert_eq!(row[4], "");

    let out = gkdim(&["schur", "--shape", "4", "--k", "2"]);
    assert_eq!(code(&out), 0);
    let row = &stdout_json(&out)["rows"][0];
    assert_eq!(row[2], "5");
    assert_eq!(row[3], "5");
}

#[test]
fn schur_rejects_non_partition_shape() {
    let out = gkdim(&["schur", "--shape", "1,3", "--k", "2"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn sln_resource_guard_refuses_oversized_runs() {
    let out = gkdim(&["sln", "--n", "3", "--k", "1", "--m-max", "40"]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("cap of 1000000"), "stderr: {err}");
    assert!(err.contains("--max-words"), "stderr: {err}");
}

#[test]
fn sln_table_matches_known_small_values() {
    let out = gkdim(&[
        "sln", "--n", "2", "--k", "1", "--m-max", "4", "--assoc", "--format", "csv",
    ]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines[0],
        "m,multidegree,lie_dim,assoc_filtered_dim,assoc_all_dim"
    );
    assert!(lines.contains(&"2,x0_1*x1_1,1,1,1"));
    assert!(lines.contains(&"2,x0_1^2,0,0,1"));
    // The filtered module can exceed the Lie span on one component while
    // staying below the full associative span.
    assert!(lines.contains(&"4,x0_1^2*x1_1^2,0,1,1"));
}

#[test]
fn json_and_csv_carry_identical_numbers() {
    let args = ["am", "--family", "sl2-z2xz2", "--k", "2", "--m-max", "5"];
    let json_out = gkdim(&args);
    let mut csv_args = args.to_vec();
    csv_args.extend(["--format", "csv"]);
    let csv_out = gkdim(&csv_args);
    assert_eq!(code(&json_out), 0);
    assert_eq!(code(&csv_out), 0);

    let report = stdout_json(&json_out);
    let json_rows: Vec<Vec<String>> = report["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            r.as_array()
                .unwrap()
                .iter()
                .map(|c| c.as_str().unwrap().to_string())
                .collect()
        })
        .collect();

    let csv_text = String::from_utf8(csv_out.stdout).unwrap();
    let csv_rows: Vec<Vec<String>> = csv_text
        .lines()
        .skip(1)
        .map(|l| l.split(',').map(str::to_string).collect())
        .collect();
    assert_eq!(json_rows, csv_rows);
}

#[test]
fn reports_are_byte_stable_across_runs() {
    let args = [
        "am", "--family", "sl2-z", "--k", "2", "--m-max", "4", "--method", "both",
    ];
    let first = gkdim(&args);
    let second = gkdim(&args);
    assert_eq!(code(&first), 0);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn fit_reports_certified_degree() {
    let out = gkdim(&["fit", "--family", "sl2-z2", "--k", "2", "--m-max", "60"]);
    assert_eq!(code(&out), 0);
    let fit = &stdout_json(&out)["fit"];
    assert_eq!(fit["degree"], 5);
    assert_eq!(fit["stable"], true);
    assert_eq!(fit["window"][1], 60);
}

#[test]
fn fit_agrees_with_library_on_every_family() {
    use gkdim_core::cocharacter::{self, fit_degree};
    use gkdim_core::graded_model::Family;
    use gkdim_core::Int;
    for (name, family) in [
        ("sl2-z2", Family::Sl2Z2),
        ("sl2-z2xz2", Family::Sl2Z2Z2),
        ("sl2-z", Family::Sl2Z),
    ] {
        let samples: Vec<(u32, Int)> = cocharacter::growth_table(family, 1, 60)
            .unwrap()
            .growth()
            .into_iter()
            .enumerate()
            .map(|(i, g)| (i as u32 + 1, Int::from(g)))
            .collect();
        let expected = fit_degree(&samples).unwrap();
        let out = gkdim(&["fit", "--family", name, "--k", "1", "--m-max", "60"]);
        assert_eq!(code(&out), 0);
        let fit = &stdout_json(&out)["fit"];
        assert_eq!(fit["degree"], expected.degree, "family {name}");
        assert_eq!(fit["stride"], expected.stride, "family {name}");
        assert_eq!(fit["stable"], expected.stable, "family {name}");
    }
}

#[test]
fn fit_with_too_small_window_is_usage_error() {
    let out = gkdim(&["fit", "--family", "sl2-z2", "--k", "3", "--m-max", "8"]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("m-max"), "stderr: {err}");
}

#[test]
fn cache_directory_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_gkdim"))
            .args([
                "am", "--family", "sl2-z2", "--k", "2", "--m-max", "5", "--method", "brute",
            ])
            .env("GKDIM_CACHE_DIR", dir.path())
            .output()
            .expect("binary runs")
    };
    let first = run();
    assert_eq!(code(&first), 0);
    let cache_file = dir.path().join("dims.json");
    assert!(cache_file.exists());
    let map: std::collections::BTreeMap<String, u64> =
        serde_json::from_str(&std::fs::read_to_string(&cache_file).unwrap()).unwrap();
    assert!(!map.is_empty());
    assert!(map.keys().all(|k| k.starts_with("lie|sl2-z2|k2|ff1|")));

    let second = run();
    assert_eq!(code(&second), 0);
    assert_eq!(first.stdout, second.stdout);
}

#[test]
fn verify_passes_over_builtin_matrix() {
    let out = gkdim(&["verify", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut rows = 0;
    for line in text.lines().skip(1) {
        assert!(line.ends_with(",true"), "row failed: {line}");
        rows += 1;
    }
    // Three families, two generator counts each, windows 8/7/7.
    assert_eq!(rows, 2 * (8 + 7 + 7));
}
