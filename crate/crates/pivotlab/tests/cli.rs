//! End-to-end checks of the binary: formats, exit codes, determinism.

use std::process::{Command, Output};

fn pivotlab(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pivotlab"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_without_timing(output: &Output) -> String {
    let text = String::from_utf8_lossy(&output.stdout);
    text.lines()
        .map(|line| {
            // elapsed_ms is the one run-dependent field.
            match line.find(",\"elapsed_ms\":") {
                Some(idx) => format!("{}}}", &line[..idx]),
                None => line.to_string(),
            }
        })
        .collect::<Vec<_>>()
        .join("\n")
}

#[test]
fn spectra_count_reports_the_clique_law() {
    let out = pivotlab(&[
        "spectra",
        "count",
        "--anf",
        "n=3; x0*x1+x0*x2+x1*x2",
        "--family",
        "IH",
        "--witnesses",
    ]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("\"count\":4"), "{text}");
    assert!(text.contains("\"witnesses\":[\"III\",\"HHI\",\"HIH\",\"IHH\"]"), "{text}");
}

#[test]
fn usage_errors_exit_2() {
    let out = pivotlab(&["spectra", "count", "--family", "IH"]);
    assert_eq!(out.status.code(), Some(2));
    let out = pivotlab(&["nonsense"]);
    assert_eq!(out.status.code(), Some(2));
    let out = pivotlab(&["spectra", "count", "--anf", "n=3; x0", "--bogus-flag", "x"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn budget_errors_exit_3() {
    let out = pivotlab(&["tables", "--table", "2", "--max-n", "12"]);
    assert_eq!(out.status.code(), Some(3));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("\"kind\":\"budget\""), "{text}");
    let out = pivotlab(&["classify", "--n", "12", "--move", "pivot"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn golden_mismatch_exits_4() {
    // Table 1 to n=4 includes the documented random-column discrepancy.
    let out = pivotlab(&["tables", "--table", "1", "--max-n", "4"]);
    assert_eq!(out.status.code(), Some(4));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("\"computed\":\"1.389\""), "{text}");
    assert!(text.contains("\"golden\":\"1.390\""), "{text}");
    // A clean table exits 0.
    let out = pivotlab(&["tables", "--table", "2", "--max-n", "5"]);
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn reports_are_deterministic_and_thread_independent() {
    let args = [
        "classify",
        "--n",
        "5",
        "--move",
        "pivot",
        "--universe",
        "connected",
        "--mode",
        "unlabelled",
    ];
    let first = stdout_without_timing(&pivotlab(&args));
    let second = stdout_without_timing(&pivotlab(&args));
    assert_eq!(first, second);
    let mut one_thread = args.to_vec();
    one_thread.extend(["--threads", "1"]);
    let mut four_threads = args.to_vec();
    four_threads.extend(["--threads", "4"]);
    assert_eq!(
        stdout_without_timing(&pivotlab(&one_thread)),
        stdout_without_timing(&pivotlab(&four_threads))
    );
    assert!(first.contains("\"orbits\":10"), "{first}");
}

#[test]
fn classify_out_writes_a_parseable_database() {
    let dir = std::env::temp_dir().join("pivotlab-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("reps.txt");
    let out = pivotlab(&[
        "classify",
        "--n",
        "6",
        "--move",
        "pivot",
        "--universe",
        "bipartite-connected",
        "--mode",
        "unlabelled",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&path).unwrap();
    let graphs = pivotlab::orbit::reps_from_database(&text).unwrap();
    assert_eq!(graphs.len(), 8);
    let mut lines: Vec<&str> = text.lines().collect();
    let sorted = {
        let mut s = lines.clone();
        s.sort_unstable();
        s
    };
    assert_eq!(lines, sorted, "database lines are sorted");
    lines.dedup();
    assert_eq!(lines.len(), 8);
}

#[test]
fn codes_subcommands_round_trip() {
    let out = pivotlab(&["codes", "classify", "--n", "6"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("\"indecomposable\":13"), "{text}");
    assert!(text.contains("\"isodual\":3"), "{text}");

    let dir = std::env::temp_dir().join("pivotlab-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("code.txt");
    std::fs::write(&path, "7 4\n1010001\n0110011\n0001111\n1111111\n").unwrap();
    let out = pivotlab(&["codes", "infosets", "--file", path.to_str().unwrap()]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("\"information_sets\":"), "{text}");
}

#[test]
fn verify_reports_all_suites() {
    let out = pivotlab(&["verify", "--suite", "clique-law", "--n", "6", "--seed", "7"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("\"suite\":\"clique-law\""));
    assert!(text.contains("\"passed\":true"));
    assert!(text.contains("\"all_passed\":true"));

    let out = pivotlab(&["verify", "--suite", "all", "--n", "4", "--seed", "7", "--cases", "60"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    for suite in [
        "pivot-identity",
        "quadpiv",
        "onlypivot",
        "transform-identities",
        "rank-criterion",
        "family-bounds",
        "clique-law",
    ] {
        assert!(text.contains(&format!("\"suite\":\"{suite}\"")), "{text}");
    }
    assert!(text.contains("\"all_passed\":true"));
}

#[test]
fn pivot_subcommand_paths() {
    let out = pivotlab(&["pivot", "--anf", "n=4; x0*x1+x1*x2*x3", "--edge", "0,1"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("\"result\":\"n=4; x0*x1+x0*x2*x3\""), "{text}");

    let out = pivotlab(&["pivot", "--hex", "3:2,5,2", "--lc", "1"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("\"result\":\"3:6,5,3\""), "{text}");

    let out = pivotlab(&["pivot", "--hex", "3:2,5,2", "--edge", "0,2"]);
    assert_eq!(out.status.code(), Some(1), "pivot on a non-edge is an error");

    let out = pivotlab(&["pivot", "--anf", "n=3; x0*x1+x0*x1*x2", "--edge", "0,1"]);
    assert_eq!(out.status.code(), Some(1), "inadmissible edge is an error");
}

#[test]
fn spectra_rank_fast_path() {
    let out = pivotlab(&[
        "spectra",
        "count",
        "--anf",
        "n=16; x0*x1+x1*x2+x2*x3+x3*x4+x4*x5+x5*x6+x6*x7+x7*x8+x8*x9+x9*x10+x10*x11+x11*x12+x12*x13+x13*x14+x14*x15",
        "--family",
        "IH",
        "--rank",
    ]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("\"count\":"), "{text}");
}

#[test]
fn graph_formats_are_accepted_everywhere() {
    let dir = std::env::temp_dir().join("pivotlab-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("graph.txt");
    std::fs::write(&path, "n=3\n0 1\n1 2\n").unwrap();
    let from_file = pivotlab(&["orbit", "--graph", path.to_str().unwrap(), "--move", "lc"]);
    let from_hex = pivotlab(&["orbit", "--hex", "3:2,5,2", "--move", "lc"]);
    assert_eq!(
        stdout_without_timing(&from_file),
        stdout_without_timing(&from_hex)
    );
}
