//! End-to-end tests of the binary: flags, exit codes, output formats,
//! determinism across parallelism settings, and the dump file format.

use std::process::{Command, Output};

use nilhom_cli::render::{AllDegreesJson, HomologyJson, PlethysmJson, VerifyJson};

fn nilhom(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nilhom"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 output")
}

#[test]
fn homology_intro_table_row() {
    let out = nilhom(&["homology", "--g", "1", "--r", "4", "--k", "3"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(
        text.contains("H_3 ⊗ S(1,1,1) + H_2 ⊗ S(3,1) + H_0 ⊗ S(4)"),
        "unexpected output: {text}"
    );
}

#[test]
fn homology_json_round_trips_byte_identical() {
    let out = nilhom(&[
        "homology", "--g", "1", "--r", "3", "--k", "2", "--output", "json",
    ]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let parsed: HomologyJson = serde_json::from_str(text.trim()).expect("valid JSON");
    assert_eq!(serde_json::to_string(&parsed).unwrap(), text.trim());
    assert_eq!(parsed.k, 2);
    assert_eq!(parsed.decomposition.entries.len(), 2);
}

#[test]
fn homology_all_degrees_rank_one() {
    let out = nilhom(&["homology", "--g", "1", "--r", "1", "--all-degrees"]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("[1, 2, 0, 2, 1]"));

    let out = nilhom(&[
        "homology",
        "--g",
        "1",
        "--r",
        "1",
        "--all-degrees",
        "--output",
        "json",
    ]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let parsed: AllDegreesJson = serde_json::from_str(text.trim()).unwrap();
    assert_eq!(parsed.dims_by_poly_degree, vec![1, 2, 0, 2, 1]);
    assert_eq!(parsed.dims_by_homological_degree, vec![1, 2, 2, 1]);
    assert_eq!(serde_json::to_string(&parsed).unwrap(), text.trim());
}

#[test]
fn identical_runs_across_parallelism() {
    let run = |threads: &str| {
        let out = nilhom(&[
            "homology",
            "--g",
            "1",
            "--r",
            "3",
            "--k",
            "3",
            "--output",
            "json",
            "--parallelism",
            threads,
        ]);
        assert!(out.status.success());
        out.stdout
    };
    let single = run("1");
    assert_eq!(single, run("4"));
    assert_eq!(single, run("0"));
}

#[test]
fn invalid_input_exits_one() {
    let out = nilhom(&["homology", "--g", "1", "--r", "0", "--k", "1"]);
    assert_eq!(out.status.code(), Some(1));

    let out = nilhom(&["homology", "--g", "1", "--r", "2"]);
    assert_eq!(out.status.code(), Some(1), "missing --k");

    let out = nilhom(&["homology", "--no-such-flag"]);
    assert_eq!(out.status.code(), Some(1));

    let out = nilhom(&["verify-paper", "--only", "no-such-check"]);
    assert_eq!(out.status.code(), Some(1));

    let out = nilhom(&[
        "dump",
        "--operator",
        "laplacian",
        "--r",
        "2",
        "--k",
        "-1",
        "--l",
        "0",
        "--out",
        "/tmp/x",
    ]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verification_failure_exits_two() {
    let out = nilhom(&["verify-paper", "--only", "ell2-formula"]);
    assert_eq!(out.status.code(), Some(2));
    let text = stdout_of(&out);
    assert!(text.contains("FAIL"));
    assert!(
        text.contains("H_0 ⊗ S(5,1)"),
        "failure detail shows the extra summand"
    );
}

#[test]
fn verify_single_checks_pass() {
    let out = nilhom(&["verify-paper", "--only", "sigg", "--r", "4", "--k", "3"]);
    assert!(out.status.success(), "sigg r=4 k=3 passes");
    assert!(stdout_of(&out).contains("PASS sigg"));

    let out = nilhom(&[
        "verify-paper",
        "--only",
        "theorem-main",
        "--g",
        "2",
        "--r",
        "2",
        "--max-degree",
        "4",
    ]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("PASS theorem-main"));

    let out = nilhom(&["verify-paper", "--only", "intro-table", "--output", "json"]);
    assert!(out.status.success());
    let parsed: VerifyJson = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    assert!(parsed.all_passed);
    assert_eq!(
        serde_json::to_string(&parsed).unwrap(),
        stdout_of(&out).trim()
    );
}

#[test]
fn plethysm_json() {
    let out = nilhom(&["plethysm", "--l", "2", "--output", "json"]);
    assert!(out.status.success());
    let parsed: PlethysmJson = serde_json::from_str(stdout_of(&out).trim()).unwrap();
    assert_eq!(parsed.r, 4);
    assert_eq!(parsed.decomposition.entries.len(), 1);
}

#[test]
fn operators_subcommand() {
    let out = nilhom(&["operators", "--g", "1", "--r", "2", "--max-degree", "4"]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("all identities hold"));
}

#[test]
fn dump_laplacian_one_file_per_block() {
    let dir = tempfile::tempdir().unwrap();
    let out = nilhom(&[
        "dump",
        "--operator",
        "laplacian",
        "--g",
        "1",
        "--r",
        "2",
        "--k",
        "2",
        "--l",
        "0",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(out.status.success());
    // K_{2,0} at r=2 splits into 5 weight blocks: (2,0)|0, (0,2)|0, and
    // (1,1) at Sp weights 2, 0, −2.
    let files: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(files.len(), 5);
}

#[test]
fn dump_boundary_rank_one_entry() {
    let dir = tempfile::tempdir().unwrap();
    let out = nilhom(&[
        "dump",
        "--operator",
        "boundary",
        "--g",
        "1",
        "--r",
        "1",
        "--k",
        "2",
        "--l",
        "0",
        "--out",
        dir.path().to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let entries: Vec<_> = std::fs::read_dir(dir.path()).unwrap().collect();
    assert_eq!(entries.len(), 1);
    let path = entries[0].as_ref().unwrap().path();
    let content = std::fs::read_to_string(&path).unwrap();
    assert_eq!(content, "1 1 1\n0 0 1\n", "single 1x1 block with entry +1");
}

#[test]
fn cache_dir_env_is_honored() {
    let dir = tempfile::tempdir().unwrap();
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_nilhom"))
            .args([
                "homology", "--g", "1", "--r", "2", "--k", "2", "--output", "json",
            ])
            .env("NILHOM_CACHE_DIR", dir.path())
            .output()
            .expect("binary runs")
    };
    let first = run();
    assert!(first.status.success());
    let cached_files = std::fs::read_dir(dir.path()).unwrap().count();
    assert!(cached_files > 0, "cache populated");
    let second = run();
    assert_eq!(
        first.stdout, second.stdout,
        "cached run gives identical output"
    );
}
