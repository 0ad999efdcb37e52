use std::fs;
use std::process::Command;

use cexkit::algebra::{is_iso_witness, matrix_from_text, Algebra};
use cexkit::cli::{run_with, EXIT_FAIL, EXIT_OK, EXIT_USAGE};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("cexkit").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_cexkit"))
}

#[test]
fn null_filiform_cohomology_dims() {
    // μ₀⁵: dims (5, 4, 1)
    let (code, out, _) = run(&["cohomology", "mu0:5"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("dim Z2 = 5\ndim B2 = 4\ndim H2 = 1\n"), "{out}");
    let (_, machine, _) = run(&["--machine", "cohomology", "mu0:5"]);
    let v: serde_json::Value = serde_json::from_str(&machine).unwrap();
    assert_eq!(v["dims"], serde_json::json!([5, 4, 1]));
    assert_eq!(v["h2"]["components"].as_array().unwrap().len(), 1);
}

#[test]
fn extending_by_the_h2_generator_gives_the_next_catalog_table() {
    let dir = tempfile::tempdir().unwrap();
    let (_, machine, _) = run(&["--machine", "cohomology", "mu0:3"]);
    let v: serde_json::Value = serde_json::from_str(&machine).unwrap();
    let h2 = dir.path().join("h2gen.txt");
    fs::write(&h2, v["h2"].to_string()).unwrap();
    let out_file = dir.path().join("ext.txt");
    let (code, _, err) = run(&["extend", "mu0:3", "--cocycle", h2.to_str().unwrap(), "-o", out_file.to_str().unwrap()]);
    assert_eq!(code, EXIT_OK, "{err}");
    let (_, catalog, _) = run(&["catalog", "mu0:4"]);
    assert_eq!(fs::read_to_string(&out_file).unwrap(), catalog);
}

#[test]
fn catalog_file_round_trip_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    for spec in ["mu0:6", "mu1_1:6", "mu1_2:7", "mu2_2:6:alpha=1/2", "mu3_5:8"] {
        let (_, table, _) = run(&["catalog", spec]);
        let f = dir.path().join("alg.txt");
        fs::write(&f, &table).unwrap();
        for cmd in ["cohomology", "fingerprint"] {
            for flags in [&[][..], &["--machine"][..]] {
                let mut a: Vec<&str> = flags.to_vec();
                a.extend([cmd, spec]);
                let from_spec = run(&a);
                let mut b: Vec<&str> = flags.to_vec();
                b.extend([cmd, f.to_str().unwrap()]);
                assert_eq!(from_spec, run(&b), "{cmd} {spec}");
            }
        }
    }
}

#[test]
fn subcommands_are_deterministic() {
    for args in [
        &["cohomology", "mu1_3:6"][..],
        &["--machine", "reconstruct", "mu1_1:6"][..],
        &["fingerprint", "mu2_4:7"][..],
        &["iso-search", "mu1_1:5", "mu1_2:5", "--field", "2"][..],
    ] {
        assert_eq!(run(args), run(args));
    }
}

#[test]
fn reconstruct_emits_a_verified_witness() {
    let (code, out, _) = run(&["--machine", "reconstruct", "mu1_4:6"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let a_prime = Algebra::from_text(&v["a_prime"].to_string()).unwrap();
    let theta = cexkit::cohomology::Cocycle::from_text(&v["theta"].to_string()).unwrap();
    let w = matrix_from_text(&v["witness"].to_string()).unwrap();
    let b = cexkit::catalog::algebra(cexkit::catalog::Family::Mu1(4), 6).unwrap();
    let ext = cexkit::extension::central_extend(&a_prime, &theta).unwrap();
    assert!(is_iso_witness(&b, &ext, &w));
}

#[test]
fn iso_witness_accepts_identity_and_rejects_zero() {
    let dir = tempfile::tempdir().unwrap();
    let id = dir.path().join("id.txt");
    fs::write(&id, cexkit::algebra::matrix_to_text(&cexkit::Matrix::identity(5))).unwrap();
    let zero = dir.path().join("zero.txt");
    fs::write(&zero, cexkit::algebra::matrix_to_text(&cexkit::Matrix::zeros(5, 5))).unwrap();
    let (code, out, _) = run(&["iso-witness", "mu1_2:5", "mu1_2:5", "--matrix", id.to_str().unwrap()]);
    assert_eq!((code, out.trim()), (EXIT_OK, "witness verified"));
    let (code, _, _) = run(&["iso-witness", "mu1_2:5", "mu1_2:5", "--matrix", zero.to_str().unwrap()]);
    assert_eq!(code, EXIT_FAIL);
    let (code, _, err) = run(&["iso-witness", "mu1_2:5", "mu1_2:7", "--matrix", id.to_str().unwrap()]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("dimension"), "{err}");
}

#[test]
fn iso_search_outcomes_and_guard() {
    // μ_{1,1}⁵ and μ_{1,2}⁵ have different H² dimensions, so no isomorphism
    let (code, _, _) = run(&["iso-search", "mu1_1:5", "mu1_2:5", "--field", "2"]);
    assert_eq!(code, EXIT_FAIL);
    let (code, out, _) = run(&["--machine", "iso-search", "mu0:4", "mu0:4", "--field", "3"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(matrix_from_text(&out).unwrap().rows(), 4);
    let (code, _, err) = run(&["iso-search", "mu0:6", "mu0:6", "--field", "2"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("guard"), "{err}");
}

#[test]
fn verification_commands() {
    // the μ_{1,1} action formula holds at n = 5
    let (code, out, _) = run(&["verify-action", "mu1_1", "--n", "5"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.ends_with("verdict: pass\n"));
    let (code, out, _) = run(&["verify-classification", "mu0", "--n", "5", "--s", "1"]);
    assert_eq!(code, EXIT_OK, "{out}");
}

#[test]
fn usage_and_format_errors_have_distinct_diagnostics() {
    let dir = tempfile::tempdir().unwrap();
    let junk = dir.path().join("junk.txt");
    fs::write(&junk, "{\"dim\": 2}").unwrap();
    let cases: [(&[&str], &str); 5] = [
        (&["cohomology", "mu7_1:5"], "unknown family"),
        (&["cohomology", junk.to_str().unwrap()], "table"),
        (&["catalog", "mu2_2:6"], "requires alpha"),
        (&["catalog", "mu1_1:3"], "requires n >= 4"),
        (&["extend", "mu0:3", "--cocycle", "/nonexistent/c.txt"], "io error"),
    ];
    for (args, needle) in cases {
        let (code, _, err) = run(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert!(err.contains(needle), "{args:?}: {err}");
    }
    let (code, _, err) = run(&["frobnicate"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("unrecognized subcommand"));
}

#[test]
fn binary_exit_codes_and_thread_variable() {
    let ok = bin().args(["cohomology", "mu0:4"]).env("CEXKIT_THREADS", "2").output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    let bad = bin().args(["cohomology", "mu0:4"]).env("CEXKIT_THREADS", "0").output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&bad.stderr).contains("CEXKIT_THREADS"));
    let usage = bin().arg("extend").output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
    let help = bin().arg("--help").output().unwrap();
    assert_eq!(help.status.code(), Some(0));
    for sub in [
        "cohomology",
        "extend",
        "catalog",
        "fingerprint",
        "iso-witness",
        "iso-search",
        "reconstruct",
        "verify-action",
        "verify-classification",
        "reproduce-paper",
    ] {
        assert!(String::from_utf8_lossy(&help.stdout).contains(sub), "{sub}");
    }
}
