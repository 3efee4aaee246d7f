//! Determinism acceptance: the same command run twice must produce
//! byte-identical payloads.  Prints one pass/fail line like the library
//! crate's acceptance suite.

use std::fs;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_curvedwave"))
}

fn report(id: u32, name: &str, pass: bool, detail: &str) {
    let status = if pass { "PASS" } else { "FAIL" };
    println!("criterion {:02} [{}]: {} ({})", id, name, status, detail);
    assert!(pass, "criterion {:02} [{}] failed: {}", id, name, detail);
}

#[test]
fn criterion_10_byte_identical_payloads() {
    let dir = tempfile::tempdir().expect("tempdir");
    let mut mismatches = Vec::new();
    let mut compared = 0usize;

    // spectrum, both formats, two runs each
    for format in ["csv", "json"] {
        let mut payloads = Vec::new();
        for run in 0..2 {
            let path = dir.path().join(format!("spectrum_{format}_{run}.{format}"));
            let status = bin()
                .args([
                    "spectrum", "--N-max", "6", "--kappa", "1.75", "--format", format,
                ])
                .arg("--out")
                .arg(&path)
                .status()
                .expect("spawn");
            assert!(status.success(), "spectrum run failed");
            payloads.push(fs::read(&path).expect("payload"));
        }
        compared += 1;
        if payloads[0] != payloads[1] {
            mismatches.push(format!("spectrum {format}"));
        }
    }

    // polynomials at the figure-dataset parameters, curves plus the
    // exact-coefficient sibling
    let mut sets = Vec::new();
    for run in 0..2 {
        let path = dir.path().join(format!("poly_{run}.csv"));
        let status = bin()
            .args(["polynomials", "--n", "4,5,12,13", "--L", "0,1,2,3,4,5,6,8"])
            .arg("--out")
            .arg(&path)
            .status()
            .expect("spawn");
        assert!(status.success(), "polynomials run failed");
        let curves = fs::read(&path).expect("curves");
        let coeffs =
            fs::read(dir.path().join(format!("poly_{run}_coefficients.csv"))).expect("coeffs");
        sets.push((curves, coeffs));
    }
    compared += 2;
    if sets[0].0 != sets[1].0 {
        mismatches.push("polynomials curves".into());
    }
    if sets[0].1 != sets[1].1 {
        mismatches.push("polynomials coefficients".into());
    }

    // polynomials json on stdout
    let outputs: Vec<_> = (0..2)
        .map(|_| {
            let out = bin()
                .args([
                    "polynomials",
                    "--n",
                    "12,13",
                    "--L",
                    "0,8",
                    "--format",
                    "json",
                ])
                .output()
                .expect("spawn");
            assert!(out.status.success());
            out.stdout
        })
        .collect();
    compared += 1;
    if outputs[0] != outputs[1] {
        mismatches.push("polynomials json".into());
    }

    report(
        10,
        "byte-identical payloads",
        mismatches.is_empty(),
        &format!(
            "{} payload pairs compared byte-for-byte; mismatches: {:?}",
            compared, mismatches
        ),
    );
}
