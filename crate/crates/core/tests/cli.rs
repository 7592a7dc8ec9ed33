use std::process::{Command, Output};

use heisfree::cli::{Diagnostic, SweepRecord, VerdictReport};
use heisfree::freeness::VerdictKind;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_heisfree"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn report(args: &[&str]) -> VerdictReport {
    let out = run(args);
    assert_eq!(
        out.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("one JSON document")
}

fn flag(r: &VerdictReport, key: &str) -> bool {
    match r.diagnostic(key) {
        Some(Diagnostic::Flag { value }) => *value,
        other => panic!("{key}: {other:?}"),
    }
}

#[test]
fn check_golden() {
    let out = run(&["check", "--mu", "-3/4", "--depth", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let golden = concat!(
        r#"{"command":"check","input":"mu=-3/4 path=complex depth=6","exactness":"exact","#,
        r#""verdict":"non_free_witness","certificate":"ABABAB","diagnostics":{"#,
        r#""circle_residual":{"kind":"exact","value":"-3/16"},"mu":{"kind":"exact","value":"(-3/4)+(0)i"},"#,
        r#""mu_norm_sqr":{"kind":"exact","value":"9/16"},"search_depth":{"kind":"count","value":6},"#,
        r#""trace_ab":{"kind":"exact","value":"0"},"witness_length":{"kind":"count","value":6},"#,
        r#""witness_reevaluates_to_identity":{"kind":"flag","value":true}}}"#,
        "\n"
    );
    assert_eq!(String::from_utf8(out.stdout).unwrap(), golden);
}

#[test]
fn check_examples() {
    let free = report(&["check", "--mu", "-1"]);
    assert_eq!(free.verdict, Some(VerdictKind::CertifiedFree));
    let off = report(&["check", "--mu=-3/4"]);
    assert_eq!(off.verdict, Some(VerdictKind::NotCovered));
    assert_eq!(
        off.diagnostic("circle_residual"),
        Some(&Diagnostic::exact("-3/16"))
    );
    let q = report(&["check", "--mu", "-1/2+1/2k", "--path", "quaternion"]);
    assert_eq!(q.verdict, Some(VerdictKind::CertifiedFree));
    for d in q.diagnostics.values() {
        if let Diagnostic::Float { tolerance, .. } | Diagnostic::Approx { tolerance, .. } = d {
            assert_eq!(*tolerance, 1e-12);
        }
    }
}

#[test]
fn deterministic_output() {
    let args = [
        "check",
        "--mu",
        "-1/2+1/2i",
        "--depth",
        "4",
        "--workers",
        "3",
    ];
    assert_eq!(run(&args).stdout, run(&args).stdout);
    let seq = report(&["check", "--mu", "-3/4", "--depth", "7"]);
    let par = report(&["check", "--mu", "-3/4", "--depth", "7", "--workers", "4"]);
    assert_eq!(seq, par);
}

#[test]
fn cartan_and_refute() {
    let boundary = report(&["cartan", "--nu-squared", "125/3"]);
    assert_eq!(
        boundary.diagnostic("mu_norm_sqr"),
        Some(&Diagnostic::exact("3/128"))
    );
    assert!(flag(&boundary, "nu_squared_bound_equality"));
    let seven = report(&["cartan", "--nu", "7"]);
    assert!(!flag(&seven, "nu_squared_bound_holds"));
    assert!(flag(&seven, "a_equals_i0_i2") && flag(&seven, "b_equals_i2_i1"));

    let r = report(&["refute"]);
    assert!(flag(&r, "flawed_condition"));
    assert_eq!(r.diagnostic("order"), Some(&Diagnostic::Count { value: 3 }));
    assert_eq!(r.certificate.as_deref(), Some("ABABAB"));
    let ab = "(4)+(0)i, (-4*sqrt2)+(0)i, (-4)+(0)i\n(3*sqrt2)+(0)i, (-5)+(0)i, (-2*sqrt2)+(0)i\n\
              (-9/4)+(0)i, (3/2*sqrt2)+(0)i, (1)+(0)i";
    assert_eq!(r.diagnostic("ab_matrix"), Some(&Diagnostic::exact(ab)));
}

#[test]
fn calculators() {
    let h = report(&["heis", "--p", "(1; 0)", "--q", "(i; 0)"]);
    assert_eq!(
        h.diagnostic("product"),
        Some(&Diagnostic::exact("((1)+(1)i; -2)"))
    );
    assert!(flag(&h, "homomorphism"));
    let lu = report(&["lu", "--m", "4i", "--n", "-i"]);
    assert_eq!(lu.verdict, Some(VerdictKind::CertifiedFree));
    let v = report(&["vquat", "--tau", "1i+1j+1k"]);
    assert_eq!(v.verdict, Some(VerdictKind::NotCovered));
}

#[test]
fn sweep_writes_schema_valid_records() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("sweep.jsonl");
    let summary = report(&[
        "sweep",
        "--nu-min",
        "0",
        "--nu-max",
        "7",
        "--steps",
        "8",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(
        summary.diagnostic("records"),
        Some(&Diagnostic::Count { value: 8 })
    );
    let text = std::fs::read_to_string(&path).unwrap();
    let records: Vec<SweepRecord> = text
        .lines()
        .map(|l| serde_json::from_str(l).expect("schema"))
        .collect();
    assert_eq!(records.len(), 8);
    assert_eq!(records[0].mu, "(-1)+(0)i");
    assert_eq!(records[6].verdict, VerdictKind::CertifiedFree);
    assert_eq!(records[7].verdict, VerdictKind::NotCovered);

    let single = dir.path().join("one.jsonl");
    report(&[
        "sweep",
        "--nu-min",
        "0",
        "--nu-max",
        "0",
        "--steps",
        "1",
        "--out",
        single.to_str().unwrap(),
    ]);
    let one: SweepRecord =
        serde_json::from_str(std::fs::read_to_string(&single).unwrap().trim()).unwrap();
    assert_eq!(one.verdict, VerdictKind::CertifiedFree);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["check", "--mu", "1+"]).status.code(), Some(1));
    assert_eq!(
        run(&[
            "check",
            "--mu",
            "-1",
            "--path",
            "quaternion",
            "--depth",
            "3"
        ])
        .status
        .code(),
        Some(1)
    );
    assert_eq!(
        run(&["check", "--mu", "-3/4", "--depth", "13"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(
        run(&["sweep", "--nu-min", "1", "--nu-max", "0", "--steps", "2", "--out", "x"])
            .status
            .code(),
        Some(1)
    );
    assert_eq!(run(&["vquat", "--tau", "0i"]).status.code(), Some(1));
    assert_eq!(run(&["bogus"]).status.code(), Some(1));
    assert_eq!(run(&["--help"]).status.code(), Some(0));
    let missing = std::env::temp_dir()
        .join("no-such-dir-for-heisfree")
        .join("out.jsonl");
    let out = run(&[
        "sweep",
        "--nu-min",
        "0",
        "--nu-max",
        "1",
        "--steps",
        "2",
        "--out",
        missing.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("cannot write"));
}

#[test]
fn pretty_format() {
    let out = run(&["--format", "pretty", "check", "--mu", "-1"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(
        text.starts_with("check mu=-1 path=complex depth=0\nverdict: certified_free\n"),
        "{text}"
    );
}
