use std::process::Command;

use nexus_cli::report::{AnalyzeDoc, ArrangementDoc, ConstraintDoc};
use nexus_cli::{run, CycloDoc, Outcome};

fn nexus(args: &[&str]) -> Outcome {
    let mut full = vec!["nexus"];
    full.extend_from_slice(args);
    run(full)
}

fn json_of<T: serde::de::DeserializeOwned>(out: &Outcome) -> T {
    assert_eq!(out.code, 0, "stderr: {}", out.stderr);
    serde_json::from_str(&out.stdout).expect("valid json")
}

const THREE_NODES: &str = r#"[{"k":1,"mu":1,"d":2},{"k":1,"mu":1,"d":2},{"k":1,"mu":1,"d":2}]"#;

#[test]
fn analyze_cylinder_over_node() {
    let out = nexus(&[
        "analyze",
        "--format",
        "json",
        "--json",
        r#"{"poly":"x^2+y^2","vars":["z","x","y"],"z0":"z"}"#,
    ]);
    let doc: AnalyzeDoc = json_of(&out);
    assert_eq!(doc.le.mu0, Some(1));
    assert_eq!(doc.le.lambda0, Some(0));
    assert_eq!(doc.le.lambda1, Some(1));
    assert_eq!(doc.le.omega, Some(0));
    let report = doc.report.expect("report");
    assert_eq!(report.application1.verdict, "NON_SPLITTING");
}

#[test]
fn analyze_xyz_with_components() {
    let input = format!(
        r#"{{"poly":"x*y*z","vars":["x","y","z"],"components":{}}}"#,
        THREE_NODES
    );
    let doc: AnalyzeDoc = json_of(&nexus(&["analyze", "--format", "json", "--json", &input]));
    assert_eq!(doc.le.mu0, Some(4));
    assert_eq!(doc.le.lambda1, Some(3));
    assert_eq!(doc.d0, Some(3));
    let report = doc.report.unwrap();
    assert_eq!(report.divisor_bound, "Phi_1^2");
    assert_eq!(report.char_h0.as_deref(), Some("Phi_1^2 * Phi_3"));
}

#[test]
fn analyze_text_mentions_verdict() {
    let out = nexus(&[
        "analyze",
        "--json",
        r#"{"poly":"x^2+y^2","vars":["z","x","y"],"z0":"z"}"#,
    ]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("NON_SPLITTING"));
    assert!(out.stdout.contains("mu0              1"));
}

#[test]
fn malformed_polynomial_is_input_error() {
    let out = nexus(&[
        "analyze",
        "--json",
        r#"{"poly":"x^2+*y","vars":["x","y","z"]}"#,
    ]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.starts_with("error: "));
    assert!(out.stdout.is_empty());
}

#[test]
fn malformed_json_is_input_error() {
    assert_eq!(nexus(&["constraints", "--json", "{"]).code, 1);
    assert_eq!(
        nexus(&["constraints", "--json", r#"{"n":2,"mu0":4,"extra":0}"#]).code,
        1
    );
}

#[test]
fn non_generic_slice_exits_two() {
    // x^2 is singular along a plane, so no slice is generic.
    let out = nexus(&[
        "analyze",
        "--json",
        r#"{"poly":"x^2","vars":["x","y","z"]}"#,
    ]);
    assert_eq!(out.code, 2, "{}", out.stderr);

    let out = nexus(&[
        "analyze",
        "--format",
        "json",
        "--json",
        r#"{"poly":"x^2+y^2","vars":["x","y","z"],"z0":"x"}"#,
    ]);
    assert_eq!(out.code, 2, "{}", out.stderr);
    let doc: AnalyzeDoc = serde_json::from_str(&out.stdout).unwrap();
    assert!(!doc.le.genericity_ok);
    assert_eq!(doc.le.mu0, None);
    assert!(doc.report.is_none());
}

#[test]
fn resource_limit_exits_three() {
    let out = nexus(&[
        "analyze",
        "--max-pairs",
        "1",
        "--json",
        r#"{"poly":"x*y*z","vars":["x","y","z"]}"#,
    ]);
    assert_eq!(out.code, 3, "{}", out.stderr);
    assert!(out.stderr.contains("resource limit"));
}

#[test]
fn budgets_must_be_positive() {
    assert_eq!(nexus(&["cyclo", "phi", "3", "--max-pairs", "0"]).code, 1);
    assert_eq!(
        nexus(&["cyclo", "phi", "3", "--max-monomials", "0"]).code,
        1
    );
}

#[test]
fn constraints_examples() {
    let input = format!(r#"{{"n":2,"mu0":4,"d0":3,"components":{}}}"#, THREE_NODES);
    let doc: ConstraintDoc = json_of(&nexus(&[
        "constraints",
        "--format",
        "json",
        "--json",
        &input,
    ]));
    assert_eq!(doc.divisor_bound, "Phi_1^2");
    assert_eq!(doc.lambda1, 3);

    let doc: ConstraintDoc = json_of(&nexus(&[
        "constraints",
        "--format",
        "json",
        "--json",
        r#"{"n":2,"mu0":4,"d0":3,"components":[]}"#,
    ]));
    assert_eq!(doc.divisor_bound, "1");
    assert!(doc
        .warnings
        .iter()
        .any(|w| w == "no components: Σf data missing"));

    let out = nexus(&[
        "constraints",
        "--json",
        r#"{"n":2,"mu0":4,"d0":3,"components":[{"k":1,"mu":1,"charH":"Phi_1^2"}]}"#,
    ]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("components[0]"));
    assert!(out.stderr.contains("degree"));
}

#[test]
fn arrangement_examples() {
    let xyz: ArrangementDoc = json_of(&nexus(&[
        "arrangement",
        "--format",
        "json",
        "--json",
        r#"{"normals":[[1,0,0],[0,1,0],[0,0,1]]}"#,
    ]));
    assert_eq!(xyz.report.mu0, 4);
    assert_eq!(xyz.report.lambda1, 3);
    assert_eq!(xyz.report.divisor_bound, "Phi_1^2");

    let pencil: ArrangementDoc = json_of(&nexus(&[
        "arrangement",
        "--format",
        "json",
        "--json",
        r#"{"normals":[[1,0,0],[0,1,0],[1,1,0]]}"#,
    ]));
    assert_eq!(pencil.report.mu0, pencil.report.lambda1);
    assert_eq!(pencil.report.application1.verdict, "NON_SPLITTING");

    let out = nexus(&[
        "arrangement",
        "--json",
        r#"{"normals":[[1,0,0],[0,1,0],[2,0,0]]}"#,
    ]);
    assert_eq!(out.code, 1);
}

#[test]
fn cyclo_examples() {
    assert_eq!(nexus(&["cyclo", "phi", "6"]).stdout, "t^2 - t + 1\n");
    assert_eq!(
        nexus(&["cyclo", "homchar", "2", "3"]).stdout,
        "Phi_1^2 * Phi_3 ; degree 4 ; trace 1\n"
    );
    let bad = nexus(&["cyclo", "homchar", "2", "1"]);
    assert_eq!(bad.code, 1);
    assert!(bad.stderr.contains(">= 2"));
    assert_eq!(nexus(&["cyclo", "phi", "0"]).code, 1);
    assert_eq!(
        nexus(&["cyclo", "unity", "4"]).stdout,
        "Phi_1 * Phi_2 * Phi_4 ; t^4 - 1\n"
    );
    assert_eq!(
        nexus(&["cyclo", "gcd", "Phi_1^2 * Phi_3", "Phi_1^3"]).stdout,
        "Phi_1^2 ; t^2 - 2*t + 1\n"
    );
    assert_eq!(nexus(&["cyclo", "trace", "Phi_1^2 * Phi_3"]).stdout, "1\n");
    assert_eq!(
        nexus(&["cyclo", "expand", "Phi_2^2"]).stdout,
        "t^2 + 2*t + 1\n"
    );
    assert_eq!(nexus(&["cyclo", "expand", "Psi_2"]).code, 1);

    let doc: CycloDoc = json_of(&nexus(&["cyclo", "homchar", "3", "2", "--format", "json"]));
    assert_eq!(doc.degree, 1);
    assert_eq!(doc.trace, -1);
}

fn round_trip<T>(text: &str)
where
    T: serde::Serialize + serde::de::DeserializeOwned + PartialEq + std::fmt::Debug,
{
    let doc: T = serde_json::from_str(text).unwrap();
    let reprinted = format!("{}\n", serde_json::to_string_pretty(&doc).unwrap());
    assert_eq!(reprinted, text);
    assert_eq!(serde_json::from_str::<T>(&reprinted).unwrap(), doc);
}

#[test]
fn json_round_trips() {
    let cases: [&[&str]; 4] = [
        &[
            "analyze",
            "--json",
            r#"{"poly":"x*y*z","vars":["x","y","z"],"seed":7}"#,
        ],
        &[
            "arrangement",
            "--json",
            r#"{"normals":[[1,0,0],[0,1,0],[0,0,1],[1,1,1]]}"#,
        ],
        &[
            "constraints",
            "--json",
            r#"{"n":2,"mu0":9,"d0":4,"components":[{"k":1,"mu":1,"d":2}]}"#,
        ],
        &["cyclo", "unity", "12"],
    ];
    for args in cases {
        let mut with_json = args.to_vec();
        with_json.extend(["--format", "json"]);
        let out = nexus(&with_json);
        assert_eq!(out.code, 0, "{}", out.stderr);
        match args[0] {
            "analyze" => round_trip::<AnalyzeDoc>(&out.stdout),
            "arrangement" => round_trip::<ArrangementDoc>(&out.stdout),
            "constraints" => round_trip::<ConstraintDoc>(&out.stdout),
            _ => round_trip::<CycloDoc>(&out.stdout),
        }
    }
}

#[test]
fn deterministic_output() {
    let args = [
        "analyze",
        "--seed",
        "11",
        "--json",
        r#"{"poly":"x*y*z+x^4","vars":["x","y","z"]}"#,
    ];
    let a = nexus(&args);
    let b = nexus(&args);
    assert_eq!(a, b);
    assert_eq!(a.code, 0, "{}", a.stderr);
}

#[test]
fn input_file_and_binary() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("job.json");
    std::fs::write(&path, r#"{"normals":[[1,0,0],[0,1,0],[0,0,1]]}"#).unwrap();
    let path = path.to_str().unwrap();

    let run_bin = || {
        Command::new(env!("CARGO_BIN_EXE_nexus"))
            .args(["arrangement", "--input", path, "--format", "json"])
            .output()
            .unwrap()
    };
    let first = run_bin();
    let second = run_bin();
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(first.stdout, second.stdout);
    let doc: ArrangementDoc = serde_json::from_slice(&first.stdout).unwrap();
    assert_eq!(doc.degree, 3);
    assert_eq!(
        String::from_utf8(first.stdout).unwrap(),
        nexus(&["arrangement", "--input", path, "--format", "json"]).stdout
    );

    let missing = Command::new(env!("CARGO_BIN_EXE_nexus"))
        .args(["constraints", "--input", "/nonexistent/job.json"])
        .output()
        .unwrap();
    assert_eq!(missing.status.code(), Some(1));

    let bad = Command::new(env!("CARGO_BIN_EXE_nexus"))
        .args(["cyclo", "homchar", "2", "1"])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
}

#[test]
fn input_and_json_conflict() {
    assert_eq!(
        nexus(&["constraints", "--input", "a", "--json", "{}"]).code,
        1
    );
}
