use std::io::Write;
use std::process::{Command, Output, Stdio};

fn complicial(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_complicial"))
        .args(args)
        .env_remove("COMPLICIAL_BUDGET")
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary runs");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const NON_UNITAL: &str = r#"{"dims": [["x", "y", "z"], ["e"]],
    "boundary": {"e": {"x": 1, "y": 1, "z": -2}},
    "augmentation": {"x": 1, "y": 1, "z": 1}}"#;

const TWO_CYCLE: &str = r#"{"dims": [["x", "y"], ["e", "f"]],
    "boundary": {"e": {"y": 1, "x": -1}, "f": {"x": 1, "y": -1}},
    "augmentation": {"x": 1, "y": 1}}"#;

#[test]
fn exit_codes_on_fixtures() {
    let triangle = stdout(&complicial(&["complex", "delta", "--n", "2"], ""));
    let cases: [(&[&str], &str, i32); 10] = [
        (&["check", "complex"], &triangle, 0),
        (&["check", "unital"], &triangle, 0),
        (&["check", "loopfree"], &triangle, 0),
        (&["check", "unital"], NON_UNITAL, 1),
        (&["check", "loopfree"], TWO_CYCLE, 1),
        (&["check", "complex"], "{\"dims\": ", 2),
        (&["check", "complex", "--input", "/nonexistent/complex.json"], "", 2),
        (&["complex", "w", "--n", "1", "--k", "1"], "", 2),
        (&["nu", "enumerate", "--n", "1", "--coeff-bound", "0"], "", 2),
        (&["atoms"], "", 2),
    ];
    for (args, input, code) in cases {
        let out = complicial(args, input);
        assert_eq!(out.status.code(), Some(code), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    }
}

#[test]
fn emitted_complexes_round_trip() {
    for args in [
        vec!["complex", "delta", "--n", "3"],
        vec!["complex", "horn", "--n", "3", "--k", "0"],
        vec!["complex", "vee", "--n", "4", "--k", "2"],
        vec!["complex", "w", "--n", "3", "--k", "2"],
    ] {
        let emitted = stdout(&complicial(&args, ""));
        let back = complicial::adc::json::complex_from_str(&emitted).unwrap();
        assert_eq!(complicial::adc::json::complex_to_string(&back), emitted.trim_end());
        assert_eq!(complicial(&["check", "complex"], &emitted).status.code(), Some(0));
    }
}

#[test]
fn loop_witness_and_unital_witness() {
    let out = stdout(&complicial(&["--format", "text", "check", "loopfree"], TWO_CYCLE));
    assert!(out.starts_with("not loop-free:"), "{out}");
    let out: serde_json::Value = serde_json::from_str(&stdout(&complicial(&["check", "unital"], NON_UNITAL))).unwrap();
    assert_eq!(out["witnesses"], serde_json::json!(["e"]));
}

#[test]
fn atoms_and_oriental_sizes() {
    let atoms: Vec<serde_json::Value> = serde_json::from_str(&stdout(&complicial(&["atoms", "--n", "2"], ""))).unwrap();
    assert_eq!(atoms.len(), 7);
    for (method, n, size) in [("enumerate", "2", 8), ("closure", "3", 24)] {
        let out: Vec<serde_json::Value> = serde_json::from_str(&stdout(&complicial(&["nu", method, "--n", n], ""))).unwrap();
        assert_eq!(out.len(), size);
    }
    let table: serde_json::Value =
        serde_json::from_str(&stdout(&complicial(&["nu", "closure", "--n", "1", "--table"], ""))).unwrap();
    assert_eq!(table["elements"].as_array().unwrap().len(), 3);
}

#[test]
fn budget_from_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_complicial"))
        .args(["nu", "closure", "--n", "3"])
        .env("COMPLICIAL_BUDGET", "7")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget of 7"));
}

#[test]
fn nerve_to_identities_pipeline() {
    let arrow = stdout(&complicial(&["complex", "delta", "--n", "1"], ""));
    let nerve: serde_json::Value =
        serde_json::from_str(&stdout(&complicial(&["nerve", "--target", "-", "--max-dim", "2"], &arrow))).unwrap();
    let sizes: Vec<usize> = nerve["dims"].as_array().unwrap().iter().map(|d| d["elements"].as_array().unwrap().len()).collect();
    assert_eq!(sizes, vec![2, 3, 4]);

    let set = stdout(&complicial(&["nerve", "--target", "-", "--max-dim", "3", "--stratified"], &arrow));
    let parsed = complicial::stratified::StratifiedSet::from_json_str(&set).unwrap();
    assert_eq!(parsed.to_json_string(), set.trim_end());

    let report = complicial(&["complicial"], &set);
    assert_eq!(report.status.code(), Some(0));
    let report: serde_json::Value = serde_json::from_str(&stdout(&report)).unwrap();
    assert_eq!(report["violations"], serde_json::json!([]));

    let ids = complicial(&["identities", "--max-dim", "3"], &set);
    assert_eq!(ids.status.code(), Some(0));
    let ids: serde_json::Value = serde_json::from_str(&stdout(&ids)).unwrap();
    assert_eq!(ids["axioms"].as_array().unwrap().len(), 7);

    let mut broken = parsed.clone();
    let edge = (0..broken.len(1)).find(|&x| !broken.is_thin(1, x)).unwrap();
    broken.thin[1][edge] = true;
    let out = complicial(&["complicial"], &broken.to_json_string());
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(complicial(&["identities"], &broken.to_json_string()).status.code(), Some(2));
}

#[test]
fn wedge_subcommand() {
    let triangle = stdout(&complicial(&["complex", "delta", "--n", "2"], ""));
    let set = stdout(&complicial(&["nerve", "--target", "-", "--max-dim", "2", "--stratified"], &triangle));
    let parsed = complicial::stratified::StratifiedSet::from_json_str(&set).unwrap();
    let (x, y) = (0..parsed.len(1))
        .flat_map(|x| (0..parsed.len(1)).map(move |y| (x, y)))
        .find(|&(x, y)| parsed.face(1, x, 0) == parsed.face(1, y, 1) && !parsed.is_thin(1, x) && !parsed.is_thin(1, y))
        .unwrap();
    let (xs, ys) = (x.to_string(), y.to_string());
    let out = complicial(&["wedge", "--dim", "1", "--x", &xs, "--y", &ys, "--i", "0"], &set);
    assert_eq!(out.status.code(), Some(0));
    let w: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(w["thin"], true);
    assert_eq!(w["faces"][0], y);
    assert_eq!(w["faces"][2], x);
    let bad = complicial(&["wedge", "--dim", "1", "--x", &ys, "--y", &xs, "--i", "0"], &set);
    assert_eq!(bad.status.code(), Some(2));
}
