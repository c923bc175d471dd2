use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_contrabench"))
}

fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("golden").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn json_of(o: &Output) -> Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&o.stdout)))
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn validate_golden_documents() {
    let ok = run(&["validate", golden("z2_p3.json").to_str().unwrap()]);
    assert_eq!(ok.status.code(), Some(0), "{}", stdout(&ok));

    let bad = run(&["--format", "json", "validate", golden("z2_p3_bad_antipode.json").to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(1));
    let v = json_of(&bad);
    let failed: Vec<&str> = v["failed_axioms"].as_array().unwrap().iter().filter_map(|x| x.as_str()).collect();
    assert!(!failed.is_empty() && failed.iter().all(|f| f.contains("antipode")), "{failed:?}");

    let malformed = run(&["validate", golden("z2_p3_bad_shape.json").to_str().unwrap()]);
    assert_eq!(malformed.status.code(), Some(2));

    let missing = run(&["validate", "/nonexistent/doc.json"]);
    assert_eq!(missing.status.code(), Some(2));
}

#[test]
fn validate_builtins() {
    assert_eq!(run(&["validate", "builtin:s3_p3"]).status.code(), Some(0));
    assert_eq!(run(&["validate", "builtin:q8_p2"]).status.code(), Some(2));
}

#[test]
fn induce_on_p2_tower() {
    let o = run(&["--format", "json", "op", "induce", "--tower", "tower_p2_r1", "--along", "pi_H", "--module", "trivial"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json_of(&o);
    assert_eq!(v["contramodules"][0]["dim"], 2);
    assert_eq!(v["algebras"][0]["dim"], 4);
}

#[test]
fn free_document_round_trips() {
    let o = run(&["--format", "json", "op", "free", "--coalgebra", "s3_p2", "--rank", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json_of(&o);
    assert_eq!(v["contramodules"][0]["dim"], 12);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("free.json");
    std::fs::write(&path, &o.stdout).unwrap();
    let again = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(again.status.code(), Some(0), "{}", stdout(&again));
    // ops accept the emitted document back
    let o2 = run(&[
        "--format", "json", "op", "is-projective", "--doc", path.to_str().unwrap(), "--coalgebra", "s3_p2", "--module", "free",
    ]);
    assert_eq!(o2.status.code(), Some(0), "{}", String::from_utf8_lossy(&o2.stderr));
    assert_eq!(json_of(&o2)["verdict"], true);
}

#[test]
fn trivial_over_z2_p2_is_not_projective() {
    let o = run(&["--format", "json", "op", "is-projective", "--coalgebra", "z2_p2", "--module", "trivial"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json_of(&o);
    assert_eq!(v["verdict"], false);
    assert!(v["obstruction_rank"].as_u64().unwrap() > 0);
    assert_eq!(v["rechecked"], true);
}

#[test]
fn mock_verdict_of_witness() {
    let o = run(&["--format", "json", "op", "mock", "--tower", "tower_p3_r1"]);
    let v = json_of(&o);
    assert_eq!(v["verdict"], "proper_mock_projective");
    assert_eq!(v["levels"], serde_json::json!([true]));
}

#[test]
fn usage_errors() {
    assert_eq!(run(&["op", "nonsense"]).status.code(), Some(2));
    assert_eq!(run(&["op", "induce", "--tower", "tower_p2_r1"]).status.code(), Some(2));
    assert_eq!(run(&["suite", "--check", "nonsense"]).status.code(), Some(2));
}

#[test]
fn suite_subset_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.json");
    let b = dir.path().join("b.json");
    for (path, jobs) in [(&a, "1"), (&b, "4")] {
        let o = run(&[
            "--seed", "5", "--jobs", jobs, "suite", "--check", "hom_identity", "--check", "weight_lemma", "--out",
            path.to_str().unwrap(),
        ]);
        assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    }
    let ta = std::fs::read(&a).unwrap();
    assert_eq!(ta, std::fs::read(&b).unwrap());
    let v: Value = serde_json::from_slice(&ta).unwrap();
    let checks: Vec<&str> = v["records"].as_array().unwrap().iter().map(|r| r["check"].as_str().unwrap()).collect();
    assert!(checks.iter().all(|c| *c == "hom_identity" || *c == "weight_lemma"));
    assert_eq!(checks.len(), 26);

    let replay = run(&["--format", "json", "report", a.to_str().unwrap(), "--replay"]);
    assert_eq!(replay.status.code(), Some(0));
    assert_eq!(json_of(&replay)["identical"], true);
}

#[test]
fn manifest_with_inline_document() {
    let dir = tempfile::tempdir().unwrap();
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(golden("z2_p3_bad_antipode.json")).unwrap()).unwrap();
    let manifest = serde_json::json!({"instances": [doc], "checks": ["document"], "seed": 1});
    let path = dir.path().join("m.json");
    std::fs::write(&path, manifest.to_string()).unwrap();
    let o = run(&["--format", "json", "suite", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let v = json_of(&o);
    assert_eq!(v["summary"]["falsified"], 1);
}

#[test]
fn default_suite_passes() {
    let o = run(&["suite"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("0 falsified, 0 error, 0 skipped"));
    let listed = stdout(&run(&["suite", "--list"]));
    assert!(listed.contains("projectivity_oracle"));
}
