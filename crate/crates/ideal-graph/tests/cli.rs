use std::path::PathBuf;
use std::process::{Command, Output};

use ideal_graph::export;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ideal-graph"))
}

fn corpus(stem: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join(format!("../../corpus/{stem}.json"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn graph_dot_for_z12() {
    let o = run(&["graph", corpus("z12").to_str().unwrap(), "--which", "graded", "--format", "dot"]);
    assert!(o.status.success());
    let text = stdout(&o);
    assert_eq!(text.matches("[label=").count(), 4);
    assert_eq!(text.matches(" -- ").count(), 4);
    assert!(text.starts_with("graph Gr {"));
}

#[test]
fn graph_json_round_trips() {
    let o = run(&["graph", corpus("z4_idealization").to_str().unwrap(), "--format", "json"]);
    assert!(o.status.success());
    let parsed = export::from_json(&stdout(&o)).unwrap();
    assert_eq!(parsed.vertices.len(), 4);
    assert_eq!(parsed.edges.len(), 6);
    let g = parsed.to_graph();
    assert_eq!(export::GraphExport::new(&parsed.name, &g, parsed.invariants.clone()), parsed);
    assert_eq!(parsed.invariants.unwrap().clique_number, 4);
}

#[test]
fn identity_and_quotient_graphs() {
    let o = run(&["graph", corpus("z4_c2").to_str().unwrap(), "--which", "identity", "--format", "text"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("G_e: 1 vertices, 0 edges"));
    let o = run(&["graph", corpus("z12").to_str().unwrap(), "--which", "quotient", "--format", "text"]);
    assert!(stdout(&o).starts_with("Gr_quotient: 4 vertices, 4 edges"), "{}", stdout(&o));
    // Z_2(+)Z_2 is not e-faithful, so there is no quotient.
    let o = run(&["graph", corpus("z2_idealization").to_str().unwrap(), "--which", "quotient"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("e-faithful"));
}

#[test]
fn ideals_listing() {
    let path = corpus("z4_idealization");
    let all = stdout(&run(&["ideals", path.to_str().unwrap()]));
    let graded = stdout(&run(&["ideals", path.to_str().unwrap(), "--graded-only"]));
    let rows = |s: &str| s.lines().filter(|l| !l.starts_with('#')).count();
    assert!(rows(&all) > rows(&graded));
    assert_eq!(rows(&graded), 6);
    assert!(graded.lines().all(|l| l.starts_with('#') || l.contains("\tgraded\t")));
}

#[test]
fn verify_exit_codes() {
    let o = run(&["verify", corpus("z4_idealization").to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).lines().any(|l| l.starts_with("t231") && l.contains("PASS")));

    let o = run(&["verify", corpus("z4").to_str().unwrap(), "--theorems", "t231"]);
    assert_eq!(o.status.code(), Some(2));

    let o = run(&["verify", corpus("z4").to_str().unwrap(), "--theorems", "t9999"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("t9999"));

    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"ring":{"zn":0}}"#).unwrap();
    let o = run(&["verify", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("$.ring.zn"));
}

#[test]
fn verify_json_lists_every_check() {
    let o = run(&["verify", corpus("f2_x3").to_str().unwrap(), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let reports = v["reports"].as_array().unwrap();
    assert_eq!(reports.len(), ideal_graph_core::theorems::REGISTRY.len());
    let ll = reports.iter().find(|r| r["id"] == "lemma_ll").unwrap();
    assert_eq!(ll["verdict"], "PASS");
}

#[test]
fn corpus_is_deterministic_and_clean() {
    let dir = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../corpus");
    let out = tempfile::tempdir().unwrap();
    let a = out.path().join("a.txt");
    let b = out.path().join("b.txt");
    for p in [&a, &b] {
        let o = run(&["corpus", dir.to_str().unwrap(), "--out", p.to_str().unwrap()]);
        assert_eq!(o.status.code(), Some(0));
    }
    let text = std::fs::read_to_string(&a).unwrap();
    assert_eq!(text, std::fs::read_to_string(&b).unwrap());
    assert!(text.contains("FAIL 0"));
    assert!(!text.lines().any(|l| l.ends_with(" FAIL")));
}

#[test]
fn classify_reports_grading_flags() {
    let o = run(&["classify", corpus("z2_c2").to_str().unwrap(), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["strong"], "yes");
    assert_eq!(v["identity_component_order"], "2");
}
