use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;

const SHELLING: &str = "4 11 12 | 11 12 13 | 4 11 13 | 1 4 13";

fn root() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).to_path_buf()
}

fn fixture(name: &str) -> String {
    root().join("../core/tests/fixtures").join(name).to_string_lossy().into_owned()
}

fn data(name: &str) -> String {
    root().join("tests/data").join(name).to_string_lossy().into_owned()
}

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

impl Run {
    fn json(&self) -> Value {
        assert_eq!(self.code, 0, "stderr: {}", self.stderr);
        serde_json::from_str(&self.stdout).expect("report is JSON")
    }
}

fn dnormal(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_dnormal"))
        .args(args)
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().unwrap_or(-1),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

/// Compares against `tests/golden/<name>.json`; `UPDATE_GOLDEN=1` rewrites it.
fn golden(name: &str, run: &Run) {
    assert_eq!(run.code, 0, "stderr: {}", run.stderr);
    let path = root().join("tests/golden").join(format!("{name}.json"));
    if std::env::var_os("UPDATE_GOLDEN").is_some() {
        std::fs::write(&path, &run.stdout).unwrap();
        return;
    }
    let want = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("{}: {e}; run with UPDATE_GOLDEN=1", path.display()));
    assert!(run.stdout == want, "{name} differs from its golden file");
}

fn all_passed(r: &Value) -> bool {
    r["certificates"].as_array().unwrap().iter().all(|c| c["passed"] == true)
}

#[test]
fn groebner_on_the_example() {
    let run = dnormal(&["groebner", &fixture("example.cfg")]);
    let r = run.json();
    assert_eq!(r["results"]["initial_generators"], 52);
    assert_eq!(r["results"]["max_degree"], 3);
    golden("example_groebner", &run);
}

#[test]
fn groebner_on_the_sharp_example() {
    let r = dnormal(&["groebner", &fixture("sharp3.cfg")]).json();
    assert_eq!(r["results"]["count"], 1);
    assert_eq!(r["results"]["max_degree"], 3);
}

#[test]
fn triangulate_the_example() {
    let run = dnormal(&["triangulate", &fixture("example.cfg")]);
    let r = run.json();
    let facets = r["results"]["facets"].as_array().unwrap();
    assert_eq!(facets.len(), 4);
    let mut vols: Vec<u64> = r["results"]["volumes"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_u64().unwrap())
        .collect();
    vols.sort();
    assert_eq!(vols, vec![1, 2, 3, 9]);
    assert!(all_passed(&r));
    golden("example_triangulate", &run);
}

#[test]
fn standard_pairs_of_the_example() {
    let run = dnormal(&["standard-pairs", &fixture("example.cfg")]);
    let r = run.json();
    assert_eq!(r["results"]["count"], 15);
    assert_eq!(r["results"]["embedded_prime_free"], true);
    golden("example_standard_pairs", &run);
}

#[test]
fn standard_pairs_of_an_ideal_file() {
    let r = dnormal(&["standard-pairs", "--ideal", &data("eight_variable.ideal")]).json();
    assert_eq!(r["results"]["embedded_prime_free"], true);
}

#[test]
fn example_is_delta_normal_and_normal() {
    let run = dnormal(&["delta-normal", &fixture("example.cfg")]);
    assert_eq!(run.json()["results"]["delta_normal"], true);
    golden("example_delta_normal", &run);
    let run = dnormal(&["normal", &fixture("example.cfg")]);
    assert_eq!(run.json()["results"]["normal"], true);
    golden("example_normal", &run);
}

#[test]
fn example_filtration_and_certificate() {
    let run = dnormal(&["stanley-filtration", &fixture("example.cfg"), "--shelling", SHELLING, "--degree-cap", "6"]);
    let r = run.json();
    assert!(all_passed(&r));
    let lists = r["results"]["filtration"]["lists"].as_array().unwrap();
    let sizes: Vec<usize> = lists.iter().map(|l| l.as_array().unwrap().len()).collect();
    assert_eq!(sizes, vec![2, 1, 3, 9]);
    golden("example_stanley_filtration", &run);

    let run = dnormal(&["cm-certify", &fixture("example.cfg"), "--shelling", SHELLING, "--degree-cap", "6"]);
    assert_eq!(run.json()["results"]["cohen_macaulay"], true);
    golden("example_cm_certify", &run);
}

#[test]
fn example_degree_bound() {
    let run = dnormal(&["degree-bound", &fixture("example.cfg")]);
    let r = run.json();
    assert!(all_passed(&r));
    assert_eq!(r["results"]["d"], 3);
    assert_eq!(r["results"]["generators"].as_array().unwrap().len(), 52);
    golden("example_degree_bound", &run);
}

#[test]
fn example_pipeline_passes() {
    let run = dnormal(&["pipeline", &fixture("example.cfg"), "--shelling", SHELLING, "--degree-cap", "6"]);
    let r = run.json();
    assert!(all_passed(&r));
    assert_eq!(r["results"]["halted_at"], Value::Null);
    let roots: Vec<Vec<&str>> = r["results"]["filtration"]["lists"]
        .as_array()
        .unwrap()
        .iter()
        .map(|l| l.as_array().unwrap().iter().map(|p| p["root"].as_str().unwrap()).collect())
        .collect();
    assert_eq!(roots[1], vec!["m"]);
    assert_eq!(roots[2][0], "dm");
    for r in ["a", "ag", "aj"] {
        assert!(roots[3].contains(&r), "{r} missing from the last list");
    }
    golden("example_pipeline", &run);
}

#[test]
fn pipeline_halts_on_a_non_normal_configuration() {
    let r = dnormal(&["pipeline", &fixture("nonnormal.cfg")]).json();
    assert_eq!(r["results"]["halted_at"], "delta-normal");
    let last = r["certificates"].as_array().unwrap().last().unwrap().clone();
    assert_eq!(last["passed"], false);
    let witness = last["items"]
        .as_array()
        .unwrap()
        .iter()
        .find(|i| i["passed"] == false)
        .unwrap()["witness"]
        .clone();
    assert_eq!(witness, serde_json::json!([1, 2]));
}

#[test]
fn simplicial_pipeline_has_only_n_class_generators() {
    let r = dnormal(&["pipeline", &data("sharp3_weighted.cfg")]).json();
    assert!(all_passed(&r));
    let classes = &r["results"]["generator_classes"];
    assert_eq!(classes["N"], 1);
    assert_eq!(classes["Out"], 0);
    assert_eq!(classes["Cross"], 0);
}

#[test]
fn family_fz() {
    let run = dnormal(&["family", "fz", "--v", "1,2,3,5"]);
    let rows = run.json()["results"]["rows"].clone();
    assert_eq!(rows[3], serde_json::json!([0, 0, 0, 5, 1, 2, 3, 4]));
    golden("family_fz", &run);
}

#[test]
fn family_delta_tower_writes_levels() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().to_string_lossy().into_owned();
    let r = dnormal(&["family", "delta-tower", "--v", "1,2,3,5", "--d", "6", "--out", &out]).json();
    assert!(all_passed(&r));
    assert_eq!(r["certificates"].as_array().unwrap().len(), 2);
    for d in [5, 6] {
        let path = dir.path().join(format!("delta-tower-d{d}.cfg"));
        let text = std::fs::read_to_string(&path).unwrap();
        let again = dnormal(&["normal", &path.to_string_lossy()]).json();
        assert_eq!(again["results"]["normal"], true, "{text}");
    }
}

#[test]
fn family_graph() {
    let r = dnormal(&["family", "graph", "--edges", &data("triangle.edges")]).json();
    assert_eq!(r["results"]["rows"], serde_json::json!([[1, 1, 1], [1, 0, 1], [0, 1, 1]]));
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.cfg");
    std::fs::write(&bad, "3\n1 2\n").unwrap();
    let run = dnormal(&["groebner", &bad.to_string_lossy()]);
    assert_eq!(run.code, 2);
    assert!(run.stdout.is_empty());
    assert_eq!(dnormal(&["groebner", "/nonexistent/file.cfg"]).code, 2);
    let run = dnormal(&["pipeline", &fixture("example.cfg"), "--shelling", "1 4 13 | 11 12 13"]);
    assert_eq!(run.code, 2, "{}", run.stderr);
    assert_eq!(dnormal(&["family", "fz", "--v", "5,3,2,1"]).code, 2);
}

#[test]
fn reports_do_not_depend_on_threads() {
    let args = ["pipeline", &fixture("example.cfg"), "--shelling", SHELLING];
    let one = dnormal(&[&args[..], &["--threads", "1"]].concat());
    let four = dnormal(&[&args[..], &["--threads", "4"]].concat());
    assert_eq!(one.code, 0);
    assert_eq!(one.stdout, four.stdout);
}

#[test]
fn digest_tracks_flags_and_timings_are_opt_in() {
    let a = dnormal(&["groebner", &fixture("example.cfg")]).json();
    let b = dnormal(&["groebner", &fixture("example.cfg"), "--weight", "7 5 3 1 5 3 1 1 3 1 0 1 2"]).json();
    assert_ne!(a["inputs_digest"], b["inputs_digest"]);
    assert!(a.get("timings").is_none());
    let t = dnormal(&["groebner", &fixture("example.cfg"), "--timings"]).json();
    assert!(t["timings"]["groebner"].is_number());
    assert_eq!(a["inputs_digest"], t["inputs_digest"]);
}
