use std::path::Path;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn polyloop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polyloop")).args(args).output().unwrap()
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json_of(args: &[&str]) -> Value {
    let out = polyloop(args);
    assert_eq!(out.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_str(&stdout(&out)).unwrap()
}

fn code(args: &[&str]) -> i32 {
    polyloop(args).status.code().unwrap()
}

#[test]
fn build_examples() {
    assert_eq!(stdout(&polyloop(&["build", "path", "4"])), "{\"facets\":[[0,1],[1,2],[2,3],[3,4]],\"m\":5}\n");
    let book = json_of(&["build", "book", "1", "3", "2"]);
    assert_eq!((book["m"].as_u64(), book["facets"].as_array().unwrap().len()), (Some(4), 5));
    let planar = json_of(&["build", "planar-book", "2", "2"]);
    assert_eq!((planar["m"].as_u64(), planar["facets"].as_array().unwrap().len()), (Some(5), 6));
}

#[test]
fn invalid_input_exits_2() {
    assert_eq!(code(&["build", "path", "0"]), 2);
    assert_eq!(code(&["build", "torus", "3"]), 2);
    assert_eq!(code(&["build", "book", "1", "3"]), 2);
    assert_eq!(code(&["build", "path", "3", "--N", "0"]), 2);
    assert_eq!(code(&["decompose", "path", "3", "--max-dim", "1"]), 2);
    assert_eq!(code(&["series", "term", "(sphere 0)"]), 2);
}

#[test]
fn build_round_trips_through_file_input() {
    let dir = tempfile::tempdir().unwrap();
    for family in [&["planar-book", "3", "2"][..], &["book", "2", "5", "3"], &["simplex", "2"], &["points", "3"]] {
        let path = dir.path().join("k.json");
        let first = stdout(&polyloop(&[&["build"], family].concat()));
        std::fs::write(&path, &first).unwrap();
        let again = stdout(&polyloop(&["build", "file", path.to_str().unwrap()]));
        assert_eq!(again, first, "{family:?}");
    }
}

#[test]
fn glue_spec_files_build_and_decompose() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("spec.json");
    let spec = json!({"base": {"m": 5, "facets": [[0,1],[1,2],[2,3],[3,4],[0,4]]}, "sub_a": [0,1,2], "copies": 3});
    std::fs::write(&path, spec.to_string()).unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(json_of(&["build", "glue-spec-file", p]), json_of(&["build", "book", "2", "5", "3"]));
    let d = json_of(&["decompose", "glue-spec-file", p]);
    assert_eq!(d["copies"], 3);
    assert_eq!(d["factors"][1]["term"], "(loop (wedge (susp (atom G)) (susp (atom G))))");
}

#[test]
fn hochster_examples() {
    assert_eq!(json_of(&["hochster", "cycle", "4"]), json!({"betti": {"0": 1, "3": 2, "6": 1}, "m": 4}));
    assert_eq!(json_of(&["hochster", "path", "2"])["betti"], json!({"0": 1, "3": 1}));
    assert_eq!(json_of(&["hochster", "points", "1"])["betti"], json!({"0": 1}));
    assert_eq!(code(&["hochster", "points", "21"]), 5);
    let dir = tempfile::tempdir().unwrap();
    let ghost = dir.path().join("ghost.json");
    std::fs::write(&ghost, r#"{"m":3,"facets":[[0],[2]]}"#).unwrap();
    assert_eq!(code(&["hochster", "file", ghost.to_str().unwrap()]), 2);
}

#[test]
fn worker_count_does_not_change_output() {
    for family in [&["planar-book", "3", "3"][..], &["cycle", "7"], &["book", "1", "4", "3"]] {
        let serial = stdout(&polyloop(&[&["hochster"], family, &["--jobs", "1"]].concat()));
        for jobs in ["2", "3", "8"] {
            let par = stdout(&polyloop(&[&["hochster"], family, &["--jobs", jobs]].concat()));
            assert_eq!(par, serial, "{family:?} with {jobs} workers");
        }
    }
}

#[test]
fn decompose_examples() {
    let path3 = json_of(&["decompose", "path", "3"]);
    assert_eq!(path3["spheres"]["zk"], json!({"3": 3, "4": 2}));
    let path1 = json_of(&["decompose", "path", "1"]);
    assert_eq!(path1["spheres"]["zk"], json!({}));
    assert_eq!(path1["factors"][1]["term"], "(loop (point))");
    let book = json_of(&["decompose", "planar-book", "2", "2"]);
    let coeffs: Vec<i64> = serde_json::from_value(book["series"]["coeffs"].clone()).unwrap();
    assert_eq!(&coeffs[..5], &[1, 5, 14, 32, 68]);
    assert_eq!((book["l"].as_u64(), book["p"].as_u64()), (Some(2), Some(2)));
    assert_eq!(book["spheres"], json!({"fibre": {"2": 2}, "zk": {"3": 1}}));
    assert_eq!(json_of(&["decompose", "book", "2", "4", "2"])["total"], book["total"]);
    assert_eq!(code(&["decompose", "planar-book", "3", "2", "--max-dim", "3"]), 3);
    assert!(json_of(&["decompose", "book", "1", "3", "2"])["series"].is_null());
}

#[test]
fn verify_examples() {
    let ok = json_of(&["verify", "koszul", "planar-book", "2", "2", "--N", "16"]);
    assert_eq!(ok["checks"][0]["detail"], "17 coefficients equal");
    assert_eq!(json_of(&["verify", "porter-hochster", "path", "4"])["pass"], true);
    assert_eq!(json_of(&["verify", "all", "planar-book", "4", "2"])["pass"], true);
    let flagless = polyloop(&["verify", "koszul", "book", "1", "3", "2"]);
    assert_eq!(flagless.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&flagless.stderr).contains("not flag"));
    let text = stdout(&polyloop(&["verify", "koszul", "path", "3", "--format", "text"]));
    assert_eq!(text, "PASS koszul: 17 coefficients equal\n");
}

#[test]
fn series_subcommand() {
    assert_eq!(json_of(&["series", "term", "(loop (sphere 2))", "--N", "4"]), json!({"N": 4, "coeffs": [1, 1, 1, 1, 1]}));
    let json_term = r#"{"op":"loop","args":[{"op":"wedge","args":[{"op":"sphere","args":[2]},{"op":"sphere","args":[2]}]}]}"#;
    assert_eq!(json_of(&["series", "term", json_term, "--N", "3"])["coeffs"], json!([1, 2, 4, 8]));
    assert_eq!(json_of(&["series", "hilbert", "points", "2", "--N", "3"])["coeffs"], json!([1, 2, 2, 2]));
    assert_eq!(json_of(&["series", "koszul", "path", "2", "--N", "3"])["coeffs"], json!([1, 3, 4, 4]));
    assert_eq!(code(&["series", "koszul", "cycle", "3"]), 4);
}

fn read(path: &Path) -> String {
    std::fs::read_to_string(path).unwrap()
}

#[test]
fn out_and_cache() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let cache = dir.path().join("cache");
    let args = ["decompose", "planar-book", "3", "2", "--out", out.to_str().unwrap(), "--cache-dir", cache.to_str().unwrap()];
    let first = polyloop(&args);
    assert_eq!(first.status.code(), Some(0));
    assert!(first.stdout.is_empty());
    let written = read(&out);
    assert_eq!(std::fs::read_dir(&cache).unwrap().count(), 1);
    std::fs::remove_file(&out).unwrap();
    assert_eq!(polyloop(&args).status.code(), Some(0));
    assert_eq!(read(&out), written);
    assert_eq!(std::fs::read_dir(&cache).unwrap().count(), 1);
    let direct = stdout(&polyloop(&["decompose", "planar-book", "3", "2"]));
    assert_eq!(direct.trim_end(), written);
}

#[test]
fn output_is_deterministic() {
    let a = stdout(&polyloop(&["decompose", "planar-book", "3", "3"]));
    let b = stdout(&polyloop(&["decompose", "planar-book", "3", "3"]));
    assert_eq!(a, b);
}
