use std::process::{Command, Output};

use serde_json::Value;

const FIXTURES: &str = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures");

fn fixture(name: &str) -> String {
    format!("{FIXTURES}/{name}")
}

fn wlp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_wlp")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut all = vec!["--json"];
    all.extend_from_slice(args);
    let o = wlp(&all);
    (serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(&o))), code(&o))
}

fn temp_file(name: &str, contents: &str) -> String {
    let dir = std::env::temp_dir().join(format!("wlp-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path.to_string_lossy().into_owned()
}

#[test]
fn classify_exit_codes() {
    let o = wlp(&["classify", "1,3,5,7,9,11,11,8,5,2"]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("forces wlp: no (first failure at i = 6)"));
    assert_eq!(code(&wlp(&["classify", "1,2,3,3,1"])), 0);
    assert_eq!(code(&wlp(&["classify", "1,2,4"])), 2);
    assert_eq!(code(&wlp(&["classify", "1,two"])), 3);

    let (v, c) = json(&["classify", "1,3,5,7,9,11,11,8,5,2"]);
    assert_eq!(c, 1);
    assert_eq!(v["forces_wlp"], false);
    assert_eq!(v["first_failure"], 6);
    assert_eq!(v["t"], 8);
    assert_eq!(v["conditions"][5]["lower_both"], 10);
}

#[test]
fn expand_values() {
    let o = wlp(&["expand", "8", "3"]);
    assert_eq!(stdout(&o), "expansion: C(4,3) + C(3,2) + C(1,1)\nlower_shift: 2\nlower_both: 6\ngrowth_bound: 10\n");
    let (v, _) = json(&["ops", "6", "2"]);
    assert_eq!(v["growth_bound"], 10);
    let (v, _) = json(&["expand", "1", "7"]);
    assert_eq!(v["expansion"], "C(7,7)");
    assert_eq!(v["lower_shift"], 0);
    assert_eq!(code(&wlp(&["expand", "0", "3"])), 3);
    assert_eq!(code(&wlp(&["expand", "-4", "3"])), 3);
}

#[test]
fn wlp_verdicts() {
    let o = wlp(&["wlp", &fixture("nonwlp.ideal")]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("wlp: no (witness degree 2)"));
    let (v, _) = json(&["wlp", &fixture("nonwlp.ideal")]);
    assert_eq!(v["witness"], 2);
    assert_eq!(v["degrees"][2]["rank"], 5);
    assert_eq!(code(&wlp(&["wlp", &fixture("lex_121.ideal")])), 0);

    let empty = temp_file("empty.ideal", "ring 3\n");
    let o = wlp(&["wlp", &empty]);
    assert_eq!(code(&o), 3);
    assert!(String::from_utf8_lossy(&o.stderr).contains("does not vanish"));
    assert_eq!(code(&wlp(&["wlp", "/nonexistent/file.ideal"])), 3);

    // a special form can lose rank
    let o = wlp(&["wlp", &fixture("lex_121.ideal"), "--linear-form", "x1"]);
    assert_eq!(code(&o), 1);
    assert_eq!(code(&wlp(&["wlp", &fixture("lex_121.ideal"), "--linear-form", "x1^2"])), 3);
}

#[test]
fn points_pipeline() {
    let (v, c) = json(&["points-ideal", &fixture("kconfig_1245.points"), "--degree", "6"]);
    assert_eq!(c, 0);
    assert_eq!(v["points_hf"], serde_json::json!([1, 3, 6, 10, 12, 12, 12]));
    let o = wlp(&["points-ideal", &fixture("kconfig_1245.points"), "--power", "6"]);
    let ideal = temp_file("iz.ideal", &stdout(&o));
    let o = wlp(&["betti", &ideal]);
    let a1 = std::fs::read_to_string(fixture("betti_a1.txt")).unwrap();
    assert!(stdout(&o).starts_with(&a1), "{}", stdout(&o));
    let (v, _) = json(&["socle", &ideal]);
    assert_eq!(v["socle"], serde_json::json!({ "5": 12 }));
    assert_eq!(v["level"], true);
    assert_eq!(code(&wlp(&["wlp", &ideal])), 0);
}

#[test]
fn betti_of_shipped_ideal() {
    let (v, c) = json(&["betti", &fixture("points_plus_m6.ideal")]);
    assert_eq!(c, 0);
    let a1: Value = serde_json::from_str(&std::fs::read_to_string(fixture("betti_a1.json")).unwrap()).unwrap();
    assert_eq!(v["betti"], a1);
    assert_eq!(v["numerator"], "1 - 3t^4 - 10t^6 + 24t^7 - 12t^8");
}

#[test]
fn betti_comparisons() {
    let a1 = fixture("betti_a1.json");
    let a2 = fixture("betti_a2.txt");
    let o = wlp(&["betti-compare", &a1, &a2, "--mode", "cancel"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "cancellation: yes\nc(1,5) = 2\nc(1,6) = 2\n");
    assert_eq!(code(&wlp(&["betti-compare", &a2, &a1, "--mode", "cancel"])), 1);
    assert_eq!(code(&wlp(&["betti-compare", &a1, &a1])), 0);
    assert_eq!(code(&wlp(&["betti-compare", &a1, &a2, "--mode", "dominate"])), 0);
    assert_eq!(code(&wlp(&["betti-compare", &a2, &a1, "--mode", "dominate"])), 1);
    let bad = temp_file("bad.json", "{\"1,2\": -1}");
    assert_eq!(code(&wlp(&["betti-compare", &bad, &a1])), 3);
    assert_eq!(code(&wlp(&["betti-compare", &a1, &a2, "--mode", "sideways"])), 3);
}

#[test]
fn decompose_and_green() {
    let (v, c) = json(&["decompose", &fixture("lex_121.ideal")]);
    assert_eq!(c, 0);
    assert_eq!(v["b"], serde_json::json!([0, 1, 1]));
    assert_eq!(v["c"], serde_json::json!([1, 1]));
    let o = wlp(&["decompose", &fixture("lex_121.ideal"), "--linear-form", "x1 - x1"]);
    assert_eq!(code(&o), 3);
    let (v, c) = json(&["green", &fixture("nonwlp.ideal")]);
    assert_eq!(c, 0);
    assert_eq!(v["violations"], serde_json::json!([]));
    let x1 = temp_file("x1.ideal", "ring 2\nx1\nx2^3\n");
    assert_eq!(code(&wlp(&["decompose", &x1, "--linear-form", "x1"])), 3);
}

#[test]
fn lexideal_and_enumeration() {
    let o = wlp(&["lexideal", "1,2,1"]);
    assert_eq!(stdout(&o), "# lex ideal of 1,2,1\nring 2\nx1^2\nx1*x2\nx2^3\n");
    let (v, _) = json(&["lexideal", "1,3,6,10,12,12"]);
    assert_eq!(v["generators"][0], "x1^4");
    assert_eq!(code(&wlp(&["lexideal", "1,2,4"])), 3);

    let o = wlp(&["enumerate-hf", "--codim", "2", "--max-degree", "2", "--max-value", "3"]);
    assert_eq!(stdout(&o), "1,2 forces\n1,2,1 forces\n1,2,2 forces\n1,2,3 forces\ntotal: 4\n");
    let (v, _) = json(&["enumerate-ideals", "1,2,1"]);
    assert_eq!(v["count"], 3);
    let (v, _) = json(&["enumerate-ideals", "1,1,1", "--count"]);
    assert_eq!(v["count"], 1);
    let o = wlp(&["enumerate-ideals", "1,2,1", "--limit", "1"]);
    assert_eq!(stdout(&o), "(x2^2, x1*x2, x1^3)\ntotal: 1\n");
}

#[test]
fn verify_codimension_two() {
    let (v, c) = json(&["verify-theorem5", "--codim", "2", "--max-degree", "6", "--max-value", "7", "--exhaustive"]);
    assert_eq!(c, 0);
    assert_eq!(v["contradictions"], 0);
    assert_eq!(v["hilbert_functions"], v["forcing"]);
    assert_eq!(v["violations"], 0);
}

#[test]
fn verify_small_codimension_three() {
    let o = wlp(&["verify-theorem5", "--codim", "3", "--max-degree", "3", "--max-value", "6"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let text = stdout(&o);
    assert!(text.starts_with("estimated ideals: "));
    assert!(text.contains("contradictions: 0"));
}

#[test]
fn verify_single_hilbert_function() {
    let (v, c) = json(&["verify-theorem5", "--hf", "1,3,6,10,12,12", "--sample", "5", "--seed", "3"]);
    assert_eq!(c, 0);
    let r = &v["records"][0];
    assert_eq!(r["forces_wlp"], false);
    assert_eq!(r["lex_has_wlp"], false);
    assert!(r["failing_example"].as_str().unwrap().starts_with("(x1^4"));
}

#[test]
fn verify_guard() {
    let o = wlp(&["verify-theorem5", "--codim", "3", "--max-degree", "6", "--max-value", "20"]);
    assert_eq!(code(&o), 4);
    assert!(stdout(&o).contains("estimated ideals: more than 1000000"));
    assert_eq!(code(&wlp(&["verify-theorem5", "--codim", "3"])), 3);
}

#[test]
fn determinism_and_json_mirror() {
    let args = ["verify-theorem5", "--codim", "3", "--max-degree", "3", "--max-value", "5", "--sample", "2", "--seed", "17"];
    assert_eq!(wlp(&args).stdout, wlp(&args).stdout);
    let ideal = fixture("points_plus_m6.ideal");
    let a = wlp(&["wlp", &ideal, "--seed", "5"]);
    assert_eq!(a.stdout, wlp(&["wlp", &ideal, "--seed", "5"]).stdout);
    let (v, _) = json(&["wlp", &ideal, "--seed", "5"]);
    assert!(stdout(&a).contains(&format!("linear form: {}", v["form"].as_str().unwrap())));
}

#[test]
fn prime_field_is_flagged() {
    let o = wlp(&["--field", "prime:32003", "wlp", &fixture("nonwlp.ideal")]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).starts_with("field: prime:32003 (heuristic)"));
    let (v, _) = json(&["--field", "prime", "wlp", &fixture("lex_121.ideal")]);
    assert_eq!(v["exact"], false);
    assert_eq!(code(&wlp(&["--field", "prime:12", "wlp", &fixture("lex_121.ideal")])), 3);
}

#[test]
fn help_and_usage() {
    assert_eq!(code(&wlp(&["--help"])), 0);
    assert_eq!(code(&wlp(&["--version"])), 0);
    assert_eq!(code(&wlp(&[])), 3);
    assert_eq!(code(&wlp(&["frobnicate"])), 3);
    let (v, c) = json(&["wlp", "/nonexistent"]);
    assert_eq!(c, 3);
    assert!(v["error"].as_str().unwrap().contains("cannot read"));
}
