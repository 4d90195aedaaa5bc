use std::io::Write as _;

use serde_json::Value;
use tempfile::NamedTempFile;

use zforce::cli::run;
use zforce::fixtures::two_diamonds;

fn exec(args: &[&str], stdin: &str) -> (i32, String, String) {
    let mut input = stdin.as_bytes();
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("zforce").chain(args.iter().copied());
    let code = run(argv, &mut input, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json(args: &[&str], stdin: &str) -> Value {
    let (code, out, err) = exec(args, stdin);
    assert_eq!(code, 0, "{args:?}: {err}");
    serde_json::from_str(&out).unwrap()
}

fn two_diamond_file() -> NamedTempFile {
    let mut f = NamedTempFile::new().unwrap();
    f.write_all(two_diamonds().to_edge_list().as_bytes()).unwrap();
    f
}

#[test]
fn solve_two_diamonds() {
    let file = two_diamond_file();
    let path = file.path().to_str().unwrap();
    for rule in ["psd", "standard"] {
        let v = json(&["solve", "--rule", rule, "--edges", path], "");
        assert_eq!(v["value"], 3);
        assert_eq!(v["witness"].as_array().unwrap().len(), 3);
    }
}

#[test]
fn solve_reads_edge_list_from_stdin() {
    let v = json(&["solve", "--rule", "psd"], "4 3\n1 2\n1 3\n1 4\n");
    assert_eq!(v["value"], 1);
    assert_eq!(v["witness"], serde_json::json!([1]));
}

#[test]
fn trace_two_diamonds() {
    let file = two_diamond_file();
    let v = json(
        &[
            "trace",
            "--rule",
            "psd",
            "--blue",
            "2,4,6",
            "--edges",
            file.path().to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(v["tau"], 3);
    assert_eq!(
        v["steps"][0],
        serde_json::json!([{"source": 4, "target": 3}, {"source": 4, "target": 5}])
    );
    assert_eq!(v["expansion"][1], serde_json::json!([2, 3, 4, 5, 6]));
    assert_eq!(v["forcing"], true);
}

#[test]
fn list_is_one_force_per_step() {
    let file = two_diamond_file();
    let v = json(
        &[
            "list",
            "--rule",
            "psd",
            "--blue",
            "2,4,6",
            "--edges",
            file.path().to_str().unwrap(),
        ],
        "",
    );
    let steps = v["steps"].as_array().unwrap();
    assert_eq!(steps.len(), 5);
    assert!(steps.iter().all(|s| s.as_array().unwrap().len() == 1));
}

#[test]
fn bundle_two_diamonds() {
    let file = two_diamond_file();
    let v = json(
        &[
            "bundle",
            "--x",
            "7",
            "--blue",
            "2,4,6",
            "--edges",
            file.path().to_str().unwrap(),
        ],
        "",
    );
    assert_eq!(v["components"], serde_json::json!([[5, 7, 8], [7, 8]]));
    assert_eq!(v["paths"], serde_json::json!([[2], [4, 5, 7], [6]]));
    assert_eq!(v["terminus"], serde_json::json!([2, 6, 7]));
}

#[test]
fn connectify_and_mirror() {
    let file = two_diamond_file();
    let path = file.path().to_str().unwrap();
    let v = json(&["connectify", "--edges", path], "");
    assert_eq!(v["complement_connected"], true);
    assert_eq!(v["result"].as_array().unwrap().len(), 3);
    let m = json(&["mirror", "--edges", path], "");
    assert_eq!(m["passed"], true);
}

#[test]
fn claws_and_perfect_on_the_claw() {
    let star = "4 3\n1 2\n1 3\n1 4\n";
    let v = json(&["claws"], star);
    assert_eq!(v["claw_free"], false);
    assert_eq!(
        v["claws"],
        serde_json::json!([{"center": 1, "leaves": [2, 3, 4]}])
    );
    for method in ["direct", "claw-free"] {
        let p = json(&["perfect", "--method", method], star);
        assert_eq!(p["perfect"], false);
    }
}

#[test]
fn verify_theorem_small() {
    let (code, out, err) = exec(&["verify", "--mode", "theorem", "--enumerate", "5"], "");
    assert_eq!(code, 0, "{err}");
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["failure_count"], 0);
}

#[test]
fn verify_corpus_from_stdin() {
    let (code, out, _) = exec(&["verify", "--mode", "corollary"], "C~\nCF\n");
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["total"], 2);
}

#[test]
fn bad_input_exits_two() {
    assert_eq!(exec(&["solve", "--rule", "psd", "--graph6", "\x7f"], "").0, 2);
    assert_eq!(exec(&["solve", "--rule", "psd"], "3 1\n1 9\n").0, 2);
    assert_eq!(exec(&["solve", "--rule", "bogus"], "").0, 2);
    assert_eq!(exec(&["frobnicate"], "").0, 2);
}

#[test]
fn non_forcing_initial_set_is_a_domain_error() {
    let (code, _, err) = exec(
        &["list", "--rule", "standard", "--blue", "1"],
        "4 3\n1 2\n1 3\n1 4\n",
    );
    assert_eq!(code, 1);
    assert!(!err.is_empty());
}

#[test]
fn output_is_deterministic() {
    let file = two_diamond_file();
    let path = file.path().to_str().unwrap();
    let strip = |s: String| {
        let mut v: Value = serde_json::from_str(&s).unwrap();
        v.as_object_mut().unwrap().remove("elapsed_ms");
        v
    };
    let a = exec(&["solve", "--rule", "psd", "--edges", path], "").1;
    let b = exec(&["solve", "--rule", "psd", "--edges", path], "").1;
    assert_eq!(strip(a), strip(b));
    let c = exec(&["connectify", "--edges", path], "").1;
    let d = exec(&["connectify", "--edges", path], "").1;
    assert_eq!(c, d);
}
