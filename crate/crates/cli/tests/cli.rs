use std::process::Command;

fn lexpoint(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_lexpoint")).args(args).output().unwrap();
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

fn ok(args: &[&str]) -> String {
    let (code, out, err) = lexpoint(args);
    assert_eq!(code, 0, "{args:?}: {err}");
    out
}

const LEX3: &str = "x^2;x*y;x*z^2;y^4;y^3*z";

#[test]
fn hilbert_function_golden() {
    assert_eq!(ok(&["hf", "--ring", "S:3@QQ", "--gens", LEX3, "-D", "6"]), "1,3,4,4,3,3,3\n");
    assert_eq!(ok(&["hf", "--ring", "E:5@GF(3)", "--gens", "e1^e2; e1^e3; e1^e4 + e2^e5"]), "1,5,7,2,0,0\n");
}

#[test]
fn rank_golden() {
    assert_eq!(ok(&["rank", "--ring", "E:5@QQ", "--elem", "e1^e2+e3^e4"]), "4\n");
    assert_eq!(ok(&["rank", "--ring", "E:5@QQ", "--elem", "e1^e2 + e1^e3"]), "2\n");
}

#[test]
fn lex_ideal_golden() {
    assert_eq!(ok(&["lex-ideal", "--ring", "S:3@QQ", "--hf", "1,3,4,4,3,3+"]), "x^2; x*y; x*z^2; y^4; y^3*z\n");
    assert_eq!(
        ok(&["lex-ideal", "--ring", "S:4@QQ", "--hf", "1,4,4,4+"]),
        "x^2; x*y; x*z; x*w; y^2; y*z; y*w^2; z^4\n"
    );
    assert_eq!(ok(&["lex-ideal", "--ring", "E:5@QQ", "--hf", "1,5,7,2"]), "e1^e2; e1^e3; e1^e4; e2^e3^e4; e2^e3^e5\n");
}

#[test]
fn initial_saturate_minors_golden() {
    let j = "x^2; x*y + x*z - y^2; x^3*y; x^2*y^2; x^2*y*z; x*y^3; x*y^2*z; x*y*z^2";
    assert_eq!(ok(&["initial", "--ring", "S:3@QQ", "--gens", j]), "x^2; x*y; x*z^2; y^4; y^3*z\n");
    assert_eq!(ok(&["saturate", "--ring", "S:3@QQ", "--gens", LEX3]), "x; y^3\n");
    let minors = ok(&["minors", "--ring", "S:3@QQ", "--matrix", "x, y, y + z; 0, x, y"]);
    let sat = ok(&["saturate", "--ring", "S:3@QQ", "--gens", j]);
    let hf_of = |gens: &str| ok(&["hf", "--ring", "S:3@QQ", "--gens", gens.trim()]);
    assert_eq!(hf_of(&minors), "1,3,3,3,3,3,3,3,3\n");
    assert_eq!(hf_of(&sat), hf_of(&minors));
}

#[test]
fn tangent_golden() {
    assert_eq!(ok(&["tangent", "--ring", "S:3@QQ", "--gens", LEX3]), "9\n");
    let with_basis = ok(&["tangent", "--ring", "S:3@QQ", "--gens", LEX3, "--basis"]);
    assert_eq!(with_basis.lines().count(), 10);
    assert!(with_basis.lines().nth(1).unwrap().starts_with("phi1: x^2 -> "));
}

#[test]
fn flat_limit_golden() {
    let out = ok(&["flat-limit", "--ring", "S:3@QQ(t)", "--gens", "x*y + t*y*(y + z); x*z; y^3*z; y^2*z^2; y*z^3"]);
    assert_eq!(out, "x*y; x*z; y^2*z + y*z^2; y^3*z\n");
}

#[test]
fn ideal_file_input() {
    let dir = std::env::temp_dir().join(format!("lexpoint-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("lex.ideal");
    std::fs::write(&path, "# lex point in three variables\nS:3@QQ\nx^2\nx*y\nx*z^2\ny^4\ny^3*z\n").unwrap();
    let p = path.to_str().unwrap();
    assert_eq!(ok(&["hf", "--ideal", p, "-D", "4"]), "1,3,4,4,3\n");
    std::fs::write(&path, "S:3@QQ\nx^2\nx + y^2\n").unwrap();
    let (code, _, err) = lexpoint(&["hf", "--ideal", p]);
    assert_eq!(code, 2);
    assert!(err.contains("line 3"), "{err}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn json_output() {
    let out = ok(&["--json", "hf", "--ring", "S:3@QQ", "--gens", LEX3, "-D", "4"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["hilbert_function"], serde_json::json!([1, 3, 4, 4, 3]));
    let out = ok(&["tangent", "--json", "--ring", "S:3@QQ", "--gens", LEX3]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["dimension"], 9);
    assert_eq!(v["generator_degrees"], serde_json::json!([2, 2, 3, 4, 4]));
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["hf", "--ring", "S:3@QQ", "--gens", "x + y^2"][..],
        &["hf", "--ring", "S:3@QQ", "--gens", "x*q"],
        &["hf", "--ring", "S:3@QQ", "--gens", "x*(y"],
        &["hf", "--ring", "T:3@QQ", "--gens", "x"],
        &["hf", "--ring", "S:3@GF(4)", "--gens", "x"],
        &["hf", "--gens", "x"],
        &["rank", "--ring", "S:3@QQ", "--elem", "x*y"],
        &["rank", "--ring", "E:5@QQ", "--elem", "e1"],
        &["sample", "--locus", "W9"],
        &["verify", "--scenario", "thm9"],
        &["verify", "--scenario", "thm3", "--field", "RR"],
        &["frobnicate"],
        &["hf", "--ring"],
    ] {
        let (code, out, err) = lexpoint(args);
        assert_eq!(code, 2, "{args:?}: {out} {err}");
        assert!(out.is_empty(), "{args:?} wrote to stdout");
        assert!(!err.is_empty());
    }
}

#[test]
fn computational_errors_exit_3() {
    let (code, _, err) = lexpoint(&["lex-ideal", "--ring", "S:2@QQ", "--hf", "1,2,4"]);
    assert_eq!(code, 3, "{err}");
    let (code, _, err) = lexpoint(&["flat-limit", "--ring", "S:2@QQ(t)", "--gens", "x^2 + 1/t*y^2"]);
    assert_eq!(code, 2, "poles are rejected as input: {err}");
}

#[test]
fn sample_reports_attempts_and_facts() {
    let out = ok(&["sample", "--locus", "Y5", "--seed", "4"]);
    assert!(out.starts_with("Y5 over GF(101) (seed 4, "), "{out}");
    assert!(out.contains("annihilator_dim: 1"), "{out}");
    assert_eq!(out, ok(&["sample", "--locus", "y5", "--seed", "4"]));
}

#[test]
fn verify_text_and_json() {
    let text = ok(&["verify", "--scenario", "lemma5-4", "--seed", "3"]);
    assert!(text.lines().last().unwrap().starts_with("lemma5-4: 3 passed, 0 failed, 0 skipped"), "{text}");
    let json = ok(&["verify", "--scenario", "lemma5-4", "--seed", "3", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&json).unwrap();
    assert_eq!(v["scenario"], "lemma5-4");
    assert_eq!(v["seed"], 3);
    assert_eq!(v["pass"], true);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["ms"].is_null()));
    let timed = ok(&["verify", "--scenario", "lemma5-4", "--json", "--timings"]);
    let v: serde_json::Value = serde_json::from_str(&timed).unwrap();
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["ms"].is_u64()));
}

#[test]
fn verify_scenario_file_and_failure_exit_code() {
    let dir = std::env::temp_dir().join(format!("lexpoint-verify-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("custom.json");
    let scenario = r#"{
      "name": "custom", "description": "tangent bound that cannot hold", "ring": "S:3", "bound": 8, "field": "QQ",
      "fixtures": { "L": { "gens": "x^2; x*y; x*z^2; y^4; y^3*z", "hf": "1,3,4,4,3,3+" } },
      "checks": [
        { "id": "a-holds", "provenance": "derived", "kind": "tangent", "ideal": { "fixture": "L" }, "at_least": 9 },
        { "id": "b-fails", "provenance": "derived", "kind": "tangent", "ideal": { "fixture": "L" }, "at_least": 10 }
      ]
    }"#;
    std::fs::write(&path, scenario).unwrap();
    let p = path.to_str().unwrap();
    let (code, out, _) = lexpoint(&["verify", "--scenario-file", p]);
    assert_eq!(code, 1, "{out}");
    assert!(out.contains("PASS a-holds") && out.contains("FAIL b-fails"), "{out}");
    let (code, _, _) = lexpoint(&["verify", "--scenario", "thm3", "--scenario-file", p]);
    assert_eq!(code, 2);
    std::fs::write(&path, scenario.replace("1,3,4,4,3,3+", "1,3,3+")).unwrap();
    let (code, _, err) = lexpoint(&["verify", "--scenario-file", p]);
    assert_eq!(code, 3, "{err}");
    assert!(err.contains("fixture 'L'"), "{err}");
    std::fs::remove_dir_all(&dir).unwrap();
}
