use eulerian::cli::run_with;
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("eulerian").chain(args.iter().copied());
    let code = run_with(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json(args: &[&str]) -> Value {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{err}");
    serde_json::from_str(&out).unwrap()
}

fn coeffs(v: &Value) -> Vec<String> {
    v["coeffs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap().to_string())
        .collect()
}

#[test]
fn compute_s3_json() {
    let v = json(&[
        "compute", "--family", "S", "--n", "3", "--method", "rec", "--format", "json",
    ]);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["family"], "S");
    assert_eq!(v["n"], 3);
    assert_eq!(coeffs(&v), ["1", "209", "1884", "2828", "811", "27"]);
}

#[test]
fn compute_p2_every_method() {
    for m in ["enum", "rec", "diffsys", "grammar", "invseq"] {
        let v = json(&["compute", "--family", "P", "--n", "2", "--method", m]);
        assert_eq!(coeffs(&v), ["1", "4", "1"], "{m}");
    }
}

#[test]
fn large_coefficients_are_strings() {
    let v = json(&["compute", "--family", "T", "--n", "30"]);
    let last = coeffs(&v);
    assert!(last.iter().any(|c| c.len() > 20));
    assert!(v["coeffs"].as_array().unwrap().iter().all(Value::is_string));
}

#[test]
fn compute_csv_and_text() {
    let (code, out, _) = run(&["compute", "--family", "Q", "--n", "2", "--format", "csv"]);
    assert_eq!(code, 0);
    assert_eq!(
        out,
        "family,n,k,value\nQ,2,0,1\nQ,2,1,12\nQ,2,2,15\nQ,2,3,2\n"
    );
    let (_, out, _) = run(&["compute", "--family", "Q", "--n", "2", "--format", "text"]);
    assert_eq!(out.trim(), "Q_2(x) = 1 + 12x + 15x^2 + 2x^3");
}

#[test]
fn verify_cross_exits_zero() {
    let (code, out, _) = run(&["verify", "--suite", "cross", "--max-n", "4"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["suite"], "cross");
    assert_eq!(v["counts"]["fail"], 0);
    assert!(v.get("elapsed_ms").is_none());
}

#[test]
fn verify_output_is_deterministic() {
    let a = run(&["verify", "--suite", "gamma", "--max-n", "6"]);
    let b = run(&["verify", "--suite", "gamma", "--max-n", "6"]);
    assert_eq!(a, b);
    let v = json(&["verify", "--suite", "interlace", "--max-n", "3", "--timing"]);
    assert!(v["elapsed_ms"].is_u64());
}

#[test]
fn verify_all_suites() {
    let v = json(&["verify", "--suite", "all", "--max-n", "2"]);
    assert_eq!(v["passed"], true);
    assert_eq!(v["suites"].as_array().unwrap().len(), 8);
}

#[test]
fn gamma_and_decompose() {
    let v = json(&["gamma", "--family", "T", "--n", "1"]);
    assert_eq!(
        v["gamma"]["eta_plus"]["gammas"],
        serde_json::json!(["1", "4"])
    );
    assert_eq!(
        v["gamma"]["eta_minus"]["gammas"],
        serde_json::json!(["2", "0"])
    );
    let v = json(&["decompose", "--family", "Q", "--n", "2"]);
    assert_eq!(v["a"], serde_json::json!(["1", "11", "11", "1"]));
    assert_eq!(v["b"], serde_json::json!(["1", "4", "1"]));
    assert_eq!(v["report"]["bi_gamma_positive"], true);
}

#[test]
fn roots_certificate() {
    let v = json(&["roots", "--family", "S", "--n", "3"]);
    assert_eq!(v["real_rooted"], true);
    assert_eq!(v["roots"].as_array().unwrap().len(), 5);
}

#[test]
fn export_csv() {
    let (code, out, _) = run(&["export", "--n-max", "3"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "family,n,k,value");
    assert!(lines.contains(&"S,3,1,209"));
    assert!(lines.contains(&"eta_minus,3,0,2"));
    for table in ["P", "Q", "S", "T", "R", "p", "r", "eta_plus", "eta_minus"] {
        assert!(
            lines.iter().any(|l| l.starts_with(&format!("{table},"))),
            "{table}"
        );
    }
}

#[test]
fn dump_words_and_formal() {
    let (code, out, _) = run(&["compute", "--family", "S", "--n", "1", "--dump-words"]);
    assert_eq!(code, 0);
    let mut words: Vec<&str> = out.lines().collect();
    words.sort();
    assert_eq!(words, ["-1 -1", "-1 1", "1 -1", "1 1"]);
    let v = json(&["compute", "--family", "P", "--n", "1", "--dump-formal"]);
    assert!(!v["formal"].as_array().unwrap().is_empty());
}

#[test]
fn caps_and_usage_errors() {
    let (code, _, err) = run(&["compute", "--family", "T", "--n", "5", "--method", "enum"]);
    assert_eq!(code, 2);
    assert!(err.contains("--unsafe-cap-override"));
    assert_eq!(run(&["compute", "--family", "X", "--n", "1"]).0, 2);
    assert_eq!(run(&["compute", "--family", "P", "--n", "0"]).0, 2);
    assert_eq!(run(&["compute", "--family", "P"]).0, 2);
    assert_eq!(run(&["verify", "--suite", "nope"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("compute"));
}
