use std::process::{Command, Output};

use deltastirling::fps::Series;
use deltastirling::scalar::{Rat, Scalar};
use deltastirling::stirling::Triangle;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_deltastirling")).args(args).output().expect("binary runs")
}

fn run_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_deltastirling")).args(args).env(key, value).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn lines(o: &Output) -> Vec<String> {
    stdout(o).lines().map(str::to_string).collect()
}

#[test]
fn rising_second_kind_row_is_lah() {
    let o = run(&["table", "--kind", "s2", "--preset", "rising", "--n", "4"]);
    assert_eq!(code(&o), 0);
    // L(4,k) = 4!/k!·C(3,k−1)
    assert_eq!(lines(&o)[4], "4: 0, 24, 36, 12, 1");
}

#[test]
fn identity_first_kind_rows() {
    let o = run(&["table", "--kind", "s1", "--preset", "identity", "--n", "3"]);
    assert_eq!(code(&o), 0);
    // x(x−1)(x−2) = x³ − 3x² + 2x
    assert_eq!(lines(&o), ["0: 1", "1: 0, 1", "2: 0, -1, 1", "3: 0, 2, -3, 1"]);
}

#[test]
fn non_delta_expression_is_a_usage_error() {
    let o = run(&["table", "--kind", "s2", "--f", "t^2", "--n", "4"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("zero linear term"), "{}", stderr(&o));
    assert!(stdout(&o).is_empty());
}

#[test]
fn schloemilch_on_an_expression() {
    let o = run(&["verify", "schloemilch", "--f", "t/(1+t)", "--n", "10"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("0 of 1 suite runs failed"));
}

#[test]
fn every_suite_on_every_preset() {
    let o = run(&["verify", "all", "--preset", "all", "--n", "8", "--format", "json"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let runs = v.as_array().unwrap();
    assert_eq!(runs.len(), 16 * 6);
    assert!(runs.iter().all(|r| r["status"] == "pass" || r["status"] == "skip"));
    let limits = runs.iter().filter(|r| r["suite"] == "lambda-limit" && r["status"] == "pass").count();
    assert_eq!(limits, 8);
}

#[test]
fn corrupted_triangle_fails_orthogonality_with_coordinates() {
    let dir = std::env::temp_dir().join(format!("deltastirling-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("s2.json");
    let o = run(&["table", "--kind", "s2", "--preset", "bell", "--n", "6", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let mut tri = Triangle::from_json(&stdout(&o)).unwrap();

    std::fs::write(&path, tri.to_json()).unwrap();
    let p = path.to_str().unwrap();
    let ok = run(&["verify", "orthogonality", "--preset", "bell", "--n", "6", "--s2-file", p]);
    assert_eq!(code(&ok), 0, "{}", stdout(&ok));

    let bumped = &tri.get(4, 2) + &Scalar::one();
    tri.set(4, 2, bumped);
    std::fs::write(&path, tri.to_json()).unwrap();
    let bad = run(&["verify", "orthogonality", "--preset", "bell", "--n", "6", "--s2-file", p]);
    assert_eq!(code(&bad), 1);
    let out = stdout(&bad);
    assert!(out.contains("FAIL orthogonality bell"), "{out}");
    assert!(out.contains("n=4 l="), "{out}");
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn mittag_leffler_logarithm() {
    let o = run(&["log", "--preset", "mittag_leffler", "--order", "6"]);
    assert_eq!(code(&o), 0);
    // t/(2+t) = Σ_{n≥1} (−1)^{n−1} tⁿ/2ⁿ
    assert_eq!(lines(&o), ["0: 0", "1: 1/2", "2: -1/4", "3: 1/8", "4: -1/16", "5: 1/32", "6: -1/64"]);
}

#[test]
fn classical_bernoulli_numbers() {
    let o = run(&["bernoulli", "--f", "t", "--alpha", "1", "--n", "6", "--format", "json"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let values: Vec<&str> = v["values"].as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
    assert_eq!(values, ["1", "-1/2", "1/6", "0", "-1/30", "0", "1/42"]);
    // B_2(x) = 1/6 − x + x²
    assert_eq!(v["polys"][2], serde_json::json!(["1/6", "-1", "1"]));
}

#[test]
fn bernoulli_needs_alpha() {
    let o = run(&["bernoulli", "--f", "t", "--n", "4"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("--alpha"));
}

#[test]
fn inverse_of_expm1_is_log1p() {
    let o = run(&["invert", "--f", "exp(t)-1", "--order", "6", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let s = Series::from_json(&stdout(&o)).unwrap();
    assert_eq!(s, Series::log1p(6));
}

#[test]
fn eval_prints_the_series() {
    let o = run(&["eval", "--f", "t/(1-t)", "--order", "4", "--egf"]);
    assert_eq!(code(&o), 0);
    assert_eq!(lines(&o), ["0: 0", "1: 1", "2: 2", "3: 6", "4: 24"]);
}

#[test]
fn json_round_trips_exactly() {
    let o = run(&["table", "--kind", "s1", "--preset", "deg_falling", "--n", "6", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let text = stdout(&o);
    let tri = Triangle::from_json(&text).unwrap();
    assert_eq!(tri.to_json() + "\n", text);
    // ((1+t)^λ − 1)/λ = t + (λ − 1)t²/2 + …
    assert_eq!(tri.get(2, 1), "-1 + l".parse::<Scalar>().unwrap());
}

#[test]
fn rational_lambda_matches_symbolic_specialisation() {
    let r = Rat::new(-2, 3).unwrap();
    for kind in ["s1", "s2"] {
        let sym = run(&["table", "--kind", kind, "--preset", "deg_lah_bell", "--n", "6", "--format", "json"]);
        let num = run(&[
            "table",
            "--kind",
            kind,
            "--preset",
            "deg_lah_bell",
            "--n",
            "6",
            "--lambda",
            "-2/3",
            "--format",
            "json",
        ]);
        let sym = Triangle::from_json(&stdout(&sym)).unwrap().eval_lambda(&r).unwrap();
        let num = Triangle::from_json(&stdout(&num)).unwrap();
        assert_eq!(sym.first_difference(&num), None, "{kind}");
    }
    let f = "(exp(lambda*t)-1)/lambda";
    for cmd in ["log", "invert", "eval"] {
        let sym = run(&[cmd, "--f", f, "--order", "7", "--lambda", "symbolic", "--format", "json"]);
        let num = run(&[cmd, "--f", f, "--order", "7", "--lambda", "-2/3", "--format", "json"]);
        let sym = Series::from_json(&stdout(&sym)).unwrap().eval_lambda(&r).unwrap();
        let num = Series::from_json(&stdout(&num)).unwrap();
        assert_eq!(sym, num, "{cmd}");
    }
}

#[test]
fn usage_errors_exit_two() {
    let cases: [&[&str]; 7] = [
        &["table", "--preset", "rising", "--f", "t", "--n", "3"],
        &["table", "--n", "3"],
        &["table", "--preset", "rising", "--n", "5", "--order", "4"],
        &["table", "--preset", "no_such_preset", "--n", "3"],
        &["log", "--f", "lambda*t", "--order", "3"],
        &["table", "--f", "t +", "--n", "3"],
        &["table", "--preset", "all", "--n", "3"],
    ];
    for args in cases {
        let o = run(args);
        assert_eq!(code(&o), 2, "{args:?}: {}", stderr(&o));
        assert!(!stderr(&o).is_empty());
    }
    assert_eq!(code(&run(&["frobnicate"])), 2);
}

#[test]
fn order_cap_from_environment() {
    let args = ["eval", "--f", "t", "--order", "6"];
    assert_eq!(code(&run_env(&args, "DELTASERIES_MAX_ORDER", "5")), 2);
    assert_eq!(code(&run_env(&args, "DELTASERIES_MAX_ORDER", "6")), 0);
    assert_eq!(code(&run(&["eval", "--f", "t", "--order", "129"])), 2);
}

#[test]
fn csv_cells_are_exact_and_quoted() {
    let o = run(&["log", "--preset", "mittag_leffler", "--order", "2", "--format", "csv"]);
    assert_eq!(lines(&o), ["n,value", "0,0", "1,\"1/2\"", "2,\"-1/4\""]);
}

#[test]
fn out_flag_writes_a_file() {
    let path = std::env::temp_dir().join(format!("deltastirling-out-{}.csv", std::process::id()));
    let p = path.to_str().unwrap();
    let o = run(&["table", "--preset", "identity", "--n", "2", "--format", "csv", "--out", p]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("n,k,value\n0,0,1\n"));
    std::fs::remove_file(&path).unwrap();
}

#[test]
fn presets_list_json() {
    let o = run(&["presets-list", "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let ids: Vec<&str> = v.as_array().unwrap().iter().map(|e| e["id"].as_str().unwrap()).collect();
    assert_eq!(ids.len(), 16);
    assert!(ids.contains(&"mittag_leffler") && ids.contains(&"probabilistic:uniform"));
}

#[test]
fn help_exits_zero() {
    let o = run(&["--help"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("verify"));
}
