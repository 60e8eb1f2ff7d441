//! End-to-end runs of the `bigbracket` binary.

use std::io::Write;
use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use bigbracket::structures::{LieAlgebroidData, TensorData, TensorKind};
use bigbracket::tensor_oracle as oracle;
use bigbracket::{builtin, BasePoly};
use proptest::prelude::*;
use serde_json::{json, Value};

fn data(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data").join(name)
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_bigbracket"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).env_remove("BIGBRACKET_SEED").output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin().args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped()).spawn().unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn file_arg(name: &str) -> String {
    data(name).to_str().unwrap().to_string()
}

#[test]
fn aff1_is_a_lie_algebroid() {
    let o = run(&["check", "lie-algebroid", &file_arg("aff1.json")]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("[ok] lie-algebroid  ({μ,μ} = 0)"), "{}", stdout(&o));
}

#[test]
fn heisenberg_e12_fails_with_a_top_form_residual() {
    let o = run(&["--format", "json", "check", "poisson", &file_arg("h3-e12.json")]);
    assert_eq!(code(&o), 1);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let conditions = &v["reports"][0]["conditions"];
    // [π,π] for π = e1∧e2 on h3 is 2 e1∧e2∧e3.
    assert_eq!(conditions[0]["residual"], "2*θ1*θ2*θ3");
    assert_eq!(conditions[1]["residual"], "P[1,2,3] = 2");
}

#[test]
fn pair_derivation_reports_a_quadruple_and_zero_residuals() {
    let o = run(&["derive", "pqn-from-pair", &file_arg("aff1-pair.json"), "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let conditions = v["reports"][0]["conditions"].as_array().unwrap();
    assert!(conditions.len() >= 6);
    assert!(conditions.iter().all(|c| c["passed"] == true && c["residual"] == "0"));
    // N = π♯∘ω♭ = −2 id for π = e1∧e2, ω = 2 e^1∧e^2.
    let n = &v["quadruple"]["n"];
    assert_eq!(n, &json!([{"index": [1, 1], "value": [[[], -2, 1]]}, {"index": [2, 2], "value": [[[], -2, 1]]}]));
}

#[test]
fn derived_quadruple_feeds_back_into_the_checker() {
    let o = run(&["derive", "pqn-from-pair", &file_arg("tangent3-pair.json"), "--format", "json"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_ne!(v["quadruple"]["h"], json!([]), "expected a nonzero background");
    let again = run_stdin(&["check", "pqn-background", "-"], &v["quadruple"].to_string());
    assert_eq!(code(&again), 0, "{}", stdout(&again));
}

#[test]
fn twist_and_cps_samples_pass() {
    for args in [
        vec!["twist", "tangent3-pair.json"],
        vec!["check", "cps", "aff1-cps.json"],
        vec!["check", "courant", "aff1-cps.json"],
    ] {
        let (last, head) = args.split_last().unwrap();
        let mut full: Vec<String> = head.iter().map(|s| s.to_string()).collect();
        full.push(file_arg(last));
        let refs: Vec<&str> = full.iter().map(String::as_str).collect();
        let o = run(&refs);
        assert_eq!(code(&o), 0, "{args:?}: {}", stdout(&o));
    }
}

#[test]
fn torsion_of_a_non_nijenhuis_tensor_fails() {
    let o = run(&["torsion", &file_arg("tangent3-n.json")]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("[FAIL] nijenhuis (tensor)"));
}

/// Parse the text report back into `(name, passed, residual)` triples.
fn text_conditions(text: &str) -> Vec<(String, bool, String)> {
    let mut out: Vec<(String, bool, String)> = Vec::new();
    for line in text.lines() {
        let t = line.trim_start();
        if let Some(rest) = t.strip_prefix("[ok] ").or_else(|| t.strip_prefix("[FAIL] ")) {
            let name = rest.split("  (").next().unwrap().to_string();
            let passed = t.starts_with("[ok]");
            out.push((name, passed, "0".to_string()));
        } else if let Some(r) = t.strip_prefix("residual: ") {
            out.last_mut().unwrap().2 = r.to_string();
        }
    }
    out
}

#[test]
fn text_and_json_agree() {
    let cases = [
        ("check lie-algebroid", "aff1.json"),
        ("check poisson", "h3-e12.json"),
        ("check pqn-background", "tangent3-pair.json"),
        ("check cps", "aff1-cps.json"),
        ("check courant", "aff1-cps.json"),
        ("derive pqn-from-pair", "tangent3-pair.json"),
        ("twist", "tangent3-pair.json"),
        ("torsion", "tangent3-n.json"),
    ];
    for (cmd, file) in cases {
        let mut args: Vec<String> = cmd.split(' ').map(String::from).collect();
        args.push(file_arg(file));
        let refs: Vec<&str> = args.iter().map(String::as_str).collect();
        let text = run(&refs);
        let json_out = run(&[&["--format", "json"], refs.as_slice()].concat());
        assert_eq!(code(&text), code(&json_out), "{cmd}");
        let v: Value = serde_json::from_str(&stdout(&json_out)).unwrap();
        let from_json: Vec<(String, bool, String)> = v["reports"]
            .as_array()
            .unwrap()
            .iter()
            .flat_map(|r| r["conditions"].as_array().unwrap().clone())
            .map(|c| {
                (
                    c["name"].as_str().unwrap().to_string(),
                    c["passed"].as_bool().unwrap(),
                    c["residual"].as_str().unwrap().to_string(),
                )
            })
            .collect();
        assert!(!from_json.is_empty(), "{cmd}");
        assert_eq!(text_conditions(&stdout(&text)), from_json, "{cmd}");
        assert_eq!(v["passed"], code(&text) == 0);
    }
}

#[test]
fn suite_seed_comes_from_the_environment() {
    let o = bin()
        .args(["suite", "negative", "--instances", "2"])
        .env("BIGBRACKET_SEED", "41")
        .output()
        .unwrap();
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("suite negative (seed 41): PASS, 2 instances"), "{}", stdout(&o));
    let flag = run(&["suite", "negative", "--instances", "2", "--seed", "41"]);
    assert_eq!(stdout(&o), stdout(&flag));
}

#[test]
fn invalid_invocations_exit_with_two() {
    let missing = file_arg("does-not-exist.json");
    for args in [
        vec!["suite", "no-such-suite"],
        vec!["check", "poisson", missing.as_str()],
        vec!["frobnicate"],
        vec!["check", "poisson", &file_arg("aff1.json")],
    ] {
        assert_eq!(code(&run(&args)), 2, "{args:?}");
    }
}

fn file_of(alg: &LieAlgebroidData, pi: Option<&TensorData>) -> Value {
    let poly = |p: &BasePoly| -> Value {
        p.terms()
            .map(|(e, c)| json!([e, c.numer().to_string(), c.denom().to_string()]))
            .collect()
    };
    let mut brackets = Vec::new();
    for a in 0..alg.rank() {
        for b in a + 1..alg.rank() {
            for k in 0..alg.rank() {
                let v = alg.structure(a, b, k);
                if !v.is_zero() {
                    brackets.push(json!({"index": [a + 1, b + 1, k + 1], "value": poly(v)}));
                }
            }
        }
    }
    let mut v = json!({"base_dim": alg.base_dim(), "rank": alg.rank(), "brackets": brackets});
    if let Some(pi) = pi {
        let comps: Vec<Value> = pi
            .components()
            .iter()
            .map(|(idx, p)| json!({"index": idx.iter().map(|i| i + 1).collect::<Vec<_>>(), "value": poly(p)}))
            .collect();
        v["pi"] = Value::Array(comps);
    }
    v
}

/// A rank-3 table with constant structure constants in `[−1, 1]`.
fn table(c: &[i64]) -> LieAlgebroidData {
    let mut entries = Vec::new();
    let mut n = 0;
    for (a, b) in [(0, 1), (0, 2), (1, 2)] {
        for k in 0..3 {
            entries.push((a, b, k, BasePoly::from_int(0, c[n])));
            n += 1;
        }
    }
    LieAlgebroidData::from_sparse(0, 3, vec![], entries).unwrap()
}

fn bivector(c: &[i64]) -> TensorData {
    let comps = [(0, 1), (0, 2), (1, 2)].iter().zip(c).map(|(&(a, b), &v)| (vec![a, b], BasePoly::from_int(0, v)));
    TensorData::from_components(TensorKind::BIVECTOR, 0, 3, comps).unwrap()
}

fn jacobi_holds(alg: &LieAlgebroidData) -> bool {
    oracle::jacobiator(alg).iter().all(|(_, s)| s.iter().all(BasePoly::is_zero))
}

const COMMANDS: &[&[&str]] = &[
    &["check", "poisson"],
    &["check", "pqn-background"],
    &["check", "cps"],
    &["check", "courant"],
    &["derive", "pqn-from-pair"],
    &["twist"],
    &["torsion"],
];

/// Ways of breaking a valid file so that it no longer parses or validates.
fn corrupt(file: &Value, how: usize, at: usize) -> String {
    let mut v = file.clone();
    match how {
        0 => {
            let s = v.to_string();
            return s[..at % s.len()].to_string();
        }
        1 => v["rank"] = json!("three"),
        2 => v["pi"] = json!([{"index": [1, 4], "value": [[[], 1, 1]]}]),
        3 => v["pi"] = json!([{"index": [1, 2], "value": [[[], 1, 0]]}]),
        4 => v["pi"] = json!([{"index": [1, 2], "value": [[[0], 1, 1]]}]),
        5 => v["unexpected"] = json!(1),
        6 => v["lambda"] = json!(2 + (at % 5) as i64),
        _ => v["brackets"] = json!([{"index": [2, 2, 1], "value": [[[], 1, 1]]}]),
    }
    v.to_string()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    /// `check lie-algebroid` exits 0 exactly when the oracle Jacobiator vanishes.
    #[test]
    fn lie_algebroid_exit_code_matches_the_oracle(c in proptest::collection::vec(-1i64..=1, 9)) {
        let alg = table(&c);
        let o = run_stdin(&["check", "lie-algebroid", "-"], &file_of(&alg, None).to_string());
        prop_assert_eq!(code(&o), if jacobi_holds(&alg) { 0 } else { 1 });
    }

    /// `check poisson` exits 0 exactly when the oracle Schouten square
    /// vanishes, and 1 on a structure that is not a Lie algebroid.
    #[test]
    fn poisson_exit_code_matches_the_oracle(which in 0usize..4, c in proptest::collection::vec(-2i64..=2, 3)) {
        let alg = builtin(["heisenberg3", "so3", "sl2", "abelian(3)"][which]).unwrap().algebroid;
        let pi = bivector(&c);
        let o = run_stdin(&["check", "poisson", "-"], &file_of(&alg, Some(&pi)).to_string());
        let want = if oracle::schouten(&alg, &pi, &pi).is_zero() { 0 } else { 1 };
        prop_assert_eq!(code(&o), want);
    }

    /// Every file subcommand exits 1 when the base table breaks Jacobi.
    #[test]
    fn broken_tables_exit_with_one(cmd in 0usize..COMMANDS.len(), c in proptest::collection::vec(-1i64..=1, 9)) {
        let alg = table(&c);
        prop_assume!(!jacobi_holds(&alg));
        let mut v = file_of(&alg, Some(&bivector(&[1, 0, 0])));
        v["omega"] = json!([]);
        v["n"] = json!([]);
        let o = run_stdin(&[COMMANDS[cmd], &["-"]].concat(), &v.to_string());
        prop_assert_eq!(code(&o), 1, "{}", stdout(&o));
    }

    /// Every file subcommand exits 2 on malformed or invalid input.
    #[test]
    fn malformed_files_exit_with_two(cmd in 0usize..COMMANDS.len(), how in 0usize..8, at: usize, json_out: bool) {
        let alg = builtin("heisenberg3").unwrap().algebroid;
        let mut v = file_of(&alg, Some(&bivector(&[0, 0, 1])));
        v["omega"] = json!([]);
        v["n"] = json!([]);
        let mut args = COMMANDS[cmd].to_vec();
        args.push("-");
        if json_out {
            args.extend(["--format", "json"]);
        }
        let o = run_stdin(&args, &corrupt(&v, how, at));
        prop_assert_eq!(code(&o), 2, "{}", String::from_utf8_lossy(&o.stderr));
    }
}
