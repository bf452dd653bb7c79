use adorn_cli::run;
use serde_json::Value;

fn adorn(args: &[&str]) -> adorn_cli::Outcome {
    run(std::iter::once("adorn")
        .chain(args.iter().copied())
        .map(Into::into)
        .collect::<Vec<std::ffi::OsString>>())
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = adorn(&full);
    (
        serde_json::from_str(&out.stdout).expect("valid json"),
        out.code,
    )
}

#[test]
fn doa_of_catalog_groups() {
    let (v, code) = json(&["doa", "--catalog", "symmetric5"]);
    assert_eq!(code, 0);
    assert_eq!(v["command"], "doa");
    assert_eq!(v["result"]["verdict"]["doa"], 1);
    for key in ["budgets", "input", "result", "version"] {
        assert!(v.get(key).is_some(), "{key}");
    }
    let (v, _) = json(&["doa", "--catalog", "quaternion8_presented"]);
    assert_eq!(v["result"]["verdict"]["doa"], 2);
}

#[test]
fn exit_codes() {
    assert_eq!(adorn(&["doa", "< a, b | >"]).code, 0);
    // infinite cyclic abelianization stalls the presented pipeline
    assert_eq!(adorn(&["doa", "< x, y | x*y*x*y^-1*x^-1*y^-1 >"]).code, 2);
    assert_eq!(adorn(&["doa", "< a, b | a*"]).code, 1);
    assert_eq!(adorn(&["doa", "--catalog", "no_such_group"]).code, 1);
    assert_eq!(adorn(&["frobnicate"]).code, 1);
    assert_eq!(adorn(&["--help"]).code, 0);
    assert_eq!(
        adorn(&["doa", "--max-cosets", "0", "--catalog", "symmetric3"]).code,
        1
    );
}

#[test]
fn errors_go_to_stderr() {
    let out = adorn(&["snf", "[[1,2],[3]]"]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.is_empty() || out.stdout.contains("error"));
    assert!(!out.stderr.is_empty());
}

#[test]
fn snf_and_alexander() {
    let (v, code) = json(&["snf", "[[2,4],[6,8]]"]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["diag"], serde_json::json!([2, 4]));
    let out = adorn(&["alexander", "--catalog", "trefoil"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("t^2 - t + 1"));
    assert!(out.stdout.contains("NotAdorable"));
}

#[test]
fn explore_is_seed_deterministic() {
    let a = adorn(&[
        "explore", "--count", "20", "--seed", "5", "--format", "json",
    ]);
    let b = adorn(&[
        "explore", "--count", "20", "--seed", "5", "--format", "json",
    ]);
    assert_eq!(a.code, 0);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn catalog_listing() {
    let out = adorn(&["catalog", "list"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.lines().any(|l| l.contains("trefoil")));
    let (v, code) = json(&["catalog", "show", "klein_four"]);
    assert_eq!(code, 0);
    assert!(v["result"].is_object());
}
