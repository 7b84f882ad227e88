use std::path::Path;
use std::process::{Command, Output};

fn skein(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skein")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

#[test]
fn eval_reduces_words() {
    let o = skein(&["eval", "--k", "4", "e1*e2*e1"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "e1\n");
}

#[test]
fn eval_conjugates_w() {
    let o = skein(&["eval", "--k", "2", "bar(w(Id2))"]);
    assert_eq!(stdout(&o), "A^-2*Id2 + (1 - A^4)*e1\n");
}

#[test]
fn eval_lower_relation() {
    let o = skein(&["eval", "--k", "4", "Id4 - A^6 * w(Id4)"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("(1 - A^12)*Id4 + (A^6 - A^10)*e1 + "), "{}", stdout(&o));
}

#[test]
fn eval_raw_prints_pairings() {
    let o = skein(&["eval", "--k", "2", "--raw", "e1"]);
    assert_eq!(stdout(&o), "[(L1,L2),(R1,R2)]\n");
}

#[test]
fn glue_h2h1() {
    let o = skein(&["glue", "--scenario", "h2h1", "--expr", "e2*e1"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o), "[a1a2]\n");
}

#[test]
fn relations_lower_positive_k4() {
    let o = skein(&["relations", "--k", "4", "--variants", "lower+"]);
    assert_eq!(code(&o), 0);
    // Id4 plus the nine basis diagrams of through-degree 2.
    assert!(stdout(&o).ends_with("10 relations\n"));
    assert_eq!(stdout(&o).lines().count(), 11);
}

#[test]
fn ideal_check_reports_non_member() {
    let o = skein(&["ideal-check", "--scenario", "h2h1", "--kmax", "4"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("verdict (za): non_member"), "{}", stdout(&o));
    let o = skein(&["ideal-check", "--scenario", "h2h1", "--expect", "non_member"]);
    assert_eq!(code(&o), 0);
    let o = skein(&["ideal-check", "--scenario", "h2h1", "--ring", "qa", "--expect", "non_member"]);
    assert_eq!(code(&o), 1);
}

#[test]
fn verify_passes_and_filters() {
    let o = skein(&["verify"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).lines().all(|l| l.starts_with("PASS") || l.contains("checks passed")));
    let o = skein(&["verify", "--only", "w4,counterexample"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("2/2 checks passed"));
    let o = skein(&["verify", "--only", "no-such-check"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn verify_json_schema() {
    let o = skein(&["--format", "json", "verify"]);
    assert_eq!(code(&o), 0);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"], "verify");
    assert_eq!(v["passed"], true);
    assert_eq!(v["checks"].as_array().unwrap().len(), 17);
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["outcome"] == "pass"));
}

#[test]
fn json_output_is_byte_stable() {
    for args in [
        &["--format", "json", "verify"][..],
        &["--format", "json", "ideal-check", "--scenario", "h2h1"],
        &["--format", "json", "conjecture", "--k", "4"],
        &["--format", "json", "relations", "--k", "3"],
    ] {
        let (a, b) = (skein(args), skein(args));
        assert_eq!(code(&a), 0);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn conjecture_expectations() {
    let o = skein(&["conjecture", "--k", "4", "--expect", "equal"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let o = skein(&["conjecture", "--k", "4", "--no-glue", "--expect", "incomparable"]);
    assert_eq!(code(&o), 1);
    let o = skein(&["--format", "json", "conjecture", "--k", "4", "--no-glue"]);
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["levels"].as_array().unwrap().len(), 2);
}

#[test]
fn list_scenarios() {
    let o = skein(&["--list-scenarios"]);
    assert_eq!(code(&o), 0);
    for name in ["h2h1", "fig5a", "fig5b", "fig9", "h2h2", "h1h1-k2", "h1h1-k4", "h1h1-k6"] {
        assert!(stdout(&o).lines().any(|l| l.starts_with(name)), "{name}");
    }
}

#[test]
fn malformed_input_exits_2() {
    for args in [
        &["eval", "--k", "4", "e1*("][..],
        &["eval", "e1"],
        &["eval", "--k", "4", "e9"],
        &["w", "--k", "1"],
        &["w", "--k", "2", "--variant", "sideways"],
        &["relations", "--k", "4", "--variants", "lower"],
        &["glue", "--scenario", "nowhere", "--expr", "e1"],
        &["glue", "--scenario", "h2h1", "--expr", "e1*e2*e5"],
        &["ideal-check", "--scenario", "h2h1", "--kmax", "3"],
        &["conjecture", "--k", "5"],
        &["bogus-command"],
        &[],
    ] {
        let o = skein(args);
        assert_eq!(code(&o), 2, "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
    }
}

#[test]
fn corrupted_scenario_is_a_configuration_error() {
    let dir = std::env::temp_dir().join(format!("skein-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let write = |name: &str, text: &str| std::fs::write(dir.join(format!("{name}.json")), text).unwrap();
    write("h2h1", "{ \"name\": \"h2h1\", \"punctures\": [");
    let d = dir.to_str().unwrap();
    let o = skein(&["--scenario-dir", d, "verify"]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("error"));

    // Crossing arcs are rejected at load time.
    let source = skein::surface::shipped_source("h2h1")
        .unwrap()
        .replace("[[2, 3], [14, 3], [14, -3], [2, -3]]", "[[2, 3], [14, 3], [14, -3], [9, -3], [9, 3], [2, -3]]");
    write("h2h1", &source);
    let o = skein(&["--scenario-dir", d, "glue", "--scenario", "h2h1", "--expr", "e1"]);
    assert_eq!(code(&o), 2);
    std::fs::remove_dir_all(Path::new(&dir)).unwrap();
}

#[test]
fn scenario_path_is_accepted() {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("scenarios/h2h1.json");
    let o = skein(&["glue", "--scenario", path.to_str().unwrap(), "--expr", "e2*e3"]);
    assert_eq!(stdout(&o), "[a1a2]\n");
}

#[test]
fn help_exits_zero() {
    let o = skein(&["--help"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("ideal-check"));
}
