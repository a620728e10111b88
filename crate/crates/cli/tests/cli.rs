use std::process::{Command, Output};

use serde_json::Value;

fn lgm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lgm"))
        .args(args)
        .output()
        .expect("run lgm")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(stdout(o).trim()).expect("json output")
}

#[test]
fn generate_quadric_threefold() {
    let o = lgm(&["generate", "--k", "2", "--degrees", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(
        stdout(&o).trim(),
        "a_1_1 + a_1_2*a_1_1^-1 + a_2_1*a_1_1^-1 + a_2_1^-1 + a_1_2^-1"
    );
}

#[test]
fn generate_json_lists_variables_and_terms() {
    let o = lgm(&["--format", "json", "generate", "--k", "3", "--degrees", "1,1"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["variables"].as_array().unwrap().len(), 4);
    assert_eq!(v["terms"].as_array().unwrap().len(), 7);
    assert!(v["terms"][0]["coeff"].is_string());
}

#[test]
fn k_one_is_a_usage_error() {
    let o = lgm(&["generate", "--k", "1", "--degrees", "1"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn non_fano_is_a_usage_error() {
    let o = lgm(&["generate", "--k", "2", "--degrees", "2,2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn bad_degree_is_a_usage_error() {
    let o = lgm(&["generate", "--k", "2", "--degrees", "x"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn appendix_with_partition() {
    let p = r#"{"E":[5,6,7,8],"Em":[[1],[12],[2,9],[3,10]],"sm":[1,12,2,3]}"#;
    let o = lgm(&[
        "generate", "--k", "4", "--degrees", "1,1,1,1", "--method", "appendix", "--partition", p,
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let bad = lgm(&[
        "generate", "--k", "4", "--degrees", "1,1,1,1", "--method", "appendix", "--partition",
        r#"{"E":[1],"Em":[],"sm":[]}"#,
    ]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn strict_verify_dumps_the_pipeline() {
    let path = std::env::temp_dir().join(format!("lgm-dump-{}.json", std::process::id()));
    let p = path.to_str().unwrap();
    let o = lgm(&["--strict-verify", "--dump-pipeline", p, "generate", "--k", "3", "--degrees", "2,1"]);
    assert_eq!(o.status.code(), Some(0));
    let dump: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    std::fs::remove_file(&path).ok();
    let reports = dump["reports"].as_array().unwrap();
    assert!(!reports.is_empty());
    assert!(reports.iter().all(|r| r["violations"].as_array().unwrap().is_empty()));
    assert!(dump["steps"].as_array().is_some());
}

#[test]
fn iseries_of_cubic_threefold() {
    let o = lgm(&["--format", "json", "iseries", "--n", "4", "--degrees", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let s: Vec<&str> = v["series"].as_array().unwrap().iter().map(|x| x.as_str().unwrap()).collect();
    assert_eq!(s, ["1", "0", "12", "0", "540", "0", "33600", "0", "2425500"]);
}

#[test]
fn iseries_reports_calibration() {
    let o = lgm(&["--format", "json", "iseries", "--k", "2", "--calibration"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["reading"], "degree-prefactor-plus-two");
    assert_eq!(v["series"][4], "48");
    assert!(!v["calibration"]["points"].as_array().unwrap().is_empty());
}

#[test]
fn period_check_passes() {
    let o = lgm(&["--format", "json", "period-check", "--k", "3", "--degrees", "1,1"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["verdict"], "pass");
    assert_eq!(v["period"][3], "18");
}

#[test]
fn closed_form_on_grassmannian_needs_hyperplanes() {
    let o = lgm(&["period-check", "--k", "2", "--degrees", "2", "--method", "closed-form"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn compare_methods_agree() {
    let o = lgm(&["--format", "json", "--terms", "6", "compare-methods", "--k", "2", "--degrees", "3"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["agree"], true);
    assert_eq!(v["main"]["period"], v["appendix"]["period"]);
}

#[test]
fn newton_polytope_of_quadric_threefold() {
    let o = lgm(&["--format", "json", "newton", "--k", "2", "--degrees", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["vertices"].as_array().unwrap().len(), 5);
    assert_eq!(v["origin_in_interior"], true);
}

#[test]
fn examples_all_pass_in_id_order() {
    let o = lgm(&["--format", "json", "examples", "--all"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    let ids: Vec<&str> = v.as_array().unwrap().iter().map(|r| r["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort();
    assert_eq!(ids, sorted);
    assert_eq!(ids.len(), 18);
}

#[test]
fn unknown_example_is_a_usage_error() {
    let o = lgm(&["examples", "--id", "no-such-example"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn missing_subcommand_arguments_are_rejected() {
    let o = lgm(&["generate"]);
    assert_eq!(o.status.code(), Some(2));
}
