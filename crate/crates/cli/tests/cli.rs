//! Black-box tests of the walg binary: exit codes, output formats, schema
//! conformance of JSON reports, and agreement with the committed golden data.

use std::process::{Command, Output};

use serde_json::Value;

fn walg(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_walg"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn walg_env(args: &[&str], key: &str, value: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_walg"))
        .args(args)
        .env(key, value)
        .output()
        .expect("binary runs")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr_str(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

fn json_report(args: &[&str]) -> Value {
    let out = walg(args);
    assert_eq!(exit_code(&out), 0, "stderr: {}", stderr_str(&out));
    serde_json::from_str(&stdout_str(&out)).expect("valid json report")
}

// ------------------------------------------------------ mini schema checker
//
// Validates the draft-07 subset report.schema.json actually uses: type
// (single or list), enum, required, properties, additionalProperties:false,
// items.

fn type_name(v: &Value) -> &'static str {
    match v {
        Value::Null => "null",
        Value::Bool(_) => "boolean",
        Value::Number(n) => {
            if n.is_i64() || n.is_u64() {
                "integer"
            } else {
                "number"
            }
        }
        Value::String(_) => "string",
        Value::Array(_) => "array",
        Value::Object(_) => "object",
    }
}

fn validate(schema: &Value, inst: &Value, path: &str) -> Result<(), String> {
    if let Some(t) = schema.get("type") {
        let allowed: Vec<&str> = match t {
            Value::String(s) => vec![s.as_str()],
            Value::Array(a) => a.iter().filter_map(|x| x.as_str()).collect(),
            _ => return Err(format!("{}: malformed type keyword", path)),
        };
        let actual = type_name(inst);
        let ok = allowed
            .iter()
            .any(|a| *a == actual || (*a == "number" && actual == "integer"));
        if !ok {
            return Err(format!("{}: expected {:?}, got {}", path, allowed, actual));
        }
    }
    if let Some(options) = schema.get("enum").and_then(|e| e.as_array()) {
        if !options.iter().any(|v| v == inst) {
            return Err(format!("{}: {} not in enum", path, inst));
        }
    }
    if let Some(obj) = inst.as_object() {
        if let Some(req) = schema.get("required").and_then(|r| r.as_array()) {
            for key in req.iter().filter_map(|k| k.as_str()) {
                if !obj.contains_key(key) {
                    return Err(format!("{}: missing required key {}", path, key));
                }
            }
        }
        if let Some(props) = schema.get("properties").and_then(|p| p.as_object()) {
            for (key, sub) in props {
                if let Some(v) = obj.get(key) {
                    validate(sub, v, &format!("{}/{}", path, key))?;
                }
            }
            if schema.get("additionalProperties") == Some(&Value::Bool(false)) {
                for key in obj.keys() {
                    if !props.contains_key(key) {
                        return Err(format!("{}: unexpected key {}", path, key));
                    }
                }
            }
        }
    }
    if let (Some(items), Some(arr)) = (schema.get("items"), inst.as_array()) {
        for (i, v) in arr.iter().enumerate() {
            validate(items, v, &format!("{}/{}", path, i))?;
        }
    }
    Ok(())
}

fn report_schema() -> Value {
    let text = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/report.schema.json"
    ))
    .expect("schema file present");
    serde_json::from_str(&text).expect("schema parses")
}

fn assert_schema(report: &Value) {
    let schema = report_schema();
    if let Err(e) = validate(&schema, report, "report") {
        panic!("schema violation: {}\nreport: {}", e, report);
    }
}

// -------------------------------------------------------------- happy paths

#[test]
fn char_csv_prints_the_expected_table() {
    let out = walg(&[
        "char", "--algebra", "A1", "--lambda", "0", "--mu", "0", "--order", "10", "--format",
        "csv",
    ]);
    assert_eq!(exit_code(&out), 0);
    let want = "degree,coefficient\n0,1\n1,0\n2,1\n3,1\n4,2\n5,2\n6,4\n7,4\n8,7\n9,8\n10,12\n";
    assert_eq!(stdout_str(&out), want);
}

#[test]
fn char_json_report_validates_and_echoes_the_job() {
    let report = json_report(&[
        "char", "--algebra", "A1", "--lambda", "1", "--mu", "1", "--order", "6", "--format",
        "json",
    ]);
    assert_schema(&report);
    assert_eq!(report["command"], "char");
    assert_eq!(report["status"], "ok");
    assert_eq!(report["input"]["algebra"], "A1");
    assert_eq!(report["input"]["lambda"], serde_json::json!([1]));
    assert_eq!(report["input"]["mu"], serde_json::json!([1]));
    assert_eq!(report["input"]["order"], 6);
    assert_eq!(report["input"]["gamma"], Value::Null);
    assert_eq!(
        report["result"]["coefficients"],
        serde_json::json!(["1", "1", "2", "3", "4", "6", "9"])
    );
}

#[test]
fn json_reports_validate_across_commands() {
    let jobs: [&[&str]; 6] = [
        &["char-dual-check", "--algebra", "B2", "--lambda", "1,0", "--mu", "0,1", "--order", "6"],
        &["kernel-dims", "--algebra", "A1", "--lambda", "1", "--mu", "1", "--order", "6"],
        &["serre-check", "--algebra", "A2", "--mu", "0,0", "--order", "4"],
        &["commrel-check", "--algebra", "A2", "--mu", "1,0", "--order", "5"],
        &["virasoro-delta", "--gamma", "5/3", "--lambda", "2", "--mu", "1"],
        &["shapovalov", "--gamma", "symbolic", "--lambda", "1", "--mu", "0", "--order", "2"],
    ];
    for job in jobs {
        let mut args = job.to_vec();
        args.extend(["--format", "json"]);
        let report = json_report(&args);
        assert_schema(&report);
        assert_eq!(report["status"], "ok", "job {:?}", job);
    }
}

#[test]
fn kernel_dims_agree_with_character_coefficients() {
    let kernel = walg(&[
        "kernel-dims", "--algebra", "A1", "--lambda", "1", "--mu", "1", "--order", "6",
        "--format", "csv",
    ]);
    let character = walg(&[
        "char", "--algebra", "A1", "--lambda", "1", "--mu", "1", "--order", "6", "--format",
        "csv",
    ]);
    assert_eq!(stdout_str(&kernel), stdout_str(&character));
}

#[test]
fn serre_check_text_reports_vanishing_relations() {
    let out = walg(&["serre-check", "--algebra", "G2", "--mu", "0,0", "--order", "8"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout_str(&out);
    assert!(text.contains("all relations vanish"), "text: {}", text);
    assert!(text.contains("status: ok"));
}

#[test]
fn commrel_scales_are_minus_one() {
    let report = json_report(&[
        "commrel-check", "--algebra", "A2", "--mu", "0,0", "--order", "5", "--format", "json",
    ]);
    assert_eq!(report["result"]["holds"], true);
    let pairs = report["result"]["pairs"].as_array().expect("pairs");
    assert!(!pairs.is_empty());
    for p in pairs {
        assert_eq!(p["holds"], true);
        assert_eq!(p["degenerate"], false);
        assert_eq!(p["scale"], "-1");
    }
}

#[test]
fn virasoro_delta_matches_the_library_closed_form() {
    use walg_core::field::Rational;
    use walg_core::virasoro::{lowest_weight, VirasoroParams};
    let report = json_report(&[
        "virasoro-delta", "--gamma", "-7/2", "--lambda", "2", "--mu", "1", "--format", "json",
    ]);
    let params = VirasoroParams::new(Rational::new(-7, 2).unwrap()).unwrap();
    let want = lowest_weight(&params, 2, 1).value.to_string();
    assert_eq!(report["result"]["delta"], Value::String(want));
    assert_eq!(report["input"]["gamma"], "-7/2");
}

#[test]
fn singvec_report_matches_the_committed_golden() {
    let report = json_report(&[
        "virasoro-singvec", "--gamma", "-2", "--lambda", "2", "--mu", "0", "--order", "6",
        "--format", "json",
    ]);
    assert_schema(&report);
    let golden_text = std::fs::read_to_string(concat!(
        env!("CARGO_MANIFEST_DIR"),
        "/../../tools/golden/singvec_gamma_m2.json"
    ))
    .expect("golden present");
    let golden: Value = serde_json::from_str(&golden_text).expect("golden parses");
    assert_eq!(report["result"], golden);
}

#[test]
fn symbolic_generic_module_has_no_singular_vectors() {
    let report = json_report(&[
        "virasoro-singvec", "--gamma", "symbolic", "--lambda", "2", "--mu", "2", "--order", "3",
        "--format", "json",
    ]);
    for level in report["result"]["levels"].as_array().expect("levels") {
        assert_eq!(level["dimension"], 0, "degree {}", level["degree"]);
    }
}

#[test]
fn resonant_rational_level_has_a_degree_one_kernel_vector() {
    // gamma = (lambda+2)/(mu+2) = 1 puts nu = 0 on the resonant locus
    // nu = 2*gamma - 2, where x_{-1} spans the degree-1 joint kernel.
    let report = json_report(&[
        "virasoro-singvec", "--gamma", "1", "--lambda", "0", "--mu", "0", "--order", "2",
        "--format", "json",
    ]);
    let levels = report["result"]["levels"].as_array().expect("levels");
    assert_eq!(levels[0]["dimension"], 1);
    assert_eq!(levels[0]["vectors"], serde_json::json!([["1"]]));
    assert_eq!(levels[1]["dimension"], 0);
}

// --------------------------------------------------------------- exit codes

#[test]
fn non_dominant_weight_is_invalid_input() {
    let out = walg(&["char", "--algebra", "A1", "--lambda", "-1", "--mu", "0", "--order", "5"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_str(&out).contains("dominant"));
    assert!(stdout_str(&out).is_empty());
}

#[test]
fn unknown_algebra_is_invalid_input() {
    let out = walg(&["char", "--algebra", "E8", "--lambda", "0", "--mu", "0", "--order", "3"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_str(&out).contains("unsupported"));
}

#[test]
fn wrong_rank_is_invalid_input() {
    let out = walg(&[
        "char", "--algebra", "A2", "--lambda", "1", "--mu", "0,0", "--order", "3",
    ]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_str(&out).contains("entries"));
}

#[test]
fn malformed_gamma_is_invalid_input() {
    for gamma in ["1/0", "x", "2.5"] {
        let out = walg(&["virasoro-delta", "--gamma", gamma, "--lambda", "1", "--mu", "1"]);
        assert_eq!(exit_code(&out), 2, "gamma {}", gamma);
    }
}

#[test]
fn zero_gamma_is_invalid_input() {
    let out = walg(&["virasoro-delta", "--gamma", "0", "--lambda", "1", "--mu", "1"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_str(&out).contains("nonzero"));
}

#[test]
fn caps_guard_large_jobs_but_can_be_raised() {
    let blocked = walg(&[
        "virasoro-singvec", "--gamma", "-2", "--lambda", "2", "--mu", "0", "--order", "9",
    ]);
    assert_eq!(exit_code(&blocked), 2);
    assert!(stderr_str(&blocked).contains("cap"));
    let raised = walg(&[
        "virasoro-singvec", "--gamma", "-2", "--lambda", "2", "--mu", "0", "--order", "9",
        "--cap", "9",
    ]);
    assert_eq!(exit_code(&raised), 0);

    let blocked = walg(&[
        "shapovalov", "--gamma", "3", "--lambda", "0", "--mu", "0", "--order", "7",
    ]);
    assert_eq!(exit_code(&blocked), 2);
    let raised = walg(&[
        "shapovalov", "--gamma", "3", "--lambda", "0", "--mu", "0", "--order", "7", "--cap",
        "7",
    ]);
    assert_eq!(exit_code(&raised), 0);
}

#[test]
fn missing_required_flag_is_a_usage_error() {
    let out = walg(&["char", "--algebra", "A1", "--order", "3"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn invalid_worker_count_is_invalid_input() {
    for value in ["abc", "0"] {
        let out = walg_env(
            &["char", "--algebra", "A1", "--lambda", "0", "--mu", "0", "--order", "3"],
            "WALG_THREADS",
            value,
        );
        assert_eq!(exit_code(&out), 2, "WALG_THREADS={}", value);
        assert!(stderr_str(&out).contains("WALG_THREADS"));
    }
}

#[test]
fn negative_kac_label_is_invalid_input() {
    let out = walg(&["virasoro-delta", "--gamma", "2", "--lambda", "-1", "--mu", "0"]);
    assert_eq!(exit_code(&out), 2);
    assert!(stderr_str(&out).contains("nonnegative"));
}
