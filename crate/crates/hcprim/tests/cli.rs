//! Binary-level tests: exit codes, config echo, byte-identical reruns, and
//! validation of every JSON report against the schemas shipped in-repo.

use std::path::PathBuf;
use std::process::Command;

use serde_json::Value;

fn workspace_root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_hcprim"))
        .args(args)
        .current_dir(workspace_root())
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8_lossy(&out.stdout).into_owned(),
        String::from_utf8_lossy(&out.stderr).into_owned(),
    )
}

fn load_schema(name: &str) -> Value {
    let path = workspace_root().join("schemas").join(name);
    let text = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("read {}: {e}", path.display()));
    serde_json::from_str(&text).expect("schema parses")
}

/// Minimal JSON Schema checker covering the keywords the shipped schemas
/// use: type, enum, required, properties, additionalProperties (boolean),
/// items, minimum, maximum, oneOf, and #/definitions references.
mod schema {
    use serde_json::Value;

    pub fn validate(root: &Value, instance: &Value) -> Result<(), String> {
        check(root, root, instance, "$")
    }

    fn resolve<'a>(root: &'a Value, reference: &str) -> &'a Value {
        let mut cur = root;
        for part in reference.trim_start_matches("#/").split('/') {
            cur = cur
                .get(part)
                .unwrap_or_else(|| panic!("schema reference {reference} is dangling"));
        }
        cur
    }

    fn type_matches(name: &str, instance: &Value) -> bool {
        match name {
            "object" => instance.is_object(),
            "array" => instance.is_array(),
            "string" => instance.is_string(),
            "boolean" => instance.is_boolean(),
            "null" => instance.is_null(),
            "integer" => instance.as_i64().is_some() || instance.as_u64().is_some(),
            "number" => instance.is_number(),
            other => panic!("unsupported type name {other}"),
        }
    }

    fn check(root: &Value, schema: &Value, instance: &Value, path: &str) -> Result<(), String> {
        if let Some(reference) = schema.get("$ref").and_then(|r| r.as_str()) {
            return check(root, resolve(root, reference), instance, path);
        }
        if let Some(options) = schema.get("oneOf").and_then(|o| o.as_array()) {
            let hits = options
                .iter()
                .filter(|opt| check(root, opt, instance, path).is_ok())
                .count();
            if hits != 1 {
                return Err(format!("{path}: {hits} of {} oneOf branches match", options.len()));
            }
            return Ok(());
        }
        if let Some(allowed) = schema.get("enum").and_then(|e| e.as_array()) {
            if !allowed.contains(instance) {
                return Err(format!("{path}: {instance} not in enum"));
            }
            return Ok(());
        }
        if let Some(typ) = schema.get("type") {
            let names: Vec<&str> = match typ {
                Value::String(s) => vec![s.as_str()],
                Value::Array(a) => a.iter().filter_map(|v| v.as_str()).collect(),
                _ => panic!("bad type keyword"),
            };
            if !names.iter().any(|n| type_matches(n, instance)) {
                return Err(format!("{path}: type is not one of {names:?}"));
            }
        }
        if let Some(min) = schema.get("minimum").and_then(|m| m.as_i64()) {
            if let Some(v) = instance.as_i64() {
                if v < min {
                    return Err(format!("{path}: {v} below minimum {min}"));
                }
            }
        }
        if let Some(max) = schema.get("maximum").and_then(|m| m.as_i64()) {
            if let Some(v) = instance.as_i64() {
                if v > max {
                    return Err(format!("{path}: {v} above maximum {max}"));
                }
            }
        }
        if let Some(obj) = instance.as_object() {
            if let Some(required) = schema.get("required").and_then(|r| r.as_array()) {
                for key in required.iter().filter_map(|k| k.as_str()) {
                    if !obj.contains_key(key) {
                        return Err(format!("{path}: missing required key {key}"));
                    }
                }
            }
            let props = schema.get("properties").and_then(|p| p.as_object());
            if let Some(props) = props {
                for (key, sub) in props {
                    if let Some(value) = obj.get(key) {
                        check(root, sub, value, &format!("{path}.{key}"))?;
                    }
                }
            }
            if schema.get("additionalProperties") == Some(&Value::Bool(false)) {
                for key in obj.keys() {
                    if !props.map(|p| p.contains_key(key)).unwrap_or(false) {
                        return Err(format!("{path}: unexpected key {key}"));
                    }
                }
            }
        }
        if let Some(arr) = instance.as_array() {
            if let Some(items) = schema.get("items") {
                for (i, item) in arr.iter().enumerate() {
                    check(root, items, item, &format!("{path}[{i}]"))?;
                }
            }
        }
        Ok(())
    }
}

fn assert_valid(schema_name: &str, instance: &Value) {
    let s = load_schema(schema_name);
    if let Err(msg) = schema::validate(&s, instance) {
        panic!("{schema_name} rejects instance: {msg}\n{instance:#}");
    }
}

#[test]
fn classify_mixed_shape_verdict_and_exit_code() {
    let (code, stdout, _) = run(&[
        "classify", "--case", "GL", "-n", "3", "-q", "3", "-l", "2", "--shape",
        "1^1+(1*2^1)^1", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let doc: Value = serde_json::from_str(&stdout).expect("json output");
    assert_valid("report.schema.json", &doc);
    assert_valid("verdict.schema.json", &doc["results"]);
    assert_eq!(doc["results"]["verdict"], "Imprimitive");
    assert_eq!(doc["results"]["witness"], serde_json::json!([1, 2]));
    assert_eq!(doc["config"]["subcommand"], "classify");
}

#[test]
fn classify_nonlinear_kind_is_primitive() {
    let (code, stdout, _) = run(&["classify", "--case", "Sp", "-n", "4", "-q", "2", "-l", "3"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("verdict Primitive (non-linear-kind)"));
    assert!(stdout.starts_with("# hcprim classify"));
}

#[test]
fn classify_defining_characteristic_exits_2() {
    let (code, _, stderr) = run(&[
        "classify", "--case", "GL", "-n", "2", "-q", "4", "-l", "2", "--shape", "1^2",
    ]);
    assert_eq!(code, 2);
    assert!(stderr.contains("defining characteristic"));
}

#[test]
fn classify_factor_list_route() {
    let (code, stdout, _) = run(&[
        "classify", "--factors", "GL:3:3:1^1+(1*2^1)^1,GU:2:3", "-l", "2", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let doc: Value = serde_json::from_str(&stdout).expect("json output");
    assert_valid("report.schema.json", &doc);
    assert_eq!(doc["results"]["verdict"], "Imprimitive");
    assert_eq!(doc["results"]["clause"], "factorwise");
    assert_eq!(doc["results"]["witness"], serde_json::json!([1, 2, 2]));
}

#[test]
fn unknown_flags_and_subcommands_exit_2() {
    let (code, _, _) = run(&["classify", "--case", "GL", "-n", "2", "-q", "3", "-l", "2", "--frob"]);
    assert_eq!(code, 2);
    let (code, _, _) = run(&["transmogrify"]);
    assert_eq!(code, 2);
}

#[test]
fn shapes_report_validates() {
    let (code, stdout, _) = run(&["shapes", "-n", "4", "-q", "3", "-l", "2", "--format", "json"]);
    assert_eq!(code, 0);
    let doc: Value = serde_json::from_str(&stdout).expect("json output");
    assert_valid("report.schema.json", &doc);
    assert_eq!(doc["results"].as_array().map(|a| a.len()), Some(4));
}

#[test]
fn hecke_report_validates() {
    let (code, stdout, _) = run(&[
        "hecke", "--type", "B2", "--field", "3", "--params", "1,2", "--format", "json",
    ]);
    assert_eq!(code, 0);
    let doc: Value = serde_json::from_str(&stdout).expect("json output");
    assert_valid("report.schema.json", &doc);
    let rows = doc["results"].as_array().expect("rows");
    assert!(!rows.is_empty());
    assert!(rows.iter().all(|r| r["reducible"] == Value::Bool(true)));
}

#[test]
fn oracle_matches_pinned_corpus() {
    let (code, stdout, _) = run(&["oracle", "--format", "json"]);
    assert_eq!(code, 0, "oracle reported a corpus mismatch:\n{stdout}");
    let doc: Value = serde_json::from_str(&stdout).expect("json output");
    assert_valid("report.schema.json", &doc);
    let cases = doc["results"].as_array().expect("cases");
    assert_eq!(cases.len(), 4);
    assert!(cases.iter().all(|c| c["agreement"] == Value::Bool(true)));
}

#[test]
fn oracle_rejects_unknown_case() {
    let (code, _, stderr) = run(&["oracle", "--case", "no-such-case"]);
    assert_eq!(code, 2);
    assert!(stderr.contains("no corpus case"));
}

#[test]
fn corpus_manifest_validates_against_its_schema() {
    let text = std::fs::read_to_string(workspace_root().join("corpus/desk_corpus.json"))
        .expect("manifest readable");
    let doc: Value = serde_json::from_str(&text).expect("manifest parses");
    assert_valid("corpus.schema.json", &doc);
}

#[test]
fn verify_single_criterion_report_validates() {
    let (code, stdout, _) = run(&["verify", "--criteria", "1", "--format", "json"]);
    assert_eq!(code, 0);
    let doc: Value = serde_json::from_str(&stdout).expect("json output");
    assert_valid("report.schema.json", &doc);
    assert_eq!(doc["results"][0]["passed"], Value::Bool(true));
}

#[test]
fn reruns_are_byte_identical() {
    for args in [
        vec!["classify", "--case", "GL", "-n", "4", "-q", "3", "-l", "2", "--shape", "1^2+(1*2^1)^1"],
        vec!["shapes", "-n", "6", "-q", "2", "-l", "3", "--format", "tsv"],
        vec!["hecke", "--type", "A2", "--field", "5", "--params", "3", "--format", "json"],
        vec!["oracle", "--case", "gl3q2l3-mixed", "--format", "json"],
    ] {
        let (c1, out1, _) = run(&args);
        let (c2, out2, _) = run(&args);
        assert_eq!(c1, c2);
        assert_eq!(out1, out2, "args {args:?} not deterministic");
    }
}

#[test]
fn text_and_tsv_carry_config_header_with_seed() {
    for fmt in ["text", "tsv"] {
        let (_, stdout, _) = run(&[
            "shapes", "-n", "3", "-q", "2", "-l", "3", "--format", fmt, "--seed", "7",
        ]);
        let first = stdout.lines().next().expect("nonempty");
        assert!(first.starts_with("# hcprim shapes"), "{first}");
        assert!(first.contains("seed=7"), "{first}");
    }
}
