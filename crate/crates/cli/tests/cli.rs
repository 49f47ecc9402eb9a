// Copyright 2026 The scv Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

//! Command-line behaviour: exit codes, environment precedence, report
//! determinism and the report schema.

use std::path::Path;
use std::process::Command;

use scv_cli::{emit_symmetry_table, finish, run_with_rep, Format, RunConfig, EXIT_FAIL, EXIT_OK};
use scv_core::report::{VerificationReport, REPORT_SCHEMA};
use scv_core::suites::{Suite, SuiteOptions};
use scv_core::symmetry::{embedded_table, SymmetryTable};
use scv_core::Gq;
use scv_testkit::{duplicated_gamma_rep, rep};
use serde_json::Value;

fn verify() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_verify"));
    for var in ["SCV_JOBS", "SCV_SEED", "SCV_OUT"] {
        c.env_remove(var);
    }
    c
}

/// Validates `v` against the subset of JSON Schema used by the committed
/// report schema; returns one message per violation.
fn validate(schema: &Value, v: &Value, path: &str, errs: &mut Vec<String>) {
    let s = schema.as_object().expect("schema object");
    if let Some(c) = s.get("const") {
        if v != c {
            errs.push(format!("{path}: expected {c}"));
        }
    }
    if let Some(e) = s.get("enum").and_then(Value::as_array) {
        if !e.contains(v) {
            errs.push(format!("{path}: {v} not in enum"));
        }
    }
    if let Some(t) = s.get("type").and_then(Value::as_str) {
        let ok = match t {
            "object" => v.is_object(),
            "array" => v.is_array(),
            "string" => v.is_string(),
            "integer" => v.is_u64() || v.is_i64(),
            other => panic!("unsupported type {other}"),
        };
        if !ok {
            errs.push(format!("{path}: not a {t}"));
            return;
        }
    }
    if let Some(min) = s.get("minimum").and_then(Value::as_i64) {
        if v.as_i64().is_some_and(|x| x < min) {
            errs.push(format!("{path}: below {min}"));
        }
    }
    if let Some(min) = s.get("minLength").and_then(Value::as_u64) {
        if v.as_str().is_some_and(|x| (x.chars().count() as u64) < min) {
            errs.push(format!("{path}: shorter than {min}"));
        }
    }
    if s.get("format").and_then(Value::as_str) == Some("gaussian-rational")
        && v.as_str().unwrap().parse::<Gq>().is_err()
    {
        errs.push(format!("{path}: not a Gaussian rational"));
    }
    if let Some(obj) = v.as_object() {
        let props = s.get("properties").and_then(Value::as_object);
        for req in s
            .get("required")
            .and_then(Value::as_array)
            .into_iter()
            .flatten()
        {
            if !obj.contains_key(req.as_str().unwrap()) {
                errs.push(format!("{path}: missing {req}"));
            }
        }
        for (k, child) in obj {
            match props.and_then(|p| p.get(k)) {
                Some(sub) => validate(sub, child, &format!("{path}.{k}"), errs),
                None if s.get("additionalProperties") == Some(&Value::Bool(false)) => {
                    errs.push(format!("{path}: unexpected {k}"))
                }
                None => {}
            }
        }
    }
    if let (Some(items), Some(arr)) = (s.get("items"), v.as_array()) {
        for (i, child) in arr.iter().enumerate() {
            validate(items, child, &format!("{path}[{i}]"), errs);
        }
    }
}

fn schema_errors(json: &str) -> Vec<String> {
    let schema: Value = serde_json::from_str(REPORT_SCHEMA).unwrap();
    let v: Value = serde_json::from_str(json).unwrap();
    let mut errs = Vec::new();
    validate(&schema, &v, "$", &mut errs);
    errs
}

fn config(suites: Vec<Suite>, qs: Vec<usize>, jobs: Option<usize>) -> RunConfig {
    let mut c = RunConfig::new(suites);
    c.options = SuiteOptions {
        qs,
        ..SuiteOptions::default()
    };
    c.jobs = jobs;
    c
}

#[test]
fn schema_catches_bad_reports() {
    let good = VerificationReport::from_records([scv_core::report::CheckRecord::verdict(
        "a", "x", true, "1/2+3i",
    )]);
    assert!(schema_errors(&good.to_json()).is_empty());
    let bad = good
        .to_json()
        .replace("\"pass\"", "\"maybe\"")
        .replace("1/2+3i", "one half");
    assert_eq!(schema_errors(&bad).len(), 2);
    let extra = good.to_json().replacen("{", "{\"extra\": 1,", 1);
    assert_eq!(
        schema_errors(&extra),
        vec!["$: unexpected extra".to_string()]
    );
}

#[test]
fn full_run_validates_and_passes() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("all.json");
    let status = verify()
        .args(["all", "--q", "1"])
        .arg("--out")
        .arg(&out)
        .status()
        .unwrap();
    assert_eq!(status.code(), Some(0));
    let text = std::fs::read_to_string(&out).unwrap();
    assert!(
        schema_errors(&text).is_empty(),
        "{:?}",
        schema_errors(&text)
    );
    let report: VerificationReport = serde_json::from_str(&text).unwrap();
    let table: Vec<_> = report
        .records
        .iter()
        .filter(|r| r.name.starts_with("symmetry-table."))
        .collect();
    assert_eq!(table.len(), 22);
    assert!(table.iter().all(|r| r.passed()));
    assert!(report.records.iter().all(|r| r.elapsed_ms.is_none()));
}

#[test]
fn exit_codes() {
    assert_eq!(
        verify().args(["clifford"]).output().unwrap().status.code(),
        Some(0)
    );
    assert_eq!(
        verify()
            .args(["table2", "--format", "md"])
            .output()
            .unwrap()
            .status
            .code(),
        Some(0)
    );
    assert_eq!(
        verify().args(["bogus"]).output().unwrap().status.code(),
        Some(2)
    );
    assert_eq!(
        verify()
            .args(["algebra", "--q", "7"])
            .output()
            .unwrap()
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        verify()
            .args(["clifford", "--jobs", "many"])
            .output()
            .unwrap()
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        verify().args(["--help"]).output().unwrap().status.code(),
        Some(0)
    );
}

#[test]
fn flags_override_environment() {
    let dir = tempfile::tempdir().unwrap();
    let (env_path, flag_path) = (dir.path().join("env.json"), dir.path().join("flag.json"));
    let status = verify()
        .env("SCV_OUT", &env_path)
        .arg("clifford")
        .status()
        .unwrap();
    assert!(status.success());
    assert!(env_path.exists());
    std::fs::remove_file(&env_path).unwrap();
    let status = verify()
        .env("SCV_OUT", &env_path)
        .arg("clifford")
        .arg("--out")
        .arg(&flag_path)
        .status()
        .unwrap();
    assert!(status.success());
    assert!(flag_path.exists() && !env_path.exists());
    // A malformed environment value is a usage error, like the flag.
    let out = verify()
        .env("SCV_JOBS", "lots")
        .arg("clifford")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    let out = verify()
        .env("SCV_JOBS", "lots")
        .args(["clifford", "--jobs", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
}

#[test]
fn seed_reaches_the_sampled_sweeps() {
    let run = |args: &[&str], env: Option<&str>| {
        let mut c = verify();
        c.args(["trace-lemmas", "--q", "2", "--trace-samples", "5"])
            .args(args);
        if let Some(s) = env {
            c.env("SCV_SEED", s);
        }
        let out = c.output().unwrap();
        assert!(out.status.success());
        String::from_utf8(out.stdout).unwrap()
    };
    assert_eq!(run(&["--seed", "3"], None), run(&[], Some("3")));
    assert_eq!(
        run(&["--seed", "3"], Some("4")),
        run(&["--seed", "3"], None)
    );
    assert_ne!(run(&["--seed", "3"], None), run(&["--seed", "4"], None));
}

#[test]
fn reports_do_not_depend_on_worker_count() {
    let r = rep();
    let suites = vec![Suite::Identities, Suite::TraceLemmas, Suite::Algebra];
    let one = run_with_rep(&config(suites.clone(), vec![1, 2, 3, 4], Some(1)), &r).to_json();
    let three = run_with_rep(&config(suites.clone(), vec![1, 2, 3, 4], Some(3)), &r).to_json();
    let again = run_with_rep(&config(suites, vec![1, 2, 3, 4], Some(3)), &r).to_json();
    assert_eq!(one, three);
    assert_eq!(three, again);
}

#[test]
fn corrupted_representation_fails_with_counterexample() {
    let dir = tempfile::tempdir().unwrap();
    let mut c = config(vec![Suite::Identities], vec![1], Some(1));
    c.out = Some(dir.path().join("bad.json"));
    let report = run_with_rep(&c, &duplicated_gamma_rep());
    let chiral = report.find("identity.chiral-vector").unwrap();
    assert!(!chiral.passed());
    assert_eq!(
        chiral.counterexample.as_deref(),
        Some("spinor (0,0,5,18) vector []")
    );
    assert_eq!(chiral.residual, "-8");
    assert_eq!(finish(&c, &report), EXIT_FAIL);
    assert!(Path::new(c.out.as_ref().unwrap()).exists());

    c.options.qs = vec![1];
    c.out = Some(dir.path().join("good.json"));
    assert_eq!(finish(&c, &run_with_rep(&c, &rep())), EXIT_OK);
}

#[test]
fn fail_fast_stops_after_the_first_failing_suite() {
    let mut c = config(
        vec![Suite::Clifford, Suite::SymmetryTable, Suite::Algebra],
        vec![1],
        Some(1),
    );
    c.fail_fast = true;
    let report = run_with_rep(&c, &duplicated_gamma_rep());
    assert!(report
        .records
        .iter()
        .all(|r| r.name.starts_with("clifford.")));
}

#[test]
fn symmetry_table_emission() {
    let md = emit_symmetry_table(&rep(), Format::Md).unwrap();
    let rows: Vec<&str> = md
        .lines()
        .filter(|l| l.starts_with("| ") && l.as_bytes()[2].is_ascii_digit())
        .collect();
    assert_eq!(rows.len(), 11);
    let cells: Vec<&str> = rows[5].split('|').map(str::trim).collect();
    assert_eq!((cells[3], cells[5]), ("+", "+"));
    let json = emit_symmetry_table(&rep(), Format::Json).unwrap();
    let parsed: SymmetryTable = serde_json::from_str(&json).unwrap();
    assert_eq!(parsed, embedded_table());
}

#[test]
fn dimension_sweep_records() {
    let out = verify()
        .args(["identities", "--q", "1", "--dimension-sweep"])
        .output()
        .unwrap();
    assert!(out.status.success());
    let report: VerificationReport = serde_json::from_slice(&out.stdout).unwrap();
    let values: Vec<(String, String)> = report
        .records
        .iter()
        .filter(|r| r.name.starts_with("identity.necessary-condition.D"))
        .map(|r| {
            (
                r.name
                    .trim_start_matches("identity.necessary-condition.")
                    .to_string(),
                r.residual.clone(),
            )
        })
        .collect();
    let want: Vec<(String, String)> = [
        ("D4", "-4"),
        ("D6", "-8"),
        ("D8", "-8"),
        ("D10", "0"),
        ("D11", "-4"),
        ("D12", "24"),
    ]
    .iter()
    .map(|(a, b)| (a.to_string(), b.to_string()))
    .collect();
    assert_eq!(values, want);
}

#[test]
fn timings_are_opt_in() {
    let out = verify().args(["clifford", "--timings"]).output().unwrap();
    let report: VerificationReport = serde_json::from_slice(&out.stdout).unwrap();
    assert!(report.records.iter().any(|r| r.elapsed_ms.is_some()));
    assert!(schema_errors(std::str::from_utf8(&out.stdout).unwrap()).is_empty());
}
