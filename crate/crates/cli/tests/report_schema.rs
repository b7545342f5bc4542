//! Emitted reports must conform to the in-repo report schema.

use hyperlab_cli::{run_task, TaskSpec};
use serde_json::Value;

fn schema() -> Value {
    let text = include_str!("../report-schema.json");
    serde_json::from_str(text).expect("schema parses")
}

#[test]
fn reports_match_the_schema() {
    let schema = schema();
    let required: Vec<&str> =
        schema["required"].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect();
    let statuses: Vec<&str> = schema["properties"]["status"]["enum"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();
    let commands: Vec<&str> = schema["properties"]["command"]["enum"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap())
        .collect();

    let tasks = [
        TaskSpec::new("check-axioms", &["q=3".into(), "n=1".into()], 3).unwrap(),
        TaskSpec::new("krasner", &["p=5".into(), "f=[-5,0,1]".into(), "g=[-2,0,1]".into()], 0)
            .unwrap(),
        TaskSpec::new("quad-extensions", &["kind=laurent".into(), "q=2".into()], 0).unwrap(),
    ];
    for task in tasks {
        let report = run_task(&task);
        let v: Value = serde_json::from_str(&report.to_canonical_json()).unwrap();
        let obj = v.as_object().unwrap();
        // exactly the required keys (the schema forbids extras)
        assert_eq!(obj.len(), required.len());
        for key in &required {
            assert!(obj.contains_key(*key), "missing {key}");
        }
        assert!(commands.contains(&obj["command"].as_str().unwrap()));
        assert!(statuses.contains(&obj["status"].as_str().unwrap()));
        assert!(obj["seed"].is_u64());
        assert!(obj["params"].is_object());
        assert!(obj["payload"].is_object());
        assert!(obj["witnesses"].as_array().unwrap().iter().all(Value::is_string));
        assert!(obj["version"].is_string());
    }
}

#[test]
fn every_command_is_listed_in_the_schema() {
    let schema = schema();
    let listed: Vec<String> = schema["properties"]["command"]["enum"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| v.as_str().unwrap().to_string())
        .collect();
    for name in [
        "factor-hyperfield",
        "check-axioms",
        "projective-hypergroup",
        "desargues",
        "collineations",
        "incidence-group",
        "kdim",
        "krasner",
        "quad-extensions",
        "fraction-check",
    ] {
        assert!(listed.contains(&name.to_string()), "{name} missing from schema");
        assert!(hyperlab_cli::Command::parse(name).is_ok());
    }
}
