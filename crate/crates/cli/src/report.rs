use crate::task::TaskSpec;
use serde_json::{json, Map, Value};

/// Report status; exit codes partition these exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Pass,
    Fail,
    Error,
    Inconclusive,
}

impl Status {
    pub fn exit_code(&self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Error => 2,
            Status::Inconclusive => 3,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Error => "error",
            Status::Inconclusive => "inconclusive",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        Some(match s {
            "pass" => Status::Pass,
            "fail" => Status::Fail,
            "error" => Status::Error,
            "inconclusive" => Status::Inconclusive,
            _ => return None,
        })
    }
}

/// A deterministic task report: the task echo, a status, sorted
/// witnesses, command-specific payload and the tool version. For a fixed
/// task and version the canonical JSON bytes are identical across runs;
/// wall-clock timing therefore goes to stderr, never into the report.
#[derive(Debug, Clone)]
pub struct Report {
    pub command: String,
    pub params: Map<String, Value>,
    pub seed: u64,
    pub status: Status,
    pub witnesses: Vec<String>,
    pub payload: Value,
    pub version: String,
}

/// The tool version baked into reports and cache keys.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

impl Report {
    pub fn for_task(task: &TaskSpec, status: Status, mut witnesses: Vec<String>, payload: Value) -> Self {
        witnesses.sort();
        let mut params = Map::new();
        for (k, v) in &task.params {
            params.insert(k.clone(), json!(v.canonical()));
        }
        Self {
            command: task.command.name().to_string(),
            params,
            seed: task.seed,
            status,
            witnesses,
            payload,
            version: VERSION.to_string(),
        }
    }

    /// Canonical JSON: serde_json's default map is ordered by key, so a
    /// compact dump is already canonical.
    pub fn to_canonical_json(&self) -> String {
        let v = json!({
            "command": self.command,
            "params": Value::Object(self.params.clone()),
            "payload": self.payload,
            "seed": self.seed,
            "status": self.status.as_str(),
            "version": self.version,
            "witnesses": self.witnesses,
        });
        let mut text = v.to_string();
        text.push('\n');
        text
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes_partition_statuses() {
        assert_eq!(Status::Pass.exit_code(), 0);
        assert_eq!(Status::Fail.exit_code(), 1);
        assert_eq!(Status::Error.exit_code(), 2);
        assert_eq!(Status::Inconclusive.exit_code(), 3);
        for s in [Status::Pass, Status::Fail, Status::Error, Status::Inconclusive] {
            assert_eq!(Status::from_name(s.as_str()), Some(s));
        }
    }

    #[test]
    fn canonical_json_has_sorted_keys() {
        let task = TaskSpec::new("check-axioms", &["q=3".into(), "n=1".into()], 0).unwrap();
        let rep = Report::for_task(&task, Status::Pass, vec!["b".into(), "a".into()], json!({}));
        let text = rep.to_canonical_json();
        let cmd_pos = text.find("\"command\"").unwrap();
        let params_pos = text.find("\"params\"").unwrap();
        let status_pos = text.find("\"status\"").unwrap();
        assert!(cmd_pos < params_pos && params_pos < status_pos);
        // witnesses sorted
        assert!(text.find("\"a\"").unwrap() < text.find("\"b\"").unwrap());
    }
}
