use std::collections::BTreeMap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TaskError {
    #[error("unknown command '{0}'")]
    UnknownCommand(String),
    #[error("malformed parameter '{0}' (expected key=value)")]
    MalformedParam(String),
    #[error("parameter '{key}': {reason}")]
    BadValue { key: String, reason: String },
    #[error("missing required parameter '{0}'")]
    MissingParam(String),
    #[error("unexpected parameter '{0}' for this command")]
    UnexpectedParam(String),
    #[error("spec file: {0}")]
    SpecFile(String),
}

pub type Result<T> = std::result::Result<T, TaskError>;

/// The batch commands this tool understands.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Command {
    FactorHyperfield,
    CheckAxioms,
    ProjectiveHypergroup,
    Desargues,
    Collineations,
    IncidenceGroup,
    KDim,
    Krasner,
    QuadExtensions,
    FractionCheck,
}

impl Command {
    pub fn parse(name: &str) -> Result<Self> {
        Ok(match name {
            "factor-hyperfield" => Command::FactorHyperfield,
            "check-axioms" => Command::CheckAxioms,
            "projective-hypergroup" => Command::ProjectiveHypergroup,
            "desargues" => Command::Desargues,
            "collineations" => Command::Collineations,
            "incidence-group" => Command::IncidenceGroup,
            "kdim" => Command::KDim,
            "krasner" => Command::Krasner,
            "quad-extensions" => Command::QuadExtensions,
            "fraction-check" => Command::FractionCheck,
            other => return Err(TaskError::UnknownCommand(other.to_string())),
        })
    }

    pub fn name(&self) -> &'static str {
        match self {
            Command::FactorHyperfield => "factor-hyperfield",
            Command::CheckAxioms => "check-axioms",
            Command::ProjectiveHypergroup => "projective-hypergroup",
            Command::Desargues => "desargues",
            Command::Collineations => "collineations",
            Command::IncidenceGroup => "incidence-group",
            Command::KDim => "kdim",
            Command::Krasner => "krasner",
            Command::QuadExtensions => "quad-extensions",
            Command::FractionCheck => "fraction-check",
        }
    }

    /// (required, optional) parameter schemas, for validation and the
    /// usage dump.
    pub fn schema(&self) -> (&'static [(&'static str, &'static str)], &'static [(&'static str, &'static str)]) {
        match self {
            Command::FactorHyperfield => {
                (&[("q", "field order (prime power)"), ("t", "subgroup generators, e.g. [[1],[0,1]]")], &[])
            }
            Command::CheckAxioms | Command::ProjectiveHypergroup | Command::Desargues
            | Command::Collineations | Command::KDim => {
                (&[("q", "field order (prime power)"), ("n", "projective dimension")], &[])
            }
            Command::IncidenceGroup => (
                &[("q", "field order (prime power)"), ("n", "projective dimension")],
                &[("modulus", "extension modulus coefficients, degree n+1, e.g. [1,2,0,1]")],
            ),
            Command::Krasner => (
                &[("p", "prime"), ("f", "monic irreducible, e.g. [-5,0,1]"), ("g", "monic, same degree")],
                &[],
            ),
            Command::QuadExtensions => {
                (&[("kind", "padic | laurent")], &[("p", "prime (padic)"), ("q", "residue field order (laurent)")])
            }
            Command::FractionCheck => {
                (&[("q", "field order (prime power)"), ("cap", "degree cap >= 1")], &[])
            }
        }
    }

    pub fn usage(&self) -> String {
        let (req, opt) = self.schema();
        let mut out = format!("{}:", self.name());
        for (k, d) in req {
            out.push_str(&format!("\n  {k}=<{d}> (required)"));
        }
        for (k, d) in opt {
            out.push_str(&format!("\n  {k}=<{d}> (optional)"));
        }
        out
    }
}

/// Usage text for every command.
pub fn schema_dump() -> String {
    let all = [
        Command::FactorHyperfield,
        Command::CheckAxioms,
        Command::ProjectiveHypergroup,
        Command::Desargues,
        Command::Collineations,
        Command::IncidenceGroup,
        Command::KDim,
        Command::Krasner,
        Command::QuadExtensions,
        Command::FractionCheck,
    ];
    all.iter().map(Command::usage).collect::<Vec<_>>().join("\n")
}

/// A parameter value: an integer, a keyword, or a (possibly nested) list.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParamValue {
    Int(i64),
    Word(String),
    List(Vec<ParamValue>),
}

impl ParamValue {
    pub fn parse(text: &str) -> Result<Self> {
        let (v, rest) = Self::parse_inner(text.trim())?;
        if !rest.trim_start().is_empty() {
            return Err(TaskError::BadValue {
                key: String::new(),
                reason: format!("trailing input '{rest}'"),
            });
        }
        Ok(v)
    }

    fn parse_inner(text: &str) -> Result<(Self, &str)> {
        let text = text.trim_start();
        if let Some(rest) = text.strip_prefix('[') {
            let mut items = Vec::new();
            let mut cur = rest.trim_start();
            if let Some(after) = cur.strip_prefix(']') {
                return Ok((ParamValue::List(items), after));
            }
            loop {
                let (item, rest) = Self::parse_inner(cur)?;
                items.push(item);
                cur = rest.trim_start();
                if let Some(after) = cur.strip_prefix(',') {
                    cur = after;
                } else if let Some(after) = cur.strip_prefix(']') {
                    return Ok((ParamValue::List(items), after));
                } else {
                    return Err(TaskError::BadValue {
                        key: String::new(),
                        reason: format!("expected ',' or ']' at '{cur}'"),
                    });
                }
            }
        }
        let end = text
            .find(|c: char| c == ',' || c == ']' || c.is_whitespace())
            .unwrap_or(text.len());
        let token = &text[..end];
        if token.is_empty() {
            return Err(TaskError::BadValue { key: String::new(), reason: "empty value".into() });
        }
        let rest = &text[end..];
        match token.parse::<i64>() {
            Ok(v) => Ok((ParamValue::Int(v), rest)),
            Err(_) => Ok((ParamValue::Word(token.to_string()), rest)),
        }
    }

    pub fn as_u64(&self, key: &str) -> Result<u64> {
        match self {
            ParamValue::Int(v) if *v >= 0 => Ok(*v as u64),
            _ => Err(TaskError::BadValue { key: key.into(), reason: "expected a nonnegative integer".into() }),
        }
    }

    pub fn as_usize(&self, key: &str) -> Result<usize> {
        Ok(self.as_u64(key)? as usize)
    }

    pub fn as_int_list(&self, key: &str) -> Result<Vec<i64>> {
        match self {
            ParamValue::List(items) => items
                .iter()
                .map(|v| match v {
                    ParamValue::Int(i) => Ok(*i),
                    _ => Err(TaskError::BadValue { key: key.into(), reason: "expected a flat integer list".into() }),
                })
                .collect(),
            _ => Err(TaskError::BadValue { key: key.into(), reason: "expected a list".into() }),
        }
    }

    pub fn as_nested_list(&self, key: &str) -> Result<Vec<Vec<i64>>> {
        match self {
            ParamValue::List(items) => items.iter().map(|v| v.as_int_list(key)).collect(),
            _ => Err(TaskError::BadValue { key: key.into(), reason: "expected a nested list".into() }),
        }
    }

    pub fn as_word(&self, key: &str) -> Result<&str> {
        match self {
            ParamValue::Word(w) => Ok(w),
            _ => Err(TaskError::BadValue { key: key.into(), reason: "expected a keyword".into() }),
        }
    }

    /// Canonical text form, identical to the accepted input syntax.
    pub fn canonical(&self) -> String {
        match self {
            ParamValue::Int(v) => v.to_string(),
            ParamValue::Word(w) => w.clone(),
            ParamValue::List(items) => {
                let inner: Vec<String> = items.iter().map(ParamValue::canonical).collect();
                format!("[{}]", inner.join(","))
            }
        }
    }
}

impl fmt::Display for ParamValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.canonical())
    }
}

/// A validated task: command, parameters, and the seed recorded for any
/// randomized cross-validation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TaskSpec {
    pub command: Command,
    pub params: BTreeMap<String, ParamValue>,
    pub seed: u64,
}

impl TaskSpec {
    pub fn new(command: &str, params: &[String], seed: u64) -> Result<Self> {
        let command = Command::parse(command)?;
        let mut map = BTreeMap::new();
        for p in params {
            let (k, v) = p
                .split_once('=')
                .ok_or_else(|| TaskError::MalformedParam(p.clone()))?;
            let value = ParamValue::parse(v).map_err(|e| match e {
                TaskError::BadValue { reason, .. } => {
                    TaskError::BadValue { key: k.to_string(), reason }
                }
                other => other,
            })?;
            map.insert(k.trim().to_string(), value);
        }
        let spec = Self { command, params: map, seed };
        spec.validate()?;
        Ok(spec)
    }

    /// Parse a flat key=value structure-spec file; the command itself is
    /// the `command=` line. Blank lines and `#` comments are skipped.
    pub fn from_spec_text(text: &str, seed: u64) -> Result<Self> {
        let mut command = None;
        let mut params = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            match line.split_once('=') {
                Some(("command", v)) => command = Some(v.trim().to_string()),
                Some(_) => params.push(line.to_string()),
                None => return Err(TaskError::SpecFile(format!("not a key=value line: '{line}'"))),
            }
        }
        let command = command.ok_or_else(|| TaskError::SpecFile("missing command= line".into()))?;
        Self::new(&command, &params, seed)
    }

    fn validate(&self) -> Result<()> {
        let (required, optional) = self.command.schema();
        for (k, _) in required {
            if !self.params.contains_key(*k) {
                return Err(TaskError::MissingParam(k.to_string()));
            }
        }
        for k in self.params.keys() {
            let known = required.iter().chain(optional).any(|(name, _)| name == k);
            if !known {
                return Err(TaskError::UnexpectedParam(k.clone()));
            }
        }
        Ok(())
    }

    pub fn require(&self, key: &str) -> Result<&ParamValue> {
        self.params.get(key).ok_or_else(|| TaskError::MissingParam(key.to_string()))
    }

    /// Canonical single-line serialization used for cache keys: command,
    /// then sorted key=value pairs, then the seed.
    pub fn canonical(&self) -> String {
        let mut out = format!("command={}", self.command.name());
        for (k, v) in &self.params {
            out.push_str(&format!(" {k}={}", v.canonical()));
        }
        out.push_str(&format!(" seed={}", self.seed));
        out
    }
}
