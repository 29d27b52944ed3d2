use std::fmt;

use serde_json::{json, Value};

/// Failures that stop a subcommand before it produces a report.
#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Input(String),
    Core(hodge_cones::Error),
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Input(_) => "input",
            CliError::Core(_) => "computation",
        }
    }

    pub fn exit_code(&self) -> i32 {
        2
    }

    pub fn to_json(&self) -> Value {
        json!({ "error": { "kind": self.kind(), "message": self.to_string() } })
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Input(m) => f.write_str(m),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<hodge_cones::Error> for CliError {
    fn from(e: hodge_cones::Error) -> Self {
        CliError::Core(e)
    }
}
