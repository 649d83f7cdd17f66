use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

/// An input that could not be read or does not satisfy its schema.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    /// JSON pointer into the offending file, empty for the whole document.
    pub pointer: String,
    pub message: String,
}

impl Failure {
    pub fn input(pointer: impl Into<String>, message: impl Into<String>) -> Failure {
        Failure {
            pointer: pointer.into(),
            message: message.into(),
        }
    }
}

impl From<picard_core::Error> for Failure {
    fn from(e: picard_core::Error) -> Failure {
        Failure::input("", e.to_string())
    }
}

/// What a command computed and which requested properties failed.
#[derive(Debug, Default)]
pub struct Outcome {
    pub result: Value,
    pub failures: Vec<String>,
}

impl Outcome {
    pub fn new(result: impl Serialize) -> Outcome {
        Outcome {
            result: serde_json::to_value(result).expect("serializable"),
            failures: Vec::new(),
        }
    }

    pub fn require(&mut self, holds: bool, message: impl Into<String>) {
        if !holds {
            self.failures.push(message.into());
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct InputDigest {
    pub path: String,
    pub sha256: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    InvalidInput,
}

impl Status {
    pub fn exit_code(self) -> u8 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::InvalidInput => 2,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: String,
    pub inputs: Vec<InputDigest>,
    pub parameters: BTreeMap<String, Value>,
    pub status: Status,
    pub failures: Vec<String>,
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<Failure>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub timing_ms: Option<u128>,
}
