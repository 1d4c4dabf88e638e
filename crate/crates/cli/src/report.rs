//! Report envelope, statuses and their exit codes.

use std::process::ExitCode;

use serde::Serialize;
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Ok,
    PropertyFailed,
    InputError,
    ConjectureDisagreement,
    CapExceeded,
}

impl Status {
    pub fn code(self) -> u8 {
        match self {
            Status::Ok => 0,
            Status::PropertyFailed => 1,
            Status::InputError => 2,
            Status::ConjectureDisagreement => 3,
            Status::CapExceeded => 4,
        }
    }

    pub fn exit_code(self) -> ExitCode {
        ExitCode::from(self.code())
    }

    pub fn from_verdict(ok: bool) -> Self {
        if ok {
            Status::Ok
        } else {
            Status::PropertyFailed
        }
    }
}

/// What a subcommand produced: a status, the JSON payload, its text
/// rendering and, for scans, one JSON line per row printed before the
/// envelope.
pub struct Outcome {
    pub status: Status,
    pub result: Value,
    pub text: String,
    pub lines: Vec<Value>,
}

impl Outcome {
    pub fn new(status: Status, result: impl Serialize, text: String) -> Self {
        Outcome {
            status,
            result: to_value(&result),
            text,
            lines: Vec::new(),
        }
    }
}

/// A command that could not produce a result.
#[derive(Debug)]
pub struct Failure {
    pub status: Status,
    pub message: String,
    pub detail: Option<Value>,
}

impl Failure {
    pub fn input(message: impl Into<String>) -> Self {
        Failure {
            status: Status::InputError,
            message: message.into(),
            detail: None,
        }
    }
}

impl From<monodec::Error> for Failure {
    fn from(e: monodec::Error) -> Self {
        let status = match e {
            monodec::Error::DimensionCap { .. } => Status::CapExceeded,
            monodec::Error::NotGroebner => Status::PropertyFailed,
            _ => Status::InputError,
        };
        Failure {
            status,
            message: e.to_string(),
            detail: None,
        }
    }
}

#[derive(Serialize)]
pub struct Envelope<'a> {
    pub tool: &'static str,
    pub version: &'static str,
    pub command: &'a str,
    pub input: &'a Value,
    pub duration_seconds: f64,
    pub status: Status,
    pub result: &'a Value,
}

pub fn to_value(v: &impl Serialize) -> Value {
    serde_json::to_value(v).expect("report types serialize to JSON")
}
