//! JSON front end for `tropci-core` and the brute-force planar oracles.

pub mod commands;
pub mod json;
pub mod oracles;
pub mod selftest;

use serde_json::{json, Value};
use tropci_core::Error;

pub use commands::{run, Command, Options};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Io(String),
    #[error("{0}")]
    Parse(String),
    #[error(transparent)]
    Domain(#[from] Error),
}

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_SELFTEST: i32 = 3;

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Io(_) | CliError::Parse(_) => EXIT_INPUT,
            CliError::Domain(_) => EXIT_DOMAIN,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            CliError::Io(_) => "io",
            CliError::Parse(_) => "parse",
            CliError::Domain(e) => error_kind(e),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({"error": {"kind": self.kind(), "message": self.to_string()}})
    }
}

pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::ZeroVector => "zero_vector",
        Error::NotPrimitive(_) => "not_primitive",
        Error::RankMismatch { .. } => "rank_mismatch",
        Error::EmptyPolytope => "empty_polytope",
        Error::WrongCount { .. } => "wrong_count",
        Error::InvalidCone(_) => "invalid_cone",
        Error::NotLinear(_) => "not_linear",
        Error::NotBalanced(_) => "not_balanced",
        Error::SupportMismatch(_) => "support_mismatch",
        Error::RayNotInSupport(_) => "ray_not_in_support",
        Error::UndefinedFunction { .. } => "undefined_function",
        Error::Degenerate => "degenerate",
        Error::DominationViolated { .. } => "domination_violated",
        Error::NonInteger(_) => "non_integer",
        Error::Unsupported(_) => "unsupported",
        Error::Inconsistent(_) => "inconsistent",
        Error::Internal(_) => "internal",
    }
}

/// Serializes with sorted keys and two-space indentation.
pub fn render(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("JSON values always serialize")
}
