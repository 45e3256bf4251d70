use std::io::Read;
use std::path::Path;

use mfg_core::json::JsonError;
use serde_json::Value;

/// A failure carrying a machine-readable code. `exit` is 1 when the input was
/// well formed but failed a check, 2 when the input itself was rejected.
#[derive(Debug)]
pub struct CliError {
    pub code: String,
    pub message: String,
    pub exit: u8,
}

/// Codes that report a failed check on valid input rather than bad input.
const VERIFICATION_CODES: &[&str] = &[
    "NotANormalizer",
    "NonScalarObstruction",
    "NotUnimodular",
    "DepthExhausted",
    "PatternStraddlesUnstably",
    "ValidationMismatch",
    "NotCovered",
    "OutputNotAdmissible",
];

impl CliError {
    pub fn parse(message: impl Into<String>) -> Self {
        CliError { code: "ParseError".into(), message: message.into(), exit: 2 }
    }

    pub fn from_code(code: &str, message: impl Into<String>) -> Self {
        let exit = if VERIFICATION_CODES.contains(&code) { 1 } else { 2 };
        CliError { code: code.into(), message: message.into(), exit }
    }
}

macro_rules! coded {
    ($($t:ty),*) => {$(
        impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::from_code(e.code(), e.to_string())
            }
        }
    )*};
}

coded!(
    JsonError,
    mfg_core::shift::ShiftError,
    mfg_core::full_group::TableError,
    mfg_core::ck::AlgebraError,
    mfg_core::orbit_equiv::OeError
);

/// Reads an argument as JSON: `-` is stdin, an existing path is read from
/// disk, anything else is parsed inline. Text that is not JSON is taken as a
/// bare string so names like `F` or `A2` need no quoting.
pub fn load(arg: &str) -> Result<Value, CliError> {
    let text = if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| CliError::parse(format!("stdin: {e}")))?;
        s
    } else if Path::new(arg).is_file() {
        std::fs::read_to_string(arg).map_err(|e| CliError::parse(format!("{arg}: {e}")))?
    } else {
        return Ok(serde_json::from_str(arg).unwrap_or_else(|_| Value::String(arg.to_string())));
    };
    serde_json::from_str(&text).map_err(|e| CliError::parse(format!("{arg}: {e}")))
}
