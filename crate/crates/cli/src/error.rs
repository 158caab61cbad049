use serde::Serialize;

/// Failure categories and their exit codes.
///
/// Usage and input errors exit with 2; failed re-checks and computations that
/// could not finish exit with 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ErrorKind {
    Usage,
    Input,
    Computation,
    Verification,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("{message}")]
pub struct CliError {
    pub kind: ErrorKind,
    pub message: String,
}

impl CliError {
    pub fn usage(message: impl Into<String>) -> Self {
        CliError {
            kind: ErrorKind::Usage,
            message: message.into(),
        }
    }

    pub fn input(message: impl Into<String>) -> Self {
        CliError {
            kind: ErrorKind::Input,
            message: message.into(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.kind {
            ErrorKind::Usage | ErrorKind::Input => 2,
            ErrorKind::Computation | ErrorKind::Verification => 1,
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "error": {
                "kind": self.kind,
                "message": self.message,
                "exit_code": self.exit_code(),
            }
        })
    }
}

impl From<realforms_core::Error> for CliError {
    fn from(e: realforms_core::Error) -> Self {
        let kind = match e {
            realforms_core::Error::SamplingFailure { .. } => ErrorKind::Computation,
            _ => ErrorKind::Input,
        };
        CliError {
            kind,
            message: e.to_string(),
        }
    }
}
