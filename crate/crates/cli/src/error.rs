use skein_core::convert::ConvertError;
use skein_core::homflypt::HomflyptError;
use skein_core::kbsm::KbsmError;
use skein_core::DiagramError;
use thiserror::Error;

/// Failures of a run, each tied to a documented exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// Unreadable input or input text that does not parse.
    #[error("parse error: {0}")]
    Parse(String),
    /// Input that parses but is not an admissible diagram or request.
    #[error("invalid input: {0}")]
    Validation(String),
    #[error("resource cap: {0}")]
    Cap(String),
    /// A computed table or property check did not certify.
    #[error("certificate failure: {0}")]
    Certificate(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 1,
            CliError::Validation(_) => 2,
            CliError::Cap(_) => 3,
            CliError::Certificate(_) => 4,
        }
    }
}

impl From<DiagramError> for CliError {
    fn from(e: DiagramError) -> Self {
        let msg = e.to_string();
        match e {
            DiagramError::Syntax { .. } => CliError::Parse(msg),
            DiagramError::CrossingCap { .. } => CliError::Cap(msg),
            _ => CliError::Validation(msg),
        }
    }
}

impl From<ConvertError> for CliError {
    fn from(e: ConvertError) -> Self {
        match e {
            ConvertError::Diagram(d) => d.into(),
            ConvertError::Format { .. } => CliError::Parse(e.to_string()),
            other => CliError::Validation(other.to_string()),
        }
    }
}

impl From<KbsmError> for CliError {
    fn from(e: KbsmError) -> Self {
        match e {
            KbsmError::Diagram(d) => d.into(),
            KbsmError::BadLens { .. } => CliError::Validation(e.to_string()),
            other => CliError::Certificate(other.to_string()),
        }
    }
}

impl From<HomflyptError> for CliError {
    fn from(e: HomflyptError) -> Self {
        match e {
            HomflyptError::Diagram(d) => d.into(),
            HomflyptError::BadText(_) => CliError::Parse(e.to_string()),
            HomflyptError::ZeroIndex | HomflyptError::NotNested(_) | HomflyptError::BadLens(_) => {
                CliError::Validation(e.to_string())
            }
            other => CliError::Certificate(other.to_string()),
        }
    }
}
