use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("cannot access {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("parse error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("invalid document: {0}")]
    Schema(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Math(#[from] igalois_core::Error),
}

impl CliError {
    /// 1 for a negative mathematical verdict or an unmet precondition,
    /// 2 for anything that went wrong before the mathematics started.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Math(_) => 1,
            _ => 2,
        }
    }

    pub(crate) fn schema(msg: impl Into<String>) -> Self {
        CliError::Schema(msg.into())
    }
}

impl From<serde_json::Error> for CliError {
    fn from(e: serde_json::Error) -> Self {
        let full = e.to_string();
        let message = match full.rfind(" at line ") {
            Some(at) => full[..at].to_string(),
            None => full,
        };
        let message = message.strip_prefix("parse error: ").map(str::to_string).unwrap_or(message);
        CliError::Syntax { line: e.line(), column: e.column(), message }
    }
}

/// Variant name of a library error, used as a stable diagnostic tag.
pub fn diagnostic_tag(e: &igalois_core::Error) -> String {
    let dbg = format!("{e:?}");
    dbg.split(|c: char| !c.is_alphanumeric()).next().unwrap_or_default().to_string()
}
