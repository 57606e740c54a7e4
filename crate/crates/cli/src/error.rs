use std::fmt;

use schurq_core::Error as CoreError;

use crate::grammar::ParseError;

/// Process exit codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExitStatus {
    Pass = 0,
    CheckFailed = 1,
    Usage = 2,
    Internal = 3,
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Parse(#[from] ParseError),
    #[error("{source}")]
    Core { module: Module, source: CoreError },
    #[error("{context}: {source}")]
    Io { context: String, source: std::io::Error },
}

/// The library module an error came from, used to qualify error codes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Module {
    Qdelta,
    Fockvir,
    Fgl,
    Asympt,
    Wittvoa,
}

impl fmt::Display for Module {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Module::Qdelta => "qdelta",
            Module::Fockvir => "fockvir",
            Module::Fgl => "fgl",
            Module::Asympt => "asympt",
            Module::Wittvoa => "wittvoa",
        })
    }
}

impl CliError {
    pub fn usage(msg: impl Into<String>) -> Self {
        CliError::Usage(msg.into())
    }

    pub fn io(context: impl Into<String>, source: std::io::Error) -> Self {
        CliError::Io { context: context.into(), source }
    }

    /// A stable `area.kind` code, e.g. `fockvir.inconsistent`.
    pub fn code(&self) -> String {
        match self {
            CliError::Usage(_) => "cli.usage".into(),
            CliError::Parse(_) => "cli.parse".into(),
            CliError::Io { .. } => "cli.io".into(),
            CliError::Core { module, source } => {
                let kind = match source {
                    CoreError::Usage(_) => "usage",
                    CoreError::Domain(_) => "domain",
                    CoreError::Range(_) => "range",
                    CoreError::Truncation { .. } => "truncation",
                    CoreError::Inconsistent { .. } => "inconsistent",
                };
                format!("{module}.{kind}")
            }
        }
    }

    /// Bad input maps to [`ExitStatus::Usage`]; anything the input could not
    /// have caused maps to [`ExitStatus::Internal`].
    pub fn exit_status(&self) -> ExitStatus {
        match self {
            CliError::Usage(_) | CliError::Parse(_) => ExitStatus::Usage,
            CliError::Core { source, .. } => match source {
                CoreError::Usage(_) | CoreError::Domain(_) | CoreError::Range(_) => ExitStatus::Usage,
                CoreError::Truncation { .. } | CoreError::Inconsistent { .. } => ExitStatus::Internal,
            },
            CliError::Io { .. } => ExitStatus::Internal,
        }
    }
}

/// Attaches a module to core results.
pub trait InModule<T> {
    fn in_module(self, module: Module) -> Result<T, CliError>;
}

impl<T> InModule<T> for Result<T, CoreError> {
    fn in_module(self, module: Module) -> Result<T, CliError> {
        self.map_err(|source| CliError::Core { module, source })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn codes_and_status() {
        let e = Err::<(), _>(CoreError::Inconsistent { constraint: 1, detail: "x".into() })
            .in_module(Module::Fockvir)
            .unwrap_err();
        assert_eq!(e.code(), "fockvir.inconsistent");
        assert_eq!(e.exit_status(), ExitStatus::Internal);
        let e = Err::<(), _>(CoreError::Usage("bad".into())).in_module(Module::Qdelta).unwrap_err();
        assert_eq!(e.code(), "qdelta.usage");
        assert_eq!(e.exit_status(), ExitStatus::Usage);
    }
}
