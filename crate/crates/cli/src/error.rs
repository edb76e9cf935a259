use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("duplicate agent id `{0}`")]
    DuplicateAgentId(String),
    #[error("usage: {0}")]
    Usage(String),
    #[error("cannot read {path}: {source}")]
    Read {
        path: String,
        source: std::io::Error,
    },
    #[error(transparent)]
    Core(fairdiv::Error),
}

impl From<fairdiv::Error> for CliError {
    fn from(e: fairdiv::Error) -> Self {
        match e {
            fairdiv::Error::OutOfRange(what) => CliError::OutOfRange(what),
            fairdiv::Error::MalformedInterval { .. } | fairdiv::Error::ParseRational(_) => {
                CliError::Parse(e.to_string())
            }
            other => CliError::Core(other),
        }
    }
}
