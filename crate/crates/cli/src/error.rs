use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{}{field}: {detail}", line.map(|l| format!("line {l}: ")).unwrap_or_default())]
    Parse { line: Option<usize>, field: String, detail: String },
    #[error("cannot read {path}: {detail}")]
    Io { path: String, detail: String },
    #[error("unknown fixture `{name}` (known: {known})")]
    UnknownFixture { name: String, known: String },
    #[error("unknown command `{0}`")]
    UnknownCommand(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] thl_core::Error),
}

impl CliError {
    /// Input problems exit with 2; computation errors also count as 2 since no verdict exists.
    pub fn exit_code(&self) -> i32 {
        2
    }
}
