use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum GateError {
    #[error(transparent)]
    Core(#[from] torsion_core::Error),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("{path}:{line}: {msg}")]
    CacheFormat { path: PathBuf, line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, GateError>;
