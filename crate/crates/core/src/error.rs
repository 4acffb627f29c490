use std::path::PathBuf;

/// Errors raised across the crate.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// A parameter lies outside the domain of the operation.
    #[error("domain error: {param} = {value}: {reason}")]
    Domain {
        param: &'static str,
        value: String,
        reason: &'static str,
    },

    /// An exact combinatorial count does not fit in 64 bits.
    #[error("overflow: C({m}, {j}) exceeds the 64-bit integer range")]
    Overflow { m: u64, j: u64 },

    /// Structurally invalid input (walks, hypergraphs, samples).
    #[error("malformed input: {0}")]
    Malformed(String),

    /// Hypergraph file parse failure.
    #[error("{path}:{line}: {reason}")]
    Parse {
        path: String,
        line: usize,
        reason: String,
    },

    /// A trace was paired with parameters it was not produced with.
    #[error("trace/parameter mismatch: {0}")]
    Mismatch(String),

    /// Excursion simulation ended inside an excursion long enough to matter.
    #[error("horizon {horizon} too short: excursion still open after {open_for:.4}")]
    HorizonTooShort { horizon: f64, open_for: f64 },

    /// Explicit-oracle and exploration disagreed.
    #[error("oracle mismatch at seed {seed}; hypergraph dumped to {}", dump.display())]
    OracleMismatch { seed: u64, dump: PathBuf },

    #[error("i/o error on {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(param: &'static str, value: impl ToString, reason: &'static str) -> Result<T> {
    Err(Error::Domain {
        param,
        value: value.to_string(),
        reason,
    })
}

impl Error {
    pub(crate) fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}
