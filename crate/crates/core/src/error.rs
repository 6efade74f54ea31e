use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("item universe is empty")]
    EmptyUniverse,

    #[error("invalid item token {0:?}: must be non-empty and free of commas, whitespace and '#'")]
    InvalidItem(String),

    #[error("unknown item {0:?}")]
    UnknownItem(String),

    #[error("invalid itemset: {0}")]
    InvalidItemset(String),

    #[error("subset size {k} out of range for an itemset of {len} items")]
    InvalidArity { k: usize, len: usize },

    #[error("invalid support threshold: {0}")]
    InvalidThreshold(String),

    #[error("invalid hash configuration: {0}")]
    InvalidHashConfig(String),

    #[error("oracle enumeration over {items} items exceeds the limit of {limit}")]
    OracleScaleExceeded { items: usize, limit: usize },

    #[error("input is not valid UTF-8 (line {line})")]
    Encoding { line: usize },

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid generator spec: {0}")]
    Spec(String),

    #[error("io error: {0}")]
    Io(String),

    /// The two miners produced different frequent sets. Always a bug.
    #[error(
        "miners disagree at level {level}: only in apriori {only_apriori:?}, only in dhp {only_dhp:?}"
    )]
    MinerDisagreement {
        level: usize,
        only_apriori: Vec<String>,
        only_dhp: Vec<String>,
    },

    #[error("dhp produced {dhp} candidates at level {level}, more than apriori's {apriori}")]
    CandidateDomination {
        level: usize,
        apriori: usize,
        dhp: usize,
    },
}

impl Error {
    /// True for errors that signal an internal inconsistency between miners.
    pub fn is_disagreement(&self) -> bool {
        matches!(
            self,
            Error::MinerDisagreement { .. } | Error::CandidateDomination { .. }
        )
    }
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}
