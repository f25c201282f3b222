use thiserror::Error;

/// Errors surfaced by the library. Note that the error symbol produced by
/// `Dec`/`Eval` on a tampered ciphertext is *not* an `Error`: detection is a
/// normal outcome and is reported through `Option`/`BottomReport` instead.
#[derive(Debug, Error)]
pub enum Error {
    #[error("domain error: {0}")]
    Domain(String),

    #[error("no safe prime of {bits} bits found within {attempts} attempts")]
    GenerationTimeout { bits: u64, attempts: u64 },

    #[error("codec overflow: round({gamma} * |{value}|) = {z} >= q; quantization gain too large")]
    CodecOverflow { gamma: f64, value: f64, z: String },

    #[error("decode overflow: channel residue {residue} exceeds plausibility bound {bound}")]
    DecodeOverflow { residue: String, bound: String },

    #[error("dimension mismatch: {0}")]
    Dimension(String),

    #[error("eigenvalue iteration failed to converge within {0} sweeps")]
    EigConvergence(usize),

    #[error("configuration fault: {0}")]
    Config(String),

    #[error("malformed {what}: {detail}")]
    Parse { what: String, detail: String },

    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn config(msg: impl Into<String>) -> Self {
        Error::Config(msg.into())
    }

    pub fn parse(what: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Parse {
            what: what.into(),
            detail: detail.into(),
        }
    }

    pub fn io(context: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            context: context.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
