use thiserror::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

/// Everything that can go wrong in this crate.
///
/// Parse errors carry a 1-based line/column; semantic and resource errors
/// are separate variants so callers (the CLI in particular) can map them
/// to distinct exit codes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not a prime power >= 2")]
    NotPrimePower(u64),
    #[error("field F_{q} is out of range (supported: q = p^k, k <= 8, q <= 65536)")]
    FieldTooLarge { q: u64 },
    #[error("field elements belong to different fields")]
    FieldMismatch,
    #[error("division by zero field element")]
    DivisionByZero,
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("operands live in different polynomial rings")]
    RingMismatch,
    #[error("the zero polynomial has no leading term")]
    ZeroPolynomial,
    #[error("point has {got} coordinates but the ring has {expected} variables")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("monomial degree {0} exceeds the supported bound 65536")]
    DegreeLimit(u64),
    #[error("no nonzero generators were given")]
    EmptyInput,
    #[error("colon by the zero polynomial")]
    ZeroDivisor,
    #[error("colon or saturation by the zero ideal")]
    ZeroIdeal,
    #[error("operation requires a homogeneous ideal")]
    NotHomogeneous,
    #[error("operation requires a proper ideal, but 1 lies in it")]
    UnitIdeal,
    #[error("enumeration of {needed} items exceeds the limit {limit}")]
    SizeLimit { needed: usize, limit: usize },
    #[error("projective point must have a nonzero coordinate")]
    ZeroPoint,
    #[error("point set is empty")]
    EmptyPointSet,
    #[error("the ideal has an empty projective variety")]
    EmptyVariety,
    #[error("witness polynomial vanishes on a point of the variety")]
    NonvanishingWitnessInvalid,
    #[error("colon iteration did not stabilize within {0} rounds")]
    IterationLimit(usize),
    #[error("Hilbert function did not reach its plateau below degree {0}")]
    PlateauNotFound(u32),
    #[error("unknown name `{0}` in input file")]
    UnknownName(String),
}

impl Error {
    /// Exit-code class used by the command-line front end:
    /// 2 parse, 3 semantic, 4 resource limit.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse { .. } => 2,
            Error::SizeLimit { .. }
            | Error::IterationLimit(_)
            | Error::DegreeLimit(_)
            | Error::PlateauNotFound(_) => 4,
            _ => 3,
        }
    }

    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Error {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}
