use thiserror::Error;

/// Errors raised across the workbench.
///
/// The CLI maps these onto exit codes through [`Error::exit_code`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("domain mismatch: {0} vs {1}")]
    DomainMismatch(String, String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} has no multiplicative inverse in {1}")]
    NoInverse(String, String),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("invalid modulus {0}")]
    InvalidModulus(u64),
    #[error("invalid ideal: {0}")]
    InvalidIdeal(String),
    #[error("out of range: {0}")]
    OutOfRange(String),
    #[error("not an ascending chain: ideal {index} is not contained in ideal {next}", next = .index + 1)]
    NotAChain { index: usize },
    #[error("empty chain")]
    EmptyChain,
    #[error("polynomial ring mismatch")]
    RingMismatch,
    #[error("polynomial is not univariate")]
    NotUnivariate,
    #[error("polynomial is not bivariate")]
    NotBivariate,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("zero ideal")]
    ZeroIdeal,
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("unknown variable `{name}` at position {pos}")]
    UnknownVariable { name: String, pos: usize },
    #[error("bad coefficient at position {pos}: {message}")]
    BadCoefficient { pos: usize, message: String },
    #[error("invalid variable name `{0}`")]
    InvalidVariable(String),
    #[error("unsupported coefficient domain {0}: {1}")]
    UnsupportedDomain(String, String),
    #[error("squarefree part is not computable by gcd(f, f') over {0}")]
    InseparableCase(String),
    #[error("need at least {needed} variables, ring has {available}")]
    NotEnoughVariables { needed: usize, available: usize },
    #[error("degenerate window")]
    DegenerateWindow,
    #[error("too large: {0}")]
    TooLarge(String),
}

impl Error {
    /// Process exit code for the CLI: 1 usage/parse, 2 domain, 3 resource limit.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Syntax { .. }
            | Error::UnknownVariable { .. }
            | Error::BadCoefficient { .. }
            | Error::InvalidVariable(_) => 1,
            Error::TooLarge(_) => 3,
            _ => 2,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
