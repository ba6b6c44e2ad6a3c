use std::fmt;

/// Errors reported by the library's fallible operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two operands were built over different numbers of variables.
    DimensionMismatch { left: usize, right: usize },
    /// A variable or vertex index was at least the ambient dimension.
    IndexOutOfRange { index: usize, n: usize },
    /// More variables than the bit-word representation supports.
    TooManyVariables { n: usize },
    /// A term listed the same variable twice.
    DuplicateVariable { var: usize },
    /// Pivot was requested on a vertex pair that is not an edge.
    NotAnEdge { u: usize, v: usize },
    /// The edge exists but fails the hypergraph pivot admissibility
    /// condition: the pair must not appear inside any larger term.
    InadmissibleEdge { u: usize, v: usize },
    /// The graph has no two-coloring compatible with the request.
    NotBipartite,
    /// A generator matrix did not have full row rank.
    RankDeficient,
    /// A vertex set claimed to be a clique induces a missing edge.
    NotAClique { u: usize, v: usize },
    /// The requested computation exceeds the configured budget.
    BudgetExceeded(String),
    /// Constraint violation in a verification input.
    InvalidInput(String),
    /// Text format error.
    Parse(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DimensionMismatch { left, right } => {
                write!(f, "dimension mismatch: {left} vs {right} variables")
            }
            Error::IndexOutOfRange { index, n } => {
                write!(f, "index {index} out of range for n={n}")
            }
            Error::TooManyVariables { n } => {
                write!(f, "{n} variables exceeds the supported maximum of 31")
            }
            Error::DuplicateVariable { var } => {
                write!(f, "variable x{var} repeated within a term")
            }
            Error::NotAnEdge { u, v } => write!(f, "{{{u},{v}}} is not an edge"),
            Error::InadmissibleEdge { u, v } => {
                write!(f, "edge {{{u},{v}}} is not admissible for pivot")
            }
            Error::NotBipartite => write!(f, "graph is not bipartite"),
            Error::RankDeficient => write!(f, "generator matrix is rank deficient"),
            Error::NotAClique { u, v } => {
                write!(f, "clique check failed: {{{u},{v}}} missing")
            }
            Error::BudgetExceeded(msg) => write!(f, "budget exceeded: {msg}"),
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::Parse(msg) => write!(f, "parse error: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
