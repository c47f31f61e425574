use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Vertex id outside the host graph.
    UnknownVertex(usize),
    /// Malformed input: bad parameters, loops, non-squarefree generators, ...
    InvalidInput(String),
    /// The graph has an isolated vertex where the construction forbids one.
    IsolatedVertex(usize),
    /// The graph is disconnected where a connected graph is required.
    Disconnected,
    /// A face argument is not a face of the complex.
    NotAFace,
    /// The request exceeds a configured size cap.
    TooLarge { what: &'static str, size: usize, cap: usize },
    /// A computed result contradicts a proven statement; indicates a bug.
    Inconsistency(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::UnknownVertex(v) => write!(f, "unknown vertex {v}"),
            Error::InvalidInput(msg) => write!(f, "invalid input: {msg}"),
            Error::IsolatedVertex(v) => write!(
                f,
                "vertex {v} is isolated; the square complex is only built for graphs without isolated vertices"
            ),
            Error::Disconnected => write!(f, "graph is disconnected; this operation needs a connected graph"),
            Error::NotAFace => write!(f, "the given set is not a face of the complex"),
            Error::TooLarge { what, size, cap } => {
                write!(f, "{what} of size {size} exceeds the configured cap {cap}")
            }
            Error::Inconsistency(msg) => write!(f, "internal inconsistency: {msg}"),
        }
    }
}

impl core::error::Error for Error {}
