use alloc::string::String;
use core::fmt;

/// Errors raised by constructors and validators across the crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// A group-theoretic table failed validation (associativity, inverses,
    /// homomorphism property, ...).
    InvalidGroup(String),
    /// An action table is not an action by automorphisms.
    InvalidAction(String),
    /// A module's action matrices fail the required compatibility laws.
    InvalidModule(String),
    /// Matrix or presentation dimensions do not line up.
    Dimension(String),
    /// A linear system that must be solvable had no integer solution.
    Unsolvable(String),
    /// A degree outside the truncation of a complex was requested.
    DegreeOutOfRange { requested: usize, max: usize },
    /// A computation would exceed the configured basis-size guard.
    SizeLimit { needed: usize, limit: usize },
    /// Invalid argument (zero order, nonabelian input to an abelian-only
    /// construction, ...).
    Invalid(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidGroup(msg) => write!(f, "invalid group: {msg}"),
            Error::InvalidAction(msg) => write!(f, "invalid action: {msg}"),
            Error::InvalidModule(msg) => write!(f, "invalid module: {msg}"),
            Error::Dimension(msg) => write!(f, "dimension mismatch: {msg}"),
            Error::Unsolvable(msg) => write!(f, "no integer solution: {msg}"),
            Error::DegreeOutOfRange { requested, max } => {
                write!(f, "degree {requested} out of range (max {max})")
            }
            Error::SizeLimit { needed, limit } => {
                write!(f, "basis size {needed} exceeds limit {limit}")
            }
            Error::Invalid(msg) => write!(f, "invalid argument: {msg}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
