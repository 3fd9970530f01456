use core::fmt;

/// Failure modes shared by every engine in the crate.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// `s^power = 1`, so a recursion divisor vanishes.
    DegenerateParameter { power: usize },
    /// Division of a numerator polynomial by `(1 - s)` left a remainder.
    CancellationFailure { index: usize },
    /// An argument lies outside the real domain of a formula.
    DomainError(&'static str),
    /// A series was evaluated at or beyond its guard radius.
    OutOfRadius { x: f64, radius: f64 },
    /// A potential node has a negative nested radicand somewhere on `[lo, hi]`.
    ComplexValued { lo: f64, hi: f64 },
    /// An iterative procedure did not reach its tolerance.
    NonConvergence(&'static str),
    /// Adjacent legs of a schedule do not share a turning point.
    ScheduleInconsistency { group: usize },
    /// Exact and float scalars were combined.
    ModeMismatch,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DegenerateParameter { power } => {
                write!(f, "degenerate parameter: s^{power} = 1 makes a divisor vanish")
            }
            Error::CancellationFailure { index } => {
                write!(f, "numerator polynomial p_{index} is not divisible by (1 - s)")
            }
            Error::DomainError(what) => write!(f, "domain error: {what}"),
            Error::OutOfRadius { x, radius } => {
                write!(f, "x = {x} lies outside the guarded series radius {radius}")
            }
            Error::ComplexValued { lo, hi } => {
                write!(f, "potential is complex-valued on [{lo}, {hi}]")
            }
            Error::NonConvergence(what) => write!(f, "no convergence: {what}"),
            Error::ScheduleInconsistency { group } => {
                write!(f, "turning points do not match up in chemin group {group}")
            }
            Error::ModeMismatch => f.write_str("exact and float scalars cannot be mixed"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
