//! Crate-wide error type.

use std::fmt;

/// Everything that can go wrong while folding.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// Two points expected to be distinct coincide within tolerance.
    CoincidentPoints,
    /// Two lines expected to be distinct describe the same locus.
    IdenticalLines,
    /// Normal vector of a line vanished.
    DegenerateLine,
    /// Circle centers coincide, so no radical line exists.
    ConcentricCircles,
    /// The simultaneous-fold exclusion: `P` on `p`, `Q` on `q`, `p || q`
    /// (infinitely many creases), or inputs violating distinctness.
    DegenerateConfiguration,
    /// Leading coefficient vanished where a quadratic was required.
    NotQuadratic,
    /// Leading coefficient vanished where a cubic was required.
    NotCubic,
    /// Leading coefficient vanished where a quartic was required.
    NotQuartic,
    /// Polynomial degree outside the supported 1..=4 range.
    UnsupportedDegree(usize),
    /// Numeric argument outside the documented domain.
    OutOfRange(String),
    /// A `choose k` asked for a fold branch the solver did not produce.
    BranchUnavailable { requested: usize, available: usize },
    /// Rendering was asked to draw a trace with no steps.
    EmptyTrace,
    /// Script text failed to parse.
    Parse(ParseError),
    /// An `assert_near` statement in a script failed.
    AssertFailed { line: usize, detail: String },
    /// Interpreter failure carrying the statement location.
    Script { line: usize, detail: String },
}

/// Position-carrying syntax error.
#[derive(Debug, Clone, PartialEq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
    pub token: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}:{}: {} (at '{}')",
            self.line, self.column, self.message, self.token
        )
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::CoincidentPoints => write!(f, "points coincide within tolerance"),
            Error::IdenticalLines => write!(f, "lines are identical within tolerance"),
            Error::DegenerateLine => write!(f, "degenerate line (zero normal)"),
            Error::ConcentricCircles => write!(f, "circles are concentric"),
            Error::DegenerateConfiguration => {
                write!(f, "degenerate fold configuration (infinitely many creases)")
            }
            Error::NotQuadratic => write!(f, "leading coefficient of quadratic is zero"),
            Error::NotCubic => write!(f, "leading coefficient of cubic is zero"),
            Error::NotQuartic => write!(f, "leading coefficient of quartic is zero"),
            Error::UnsupportedDegree(d) => write!(f, "unsupported polynomial degree {d}"),
            Error::OutOfRange(msg) => write!(f, "argument out of range: {msg}"),
            Error::BranchUnavailable {
                requested,
                available,
            } => write!(
                f,
                "branch {requested} unavailable ({available} solution(s) found)"
            ),
            Error::EmptyTrace => write!(f, "trace has no steps"),
            Error::Parse(e) => write!(f, "parse error: {e}"),
            Error::AssertFailed { line, detail } => {
                write!(f, "assertion failed at line {line}: {detail}")
            }
            Error::Script { line, detail } => write!(f, "error at line {line}: {detail}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
