use std::fmt;

/// Errors shared by all engine modules.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Rank outside `1..=MAX_RANK`.
    RankOutOfRange { n: usize, max: usize },
    /// A bound quiver algebra failed a structural invariant.
    InvalidQuiver(String),
    /// `global_dimension` was asked about a quiver with a directed cycle.
    CyclicQuiver,
    /// An interval module outside `1 ≤ lo ≤ hi ≤ n`.
    InvalidInterval { lo: usize, hi: usize, ambient: usize },
    /// A chord with equal or boundary-adjacent endpoints, or endpoints out of range.
    InvalidChord { a: usize, b: usize, n: usize },
    /// A chord set that is not a triangulation (crossing chords or wrong size).
    InvalidTriangulation(String),
    /// The triangulation lacks the chord joining the two extra marked points,
    /// so the induced-algebra construction does not apply.
    ExtrasChordMissing,
    /// A graded arc with inconsistent endpoints or indices.
    InvalidArc(String),
    /// An arc set violating one of the arc-system conditions.
    InvalidArcSystem(String),
    /// Queried an arc for its index at a point that is not one of its endpoints.
    NotAnEndpoint { s: usize, t: usize, at: usize },
    /// An arc whose intersection indices leave `{0, 1}`.
    NotTwoTerm(String),
    /// A two-term complex failing a structural invariant.
    InvalidComplex(String),
    /// An operation requiring a silting collection received something else.
    NotSilting(String),
    /// `h0` received an arrow of negative grade.
    NegativeGrade { grade: i64 },
    /// Two routes to the same count disagreed.
    CountMismatch { what: String, detail: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::RankOutOfRange { n, max } => {
                write!(f, "rank {n} out of range (expected 1..={max})")
            }
            Error::InvalidQuiver(msg) => write!(f, "invalid bound quiver: {msg}"),
            Error::CyclicQuiver => write!(f, "quiver has a directed cycle"),
            Error::InvalidInterval { lo, hi, ambient } => {
                write!(f, "invalid interval [{lo},{hi}] over rank {ambient}")
            }
            Error::InvalidChord { a, b, n } => {
                write!(f, "invalid chord ({a},{b}) on the disk of rank {n}")
            }
            Error::InvalidTriangulation(msg) => write!(f, "invalid triangulation: {msg}"),
            Error::ExtrasChordMissing => {
                write!(f, "triangulation does not contain the chord joining the extra points")
            }
            Error::InvalidArc(msg) => write!(f, "invalid graded arc: {msg}"),
            Error::InvalidArcSystem(msg) => write!(f, "invalid arc system: {msg}"),
            Error::NotAnEndpoint { s, t, at } => {
                write!(f, "point m_{at} is not an endpoint of the arc ({s},{t})")
            }
            Error::NotTwoTerm(msg) => write!(f, "arc is not two-term: {msg}"),
            Error::InvalidComplex(msg) => write!(f, "invalid two-term complex: {msg}"),
            Error::NotSilting(msg) => write!(f, "not a silting collection: {msg}"),
            Error::NegativeGrade { grade } => write!(f, "arrow of negative grade {grade}"),
            Error::CountMismatch { what, detail } => {
                write!(f, "count verification failed for {what}: {detail}")
            }
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
