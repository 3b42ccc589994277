use thiserror::Error;

/// Errors raised by the library.
///
/// [`Error::is_inconsistency`] separates inputs that are well formed but
/// mathematically inconsistent from plain usage mistakes.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {position}: {message}")]
    Syntax { position: usize, message: String },
    #[error("bad band generator s({i},{j}): need 1 <= i < j")]
    BadGenerator { i: usize, j: usize },
    #[error("strand index {index} out of range for {strands} strands")]
    IndexOutOfRange { index: usize, strands: usize },
    #[error("a braid needs at least one strand")]
    ZeroStrands,
    #[error("strand counts differ: {0} vs {1}")]
    StrandMismatch(usize, usize),
    #[error("expected a positive band generator")]
    NegativeGenerator,
    #[error("cannot destabilize: {0}")]
    Destabilize(String),
    #[error("operation needs canonical length >= 1, got a pure delta power")]
    PureDeltaPower,
    #[error("parity failure: -chi - sl = {0} is odd, genus and word are inconsistent")]
    Parity(i64),
    #[error("invalid foliation complex: {0}")]
    InvalidComplex(String),
    #[error("precondition not met: {0}")]
    Precondition(String),
    #[error("region {0} is not an ab-tile")]
    NotAbTile(u32),
    #[error("unknown region {0}")]
    UnknownRegion(u32),
    #[error("no negative elliptic point on binding component {0}")]
    NoNegativeElliptic(String),
    #[error("coherence transition ({event}) at step {step} needs a {needed} c-circle, pool is empty")]
    EmptyCirclePool {
        step: usize,
        event: String,
        needed: String,
    },
    #[error("handle reduction exceeded its budget of {0} steps")]
    StepBudget(u64),
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("unknown scenario {0}")]
    UnknownScenario(String),
    #[error("budget exceeded: {0}")]
    Budget(String),
}

impl Error {
    /// True for errors where the input parsed fine but the mathematics
    /// rejects it (for example an odd defect parity).
    pub fn is_inconsistency(&self) -> bool {
        matches!(
            self,
            Error::Parity(_)
                | Error::InvalidComplex(_)
                | Error::Precondition(_)
                | Error::EmptyCirclePool { .. }
                | Error::Destabilize(_)
                | Error::PureDeltaPower
                | Error::NoNegativeElliptic(_)
                | Error::NotAbTile(_)
                | Error::StepBudget(_)
                | Error::Budget(_)
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
