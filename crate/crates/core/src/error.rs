use thiserror::Error;

/// Errors raised by the braid, wicket and lamination routines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("letter {letter} is out of range for {strands} strands")]
    LetterOutOfRange { letter: i32, strands: usize },

    #[error("a braid needs at least {min} strands, got {strands}")]
    TooFewStrands { strands: usize, min: usize },

    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("expected an even strand count, got {0}")]
    OddStrands(usize),

    #[error("parameter {name} = {value} is out of range ({expected})")]
    OutOfRange {
        name: &'static str,
        value: i64,
        expected: &'static str,
    },

    #[error("not a permutation: {0}")]
    InvalidPermutation(String),

    #[error("not a fixed-point-free involution: {0}")]
    InvalidPairing(String),

    #[error("invalid lamination coordinates: {0}")]
    InvalidCoords(String),

    #[error("cannot parse {what}: {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("resource exhausted after {steps} steps")]
    ResourceExhausted { steps: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
