//! Error type shared by every module.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An operator in a word is not applicable at the degree reached at its
    /// position. Positions count from the left in display order (the
    /// rightmost operator acts first).
    #[error("operator `{op}` at position {position} is not applicable at degree {degree}")]
    InvalidOperator {
        position: usize,
        op: String,
        degree: u32,
    },

    /// A face or degeneracy index outside `0..=degree`.
    #[error("index {index} out of range at degree {degree}")]
    IndexOutOfRange { index: u32, degree: u32 },

    /// A face was requested on a degree-0 object.
    #[error("no faces exist at degree 0")]
    FaceAtDegreeZero,

    /// Two values that must live in the same degree do not.
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: u32, right: u32 },

    /// Enumeration of degeneracy words from degree `from` up to a smaller
    /// degree `target`.
    #[error("no degeneracy words from degree {from} to smaller degree {target}")]
    EmptyRange { from: u32, target: u32 },

    /// A horn is missing a required face or carries an unexpected one.
    #[error("horn must supply exactly the faces 0..={degree} except {missing}")]
    MalformedHorn { degree: u32, missing: u32 },

    /// Two horn faces disagree on their common face.
    #[error("incompatible horn: face {i} of entry {j} differs from face {} of entry {i}", j - 1)]
    IncompatibleHorn { i: u32, j: u32 },

    /// A horn entry does not project onto the corresponding face of the
    /// supplied base filler.
    #[error("horn entry {index} does not project onto face {index} of the base filler")]
    ProjectionMismatch { index: u32 },

    /// A computed filler failed its own post-verification. This indicates a
    /// bug in the filler, never bad input, and is therefore a hard error.
    #[error("internal error: horn filler failed re-verification at face {index}")]
    FillerVerification { index: u32 },

    /// Structurally invalid data (bad JSON payloads, malformed words, ...).
    #[error("invalid {what}: {reason}")]
    Invalid { what: &'static str, reason: String },
}

impl Error {
    pub(crate) fn invalid(what: &'static str, reason: impl Into<String>) -> Self {
        Error::Invalid {
            what,
            reason: reason.into(),
        }
    }
}
