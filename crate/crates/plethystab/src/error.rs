//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by sequence, tableau, polynomial, and stability operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Padding a sequence to a length shorter than it already has.
    #[error("cannot truncate: sequence {seq} has length {len}, requested {requested}")]
    CannotTruncate {
        /// Display form of the sequence.
        seq: String,
        /// Stored length of the sequence.
        len: usize,
        /// Requested (shorter) target length.
        requested: usize,
    },

    /// Dominance comparison between partitions of different weights.
    #[error("incomparable weights: |{left}| = {left_weight} but |{right}| = {right_weight}")]
    IncomparableWeights {
        /// Display form of the left partition.
        left: String,
        /// Weight of the left partition.
        left_weight: i128,
        /// Display form of the right partition.
        right: String,
        /// Weight of the right partition.
        right_weight: i128,
    },

    /// A triangular array that fails the Gelfand-Tsetlin interlacing conditions.
    #[error("not a GT pattern: {reason}")]
    NotGtPattern {
        /// Which condition failed and where.
        reason: String,
    },

    /// Schur decomposition applied to a polynomial that is not symmetric.
    #[error("not a symmetric polynomial: {reason}")]
    NotSymmetric {
        /// Which step of the decomposition detected the asymmetry.
        reason: String,
    },

    /// Point enumeration would exceed the configured cap.
    #[error("enumeration too large: more than {cap} points")]
    EnumerationTooLarge {
        /// The configured point cap.
        cap: usize,
    },

    /// Stability window too small to certify a plateau.
    #[error("increase n_max: window needs n_max >= {needed}, got {got}")]
    IncreaseNMax {
        /// Smallest n_max that gives a usable window.
        needed: i64,
        /// The n_max that was supplied.
        got: i64,
    },

    /// Complete homogeneous plethysm asked for a negative degree.
    #[error("negative part {part}: use zero-extension semantics at caller")]
    NegativePart {
        /// The offending part value.
        part: i64,
    },

    /// A sequence that is not a valid partition.
    #[error("invalid partition: {reason} (offending token: {token})")]
    InvalidPartition {
        /// Which invariant failed.
        reason: String,
        /// The part or token that violates it.
        token: String,
    },

    /// A string that does not parse as a comma-separated integer sequence.
    #[error("invalid sequence: {reason} (offending token: {token})")]
    InvalidSequence {
        /// Why parsing failed.
        reason: String,
        /// The token that failed to parse.
        token: String,
    },

    /// A stability family specification that violates its preconditions.
    #[error("invalid family spec: {reason}")]
    InvalidFamily {
        /// Which precondition failed.
        reason: String,
    },

    /// Row data that does not form a semistandard tableau.
    #[error("invalid tableau: {reason}")]
    InvalidTableau {
        /// Which semistandardness condition failed.
        reason: String,
    },

    /// A tableau row-append that would break column-strictness.
    #[error("cannot append rows: {reason}")]
    CannotAppend {
        /// Which SSYT condition would break.
        reason: String,
    },
}
