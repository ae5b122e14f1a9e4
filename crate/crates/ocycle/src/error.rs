//! Error types shared across the crate.
//!
//! [`ParameterError`] covers rejected inputs: out-of-range overlaps, block
//! sizes that do not divide the word length, malformed cycle files, and so
//! on. [`Infeasibility`] is different in kind: the parameters were fine, but
//! the requested transition digraph provably has no Euler tour, and the
//! variant carries a witness saying why.

use thiserror::Error;

use crate::word::Word;

/// A rejected input. Every variant names the offending value and the bound
/// it violated.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[non_exhaustive]
pub enum ParameterError {
    #[error("word must contain at least one symbol")]
    EmptyWord,

    #[error("cannot parse symbol {token:?}: expected a nonnegative integer")]
    InvalidSymbol { token: String },

    #[error("rotation offset {s} out of range for a word of length {n} (expected 0 <= s <= {n})")]
    RotationOutOfRange { s: usize, n: usize },

    #[error("overlap {s} out of range for words of length {n} (expected 1 <= s <= length - 1)")]
    OverlapOutOfRange { s: usize, n: usize },

    #[error("block size {d} does not evenly divide word length {n}")]
    BlockSizeMismatch { d: usize, n: usize },

    #[error("block index {i} out of range: length {n} splits into {m} blocks of size {d}")]
    BlockIndexOutOfRange { i: usize, n: usize, d: usize, m: usize },

    #[error("digit index {index} out of range for a word of length {n}")]
    IndexOutOfRange { index: usize, n: usize },

    #[error("digit {digit} at position {index} is smaller than the period {n}, nothing to reduce")]
    DigitTooSmall { index: usize, digit: u32, n: usize },

    #[error("{word} is not a valid juggling sequence: two throws land at the same time")]
    NotAJugglingSequence { word: String },

    #[error("multiset must contain at least one symbol")]
    EmptyMultiset,

    #[error("multiplicity of symbol {symbol} must be positive")]
    ZeroMultiplicity { symbol: u32 },

    #[error("object set is empty")]
    EmptyObjectSet,

    #[error("object lengths differ: expected {expected}, found {found}")]
    MixedWordLengths { expected: usize, found: usize },

    #[error("duplicate object {word}")]
    DuplicateObject { word: String },

    #[error("selection size {k} out of range (expected 1 <= k <= {n})")]
    SelectionOutOfRange { k: usize, n: usize },

    #[error("alphabet size {h} out of range (expected 1 <= h <= {n})")]
    AlphabetOutOfRange { h: u32, n: usize },

    #[error("period must be at least 1")]
    ZeroPeriod,

    #[error("ball bound must be at least 1")]
    ZeroBalls,

    #[error(
        "compressed body holds {len} symbols, which is not a positive multiple of {stride} \
         (word length {n} minus overlap {s})"
    )]
    BadCompressedLength {
        len: usize,
        stride: usize,
        n: usize,
        s: usize,
    },

    #[error("weight witness requires n - s = gcd(n, s); got n = {n}, s = {s} (n - s = {diff}, gcd = {g})")]
    NotBoundaryCase {
        n: usize,
        s: usize,
        diff: usize,
        g: usize,
    },

    #[error("malformed cycle file header: {message}")]
    MalformedHeader { message: String },

    #[error("cycle file body has {found} symbols but the header implies {expected}")]
    BodyLengthMismatch { expected: usize, found: usize },

    #[error("cycle file lists {found} objects but the header implies {expected}")]
    ObjectCountMismatch { expected: usize, found: usize },

    #[error("cycle file header for family {family:?} is missing field {field:?}")]
    MissingHeaderField { family: String, field: String },

    #[error("unknown family {family:?}")]
    UnknownFamily { family: String },
}

/// Proof that a transition digraph admits no Euler tour, and therefore that
/// the requested overlap cycle does not exist.
///
/// A directed multigraph has an Euler tour exactly when every vertex has
/// equal in- and out-degree and all edges lie in one weakly connected
/// component, so each variant carries the vertex or component pair that
/// breaks the corresponding condition.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Infeasibility {
    #[error("no Euler tour: vertex ({vertex}) has out-degree {out_degree} but in-degree {in_degree}")]
    Unbalanced {
        vertex: Word,
        out_degree: usize,
        in_degree: usize,
    },

    #[error(
        "no Euler tour: the transition digraph splits into {components} weakly connected \
         components, for example ({first}) and ({second}) are separated"
    )]
    Disconnected {
        components: usize,
        first: Word,
        second: Word,
    },
}
