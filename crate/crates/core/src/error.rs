//! Error type shared by all modules.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::iet::Interval;
use crate::language::OcViolation;
use crate::word::Word;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Operation is undefined on the empty word.
    EmptyWord,
    /// A letter does not belong to the relevant alphabet or order.
    LetterOutsideAlphabet { letter: char },
    /// Alphabet construction saw the same symbol twice.
    DuplicateLetter { letter: char },
    /// Alphabets must have at least one letter.
    EmptyAlphabet,
    /// Two structures that must share an alphabet do not.
    AlphabetMismatch,
    /// An exhaustive enumeration would exceed the configured guard.
    EnumerationTooLarge { size: usize, cap: usize },
    /// Requested materialization depth exceeds the configured cap.
    DepthCap { requested: usize, cap: usize },
    /// The query needs more materialized depth than the language has.
    InsufficientDepth { needed: usize, depth: usize },
    /// A return-word search hit the materialization frontier before closure.
    DepthExhausted { word: Word },
    /// The queried word is required to be in the language but is not.
    WordNotInLanguage { word: Word },
    /// A word passed as a return word of `of` fails the definition; the
    /// offending occurrence index (1-based) is reported.
    NotAReturnWord { word: Word, of: Word, position: usize },
    /// Return words handed to `derived_orders` must be pairwise distinct.
    DuplicateReturnWord { word: Word },
    /// Two full return words are suffix- or prefix-comparable, so a
    /// comparison index does not exist.
    ComparisonIndexMissing { first: Word, second: Word },
    /// A word could not be factored over return words / morphism images;
    /// the failure position is 1-based.
    NotFactorizable { position: usize },
    /// An operation requiring the order condition was called on a language
    /// violating it.
    OrderConditionViolated(OcViolation),
    /// Interval or IET lengths must be positive.
    NonPositiveLength { letter: char },
    /// Standard IET lengths must sum to the domain length.
    LengthsDoNotSumToOne,
    /// A point query left the IET domain.
    PointOutsideDomain,
    /// `induce` requires a nonempty base cylinder.
    EmptyCylinder { word: Word },
    /// First-return iteration exceeded its cap; the surviving subintervals
    /// (with their accumulated coding words) are reported.
    IterationCapExceeded { survivors: Vec<(Interval, Word)> },
    /// An extension graph handed to `saturate` already has crossing edges.
    CrossingEdges { first: (char, char), second: (char, char) },
    /// A graph passed to `ordering_from_graph` is not a staircase.
    NonStaircaseGraph { reason: String },
    /// Symmetric-mode saturation needs equal left and right vertex sets.
    NonSymmetricGraph,
    /// The operation is only defined for symmetric order pairs.
    NonSymmetricPair,
    /// Malformed interval bounds (left > right).
    InvalidInterval,
    /// An IET constructor invariant failed.
    InvalidIet { message: String },
    /// An empty word set where at least one word is required.
    EmptyWordSet,
    /// Could not parse a rational, order, or similar textual form.
    Parse { message: String },
    /// A contract that should hold by construction was violated.
    Internal { message: String },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::EmptyWord => write!(f, "undefined on empty word"),
            Self::LetterOutsideAlphabet { letter } => {
                write!(f, "letter '{letter}' outside alphabet")
            }
            Self::DuplicateLetter { letter } => write!(f, "duplicate letter '{letter}'"),
            Self::EmptyAlphabet => write!(f, "alphabet must be nonempty"),
            Self::AlphabetMismatch => write!(f, "alphabet mismatch"),
            Self::EnumerationTooLarge { size, cap } => {
                write!(f, "enumeration too large: alphabet size {size} exceeds guard {cap}")
            }
            Self::DepthCap { requested, cap } => {
                write!(f, "depth {requested} exceeds cap {cap}")
            }
            Self::InsufficientDepth { needed, depth } => {
                write!(f, "insufficient depth: need {needed}, have {depth}")
            }
            Self::DepthExhausted { word } => {
                write!(f, "depth exhausted before closure of returns to \"{word}\"")
            }
            Self::WordNotInLanguage { word } => write!(f, "word \"{word}\" not in language"),
            Self::NotAReturnWord { word, of, position } => {
                write!(
                    f,
                    "\"{word}\" is not a return word of \"{of}\": bad occurrence at position {position}"
                )
            }
            Self::DuplicateReturnWord { word } => {
                write!(f, "duplicate return word \"{word}\"")
            }
            Self::ComparisonIndexMissing { first, second } => {
                write!(f, "comparison index missing for \"{first}\" and \"{second}\"")
            }
            Self::NotFactorizable { position } => {
                write!(f, "not factorizable at position {position}")
            }
            Self::OrderConditionViolated(v) => {
                write!(f, "order condition violated: {v}")
            }
            Self::NonPositiveLength { letter } => {
                write!(f, "non-positive length for letter '{letter}'")
            }
            Self::LengthsDoNotSumToOne => write!(f, "lengths do not sum to one"),
            Self::PointOutsideDomain => write!(f, "point outside domain"),
            Self::EmptyCylinder { word } => write!(f, "cylinder of \"{word}\" is empty"),
            Self::IterationCapExceeded { survivors } => {
                write!(f, "iteration cap exceeded with {} surviving intervals", survivors.len())
            }
            Self::CrossingEdges { first, second } => {
                write!(
                    f,
                    "edges ({},{}) and ({},{}) cross",
                    first.0, first.1, second.0, second.1
                )
            }
            Self::NonStaircaseGraph { reason } => write!(f, "non-staircase graph: {reason}"),
            Self::NonSymmetricGraph => {
                write!(f, "symmetric saturation needs equal left and right vertex sets")
            }
            Self::NonSymmetricPair => {
                write!(f, "decision only available for symmetric pairs")
            }
            Self::InvalidInterval => write!(f, "invalid interval bounds"),
            Self::InvalidIet { message } => write!(f, "invalid interval exchange: {message}"),
            Self::EmptyWordSet => write!(f, "word set must be nonempty"),
            Self::Parse { message } => write!(f, "parse error: {message}"),
            Self::Internal { message } => write!(f, "internal inconsistency: {message}"),
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}
