//! Emotional states over the pleasure/arousal/dominance (PAD) space.
//!
//! A point in PAD space is a triple of components in `[-1, 1]`. Collapsing
//! each component to its sign yields one of eight basic emotions, coded as
//! width-3 alternatives:
//!
//! | code      | state      |   | code      | state     |
//! |-----------|------------|---|-----------|-----------|
//! | `{0,0,0}` | Bored      |   | `{1,0,0}` | Docile    |
//! | `{0,0,1}` | Disdainful |   | `{1,0,1}` | Relaxed   |
//! | `{0,1,0}` | Anxious    |   | `{1,1,0}` | Dependent |
//! | `{0,1,1}` | Hostile    |   | `{1,1,1}` | Exuberant |
//!
//! Under this coding the algebra's join and meet act directly on emotional
//! states, and every state is the join of the basis states Docile, Anxious
//! and Disdainful it contains.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::algebra::Alternative;

/// Errors raised when mapping between PAD space, names and codes.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum PadError {
    /// A name that is not one of the eight basic emotions.
    #[error("unknown emotion name {0:?}")]
    UnknownEmotion(String),
    /// An alternative of width other than 3 where a PAD code was expected.
    #[error("expected a width-3 code, got width {0}")]
    InvalidWidth(usize),
    /// A PAD component outside `[-1, 1]` (or not a number).
    #[error("{component} component {value} is outside [-1, 1]")]
    OutOfRange { component: &'static str, value: f64 },
}

/// One of the eight basic emotional states.
///
/// The discriminants follow the integer encoding of the corresponding
/// codes, so the derived `Ord` sorts states in code order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasicEmotion {
    Bored = 0,
    Disdainful = 1,
    Anxious = 2,
    Hostile = 3,
    Docile = 4,
    Relaxed = 5,
    Dependent = 6,
    Exuberant = 7,
}

/// All eight basic emotions in code order.
pub const ALL_EMOTIONS: [BasicEmotion; 8] = [
    BasicEmotion::Bored,
    BasicEmotion::Disdainful,
    BasicEmotion::Anxious,
    BasicEmotion::Hostile,
    BasicEmotion::Docile,
    BasicEmotion::Relaxed,
    BasicEmotion::Dependent,
    BasicEmotion::Exuberant,
];

/// The basis states, in atom order: joins of these three reach every code.
pub const BASIS: [BasicEmotion; 3] =
    [BasicEmotion::Docile, BasicEmotion::Anxious, BasicEmotion::Disdainful];

impl BasicEmotion {
    /// The width-3 code of this state.
    pub fn code(&self) -> Alternative {
        Alternative::from_index(3, *self as u16)
    }

    /// Looks a state up by its code.
    pub fn from_code(code: &Alternative) -> Result<Self, PadError> {
        if code.width() != 3 {
            return Err(PadError::InvalidWidth(code.width()));
        }
        Ok(ALL_EMOTIONS[code.index() as usize])
    }

    pub fn name(&self) -> &'static str {
        match self {
            BasicEmotion::Bored => "Bored",
            BasicEmotion::Disdainful => "Disdainful",
            BasicEmotion::Anxious => "Anxious",
            BasicEmotion::Hostile => "Hostile",
            BasicEmotion::Docile => "Docile",
            BasicEmotion::Relaxed => "Relaxed",
            BasicEmotion::Dependent => "Dependent",
            BasicEmotion::Exuberant => "Exuberant",
        }
    }
}

impl fmt::Display for BasicEmotion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for BasicEmotion {
    type Err = PadError;

    /// Case-insensitive lookup by name.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ALL_EMOTIONS
            .iter()
            .copied()
            .find(|e| e.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| PadError::UnknownEmotion(s.to_string()))
    }
}

/// A point in PAD space: pleasure, arousal and dominance, each in `[-1, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PadTriple {
    pleasure: f64,
    arousal: f64,
    dominance: f64,
}

impl PadTriple {
    /// Builds a triple, rejecting components outside `[-1, 1]` and NaN.
    /// Out-of-range measurements are an input error, never clamped.
    pub fn new(pleasure: f64, arousal: f64, dominance: f64) -> Result<Self, PadError> {
        for (component, value) in
            [("pleasure", pleasure), ("arousal", arousal), ("dominance", dominance)]
        {
            if !(-1.0..=1.0).contains(&value) || value.is_nan() {
                return Err(PadError::OutOfRange { component, value });
            }
        }
        Ok(PadTriple { pleasure, arousal, dominance })
    }

    pub fn pleasure(&self) -> f64 {
        self.pleasure
    }

    pub fn arousal(&self) -> f64 {
        self.arousal
    }

    pub fn dominance(&self) -> f64 {
        self.dominance
    }

    /// Collapses the triple to the code of its octant: component `i` of the
    /// result is 1 exactly when the corresponding measurement is strictly
    /// positive. Zero lies on the negative side, so the origin is Bored.
    pub fn quantize(&self) -> Alternative {
        Alternative::from_bits(&[
            self.pleasure > 0.0,
            self.arousal > 0.0,
            self.dominance > 0.0,
        ])
    }
}

/// The basis states whose join is `code`, in atom order. The empty vector
/// corresponds to Bored, the bottom of the lattice.
pub fn basis_decompose(code: &Alternative) -> Result<Vec<BasicEmotion>, PadError> {
    if code.width() != 3 {
        return Err(PadError::InvalidWidth(code.width()));
    }
    Ok((0..3).filter(|&atom| code.bit(atom)).map(|atom| BASIS[atom]).collect())
}
