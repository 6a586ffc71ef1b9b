//! Boolean algebra of alternatives.
//!
//! An [`Alternative`] is a fixed-width bit vector. Component `i` records
//! whether atom `i` participates in the alternative, so the `2^w` values of
//! width `w` form a Boolean lattice: [`join`](Alternative::join) is
//! union, [`meet`](Alternative::meet) is intersection,
//! [`complement`](Alternative::complement) flips every component, and
//! [`contains`](Alternative::contains) is the inclusion order. The default
//! width is 3, matching the pleasure/arousal/dominance decomposition of
//! emotional states, but nothing in this module assumes it.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Largest supported vector width.
pub const MAX_WIDTH: usize = 16;

/// Errors raised by algebra operations and by parsing alternatives.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    /// Two operands of different widths were combined.
    #[error("width mismatch: {left} vs {right}")]
    WidthMismatch { left: usize, right: usize },
    /// A width outside `1..=MAX_WIDTH` was requested.
    #[error("invalid width {width}: must be between 1 and {max}", width = .0, max = MAX_WIDTH)]
    InvalidWidth(usize),
    /// Textual input did not describe an alternative.
    #[error("cannot parse alternative from {text:?}: {reason}")]
    Parse { text: String, reason: String },
    /// An atom list failed validation.
    #[error("invalid atom set: {0}")]
    InvalidAtoms(String),
}

/// A named dimension of the algebra.
///
/// Atoms give the bit positions of an [`Alternative`] stable names for
/// reporting. They carry no behaviour of their own.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Atom {
    index: usize,
    label: String,
}

impl Atom {
    pub fn new(index: usize, label: impl Into<String>) -> Self {
        Atom { index, label: label.into() }
    }

    pub fn index(&self) -> usize {
        self.index
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    /// Default atom set for a given width: `P`, `A`, `D` at width 3
    /// (pleasure, arousal, dominance), `x0`, `x1`, ... otherwise.
    pub fn defaults(width: usize) -> Vec<Atom> {
        if width == 3 {
            ["P", "A", "D"]
                .iter()
                .enumerate()
                .map(|(i, l)| Atom::new(i, *l))
                .collect()
        } else {
            (0..width).map(|i| Atom::new(i, format!("x{i}"))).collect()
        }
    }

    /// Checks that `atoms` is a usable atom set: indices are exactly
    /// `0..n` in order and labels are distinct.
    pub fn validate(atoms: &[Atom]) -> Result<(), AlgebraError> {
        for (i, atom) in atoms.iter().enumerate() {
            if atom.index != i {
                return Err(AlgebraError::InvalidAtoms(format!(
                    "expected index {i}, found {}",
                    atom.index
                )));
            }
        }
        for (i, atom) in atoms.iter().enumerate() {
            if atoms[..i].iter().any(|a| a.label == atom.label) {
                return Err(AlgebraError::InvalidAtoms(format!(
                    "duplicate label {:?}",
                    atom.label
                )));
            }
        }
        Ok(())
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label)
    }
}

/// An element of the Boolean algebra: a width-`w` bit vector.
///
/// Atom 0 occupies the most significant position of the integer encoding,
/// so `{1,0,0}` has [`index`](Alternative::index) 4 and the textual form
/// reads left to right from atom 0. The derived `Ord` follows the integer
/// encoding (it is a convenient total order for sorting, not the lattice
/// order — use [`contains`](Alternative::contains) for that).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Alternative {
    width: u8,
    bits: u16,
}

fn check_width(width: usize) {
    assert!(
        (1..=MAX_WIDTH).contains(&width),
        "alternative width {width} out of range 1..={MAX_WIDTH}"
    );
}

impl Alternative {
    /// The empty alternative `{0,...,0}`, bottom of the lattice.
    pub fn bottom(width: usize) -> Self {
        check_width(width);
        Alternative { width: width as u8, bits: 0 }
    }

    /// The full alternative `{1,...,1}`, top of the lattice.
    pub fn top(width: usize) -> Self {
        check_width(width);
        Alternative { width: width as u8, bits: ((1u32 << width) - 1) as u16 }
    }

    /// Builds an alternative from its components, atom 0 first.
    ///
    /// Panics if `bits` is empty or longer than [`MAX_WIDTH`].
    pub fn from_bits(bits: &[bool]) -> Self {
        check_width(bits.len());
        let mut value = 0u16;
        for &b in bits {
            value = (value << 1) | u16::from(b);
        }
        Alternative { width: bits.len() as u8, bits: value }
    }

    /// Builds the alternative with integer encoding `index`.
    ///
    /// Panics if `index >= 2^width`.
    pub fn from_index(width: usize, index: u16) -> Self {
        check_width(width);
        assert!(
            (index as u32) < (1u32 << width),
            "index {index} out of range for width {width}"
        );
        Alternative { width: width as u8, bits: index }
    }

    /// Enumerates all `2^width` alternatives in ascending encoding order.
    pub fn all(width: usize) -> impl Iterator<Item = Alternative> {
        check_width(width);
        (0..1u32 << width).map(move |i| Alternative { width: width as u8, bits: i as u16 })
    }

    pub fn width(&self) -> usize {
        self.width as usize
    }

    /// Component for atom `i`. Panics if `i` is out of range.
    pub fn bit(&self, atom: usize) -> bool {
        assert!(atom < self.width(), "atom {atom} out of range for width {}", self.width);
        (self.bits >> (self.width() - 1 - atom)) & 1 == 1
    }

    /// Integer encoding, atom 0 most significant.
    pub fn index(&self) -> u16 {
        self.bits
    }

    /// Number of set components.
    pub fn popcount(&self) -> u32 {
        self.bits.count_ones()
    }

    fn pair(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.width == other.width {
            Ok(())
        } else {
            Err(AlgebraError::WidthMismatch { left: self.width(), right: other.width() })
        }
    }

    /// Componentwise union; models conflict between interests.
    pub fn join(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.pair(other)?;
        Ok(Alternative { width: self.width, bits: self.bits | other.bits })
    }

    /// Componentwise intersection; models alliance of interests.
    pub fn meet(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.pair(other)?;
        Ok(Alternative { width: self.width, bits: self.bits & other.bits })
    }

    /// Componentwise negation.
    pub fn complement(&self) -> Self {
        let mask = ((1u32 << self.width()) - 1) as u16;
        Alternative { width: self.width, bits: !self.bits & mask }
    }

    /// Inclusion order of the lattice: every component of `other` is also
    /// set in `self`.
    pub fn contains(&self, other: &Self) -> Result<bool, AlgebraError> {
        self.pair(other)?;
        Ok(other.bits & !self.bits == 0)
    }
}

/// All alternatives `x` with `lower ⊆ x ⊆ upper`, in ascending encoding
/// order. Empty when the bounds do not nest (or have different widths);
/// when they do, the interval has exactly `2^k` members for `k` the number
/// of components free between the bounds.
pub fn interval(lower: &Alternative, upper: &Alternative) -> Vec<Alternative> {
    if lower.width != upper.width {
        return Vec::new();
    }
    Alternative::all(lower.width())
        .filter(|x| {
            upper.contains(x).expect("same width") && x.contains(lower).expect("same width")
        })
        .collect()
}

impl std::ops::Not for Alternative {
    type Output = Alternative;

    fn not(self) -> Alternative {
        self.complement()
    }
}

impl std::ops::BitOr for Alternative {
    type Output = Alternative;

    /// Panicking variant of [`Alternative::join`] for operands of known
    /// equal width.
    fn bitor(self, rhs: Alternative) -> Alternative {
        self.join(&rhs).expect("operands of equal width")
    }
}

impl std::ops::BitAnd for Alternative {
    type Output = Alternative;

    /// Panicking variant of [`Alternative::meet`] for operands of known
    /// equal width.
    fn bitand(self, rhs: Alternative) -> Alternative {
        self.meet(&rhs).expect("operands of equal width")
    }
}

impl fmt::Display for Alternative {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for atom in 0..self.width() {
            if atom > 0 {
                f.write_str(",")?;
            }
            f.write_str(if self.bit(atom) { "1" } else { "0" })?;
        }
        f.write_str("}")
    }
}

impl FromStr for Alternative {
    type Err = AlgebraError;

    /// Parses the textual form `{b,b,...,b}` with `b` either `0` or `1`.
    /// Whitespace around the braces and separators is tolerated; the
    /// canonical form printed by `Display` has none.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let fail = |reason: &str| AlgebraError::Parse {
            text: s.to_string(),
            reason: reason.to_string(),
        };
        let body = s.trim();
        let body = body
            .strip_prefix('{')
            .and_then(|b| b.strip_suffix('}'))
            .ok_or_else(|| fail("expected braces around the component list"))?;
        let mut bits = Vec::new();
        for part in body.split(',') {
            match part.trim() {
                "0" => bits.push(false),
                "1" => bits.push(true),
                other => {
                    return Err(fail(&format!("component {other:?} is not 0 or 1")));
                }
            }
        }
        if bits.is_empty() || bits.len() > MAX_WIDTH {
            return Err(fail(&format!(
                "{} components, expected between 1 and {MAX_WIDTH}",
                bits.len()
            )));
        }
        Ok(Alternative::from_bits(&bits))
    }
}
