//! Code alphabets and the mappings between them.
//!
//! The two-dimensional square-isolation constraint is handled as a
//! one-dimensional constraint over non-binary symbols. Three stacked grid
//! bits form one GF(8) symbol, each GF(8) symbol pairs with a GF(4) symbol
//! plus a free selection bit, and the constrained code itself runs over
//! GF(4):
//!
//! | GF(8) pair      | GF(4) symbol |
//! |-----------------|--------------|
//! | {β, β⁴}         | 0            |
//! | {1, β⁵}         | 1            |
//! | {β², β³}        | α            |
//! | {0, β⁶}         | α²           |
//!
//! Selection bit 0 picks the first element of the pair, 1 the second.
//!
//! Symbols order by their integer level (`0 < 1 < α < α²` and
//! `0 < 1 < β < … < β⁶`), which is the lexicographic order the codec
//! indexes against. No field arithmetic is needed anywhere in the
//! construction, so none is provided.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Element of the GF(4) code alphabet `{0, 1, α, α²}`.
///
/// The integer level is 0 for the zero symbol and `power + 1` for powers of
/// α, so the forbidden pattern `α²0α²` reads `{3, 0, 3}` in levels.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Gf4Symbol {
    Zero,
    One,
    Alpha,
    AlphaSq,
}

/// Element of the GF(8) grid alphabet `{0, 1, β, β², …, β⁶}`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Gf8Symbol {
    Zero,
    One,
    Beta,
    Beta2,
    Beta3,
    Beta4,
    Beta5,
    Beta6,
}

impl Gf4Symbol {
    /// All four symbols in level (lexicographic) order.
    pub const ALL: [Gf4Symbol; 4] = [
        Gf4Symbol::Zero,
        Gf4Symbol::One,
        Gf4Symbol::Alpha,
        Gf4Symbol::AlphaSq,
    ];

    /// Integer level: 0 for the zero symbol, otherwise `gflog(c) + 1`.
    pub const fn level(self) -> u8 {
        self as u8
    }

    pub const fn from_level(level: u8) -> Result<Self> {
        match level {
            0 => Ok(Gf4Symbol::Zero),
            1 => Ok(Gf4Symbol::One),
            2 => Ok(Gf4Symbol::Alpha),
            3 => Ok(Gf4Symbol::AlphaSq),
            _ => Err(Error::InvalidLevel { field: 4, level }),
        }
    }

    /// Picks the GF(8) representative of this symbol's pair.
    ///
    /// Bit 0 selects the first listed element, bit 1 the second. The
    /// selection carries one free information bit per written column.
    pub const fn remap(self, selection: bool) -> Gf8Symbol {
        match (self, selection) {
            (Gf4Symbol::Zero, false) => Gf8Symbol::Beta,
            (Gf4Symbol::Zero, true) => Gf8Symbol::Beta4,
            (Gf4Symbol::One, false) => Gf8Symbol::One,
            (Gf4Symbol::One, true) => Gf8Symbol::Beta5,
            (Gf4Symbol::Alpha, false) => Gf8Symbol::Beta2,
            (Gf4Symbol::Alpha, true) => Gf8Symbol::Beta3,
            (Gf4Symbol::AlphaSq, false) => Gf8Symbol::Zero,
            (Gf4Symbol::AlphaSq, true) => Gf8Symbol::Beta6,
        }
    }
}

impl Gf8Symbol {
    /// All eight symbols in level (lexicographic) order.
    pub const ALL: [Gf8Symbol; 8] = [
        Gf8Symbol::Zero,
        Gf8Symbol::One,
        Gf8Symbol::Beta,
        Gf8Symbol::Beta2,
        Gf8Symbol::Beta3,
        Gf8Symbol::Beta4,
        Gf8Symbol::Beta5,
        Gf8Symbol::Beta6,
    ];

    /// Integer level: 0 for the zero symbol, otherwise `gflog(s) + 1`.
    pub const fn level(self) -> u8 {
        self as u8
    }

    pub const fn from_level(level: u8) -> Result<Self> {
        match level {
            0 => Ok(Gf8Symbol::Zero),
            1 => Ok(Gf8Symbol::One),
            2 => Ok(Gf8Symbol::Beta),
            3 => Ok(Gf8Symbol::Beta2),
            4 => Ok(Gf8Symbol::Beta3),
            5 => Ok(Gf8Symbol::Beta4),
            6 => Ok(Gf8Symbol::Beta5),
            7 => Ok(Gf8Symbol::Beta6),
            _ => Err(Error::InvalidLevel { field: 8, level }),
        }
    }

    /// Inverse of [`Gf4Symbol::remap`]: the GF(4) symbol of this symbol's
    /// pair and the selection bit that recovers `self`.
    pub const fn demap(self) -> (Gf4Symbol, bool) {
        match self {
            Gf8Symbol::Beta => (Gf4Symbol::Zero, false),
            Gf8Symbol::Beta4 => (Gf4Symbol::Zero, true),
            Gf8Symbol::One => (Gf4Symbol::One, false),
            Gf8Symbol::Beta5 => (Gf4Symbol::One, true),
            Gf8Symbol::Beta2 => (Gf4Symbol::Alpha, false),
            Gf8Symbol::Beta3 => (Gf4Symbol::Alpha, true),
            Gf8Symbol::Zero => (Gf4Symbol::AlphaSq, false),
            Gf8Symbol::Beta6 => (Gf4Symbol::AlphaSq, true),
        }
    }

    /// The 3-bit grid column carrying this symbol.
    pub const fn column(self) -> Column {
        Column::from_level(self.level())
    }
}

/// One grid column of three stacked bits, top track first.
///
/// The bits are the big-endian binary expansion of the level of the GF(8)
/// symbol written in the column: `0 → 000`, `β^k → binary(k + 1)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Column {
    pub top: bool,
    pub middle: bool,
    pub bottom: bool,
}

impl Column {
    pub const fn new(top: bool, middle: bool, bottom: bool) -> Self {
        Column {
            top,
            middle,
            bottom,
        }
    }

    const fn from_level(level: u8) -> Self {
        Column {
            top: level & 0b100 != 0,
            middle: level & 0b010 != 0,
            bottom: level & 0b001 != 0,
        }
    }

    const fn level(self) -> u8 {
        (self.top as u8) << 2 | (self.middle as u8) << 1 | self.bottom as u8
    }

    /// The GF(8) symbol whose binary expansion this column is.
    pub const fn symbol(self) -> Gf8Symbol {
        match self.level() {
            0 => Gf8Symbol::Zero,
            1 => Gf8Symbol::One,
            2 => Gf8Symbol::Beta,
            3 => Gf8Symbol::Beta2,
            4 => Gf8Symbol::Beta3,
            5 => Gf8Symbol::Beta4,
            6 => Gf8Symbol::Beta5,
            _ => Gf8Symbol::Beta6,
        }
    }

    pub const fn bits(self) -> [bool; 3] {
        [self.top, self.middle, self.bottom]
    }
}

/// The two forbidden GF(8) patterns: the images of the 3×3 square-isolation
/// patterns under the column mapping.
pub const Q8_PATTERNS: [[Gf8Symbol; 3]; 2] = [
    [Gf8Symbol::Zero, Gf8Symbol::Beta, Gf8Symbol::Zero],
    [Gf8Symbol::Beta6, Gf8Symbol::Beta4, Gf8Symbol::Beta6],
];

/// The single forbidden GF(4) pattern `α²0α²`. Both entries of
/// [`Q8_PATTERNS`] project onto it under [`Gf8Symbol::demap`], so avoiding
/// it over GF(4) avoids every square-isolation pattern regardless of the
/// selection bits.
pub const Q4_PATTERN: [Gf4Symbol; 3] = [Gf4Symbol::AlphaSq, Gf4Symbol::Zero, Gf4Symbol::AlphaSq];

/// True iff some consecutive symbol triple equals `α²0α²`.
pub fn contains_forbidden(seq: &[Gf4Symbol]) -> bool {
    seq.windows(3).any(|w| w == Q4_PATTERN)
}

/// Parses a whitespace-separated sequence of GF(4) symbol tokens.
pub fn parse_symbols(s: &str) -> Result<Vec<Gf4Symbol>> {
    s.split_whitespace().map(|tok| tok.parse()).collect()
}

impl fmt::Display for Gf4Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Gf4Symbol::Zero => "0",
            Gf4Symbol::One => "1",
            Gf4Symbol::Alpha => "a",
            Gf4Symbol::AlphaSq => "a2",
        };
        f.write_str(s)
    }
}

impl FromStr for Gf4Symbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "0" => Ok(Gf4Symbol::Zero),
            "1" => Ok(Gf4Symbol::One),
            "a" => Ok(Gf4Symbol::Alpha),
            "a2" => Ok(Gf4Symbol::AlphaSq),
            _ => Err(Error::ParseSymbol(s.to_owned())),
        }
    }
}

impl fmt::Display for Gf8Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.level() {
            0 => f.write_str("0"),
            1 => f.write_str("1"),
            k => write!(f, "b{}", k - 1),
        }
    }
}

impl FromStr for Gf8Symbol {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "0" => Ok(Gf8Symbol::Zero),
            "1" => Ok(Gf8Symbol::One),
            _ => match s.strip_prefix('b').and_then(|p| p.parse::<u8>().ok()) {
                Some(k @ 1..=6) => Gf8Symbol::from_level(k + 1),
                _ => Err(Error::ParseSymbol(s.to_owned())),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn levels() {
        assert_eq!(Gf4Symbol::Zero.level(), 0);
        assert_eq!(Gf4Symbol::AlphaSq.level(), 3);
        assert_eq!(Gf8Symbol::Beta5.level(), 6);
        assert_eq!(Q4_PATTERN.map(|s| s.level()), [3, 0, 3]);
    }

    #[test]
    fn column_mapping() {
        assert_eq!(Gf8Symbol::Zero.column(), Column::new(false, false, false));
        assert_eq!(Gf8Symbol::Beta.column(), Column::new(false, true, false));
        assert_eq!(Gf8Symbol::Beta6.column(), Column::new(true, true, true));
    }

    #[test]
    fn column_roundtrip_exhaustive() {
        for s in Gf8Symbol::ALL {
            assert_eq!(s.column().symbol(), s);
        }
    }

    #[test]
    fn remap_pinned_selections() {
        assert_eq!(Gf4Symbol::One.remap(true), Gf8Symbol::Beta5);
        assert_eq!(Gf4Symbol::AlphaSq.remap(false), Gf8Symbol::Zero);
        assert_eq!(Gf4Symbol::Zero.remap(false), Gf8Symbol::Beta);
        assert_eq!(Gf4Symbol::Alpha.remap(true), Gf8Symbol::Beta3);
        assert_eq!(Gf4Symbol::AlphaSq.remap(true), Gf8Symbol::Beta6);
    }

    #[test]
    fn demap_is_a_bijection() {
        let mut seen = Vec::new();
        for s in Gf8Symbol::ALL {
            let (c, b) = s.demap();
            assert_eq!(c.remap(b), s);
            assert!(!seen.contains(&(c, b)));
            seen.push((c, b));
        }
        assert_eq!(seen.len(), 8);
    }

    #[test]
    fn forbidden_projection() {
        // Both GF(8) patterns collapse onto the single GF(4) pattern.
        for pattern in Q8_PATTERNS {
            let projected: Vec<Gf4Symbol> = pattern.iter().map(|s| s.demap().0).collect();
            assert_eq!(projected.as_slice(), Q4_PATTERN.as_slice());
        }
    }

    #[test]
    fn forbidden_patterns_are_the_square_isolation_patterns() {
        // Written as columns, 0β0 is a lone 1 in an all-zero 3×3 window and
        // β⁶β⁴β⁶ a lone 0 in an all-one window.
        let windows: Vec<Vec<[bool; 3]>> = Q8_PATTERNS
            .iter()
            .map(|p| p.iter().map(|s| s.column().bits()).collect())
            .collect();
        for (w, center) in windows.iter().zip([true, false]) {
            for (j, col) in w.iter().enumerate() {
                for (i, bit) in col.iter().enumerate() {
                    let expected = if (i, j) == (1, 1) { center } else { !center };
                    assert_eq!(*bit, expected);
                }
            }
        }
    }

    #[test]
    fn forbidden_substring_detection() {
        use Gf4Symbol::*;
        assert!(!contains_forbidden(&[Zero, One, Alpha, AlphaSq]));
        assert!(contains_forbidden(&[AlphaSq, Zero, AlphaSq, One]));
        assert!(!contains_forbidden(&[]));
        assert!(!contains_forbidden(&[AlphaSq, Zero]));
    }

    #[test]
    fn display_parse_roundtrip() {
        for s in Gf4Symbol::ALL {
            assert_eq!(s.to_string().parse::<Gf4Symbol>().unwrap(), s);
        }
        for s in Gf8Symbol::ALL {
            assert_eq!(s.to_string().parse::<Gf8Symbol>().unwrap(), s);
        }
        assert!("b7".parse::<Gf8Symbol>().is_err());
        assert!("x".parse::<Gf4Symbol>().is_err());
    }

    #[test]
    fn ordering_follows_levels() {
        assert!(Gf4Symbol::Zero < Gf4Symbol::One);
        assert!(Gf4Symbol::Alpha < Gf4Symbol::AlphaSq);
        assert!(Gf8Symbol::One < Gf8Symbol::Beta);
    }
}
