//! Brute-force ground truth for small lengths.
//!
//! Everything here counts or ranks by exhaustive generation over GF(4)^m,
//! independently of the closed forms in [`crate::enumeration`] and the index
//! rule in [`crate::codec`], so those can be checked against it.

use crate::codec::Codeword;
use crate::error::{Error, Result};
use crate::symbols::Gf4Symbol;

/// Exhaustive search is capped at 4^10 candidate words.
pub const MAX_M: usize = 10;

fn check_range(m: usize, min: usize) -> Result<()> {
    if m < min || m > MAX_M {
        return Err(Error::OracleRange {
            m,
            min,
            max: MAX_M,
        });
    }
    Ok(())
}

/// Streams every valid length-`m` word in lexicographic order: an odometer
/// over symbol levels with forbidden-substring rejection.
pub struct Enumerator {
    levels: Vec<u8>,
    done: bool,
}

impl Iterator for Enumerator {
    type Item = Codeword;

    fn next(&mut self) -> Option<Codeword> {
        loop {
            if self.done {
                return None;
            }
            let candidate = self.current();
            self.advance();
            if let Ok(word) = Codeword::new(candidate) {
                return Some(word);
            }
        }
    }
}

impl Enumerator {
    fn current(&self) -> Vec<Gf4Symbol> {
        self.levels
            .iter()
            .map(|&l| Gf4Symbol::from_level(l).expect("odometer digit"))
            .collect()
    }

    fn advance(&mut self) {
        for digit in self.levels.iter_mut().rev() {
            if *digit < 3 {
                *digit += 1;
                return;
            }
            *digit = 0;
        }
        self.done = true;
    }
}

/// All valid length-`m` words (`1 <= m <= 10`), sorted lexicographically.
pub fn enumerate(m: usize) -> Result<Vec<Codeword>> {
    check_range(m, 1)?;
    Ok(Enumerator {
        levels: vec![0; m],
        done: false,
    }
    .collect())
}

/// Zero-based position of `c` in the sorted list of valid words of its
/// length. Must agree with the codec's closed-form index.
pub fn rank(c: &Codeword) -> Result<usize> {
    check_range(c.len(), 1)?;
    let words = enumerate(c.len())?;
    words.binary_search(c).map_err(|_| Error::NotInCode)
}

/// Counts of valid words grouped by their left-most symbols: starting with
/// one of `{0, 1, α}`; starting with `α²θ`, `θ` nonzero; starting with `α²0`.
/// The groups partition the code.
pub fn group_counts(m: usize) -> Result<(u64, u64, u64)> {
    check_range(m, 4)?;
    let mut counts = (0u64, 0u64, 0u64);
    for word in enumerate(m)? {
        let s = word.symbols();
        if s[0] != Gf4Symbol::AlphaSq {
            counts.0 += 1;
        } else if s[1] != Gf4Symbol::Zero {
            counts.1 += 1;
        } else {
            counts.2 += 1;
        }
    }
    Ok(counts)
}
