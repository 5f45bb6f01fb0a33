//! Lexicographic index rule and the message ↔ codeword codec.
//!
//! Every valid codeword has a zero-based rank `g` among all valid words of
//! its length, ordered `0 < 1 < α < α²` symbol-wise. The rank has a closed
//! form: writing `a_i` for the integer level of the symbol at position `i`
//! (position 0 is the right-most symbol, `a_m ≜ 0`),
//!
//! ```text
//! g(c) = sum_i [ a_i N(i) + 1(a_{i+1} = 3 and a_i != 0) · inner_sum(i) ]
//! ```
//!
//! The signed `inner_sum(i)` corrects for suffixes that an `α²` predecessor
//! rules out, by inclusion-exclusion. Encoding inverts the sum greedily from
//! the most significant position; the boundary between emitting `0` and a
//! nonzero level after an `α²` is exact because
//! `N(i) + inner_sum(i) = 3 N(i-1)` counts precisely the valid suffixes that
//! begin with `0` there.
//!
//! Messages are `s_c` bits, big-endian. A message `b` maps to the codeword
//! of index `decimal(b) + 1`: the `+1` skips the all-0 codeword, and
//! `2^s_c <= N(m) - 2` keeps the all-α² codeword unreachable, so the two
//! words removed for self-clocking are never produced.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::enumeration::CodeParams;
use crate::error::{Error, Result};
use crate::symbols::Gf4Symbol;

/// A length-`m` GF(4) word with no `α²0α²` substring, most significant
/// symbol first. Valid by construction.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Codeword {
    symbols: Vec<Gf4Symbol>,
}

impl Codeword {
    pub fn new(symbols: Vec<Gf4Symbol>) -> Result<Self> {
        if let Some(position) = symbols
            .windows(3)
            .position(|w| w == crate::symbols::Q4_PATTERN)
        {
            return Err(Error::ForbiddenPattern { position });
        }
        Ok(Codeword { symbols })
    }

    pub fn symbols(&self) -> &[Gf4Symbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Whether the word survives the self-clocking removal, i.e. is neither
    /// all-0 nor all-α².
    pub fn is_clocked(&self) -> bool {
        !self.symbols.iter().all(|&s| s == Gf4Symbol::Zero)
            && !self.symbols.iter().all(|&s| s == Gf4Symbol::AlphaSq)
    }

    pub(crate) fn check_clocked(&self) -> Result<()> {
        if self.symbols.iter().all(|&s| s == Gf4Symbol::Zero) {
            return Err(Error::NotClocked("0".to_owned()));
        }
        if self.symbols.iter().all(|&s| s == Gf4Symbol::AlphaSq) {
            return Err(Error::NotClocked("a2".to_owned()));
        }
        Ok(())
    }

    fn check_len(&self, params: &CodeParams) -> Result<()> {
        if self.len() != params.m() {
            return Err(Error::LengthMismatch {
                expected: params.m(),
                actual: self.len(),
            });
        }
        Ok(())
    }
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, s) in self.symbols.iter().enumerate() {
            if k > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{s}")?;
        }
        Ok(())
    }
}

impl FromStr for Codeword {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let symbols = s
            .split_whitespace()
            .map(|tok| tok.parse())
            .collect::<Result<Vec<Gf4Symbol>>>()?;
        Codeword::new(symbols)
    }
}

/// The lexicographic index `g(c)` in `{0, …, N(m) - 1}`, computed exactly.
pub fn index_of(c: &Codeword, params: &CodeParams) -> Result<BigInt> {
    c.check_len(params)?;
    let m = params.m();
    let level_at = |i: usize| c.symbols[m - 1 - i].level();
    let mut g = BigInt::zero();
    for i in 0..m {
        let a_i = level_at(i);
        if a_i == 0 {
            continue;
        }
        g += params.cardinality(i) * BigInt::from(a_i);
        let a_next = if i + 1 < m { level_at(i + 1) } else { 0 };
        if a_next == 3 {
            g += params.inner_sum(i);
        }
    }
    Ok(g)
}

/// Inverse of [`index_of`] on the self-clocked range `1 <= g <= N(m) - 2`
/// (indices 0 and N(m) - 1 are the removed all-0 and all-α² words).
///
/// Per position `i` from `m - 1` down to 0, with running residual `r`
/// initialized to `g` and `c_m ≜ 0`:
///
/// 1. if `c_{i+1} = α²`, let `r' = r - inner_sum(i)` (never smaller than
///    `r`); otherwise `r' = r`;
/// 2. if `r' < N(i)`, emit `0` and keep `r` unchanged — the hypothetical
///    inner-sum charge applies only to nonzero symbols;
/// 3. otherwise emit the largest level `v` in `{1, 2, 3}` with
///    `v·N(i) <= r'` and set `r = r' - v·N(i)`.
pub fn codeword_of(g: &BigInt, params: &CodeParams) -> Result<Codeword> {
    if *g < BigInt::one() || *g > params.clocked_cardinality() {
        return Err(Error::IndexOutOfRange {
            index: g.to_string(),
        });
    }
    let m = params.m();
    let mut symbols = Vec::with_capacity(m);
    let mut residual = g.clone();
    let mut after_alpha_sq = false;
    for i in (0..m).rev() {
        let adjusted = if after_alpha_sq {
            &residual - params.inner_sum(i)
        } else {
            residual.clone()
        };
        let n_i = params.cardinality(i);
        if adjusted < *n_i {
            symbols.push(Gf4Symbol::Zero);
            after_alpha_sq = false;
        } else {
            let mut level = 3u8;
            while n_i * BigInt::from(level) > adjusted {
                level -= 1;
            }
            symbols.push(Gf4Symbol::from_level(level).expect("level in 1..=3"));
            residual = adjusted - n_i * BigInt::from(level);
            after_alpha_sq = level == 3;
        }
    }
    debug_assert!(residual.is_zero(), "index fully consumed");
    Codeword::new(symbols)
}

/// Encodes an `s_c`-bit big-endian message as the codeword of index
/// `decimal(b) + 1`.
pub fn encode_message(bits: &[bool], params: &CodeParams) -> Result<Codeword> {
    if bits.len() as u64 != params.message_len() {
        return Err(Error::LengthMismatch {
            expected: params.message_len() as usize,
            actual: bits.len(),
        });
    }
    let g = bits_to_int(bits) + 1;
    codeword_of(&g, params)
}

/// Recovers the message of a self-clocked codeword: the `s_c`-bit big-endian
/// form of `g(c) - 1`. Rejects the two unclocked words and any codeword
/// whose index exceeds `2^s_c` (valid but unused by the binary message map).
pub fn decode_codeword(c: &Codeword, params: &CodeParams) -> Result<Vec<bool>> {
    c.check_len(params)?;
    c.check_clocked()?;
    let g = index_of(c, params)?;
    if g < BigInt::one() || g > *params.message_bound() {
        return Err(Error::IndexOutOfMessageRange {
            index: g.to_string(),
        });
    }
    Ok(int_to_bits(&(g - 1), params.message_len()))
}

fn bits_to_int(bits: &[bool]) -> BigInt {
    let mut n = BigInt::zero();
    for &bit in bits {
        n <<= 1;
        if bit {
            n += 1;
        }
    }
    n
}

fn int_to_bits(n: &BigInt, width: u64) -> Vec<bool> {
    debug_assert!(n.bits() <= width);
    let magnitude = n.magnitude();
    (0..width).rev().map(|pos| magnitude.bit(pos)).collect()
}
