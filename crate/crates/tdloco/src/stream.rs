//! Bridged, self-clocked symbol streams.
//!
//! Codewords cannot simply abut: `…α` followed by `²0α²…` could complete the
//! forbidden pattern across the boundary. One bridging symbol is inserted
//! after every codeword — `α²` when both neighbouring symbols are `α²`,
//! otherwise `0` — which provably keeps the whole stream valid. Because the
//! all-0 and all-α² codewords are removed from the code, a bridged stream
//! also self-clocks: no run of identical symbols can exceed `2m - 1`.

use std::fmt;

use crate::codec::Codeword;
use crate::error::{Error, Result};
use crate::symbols::{contains_forbidden, Gf4Symbol};

/// A bridged sequence of codewords: `frame_len = m + 1` symbols per frame,
/// the last one the bridge.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SymbolStream {
    symbols: Vec<Gf4Symbol>,
    frame_len: usize,
}

impl SymbolStream {
    pub fn symbols(&self) -> &[Gf4Symbol] {
        &self.symbols
    }

    pub fn into_symbols(self) -> Vec<Gf4Symbol> {
        self.symbols
    }

    /// Symbols per frame (`m + 1`); zero for the empty stream.
    pub fn frame_len(&self) -> usize {
        self.frame_len
    }

    pub fn frame_count(&self) -> usize {
        self.symbols.len().checked_div(self.frame_len).unwrap_or(0)
    }
}

impl fmt::Display for SymbolStream {
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

/// The symbol written between two codewords: `α²` iff the first codeword
/// ends with `α²` and the next begins with `α²`, else `0`.
pub fn bridge_symbol(prev_rms: Gf4Symbol, next_lms: Gf4Symbol) -> Gf4Symbol {
    if prev_rms == Gf4Symbol::AlphaSq && next_lms == Gf4Symbol::AlphaSq {
        Gf4Symbol::AlphaSq
    } else {
        Gf4Symbol::Zero
    }
}

/// Joins self-clocked codewords of equal length into one bridged stream.
///
/// Every codeword is followed by a bridge, the final one by a `0` bridge
/// (there is no successor to clash with), so the stream is exactly
/// `k · (m + 1)` symbols and framing needs no state.
pub fn assemble(codewords: &[Codeword]) -> Result<SymbolStream> {
    let Some(first) = codewords.first() else {
        return Ok(SymbolStream {
            symbols: Vec::new(),
            frame_len: 0,
        });
    };
    let m = first.len();
    let mut symbols = Vec::with_capacity(codewords.len() * (m + 1));
    for (k, word) in codewords.iter().enumerate() {
        if word.len() != m {
            return Err(Error::LengthMismatch {
                expected: m,
                actual: word.len(),
            });
        }
        word.check_clocked()?;
        symbols.extend_from_slice(word.symbols());
        let bridge = match codewords.get(k + 1) {
            Some(next) => bridge_symbol(
                *word.symbols().last().expect("clocked words are non-empty"),
                next.symbols()[0],
            ),
            None => Gf4Symbol::Zero,
        };
        symbols.push(bridge);
    }
    debug_assert!(!contains_forbidden(&symbols));
    Ok(SymbolStream {
        symbols,
        frame_len: m + 1,
    })
}

/// Splits a stream back into codewords: frames of `m + 1` symbols, the
/// bridge at the end of each frame dropped.
pub fn disassemble(symbols: &[Gf4Symbol], m: usize) -> Result<Vec<Codeword>> {
    if m == 0 {
        return Err(Error::UnsupportedLength {
            m,
            reason: "framing needs m >= 1",
        });
    }
    let frame = m + 1;
    if !symbols.len().is_multiple_of(frame) {
        return Err(Error::Framing {
            len: symbols.len(),
            frame,
        });
    }
    symbols
        .chunks_exact(frame)
        .map(|chunk| Codeword::new(chunk[..m].to_vec()))
        .collect()
}

/// Length of the longest run of equal consecutive items.
pub fn longest_run<T: PartialEq>(items: &[T]) -> usize {
    let mut best = 0;
    let mut current = 0;
    for (k, item) in items.iter().enumerate() {
        if k > 0 && items[k - 1] == *item {
            current += 1;
        } else {
            current = 1;
        }
        best = best.max(current);
    }
    best
}
