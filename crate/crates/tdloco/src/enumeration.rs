//! Exact enumeration of the constrained code and the derived scheme rates.
//!
//! `N(m)`, the number of length-`m` GF(4) words avoiding `α²0α²`, satisfies
//!
//! ```text
//! N(m) = 4 N(m-1) - N(m-2) + 3 N(m-3),   N(0) = 1, N(1) = 4, N(2) = 16.
//! ```
//!
//! Hard-coding `N(2) = 16` keeps the base cases integral (the recursion's
//! bookkeeping value `N(-1) = 1/3` never has to exist at runtime). `N(265)`
//! already has around 160 decimal digits, so everything is computed on
//! arbitrary-precision integers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Precomputed per-`m` tables used by the codec: cardinalities, inner sums
/// and the message length. Immutable once built; encode/decode only read it.
#[derive(Clone, Debug)]
pub struct CodeParams {
    m: usize,
    card: Vec<BigInt>,
    inner_sum: Vec<BigInt>,
    s_c: u64,
    msg_bound: BigInt,
}

impl CodeParams {
    /// Builds the tables for codeword length `m` (at least 2; indexing is
    /// degenerate below that).
    pub fn new(m: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::UnsupportedLength {
                m,
                reason: "the codec requires m >= 2",
            });
        }
        let card = cardinalities(m);
        let inner_sum = (0..m).map(|i| inner_sum_from(&card, i)).collect();
        let s_c = message_length_from(&card[m]);
        let msg_bound = BigInt::one() << s_c;
        Ok(CodeParams {
            m,
            card,
            inner_sum,
            s_c,
            msg_bound,
        })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// `N(i)` for `0 <= i <= m`.
    pub fn cardinality(&self, i: usize) -> &BigInt {
        &self.card[i]
    }

    /// `N(m) - 2`: the self-clocked code size, with the all-0 and all-α²
    /// codewords removed.
    pub fn clocked_cardinality(&self) -> BigInt {
        &self.card[self.m] - 2
    }

    /// The signed inner sum `-N(i-1) + N(i-3) - N(i-5) + …` for `0 <= i < m`.
    pub fn inner_sum(&self, i: usize) -> &BigInt {
        &self.inner_sum[i]
    }

    /// Message length `s_c = floor(log2(N(m) - 2))` in bits.
    pub fn message_len(&self) -> u64 {
        self.s_c
    }

    /// `2^s_c`, the largest codeword index a message can reach
    /// (`decimal(b) + 1 <= 2^s_c <= N(m) - 2`).
    pub fn message_bound(&self) -> &BigInt {
        &self.msg_bound
    }

    /// Symbols per frame: one codeword plus its bridging symbol.
    pub fn frame_len(&self) -> usize {
        self.m + 1
    }

    /// Input bits per frame: `s_c` message bits plus one selection bit per
    /// frame symbol.
    pub fn frame_bits(&self) -> usize {
        self.s_c as usize + self.m + 1
    }
}

/// The table `N(0), …, N(up_to)`.
pub fn cardinalities(up_to: usize) -> Vec<BigInt> {
    let mut card = Vec::with_capacity(up_to + 1);
    card.push(BigInt::from(1));
    if up_to >= 1 {
        card.push(BigInt::from(4));
    }
    if up_to >= 2 {
        card.push(BigInt::from(16));
    }
    for i in 3..=up_to {
        let n = 4 * &card[i - 1] - &card[i - 2] + 3 * &card[i - 3];
        card.push(n);
    }
    card
}

/// `N(m)`: the number of valid length-`m` words.
pub fn cardinality(m: usize) -> BigInt {
    cardinalities(m).pop().expect("table is never empty")
}

/// `N(m) - 2` (requires `m >= 1` so the two removed codewords exist).
pub fn clocked_cardinality(m: usize) -> Result<BigInt> {
    if m < 1 {
        return Err(Error::UnsupportedLength {
            m,
            reason: "self-clocking removes two codewords, needs m >= 1",
        });
    }
    Ok(cardinality(m) - 2)
}

fn inner_sum_from(card: &[BigInt], i: usize) -> BigInt {
    let mut sum = BigInt::zero();
    let mut j = 0usize;
    while i > 2 * j {
        let term = &card[i - 2 * j - 1];
        if j.is_multiple_of(2) {
            sum -= term;
        } else {
            sum += term;
        }
        j += 1;
    }
    sum
}

/// The alternating sum `sum_{j >= 0, i-2j > 0} (-1)^(j+1) N(i-2j-1)`;
/// zero for `i = 0` (empty index range). Never positive.
pub fn inner_sum(i: usize) -> BigInt {
    let card = cardinalities(i.saturating_sub(1));
    inner_sum_from(&card, i)
}

fn message_length_from(n_m: &BigInt) -> u64 {
    // floor(log2(N(m) - 2)), exact: bit length minus one.
    (n_m - BigInt::from(2)).bits() - 1
}

/// `s_c = floor(log2(N(m) - 2))`, the per-codeword message length in bits.
pub fn message_length(m: usize) -> Result<u64> {
    if m < 2 {
        return Err(Error::UnsupportedLength {
            m,
            reason: "message length is defined for m >= 2",
        });
    }
    Ok(message_length_from(&cardinality(m)))
}

/// Longest possible run of identical symbols across a bridged stream:
/// `2(m - 1) + 1`.
pub fn k_eff(m: usize) -> usize {
    assert!(m >= 1, "k_eff requires m >= 1");
    2 * m - 1
}

/// An exact non-negative rational, kept unrounded until presentation.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Rate {
    pub numer: u64,
    pub denom: u64,
}

impl Rate {
    pub fn to_f64(self) -> f64 {
        self.numer as f64 / self.denom as f64
    }

    /// The value in ten-thousandths, rounded half-up — exact integer
    /// arithmetic, so presentation is deterministic.
    pub fn ten_thousandths(self) -> u64 {
        (u128::from(self.numer) * 20_000 + u128::from(self.denom))
            .checked_div(2 * u128::from(self.denom))
            .expect("nonzero denominator") as u64
    }
}

fn format_4dp(ten_thousandths: u64) -> String {
    format!("{}.{:04}", ten_thousandths / 10_000, ten_thousandths % 10_000)
}

/// Scheme rate `s_c / (m + 1) + 1` in information bits per coded symbol:
/// `s_c` message bits amortized over the `m + 1` frame symbols, plus the
/// selection bit each symbol carries.
pub fn rate(m: usize) -> Result<Rate> {
    let s_c = message_length(m)?;
    Ok(Rate {
        numer: s_c + m as u64 + 1,
        denom: m as u64 + 1,
    })
}

/// [`rate`] divided by 3, in information bits per written grid bit.
pub fn normalized_rate(m: usize) -> Result<Rate> {
    let r = rate(m)?;
    Ok(Rate {
        numer: r.numer,
        denom: 3 * r.denom,
    })
}

/// Four-decimal presentation `(rate, normalized rate)` used by the rate
/// tables. The normalized rate is rounded half-up at four decimals and the
/// rate column is 3 × that value, so the two printed columns agree exactly.
pub fn rates_4dp(m: usize) -> Result<(String, String)> {
    let norm = normalized_rate(m)?.ten_thousandths();
    Ok((format_4dp(3 * norm), format_4dp(norm)))
}

/// Presentation helper for a single 4-decimal value.
pub fn format_ten_thousandths(value: u64) -> String {
    format_4dp(value)
}
