//! Constrained codes for two-dimensional magnetic recording (TDMR).
//!
//! When tracks are squeezed together, a bit surrounded by its complement in
//! all eight positions of a 3×3 window — a square-isolation (SIS) pattern —
//! is highly likely to be misread. With a wide head reading three tracks at
//! once, only windows centered on the middle track of each track group
//! matter, and the two-dimensional constraint collapses to a one-dimensional
//! one: write each column of 3 bits as a GF(8) symbol and forbid the two
//! symbol triples `0β0` and `β⁶β⁴β⁶`.
//!
//! This crate implements the TD-LOCO construction over that idea:
//!
//! - [`symbols`]: the GF(8) column alphabet, the GF(4) code alphabet, and
//!   the pairing between them that frees one information bit per column;
//! - [`enumeration`]: exact codeword counts `N(m)`, message lengths, and
//!   scheme rates, on arbitrary-precision integers;
//! - [`codec`]: the closed-form lexicographic index and the message ↔
//!   codeword encoder/decoder built on it;
//! - [`stream`]: bridging between codewords and the self-clocking
//!   guarantee;
//! - [`grid`]: writing streams plus selection bits onto the track grid,
//!   reading them back, and scanning for SIS violations;
//! - [`capacity`]: constraint capacities via dominant eigenvalues;
//! - [`oracle`]: brute-force enumeration and ranking for small lengths,
//!   against which the closed forms are verified.

pub mod capacity;
pub mod codec;
pub mod enumeration;
pub mod error;
pub mod grid;
pub mod oracle;
pub mod stream;
pub mod symbols;

pub use codec::Codeword;
pub use enumeration::CodeParams;
pub use error::{Error, Result};
pub use grid::{Frame, Grid};
pub use stream::SymbolStream;
pub use symbols::{Column, Gf4Symbol, Gf8Symbol};
