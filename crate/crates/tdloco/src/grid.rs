//! Writing bridged streams onto the track grid and reading them back.
//!
//! Tracks come in independent groups of three (the read head spans a group;
//! inter-track interference across group boundaries is negligible). Within a
//! group, each stream symbol is remapped to GF(8) by its selection bit and
//! written as a 3-bit column, top track first. A frame therefore consumes
//! `s_c + m + 1` input bits — the message plus one selection bit for each of
//! the `m + 1` frame symbols, bridge included — and produces `m + 1` columns.
//!
//! [`scan_sis`] is the system-level check: a written grid must contain no
//! square-isolation pattern centered on any group's middle track.

use crate::codec::{decode_codeword, encode_message};
use crate::enumeration::CodeParams;
use crate::error::{Error, Result};
use crate::stream::{assemble, disassemble};
use crate::symbols::{Column, Gf4Symbol};

/// One frame of input: the binary message and the selection bits for the
/// codeword symbols plus the frame's bridge symbol.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Frame {
    pub message: Vec<bool>,
    pub selections: Vec<bool>,
}

impl Frame {
    fn check(&self, params: &CodeParams) -> Result<()> {
        if self.message.len() as u64 != params.message_len() {
            return Err(Error::LengthMismatch {
                expected: params.message_len() as usize,
                actual: self.message.len(),
            });
        }
        if self.selections.len() != params.frame_len() {
            return Err(Error::LengthMismatch {
                expected: params.frame_len(),
                actual: self.selections.len(),
            });
        }
        Ok(())
    }

    /// The frame's bits in input order: message first, then selections.
    pub fn bits(&self) -> impl Iterator<Item = bool> + '_ {
        self.message
            .iter()
            .chain(self.selections.iter())
            .copied()
    }
}

/// The recording medium: `tracks` rows (a multiple of 3) by `width` columns
/// of bits.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Grid {
    tracks: usize,
    width: usize,
    bits: Vec<Vec<bool>>,
}

impl Grid {
    pub fn new(bits: Vec<Vec<bool>>) -> Result<Self> {
        let tracks = bits.len();
        if !tracks.is_multiple_of(3) {
            return Err(Error::GridShape(format!(
                "{tracks} tracks, not a multiple of 3"
            )));
        }
        let width = bits.first().map_or(0, Vec::len);
        if bits.iter().any(|row| row.len() != width) {
            return Err(Error::GridShape("tracks differ in length".to_owned()));
        }
        Ok(Grid {
            tracks,
            width,
            bits,
        })
    }

    pub fn tracks(&self) -> usize {
        self.tracks
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn group_count(&self) -> usize {
        self.tracks / 3
    }

    pub fn bit(&self, track: usize, column: usize) -> bool {
        self.bits[track][column]
    }

    /// One line per track, `0`/`1` characters, no separators.
    pub fn to_text(&self) -> String {
        let mut out = String::with_capacity(self.tracks * (self.width + 1));
        for row in &self.bits {
            out.extend(row.iter().map(|&b| if b { '1' } else { '0' }));
            out.push('\n');
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let bits = text
            .lines()
            .map(|line| {
                line.chars()
                    .map(|c| match c {
                        '0' => Ok(false),
                        '1' => Ok(true),
                        other => Err(Error::GridShape(format!(
                            "unexpected character `{other}`"
                        ))),
                    })
                    .collect()
            })
            .collect::<Result<Vec<Vec<bool>>>>()?;
        Grid::new(bits)
    }
}

/// Remaps each GF(4) symbol with its selection bit and writes the chosen
/// GF(8) symbol as a column.
pub fn map_symbols_to_columns(
    symbols: &[Gf4Symbol],
    selections: &[bool],
) -> Result<Vec<Column>> {
    if symbols.len() != selections.len() {
        return Err(Error::LengthMismatch {
            expected: symbols.len(),
            actual: selections.len(),
        });
    }
    Ok(symbols
        .iter()
        .zip(selections)
        .map(|(&s, &b)| s.remap(b).column())
        .collect())
}

/// Inverse of [`map_symbols_to_columns`]: recovers the GF(4) symbols and the
/// selection bits.
pub fn unmap_columns(columns: &[Column]) -> (Vec<Gf4Symbol>, Vec<bool>) {
    columns.iter().map(|c| c.symbol().demap()).unzip()
}

/// Encodes, bridges and remaps a group's frames into its column sequence.
pub fn write_group(frames: &[Frame], params: &CodeParams) -> Result<Vec<Column>> {
    let codewords = frames
        .iter()
        .map(|f| {
            f.check(params)?;
            encode_message(&f.message, params)
        })
        .collect::<Result<Vec<_>>>()?;
    let stream = assemble(&codewords)?;
    let selections: Vec<bool> = frames
        .iter()
        .flat_map(|f| f.selections.iter().copied())
        .collect();
    map_symbols_to_columns(stream.symbols(), &selections)
}

/// Inverse of [`write_group`]: recovers each frame's message and all
/// `m + 1` selection bits.
pub fn read_group(columns: &[Column], params: &CodeParams) -> Result<Vec<Frame>> {
    let frame = params.frame_len();
    if !columns.len().is_multiple_of(frame) {
        return Err(Error::Framing {
            len: columns.len(),
            frame,
        });
    }
    let (symbols, selections) = unmap_columns(columns);
    let codewords = disassemble(&symbols, params.m())?;
    codewords
        .iter()
        .enumerate()
        .map(|(k, word)| {
            Ok(Frame {
                message: decode_codeword(word, params)?,
                selections: selections[k * frame..(k + 1) * frame].to_vec(),
            })
        })
        .collect()
}

/// Writes one frame sequence per track group. Group `g` occupies tracks
/// `3g`, `3g + 1`, `3g + 2`; groups must produce equally many columns so the
/// grid is rectangular.
pub fn write_grid(
    groups: &[Vec<Frame>],
    tracks: usize,
    params: &CodeParams,
) -> Result<Grid> {
    if !tracks.is_multiple_of(3) || tracks / 3 != groups.len() {
        return Err(Error::TrackCountMismatch {
            tracks,
            groups: groups.len(),
        });
    }
    let columns_per_group = groups
        .iter()
        .map(|frames| write_group(frames, params))
        .collect::<Result<Vec<_>>>()?;
    let width = columns_per_group.first().map_or(0, Vec::len);
    if columns_per_group.iter().any(|c| c.len() != width) {
        return Err(Error::GridShape(
            "groups produce different column counts".to_owned(),
        ));
    }
    let mut bits = Vec::with_capacity(tracks);
    for columns in &columns_per_group {
        bits.push(columns.iter().map(|c| c.top).collect());
        bits.push(columns.iter().map(|c| c.middle).collect());
        bits.push(columns.iter().map(|c| c.bottom).collect());
    }
    Grid::new(bits)
}

/// Inverse of [`write_grid`]: frames per group.
pub fn read_grid(grid: &Grid, params: &CodeParams) -> Result<Vec<Vec<Frame>>> {
    (0..grid.group_count())
        .map(|g| {
            let columns: Vec<Column> = (0..grid.width())
                .map(|j| {
                    Column::new(
                        grid.bit(3 * g, j),
                        grid.bit(3 * g + 1, j),
                        grid.bit(3 * g + 2, j),
                    )
                })
                .collect();
            read_group(&columns, params)
        })
        .collect()
}

/// Reports every square-isolation pattern whose center sits on the middle
/// track of a group: `(group, column)` for each 3×3 window equal to a lone 1
/// among 0s or a lone 0 among 1s. The wide head is centered only on middle
/// tracks, so those are the only windows that matter.
pub fn scan_sis(grid: &Grid) -> Vec<(usize, usize)> {
    let mut violations = Vec::new();
    for g in 0..grid.group_count() {
        for j in 1..grid.width().saturating_sub(1) {
            let center = grid.bit(3 * g + 1, j);
            let isolated = (0..3).all(|dt| {
                (0..3).all(|dj| {
                    (dt, dj) == (1, 1) || grid.bit(3 * g + dt, j - 1 + dj) == !center
                })
            });
            if isolated {
                violations.push((g, j));
            }
        }
    }
    violations
}

/// Carves a bitstream into whole frames of `s_c + m + 1` bits (message
/// first, then selections) and returns them with the count of leftover bits.
pub fn carve_frames(bits: &[bool], params: &CodeParams) -> (Vec<Frame>, usize) {
    let s_c = params.message_len() as usize;
    let frames = bits
        .chunks_exact(params.frame_bits())
        .map(|chunk| Frame {
            message: chunk[..s_c].to_vec(),
            selections: chunk[s_c..].to_vec(),
        })
        .collect();
    (frames, bits.len() % params.frame_bits())
}

/// Bits of a byte stream, most significant bit of each byte first.
pub fn bytes_to_bits(bytes: &[u8]) -> Vec<bool> {
    bytes
        .iter()
        .flat_map(|&b| (0..8).rev().map(move |k| b >> k & 1 == 1))
        .collect()
}

/// Packs bits into bytes, zero-padding the final partial byte.
pub fn bits_to_bytes(bits: &[bool]) -> Vec<u8> {
    bits.chunks(8)
        .map(|chunk| {
            chunk
                .iter()
                .enumerate()
                .fold(0u8, |acc, (k, &bit)| acc | (bit as u8) << (7 - k))
        })
        .collect()
}
