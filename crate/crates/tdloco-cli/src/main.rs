//! Command-line surface for the TD-LOCO coding scheme.
//!
//! Exit codes: 0 success, 1 usage error, 2 data or constraint error,
//! 3 verification failure.

use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use num_bigint::BigInt;

use tdloco::capacity::capacities;
use tdloco::enumeration::{self, cardinalities, k_eff, rates_4dp, CodeParams};
use tdloco::grid::{
    bits_to_bytes, bytes_to_bits, carve_frames, read_grid, scan_sis, write_grid, Frame, Grid,
};
use tdloco::oracle;
use tdloco::codec::index_of;

#[derive(Parser)]
#[command(
    name = "tdloco",
    version,
    about = "Constrained codes for two-dimensional magnetic recording"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the constraint capacities and the gap between them
    Capacity,
    /// Print the code parameters for one codeword length
    Params {
        /// Codeword length in symbols (>= 2)
        #[arg(long)]
        m: usize,
    },
    /// Print the rate/complexity table for a list of codeword lengths
    Tables {
        /// Comma-separated codeword lengths
        #[arg(long, value_delimiter = ',', default_value = "24,33,39,66,88,265")]
        m: Vec<usize>,
        /// Emit comma-separated values instead of an aligned table
        #[arg(long)]
        csv: bool,
    },
    /// Encode a binary file onto a track grid
    Encode {
        /// Codeword length in symbols (>= 2)
        #[arg(long)]
        m: usize,
        /// Number of tracks; each group of 3 carries an independent stream
        #[arg(long, default_value_t = 3)]
        tracks: usize,
        /// Input file; bits are consumed most significant first
        #[arg(long = "in", value_name = "FILE")]
        input: PathBuf,
        /// Output grid file: one '0'/'1' line per track
        #[arg(long, value_name = "GRID")]
        out: PathBuf,
    },
    /// Recover the binary file written on a track grid
    Decode {
        /// Codeword length in symbols (>= 2)
        #[arg(long)]
        m: usize,
        /// Input grid file
        #[arg(long = "in", value_name = "GRID")]
        input: PathBuf,
        /// Output file
        #[arg(long, value_name = "FILE")]
        out: PathBuf,
    },
    /// List square-isolation violations in a grid file
    Scan {
        /// Grid file to scan
        #[arg(long = "in", value_name = "GRID")]
        input: PathBuf,
    },
    /// Check closed forms against brute-force enumeration
    Verify {
        /// Largest codeword length to verify (at most 10)
        #[arg(long, default_value_t = 8)]
        max_m: usize,
    },
}

/// A failed run, carrying the exit code its class maps to.
enum Failure {
    Usage(String),
    Data(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Data(_) => 2,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Failure::Usage(msg) | Failure::Data(msg) => f.write_str(msg),
        }
    }
}

fn usage(err: impl fmt::Display) -> Failure {
    Failure::Usage(err.to_string())
}

fn data(err: impl fmt::Display) -> Failure {
    Failure::Data(err.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            let code = match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = err.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(failure) => {
            eprintln!("error: {failure}");
            ExitCode::from(failure.code())
        }
    }
}

fn dispatch(command: Command) -> Result<u8, Failure> {
    match command {
        Command::Capacity => capacity(),
        Command::Params { m } => params(m),
        Command::Tables { m, csv } => tables(&m, csv),
        Command::Encode {
            m,
            tracks,
            input,
            out,
        } => encode(m, tracks, &input, &out),
        Command::Decode { m, input, out } => decode(m, &input, &out),
        Command::Scan { input } => scan(&input),
        Command::Verify { max_m } => verify(max_m),
    }
}

fn capacity() -> Result<u8, Failure> {
    let (q8, q4) = capacities().map_err(data)?;
    println!(
        "Q8 constraint:      lambda = {:.4}   C  = {:.4} bits/symbol   normalized = {:.4}",
        q8.lambda, q8.capacity_bits, q8.normalized
    );
    println!(
        "Q4 overall scheme:  lambda = {:.4}   C' = {:.4} bits/symbol   normalized = {:.4}",
        q4.lambda, q4.capacity_bits, q4.normalized
    );
    // Difference of the reported (4-decimal) capacities.
    let gap = (q8.normalized * 1e4).round() as i64 - (q4.normalized * 1e4).round() as i64;
    println!(
        "normalized capacity gap: {:.4} ({:.2}% below the optimum)",
        gap as f64 / 1e4,
        gap as f64 / 100.0
    );
    Ok(0)
}

fn code_params(m: usize) -> Result<CodeParams, Failure> {
    CodeParams::new(m).map_err(usage)
}

fn params(m: usize) -> Result<u8, Failure> {
    let params = code_params(m)?;
    let (rate, normalized) = rates_4dp(m).map_err(usage)?;
    println!("m        {m}");
    println!("N(m)     {}", params.cardinality(m));
    println!("N(m)-2   {}", params.clocked_cardinality());
    println!("s_c      {} bits", params.message_len());
    println!("k_eff    {}", k_eff(m));
    println!("R        {rate}");
    println!("R_norm   {normalized}");
    Ok(0)
}

fn tables(lengths: &[usize], csv: bool) -> Result<u8, Failure> {
    if lengths.is_empty() {
        return Err(usage("tables needs at least one codeword length"));
    }
    if csv {
        println!("m, s_c, R, R_norm");
    } else {
        println!("{:>6}  {:>6}  {:>8}  {:>8}", "m", "s_c", "R", "R_norm");
    }
    for &m in lengths {
        let s_c = enumeration::message_length(m).map_err(usage)?;
        let (rate, normalized) = rates_4dp(m).map_err(usage)?;
        if csv {
            println!("{m}, {s_c}, {rate}, {normalized}");
        } else {
            println!("{m:>6}  {s_c:>6}  {rate:>8}  {normalized:>8}");
        }
    }
    Ok(0)
}

fn encode(m: usize, tracks: usize, input: &Path, out: &Path) -> Result<u8, Failure> {
    if tracks == 0 || !tracks.is_multiple_of(3) {
        return Err(usage(format!(
            "--tracks must be a positive multiple of 3, got {tracks}"
        )));
    }
    let params = code_params(m)?;
    let bytes = std::fs::read(input)
        .map_err(|e| data(format!("cannot read {}: {e}", input.display())))?;
    let bits = bytes_to_bits(&bytes);
    let (frames, residual) = carve_frames(&bits, &params);
    if residual > 0 {
        eprintln!(
            "warning: {residual} residual bits do not fill a {}-bit frame and were not written",
            params.frame_bits()
        );
    }
    let group_count = tracks / 3;
    if !frames.len().is_multiple_of(group_count) {
        return Err(data(format!(
            "{} frames cannot be split evenly across {group_count} track groups",
            frames.len()
        )));
    }
    let per_group = frames.len() / group_count;
    let groups: Vec<Vec<_>> = if frames.is_empty() {
        vec![Vec::new(); group_count]
    } else {
        frames.chunks(per_group).map(<[_]>::to_vec).collect()
    };
    let grid = write_grid(&groups, tracks, &params).map_err(data)?;
    std::fs::write(out, grid.to_text())
        .map_err(|e| data(format!("cannot write {}: {e}", out.display())))?;
    println!(
        "wrote {}x{} grid: {} frames, {} residual bits",
        grid.tracks(),
        grid.width(),
        frames.len(),
        residual
    );
    Ok(0)
}

fn read_grid_file(path: &Path) -> Result<Grid, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| data(format!("cannot read {}: {e}", path.display())))?;
    Grid::from_text(&text).map_err(data)
}

fn decode(m: usize, input: &Path, out: &Path) -> Result<u8, Failure> {
    let params = code_params(m)?;
    let grid = read_grid_file(input)?;
    let groups = read_grid(&grid, &params).map_err(data)?;
    let bits: Vec<bool> = groups.iter().flatten().flat_map(Frame::bits).collect();
    if !bits.len().is_multiple_of(8) {
        eprintln!(
            "warning: {} bits do not fill the last byte; zero-padded",
            bits.len() % 8
        );
    }
    std::fs::write(out, bits_to_bytes(&bits))
        .map_err(|e| data(format!("cannot write {}: {e}", out.display())))?;
    let frame_count: usize = groups.iter().map(Vec::len).sum();
    println!("decoded {} frames ({} bits)", frame_count, bits.len());
    Ok(0)
}

fn scan(input: &Path) -> Result<u8, Failure> {
    let grid = read_grid_file(input)?;
    let violations = scan_sis(&grid);
    for (group, column) in &violations {
        println!("group {group}, column {column}");
    }
    println!("{} violations", violations.len());
    Ok(if violations.is_empty() { 0 } else { 2 })
}

fn verify(max_m: usize) -> Result<u8, Failure> {
    if !(1..=oracle::MAX_M).contains(&max_m) {
        return Err(usage(format!(
            "--max-m must be between 1 and {}, got {max_m}",
            oracle::MAX_M
        )));
    }
    let card = cardinalities(max_m);
    let mut failed = false;
    let mut report = |check: &str, ok: bool| {
        if !ok {
            failed = true;
        }
        println!("{}: {check}", if ok { "ok" } else { "MISMATCH" });
    };

    for m in 1..=max_m {
        let words = oracle::enumerate(m).map_err(data)?;
        report(

            &format!("m={m} brute-force count {} vs N(m) {}", words.len(), card[m]),
            BigInt::from(words.len()) == card[m],
        );
        if m >= 2 {
            let params = code_params(m)?;
            let ranks_agree = words
                .iter()
                .enumerate()
                .all(|(rank, word)| index_of(word, &params).ok() == Some(BigInt::from(rank)));
            report(&format!("m={m} index rule equals rank on all words"), ranks_agree);
        }
        if m >= 4 {
            let (g1, g2, g3) = oracle::group_counts(m).map_err(data)?;
            let expected = (
                3 * &card[m - 1],
                &card[m - 1] - &card[m - 2],
                3 * &card[m - 3],
            );
            report(
                &format!("m={m} group counts ({g1}, {g2}, {g3})"),
                BigInt::from(g1) == expected.0
                    && BigInt::from(g2) == expected.1
                    && BigInt::from(g3) == expected.2,
            );
        }
    }
    if failed {
        println!("verification FAILED");
        Ok(3)
    } else {
        println!("verification passed up to m = {max_m}");
        Ok(0)
    }
}
