//! Constraint capacities from state-transition matrices.
//!
//! The capacity of a constrained code is `log2` of the Perron root of the
//! adjacency matrix of its transition diagram. Two diagrams matter here: the
//! 5-state one for the GF(8) constraint and the 3-state one for the GF(4)
//! constraint. Their matrices are embedded as constants; an independently
//! built De Bruijn-style adjacency over all length-2 state strings serves as
//! a cross-check, since a transcription slip in a literal matrix would
//! otherwise go unnoticed.

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use crate::error::{Error, Result};

/// Relative tolerance used when none is specified.
pub const DEFAULT_TOL: f64 = 1e-9;
/// Power iteration gives up after this many steps.
pub const MAX_ITERATIONS: usize = 1_000_000;

/// Square non-negative integer matrix: the adjacency matrix of a finite
/// state transition diagram.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TransitionMatrix {
    entries: Vec<Vec<u64>>,
}

/// The 5-state transition matrix of the GF(8) constraint.
pub fn q8_transition_matrix() -> TransitionMatrix {
    TransitionMatrix::new(vec![
        vec![6, 1, 1, 0, 0],
        vec![5, 1, 1, 1, 0],
        vec![5, 1, 1, 0, 1],
        vec![6, 0, 1, 0, 0],
        vec![6, 1, 0, 0, 0],
    ])
    .expect("embedded matrix is square")
}

/// The 3-state transition matrix of the GF(4) constraint.
pub fn q4_transition_matrix() -> TransitionMatrix {
    TransitionMatrix::new(vec![vec![3, 0, 1], vec![3, 0, 0], vec![2, 1, 1]])
        .expect("embedded matrix is square")
}

impl TransitionMatrix {
    pub fn new(entries: Vec<Vec<u64>>) -> Result<Self> {
        let n = entries.len();
        if n == 0 {
            return Err(Error::BadMatrix("empty matrix".to_owned()));
        }
        if entries.iter().any(|row| row.len() != n) {
            return Err(Error::BadMatrix(format!(
                "rows must all have length {n}"
            )));
        }
        Ok(TransitionMatrix { entries })
    }

    pub fn order(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Vec<u64>] {
        &self.entries
    }

    /// Strong connectivity of the positive-entry digraph (order 1 counts as
    /// irreducible).
    pub fn is_irreducible(&self) -> bool {
        let n = self.order();
        let reaches_all = |transpose: bool| {
            let mut seen = vec![false; n];
            let mut stack = vec![0usize];
            seen[0] = true;
            while let Some(i) = stack.pop() {
                for (j, visited) in seen.iter_mut().enumerate() {
                    let edge = if transpose {
                        self.entries[j][i]
                    } else {
                        self.entries[i][j]
                    };
                    if edge > 0 && !*visited {
                        *visited = true;
                        stack.push(j);
                    }
                }
            }
            seen.iter().all(|&s| s)
        };
        reaches_all(false) && reaches_all(true)
    }

    fn apply(&self, v: &[f64]) -> Vec<f64> {
        self.entries
            .iter()
            .map(|row| row.iter().zip(v).map(|(&a, &x)| a as f64 * x).sum())
            .collect()
    }

    /// Perron root via power iteration from the all-ones vector, stopping
    /// when successive Rayleigh-quotient estimates agree to within `tol`
    /// relative.
    pub fn dominant_eigenvalue(&self, tol: f64) -> Result<f64> {
        self.dominant_eigenvalue_with_start(&vec![1.0; self.order()], tol)
    }

    /// Same, from a caller-supplied strictly positive start vector. The
    /// result does not depend on the start (up to `tol`), only the
    /// iteration count does.
    pub fn dominant_eigenvalue_with_start(&self, start: &[f64], tol: f64) -> Result<f64> {
        let n = self.order();
        if start.len() != n {
            return Err(Error::LengthMismatch {
                expected: n,
                actual: start.len(),
            });
        }
        if start.iter().any(|&x| !x.is_finite() || x <= 0.0) {
            return Err(Error::BadMatrix(
                "start vector must be strictly positive".to_owned(),
            ));
        }
        if self.entries.iter().flatten().all(|&a| a == 0) {
            return Err(Error::BadMatrix("all-zero matrix".to_owned()));
        }

        let scale = start.iter().cloned().fold(f64::MIN, f64::max);
        let mut v: Vec<f64> = start.iter().map(|&x| x / scale).collect();
        let mut previous = f64::NAN;
        for _ in 0..MAX_ITERATIONS {
            let w = self.apply(&v);
            let vw: f64 = v.iter().zip(&w).map(|(a, b)| a * b).sum();
            let vv: f64 = v.iter().map(|a| a * a).sum();
            let estimate = vw / vv;
            if (estimate - previous).abs() <= tol * estimate.abs() {
                return Ok(estimate);
            }
            previous = estimate;
            let peak = w.iter().cloned().fold(f64::MIN, f64::max);
            if !peak.is_finite() || peak <= 0.0 {
                return Err(Error::BadMatrix(
                    "matrix annihilates the iteration vector".to_owned(),
                ));
            }
            v = w.into_iter().map(|x| x / peak).collect();
        }
        Err(Error::NonConvergence {
            iterations: MAX_ITERATIONS,
        })
    }
}

/// Adjacency matrix of the graph whose states are all length-2 strings over
/// an alphabet of `alphabet_size` levels, with an edge `xy → yz` iff the
/// triple `xyz` is not forbidden. Its Perron root equals that of the lumped
/// transition diagram for the same constraint.
pub fn build_constraint_adjacency(
    alphabet_size: usize,
    forbidden: &[[u8; 3]],
) -> Result<TransitionMatrix> {
    if alphabet_size == 0 {
        return Err(Error::BadMatrix("empty alphabet".to_owned()));
    }
    for pattern in forbidden {
        for &level in pattern {
            if level as usize >= alphabet_size {
                return Err(Error::InvalidLevel {
                    field: alphabet_size as u8,
                    level,
                });
            }
        }
    }
    let q = alphabet_size;
    let mut entries = vec![vec![0u64; q * q]; q * q];
    for x in 0..q {
        for y in 0..q {
            for z in 0..q {
                let banned = forbidden
                    .iter()
                    .any(|p| p == &[x as u8, y as u8, z as u8]);
                if !banned {
                    entries[x * q + y][y * q + z] = 1;
                }
            }
        }
    }
    TransitionMatrix::new(entries)
}

/// Capacity figures derived from one transition matrix.
#[derive(Clone, Copy, Debug)]
pub struct CapacityReport {
    /// Dominant eigenvalue of the transition matrix.
    pub lambda: f64,
    /// `log2(lambda)`, in information bits per coded symbol.
    pub capacity_bits: f64,
    /// Capacity per written grid bit (each symbol occupies 3 bits).
    pub normalized: f64,
}

/// Capacities of the GF(8) constraint and of the overall GF(4)-plus-selection
/// scheme. The GF(4) scheme's normalized capacity adds the free selection bit
/// before dividing by the 3 bits per column: `(C' + 1) / 3`.
pub fn capacities() -> Result<(CapacityReport, CapacityReport)> {
    let lambda8 = q8_transition_matrix().dominant_eigenvalue(DEFAULT_TOL)?;
    let c8 = lambda8.log2();
    let q8 = CapacityReport {
        lambda: lambda8,
        capacity_bits: c8,
        normalized: c8 / 3.0,
    };
    let lambda4 = q4_transition_matrix().dominant_eigenvalue(DEFAULT_TOL)?;
    let c4 = lambda4.log2();
    let q4 = CapacityReport {
        lambda: lambda4,
        capacity_bits: c4,
        normalized: (c4 + 1.0) / 3.0,
    };
    Ok((q8, q4))
}

/// `log2` of a positive big integer, exact to f64 precision.
pub fn log2_bigint(n: &BigInt) -> f64 {
    assert!(n.is_positive(), "log2 needs a positive value");
    let bits = n.bits();
    if bits <= 53 {
        n.to_f64().expect("fits in f64").log2()
    } else {
        let shift = bits - 53;
        let top = (n >> shift).to_f64().expect("53 bits fit in f64");
        top.log2() + shift as f64
    }
}
