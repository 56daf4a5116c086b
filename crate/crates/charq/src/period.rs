//! Smith normal form over the integers, elementary divisors of column
//! submatrices, the lcm period of an arrangement, and period-collapse
//! reporting.
//!
//! The lcm period of an arrangement with coefficient matrix `A` is the
//! lcm, over all nonempty column subsets `J`, of the largest elementary
//! divisor of `A_J`. Offsets play no part in it. The subset enumeration
//! is exact and exponential, guarded by a hard cap on the column count.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::arrangement::Arrangement;
use crate::counting::count_complement;
use crate::polyalg::{build_quasipoly, PolyError, QuasiPolynomial, SampleWindow};

/// Default cap on the number of columns admitted to subset enumeration.
pub const DEFAULT_SUBSET_BIT_CAP: u32 = 24;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PeriodError {
    /// More columns than the subset enumeration cap allows.
    SubsetCapExceeded { columns: usize, cap: u32 },
    /// The running lcm left the u64 range.
    PeriodOverflow,
    /// Quasi-polynomial construction failed.
    Quasi(PolyError),
}

impl fmt::Display for PeriodError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PeriodError::SubsetCapExceeded { columns, cap } => write!(
                f,
                "{columns} columns exceed the subset enumeration cap of {cap}; \
                 raise the cap or supply the lcm period externally"
            ),
            PeriodError::PeriodOverflow => write!(f, "lcm period exceeds u64"),
            PeriodError::Quasi(e) => write!(f, "quasi-polynomial construction failed: {e}"),
        }
    }
}

impl std::error::Error for PeriodError {}

impl From<PolyError> for PeriodError {
    fn from(e: PolyError) -> Self {
        PeriodError::Quasi(e)
    }
}

/// Elementary divisors `e_1 | e_2 | ... | e_rank` of an integer matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SnfResult {
    pub divisors: Vec<u64>,
    pub rank: usize,
}

/// Smith normal form by gcd row/column reduction. The pivot is always the
/// smallest-absolute-value nonzero entry of the remaining submatrix,
/// scanned row-major, so intermediate states are reproducible.
#[allow(clippy::needless_range_loop)]
pub fn smith_normal_form(matrix: &[Vec<i64>]) -> SnfResult {
    assert!(!matrix.is_empty() && !matrix[0].is_empty(), "matrix must be nonempty");
    let rows = matrix.len();
    let cols = matrix[0].len();
    assert!(matrix.iter().all(|r| r.len() == cols), "ragged matrix");

    let mut w: Vec<Vec<i128>> =
        matrix.iter().map(|r| r.iter().map(|&v| v as i128).collect()).collect();

    let mut divisors = Vec::new();
    let mut t = 0usize;
    while t < rows.min(cols) {
        // Deterministic pivot scan.
        let mut pivot: Option<(usize, usize)> = None;
        for i in t..rows {
            for j in t..cols {
                if w[i][j] != 0
                    && pivot.is_none_or(|(pi, pj)| w[i][j].abs() < w[pi][pj].abs())
                {
                    pivot = Some((i, j));
                }
            }
        }
        let Some((pi, pj)) = pivot else { break };
        w.swap(t, pi);
        for row in &mut w {
            row.swap(t, pj);
        }

        loop {
            let mut dirty = false;
            for i in t + 1..rows {
                if w[i][t] != 0 {
                    let quot = w[i][t] / w[t][t];
                    for j in t..cols {
                        w[i][j] -= quot * w[t][j];
                    }
                    if w[i][t] != 0 {
                        // Remainder became the smaller pivot candidate.
                        w.swap(t, i);
                        dirty = true;
                    }
                }
            }
            for j in t + 1..cols {
                if w[t][j] != 0 {
                    let quot = w[t][j] / w[t][t];
                    for row in w.iter_mut() {
                        let sub = quot * row[t];
                        row[j] -= sub;
                    }
                    if w[t][j] != 0 {
                        for row in &mut w {
                            row.swap(t, j);
                        }
                        dirty = true;
                    }
                }
            }
            if dirty {
                continue;
            }
            // Row and column are clear; enforce divisibility of the rest.
            let mut fixed = true;
            'scan: for i in t + 1..rows {
                for j in t + 1..cols {
                    if w[i][j] % w[t][t] != 0 {
                        for jj in t..cols {
                            w[t][jj] += w[i][jj];
                        }
                        fixed = false;
                        break 'scan;
                    }
                }
            }
            if fixed {
                break;
            }
        }
        divisors.push(w[t][t].unsigned_abs() as u64);
        t += 1;
    }
    let rank = divisors.len();
    SnfResult { divisors, rank }
}

fn lcm_u64(a: u64, b: u64) -> Option<u64> {
    if a == 0 || b == 0 {
        return Some(0);
    }
    (a / a.gcd(&b)).checked_mul(b)
}

/// The lcm period of an arrangement: lcm over all nonempty column subsets
/// of the largest elementary divisor of the chosen columns.
pub fn lcm_period(arr: &Arrangement, subset_bit_cap: u32) -> Result<u64, PeriodError> {
    let columns = arr.coefficient_columns();
    let n = columns.len();
    if n == 0 {
        return Ok(1);
    }
    if n > subset_bit_cap as usize {
        return Err(PeriodError::SubsetCapExceeded { columns: n, cap: subset_bit_cap });
    }
    let m = arr.dim();
    let mut period = 1u64;
    for mask in 1u64..(1u64 << n) {
        let chosen: Vec<usize> = (0..n).filter(|&j| mask & (1 << j) != 0).collect();
        let mut sub = vec![vec![0i64; chosen.len()]; m];
        for (jj, &j) in chosen.iter().enumerate() {
            for i in 0..m {
                sub[i][jj] = columns[j][i];
            }
        }
        let snf = smith_normal_form(&sub);
        if let Some(&last) = snf.divisors.last() {
            period = lcm_u64(period, last).ok_or(PeriodError::PeriodOverflow)?;
        }
    }
    Ok(period)
}

/// lcm period, minimum period, and the interpolated quasi-polynomial of
/// an arrangement's complement count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CollapseReport {
    pub lcm_period: u64,
    pub min_period: u64,
    pub collapses: bool,
    pub quasipoly: QuasiPolynomial,
}

/// Build the complement-count quasi-polynomial at the arrangement's lcm
/// period and report whether the period collapses.
pub fn collapse_report(
    arr: &Arrangement,
    window: SampleWindow,
    subset_bit_cap: u32,
) -> Result<CollapseReport, PeriodError> {
    let rho = lcm_period(arr, subset_bit_cap)?;
    collapse_report_with_period(arr, rho, window)
}

/// Same as [`collapse_report`] with an externally supplied lcm period,
/// for arrangements whose column count exceeds the enumeration cap.
pub fn collapse_report_with_period(
    arr: &Arrangement,
    lcm_period: u64,
    window: SampleWindow,
) -> Result<CollapseReport, PeriodError> {
    let qp = build_quasipoly(
        |q| BigInt::from(count_complement(arr, q).value),
        lcm_period as usize,
        window,
    )?;
    let min_period = qp.minimum_period() as u64;
    Ok(CollapseReport {
        lcm_period,
        min_period,
        collapses: min_period < lcm_period,
        quasipoly: qp,
    })
}

/// The default sampling window for an arrangement of the given dimension:
/// start just above the regime where every closed-form factor considered
/// in this crate stays at least 2, with degree bound `m`.
pub fn default_window(dim: usize) -> SampleWindow {
    SampleWindow::new(2 * dim as u64 + 3, dim)
}
