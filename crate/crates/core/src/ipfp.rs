//! Classical iterative proportional fitting over an n-by-2 table.
//!
//! Corresponding edge-length pairs `(l_i(h), l_j(h))` form the rows of
//! a table whose row totals `T_h = l_i(h) + l_j(h)` and column totals
//! `C_1 = sum l_i`, `C_2 = sum l_j` are the marginals to be matched.
//! Starting from an all-ones seed, row fitting and column fitting
//! alternate until every achieved marginal is within tolerance of its
//! target. The converged rows all share the column ratio `m`, so they
//! lie on the origin line `y = mx`.
//!
//! With the all-ones seed the procedure has a closed form: one row fit
//! followed by one column fit already satisfies both marginal sets,
//! giving `l_i'(h) = T_h C_1 / (C_1 + C_2)` and `m = C_2 / C_1`.
//! [`closed_form_fit`] exposes that route as an independent check on
//! the iterative one.

use serde::Serialize;
use thiserror::Error;

/// Iteration cap for the alternating fit.
pub const MAX_ITERATIONS: u32 = 100;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum IpfpError {
    #[error("length list arity mismatch: {first} vs {second}")]
    ArityMismatch { first: usize, second: usize },
    #[error("length lists are empty")]
    Empty,
    #[error("nonpositive length at index {index}: {value}")]
    NonpositiveLength { index: usize, value: f64 },
    #[error("zero row sum at row {0}")]
    ZeroRowSum(usize),
    #[error("zero column sum at column {0}")]
    ZeroColumnSum(usize),
    #[error("no convergence after {iterations} iterations (residual {residual})")]
    NoConvergence { iterations: u32, residual: f64 },
}

/// Result of fitting the origin line `y = mx` to edge-length pairs.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FittedLine {
    /// Slope `m` shared by every fitted row.
    pub slope: f64,
    /// Fitted points `(l_i'(h), l_j'(h))`, one per input pair.
    pub fitted: Vec<(f64, f64)>,
    /// Full row-fit/column-fit iterations performed.
    pub iterations: u32,
    /// Max deviation of achieved marginals from their targets.
    pub residual: f64,
}

/// One table state recorded while tracing the fit.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TraceTable {
    pub label: String,
    pub rows: Vec<(f64, f64)>,
}

fn check_lists(l_i: &[f64], l_j: &[f64]) -> Result<(), IpfpError> {
    if l_i.len() != l_j.len() {
        return Err(IpfpError::ArityMismatch {
            first: l_i.len(),
            second: l_j.len(),
        });
    }
    if l_i.is_empty() {
        return Err(IpfpError::Empty);
    }
    for (index, &value) in l_i.iter().chain(l_j).enumerate() {
        if !value.is_finite() || value <= 0.0 {
            return Err(IpfpError::NonpositiveLength {
                index: index % l_i.len(),
                value,
            });
        }
    }
    Ok(())
}

/// Scales each row so its sum equals the target row total.
pub fn row_fit(table: &[(f64, f64)], row_targets: &[f64]) -> Result<Vec<(f64, f64)>, IpfpError> {
    if table.len() != row_targets.len() {
        return Err(IpfpError::ArityMismatch {
            first: table.len(),
            second: row_targets.len(),
        });
    }
    table
        .iter()
        .zip(row_targets)
        .enumerate()
        .map(|(row, (&(left, right), &target))| {
            let sum = left + right;
            if sum <= 0.0 {
                return Err(IpfpError::ZeroRowSum(row));
            }
            let scale = target / sum;
            Ok((left * scale, right * scale))
        })
        .collect()
}

/// Scales each column so its sum equals the target column total.
pub fn column_fit(
    table: &[(f64, f64)],
    column_targets: (f64, f64),
) -> Result<Vec<(f64, f64)>, IpfpError> {
    let left_sum: f64 = table.iter().map(|&(l, _)| l).sum();
    let right_sum: f64 = table.iter().map(|&(_, r)| r).sum();
    if left_sum <= 0.0 {
        return Err(IpfpError::ZeroColumnSum(0));
    }
    if right_sum <= 0.0 {
        return Err(IpfpError::ZeroColumnSum(1));
    }
    let left_scale = column_targets.0 / left_sum;
    let right_scale = column_targets.1 / right_sum;
    Ok(table
        .iter()
        .map(|&(l, r)| (l * left_scale, r * right_scale))
        .collect())
}

fn residual(table: &[(f64, f64)], row_targets: &[f64], column_targets: (f64, f64)) -> f64 {
    let mut worst: f64 = 0.0;
    for (&(l, r), &target) in table.iter().zip(row_targets) {
        worst = worst.max((l + r - target).abs());
    }
    let left_sum: f64 = table.iter().map(|&(l, _)| l).sum();
    let right_sum: f64 = table.iter().map(|&(_, r)| r).sum();
    worst
        .max((left_sum - column_targets.0).abs())
        .max((right_sum - column_targets.1).abs())
}

fn slope_of(fitted: &[(f64, f64)]) -> f64 {
    let slope = fitted[0].1 / fitted[0].0;
    // all converged rows must agree on the column ratio; a failure here
    // means the seed or fit order changed
    debug_assert!(
        fitted
            .iter()
            .all(|&(l, r)| (r / l - slope).abs() <= 1e-9 * slope.abs()),
        "fitted rows disagree on slope"
    );
    slope
}

/// Fits the origin line by alternating row and column fitting from the
/// all-ones seed until every marginal matches within `tolerance`.
pub fn ipfp_fit(l_i: &[f64], l_j: &[f64], tolerance: f64) -> Result<FittedLine, IpfpError> {
    ipfp_fit_traced(l_i, l_j, tolerance, false).map(|(line, _)| line)
}

/// Same as [`ipfp_fit`], also recording every intermediate table:
/// the targets table, the initial seed, and each fit result.
pub fn ipfp_fit_traced(
    l_i: &[f64],
    l_j: &[f64],
    tolerance: f64,
    trace: bool,
) -> Result<(FittedLine, Vec<TraceTable>), IpfpError> {
    check_lists(l_i, l_j)?;
    let n = l_i.len();
    let row_targets: Vec<f64> = l_i.iter().zip(l_j).map(|(a, b)| a + b).collect();
    let column_targets = (l_i.iter().sum::<f64>(), l_j.iter().sum::<f64>());

    let mut tables = Vec::new();
    let mut record = |label: &str, rows: &[(f64, f64)]| {
        if trace {
            tables.push(TraceTable {
                label: label.to_string(),
                rows: rows.to_vec(),
            });
        }
    };

    let targets: Vec<(f64, f64)> = l_i.iter().zip(l_j).map(|(&a, &b)| (a, b)).collect();
    record("targets", &targets);

    let mut table = vec![(1.0, 1.0); n];
    record("initial", &table);

    for iteration in 1..=MAX_ITERATIONS {
        table = row_fit(&table, &row_targets)?;
        record(&format!("row_fit_{iteration}"), &table);
        table = column_fit(&table, column_targets)?;
        record(&format!("column_fit_{iteration}"), &table);

        let residual = residual(&table, &row_targets, column_targets);
        if residual <= tolerance {
            let line = FittedLine {
                slope: slope_of(&table),
                fitted: table,
                iterations: iteration,
                residual,
            };
            return Ok((line, tables));
        }
    }
    Err(IpfpError::NoConvergence {
        iterations: MAX_ITERATIONS,
        residual: residual(&table, &row_targets, column_targets),
    })
}

/// Analytic form of the same fit: `l_i'(h) = T_h C_1 / (C_1 + C_2)`,
/// `l_j'(h) = T_h C_2 / (C_1 + C_2)`, slope `C_2 / C_1`.
pub fn closed_form_fit(l_i: &[f64], l_j: &[f64]) -> Result<FittedLine, IpfpError> {
    check_lists(l_i, l_j)?;
    let c1: f64 = l_i.iter().sum();
    let c2: f64 = l_j.iter().sum();
    let grand = c1 + c2;
    let fitted: Vec<(f64, f64)> = l_i
        .iter()
        .zip(l_j)
        .map(|(&a, &b)| {
            let total = a + b;
            (total * c1 / grand, total * c2 / grand)
        })
        .collect();
    let row_targets: Vec<f64> = l_i.iter().zip(l_j).map(|(a, b)| a + b).collect();
    let residual = residual(&fitted, &row_targets, (c1, c2));
    Ok(FittedLine {
        slope: c2 / c1,
        fitted,
        iterations: 1,
        residual,
    })
}
