//! Edge-length disproportionality.
//!
//! Corresponding edge-length pairs are compared against the IPFP-fitted
//! origin line. The deviation of pair `h` is the Euclidean distance to
//! its fitted point, which preserves the pair sum `T_h` and is not the
//! orthogonal projection onto `y = mx`. The disproportionality is the
//! deviation sum normalized by the edge count `n`.

use serde::Serialize;
use thiserror::Error;

use crate::ipfp::{self, FittedLine, IpfpError};

/// Deviations below this fraction of the pair's magnitude are rounding
/// noise from the fit, not geometry; they are treated as exact zeros so
/// that proportional length lists give rho = 0 exactly.
const NOISE_FLOOR: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, Error)]
#[error("pair list arity mismatch: {first} vs {second}")]
pub struct DeviationArityError {
    pub first: usize,
    pub second: usize,
}

/// Per-pair deviations from the fitted line and the disproportionality
/// derived from them.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EdgeResult {
    /// Euclidean distance of each pair to its fitted point.
    pub deviations: Vec<f64>,
    /// Sum of the deviations.
    pub deviation_sum: f64,
    /// Number of edge pairs (`n`), the normalization constant.
    pub edge_count: usize,
    /// `deviation_sum / (edge_count + deviation_sum)`, in `[0, 1)`.
    pub rho: f64,
    /// The fitted origin line.
    pub line: FittedLine,
}

/// Euclidean distance of each `(l_i, l_j)` pair to its fitted point.
pub fn edge_deviations(
    pairs: &[(f64, f64)],
    fitted: &[(f64, f64)],
) -> Result<Vec<f64>, DeviationArityError> {
    if pairs.len() != fitted.len() {
        return Err(DeviationArityError {
            first: pairs.len(),
            second: fitted.len(),
        });
    }
    Ok(pairs
        .iter()
        .zip(fitted)
        .map(|(&(a, b), &(fa, fb))| (a - fa).hypot(b - fb))
        .collect())
}

/// Edge-length disproportionality of two corresponding length lists.
/// Symmetric in argument order; zero iff the lists are exactly
/// proportional.
pub fn rho(l_i: &[f64], l_j: &[f64], tolerance: f64) -> Result<EdgeResult, IpfpError> {
    let line = ipfp::ipfp_fit(l_i, l_j, tolerance)?;
    let pairs: Vec<(f64, f64)> = l_i.iter().zip(l_j).map(|(&a, &b)| (a, b)).collect();
    let mut deviations =
        edge_deviations(&pairs, &line.fitted).expect("fit produces one point per pair");
    for (deviation, &(a, b)) in deviations.iter_mut().zip(&pairs) {
        if *deviation <= NOISE_FLOOR * a.hypot(b) {
            *deviation = 0.0;
        }
    }
    let deviation_sum: f64 = deviations.iter().sum();
    let edge_count = pairs.len();
    Ok(EdgeResult {
        rho: deviation_sum / (edge_count as f64 + deviation_sum),
        deviations,
        deviation_sum,
        edge_count,
        line,
    })
}
