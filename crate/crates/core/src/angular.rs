//! Angular dissimilarity.
//!
//! Each corresponding angle pair is projected to a cartesian plane and
//! its Euclidean distance to the matching point on the `y = x` line is
//! taken, which collapses to the plain absolute difference of the
//! stored radian values. Differences are deliberately not wrapped
//! modulo 2pi: the stored representation of a reflex angle matters.

use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum AngularError {
    #[error("angle list arity mismatch: {first} vs {second}")]
    ArityMismatch { first: usize, second: usize },
    #[error("angle lists are empty")]
    Empty,
}

/// Per-pair angular shifts and the dissimilarity derived from them.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AngularResult {
    /// Shift of each corresponding angle pair, in radians.
    pub shifts: Vec<f64>,
    /// Sum of the shifts, in radians.
    pub shift_sum: f64,
    /// `shift_sum / (1 + shift_sum)`, in `[0, 1)`.
    pub alpha: f64,
}

/// Absolute difference of each corresponding angle pair.
pub fn angular_shifts(theta_i: &[f64], theta_j: &[f64]) -> Result<Vec<f64>, AngularError> {
    if theta_i.len() != theta_j.len() {
        return Err(AngularError::ArityMismatch {
            first: theta_i.len(),
            second: theta_j.len(),
        });
    }
    if theta_i.is_empty() {
        return Err(AngularError::Empty);
    }
    Ok(theta_i
        .iter()
        .zip(theta_j)
        .map(|(a, b)| (b - a).abs())
        .collect())
}

/// Angular dissimilarity of two corresponding angle lists. Symmetric
/// in its arguments; zero iff all corresponding angles are equal.
pub fn alpha(theta_i: &[f64], theta_j: &[f64]) -> Result<AngularResult, AngularError> {
    let shifts = angular_shifts(theta_i, theta_j)?;
    let shift_sum: f64 = shifts.iter().sum();
    Ok(AngularResult {
        alpha: shift_sum / (1.0 + shift_sum),
        shifts,
        shift_sum,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    const THETA_1: [f64; 6] = [
        PI / 2.0,
        3.0 * PI / 4.0,
        5.0 * PI / 6.0,
        PI / 3.0,
        5.0 * PI / 6.0,
        3.0 * PI / 4.0,
    ];
    const THETA_2: [f64; 6] = [
        2.0 * PI / 3.0,
        PI / 3.0,
        4.0 * PI / 3.0,
        PI / 3.0,
        2.0 * PI / 3.0,
        2.0 * PI / 3.0,
    ];

    #[test]
    fn hexagon_shifts() {
        let shifts = angular_shifts(&THETA_1, &THETA_2).unwrap();
        let expected = [
            PI / 6.0,
            5.0 * PI / 12.0,
            PI / 2.0,
            0.0,
            PI / 6.0,
            PI / 12.0,
        ];
        for (got, want) in shifts.iter().zip(expected) {
            assert!((got - want).abs() < 1e-12, "{got} vs {want}");
        }
    }

    #[test]
    fn identical_angles_give_zero_shifts_and_zero_alpha() {
        let shifts = angular_shifts(&THETA_1, &THETA_1).unwrap();
        assert!(shifts.iter().all(|&s| s == 0.0));
        assert_eq!(alpha(&THETA_1, &THETA_1).unwrap().alpha, 0.0);
    }

    #[test]
    fn single_pair_shift() {
        let shifts = angular_shifts(&[PI / 2.0], &[2.0 * PI / 3.0]).unwrap();
        assert!((shifts[0] - PI / 6.0).abs() < 1e-12);
    }

    #[test]
    fn hexagon_alpha() {
        let result = alpha(&THETA_1, &THETA_2).unwrap();
        assert!((result.shift_sum - 4.0 * PI / 3.0).abs() < 1e-12);
        assert!((result.alpha - 0.8073).abs() < 5e-4);
    }

    #[test]
    fn arity_mismatch_rejected() {
        assert!(matches!(
            angular_shifts(&[1.0], &[1.0, 2.0]),
            Err(AngularError::ArityMismatch { first: 1, second: 2 })
        ));
        assert!(matches!(alpha(&[], &[]), Err(AngularError::Empty)));
    }

    #[test]
    fn alpha_is_exactly_symmetric() {
        let ab = alpha(&THETA_1, &THETA_2).unwrap();
        let ba = alpha(&THETA_2, &THETA_1).unwrap();
        assert_eq!(ab.alpha, ba.alpha);
        assert_eq!(ab.shifts, ba.shifts);
    }
}
