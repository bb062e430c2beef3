//! The distance itself: convex sum of angular dissimilarity and
//! edge-length disproportionality, gated by graph isomorphism.
//!
//! Undefinedness (non-isomorphic adjacency graphs) is a first-class
//! outcome rather than an error, so corpus-level callers can record
//! incomparable cells.

use serde::Serialize;
use thiserror::Error;

use crate::angular::{self, AngularError, AngularResult};
use crate::edge_prop::{self, EdgeResult};
use crate::figure::{Figure, FigurePair, PairError};
use crate::graph::{Graph, GraphSummary};
use crate::ipfp::IpfpError;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum DistanceError {
    #[error("beta out of range [0, 1]: {0}")]
    BetaOutOfRange(f64),
    #[error(transparent)]
    Pair(#[from] PairError),
    #[error(transparent)]
    Angular(#[from] AngularError),
    #[error(transparent)]
    Ipfp(#[from] IpfpError),
}

/// A fully computed, defined distance.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DistanceReport {
    pub alpha_result: AngularResult,
    pub edge_result: EdgeResult,
    /// Weight of the angular component.
    pub beta: f64,
    /// `beta * alpha + (1 - beta) * rho`, in `[0, 1)`.
    pub d: f64,
}

/// Result of a distance computation: either a report, or the reason
/// the isomorphism gate rejected the pair.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub enum DistanceOutcome {
    Defined(DistanceReport),
    Undefined {
        first: GraphSummary,
        second: GraphSummary,
    },
}

impl DistanceOutcome {
    pub fn report(&self) -> Option<&DistanceReport> {
        match self {
            DistanceOutcome::Defined(report) => Some(report),
            DistanceOutcome::Undefined { .. } => None,
        }
    }

    pub fn is_defined(&self) -> bool {
        matches!(self, DistanceOutcome::Defined(_))
    }
}

/// Computes the distance between the figures of a pair. Both figures
/// are expected to be validated; `beta` weights the angular component
/// and `tolerance` feeds the IPFP stop rule.
pub fn distance(
    pair: &FigurePair,
    beta: f64,
    tolerance: f64,
) -> Result<DistanceOutcome, DistanceError> {
    if !(0.0..=1.0).contains(&beta) || beta.is_nan() {
        return Err(DistanceError::BetaOutOfRange(beta));
    }

    let first_graph = Graph::from_figure(pair.first());
    let second_graph = Graph::from_figure(pair.second());
    if !first_graph.is_isomorphic(&second_graph) {
        return Ok(DistanceOutcome::Undefined {
            first: first_graph.summary(),
            second: second_graph.summary(),
        });
    }

    let alpha_result = angular::alpha(&pair.first().angles, &pair.second().angles)?;
    let edge_result = edge_prop::rho(
        &pair.first().edge_lengths,
        &pair.second().edge_lengths,
        tolerance,
    )?;
    let d = beta * alpha_result.alpha + (1.0 - beta) * edge_result.rho;
    Ok(DistanceOutcome::Defined(DistanceReport {
        alpha_result,
        edge_result,
        beta,
        d,
    }))
}

/// Convenience wrapper over [`distance`] for two loose figures.
pub fn distance_between(
    first: &Figure,
    second: &Figure,
    beta: f64,
    tolerance: f64,
) -> Result<DistanceOutcome, DistanceError> {
    let pair = FigurePair::new(first.clone(), second.clone())?;
    distance(&pair, beta, tolerance)
}
