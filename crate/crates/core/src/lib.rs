//! Distance between straight-edge planar geometric figures.
//!
//! A figure is a tuple of named vertices, edges, edge lengths, and
//! inter-edge angles. For two figures whose adjacency graphs are
//! isomorphic, the distance is the convex sum of
//!
//! * angular dissimilarity: the normalized sum of absolute differences
//!   of corresponding angles, and
//! * edge-length disproportionality: the normalized sum of Euclidean
//!   deviations of corresponding edge-length pairs from the best-fit
//!   origin line, found by iterative proportional fitting.
//!
//! When the adjacency graphs are not isomorphic the distance is
//! undefined, which [`distance::DistanceOutcome`] models explicitly.
//!
//! All types are immutable after construction and all operations are
//! pure, so values can be shared freely across threads.

pub mod angular;
pub mod corpus;
pub mod distance;
pub mod edge_prop;
pub mod figure;
pub mod graph;
pub mod ipfp;

pub use angular::AngularResult;
pub use corpus::FigureCorpus;
pub use distance::{DistanceOutcome, DistanceReport};
pub use edge_prop::EdgeResult;
pub use figure::{Figure, FigurePair};
pub use graph::Graph;
pub use ipfp::FittedLine;

/// Default weight of the angular component in the convex sum.
pub const DEFAULT_BETA: f64 = 0.5;

/// Default IPFP stopping tolerance (marginals matched to 3 decimals).
pub const DEFAULT_TOLERANCE: f64 = 5e-4;
