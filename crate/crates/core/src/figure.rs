//! The figure tuple: vertices, edges, edge lengths, and angles.
//!
//! Figures are read from `.figure.json` documents, one figure per file:
//!
//! ```json
//! {
//!   "name": "gamma1",
//!   "vertices": ["A", "B", "C"],
//!   "edges": [["A", "B"], ["B", "C"], ["C", "A"]],
//!   "edge_lengths": [3.0, 4.0, 5.0],
//!   "angles_rad": [1.0471975512, 1.0471975512, 1.0471975512]
//! }
//! ```
//!
//! Lists are index-aligned: `edge_lengths[h]` is the length of
//! `edges[h]`, and the correspondence between two figures' angle and
//! edge lists is positional. The edge count `n` and angle count `z`
//! are independent.

use std::collections::HashSet;
use std::f64::consts::TAU;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// A straight-edge planar figure as data: no coordinates are stored,
/// the tuple is taken as given.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Figure {
    pub name: String,
    pub vertices: Vec<String>,
    pub edges: Vec<(String, String)>,
    pub edge_lengths: Vec<f64>,
    #[serde(rename = "angles_rad")]
    pub angles: Vec<f64>,
}

/// Failure to read a figure document.
#[derive(Debug, Error)]
pub enum ParseError {
    #[error("syntax error: {0}")]
    Syntax(serde_json::Error),
    #[error("schema error: {0}")]
    Schema(String),
}

/// A single violated figure invariant. Validation reports all of them,
/// not just the first.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Violation {
    #[error("figure has no edges")]
    NoEdges,
    #[error("nonpositive length at index {index}: {value}")]
    NonpositiveLength { index: usize, value: f64 },
    #[error("non-finite length at index {index}")]
    NonFiniteLength { index: usize },
    #[error("angle out of range (0, 2\u{3c0}) at index {index}: {value}")]
    AngleOutOfRange { index: usize, value: f64 },
    #[error("edge {index} endpoint `{endpoint}` names no declared vertex")]
    DanglingEndpoint { index: usize, endpoint: String },
    #[error("duplicate vertex `{name}`")]
    DuplicateVertex { name: String },
    #[error("duplicate edge at index {index}: ({a}, {b})")]
    DuplicateEdge { index: usize, a: String, b: String },
    #[error("self-loop edge at index {index}: ({name}, {name})")]
    SelfLoop { index: usize, name: String },
}

/// All invariant violations found in one figure.
#[derive(Debug, Clone, PartialEq, Error)]
pub struct ValidationErrors {
    pub violations: Vec<Violation>,
}

impl fmt::Display for ValidationErrors {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid figure:")?;
        for v in &self.violations {
            write!(f, "\n  - {v}")?;
        }
        Ok(())
    }
}

/// Scaling requires a finite factor k > 0.
#[derive(Debug, Clone, PartialEq, Error)]
#[error("invalid scale factor: {0} (must be finite and > 0)")]
pub struct ScaleError(pub f64);

impl Figure {
    /// Parses a figure document. The only structural check applied here
    /// is that `edge_lengths` has exactly one entry per edge; value
    /// invariants are left to [`Figure::validate`].
    pub fn parse(text: &str) -> Result<Figure, ParseError> {
        let figure: Figure = serde_json::from_str(text).map_err(|e| {
            if e.classify() == serde_json::error::Category::Data {
                ParseError::Schema(e.to_string())
            } else {
                ParseError::Syntax(e)
            }
        })?;
        if figure.edge_lengths.len() != figure.edges.len() {
            return Err(ParseError::Schema(format!(
                "edge_lengths has {} entries against {} edges",
                figure.edge_lengths.len(),
                figure.edges.len()
            )));
        }
        Ok(figure)
    }

    /// Serializes the figure back to its document form.
    pub fn to_document(&self) -> String {
        let mut text = serde_json::to_string_pretty(self).expect("figure serializes");
        text.push('\n');
        text
    }

    /// Number of edges (`n`).
    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Number of angles (`z`). Independent of the edge count.
    pub fn angle_count(&self) -> usize {
        self.angles.len()
    }

    /// Checks every figure invariant and reports the full list of
    /// violations. Idempotent and side-effect-free.
    pub fn validate(&self) -> Result<(), ValidationErrors> {
        let mut violations = Vec::new();

        if self.edges.is_empty() {
            violations.push(Violation::NoEdges);
        }

        let mut seen_vertices = HashSet::new();
        for name in &self.vertices {
            if !seen_vertices.insert(name.as_str()) {
                violations.push(Violation::DuplicateVertex { name: name.clone() });
            }
        }

        let mut seen_edges = HashSet::new();
        for (index, (a, b)) in self.edges.iter().enumerate() {
            for endpoint in [a, b] {
                if !seen_vertices.contains(endpoint.as_str()) {
                    violations.push(Violation::DanglingEndpoint {
                        index,
                        endpoint: endpoint.clone(),
                    });
                }
            }
            if a == b {
                violations.push(Violation::SelfLoop {
                    index,
                    name: a.clone(),
                });
                continue;
            }
            // unordered comparison: (A,B) duplicates (B,A)
            let key = if a <= b { (a, b) } else { (b, a) };
            if !seen_edges.insert(key) {
                violations.push(Violation::DuplicateEdge {
                    index,
                    a: a.clone(),
                    b: b.clone(),
                });
            }
        }

        for (index, &length) in self.edge_lengths.iter().enumerate() {
            if !length.is_finite() {
                violations.push(Violation::NonFiniteLength { index });
            } else if length <= 0.0 {
                violations.push(Violation::NonpositiveLength {
                    index,
                    value: length,
                });
            }
        }

        for (index, &angle) in self.angles.iter().enumerate() {
            // reflex angles are legal; exactly 0 or 2pi is a degenerate joint
            if !angle.is_finite() || angle <= 0.0 || angle >= TAU {
                violations.push(Violation::AngleOutOfRange {
                    index,
                    value: angle,
                });
            }
        }

        if violations.is_empty() {
            Ok(())
        } else {
            Err(ValidationErrors { violations })
        }
    }

    /// Returns the figure with every edge length multiplied by `k`;
    /// vertices, edges, and angles are unchanged.
    pub fn scaled(&self, k: f64) -> Result<Figure, ScaleError> {
        if !k.is_finite() || k <= 0.0 {
            return Err(ScaleError(k));
        }
        let mut scaled = self.clone();
        for length in &mut scaled.edge_lengths {
            *length *= k;
        }
        Ok(scaled)
    }
}

/// Why two figures cannot be put in positional correspondence.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum PairError {
    #[error("edge count mismatch: {first} vs {second}")]
    EdgeCountMismatch { first: usize, second: usize },
    #[error("angle count mismatch: {first} vs {second}")]
    AngleCountMismatch { first: usize, second: usize },
}

/// Two figures in total positional correspondence: angle pair `u` is
/// `(first.angles[u], second.angles[u])` and edge pair `h` is
/// `(first.edge_lengths[h], second.edge_lengths[h])`.
#[derive(Debug, Clone, PartialEq)]
pub struct FigurePair {
    first: Figure,
    second: Figure,
}

impl FigurePair {
    pub fn new(first: Figure, second: Figure) -> Result<FigurePair, PairError> {
        if first.edge_count() != second.edge_count() {
            return Err(PairError::EdgeCountMismatch {
                first: first.edge_count(),
                second: second.edge_count(),
            });
        }
        if first.angle_count() != second.angle_count() {
            return Err(PairError::AngleCountMismatch {
                first: first.angle_count(),
                second: second.angle_count(),
            });
        }
        Ok(FigurePair { first, second })
    }

    pub fn first(&self) -> &Figure {
        &self.first
    }

    pub fn second(&self) -> &Figure {
        &self.second
    }
}
