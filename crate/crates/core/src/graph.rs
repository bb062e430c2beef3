//! Adjacency graphs and the isomorphism gate.
//!
//! The distance is defined only for figure pairs whose adjacency
//! graphs are isomorphic. [`Graph::is_isomorphic`] decides this with a
//! backtracking search over degree-compatible vertex assignments;
//! figures at desk scale stay small enough that the worst-case
//! exponential search is acceptable.

use std::collections::BTreeSet;

use serde::Serialize;
use thiserror::Error;

use crate::figure::Figure;

/// Undirected simple graph over vertex indices `0..vertex_count`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    adjacency: BTreeSet<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum GraphError {
    #[error("edge ({0}, {1}) references a vertex index >= {2}")]
    IndexOutOfRange(usize, usize, usize),
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
}

impl Graph {
    pub fn new(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Graph, GraphError> {
        let mut adjacency = BTreeSet::new();
        for (a, b) in edges {
            if a >= vertex_count || b >= vertex_count {
                return Err(GraphError::IndexOutOfRange(a, b, vertex_count));
            }
            if a == b {
                return Err(GraphError::SelfLoop(a));
            }
            let pair = (a.min(b), a.max(b));
            if !adjacency.insert(pair) {
                return Err(GraphError::DuplicateEdge(pair.0, pair.1));
            }
        }
        Ok(Graph {
            vertex_count,
            adjacency,
        })
    }

    /// Extracts the adjacency structure of a figure, replacing vertex
    /// names by their positional indices. Expects a validated figure.
    pub fn from_figure(figure: &Figure) -> Graph {
        let index_of = |name: &str| {
            figure
                .vertices
                .iter()
                .position(|v| v == name)
                .expect("validated figure: edge endpoints name declared vertices")
        };
        let edges = figure
            .edges
            .iter()
            .map(|(a, b)| (index_of(a), index_of(b)));
        Graph::new(figure.vertices.len(), edges)
            .expect("validated figure: no self-loops or duplicate edges")
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adjacency.iter().copied()
    }

    pub fn contains_edge(&self, a: usize, b: usize) -> bool {
        self.adjacency.contains(&(a.min(b), a.max(b)))
    }

    /// Per-vertex degrees, indexed by vertex.
    pub fn degrees(&self) -> Vec<usize> {
        let mut degrees = vec![0; self.vertex_count];
        for &(a, b) in &self.adjacency {
            degrees[a] += 1;
            degrees[b] += 1;
        }
        degrees
    }

    /// Degrees in ascending order (the degree multiset).
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degrees = self.degrees();
        degrees.sort_unstable();
        degrees
    }

    /// A human-readable summary for incomparability reports.
    pub fn summary(&self) -> GraphSummary {
        GraphSummary {
            vertex_count: self.vertex_count,
            edge_count: self.adjacency.len(),
            degree_sequence: self.degree_sequence(),
        }
    }

    /// True iff some vertex bijection maps this graph's adjacency
    /// exactly onto `other`'s. Deterministic and symmetric.
    pub fn is_isomorphic(&self, other: &Graph) -> bool {
        if self.vertex_count != other.vertex_count
            || self.adjacency.len() != other.adjacency.len()
            || self.degree_sequence() != other.degree_sequence()
        {
            return false;
        }
        if self.vertex_count == 0 {
            return true;
        }

        let n = self.vertex_count;
        let adj_a = self.adjacency_matrix();
        let adj_b = other.adjacency_matrix();
        let deg_a = self.degrees();
        let deg_b = other.degrees();

        // Assign high-degree vertices first; they constrain the search most.
        let mut order: Vec<usize> = (0..n).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(deg_a[v]));

        let mut mapping = vec![usize::MAX; n];
        let mut used = vec![false; n];
        Self::search(&order, 0, &adj_a, &adj_b, &deg_a, &deg_b, &mut mapping, &mut used, n)
    }

    fn adjacency_matrix(&self) -> Vec<bool> {
        let n = self.vertex_count;
        let mut matrix = vec![false; n * n];
        for &(a, b) in &self.adjacency {
            matrix[a * n + b] = true;
            matrix[b * n + a] = true;
        }
        matrix
    }

    #[allow(clippy::too_many_arguments)]
    fn search(
        order: &[usize],
        depth: usize,
        adj_a: &[bool],
        adj_b: &[bool],
        deg_a: &[usize],
        deg_b: &[usize],
        mapping: &mut [usize],
        used: &mut [bool],
        n: usize,
    ) -> bool {
        if depth == order.len() {
            return true;
        }
        let v = order[depth];
        'candidates: for w in 0..n {
            if used[w] || deg_b[w] != deg_a[v] {
                continue;
            }
            // adjacency to every already-mapped vertex must agree
            for &prev in &order[..depth] {
                if adj_a[v * n + prev] != adj_b[w * n + mapping[prev]] {
                    continue 'candidates;
                }
            }
            mapping[v] = w;
            used[w] = true;
            if Self::search(order, depth + 1, adj_a, adj_b, deg_a, deg_b, mapping, used, n) {
                return true;
            }
            mapping[v] = usize::MAX;
            used[w] = false;
        }
        false
    }
}

/// Shape of a graph, reported when the isomorphism gate rejects a pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GraphSummary {
    pub vertex_count: usize,
    pub edge_count: usize,
    pub degree_sequence: Vec<usize>,
}
