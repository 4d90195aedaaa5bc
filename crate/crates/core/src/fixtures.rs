//! Small named graphs used throughout the examples and tests.

use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Two diamonds joined by the edge 4–5, labeled 1..8.
pub fn two_diamonds() -> Graph {
    Graph::from_labeled_edges(
        8,
        &[
            (1, 2),
            (1, 3),
            (2, 3),
            (2, 4),
            (3, 4),
            (4, 5),
            (5, 6),
            (5, 7),
            (6, 7),
            (6, 8),
            (7, 8),
        ],
    )
    .expect("fixture is well formed")
}

/// Vertex set from 1-based labels.
pub fn labeled(labels: &[usize]) -> VertexSet {
    labels.iter().map(|&l| l - 1).collect()
}
