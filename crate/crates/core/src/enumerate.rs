//! Labeled enumeration of small graphs.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Largest vertex count accepted by [`enumerate_graphs`].
pub const MAX_ENUMERATION_VERTICES: usize = 7;

/// Every labeled simple graph on `n` vertices, in ascending order of edge
/// mask. Bit `k` of the mask is the `k`-th pair of the graph6 column order
/// `(0,1), (0,2), (1,2), (0,3), ...`.
pub struct LabeledGraphs {
    n: usize,
    pairs: Vec<(usize, usize)>,
    next_mask: u64,
    end: u64,
    connected_only: bool,
}

pub fn enumerate_graphs(n: usize, connected_only: bool) -> Result<LabeledGraphs> {
    if !(1..=MAX_ENUMERATION_VERTICES).contains(&n) {
        return Err(Error::OutOfRange {
            what: "labeled enumeration",
            max: MAX_ENUMERATION_VERTICES,
            n,
        });
    }
    let pairs: Vec<_> = (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    Ok(LabeledGraphs {
        n,
        end: 1u64 << pairs.len(),
        pairs,
        next_mask: 0,
        connected_only,
    })
}

impl LabeledGraphs {
    fn build(&self, mask: u64) -> Graph {
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for (k, &(u, v)) in self.pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                adj[u].insert(v);
                adj[v].insert(u);
            }
        }
        Graph::from_adjacency(adj)
    }

    /// Total number of masks, connected or not.
    pub fn mask_count(&self) -> u64 {
        self.end
    }
}

impl Iterator for LabeledGraphs {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while self.next_mask < self.end {
            let g = self.build(self.next_mask);
            self.next_mask += 1;
            if !self.connected_only || g.is_connected() {
                return Some(g);
            }
        }
        None
    }
}
