//! Simple undirected graphs on at most 64 vertices.

use std::fmt;

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_VERTICES};

/// A simple undirected graph on vertices `0..n`, stored as one neighborhood
/// bitmask per vertex.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

/// An induced `K_{1,3}`: a center adjacent to three pairwise nonadjacent leaves.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Claw {
    pub center: usize,
    pub leaves: [usize; 3],
}

impl Graph {
    /// Builds a graph from 0-based edge pairs. Duplicate edges collapse.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Builds a graph from 1-based edge pairs, as in the edge-list file format.
    pub fn from_labeled_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u == 0 || v == 0 {
                return Err(Error::VertexOutOfRange { vertex: 0, n });
            }
            g.add_edge(u - 1, v - 1)?;
        }
        Ok(g)
    }

    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n == 0 || n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        Ok(Graph {
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    fn add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        let n = self.n();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    /// Reassembles a graph from raw neighborhood masks. Callers guarantee
    /// symmetry and irreflexivity.
    pub(crate) fn from_adjacency(adj: Vec<VertexSet>) -> Self {
        debug_assert!(!adj.is_empty() && adj.len() <= MAX_VERTICES);
        debug_assert!(adj
            .iter()
            .enumerate()
            .all(|(u, nu)| !nu.contains(u) && nu.iter().all(|v| adj[v].contains(u))));
        Graph { adj }
    }

    pub fn path(n: usize) -> Result<Self> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edge_list(n, &edges)
    }

    pub fn cycle(n: usize) -> Result<Self> {
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        if n >= 3 {
            edges.push((n - 1, 0));
        }
        Graph::from_edge_list(n, &edges)
    }

    pub fn complete(n: usize) -> Result<Self> {
        let edges: Vec<_> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        Graph::from_edge_list(n, &edges)
    }

    /// `K_{1,k}` with center 0.
    pub fn star(k: usize) -> Result<Self> {
        let edges: Vec<_> = (1..=k).map(|v| (0, v)).collect();
        Graph::from_edge_list(k + 1, &edges)
    }

    /// Disjoint union; the vertices of `other` are shifted past those of `self`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Self> {
        let n = self.n() + other.n();
        if n > MAX_VERTICES {
            return Err(Error::VertexCount(n));
        }
        let shift = self.n();
        let mut adj = self.adj.clone();
        adj.extend(
            other
                .adj
                .iter()
                .map(|nb| VertexSet::from_bits(nb.bits() << shift)),
        );
        Ok(Graph { adj })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n())
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    /// `N[v]`.
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    /// Union of the neighborhoods of every member of `s`.
    pub fn neighborhood_of(&self, s: VertexSet) -> VertexSet {
        s.iter().fold(VertexSet::EMPTY, |acc, v| acc.union(self.adj[v]))
    }

    #[inline]
    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in ascending order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n())
            .flat_map(|u| self.adj[u].iter().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect()
    }

    /// The subgraph induced by `s`, with an order-preserving relabeling.
    /// `mapping[old]` is the new id of `old`, or `None` when `old` is not in `s`.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<(Graph, Vec<Option<usize>>)> {
        let s = s.intersection(self.vertices());
        if s.is_empty() {
            return Err(Error::EmptyVertexSet);
        }
        let mut mapping = vec![None; self.n()];
        for (new, old) in s.iter().enumerate() {
            mapping[old] = Some(new);
        }
        let adj = s
            .iter()
            .map(|old| {
                self.adj[old]
                    .intersection(s)
                    .iter()
                    .filter_map(|w| mapping[w])
                    .collect()
            })
            .collect();
        Ok((Graph { adj }, mapping))
    }

    /// The graph with the vertices of `s` deleted, i.e. `G - S`.
    pub fn minus(&self, s: VertexSet) -> Result<(Graph, Vec<Option<usize>>)> {
        self.induced_subgraph(s.complement(self.n()))
    }

    /// The component of `G[s]` containing `v` (empty when `v` is not in `s`).
    pub fn component_of(&self, s: VertexSet, v: usize) -> VertexSet {
        if !s.contains(v) {
            return VertexSet::EMPTY;
        }
        let mut comp = VertexSet::singleton(v);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let next = self.neighborhood_of(frontier).intersection(s).difference(comp);
            comp = comp.union(next);
            frontier = next;
        }
        comp
    }

    /// Partition of `s` into the vertex sets of the components of `G[s]`,
    /// sorted by least member.
    pub fn components(&self, s: VertexSet) -> Vec<VertexSet> {
        let mut rest = s.intersection(self.vertices());
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let comp = self.component_of(rest, v);
            rest = rest.difference(comp);
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.component_of(self.vertices(), 0) == self.vertices()
    }

    /// Whether `G[s]` has at most one component. The empty set counts as connected.
    pub fn is_connected_on(&self, s: VertexSet) -> bool {
        match s.first() {
            None => true,
            Some(v) => self.component_of(s, v) == s,
        }
    }

    /// Every induced claw, ordered by center and then by leaf triple.
    pub fn find_claws(&self) -> Vec<Claw> {
        let mut claws = Vec::new();
        for center in 0..self.n() {
            let nb = self.adj[center].to_vec();
            for (i, &a) in nb.iter().enumerate() {
                for (j, &b) in nb.iter().enumerate().skip(i + 1) {
                    if self.is_adjacent(a, b) {
                        continue;
                    }
                    for &c in &nb[j + 1..] {
                        if !self.is_adjacent(a, c) && !self.is_adjacent(b, c) {
                            claws.push(Claw {
                                center,
                                leaves: [a, b, c],
                            });
                        }
                    }
                }
            }
        }
        claws
    }

    pub fn is_claw_free(&self) -> bool {
        (0..self.n()).all(|c| !self.has_claw_at(c))
    }

    fn has_claw_at(&self, center: usize) -> bool {
        let nb = self.adj[center];
        for a in nb {
            // candidates nonadjacent to a, above a
            let rest = nb.difference(self.adj[a]).without(a);
            let rest = VertexSet::from_bits(rest.bits() & !((2u64 << a) - 1));
            for b in rest {
                let third = VertexSet::from_bits(rest.bits() & !((2u64 << b) - 1)).difference(self.adj[b]);
                if !third.is_empty() {
                    return true;
                }
            }
        }
        false
    }

    /// Parses the plain edge-list format: a header `n m` followed by `m` lines
    /// `u v` with 1-based labels. Blank lines and `#` comments are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Graph> {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        let header = lines
            .next()
            .ok_or_else(|| Error::EdgeList("missing header".into()))?;
        let (n, m) = parse_pair(header)?;
        let mut edges = Vec::with_capacity(m);
        for line in lines {
            edges.push(parse_pair(line)?);
        }
        if edges.len() != m {
            return Err(Error::EdgeList(format!(
                "header declares {m} edges, found {}",
                edges.len()
            )));
        }
        Graph::from_labeled_edges(n, &edges)
    }

    /// Renders the edge-list format read by [`Graph::parse_edge_list`].
    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.n(), edges.len());
        for (u, v) in edges {
            out.push_str(&format!("{} {}\n", u + 1, v + 1));
        }
        out
    }
}

fn parse_pair(line: &str) -> Result<(usize, usize)> {
    let mut it = line.split_whitespace().map(|t| {
        t.parse::<usize>()
            .map_err(|_| Error::EdgeList(format!("not a number: {t:?}")))
    });
    match (it.next(), it.next(), it.next()) {
        (Some(a), Some(b), None) => Ok((a?, b?)),
        _ => Err(Error::EdgeList(format!("expected two integers: {line:?}"))),
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n(), self.edges())
    }
}
