//! The graph data model: immutable simple undirected graphs with bit-mask
//! adjacency, and the vertex-set type shared by every solver in this crate.
//!
//! Vertices are 0-based contiguous indices. All graphs are simple (no loops,
//! no parallel edges) and capped at [`MAX_ORDER`] vertices so that a single
//! `u64` mask covers any vertex set.

use std::fmt;

use thiserror::Error;

/// Largest supported vertex count. Matches the short-form graph6 limit.
pub const MAX_ORDER: usize = 62;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("loop edge ({0},{0}) not allowed in a simple graph")]
    LoopEdge(usize),
    #[error("vertex {vertex} out of range for graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("operation requires a non-empty graph")]
    EmptyGraph,
    #[error("graph order {0} exceeds the supported maximum {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("invalid edge list (line {line}): {reason}")]
    BadEdgeList { line: usize, reason: String },
}

/// A set of vertices of one graph, stored as a bit mask over vertex indices.
///
/// `VertexSet` is a plain value: copying, intersecting and unioning are
/// single machine operations. The reference order `n` is implicit; the
/// constructors on [`Graph`] never produce masks with bits at index ≥ n.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: usize) -> Self {
        debug_assert!(v < 64);
        VertexSet(1 << v)
    }

    /// All vertices of a graph of order `n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= 64);
        if n == 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < 64);
        self.0 |= 1 << v;
    }

    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < 64);
        self.0 &= !(1 << v);
    }

    pub fn with(self, v: usize) -> Self {
        debug_assert!(v < 64);
        VertexSet(self.0 | 1 << v)
    }

    pub fn without(self, v: usize) -> Self {
        debug_assert!(v < 64);
        VertexSet(self.0 & !(1 << v))
    }

    /// Number of members (popcount).
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn is_subset_of(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: VertexSet) -> VertexSet {
        VertexSet(self.0 & !other.0)
    }

    pub fn smallest(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Iterates members in ascending index order.
    pub fn iter(self) -> Members {
        Members(self.0)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<T: IntoIterator<Item = usize>>(iter: T) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// An immutable simple undirected graph.
///
/// Adjacency is one [`VertexSet`] per vertex. The constructors enforce
/// symmetry and irreflexivity; there is no mutation after construction, so
/// graphs can be shared freely between threads.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph of order `n` from an edge list. Duplicate edges (in
    /// either orientation) collapse to one; loops and out-of-range endpoints
    /// are rejected.
    pub fn from_edge_list(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(n));
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for &(u, v) in edges {
            if u == v {
                return Err(GraphError::LoopEdge(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: w, order: n });
                }
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        Ok(Graph { adj })
    }

    /// Wraps an adjacency table that is already symmetric and irreflexive.
    pub(crate) fn from_adjacency(adj: Vec<VertexSet>) -> Graph {
        let g = Graph { adj };
        debug_assert!(g.check_invariants());
        g
    }

    fn check_invariants(&self) -> bool {
        let n = self.order();
        if n > MAX_ORDER {
            return false;
        }
        let full = VertexSet::full(n);
        self.adj.iter().enumerate().all(|(v, &nb)| {
            nb.is_subset_of(full)
                && !nb.contains(v)
                && nb.iter().all(|u| self.adj[u].contains(v))
        })
    }

    /// Parses the edge-list text format: first non-comment line is the order
    /// `n`, each following line one `u v` pair (0-based). Everything after a
    /// `#` is a comment; blank lines are skipped.
    pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
        let mut order: Option<usize> = None;
        let mut edges = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let mut fields = content.split_whitespace();
            match order {
                None => {
                    let n: usize = parse_field(fields.next(), line, "vertex count")?;
                    if fields.next().is_some() {
                        return Err(GraphError::BadEdgeList {
                            line,
                            reason: "expected a single vertex count".into(),
                        });
                    }
                    order = Some(n);
                }
                Some(_) => {
                    let u: usize = parse_field(fields.next(), line, "edge endpoint")?;
                    let v: usize = parse_field(fields.next(), line, "edge endpoint")?;
                    if fields.next().is_some() {
                        return Err(GraphError::BadEdgeList {
                            line,
                            reason: "expected exactly two endpoints".into(),
                        });
                    }
                    edges.push((u, v));
                }
            }
        }
        match order {
            Some(n) => Graph::from_edge_list(n, &edges),
            None => Err(GraphError::BadEdgeList {
                line: 0,
                reason: "missing vertex count line".into(),
            }),
        }
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.order()
    }

    /// All vertices as a set.
    pub fn full_set(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    /// Neighbor set of `v`. Panics if `v` is out of range.
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.order() && self.adj[u].contains(v)
    }

    pub fn degree(&self, v: usize) -> Result<usize, GraphError> {
        self.adj
            .get(v)
            .map(|nb| nb.len())
            .ok_or(GraphError::VertexOutOfRange { vertex: v, order: self.order() })
    }

    /// Δ, the maximum degree. Errors on the empty graph.
    pub fn max_degree(&self) -> Result<usize, GraphError> {
        self.adj.iter().map(|nb| nb.len()).max().ok_or(GraphError::EmptyGraph)
    }

    /// δ, the minimum degree. Errors on the empty graph.
    pub fn min_degree(&self) -> Result<usize, GraphError> {
        self.adj.iter().map(|nb| nb.len()).min().ok_or(GraphError::EmptyGraph)
    }

    /// The number of vertices attaining the maximum degree.
    pub fn max_degree_count(&self) -> Result<usize, GraphError> {
        let delta = self.max_degree()?;
        Ok(self.adj.iter().filter(|nb| nb.len() == delta).count())
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|nb| nb.len()).sum::<usize>() / 2
    }

    /// Edges as ordered pairs (u, v) with u < v, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in self.vertices() {
            for v in self.adj[u].iter() {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Degrees sorted ascending; a cheap isomorphism invariant.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = self.adj.iter().map(|nb| nb.len()).collect();
        d.sort_unstable();
        d
    }

    /// Returns `Some(k)` when every vertex has degree `k`.
    pub fn regular_degree(&self) -> Option<usize> {
        let first = self.adj.first()?.len();
        self.adj.iter().all(|nb| nb.len() == first).then_some(first)
    }

    /// Breadth-first reachability from vertex 0. The empty graph and the
    /// one-vertex graph count as connected.
    pub fn is_connected(&self) -> bool {
        let n = self.order();
        if n <= 1 {
            return true;
        }
        let mut seen = VertexSet::singleton(0);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(self.adj[v]);
            }
            frontier = next.difference(seen);
            seen = seen.union(next);
        }
        seen == self.full_set()
    }

    /// The graph with every vertex `v` relabeled to `perm[v]`.
    /// `perm` must be a permutation of `0..order`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        let n = self.order();
        assert_eq!(perm.len(), n, "permutation length must equal graph order");
        let mut adj = vec![VertexSet::EMPTY; n];
        for v in self.vertices() {
            for u in self.adj[v].iter() {
                adj[perm[v]].insert(perm[u]);
            }
        }
        Graph::from_adjacency(adj)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.order(), self.edges())
    }
}

fn parse_field(field: Option<&str>, line: usize, what: &str) -> Result<usize, GraphError> {
    let text = field.ok_or_else(|| GraphError::BadEdgeList {
        line,
        reason: format!("missing {what}"),
    })?;
    text.parse().map_err(|_| GraphError::BadEdgeList {
        line,
        reason: format!("invalid {what} `{text}`"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_from_edge_list() {
        let g = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(
            (g.degree(0).unwrap(), g.degree(1).unwrap(), g.degree(2).unwrap()),
            (1, 2, 1)
        );
    }

    #[test]
    fn loop_edge_rejected() {
        assert_eq!(Graph::from_edge_list(2, &[(0, 0)]), Err(GraphError::LoopEdge(0)));
    }

    #[test]
    fn endpoint_out_of_range_rejected() {
        assert_eq!(
            Graph::from_edge_list(2, &[(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, order: 2 })
        );
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 0), (2, 3)]).unwrap();
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn degree_sum_is_twice_edge_count() {
        let g = Graph::from_edge_list(5, &[(0, 1), (0, 2), (0, 3), (0, 4), (1, 2)]).unwrap();
        let sum: usize = g.vertices().map(|v| g.degree(v).unwrap()).sum();
        assert_eq!(sum, 2 * g.edge_count());
    }

    #[test]
    fn degree_errors() {
        let g = Graph::from_edge_list(2, &[(0, 1)]).unwrap();
        assert!(matches!(g.degree(2), Err(GraphError::VertexOutOfRange { .. })));
        let empty = Graph::from_edge_list(0, &[]).unwrap();
        assert_eq!(empty.max_degree(), Err(GraphError::EmptyGraph));
        assert_eq!(empty.min_degree(), Err(GraphError::EmptyGraph));
    }

    #[test]
    fn order_cap_enforced() {
        assert_eq!(Graph::from_edge_list(63, &[]), Err(GraphError::OrderTooLarge(63)));
    }

    #[test]
    fn connectivity() {
        let path = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert!(path.is_connected());
        let split = Graph::from_edge_list(4, &[(0, 1), (2, 3)]).unwrap();
        assert!(!split.is_connected());
        assert!(Graph::from_edge_list(1, &[]).unwrap().is_connected());
    }

    #[test]
    fn parse_edge_list_text() {
        let text = "# a path on three vertices\n3\n0 1  # first edge\n1 2\n\n";
        let g = Graph::parse_edge_list(text).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);

        assert!(matches!(
            Graph::parse_edge_list("3\n0\n"),
            Err(GraphError::BadEdgeList { line: 2, .. })
        ));
        assert!(matches!(
            Graph::parse_edge_list("# only comments\n"),
            Err(GraphError::BadEdgeList { line: 0, .. })
        ));
    }

    #[test]
    fn vertex_set_basics() {
        let s: VertexSet = [0, 3, 7].into_iter().collect();
        assert_eq!(s.len(), 3);
        assert!(s.contains(3) && !s.contains(1));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 3, 7]);
        assert_eq!(format!("{s:?}"), "{0, 3, 7}");
        assert_eq!(VertexSet::full(3).bits(), 0b111);
        assert!(s.intersects(VertexSet::singleton(7)));
        assert!(!s.intersects(VertexSet::singleton(6)));
        assert!(VertexSet::singleton(3).is_subset_of(s));
    }

    #[test]
    fn permuted_preserves_structure() {
        let g = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let h = g.permuted(&[3, 2, 1, 0]);
        assert_eq!(h.edges(), vec![(0, 1), (1, 2), (2, 3)]);
    }
}
