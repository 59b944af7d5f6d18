//! Undirected simple graphs with bitset adjacency rows.
//!
//! Graphs are immutable after construction. Vertices are `0..n`; induced
//! subgraphs carry a label map back to the parent's indices.

use crate::bitset::VertexSet;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge endpoint {endpoint} out of range for {n} vertices")]
    EndpointOutOfRange { endpoint: usize, n: usize },
    #[error("self-loop at vertex {0} rejected")]
    SelfLoop(usize),
}

/// An undirected simple graph. Adjacency is symmetric and irreflexive.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Graph {
            n,
            adj: (0..n).map(|_| VertexSet::empty(n)).collect(),
        }
    }

    /// Builds a graph from an edge list. Duplicate edges collapse silently;
    /// out-of-range endpoints and self-loops are rejected.
    pub fn build(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u >= n {
                return Err(GraphError::EndpointOutOfRange { endpoint: u, n });
            }
            if v >= n {
                return Err(GraphError::EndpointOutOfRange { endpoint: v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.adj[u].insert(v);
            g.adj[v].insert(u);
        }
        debug_assert!(g.is_valid());
        Ok(g)
    }

    /// Adds an edge between distinct in-range vertices. Internal builders only.
    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    /// Symmetry and irreflexivity; used by debug assertions and tests.
    pub fn is_valid(&self) -> bool {
        for v in 0..self.n {
            if self.adj[v].contains(v) {
                return false;
            }
            for u in self.adj[v].iter() {
                if !self.adj[u].contains(v) {
                    return false;
                }
            }
        }
        true
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Maximum-degree vertex, lowest index on ties. `None` for the empty graph.
    pub fn max_degree_vertex(&self) -> Option<(usize, usize)> {
        (0..self.n)
            .map(|v| (v, self.degree(v)))
            .max_by(|a, b| a.1.cmp(&b.1).then(b.0.cmp(&a.0)))
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree_vertex().map_or(0, |(_, d)| d)
    }

    pub fn edge_count(&self) -> usize {
        let total: usize = (0..self.n).map(|v| self.degree(v)).sum();
        total / 2
    }

    /// All edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    out.push((u, v));
                }
            }
        }
        out
    }

    pub fn full_vertex_set(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn complement(&self) -> Graph {
        let mut g = Graph::empty(self.n);
        for v in 0..self.n {
            let mut row = VertexSet::full(self.n);
            row.subtract(&self.adj[v]);
            row.remove(v);
            g.adj[v] = row;
        }
        g
    }

    /// Induced subgraph on `s`, plus the order-preserving label map from the
    /// new vertex indices back to this graph's indices.
    pub fn induced(&self, s: &VertexSet) -> (Graph, Vec<usize>) {
        assert_eq!(s.parent_size(), self.n, "vertex set out of range");
        let labels = s.to_vec();
        let mut back = vec![usize::MAX; self.n];
        for (i, &v) in labels.iter().enumerate() {
            back[v] = i;
        }
        let mut g = Graph::empty(labels.len());
        for (i, &v) in labels.iter().enumerate() {
            for u in self.adj[v].intersection(s).iter() {
                if u > v {
                    g.add_edge(i, back[u]);
                }
            }
        }
        (g, labels)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// C_n for tests and generators.
pub fn cycle(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Graph::build(n, &edges).expect("cycle edges are valid")
}

/// K_n.
pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            edges.push((u, v));
        }
    }
    Graph::build(n, &edges).expect("complete edges are valid")
}

/// P_n (path on n vertices).
pub fn path(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::build(n, &edges).expect("path edges are valid")
}

/// The Petersen graph: outer C_5, inner pentagram, spokes.
pub fn petersen() -> Graph {
    let mut edges = Vec::new();
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::build(10, &edges).expect("petersen edges are valid")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_cycle() {
        let g = Graph::build(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert_eq!(g.edge_count(), 5);
        assert!(g.has_edge(4, 0) && g.has_edge(0, 4));
        assert_eq!(g, cycle(5));
    }

    #[test]
    fn build_k1() {
        let g = Graph::build(1, &[]).unwrap();
        assert_eq!(g.n(), 1);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn duplicate_edges_collapse() {
        let g = Graph::build(3, &[(0, 1), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g, path(3));
    }

    #[test]
    fn build_rejections() {
        assert_eq!(
            Graph::build(3, &[(0, 3)]),
            Err(GraphError::EndpointOutOfRange { endpoint: 3, n: 3 })
        );
        assert_eq!(Graph::build(3, &[(1, 1)]), Err(GraphError::SelfLoop(1)));
    }

    #[test]
    fn induced_c5_consecutive_is_p3() {
        let g = cycle(5);
        let s = VertexSet::from_members(5, [1, 2, 3]);
        let (sub, labels) = g.induced(&s);
        assert_eq!(labels, vec![1, 2, 3]);
        assert_eq!(sub, path(3));
    }

    #[test]
    fn induced_empty_and_clique() {
        let g = complete(5);
        let (sub, labels) = g.induced(&VertexSet::empty(5));
        assert_eq!(sub.n(), 0);
        assert!(labels.is_empty());
        let s = VertexSet::from_members(5, [0, 2, 4]);
        let (sub, _) = g.induced(&s);
        assert_eq!(sub, complete(3));
    }

    #[test]
    fn induced_composes() {
        // G[S][T'] = G[T] when T' is the image of T inside S.
        let g = petersen();
        let s = VertexSet::from_members(10, [0, 2, 4, 5, 7, 9]);
        let (gs, labels) = g.induced(&s);
        let t_orig = [0, 4, 7, 9];
        let t_in_s: Vec<usize> = t_orig
            .iter()
            .map(|v| labels.iter().position(|x| x == v).unwrap())
            .collect();
        let (gst, _) = gs.induced(&VertexSet::from_members(gs.n(), t_in_s));
        let (gt, _) = g.induced(&VertexSet::from_members(10, t_orig));
        assert_eq!(gst, gt);
    }

    #[test]
    fn complement_involution() {
        let g = petersen();
        assert_eq!(g.complement().complement(), g);
        assert_eq!(g.complement().degree(0), 9 - 3);
    }

    #[test]
    fn max_degree_tiebreak_lowest_index() {
        let g = Graph::build(4, &[(1, 2), (2, 3), (1, 3), (1, 0)]).unwrap();
        assert_eq!(g.max_degree_vertex(), Some((1, 3)));
    }
}
