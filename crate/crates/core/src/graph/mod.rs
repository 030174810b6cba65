//! Simple undirected graphs on dense vertex ids `0..n`, stored as packed
//! adjacency bit rows.

mod graph6;
mod edgelist;
mod iso;
pub mod named;
mod ops;
mod set;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use edgelist::{parse_edge_list, write_edge_list};
pub use graph6::{decode_graph6, encode_graph6};
pub use iso::{are_isomorphic, invariant_key, Isomorphism};
pub use ops::{
    components, connecting_path, induced_subgraph, is_connected, line_graph, smooth, subdivide,
    subdivide_uniform, InducedSubgraph, Subdivision,
};
pub(crate) use ops::component_of;
pub use set::{Iter as VertexSetIter, VertexSet, MAX_VERTICES};

#[derive(Clone)]
pub struct Graph {
    n: usize,
    rows: Vec<VertexSet>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    ///
    /// Panics when `n` exceeds [`MAX_VERTICES`]; use [`Graph::from_edges`]
    /// for a fallible constructor.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_VERTICES, "graph on {n} vertices exceeds MAX_VERTICES");
        Graph { n, rows: vec![VertexSet::new(); n], labels: None }
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            g.try_add_edge(u, v)?;
        }
        Ok(g)
    }

    pub(crate) fn try_add_edge(&mut self, u: usize, v: usize) -> Result<()> {
        for x in [u, v] {
            if x >= self.n {
                return Err(Error::VertexOutOfRange { vertex: x, n: self.n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.add_edge(u, v);
        Ok(())
    }

    #[inline]
    pub(crate) fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.rows[u].insert(v);
        self.rows[v].insert(u);
    }

    #[inline]
    pub(crate) fn remove_edge(&mut self, u: usize, v: usize) {
        self.rows[u].remove(v);
        self.rows[v].remove(u);
    }

    /// Attaches text labels, one per vertex.
    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        if labels.len() != self.n {
            return Err(Error::InvalidParameter(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.n
            )));
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.labels.as_ref().map(|l| l[v].as_str())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.rows[v]
    }

    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        let mut s = self.rows[v];
        s.insert(v);
        s
    }

    #[inline]
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.edge_count());
        for u in 0..self.n {
            for v in self.rows[u].iter().filter(|&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    /// `N(X)`: vertices outside `X` with a neighbour in `X`.
    pub fn neighborhood_of(&self, x: VertexSet) -> VertexSet {
        let mut out = VertexSet::new();
        for v in x {
            out |= self.rows[v];
        }
        out - x
    }

    /// Neighbours of `v` inside `within`.
    #[inline]
    pub fn neighbors_in(&self, v: usize, within: VertexSet) -> VertexSet {
        self.rows[v] & within
    }

    pub fn is_clique(&self, x: VertexSet) -> bool {
        x.iter().all(|v| (x - VertexSet::singleton(v)).is_subset(&self.rows[v]))
    }

    pub fn is_stable(&self, x: VertexSet) -> bool {
        x.iter().all(|v| !self.rows[v].intersects(&x))
    }

    /// True when no edge joins `x` and `y`.
    pub fn anticomplete(&self, x: VertexSet, y: VertexSet) -> bool {
        x.iter().all(|v| !self.rows[v].intersects(&y))
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_set(&self, s: VertexSet) -> Result<()> {
        match s.max() {
            Some(v) if v >= self.n => Err(Error::VertexOutOfRange { vertex: v, n: self.n }),
            _ => Ok(()),
        }
    }

    /// Graph on the same vertex set with the edges relabelled by `perm`
    /// (vertex `v` becomes `perm[v]`).
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::empty(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    /// Disjoint union; vertices of `other` are shifted by `self.n()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        let mut edges = self.edges();
        edges.extend(other.edges().into_iter().map(|(u, v)| (u + self.n, v + self.n)));
        Graph::from_edges(n, &edges)
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.rows == other.rows
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges())
    }
}

/// A path embedded in a host graph: a vertex sequence whose consecutive
/// entries are adjacent. Length is the number of edges.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct EmbeddedPath {
    vertices: Vec<usize>,
}

impl EmbeddedPath {
    /// Checks adjacency of consecutive vertices and absence of repeats; with
    /// `induced`, also that non-consecutive vertices are non-adjacent.
    pub fn new(g: &Graph, vertices: Vec<usize>, induced: bool) -> Result<Self> {
        let p = EmbeddedPath { vertices };
        if p.vertices.is_empty() {
            return Err(Error::InvalidParameter("empty path".into()));
        }
        for &v in &p.vertices {
            g.check_vertex(v)?;
        }
        if !p.is_valid(g, induced) {
            return Err(Error::InvalidParameter(format!("{:?} is not a path", p.vertices)));
        }
        Ok(p)
    }

    pub(crate) fn from_vec_unchecked(vertices: Vec<usize>) -> Self {
        EmbeddedPath { vertices }
    }

    pub fn is_valid(&self, g: &Graph, induced: bool) -> bool {
        let set = self.vertex_set();
        if set.len() != self.vertices.len() {
            return false;
        }
        let k = self.vertices.len();
        for i in 0..k {
            for j in i + 1..k {
                let adj = g.adjacent(self.vertices[i], self.vertices[j]);
                if j == i + 1 && !adj {
                    return false;
                }
                if induced && j > i + 1 && adj {
                    return false;
                }
            }
        }
        true
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().collect()
    }

    pub fn ends(&self) -> (usize, usize) {
        (self.vertices[0], *self.vertices.last().unwrap())
    }

    pub fn interior(&self) -> VertexSet {
        if self.vertices.len() <= 2 {
            VertexSet::new()
        } else {
            self.vertices[1..self.vertices.len() - 1].iter().collect()
        }
    }

    pub fn length(&self) -> usize {
        self.vertices.len() - 1
    }

    pub fn reversed(&self) -> Self {
        let mut v = self.vertices.clone();
        v.reverse();
        EmbeddedPath { vertices: v }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_range() {
        assert!(matches!(Graph::from_edges(3, &[(1, 1)]), Err(Error::SelfLoop(1))));
        assert!(matches!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::VertexOutOfRange { vertex: 3, n: 3 })
        ));
        assert!(Graph::from_edges(MAX_VERTICES + 1, &[]).is_err());
    }

    #[test]
    fn adjacency_is_symmetric() {
        let g = Graph::from_edges(4, &[(0, 1), (2, 1), (3, 0)]).unwrap();
        for (u, v) in g.edges() {
            assert!(g.adjacent(u, v) && g.adjacent(v, u));
        }
        assert_eq!(g.edges(), vec![(0, 1), (0, 3), (1, 2)]);
        assert_eq!(g.edge_count(), 3);
    }

    #[test]
    fn path_validation() {
        let c6 = named::cycle(6);
        assert!(EmbeddedPath::new(&c6, vec![0, 1, 2, 3], true).is_ok());
        assert!(EmbeddedPath::new(&c6, vec![0, 2], false).is_err());
        // the full cycle walk is not induced: 0 and 5 are adjacent
        let p = EmbeddedPath::new(&c6, vec![0, 1, 2, 3, 4, 5], false).unwrap();
        assert!(!p.is_valid(&c6, true));
        assert_eq!(p.length(), 5);
        assert_eq!(p.interior().to_vec(), vec![1, 2, 3, 4]);
    }
}
