use std::collections::BTreeMap;

use super::{EmbeddedPath, Graph, VertexSet};
use crate::error::{Error, Result};

/// `G[S]` together with the map from its vertices back to the host.
#[derive(Clone, Debug)]
pub struct InducedSubgraph {
    pub graph: Graph,
    /// `to_host[i]` is the host vertex behind vertex `i` of `graph`.
    pub to_host: Vec<usize>,
}

impl InducedSubgraph {
    pub fn host_set(&self, local: VertexSet) -> VertexSet {
        local.iter().map(|v| self.to_host[v]).collect()
    }

    pub fn local_of(&self, host: usize) -> Option<usize> {
        self.to_host.binary_search(&host).ok()
    }

    pub fn local_set(&self, host: VertexSet) -> VertexSet {
        host.iter().filter_map(|v| self.local_of(v)).collect()
    }
}

/// Induced subgraph on `s`; vertices keep their relative order.
pub fn induced_subgraph(g: &Graph, s: VertexSet) -> Result<InducedSubgraph> {
    g.check_set(s)?;
    let to_host = s.to_vec();
    let mut sub = Graph::empty(to_host.len());
    for (i, &u) in to_host.iter().enumerate() {
        for (j, &v) in to_host.iter().enumerate().skip(i + 1) {
            if g.adjacent(u, v) {
                sub.add_edge(i, j);
            }
        }
    }
    if let Some(labels) = &g.labels {
        sub.labels = Some(to_host.iter().map(|&v| labels[v].clone()).collect());
    }
    Ok(InducedSubgraph { graph: sub, to_host })
}

/// The vertex set of the component of `G[within]` containing `start`.
pub(crate) fn component_of(g: &Graph, start: usize, within: VertexSet) -> VertexSet {
    let mut seen = VertexSet::singleton(start);
    let mut frontier = seen;
    while !frontier.is_empty() {
        let mut next = VertexSet::new();
        for v in frontier {
            next |= g.neighbors(v);
        }
        next &= within;
        next -= seen;
        seen |= next;
        frontier = next;
    }
    seen
}

/// Components of `G[within]`, ordered by their smallest vertex.
pub fn components(g: &Graph, within: VertexSet) -> Vec<VertexSet> {
    let mut rest = within;
    let mut out = Vec::new();
    while let Some(v) = rest.min() {
        let c = component_of(g, v, within);
        rest -= c;
        out.push(c);
    }
    out
}

pub fn is_connected(g: &Graph, within: VertexSet) -> bool {
    match within.min() {
        None => true,
        Some(v) => component_of(g, v, within) == within,
    }
}

/// A shortest path with one end in `from`, the other in `to` and interior in
/// `allowed_interior`; ties go to the lexicographically smallest vertex
/// sequence (read from the `from` end).
pub fn connecting_path(
    g: &Graph,
    from: VertexSet,
    to: VertexSet,
    allowed_interior: VertexSet,
) -> Option<EmbeddedPath> {
    let from = from & g.vertices();
    let to = to & g.vertices();
    if let Some(v) = (from & to).min() {
        return Some(EmbeddedPath::from_vec_unchecked(vec![v]));
    }
    // dist[v] = edges from v to the nearest `to` vertex, moving through
    // `allowed_interior` only.
    let mut dist = vec![usize::MAX; g.n()];
    for v in to {
        dist[v] = 0;
    }
    let mut layer = to;
    let mut reached = to;
    let mut d = 0;
    let mut best_start = None;
    while !layer.is_empty() {
        let mut next = VertexSet::new();
        for v in layer {
            next |= g.neighbors(v);
        }
        next -= reached;
        d += 1;
        if let Some(s) = (next & from).min() {
            best_start = Some((s, d));
            for v in next & from {
                dist[v] = d;
            }
            break;
        }
        next &= allowed_interior;
        for v in next {
            dist[v] = d;
        }
        reached |= next;
        layer = next;
    }
    let (start, total) = best_start?;
    let mut seq = vec![start];
    let mut cur = start;
    for remaining in (0..total).rev() {
        let target = if remaining == 0 { to } else { allowed_interior };
        let step = (g.neighbors(cur) & target)
            .iter()
            .find(|&v| dist[v] == remaining)
            .expect("BFS layers guarantee a successor");
        seq.push(step);
        cur = step;
    }
    Some(EmbeddedPath::from_vec_unchecked(seq))
}

/// Suppresses degree-2 vertices whose neighbours are non-adjacent, lowest
/// id first, until none remains. Surviving vertices keep their order.
pub fn smooth(g: &Graph) -> Graph {
    let mut h = g.clone();
    let mut alive = g.vertices();
    'outer: loop {
        for v in alive {
            if h.degree(v) == 2 {
                let nb = h.neighbors(v).to_vec();
                let (a, b) = (nb[0], nb[1]);
                if !h.adjacent(a, b) {
                    h.remove_edge(v, a);
                    h.remove_edge(v, b);
                    h.add_edge(a, b);
                    alive.remove(v);
                    continue 'outer;
                }
            }
        }
        break;
    }
    induced_subgraph(&h, alive).expect("alive is within range").graph
}

/// Line graph; vertex `i` is the `i`-th edge of [`Graph::edges`].
pub fn line_graph(g: &Graph) -> Graph {
    let edges = g.edges();
    let mut l = Graph::empty(edges.len());
    for i in 0..edges.len() {
        let (a, b) = edges[i];
        for (j, &(c, d)) in edges.iter().enumerate().skip(i + 1) {
            if a == c || a == d || b == c || b == d {
                l.add_edge(i, j);
            }
        }
    }
    l
}

#[derive(Clone, Debug)]
pub struct Subdivision {
    pub graph: Graph,
    /// For each original edge `(u, v)` (with `u < v`), the path realising it.
    pub paths: BTreeMap<(usize, usize), Vec<usize>>,
}

/// Replaces each edge by a path with `per_edge[(u, v)]` internal vertices
/// (absent keys mean zero). Original vertices keep their ids; new vertices
/// are appended edge by edge.
pub fn subdivide(g: &Graph, per_edge: &BTreeMap<(usize, usize), usize>) -> Result<Subdivision> {
    for &(u, v) in per_edge.keys() {
        if u >= g.n() || v >= g.n() || !g.adjacent(u, v) {
            return Err(Error::UnknownEdge(u, v));
        }
    }
    let count = |u: usize, v: usize| {
        per_edge.get(&(u, v)).or_else(|| per_edge.get(&(v, u))).copied().unwrap_or(0)
    };
    let edges = g.edges();
    let n = g.n() + edges.iter().map(|&(u, v)| count(u, v)).sum::<usize>();
    if n > super::MAX_VERTICES {
        return Err(Error::TooManyVertices { n, max: super::MAX_VERTICES });
    }
    let mut h = Graph::empty(n);
    let mut paths = BTreeMap::new();
    let mut next = g.n();
    for (u, v) in edges {
        let mut path = vec![u];
        for _ in 0..count(u, v) {
            path.push(next);
            next += 1;
        }
        path.push(v);
        for w in path.windows(2) {
            h.add_edge(w[0], w[1]);
        }
        paths.insert((u, v), path);
    }
    Ok(Subdivision { graph: h, paths })
}

/// Every edge subdivided `k` times.
pub fn subdivide_uniform(g: &Graph, k: usize) -> Result<Subdivision> {
    let per_edge = g.edges().into_iter().map(|e| (e, k)).collect();
    subdivide(g, &per_edge)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{are_isomorphic, named};

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    #[test]
    fn induced_subgraph_examples() {
        let k4 = named::complete(4);
        let s = induced_subgraph(&k4, set(&[0, 2, 3])).unwrap();
        assert_eq!(s.graph, named::complete(3));
        assert_eq!(s.to_host, vec![0, 2, 3]);

        let c6 = named::cycle(6);
        // v1, v2, v4 of C6 are 0, 1, 3
        let s = induced_subgraph(&c6, set(&[0, 1, 3])).unwrap();
        assert_eq!(s.graph.edges(), vec![(0, 1)]);

        assert_eq!(induced_subgraph(&c6, VertexSet::new()).unwrap().graph.n(), 0);
        assert!(induced_subgraph(&c6, set(&[6])).is_err());
    }

    #[test]
    fn components_examples() {
        let c6 = named::cycle(6);
        assert_eq!(components(&c6, c6.vertices()), vec![c6.vertices()]);
        let within = c6.vertices() - set(&[0, 3]);
        assert_eq!(components(&c6, within), vec![set(&[1, 2]), set(&[4, 5])]);
        assert!(components(&c6, VertexSet::new()).is_empty());
    }

    #[test]
    fn connecting_path_examples() {
        let p5 = named::path(5);
        let p = connecting_path(&p5, set(&[0]), set(&[4]), p5.vertices()).unwrap();
        assert_eq!(p.vertices(), &[0, 1, 2, 3, 4]);

        let c6 = named::cycle(6);
        let p = connecting_path(&c6, set(&[0]), set(&[3]), set(&[1, 2])).unwrap();
        assert_eq!(p.vertices(), &[0, 1, 2, 3]);

        // both arcs of C6 are shortest; the lexicographically smaller wins
        let p = connecting_path(&c6, set(&[0]), set(&[3]), c6.vertices()).unwrap();
        assert_eq!(p.vertices(), &[0, 1, 2, 3]);

        let two = named::path(2).disjoint_union(&named::path(2)).unwrap();
        assert!(connecting_path(&two, set(&[0]), set(&[2]), two.vertices()).is_none());
    }

    #[test]
    fn smooth_examples() {
        let k4 = named::complete(4);
        let sub = subdivide_uniform(&k4, 1).unwrap().graph;
        assert_eq!(sub.n(), 10);
        assert!(are_isomorphic(&smooth(&sub), &k4).unwrap().is_some());
        assert_eq!(smooth(&named::cycle(6)), named::complete(3));
        assert_eq!(smooth(&k4), k4);
    }

    #[test]
    fn line_graph_examples() {
        assert_eq!(line_graph(&named::path(3)), named::path(2));
        assert_eq!(line_graph(&named::star(3)), named::complete(3));
        assert_eq!(line_graph(&named::complete(3)), named::complete(3));
    }

    #[test]
    fn subdivide_examples() {
        let c6 = subdivide_uniform(&named::complete(3), 1).unwrap().graph;
        assert!(are_isomorphic(&c6, &named::cycle(6)).unwrap().is_some());
        let g = named::prism();
        assert_eq!(subdivide_uniform(&g, 0).unwrap().graph, g);
        let mut one = BTreeMap::new();
        one.insert((0, 1), 2);
        let p4 = subdivide(&named::path(2), &one).unwrap().graph;
        assert!(are_isomorphic(&p4, &named::path(4)).unwrap().is_some());
        one.insert((0, 2), 1);
        assert!(matches!(subdivide(&named::path(3), &one), Err(Error::UnknownEdge(0, 2))));
    }
}
