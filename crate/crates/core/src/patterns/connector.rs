use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{components, connecting_path, is_connected, Graph, VertexSet};

/// How `x_k` sees the path in the first outcome.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum NeighbourPattern {
    /// `x_k` has two non-adjacent neighbours in `H`.
    NonAdjacentPair,
    /// `x_k` has exactly two neighbours in `H`, and they are adjacent.
    AdjacentPair,
}

/// The three possible shapes of a minimal connector. Indices refer to the
/// positions of the terminals in the input triple (0-based).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "case", rename_all = "kebab-case")]
pub enum MinimalConnectorOutcome {
    /// `H ∪ {x_i, x_j}` is a path from `x_i` to `x_j`, or a hole through the
    /// edge `x_i x_j`; `path` runs from `x_i` to `x_j` through `H`.
    PathOrHole { i: usize, j: usize, k: usize, path: Vec<usize>, hole: bool, x_k_sees: NeighbourPattern },
    /// Hub `a` with paths `paths[i]` from `a` to `x_i`.
    Hub { a: usize, paths: [Vec<usize>; 3] },
    /// Triangle `a_1 a_2 a_3` in `H` with paths `paths[i]` from `a_i` to `x_i`.
    Triangle { triangle: [usize; 3], paths: [Vec<usize>; 3] },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalConnector {
    pub h: VertexSet,
    pub outcome: MinimalConnectorOutcome,
}

fn meets_all(g: &Graph, xs: [usize; 3], h: VertexSet) -> bool {
    xs.iter().all(|&x| g.neighbors(x).intersects(&h))
}

/// [`minimal_connector_within`] with every vertex except the terminals
/// allowed.
pub fn minimal_connector(g: &Graph, x1: usize, x2: usize, x3: usize) -> Result<MinimalConnector> {
    let xs = [x1, x2, x3];
    let allowed = g.vertices() - xs.iter().collect::<VertexSet>();
    minimal_connector_within(g, xs, allowed)
}

/// Finds a connected `H ⊆ allowed` meeting `N(x_1)`, `N(x_2)`, `N(x_3)` that
/// is minimal under inclusion (greedy deletion in ascending id order), and
/// classifies it.
pub fn minimal_connector_within(g: &Graph, xs: [usize; 3], allowed: VertexSet) -> Result<MinimalConnector> {
    for &x in &xs {
        g.check_vertex(x)?;
    }
    if xs[0] == xs[1] || xs[0] == xs[2] || xs[1] == xs[2] {
        return Err(Error::InvalidParameter("terminals must be distinct".into()));
    }
    let allowed = allowed & (g.vertices() - xs.iter().collect::<VertexSet>());
    let mut h = components(g, allowed)
        .into_iter()
        .find(|&c| meets_all(g, xs, c))
        .ok_or(Error::NoConnector)?;
    loop {
        let before = h;
        for v in before {
            let smaller = h - VertexSet::singleton(v);
            if meets_all(g, xs, smaller) && is_connected(g, smaller) {
                h = smaller;
            }
        }
        if h == before {
            break;
        }
    }
    let outcome = classify(g, xs, h).ok_or_else(|| {
        Error::Hypothesis(format!("minimal connector {h:?} matches no outcome"))
    })?;
    Ok(MinimalConnector { h, outcome })
}

fn classify(g: &Graph, xs: [usize; 3], h: VertexSet) -> Option<MinimalConnectorOutcome> {
    path_outcome(g, xs, h).or_else(|| hub_outcome(g, xs, h)).or_else(|| triangle_outcome(g, xs, h))
}

fn path_outcome(g: &Graph, xs: [usize; 3], h: VertexSet) -> Option<MinimalConnectorOutcome> {
    for (i, j, k) in [(0, 1, 2), (0, 2, 1), (1, 2, 0)] {
        let (xi, xj, xk) = (xs[i], xs[j], xs[k]);
        let Some(inner) = connecting_path(g, g.neighbors(xi) & h, g.neighbors(xj) & h, h) else {
            continue;
        };
        let mut path = vec![xi];
        path.extend_from_slice(inner.vertices());
        path.push(xj);
        let cand = MinimalConnectorOutcome::PathOrHole {
            i,
            j,
            k,
            path,
            hole: g.adjacent(xi, xj),
            x_k_sees: if g.is_clique(g.neighbors(xk) & h) {
                NeighbourPattern::AdjacentPair
            } else {
                NeighbourPattern::NonAdjacentPair
            },
        };
        if check_outcome(g, xs, h, &cand) {
            return Some(cand);
        }
    }
    None
}

fn hub_outcome(g: &Graph, xs: [usize; 3], h: VertexSet) -> Option<MinimalConnectorOutcome> {
    for a in h {
        let paths = xs.map(|x| {
            connecting_path(g, VertexSet::singleton(a), VertexSet::singleton(x), h).map(|p| p.vertices().to_vec())
        });
        if let [Some(p1), Some(p2), Some(p3)] = paths {
            let cand = MinimalConnectorOutcome::Hub { a, paths: [p1, p2, p3] };
            if check_outcome(g, xs, h, &cand) {
                return Some(cand);
            }
        }
    }
    None
}

fn triangle_outcome(g: &Graph, xs: [usize; 3], h: VertexSet) -> Option<MinimalConnectorOutcome> {
    let sub = crate::graph::induced_subgraph(g, h).ok()?;
    for t in crate::cliques::triangles(&sub.graph) {
        let t = t.map(|v| sub.to_host[v]);
        for perm in [[0, 1, 2], [0, 2, 1], [1, 0, 2], [1, 2, 0], [2, 0, 1], [2, 1, 0]] {
            let tri = [t[perm[0]], t[perm[1]], t[perm[2]]];
            let paths: Vec<Option<Vec<usize>>> = (0..3)
                .map(|i| {
                    let others: VertexSet = (0..3).filter(|&j| j != i).map(|j| tri[j]).collect();
                    connecting_path(g, VertexSet::singleton(tri[i]), VertexSet::singleton(xs[i]), h - others)
                        .map(|p| p.vertices().to_vec())
                })
                .collect();
            if let [Some(p1), Some(p2), Some(p3)] = &paths[..] {
                let cand = MinimalConnectorOutcome::Triangle {
                    triangle: tri,
                    paths: [p1.clone(), p2.clone(), p3.clone()],
                };
                if check_outcome(g, xs, h, &cand) {
                    return Some(cand);
                }
            }
        }
    }
    None
}

fn is_path(g: &Graph, p: &[usize]) -> bool {
    let set: VertexSet = p.iter().collect();
    set.len() == p.len()
        && (0..p.len()).all(|i| (i + 1..p.len()).all(|j| g.adjacent(p[i], p[j]) == (j == i + 1)))
}

fn set_of(p: &[usize]) -> VertexSet {
    p.iter().collect()
}

/// Re-checks every condition of an outcome from scratch.
pub(crate) fn check_outcome(g: &Graph, xs: [usize; 3], h: VertexSet, o: &MinimalConnectorOutcome) -> bool {
    let xset: VertexSet = xs.iter().collect();
    match o {
        MinimalConnectorOutcome::PathOrHole { i, j, k, path, hole, x_k_sees } => {
            let (xi, xj, xk) = (xs[*i], xs[*j], xs[*k]);
            if path.first() != Some(&xi) || path.last() != Some(&xj) || path.len() < 3 {
                return false;
            }
            // as a path x_i..x_j it is induced except for the closing edge of a hole
            let set = set_of(path);
            if set.len() != path.len() || set - VertexSet::singleton(xi) - VertexSet::singleton(xj) != h {
                return false;
            }
            let n = path.len();
            for a in 0..n {
                for b in a + 1..n {
                    let want = b == a + 1 || (*hole && a == 0 && b == n - 1);
                    if g.adjacent(path[a], path[b]) != want {
                        return false;
                    }
                }
            }
            if *hole && n < 4 {
                return false;
            }
            let seen = g.neighbors(xk) & h;
            let two_non_adjacent = !g.is_clique(seen);
            let adjacent_pair = seen.len() == 2 && g.is_clique(seen);
            match x_k_sees {
                NeighbourPattern::NonAdjacentPair => two_non_adjacent,
                NeighbourPattern::AdjacentPair => adjacent_pair,
            }
        }
        MinimalConnectorOutcome::Hub { a, paths } => {
            if !h.contains(*a) {
                return false;
            }
            let mut union = VertexSet::new();
            let mut privates = Vec::new();
            for (i, p) in paths.iter().enumerate() {
                if p.first() != Some(a) || p.last() != Some(&xs[i]) || !is_path(g, p) {
                    return false;
                }
                union |= set_of(p);
                privates.push(set_of(p) - VertexSet::singleton(*a));
            }
            if union - xset != h {
                return false;
            }
            pairwise_ok(g, xs, &privates)
        }
        MinimalConnectorOutcome::Triangle { triangle, paths } => {
            let tset: VertexSet = triangle.iter().collect();
            if tset.len() != 3 || !g.is_clique(tset) || !tset.is_subset(&h) {
                return false;
            }
            let mut union = VertexSet::new();
            let mut sets = Vec::new();
            for (i, p) in paths.iter().enumerate() {
                if p.first() != Some(&triangle[i]) || p.last() != Some(&xs[i]) || !is_path(g, p) {
                    return false;
                }
                union |= set_of(p);
                sets.push(set_of(p));
            }
            if union - xset != h {
                return false;
            }
            for i in 0..3 {
                for j in i + 1..3 {
                    if sets[i].intersects(&sets[j]) {
                        return false;
                    }
                    for u in sets[i] {
                        for v in sets[j] & g.neighbors(u) {
                            let ok = (u == triangle[i] && v == triangle[j]) || (u == xs[i] && v == xs[j]);
                            if !ok {
                                return false;
                            }
                        }
                    }
                }
            }
            true
        }
    }
}

fn pairwise_ok(g: &Graph, xs: [usize; 3], privates: &[VertexSet]) -> bool {
    for i in 0..3 {
        for j in i + 1..3 {
            if privates[i].intersects(&privates[j]) {
                return false;
            }
            for u in privates[i] {
                for v in privates[j] & g.neighbors(u) {
                    if !(u == xs[i] && v == xs[j]) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Deleting any vertex of `h` loses connectivity or a neighbourhood.
pub fn is_minimal_connector(g: &Graph, xs: [usize; 3], h: VertexSet) -> bool {
    h.iter().all(|v| {
        let s = h - VertexSet::singleton(v);
        !(meets_all(g, xs, s) && is_connected(g, s))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;

    #[test]
    fn claw_gives_hub() {
        let g = named::star(3);
        let m = minimal_connector(&g, 1, 2, 3).unwrap();
        assert_eq!(m.h, VertexSet::singleton(0));
        match m.outcome {
            MinimalConnectorOutcome::Hub { a, paths } => {
                assert_eq!(a, 0);
                assert!(paths.iter().all(|p| p.len() == 2));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn path_with_adjacent_pair() {
        // x1=0 - p1=1 - p2=2 - x2=3, x3=4 adjacent to p1 and p2
        let g = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (4, 1), (4, 2)]).unwrap();
        let m = minimal_connector(&g, 0, 3, 4).unwrap();
        match m.outcome {
            MinimalConnectorOutcome::PathOrHole { i: 0, j: 1, k: 2, x_k_sees, hole: false, .. } => {
                assert_eq!(x_k_sees, NeighbourPattern::AdjacentPair)
            }
            other => panic!("{other:?}"),
        }
        assert!(is_minimal_connector(&g, [0, 3, 4], m.h));
    }

    #[test]
    fn triangle_with_pendants() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (0, 2), (0, 3), (1, 4), (2, 5)]).unwrap();
        let m = minimal_connector(&g, 3, 4, 5).unwrap();
        assert!(matches!(m.outcome, MinimalConnectorOutcome::Triangle { triangle: [0, 1, 2], .. }));
    }

    #[test]
    fn no_connector() {
        let g = named::path(3).disjoint_union(&Graph::empty(1)).unwrap();
        assert!(matches!(minimal_connector(&g, 0, 2, 3), Err(Error::NoConnector)));
    }
}
