//! Exact treewidth, tree decomposition validation and the two conversions
//! between balanced separators and tree decompositions.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::cutsets::{clique_atoms, AtomTree};
use crate::graph::{components, induced_subgraph, Graph, VertexSet};
use crate::weights::{is_balanced_separator, Rational, Weighting};

/// Largest graph `exact_treewidth` accepts.
pub const EXACT_CAP: usize = 22;

/// A tree with a bag per node. Node ids are `0..bags.len()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub bags: Vec<VertexSet>,
    pub edges: Vec<(usize, usize)>,
}

#[derive(Serialize, Deserialize)]
struct RawDecomposition {
    nodes: Vec<usize>,
    edges: Vec<[usize; 2]>,
    bags: Vec<Vec<usize>>,
}

impl Serialize for TreeDecomposition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawDecomposition {
            nodes: (0..self.bags.len()).collect(),
            edges: self.edges.iter().map(|&(a, b)| [a, b]).collect(),
            bags: self.bags.iter().map(|b| b.to_vec()).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for TreeDecomposition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawDecomposition::deserialize(d)?;
        if raw.nodes.len() != raw.bags.len() || raw.nodes.iter().enumerate().any(|(i, &x)| i != x) {
            return Err(serde::de::Error::custom("nodes must be 0..k with one bag each"));
        }
        Ok(TreeDecomposition {
            bags: raw.bags.iter().map(|b| b.iter().collect()).collect(),
            edges: raw.edges.iter().map(|e| (e[0], e[1])).collect(),
        })
    }
}

impl TreeDecomposition {
    /// Largest bag size minus one (0 for a decomposition of the empty graph).
    pub fn width(&self) -> usize {
        self.bags.iter().map(|b| b.len()).max().unwrap_or(0).saturating_sub(1)
    }

    pub fn node_count(&self) -> usize {
        self.bags.len()
    }

    fn adjacency(&self) -> Vec<Vec<usize>> {
        let mut adj = vec![Vec::new(); self.bags.len()];
        for &(a, b) in &self.edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        adj
    }
}

/// The first tree-decomposition axiom a decomposition breaks.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "violation", rename_all = "snake_case")]
pub enum DecompositionViolation {
    /// The underlying graph is not a tree, or a bag names a missing vertex.
    NotATree { reason: String },
    /// Axiom 1: some vertex is in no bag.
    VertexUncovered { vertex: usize },
    /// Axiom 2: some edge is in no bag.
    EdgeUncovered { u: usize, v: usize },
    /// Axiom 3: the bags holding some vertex do not form a subtree.
    Disconnected { vertex: usize },
}

impl DecompositionViolation {
    /// 1, 2 or 3 for the axiom broken; 0 when the tree itself is malformed.
    pub fn axiom(&self) -> u8 {
        match self {
            DecompositionViolation::NotATree { .. } => 0,
            DecompositionViolation::VertexUncovered { .. } => 1,
            DecompositionViolation::EdgeUncovered { .. } => 2,
            DecompositionViolation::Disconnected { .. } => 3,
        }
    }
}

impl fmt::Display for DecompositionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecompositionViolation::NotATree { reason } => write!(f, "not a tree: {reason}"),
            DecompositionViolation::VertexUncovered { vertex } => write!(f, "vertex {vertex} is in no bag"),
            DecompositionViolation::EdgeUncovered { u, v } => write!(f, "edge {u}-{v} is in no bag"),
            DecompositionViolation::Disconnected { vertex } => {
                write!(f, "bags containing {vertex} are not connected")
            }
        }
    }
}

/// Checks the tree shape and the three axioms; returns the width.
pub fn validate_decomposition(g: &Graph, td: &TreeDecomposition) -> std::result::Result<usize, DecompositionViolation> {
    let k = td.bags.len();
    let not_tree = |reason: String| DecompositionViolation::NotATree { reason };
    if k == 0 {
        return Err(not_tree("no nodes".into()));
    }
    if td.edges.len() != k - 1 {
        return Err(not_tree(format!("{k} nodes but {} edges", td.edges.len())));
    }
    if let Some(&(a, b)) = td.edges.iter().find(|&&(a, b)| a >= k || b >= k || a == b) {
        return Err(not_tree(format!("bad edge {a}-{b}")));
    }
    let adj = td.adjacency();
    let reach = |allowed: &dyn Fn(usize) -> bool, start: usize| {
        let mut seen = vec![false; k];
        let mut stack = vec![start];
        seen[start] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] && allowed(y) {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        count
    };
    if reach(&|_| true, 0) != k {
        return Err(not_tree("disconnected".into()));
    }
    let all = g.vertices();
    if let Some(i) = td.bags.iter().position(|b| !b.is_subset(&all)) {
        return Err(not_tree(format!("bag {i} names a vertex outside the graph")));
    }
    let covered = td.bags.iter().fold(VertexSet::new(), |acc, b| acc | *b);
    if let Some(vertex) = (all - covered).min() {
        return Err(DecompositionViolation::VertexUncovered { vertex });
    }
    for (u, v) in g.edges() {
        if !td.bags.iter().any(|b| b.contains(u) && b.contains(v)) {
            return Err(DecompositionViolation::EdgeUncovered { u, v });
        }
    }
    for vertex in all {
        let holding: Vec<usize> = (0..k).filter(|&i| td.bags[i].contains(vertex)).collect();
        if reach(&|i| td.bags[i].contains(vertex), holding[0]) != holding.len() {
            return Err(DecompositionViolation::Disconnected { vertex });
        }
    }
    Ok(td.width())
}

pub fn is_valid_decomposition(g: &Graph, td: &TreeDecomposition) -> bool {
    validate_decomposition(g, td).is_ok()
}

/// Decomposition induced by eliminating vertices in `order` (which must list
/// every vertex once). Its width is the ordering's width.
pub fn decomposition_from_ordering(g: &Graph, order: &[usize]) -> TreeDecomposition {
    let n = g.n();
    debug_assert_eq!(order.len(), n);
    if n == 0 {
        return TreeDecomposition { bags: vec![VertexSet::new()], edges: Vec::new() };
    }
    let mut pos = vec![0; n];
    for (i, &v) in order.iter().enumerate() {
        pos[v] = i;
    }
    let mut adj: Vec<VertexSet> = (0..n).map(|v| g.neighbors(v)).collect();
    let mut bags = Vec::with_capacity(n);
    let mut edges = Vec::new();
    let mut roots = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        let later = adj[v];
        for u in later {
            adj[u] |= later - VertexSet::singleton(u);
            adj[u].remove(v);
        }
        let mut bag = later;
        bag.insert(v);
        bags.push(bag);
        match later.iter().min_by_key(|&u| pos[u]) {
            Some(u) => edges.push((i, pos[u])),
            None => roots.push(i),
        }
    }
    for pair in roots.windows(2) {
        edges.push((pair[0], pair[1]));
    }
    TreeDecomposition { bags, edges }
}

fn local_adjacency(g: &Graph, verts: &[usize]) -> Vec<u32> {
    verts
        .iter()
        .map(|&u| {
            verts
                .iter()
                .enumerate()
                .filter(|&(_, &v)| g.adjacent(u, v))
                .fold(0u32, |acc, (j, _)| acc | (1 << j))
        })
        .collect()
}

/// Vertices outside `s + v` reachable from `v` through `s`: the neighbours
/// `v` has when eliminated right after the vertices of `s`.
fn elimination_neighbours(adj: &[u32], s: u32, v: usize) -> u32 {
    let mut comp = 1u32 << v;
    let mut frontier = comp;
    let mut boundary = 0u32;
    while frontier != 0 {
        let mut next = 0u32;
        let mut f = frontier;
        while f != 0 {
            let x = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[x];
        }
        boundary |= next;
        next &= s & !comp;
        comp |= next;
        frontier = next;
    }
    boundary & !comp & !s
}

/// Min-fill greedy ordering on local masks; returns (width, order).
fn min_fill_ordering(adj: &[u32]) -> (usize, Vec<usize>) {
    let m = adj.len();
    let mut adj = adj.to_vec();
    let mut alive: u32 = if m == 32 { u32::MAX } else { (1u32 << m) - 1 };
    let mut order = Vec::with_capacity(m);
    let mut width = 0;
    while alive != 0 {
        let mut best: Option<(usize, usize)> = None;
        let mut a = alive;
        while a != 0 {
            let v = a.trailing_zeros() as usize;
            a &= a - 1;
            let nb = adj[v] & alive;
            let mut fill = 0;
            let mut it = nb;
            while it != 0 {
                let x = it.trailing_zeros() as usize;
                it &= it - 1;
                fill += (nb & !adj[x] & !(1 << x)).count_ones() as usize;
            }
            if best.is_none_or(|(f, _)| fill < f) {
                best = Some((fill, v));
            }
        }
        let v = best.unwrap().1;
        let nb = adj[v] & alive;
        width = width.max(nb.count_ones() as usize);
        let mut it = nb;
        while it != 0 {
            let x = it.trailing_zeros() as usize;
            it &= it - 1;
            adj[x] |= nb & !(1 << x);
        }
        alive &= !(1 << v);
        order.push(v);
    }
    (width, order)
}

/// Minor-min-width lower bound: repeatedly contract a minimum-degree vertex
/// into its minimum-degree neighbour.
fn minor_min_width(adj: &[u32]) -> usize {
    let m = adj.len();
    let mut adj = adj.to_vec();
    let mut alive: u32 = (1u64 << m).wrapping_sub(1) as u32;
    let mut lb = 0;
    while alive != 0 {
        let deg = |adj: &[u32], v: usize| (adj[v] & alive).count_ones() as usize;
        let mut a = alive;
        let mut v = a.trailing_zeros() as usize;
        while a != 0 {
            let x = a.trailing_zeros() as usize;
            a &= a - 1;
            if deg(&adj, x) < deg(&adj, v) {
                v = x;
            }
        }
        let d = deg(&adj, v);
        lb = lb.max(d);
        let nb = adj[v] & alive;
        if nb != 0 {
            let mut it = nb;
            let mut u = it.trailing_zeros() as usize;
            while it != 0 {
                let x = it.trailing_zeros() as usize;
                it &= it - 1;
                if deg(&adj, x) < deg(&adj, u) {
                    u = x;
                }
            }
            let merged = (adj[v] | adj[u]) & !(1 << u) & !(1 << v);
            adj[u] = merged;
            let mut it = merged;
            while it != 0 {
                let x = it.trailing_zeros() as usize;
                it &= it - 1;
                adj[x] = (adj[x] & !(1 << v)) | (1 << u);
            }
        }
        alive &= !(1 << v);
    }
    lb
}

/// An elimination ordering of width at most `k`, if one exists, found by a
/// layered search over the sets of already-eliminated vertices.
fn ordering_within(adj: &[u32], k: usize) -> Option<Vec<usize>> {
    let m = adj.len();
    let mut parent: HashMap<u32, (u32, u8)> = HashMap::new();
    parent.insert(0, (0, 0));
    let mut layer = vec![0u32];
    loop {
        let mut next = Vec::new();
        for &s in &layer {
            let rest = m - s.count_ones() as usize;
            if rest <= k + 1 {
                let mut order = Vec::with_capacity(m);
                let mut cur = s;
                while cur != 0 {
                    let (p, v) = parent[&cur];
                    order.push(v as usize);
                    cur = p;
                }
                order.reverse();
                order.extend((0..m).filter(|&v| s & (1 << v) == 0));
                return Some(order);
            }
            for v in 0..m {
                if s & (1 << v) != 0 {
                    continue;
                }
                let t = s | (1 << v);
                if parent.contains_key(&t) {
                    continue;
                }
                if elimination_neighbours(adj, s, v).count_ones() as usize <= k {
                    parent.insert(t, (s, v as u8));
                    next.push(t);
                }
            }
        }
        if next.is_empty() {
            return None;
        }
        layer = next;
    }
}

/// Optimal elimination ordering of one connected piece, in local ids.
fn exact_ordering(adj: &[u32]) -> (usize, Vec<usize>) {
    let (ub, heuristic) = min_fill_ordering(adj);
    let lb = minor_min_width(adj);
    for k in lb..ub {
        if let Some(order) = ordering_within(adj, k) {
            return (k, order);
        }
    }
    (ub, heuristic)
}

/// Treewidth with a witness decomposition; graphs with more than
/// [`EXACT_CAP`] vertices are refused.
pub fn exact_treewidth(g: &Graph) -> Result<(usize, TreeDecomposition)> {
    if g.n() > EXACT_CAP {
        return Err(Error::ScaleCap { what: "exact treewidth", size: g.n(), cap: EXACT_CAP });
    }
    let mut order = Vec::with_capacity(g.n());
    let mut width = 0;
    for comp in components(g, g.vertices()) {
        let verts = comp.to_vec();
        let (w, local) = exact_ordering(&local_adjacency(g, &verts));
        width = width.max(w);
        order.extend(local.into_iter().map(|i| verts[i]));
    }
    let td = decomposition_from_ordering(g, &order);
    debug_assert_eq!(validate_decomposition(g, &td), Ok(width));
    Ok((width, td))
}

/// Decomposition glued from exact decompositions of the clique-cutset
/// atoms; its width is the treewidth of `G` as long as every atom is within
/// [`EXACT_CAP`].
pub fn decomposition_along_clique_cutsets(g: &Graph) -> Result<TreeDecomposition> {
    fn build(g: &Graph, tree: &AtomTree) -> Result<TreeDecomposition> {
        match tree {
            AtomTree::Atom { atom } => {
                let sub = induced_subgraph(g, *atom)?;
                let (_, td) = exact_treewidth(&sub.graph)?;
                Ok(TreeDecomposition { bags: td.bags.iter().map(|b| sub.host_set(*b)).collect(), edges: td.edges })
            }
            AtomTree::Split { cutset, children } => {
                let mut out = TreeDecomposition { bags: Vec::new(), edges: Vec::new() };
                let mut anchor = None;
                for child in children {
                    let td = build(g, child)?;
                    let holder = td.bags.iter().position(|b| cutset.is_subset(b)).unwrap_or(0);
                    let offset = out.bags.len();
                    out.bags.extend(td.bags);
                    out.edges.extend(td.edges.iter().map(|&(a, b)| (a + offset, b + offset)));
                    match anchor {
                        Some(a) => out.edges.push((a, holder + offset)),
                        None => anchor = Some(holder + offset),
                    }
                }
                Ok(out)
            }
        }
    }
    let td = build(g, &clique_atoms(g))?;
    validate_decomposition(g, &td).map_err(|v| Error::InvalidDecomposition(v.to_string()))?;
    Ok(td)
}

/// Builds a decomposition by recursively splitting with separators from
/// `oracle`, which is asked for a `(w, c)`-balanced separator of size at most
/// `k` under weightings uniform on a boundary set. Every answer is checked.
///
/// For `c = 1/2` the width is at most `3k + 2`; in general bags have at most
/// `T + k` vertices with `T = floor(k / (1 - c)) + 1`.
pub fn decomposition_from_separators<F>(g: &Graph, mut oracle: F, k: usize, c: Rational) -> Result<TreeDecomposition>
where
    F: FnMut(&Weighting) -> Result<VertexSet>,
{
    if c < Rational::new(1, 2) || c >= Rational::from_integer(1) {
        return Err(Error::InvalidParameter(format!("balance {c} outside [1/2, 1)")));
    }
    let one_minus = Rational::from_integer(1) - c;
    let threshold = (Rational::from_integer(k as u64) / one_minus).to_integer() as usize + 1;

    let mut td = TreeDecomposition { bags: Vec::new(), edges: Vec::new() };
    let mut root_chain: Option<usize> = None;
    if g.n() == 0 {
        td.bags.push(VertexSet::new());
        return Ok(td);
    }
    // (region, parent node)
    let mut stack: Vec<(VertexSet, Option<usize>)> = Vec::new();
    for comp in components(g, g.vertices()).into_iter().rev() {
        stack.push((comp, None));
    }
    while let Some((region, parent)) = stack.pop() {
        let boundary = g.neighborhood_of(region) - region;
        let bag = if boundary.len() < threshold {
            let mut b = boundary;
            b.insert(region.min().unwrap());
            b
        } else {
            let w = Weighting::uniform_on(g.n(), boundary)?;
            let s = oracle(&w)?;
            if s.len() > k || !s.is_subset(&g.vertices()) {
                return Err(Error::Oracle(format!("separator {s:?} has more than {k} vertices")));
            }
            if !is_balanced_separator(g, &w, s, c) {
                return Err(Error::Oracle(format!("{s:?} is not a ({c})-balanced separator")));
            }
            if !s.intersects(&region) {
                return Err(Error::Oracle(format!("{s:?} misses the region it must split")));
            }
            boundary | (s & region)
        };
        let node = td.bags.len();
        td.bags.push(bag);
        match parent {
            Some(p) => td.edges.push((p, node)),
            None => {
                if let Some(prev) = root_chain {
                    td.edges.push((prev, node));
                }
                root_chain = Some(node);
            }
        }
        for child in components(g, region - bag).into_iter().rev() {
            stack.push((child, Some(node)));
        }
    }
    Ok(td)
}

/// A bag of `td` that is a `(w, c)`-balanced separator, found by walking
/// towards the heavy component until none remains.
pub fn separator_from_decomposition(g: &Graph, td: &TreeDecomposition, w: &Weighting, c: Rational) -> Result<VertexSet> {
    validate_decomposition(g, td).map_err(|v| Error::InvalidDecomposition(v.to_string()))?;
    w.check_graph(g)?;
    if c < Rational::new(1, 2) || c > Rational::from_integer(1) {
        return Err(Error::InvalidParameter(format!("balance {c} outside [1/2, 1]")));
    }
    let adj = td.adjacency();
    let mut cur = 0;
    for _ in 0..=td.bags.len() {
        let bag = td.bags[cur];
        let heavy = components(g, g.vertices() - bag).into_iter().find(|d| !w.at_most(*d, c));
        let Some(heavy) = heavy else {
            return Ok(bag);
        };
        let branch_meets = |start: usize| {
            let mut seen = vec![false; td.bags.len()];
            seen[cur] = true;
            seen[start] = true;
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                if td.bags[x].intersects(&heavy) {
                    return true;
                }
                for &y in &adj[x] {
                    if !seen[y] {
                        seen[y] = true;
                        stack.push(y);
                    }
                }
            }
            false
        };
        cur = adj[cur]
            .iter()
            .copied()
            .find(|&t| branch_meets(t))
            .ok_or_else(|| Error::InvalidDecomposition("heavy component appears in no branch".into()))?;
    }
    Err(Error::InvalidDecomposition("centroid walk did not terminate".into()))
}

/// Maximum degree of the subgraph induced by the vertices of degree at
/// least `d`.
pub fn gamma_d(g: &Graph, d: usize) -> usize {
    let high: VertexSet = (0..g.n()).filter(|&v| g.degree(v) >= d).collect();
    high.iter().map(|v| g.neighbors_in(v, high).len()).max().unwrap_or(0)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::named;
    use crate::graph::subdivide_uniform;
    use crate::weights::smallest_balanced_separator;

    /// Minimum width over all elimination orderings.
    fn brute_force_treewidth(g: &Graph) -> usize {
        fn permute(order: &mut Vec<usize>, i: usize, g: &Graph, best: &mut usize) {
            if i == order.len() {
                let w = decomposition_from_ordering(g, order).width();
                *best = (*best).min(w);
                return;
            }
            for j in i..order.len() {
                order.swap(i, j);
                permute(order, i + 1, g, best);
                order.swap(i, j);
            }
        }
        let mut order: Vec<usize> = (0..g.n()).collect();
        let mut best = usize::MAX;
        permute(&mut order, 0, g, &mut best);
        best
    }

    #[test]
    fn small_families() {
        for t in 1..=5 {
            assert_eq!(exact_treewidth(&named::complete(t + 1)).unwrap().0, t);
        }
        assert_eq!(exact_treewidth(&named::path(7)).unwrap().0, 1);
        assert_eq!(exact_treewidth(&named::star(5)).unwrap().0, 1);
        assert_eq!(exact_treewidth(&named::cycle(6)).unwrap().0, 2);
        assert_eq!(exact_treewidth(&named::grid(4, 4)).unwrap().0, 4);
        assert_eq!(exact_treewidth(&named::complete_bipartite(3, 3)).unwrap().0, 3);
        assert_eq!(exact_treewidth(&Graph::empty(3)).unwrap().0, 0);
        assert!(exact_treewidth(&Graph::empty(23)).unwrap_err().is_scale_cap());
    }

    #[test]
    fn matches_ordering_enumeration() {
        let graphs = [named::prism(), named::pyramid([2, 2, 3]), named::theta([2, 3, 3]), named::grid(2, 4)];
        for g in &graphs {
            let (w, td) = exact_treewidth(g).unwrap();
            assert_eq!(validate_decomposition(g, &td), Ok(w));
            assert_eq!(w, brute_force_treewidth(g));
        }
    }

    #[test]
    fn axioms_reported() {
        let g = named::path(2);
        let td = TreeDecomposition { bags: vec![[0].iter().collect(), [1].iter().collect()], edges: vec![(0, 1)] };
        assert_eq!(validate_decomposition(&g, &td).unwrap_err().axiom(), 2);
        let g = named::path(3);
        let bags = vec![[0, 1].iter().collect(), [2].iter().collect(), [1, 2].iter().collect()];
        let td = TreeDecomposition { bags, edges: vec![(0, 1), (1, 2)] };
        assert_eq!(validate_decomposition(&g, &td).unwrap_err(), DecompositionViolation::Disconnected { vertex: 1 });
        let td = TreeDecomposition { bags: vec![[0, 1].iter().collect()], edges: vec![] };
        assert_eq!(validate_decomposition(&g, &td).unwrap_err().axiom(), 1);
    }

    #[test]
    fn json_shape() {
        let (_, td) = exact_treewidth(&named::path(3)).unwrap();
        let text = serde_json::to_string(&td).unwrap();
        assert!(text.starts_with(r#"{"nodes":[0,1,2],"edges":"#));
        let back: TreeDecomposition = serde_json::from_str(&text).unwrap();
        assert_eq!(back, td);
    }

    #[test]
    fn separators_to_decomposition() {
        let half = Rational::new(1, 2);
        for (g, k) in [(named::cycle(6), 2), (named::path(9), 1), (named::grid(3, 3), 3)] {
            let oracle = |w: &Weighting| {
                smallest_balanced_separator(&g, w, half, g.n()).ok_or(Error::Oracle("none".into()))
            };
            let td = decomposition_from_separators(&g, oracle, k, half).unwrap();
            let width = validate_decomposition(&g, &td).unwrap();
            assert!(width <= 3 * k + 2, "width {width}");
        }
        let liar = |_: &Weighting| Ok(VertexSet::new());
        let err = decomposition_from_separators(&named::grid(4, 4), liar, 1, half).unwrap_err();
        assert!(matches!(err, Error::Oracle(_)));
    }

    #[test]
    fn decomposition_to_separator() {
        let half = Rational::new(1, 2);
        let star = named::star(5);
        let (_, td) = exact_treewidth(&star).unwrap();
        let s = separator_from_decomposition(&star, &td, &Weighting::uniform(6).unwrap(), half).unwrap();
        assert!(s.contains(0) && s.len() <= 2);
        let c6 = named::cycle(6);
        let (_, td) = exact_treewidth(&c6).unwrap();
        let w = Weighting::uniform(6).unwrap();
        let s = separator_from_decomposition(&c6, &td, &w, half).unwrap();
        assert!(s.len() <= 3 && is_balanced_separator(&c6, &w, s, half));
        let k1 = Graph::empty(1);
        let s = separator_from_decomposition(&k1, &exact_treewidth(&k1).unwrap().1, &Weighting::uniform(1).unwrap(), half)
            .unwrap();
        assert_eq!(s, VertexSet::singleton(0));
    }

    #[test]
    fn glued_along_cutsets() {
        // two K4s sharing an edge, plus a long pendant path
        let mut g = Graph::empty(30);
        for (u, v) in [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (2, 4), (3, 4), (2, 5), (3, 5), (4, 5)] {
            g.add_edge(u, v);
        }
        for v in 5..29 {
            g.add_edge(v, v + 1);
        }
        let td = decomposition_along_clique_cutsets(&g).unwrap();
        assert_eq!(validate_decomposition(&g, &td), Ok(3));
    }

    #[test]
    fn gamma_examples() {
        assert_eq!(gamma_d(&named::complete(4), 3), 3);
        assert_eq!(gamma_d(&named::cycle(6), 3), 0);
        let sub = subdivide_uniform(&named::grid(3, 3), 1).unwrap();
        assert_eq!(gamma_d(&sub.graph, 3), 0);
        assert_eq!(gamma_d(&named::grid(3, 3), 3), 4);
    }
}
