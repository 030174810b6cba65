//! Basic obstruction families, their generators and detectors.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::cliques::for_each_clique;
use crate::error::{Error, Result};
use crate::graph::{induced_subgraph, line_graph, named, subdivide_uniform, Graph, VertexSet, MAX_VERTICES};
use crate::weights::for_each_subset;

/// Largest host order for the induced wall searches (subsets are `u32`
/// masks).
pub const CLEAN_CAP: usize = 24;

/// Backtracking nodes allowed when searching for a Krausz partition.
const KRAUSZ_BUDGET: u64 = 2_000_000;

/// A generator request. Serialises as `{"kind": ..., "params": {...}}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "params", rename_all = "kebab-case")]
pub enum ObstructionKind {
    /// `K_n`.
    Complete { n: usize },
    /// `K_{t,t}`.
    CompleteBipartite { t: usize },
    /// The `t`-wall with every edge subdivided `subdivisions` times.
    Wall { t: usize, subdivisions: usize },
    /// Line graph of a subdivided `t`-wall.
    LineOfWall { t: usize, subdivisions: usize },
    /// Complete binary tree of height `h` plus a path through its leaves.
    PohoataDavies { h: usize },
    Prism { lengths: [usize; 3] },
    Pyramid { lengths: [usize; 3] },
    Theta { lengths: [usize; 3] },
}

impl ObstructionKind {
    pub fn name(&self) -> &'static str {
        match self {
            ObstructionKind::Complete { .. } => "complete",
            ObstructionKind::CompleteBipartite { .. } => "complete-bipartite",
            ObstructionKind::Wall { .. } => "wall",
            ObstructionKind::LineOfWall { .. } => "line-of-wall",
            ObstructionKind::PohoataDavies { .. } => "pohoata-davies",
            ObstructionKind::Prism { .. } => "prism",
            ObstructionKind::Pyramid { .. } => "pyramid",
            ObstructionKind::Theta { .. } => "theta",
        }
    }
}

fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidParameter(msg.into())
}

fn check_order(n: usize) -> Result<()> {
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
    }
    Ok(())
}

/// Builds the requested graph. Labelling is deterministic.
pub fn generate_obstruction(kind: &ObstructionKind) -> Result<Graph> {
    match *kind {
        ObstructionKind::Complete { n } => {
            if n == 0 {
                return Err(invalid("complete graph needs n >= 1"));
            }
            check_order(n)?;
            Ok(named::complete(n))
        }
        ObstructionKind::CompleteBipartite { t } => {
            if t == 0 {
                return Err(invalid("t must be at least 1"));
            }
            check_order(2 * t)?;
            Ok(named::complete_bipartite(t, t))
        }
        ObstructionKind::Wall { t, subdivisions } => {
            let w = wall(t)?;
            check_order(w.n() + w.edge_count() * subdivisions)?;
            Ok(subdivide_uniform(&w, subdivisions)?.graph)
        }
        ObstructionKind::LineOfWall { t, subdivisions } => line_of_wall(t, subdivisions),
        ObstructionKind::PohoataDavies { h } => pohoata_davies(h),
        ObstructionKind::Prism { lengths } => {
            if lengths.contains(&0) {
                return Err(invalid("prism paths need length at least 1"));
            }
            check_order(4 + lengths.iter().sum::<usize>())?;
            Ok(named::long_prism(lengths))
        }
        ObstructionKind::Pyramid { lengths } => {
            if lengths.contains(&0) || lengths.iter().filter(|&&l| l == 1).count() > 1 {
                return Err(invalid("pyramid paths need length at least 1, at most one of length 1"));
            }
            check_order(2 + lengths.iter().sum::<usize>())?;
            Ok(named::pyramid(lengths))
        }
        ObstructionKind::Theta { lengths } => {
            if lengths.iter().any(|&l| l < 2) {
                return Err(invalid("theta paths need length at least 2"));
            }
            check_order(lengths.iter().sum::<usize>())?;
            Ok(named::theta(lengths))
        }
    }
}

/// The `t`-wall: a `t x 2t` grid keeping the vertical edge between rows
/// `r` and `r + 1` only in columns of the same parity as `r`, with the
/// resulting pendant vertices removed. `wall(1)` is a single edge.
pub fn wall(t: usize) -> Result<Graph> {
    if t == 0 {
        return Err(invalid("t must be at least 1"));
    }
    check_order(2 * t * t)?;
    let cols = 2 * t;
    let id = |r: usize, c: usize| r * cols + c;
    let mut edges = Vec::new();
    for r in 0..t {
        for c in 0..cols - 1 {
            edges.push((id(r, c), id(r, c + 1)));
        }
        if r + 1 < t {
            for c in (r % 2..cols).step_by(2) {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    let g = Graph::from_edges(t * cols, &edges)?;
    if t == 1 {
        return Ok(g);
    }
    let keep: VertexSet = g.vertices().iter().filter(|&v| g.degree(v) != 1).collect();
    Ok(induced_subgraph(&g, keep)?.graph)
}

/// Line graph of the `t`-wall with every edge subdivided `k` times.
pub fn line_of_wall(t: usize, k: usize) -> Result<Graph> {
    let w = wall(t)?;
    check_order(w.edge_count() * (k + 1))?;
    Ok(line_graph(&subdivide_uniform(&w, k)?.graph))
}

/// Complete binary tree of height `h` in heap order (children of `i` are
/// `2i + 1` and `2i + 2`) plus the path through the leaves from left to
/// right.
pub fn pohoata_davies(h: usize) -> Result<Graph> {
    if h == 0 {
        return Err(invalid("h must be at least 1"));
    }
    if h >= 8 {
        return Err(Error::TooManyVertices { n: (1usize << (h.min(30) + 1)) - 1, max: MAX_VERTICES });
    }
    let n = (1 << (h + 1)) - 1;
    let first_leaf = (1 << h) - 1;
    let mut edges: Vec<_> = (1..n).map(|v| ((v - 1) / 2, v)).collect();
    edges.extend((first_leaf..n - 1).map(|v| (v, v + 1)));
    Graph::from_edges(n, &edges)
}

/// Maximal runs of degree-2 vertices, as seen from the branch vertices
/// (degree other than 2).
#[derive(Debug)]
struct Chains {
    branch: Vec<usize>,
    /// Keyed by `(min end, max end)`; each entry is the interior listed from
    /// the smaller end.
    between: BTreeMap<(usize, usize), Vec<Vec<usize>>>,
    /// Components that are cycles of degree-2 vertices.
    cycles: Vec<Vec<usize>>,
}

impl Chains {
    fn of(g: &Graph) -> Chains {
        let branch: Vec<usize> = g.vertices().iter().filter(|&v| g.degree(v) != 2).collect();
        let is_branch: VertexSet = branch.iter().collect();
        let mut seen = VertexSet::new();
        let mut between: BTreeMap<(usize, usize), Vec<Vec<usize>>> = BTreeMap::new();
        for &u in &branch {
            for x in g.neighbors(u) {
                if is_branch.contains(x) {
                    if u < x {
                        between.entry((u, x)).or_default().push(Vec::new());
                    }
                    continue;
                }
                if seen.contains(x) {
                    continue;
                }
                let (mut prev, mut cur) = (u, x);
                let mut interior = Vec::new();
                while !is_branch.contains(cur) {
                    interior.push(cur);
                    seen.insert(cur);
                    let next = (g.neighbors(cur) - VertexSet::singleton(prev)).min().expect("degree 2");
                    prev = cur;
                    cur = next;
                }
                if cur < u {
                    interior.reverse();
                }
                between.entry((u.min(cur), u.max(cur))).or_default().push(interior);
            }
        }
        for list in between.values_mut() {
            list.sort_by_key(|c| c.len());
        }
        let mut cycles = Vec::new();
        for v in g.vertices() - is_branch - seen {
            if seen.contains(v) {
                continue;
            }
            let mut cycle = vec![v];
            seen.insert(v);
            let mut prev = v;
            let mut cur = g.neighbors(v).min().expect("degree 2");
            while cur != v {
                cycle.push(cur);
                seen.insert(cur);
                let next = (g.neighbors(cur) - VertexSet::singleton(prev)).min().expect("degree 2");
                prev = cur;
                cur = next;
            }
            cycles.push(cycle);
        }
        cycles.sort_by_key(|c| c.len());
        Chains { branch, between, cycles }
    }

    fn lengths(&self, a: usize, b: usize) -> impl Iterator<Item = usize> + '_ {
        self.between.get(&(a.min(b), a.max(b))).into_iter().flatten().map(|c| c.len())
    }
}

/// Same count, and pairwise (after sorting) the longer side is `h`.
fn dominated(base: impl Iterator<Item = usize>, h: impl Iterator<Item = usize>) -> bool {
    let base: Vec<_> = base.collect();
    let h: Vec<_> = h.collect();
    base.len() == h.len() && base.iter().zip(&h).all(|(b, x)| b <= x)
}

/// Whether `h` is a subdivision of `base`. On success returns an injection
/// of `base`'s vertices into `h`: branch vertices go to branch vertices and
/// each degree-2 vertex of `base` goes to a vertex of the `h`-path that
/// realises its chain.
pub fn is_subdivision_of(h: &Graph, base: &Graph) -> Result<Option<Vec<usize>>> {
    if h.n() < base.n()
        || h.edge_count() + base.n() != base.edge_count() + h.n()
        || h.edge_count() < base.edge_count()
    {
        return Ok(None);
    }
    let branch_degrees = |g: &Graph| {
        let mut d: Vec<usize> = g.degree_sequence().into_iter().filter(|&d| d != 2).collect();
        d.sort_unstable();
        d
    };
    if branch_degrees(h) != branch_degrees(base) {
        return Ok(None);
    }
    let hc = Chains::of(h);
    let bc = Chains::of(base);
    if !dominated(bc.cycles.iter().map(Vec::len), hc.cycles.iter().map(Vec::len)) {
        return Ok(None);
    }

    fn assign(
        i: usize,
        h: &Graph,
        base: &Graph,
        hc: &Chains,
        bc: &Chains,
        phi: &mut Vec<usize>,
        used: &mut VertexSet,
    ) -> bool {
        if i == bc.branch.len() {
            return true;
        }
        let b = bc.branch[i];
        for x in hc.branch.iter().copied() {
            if used.contains(x) || h.degree(x) != base.degree(b) {
                continue;
            }
            phi.push(x);
            let ok = (0..=i).all(|j| dominated(bc.lengths(b, bc.branch[j]), hc.lengths(x, phi[j])));
            if ok {
                used.insert(x);
                if assign(i + 1, h, base, hc, bc, phi, used) {
                    return true;
                }
                used.remove(x);
            }
            phi.pop();
        }
        false
    }

    let mut phi = Vec::with_capacity(bc.branch.len());
    if !assign(0, h, base, &hc, &bc, &mut phi, &mut VertexSet::new()) {
        return Ok(None);
    }
    let mut map = vec![usize::MAX; base.n()];
    for (&b, &x) in bc.branch.iter().zip(&phi) {
        map[b] = x;
    }
    let image: BTreeMap<usize, usize> = bc.branch.iter().copied().zip(phi.iter().copied()).collect();
    for (&(a, b), chains) in &bc.between {
        let (xa, xb) = (image[&a], image[&b]);
        let hchains = &hc.between[&(xa.min(xb), xa.max(xb))];
        for (chain, hchain) in chains.iter().zip(hchains) {
            // Orient the h-chain to start at the image of `a`.
            let mut hchain = hchain.clone();
            if xa > xb {
                hchain.reverse();
            }
            for (&v, &y) in chain.iter().zip(&hchain) {
                map[v] = y;
            }
        }
    }
    for (cycle, hcycle) in bc.cycles.iter().zip(&hc.cycles) {
        for (&v, &y) in cycle.iter().zip(hcycle) {
            map[v] = y;
        }
    }
    debug_assert!(map.iter().all(|&y| y != usize::MAX));
    Ok(Some(map))
}

/// Edge-disjoint cliques covering `E(H)` with every vertex in at most two.
fn krausz_partition(h: &Graph) -> Result<Option<Vec<VertexSet>>> {
    struct Search<'a> {
        h: &'a Graph,
        uncovered: Vec<VertexSet>,
        count: Vec<u8>,
        chosen: Vec<VertexSet>,
        best: Option<Vec<VertexSet>>,
        nodes: u64,
    }

    impl Search<'_> {
        fn cover(&mut self, c: VertexSet, on: bool) {
            for v in c {
                if on {
                    self.uncovered[v] -= c;
                    self.count[v] += 1;
                } else {
                    self.uncovered[v] |= c - VertexSet::singleton(v);
                    self.count[v] -= 1;
                }
            }
        }

        fn run(&mut self) -> Result<()> {
            self.nodes += 1;
            if self.nodes > KRAUSZ_BUDGET {
                return Err(Error::ScaleCap { what: "Krausz partition search", size: self.h.n(), cap: KRAUSZ_BUDGET as usize });
            }
            if self.best.as_ref().is_some_and(|b| b.len() <= self.chosen.len()) {
                return Ok(());
            }
            let Some(u) = (0..self.h.n()).find(|&v| !self.uncovered[v].is_empty()) else {
                self.best = Some(self.chosen.clone());
                return Ok(());
            };
            if self.count[u] >= 2 {
                return Ok(());
            }
            let v = self.uncovered[u].min().expect("nonempty");
            if self.count[v] >= 2 {
                return Ok(());
            }
            // Extensions of {u, v} by vertices joined to all of it through
            // uncovered edges, largest first.
            let base = VertexSet::singleton(u) | VertexSet::singleton(v);
            let pool = self.uncovered[u] & self.uncovered[v];
            let pool: Vec<usize> = pool.iter().filter(|&x| self.count[x] < 2).collect();
            let mut options = Vec::new();
            extensions(&self.uncovered, &pool, base, &mut options);
            options.sort_by(|a, b| b.len().cmp(&a.len()).then(a.lex_cmp(b)));
            for c in options {
                self.cover(c, true);
                // A vertex in two cliques must have nothing left to cover.
                let dead = c.iter().any(|x| self.count[x] == 2 && !self.uncovered[x].is_empty());
                if !dead {
                    self.chosen.push(c);
                    self.run()?;
                    self.chosen.pop();
                }
                self.cover(c, false);
            }
            Ok(())
        }
    }

    fn extensions(uncovered: &[VertexSet], pool: &[usize], current: VertexSet, out: &mut Vec<VertexSet>) {
        out.push(current);
        for (i, &x) in pool.iter().enumerate() {
            if current.is_subset(&uncovered[x]) {
                let rest: Vec<usize> = pool[i + 1..].iter().copied().filter(|&y| uncovered[x].contains(y)).collect();
                extensions(uncovered, &rest, current | VertexSet::singleton(x), out);
            }
        }
    }

    let mut search = Search {
        h,
        uncovered: (0..h.n()).map(|v| h.neighbors(v)).collect(),
        count: vec![0; h.n()],
        chosen: Vec::new(),
        best: None,
        nodes: 0,
    };
    search.run()?;
    Ok(search.best)
}

/// A graph `R` with `L(R)` isomorphic to `h`, or `None` when `h` is not a
/// line graph. Uses a Krausz partition with the fewest cliques. Root
/// vertices are the cliques in order, then private end vertices for the
/// vertices of `h` lying in fewer than two cliques; vertex `i` of `h` is the
/// edge between its two ends.
pub fn recover_root_graph(h: &Graph) -> Result<Option<Graph>> {
    let Some(cliques) = krausz_partition(h)? else {
        return Ok(None);
    };
    let mut ends: Vec<Vec<usize>> = vec![Vec::new(); h.n()];
    for (i, c) in cliques.iter().enumerate() {
        for v in *c {
            ends[v].push(i);
        }
    }
    let mut next = cliques.len();
    for e in &mut ends {
        while e.len() < 2 {
            e.push(next);
            next += 1;
        }
    }
    check_order(next)?;
    let edges: Vec<(usize, usize)> = ends.iter().map(|e| (e[0], e[1])).collect();
    let root = Graph::from_edges(next, &edges)?;
    let shares = |i: usize, j: usize| ends[i].iter().any(|x| ends[j].contains(x));
    let sound = root.edge_count() == h.n()
        && (0..h.n()).all(|i| (i + 1..h.n()).all(|j| h.adjacent(i, j) == shares(i, j)));
    if !sound {
        return Err(Error::Hypothesis("Krausz partition did not reproduce the line graph".into()));
    }
    Ok(Some(root))
}

/// Which basic obstruction was found.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ObstructionFamily {
    Complete,
    CompleteBipartite,
    Wall,
    LineOfWall,
}

impl fmt::Display for ObstructionFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ObstructionFamily::Complete => "complete",
            ObstructionFamily::CompleteBipartite => "complete-bipartite",
            ObstructionFamily::Wall => "wall",
            ObstructionFamily::LineOfWall => "line-of-wall",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionWitness {
    pub family: ObstructionFamily,
    /// Vertex set inducing the obstruction.
    pub vertices: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CleanCheck {
    pub t: usize,
    pub clean: bool,
    pub witness: Option<ObstructionWitness>,
}

fn induced_clique(g: &Graph, size: usize) -> Option<VertexSet> {
    let mut found = None;
    for_each_clique(g, g.vertices(), size, |c| {
        if c.len() == size {
            found = Some(c);
            false
        } else {
            true
        }
    });
    found
}

/// Lexicographically first `A ∪ B` with `A`, `B` stable `t`-sets complete
/// to each other, `min A < min B`.
fn induced_biclique(g: &Graph, t: usize) -> Option<VertexSet> {
    let verts = g.vertices().to_vec();
    let mut best: Option<VertexSet> = None;
    for_each_subset(&verts, t, &mut |a| {
        if !g.is_stable(a) {
            return false;
        }
        let common = a.iter().fold(g.vertices(), |acc, v| acc & g.neighbors(v));
        let common = common - VertexSet::full(a.min().unwrap_or(0) + 1);
        let pool = common.to_vec();
        for_each_subset(&pool, t, &mut |b| {
            if g.is_stable(b) {
                let s = a | b;
                if best.is_none_or(|x| s.lex_cmp(&x).is_lt()) {
                    best = Some(s);
                }
            }
            false
        });
        false
    });
    best
}

struct MaskGraph {
    adj: Vec<u32>,
}

impl MaskGraph {
    fn new(g: &Graph) -> Self {
        MaskGraph {
            adj: (0..g.n()).map(|v| g.neighbors(v).iter().fold(0u32, |m, u| m | 1 << u)).collect(),
        }
    }

    fn connected(&self, mask: u32) -> bool {
        let mut reached = mask & mask.wrapping_neg();
        loop {
            let mut grown = reached;
            let mut r = reached;
            while r != 0 {
                let v = r.trailing_zeros() as usize;
                r &= r - 1;
                grown |= self.adj[v] & mask;
            }
            if grown == reached {
                return reached == mask;
            }
            reached = grown;
        }
    }
}

fn mask_to_set(mask: u32) -> VertexSet {
    (0..32).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Smallest (then lexicographically first) connected induced subgraph with
/// the given degree bounds and cyclomatic excess passing `accept`.
fn search_subsets(
    g: &Graph,
    min_order: usize,
    degrees: (u32, u32),
    exact_degree: Option<(u32, usize)>,
    excess: isize,
    accept: &mut dyn FnMut(&Graph) -> Result<bool>,
) -> Result<Option<VertexSet>> {
    let n = g.n();
    if min_order > n {
        return Ok(None);
    }
    if n > CLEAN_CAP {
        return Err(Error::ScaleCap { what: "induced obstruction search", size: n, cap: CLEAN_CAP });
    }
    let mg = MaskGraph::new(g);
    for size in min_order.max(1)..=n {
        let mut best: Option<VertexSet> = None;
        let mut mask: u32 = (1u32 << size) - 1;
        let limit: u64 = 1u64 << n;
        while (mask as u64) < limit {
            let mut ok = true;
            let mut edges2 = 0u32;
            let mut hits = 0usize;
            let mut m = mask;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                let d = (mg.adj[v] & mask).count_ones();
                if d < degrees.0 || d > degrees.1 {
                    ok = false;
                    break;
                }
                if exact_degree.is_some_and(|(k, _)| d == k) {
                    hits += 1;
                }
                edges2 += d;
            }
            ok = ok
                && exact_degree.is_none_or(|(_, count)| hits == count)
                && (edges2 / 2) as isize - size as isize == excess
                && mg.connected(mask);
            if ok {
                let s = mask_to_set(mask);
                if best.is_none_or(|b| s.lex_cmp(&b).is_lt()) && accept(&induced_subgraph(g, s)?.graph)? {
                    best = Some(s);
                }
            }
            // Next mask with the same popcount.
            let c = mask & mask.wrapping_neg();
            let r = mask as u64 + c as u64;
            if r >= limit {
                break;
            }
            let r = r as u32;
            mask = (((r ^ mask) >> 2) / c) | r;
        }
        if best.is_some() {
            return Ok(best);
        }
    }
    Ok(None)
}

/// Whether `g` contains none of `K_{t+1}`, `K_{t,t}`, a subdivided
/// `t`-wall, or the line graph of one, as an induced subgraph. When it
/// does, the witness is the first family hit in that order, with the
/// smallest vertex set of that family.
pub fn is_t_clean(g: &Graph, t: usize) -> Result<CleanCheck> {
    if t == 0 {
        return Err(invalid("t must be at least 1"));
    }
    let dirty = |family, vertices| Ok(CleanCheck { t, clean: false, witness: Some(ObstructionWitness { family, vertices }) });
    if let Some(c) = induced_clique(g, t + 1) {
        return dirty(ObstructionFamily::Complete, c);
    }
    if let Some(s) = induced_biclique(g, t) {
        return dirty(ObstructionFamily::CompleteBipartite, s);
    }
    if t == 1 {
        // K_2 would have been found; the line graph of a subdivided edge
        // includes K_1.
        return match g.vertices().min() {
            Some(v) => dirty(ObstructionFamily::LineOfWall, VertexSet::singleton(v)),
            None => Ok(CleanCheck { t, clean: true, witness: None }),
        };
    }
    let w = wall(t)?;
    let k3 = w.degree_sequence().iter().filter(|&&d| d == 3).count();
    let excess = w.edge_count() as isize - w.n() as isize;
    let found = search_subsets(g, w.n(), (2, 3), Some((3, k3)), excess, &mut |sub| {
        Ok(is_subdivision_of(sub, &w)?.is_some())
    })?;
    if let Some(s) = found {
        return dirty(ObstructionFamily::Wall, s);
    }
    let line_excess = 2 * k3 as isize - excess;
    let found = search_subsets(g, w.edge_count(), (2, 4), None, line_excess, &mut |sub| {
        Ok(match recover_root_graph(sub)? {
            Some(root) => is_subdivision_of(&root, &w)?.is_some(),
            None => false,
        })
    })?;
    if let Some(s) = found {
        return dirty(ObstructionFamily::LineOfWall, s);
    }
    Ok(CleanCheck { t, clean: true, witness: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::are_isomorphic;
    use crate::treewidth::exact_treewidth;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    #[test]
    fn wall_sizes_and_treewidth() {
        assert_eq!(wall(1).unwrap().edge_count(), 1);
        let w2 = wall(2).unwrap();
        assert!(are_isomorphic(&w2, &named::cycle(6)).unwrap().is_some());
        let w3 = wall(3).unwrap();
        assert_eq!((w3.n(), w3.edge_count()), (16, 19));
        assert_eq!(exact_treewidth(&w2).unwrap().0, 2);
        assert_eq!(exact_treewidth(&w3).unwrap().0, 3);
    }

    #[test]
    fn pohoata_davies_small() {
        let pd1 = pohoata_davies(1).unwrap();
        assert!(are_isomorphic(&pd1, &named::complete(3)).unwrap().is_some());
        let pd2 = pohoata_davies(2).unwrap();
        assert_eq!((pd2.n(), pd2.edge_count()), (7, 9));
        assert!(pohoata_davies(0).is_err());
    }

    #[test]
    fn generate_validates() {
        assert_eq!(generate_obstruction(&ObstructionKind::Complete { n: 5 }).unwrap().edge_count(), 10);
        assert!(generate_obstruction(&ObstructionKind::Pyramid { lengths: [1, 1, 2] }).is_err());
        assert!(generate_obstruction(&ObstructionKind::Theta { lengths: [1, 2, 2] }).is_err());
        let json = serde_json::to_string(&ObstructionKind::Wall { t: 3, subdivisions: 0 }).unwrap();
        assert_eq!(json, r#"{"kind":"wall","params":{"t":3,"subdivisions":0}}"#);
        let lw = generate_obstruction(&ObstructionKind::LineOfWall { t: 2, subdivisions: 1 }).unwrap();
        assert!(are_isomorphic(&lw, &named::cycle(12)).unwrap().is_some());
    }

    #[test]
    fn subdivision_examples() {
        let k3 = named::complete(3);
        assert!(is_subdivision_of(&named::cycle(6), &k3).unwrap().is_some());
        let k4 = named::complete(4);
        let s = subdivide_uniform(&k4, 1).unwrap().graph;
        let map = is_subdivision_of(&s, &k4).unwrap().unwrap();
        assert_eq!(map.iter().collect::<VertexSet>().len(), 4);
        assert!(is_subdivision_of(&k4, &named::star(3)).unwrap().is_none());
        assert!(is_subdivision_of(&k4, &k4).unwrap().is_some());
        let w3 = wall(3).unwrap();
        let sub = subdivide_uniform(&w3, 2).unwrap().graph;
        let shuffled = sub.permuted(&(0..sub.n()).rev().collect::<Vec<_>>());
        let map = is_subdivision_of(&shuffled, &w3).unwrap().unwrap();
        assert_eq!(map.iter().collect::<VertexSet>().len(), w3.n());
        assert!(is_subdivision_of(&named::theta([2, 3, 3]), &w3).unwrap().is_none());
        assert!(is_subdivision_of(&named::theta([2, 3, 4]), &named::theta([2, 2, 3])).unwrap().is_some());
        assert!(is_subdivision_of(&named::theta([2, 2, 4]), &named::theta([2, 3, 3])).unwrap().is_none());
    }

    #[test]
    fn roots() {
        let r = recover_root_graph(&named::complete(3)).unwrap().unwrap();
        assert!(are_isomorphic(&r, &named::star(3)).unwrap().is_some());
        let r = recover_root_graph(&named::path(2)).unwrap().unwrap();
        assert!(are_isomorphic(&r, &named::path(3)).unwrap().is_some());
        assert!(recover_root_graph(&named::star(3)).unwrap().is_none());
        let lw = line_of_wall(3, 1).unwrap();
        let r = recover_root_graph(&lw).unwrap().unwrap();
        assert!(are_isomorphic(&line_graph(&r), &lw).unwrap().is_some());
        assert!(is_subdivision_of(&r, &wall(3).unwrap()).unwrap().is_some());
    }

    #[test]
    fn cleanness() {
        let k5 = is_t_clean(&named::complete(5), 3).unwrap();
        assert!(!k5.clean);
        assert_eq!(k5.witness.unwrap().vertices, set(&[0, 1, 2, 3]));
        let c4 = is_t_clean(&named::cycle(4), 2).unwrap();
        assert_eq!(c4.witness.unwrap().family, ObstructionFamily::CompleteBipartite);
        let c6 = is_t_clean(&named::cycle(6), 2).unwrap();
        assert_eq!(c6.witness.unwrap().family, ObstructionFamily::Wall);
        assert!(is_t_clean(&named::cycle(5), 2).unwrap().clean);
        assert!(is_t_clean(&named::prism(), 3).unwrap().clean);
        let w3 = wall(3).unwrap();
        let check = is_t_clean(&w3, 3).unwrap();
        assert_eq!(check.witness.unwrap(), ObstructionWitness { family: ObstructionFamily::Wall, vertices: w3.vertices() });
        assert!(is_t_clean(&Graph::empty(0), 1).unwrap().clean);
        assert!(!is_t_clean(&Graph::empty(1), 1).unwrap().clean);
    }
}
